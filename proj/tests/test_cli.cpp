#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "wittkit/io.hpp"

#include "helpers.hpp"

using namespace wittkit;
using th::mat;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

const std::filesystem::path& work_dir() {
  static const std::filesystem::path dir = [] {
    std::string tmpl =
        (std::filesystem::temp_directory_path() / "wittkit_cli_XXXXXX").string();
    REQUIRE(mkdtemp(tmpl.data()) != nullptr);
    return std::filesystem::path(tmpl);
  }();
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string fixture(const std::string& name, const std::string& content) {
  auto path = work_dir() / name;
  std::ofstream f(path);
  f << content;
  return path.string();
}

// Runs the CLI through the shell; `env` is prepended verbatim, so callers can
// set per-invocation environment variables.
RunResult run_cli(const std::string& args, const std::string& env = "") {
  auto outfile = work_dir() / "stdout.txt";
  auto errfile = work_dir() / "stderr.txt";
  std::string cmd = env + (env.empty() ? "" : " ") + "'" + WITTKIT_CLI_PATH +
                    "' " + args + " >'" + outfile.string() + "' 2>'" +
                    errfile.string() + "'";
  int status = std::system(cmd.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return RunResult{code, slurp(outfile), slurp(errfile)};
}

std::string sphere_ring_file() {
  static const std::string path =
      fixture("sphere.ring", "vars: x y z\nrel: x^2 + y^2 + z^2 - 1\n");
  return path;
}

std::string section_ring_file() {
  static const std::string path = fixture(
      "section.ring", "vars: a b c p q r\nrel: a*p + b*q + c*r - 1\n");
  return path;
}

std::string psi4_file() {
  static const std::string path = fixture("psi4.mat", "0, 1, 0, 0\n"
                                                      "-1, 0, 0, 0\n"
                                                      "0, 0, 0, 1\n"
                                                      "0, 0, -1, 0\n");
  return path;
}

// Strips "row\t" tags from tsv output, leaving a parseable matrix file.
std::string rows_only(const std::string& tsv) {
  std::istringstream in(tsv);
  std::string line, out;
  while (std::getline(in, line)) {
    if (line.rfind("row\t", 0) == 0) out += line.substr(4) + "\n";
  }
  return out;
}

} // namespace

TEST_CASE("cli: unimodular and section checks") {
  std::string row = fixture("xyz.row", "v: x, y, z\n");
  auto r = run_cli("unimodular " + sphere_ring_file() + " " + row);
  CHECK(r.code == 0);
  CHECK(r.out == "ok\nw: x, y, z\n");
  CHECK(r.err.find("elapsed_ms=") != std::string::npos);

  auto tsv = run_cli("--tsv unimodular " + sphere_ring_file() + " " + row);
  CHECK(tsv.code == 0);
  CHECK(tsv.out == "status\tok\nw\tx, y, z\n");

  std::string partial = fixture("xy.row", "v: x, y\n");
  auto rej = run_cli("unimodular " + sphere_ring_file() + " " + partial);
  CHECK(rej.code == 2);
  CHECK(rej.out == "rejected\n");

  std::string with_w = fixture("abc.row", "v: a, b, c\nw: p, q, r\n");
  CHECK(run_cli("section " + section_ring_file() + " " + with_w).code == 0);
  std::string bad_w = fixture("abc_bad.row", "v: a, b, c\nw: p, q, q\n");
  auto bad = run_cli("section " + section_ring_file() + " " + bad_w);
  CHECK(bad.code == 2);
  CHECK(bad.out == "rejected\n");
  CHECK(run_cli("section " + section_ring_file() + " " +
                fixture("abc_now.row", "v: a, b, c\n"))
            .code == 1);
}

TEST_CASE("cli: polynomial layer") {
  std::string freering = fixture("free3.ring", "vars: x y z\n");
  std::string polys = fixture("gens.txt", "x^2 + y^2 + z^2 - 1\nx\n");
  auto gb = run_cli("gb " + freering + " " + polys);
  CHECK(gb.code == 0);
  CHECK(gb.out == "gb: x\ngb: y^2 + z^2 - 1\n");

  std::string nfin = fixture("nf.txt", "x^2 + y^2 + z^2\nx*y\n");
  auto nf = run_cli("nf " + sphere_ring_file() + " " + nfin);
  CHECK(nf.code == 0);
  CHECK(nf.out == "nf: 1\nnf: x*y\n");

  std::string xyz = fixture("xyz.txt", "x\ny\nz\n");
  auto mem = run_cli("member " + sphere_ring_file() + " " + xyz);
  CHECK(mem.code == 0);
  CHECK(mem.out == "ok\nc: x, y, z\n");
  auto memt = run_cli("member " + sphere_ring_file() + " " + xyz + " z^2");
  CHECK(memt.code == 0);

  std::string free2 = fixture("free2.ring", "vars: x y\n");
  std::string xy = fixture("xy.txt", "x\ny\n");
  auto rej = run_cli("member " + free2 + " " + xy);
  CHECK(rej.code == 2);
  CHECK(rej.out == "rejected\n");
}

TEST_CASE("cli: pfaffian and determinant") {
  auto pf = run_cli("pfaffian " + sphere_ring_file() + " " + psi4_file());
  CHECK(pf.code == 0);
  CHECK(pf.out == "pfaffian: 1\n");

  auto det = run_cli("det " + sphere_ring_file() + " " + psi4_file());
  CHECK(det.code == 0);
  CHECK(det.out == "det: 1\n");

  std::string notalt = fixture("notalt.mat", "1, 0\n0, 1\n");
  CHECK(run_cli("pfaffian " + sphere_ring_file() + " " + notalt).code == 1);
}

TEST_CASE("cli: constructions emit matrices") {
  std::string vw2 = fixture("vw2.row", "v: a, b\nw: p, q\n");
  auto s1 = run_cli("--tsv suslin " + section_ring_file() + " " + vw2);
  CHECK(s1.code == 0);
  CHECK(s1.out == "row\ta, b\nrow\t-q, p\n");

  std::string vw3 = fixture("vw3.row", "v: a, b, c\nw: p, q, r\n");
  auto comp = run_cli("--tsv complete3 " + section_ring_file() + " " + vw3);
  CHECK(comp.code == 0);
  CHECK(comp.out.rfind("row\ta, b, c^2\n", 0) == 0);
  std::string compmat = fixture("comp.mat", rows_only(comp.out));
  auto compdet = run_cli("det " + section_ring_file() + " " + compmat);
  CHECK(compdet.out == "det: 1\n");

  std::string pi1 = fixture("pi1.row", "v: 1, 0, 0\nw: 1, 0, 0\n");
  auto vas = run_cli("--tsv vaserstein " + sphere_ring_file() + " " + pi1);
  CHECK(vas.code == 0);
  CHECK(vas.out == "row\t0, 1, 0, 0\n"
                   "row\t-1, 0, 0, 0\n"
                   "row\t0, 0, 0, 1\n"
                   "row\t0, 0, -1, 0\n"
                   "pfaffian\t1\n");

  std::string sph = fixture("sph.row", "v: x, y, z\nw: x, y, z\n");
  auto vsph = run_cli("vaserstein " + sphere_ring_file() + " " + sph);
  CHECK(vsph.code == 0);
  CHECK(vsph.out.find("pfaffian: 1\n") != std::string::npos);
}

TEST_CASE("cli: congruence and witt verifiers") {
  std::string psi2 = fixture("psi2.mat", "0, 1\n-1, 0\n");
  std::string shear = fixture("shear.mat", "1, x\n0, 1\n");
  auto ok = run_cli("verify-congruence " + sphere_ring_file() + " " + psi2 +
                    " " + psi2 + " " + shear);
  CHECK(ok.code == 0);
  CHECK(ok.out == "ok\n");
  std::string stretch = fixture("stretch.mat", "1, 0\n0, 2\n");
  auto rej = run_cli("verify-congruence " + sphere_ring_file() + " " + psi2 +
                     " " + psi2 + " " + stretch);
  CHECK(rej.code == 2);
  CHECK(rej.out == "rejected\n");

  // E 1 2 is a long-root transvection: it fixes the standard form
  std::string word = fixture("good.word", "rank: 8\nE 1 2 x\n");
  auto witt = run_cli("verify-witt " + sphere_ring_file() + " " + psi4_file() +
                      " " + psi4_file() + " " + word);
  CHECK(witt.code == 0);
  CHECK(witt.out == "ok\n");

  // E 1 3 shears the form: same word plus one bad generator is rejected
  std::string corrupted = fixture("bad.word", "rank: 8\nE 1 2 x\nE 1 3 1\n");
  auto cwitt = run_cli("verify-witt " + sphere_ring_file() + " " + psi4_file() +
                       " " + psi4_file() + " " + corrupted);
  CHECK(cwitt.code == 2);
  CHECK(cwitt.out == "rejected\n");

  // a word whose rank cannot be rank(M) + rank(N) + 2l is a usage error
  std::string odd = fixture("odd.word", "rank: 9\nE 1 2 x\n");
  auto oddr = run_cli("verify-witt " + sphere_ring_file() + " " + psi4_file() +
                      " " + psi4_file() + " " + odd);
  CHECK(oddr.code == 1);
  CHECK(oddr.err.find("witness rank must be rank(M) + rank(N) + 2l, got 9") !=
        std::string::npos);
}

TEST_CASE("cli: wsl and transitivity verifiers") {
  std::string empty8 = fixture("empty8.word", "rank: 8\n");
  std::string id4 = fixture("id4.mat", "1, 0, 0, 0\n0, 1, 0, 0\n0, 0, 1, 0\n0, 0, 0, 1\n");
  auto ok = run_cli("verify-wsl " + sphere_ring_file() + " " + psi4_file() +
                    " " + psi4_file() + " " + empty8 + " " + id4);
  CHECK(ok.code == 0);
  CHECK(ok.out == "ok\n");

  std::string shear4 =
      fixture("shear4.mat", "1, 0, 1, 0\n0, 1, 0, 0\n0, 0, 1, 0\n0, 0, 0, 1\n");
  auto rej = run_cli("verify-wsl " + sphere_ring_file() + " " + psi4_file() +
                     " " + psi4_file() + " " + empty8 + " " + shear4);
  CHECK(rej.code == 2);

  std::string pi14 = fixture("pi14.row", "v: 1, 0, 0, 0\nw: 1, 0, 0, 0\n");
  auto trans = run_cli("verify-transitivity " + sphere_ring_file() + " " +
                       pi14 + " " + psi4_file() + " " + id4);
  CHECK(trans.code == 0);
  CHECK(trans.out == "ok\n");
  std::string pi24 = fixture("pi24.row", "v: 0, 1, 0, 0\nw: 0, 1, 0, 0\n");
  auto tr = run_cli("verify-transitivity " + sphere_ring_file() + " " + pi24 +
                    " " + psi4_file() + " " + id4);
  CHECK(tr.code == 2);
  CHECK(tr.out == "rejected\n");
}

TEST_CASE("cli: homomorphisms") {
  std::string s5 = fixture(
      "s5.ring", "vars: x1 x2 x3 y1 y2 y3\nrel: x1*y1 + x2*y2 + x3*y3 - 1\n");
  std::string hom = fixture("round.hom",
                            "x1: x\nx2: y\nx3: z\ny1: x\ny2: y\ny3: z\n");
  std::string input = fixture("homin.txt", "x1*y1 + x2*y2 + x3*y3\nx1 + y2\n");
  auto r = run_cli("apply-hom " + s5 + " " + sphere_ring_file() + " " + hom +
                   " " + input);
  CHECK(r.code == 0);
  CHECK(r.out == "image: 1\nimage: x + y\n");

  std::string m = fixture("homm.mat", "x1, x2\nx3, y1\n");
  auto pm = run_cli("--tsv apply-hom " + s5 + " " + sphere_ring_file() + " " +
                    hom + " " + m + " --matrix");
  CHECK(pm.code == 0);
  CHECK(pm.out == "row\tx, y\nrow\tz, x\n");
}

TEST_CASE("cli: orbit oracle") {
  auto f2 = run_cli("orbit --p 2 --n 4");
  CHECK(f2.code == 0);
  CHECK(f2.out == "orbits=1 sizes=15\n");

  auto reps = run_cli("--tsv orbit --p 2 --n 4 --representatives");
  CHECK(reps.code == 0);
  CHECK(reps.out == "orbit\torbits=1 sizes=15\nrep\t0,0,0,1\n");

  auto f3 = run_cli("orbit --p 3 --n 4 --generators SE");
  CHECK(f3.out == "orbits=1 sizes=80\n");

  auto e = run_cli("orbit --p 2 --n 3 --generators E");
  CHECK(e.code == 0);
  CHECK(e.out == "orbits=1 sizes=7\n");

  CHECK(run_cli("orbit --p 11 --n 4").code == 1);
}

TEST_CASE("cli: integer SL factorization round-trips") {
  std::string m = fixture("slz.mat", "2, 3\n1, 2\n");
  auto r = run_cli("factor-slz " + m);
  CHECK(r.code == 0);
  CHECK(r.out.rfind("rank: 2\n", 0) == 0);

  // the human output is itself a parseable word file
  auto ring = th::free_ring(Field::rationals(), {"t"});
  std::istringstream in(r.out);
  ElementaryProduct word = parse_word(in, ring, "cli-output");
  CHECK(word.evaluate() == mat(ring, {{"2", "3"}, {"1", "2"}}));

  std::string notsl = fixture("notsl.mat", "2, 0\n0, 1\n");
  CHECK(run_cli("factor-slz " + notsl).code == 1);
}

TEST_CASE("cli: field override, degree cap, diagnostics") {
  std::string freet = fixture("freet.ring", "vars: t\n");
  std::string tpoly = fixture("tpoly.txt", "t^2 + 6*t\n");
  auto f5 = run_cli("--field Fp:5 nf " + freet + " " + tpoly);
  CHECK(f5.code == 0);
  CHECK(f5.out == "nf: t^2 + t\n");
  auto badf = run_cli("--field R7 nf " + freet + " " + tpoly);
  CHECK(badf.code == 1);
  CHECK(badf.err.find("--field must be Q or Fp:<p>") != std::string::npos);

  auto cap = run_cli("nf " + freet + " " + tpoly, "WITTKIT_MAX_DEGREE=abc");
  CHECK(cap.code == 1);
  CHECK(cap.err.find("error: WITTKIT_MAX_DEGREE must be a positive integer, "
                     "got \"abc\"") != std::string::npos);
  auto zero = run_cli("nf " + freet + " " + tpoly, "WITTKIT_MAX_DEGREE=0");
  CHECK(zero.code == 1);
  std::string quartic = fixture("quartic.txt", "t^4\n");
  auto capped = run_cli("nf " + freet + " " + quartic, "WITTKIT_MAX_DEGREE=3");
  CHECK(capped.code == 1);
  auto roomy = run_cli("nf " + freet + " " + quartic, "WITTKIT_MAX_DEGREE=8");
  CHECK(roomy.code == 0);
  CHECK(roomy.out == "nf: t^4\n");

  std::string broken = fixture("broken.txt", "t +\n");
  auto parse = run_cli("nf " + freet + " " + broken);
  CHECK(parse.code == 1);
  CHECK(parse.err.rfind(broken + ":1:", 0) == 0);

  auto missing = run_cli("nf " + freet + " " + (work_dir() / "nope.txt").string());
  CHECK(missing.code == 1);
  CHECK(missing.err.find("error: cannot open") != std::string::npos);

  CHECK(run_cli("").code == 1);
  CHECK(run_cli("--help").code == 0);
}
