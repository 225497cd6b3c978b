// Batch front end: every construction and verifier as a subcommand over the
// text formats.  Exit codes: 0 = ok, 2 = witness/property rejected,
// 1 = malformed input or internal error.  Output is deterministic for fixed
// inputs; timing goes to stderr so stdout stays byte-stable.
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "wittkit/config.hpp"
#include "wittkit/errors.hpp"
#include "wittkit/io.hpp"
#include "wittkit/matrix.hpp"
#include "wittkit/ring.hpp"
#include "wittkit/symbols.hpp"
#include "wittkit/umrows.hpp"
#include "wittkit/witt.hpp"

namespace {

using namespace wittkit;

// Line-oriented emitter.  TSV mode prints `tag<TAB>payload`; human mode
// prints `tag: payload` for labeled lines and the bare payload for lines
// that are their own format (status, orbit summaries, word generators).
struct Out {
  bool tsv = false;

  void labeled(const std::string& tag, const std::string& payload) const {
    if (tsv)
      std::cout << tag << '\t' << payload << '\n';
    else
      std::cout << tag << ": " << payload << '\n';
  }
  void bare(const std::string& tag, const std::string& payload) const {
    if (tsv)
      std::cout << tag << '\t' << payload << '\n';
    else
      std::cout << payload << '\n';
  }
  void status(const char* s) const { bare("status", s); }
};

std::string join(const std::vector<RingElement>& xs, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i].to_string();
  }
  return out;
}

void emit_matrix(const Out& out, const MatrixOverRing& m) {
  if (out.tsv) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      out.labeled("row", join(m.row(i)));
    return;
  }
  // human mode: pad columns so entries line up
  std::vector<std::size_t> width(m.cols(), 0);
  std::vector<std::vector<std::string>> cells(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells[i].push_back(m.at(i, j).to_string());
      width[j] = std::max(width[j], cells[i][j].size());
    }
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::string line;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::string cell = cells[i][j];
      if (j + 1 < m.cols()) {
        cell += ",";
        cell.append(width[j] + 1 - cells[i][j].size(), ' ');
      }
      line += cell;
    }
    std::cout << line << '\n';
  }
}

std::ifstream open_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open " + path);
  return f;
}

RingPtr load_ring(const std::string& path, const std::optional<Field>& field) {
  auto f = open_file(path);
  return parse_ring(f, path, field);
}

MatrixOverRing load_matrix(const std::string& path, const RingPtr& ring) {
  auto f = open_file(path);
  return parse_matrix(f, ring, path);
}

RowFileData load_row(const std::string& path, const RingPtr& ring) {
  auto f = open_file(path);
  return parse_row_file(f, ring, path);
}

ElementaryProduct load_word(const std::string& path, const RingPtr& ring) {
  auto f = open_file(path);
  return parse_word(f, ring, path);
}

std::vector<Polynomial> load_polys(const std::string& path, const ContextPtr& ctx) {
  auto f = open_file(path);
  return parse_poly_lines(f, ctx, path);
}

Field field_from_flag(const std::string& s) {
  if (s == "Q") return Field::rationals();
  if (s.rfind("Fp:", 0) == 0) {
    const std::string digits = s.substr(3);
    if (!digits.empty() &&
        digits.find_first_not_of("0123456789") == std::string::npos)
      return Field::prime(static_cast<std::uint32_t>(std::stoul(digits)));
  }
  throw Error("--field must be Q or Fp:<p>");
}

// Derives the stabilization level from rank(word) = rank(M) + rank(N) + 2l.
WittWitness witness_for(const WittRepresentative& m, const WittRepresentative& n,
                        ElementaryProduct word) {
  const std::size_t base = m.rank() + n.rank();
  if (word.rank() < base || (word.rank() - base) % 2 != 0)
    throw Error("witness rank must be rank(M) + rank(N) + 2l, got " +
                std::to_string(word.rank()));
  return WittWitness{(word.rank() - base) / 2, std::move(word)};
}

UnimodularRow row_with_certificate(const RingPtr& ring, const RowFileData& data) {
  if (data.w) return UnimodularRow(ring, data.v, *data.w);
  auto checked = check_unimodular(ring, data.v);
  if (!checked) throw Error("row is not unimodular over the given ring");
  return *checked;
}

} // namespace

int main(int argc, char** argv) {
  using namespace wittkit;

  if (const char* env = std::getenv("WITTKIT_MAX_DEGREE")) {
    const std::string text = env;
    const bool digits_only =
        !text.empty() && text.find_first_not_of("0123456789") == std::string::npos;
    unsigned long long cap = 0;
    if (digits_only) {
      try {
        cap = std::stoull(text);
      } catch (const std::exception&) {
        cap = 0;
      }
    }
    if (!digits_only || cap == 0) {
      std::cerr << "error: WITTKIT_MAX_DEGREE must be a positive integer, got \""
                << text << "\"\n";
      return 1;
    }
    set_max_degree(cap);
  }

  CLI::App app{"exact unimodular-row, Suslin-matrix and Witt-group toolkit"};
  app.require_subcommand(1);

  Out out;
  std::optional<Field> field_override;
  std::string field_flag;
  app.add_flag("--tsv", out.tsv, "machine-readable tag<TAB>payload output");
  app.add_option("--field", field_flag,
                 "coefficient field override for all ring files: Q or Fp:<p>");

  std::function<int()> run;

  // ---- polynomial layer ----
  struct {
    std::string ring, polys;
  } gb;
  auto* gb_cmd = app.add_subcommand(
      "gb", "reduced Groebner basis of the ring relations plus given polynomials");
  gb_cmd->add_option("ring", gb.ring, "ring presentation file")->required();
  gb_cmd->add_option("polys", gb.polys, "extra generators, one polynomial per line");
  gb_cmd->callback([&] {
    run = [&]() {
      auto ring = load_ring(gb.ring, field_override);
      std::vector<Polynomial> gens = ring->relations();
      if (!gb.polys.empty()) {
        auto ctx = ring->context();
        for (auto& p : load_polys(gb.polys, ctx)) gens.push_back(std::move(p));
      }
      for (const auto& g : groebner_basis(gens)) out.labeled("gb", g.to_string());
      return 0;
    };
  });

  struct {
    std::string ring, polys;
  } nf;
  auto* nf_cmd =
      app.add_subcommand("nf", "normal form of each polynomial in the quotient ring");
  nf_cmd->add_option("ring", nf.ring, "ring presentation file")->required();
  nf_cmd->add_option("polys", nf.polys, "polynomials, one per line")->required();
  nf_cmd->callback([&] {
    run = [&]() {
      auto ring = load_ring(nf.ring, field_override);
      auto ctx = ring->context();
      for (const auto& p : load_polys(nf.polys, ctx))
        out.labeled("nf", RingElement(ring, p).to_string());
      return 0;
    };
  });

  struct {
    std::string ring, gens, target = "1";
  } member;
  auto* member_cmd = app.add_subcommand(
      "member", "ideal membership with cofactor certificate (default target 1)");
  member_cmd->add_option("ring", member.ring, "ring presentation file")->required();
  member_cmd->add_option("gens", member.gens, "ideal generators, one per line")
      ->required();
  member_cmd->add_option("target", member.target, "target polynomial (default 1)");
  member_cmd->callback([&] {
    run = [&]() {
      auto ring = load_ring(member.ring, field_override);
      auto ctx = ring->context();
      std::vector<RingElement> gens;
      for (const auto& p : load_polys(member.gens, ctx))
        gens.emplace_back(ring, p);
      std::istringstream ts(member.target);
      auto tp = parse_poly_lines(ts, ctx, "<target>");
      if (tp.size() != 1) throw Error("target must be a single polynomial");
      auto cof = ideal_membership_with_cofactors(RingElement(ring, tp[0]), gens);
      if (!cof) {
        out.status("rejected");
        return 2;
      }
      out.status("ok");
      out.labeled("c", join(*cof));
      return 0;
    };
  });

  // ---- rows ----
  struct {
    std::string ring, row;
  } unimod;
  auto* unimod_cmd = app.add_subcommand(
      "unimodular", "check that a row generates the unit ideal; print cofactors");
  unimod_cmd->add_option("ring", unimod.ring, "ring presentation file")->required();
  unimod_cmd->add_option("row", unimod.row, "row file with a v: line")->required();
  unimod_cmd->callback([&] {
    run = [&]() {
      auto ring = load_ring(unimod.ring, field_override);
      auto data = load_row(unimod.row, ring);
      auto checked = check_unimodular(ring, data.v);
      if (!checked) {
        out.status("rejected");
        return 2;
      }
      out.status("ok");
      out.labeled("w", join(checked->cofactors()));
      return 0;
    };
  });

  struct {
    std::string ring, row;
  } section;
  auto* section_cmd = app.add_subcommand(
      "section", "verify that the w: line of a row file is a section of v:");
  section_cmd->add_option("ring", section.ring, "ring presentation file")->required();
  section_cmd->add_option("row", section.row, "row file with v: and w: lines")
      ->required();
  section_cmd->callback([&] {
    run = [&]() {
      auto ring = load_ring(section.ring, field_override);
      auto data = load_row(section.row, ring);
      if (!data.w) throw Error(section.row + ": missing w: line");
      try {
        RowWithSection rs(ring, data.v, *data.w);
      } catch (const IncompatibleError&) {
        throw;
      } catch (const Error&) {
        out.status("rejected");
        return 2;
      }
      out.status("ok");
      return 0;
    };
  });

  // ---- matrix layer ----
  struct {
    std::string ring, matrix;
  } pf;
  auto* pf_cmd = app.add_subcommand("pfaffian", "Pfaffian of an alternating matrix");
  pf_cmd->add_option("ring", pf.ring, "ring presentation file")->required();
  pf_cmd->add_option("matrix", pf.matrix, "matrix file")->required();
  pf_cmd->callback([&] {
    run = [&]() {
      auto ring = load_ring(pf.ring, field_override);
      AlternatingMatrix alt(load_matrix(pf.matrix, ring));
      out.labeled("pfaffian", pfaffian(alt).to_string());
      return 0;
    };
  });

  struct {
    std::string ring, matrix;
  } det;
  auto* det_cmd = app.add_subcommand("det", "exact determinant over the quotient ring");
  det_cmd->add_option("ring", det.ring, "ring presentation file")->required();
  det_cmd->add_option("matrix", det.matrix, "matrix file")->required();
  det_cmd->callback([&] {
    run = [&]() {
      auto ring = load_ring(det.ring, field_override);
      out.labeled("det", load_matrix(det.matrix, ring).det().to_string());
      return 0;
    };
  });

  // ---- constructions ----
  struct {
    std::string ring, row;
  } suslin;
  auto* suslin_cmd = app.add_subcommand(
      "suslin", "Suslin matrix S_r(v, w) from the v: and w: lines (r = length - 1)");
  suslin_cmd->add_option("ring", suslin.ring, "ring presentation file")->required();
  suslin_cmd->add_option("row", suslin.row, "row file with v: and w: lines")
      ->required();
  suslin_cmd->callback([&] {
    run = [&]() {
      auto ring = load_ring(suslin.ring, field_override);
      auto data = load_row(suslin.row, ring);
      if (!data.w) throw Error(suslin.row + ": missing w: line");
      emit_matrix(out, suslin_matrix(ring, data.v, *data.w).matrix);
      return 0;
    };
  });

  struct {
    std::string ring, row;
  } complete3;
  auto* complete3_cmd = app.add_subcommand(
      "complete3",
      "determinant-1 completion of (v1, v2, v3^2) from a length-3 row with section");
  complete3_cmd->add_option("ring", complete3.ring, "ring presentation file")
      ->required();
  complete3_cmd->add_option("row", complete3.row, "row file with v: and w: lines")
      ->required();
  complete3_cmd->callback([&] {
    run = [&]() {
      auto ring = load_ring(complete3.ring, field_override);
      auto data = load_row(complete3.row, ring);
      if (!data.w) throw Error(complete3.row + ": missing w: line");
      emit_matrix(out, factorial_completion_3(RowWithSection(ring, data.v, *data.w)));
      return 0;
    };
  });

  struct {
    std::string ring, row;
  } vas;
  auto* vas_cmd = app.add_subcommand(
      "vaserstein", "4x4 alternating Vaserstein representative of a row with section");
  vas_cmd->add_option("ring", vas.ring, "ring presentation file")->required();
  vas_cmd->add_option("row", vas.row, "row file with v: and w: lines")->required();
  vas_cmd->callback([&] {
    run = [&]() {
      auto ring = load_ring(vas.ring, field_override);
      auto data = load_row(vas.row, ring);
      if (!data.w) throw Error(vas.row + ": missing w: line");
      auto vm = vaserstein_symbol(RowWithSection(ring, data.v, *data.w));
      emit_matrix(out, vm.matrix.matrix());
      out.labeled("pfaffian", pfaffian(vm.matrix).to_string());
      return 0;
    };
  });

  // ---- verifiers ----
  struct {
    std::string ring, m, n, phi;
  } vcong;
  auto* vcong_cmd = app.add_subcommand(
      "verify-congruence", "check phi^T * M * phi == N entrywise in normal form");
  vcong_cmd->add_option("ring", vcong.ring, "ring presentation file")->required();
  vcong_cmd->add_option("M", vcong.m, "matrix file")->required();
  vcong_cmd->add_option("N", vcong.n, "matrix file")->required();
  vcong_cmd->add_option("phi", vcong.phi, "matrix file")->required();
  vcong_cmd->callback([&] {
    run = [&]() {
      auto ring = load_ring(vcong.ring, field_override);
      bool good = verify_congruence(load_matrix(vcong.m, ring),
                                    load_matrix(vcong.n, ring),
                                    load_matrix(vcong.phi, ring));
      out.status(good ? "ok" : "rejected");
      return good ? 0 : 2;
    };
  });

  struct {
    std::string ring, m, n, word;
  } vwitt;
  auto* vwitt_cmd = app.add_subcommand(
      "verify-witt",
      "check M | psi == E^T (N | psi) E for the witness word E (| = orthogonal sum)");
  vwitt_cmd->add_option("ring", vwitt.ring, "ring presentation file")->required();
  vwitt_cmd->add_option("M", vwitt.m, "alternating matrix file")->required();
  vwitt_cmd->add_option("N", vwitt.n, "alternating matrix file")->required();
  vwitt_cmd->add_option("word", vwitt.word, "witness word file")->required();
  vwitt_cmd->callback([&] {
    run = [&]() {
      auto ring = load_ring(vwitt.ring, field_override);
      WittRepresentative m(AlternatingMatrix(load_matrix(vwitt.m, ring)));
      WittRepresentative n(AlternatingMatrix(load_matrix(vwitt.n, ring)));
      auto wit = witness_for(m, n, load_word(vwitt.word, ring));
      bool good = verify_witt_equiv(m, n, wit);
      out.status(good ? "ok" : "rejected");
      return good ? 0 : 2;
    };
  });

  struct {
    std::string ring, m, n, word, sigma;
  } vwsl;
  auto* vwsl_cmd = app.add_subcommand(
      "verify-wsl", "verify-witt with an extra determinant-1 twist matrix sigma");
  vwsl_cmd->add_option("ring", vwsl.ring, "ring presentation file")->required();
  vwsl_cmd->add_option("M", vwsl.m, "alternating matrix file")->required();
  vwsl_cmd->add_option("N", vwsl.n, "alternating matrix file")->required();
  vwsl_cmd->add_option("word", vwsl.word, "witness word file")->required();
  vwsl_cmd->add_option("sigma", vwsl.sigma, "determinant-1 matrix file")->required();
  vwsl_cmd->callback([&] {
    run = [&]() {
      auto ring = load_ring(vwsl.ring, field_override);
      WittRepresentative m(AlternatingMatrix(load_matrix(vwsl.m, ring)));
      WittRepresentative n(AlternatingMatrix(load_matrix(vwsl.n, ring)));
      auto wit = witness_for(m, n, load_word(vwsl.word, ring));
      SLWitness sl(load_matrix(vwsl.sigma, ring));
      bool good = verify_wsl_equiv(m, n, wit, sl);
      out.status(good ? "ok" : "rejected");
      return good ? 0 : 2;
    };
  });

  struct {
    std::string ring, row, chi, psi;
  } vtrans;
  auto* vtrans_cmd = app.add_subcommand(
      "verify-transitivity",
      "check psi^T * chi * psi == chi and that the first row of psi equals v");
  vtrans_cmd->add_option("ring", vtrans.ring, "ring presentation file")->required();
  vtrans_cmd->add_option("row", vtrans.row, "row file (w: taken as cofactors)")
      ->required();
  vtrans_cmd->add_option("chi", vtrans.chi, "alternating matrix file")->required();
  vtrans_cmd->add_option("psi", vtrans.psi, "matrix file")->required();
  vtrans_cmd->callback([&] {
    run = [&]() {
      auto ring = load_ring(vtrans.ring, field_override);
      auto v = row_with_certificate(ring, load_row(vtrans.row, ring));
      WittRepresentative chi(AlternatingMatrix(load_matrix(vtrans.chi, ring)));
      bool good =
          verify_transitivity_certificate(v, chi, load_matrix(vtrans.psi, ring));
      out.status(good ? "ok" : "rejected");
      return good ? 0 : 2;
    };
  });

  // ---- homomorphisms ----
  struct {
    std::string source, target, hom, input;
    bool matrix = false;
  } hom;
  auto* hom_cmd = app.add_subcommand(
      "apply-hom", "apply a ring homomorphism to polynomials or to a matrix");
  hom_cmd->add_option("source", hom.source, "source ring presentation file")
      ->required();
  hom_cmd->add_option("target", hom.target, "target ring presentation file")
      ->required();
  hom_cmd->add_option("hom", hom.hom, "hom file: one `var: image` line per variable")
      ->required();
  hom_cmd->add_option("input", hom.input, "polynomial lines or matrix file")
      ->required();
  hom_cmd->add_flag("--matrix", hom.matrix, "treat input as a matrix (pushforward)");
  hom_cmd->callback([&] {
    run = [&]() {
      auto src = load_ring(hom.source, field_override);
      auto dst = load_ring(hom.target, field_override);
      auto hf = open_file(hom.hom);
      RingHom h = parse_hom(hf, src, dst, hom.hom);
      if (hom.matrix) {
        emit_matrix(out, pushforward(h, load_matrix(hom.input, src)));
      } else {
        auto ctx = src->context();
        for (const auto& p : load_polys(hom.input, ctx))
          out.labeled("image", h.apply(RingElement(src, p)).to_string());
      }
      return 0;
    };
  });

  // ---- finite-field orbit oracle ----
  struct {
    std::uint32_t p = 2;
    std::size_t n = 4;
    std::string gens = "SE";
    bool reps = false;
  } orbit;
  auto* orbit_cmd = app.add_subcommand(
      "orbit", "orbit partition of Um_n(F_p) under elementary generator action");
  orbit_cmd->add_option("--p", orbit.p, "prime field size")->required();
  orbit_cmd->add_option("--n", orbit.n, "vector length (default 4)");
  orbit_cmd->add_option("--generators", orbit.gens, "E, SE, or both (default SE)")
      ->check(CLI::IsMember({"E", "SE", "both"}));
  orbit_cmd->add_flag("--representatives", orbit.reps,
                      "also print one CSV line per orbit representative");
  orbit_cmd->callback([&] {
    run = [&]() {
      GeneratorSet g = orbit.gens == "E"    ? GeneratorSet::linear
                       : orbit.gens == "SE" ? GeneratorSet::symplectic
                                            : GeneratorSet::both;
      auto report = orbit_bruteforce(orbit.p, orbit.n, g);
      std::string sizes;
      for (std::size_t i = 0; i < report.sizes.size(); ++i) {
        if (i) sizes += ",";
        sizes += std::to_string(report.sizes[i]);
      }
      out.bare("orbit", "orbits=" + std::to_string(report.sizes.size()) +
                            " sizes=" + sizes);
      if (orbit.reps) {
        for (const auto& rep : report.representatives) {
          std::string line;
          for (std::size_t i = 0; i < rep.size(); ++i) {
            if (i) line += ",";
            line += std::to_string(rep[i]);
          }
          out.bare("rep", line);
        }
      }
      return 0;
    };
  });

  // ---- integer SL factorization ----
  struct {
    std::string matrix;
  } slz;
  auto* slz_cmd = app.add_subcommand(
      "factor-slz",
      "factor an integer determinant-1 matrix into elementary transvections");
  slz_cmd->add_option("matrix", slz.matrix, "integer matrix file")->required();
  slz_cmd->callback([&] {
    run = [&]() {
      auto f = open_file(slz.matrix);
      auto m = parse_integer_matrix(f, slz.matrix);
      auto moves = factor_integer_sl(m);
      out.labeled("rank", std::to_string(m.size()));
      for (const auto& mv : moves)
        out.bare("gen", "E " + std::to_string(mv.i + 1) + " " +
                            std::to_string(mv.j + 1) + " " + mv.lambda.get_str());
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (!field_flag.empty()) {
    try {
      field_override = field_from_flag(field_flag);
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }

  const auto t0 = std::chrono::steady_clock::now();
  int rc = 1;
  try {
    rc = run ? run() : 1;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    rc = 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    rc = 1;
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  std::cerr << "elapsed_ms=" << ms << "\n";
  return rc;
}
