#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "conformalk/contact_forms.hpp"
#include "conformalk/induced.hpp"
#include "conformalk/json_io.hpp"
#include "conformalk/kn_algebra.hpp"
#include "conformalk/singular.hpp"
#include "conformalk/so_rep.hpp"

namespace {

using namespace conformalk;

int read_threads() {
  const char* env = std::getenv("CONFORMALK_THREADS");
  if (!env) return 1;
  int v = std::atoi(env);
  return v >= 1 ? v : 1;
}

bool guard_n(int n, bool force) {
  if (n >= 3 && n <= 8) return true;
  if (force) {
    std::cerr << "warning: n=" << n
              << " is outside the supported range 3..8; expect long runtimes "
                 "and heavy memory use\n";
    return true;
  }
  std::cerr << "error: n=" << n
            << " is outside the supported range 3..8 (use --force-n to "
               "override at your own cost)\n";
  return false;
}

void emit_json(const std::string& path, const Json& report) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << dump_stable(report);
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << dump_stable(report);
}

Json base_report(const std::string& command, Json config) {
  config["threads"] = read_threads();
  Json r;
  r["version"] = tool_version();
  r["command"] = command;
  r["config"] = std::move(config);
  return r;
}

Mask parse_xi_monomial(int n, const std::string& text) {
  Mask I = 0;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "1") continue;
    if (tok.size() < 2 || tok[0] != 'x')
      throw ParseError("expected tokens like 'x2', got '" + tok + "'");
    int idx = std::atoi(tok.c_str() + 1);
    if (idx < 1 || idx > n)
      throw ParseError("index out of range 1.." + std::to_string(n) + ": " + tok);
    Mask b = Mask(1) << (idx - 1);
    if (I & b) throw ParseError("repeated factor (squares to zero): " + tok);
    I |= b;
  }
  return I;
}

GaussScalar parse_scalar_arg(const std::string& text) {
  size_t comma = text.find(',');
  if (comma == std::string::npos) return GaussScalar::parse(text);
  return GaussScalar::parse(text.substr(0, comma), text.substr(comma + 1));
}

std::string weight_str(const SoWeight& w) { return w.str(); }

SoWeight family_weight(int n, const mpq_class& mu0, const mpq_class& mu1) {
  SoWeight w;
  w.n = n;
  w.mu0 = mu0;
  w.mu.assign(n / 2, 0);
  if (!w.mu.empty()) w.mu[0] = mu1;
  return w;
}

int run_axioms(int n, int tmax, const std::string& json_path) {
  AxiomReport r = check_axioms(n, tmax);
  for (auto& it : r.items)
    std::cout << (it.pass ? "pass " : "FAIL ") << it.check << " (" << it.cases
              << " cases)" << (it.detail.empty() ? "" : ": " + it.detail) << "\n";
  std::cout << (r.all_pass ? "all bracket checks passed\n"
                           : "bracket checks FAILED\n");
  Json rep = base_report("axioms", {{"n", n}, {"tmax", tmax}});
  rep["report"] = axiom_report_json(r);
  emit_json(json_path, rep);
  return r.all_pass ? 0 : 1;
}

int run_rep(int n, const std::string& mu_spec, bool matrices,
            const std::string& json_path) {
  SoWeight w = parse_weight(n, mu_spec);
  std::string why;
  if (!is_dominant_integral(n, w.mu, &why)) {
    std::cerr << "error: " << why << "\n";
    return 2;
  }
  SoModule mod = build_irrep(w);
  bool ok = verify_representation(mod, &why);
  mpq_class wd = weyl_dim(n, w.mu);
  bool dim_ok = mpq_class(mod.dim) == wd;
  std::cout << "highest weight " << weight_str(w) << "\n";
  std::cout << "dim " << mod.dim << " (dimension formula: " << rat_str(wd)
            << (dim_ok ? ", match" : ", MISMATCH") << ")\n";
  std::cout << "bracket fidelity: " << (ok ? "ok" : "FAILED: " + why) << "\n";
  Json rep = base_report(
      "rep", {{"n", n}, {"mu", mu_spec}, {"matrices", matrices}});
  rep["report"] = rep_json(mod, matrices);
  rep["dimFormula"] = rat_str(wd);
  rep["bracketFidelity"] = ok;
  emit_json(json_path, rep);
  return ok && dim_ok ? 0 : 1;
}

int run_action(int n, const std::string& mu_spec, const std::string& f_spec,
               int fd, const std::string& g_spec, int gd, int gb, bool dual,
               const std::string& alpha_spec, const std::string& json_path) {
  SoWeight w = parse_weight(n, mu_spec);
  std::string why;
  if (!is_dominant_integral(n, w.mu, &why)) {
    std::cerr << "error: " << why << "\n";
    return 2;
  }
  if (fd < 0 || gd < 0) {
    std::cerr << "error: d-powers must be non-negative\n";
    return 2;
  }
  SoModule mod = build_irrep(w);
  if (gb < 0 || gb >= mod.dim) {
    std::cerr << "error: --gb must lie in 0.." << mod.dim - 1 << "\n";
    return 2;
  }
  InducedModule M(mod, dual ? BasisKind::Dual : BasisKind::Natural);
  ConformalElement f(n, fd, parse_xi_monomial(n, f_spec));
  InducedVector g = M.basis_vector(IndKey{gd, parse_xi_monomial(n, g_spec), gb});
  LambdaInd out = M.act(f, g);
  GaussScalar alpha = parse_scalar_arg(alpha_spec);
  if (!alpha.is_zero()) out = twist_alpha(out, alpha);
  std::cout << "acting element: " << f.str() << "\n";
  std::cout << "target vector:  " << g.str() << " [" << basis_name(M.kind())
            << " basis]\n";
  std::cout << "result: " << out.str() << "\n";
  Json rep = base_report("action", {{"n", n},
                                    {"mu", mu_spec},
                                    {"f", f_spec},
                                    {"fd", fd},
                                    {"g", g_spec},
                                    {"gd", gd},
                                    {"gb", gb},
                                    {"dual", dual},
                                    {"alpha", alpha_spec}});
  rep["report"] = lambda_json(w, out);
  emit_json(json_path, rep);
  return 0;
}

int run_singular(int n, const std::string& mu_spec, int dmax,
                 const std::string& json_path) {
  SoWeight w = parse_weight(n, mu_spec);
  std::string why;
  if (!is_dominant_integral(n, w.mu, &why)) {
    std::cerr << "error: " << why << "\n";
    return 2;
  }
  SingularReport r = solve_singular(w, dmax);
  InducedModule M(build_irrep(w), BasisKind::Dual);
  bool consistent = r.trivial_dim == 1;
  std::cout << "weight " << weight_str(w) << ", d-power <= " << dmax << "\n";
  std::cout << "grade-zero kernel dimension: " << r.trivial_dim << "\n";
  if (r.vectors.empty()) {
    std::cout << "no non-trivial singular vectors: the induced module is "
                 "irreducible at this truncation\n";
  }
  for (auto& info : r.vectors) {
    std::string check = verify_annihilation(M, info.v, dmax);
    if (!check.empty()) consistent = false;
    std::cout << "singular vector [family " << info.family << ", grade "
              << info.grade << ", weight "
              << (info.weight ? info.weight->str() : std::string("undefined"))
              << "]\n  " << info.v.str() << "\n  independent annihilation check: "
              << (check.empty() ? "ok" : check) << "\n";
  }
  Json rep = base_report("singular",
                         {{"n", n}, {"mu", mu_spec}, {"dmax", dmax}});
  rep["report"] = singular_report_json(r);
  rep["verified"] = consistent;
  emit_json(json_path, rep);
  return consistent ? 0 : 1;
}

int run_scan(int n, const std::string& grid_spec, int dmax,
             const std::string& json_path) {
  std::vector<SoWeight> weights = parse_weight_grid(n, grid_spec);
  if (weights.empty()) {
    std::cerr << "error: grid contains no dominant integral weight\n";
    return 2;
  }
  std::vector<ScanRow> rows = scan_weights(n, weights, dmax);
  for (auto& row : rows) {
    std::cout << weight_str(row.mu) << "  "
              << (row.reducible ? "reducible" : "irreducible");
    if (row.reducible) {
      std::cout << "  families:";
      for (auto& f : row.families) std::cout << " " << f;
      std::cout << "  grades:";
      for (int g : row.grades) std::cout << " " << g;
    }
    std::cout << "\n";
  }
  Json rep = base_report("scan",
                         {{"n", n}, {"muGrid", grid_spec}, {"dmax", dmax}});
  rep["report"] = scan_json(rows);
  emit_json(json_path, rep);
  return 0;
}

int run_contact(int n, const std::string& side_name, int kmax, int tmax,
                const std::string& json_path) {
  Side side = side_name == "plus" ? Side::Plus : Side::Minus;
  QuotientComplex qc = quotient_complex(n, side, kmax, tmax);
  ExactnessReport er = exactness_check(qc);
  std::cout << "contact complex, " << side_name << " side, n=" << n
            << ", degrees 0.." << kmax << ", |t| <= " << tmax << "\n";
  std::cout << er.str();

  Json levels = Json::array();
  for (int k = 0; k <= kmax; ++k) {
    Json lv;
    lv["degree"] = k;
    Json dims = Json::array(), ranks = Json::array();
    for (int w = qc.wlo; w <= qc.whi; ++w) {
      const ComplexComponent* c = qc.find(k, w);
      if (!c) continue;
      int dq = static_cast<int>(c->qbasis.size());
      if (dq > 0) dims.push_back(Json::array({w, dq}));
      if (c->has_dmat && c->dmat.rank() > 0)
        ranks.push_back(Json::array({w, c->dmat.rank()}));
    }
    lv["dims"] = dims;
    lv["dRanks"] = ranks;
    if (er.level_kernel.count(k)) {
      lv["kernel"] = er.level_kernel.at(k);
      lv["defect"] = er.level_defect.at(k);
    }
    levels.push_back(lv);
  }

  bool expectations = true;
  Json gammas = Json::array();
  for (int k = 0; k <= kmax; ++k) {
    GammaInfo g = gamma_weights(n, k, side);
    if (!g.detail.empty() || !g.annihilated) expectations = false;
    std::cout << "degree " << k << " extreme vector: module weight "
              << g.module_weight.str() << ", "
              << (g.annihilated ? "annihilated as expected"
                                : "NOT annihilated: " + g.detail)
              << "\n";
    Json gj = gamma_json(g);
    gj["degree"] = k;
    gammas.push_back(gj);
  }

  Json chars = Json::array();
  if (side == Side::Plus) {
    for (int l = 0; l <= kmax; ++l) {
      CharacterReport cr = graded_character_compare(n, l, 2 * tmax);
      if (!cr.ok) expectations = false;
      std::cout << "degree " << l << " graded dimensions vs induced picture: "
                << (cr.ok ? "match" : "MISMATCH\n" + cr.str()) << "\n";
      Json cj = character_json(cr);
      cj["degree"] = l;
      chars.push_back(cj);
    }
  }

  Json rep = base_report("contact", {{"n", n},
                                     {"side", side_name},
                                     {"kmax", kmax},
                                     {"tmax", tmax}});
  rep["report"]["levels"] = levels;
  rep["report"]["exactness"] = exactness_json(er);
  rep["report"]["gamma"] = gammas;
  if (side == Side::Plus) rep["report"]["characters"] = chars;
  emit_json(json_path, rep);
  return expectations ? 0 : 1;
}

int run_catalog(int n, int dmax, int kmax, const std::string& json_path) {
  Json rep = base_report("catalog", {{"n", n}, {"dmax", dmax}, {"kmax", kmax}});
  if (n < 4) {
    std::string msg =
        "catalog is implemented for n >= 4; the cases n <= 3 (and the "
        "exceptional structures related to them) need a separate analysis "
        "that this tool does not cover";
    std::cout << msg << "\n";
    rep["deferred"] = msg;
    emit_json(json_path, rep);
    return 0;
  }

  std::string kz(n / 2 - 1, ' ');
  auto fw = [&](const mpq_class& a, const mpq_class& b) {
    return family_weight(n, a, b).str();
  };
  std::vector<std::string> families = {
      "(1) Tens_a(V): twisted tensor module on a finite-dimensional "
      "irreducible cso(" +
          std::to_string(n) +
          ")-module V whose highest weight differs from " + fw(-1, 1) +
          "-type weights (-k;k,0,...,0) and " + fw(n - 1, 1) +
          "-type weights (" + std::to_string(n) +
          "+k-2;k,0,...,0) for every k >= 1, and from the trivial weight " +
          fw(0, 0),
      "(2) (Omega^k/I^k)*_a / Ker d*: twisted duals of the degree-k contact "
      "form quotients modulo the kernel of the dual differential, k >= 1, "
      "together with the same modules with reversed parity",
      "(3) the duals of family (2) for k >= 2, each isomorphic to "
      "(Omega^k/I^k)_a / Ker d; at k = 1 the dual is the tensor module at "
      "weight " +
          fw(n - 2, 0) + " and already appears in family (1)"};
  std::cout << "finite irreducible K_" << n
            << "-modules (a ranges over C, twisting d -> d + a):\n";
  for (auto& f : families) std::cout << "  " << f << "\n";
  rep["families"] = families;

  struct Target {
    SoWeight mu;
    bool expect_reducible;
    std::string note;
  };
  std::vector<Target> targets;
  targets.push_back({family_weight(n, 0, 0), true,
                     "trivial weight: reducible, with the one-dimensional "
                     "trivial quotient"});
  for (int k = 1; k <= kmax; ++k) {
    targets.push_back({family_weight(n, -k, k), true,
                       "family-(2) exclusion at k=" + std::to_string(k)});
    targets.push_back({family_weight(n, n + k - 2, k), true,
                       "family-(3) exclusion at k=" + std::to_string(k)});
  }
  targets.push_back({family_weight(n, n - 2, 0), false,
                     "k=0 boundary weight: an irreducible tensor module"});
  targets.push_back({family_weight(n, 0, 1), false, "control weight"});
  targets.push_back({family_weight(n, 1, 1), false, "control weight"});

  std::vector<SoWeight> weights;
  for (auto& t : targets) weights.push_back(t.mu);
  std::vector<ScanRow> rows = scan_weights(n, weights, dmax);

  bool all_ok = true;
  Json scan = Json::array();
  std::cout << "reducibility scan backing the exclusions (d-power <= " << dmax
            << "):\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    bool ok = rows[i].reducible == targets[i].expect_reducible;
    all_ok = all_ok && ok;
    std::cout << "  " << weight_str(rows[i].mu) << "  "
              << (rows[i].reducible ? "reducible  " : "irreducible")
              << "  expected "
              << (targets[i].expect_reducible ? "reducible" : "irreducible")
              << "  " << (ok ? "ok" : "MISMATCH") << "  [" << targets[i].note;
    if (rows[i].reducible && !rows[i].families.empty()) {
      std::cout << "; families:";
      for (auto& f : rows[i].families) std::cout << " " << f;
    }
    std::cout << "]\n";
    Json row;
    row["mu"] = weight_json(rows[i].mu);
    row["reducible"] = rows[i].reducible;
    row["expectedReducible"] = targets[i].expect_reducible;
    row["families"] = rows[i].families;
    row["note"] = targets[i].note;
    row["match"] = ok;
    scan.push_back(row);
  }
  std::cout << (all_ok ? "catalog cross-check passed\n"
                       : "catalog cross-check FAILED\n");
  rep["scan"] = scan;
  rep["match"] = all_ok;
  emit_json(json_path, rep);
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with the contact Lie conformal "
               "superalgebras K_n and their induced modules"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  int rc = 0;
  int n = 4, tmax = 2, ctmax = 3, dmax = 3, kmax = 3, fd = 0, gd = 0, gb = 0;
  bool force_n = false, matrices = false, dual = false;
  std::string mu, grid, json_path, f_spec = "1", g_spec = "1", alpha = "0";
  std::string side = "plus";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", n, "number of odd coordinates")->required();
    sub->add_flag("--force-n", force_n,
                  "allow n outside 3..8 (combinatorial cost grows fast)");
    sub->add_option("--json", json_path, "write a JSON report to this path ('-' for stdout)");
  };

  CLI::App* ax = app.add_subcommand("axioms", "bracket axiom sweeps for K_n");
  add_common(ax);
  ax->add_option("--tmax", tmax, "t-power bound for the expansion checks");
  ax->callback([&] { rc = guard_n(n, force_n) ? run_axioms(n, tmax, json_path) : 2; });

  CLI::App* rp = app.add_subcommand("rep", "build and verify a cso(n) irrep");
  add_common(rp);
  rp->add_option("--mu", mu, "highest weight 'm0;m1,...'")->required();
  rp->add_flag("--matrices", matrices, "include generator matrices in the JSON");
  rp->callback([&] { rc = guard_n(n, force_n) ? run_rep(n, mu, matrices, json_path) : 2; });

  CLI::App* ac = app.add_subcommand("action", "lambda-action on an induced module");
  add_common(ac);
  ac->add_option("--mu", mu, "highest weight 'm0;m1,...'")->required();
  ac->add_option("--f", f_spec, "acting monomial, e.g. 'x1 x2' (default 1)");
  ac->add_option("--fd", fd, "d-power on the acting element");
  ac->add_option("--g", g_spec, "Grassmann part of the target basis vector");
  ac->add_option("--gd", gd, "d-power of the target basis vector");
  ac->add_option("--gb", gb, "index of the F-basis vector (0-based)");
  ac->add_flag("--dual", dual, "use the Hodge-dual basis action");
  ac->add_option("--alpha", alpha, "twist parameter, 're[,im]'");
  ac->callback([&] {
    rc = guard_n(n, force_n)
             ? run_action(n, mu, f_spec, fd, g_spec, gd, gb, dual, alpha, json_path)
             : 2;
  });

  CLI::App* sg = app.add_subcommand("singular", "singular vector search at one weight");
  add_common(sg);
  sg->add_option("--mu", mu, "highest weight 'm0;m1,...'")->required();
  sg->add_option("--dmax", dmax, "d-power bound for the candidate space");
  sg->callback([&] { rc = guard_n(n, force_n) ? run_singular(n, mu, dmax, json_path) : 2; });

  CLI::App* sc = app.add_subcommand("scan", "singular vector scan over a weight grid");
  add_common(sc);
  sc->add_option("--mu-grid", grid,
                 "grid 'slot;slot,...' with slot = value | lo..hi | lo..hi:step")
      ->required();
  sc->add_option("--dmax", dmax, "d-power bound for the candidate space");
  sc->callback([&] { rc = guard_n(n, force_n) ? run_scan(n, grid, dmax, json_path) : 2; });

  CLI::App* ct = app.add_subcommand("contact", "contact form complex of the quotients");
  add_common(ct);
  ct->add_option("--side", side, "plus | minus")
      ->check(CLI::IsMember({"plus", "minus"}));
  ct->add_option("--kmax", kmax, "top form degree");
  ct->add_option("--tmax", ctmax, "|t|-power window for the weight range");
  ct->callback([&] {
    rc = guard_n(n, force_n) ? run_contact(n, side, kmax, ctmax, json_path) : 2;
  });

  CLI::App* cat = app.add_subcommand("catalog", "classification catalog with a live scan");
  add_common(cat);
  cat->add_option("--dmax", dmax, "d-power bound for the backing scan");
  cat->add_option("--kmax", kmax, "largest k whose exclusions are scanned");
  cat->callback([&] { rc = guard_n(n, force_n) ? run_catalog(n, dmax, kmax, json_path) : 2; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
