#include "conformalk/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace conformalk {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

Json terms_json(const InducedVector& v) {
  Json terms = Json::array();
  for (auto& [key, c] : v.terms()) {
    Json t;
    t["dpow"] = key.k;
    Json xi = Json::array();
    for (int i = 1; i <= v.n(); ++i)
      if (key.I & (Mask(1) << (i - 1))) xi.push_back(i);
    t["xi"] = xi;
    t["vecIndex"] = key.b;
    t["coeff"] = scalar_json(c);
    terms.push_back(t);
  }
  return terms;
}

}  // namespace

std::string tool_version() { return "0.1.0"; }

Json scalar_json(const GaussScalar& c) {
  return Json::array({rat_str(c.re()), rat_str(c.im())});
}

Json weight_json(const SoWeight& w) {
  Json out = Json::array();
  out.push_back(rat_str(w.mu0));
  for (auto& q : w.mu) out.push_back(rat_str(q));
  return out;
}

SoWeight parse_weight(int n, const std::string& spec) {
  auto halves = split(spec, ';');
  if (halves.size() != 2)
    throw ParseError("weight must look like 'm0;m1,...,mk': " + spec);
  int m = n / 2;
  auto tail = split(halves[1], ',');
  if (static_cast<int>(tail.size()) != m)
    throw ParseError("weight needs " + std::to_string(m) +
                     " entries after ';' for n=" + std::to_string(n) + ": " + spec);
  SoWeight w;
  w.n = n;
  w.mu0 = parse_rat(trim(halves[0]));
  for (auto& t : tail) w.mu.push_back(parse_rat(trim(t)));
  return w;
}

std::vector<mpq_class> parse_grid_slot(const std::string& slot) {
  std::string body = trim(slot);
  size_t dots = body.find("..");
  if (dots == std::string::npos) return {parse_rat(body)};
  mpq_class lo = parse_rat(trim(body.substr(0, dots)));
  std::string rest = body.substr(dots + 2);
  mpq_class step = 1;
  size_t colon = rest.find(':');
  if (colon != std::string::npos) {
    step = parse_rat(trim(rest.substr(colon + 1)));
    rest = rest.substr(0, colon);
  }
  mpq_class hi = parse_rat(trim(rest));
  if (step <= 0) throw ParseError("grid step must be positive: " + slot);
  std::vector<mpq_class> out;
  for (mpq_class v = lo; v <= hi; v += step) out.push_back(v);
  if (out.empty()) throw ParseError("grid range is empty: " + slot);
  return out;
}

std::vector<SoWeight> parse_weight_grid(int n, const std::string& spec) {
  auto halves = split(spec, ';');
  if (halves.size() != 2)
    throw ParseError("grid must look like 'slot;slot,...,slot': " + spec);
  int m = n / 2;
  auto tail = split(halves[1], ',');
  if (static_cast<int>(tail.size()) != m)
    throw ParseError("grid needs " + std::to_string(m) +
                     " slots after ';' for n=" + std::to_string(n) + ": " + spec);
  std::vector<std::vector<mpq_class>> slots;
  slots.push_back(parse_grid_slot(halves[0]));
  for (auto& t : tail) slots.push_back(parse_grid_slot(t));

  std::vector<SoWeight> out;
  std::vector<size_t> idx(slots.size(), 0);
  while (true) {
    SoWeight w;
    w.n = n;
    w.mu0 = slots[0][idx[0]];
    for (int j = 1; j <= m; ++j) w.mu.push_back(slots[j][idx[j]]);
    if (is_dominant_integral(n, w.mu)) out.push_back(w);
    int pos = static_cast<int>(slots.size()) - 1;
    while (pos >= 0) {
      if (++idx[pos] < slots[pos].size()) break;
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

Json vector_json(const SoWeight& mu, const InducedVector& v) {
  Json out;
  out["n"] = v.n();
  out["mu"] = weight_json(mu);
  out["basis"] = basis_name(v.kind());
  out["terms"] = terms_json(v);
  return out;
}

Json lambda_json(const SoWeight& mu, const LambdaInd& p) {
  Json out;
  out["degree"] = p.degree();
  Json coeffs = Json::object();
  for (auto& [lpow, v] : p.coeffs()) coeffs[std::to_string(lpow)] = terms_json(v);
  out["coeffs"] = coeffs;
  (void)mu;
  return out;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero())
        out.push_back(Json::array({r, c, scalar_json(m.at(r, c))}));
  return out;
}

Json rep_json(const SoModule& m, bool matrices) {
  Json out;
  out["n"] = m.n;
  out["highest"] = weight_json(m.highest);
  out["dim"] = m.dim;
  Json ws = Json::array();
  for (auto& w : m.weights) {
    Json row = Json::array();
    for (auto& q : w) row.push_back(rat_str(q));
    ws.push_back(row);
  }
  out["weights"] = ws;
  if (matrices) {
    Json fm = Json::object();
    for (int i = 1; i <= m.n; ++i)
      for (int j = i + 1; j <= m.n; ++j)
        fm["F" + std::to_string(i) + std::to_string(j)] = matrix_json(m.F_of(i, j));
    out["generators"] = fm;
  }
  return out;
}

Json axiom_report_json(const AxiomReport& r) {
  Json out;
  out["n"] = r.n;
  out["tmax"] = r.tmax;
  out["passed"] = r.all_pass;
  Json checks = Json::array();
  for (auto& it : r.items) {
    Json c;
    c["check"] = it.check;
    c["pass"] = it.pass;
    c["cases"] = it.cases;
    if (!it.detail.empty()) c["detail"] = it.detail;
    checks.push_back(c);
  }
  out["checks"] = checks;
  return out;
}

Json singular_report_json(const SingularReport& r) {
  Json out;
  out["n"] = r.mu.n;
  out["mu"] = weight_json(r.mu);
  out["dmax"] = r.dmax;
  out["trivialDim"] = r.trivial_dim;
  out["reducible"] = r.reducible();
  Json vecs = Json::array();
  for (auto& info : r.vectors) {
    Json v = vector_json(r.mu, info.v);
    v["grade"] = info.grade;
    v["family"] = info.family;
    if (info.weight) v["weight"] = weight_json(*info.weight);
    vecs.push_back(v);
  }
  out["vectors"] = vecs;
  return out;
}

Json scan_json(const std::vector<ScanRow>& rows) {
  Json out = Json::array();
  for (auto& row : rows) {
    Json r;
    r["mu"] = weight_json(row.mu);
    r["reducible"] = row.reducible;
    r["families"] = row.families;
    r["grades"] = row.grades;
    r["trivialDim"] = row.trivial_dim;
    out.push_back(r);
  }
  return out;
}

Json exactness_json(const ExactnessReport& r) {
  Json out;
  Json levels = Json::array();
  for (auto& [k, d] : r.level_defect) {
    Json lv;
    lv["degree"] = k;
    lv["kernel"] = r.level_kernel.at(k);
    lv["defect"] = d;
    levels.push_back(lv);
  }
  out["levels"] = levels;
  Json items = Json::array();
  for (auto& it : r.items) {
    Json e;
    e["degree"] = it.k;
    e["weight"] = it.w;
    e["dim"] = it.dim_q;
    e["kernel"] = it.ker;
    e["imagePrev"] = it.im_prev;
    e["defect"] = it.defect;
    items.push_back(e);
  }
  out["components"] = items;
  return out;
}

Json gamma_json(const GammaInfo& g) {
  Json out;
  out["vectorWeight"] = weight_json(g.vector_weight);
  out["moduleWeight"] = weight_json(g.module_weight);
  out["annihilated"] = g.annihilated;
  if (!g.detail.empty()) out["detail"] = g.detail;
  return out;
}

Json character_json(const CharacterReport& r) {
  Json out;
  out["match"] = r.ok;
  Json items = Json::array();
  for (auto& it : r.items) {
    Json e;
    e["weight"] = it.w;
    e["dimQuotient"] = it.dim_quotient;
    e["dimInduced"] = it.dim_induced;
    items.push_back(e);
  }
  out["items"] = items;
  return out;
}

std::string dump_stable(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace conformalk
