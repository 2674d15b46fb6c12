#include "conformalk/so_rep.hpp"

#include <cassert>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace conformalk {

mpq_class parse_rat(const std::string& text) { return GaussScalar::parse(text).re(); }

std::string rat_str(const mpq_class& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string SoWeight::str() const {
  std::ostringstream os;
  os << "(" << mu0;
  for (size_t j = 0; j < mu.size(); ++j) os << (j ? "," : ";") << mu[j];
  os << ")";
  return os.str();
}

SoWeight make_weight(int n, const std::string& mu0, const std::vector<std::string>& mu) {
  SoWeight w;
  w.n = n;
  w.mu0 = parse_rat(mu0);
  if (static_cast<int>(mu.size()) != n / 2)
    throw std::invalid_argument("weight needs exactly " + std::to_string(n / 2) +
                                " so-part entries for n=" + std::to_string(n));
  for (const auto& s : mu) w.mu.push_back(parse_rat(s));
  return w;
}

bool is_dominant_integral(int n, const std::vector<mpq_class>& mu, std::string* why) {
  int m = n / 2;
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (static_cast<int>(mu.size()) != m) return fail("wrong number of weight entries");
  if (n == 2) return true;  // so(2) is abelian; every rational weight is allowed

  // all integral or all half-odd-integral
  bool half = false, integral = false;
  for (const auto& v : mu) {
    mpq_class two = 2 * v;
    if (two.get_den() != 1) return fail("entries must be integers or half-integers");
    if (v.get_den() == 1)
      integral = true;
    else
      half = true;
  }
  if (half && integral) return fail("entries must be all integral or all half-integral");

  for (int i = 0; i + 1 < m; ++i)
    if (mu[i] < mu[i + 1]) return fail("entries must be non-increasing");
  if (n % 2 == 1) {
    if (m >= 1 && mu[m - 1] < 0) return fail("last entry must be non-negative");
  } else {
    if (m >= 2 && mu[m - 2] < abs(mu[m - 1]))
      return fail("next-to-last entry must dominate |last|");
  }
  return true;
}

mpq_class weyl_dim(int n, const std::vector<mpq_class>& mu) {
  int m = n / 2;
  std::vector<mpq_class> rho(m), x(m);
  for (int i = 0; i < m; ++i) {
    if (n % 2 == 1)
      rho[i] = mpq_class(2 * (m - i) - 1, 2);
    else
      rho[i] = m - 1 - i;
    x[i] = mu[i] + rho[i];
  }
  mpq_class num = 1, den = 1;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      num *= (x[i] - x[j]) * (x[i] + x[j]);
      den *= (rho[i] - rho[j]) * (rho[i] + rho[j]);
    }
    if (n % 2 == 1) {
      num *= x[i];
      den *= rho[i];
    }
  }
  return num / den;
}

void SoElement::add_F(int a, int b, GaussScalar c) {
  if (a == b || c.is_zero()) return;
  if (a > b) {
    std::swap(a, b);
    c = -c;
  }
  auto key = std::make_pair(a, b);
  auto it = F.find(key);
  if (it == F.end()) {
    F.emplace(key, std::move(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) F.erase(it);
  }
}

AnnihilationElement SoElement::to_annihilation() const {
  AnnihilationElement out(n);
  for (const auto& [ij, c] : F) {
    Mask M = (Mask(1) << (ij.first - 1)) | (Mask(1) << (ij.second - 1));
    out.add_term(0, M, -c);  // F_{ij} = -xi_i xi_j
  }
  return out;
}

ConformalElement SoElement::to_kn() const {
  ConformalElement out(n);
  for (const auto& [ij, c] : F) {
    Mask M = (Mask(1) << (ij.first - 1)) | (Mask(1) << (ij.second - 1));
    out.add_term(0, M, -c);
  }
  return out;
}

SoElement& SoElement::operator+=(const SoElement& o) {
  if (n == 0) n = o.n;
  for (const auto& [ij, c] : o.F) add_F(ij.first, ij.second, c);
  return *this;
}

SoElement operator*(const GaussScalar& c, SoElement e) {
  if (c.is_zero()) {
    e.F.clear();
    return e;
  }
  for (auto& [ij, v] : e.F) v = c * v;
  return e;
}

std::string SoElement::str() const {
  if (F.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [ij, c] : F) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*F" << ij.first << "," << ij.second;
  }
  return os.str();
}

SoElement so_bracket(const SoElement& a, const SoElement& b) {
  // [F_ab, F_cd] = d_bc F_ad - d_ac F_bd - d_bd F_ac + d_ad F_bc
  SoElement out;
  out.n = a.n ? a.n : b.n;
  for (const auto& [pq, cx] : a.F) {
    auto [p, q] = pq;
    for (const auto& [rs, cy] : b.F) {
      auto [r, s] = rs;
      GaussScalar c = cx * cy;
      if (q == r) out.add_F(p, s, c);
      if (p == r) out.add_F(q, s, -c);
      if (q == s) out.add_F(p, r, -c);
      if (p == s) out.add_F(q, r, c);
    }
  }
  return out;
}

SoElement so_F(int n, int i, int j) {
  SoElement e;
  e.n = n;
  e.add_F(i, j, GaussScalar(1));
  return e;
}

SoElement so_H(int n, int j) {
  SoElement e;
  e.n = n;
  e.add_F(2 * j - 1, 2 * j, GaussScalar::i());
  return e;
}

SoElement so_E_diff(int n, int l, int j, int sgn) {
  SoElement e;
  e.n = n;
  GaussScalar si = sgn > 0 ? GaussScalar::i() : -GaussScalar::i();
  e.add_F(2 * l - 1, 2 * j - 1, GaussScalar(1));
  e.add_F(2 * l, 2 * j, GaussScalar(1));
  e.add_F(2 * l - 1, 2 * j, si);
  e.add_F(2 * l, 2 * j - 1, -si);
  return e;
}

SoElement so_E_sum(int n, int l, int j, int sgn) {
  SoElement e;
  e.n = n;
  GaussScalar si = sgn > 0 ? GaussScalar::i() : -GaussScalar::i();
  e.add_F(2 * l - 1, 2 * j - 1, GaussScalar(1));
  e.add_F(2 * l, 2 * j, GaussScalar(-1));
  e.add_F(2 * l - 1, 2 * j, -si);
  e.add_F(2 * l, 2 * j - 1, -si);
  return e;
}

SoElement so_E_short(int n, int k, int sgn) {
  assert(n % 2 == 1);
  SoElement e;
  e.n = n;
  GaussScalar si = sgn > 0 ? GaussScalar::i() : -GaussScalar::i();
  e.add_F(2 * k - 1, n, GaussScalar(1));
  e.add_F(2 * k, n, -si);
  return e;
}

SoElement so_alpha(int n, int l, int j) {
  SoElement e;
  e.n = n;
  e.add_F(2 * l - 1, 2 * j - 1, GaussScalar(1));
  e.add_F(2 * l, 2 * j - 1, -GaussScalar::i());
  return e;
}

SoElement so_beta(int n, int l, int j) {
  SoElement e;
  e.n = n;
  e.add_F(2 * l, 2 * j, GaussScalar(1));
  e.add_F(2 * l - 1, 2 * j, GaussScalar::i());
  return e;
}

std::vector<SoElement> borel_raising(int n) {
  int m = n / 2;
  std::vector<SoElement> out;
  for (int l = 1; l <= m; ++l) {
    for (int j = l + 1; j <= m; ++j) {
      out.push_back(so_alpha(n, l, j));
      out.push_back(so_beta(n, l, j));
    }
  }
  if (n % 2 == 1)
    for (int k = 1; k <= m; ++k) out.push_back(so_E_short(n, k, +1));
  return out;
}

namespace {

struct SimpleRoot {
  enum Kind { Diff, Short, Sum } kind;
  int a;  // Diff: (a, a+1); Short: eps_m; Sum: eps_{m-1} + eps_m
};

using Word = std::vector<int>;
using WeightVec = std::vector<mpq_class>;

struct VermaContext {
  int n = 0, m = 0;
  WeightVec mu;
  std::vector<SimpleRoot> simples;
  std::map<std::pair<Word, Word>, GaussScalar> memo;

  GaussScalar coroot_pairing(int a, const WeightVec& wt) const {
    const SimpleRoot& r = simples[a];
    switch (r.kind) {
      case SimpleRoot::Diff:
        return GaussScalar(mpq_class(wt[r.a - 1] - wt[r.a]));
      case SimpleRoot::Short:
        return GaussScalar(mpq_class(2 * wt[m - 1]));
      case SimpleRoot::Sum:
        return GaussScalar(mpq_class(wt[m - 2] + wt[m - 1]));
    }
    return GaussScalar(0);
  }

  void lower(int a, WeightVec& wt) const {
    const SimpleRoot& r = simples[a];
    switch (r.kind) {
      case SimpleRoot::Diff:
        wt[r.a - 1] -= 1;
        wt[r.a] += 1;
        break;
      case SimpleRoot::Short:
        wt[m - 1] -= 1;
        break;
      case SimpleRoot::Sum:
        wt[m - 2] -= 1;
        wt[m - 1] -= 1;
        break;
    }
  }

  WeightVec word_weight(const Word& w) const {
    WeightVec wt = mu;
    for (int a : w) lower(a, wt);
    return wt;
  }

  // e_a applied to the word f_{w0} f_{w1} ... v, as a word combination.
  std::map<Word, GaussScalar> raise(int a, const Word& w) const {
    std::map<Word, GaussScalar> out;
    if (w.empty()) return out;
    int b = w.front();
    Word tail(w.begin() + 1, w.end());
    for (const auto& [u, c] : raise(a, tail)) {
      Word v;
      v.reserve(u.size() + 1);
      v.push_back(b);
      v.insert(v.end(), u.begin(), u.end());
      auto it = out.find(v);
      if (it == out.end())
        out.emplace(std::move(v), c);
      else
        it->second += c;
    }
    if (a == b) {
      GaussScalar c = coroot_pairing(a, word_weight(tail));
      if (!c.is_zero()) {
        auto it = out.find(tail);
        if (it == out.end()) {
          out.emplace(tail, c);
        } else {
          it->second += c;
          if (it->second.is_zero()) out.erase(it);
        }
      }
    }
    return out;
  }

  GaussScalar shapovalov(const Word& u, const Word& w) {
    if (u.empty() || w.empty()) {
      return (u.empty() && w.empty()) ? GaussScalar(1) : GaussScalar(0);
    }
    auto key = std::make_pair(u, w);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int a = u.front();
    Word tail(u.begin() + 1, u.end());
    GaussScalar sum(0);
    for (const auto& [x, c] : raise(a, w)) sum += c * shapovalov(tail, x);
    memo.emplace(std::move(key), sum);
    return sum;
  }
};

std::vector<SimpleRoot> simple_roots(int n) {
  int m = n / 2;
  std::vector<SimpleRoot> out;
  for (int a = 1; a <= m - 1; ++a) out.push_back({SimpleRoot::Diff, a});
  if (n % 2 == 1 && m >= 1)
    out.push_back({SimpleRoot::Short, m});
  else if (n % 2 == 0 && m >= 2)
    out.push_back({SimpleRoot::Sum, m});
  return out;
}

SoElement simple_raising_element(int n, const SimpleRoot& r) {
  int m = n / 2;
  switch (r.kind) {
    case SimpleRoot::Diff:
      return so_E_diff(n, r.a, r.a + 1, +1);
    case SimpleRoot::Short:
      return so_E_short(n, m, +1);
    case SimpleRoot::Sum:
      return so_E_sum(n, m - 1, m, +1);
  }
  return SoElement{};
}

SoElement simple_lowering_raw(int n, const SimpleRoot& r) {
  int m = n / 2;
  switch (r.kind) {
    case SimpleRoot::Diff:
      return so_E_diff(n, r.a, r.a + 1, -1);
    case SimpleRoot::Short:
      return so_E_short(n, m, -1);
    case SimpleRoot::Sum:
      return so_E_sum(n, m - 1, m, -1);
  }
  return SoElement{};
}

SoElement coroot_element(int n, const SimpleRoot& r) {
  int m = n / 2;
  SoElement h;
  h.n = n;
  switch (r.kind) {
    case SimpleRoot::Diff:
      h += so_H(n, r.a);
      h += GaussScalar(-1) * so_H(n, r.a + 1);
      break;
    case SimpleRoot::Short:
      h += GaussScalar(2) * so_H(n, m);
      break;
    case SimpleRoot::Sum:
      h += so_H(n, m - 1);
      h += so_H(n, m);
      break;
  }
  return h;
}

int flat_pair_index(int n, int i, int j) {
  // (1,2),(1,3),..,(1,n),(2,3),..
  int idx = 0;
  for (int a = 1; a < i; ++a) idx += n - a;
  return idx + (j - i - 1);
}

SparseVec vectorize(const SoElement& e) {
  SparseVec v;
  for (const auto& [ij, c] : e.F) v[flat_pair_index(e.n, ij.first, ij.second)] = c;
  return v;
}

}  // namespace

int SoModule::pair_index(int i, int j) const { return flat_pair_index(n, i, j); }

const Matrix& SoModule::F_of(int i, int j) const { return Fmat[flat_pair_index(n, i, j)]; }

Matrix SoModule::F_signed(int i, int j) const {
  if (i < j) return F_of(i, j);
  return -F_of(j, i);
}

Matrix SoModule::E00() const { return GaussScalar(mpq_class(highest.mu0)) * Matrix::identity(dim); }

Matrix SoModule::matrix_of(const SoElement& e) const {
  Matrix out(dim, dim);
  for (const auto& [ij, c] : e.F) out += c * F_of(ij.first, ij.second);
  return out;
}

std::vector<GaussScalar> SoModule::apply(const SoElement& e,
                                         const std::vector<GaussScalar>& v) const {
  return matrix_of(e).apply(v);
}

SoModule build_irrep(const SoWeight& w) {
  std::string why;
  if (!is_dominant_integral(w.n, w.mu, &why))
    throw std::invalid_argument("weight " + w.str() + " is not dominant integral: " + why);

  SoModule mod;
  mod.n = w.n;
  mod.highest = w;
  int n = w.n, m = w.n / 2;

  if (n == 2) {
    mod.dim = 1;
    mod.weights = {{w.mu[0]}};
    Matrix f12(1, 1);
    f12.at(0, 0) = -GaussScalar::i() * GaussScalar(mpq_class(w.mu[0]));
    mod.Fmat = {f12};
    return mod;
  }

  VermaContext ctx;
  ctx.n = n;
  ctx.m = m;
  ctx.mu = w.mu;
  ctx.simples = simple_roots(n);
  int ns = static_cast<int>(ctx.simples.size());

  struct WSpace {
    std::vector<int> global;      // basis indices in module order
    std::vector<Word> words;      // defining words, parallel to global
    Matrix gram;                  // pairwise form values, invertible
  };
  std::map<WeightVec, WSpace> spaces;
  std::vector<Word> basis_words;
  std::vector<WeightVec> basis_weights;

  // level 0
  basis_words.push_back({});
  basis_weights.push_back(w.mu);
  {
    WSpace s;
    s.global = {0};
    s.words = {{}};
    s.gram = Matrix(1, 1);
    s.gram.at(0, 0) = GaussScalar(1);
    spaces.emplace(w.mu, std::move(s));
  }

  std::vector<int> prev_level = {0};
  while (!prev_level.empty()) {
    // candidates grouped by weight
    std::map<WeightVec, std::vector<Word>> groups;
    for (int g : prev_level) {
      for (int a = 0; a < ns; ++a) {
        Word cand;
        cand.reserve(basis_words[g].size() + 1);
        cand.push_back(a);
        cand.insert(cand.end(), basis_words[g].begin(), basis_words[g].end());
        WeightVec wt = basis_weights[g];
        ctx.lower(a, wt);
        groups[wt].push_back(std::move(cand));
      }
    }
    std::vector<int> cur_level;
    for (auto& [wt, cands] : groups) {
      int N = static_cast<int>(cands.size());
      Matrix gram(N, N);
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) gram.at(i, j) = ctx.shapovalov(cands[i], cands[j]);
      Matrix work = gram;
      std::vector<int> piv = work.rref();
      if (piv.empty()) continue;
      WSpace s;
      int d = static_cast<int>(piv.size());
      s.gram = Matrix(d, d);
      for (int i = 0; i < d; ++i) {
        int g = static_cast<int>(basis_words.size());
        s.global.push_back(g);
        s.words.push_back(cands[piv[i]]);
        basis_words.push_back(cands[piv[i]]);
        basis_weights.push_back(wt);
        cur_level.push_back(g);
      }
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) s.gram.at(i, j) = gram.at(piv[i], piv[j]);
      spaces.emplace(wt, std::move(s));
    }
    prev_level = std::move(cur_level);
  }

  mod.dim = static_cast<int>(basis_words.size());
  mod.weights.reserve(mod.dim);
  for (auto& wt : basis_weights) mod.weights.push_back(wt);

  mpq_class want = weyl_dim(n, w.mu);
  if (mpq_class(mod.dim) != want)
    throw std::logic_error("constructed dimension " + std::to_string(mod.dim) +
                           " does not match the Weyl dimension " + rat_str(want));

  // coordinates of a word combination in the chosen basis of its weight space
  auto coords = [&](const std::map<Word, GaussScalar>& comb,
                    const WeightVec& wt) -> std::map<int, GaussScalar> {
    std::map<int, GaussScalar> out;
    if (comb.empty()) return out;
    auto it = spaces.find(wt);
    if (it == spaces.end()) return out;  // weight absent: combination lies in the radical
    const WSpace& s = it->second;
    int d = static_cast<int>(s.global.size());
    std::vector<GaussScalar> rhs(d, GaussScalar(0));
    for (int i = 0; i < d; ++i)
      for (const auto& [u, c] : comb) rhs[i] += c * ctx.shapovalov(s.words[i], u);
    auto sol = solve(s.gram, rhs);
    if (!sol) throw std::logic_error("inconsistent coordinate system in weight space");
    for (int i = 0; i < d; ++i)
      if (!(*sol)[i].is_zero()) out[s.global[i]] = (*sol)[i];
    return out;
  };

  // simple lowering / raising matrices
  mod.f_simple.assign(ns, Matrix(mod.dim, mod.dim));
  mod.e_simple.assign(ns, Matrix(mod.dim, mod.dim));
  for (int g = 0; g < mod.dim; ++g) {
    for (int a = 0; a < ns; ++a) {
      {
        Word u;
        u.reserve(basis_words[g].size() + 1);
        u.push_back(a);
        u.insert(u.end(), basis_words[g].begin(), basis_words[g].end());
        WeightVec wt = basis_weights[g];
        ctx.lower(a, wt);
        std::map<Word, GaussScalar> comb;
        comb.emplace(std::move(u), GaussScalar(1));
        for (const auto& [row, c] : coords(comb, wt)) mod.f_simple[a].at(row, g) = c;
      }
      {
        std::map<Word, GaussScalar> comb = ctx.raise(a, basis_words[g]);
        if (!comb.empty()) {
          WeightVec wt = ctx.word_weight(comb.begin()->first);
          for (const auto& [row, c] : coords(comb, wt)) mod.e_simple[a].at(row, g) = c;
        }
      }
    }
  }

  // Link the abstract construction to the concrete generators: normalize each
  // lowering element so that [e_a, f_a] equals the coroot exactly, then close
  // the span of known (element, matrix) pairs under brackets and express every
  // F_{ij} in the closure.
  std::vector<std::pair<SoElement, Matrix>> pairs;
  for (int j = 1; j <= m; ++j) {
    Matrix Hj(mod.dim, mod.dim);
    for (int g = 0; g < mod.dim; ++g) Hj.at(g, g) = GaussScalar(mpq_class(mod.weights[g][j - 1]));
    pairs.emplace_back(so_H(n, j), std::move(Hj));
  }
  for (int a = 0; a < ns; ++a) {
    SoElement e = simple_raising_element(n, ctx.simples[a]);
    SoElement fraw = simple_lowering_raw(n, ctx.simples[a]);
    SoElement h = coroot_element(n, ctx.simples[a]);
    SoElement br = so_bracket(e, fraw);
    // br must be a scalar multiple of h
    if (br.is_zero() || h.is_zero() || br.F.size() != h.F.size())
      throw std::logic_error("simple pair does not close on the coroot");
    GaussScalar c = br.F.begin()->second / h.F.begin()->second;
    SoElement scaled = c * h;
    if (!(scaled.F == br.F)) throw std::logic_error("simple pair does not close on the coroot");
    pairs.emplace_back(e, mod.e_simple[a]);
    pairs.emplace_back(c.inverse() * fraw, mod.f_simple[a]);
  }

  int P = n * (n - 1) / 2;
  RowReducer span;
  std::vector<std::pair<SoElement, Matrix>> closure;
  auto try_add = [&](const SoElement& el, const Matrix& mat) {
    if (el.is_zero()) return;
    if (span.insert(vectorize(el)) >= 0) closure.emplace_back(el, mat);
  };
  for (auto& [el, mat] : pairs) try_add(el, mat);
  for (size_t i = 0; i < closure.size() && span.rank() < P; ++i) {
    for (size_t j = 0; j < i && span.rank() < P; ++j) {
      SoElement br = so_bracket(closure[i].first, closure[j].first);
      if (br.is_zero()) continue;
      try_add(br, closure[i].second.commutator(closure[j].second));
    }
  }
  if (span.rank() < P) throw std::logic_error("bracket closure did not span so(n)");

  int K = static_cast<int>(closure.size());
  Matrix A(P, K);
  for (int k = 0; k < K; ++k)
    for (const auto& [idx, c] : vectorize(closure[k].first)) A.at(idx, k) = c;
  mod.Fmat.assign(P, Matrix(mod.dim, mod.dim));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      std::vector<GaussScalar> b(P, GaussScalar(0));
      b[flat_pair_index(n, i, j)] = GaussScalar(1);
      auto sol = solve(A, b);
      if (!sol) throw std::logic_error("F generator not expressible in closure");
      Matrix M(mod.dim, mod.dim);
      for (int k = 0; k < K; ++k)
        if (!(*sol)[k].is_zero()) M += (*sol)[k] * closure[k].second;
      mod.Fmat[flat_pair_index(n, i, j)] = std::move(M);
    }
  }
  return mod;
}

bool verify_representation(const SoModule& mod, std::string* why) {
  int n = mod.n;
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          SoElement br = so_bracket(so_F(n, i, j), so_F(n, k, l));
          Matrix want = mod.matrix_of(br);
          Matrix got = mod.F_of(i, j).commutator(mod.F_of(k, l));
          if (!(got == want))
            return fail("bracket mismatch on F" + std::to_string(i) + std::to_string(j) + ",F" +
                        std::to_string(k) + std::to_string(l));
        }
  // highest-weight vector: killed by raising Borel, weighted by mu under H_j
  for (const auto& b : borel_raising(n)) {
    Matrix M = mod.matrix_of(b);
    for (int r = 0; r < mod.dim; ++r)
      if (!M.at(r, 0).is_zero()) return fail("highest-weight vector not annihilated by " + b.str());
  }
  for (int j = 1; j <= n / 2; ++j) {
    Matrix M = mod.matrix_of(so_H(n, j));
    for (int r = 0; r < mod.dim; ++r) {
      GaussScalar want = r == 0 ? GaussScalar(mpq_class(mod.highest.mu[j - 1])) : M.at(r, 0);
      if (r == 0 && !(M.at(0, 0) == want)) return fail("highest weight eigenvalue mismatch");
    }
  }
  return true;
}

}  // namespace conformalk
