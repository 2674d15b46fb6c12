#include "conformalk/kn_algebra.hpp"

#include <cassert>
#include <sstream>

namespace conformalk {

namespace {

GaussScalar binom_gs(long p, long j) {
  if (j < 0 || p < 0 || j > p) return GaussScalar(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(j));
  return GaussScalar(mpq_class(b));
}

GaussScalar factorial_gs(int j) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(j));
  return GaussScalar(mpq_class(f));
}

// q (q-1) ... (q-k+1)
GaussScalar falling_gs(long q, int k) {
  mpz_class prod = 1;
  for (int t = 0; t < k; ++t) prod *= mpz_class(q - t);
  return GaussScalar(mpq_class(prod));
}

}  // namespace

void ConformalElement::add_term(int k, Mask I, GaussScalar c) {
  if (c.is_zero()) return;
  DKey key{k, I};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, std::move(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ConformalElement ConformalElement::apply_d(int times) const {
  ConformalElement out(n_);
  for (const auto& [key, c] : terms_) out.add_term(key.k + times, key.I, c);
  return out;
}

int ConformalElement::parity() const {
  int p = -2;
  for (const auto& [key, c] : terms_) {
    int q = mono_parity(key.I);
    if (p == -2)
      p = q;
    else if (p != q)
      return -1;
  }
  return p == -2 ? 0 : p;
}

ConformalElement ConformalElement::operator-() const {
  ConformalElement out(n_);
  for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
  return out;
}

ConformalElement& ConformalElement::operator+=(const ConformalElement& o) {
  if (terms_.empty() && n_ == 0) n_ = o.n_;
  assert(o.terms_.empty() || o.n_ == n_);
  for (const auto& [key, c] : o.terms_) add_term(key.k, key.I, c);
  return *this;
}

ConformalElement& ConformalElement::operator-=(const ConformalElement& o) {
  if (terms_.empty() && n_ == 0) n_ = o.n_;
  assert(o.terms_.empty() || o.n_ == n_);
  for (const auto& [key, c] : o.terms_) add_term(key.k, key.I, -c);
  return *this;
}

ConformalElement operator*(const GaussScalar& c, const ConformalElement& a) {
  ConformalElement out(a.n_);
  if (c.is_zero()) return out;
  for (const auto& [key, v] : a.terms_) out.terms_.emplace(key, c * v);
  return out;
}

std::string ConformalElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (key.k == 1)
      os << "*d";
    else if (key.k > 1)
      os << "*d^" << key.k;
    if (key.I != 0) os << "*" << format_monomial(key.I);
  }
  return os.str();
}

ConformalElement LambdaPoly1::coeff(int j) const {
  auto it = c_.find(j);
  return it == c_.end() ? ConformalElement(n_) : it->second;
}

void LambdaPoly1::add(int lpow, const ConformalElement& e) {
  if (e.is_zero()) return;
  auto it = c_.find(lpow);
  if (it == c_.end()) {
    c_.emplace(lpow, e);
  } else {
    it->second += e;
    if (it->second.is_zero()) c_.erase(it);
  }
}

LambdaPoly1& LambdaPoly1::operator+=(const LambdaPoly1& o) {
  if (c_.empty() && n_ == 0) n_ = o.n_;
  for (const auto& [j, e] : o.c_) add(j, e);
  return *this;
}

LambdaPoly1& LambdaPoly1::operator-=(const LambdaPoly1& o) {
  if (c_.empty() && n_ == 0) n_ = o.n_;
  for (const auto& [j, e] : o.c_) add(j, -e);
  return *this;
}

std::string LambdaPoly1::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [j, e] : c_) {
    if (!first) os << " + ";
    first = false;
    os << "[" << e.str() << "]";
    if (j == 1)
      os << "*l";
    else if (j > 1)
      os << "*l^" << j;
  }
  return os.str();
}

void LambdaPoly2::add(int lpow, int mpow, const ConformalElement& e) {
  if (e.is_zero()) return;
  auto key = std::make_pair(lpow, mpow);
  auto it = c_.find(key);
  if (it == c_.end()) {
    c_.emplace(key, e);
  } else {
    it->second += e;
    if (it->second.is_zero()) c_.erase(it);
  }
}

LambdaPoly2& LambdaPoly2::operator-=(const LambdaPoly2& o) {
  if (c_.empty() && n_ == 0) n_ = o.n_;
  for (const auto& [jk, e] : o.c_) add(jk.first, jk.second, -e);
  return *this;
}

namespace {

// Bracket of two pure Lambda(n) monomials (no d-powers), as a lambda-polynomial.
// corrupt_first_coeff replaces the (r-2) factor by (r-1) for the mutation
// self-test; it must stay false everywhere else.
LambdaPoly1 bracket_monomials(int n, Mask Ia, Mask Ib, bool corrupt_first_coeff) {
  LambdaPoly1 out(n);
  int r = mono_degree(Ia);
  int s = mono_degree(Ib);

  auto [sg, M] = mul_monomials(Ia, Ib);
  if (sg != 0) {
    ConformalElement dfg(n);
    long c0 = corrupt_first_coeff ? (r - 1) : (r - 2);
    dfg.add_term(1, M, GaussScalar(c0 * sg));
    out.add(0, dfg);
    ConformalElement lfg(n);
    lfg.add_term(0, M, GaussScalar(static_cast<long>(r + s - 4) * sg));
    out.add(1, lfg);
  }

  ConformalElement diag(n);
  Mask common = Ia & Ib;
  int rsign = (r & 1) ? -1 : 1;
  for (int i = 1; i <= n; ++i) {
    Mask bit = Mask(1) << (i - 1);
    if (!(common & bit)) continue;
    int sa = (epsilon_before(i, Ia) & 1) ? -1 : 1;
    int sb = (epsilon_before(i, Ib) & 1) ? -1 : 1;
    auto [s2, M2] = mul_monomials(Ia ^ bit, Ib ^ bit);
    if (s2 == 0) continue;
    diag.add_term(0, M2, GaussScalar(static_cast<long>(rsign) * sa * sb * s2));
  }
  out.add(0, diag);
  return out;
}

// lambda * p
LambdaPoly1 shift_lambda(const LambdaPoly1& p) {
  LambdaPoly1 out(p.n());
  for (const auto& [j, e] : p.coeffs()) out.add(j + 1, e);
  return out;
}

// (lambda + d) * p
LambdaPoly1 mul_lambda_plus_d(const LambdaPoly1& p) {
  LambdaPoly1 out(p.n());
  for (const auto& [j, e] : p.coeffs()) {
    out.add(j + 1, e);
    out.add(j, e.apply_d());
  }
  return out;
}

LambdaPoly1 scale(const GaussScalar& c, const LambdaPoly1& p) {
  LambdaPoly1 out(p.n());
  for (const auto& [j, e] : p.coeffs()) out.add(j, c * e);
  return out;
}

LambdaPoly1 lambda_bracket_impl(const ConformalElement& a, const ConformalElement& b,
                                bool corrupt) {
  int n = a.n() ? a.n() : b.n();
  LambdaPoly1 out(n);
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      LambdaPoly1 base = bracket_monomials(n, ka.I, kb.I, corrupt);
      for (int t = 0; t < kb.k; ++t) base = mul_lambda_plus_d(base);
      for (int t = 0; t < ka.k; ++t) base = scale(GaussScalar(-1), shift_lambda(base));
      out += scale(ca * cb, base);
    }
  }
  return out;
}

}  // namespace

LambdaPoly1 lambda_bracket(const ConformalElement& a, const ConformalElement& b) {
  return lambda_bracket_impl(a, b, false);
}

ConformalElement nth_product(const ConformalElement& a, int j, const ConformalElement& b) {
  LambdaPoly1 p = lambda_bracket(a, b);
  return factorial_gs(j) * p.coeff(j);
}

LambdaPoly1 subst_neg(const LambdaPoly1& p) {
  LambdaPoly1 out(p.n());
  for (const auto& [j, e] : p.coeffs()) {
    // (-lambda - d)^j e = (-1)^j sum_l binom(j, l) lambda^l d^{j-l} e
    GaussScalar sgn((j & 1) ? -1L : 1L);
    for (int l = 0; l <= j; ++l) {
      out.add(l, (sgn * binom_gs(j, l)) * e.apply_d(j - l));
    }
  }
  return out;
}

void AnnihilationElement::add_term(int m, Mask I, GaussScalar c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(m, I);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, std::move(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int AnnihilationElement::parity() const {
  int p = -2;
  for (const auto& [key, c] : terms_) {
    int q = mono_parity(key.second);
    if (p == -2)
      p = q;
    else if (p != q)
      return -1;
  }
  return p == -2 ? 0 : p;
}

bool AnnihilationElement::is_grade_homogeneous() const {
  int g = 0;
  bool seen = false;
  for (const auto& [key, c] : terms_) {
    int q = 2 * key.first + mono_degree(key.second) - 2;
    if (!seen) {
      g = q;
      seen = true;
    } else if (q != g) {
      return false;
    }
  }
  return true;
}

int AnnihilationElement::grade() const {
  assert(!terms_.empty() && is_grade_homogeneous());
  const auto& key = terms_.begin()->first;
  return 2 * key.first + mono_degree(key.second) - 2;
}

AnnihilationElement AnnihilationElement::dt() const {
  AnnihilationElement out(n_);
  for (const auto& [key, c] : terms_) {
    if (key.first == 0) continue;
    out.add_term(key.first - 1, key.second, GaussScalar(static_cast<long>(key.first)) * c);
  }
  return out;
}

AnnihilationElement AnnihilationElement::dxi(int i) const {
  AnnihilationElement out(n_);
  Mask bit = Mask(1) << (i - 1);
  for (const auto& [key, c] : terms_) {
    if (!(key.second & bit)) continue;
    int sg = (epsilon_before(i, key.second) & 1) ? -1 : 1;
    out.add_term(key.first, key.second ^ bit, GaussScalar(static_cast<long>(sg)) * c);
  }
  return out;
}

AnnihilationElement AnnihilationElement::mul_xi_left(int i) const {
  AnnihilationElement out(n_);
  Mask bit = Mask(1) << (i - 1);
  for (const auto& [key, c] : terms_) {
    auto [sg, M] = mul_monomials(bit, key.second);
    if (sg == 0) continue;
    out.add_term(key.first, M, GaussScalar(static_cast<long>(sg)) * c);
  }
  return out;
}

AnnihilationElement AnnihilationElement::operator-() const {
  AnnihilationElement out(n_);
  for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
  return out;
}

AnnihilationElement& AnnihilationElement::operator+=(const AnnihilationElement& o) {
  if (terms_.empty() && n_ == 0) n_ = o.n_;
  assert(o.terms_.empty() || o.n_ == n_);
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

AnnihilationElement& AnnihilationElement::operator-=(const AnnihilationElement& o) {
  if (terms_.empty() && n_ == 0) n_ = o.n_;
  assert(o.terms_.empty() || o.n_ == n_);
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
  return *this;
}

AnnihilationElement operator*(const GaussScalar& c, const AnnihilationElement& a) {
  AnnihilationElement out(a.n_);
  if (c.is_zero()) return out;
  for (const auto& [key, v] : a.terms_) out.terms_.emplace(key, c * v);
  return out;
}

AnnihilationElement operator*(const AnnihilationElement& a, const AnnihilationElement& b) {
  int n = a.n_ ? a.n_ : b.n_;
  AnnihilationElement out(n);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      auto [sg, M] = mul_monomials(ka.second, kb.second);
      if (sg == 0) continue;
      out.add_term(ka.first + kb.first, M, GaussScalar(static_cast<long>(sg)) * ca * cb);
    }
  }
  return out;
}

std::string AnnihilationElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (key.first == 1)
      os << "*t";
    else if (key.first > 1)
      os << "*t^" << key.first;
    if (key.second != 0) os << "*" << format_monomial(key.second);
  }
  return os.str();
}

AnnihilationElement conformal_to_ann(const ConformalElement& x, int q) {
  AnnihilationElement out(x.n());
  for (const auto& [key, c] : x.terms()) {
    GaussScalar coeff = c * falling_gs(q, key.k);
    if (key.k & 1) coeff = -coeff;
    if (coeff.is_zero()) continue;
    assert(q - key.k >= 0);
    out.add_term(q - key.k, key.I, coeff);
  }
  return out;
}

AnnihilationElement ann_bracket(const AnnihilationElement& A, const AnnihilationElement& B) {
  int n = A.n() ? A.n() : B.n();
  AnnihilationElement out(n);
  for (const auto& [ka, ca] : A.terms()) {
    for (const auto& [kb, cb] : B.terms()) {
      LambdaPoly1 lb = lambda_bracket(ConformalElement(n, 0, ka.second),
                                      ConformalElement(n, 0, kb.second));
      for (const auto& [j, e] : lb.coeffs()) {
        GaussScalar w = binom_gs(ka.first, j);
        if (w.is_zero()) continue;
        w *= factorial_gs(j) * ca * cb;
        AnnihilationElement piece = conformal_to_ann(e, ka.first + kb.first - j);
        out += w * piece;
      }
    }
  }
  return out;
}

AnnihilationElement contact_bracket(const AnnihilationElement& f,
                                    const AnnihilationElement& g) {
  int n = f.n() ? f.n() : g.n();
  AnnihilationElement out(n);
  for (const auto& [ka, ca] : f.terms()) {
    int p = ka.first;
    Mask I = ka.second;
    int dI = mono_degree(I);
    for (const auto& [kb, cb] : g.terms()) {
      int m = kb.first;
      Mask J = kb.second;
      int dJ = mono_degree(J);
      GaussScalar cc = ca * cb;

      // (2f - sum xi_i d_i f)(dt g) - (dt f)(2g - sum xi_i d_i g)
      auto [sg, M] = mul_monomials(I, J);
      if (sg != 0) {
        long euler = static_cast<long>(2 - dI) * m - static_cast<long>(p) * (2 - dJ);
        if (euler != 0 && p + m >= 1)
          out.add_term(p + m - 1, M, GaussScalar(euler * sg) * cc);
      }

      // (-1)^{p(f)} sum_i (d_i f)(d_i g)
      Mask common = I & J;
      int fsign = (dI & 1) ? -1 : 1;
      for (int i = 1; i <= n; ++i) {
        Mask bit = Mask(1) << (i - 1);
        if (!(common & bit)) continue;
        int sa = (epsilon_before(i, I) & 1) ? -1 : 1;
        int sb = (epsilon_before(i, J) & 1) ? -1 : 1;
        auto [s2, M2] = mul_monomials(I ^ bit, J ^ bit);
        if (s2 == 0) continue;
        out.add_term(p + m, M2, GaussScalar(static_cast<long>(fsign) * sa * sb * s2) * cc);
      }
    }
  }
  return out;
}

AnnihilationElement VectorField::apply(const AnnihilationElement& g) const {
  AnnihilationElement out = coeff_t * g.dt();
  for (int i = 1; i <= n; ++i) out += coeff_xi[i - 1] * g.dxi(i);
  return out;
}

VectorField to_vector_field(const AnnihilationElement& f) {
  int n = f.n();
  int pf = f.parity();
  assert(pf != -1);
  GaussScalar sgn(pf == 1 ? -1L : 1L);

  VectorField D;
  D.n = n;
  D.parity = pf;
  D.coeff_xi.resize(n, AnnihilationElement(n));
  AnnihilationElement a = GaussScalar(2) * f;
  AnnihilationElement fdt = f.dt();
  for (int i = 1; i <= n; ++i) {
    AnnihilationElement gi = sgn * (fdt.mul_xi_left(i) + f.dxi(i));
    D.coeff_xi[i - 1] = gi;
    a += gi * AnnihilationElement(n, 0, Mask(1) << (i - 1));
  }
  D.coeff_t = a;
  return D;
}

VectorField vf_commutator(const VectorField& a, const VectorField& b) {
  VectorField out;
  out.n = a.n;
  out.parity = (a.parity + b.parity) & 1;
  bool flip = (a.parity & b.parity) != 0;
  auto combine = [&](const AnnihilationElement& ca, const AnnihilationElement& cb) {
    AnnihilationElement r = a.apply(cb);
    AnnihilationElement s = b.apply(ca);
    return flip ? r + s : r - s;
  };
  out.coeff_t = combine(a.coeff_t, b.coeff_t);
  out.coeff_xi.resize(a.n, AnnihilationElement(a.n));
  for (int i = 0; i < a.n; ++i) out.coeff_xi[i] = combine(a.coeff_xi[i], b.coeff_xi[i]);
  return out;
}

namespace {

struct SweepResult {
  bool pass = true;
  long cases = 0;
  std::string detail;
};

// [a_l [b_m c]]
LambdaPoly2 bracket_outer_left(const ConformalElement& a, const LambdaPoly1& inner,
                               bool corrupt) {
  LambdaPoly2 out(a.n());
  for (const auto& [j, e] : inner.coeffs()) {
    LambdaPoly1 p = lambda_bracket_impl(a, e, corrupt);
    for (const auto& [l, x] : p.coeffs()) out.add(l, j, x);
  }
  return out;
}

// [P_{l+m} c] where P is a polynomial in l
LambdaPoly2 bracket_at_sum(const LambdaPoly1& P, const ConformalElement& c, bool corrupt) {
  LambdaPoly2 out(c.n());
  for (const auto& [j, e] : P.coeffs()) {
    LambdaPoly1 p = lambda_bracket_impl(e, c, corrupt);
    for (const auto& [k, x] : p.coeffs()) {
      // (l+m)^k expansion; the extra l^j factor from P's own variable.
      for (int l = 0; l <= k; ++l) out.add(j + l, k - l, binom_gs(k, l) * x);
    }
  }
  return out;
}

// [b_m [a_l c]]
LambdaPoly2 bracket_outer_right(const ConformalElement& b, const LambdaPoly1& inner,
                                bool corrupt) {
  LambdaPoly2 out(b.n());
  for (const auto& [j, e] : inner.coeffs()) {
    LambdaPoly1 p = lambda_bracket_impl(b, e, corrupt);
    for (const auto& [m, x] : p.coeffs()) out.add(j, m, x);
  }
  return out;
}

SweepResult sweep_sesquilinearity(int n) {
  SweepResult r;
  Mask top = full_mask(n);
  for (Mask I = 0; I <= top; ++I) {
    for (Mask J = 0; J <= top; ++J) {
      for (int ka = 0; ka <= 1 && r.pass; ++ka) {
        for (int kb = 0; kb <= 1 && r.pass; ++kb) {
          ConformalElement a(n, ka, I), b(n, kb, J);
          LambdaPoly1 base = lambda_bracket(a, b);
          LambdaPoly1 lhs1 = lambda_bracket(a.apply_d(), b);
          LambdaPoly1 want1 = scale(GaussScalar(-1), shift_lambda(base));
          LambdaPoly1 lhs2 = lambda_bracket(a, b.apply_d());
          LambdaPoly1 want2 = mul_lambda_plus_d(base);
          ++r.cases;
          if (!(lhs1 == want1) || !(lhs2 == want2)) {
            r.pass = false;
            r.detail = "failed at a=" + a.str() + ", b=" + b.str();
          }
        }
      }
    }
  }
  return r;
}

SweepResult sweep_skew(int n, bool corrupt) {
  SweepResult r;
  Mask top = full_mask(n);
  for (Mask I = 0; I <= top && r.pass; ++I) {
    for (Mask J = 0; J <= top && r.pass; ++J) {
      for (int ka = 0; ka <= 1 && r.pass; ++ka) {
        for (int kb = 0; kb <= 1; ++kb) {
          ConformalElement a(n, ka, I), b(n, kb, J);
          LambdaPoly1 lhs = lambda_bracket_impl(a, b, corrupt);
          LambdaPoly1 rhs = subst_neg(lambda_bracket_impl(b, a, corrupt));
          bool both_odd = mono_parity(I) && mono_parity(J);
          LambdaPoly1 want(n);
          want -= rhs;
          if (both_odd) want = scale(GaussScalar(-1), want);
          ++r.cases;
          if (!(lhs == want)) {
            r.pass = false;
            r.detail = "failed at a=" + a.str() + ", b=" + b.str();
            break;
          }
        }
      }
    }
  }
  return r;
}

SweepResult sweep_jacobi(int n, bool corrupt) {
  SweepResult r;
  Mask top = full_mask(n);
  for (Mask I = 0; I <= top && r.pass; ++I) {
    for (Mask J = 0; J <= top && r.pass; ++J) {
      for (Mask K = 0; K <= top; ++K) {
        ConformalElement a(n, 0, I), b(n, 0, J), c(n, 0, K);
        LambdaPoly2 lhs = bracket_outer_left(a, lambda_bracket_impl(b, c, corrupt), corrupt);
        LambdaPoly2 rhs = bracket_at_sum(lambda_bracket_impl(a, b, corrupt), c, corrupt);
        LambdaPoly2 mid = bracket_outer_right(b, lambda_bracket_impl(a, c, corrupt), corrupt);
        bool both_odd = mono_parity(I) && mono_parity(J);
        for (const auto& [jk, e] : mid.coeffs())
          rhs.add(jk.first, jk.second, both_odd ? -e : e);
        lhs -= rhs;
        ++r.cases;
        if (!lhs.is_zero()) {
          r.pass = false;
          r.detail = "failed at (" + a.str() + ", " + b.str() + ", " + c.str() + ")";
          break;
        }
      }
    }
  }
  return r;
}

SweepResult sweep_grading(int n, int tmax) {
  SweepResult r;
  Mask top = full_mask(n);
  for (int p = 0; p <= tmax && r.pass; ++p) {
    for (int m = 0; m <= tmax && r.pass; ++m) {
      for (Mask I = 0; I <= top && r.pass; ++I) {
        for (Mask J = 0; J <= top; ++J) {
          AnnihilationElement x(n, p, I), y(n, m, J);
          AnnihilationElement br = ann_bracket(x, y);
          ++r.cases;
          if (br.is_zero()) continue;
          if (!br.is_grade_homogeneous() || br.grade() != x.grade() + y.grade()) {
            r.pass = false;
            r.detail = "failed at x=" + x.str() + ", y=" + y.str();
            break;
          }
        }
      }
    }
  }
  return r;
}

SweepResult sweep_consistency(int n, int tmax) {
  SweepResult r;
  Mask top = full_mask(n);
  for (int p = 0; p <= tmax && r.pass; ++p) {
    for (int m = 0; m <= tmax && r.pass; ++m) {
      for (Mask I = 0; I <= top && r.pass; ++I) {
        for (Mask J = 0; J <= top; ++J) {
          AnnihilationElement x(n, p, I), y(n, m, J);
          AnnihilationElement a = ann_bracket(x, y);
          AnnihilationElement c = contact_bracket(x, y);
          ++r.cases;
          if (!(a == c)) {
            r.pass = false;
            r.detail = "ann/contact mismatch at x=" + x.str() + ", y=" + y.str();
            break;
          }
          VectorField D = vf_commutator(to_vector_field(x), to_vector_field(y));
          if (!(to_vector_field(a) == D)) {
            r.pass = false;
            r.detail = "vector-field mismatch at x=" + x.str() + ", y=" + y.str();
            break;
          }
        }
      }
    }
  }
  return r;
}

SweepResult check_pins(int n) {
  SweepResult r;
  auto fail = [&](const std::string& what) {
    r.pass = false;
    if (r.detail.empty()) r.detail = what;
  };

  // [1_l 1] = -2 d - 4 l
  LambdaPoly1 b11 = lambda_bracket(ConformalElement(n, 0, 0), ConformalElement(n, 0, 0));
  LambdaPoly1 want(n);
  want.add(0, ConformalElement(n, 1, 0, GaussScalar(-2)));
  want.add(1, ConformalElement(n, 0, 0, GaussScalar(-4)));
  ++r.cases;
  if (!(b11 == want)) fail("[1_l 1]");

  // [t, 1] = -2
  AnnihilationElement t(n, 1, 0), one(n, 0, 0);
  ++r.cases;
  if (!(ann_bracket(t, one) == GaussScalar(-2) * one)) fail("[t,1]");

  // grades: deg 1 = -2, deg t = 0
  ++r.cases;
  if (one.grade() != -2 || t.grade() != 0) fail("grades");

  // pins involving xi_1 only make sense for n >= 1
  if (n >= 1) {
    // [t x1, x1] = -t
    AnnihilationElement tx1(n, 1, 1), x1(n, 0, 1);
    ++r.cases;
    if (!(ann_bracket(tx1, x1) == -t)) fail("[t x1, x1]");

    // grades: deg x_i = -1, deg t x1 = 1
    ++r.cases;
    if (x1.grade() != -1 || tx1.grade() != 1) fail("grades(xi)");

    // vector field: x1 -> x1 dt - dxi1
    VectorField D = to_vector_field(x1);
    VectorField W;
    W.n = n;
    W.parity = 1;
    W.coeff_t = x1;
    W.coeff_xi.assign(n, AnnihilationElement(n));
    W.coeff_xi[0] = GaussScalar(-1) * one;
    ++r.cases;
    if (!(D == W)) fail("vf(x1)");
  }

  // vector fields: t -> 2t dt + sum xi_i dxi_i; 1 -> 2 dt
  {
    VectorField D = to_vector_field(t);
    VectorField W;
    W.n = n;
    W.parity = 0;
    W.coeff_t = GaussScalar(2) * t;
    W.coeff_xi.assign(n, AnnihilationElement(n));
    for (int i = 1; i <= n; ++i) W.coeff_xi[i - 1] = AnnihilationElement(n, 0, Mask(1) << (i - 1));
    ++r.cases;
    if (!(D == W)) fail("vf(t)");
  }
  {
    VectorField D = to_vector_field(one);
    VectorField W;
    W.n = n;
    W.parity = 0;
    W.coeff_t = GaussScalar(2) * one;
    W.coeff_xi.assign(n, AnnihilationElement(n));
    ++r.cases;
    if (!(D == W)) fail("vf(1)");
  }
  return r;
}

}  // namespace

AxiomReport check_axioms(int n, int tmax) {
  AxiomReport rep;
  rep.n = n;
  rep.tmax = tmax;

  auto push = [&](const std::string& name, const SweepResult& r) {
    rep.items.push_back({name, r.pass, r.cases, r.detail});
  };

  push("sesquilinearity", sweep_sesquilinearity(n));
  push("skew_symmetry", sweep_skew(n, false));
  push("jacobi", sweep_jacobi(n, false));
  push("grading_additivity", sweep_grading(n, tmax));
  push("bracket_consistency", sweep_consistency(n, tmax));
  push("pinned_values", check_pins(n));

  // A deliberately corrupted bracket must be caught by the sweeps.
  {
    SweepResult skew = sweep_skew(std::min(n, 2), true);
    SweepResult jac = sweep_jacobi(std::min(n, 2), true);
    SweepResult mut;
    mut.cases = skew.cases + jac.cases;
    mut.pass = !skew.pass || !jac.pass;
    if (!mut.pass) mut.detail = "corrupted bracket slipped through";
    push("mutation_detected", mut);
  }

  rep.all_pass = true;
  for (const auto& it : rep.items) rep.all_pass = rep.all_pass && it.pass;
  return rep;
}

}  // namespace conformalk
