#include "conformalk/contact_forms.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "conformalk/grassmann.hpp"

namespace conformalk {

namespace {

GaussScalar binom_gs(unsigned long a, unsigned long b) {
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), a, b);
  return GaussScalar(mpq_class(z));
}

Mask bit(int i) { return Mask(1) << (i - 1); }

// Raw term maps: side- and truncation-agnostic workspace for the algebra.
using FMap = std::map<FormMonomial, GaussScalar>;

void fmadd(FMap& m, const FormMonomial& key, const GaussScalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = m.try_emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

void fmadd_scaled(FMap& m, const FMap& o, const GaussScalar& c) {
  for (auto& [k, v] : o) fmadd(m, k, c * v);
}

FMap fmwedge(const FMap& a, const FMap& b) {
  FMap out;
  for (auto& [x, cx] : a)
    for (auto& [y, cy] : b) {
      if (x.dtFlag && y.dtFlag) continue;
      auto [sg, I] = mul_monomials(x.I, y.I);
      if (sg == 0) continue;
      if (mono_degree(y.I) % 2 == 1 && x.dtFlag) sg = -sg;
      FormMonomial z;
      z.tPow = x.tPow + y.tPow;
      z.I = I;
      z.dtFlag = x.dtFlag + y.dtFlag;
      z.dxi = x.dxi;
      for (size_t i = 0; i < z.dxi.size(); ++i) z.dxi[i] += y.dxi[i];
      fmadd(out, z, GaussScalar(mpq_class(sg)) * cx * cy);
    }
  return out;
}

FMap fmd(const FMap& a) {
  FMap out;
  for (auto& [x, c] : a) {
    if (x.tPow != 0 && x.dtFlag == 0) {
      FormMonomial z = x;
      z.tPow -= 1;
      z.dtFlag = 1;
      int sg = mono_degree(x.I) % 2 ? -1 : 1;
      fmadd(out, z, GaussScalar(mpq_class(sg * x.tPow)) * c);
    }
    int pos = 0;
    for (int i = 1; i <= static_cast<int>(x.dxi.size()); ++i) {
      if (!(x.I & bit(i))) continue;
      FormMonomial z = x;
      z.I &= ~bit(i);
      z.dxi[i - 1] += 1;
      fmadd(out, z, GaussScalar(mpq_class(pos % 2 ? -1 : 1)) * c);
      ++pos;
    }
  }
  return out;
}

FMap ann_to_fmap(int n, const AnnihilationElement& g) {
  FMap out;
  for (auto& [key, c] : g.terms()) {
    FormMonomial z;
    z.tPow = key.first;
    z.I = key.second;
    z.dxi.assign(n, 0);
    fmadd(out, z, c);
  }
  return out;
}

FormElement wrap(int n, Side side, const FormTrunc& tr, const FMap& m,
                 bool project_minus = false) {
  FormElement out(n, side, tr);
  for (auto& [key, c] : m) {
    if (project_minus && side == Side::Minus && key.tPow >= 0) continue;
    out.add_term(key, c);
  }
  return out;
}

FMap to_fmap(const FormElement& a) { return a.terms(); }

FormMonomial unit_monomial(int n) {
  FormMonomial m;
  m.dxi.assign(n, 0);
  return m;
}

FMap omega_fmap(int n) {
  FMap w;
  FormMonomial dt = unit_monomial(n);
  dt.dtFlag = 1;
  fmadd(w, dt, GaussScalar(mpq_class(1)));
  for (int i = 1; i <= n; ++i) {
    FormMonomial xd = unit_monomial(n);
    xd.I = bit(i);
    xd.dxi[i - 1] = 1;
    fmadd(w, xd, GaussScalar(mpq_class(-1)));
  }
  return w;
}

// Lie derivative on the raw map, no side projection.
FMap lie_fmap(int n, const AnnihilationElement& D, const FMap& a) {
  FMap out;
  if (D.is_zero() || a.empty()) return out;
  if (D.parity() == -1) {
    AnnihilationElement ev(n), od(n);
    for (auto& [key, c] : D.terms())
      (mono_degree(key.second) % 2 ? od : ev).add_term(key.first, key.second, c);
    out = lie_fmap(n, ev, a);
    fmadd_scaled(out, lie_fmap(n, od, a), GaussScalar(mpq_class(1)));
    return out;
  }
  VectorField X = to_vector_field(D);
  int pD = X.parity;
  GaussScalar csign(mpq_class(pD ? -1 : 1));
  FMap Xt = ann_to_fmap(n, X.coeff_t);
  FMap dXt = fmd(Xt);
  std::vector<FMap> Xxi(n), dXxi(n);
  for (int i = 0; i < n; ++i) {
    Xxi[i] = ann_to_fmap(n, X.coeff_xi[i]);
    dXxi[i] = fmd(Xxi[i]);
  }

  for (auto& [m, cm] : a) {
    // factor list of the monomial in canonical order
    struct Factor {
      FMap val;     // the factor itself
      FMap lval;    // its Lie derivative
      int par = 0;  // factor parity
    };
    std::vector<Factor> fs;
    if (m.tPow != 0) {
      FormMonomial t = unit_monomial(n);
      t.tPow = m.tPow;
      FormMonomial tm1 = unit_monomial(n);
      tm1.tPow = m.tPow - 1;
      FMap tpow{{t, GaussScalar(mpq_class(1))}};
      FMap low{{tm1, GaussScalar(mpq_class(m.tPow))}};
      fs.push_back({std::move(tpow), fmwedge(low, Xt), 0});
    }
    for (int i = 1; i <= n; ++i) {
      if (!(m.I & bit(i))) continue;
      FormMonomial x = unit_monomial(n);
      x.I = bit(i);
      fs.push_back({FMap{{x, GaussScalar(mpq_class(1))}}, Xxi[i - 1], 1});
    }
    if (m.dtFlag) {
      FormMonomial x = unit_monomial(n);
      x.dtFlag = 1;
      FMap ld;
      fmadd_scaled(ld, dXt, csign);
      fs.push_back({FMap{{x, GaussScalar(mpq_class(1))}}, std::move(ld), 1});
    }
    for (int i = 1; i <= n; ++i)
      for (int r = 0; r < m.dxi[i - 1]; ++r) {
        FormMonomial x = unit_monomial(n);
        x.dxi[i - 1] = 1;
        FMap ld;
        fmadd_scaled(ld, dXxi[i - 1], csign);
        fs.push_back({FMap{{x, GaussScalar(mpq_class(1))}}, std::move(ld), 0});
      }

    // suffix products, then one derivation term per factor
    int K = static_cast<int>(fs.size());
    std::vector<FMap> suffix(K + 1);
    suffix[K] = FMap{{unit_monomial(n), GaussScalar(mpq_class(1))}};
    for (int j = K - 1; j >= 0; --j) suffix[j] = fmwedge(fs[j].val, suffix[j + 1]);
    FMap prefix{{unit_monomial(n), GaussScalar(mpq_class(1))}};
    int ppar = 0;
    for (int j = 0; j < K; ++j) {
      FMap term = fmwedge(prefix, fmwedge(fs[j].lval, suffix[j + 1]));
      GaussScalar sg(mpq_class((pD && ppar % 2) ? -1 : 1));
      fmadd_scaled(out, term, sg * cm);
      prefix = fmwedge(prefix, fs[j].val);
      ppar += fs[j].par;
    }
  }
  return out;
}

// pivot order dt > dxi_1 > ... > dxi_n > xi_1 > ... > xi_n > t
bool pivot_before(const FormMonomial& x, const FormMonomial& y) {
  if (x.dtFlag != y.dtFlag) return x.dtFlag > y.dtFlag;
  if (x.dxi != y.dxi) return x.dxi > y.dxi;
  int n = static_cast<int>(x.dxi.size());
  for (int i = 1; i <= n; ++i) {
    bool bx = x.I & bit(i), by = y.I & bit(i);
    if (bx != by) return bx > by;
  }
  return x.tPow > y.tPow;
}

std::vector<std::vector<int>> multidegrees(int n, int s) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
  };
  if (n == 0) {
    if (s == 0) out.push_back({});
    return out;
  }
  rec(0, s);
  return out;
}

SparseVec to_row(const FMap& m, const std::map<FormMonomial, int>& index) {
  SparseVec row;
  for (auto& [key, c] : m) {
    auto it = index.find(key);
    if (it == index.end()) throw std::logic_error("monomial outside the component");
    row[it->second] = c;
  }
  return row;
}

struct IdealSlice {
  std::vector<FormMonomial> cols;
  std::map<FormMonomial, int> index;
  RowReducer red;
};

IdealSlice ideal_slice(int n, int k, Side side, int w) {
  IdealSlice s;
  s.cols = component_monomials(n, k, side, w);
  for (int j = 0; j < static_cast<int>(s.cols.size()); ++j) s.index[s.cols[j]] = j;
  if (k >= 1) {
    FMap om = omega_fmap(n);
    for (auto& b : component_monomials(n, k - 1, side, w - 2)) {
      FMap row = fmwedge(om, FMap{{b, GaussScalar(mpq_class(1))}});
      s.red.insert(to_row(row, s.index));
    }
    if (k >= 2) {
      FMap dom = fmd(om);
      for (auto& g : component_monomials(n, k - 2, side, w - 2)) {
        FMap row = fmwedge(dom, FMap{{g, GaussScalar(mpq_class(1))}});
        s.red.insert(to_row(row, s.index));
      }
    }
  }
  s.red.normalize();
  return s;
}

FMap from_row(const SparseVec& row, const std::vector<FormMonomial>& cols) {
  FMap out;
  for (auto& [j, c] : row) fmadd(out, cols[j], c);
  return out;
}

// homotopy in the xi_n / dxi_n direction
FMap homotopy_K(int n, const FMap& a) {
  FMap out;
  for (auto& [m, c] : a) {
    if (m.I & bit(n)) continue;
    if (m.dxi[n - 1] == 0) continue;
    FormMonomial z = m;
    z.I |= bit(n);
    z.dxi[n - 1] -= 1;
    int sg = mono_degree(m.I) % 2 ? -1 : 1;
    fmadd(out, z, GaussScalar(mpq_class(sg)) * c);
  }
  return out;
}

std::vector<FormMonomial> side_monomials(int n, Side side, int tmax, int kmax) {
  std::vector<FormMonomial> out;
  Mask full = full_mask(n);
  for (int k = 0; k <= kmax; ++k)
    for (int eps = 0; eps <= std::min(1, k); ++eps)
      for (auto& c : multidegrees(n, k - eps))
        for (Mask I = 0; I <= full; ++I)
          for (int t = 0; t <= tmax; ++t) {
            FormMonomial m;
            m.tPow = side == Side::Plus ? t : -1 - t;
            m.I = I;
            m.dtFlag = eps;
            m.dxi = c;
            out.push_back(std::move(m));
          }
  return out;
}

std::pair<int, int> weight_range(int n, Side side, int kmax, int tmax) {
  if (side == Side::Plus) return {0, 2 * tmax};
  return {-2 * tmax, n + kmax + 1};
}

GaussScalar ratio_on(const SparseVec& num, const SparseVec& den, bool* ok) {
  *ok = false;
  if (den.empty()) return GaussScalar(mpq_class(0));
  GaussScalar r = GaussScalar(mpq_class(0));
  auto& [j0, c0] = *den.begin();
  auto it = num.find(j0);
  if (it != num.end()) r = it->second / c0;
  SparseVec rest = sparse_sub_scaled(num, r, den);
  *ok = rest.empty();
  return r;
}

}  // namespace

int form_degree(const FormMonomial& m) {
  int s = m.dtFlag;
  for (int c : m.dxi) s += c;
  return s;
}

int form_weight(const FormMonomial& m) {
  int s = 2 * m.tPow + mono_degree(m.I) + 2 * m.dtFlag;
  for (int c : m.dxi) s += c;
  return s;
}

int form_parity(const FormMonomial& m) { return (mono_degree(m.I) + m.dtFlag) % 2; }

FormElement::FormElement(int n, Side side, FormTrunc tr)
    : n_(n), side_(side), tr_(tr) {}

FormElement& FormElement::add_term(const FormMonomial& m, const GaussScalar& c) {
  if (c.is_zero()) return *this;
  if (static_cast<int>(m.dxi.size()) != n_)
    throw std::domain_error("multidegree size mismatch");
  if (side_ == Side::Plus && m.tPow < 0)
    throw std::domain_error("plus-side form with negative t-power");
  if (side_ == Side::Minus && m.tPow > -1)
    throw std::domain_error("minus-side form with t-power above -1");
  if (std::abs(m.tPow) > tr_.tMax || form_degree(m) > tr_.cMax)
    throw std::runtime_error("truncation overflow: t-power " +
                             std::to_string(m.tPow) + ", degree " +
                             std::to_string(form_degree(m)));
  fmadd(terms_, m, c);
  return *this;
}

FormElement FormElement::operator-() const {
  FormElement out(n_, side_, tr_);
  for (auto& [k, c] : terms_) out.terms_[k] = -c;
  return out;
}

FormElement& FormElement::operator+=(const FormElement& o) {
  for (auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

FormElement& FormElement::operator-=(const FormElement& o) {
  for (auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

FormElement operator*(const GaussScalar& c, FormElement a) {
  FMap out;
  for (auto& [k, v] : a.terms_) fmadd(out, k, c * v);
  a.terms_ = std::move(out);
  return a;
}

std::string FormElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (m.tPow != 0) os << "*t^" << m.tPow;
    if (m.I) os << "*" << format_monomial(m.I);
    if (m.dtFlag) os << "*dt";
    for (int i = 1; i <= n_; ++i)
      if (m.dxi[i - 1]) {
        os << "*dx" << i;
        if (m.dxi[i - 1] > 1) os << "^" << m.dxi[i - 1];
      }
  }
  return os.str();
}

FormElement wedge(const FormElement& a, const FormElement& b) {
  if (a.n() != b.n() || a.side() != b.side())
    throw std::invalid_argument("wedge of mismatched forms");
  return wrap(a.n(), a.side(), a.trunc(), fmwedge(a.terms(), b.terms()));
}

FormElement d_form(const FormElement& a) {
  return wrap(a.n(), a.side(), a.trunc(), fmd(a.terms()));
}

FormElement contact_omega(int n, FormTrunc tr) {
  return wrap(n, Side::Plus, tr, omega_fmap(n));
}

FormElement lie_derivative(const AnnihilationElement& D, const FormElement& a) {
  return wrap(a.n(), a.side(), a.trunc(), lie_fmap(a.n(), D, a.terms()), true);
}

FormElement so_lie(const SoElement& X, const FormElement& a) {
  return lie_derivative(X.to_annihilation(), a);
}

FormElement e00_lie(const FormElement& a) {
  return lie_derivative(AnnihilationElement(a.n(), 1, 0), a);
}

std::vector<FormMonomial> component_monomials(int n, int k, Side side, int w) {
  std::vector<FormMonomial> out;
  if (k < 0) return out;
  Mask full = full_mask(n);
  for (int eps = 0; eps <= std::min(1, k); ++eps)
    for (auto& c : multidegrees(n, k - eps))
      for (Mask I = 0; I <= full; ++I) {
        int twice_a = w - mono_degree(I) - k - eps;
        if (twice_a % 2 != 0) continue;
        int a = twice_a / 2;
        if (side == Side::Plus ? a < 0 : a > -1) continue;
        FormMonomial m;
        m.tPow = a;
        m.I = I;
        m.dtFlag = eps;
        m.dxi = c;
        out.push_back(std::move(m));
      }
  std::sort(out.begin(), out.end(), pivot_before);
  return out;
}

std::vector<FormElement> ideal_component(int n, int k, Side side, int w) {
  IdealSlice s = ideal_slice(n, k, side, w);
  std::vector<FormElement> out;
  for (auto& [pivot, row] : s.red.rows())
    out.push_back(wrap(n, side, FormTrunc{}, from_row(row, s.cols)));
  return out;
}

const ComplexComponent* QuotientComplex::find(int k, int w) const {
  auto it = comps.find({k, w});
  return it == comps.end() ? nullptr : &it->second;
}

QuotientComplex quotient_complex(int n, Side side, int kmax, int tmax) {
  QuotientComplex cx;
  cx.n = n;
  cx.side = side;
  cx.kmax = kmax;
  cx.tmax = tmax;
  auto [wlo, whi] = weight_range(n, side, kmax, tmax);
  cx.wlo = wlo;
  cx.whi = whi;

  for (int k = 0; k <= kmax; ++k)
    for (int w = wlo; w <= whi; ++w) {
      IdealSlice s = ideal_slice(n, k, side, w);
      ComplexComponent comp;
      comp.k = k;
      comp.w = w;
      comp.dim_full = static_cast<int>(s.cols.size());
      comp.dim_ideal = s.red.rank();
      for (auto& m : s.cols)
        if (!s.red.is_pivot(s.index[m])) comp.qbasis.push_back(m);
      comp.cols = std::move(s.cols);
      comp.ideal = std::move(s.red);
      cx.comps[{k, w}] = std::move(comp);
    }

  for (int k = 0; k < kmax; ++k)
    for (int w = wlo; w <= whi; ++w) {
      ComplexComponent& src = cx.comps[{k, w}];
      ComplexComponent& dst = cx.comps[{k + 1, w}];
      std::map<FormMonomial, int> dst_index, dst_qindex;
      for (int j = 0; j < static_cast<int>(dst.cols.size()); ++j)
        dst_index[dst.cols[j]] = j;
      for (int j = 0; j < static_cast<int>(dst.qbasis.size()); ++j)
        dst_qindex[dst.qbasis[j]] = j;
      src.dmat = Matrix(static_cast<int>(dst.qbasis.size()),
                        static_cast<int>(src.qbasis.size()));
      for (int j = 0; j < static_cast<int>(src.qbasis.size()); ++j) {
        FMap dd = fmd(FMap{{src.qbasis[j], GaussScalar(mpq_class(1))}});
        SparseVec rem = dst.ideal.reduce(to_row(dd, dst_index));
        for (auto& [col, c] : rem)
          src.dmat.at(dst_qindex.at(dst.cols[col]), j) = c;
      }
      src.has_dmat = true;

      // invariance spot checks on the first ideal row, when present
      if (!src.ideal.rows().empty()) {
        auto& row0 = src.ideal.rows().begin()->second;
        FMap r0 = from_row(row0, src.cols);
        SparseVec dr = dst.ideal.reduce(to_row(fmd(r0), dst_index));
        if (!dr.empty())
          throw std::logic_error("ideal slice is not closed under d");
        if (n >= 2) {
          std::map<FormMonomial, int> src_index;
          for (int j = 0; j < static_cast<int>(src.cols.size()); ++j)
            src_index[src.cols[j]] = j;
          AnnihilationElement F12(n, 0, bit(1) | bit(2), GaussScalar(mpq_class(-1)));
          FMap lr = lie_fmap(n, F12, r0);
          if (side == Side::Minus) {
            FMap proj;
            for (auto& [key, c] : lr)
              if (key.tPow < 0) fmadd(proj, key, c);
            lr = std::move(proj);
          }
          if (!src.ideal.reduce(to_row(lr, src_index)).empty())
            throw std::logic_error("ideal slice is not so(n)-invariant");
        }
      }
    }
  return cx;
}

std::string ExactnessReport::str() const {
  std::ostringstream os;
  for (auto& [k, d] : level_defect)
    os << "level " << k << ": kernel " << level_kernel.at(k) << ", defect " << d
       << "\n";
  return os.str();
}

ExactnessReport exactness_check(const QuotientComplex& cx) {
  ExactnessReport rp;
  for (int k = 0; k + 1 <= cx.kmax; ++k) {
    rp.level_defect[k] = 0;
    rp.level_kernel[k] = 0;
    for (int w = cx.wlo; w <= cx.whi; ++w) {
      const ComplexComponent* c = cx.find(k, w);
      if (!c || !c->has_dmat) continue;
      int dim_q = static_cast<int>(c->qbasis.size());
      int ker = dim_q - c->dmat.rank();
      int im = 0;
      if (k >= 1) {
        const ComplexComponent* p = cx.find(k - 1, w);
        if (p && p->has_dmat) im = p->dmat.rank();
      }
      int defect = ker - im;
      if (cx.side == Side::Plus && k == 0 && w == 0) defect -= 1;  // constants
      rp.level_kernel[k] += ker;
      rp.level_defect[k] += defect;
      if (dim_q > 0 || defect != 0)
        rp.items.push_back({k, w, dim_q, ker, im, defect});
    }
  }
  return rp;
}

HomotopyReport homotopy_check(int n, int tmax, int kmax) {
  HomotopyReport rp;
  for (auto& m : side_monomials(n, Side::Plus, tmax, kmax)) {
    FMap nu{{m, GaussScalar(mpq_class(1))}};
    FMap lhs = fmd(homotopy_K(n, nu));
    fmadd_scaled(lhs, homotopy_K(n, fmd(nu)), GaussScalar(mpq_class(1)));
    FMap rhs = nu;
    if (!(m.I & bit(n)) && m.dxi[n - 1] == 0)
      fmadd(rhs, m, GaussScalar(mpq_class(-1)));  // epsilon(nu) = nu
    fmadd_scaled(lhs, rhs, GaussScalar(mpq_class(-1)));
    ++rp.cases;
    if (!lhs.empty()) {
      rp.detail = "Kd+dK != Id-eps on " +
                  wrap(n, Side::Plus, FormTrunc{}, nu).str();
      return rp;
    }
  }
  rp.ok = true;
  return rp;
}

HomotopyReport d_squared_check(int n, int tmax, int kmax) {
  HomotopyReport rp;
  for (Side side : {Side::Plus, Side::Minus})
    for (auto& m : side_monomials(n, side, tmax, kmax)) {
      FMap nu{{m, GaussScalar(mpq_class(1))}};
      ++rp.cases;
      if (!fmd(fmd(nu)).empty()) {
        rp.detail = "d(d(m)) != 0 on " + wrap(n, side, FormTrunc{}, nu).str();
        return rp;
      }
    }
  rp.ok = true;
  return rp;
}

GammaInfo gamma_weights(int n, int k, Side side) {
  if (n < 2) throw std::invalid_argument("needs n >= 2");
  GammaInfo info;
  FMap v;
  if (side == Side::Plus) {
    // (dxi_1 + i dxi_2)^k
    for (int j = 0; j <= k; ++j) {
      FormMonomial m = unit_monomial(n);
      m.dxi[0] = k - j;
      m.dxi[1] = j;
      GaussScalar c = binom_gs(k, j);
      for (int r = 0; r < j; ++r) c = c * GaussScalar::i();
      fmadd(v, m, c);
    }
  } else {
    // t^{-1} xi_* (dxi_1 - i dxi_2)^k
    for (int j = 0; j <= k; ++j) {
      FormMonomial m = unit_monomial(n);
      m.tPow = -1;
      m.I = full_mask(n);
      m.dxi[0] = k - j;
      m.dxi[1] = j;
      GaussScalar c = binom_gs(k, j);
      for (int r = 0; r < j; ++r) c = c * (-GaussScalar::i());
      fmadd(v, m, c);
    }
  }
  int w = form_weight(v.begin()->first);
  IdealSlice s = ideal_slice(n, k, side, w);
  SparseVec rv = s.red.reduce(to_row(v, s.index));
  if (rv.empty()) {
    info.detail = "vector lies in the ideal";
    return info;
  }

  auto project = [&](const FMap& f) {
    FMap out;
    for (auto& [key, c] : f)
      if (side == Side::Plus || key.tPow < 0) fmadd(out, key, c);
    return out;
  };
  auto eig_of = [&](const FMap& image, bool* ok) {
    return ratio_on(s.red.reduce(to_row(project(image), s.index)), rv, ok);
  };

  int m = n / 2;
  bool ok = true;
  FMap e00 = lie_fmap(n, AnnihilationElement(n, 1, 0), v);
  bool rok = false;
  GaussScalar mu0 = eig_of(e00, &rok);
  ok = ok && rok && mu0.is_real();
  std::vector<mpq_class> mu;
  for (int j = 1; j <= m; ++j) {
    GaussScalar e = eig_of(lie_fmap(n, so_H(n, j).to_annihilation(), v), &rok);
    ok = ok && rok && e.is_real();
    mu.push_back(e.re());
  }
  if (!ok) {
    info.detail = "vector is not a weight vector modulo the ideal";
    return info;
  }
  info.vector_weight = SoWeight{n, mu0.re(), mu};
  if (side == Side::Minus) {
    info.module_weight = info.vector_weight;
  } else {
    std::vector<mpq_class> neg;
    for (auto& q : mu) neg.push_back(-q);
    info.module_weight = SoWeight{n, -mu0.re(), neg};
  }

  std::vector<SoElement> nil;
  if (side == Side::Minus) {
    nil = borel_raising(n);
  } else {
    for (int l = 1; l <= m; ++l)
      for (int j = l + 1; j <= m; ++j) {
        nil.push_back(so_E_diff(n, l, j, -1));
        nil.push_back(so_E_sum(n, l, j, -1));
      }
    if (n % 2 == 1)
      for (int kk = 1; kk <= m; ++kk) nil.push_back(so_E_short(n, kk, -1));
  }
  info.annihilated = true;
  for (auto& e : nil) {
    SparseVec r = s.red.reduce(
        to_row(project(lie_fmap(n, e.to_annihilation(), v)), s.index));
    info.annihilated = info.annihilated && r.empty();
  }
  return info;
}

long gamma_dim(int n, int l) {
  if (l < 0) return 0;
  mpz_class a, b(0);
  mpz_bin_uiui(a.get_mpz_t(), n + l - 1, l);
  if (l >= 2) mpz_bin_uiui(b.get_mpz_t(), n + l - 3, l - 2);
  mpz_class r = a - b;
  return r.get_si();
}

std::string CharacterReport::str() const {
  std::ostringstream os;
  for (auto& it : items)
    os << "weight " << it.w << ": quotient " << it.dim_quotient << ", induced "
       << it.dim_induced << (it.dim_quotient == it.dim_induced ? "" : "  <-- mismatch")
       << "\n";
  return os.str();
}

CharacterReport graded_character_compare(int n, int l, int depth) {
  CharacterReport rp;
  rp.ok = true;
  long gd = gamma_dim(n, l);
  for (int w = l; w <= l + depth; ++w) {
    IdealSlice s = ideal_slice(n, l, Side::Plus, w);
    int dim_q = static_cast<int>(s.cols.size()) - s.red.rank();
    long count = 0;
    for (int j = (w - l) % 2; j <= std::min(n, w - l); j += 2) {
      mpz_class z;
      mpz_bin_uiui(z.get_mpz_t(), n, j);
      count += z.get_si();
    }
    int dim_i = static_cast<int>(gd * count);
    rp.ok = rp.ok && dim_q == dim_i;
    rp.items.push_back({w, dim_q, dim_i});
  }
  return rp;
}

std::string check_ideal_d_closure(int n, Side side, int kmax, int tmax) {
  auto [wlo, whi] = weight_range(n, side, kmax, tmax);
  for (int k = 1; k < kmax; ++k)
    for (int w = wlo; w <= whi; ++w) {
      IdealSlice src = ideal_slice(n, k, side, w);
      IdealSlice dst = ideal_slice(n, k + 1, side, w);
      for (auto& [pivot, row] : src.red.rows()) {
        FMap dr = fmd(from_row(row, src.cols));
        if (!dst.red.reduce(to_row(dr, dst.index)).empty())
          return "d(I^" + std::to_string(k) + ") escapes I^" +
                 std::to_string(k + 1) + " at weight " + std::to_string(w);
      }
    }
  return "";
}

std::string check_ideal_invariance(int n, Side side, int kmax, int tmax,
                                   int grade_bound) {
  auto [wlo, whi] = weight_range(n, side, kmax, tmax);
  std::vector<AnnihilationElement> gens;
  Mask full = full_mask(n);
  for (Mask J = 0; J <= full; ++J)
    for (int m = 0; 2 * m + mono_degree(J) - 2 <= grade_bound; ++m)
      gens.emplace_back(n, m, J);

  std::map<std::pair<int, int>, IdealSlice> slices;
  for (int k = 1; k <= kmax; ++k)
    for (int w = wlo; w <= whi; ++w) slices[{k, w}] = ideal_slice(n, k, side, w);

  for (int k = 1; k <= kmax; ++k)
    for (int w = wlo; w <= whi; ++w) {
      IdealSlice& src = slices[{k, w}];
      if (src.red.rank() == 0) continue;
      for (auto& D : gens) {
        int w2 = w + D.grade();
        auto it = slices.find({k, w2});
        if (it == slices.end()) continue;
        IdealSlice& dst = it->second;
        for (auto& [pivot, row] : src.red.rows()) {
          FMap lr = lie_fmap(n, D, from_row(row, src.cols));
          if (side == Side::Minus) {
            FMap proj;
            for (auto& [key, c] : lr)
              if (key.tPow < 0) fmadd(proj, key, c);
            lr = std::move(proj);
          }
          if (!dst.red.reduce(to_row(lr, dst.index)).empty())
            return "L_{" + D.str() + "} escapes I^" + std::to_string(k) +
                   " at weight " + std::to_string(w);
        }
      }
    }
  return "";
}

std::string check_lie_d_commute(int n, Side side, int tmax, int kmax) {
  Mask full = full_mask(n);
  std::vector<AnnihilationElement> gens;
  for (Mask J = 0; J <= full; ++J)
    for (int m = 0; 2 * m + mono_degree(J) - 2 <= 2; ++m) gens.emplace_back(n, m, J);
  for (auto& mono : side_monomials(n, side, tmax, kmax)) {
    FMap nu{{mono, GaussScalar(mpq_class(1))}};
    for (auto& D : gens) {
      int pD = D.parity();
      auto project = [&](FMap f) {
        if (side == Side::Plus) return f;
        FMap out;
        for (auto& [key, c] : f)
          if (key.tPow < 0) fmadd(out, key, c);
        return out;
      };
      FMap lhs = project(lie_fmap(n, D, fmd(nu)));
      FMap rhs = fmd(project(lie_fmap(n, D, nu)));
      fmadd_scaled(lhs, rhs, GaussScalar(mpq_class(pD ? 1 : -1)));
      if (!lhs.empty())
        return "[L_D, d] != 0 for D = " + D.str() + " on " +
               wrap(n, side, FormTrunc{}, nu).str();
    }
  }
  return "";
}

std::string check_lie_bracket_action(int n, Side side, int tmax, int kmax) {
  std::vector<AnnihilationElement> gens;
  Mask full = full_mask(n);
  for (Mask J = 0; J <= full; ++J)
    for (int m = 0; 2 * m + mono_degree(J) - 2 <= 2; ++m) gens.emplace_back(n, m, J);
  auto project = [&](FMap f) {
    if (side == Side::Plus) return f;
    FMap out;
    for (auto& [key, c] : f)
      if (key.tPow < 0) fmadd(out, key, c);
    return out;
  };
  for (auto& mono : side_monomials(n, side, tmax, kmax)) {
    FMap nu{{mono, GaussScalar(mpq_class(1))}};
    for (auto& D1 : gens)
      for (auto& D2 : gens) {
        int p1 = D1.parity(), p2 = D2.parity();
        FMap lhs = project(lie_fmap(n, contact_bracket(D1, D2), nu));
        FMap ab = project(lie_fmap(n, D1, project(lie_fmap(n, D2, nu))));
        FMap ba = project(lie_fmap(n, D2, project(lie_fmap(n, D1, nu))));
        fmadd_scaled(lhs, ab, GaussScalar(mpq_class(-1)));
        fmadd_scaled(lhs, ba, GaussScalar(mpq_class(p1 * p2 ? -1 : 1)));
        if (!lhs.empty())
          return "bracket action mismatch for " + D1.str() + ", " + D2.str() +
                 " on " + wrap(n, side, FormTrunc{}, nu).str();
      }
  }
  return "";
}

}  // namespace conformalk
