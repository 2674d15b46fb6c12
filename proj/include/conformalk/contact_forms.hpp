#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conformalk/kn_algebra.hpp"
#include "conformalk/linalg.hpp"
#include "conformalk/so_rep.hpp"

namespace conformalk {

// Differential forms on (t | xi_1..xi_n): the free super-commutative algebra
// over t, xi_i, dt, dxi_i with p(t) = 0, p(xi) = 1, p(dt) = 1, p(dxi) = 0.
// The plus space keeps t-powers >= 0, the minus space t-powers <= -1.

enum class Side { Plus, Minus };

// Canonical written order: t^a * xi_I (ascending) * dt^eps * prod dxi_i^{c_i}.
struct FormMonomial {
  int tPow = 0;
  Mask I = 0;
  int dtFlag = 0;
  std::vector<int> dxi;  // size n, entries >= 0

  auto operator<=>(const FormMonomial&) const = default;
};

int form_degree(const FormMonomial& m);  // dtFlag + sum c_i
int form_weight(const FormMonomial& m);  // 2 tPow + |I| + 2 dtFlag + sum c_i
int form_parity(const FormMonomial& m);  // (|I| + dtFlag) mod 2

struct FormTrunc {
  int tMax = 64;  // bound on |tPow|
  int cMax = 64;  // bound on form degree
};

class FormElement {
 public:
  FormElement(int n, Side side, FormTrunc tr = FormTrunc{});

  int n() const { return n_; }
  Side side() const { return side_; }
  const FormTrunc& trunc() const { return tr_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<FormMonomial, GaussScalar>& terms() const { return terms_; }

  // Checked: throws std::domain_error if the monomial is on the wrong side,
  // std::runtime_error("truncation overflow...") if it exceeds the bounds.
  FormElement& add_term(const FormMonomial& m, const GaussScalar& c);

  FormElement operator-() const;
  FormElement& operator+=(const FormElement& o);
  FormElement& operator-=(const FormElement& o);
  friend FormElement operator+(FormElement a, const FormElement& b) { return a += b; }
  friend FormElement operator-(FormElement a, const FormElement& b) { return a -= b; }
  friend FormElement operator*(const GaussScalar& c, FormElement a);
  friend bool operator==(const FormElement& a, const FormElement& b) {
    return (a - b).is_zero();
  }

  std::string str() const;

 private:
  int n_;
  Side side_;
  FormTrunc tr_;
  std::map<FormMonomial, GaussScalar> terms_;
};

FormElement wedge(const FormElement& a, const FormElement& b);
FormElement d_form(const FormElement& a);

// omega = dt - sum_i xi_i dxi_i (weight-2, degree-1, odd; plus side).
FormElement contact_omega(int n, FormTrunc tr = FormTrunc{});

// Lie derivative along the contact vector field of D, extended from functions
// by super-commutation with d: L(dt) = d(L t), L(dxi_i) = d(L xi_i). On the
// minus side terms with non-negative t-powers are discarded after computing.
FormElement lie_derivative(const AnnihilationElement& D, const FormElement& a);

// Lie derivative along sum c_ij F_ij (F_ij = -xi_i xi_j) and along E_00 = t.
FormElement so_lie(const SoElement& X, const FormElement& a);
FormElement e00_lie(const FormElement& a);

// Row-reduced spanning set of the degree-k, weight-w piece of the contact
// ideal I^k = d(omega) ^ Omega^{k-2} + omega ^ Omega^{k-1} (I^1 = omega ^
// Omega^0, I^0 = 0). Pivot order: dt > dxi_1 > ... > dxi_n > xi_1 > ... > t.
std::vector<FormElement> ideal_component(int n, int k, Side side, int w);

// All monomials of degree k and weight w on the given side (each choice of
// (I, eps, c) determines the t-power, so the slice is finite and exact).
std::vector<FormMonomial> component_monomials(int n, int k, Side side, int w);

struct ComplexComponent {
  int k = 0, w = 0;
  std::vector<FormMonomial> cols;    // all monomials, pivot order
  std::vector<FormMonomial> qbasis;  // quotient representatives (non-pivots)
  RowReducer ideal;                  // reduced ideal rows over cols
  int dim_full = 0, dim_ideal = 0;
  Matrix dmat;  // into the quotient of (k+1, w); present when k < kmax
  bool has_dmat = false;
};

struct QuotientComplex {
  int n = 0;
  Side side = Side::Plus;
  int kmax = 0, tmax = 0;
  int wlo = 0, whi = 0;
  std::map<std::pair<int, int>, ComplexComponent> comps;  // key (k, w)

  const ComplexComponent* find(int k, int w) const;
};

// Builds every (k, w) component for 0 <= k <= kmax, wlo <= w <= whi with the
// w-range derived from tmax, together with the induced d-matrices.
QuotientComplex quotient_complex(int n, Side side, int kmax, int tmax);

struct ExactnessItem {
  int k = 0, w = 0;
  int dim_q = 0, ker = 0, im_prev = 0, defect = 0;
};

struct ExactnessReport {
  std::vector<ExactnessItem> items;   // only nonzero-dim components
  std::map<int, int> level_defect;    // per k: sum of defects over w
  std::map<int, int> level_kernel;    // per k: sum of kernel dims over w
  std::string str() const;
};

// Rank-nullity per component; on the plus side the constants' line is
// subtracted from the level-0 kernel (the complex is augmented by C).
ExactnessReport exactness_check(const QuotientComplex& cx);

struct HomotopyReport {
  bool ok = false;
  long cases = 0;
  std::string detail;
};

// K(dxi_n nu) = xi_n nu (zero when xi_n is already present), epsilon the
// projection onto monomials with neither xi_n nor dxi_n; verifies
// Kd + dK = Id - epsilon on every plus monomial within the bounds.
HomotopyReport homotopy_check(int n, int tmax, int kmax);

// d(d(m)) == 0 on every monomial within bounds, both sides.
HomotopyReport d_squared_check(int n, int tmax, int kmax);

struct GammaInfo {
  SoWeight vector_weight;  // eigenvalues (E_00; H_1..H_m) of the vector mod I
  SoWeight module_weight;  // minus: = vector_weight (hw); plus: its negative
  bool annihilated = false;  // raising (minus) / lowering (plus) kill it mod I
  std::string detail;
};

// The extreme vector of the Gamma-module at degree k: minus side the highest
// weight vector t^{-1} xi_* (dxi_1 - i dxi_2)^k, plus side the lowest weight
// vector (dxi_1 + i dxi_2)^k.
GammaInfo gamma_weights(int n, int k, Side side);

struct CharacterItem {
  int w = 0;
  int dim_quotient = 0, dim_induced = 0;
};

struct CharacterReport {
  bool ok = false;
  std::vector<CharacterItem> items;
  std::string str() const;
};

// dim (Omega^l_+ / I^l_+) at weight w vs dim Gamma^l times the count of
// (k, I) with 2k + |I| = w - l, for w = l .. l + depth.
CharacterReport graded_character_compare(int n, int l, int depth);

// dim of the degree-l harmonic space: C(n+l-1, l) - C(n+l-3, l-2).
long gamma_dim(int n, int l);

// Consistency sweeps used by the tests (empty string = pass):
// d maps each ideal slice into the next one.
std::string check_ideal_d_closure(int n, Side side, int kmax, int tmax);
// L_D preserves each ideal slice for monomial D of grade <= grade_bound.
std::string check_ideal_invariance(int n, Side side, int kmax, int tmax,
                                   int grade_bound = 2);
// L_D d = (-1)^{p(D)} d L_D on monomials.
std::string check_lie_d_commute(int n, Side side, int tmax, int kmax);
// L_{[f,g]} = L_f L_g - (-1)^{p(f)p(g)} L_g L_f on monomials.
std::string check_lie_bracket_action(int n, Side side, int tmax, int kmax);

}  // namespace conformalk
