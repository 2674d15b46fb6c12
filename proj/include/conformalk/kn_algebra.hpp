#pragma once

#include <string>
#include <vector>

#include "conformalk/grassmann.hpp"
#include "conformalk/scalar.hpp"

namespace conformalk {

// Element of K_n = C[d] (x) Lambda(n): sum of c * d^k (x) xi_I.
// (d is the even translation generator; we write it "d" in code.)
struct DKey {
  int k;
  Mask I;
  friend auto operator<=>(const DKey&, const DKey&) = default;
};

class ConformalElement {
 public:
  ConformalElement() : n_(0) {}
  explicit ConformalElement(int n) : n_(n) {}
  ConformalElement(int n, int k, Mask I, GaussScalar c = GaussScalar(1)) : n_(n) {
    add_term(k, I, std::move(c));
  }

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<DKey, GaussScalar>& terms() const { return terms_; }

  void add_term(int k, Mask I, GaussScalar c);

  // d * this (shifts every d-power up by one).
  ConformalElement apply_d(int times = 1) const;

  int parity() const;  // -1 if mixed

  ConformalElement operator-() const;
  ConformalElement& operator+=(const ConformalElement& o);
  ConformalElement& operator-=(const ConformalElement& o);
  friend ConformalElement operator+(ConformalElement a, const ConformalElement& b) { return a += b; }
  friend ConformalElement operator-(ConformalElement a, const ConformalElement& b) { return a -= b; }
  friend ConformalElement operator*(const GaussScalar& c, const ConformalElement& a);
  friend bool operator==(const ConformalElement& a, const ConformalElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  int n_;
  std::map<DKey, GaussScalar> terms_;
};

// Polynomial in lambda with ConformalElement coefficients.
class LambdaPoly1 {
 public:
  LambdaPoly1() : n_(0) {}
  explicit LambdaPoly1(int n) : n_(n) {}

  int n() const { return n_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
  const std::map<int, ConformalElement>& coeffs() const { return c_; }
  ConformalElement coeff(int j) const;

  void add(int lpow, const ConformalElement& e);

  LambdaPoly1& operator+=(const LambdaPoly1& o);
  LambdaPoly1& operator-=(const LambdaPoly1& o);
  friend LambdaPoly1 operator+(LambdaPoly1 a, const LambdaPoly1& b) { return a += b; }
  friend LambdaPoly1 operator-(LambdaPoly1 a, const LambdaPoly1& b) { return a -= b; }
  friend bool operator==(const LambdaPoly1& a, const LambdaPoly1& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }

  std::string str() const;

 private:
  int n_;
  std::map<int, ConformalElement> c_;
};

// Polynomial in (lambda, mu); used for the Jacobi identity.
class LambdaPoly2 {
 public:
  LambdaPoly2() : n_(0) {}
  explicit LambdaPoly2(int n) : n_(n) {}

  bool is_zero() const { return c_.empty(); }
  void add(int lpow, int mpow, const ConformalElement& e);
  LambdaPoly2& operator-=(const LambdaPoly2& o);
  friend bool operator==(const LambdaPoly2& a, const LambdaPoly2& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }
  const std::map<std::pair<int, int>, ConformalElement>& coeffs() const { return c_; }

 private:
  int n_;
  std::map<std::pair<int, int>, ConformalElement> c_;
};

// The K_n lambda-bracket. For monomials f (degree r), g (degree s):
//   [f_l g] = (r-2) d(fg) + (-1)^r sum_i (d_i f)(d_i g) + l (r+s-4) fg,
// extended to d-powers by [d a_l b] = -l [a_l b], [a_l d b] = (l+d)[a_l b].
LambdaPoly1 lambda_bracket(const ConformalElement& a, const ConformalElement& b);

// j-th product a_(j) b = j! * (lambda^j coefficient of [a_l b]).
ConformalElement nth_product(const ConformalElement& a, int j, const ConformalElement& b);

// lambda -> -lambda - d (composition with the skew-symmetry substitution).
LambdaPoly1 subst_neg(const LambdaPoly1& p);

// Element of the annihilation algebra C[t] (x) Lambda(n) (non-negative
// t-powers only; general Laurent coefficients appear only inside brackets
// and always cancel before they could go negative).
class AnnihilationElement {
 public:
  AnnihilationElement() : n_(0) {}
  explicit AnnihilationElement(int n) : n_(n) {}
  AnnihilationElement(int n, int m, Mask I, GaussScalar c = GaussScalar(1)) : n_(n) {
    add_term(m, I, std::move(c));
  }

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<int, Mask>, GaussScalar>& terms() const { return terms_; }
  void add_term(int m, Mask I, GaussScalar c);

  int parity() const;  // -1 if mixed
  // deg(t^m xi_I) = 2m + |I| - 2; requires grade homogeneity (asserted).
  int grade() const;
  bool is_grade_homogeneous() const;

  AnnihilationElement dt() const;        // d/dt
  AnnihilationElement dxi(int i) const;  // left Grassmann derivative
  AnnihilationElement mul_xi_left(int i) const;

  AnnihilationElement operator-() const;
  AnnihilationElement& operator+=(const AnnihilationElement& o);
  AnnihilationElement& operator-=(const AnnihilationElement& o);
  friend AnnihilationElement operator+(AnnihilationElement a, const AnnihilationElement& b) {
    return a += b;
  }
  friend AnnihilationElement operator-(AnnihilationElement a, const AnnihilationElement& b) {
    return a -= b;
  }
  friend AnnihilationElement operator*(const GaussScalar& c, const AnnihilationElement& a);
  friend AnnihilationElement operator*(const AnnihilationElement& a, const AnnihilationElement& b);
  friend bool operator==(const AnnihilationElement& a, const AnnihilationElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  int n_;
  std::map<std::pair<int, Mask>, GaussScalar> terms_;
};

// [a t^p, b t^m] = sum_j binom(p, j) (a_(j) b) t^{p+m-j}; d-powers inside the
// j-th products are eliminated by d^k c at level q  ->  (-1)^k q!/(q-k)! c t^{q-k},
// which vanishes for k > q, so no negative t-powers survive.
AnnihilationElement ann_bracket(const AnnihilationElement& A, const AnnihilationElement& B);

// Projection of x * t^q into the annihilation algebra (d eliminated as above).
AnnihilationElement conformal_to_ann(const ConformalElement& x, int q);

// Contact bracket on C[t] (x) Lambda(n):
// [f,g] = (2f - sum xi_i d_i f)(dt g) - (dt f)(2g - sum xi_i d_i g)
//         + (-1)^{p(f)} sum_i (d_i f)(d_i g).
AnnihilationElement contact_bracket(const AnnihilationElement& f, const AnnihilationElement& g);

// First-order superdifferential operator a dt + sum_i a_i dxi_i.
struct VectorField {
  int n = 0;
  int parity = 0;
  AnnihilationElement coeff_t;
  std::vector<AnnihilationElement> coeff_xi;  // size n

  AnnihilationElement apply(const AnnihilationElement& g) const;
  bool is_zero() const {
    if (!coeff_t.is_zero()) return false;
    for (const auto& c : coeff_xi)
      if (!c.is_zero()) return false;
    return true;
  }
  // Parity is metadata; the zero operator is equal to itself whatever tag it carries.
  friend bool operator==(const VectorField& a, const VectorField& b) {
    if (a.n != b.n) return false;
    if (a.is_zero() && b.is_zero()) return true;
    return a.parity == b.parity && a.coeff_t == b.coeff_t && a.coeff_xi == b.coeff_xi;
  }
};

// f -> 2f dt + (-1)^{p(f)} sum_i (xi_i dt f + d_i f)(xi_i dt + d_i).
VectorField to_vector_field(const AnnihilationElement& f);
VectorField vf_commutator(const VectorField& a, const VectorField& b);

struct AxiomCheckItem {
  std::string check;
  bool pass = false;
  long cases = 0;
  std::string detail;
};

struct AxiomReport {
  int n = 0;
  int tmax = 0;
  bool all_pass = false;
  std::vector<AxiomCheckItem> items;
};

// Exhaustive monomial sweeps: sesquilinearity, skew-symmetry, Jacobi (as an
// exact two-variable polynomial identity), parity/grading bookkeeping, the
// annihilation/contact/vector-field bracket consistency up to t^tmax, and a
// mutation self-test (a corrupted bracket must fail Jacobi).
AxiomReport check_axioms(int n, int tmax);

}  // namespace conformalk
