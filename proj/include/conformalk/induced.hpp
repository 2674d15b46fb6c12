#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "conformalk/grassmann.hpp"
#include "conformalk/kn_algebra.hpp"
#include "conformalk/scalar.hpp"
#include "conformalk/so_rep.hpp"

namespace conformalk {

// Which realization of C[d] (x) Lambda(n) (x) F a vector lives in. The two
// differ by the Hodge flip of the Grassmann factor and carry different
// action formulas; mixing them is a caller error.
enum class BasisKind { Natural, Dual };

std::string basis_name(BasisKind kind);

// Basis term d^k xi_I (x) v_b.
struct IndKey {
  int k = 0;
  Mask I = 0;
  int b = 0;
  friend auto operator<=>(const IndKey&, const IndKey&) = default;
};

class InducedVector {
 public:
  InducedVector() : n_(0), kind_(BasisKind::Natural) {}
  InducedVector(int n, BasisKind kind) : n_(n), kind_(kind) {}
  InducedVector(int n, BasisKind kind, IndKey key, GaussScalar c = GaussScalar(1))
      : n_(n), kind_(kind) {
    add_term(key, std::move(c));
  }

  int n() const { return n_; }
  BasisKind kind() const { return kind_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<IndKey, GaussScalar>& terms() const { return terms_; }
  void add_term(const IndKey& key, GaussScalar c);

  InducedVector apply_d(int times = 1) const;
  int parity() const;  // -1 if mixed

  InducedVector operator-() const;
  InducedVector& operator+=(const InducedVector& o);
  InducedVector& operator-=(const InducedVector& o);
  friend InducedVector operator+(InducedVector a, const InducedVector& b) { return a += b; }
  friend InducedVector operator-(InducedVector a, const InducedVector& b) { return a -= b; }
  friend InducedVector operator*(const GaussScalar& c, const InducedVector& a);
  friend bool operator==(const InducedVector& a, const InducedVector& b) {
    return (a - b).is_zero();
  }

  std::string str() const;

 private:
  int n_;
  BasisKind kind_;
  std::map<IndKey, GaussScalar> terms_;
};

// Polynomial in lambda with InducedVector coefficients.
class LambdaInd {
 public:
  LambdaInd() : n_(0), kind_(BasisKind::Natural) {}
  LambdaInd(int n, BasisKind kind) : n_(n), kind_(kind) {}

  int n() const { return n_; }
  BasisKind kind() const { return kind_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
  const std::map<int, InducedVector>& coeffs() const { return c_; }
  InducedVector coeff(int j) const;

  void add(int lpow, const InducedVector& v);
  LambdaInd apply_d() const;          // d applied to every coefficient
  LambdaInd shift_lambda(int s) const;
  LambdaInd mul_lambda_plus_d() const;

  LambdaInd& operator+=(const LambdaInd& o);
  LambdaInd& operator-=(const LambdaInd& o);
  friend LambdaInd operator+(LambdaInd a, const LambdaInd& b) { return a += b; }
  friend LambdaInd operator-(LambdaInd a, const LambdaInd& b) { return a -= b; }
  friend LambdaInd operator*(const GaussScalar& c, const LambdaInd& a);
  friend bool operator==(const LambdaInd& a, const LambdaInd& b) {
    return (a - b).is_zero();
  }

  std::string str() const;

 private:
  int n_;
  BasisKind kind_;
  std::map<int, InducedVector> c_;
};

// Polynomial in (lambda, mu) with InducedVector coefficients.
class LambdaInd2 {
 public:
  LambdaInd2() : n_(0) {}
  explicit LambdaInd2(int n) : n_(n) {}

  bool is_zero() const { return c_.empty(); }
  const std::map<std::pair<int, int>, InducedVector>& coeffs() const { return c_; }
  void add(int lpow, int mpow, const InducedVector& v);
  LambdaInd2& operator-=(const LambdaInd2& o);
  friend LambdaInd2 operator-(LambdaInd2 a, const LambdaInd2& b) { return a -= b; }
  friend bool operator==(const LambdaInd2& a, const LambdaInd2& b) {
    return (a - b).is_zero();
  }
  std::string str() const;

 private:
  int n_;
  std::map<std::pair<int, int>, InducedVector> c_;
};

// The induced module C[d] (x) Lambda(n) (x) F in one of its two bases.
class InducedModule {
 public:
  InducedModule(SoModule rep, BasisKind kind);

  const SoModule& rep() const { return rep_; }
  BasisKind kind() const { return kind_; }
  int n() const { return rep_.n; }
  int dim_f() const { return rep_.dim; }

  // f_lambda w, extended from the generating slice by
  // f_lambda(d w) = (lambda + d) f_lambda(w) and (d^a f)_lambda = (-lambda)^a f_lambda.
  LambdaInd act(const ConformalElement& f, const InducedVector& w) const;

  // Action of the mode xi_F t^m (m! times the lambda^m coefficient).
  InducedVector act_mode(Mask F, int m, const InducedVector& w) const;

  // Action of an so(n) element through its grade-zero modes (F_ij = -xi_i xi_j).
  InducedVector act_so(const SoElement& e, const InducedVector& w) const;

  // Action of E_00 (the mode of t).
  InducedVector act_e00(const InducedVector& w) const;

  InducedVector basis_vector(const IndKey& key) const {
    return InducedVector(n(), kind_, key);
  }

  int grade_of(const IndKey& key) const;
  int grade_of(const InducedVector& w) const;  // -1000000 sentinel never returned; throws if mixed

  // Simultaneous (E_00; H_1..H_m) eigenvalues, if w is an eigenvector with
  // rational eigenvalues.
  std::optional<SoWeight> weight_of(const InducedVector& w) const;

  // Flips the sign of the lambda^2 group in the dual-basis formula;
  // used by the self-test that the axiom sweep can detect a wrong sign.
  void set_corrupt_dual_l2(bool v) {
    corrupt_ = v;
    cache_.clear();
  }

 private:
  LambdaInd act_slice(Mask F, Mask I, int b) const;
  LambdaInd act_slice_natural(Mask F, Mask I, int b) const;
  LambdaInd act_slice_dual(Mask F, Mask I, int b) const;
  std::vector<GaussScalar> f_column(int i, int j, int b) const;  // column b of F_ij, any i != j

  SoModule rep_;
  BasisKind kind_;
  bool corrupt_ = false;
  mutable std::map<std::tuple<Mask, Mask, int>, LambdaInd> cache_;
};

// T(d^k xi_I (x) v) = d^k hodge(xi_I) (x) v, with the basis tag flipped.
InducedVector hodge_transport(const InducedVector& w);
LambdaInd hodge_transport(const LambdaInd& p);

// Re-expands every d-power with (d + alpha)^k.
InducedVector twist_alpha(const InducedVector& w, const GaussScalar& alpha);
LambdaInd twist_alpha(const LambdaInd& p, const GaussScalar& alpha);

struct ModuleAxiomReport {
  bool ok = false;
  std::vector<AxiomCheckItem> items;
  std::string summary() const;
};

// (M1)/(M2) as exact (lambda, mu)-polynomial identities over all Grassmann
// monomial pairs acting on basis vectors with d-power <= kmax, in both bases,
// plus a corrupted-sign self-test and a natural/dual transport sweep.
ModuleAxiomReport check_module_axioms(const SoWeight& mu, int kmax = 2);

// T conjugates the natural action into the dual one: for every monomial f and
// slice vector, dual(f, T w) == T(natural(f, w)). Returns an empty string on
// success, else a description of the first mismatch.
std::string check_hodge_transport(const SoWeight& mu, int kmax = 1);

// Slice degree bound: on d-power-zero vectors the action has lambda-degree
// <= 2, equivalently all modes with t-power >= 3 kill the slice.
std::string check_lambda_degree(const SoWeight& mu, int modemax = 4);

// Modes of grade-d monomials shift grades by exactly d.
std::string check_grade_additivity(const SoWeight& mu, int kmax = 2, int tmax = 2);

}  // namespace conformalk
