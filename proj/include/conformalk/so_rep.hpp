#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conformalk/kn_algebra.hpp"
#include "conformalk/linalg.hpp"

namespace conformalk {

// Weight (mu0; mu_1..mu_m) for cso(n) = so(n) + C E00, m = floor(n/2).
// mu0 is the E00 eigenvalue on the highest-weight vector, mu_j the H_j ones.
struct SoWeight {
  int n = 0;
  mpq_class mu0;
  std::vector<mpq_class> mu;

  int m() const { return n / 2; }
  std::string str() const;
};

// Parses "p/q" (optionally signed) into an exact rational.
mpq_class parse_rat(const std::string& text);
std::string rat_str(const mpq_class& v);

SoWeight make_weight(int n, const std::string& mu0, const std::vector<std::string>& mu);

// Dominance + integrality for so(n): n = 2m+1 needs mu_1 >= ... >= mu_m >= 0,
// n = 2m needs mu_1 >= ... >= mu_{m-1} >= |mu_m|; all entries integral or all
// half-odd-integral (no condition beyond rationality when m = 1, n = 2).
bool is_dominant_integral(int n, const std::vector<mpq_class>& mu, std::string* why = nullptr);

// Weyl dimension formula for the irreducible so(n)-module with highest weight mu.
mpq_class weyl_dim(int n, const std::vector<mpq_class>& mu);

// Element sum c_{ij} F_{ij} of so(n), F_{ij} (i<j) the standard generators
// realized as -xi_i xi_j at t-degree zero.
struct SoElement {
  int n = 0;
  std::map<std::pair<int, int>, GaussScalar> F;

  void add_F(int a, int b, GaussScalar c);  // handles a > b via F_{ba} = -F_{ab}
  AnnihilationElement to_annihilation() const;
  ConformalElement to_kn() const;
  bool is_zero() const { return F.empty(); }
  SoElement& operator+=(const SoElement& o);
  friend SoElement operator*(const GaussScalar& c, SoElement e);
  std::string str() const;
};

SoElement so_bracket(const SoElement& a, const SoElement& b);

SoElement so_F(int n, int i, int j);          // F_{ij}
SoElement so_H(int n, int j);                 // H_j = i F_{2j-1,2j}
SoElement so_E_diff(int n, int l, int j, int sgn);   // E_{±(eps_l - eps_j)}, l < j
SoElement so_E_sum(int n, int l, int j, int sgn);    // E_{±(eps_l + eps_j)}, l < j
SoElement so_E_short(int n, int k, int sgn);         // E_{±eps_k}, n odd
SoElement so_alpha(int n, int l, int j);             // (E_{eps_l-eps_j} + E_{eps_l+eps_j})/2
SoElement so_beta(int n, int l, int j);              // (E_{eps_l-eps_j} - E_{eps_l+eps_j})/2

// Raising half of the Borel: all alpha_{lj}, beta_{lj} (l<j), plus gamma_k for odd n.
std::vector<SoElement> borel_raising(int n);

// Finite-dimensional irreducible cso(n)-module.
struct SoModule {
  int n = 0;
  SoWeight highest;
  int dim = 0;
  // eps-coordinates of each basis vector's so(n)-weight (H_1..H_m eigenvalues).
  std::vector<std::vector<mpq_class>> weights;
  // F_{ij} (i<j) in basis order (1,2),(1,3),..,(n-1,n).
  std::vector<Matrix> Fmat;
  // Simple raising/lowering operators used in the construction (empty for n=2).
  std::vector<Matrix> e_simple, f_simple;

  int pair_index(int i, int j) const;      // i < j
  const Matrix& F_of(int i, int j) const;  // i < j
  Matrix F_signed(int i, int j) const;     // any i != j
  Matrix E00() const;                      // mu0 * Id
  Matrix matrix_of(const SoElement& e) const;
  std::vector<GaussScalar> apply(const SoElement& e, const std::vector<GaussScalar>& v) const;
};

// Builds the irreducible module with the given highest weight; throws
// std::invalid_argument if the weight is not dominant integral.
SoModule build_irrep(const SoWeight& w);

// Exact bracket fidelity: [M(F_ij), M(F_kl)] == M([F_ij, F_kl]) for all pairs,
// and highest-weight vector killed by every Borel raising element.
bool verify_representation(const SoModule& mod, std::string* why = nullptr);

}  // namespace conformalk
