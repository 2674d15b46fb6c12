#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conformalk/induced.hpp"
#include "conformalk/linalg.hpp"
#include "conformalk/so_rep.hpp"

namespace conformalk {

// A non-trivial singular vector found by the solver: grade-homogeneous,
// normalized so the coefficient of its smallest basis key is 1.
struct SingularVectorInfo {
  InducedVector v;
  std::optional<SoWeight> weight;  // simultaneous (E_00; H) eigenvalues if defined
  int grade = 0;
  std::string family;  // "A", "B", "C3", "unknown-trivial", "unknown"
};

struct SingularReport {
  SoWeight mu;
  int dmax = 0;
  int trivial_dim = 0;  // kernel dimension inside the grade-zero slice
  std::vector<SingularVectorInfo> vectors;
  bool reducible() const { return !vectors.empty(); }
};

// Searches d-power <= dmax in the Hodge-dual basis for vectors killed by the
// staged conditions: the lambda^2 coefficient for every monomial f, the
// lambda^1 coefficient for |f| >= 1, the lambda^0 coefficient for |f| >= 3,
// and every Borel raising element. The candidate space splits into grade
// blocks (every condition is grade-homogeneous), each solved exactly.
SingularReport solve_singular(const SoWeight& mu, int dmax = 3);

// Index of the highest-weight basis vector of an irreducible module.
int highest_weight_index(const SoModule& rep);

// (xi_{2^c} - i xi_{1^c}) (x) v_hw in the dual basis.
InducedVector predicted_family_a(const SoModule& rep);

// The lowering-operator construction: w_1 = v_hw,
//   w_k    = -(1/2mu1) E_{-(eps1-epsk)} w_1,
//   wbar_k =  (1/2mu1) E_{-(eps1+epsk)} w_1,
//   w_{m+1} = -(1/mu1) E_{-eps1} w_1            (n odd),
//   wbar_1 = C [ sum_{1<l<=m} E_{-(eps1+epsl)} E_{-(eps1-epsl)} w_1
//                + [n odd] E_{-eps1}^2 w_1 ],   C = 1/(2mu1(n-4+2mu1)),
// assembled as sum_l [ (xi_{2l^c} + i xi_{(2l-1)^c}) (x) w_l
//                    + (xi_{2l^c} - i xi_{(2l-1)^c}) (x) wbar_l ]
//              - [n odd] i xi_{(2m+1)^c} (x) w_{m+1}.
// Requires mu = (n+k-2; k, 0, ..., 0) with mu1 = k > 0, and k != 1/2 when n=3.
InducedVector predicted_family_b(const SoModule& rep);

// d(xi_full (x) v) + i xi_{3} (x) v - 2 xi_{1} (x) F_23 v + 2 xi_{2} (x) F_13 v
// for n=3, weight (3/2; 1/2).
InducedVector predicted_c3(const SoModule& rep);

// Tags a solver output against the known families.
std::string classify(const InducedModule& M, const InducedVector& v);

struct SpotcheckItem {
  std::string name;
  bool pass = false;
};
struct SpotcheckReport {
  bool ok = false;
  std::vector<SpotcheckItem> items;
  std::string summary() const;
};

// Consistency relations satisfied by the family-(b) coordinates
// v_a = coefficient of xi_{a^c}: the E_00/F cyclic identities and the
// alpha/beta/gamma lowering relations on the extracted w_l, wbar_l, w_{m+1}.
SpotcheckReport lowering_relation_spotcheck(const SoModule& rep, const InducedVector& v);

// Re-verifies a vector by direct annihilation: every mode xi_I t^m with
// 0 < 2m+|I|-2 <= 2*dmax+n kills it, and so does every Borel raising element.
// Empty string on success.
std::string verify_annihilation(const InducedModule& M, const InducedVector& v, int dmax);

// Equality of the staged-conditions kernel and the direct-annihilation kernel
// (both with the Borel rows), computed over the full unblocked candidate
// space. Empty string on success.
std::string check_completeness(const SoWeight& mu, int dmax = 3);

struct ScanRow {
  SoWeight mu;
  bool reducible = false;
  std::vector<std::string> families;
  std::vector<int> grades;
  int trivial_dim = 0;
};

std::vector<ScanRow> scan_weights(int n, const std::vector<SoWeight>& weights,
                                  int dmax = 3);

}  // namespace conformalk
