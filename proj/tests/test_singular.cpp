#include "doctest.h"

#include "conformalk/induced.hpp"
#include "conformalk/singular.hpp"

using namespace conformalk;

namespace {

bool projectively_equal(const InducedVector& a, const InducedVector& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const auto& [key, cb] = *b.terms().begin();
  auto it = a.terms().find(key);
  if (it == a.terms().end()) return false;
  GaussScalar c = it->second / cb;
  return a == c * b;
}

SoWeight W(int n, const std::string& mu0, std::vector<std::string> mu) {
  return make_weight(n, mu0, mu);
}

}  // namespace

TEST_CASE("family a vectors at small n") {
  struct Case {
    int n;
    std::string mu0, mu1;
  };
  for (const Case& c : {Case{3, "-1/2", "1/2"}, Case{3, "-1", "1"}, Case{4, "-1", "1"}}) {
    std::vector<std::string> mu = {c.mu1};
    for (int j = 1; j < c.n / 2; ++j) mu.push_back("0");
    SoWeight w = W(c.n, c.mu0, mu);
    SingularReport rep = solve_singular(w, 3);
    INFO("weight ", w.str());
    REQUIRE(rep.vectors.size() == 1);
    CHECK(rep.trivial_dim == 1);
    CHECK(rep.vectors[0].family == "A");
    SoModule F = build_irrep(w);
    CHECK(projectively_equal(rep.vectors[0].v, predicted_family_a(F)));
  }
}

TEST_CASE("family b vector and its spot checks") {
  SoWeight w = W(3, "2", {"1"});
  SingularReport rep = solve_singular(w, 3);
  REQUIRE(rep.vectors.size() == 1);
  CHECK(rep.vectors[0].family == "B");
  SoModule F = build_irrep(w);
  InducedVector want = predicted_family_b(F);
  CHECK(projectively_equal(rep.vectors[0].v, want));
  SpotcheckReport spot = lowering_relation_spotcheck(F, rep.vectors[0].v);
  INFO(spot.summary());
  CHECK(spot.ok);
}

TEST_CASE("spot checks reject a perturbed vector") {
  SoModule F = build_irrep(W(4, "3", {"1", "0"}));
  InducedVector v = predicted_family_b(F);
  SpotcheckReport clean = lowering_relation_spotcheck(F, v);
  CHECK(clean.ok);
  // generic perturbation of the coordinate pattern must trip some relation
  Mask full = full_mask(4);
  for (int b = 0; b < F.dim; ++b) {
    v.add_term(IndKey{0, Mask(full & ~Mask(0b010)), b}, GaussScalar(1));
    v.add_term(IndKey{0, Mask(full & ~Mask(0b001)), b}, -GaussScalar::i());
  }
  SpotcheckReport bad = lowering_relation_spotcheck(F, v);
  CHECK_FALSE(bad.ok);
}

TEST_CASE("exceptional vector at n=3") {
  SoWeight w = W(3, "3/2", {"1/2"});
  SingularReport rep = solve_singular(w, 3);
  REQUIRE(rep.vectors.size() == 1);
  CHECK(rep.vectors[0].family == "C3");
  SoModule F = build_irrep(w);
  CHECK(projectively_equal(rep.vectors[0].v, predicted_c3(F)));
  bool has_dpow = false;
  for (const auto& [key, c] : rep.vectors[0].v.terms()) has_dpow = has_dpow || key.k > 0;
  CHECK(has_dpow);  // this family is the only one with a d-power term
  InducedModule M(F, BasisKind::Dual);
  CHECK(rep.vectors[0].grade == M.grade_of(rep.vectors[0].v));
}

TEST_CASE("irreducible weights come back empty") {
  for (auto& [n, spec] : std::vector<std::pair<int, std::pair<std::string, std::vector<std::string>>>>{
           {3, {"1", {"0"}}},        // boundary value of the second family parameter
           {3, {"1", {"1"}}},        // generic
           {4, {"1", {"1", "0"}}},
       }) {
    SoWeight w = W(n, spec.first, spec.second);
    SingularReport rep = solve_singular(w, 3);
    INFO("weight ", w.str());
    CHECK(rep.vectors.empty());
    CHECK(rep.trivial_dim == 1);
    CHECK_FALSE(rep.reducible());
  }
}

TEST_CASE("trivial weight is degenerate") {
  // at the one-dimensional trivial representation the first family persists
  SingularReport rep = solve_singular(W(3, "0", {"0"}), 3);
  REQUIRE(rep.vectors.size() == 1);
  CHECK(rep.vectors[0].family == "A");
}

TEST_CASE("direct annihilation agrees with the staged solve") {
  SoWeight w = W(3, "2", {"1"});
  CHECK(check_completeness(w, 3).empty());
  CHECK(check_completeness(W(3, "1", {"1"}), 2).empty());
}

TEST_CASE("found vectors re-verify by annihilation") {
  for (auto& [n, mu0, mu1] :
       std::vector<std::tuple<int, std::string, std::string>>{{3, "-1/2", "1/2"},
                                                              {3, "3/2", "1/2"},
                                                              {4, "-1", "1"}}) {
    std::vector<std::string> mu = {mu1};
    for (int j = 1; j < n / 2; ++j) mu.push_back("0");
    SoWeight w = W(n, mu0, mu);
    SingularReport rep = solve_singular(w, 3);
    REQUIRE(rep.vectors.size() == 1);
    InducedModule M(build_irrep(w), BasisKind::Dual);
    std::string err = verify_annihilation(M, rep.vectors[0].v, 3);
    INFO("weight ", w.str(), " ", err);
    CHECK(err.empty());
  }
}

TEST_CASE("weight scan summarizes per-weight results") {
  std::vector<SoWeight> ws = {W(3, "-1/2", {"1/2"}), W(3, "0", {"1/2"}), W(3, "3/2", {"1/2"})};
  auto rows = scan_weights(3, ws, 3);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].reducible);
  CHECK(rows[0].families == std::vector<std::string>{"A"});
  CHECK_FALSE(rows[1].reducible);
  CHECK(rows[2].reducible);
  CHECK(rows[2].families == std::vector<std::string>{"C3"});
  for (const auto& r : rows) CHECK(r.trivial_dim == 1);
}
