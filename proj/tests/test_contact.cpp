#include "doctest.h"

#include "conformalk/contact_forms.hpp"

using namespace conformalk;

namespace {
FormElement fmono(int n, Side side, FormMonomial m) {
  FormElement e(n, side);
  e.add_term(m, GaussScalar(1));
  return e;
}
}  // namespace

TEST_CASE("contact form pins") {
  int n = 3;
  FormElement om = contact_omega(n);
  CHECK(wedge(om, om).is_zero());
  FormElement dom = d_form(om);
  // d omega = - sum (dxi_i)^2
  FormElement want(n, Side::Plus);
  for (int i = 0; i < n; ++i) {
    FormMonomial m;
    m.dxi.assign(n, 0);
    m.dxi[i] = 2;
    want.add_term(m, GaussScalar(-1));
  }
  CHECK(dom == want);
  CHECK(d_form(dom).is_zero());
}

TEST_CASE("differential and wedge bookkeeping") {
  int n = 2;
  FormMonomial t2;
  t2.tPow = 2;
  t2.dxi.assign(n, 0);
  // d(t^2) = 2 t dt
  FormElement dt2 = d_form(fmono(n, Side::Plus, t2));
  FormMonomial tdt;
  tdt.tPow = 1;
  tdt.dtFlag = 1;
  tdt.dxi.assign(n, 0);
  FormElement want(n, Side::Plus);
  want.add_term(tdt, GaussScalar(2));
  CHECK(dt2 == want);
  // weights add under wedge; degrees add too
  FormMonomial x1;
  x1.I = 0b01;
  x1.dxi.assign(n, 0);
  FormElement w = wedge(fmono(n, Side::Plus, tdt), fmono(n, Side::Plus, x1));
  REQUIRE(w.terms().size() == 1);
  const auto& m = w.terms().begin()->first;
  CHECK(form_weight(m) == form_weight(tdt) + form_weight(x1));
  CHECK(form_degree(m) == 1);
  CHECK(form_parity(m) == 0);
}

TEST_CASE("square-zero and homotopy sweeps") {
  CHECK(d_squared_check(3, 3, 3).ok);
  HomotopyReport h = homotopy_check(3, 3, 3);
  INFO(h.detail);
  CHECK(h.ok);
  CHECK(h.cases > 0);
}

TEST_CASE("lie derivative on functions is the vector field") {
  int n = 3;
  for (int m = 0; m <= 1; ++m) {
    for (Mask I = 0; I <= full_mask(n); ++I) {
      AnnihilationElement D(n, m, I);
      VectorField X = to_vector_field(D);
      for (int a = 0; a <= 2; ++a) {
        for (Mask J = 0; J <= full_mask(n); J += 3) {
          FormMonomial fm;
          fm.tPow = a;
          fm.I = J;
          fm.dxi.assign(n, 0);
          FormElement got = lie_derivative(D, fmono(n, Side::Plus, fm));
          AnnihilationElement expect = X.apply(AnnihilationElement(n, a, J));
          FormElement want(n, Side::Plus);
          for (const auto& [key, c] : expect.terms()) {
            FormMonomial wm;
            wm.tPow = key.first;
            wm.I = key.second;
            wm.dxi.assign(n, 0);
            want.add_term(wm, c);
          }
          CHECK(got == want);
        }
      }
    }
  }
}

TEST_CASE("ideal slices are differential and invariant") {
  CHECK(check_ideal_d_closure(3, Side::Plus, 3, 3).empty());
  CHECK(check_ideal_d_closure(3, Side::Minus, 3, 3).empty());
  CHECK(check_ideal_invariance(3, Side::Plus, 2, 2, 2).empty());
  CHECK(check_ideal_invariance(3, Side::Minus, 2, 2, 2).empty());
}

TEST_CASE("lie derivative commutes with d and represents the bracket") {
  CHECK(check_lie_d_commute(3, Side::Plus, 2, 2).empty());
  CHECK(check_lie_d_commute(3, Side::Minus, 2, 2).empty());
  CHECK(check_lie_bracket_action(2, Side::Plus, 2, 2).empty());
  CHECK(check_lie_bracket_action(2, Side::Minus, 2, 2).empty());
}

TEST_CASE("quotient complex exactness at n=3") {
  QuotientComplex plus = quotient_complex(3, Side::Plus, 3, 3);
  ExactnessReport rp = exactness_check(plus);
  INFO(rp.str());
  // augmented at degree zero by the constants; nothing else survives
  for (const auto& [k, d] : rp.level_defect) CHECK(d == 0);
  CHECK(rp.level_kernel.at(0) == 1);

  QuotientComplex minus = quotient_complex(3, Side::Minus, 3, 3);
  ExactnessReport rm = exactness_check(minus);
  INFO(rm.str());
  CHECK(rm.level_kernel.at(0) == 0);
  CHECK(rm.level_defect.at(1) == 1);
  CHECK(rm.level_defect.at(2) == 0);
}

TEST_CASE("extreme vectors carry the advertised weights") {
  for (int k = 0; k <= 2; ++k) {
    GammaInfo gm = gamma_weights(4, k, Side::Minus);
    INFO("k=", k, " ", gm.detail);
    CHECK(gm.annihilated);
    CHECK(gm.module_weight.mu0 == 2 + k);
    CHECK(gm.module_weight.mu[0] == k);
    CHECK(gm.module_weight.mu[1] == 0);
    GammaInfo gp = gamma_weights(4, k, Side::Plus);
    INFO("k=", k, " ", gp.detail);
    CHECK(gp.annihilated);
    CHECK(gp.module_weight.mu0 == -k);
    CHECK(gp.module_weight.mu[0] == k);
  }
}

TEST_CASE("graded characters match the induced picture") {
  for (int l = 0; l <= 2; ++l) {
    CharacterReport r = graded_character_compare(3, l, 4);
    INFO("l=", l, "\n", r.str());
    CHECK(r.ok);
  }
}

TEST_CASE("harmonic dimensions") {
  CHECK(gamma_dim(3, 0) == 1);
  CHECK(gamma_dim(3, 1) == 3);
  CHECK(gamma_dim(3, 2) == 5);
  CHECK(gamma_dim(4, 2) == 9);
  CHECK(gamma_dim(5, 3) == 30);
}

TEST_CASE("component enumeration is exact") {
  // each (I, eps, c) with matching parity determines the t-power uniquely
  auto mono3 = component_monomials(3, 1, Side::Plus, 3);
  for (const auto& m : mono3) {
    CHECK(form_degree(m) == 1);
    CHECK(form_weight(m) == 3);
    CHECK(m.tPow >= 0);
  }
  auto monoM = component_monomials(3, 1, Side::Minus, -1);
  CHECK(!monoM.empty());
  for (const auto& m : monoM) CHECK(m.tPow <= -1);
}

TEST_CASE("wrong-side terms are rejected") {
  FormMonomial neg;
  neg.tPow = -1;
  neg.dxi.assign(2, 0);
  FormElement plus(2, Side::Plus);
  CHECK_THROWS_AS(plus.add_term(neg, GaussScalar(1)), std::domain_error);
  FormMonomial pos;
  pos.dxi.assign(2, 0);
  FormElement minus(2, Side::Minus);
  CHECK_THROWS_AS(minus.add_term(pos, GaussScalar(1)), std::domain_error);
}
