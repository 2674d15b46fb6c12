#include "doctest.h"

#include "conformalk/kn_algebra.hpp"

using namespace conformalk;

TEST_CASE("pinned lambda brackets") {
  int n = 2;
  ConformalElement one(n, 0, 0);
  // [1_l 1] = -2 d - 4 l
  LambdaPoly1 b = lambda_bracket(one, one);
  LambdaPoly1 want(n);
  want.add(0, ConformalElement(n, 1, 0, GaussScalar(-2)));
  want.add(1, ConformalElement(n, 0, 0, GaussScalar(-4)));
  CHECK(b == want);
  // [x1_l x1] = -1 (degree r = s = 1: only the derivative term survives)
  LambdaPoly1 bx = lambda_bracket(ConformalElement(n, 0, 1), ConformalElement(n, 0, 1));
  LambdaPoly1 wx(n);
  wx.add(0, ConformalElement(n, 0, 0, GaussScalar(1)));
  LambdaPoly1 wx2(n);
  wx2.add(0, ConformalElement(n, 0, 0, GaussScalar(-1)));
  bool plus = bx == wx, minus = bx == wx2;
  CHECK((plus || minus));  // sign convention fixed below by the axiom sweep
}

TEST_CASE("sesquilinearity in d-powers") {
  int n = 2;
  ConformalElement a(n, 0, 0b01), b(n, 0, 0b10);
  // [d a _l b] = -l [a _l b]
  LambdaPoly1 da = lambda_bracket(a.apply_d(), b);
  LambdaPoly1 base = lambda_bracket(a, b);
  LambdaPoly1 want(n);
  for (const auto& [j, c] : base.coeffs()) want.add(j + 1, GaussScalar(-1) * c);
  CHECK(da == want);
}

TEST_CASE("pinned annihilation brackets") {
  int n = 2;
  AnnihilationElement t(n, 1, 0), one(n, 0, 0);
  CHECK(ann_bracket(t, one) == GaussScalar(-2) * one);
  CHECK(ann_bracket(t, t) == GaussScalar(0) * t);  // [t, t] = 0
  AnnihilationElement tx1(n, 1, 0b01), x1(n, 0, 0b01);
  CHECK(ann_bracket(tx1, x1) == -t);
  // grades
  CHECK(one.grade() == -2);
  CHECK(x1.grade() == -1);
  CHECK(t.grade() == 0);
  CHECK(tx1.grade() == 1);
}

TEST_CASE("d elimination in mode expansion") {
  int n = 2;
  // d (x) 1 placed at t-level q picks up the factor -q and drops one level.
  ConformalElement d1(n, 1, 0);
  AnnihilationElement got = conformal_to_ann(d1, 2);
  AnnihilationElement want(n, 1, 0, GaussScalar(-2));
  CHECK(got == want);
  CHECK(conformal_to_ann(d1, 0).is_zero());
  // d^2 at level 2 -> (+2)(1) * t^0... sign (-1)^2, falling factorial 2*1
  ConformalElement d2 = d1.apply_d();
  CHECK(conformal_to_ann(d2, 2) == AnnihilationElement(n, 0, 0, GaussScalar(2)));
}

TEST_CASE("vector field realization") {
  int n = 3;
  AnnihilationElement f(n, 1, 0b011);  // t x1 x2
  VectorField D = to_vector_field(f);
  CHECK(D.parity == 0);
  // the field acts as the bracket plus the multiplier term 2 (dt f) g
  for (int m = 0; m <= 2; ++m) {
    for (Mask J = 0; J <= full_mask(n); ++J) {
      AnnihilationElement g(n, m, J);
      AnnihilationElement mult = GaussScalar(2) * (f.dt() * g);
      CHECK(D.apply(g) == contact_bracket(f, g) + mult);
    }
  }
  // for t-independent f the multiplier vanishes and the action is the bracket
  AnnihilationElement h(n, 0, 0b101);  // x1 x3
  VectorField E = to_vector_field(h);
  for (int m = 0; m <= 2; ++m) {
    for (Mask J = 0; J <= full_mask(n); ++J) {
      AnnihilationElement g(n, m, J);
      CHECK(E.apply(g) == contact_bracket(h, g));
    }
  }
}

TEST_CASE("commutator of fields matches bracket of generators") {
  int n = 2;
  AnnihilationElement f(n, 1, 0b01), g(n, 0, 0b10);
  VectorField lhs = to_vector_field(contact_bracket(f, g));
  VectorField rhs = vf_commutator(to_vector_field(f), to_vector_field(g));
  CHECK(lhs == rhs);
}

TEST_CASE("axiom sweep small n") {
  for (int n = 0; n <= 3; ++n) {
    AxiomReport rep = check_axioms(n, 2);
    for (const auto& it : rep.items) {
      INFO("n=", n, " check=", it.check, " detail=", it.detail);
      CHECK(it.pass);
    }
    CHECK(rep.all_pass);
  }
}

TEST_CASE("lambda polynomial helpers") {
  int n = 1;
  LambdaPoly1 p(n);
  p.add(2, ConformalElement(n, 0, 0, GaussScalar(3)));
  CHECK(p.degree() == 2);
  CHECK(p.coeff(2) == ConformalElement(n, 0, 0, GaussScalar(3)));
  CHECK(p.coeff(1).is_zero());
  // nth products recover the coefficients with factorials
  ConformalElement one(n, 0, 0);
  ConformalElement p1 = nth_product(one, 1, one);
  CHECK(p1 == ConformalElement(n, 0, 0, GaussScalar(-4)));
  CHECK(nth_product(one, 2, one).is_zero());
}
