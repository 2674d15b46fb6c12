#include "doctest.h"

#include "conformalk/grassmann.hpp"

using namespace conformalk;

namespace {
GrassmannElement mono(int n, Mask I) { return GrassmannElement(n, I); }
}  // namespace

TEST_CASE("monomial product signs") {
  auto [s12, m12] = mul_monomials(0b01, 0b10);
  CHECK(s12 == 1);
  CHECK(m12 == 0b11);
  auto [s21, m21] = mul_monomials(0b10, 0b01);
  CHECK(s21 == -1);
  CHECK(m21 == 0b11);
  // x1 x3 * x2: one transposition moves x2 past x3
  auto [s, m] = mul_monomials(0b101, 0b010);
  CHECK(s == -1);
  CHECK(m == 0b111);
  // overlapping factors square to zero
  CHECK(mul_monomials(0b01, 0b01).first == 0);
}

TEST_CASE("product is associative and graded-commutative") {
  int n = 4;
  Mask top = full_mask(n);
  for (Mask a = 0; a <= top; ++a) {
    for (Mask b = 0; b <= top; ++b) {
      GrassmannElement ab = mono(n, a) * mono(n, b);
      // graded commutativity on monomials
      GrassmannElement ba = mono(n, b) * mono(n, a);
      int sgn = (mono_degree(a) * mono_degree(b)) % 2 == 1 ? -1 : 1;
      CHECK(ab == GaussScalar(sgn) * ba);
      for (Mask c = 0; c <= top; ++c) {
        CHECK((ab * mono(n, c)) == (mono(n, a) * (mono(n, b) * mono(n, c))));
      }
    }
  }
}

TEST_CASE("left derivatives") {
  int n = 3;
  GrassmannElement x12 = mono(n, 0b011);
  CHECK(derive(1, x12) == mono(n, 0b010));                      // d1(x1 x2) = x2
  CHECK(derive(2, x12) == GaussScalar(-1) * mono(n, 0b001));    // d2(x1 x2) = -x1
  CHECK(derive(3, x12).is_zero());
  // Leibniz: d_i(fg) = (d_i f) g + (-1)^{|f|} f (d_i g) on monomials
  Mask top = full_mask(n);
  for (int i = 1; i <= n; ++i) {
    for (Mask a = 0; a <= top; ++a) {
      for (Mask b = 0; b <= top; ++b) {
        GrassmannElement lhs = derive(i, mono(n, a) * mono(n, b));
        GrassmannElement rhs = derive(i, mono(n, a)) * mono(n, b);
        GrassmannElement sec = mono(n, a) * derive(i, mono(n, b));
        if (mono_parity(a)) sec = -sec;
        rhs += sec;
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("composite derivative matches iterated singles") {
  int n = 4;
  Mask top = full_mask(n);
  for (Mask L = 0; L <= top; ++L) {
    for (Mask g = 0; g <= top; ++g) {
      GrassmannElement got = derive_multi(L, mono(n, g));
      GrassmannElement want = mono(n, g);
      auto idx = mask_indices(L);
      for (auto it = idx.rbegin(); it != idx.rend(); ++it) want = derive(*it, want);
      CHECK(got == want);
    }
  }
}

TEST_CASE("hodge conjugate") {
  for (int n = 1; n <= 5; ++n) {
    Mask top = full_mask(n);
    for (Mask I = 0; I <= top; ++I) {
      GrassmannElement prod = hodge(mono(n, I)) * mono(n, I);
      CHECK(prod == mono(n, top));
      CHECK(hodge(mono(n, I)) == GaussScalar(hodge_sign(n, I)) * mono(n, top & ~I));
    }
  }
}

TEST_CASE("monomial text syntax") {
  CHECK(parse_monomial(4, "x1 x3 x4") == 0b1101);
  CHECK(parse_monomial(4, "1") == 0);
  CHECK(format_monomial(0b1101) == "x1 x3 x4");
  CHECK(format_monomial(0) == "1");
  CHECK_THROWS(parse_monomial(2, "x3"));
  CHECK_THROWS(parse_monomial(4, "x1 x1"));
}

TEST_CASE("element bookkeeping") {
  GrassmannElement f(3);
  f.add_term(0b001, GaussScalar(2));
  f.add_term(0b001, GaussScalar(-2));
  CHECK(f.is_zero());  // cancelled terms are dropped
  f.add_term(0b011, GaussScalar(1));
  CHECK(f.parity() == 0);
  f.add_term(0b100, GaussScalar(1));
  CHECK(f.parity() == -1);  // mixed
  CHECK(f.coeff(0b011) == GaussScalar(1));
  CHECK(f.coeff(0b111).is_zero());
}
