#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "conformalk/scalar.hpp"

namespace conformalk {

// A monomial xi_I in the Grassmann algebra Lambda(n) is a bitmask: bit k-1 set
// means xi_k is a factor, factors in increasing index order. n <= 30.
using Mask = std::uint32_t;

inline int mono_degree(Mask I) { return __builtin_popcount(I); }
inline int mono_parity(Mask I) { return mono_degree(I) & 1; }
inline Mask full_mask(int n) { return (Mask(1) << n) - 1; }

// #{j in I : j < i}; the sign of the left derivative d_i xi_I is (-1)^epsilon.
inline int epsilon_before(int i, Mask I) {
  return __builtin_popcount(I & ((Mask(1) << (i - 1)) - 1));
}

// xi_I * xi_J: zero if the masks intersect, else (sign, I|J) where the sign
// counts the transpositions that merge the two increasing factor lists.
std::pair<int, Mask> mul_monomials(Mask I, Mask J);

std::vector<int> mask_indices(Mask I);  // ascending

// Sparse element of Lambda(n) with exact Q(i) coefficients. Invariant: no
// explicit zero coefficients are stored.
class GrassmannElement {
 public:
  GrassmannElement() : n_(0) {}
  explicit GrassmannElement(int n) : n_(n) {}
  GrassmannElement(int n, Mask I, GaussScalar c = GaussScalar(1)) : n_(n) {
    add_term(I, std::move(c));
  }

  static GrassmannElement zero(int n) { return GrassmannElement(n); }
  static GrassmannElement one(int n) { return GrassmannElement(n, 0); }

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Mask, GaussScalar>& terms() const { return terms_; }
  GaussScalar coeff(Mask I) const {
    auto it = terms_.find(I);
    return it == terms_.end() ? GaussScalar() : it->second;
  }

  void add_term(Mask I, GaussScalar c);

  // -1 if not homogeneous (mixed parities), else 0/1.
  int parity() const;
  bool is_homogeneous_degree() const;  // single Lambda-degree
  int degree() const;                  // requires degree-homogeneous

  GrassmannElement operator-() const;
  GrassmannElement& operator+=(const GrassmannElement& o);
  GrassmannElement& operator-=(const GrassmannElement& o);
  friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) { return a += b; }
  friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) { return a -= b; }
  friend GrassmannElement operator*(const GaussScalar& c, const GrassmannElement& a);
  friend GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b);
  friend bool operator==(const GrassmannElement& a, const GrassmannElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  int n_;
  std::map<Mask, GaussScalar> terms_;
};

// Left derivative d_i.
GrassmannElement derive(int i, const GrassmannElement& f);
// d_L = d_{l_1} ... d_{l_s} for the ascending index list of L (rightmost acts
// first). This is the operator written with a monomial subscript: for
// f = c * xi_L, derive_by(f, g) = c * d_L(g), extended linearly in f.
GrassmannElement derive_multi(Mask L, const GrassmannElement& g);
GrassmannElement derive_by(const GrassmannElement& f, const GrassmannElement& g);

// Hodge conjugate: the unique element with hodge(xi_I) * xi_I = xi_1...xi_n.
GrassmannElement hodge(const GrassmannElement& f);
// The sign sigma with hodge(xi_I) = sigma * xi_{I^c}.
int hodge_sign(int n, Mask I);

// Text syntax: "x1 x3 x4" (factors ascending) or "1" for the empty monomial.
Mask parse_monomial(int n, const std::string& text);
std::string format_monomial(Mask I);

}  // namespace conformalk
