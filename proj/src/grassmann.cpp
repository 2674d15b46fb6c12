#include "conformalk/grassmann.hpp"

#include <sstream>

namespace conformalk {

std::pair<int, Mask> mul_monomials(Mask I, Mask J) {
  if (I & J) return {0, 0};
  // Each j in J crosses every i in I with i > j.
  int swaps = 0;
  Mask rest = J;
  while (rest) {
    int j = __builtin_ctz(rest);  // 0-based
    rest &= rest - 1;
    swaps += __builtin_popcount(I >> (j + 1));
  }
  return {(swaps & 1) ? -1 : 1, I | J};
}

std::vector<int> mask_indices(Mask I) {
  std::vector<int> out;
  while (I) {
    out.push_back(__builtin_ctz(I) + 1);
    I &= I - 1;
  }
  return out;
}

void GrassmannElement::add_term(Mask I, GaussScalar c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(I, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int GrassmannElement::parity() const {
  int p = -1;
  for (auto& [I, c] : terms_) {
    int q = mono_parity(I);
    if (p == -1)
      p = q;
    else if (p != q)
      return -1;
  }
  return p == -1 ? 0 : p;
}

bool GrassmannElement::is_homogeneous_degree() const {
  int d = -1;
  for (auto& [I, c] : terms_) {
    if (d == -1)
      d = mono_degree(I);
    else if (d != mono_degree(I))
      return false;
  }
  return true;
}

int GrassmannElement::degree() const {
  return terms_.empty() ? 0 : mono_degree(terms_.begin()->first);
}

GrassmannElement GrassmannElement::operator-() const {
  GrassmannElement r(n_);
  for (auto& [I, c] : terms_) r.terms_.emplace(I, -c);
  return r;
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& o) {
  for (auto& [I, c] : o.terms_) add_term(I, c);
  return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& o) {
  for (auto& [I, c] : o.terms_) add_term(I, -c);
  return *this;
}

GrassmannElement operator*(const GaussScalar& c, const GrassmannElement& a) {
  GrassmannElement r(a.n_);
  if (c.is_zero()) return r;
  for (auto& [I, x] : a.terms_) r.terms_.emplace(I, c * x);
  return r;
}

GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
  GrassmannElement r(a.n_);
  for (auto& [I, x] : a.terms_)
    for (auto& [J, y] : b.terms_) {
      auto [sgn, K] = mul_monomials(I, J);
      if (sgn == 0) continue;
      GaussScalar c = x * y;
      if (sgn < 0) c = -c;
      r.add_term(K, std::move(c));
    }
  return r;
}

GrassmannElement derive(int i, const GrassmannElement& f) {
  GrassmannElement r(f.n());
  Mask bit = Mask(1) << (i - 1);
  for (auto& [I, c] : f.terms()) {
    if (!(I & bit)) continue;
    int sgn = (epsilon_before(i, I) & 1) ? -1 : 1;
    r.add_term(I & ~bit, sgn < 0 ? -c : c);
  }
  return r;
}

GrassmannElement derive_multi(Mask L, const GrassmannElement& g) {
  // d_{l_1} ... d_{l_s} with l_1 < ... < l_s: rightmost factor acts first.
  GrassmannElement r = g;
  auto idx = mask_indices(L);
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
    if (r.is_zero()) break;
    r = derive(*it, r);
  }
  return r;
}

GrassmannElement derive_by(const GrassmannElement& f, const GrassmannElement& g) {
  GrassmannElement r(g.n());
  for (auto& [L, c] : f.terms()) {
    GrassmannElement d = derive_multi(L, g);
    r += c * d;
  }
  return r;
}

int hodge_sign(int n, Mask I) {
  auto [sgn, K] = mul_monomials(full_mask(n) & ~I, I);
  (void)K;
  return sgn;
}

GrassmannElement hodge(const GrassmannElement& f) {
  int n = f.n();
  GrassmannElement r(n);
  for (auto& [I, c] : f.terms()) {
    int sgn = hodge_sign(n, I);
    r.add_term(full_mask(n) & ~I, sgn < 0 ? -c : c);
  }
  return r;
}

std::string GrassmannElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [I, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << format_monomial(I);
  }
  return os.str();
}

Mask parse_monomial(int n, const std::string& text) {
  std::istringstream is(text);
  std::string tok;
  Mask I = 0;
  bool saw_any = false;
  while (is >> tok) {
    saw_any = true;
    if (tok == "1") continue;
    if (tok.size() < 2 || tok[0] != 'x') throw ParseError("bad monomial factor: " + tok);
    int k = 0;
    for (size_t p = 1; p < tok.size(); ++p) {
      if (!std::isdigit(static_cast<unsigned char>(tok[p])))
        throw ParseError("bad monomial factor: " + tok);
      k = 10 * k + (tok[p] - '0');
    }
    if (k < 1 || k > n) throw ParseError("factor index out of range: " + tok);
    Mask bit = Mask(1) << (k - 1);
    if (I & bit) throw ParseError("repeated factor: " + tok);
    if (I & ~(bit | (bit - 1))) throw ParseError("factors must be ascending: " + tok);
    I |= bit;
  }
  if (!saw_any) throw ParseError("empty monomial text");
  return I;
}

std::string format_monomial(Mask I) {
  if (!I) return "1";
  std::ostringstream os;
  bool first = true;
  for (int i : mask_indices(I)) {
    if (!first) os << " ";
    first = false;
    os << "x" << i;
  }
  return os.str();
}

}  // namespace conformalk
