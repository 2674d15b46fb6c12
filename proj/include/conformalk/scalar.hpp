#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace conformalk {

// Thrown on x/0 in Q(i). GMP itself would raise SIGFPE; we never let it.
struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("GaussScalar: division by zero") {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Element of Q(i): re + im*i with exact arbitrary-precision rational parts.
// Both parts are always canonical (reduced, denominator > 0); mpq_class
// arithmetic preserves canonical form, so only construction needs care.
class GaussScalar {
 public:
  GaussScalar() : re_(0), im_(0) {}
  GaussScalar(int v) : re_(v), im_(0) {}
  GaussScalar(long v) : re_(v), im_(0) {}
  GaussScalar(mpq_class re) : re_(std::move(re)), im_(0) {}
  GaussScalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussScalar i() { return GaussScalar(mpq_class(0), mpq_class(1)); }
  // num/den constructor, canonicalized.
  static GaussScalar ratio(long num, long den);
  // Accepts "p", "-p", "p/q" for each part.
  static GaussScalar parse(const std::string& re, const std::string& im = "0");

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussScalar conj() const { return GaussScalar(re_, -im_); }
  // |z|^2 = z * conj(z), a rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussScalar operator-() const { return GaussScalar(-re_, -im_); }

  GaussScalar& operator+=(const GaussScalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussScalar& operator-=(const GaussScalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussScalar& operator*=(const GaussScalar& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
  }
  GaussScalar& operator/=(const GaussScalar& o) {
    if (o.is_zero()) throw DivisionByZero();
    mpq_class n = o.norm();
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
    im_ = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    return *this;
  }

  friend GaussScalar operator+(GaussScalar a, const GaussScalar& b) { return a += b; }
  friend GaussScalar operator-(GaussScalar a, const GaussScalar& b) { return a -= b; }
  friend GaussScalar operator*(GaussScalar a, const GaussScalar& b) { return a *= b; }
  friend GaussScalar operator/(GaussScalar a, const GaussScalar& b) { return a /= b; }

  GaussScalar inverse() const {
    GaussScalar one(1);
    return one /= *this;
  }

  friend bool operator==(const GaussScalar& a, const GaussScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussScalar& a, const GaussScalar& b) { return !(a == b); }
  // Total order (re, then im); used only for canonical container ordering.
  friend bool operator<(const GaussScalar& a, const GaussScalar& b) {
    int c = cmp(a.re_, b.re_);
    if (c != 0) return c < 0;
    return cmp(a.im_, b.im_) < 0;
  }

  // "p/q" with "/1" suppressed; matches the JSON wire format.
  std::string re_str() const;
  std::string im_str() const;
  // Human-readable: "0", "3/2", "i", "-2i", "1+i", "1/2-3i".
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const GaussScalar& z);

 private:
  mpq_class re_, im_;
};

}  // namespace conformalk
