#include "conformalk/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace conformalk {

namespace {

mpq_class parse_rational(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw ParseError("bad rational literal: " + s);
  }
  try {
    mpq_class q(s);
    if (q.get_den() == 0) throw ParseError("zero denominator: " + s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal: " + s);
  }
}

std::string rat_str(const mpq_class& q) {
  std::ostringstream os;
  os << q;  // gmpxx prints "p" or "p/q", canonical
  return os.str();
}

}  // namespace

GaussScalar GaussScalar::ratio(long num, long den) {
  if (den == 0) throw DivisionByZero();
  mpq_class q(num, den);
  q.canonicalize();
  return GaussScalar(std::move(q));
}

GaussScalar GaussScalar::parse(const std::string& re, const std::string& im) {
  return GaussScalar(parse_rational(re), parse_rational(im));
}

std::string GaussScalar::re_str() const { return rat_str(re_); }
std::string GaussScalar::im_str() const { return rat_str(im_); }

std::string GaussScalar::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  if (re_ != 0) {
    os << re_;
    if (im_ > 0) os << "+";
  }
  if (im_ != 0) {
    if (im_ == -1)
      os << "-";
    else if (im_ != 1)
      os << im_;
    os << "i";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussScalar& z) { return os << z.str(); }

}  // namespace conformalk
