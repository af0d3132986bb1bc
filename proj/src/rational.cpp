#include "kpferm/rational.hpp"

#include "kpferm/error.hpp"

#include <cctype>

namespace kpferm {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

ExtRational& ExtRational::operator+=(const ExtRational& o) {
  for (std::size_t k = 0; k < 4; ++k) c_[k] += o.c_[k];
  return *this;
}

ExtRational& ExtRational::operator-=(const ExtRational& o) {
  for (std::size_t k = 0; k < 4; ++k) c_[k] -= o.c_[k];
  return *this;
}

// (a + b i + c r + d i r)(e + f i + g r + h i r) with i^2 = -1, r^2 = 2.
ExtRational& ExtRational::operator*=(const ExtRational& o) {
  const auto& [a, b, c, d] = c_;
  const auto& [e, f, g, h] = o.c_;
  Rational one = a * e - b * f + 2 * c * g - 2 * d * h;
  Rational im = a * f + b * e + 2 * c * h + 2 * d * g;
  Rational r = a * g + c * e - b * h - d * f;
  Rational ir = a * h + d * e + b * g + c * f;
  c_ = {std::move(one), std::move(im), std::move(r), std::move(ir)};
  return *this;
}

std::string ExtRational::to_string() const {
  static const char* const names[4] = {"", "i", "sqrt2", "i*sqrt2"};
  std::string out;
  for (std::size_t k = 0; k < 4; ++k) {
    if (is_zero(c_[k])) continue;
    if (!out.empty()) out += " + ";
    out += "(" + format_rational(c_[k]) + ")";
    if (k > 0) out += std::string("*") + names[k];
  }
  return out.empty() ? "0" : out;
}

}  // namespace kpferm
