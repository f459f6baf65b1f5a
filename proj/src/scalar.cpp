#include "latmod/scalar.hpp"

#include <cctype>

namespace latmod {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Parses "p" or "p/q" with optional leading sign into a canonical Rational.
Rational parse_rational(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("bad rational literal: '" + std::string(s) + "'");
  Integer p{std::string(num)}, q{std::string(den)};
  if (q.is_zero()) throw ParseError("zero denominator: '" + std::string(s) + "'");
  if (neg) p = -p;
  return Rational(p, q);  // the (num, den) ctor canonicalizes
}

std::string rational_str(const Rational& r) { return r.str(); }

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty scalar");
  if (text.back() != 'i') return Scalar(parse_rational(text));

  // Trailing 'i': split off the imaginary coefficient. The real part, if
  // present, ends at the last sign that is not a leading sign of the string.
  std::string_view body = text.substr(0, text.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) {
    std::string_view coef = body;
    if (coef.empty() || coef == "+" || coef == "-") {
      Rational one(1);
      return Scalar(Rational(0), coef == "-" ? -one : one);
    }
    return Scalar(Rational(0), parse_rational(coef));
  }
  std::string_view re_part = body.substr(0, split);
  std::string_view im_part = body.substr(split);  // keeps the sign
  Rational im = (im_part == "+" || im_part == "-")
                    ? (im_part == "-" ? Rational(-1) : Rational(1))
                    : parse_rational(im_part);
  return Scalar(parse_rational(re_part), std::move(im));
}

Scalar Scalar::reciprocal() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  Rational n = norm2();
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.reciprocal(); }

int Scalar::cmp(const Scalar& a, const Scalar& b) {
  if (a.re_ < b.re_) return -1;
  if (b.re_ < a.re_) return 1;
  if (a.im_ < b.im_) return -1;
  if (b.im_ < a.im_) return 1;
  return 0;
}

std::string Scalar::str() const {
  if (im_.is_zero()) return rational_str(re_);
  std::string out;
  if (!re_.is_zero()) {
    out = rational_str(re_);
    if (im_ > 0) out += '+';
  }
  // Unit coefficients print as a bare "i" so that str is a parse fixed point.
  if (im_ == -1)
    out += '-';
  else if (im_ != 1)
    out += rational_str(im_);
  out += 'i';
  return out;
}

}  // namespace latmod
