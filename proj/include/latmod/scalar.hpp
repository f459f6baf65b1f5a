#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace latmod {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Which field a workspace is declared over. Scalars always carry an imaginary
// part internally; the rationals mode just forbids nonzero ones at the door.
enum class Field { rationals, gaussian_rationals };

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact Gaussian rational a + b*i with a, b in Q. Values are always kept in
// GMP-canonical form (reduced, positive denominator).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT: implicit by design, mirrors int literals
  explicit Scalar(Rational re) : re_(std::move(re)) {}
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  // Accepts "p", "p/q", "a+b/ci", "a-bi", "bi", "i", "-i" and the like.
  // Whitespace-free. Throws ParseError on anything else or on q == 0.
  static Scalar parse(std::string_view text);

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  Scalar conj() const { return Scalar(re_, -im_); }

  // Squared modulus a^2 + b^2; rational, nonnegative, zero only at zero.
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  Scalar operator-() const { return Scalar(-re_, -im_); }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
  }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar reciprocal() const;

  // Total order (real part first, then imaginary). Not compatible with
  // arithmetic over Q[i]; used only to make canonical forms sortable.
  static int cmp(const Scalar& a, const Scalar& b);
  friend bool operator<(const Scalar& a, const Scalar& b) { return cmp(a, b) < 0; }

  // Canonical text form: "p", "p/q", "a+bi", "a-bi", "bi". Parse round-trips.
  std::string str() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

inline Scalar conj(const Scalar& s) { return s.conj(); }

}  // namespace latmod
