#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "cpw/error.hpp"

namespace cpw {

/// Exact rational scalar. Canonical form (lowest terms, positive denominator,
/// zero as 0/1) is maintained through GMP's mpq canonicalization.
using Rational = mpq_class;

Rational make_rational(const mpz_class& num, const mpz_class& den);

/// Parses "p" or "p/q" with optional leading '-'. Throws ParseError.
Rational rational_from_string(std::string_view text);
std::string rational_to_string(const Rational& x);

/// Element of the field Q(i): re + im*i with exact rational parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(long value) : re(value), im(0) {}  // NOLINT: converting
  GaussianRational(Rational real) : re(std::move(real)), im(0) {}
  GaussianRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return GaussianRational(re, -im); }
  Rational norm_sq() const { return re * re + im * im; }
  GaussianRational inverse() const;
};

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a);
GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
bool operator==(const GaussianRational& a, const GaussianRational& b);
inline bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

/// Lexicographic comparison on (re, im); the canonical order used wherever
/// Gaussian rationals serve as set keys.
int cmp(const GaussianRational& a, const GaussianRational& b);

struct GaussianRationalLess {
  bool operator()(const GaussianRational& a, const GaussianRational& b) const {
    return cmp(a, b) < 0;
  }
};

/// x^k by repeated squaring; negative k inverts first (DivisionByZero on 0).
GaussianRational gr_pow(const GaussianRational& x, long long k);

/// Canonical scalar text. Examples: "0", "-2", "3/5+4/5i", "1/2-1/3i", "i",
/// "-i", "4/5i", "2+i".
std::string format_scalar(const GaussianRational& x);

/// Parses the full string as one scalar; trailing input is a ParseError.
GaussianRational parse_scalar(std::string_view text);

namespace detail {
/// Scalar sub-parser shared with the element grammar: consumes one scalar
/// starting at `pos` (after leading whitespace), advancing `pos`.
GaussianRational parse_scalar_at(std::string_view text, std::size_t& pos);
}  // namespace detail

std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

}  // namespace cpw
