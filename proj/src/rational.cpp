#include "cpw/rational.hpp"

#include <cctype>
#include <ostream>

namespace cpw {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ParseError: return "ParseError";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::KindMismatch: return "KindMismatch";
    case Errc::ModelMismatch: return "ModelMismatch";
    case Errc::ZeroPeriod: return "ZeroPeriod";
    case Errc::Unsupported: return "Unsupported";
    case Errc::NotSeparable: return "NotSeparable";
    case Errc::NotUnital: return "NotUnital";
    case Errc::NotRegularModel: return "NotRegularModel";
    case Errc::EmptyGenerators: return "EmptyGenerators";
    case Errc::WindowOverflow: return "WindowOverflow";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::ConfigError: return "ConfigError";
  }
  return "UnknownError";
}

Rational make_rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) fail(Errc::DivisionByZero, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& x) { return x.get_str(); }

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
  Rational n = norm_sq();
  return GaussianRational(re / n, -im / n);
}

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
  return GaussianRational(a.re + b.re, a.im + b.im);
}

GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
  return GaussianRational(a.re - b.re, a.im - b.im);
}

GaussianRational operator-(const GaussianRational& a) {
  return GaussianRational(-a.re, -a.im);
}

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
  return GaussianRational(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  if (b.is_zero()) fail(Errc::DivisionByZero, "division by zero");
  return a * b.inverse();
}

bool operator==(const GaussianRational& a, const GaussianRational& b) {
  return a.re == b.re && a.im == b.im;
}

int cmp(const GaussianRational& a, const GaussianRational& b) {
  int c = ::cmp(a.re, b.re);
  if (c != 0) return c;
  return ::cmp(a.im, b.im);
}

GaussianRational gr_pow(const GaussianRational& x, long long k) {
  GaussianRational base = x;
  if (k < 0) {
    base = x.inverse();
    k = -k;
  }
  GaussianRational acc(1);
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

namespace {

void skip_ws(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

bool at_digit(std::string_view text, std::size_t pos) {
  return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
}

mpz_class parse_digits(std::string_view text, std::size_t& pos) {
  if (!at_digit(text, pos)) fail(Errc::ParseError, "expected digits", pos);
  std::size_t start = pos;
  while (at_digit(text, pos)) ++pos;
  return mpz_class(std::string(text.substr(start, pos - start)), 10);
}

// rat := ['-'] digits ['/' digits], with the sign handled by the caller.
Rational parse_unsigned_rational(std::string_view text, std::size_t& pos) {
  mpz_class num = parse_digits(text, pos);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    mpz_class den = parse_digits(text, pos);
    if (den == 0) fail(Errc::ParseError, "zero denominator", pos);
    return make_rational(num, den);
  }
  return Rational(num);
}

// One scalar without surrounding parentheses. Accepted forms: "p/q",
// "-p/q", "i", "-i", "p/q i-suffix", "a+bi", "a-bi", "a+i", "a-i".
GaussianRational parse_scalar_body(std::string_view text, std::size_t& pos) {
  skip_ws(text, pos);
  bool neg = false;
  if (pos < text.size() && text[pos] == '-') {
    neg = true;
    ++pos;
    skip_ws(text, pos);
  }
  if (pos < text.size() && text[pos] == 'i') {
    ++pos;
    return GaussianRational(Rational(0), Rational(neg ? -1 : 1));
  }
  Rational first = parse_unsigned_rational(text, pos);
  if (neg) first = -first;
  std::size_t save = pos;
  skip_ws(text, pos);
  if (pos < text.size() && text[pos] == 'i') {
    ++pos;
    return GaussianRational(Rational(0), first);
  }
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    bool neg2 = text[pos] == '-';
    ++pos;
    skip_ws(text, pos);
    if (pos < text.size() && text[pos] == 'i') {
      ++pos;
      return GaussianRational(first, Rational(neg2 ? -1 : 1));
    }
    if (at_digit(text, pos)) {
      Rational second = parse_unsigned_rational(text, pos);
      skip_ws(text, pos);
      if (pos < text.size() && text[pos] == 'i') {
        ++pos;
        return GaussianRational(first, neg2 ? -second : second);
      }
      // No trailing 'i': the '+/-' belonged to the surrounding expression.
      pos = save;
      return GaussianRational(first);
    }
    pos = save;
    return GaussianRational(first);
  }
  pos = save;
  return GaussianRational(first);
}

}  // namespace

namespace detail {

GaussianRational parse_scalar_at(std::string_view text, std::size_t& pos) {
  skip_ws(text, pos);
  if (pos < text.size() && text[pos] == '(') {
    ++pos;
    GaussianRational value = parse_scalar_body(text, pos);
    skip_ws(text, pos);
    if (pos >= text.size() || text[pos] != ')') fail(Errc::ParseError, "expected ')'", pos);
    ++pos;
    return value;
  }
  return parse_scalar_body(text, pos);
}

}  // namespace detail

Rational rational_from_string(std::string_view text) {
  std::size_t pos = 0;
  skip_ws(text, pos);
  bool neg = false;
  if (pos < text.size() && text[pos] == '-') {
    neg = true;
    ++pos;
  }
  Rational r = parse_unsigned_rational(text, pos);
  skip_ws(text, pos);
  if (pos != text.size()) fail(Errc::ParseError, "trailing input after rational", pos);
  return neg ? Rational(-r) : r;
}

GaussianRational parse_scalar(std::string_view text) {
  std::size_t pos = 0;
  GaussianRational value = detail::parse_scalar_at(text, pos);
  skip_ws(text, pos);
  if (pos != text.size()) fail(Errc::ParseError, "trailing input after scalar", pos);
  return value;
}

std::string format_scalar(const GaussianRational& x) {
  if (x.is_zero()) return "0";
  if (x.im == 0) return rational_to_string(x.re);
  std::string imag;
  if (x.im == 1) {
    imag = "i";
  } else if (x.im == -1) {
    imag = "-i";
  } else {
    imag = rational_to_string(x.im) + "i";
  }
  if (x.re == 0) return imag;
  if (x.im > 0) return rational_to_string(x.re) + "+" + imag;
  if (x.im == -1) return rational_to_string(x.re) + "-i";
  return rational_to_string(x.re) + imag;  // imag already carries the '-'
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) {
  return os << format_scalar(x);
}

}  // namespace cpw
