#include <cctype>
#include <optional>
#include <sstream>

#include "cpw/crossed.hpp"

namespace cpw {

namespace {

void skip_ws(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

bool at_digit(std::string_view text, std::size_t pos) {
  return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
}

long long parse_int(std::string_view text, std::size_t& pos) {
  bool neg = false;
  if (pos < text.size() && text[pos] == '-') {
    neg = true;
    ++pos;
  }
  if (!at_digit(text, pos)) fail(Errc::ParseError, "expected an integer", pos);
  std::size_t start = pos;
  while (at_digit(text, pos)) ++pos;
  if (pos - start > 12) fail(Errc::ParseError, "integer literal too large", start);
  long long value = std::stoll(std::string(text.substr(start, pos - start)));
  return neg ? -value : value;
}

// True when the upcoming factor is a scalar rather than an atom. Bare "1"
// counts as the unit atom only in non-leading position.
bool scalar_ahead(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) return false;
  char c = text[pos];
  return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '(' || c == 'i';
}

struct Term {
  GaussianRational scalar{1};
  std::optional<CoeffFn> atoms;
  long long degree = 0;
};

CoeffFn parse_atom(const SystemModel& s, std::string_view text, std::size_t& pos) {
  std::size_t start = pos;
  char c = text[pos];
  if (c == 'e') {
    ++pos;
    if (pos >= text.size() || text[pos] != '_')
      fail(Errc::ParseError, "expected '_' after 'e'", pos);
    ++pos;
    long long index = parse_int(text, pos);
    if (s.kind() == ModelKind::CircleRotation)
      fail(Errc::ParseError, "indicator atoms require a discrete model", start);
    if (s.kind() == ModelKind::FinitePermutation &&
        (index < 0 || index >= s.finite_size()))
      fail(Errc::ParseError, "indicator index outside the finite model", start);
    return CoeffFn::basis(s, index);
  }
  if (c == 't') {
    ++pos;
    long long exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exponent = parse_int(text, pos);
    }
    if (s.kind() != ModelKind::CircleRotation)
      fail(Errc::ParseError, "'t' atoms require the circle model", start);
    return CoeffFn::basis(s, exponent);
  }
  if (c == '1') {
    ++pos;
    if (!s.unital())
      fail(Errc::ParseError, "the model's coefficient algebra has no unit", start);
    return CoeffFn::unit(s);
  }
  fail(Errc::ParseError, "expected a coefficient atom (e_k, t^m or 1)", pos);
}

Term parse_term(const SystemModel& s, std::string_view text, std::size_t& pos) {
  Term term;
  bool first_factor = true;
  bool saw_degree = false;
  while (true) {
    skip_ws(text, pos);
    if (pos >= text.size()) fail(Errc::ParseError, "expected a factor", pos);
    if (saw_degree) fail(Errc::ParseError, "d^ must end its term", pos);
    char c = text[pos];
    if (c == 'd') {
      ++pos;
      if (pos >= text.size() || text[pos] != '^')
        fail(Errc::ParseError, "expected '^' after 'd'", pos);
      ++pos;
      term.degree = parse_int(text, pos);
      saw_degree = true;
    } else if (first_factor && scalar_ahead(text, pos)) {
      term.scalar = detail::parse_scalar_at(text, pos);
    } else if (!first_factor && c == '1' && !at_digit(text, pos + 1) &&
               (pos + 1 >= text.size() || text[pos + 1] != '/')) {
      CoeffFn atom = parse_atom(s, text, pos);
      term.atoms = term.atoms ? coeff_mul(s, *term.atoms, atom) : atom;
    } else if (c == 'e' || c == 't' || c == '1') {
      CoeffFn atom = parse_atom(s, text, pos);
      term.atoms = term.atoms ? coeff_mul(s, *term.atoms, atom) : atom;
    } else if (scalar_ahead(text, pos)) {
      fail(Errc::ParseError, "a scalar may only lead its term", pos);
    } else {
      fail(Errc::ParseError, "expected scalar, coefficient atom, or d^", pos);
    }
    first_factor = false;
    std::size_t after = pos;
    skip_ws(text, pos);
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      continue;
    }
    pos = after;
    return term;
  }
}

CrossedElement term_to_element(const SystemModel& s, const Term& term, std::size_t term_pos) {
  if (term.scalar.is_zero()) return CrossedElement(s);
  CoeffFn base = CoeffFn::zero(s);
  if (term.atoms) {
    base = *term.atoms;
  } else {
    if (!s.unital())
      fail(Errc::ParseError,
           "term needs the unit coefficient but the model is not unital", term_pos);
    base = CoeffFn::unit(s);
  }
  return CrossedElement::monomial(s, coeff_scale(term.scalar, base), term.degree);
}

}  // namespace

CrossedElement parse_element(const SystemModel& s, std::string_view text) {
  std::size_t pos = 0;
  skip_ws(text, pos);
  std::size_t term_pos = pos;
  CrossedElement result = term_to_element(s, parse_term(s, text, pos), term_pos);
  while (true) {
    skip_ws(text, pos);
    if (pos >= text.size()) return result;
    char c = text[pos];
    if (c != '+' && c != '-') fail(Errc::ParseError, "expected '+' or '-' between terms", pos);
    ++pos;
    skip_ws(text, pos);
    term_pos = pos;
    CrossedElement next = term_to_element(s, parse_term(s, text, pos), term_pos);
    result = x_add(result, c == '-' ? x_neg(next) : next);
  }
}

namespace {

std::string atom_text(const SystemModel& s, long long label) {
  if (s.kind() == ModelKind::CircleRotation) {
    if (label == 0) return "";  // the unit atom is left implicit
    if (label == 1) return "t";
    return "t^" + std::to_string(label);
  }
  return "e_" + std::to_string(label);
}

std::string term_text(const GaussianRational& scalar, const std::string& atom,
                      long long degree) {
  std::string out;
  if (!scalar.is_real()) {
    out = "(" + format_scalar(scalar) + ")";
  } else if (scalar != GaussianRational(1)) {
    out = rational_to_string(scalar.re);
  }
  auto append = [&out](const std::string& piece) {
    if (!out.empty()) out += "*";
    out += piece;
  };
  if (!atom.empty()) append(atom);
  if (degree != 0) append("d^" + std::to_string(degree));
  if (out.empty()) out = "1";
  return out;
}

}  // namespace

std::string format_element(const CrossedElement& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [degree, coeff] : f.terms()) {
    for (const auto& [label, value] : coeff.entries()) {
      std::string atom = atom_text(f.model(), label);
      if (first) {
        out << term_text(value, atom, degree);
        first = false;
        continue;
      }
      if (value.is_real() && value.re < 0) {
        out << " - " << term_text(-value, atom, degree);
      } else {
        out << " + " << term_text(value, atom, degree);
      }
    }
  }
  return out.str();
}

}  // namespace cpw
