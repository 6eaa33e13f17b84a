#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cpw/coeff.hpp"

namespace cpw {

/// Finitely supported sum of coefficient functions against powers of the
/// twisting symbol d: a map degree -> coefficient with zero coefficients
/// dropped. Multiplication is twisted convolution.
class CrossedElement {
 public:
  explicit CrossedElement(SystemModel model) : model_(std::move(model)) {}

  static CrossedElement monomial(const SystemModel& s, const CoeffFn& coefficient,
                                 long long degree);

  const SystemModel& model() const { return model_; }
  const std::map<long long, CoeffFn>& terms() const { return terms_; }

  CoeffFn coefficient(long long degree) const;
  std::vector<long long> support_degrees() const;
  bool is_zero() const { return terms_.empty(); }

  long long max_abs_degree() const;  // 0 for the zero element
  long long max_abs_label() const;   // over all coefficients

  /// Adds c into the degree slot, dropping the slot if it cancels.
  void accumulate(long long degree, const CoeffFn& c);

 private:
  SystemModel model_;
  std::map<long long, CoeffFn> terms_;
};

CrossedElement x_add(const CrossedElement& f, const CrossedElement& g);
CrossedElement x_sub(const CrossedElement& f, const CrossedElement& g);
CrossedElement x_neg(const CrossedElement& f);
CrossedElement x_scale(const GaussianRational& c, const CrossedElement& f);

/// Twisted convolution: (f*g)(n) = sum_k f(k) * sigma_hat^k(g(n-k)).
CrossedElement x_mul(const CrossedElement& f, const CrossedElement& g);

bool x_equal(const CrossedElement& f, const CrossedElement& g);

/// Degree-zero coefficient (the zero function if absent).
CoeffFn e_map(const CrossedElement& f);

/// unit * d^n; requires a unital model (NotUnital for the shift).
CrossedElement delta_power(const SystemModel& s, long long n);
CrossedElement unit_element(const SystemModel& s);

/// Element grammar. Whitespace-insensitive; terms joined by '+'/'-', each a
/// '*'-product of an optional scalar, coefficient atoms (e_k / t^m / 1) and
/// an optional trailing d^n. Canonical output: ascending degree, one basis
/// atom per term, complex scalars parenthesized.
CrossedElement parse_element(const SystemModel& s, std::string_view text);
std::string format_element(const CrossedElement& f);

}  // namespace cpw
