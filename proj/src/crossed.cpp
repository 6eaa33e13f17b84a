#include "cpw/crossed.hpp"

#include <algorithm>
#include <cstdlib>

namespace cpw {

CrossedElement CrossedElement::monomial(const SystemModel& s, const CoeffFn& coefficient,
                                        long long degree) {
  require_matching_coeff(s, coefficient);
  CrossedElement f(s);
  if (!coefficient.is_zero()) f.terms_.emplace(degree, coefficient);
  return f;
}

CoeffFn CrossedElement::coefficient(long long degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? CoeffFn::zero(model_) : it->second;
}

std::vector<long long> CrossedElement::support_degrees() const {
  std::vector<long long> degrees;
  degrees.reserve(terms_.size());
  for (const auto& [degree, coeff] : terms_) degrees.push_back(degree);
  return degrees;
}

long long CrossedElement::max_abs_degree() const {
  long long best = 0;
  for (const auto& [degree, coeff] : terms_) best = std::max(best, std::llabs(degree));
  return best;
}

long long CrossedElement::max_abs_label() const {
  long long best = 0;
  for (const auto& [degree, coeff] : terms_) best = std::max(best, coeff.max_abs_label());
  return best;
}

void CrossedElement::accumulate(long long degree, const CoeffFn& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(degree);
  if (it == terms_.end()) {
    terms_.emplace(degree, c);
    return;
  }
  CoeffFn sum = coeff_add(model_, it->second, c);
  if (sum.is_zero())
    terms_.erase(it);
  else
    it->second = std::move(sum);
}

CrossedElement x_add(const CrossedElement& f, const CrossedElement& g) {
  require_same_model(f.model(), g.model());
  CrossedElement out = f;
  for (const auto& [degree, coeff] : g.terms()) out.accumulate(degree, coeff);
  return out;
}

CrossedElement x_sub(const CrossedElement& f, const CrossedElement& g) {
  return x_add(f, x_neg(g));
}

CrossedElement x_neg(const CrossedElement& f) { return x_scale(GaussianRational(-1), f); }

CrossedElement x_scale(const GaussianRational& c, const CrossedElement& f) {
  CrossedElement out(f.model());
  if (c.is_zero()) return out;
  for (const auto& [degree, coeff] : f.terms()) out.accumulate(degree, coeff_scale(c, coeff));
  return out;
}

CrossedElement x_mul(const CrossedElement& f, const CrossedElement& g) {
  require_same_model(f.model(), g.model());
  CrossedElement out(f.model());
  for (const auto& [n, fn] : f.terms())
    for (const auto& [m, gm] : g.terms())
      out.accumulate(n + m, coeff_mul(f.model(), fn, sigma_hat(f.model(), gm, n)));
  return out;
}

bool x_equal(const CrossedElement& f, const CrossedElement& g) {
  require_same_model(f.model(), g.model());
  if (f.terms().size() != g.terms().size()) return false;
  auto it = f.terms().begin();
  auto jt = g.terms().begin();
  for (; it != f.terms().end(); ++it, ++jt) {
    if (it->first != jt->first) return false;
    if (!coeff_equal(it->second, jt->second)) return false;
  }
  return true;
}

CoeffFn e_map(const CrossedElement& f) { return f.coefficient(0); }

CrossedElement delta_power(const SystemModel& s, long long n) {
  return CrossedElement::monomial(s, CoeffFn::unit(s), n);
}

CrossedElement unit_element(const SystemModel& s) { return delta_power(s, 0); }

}  // namespace cpw
