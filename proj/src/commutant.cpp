#include "cpw/commutant.hpp"

#include <set>

namespace cpw {

namespace {

// First point of supp(coefficient) outside `allowed`, in canonical order.
// For the circle model supports are All, and z = 1 is the canonical pick.
Point first_escaping_point(const SystemModel& s, const CoeffFn& coefficient,
                           const PointSet& allowed) {
  PointSet support = supp(s, coefficient);
  if (support.kind() == PointSet::Kind::Finite) {
    for (const Point& p : support.points())
      if (!allowed.contains(p)) return p;
  }
  if (s.kind() == ModelKind::FinitePermutation) {
    for (const Point& p : all_points(s))
      if (support.contains(p) && !allowed.contains(p)) return p;
  }
  return circle_point(GaussianRational(1));
}

}  // namespace

CommutantVerdict in_commutant_structural(const SystemModel& s, const CrossedElement& f) {
  require_same_model(s, f.model());
  for (const auto& [degree, coefficient] : f.terms()) {
    if (degree == 0) continue;
    PointSet periodic = per_n(s, degree);
    if (!subset(s, supp(s, coefficient), periodic)) {
      CommutantVerdict verdict;
      verdict.member = false;
      verdict.failing_degree = degree;
      verdict.failing_point = first_escaping_point(s, coefficient, periodic);
      return verdict;
    }
  }
  return CommutantVerdict{true, std::nullopt, std::nullopt};
}

bool in_commutant_direct(const SystemModel& s, const CrossedElement& f, int probe_radius) {
  require_same_model(s, f.model());
  std::vector<CoeffFn> probes;
  switch (s.kind()) {
    case ModelKind::FinitePermutation:
      for (int i = 0; i < s.finite_size(); ++i) probes.push_back(CoeffFn::basis(s, i));
      break;
    case ModelKind::IntegerShift: {
      std::set<long long> indices;
      for (long long k = -probe_radius; k <= probe_radius; ++k) indices.insert(k);
      for (const auto& [degree, coefficient] : f.terms())
        for (const auto& [label, value] : coefficient.entries()) {
          indices.insert(label);
          indices.insert(label + degree);
          indices.insert(label - degree);
        }
      for (long long k : indices) probes.push_back(CoeffFn::basis(s, k));
      break;
    }
    case ModelKind::CircleRotation:
      // t generates the Laurent algebra; t is invertible, so commuting with
      // t forces commuting with t^-1 and hence with everything.
      probes.push_back(CoeffFn::basis(s, 1));
      break;
  }
  for (const CoeffFn& probe : probes) {
    CrossedElement a = CrossedElement::monomial(s, probe, 0);
    if (!x_equal(x_mul(f, a), x_mul(a, f))) return false;
  }
  return true;
}

int default_probe_radius(const CrossedElement& f) {
  return static_cast<int>(f.max_abs_degree() + f.max_abs_label() + 1);
}

std::vector<CrossedElement> commutant_basis_window(const SystemModel& s, int degree_bound,
                                                   int radius) {
  std::vector<CrossedElement> basis;
  for (long long n = -degree_bound; n <= degree_bound; ++n) {
    std::vector<long long> labels;
    if (n == 0) {
      if (s.kind() == ModelKind::FinitePermutation) {
        for (int i = 0; i < s.finite_size(); ++i) labels.push_back(i);
      } else {
        for (long long k = -radius; k <= radius; ++k) labels.push_back(k);
      }
    } else {
      PointSet periodic = per_n(s, n);
      switch (s.kind()) {
        case ModelKind::FinitePermutation:
          for (const Point& p : all_points(s))
            if (periodic.contains(p)) labels.push_back(std::get<FinitePoint>(p).index);
          break;
        case ModelKind::IntegerShift:
          break;  // Per^n is empty
        case ModelKind::CircleRotation:
          if (periodic.is_all())
            for (long long k = -radius; k <= radius; ++k) labels.push_back(k);
          break;
      }
    }
    for (long long label : labels)
      basis.push_back(CrossedElement::monomial(s, CoeffFn::basis(s, label), n));
  }
  return basis;
}

bool is_maximal_abelian(const SystemModel& s) {
  switch (s.kind()) {
    case ModelKind::FinitePermutation:
      return false;  // Per^n = All at the permutation order, so e_x d^n commutes
    case ModelKind::IntegerShift:
      return true;
    case ModelKind::CircleRotation:
      return !is_fourth_root_of_unity(s.rotation());
  }
  return false;
}

}  // namespace cpw
