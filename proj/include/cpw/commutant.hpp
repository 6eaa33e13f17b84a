#pragma once

#include <optional>

#include "cpw/crossed.hpp"

namespace cpw {

/// Outcome of a commutant membership test. A failing verdict names the first
/// degree whose coefficient support escapes the matching periodic-point set,
/// together with a witness point (canonical order, for reproducibility).
struct CommutantVerdict {
  bool member = false;
  std::optional<long long> failing_degree;
  std::optional<Point> failing_point;
};

/// Degreewise support criterion: f commutes with every coefficient function
/// iff supp(f_n) lies inside Per^n for each nonzero degree n.
CommutantVerdict in_commutant_structural(const SystemModel& s, const CrossedElement& f);

/// Direct route: convolve f against a generating family of the coefficient
/// algebra (all indicators; indicators within reach for the shift model; the
/// single generator t for the circle) and compare both products.
bool in_commutant_direct(const SystemModel& s, const CrossedElement& f, int probe_radius);

/// Reach-based probe radius: commutation failures of f show up within the
/// translate reach of its degrees and coefficient supports.
int default_probe_radius(const CrossedElement& f);

/// Linearly independent spanning family of the windowed commutant, built
/// degreewise from coefficients supported inside Per^n.
std::vector<CrossedElement> commutant_basis_window(const SystemModel& s, int degree_bound,
                                                   int radius);

/// True iff the coefficient algebra equals its own commutant: for every
/// n != 0, only the zero coefficient is supported inside Per^n.
bool is_maximal_abelian(const SystemModel& s);

}  // namespace cpw
