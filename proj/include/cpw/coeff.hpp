#pragma once

#include <map>
#include <utility>
#include <vector>

#include "cpw/dynsys.hpp"

namespace cpw {

/// Element of the coefficient algebra of a model:
///  - finite model: a tuple of values over {0..N-1};
///  - shift model: a finitely supported function on Z (no unit);
///  - circle model: a Laurent polynomial in t.
/// Sparse storage keeps only nonzero entries; the label of an entry is the
/// point index (discrete models) or the exponent of t (circle model).
class CoeffFn {
 public:
  enum class Kind { Finite, FinSupp, Laurent };

  static CoeffFn zero(const SystemModel& s);
  static CoeffFn unit(const SystemModel& s);  // NotUnital for the shift model
  static CoeffFn finite(std::vector<GaussianRational> values);
  static CoeffFn fin_supp(std::map<long long, GaussianRational> values);
  static CoeffFn laurent(std::map<long long, GaussianRational> terms);
  /// e_label for discrete models, t^label for the circle model.
  static CoeffFn basis(const SystemModel& s, long long label);

  Kind kind() const { return kind_; }
  bool is_zero() const;

  const std::vector<GaussianRational>& finite_values() const;
  const std::map<long long, GaussianRational>& sparse_values() const;

  /// Nonzero (label, value) pairs in ascending label order.
  std::vector<std::pair<long long, GaussianRational>> entries() const;

  long long max_abs_label() const;  // 0 for the zero function

 private:
  CoeffFn(Kind kind) : kind_(kind) {}
  Kind kind_;
  std::vector<GaussianRational> dense_;            // Finite
  std::map<long long, GaussianRational> sparse_;   // FinSupp / Laurent
};

bool coeff_equal(const CoeffFn& a, const CoeffFn& b);
void require_matching_coeff(const SystemModel& s, const CoeffFn& f);

CoeffFn coeff_add(const SystemModel& s, const CoeffFn& a, const CoeffFn& b);
CoeffFn coeff_mul(const SystemModel& s, const CoeffFn& a, const CoeffFn& b);
CoeffFn coeff_scale(const GaussianRational& c, const CoeffFn& f);
CoeffFn coeff_neg(const CoeffFn& f);

/// The automorphism action: sigma_hat^k(f) = f composed with the inverse
/// dynamics. Finite: value at x comes from perm^-k(x); shift: support moves
/// by +k; circle: t^m picks up the factor q^(k*m).
CoeffFn sigma_hat(const SystemModel& s, const CoeffFn& f, long long k);

GaussianRational evaluate(const SystemModel& s, const CoeffFn& f, const Point& p);

/// Indicator of {p} in the discrete models; the circle model has no such
/// functions (NotRegularModel).
CoeffFn bump(const SystemModel& s, const Point& p);

/// Closure of the nonvanishing set. Discrete models: the exact support;
/// circle model: Empty for 0, otherwise All (a nonzero Laurent polynomial
/// has finitely many zeros).
PointSet supp(const SystemModel& s, const CoeffFn& f);

/// Generators of functions vanishing on `closed` (Empty, Finite or All):
/// complement indicators in the discrete models (|index| <= radius for the
/// shift), and the single product over (t - z_i) in the circle model.
std::vector<CoeffFn> vanishing_generators(const SystemModel& s, const PointSet& closed,
                                          int radius);

}  // namespace cpw
