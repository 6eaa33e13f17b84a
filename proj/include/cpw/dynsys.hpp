#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cpw/rational.hpp"

namespace cpw {

enum class ModelKind { FinitePermutation, IntegerShift, CircleRotation };

/// One of the three concrete character-space dynamics:
///  - FinitePermutation: a finite discrete space {0..N-1} with a bijection;
///  - IntegerShift: Z with n -> n+1;
///  - CircleRotation: the unit circle with z -> q^-1 * z, for |q| = 1 in Q(i).
class SystemModel {
 public:
  static SystemModel finite_permutation(std::vector<int> perm);
  static SystemModel integer_shift();
  static SystemModel circle_rotation(GaussianRational q);

  ModelKind kind() const { return kind_; }

  int finite_size() const;
  const std::vector<int>& permutation() const;
  const std::vector<int>& permutation_inverse() const;
  const GaussianRational& rotation() const;

  // Capability flags declared by the coefficient algebra of each model.
  bool unital() const { return kind_ != ModelKind::IntegerShift; }
  bool regular_bumps() const { return kind_ != ModelKind::CircleRotation; }
  bool infinite_characters() const { return kind_ != ModelKind::FinitePermutation; }

  bool same_as(const SystemModel& other) const;
  std::string describe() const;

 private:
  SystemModel() = default;
  ModelKind kind_ = ModelKind::IntegerShift;
  std::vector<int> perm_;
  std::vector<int> perm_inv_;
  GaussianRational q_;
};

void require_same_model(const SystemModel& a, const SystemModel& b);

struct FinitePoint {
  int index;
};
struct ShiftPoint {
  long long value;
};
struct CirclePoint {
  GaussianRational z;
};

using Point = std::variant<FinitePoint, ShiftPoint, CirclePoint>;

Point finite_point(int index);
Point shift_point(long long value);
Point circle_point(GaussianRational z);  // validates |z| = 1

bool point_equal(const Point& a, const Point& b);
int point_cmp(const Point& a, const Point& b);
std::string format_point(const Point& p);

/// Throws KindMismatch unless the point belongs to the model (and, for the
/// finite model, lies inside {0..N-1}).
void check_point(const SystemModel& s, const Point& p);

struct PointLess {
  bool operator()(const Point& a, const Point& b) const { return point_cmp(a, b) < 0; }
};

/// Symbolic subset of the character space. Finite lists are duplicate-free
/// and canonically ordered; for the finite model a list covering everything
/// canonicalizes to All and cofinite forms to their finite complement.
class PointSet {
 public:
  enum class Kind { Empty, All, Finite, Cofinite };

  static PointSet empty() { return PointSet(Kind::Empty, {}); }
  static PointSet all() { return PointSet(Kind::All, {}); }
  static PointSet finite(const SystemModel& s, std::vector<Point> points);
  static PointSet cofinite(const SystemModel& s, std::vector<Point> complement);

  Kind kind() const { return kind_; }
  const std::vector<Point>& points() const { return points_; }

  bool is_empty() const { return kind_ == Kind::Empty; }
  bool is_all() const { return kind_ == Kind::All; }
  bool contains(const Point& p) const;

  bool operator==(const PointSet& other) const;

 private:
  PointSet(Kind kind, std::vector<Point> points) : kind_(kind), points_(std::move(points)) {}
  Kind kind_;
  std::vector<Point> points_;  // the list itself (Finite) or the complement (Cofinite)
};

bool subset(const SystemModel& s, const PointSet& a, const PointSet& b);
PointSet intersect(const SystemModel& s, const PointSet& a, const PointSet& b);
std::string format_point_set(const PointSet& ps);

/// True iff q is a root of unity inside Q(i); the only candidates are the
/// fourth roots {1, -1, i, -i} (no other cyclotomic field embeds in Q(i)).
bool is_fourth_root_of_unity(const GaussianRational& q);

std::vector<Point> all_points(const SystemModel& s);  // finite model only

Point apply_sigma_tilde(const SystemModel& s, const Point& p, long long k);

/// Points fixed by the k-th iterate, n != 0 (ZeroPeriod otherwise).
PointSet per_n(const SystemModel& s, long long n);

bool aperiodic_points_dense(const SystemModel& s);

bool has_empty_interior(const SystemModel& s, const PointSet& ps);

/// Cross-checks "aperiodic points dense" against "every Per^n has empty
/// interior": the closed-form rule on each side, with the explicit
/// per-n check bounded by n_max.
bool check_baire_lemma(const SystemModel& s, int n_max);

struct Orbit {
  std::vector<Point> points;
  bool complete;  // the enumerated set is closed under the dynamics
};

Orbit orbit(const SystemModel& s, const Point& p, int radius);

bool is_minimal(const SystemModel& s);

bool is_topologically_transitive(const SystemModel& s);

/// For a non-transitive system, two disjoint invariant non-empty open sets
/// whose closures cover the space; nullopt when the system is transitive.
/// Only the finite model supports the construction (Unsupported otherwise).
std::optional<std::pair<PointSet, PointSet>> disjoint_invariant_open_sets(const SystemModel& s);

/// An open set U containing p whose iterates sigma^i(U), -m <= i <= n, are
/// pairwise disjoint. In the discrete models the singleton {p} suffices.
PointSet separated_neighborhood(const SystemModel& s, const Point& p, int m, int n);

/// Checks "transitive and Per^n0 = All implies the space is one finite
/// orbit", with each side computed independently.
bool verify_toptraper(const SystemModel& s, int n0);

/// Smallest n >= 1 for which Per^n has non-empty interior, if any.
std::optional<long long> smallest_periodic_n(const SystemModel& s);

}  // namespace cpw
