#include "cpw/dynsys.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cpw {

SystemModel SystemModel::finite_permutation(std::vector<int> perm) {
  int n = static_cast<int>(perm.size());
  if (n < 1) fail(Errc::ConfigError, "permutation must act on at least one point");
  std::vector<int> inv(perm.size(), -1);
  for (int i = 0; i < n; ++i) {
    int image = perm[i];
    if (image < 0 || image >= n)
      fail(Errc::ConfigError, "permutation image out of range at index " + std::to_string(i));
    if (inv[image] != -1)
      fail(Errc::ConfigError, "permutation repeats image " + std::to_string(image));
    inv[image] = i;
  }
  SystemModel s;
  s.kind_ = ModelKind::FinitePermutation;
  s.perm_ = std::move(perm);
  s.perm_inv_ = std::move(inv);
  return s;
}

SystemModel SystemModel::integer_shift() {
  SystemModel s;
  s.kind_ = ModelKind::IntegerShift;
  return s;
}

SystemModel SystemModel::circle_rotation(GaussianRational q) {
  if (q.norm_sq() != 1)
    fail(Errc::ConfigError, "rotation parameter must lie on the unit circle");
  SystemModel s;
  s.kind_ = ModelKind::CircleRotation;
  s.q_ = std::move(q);
  return s;
}

int SystemModel::finite_size() const {
  if (kind_ != ModelKind::FinitePermutation) fail(Errc::KindMismatch, "not a finite model");
  return static_cast<int>(perm_.size());
}

const std::vector<int>& SystemModel::permutation() const {
  if (kind_ != ModelKind::FinitePermutation) fail(Errc::KindMismatch, "not a finite model");
  return perm_;
}

const std::vector<int>& SystemModel::permutation_inverse() const {
  if (kind_ != ModelKind::FinitePermutation) fail(Errc::KindMismatch, "not a finite model");
  return perm_inv_;
}

const GaussianRational& SystemModel::rotation() const {
  if (kind_ != ModelKind::CircleRotation) fail(Errc::KindMismatch, "not a circle model");
  return q_;
}

bool SystemModel::same_as(const SystemModel& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case ModelKind::FinitePermutation: return perm_ == other.perm_;
    case ModelKind::IntegerShift: return true;
    case ModelKind::CircleRotation: return q_ == other.q_;
  }
  return false;
}

std::string SystemModel::describe() const {
  switch (kind_) {
    case ModelKind::FinitePermutation: {
      std::ostringstream out;
      out << "finite permutation [";
      for (std::size_t i = 0; i < perm_.size(); ++i) {
        if (i) out << ",";
        out << perm_[i];
      }
      out << "]";
      return out.str();
    }
    case ModelKind::IntegerShift: return "integer shift";
    case ModelKind::CircleRotation: return "circle rotation q=" + format_scalar(q_);
  }
  return "";
}

void require_same_model(const SystemModel& a, const SystemModel& b) {
  if (!a.same_as(b)) fail(Errc::ModelMismatch, "operands live over different models");
}

Point finite_point(int index) { return FinitePoint{index}; }
Point shift_point(long long value) { return ShiftPoint{value}; }

Point circle_point(GaussianRational z) {
  if (z.norm_sq() != 1) fail(Errc::KindMismatch, "circle point must have |z| = 1");
  return CirclePoint{std::move(z)};
}

bool point_equal(const Point& a, const Point& b) { return point_cmp(a, b) == 0; }

int point_cmp(const Point& a, const Point& b) {
  if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
  if (const auto* fa = std::get_if<FinitePoint>(&a)) {
    int ib = std::get<FinitePoint>(b).index;
    return (fa->index > ib) - (fa->index < ib);
  }
  if (const auto* sa = std::get_if<ShiftPoint>(&a)) {
    long long vb = std::get<ShiftPoint>(b).value;
    return (sa->value > vb) - (sa->value < vb);
  }
  return cmp(std::get<CirclePoint>(a).z, std::get<CirclePoint>(b).z);
}

std::string format_point(const Point& p) {
  if (const auto* f = std::get_if<FinitePoint>(&p)) return std::to_string(f->index);
  if (const auto* s = std::get_if<ShiftPoint>(&p)) return std::to_string(s->value);
  return format_scalar(std::get<CirclePoint>(p).z);
}

void check_point(const SystemModel& s, const Point& p) {
  switch (s.kind()) {
    case ModelKind::FinitePermutation: {
      const auto* f = std::get_if<FinitePoint>(&p);
      if (!f) fail(Errc::KindMismatch, "point kind does not match the finite model");
      if (f->index < 0 || f->index >= s.finite_size())
        fail(Errc::KindMismatch, "point index outside the finite model");
      return;
    }
    case ModelKind::IntegerShift:
      if (!std::holds_alternative<ShiftPoint>(p))
        fail(Errc::KindMismatch, "point kind does not match the shift model");
      return;
    case ModelKind::CircleRotation:
      if (!std::holds_alternative<CirclePoint>(p))
        fail(Errc::KindMismatch, "point kind does not match the circle model");
      return;
  }
}

namespace {

std::vector<Point> canonical_points(std::vector<Point> points) {
  std::sort(points.begin(), points.end(), PointLess{});
  points.erase(std::unique(points.begin(), points.end(),
                           [](const Point& a, const Point& b) { return point_equal(a, b); }),
               points.end());
  return points;
}

}  // namespace

PointSet PointSet::finite(const SystemModel& s, std::vector<Point> points) {
  for (const Point& p : points) check_point(s, p);
  points = canonical_points(std::move(points));
  if (points.empty()) return empty();
  if (s.kind() == ModelKind::FinitePermutation &&
      static_cast<int>(points.size()) == s.finite_size())
    return all();
  return PointSet(Kind::Finite, std::move(points));
}

PointSet PointSet::cofinite(const SystemModel& s, std::vector<Point> complement) {
  for (const Point& p : complement) check_point(s, p);
  complement = canonical_points(std::move(complement));
  if (complement.empty()) return all();
  if (s.kind() == ModelKind::FinitePermutation) {
    // Finite space: fold the cofinite form into an explicit finite set.
    std::vector<Point> rest;
    for (const Point& p : all_points(s)) {
      bool excluded = std::binary_search(complement.begin(), complement.end(), p, PointLess{});
      if (!excluded) rest.push_back(p);
    }
    return finite(s, std::move(rest));
  }
  return PointSet(Kind::Cofinite, std::move(complement));
}

bool PointSet::contains(const Point& p) const {
  switch (kind_) {
    case Kind::Empty: return false;
    case Kind::All: return true;
    case Kind::Finite:
      return std::binary_search(points_.begin(), points_.end(), p, PointLess{});
    case Kind::Cofinite:
      return !std::binary_search(points_.begin(), points_.end(), p, PointLess{});
  }
  return false;
}

bool PointSet::operator==(const PointSet& other) const {
  if (kind_ != other.kind_) return false;
  if (points_.size() != other.points_.size()) return false;
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (!point_equal(points_[i], other.points_[i])) return false;
  return true;
}

bool subset(const SystemModel& s, const PointSet& a, const PointSet& b) {
  (void)s;  // canonical forms make the case analysis model-free
  using Kind = PointSet::Kind;
  if (a.kind() == Kind::Empty || b.kind() == Kind::All) return true;
  if (b.kind() == Kind::Empty) return a.kind() == Kind::Empty;
  if (a.kind() == Kind::All) return false;  // b is not All here
  if (a.kind() == Kind::Finite) {
    for (const Point& p : a.points())
      if (!b.contains(p)) return false;
    return true;
  }
  // a cofinite: contained only in cofinite sets with smaller complement.
  if (b.kind() != Kind::Cofinite) return false;
  for (const Point& p : b.points())
    if (a.contains(p)) return false;
  return true;
}

PointSet intersect(const SystemModel& s, const PointSet& a, const PointSet& b) {
  using Kind = PointSet::Kind;
  if (a.kind() == Kind::Empty || b.kind() == Kind::Empty) return PointSet::empty();
  if (a.kind() == Kind::All) return b;
  if (b.kind() == Kind::All) return a;
  if (a.kind() == Kind::Finite || b.kind() == Kind::Finite) {
    const PointSet& fin = a.kind() == Kind::Finite ? a : b;
    const PointSet& other = a.kind() == Kind::Finite ? b : a;
    std::vector<Point> kept;
    for (const Point& p : fin.points())
      if (other.contains(p)) kept.push_back(p);
    return PointSet::finite(s, std::move(kept));
  }
  // Both cofinite: complement is the union of complements.
  std::vector<Point> complement = a.points();
  complement.insert(complement.end(), b.points().begin(), b.points().end());
  return PointSet::cofinite(s, std::move(complement));
}

std::string format_point_set(const PointSet& ps) {
  switch (ps.kind()) {
    case PointSet::Kind::Empty: return "empty";
    case PointSet::Kind::All: return "all";
    case PointSet::Kind::Finite:
    case PointSet::Kind::Cofinite: {
      std::ostringstream out;
      if (ps.kind() == PointSet::Kind::Cofinite) out << "complement of ";
      out << "{";
      for (std::size_t i = 0; i < ps.points().size(); ++i) {
        if (i) out << ", ";
        out << format_point(ps.points()[i]);
      }
      out << "}";
      return out.str();
    }
  }
  return "";
}

bool is_fourth_root_of_unity(const GaussianRational& q) {
  return q == GaussianRational(1) || q == GaussianRational(-1) ||
         q == GaussianRational::i() || q == -GaussianRational::i();
}

std::vector<Point> all_points(const SystemModel& s) {
  std::vector<Point> points;
  for (int i = 0; i < s.finite_size(); ++i) points.push_back(finite_point(i));
  return points;
}

namespace {

int finite_cycle_length(const SystemModel& s, int index) {
  int len = 1;
  int cur = s.permutation()[index];
  while (cur != index) {
    cur = s.permutation()[cur];
    ++len;
  }
  return len;
}

int apply_perm_power(const SystemModel& s, int index, long long k) {
  long long len = finite_cycle_length(s, index);
  long long steps = ((k % len) + len) % len;
  int cur = index;
  for (long long i = 0; i < steps; ++i) cur = s.permutation()[cur];
  return cur;
}

}  // namespace

Point apply_sigma_tilde(const SystemModel& s, const Point& p, long long k) {
  check_point(s, p);
  switch (s.kind()) {
    case ModelKind::FinitePermutation:
      return finite_point(apply_perm_power(s, std::get<FinitePoint>(p).index, k));
    case ModelKind::IntegerShift:
      return shift_point(std::get<ShiftPoint>(p).value + k);
    case ModelKind::CircleRotation:
      // sigma(t) = q*t acts on characters as rotation by q^-1.
      return circle_point(gr_pow(s.rotation(), -k) * std::get<CirclePoint>(p).z);
  }
  fail(Errc::KindMismatch, "unreachable model kind");
}

PointSet per_n(const SystemModel& s, long long n) {
  if (n == 0) fail(Errc::ZeroPeriod, "period must be nonzero");
  switch (s.kind()) {
    case ModelKind::FinitePermutation: {
      std::vector<Point> fixed;
      for (int i = 0; i < s.finite_size(); ++i)
        if (apply_perm_power(s, i, n) == i) fixed.push_back(finite_point(i));
      return PointSet::finite(s, std::move(fixed));
    }
    case ModelKind::IntegerShift:
      return PointSet::empty();
    case ModelKind::CircleRotation:
      return gr_pow(s.rotation(), n) == GaussianRational(1) ? PointSet::all()
                                                            : PointSet::empty();
  }
  fail(Errc::KindMismatch, "unreachable model kind");
}

bool aperiodic_points_dense(const SystemModel& s) {
  switch (s.kind()) {
    case ModelKind::FinitePermutation: return false;
    case ModelKind::IntegerShift: return true;
    case ModelKind::CircleRotation: return !is_fourth_root_of_unity(s.rotation());
  }
  return false;
}

bool has_empty_interior(const SystemModel& s, const PointSet& ps) {
  if (s.kind() == ModelKind::CircleRotation)
    return ps.kind() == PointSet::Kind::Empty || ps.kind() == PointSet::Kind::Finite;
  // Discrete models: every point is open.
  return ps.kind() == PointSet::Kind::Empty;
}

bool check_baire_lemma(const SystemModel& s, int n_max) {
  bool dense = aperiodic_points_dense(s);
  bool all_empty_closed_form;
  switch (s.kind()) {
    case ModelKind::FinitePermutation: all_empty_closed_form = false; break;
    case ModelKind::IntegerShift: all_empty_closed_form = true; break;
    case ModelKind::CircleRotation:
      all_empty_closed_form = !is_fourth_root_of_unity(s.rotation());
      break;
    default: return false;
  }
  // Explicit cross-check up to n_max: a witness of non-empty interior in the
  // visible range refutes the closed form's "all empty" claim outright.
  for (int n = 1; n <= n_max; ++n) {
    bool empty_interior = has_empty_interior(s, per_n(s, n));
    if (!empty_interior && all_empty_closed_form) return false;
  }
  return dense == all_empty_closed_form;
}

Orbit orbit(const SystemModel& s, const Point& p, int radius) {
  check_point(s, p);
  std::set<Point, PointLess> seen;
  for (long long k = -radius; k <= radius; ++k) seen.insert(apply_sigma_tilde(s, p, k));
  bool complete = true;
  for (const Point& q : seen)
    if (!seen.count(apply_sigma_tilde(s, q, 1))) {
      complete = false;
      break;
    }
  Orbit result;
  result.points.assign(seen.begin(), seen.end());
  result.complete = complete;
  return result;
}

bool is_minimal(const SystemModel& s) {
  switch (s.kind()) {
    case ModelKind::FinitePermutation:
      return finite_cycle_length(s, 0) == s.finite_size();
    case ModelKind::IntegerShift: return true;
    case ModelKind::CircleRotation: return !is_fourth_root_of_unity(s.rotation());
  }
  return false;
}

bool is_topologically_transitive(const SystemModel& s) {
  // For these three models transitivity coincides with minimality.
  return is_minimal(s);
}

std::optional<std::pair<PointSet, PointSet>> disjoint_invariant_open_sets(const SystemModel& s) {
  if (is_topologically_transitive(s)) return std::nullopt;
  if (s.kind() != ModelKind::FinitePermutation)
    fail(Errc::Unsupported, "open-set enumeration requires the finite model");
  // Replay with witness U = {0}: the union of its iterates is the cycle of 0.
  std::set<int> first_cycle;
  int cur = 0;
  do {
    first_cycle.insert(cur);
    cur = s.permutation()[cur];
  } while (cur != 0);
  std::vector<Point> o1, o2;
  for (int i = 0; i < s.finite_size(); ++i) {
    if (first_cycle.count(i))
      o1.push_back(finite_point(i));
    else
      o2.push_back(finite_point(i));
  }
  return std::make_pair(PointSet::finite(s, std::move(o1)), PointSet::finite(s, std::move(o2)));
}

PointSet separated_neighborhood(const SystemModel& s, const Point& p, int m, int n) {
  check_point(s, p);
  if (s.kind() == ModelKind::CircleRotation)
    fail(Errc::Unsupported, "open arcs on the circle are not representable");
  std::set<Point, PointLess> iterates;
  for (long long i = -m; i <= n; ++i) {
    if (!iterates.insert(apply_sigma_tilde(s, p, i)).second)
      fail(Errc::NotSeparable, "iterates collide within the requested range");
  }
  return PointSet::finite(s, {p});
}

bool verify_toptraper(const SystemModel& s, int n0) {
  bool premise = is_topologically_transitive(s) && per_n(s, n0).is_all();
  if (!premise) return true;
  if (s.kind() != ModelKind::FinitePermutation) return false;
  Orbit o = orbit(s, finite_point(0), s.finite_size());
  return o.complete && static_cast<int>(o.points.size()) == s.finite_size();
}

std::optional<long long> smallest_periodic_n(const SystemModel& s) {
  switch (s.kind()) {
    case ModelKind::FinitePermutation: {
      int best = 0;
      for (int i = 0; i < s.finite_size(); ++i) {
        int len = finite_cycle_length(s, i);
        if (best == 0 || len < best) best = len;
      }
      return best;
    }
    case ModelKind::IntegerShift: return std::nullopt;
    case ModelKind::CircleRotation: {
      const GaussianRational& q = s.rotation();
      if (q == GaussianRational(1)) return 1;
      if (q == GaussianRational(-1)) return 2;
      if (is_fourth_root_of_unity(q)) return 4;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace cpw
