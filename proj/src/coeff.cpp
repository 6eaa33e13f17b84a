#include "cpw/coeff.hpp"

#include <algorithm>
#include <cstdlib>

namespace cpw {

namespace {

void prune_zeros(std::map<long long, GaussianRational>& m) {
  for (auto it = m.begin(); it != m.end();) {
    if (it->second.is_zero())
      it = m.erase(it);
    else
      ++it;
  }
}

CoeffFn::Kind expected_kind(const SystemModel& s) {
  switch (s.kind()) {
    case ModelKind::FinitePermutation: return CoeffFn::Kind::Finite;
    case ModelKind::IntegerShift: return CoeffFn::Kind::FinSupp;
    case ModelKind::CircleRotation: return CoeffFn::Kind::Laurent;
  }
  return CoeffFn::Kind::Finite;
}

}  // namespace

CoeffFn CoeffFn::zero(const SystemModel& s) {
  switch (s.kind()) {
    case ModelKind::FinitePermutation:
      return finite(std::vector<GaussianRational>(s.finite_size()));
    case ModelKind::IntegerShift: return fin_supp({});
    case ModelKind::CircleRotation: return laurent({});
  }
  fail(Errc::KindMismatch, "unreachable model kind");
}

CoeffFn CoeffFn::unit(const SystemModel& s) {
  switch (s.kind()) {
    case ModelKind::FinitePermutation: {
      std::vector<GaussianRational> ones(s.finite_size(), GaussianRational(1));
      return finite(std::move(ones));
    }
    case ModelKind::IntegerShift:
      fail(Errc::NotUnital, "the shift model's coefficient algebra has no unit");
    case ModelKind::CircleRotation:
      return laurent({{0, GaussianRational(1)}});
  }
  fail(Errc::KindMismatch, "unreachable model kind");
}

CoeffFn CoeffFn::finite(std::vector<GaussianRational> values) {
  CoeffFn f(Kind::Finite);
  f.dense_ = std::move(values);
  return f;
}

CoeffFn CoeffFn::fin_supp(std::map<long long, GaussianRational> values) {
  CoeffFn f(Kind::FinSupp);
  prune_zeros(values);
  f.sparse_ = std::move(values);
  return f;
}

CoeffFn CoeffFn::laurent(std::map<long long, GaussianRational> terms) {
  CoeffFn f(Kind::Laurent);
  prune_zeros(terms);
  f.sparse_ = std::move(terms);
  return f;
}

CoeffFn CoeffFn::basis(const SystemModel& s, long long label) {
  switch (s.kind()) {
    case ModelKind::FinitePermutation: {
      if (label < 0 || label >= s.finite_size())
        fail(Errc::KindMismatch, "indicator index outside the finite model");
      std::vector<GaussianRational> values(s.finite_size());
      values[static_cast<std::size_t>(label)] = GaussianRational(1);
      return finite(std::move(values));
    }
    case ModelKind::IntegerShift:
      return fin_supp({{label, GaussianRational(1)}});
    case ModelKind::CircleRotation:
      return laurent({{label, GaussianRational(1)}});
  }
  fail(Errc::KindMismatch, "unreachable model kind");
}

bool CoeffFn::is_zero() const {
  if (kind_ == Kind::Finite) {
    for (const GaussianRational& v : dense_)
      if (!v.is_zero()) return false;
    return true;
  }
  return sparse_.empty();
}

const std::vector<GaussianRational>& CoeffFn::finite_values() const {
  if (kind_ != Kind::Finite) fail(Errc::KindMismatch, "not a finite-model coefficient");
  return dense_;
}

const std::map<long long, GaussianRational>& CoeffFn::sparse_values() const {
  if (kind_ == Kind::Finite) fail(Errc::KindMismatch, "finite-model coefficient is dense");
  return sparse_;
}

std::vector<std::pair<long long, GaussianRational>> CoeffFn::entries() const {
  std::vector<std::pair<long long, GaussianRational>> out;
  if (kind_ == Kind::Finite) {
    for (std::size_t i = 0; i < dense_.size(); ++i)
      if (!dense_[i].is_zero()) out.emplace_back(static_cast<long long>(i), dense_[i]);
  } else {
    out.assign(sparse_.begin(), sparse_.end());
  }
  return out;
}

long long CoeffFn::max_abs_label() const {
  long long best = 0;
  for (const auto& [label, value] : entries()) best = std::max(best, std::llabs(label));
  return best;
}

bool coeff_equal(const CoeffFn& a, const CoeffFn& b) {
  if (a.kind() != b.kind()) return false;
  if (a.kind() == CoeffFn::Kind::Finite) return a.finite_values() == b.finite_values();
  return a.sparse_values() == b.sparse_values();
}

void require_matching_coeff(const SystemModel& s, const CoeffFn& f) {
  CoeffFn::Kind want = expected_kind(s);
  if (f.kind() != want) fail(Errc::KindMismatch, "coefficient kind does not match the model");
  if (f.kind() == CoeffFn::Kind::Finite &&
      static_cast<int>(f.finite_values().size()) != s.finite_size())
    fail(Errc::KindMismatch, "coefficient length does not match the finite model");
}

CoeffFn coeff_add(const SystemModel& s, const CoeffFn& a, const CoeffFn& b) {
  require_matching_coeff(s, a);
  require_matching_coeff(s, b);
  if (a.kind() == CoeffFn::Kind::Finite) {
    std::vector<GaussianRational> values = a.finite_values();
    for (std::size_t i = 0; i < values.size(); ++i)
      values[i] = values[i] + b.finite_values()[i];
    return CoeffFn::finite(std::move(values));
  }
  std::map<long long, GaussianRational> sum = a.sparse_values();
  for (const auto& [label, value] : b.sparse_values()) {
    auto [it, inserted] = sum.emplace(label, value);
    if (!inserted) it->second = it->second + value;
  }
  return a.kind() == CoeffFn::Kind::FinSupp ? CoeffFn::fin_supp(std::move(sum))
                                            : CoeffFn::laurent(std::move(sum));
}

CoeffFn coeff_mul(const SystemModel& s, const CoeffFn& a, const CoeffFn& b) {
  require_matching_coeff(s, a);
  require_matching_coeff(s, b);
  switch (a.kind()) {
    case CoeffFn::Kind::Finite: {
      std::vector<GaussianRational> values = a.finite_values();
      for (std::size_t i = 0; i < values.size(); ++i)
        values[i] = values[i] * b.finite_values()[i];
      return CoeffFn::finite(std::move(values));
    }
    case CoeffFn::Kind::FinSupp: {
      std::map<long long, GaussianRational> prod;
      for (const auto& [label, value] : a.sparse_values()) {
        auto it = b.sparse_values().find(label);
        if (it != b.sparse_values().end()) prod.emplace(label, value * it->second);
      }
      return CoeffFn::fin_supp(std::move(prod));
    }
    case CoeffFn::Kind::Laurent: {
      std::map<long long, GaussianRational> prod;
      for (const auto& [ea, va] : a.sparse_values())
        for (const auto& [eb, vb] : b.sparse_values()) {
          auto [it, inserted] = prod.emplace(ea + eb, va * vb);
          if (!inserted) it->second = it->second + va * vb;
        }
      return CoeffFn::laurent(std::move(prod));
    }
  }
  fail(Errc::KindMismatch, "unreachable coefficient kind");
}

CoeffFn coeff_scale(const GaussianRational& c, const CoeffFn& f) {
  if (f.kind() == CoeffFn::Kind::Finite) {
    std::vector<GaussianRational> values = f.finite_values();
    for (GaussianRational& v : values) v = c * v;
    return CoeffFn::finite(std::move(values));
  }
  std::map<long long, GaussianRational> scaled;
  for (const auto& [label, value] : f.sparse_values()) scaled.emplace(label, c * value);
  return f.kind() == CoeffFn::Kind::FinSupp ? CoeffFn::fin_supp(std::move(scaled))
                                            : CoeffFn::laurent(std::move(scaled));
}

CoeffFn coeff_neg(const CoeffFn& f) { return coeff_scale(GaussianRational(-1), f); }

CoeffFn sigma_hat(const SystemModel& s, const CoeffFn& f, long long k) {
  require_matching_coeff(s, f);
  switch (s.kind()) {
    case ModelKind::FinitePermutation: {
      int n = s.finite_size();
      std::vector<GaussianRational> values(n);
      for (int x = 0; x < n; ++x) {
        Point pre = apply_sigma_tilde(s, finite_point(x), -k);
        values[x] = f.finite_values()[std::get<FinitePoint>(pre).index];
      }
      return CoeffFn::finite(std::move(values));
    }
    case ModelKind::IntegerShift: {
      std::map<long long, GaussianRational> shifted;
      for (const auto& [label, value] : f.sparse_values()) shifted.emplace(label + k, value);
      return CoeffFn::fin_supp(std::move(shifted));
    }
    case ModelKind::CircleRotation: {
      std::map<long long, GaussianRational> scaled;
      for (const auto& [exp, value] : f.sparse_values())
        scaled.emplace(exp, gr_pow(s.rotation(), k * exp) * value);
      return CoeffFn::laurent(std::move(scaled));
    }
  }
  fail(Errc::KindMismatch, "unreachable model kind");
}

GaussianRational evaluate(const SystemModel& s, const CoeffFn& f, const Point& p) {
  require_matching_coeff(s, f);
  check_point(s, p);
  switch (s.kind()) {
    case ModelKind::FinitePermutation:
      return f.finite_values()[std::get<FinitePoint>(p).index];
    case ModelKind::IntegerShift: {
      auto it = f.sparse_values().find(std::get<ShiftPoint>(p).value);
      return it == f.sparse_values().end() ? GaussianRational(0) : it->second;
    }
    case ModelKind::CircleRotation: {
      const GaussianRational& z = std::get<CirclePoint>(p).z;
      GaussianRational total(0);
      for (const auto& [exp, value] : f.sparse_values()) total = total + value * gr_pow(z, exp);
      return total;
    }
  }
  fail(Errc::KindMismatch, "unreachable model kind");
}

CoeffFn bump(const SystemModel& s, const Point& p) {
  check_point(s, p);
  switch (s.kind()) {
    case ModelKind::FinitePermutation:
      return CoeffFn::basis(s, std::get<FinitePoint>(p).index);
    case ModelKind::IntegerShift:
      return CoeffFn::basis(s, std::get<ShiftPoint>(p).value);
    case ModelKind::CircleRotation:
      fail(Errc::NotRegularModel,
           "nonzero Laurent polynomials cannot vanish on open sets; no bump functions");
  }
  fail(Errc::KindMismatch, "unreachable model kind");
}

PointSet supp(const SystemModel& s, const CoeffFn& f) {
  require_matching_coeff(s, f);
  switch (s.kind()) {
    case ModelKind::FinitePermutation: {
      std::vector<Point> points;
      for (const auto& [label, value] : f.entries())
        points.push_back(finite_point(static_cast<int>(label)));
      return PointSet::finite(s, std::move(points));
    }
    case ModelKind::IntegerShift: {
      std::vector<Point> points;
      for (const auto& [label, value] : f.entries()) points.push_back(shift_point(label));
      return PointSet::finite(s, std::move(points));
    }
    case ModelKind::CircleRotation:
      // Zeros of a nonzero Laurent polynomial are finite, so the closure of
      // the nonvanishing set is the whole circle.
      return f.is_zero() ? PointSet::empty() : PointSet::all();
  }
  fail(Errc::KindMismatch, "unreachable model kind");
}

std::vector<CoeffFn> vanishing_generators(const SystemModel& s, const PointSet& closed,
                                          int radius) {
  std::vector<CoeffFn> gens;
  switch (s.kind()) {
    case ModelKind::FinitePermutation: {
      for (int i = 0; i < s.finite_size(); ++i)
        if (!closed.contains(finite_point(i))) gens.push_back(CoeffFn::basis(s, i));
      return gens;
    }
    case ModelKind::IntegerShift: {
      for (long long k = -radius; k <= radius; ++k)
        if (!closed.contains(shift_point(k))) gens.push_back(CoeffFn::basis(s, k));
      return gens;
    }
    case ModelKind::CircleRotation: {
      if (closed.kind() == PointSet::Kind::Cofinite)
        fail(Errc::Unsupported, "cofinite vanishing sets are not representable on the circle");
      if (closed.is_all()) return {};
      CoeffFn product = CoeffFn::unit(s);
      for (const Point& p : closed.points()) {
        CoeffFn factor = CoeffFn::laurent(
            {{1, GaussianRational(1)}, {0, -std::get<CirclePoint>(p).z}});
        product = coeff_mul(s, product, factor);
      }
      gens.push_back(std::move(product));
      return gens;
    }
  }
  fail(Errc::KindMismatch, "unreachable model kind");
}

}  // namespace cpw
