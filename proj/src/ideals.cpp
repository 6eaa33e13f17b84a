#include "cpw/ideals.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace cpw {

void validate_window(const Window& w) {
  if (w.degree_bound < 1 || w.support_radius < 1)
    fail(Errc::PreconditionFailed, "window bounds must be at least 1");
}

namespace {

using SparseVec = std::map<int, GaussianRational>;  // keyed by elimination rank

void axpy(SparseVec& x, const GaussianRational& c, const SparseVec& y) {
  for (const auto& [k, v] : y) {
    auto [it, inserted] = x.emplace(k, c * v);
    if (!inserted) {
      it->second = it->second + c * v;
      if (it->second.is_zero()) x.erase(it);
    }
  }
}

void scale_vec(SparseVec& x, const GaussianRational& c) {
  for (auto& [k, v] : x) v = c * v;
}

/// Incremental reduced-row-echelon basis over sparse rows. Rows are keyed by
/// an elimination rank (a permutation of the column order). Optionally keeps
/// per-row provenance over the originally inserted rows, which turns the
/// first linear dependency into an explicit combination.
class SparseReducer {
 public:
  explicit SparseReducer(bool track_provenance) : track_(track_provenance) {}

  /// Returns the dependency provenance when the row reduces to zero,
  /// nullopt when it was inserted as a new basis row.
  std::optional<SparseVec> insert(SparseVec row, int tag) {
    SparseVec prov;
    if (track_) prov[tag] = GaussianRational(1);
    auto it = row.begin();
    while (it != row.end()) {
      auto pivot = pivot_to_row_.find(it->first);
      if (pivot == pivot_to_row_.end()) {
        ++it;
        continue;
      }
      int rank = it->first;
      GaussianRational c = it->second;
      axpy(row, -c, rows_[pivot->second]);
      if (track_) axpy(prov, -c, provs_[pivot->second]);
      it = row.upper_bound(rank);
    }
    if (row.empty()) return prov;
    GaussianRational inv = row.begin()->second.inverse();
    scale_vec(row, inv);
    if (track_) scale_vec(prov, inv);
    int lead = row.begin()->first;
    for (const auto& [p, idx] : pivot_to_row_) {
      auto found = rows_[idx].find(lead);
      if (found == rows_[idx].end()) continue;
      GaussianRational c = found->second;
      axpy(rows_[idx], -c, row);
      if (track_) axpy(provs_[idx], -c, prov);
    }
    pivot_to_row_.emplace(lead, rows_.size());
    rows_.push_back(std::move(row));
    if (track_) provs_.push_back(std::move(prov));
    return std::nullopt;
  }

  /// (pivot rank, row) pairs in ascending pivot order.
  std::vector<std::pair<int, const SparseVec*>> ordered_rows() const {
    std::vector<std::pair<int, const SparseVec*>> out;
    out.reserve(pivot_to_row_.size());
    for (const auto& [pivot, idx] : pivot_to_row_) out.emplace_back(pivot, &rows_[idx]);
    return out;
  }

 private:
  bool track_;
  std::vector<SparseVec> rows_;
  std::vector<SparseVec> provs_;
  std::map<int, std::size_t> pivot_to_row_;
};

std::vector<long long> window_labels(const SystemModel& s, const Window& w) {
  std::vector<long long> labels;
  if (s.kind() == ModelKind::FinitePermutation) {
    for (int i = 0; i < s.finite_size(); ++i) labels.push_back(i);
  } else {
    for (long long k = -w.support_radius; k <= w.support_radius; ++k) labels.push_back(k);
  }
  return labels;
}

CoeffFn coeff_from_entries(const SystemModel& s,
                           const std::vector<std::pair<long long, GaussianRational>>& entries) {
  CoeffFn acc = CoeffFn::zero(s);
  for (const auto& [label, value] : entries)
    acc = coeff_add(s, acc, coeff_scale(value, CoeffFn::basis(s, label)));
  return acc;
}

}  // namespace

void for_each_window_product(const SystemModel& s, const CrossedElement& g, const Window& w,
                             const std::function<void(const CrossedElement&)>& fn) {
  std::vector<CrossedElement> monomials;
  for (long long d = -w.degree_bound; d <= w.degree_bound; ++d)
    for (long long label : window_labels(s, w))
      monomials.push_back(CrossedElement::monomial(s, CoeffFn::basis(s, label), d));
  fn(g);
  for (const CrossedElement& m : monomials) fn(x_mul(m, g));
  for (const CrossedElement& m : monomials) fn(x_mul(g, m));
  for (const CrossedElement& m : monomials) {
    CrossedElement mg = x_mul(m, g);
    if (mg.is_zero()) continue;
    for (const CrossedElement& m2 : monomials) fn(x_mul(mg, m2));
  }
}

CrossedElement IdealWindowSpan::row_element(std::size_t i) const {
  CrossedElement out(model_);
  for (const auto& [col, value] : rows_[i]) {
    const Coordinate& c = coordinates_[static_cast<std::size_t>(col)];
    out.accumulate(c.degree, coeff_scale(value, CoeffFn::basis(model_, c.label)));
  }
  return out;
}

std::optional<int> IdealWindowSpan::column_of(const Coordinate& c) const {
  auto it = std::lower_bound(coordinates_.begin(), coordinates_.end(), c);
  if (it == coordinates_.end() || !(*it == c)) return std::nullopt;
  return static_cast<int>(it - coordinates_.begin());
}

IdealWindowSpan ideal_window_span(const SystemModel& s, const std::vector<CrossedElement>& gens,
                                  const Window& w) {
  validate_window(w);
  if (gens.empty()) fail(Errc::EmptyGenerators, "generator list is empty");
  for (const CrossedElement& g : gens) {
    require_same_model(s, g.model());
    if (g.is_zero()) fail(Errc::EmptyGenerators, "zero generator");
  }
  long long gen_deg_reach = 0;
  long long gen_label_reach = 0;
  for (const CrossedElement& g : gens) {
    gen_deg_reach = std::max(gen_deg_reach, g.max_abs_degree());
    gen_label_reach = std::max(gen_label_reach, g.max_abs_label());
  }
  IdealWindowSpan span(s);
  span.generators_ = gens;
  span.window_ = w;
  span.degree_span_ = w.degree_bound + gen_deg_reach;
  span.label_span_ = 2LL * w.support_radius + gen_label_reach + gen_deg_reach;

  bool finite = s.kind() == ModelKind::FinitePermutation;
  std::vector<std::map<Coordinate, GaussianRational>> kept;
  std::set<Coordinate> coordinate_set;
  auto collect = [&](const CrossedElement& product) {
    if (product.is_zero()) return;
    std::map<Coordinate, GaussianRational> row;
    for (const auto& [degree, coeff] : product.terms()) {
      if (std::llabs(degree) > span.degree_span_) return;  // discarded
      for (const auto& [label, value] : coeff.entries()) {
        if (!finite && std::llabs(label) > span.label_span_) return;
        row.emplace(Coordinate{degree, label}, value);
      }
    }
    for (const auto& [coord, value] : row) coordinate_set.insert(coord);
    kept.push_back(std::move(row));
  };
  for (const CrossedElement& g : gens) for_each_window_product(s, g, w, collect);

  span.coordinates_.assign(coordinate_set.begin(), coordinate_set.end());
  SparseReducer reducer(false);
  for (const auto& row : kept) {
    SparseVec vec;
    for (const auto& [coord, value] : row) vec.emplace(*span.column_of(coord), value);
    reducer.insert(std::move(vec), 0);
  }
  for (const auto& [pivot, vec] : reducer.ordered_rows()) {
    span.pivot_columns_.push_back(pivot);
    span.rows_.emplace_back(vec->begin(), vec->end());
  }
  span.basis_ = ExactMatrix(span.rows_.size(), span.coordinates_.size());
  for (std::size_t i = 0; i < span.rows_.size(); ++i)
    for (const auto& [col, value] : span.rows_[i])
      span.basis_(i, static_cast<std::size_t>(col)) = value;
  return span;
}

CrossedElement replay_chain(const CrossedElement& start, const Certificate& cert) {
  CrossedElement current = start;
  for (const ChainStep& step : cert.steps) {
    if (step.left) current = x_mul(*step.left, current);
    if (step.right) current = x_mul(current, *step.right);
  }
  return current;
}

CrossedElement replay_lincomb(
    const IdealWindowSpan& span,
    const std::vector<std::pair<GaussianRational, std::size_t>>& coeffs) {
  CrossedElement total(span.model());
  for (const auto& [c, idx] : coeffs) total = x_add(total, x_scale(c, span.row_element(idx)));
  return total;
}

nlohmann::json certificate_to_json(const Certificate& cert) {
  nlohmann::json j;
  j["claim"] = cert.claim;
  if (cert.kind == Certificate::Kind::MultiplierChain) {
    j["kind"] = "chain";
    nlohmann::json steps = nlohmann::json::array();
    for (const ChainStep& step : cert.steps) {
      steps.push_back({{"left", step.left ? format_element(*step.left) : ""},
                       {"right", step.right ? format_element(*step.right) : ""}});
    }
    j["steps"] = steps;
  } else {
    j["kind"] = "lincomb";
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& [c, idx] : cert.coefficients)
      coeffs.push_back({format_scalar(c), idx});
    j["coeffs"] = coeffs;
    if (!cert.coefficients_second.empty()) {
      nlohmann::json coeffs2 = nlohmann::json::array();
      for (const auto& [c, idx] : cert.coefficients_second)
        coeffs2.push_back({format_scalar(c), idx});
      j["coeffs2"] = coeffs2;
    }
  }
  return j;
}

Certificate certificate_from_json(const SystemModel& s, const nlohmann::json& j) {
  Certificate cert;
  cert.claim = j.value("claim", "");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "chain") {
    cert.kind = Certificate::Kind::MultiplierChain;
    for (const auto& step : j.at("steps")) {
      ChainStep out;
      std::string left = step.at("left").get<std::string>();
      std::string right = step.at("right").get<std::string>();
      if (!left.empty()) out.left = parse_element(s, left);
      if (!right.empty()) out.right = parse_element(s, right);
      cert.steps.push_back(std::move(out));
    }
    return cert;
  }
  if (kind != "lincomb") fail(Errc::ParseError, "unknown certificate kind: " + kind);
  cert.kind = Certificate::Kind::LinearCombination;
  for (const auto& pair : j.at("coeffs"))
    cert.coefficients.emplace_back(parse_scalar(pair.at(0).get<std::string>()),
                                   pair.at(1).get<std::size_t>());
  if (j.contains("coeffs2"))
    for (const auto& pair : j.at("coeffs2"))
      cert.coefficients_second.emplace_back(parse_scalar(pair.at(0).get<std::string>()),
                                            pair.at(1).get<std::size_t>());
  return cert;
}

std::optional<Certificate> membership(const IdealWindowSpan& span, const CrossedElement& target) {
  require_same_model(span.model(), target.model());
  bool finite = span.model().kind() == ModelKind::FinitePermutation;
  SparseVec residual;
  for (const auto& [degree, coeff] : target.terms()) {
    if (std::llabs(degree) > span.degree_span())
      fail(Errc::WindowOverflow, "target degree exceeds the collection window");
    for (const auto& [label, value] : coeff.entries()) {
      if (!finite && std::llabs(label) > span.label_span())
        fail(Errc::WindowOverflow, "target support exceeds the collection window");
      std::optional<int> col = span.column_of(Coordinate{degree, label});
      if (!col) return std::nullopt;  // coordinate untouched by the span
      residual.emplace(*col, value);
    }
  }
  Certificate cert;
  cert.kind = Certificate::Kind::LinearCombination;
  cert.claim = "target " + format_element(target) + " lies in the windowed span";
  auto it = residual.begin();
  while (it != residual.end()) {
    int col = it->first;
    auto pivot_it =
        std::lower_bound(span.pivot_columns().begin(), span.pivot_columns().end(), col);
    if (pivot_it == span.pivot_columns().end() || *pivot_it != col) return std::nullopt;
    std::size_t row = static_cast<std::size_t>(pivot_it - span.pivot_columns().begin());
    GaussianRational c = it->second;
    cert.coefficients.emplace_back(c, row);
    for (const auto& [k, v] : span.rows()[row]) {
      auto [entry, inserted] = residual.emplace(k, -(c * v));
      if (!inserted) {
        entry->second = entry->second - c * v;
        if (entry->second.is_zero()) residual.erase(entry);
      }
    }
    it = residual.upper_bound(col);
  }
  return cert;
}

std::optional<Certificate> contains_unit(const SystemModel& s,
                                         const std::vector<CrossedElement>& gens,
                                         const Window& w) {
  if (!s.unital()) fail(Errc::NotUnital, "the model's coefficient algebra has no unit");
  IdealWindowSpan span = ideal_window_span(s, gens, w);
  auto cert = membership(span, unit_element(s));
  if (cert) cert->claim = "the unit lies in the windowed span of the ideal";
  return cert;
}

std::vector<CoeffFn> intersect_with_A_window(const IdealWindowSpan& span) {
  const auto& coords = span.coordinate_index();
  int n = static_cast<int>(coords.size());
  // Eliminate nonzero-degree coordinates first; rows whose pivot then lands
  // in the degree-0 block are supported entirely inside it.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    bool za = coords[a].degree == 0;
    bool zb = coords[b].degree == 0;
    if (za != zb) return !za;
    return a < b;
  });
  std::vector<int> rank_of_col(n);
  int threshold = 0;
  for (int r = 0; r < n; ++r) {
    rank_of_col[order[r]] = r;
    if (coords[order[r]].degree != 0) threshold = r + 1;
  }
  SparseReducer reducer(false);
  for (const SparseRow& row : span.rows()) {
    SparseVec vec;
    for (const auto& [col, value] : row) vec.emplace(rank_of_col[col], value);
    reducer.insert(std::move(vec), 0);
  }
  std::vector<CoeffFn> result;
  for (const auto& [pivot, vec] : reducer.ordered_rows()) {
    if (pivot < threshold) continue;
    std::vector<std::pair<long long, GaussianRational>> entries;
    for (const auto& [rank, value] : *vec) entries.emplace_back(coords[order[rank]].label, value);
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    result.push_back(coeff_from_entries(span.model(), entries));
  }
  return result;
}

WitnessInA witness_in_A(const SystemModel& s, const CrossedElement& f) {
  require_same_model(s, f.model());
  if (f.is_zero()) fail(Errc::ZeroElement, "witness for the zero element");
  if (!s.regular_bumps())
    fail(Errc::PreconditionFailed, "model lacks bump functions (regular_bumps)");
  if (!aperiodic_points_dense(s))
    fail(Errc::PreconditionFailed, "aperiodic points are not dense in this model");

  Certificate cert;
  cert.kind = Certificate::Kind::MultiplierChain;
  CrossedElement current = f;

  long long n1 = current.support_degrees().front();
  if (current.terms().size() > 1) {
    // Pin down degree n1: pick the first support point x of f_{n1} (every
    // point is aperiodic here) and crush everything else between the bumps
    // at x and at sigma^{-n1}(x).
    CoeffFn fn1 = current.coefficient(n1);
    long long x = fn1.entries().front().first;
    CrossedElement left = CrossedElement::monomial(s, bump(s, shift_point(x)), 0);
    CrossedElement right =
        CrossedElement::monomial(s, bump(s, apply_sigma_tilde(s, shift_point(x), -n1)), 0);
    cert.steps.push_back(ChainStep{left, right});
    current = x_mul(x_mul(left, current), right);
  }
  // Monomial a*d^k: multiply by sigma^{-k}(a)*d^{-k} to land on a^2.
  long long k = current.support_degrees().front();
  CoeffFn a = current.coefficient(k);
  CrossedElement right = CrossedElement::monomial(s, sigma_hat(s, a, -k), -k);
  cert.steps.push_back(ChainStep{std::nullopt, right});
  current = x_mul(current, right);

  CoeffFn witness = e_map(current);
  cert.claim = "nonzero coefficient function " + format_element(current) +
               " inside the ideal (" + format_element(f) + ")";
  return WitnessInA{witness, std::move(cert)};
}

ZeroIntersectionGenerator zero_intersection_generator(const SystemModel& s, long long n) {
  if (n < 1) fail(Errc::PreconditionFailed, "period must be positive");
  PointSet periodic = per_n(s, n);
  if (has_empty_interior(s, periodic))
    fail(Errc::PreconditionFailed, "Per^n has empty interior for this model");
  CoeffFn f = periodic.is_all() ? CoeffFn::unit(s) : bump(s, periodic.points().front());
  CrossedElement gen = x_add(CrossedElement::monomial(s, f, 0), CrossedElement::monomial(s, f, n));
  return ZeroIntersectionGenerator{std::move(gen), std::move(f), n};
}

bool in_paired_form(const CrossedElement& h, long long n) {
  if (h.is_zero()) return true;
  const SystemModel& s = h.model();
  std::vector<long long> degrees = h.support_degrees();
  long long dmin = degrees.front();
  long long dmax = degrees.back();
  std::map<long long, CoeffFn> b;
  for (long long d = dmin; d <= dmax; ++d) {
    CoeffFn hd = h.coefficient(d);
    auto prev = b.find(d - n);
    CoeffFn bd = prev == b.end() ? hd : coeff_add(s, hd, coeff_neg(prev->second));
    if (!bd.is_zero()) b.emplace(d, std::move(bd));
  }
  // Finite support: the top n slots must have closed out, otherwise the
  // substitution propagates forever.
  for (long long d = dmax - n + 1; d <= dmax; ++d)
    if (b.count(d)) return false;
  return true;
}

bool verify_paired_form(const SystemModel& s, long long n, const CrossedElement& gen,
                        const Window& w) {
  require_same_model(s, gen.model());
  std::vector<long long> degrees = gen.support_degrees();
  if (degrees.size() != 2 || degrees[0] != 0 || degrees[1] != n ||
      !coeff_equal(gen.coefficient(0), gen.coefficient(n)) ||
      !subset(s, supp(s, gen.coefficient(0)), per_n(s, n)))
    fail(Errc::PreconditionFailed, "generator is not of the form f + f*d^n with periodic support");
  bool all_products_paired = true;
  for_each_window_product(s, gen, w, [&](const CrossedElement& product) {
    if (!in_paired_form(product, n)) all_products_paired = false;
  });
  // No nonzero coefficient function sits in the paired subspace.
  bool no_coefficient_in_p = !in_paired_form(CrossedElement::monomial(s, gen.coefficient(0), 0), n);
  for (long long label : window_labels(s, w)) {
    CrossedElement candidate = CrossedElement::monomial(s, CoeffFn::basis(s, label), 0);
    if (in_paired_form(candidate, n)) no_coefficient_in_p = false;
  }
  return all_products_paired && no_coefficient_in_p;
}

WitnessInCommutant witness_in_commutant(const SystemModel& s, const CrossedElement& f) {
  require_same_model(s, f.model());
  if (f.is_zero()) fail(Errc::ZeroElement, "witness for the zero element");
  if (!s.regular_bumps())
    fail(Errc::PreconditionFailed, "model lacks bump functions (regular_bumps)");
  if (aperiodic_points_dense(s)) {
    WitnessInA wa = witness_in_A(s, f);
    return WitnessInCommutant{CrossedElement::monomial(s, wa.witness, 0), std::move(wa.cert), 0};
  }
  Certificate cert;
  cert.kind = Certificate::Kind::MultiplierChain;
  CrossedElement g = f;
  int reductions = 0;
  while (true) {
    // Normalize: right-multiply by sigma^{-n1}(g_{n1}) d^{-n1} so the
    // degree-0 coefficient becomes g_{n1}^2, which is nonzero.
    long long n1 = g.support_degrees().front();
    CrossedElement right = CrossedElement::monomial(s, sigma_hat(s, g.coefficient(n1), -n1), -n1);
    cert.steps.push_back(ChainStep{std::nullopt, right});
    g = x_mul(g, right);
    CommutantVerdict verdict = in_commutant_structural(s, g);
    if (verdict.member) break;
    // Crush the failing degree j at a point x with sigma^j(x) != x: the
    // bump pair kills the degree-0 term and keeps degree j alive, so the
    // term count strictly drops.
    long long j = *verdict.failing_degree;
    Point x = *verdict.failing_point;
    CrossedElement left = CrossedElement::monomial(s, bump(s, x), 0);
    CrossedElement hop =
        CrossedElement::monomial(s, bump(s, apply_sigma_tilde(s, x, -j)), 0);
    cert.steps.push_back(ChainStep{left, hop});
    g = x_mul(x_mul(left, g), hop);
    ++reductions;
  }
  cert.claim = "nonzero commutant element " + format_element(g) + " inside the ideal (" +
               format_element(f) + ")";
  return WitnessInCommutant{std::move(g), std::move(cert), reductions};
}

ProperIdealResult proper_ideal_from_nondense_orbit(const SystemModel& s, const Point& mu,
                                                   int radius) {
  check_point(s, mu);
  if (is_minimal(s))
    fail(Errc::PreconditionFailed, "every orbit of this system is dense");
  if (s.kind() == ModelKind::IntegerShift)
    fail(Errc::PreconditionFailed, "every orbit of the shift is dense");
  int orbit_radius = s.kind() == ModelKind::FinitePermutation ? s.finite_size() : 4;
  Orbit o = orbit(s, mu, orbit_radius);
  PointSet closure = PointSet::finite(s, o.points);
  std::vector<CoeffFn> vanishing = vanishing_generators(s, closure, radius);
  std::vector<CrossedElement> gens;
  for (const CoeffFn& v : vanishing) gens.push_back(CrossedElement::monomial(s, v, 0));
  IdealWindowSpan span = ideal_window_span(s, gens, Window{radius, radius});
  bool check = true;
  for (std::size_t i = 0; i < span.rank(); ++i) {
    CrossedElement row = span.row_element(i);
    for (const auto& [degree, coeff] : row.terms())
      if (!evaluate(s, coeff, mu).is_zero()) check = false;
  }
  return ProperIdealResult{std::move(gens), check};
}

std::optional<Certificate> span_intersection(const IdealWindowSpan& a, const IdealWindowSpan& b) {
  require_same_model(a.model(), b.model());
  std::set<Coordinate> merged(a.coordinate_index().begin(), a.coordinate_index().end());
  merged.insert(b.coordinate_index().begin(), b.coordinate_index().end());
  std::vector<Coordinate> coords(merged.begin(), merged.end());
  auto col_of = [&coords](const Coordinate& c) {
    return static_cast<int>(std::lower_bound(coords.begin(), coords.end(), c) - coords.begin());
  };
  auto remap = [&](const IdealWindowSpan& span, const SparseRow& row) {
    SparseVec vec;
    for (const auto& [col, value] : row)
      vec.emplace(col_of(span.coordinate_index()[static_cast<std::size_t>(col)]), value);
    return vec;
  };
  SparseReducer reducer(true);
  int ka = static_cast<int>(a.rank());
  for (int i = 0; i < ka; ++i) reducer.insert(remap(a, a.rows()[static_cast<std::size_t>(i)]), i);
  for (std::size_t j = 0; j < b.rank(); ++j) {
    auto dependency = reducer.insert(remap(b, b.rows()[j]), ka + static_cast<int>(j));
    if (!dependency) continue;
    Certificate cert;
    cert.kind = Certificate::Kind::LinearCombination;
    cert.claim = "nonzero element common to both windowed spans";
    for (const auto& [tag, value] : *dependency) {
      if (tag < ka)
        cert.coefficients.emplace_back(-value, static_cast<std::size_t>(tag));
      else
        cert.coefficients_second.emplace_back(value, static_cast<std::size_t>(tag - ka));
    }
    return cert;
  }
  return std::nullopt;
}

PrimeRefutation prime_refutation(const SystemModel& s, const Window& w) {
  if (is_topologically_transitive(s))
    fail(Errc::PreconditionFailed, "the system is topologically transitive");
  if (s.kind() != ModelKind::FinitePermutation)
    fail(Errc::Unsupported, "prime refutation needs open-set enumeration (finite model)");
  auto open_sets = disjoint_invariant_open_sets(s);
  const PointSet& o1 = open_sets->first;
  const PointSet& o2 = open_sets->second;
  PrimeRefutation result;
  for (const CoeffFn& v : vanishing_generators(s, o1, w.support_radius))
    result.gens1.push_back(CrossedElement::monomial(s, v, 0));
  for (const CoeffFn& v : vanishing_generators(s, o2, w.support_radius))
    result.gens2.push_back(CrossedElement::monomial(s, v, 0));
  IdealWindowSpan span1 = ideal_window_span(s, result.gens1, w);
  IdealWindowSpan span2 = ideal_window_span(s, result.gens2, w);
  bool e_vanishes = true;
  for (std::size_t i = 0; i < span1.rank(); ++i) {
    CoeffFn head = e_map(span1.row_element(i));
    for (const Point& p : o1.points())
      if (!evaluate(s, head, p).is_zero()) e_vanishes = false;
  }
  for (std::size_t i = 0; i < span2.rank(); ++i) {
    CoeffFn head = e_map(span2.row_element(i));
    for (const Point& p : o2.points())
      if (!evaluate(s, head, p).is_zero()) e_vanishes = false;
  }
  bool intersection_trivial = !span_intersection(span1, span2).has_value();
  result.verification =
      span1.rank() > 0 && span2.rank() > 0 && e_vanishes && intersection_trivial;
  return result;
}

std::optional<Certificate> prime_witness(const SystemModel& s, const CrossedElement& f,
                                         const CrossedElement& g, const Window& w) {
  if (f.is_zero() || g.is_zero()) fail(Errc::ZeroElement, "prime witness needs nonzero ideals");
  IdealWindowSpan span_f = ideal_window_span(s, {f}, w);
  IdealWindowSpan span_g = ideal_window_span(s, {g}, w);
  auto cert = span_intersection(span_f, span_g);
  if (cert)
    cert->claim = "nonzero element common to the windowed spans of (" + format_element(f) +
                  ") and (" + format_element(g) + ")";
  return cert;
}

}  // namespace cpw
