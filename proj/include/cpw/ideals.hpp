#pragma once

#include <json.hpp>

#include <functional>
#include <optional>

#include "cpw/commutant.hpp"
#include "cpw/matrix.hpp"

namespace cpw {

/// Truncation bounds for ideal spans: |degree| of window monomials and the
/// support/exponent radius of their coefficients.
struct Window {
  int degree_bound = 1;
  int support_radius = 1;
};

void validate_window(const Window& w);

/// One axis of the monomial coordinate space: a (degree, label) pair, where
/// the label is a point index (discrete models) or a t-exponent (circle).
struct Coordinate {
  long long degree;
  long long label;
  auto operator<=>(const Coordinate&) const = default;
};

using SparseRow = std::vector<std::pair<int, GaussianRational>>;  // (column, value)

/// Window-truncated exact linear span of a two-sided ideal: the reduced
/// row-echelon basis of all products m * g * m' (plus bare and one-sided
/// products) over window monomials m, m'. Products leaving the enlarged
/// collection window are discarded deterministically.
class IdealWindowSpan {
 public:
  const SystemModel& model() const { return model_; }
  const std::vector<CrossedElement>& generators() const { return generators_; }
  const Window& window() const { return window_; }
  const std::vector<Coordinate>& coordinate_index() const { return coordinates_; }
  const ExactMatrix& basis() const { return basis_; }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseRow>& rows() const { return rows_; }
  const std::vector<int>& pivot_columns() const { return pivot_columns_; }

  CrossedElement row_element(std::size_t i) const;

  long long degree_span() const { return degree_span_; }
  long long label_span() const { return label_span_; }

  /// Column of a coordinate inside the index, if present.
  std::optional<int> column_of(const Coordinate& c) const;

 private:
  friend IdealWindowSpan ideal_window_span(const SystemModel& s,
                                           const std::vector<CrossedElement>& gens,
                                           const Window& w);
  IdealWindowSpan(SystemModel model) : model_(std::move(model)) {}

  SystemModel model_;
  std::vector<CrossedElement> generators_;
  Window window_{};
  std::vector<Coordinate> coordinates_;
  std::vector<SparseRow> rows_;  // RREF, ordered by pivot column
  std::vector<int> pivot_columns_;
  ExactMatrix basis_;
  long long degree_span_ = 0;
  long long label_span_ = 0;
};

IdealWindowSpan ideal_window_span(const SystemModel& s, const std::vector<CrossedElement>& gens,
                                  const Window& w);

/// Enumerates g, m*g, g*m' and m*g*m' over all window monomials, in a fixed
/// deterministic order.
void for_each_window_product(const SystemModel& s, const CrossedElement& g, const Window& w,
                             const std::function<void(const CrossedElement&)>& fn);

struct ChainStep {
  std::optional<CrossedElement> left;
  std::optional<CrossedElement> right;
};

/// Replayable evidence for a membership claim: either a chain of two-sided
/// multiplications applied to a starting element, or an exact linear
/// combination of span basis rows (two combinations for common-element
/// claims across a pair of spans).
struct Certificate {
  enum class Kind { MultiplierChain, LinearCombination };
  Kind kind = Kind::LinearCombination;
  std::string claim;
  std::vector<ChainStep> steps;
  std::vector<std::pair<GaussianRational, std::size_t>> coefficients;
  std::vector<std::pair<GaussianRational, std::size_t>> coefficients_second;
};

CrossedElement replay_chain(const CrossedElement& start, const Certificate& cert);
CrossedElement replay_lincomb(const IdealWindowSpan& span,
                              const std::vector<std::pair<GaussianRational, std::size_t>>& coeffs);

nlohmann::json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const SystemModel& s, const nlohmann::json& j);

/// Exact coefficients of `target` over the span's basis rows, when the
/// target lies in the windowed span. Absence means "not found inside this
/// window", never "not in the ideal". WindowOverflow when the target's
/// coordinates exceed the collection window.
std::optional<Certificate> membership(const IdealWindowSpan& span, const CrossedElement& target);

/// Membership probe for the unit element (simplicity probe; NotUnital for
/// the shift model).
std::optional<Certificate> contains_unit(const SystemModel& s,
                                         const std::vector<CrossedElement>& gens, const Window& w);

/// Exact basis of (row span) intersected with the degree-0 subspace,
/// reported as coefficient functions.
std::vector<CoeffFn> intersect_with_A_window(const IdealWindowSpan& span);

struct WitnessInA {
  CoeffFn witness;
  Certificate cert;
};

/// For a nonzero element of the shift-model crossed product, produces a
/// nonzero coefficient function inside the ideal (f), with a multiplier
/// chain pinning f to a monomial and then squaring it back into the
/// coefficient algebra.
WitnessInA witness_in_A(const SystemModel& s, const CrossedElement& f);

struct ZeroIntersectionGenerator {
  CrossedElement gen;  // f + f d^n
  CoeffFn f;
  long long n;
};

/// The generator f + f*d^n with supp(f) inside Per^n, available whenever
/// Per^n has non-empty interior. The ideal it generates meets the
/// coefficient algebra only in 0.
ZeroIntersectionGenerator zero_intersection_generator(const SystemModel& s, long long n);

/// Membership of h in the paired subspace {sum_i b_i d^i + b_i d^(i+n)},
/// decided by forward substitution b_i = h_i - b_(i-n) with finite support.
bool in_paired_form(const CrossedElement& h, long long n);

/// Checks that every window product of gen lands in the paired subspace and
/// that no nonzero coefficient function does.
bool verify_paired_form(const SystemModel& s, long long n, const CrossedElement& gen,
                        const Window& w);

struct WitnessInCommutant {
  CrossedElement witness;
  Certificate cert;
  int iterations;  // number of term-count reductions performed
};

/// For a nonzero element of a regular model, produces a nonzero commutant
/// element of the ideal (f): normalize so the degree-0 term is nonzero, and
/// while the commutant criterion fails, crush the failing degree with a pair
/// of bumps, strictly shrinking the number of terms.
WitnessInCommutant witness_in_commutant(const SystemModel& s, const CrossedElement& f);

struct ProperIdealResult {
  std::vector<CrossedElement> gens;
  bool check;  // all window-span coefficients vanish at the base point
};

/// From a point with non-dense orbit, the ideal generated by functions
/// vanishing on the orbit closure; every coefficient of every span element
/// vanishes at the point, so the ideal is proper.
ProperIdealResult proper_ideal_from_nondense_orbit(const SystemModel& s, const Point& mu,
                                                   int radius);

/// Searches for a nonzero element common to two windowed spans; the
/// certificate carries one combination per span, both replaying to the same
/// element.
std::optional<Certificate> span_intersection(const IdealWindowSpan& a, const IdealWindowSpan& b);

struct PrimeRefutation {
  std::vector<CrossedElement> gens1;
  std::vector<CrossedElement> gens2;
  bool verification;
};

/// For a non-transitive finite system, two ideals built from disjoint
/// invariant open sets whose windowed spans intersect trivially.
PrimeRefutation prime_refutation(const SystemModel& s, const Window& w = Window{4, 4});

/// Searches the window intersection of the spans of (f) and (g); absence is
/// inconclusive (window-bounded).
std::optional<Certificate> prime_witness(const SystemModel& s, const CrossedElement& f,
                                         const CrossedElement& g, const Window& w);

}  // namespace cpw
