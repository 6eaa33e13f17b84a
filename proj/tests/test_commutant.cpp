#include <doctest.h>

#include <random>

#include "cpw/commutant.hpp"
#include "cpw/suites.hpp"

using namespace cpw;

namespace {

const SystemModel kSwap = SystemModel::finite_permutation({1, 0});
const SystemModel kTwoOrbit = SystemModel::finite_permutation({1, 0, 2});
const SystemModel kSixTwoOrbit = SystemModel::finite_permutation({1, 2, 0, 4, 5, 3});
const SystemModel kShift = SystemModel::integer_shift();
const SystemModel kCircleI = SystemModel::circle_rotation(GaussianRational::i());
const SystemModel kCircleIrr = SystemModel::circle_rotation(
    GaussianRational(make_rational(3, 5), make_rational(4, 5)));

CrossedElement mono(const SystemModel& s, long long label, long long degree) {
  return CrossedElement::monomial(s, CoeffFn::basis(s, label), degree);
}

}  // namespace

TEST_CASE("structural membership examples") {
  // Shift: e_0 d^2 cannot commute (Per^2 is empty).
  CommutantVerdict v = in_commutant_structural(kShift, mono(kShift, 0, 2));
  CHECK(!v.member);
  CHECK(v.failing_degree == 2);
  REQUIRE(v.failing_point.has_value());
  CHECK(point_equal(*v.failing_point, shift_point(0)));

  // Circle q=i: t d^4 commutes (Per^4 = All).
  CHECK(in_commutant_structural(kCircleI, mono(kCircleI, 1, 4)).member);
  // Degree-0 elements always commute.
  CHECK(in_commutant_structural(kSwap, mono(kSwap, 0, 0)).member);
  CHECK(in_commutant_structural(kShift, CrossedElement(kShift)).member);
}

TEST_CASE("direct membership examples") {
  // Swap: d^2 has sigma^2 = id, so it commutes with both indicators.
  CHECK(in_commutant_direct(kSwap, delta_power(kSwap, 2), 3));
  // Circle q=i: d * t = i t d differs from t d.
  CrossedElement td = mono(kCircleI, 1, 1);
  CHECK(!in_commutant_direct(kCircleI, td, 3));
  CHECK(in_commutant_direct(kSwap, CrossedElement(kSwap), 3));
}

TEST_CASE("structural and direct membership agree on random elements") {
  std::mt19937_64 rng(808);
  for (const SystemModel& s : {kSwap, kTwoOrbit, kShift, kCircleI, kCircleIrr}) {
    for (int trial = 0; trial < 120; ++trial) {
      CrossedElement f = sample_element(s, rng, false);
      CHECK(in_commutant_structural(s, f).member ==
            in_commutant_direct(s, f, default_probe_radius(f)));
    }
  }
}

TEST_CASE("commutant basis windows") {
  // Swap, degree bound 2: degree-0 and degree +/-2 layers, two indicators each.
  std::vector<CrossedElement> swap_basis = commutant_basis_window(kSwap, 2, 3);
  CHECK(swap_basis.size() == 6);

  // Shift, bound 3, radius 1: only the degree-0 indicators e_-1, e_0, e_1.
  std::vector<CrossedElement> shift_basis = commutant_basis_window(kShift, 3, 1);
  CHECK(shift_basis.size() == 3);
  for (const CrossedElement& b : shift_basis)
    CHECK(b.support_degrees() == std::vector<long long>{0});

  // Circle q=i, bound 4: degree 0, +/-4 carry Laurent layers.
  std::vector<CrossedElement> circle_basis = commutant_basis_window(kCircleI, 4, 2);
  CHECK(circle_basis.size() == 15);  // three degrees x five exponents
  for (const CrossedElement& b : circle_basis) {
    long long d = b.support_degrees().front();
    CHECK((d == -4 || d == 0 || d == 4));
  }
}

TEST_CASE("commutant basis members commute with each other and with probes") {
  for (const SystemModel& s : {kSwap, kSixTwoOrbit, kCircleI, kShift}) {
    std::vector<CrossedElement> basis = commutant_basis_window(s, 4, 2);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(in_commutant_direct(s, basis[i], default_probe_radius(basis[i])));
      for (std::size_t j = i + 1; j < basis.size(); ++j)
        CHECK(x_equal(x_mul(basis[i], basis[j]), x_mul(basis[j], basis[i])));
    }
  }
}

TEST_CASE("maximal abelianness matches aperiodic density") {
  CHECK(!is_maximal_abelian(kSwap));
  CHECK(is_maximal_abelian(kShift));
  CHECK(!is_maximal_abelian(kCircleI));
  CHECK(is_maximal_abelian(kCircleIrr));
  for (const SystemModel& s : {kSwap, kTwoOrbit, kSixTwoOrbit, kShift, kCircleI, kCircleIrr})
    CHECK(is_maximal_abelian(s) == aperiodic_points_dense(s));
  // Witness outside the coefficient algebra for the swap model: e_0 d^2.
  CHECK(in_commutant_structural(kSwap, mono(kSwap, 0, 2)).member);
}
