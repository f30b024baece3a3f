#include "doctest.h"
#include "homspec/geometry.hpp"
#include "homspec/uniqueness.hpp"

using namespace homspec;

TEST_CASE("identical parameters are indistinguishable") {
  DiiiParams p{3, Rational(5, 4), Rational(2)};
  auto v = compare_diii(p, p, Rational(4));
  CHECK(v.status == IsoStatus::indistinguishable_up_to_cutoff);
}

TEST_CASE("volume separates most pairs") {
  auto v = compare_diii({3, Rational(1), Rational(1)}, {3, Rational(1), Rational(2)}, Rational(4));
  CHECK(v.status == IsoStatus::distinct_by_volume);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->invariant == "volume_squared");
}

TEST_CASE("equal volume, different first eigenvalue") {
  // t2 scaled by 4, s2 scaled to keep s^2 t^{n-1} fixed (n = 3)
  auto v = compare_diii({3, Rational(1), Rational(1)}, {3, Rational(1, 4), Rational(4)},
                        Rational(4));
  CHECK(v.status == IsoStatus::distinct_by_lambda1);
}

TEST_CASE("equal volume and first eigenvalue, multiplicity decides") {
  // the swap pair (8,1) vs (4,2): same volume, same lambda1 = 12/5,
  // but regimes > and = give multiplicities 21 vs 28
  DiiiParams a{3, Rational(8), Rational(1)}, b{3, Rational(4), Rational(2)};
  CHECK(diii_volume_squared(a) == diii_volume_squared(b));
  CHECK(diii_first_eigenvalue(a).value == diii_first_eigenvalue(b).value);
  auto v = compare_diii(a, b, Rational(5));
  CHECK(v.status == IsoStatus::distinct_by_multiplicity);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->invariant == "lambda1_multiplicity");
}

TEST_CASE("swap pairs inside the skew regime reach the second eigenvalue") {
  // (3,1) <-> (4, 3/4): equal volume and lambda1, both with s^2 > 2t^2
  DiiiParams a{3, Rational(3), Rational(1)}, b{3, Rational(4), Rational(3, 4)};
  CHECK(diii_volume_squared(a) == diii_volume_squared(b));
  auto la = diii_first_eigenvalue(a), lb = diii_first_eigenvalue(b);
  CHECK(la.value == lb.value);
  CHECK(la.multiplicity == lb.multiplicity);
  auto v = compare_diii(a, b, Rational(6));
  CHECK(v.status == IsoStatus::distinct_by_truncated_spectrum);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->invariant == "lambda2");
}

TEST_CASE("curve values") {
  for (int n = 2; n <= 6; ++n) CHECK(volume_curve_value(n, Rational(1)) == Rational(1));
  CHECK(volume_curve_value(2, Rational(2)) == Rational(1024000, 1594323));
  CHECK_THROWS_AS(volume_curve_value(2, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(volume_curve_value(2, Rational(7)), std::invalid_argument);
  // the curve parameters really have the symmetric first-eigenvalue data
  for (int n : {2, 3}) {
    auto p = volume_curve_params(n, Rational(1, 3));
    auto l1 = aii_first_eigenvalue(p);
    CHECK(l1.value == Rational(static_cast<long>(n) * (2 * n + 3), 2L * n + 1));
    CHECK(l1.multiplicity == Integer(2L * n + 1) * Integer(2L * n + 2));
  }
  // consistency with the volume invariant itself
  AiiParams bar{2, Rational(6), Rational(5), Rational(3)};
  auto p2 = volume_curve_params(2, Rational(2));
  CHECK(volume_curve_value(2, Rational(2)) ==
        aii_volume_squared(p2) / aii_volume_squared(bar));
}

TEST_CASE("curve profile at a coarse step") {
  for (int n : {2, 6}) {
    auto prof = volume_curve_profile(n, Rational(1, 100), 2);
    CHECK(prof.rising_before_one);
    CHECK(prof.falling_after_one);
    REQUIRE(prof.unit_points.size() == 1);
    CHECK(prof.unit_points[0] == Rational(1));
    CHECK(prof.samples == static_cast<size_t>((2 * n + 3) * 100 - 1));
  }
}

TEST_CASE("multiplicity decomposition") {
  auto sols = multiplicity_decomposition(2, Integer(30));
  REQUIRE(sols.size() == 1);
  CHECK(sols[0] == std::array<int, 4>{1, 1, 0, 0});

  auto zero = multiplicity_decomposition(2, Integer(0));
  REQUIRE(zero.size() == 1);
  CHECK(zero[0] == std::array<int, 4>{0, 0, 0, 0});

  auto adj = multiplicity_decomposition(3, Integer(48));  // (2n+1)^2 - 1 at n = 3
  REQUIRE(adj.size() == 1);
  CHECK(adj[0] == std::array<int, 4>{0, 0, 1, 0});

  for (int n = 2; n <= 6; ++n) {
    auto s = multiplicity_decomposition(n, Integer(2L * n + 1) * Integer(2L * n + 2));
    REQUIRE(s.size() == 1);
    CHECK(s[0] == std::array<int, 4>{1, 1, 0, 0});
  }
}

TEST_CASE("comparison against the symmetric quaternionic metric") {
  AiiParams bar{2, Rational(6), Rational(5), Rational(3)};
  CHECK(compare_aii_to_symmetric(bar, Rational(3)).status ==
        IsoStatus::indistinguishable_up_to_cutoff);

  auto on_curve = compare_aii_to_symmetric(volume_curve_params(2, Rational(2)), Rational(3));
  CHECK(on_curve.status == IsoStatus::distinct_by_volume);
  REQUIRE(on_curve.witness.has_value());
  CHECK(on_curve.witness->lhs == Rational(1024000, 1594323).str());

  auto scaled = compare_aii_to_symmetric({2, Rational(12), Rational(10), Rational(6)}, Rational(3));
  CHECK(scaled.status == IsoStatus::distinct_by_lambda1);

  auto wrong_mult =
      compare_aii_to_symmetric({2, Rational(14, 5), Rational(500), Rational(500)}, Rational(3));
  CHECK(wrong_mult.status == IsoStatus::distinct_by_multiplicity);
}
