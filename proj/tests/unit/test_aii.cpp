#include <random>
#include <vector>

#include "doctest.h"
#include "homspec/aii.hpp"
#include "homspec/casimir.hpp"
#include "homspec/weight.hpp"

using namespace homspec;

namespace {

QklIndex make_idx(int n, std::vector<long long> q, long long k, std::vector<long long> l) {
  QklIndex idx{std::move(q), k, std::move(l)};
  REQUIRE(qkl_valid(n, idx));
  return idx;
}

}  // namespace

TEST_CASE("index validation") {
  CHECK(qkl_valid(2, QklIndex{{0}, 0, {1, 0}}));
  CHECK_FALSE(qkl_valid(2, QklIndex{{0}, 1, {0, 0}}));   // k > L
  CHECK_FALSE(qkl_valid(2, QklIndex{{0}, 0, {0, 1}}));   // l_2 > q_1
  CHECK_FALSE(qkl_valid(2, QklIndex{{-1}, 0, {0, 0}}));  // negative
  CHECK(qkl_valid(3, QklIndex{{1, 2}, -5, {3, 1, 2}}));
  CHECK_THROWS_AS(aii_coeff_p1(2, QklIndex{{0}, 1, {0, 0}}), std::invalid_argument);
}

TEST_CASE("candidate coefficient rows") {
  for (int n : {2, 3, 4}) {
    long N = n;
    auto zero_q = std::vector<long long>(n - 1, 0);
    auto e1_l = std::vector<long long>(n, 0);
    e1_l[0] = 1;

    auto idx1 = make_idx(n, zero_q, 0, e1_l);
    CHECK(aii_eigenvalue_form(n, idx1).coeffs ==
          std::vector<Rational>{Rational(1), Rational(0), Rational(0)});

    auto idx2 = make_idx(n, zero_q, 1, e1_l);
    CHECK(aii_eigenvalue_form(n, idx2).coeffs ==
          std::vector<Rational>{Rational(N, 2 * N + 1),
                                Rational(N, (2 * N + 1) * (2 * N + 1)), Rational(0)});
    auto idx2b = make_idx(n, zero_q, -1, std::vector<long long>(n, 0));
    CHECK(aii_eigenvalue_form(n, idx2b).coeffs == aii_eigenvalue_form(n, idx2).coeffs);

    auto e1_q = std::vector<long long>(n - 1, 0);
    e1_q[0] = 1;
    auto idx3 = make_idx(n, e1_q, 0, std::vector<long long>(n, 0));
    CHECK(aii_eigenvalue_form(n, idx3).coeffs ==
          std::vector<Rational>{Rational(1, 2 * N + 1),
                                Rational(1, N * (2 * N + 1) * (2 * N + 1)),
                                Rational(N - 1, N)});

    auto q4 = std::vector<long long>(n - 1, 0);
    q4[0] += 1;
    q4[n - 2] += 1;
    auto en_l = std::vector<long long>(n, 0);
    en_l[n - 1] = 1;
    auto idx4 = make_idx(n, q4, 1, en_l);
    CHECK(aii_eigenvalue_form(n, idx4).coeffs ==
          std::vector<Rational>{Rational(2, 2 * N + 1), Rational(0),
                                Rational(4 * N - 2, 2 * N + 1)});
  }
}

TEST_CASE("weights behind the candidate indices") {
  int n = 2;
  auto idx1 = make_idx(n, {0}, 0, {1, 0});
  auto w1 = aii_weights_from_index(n, idx1);
  CHECK(w1.lambda.coords == std::vector<Rational>{Rational(1), Rational(0), Rational(0),
                                                  Rational(0), Rational(-1)});
  for (const auto& c : w1.mu.coords) CHECK(c.is_zero());
  for (const auto& c : w1.mu_prime.coords) CHECK(c.is_zero());

  auto idx2b = make_idx(n, {0}, -1, {0, 0});
  auto w2 = aii_weights_from_index(n, idx2b);
  CHECK(w2.lambda.coords ==
        std::vector<Rational>{Rational(1, 5), Rational(1, 5), Rational(1, 5), Rational(1, 5),
                              Rational(-4, 5)});
  CHECK(w2.mu.coords == w2.lambda.coords);
  for (const auto& c : w2.mu_prime.coords) CHECK(c.is_zero());

  auto idx3 = make_idx(n, {1}, 0, {0, 0});
  auto w3 = aii_weights_from_index(n, idx3);
  CHECK(w3.lambda.coords ==
        std::vector<Rational>{Rational(3, 5), Rational(3, 5), Rational(-2, 5), Rational(-2, 5),
                              Rational(-2, 5)});
  CHECK(w3.mu_prime.coords ==
        std::vector<Rational>{Rational(1, 2), Rational(1, 2), Rational(-1, 2), Rational(-1, 2)});

  // round trips
  for (const auto& idx : aii_lambda1_candidates(n)) {
    auto w = aii_weights_from_index(n, idx);
    CHECK(aii_index_from_weights(n, w) == idx);
  }
}

TEST_CASE("coefficient sum equals the ambient Casimir") {
  for (int n : {2, 3}) {
    for (const auto& idx : aii_lambda1_candidates(n)) {
      auto f = aii_eigenvalue_form(n, idx);
      auto w = aii_weights_from_index(n, idx);
      CHECK(f.coeffs[0] + f.coeffs[1] + f.coeffs[2] ==
            casimir_scalar_su(2 * n + 1, w.lambda.coords));
    }
  }
}

TEST_CASE("frozen spectrum at the normal metric") {
  AiiParams p{2, Rational(1), Rational(1), Rational(1)};
  auto t = aii_spectrum(p, Rational(1));
  REQUIRE(t.entries.size() == 5);
  CHECK(t.entries[0].value == Rational(12, 25));
  CHECK(t.entries[0].multiplicity == Integer(5));
  CHECK(t.entries[0].prov.idx == QklIndex{{0}, -1, {0, 0}});
  CHECK(t.entries[1].value == Rational(12, 25));
  CHECK(t.entries[1].prov.idx == QklIndex{{0}, 1, {1, 0}});
  CHECK(t.entries[2].value == Rational(18, 25));
  CHECK(t.entries[2].multiplicity == Integer(10));
  CHECK(t.entries[2].prov.idx == QklIndex{{1}, 0, {0, 0}});
  CHECK(t.entries[3].value == Rational(18, 25));
  CHECK(t.entries[3].prov.idx == QklIndex{{1}, 1, {0, 1}});
  CHECK(t.entries[4].value == Rational(1));
  CHECK(t.entries[4].multiplicity == Integer(24));
  CHECK(t.entries[4].prov.idx == QklIndex{{0}, 0, {1, 0}});

  auto below = aii_spectrum(p, Rational(12, 25) * Rational(99, 100));
  CHECK(below.empty());
}

TEST_CASE("direct enumeration equals the branching route") {
  for (int n : {2, 3}) {
    std::vector<AiiParams> points = {
        {n, Rational(1), Rational(1), Rational(1)},
        {n, Rational(1), Rational(2), Rational(1, 2)},
    };
    for (const auto& p : points) {
      auto fast = aii_spectrum(p, Rational(3, 2), 2);
      auto oracle = aii_spectrum_by_branching(p, Rational(3, 2), 2);
      CHECK(fast == oracle);
      CHECK(!fast.empty());
    }
  }
}

TEST_CASE("random parameters: the two routes stay in lockstep") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<int> num(1, 6), den(1, 3);
  auto rand_rational = [&] { return Rational(num(rng), den(rng)); };
  for (int trial = 0; trial < 10; ++trial) {
    int n = 2 + (trial % 2);
    AiiParams p{n, rand_rational(), rand_rational(), rand_rational()};
    Rational cutoff = min(Rational(3, 2), aii_first_eigenvalue(p).value * Rational(2));
    auto fast = aii_spectrum(p, cutoff);
    auto oracle = aii_spectrum_by_branching(p, cutoff);
    CHECK(fast == oracle);
  }
}

TEST_CASE("higher ranks: closed form and enumerator agree at the normal metric") {
  for (int n : {4, 5, 6}) {
    AiiParams p{n, Rational(1), Rational(1), Rational(1)};
    auto closed = aii_first_eigenvalue(p);
    long N = n;
    CHECK(closed.value == Rational(2 * N * (N + 1), (2 * N + 1) * (2 * N + 1)));
    auto t = aii_spectrum(p, closed.value);
    REQUIRE(!t.empty());
    CHECK(t.entries.front().value == closed.value);
    CHECK(t.multiplicity_of(closed.value) == closed.multiplicity);
  }
}

TEST_CASE("tables nest as the cutoff grows") {
  AiiParams p{2, Rational(1), Rational(2), Rational(1, 2)};
  auto small = aii_spectrum(p, Rational(1));
  auto large = aii_spectrum(p, Rational(2));
  REQUIRE(small.entries.size() <= large.entries.size());
  size_t j = 0;
  for (const auto& e : small.entries) {
    while (j < large.entries.size() && !(large.entries[j] == e)) ++j;
    REQUIRE(j < large.entries.size());
    ++j;
  }
}

TEST_CASE("first eigenvalue closed form") {
  // normalized symmetric point
  auto sym = aii_first_eigenvalue({2, Rational(6), Rational(5), Rational(3)});
  CHECK(sym.value == Rational(14, 5));
  CHECK(sym.multiplicity == Integer(30));
  CHECK(sym.attained.size() == 4);

  // highest-multiplicity point
  auto peak = aii_first_eigenvalue({2, Rational(1), Rational(55, 2), Rational(1, 2)});
  CHECK(peak.value == Rational(1));
  CHECK(peak.multiplicity == Integer(119));
  CHECK(peak.attained.size() == 4);

  // plain vector-representation regime
  auto vec = aii_first_eigenvalue({2, Rational(1), Rational(100), Rational(100)});
  CHECK(vec.value == Rational(1));
  CHECK(vec.multiplicity == Integer(24));
  CHECK(vec.attained.size() == 1);
}

TEST_CASE("closed form agrees with the enumerator") {
  std::vector<AiiParams> points = {
      {2, Rational(1), Rational(1), Rational(1)},
      {2, Rational(6), Rational(5), Rational(3)},
      {2, Rational(1), Rational(55, 2), Rational(1, 2)},
      {3, Rational(1), Rational(1), Rational(1)},
      {3, Rational(2), Rational(1), Rational(3)},
  };
  for (const auto& p : points) {
    auto closed = aii_first_eigenvalue(p);
    auto t = aii_spectrum(p, closed.value);
    REQUIRE(!t.empty());
    CHECK(t.entries.front().value == closed.value);
    CHECK(t.multiplicity_of(closed.value) == closed.multiplicity);
  }
}

TEST_CASE("random parameters: enumerated minimum equals the candidate minimum") {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> num(1, 12), den(1, 4);
  auto rand_rational = [&] { return Rational(num(rng), den(rng)); };
  for (int trial = 0; trial < 24; ++trial) {
    int n = 2 + (trial % 2);
    AiiParams p{n, rand_rational(), rand_rational(), rand_rational()};
    auto closed = aii_first_eigenvalue(p);
    auto t = aii_spectrum(p, closed.value);
    REQUIRE(!t.empty());
    CHECK(t.entries.front().value == closed.value);
    CHECK(t.multiplicity_of(closed.value) == closed.multiplicity);
  }
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(validate(AiiParams{1, Rational(1), Rational(1), Rational(1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate(AiiParams{2, Rational(1), Rational(0), Rational(1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(aii_spectrum(AiiParams{2, Rational(1), Rational(1), Rational(1)}, Rational(-1)),
                  std::invalid_argument);
}

TEST_CASE("thread count does not change the table") {
  AiiParams p{2, Rational(1), Rational(2), Rational(1, 2)};
  auto t1 = aii_spectrum(p, Rational(2), 1);
  auto t4 = aii_spectrum(p, Rational(2), 4);
  CHECK(t1 == t4);
}
