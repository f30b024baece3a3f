#include <vector>

#include "doctest.h"
#include "homspec/casimir.hpp"
#include "homspec/root_data.hpp"
#include "homspec/weight.hpp"
#include "homspec/weyl.hpp"

using namespace homspec;

namespace {
std::vector<Rational> rv(std::initializer_list<Rational> xs) { return std::vector<Rational>(xs); }
}  // namespace

TEST_CASE("sum-zero projection") {
  std::vector<long long> e1 = {1, 0, 0, 0, 0};
  auto p = project_sum_zero(std::span<const long long>(e1));
  CHECK(p == rv({Rational(4, 5), Rational(-1, 5), Rational(-1, 5), Rational(-1, 5),
                 Rational(-1, 5)}));

  std::vector<long long> zero = {0, 0, 0};
  auto pz = project_sum_zero(std::span<const long long>(zero));
  CHECK(pz == rv({Rational(0), Rational(0), Rational(0)}));

  std::vector<long long> e12 = {1, 1, 0, 0};
  auto pp = project_sum_zero(std::span<const long long>(e12));
  CHECK(pp == rv({Rational(1, 2), Rational(1, 2), Rational(-1, 2), Rational(-1, 2)}));

  // idempotent on sum-zero input
  auto again = project_sum_zero(std::span<const Rational>(pp));
  CHECK(again == pp);
  CHECK(coord_sum(std::span<const Rational>(pp)).is_zero());
}

TEST_CASE("orthogonal Casimir closed forms") {
  std::vector<long long> v = {1, 0, 0};
  CHECK(casimir_scalar_so_odd(3, v) == Rational(3, 5));
  std::vector<long long> z = {0, 0, 0, 0};
  CHECK(casimir_scalar_so_odd(4, z) == Rational(0));
  for (int n = 2; n <= 8; ++n) {
    std::vector<long long> ad(n, 0);
    ad[0] = 1;
    ad[1] = 1;
    CHECK(casimir_scalar_so_odd(n, ad) == Rational(1));
  }
  std::vector<long long> bad = {0, 1, 0};
  CHECK_THROWS_AS(casimir_scalar_so_odd(3, bad), std::invalid_argument);

  std::vector<long long> b = {1, 1, 0};
  CHECK(casimir_scalar_so_even_ambient(3, b) == Rational(4, 5));
  std::vector<long long> b4 = {1, 1, 1, 1};
  CHECK(casimir_scalar_so_even_ambient(4, b4) == Rational(8, 7));
  std::vector<long long> bz = {0, 0, 0};
  CHECK(casimir_scalar_so_even_ambient(3, bz) == Rational(0));
  std::vector<long long> spin = {1, 1, -1};
  CHECK_NOTHROW(casimir_scalar_so_even_ambient(3, spin));
  std::vector<long long> nondom = {1, 2, 0};
  CHECK_THROWS_AS(casimir_scalar_so_even_ambient(3, nondom), std::invalid_argument);
}

TEST_CASE("unitary Casimir closed forms") {
  for (int n = 2; n <= 8; ++n) {
    int m = 2 * n + 1;
    std::vector<Rational> adj(m, Rational(0));
    adj[0] = Rational(1);
    adj[m - 1] = Rational(-1);
    CHECK(casimir_scalar_su(m, adj) == Rational(1));
  }
  std::vector<long long> e1 = {1, 0, 0, 0, 0};
  auto p = project_sum_zero(std::span<const long long>(e1));
  CHECK(casimir_scalar_su(5, p) == Rational(12, 25));

  std::vector<Rational> zero(5, Rational(0));
  CHECK(casimir_scalar_su(5, zero) == Rational(0));

  std::vector<Rational> nonzero_sum = {Rational(1), Rational(0), Rational(0), Rational(0),
                                       Rational(0)};
  CHECK_THROWS_AS(casimir_scalar_su(5, nonzero_sum), std::invalid_argument);
}

TEST_CASE("reductive subgroup Casimir splits into semisimple part and center") {
  // the weight behind the standard representation row: mu = pr(e_{2n+1}), n = 2
  std::vector<long long> raw = {0, 0, 0, 0, 1};
  auto mu = project_sum_zero(std::span<const long long>(raw));
  int n = 2;
  Rational lam = casimir_scalar_k_reductive_ambient(n, mu);
  CHECK(lam == Rational(2, 25));  // n/(2n+1)^2
  auto mu_sub = center_shift_to_su_sub(n, mu);
  for (const auto& c : mu_sub) CHECK(c.is_zero());
  auto gk = GroupData::k_reductive_ambient(n);
  CHECK(lam == casimir_from_roots(gk, std::span<const Rational>(mu)));
}

TEST_CASE("Freudenthal route agrees with the closed forms on a small scan") {
  for (int n : {2, 3}) {
    auto g_odd = GroupData::so_odd(n);
    auto g_amb = GroupData::so_even_ambient(n);
    auto g_int = GroupData::so_even_intrinsic(n);
    std::vector<long long> a(n, 0);
    // dominant scan with coordinates <= 3
    auto rec = [&](auto&& self, int pos, long long prev) -> void {
      if (pos == n) {
        CHECK(casimir_scalar_so_odd(n, a) ==
              casimir_from_roots(g_odd, std::span<const long long>(a)));
        return;
      }
      for (long long v = 0; v <= prev; ++v) {
        a[pos] = v;
        self(self, pos + 1, v);
      }
    };
    rec(rec, 0, 3);

    std::vector<long long> b(n, 0);
    auto rec_d = [&](auto&& self, int pos, long long prev) -> void {
      if (pos == n - 1) {
        for (long long last = -prev; last <= prev; ++last) {
          b[pos] = last;
          Rational amb = casimir_scalar_so_even_ambient(n, b);
          CHECK(amb == casimir_from_roots(g_amb, std::span<const long long>(b)));
          CHECK(casimir_scalar_so_even(n, b) ==
                casimir_from_roots(g_int, std::span<const long long>(b)));
          CHECK(amb == killing_rescale_so(n) * casimir_scalar_so_even(n, b));
        }
        return;
      }
      for (long long v = 0; v <= prev; ++v) {
        b[pos] = v;
        self(self, pos + 1, v);
      }
    };
    rec_d(rec_d, 0, 3);
  }
}

TEST_CASE("stored inner-product constants match the adjoint anchor") {
  for (int n = 2; n <= 6; ++n) {
    auto g = GroupData::so_odd(n);
    CHECK(g.gram == Rational(1, 4L * n - 2));
    CHECK(gram_from_adjoint_anchor(g) == g.gram);
    auto gs = GroupData::su(2 * n + 1);
    CHECK(gs.gram == Rational(1, 4L * n + 2));
    CHECK(gram_from_adjoint_anchor(gs) == gs.gram);
  }
  CHECK(killing_rescale_so(3) == Rational(4, 5));
  CHECK(killing_rescale_su(2) == Rational(4, 5));
}

TEST_CASE("orthogonal Weyl dimensions") {
  std::vector<long long> v = {1, 0, 0};
  CHECK(weyl_dim_so_odd(3, v) == Integer(7));
  v = {1, 1, 1};
  CHECK(weyl_dim_so_odd(3, v) == Integer(35));
  v = {2, 2, 0};
  CHECK(weyl_dim_so_odd(3, v) == Integer(168));
  v = {1, 1, 0};
  CHECK(weyl_dim_so_odd(3, v) == Integer(21));
  std::vector<long long> w = {1, 1, 1, 1};
  CHECK(weyl_dim_so_odd(4, w) == Integer(126));
  std::vector<long long> zero = {0, 0, 0};
  CHECK(weyl_dim_so_odd(3, zero) == Integer(1));
  std::vector<long long> bad = {0, 1, 0};
  CHECK_THROWS_AS(weyl_dim_so_odd(3, bad), std::invalid_argument);
}

TEST_CASE("unitary Weyl dimensions") {
  std::vector<long long> z = {1, 0, 0, 0, 0};
  CHECK(weyl_dim_su(5, z) == Integer(5));
  z = {2, 2, 1, 0, 0};
  CHECK(weyl_dim_su(5, z) == Integer(75));
  std::vector<long long> shifted = {5, 5, 4, 3, 3};
  CHECK(weyl_dim_su(5, shifted) == Integer(75));  // uniform shift invariance
  std::vector<long long> adj = {2, 1, 1, 1, 0};
  CHECK(weyl_dim_su(5, adj) == Integer(24));
  std::vector<Rational> frac = {Rational(1, 2), Rational(0), Rational(-1, 2)};
  CHECK_THROWS_AS(weyl_dim_su(3, frac), std::invalid_argument);
  std::vector<Rational> ok = {Rational(3, 2), Rational(1, 2), Rational(-1, 2), Rational(-3, 2)};
  CHECK(weyl_dim_su(4, ok) == Integer(64));
}

TEST_CASE("dominance predicates") {
  std::vector<long long> a = {3, 2, 0};
  CHECK(dominant_so_odd(a));
  std::vector<long long> b = {3, 2, -1};
  CHECK_FALSE(dominant_so_odd(b));
  CHECK(dominant_so_even(b));
  std::vector<long long> c = {3, 1, -2};
  CHECK_FALSE(dominant_so_even(c));
  auto p = project_sum_zero(std::span<const long long>(a));
  CHECK(dominant_su(p));
}
