#include "homspec/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <sstream>

#include "homspec/aii.hpp"
#include "homspec/casimir.hpp"
#include "homspec/diii.hpp"
#include "homspec/geometry.hpp"
#include "homspec/root_data.hpp"
#include "homspec/uniqueness.hpp"
#include "homspec/weyl.hpp"

namespace homspec::verify {

namespace {

using Clock = std::chrono::steady_clock;

struct Recorder {
  CriterionResult res;
  Clock::time_point start = Clock::now();
  int checks = 0;
  int failures = 0;

  Recorder(std::string id, std::string name) {
    res.id = std::move(id);
    res.name = std::move(name);
  }

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      res.details.push_back("FAIL: " + what);
    }
  }

  void note(const std::string& line) { res.details.push_back(line); }

  CriterionResult finish() {
    res.pass = failures == 0;
    res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    res.details.insert(res.details.begin(),
                       std::to_string(checks - failures) + "/" + std::to_string(checks) +
                           " checks passed");
    return res;
  }
};

Rational rat(long num, long den = 1) { return Rational(num, den); }

const std::vector<std::pair<Rational, Rational>>& diii_lambda1_grid() {
  static const std::vector<std::pair<Rational, Rational>> grid = {
      // s2 < 2 t2
      {rat(1), rat(1)}, {rat(1), rat(2)}, {rat(2), rat(3)}, {rat(1, 2), rat(1)},
      {rat(3), rat(4)}, {rat(5, 2), rat(2)}, {rat(1, 3), rat(1, 2)}, {rat(2), rat(5, 3)},
      {rat(7, 4), rat(3)}, {rat(1), rat(5, 4)},
      // s2 = 2 t2
      {rat(2), rat(1)}, {rat(4), rat(2)}, {rat(1), rat(1, 2)}, {rat(2, 3), rat(1, 3)},
      {rat(10), rat(5)},
      // s2 > 2 t2
      {rat(3), rat(1)}, {rat(5), rat(1)}, {rat(4), rat(3, 2)}, {rat(5, 2), rat(1)},
      {rat(3), rat(5, 4)}, {rat(7), rat(2)}, {rat(9, 2), rat(2)}, {rat(8), rat(3)},
      {rat(12), rat(5)}, {rat(6), rat(1)},
  };
  return grid;
}

}  // namespace

CriterionResult diii_lambda1_exactness(const Options& opt) {
  Recorder rec("C1", "first eigenvalue on the complex-structures space, closed form vs enumeration");
  for (int n : {3, 4, 5}) {
    if (opt.n_override > 0 && n != opt.n_override) continue;
    int points = 0;
    for (const auto& [s2, t2] : diii_lambda1_grid()) {
      DiiiParams p{n, s2, t2};
      auto closed = diii_first_eigenvalue(p);
      Integer expected_mult;
      if (p.s2 < rat(2) * p.t2)
        expected_mult = Integer(2 * n + 1);
      else if (p.s2 > rat(2) * p.t2)
        expected_mult = Integer(n) * Integer(2 * n + 1);
      else
        expected_mult = Integer(n + 1) * Integer(2 * n + 1);
      rec.check(closed.multiplicity == expected_mult,
                "closed-form multiplicity regime at n=" + std::to_string(n));
      auto table = diii_spectrum(p, closed.value, opt.threads);
      bool ok = !table.empty() && table.entries.front().value == closed.value &&
                table.multiplicity_of(closed.value) == closed.multiplicity;
      rec.check(ok, "enumerated minimum matches closed form at n=" + std::to_string(n) +
                        " s2=" + s2.str() + " t2=" + t2.str());
      ++points;
    }
    rec.note("n=" + std::to_string(n) + ": " + std::to_string(points) + " parameter points");
  }
  return rec.finish();
}

CriterionResult diii_lambda2_regimes(const Options& opt) {
  Recorder rec("C2", "second eigenvalue regimes, published case split vs enumeration");
  auto run_point = [&](int n, Rational s2, Rational t2) {
    DiiiParams p{n, s2, t2};
    auto closed = diii_second_eigenvalue(p);
    auto enu = diii_second_eigenvalue_enumerated(p);
    bool ok = closed.value == enu.value && closed.multiplicity == enu.multiplicity;
    std::ostringstream what;
    what << "n=" << n << " s2=" << s2.str() << " t2=" << t2.str() << ": published ("
         << closed.value.str() << " x" << closed.multiplicity.get_str() << ") vs enumerated ("
         << enu.value.str() << " x" << enu.multiplicity.get_str() << ")";
    rec.check(ok, what.str());
    return ok;
  };

  if (opt.n_override == 0 || opt.n_override == 3) {
    bool a = run_point(3, rat(3), rat(1)) & run_point(3, rat(7, 2), rat(1));
    bool b = run_point(3, rat(4), rat(1)) & run_point(3, rat(8), rat(2));
    bool c = run_point(3, rat(5), rat(1)) & run_point(3, rat(11, 2), rat(1));
    bool d = run_point(3, rat(6), rat(1)) & run_point(3, rat(12), rat(2));
    bool e = run_point(3, rat(7), rat(1)) & run_point(3, rat(10), rat(1));
    rec.note(std::string("n=3 regimes (7/42/35/203/168): ") + (a ? "pass" : "fail") + "/" +
             (b ? "pass" : "fail") + "/" + (c ? "pass" : "fail") + "/" + (d ? "pass" : "fail") +
             "/" + (e ? "pass" : "fail"));
    if (!d || !e) {
      rec.note("analysis: the published third n=3 candidate evaluates to (2/5)s^2 + 2t^2 by the");
      rec.note("  Casimir formulas (lambda_g = 12/5 and ambient lambda_k = 2 for the weight");
      rec.note("  (2,2,0)), not (1/5)s^2 + 2t^2; with the corrected coefficient that candidate");
      rec.note("  never attains the minimum, so the 6t^2 regimes with multiplicities 203 and");
      rec.note("  168 do not occur. The enumerated second eigenvalue stays (2/5)s^2 + (4/5)t^2");
      rec.note("  with multiplicity 35 for every s^2 > 4t^2.");
    }
  }
  for (int n : {4, 5}) {
    if (opt.n_override > 0 && n != opt.n_override) continue;
    bool a = run_point(n, rat(3), rat(1)) & run_point(n, rat(7, 2), rat(1));
    bool b = run_point(n, rat(4), rat(1)) & run_point(n, rat(8), rat(2));
    bool c = run_point(n, rat(5), rat(1)) & run_point(n, rat(9), rat(2)) &
             run_point(n, rat(17), rat(4));
    rec.note("n=" + std::to_string(n) + " regimes (2n+1 / sum / C(2n+1,4)): " +
             (a ? "pass" : "fail") + "/" + (b ? "pass" : "fail") + "/" + (c ? "pass" : "fail"));
  }
  return rec.finish();
}

CriterionResult symmetric_anchors(const Options& opt) {
  Recorder rec("C3", "standard symmetric anchors");
  for (int n = 3; n <= 6; ++n) {
    DiiiParams p = diii_standard_symmetric(n);
    auto l1 = diii_first_eigenvalue(p);
    rec.check(l1.value == rat(1), "diii standard lambda1 = 1 at n=" + std::to_string(n));
    rec.check(l1.multiplicity == Integer(n + 1) * Integer(2 * n + 1),
              "diii standard multiplicity at n=" + std::to_string(n));
    Rational e = diii_scalar_curvature(p) / rat(diii_dimension(n));
    rec.check(e == rat(1, 2), "diii Einstein constant 1/2 at n=" + std::to_string(n));
    auto table = diii_spectrum(p, l1.value, opt.threads);
    rec.check(!table.empty() && table.entries.front().value == rat(1) &&
                  table.multiplicity_of(rat(1)) == l1.multiplicity,
              "diii standard anchor confirmed by enumeration at n=" + std::to_string(n));
  }
  for (int n = 2; n <= 6; ++n) {
    AiiParams p = aii_standard_symmetric(n);
    Rational expected =
        Rational(static_cast<long>(n) * (2 * n + 3), 2L * (n + 1) * (n + 1));
    auto l1 = aii_first_eigenvalue(p);
    rec.check(l1.value == expected,
              "aii standard lambda1 = n(2n+3)/(2(n+1)^2) at n=" + std::to_string(n));
    auto table = aii_spectrum(p, l1.value, opt.threads);
    rec.check(!table.empty() && table.entries.front().value == expected &&
                  table.multiplicity_of(expected) == l1.multiplicity,
              "aii standard anchor confirmed by enumeration at n=" + std::to_string(n));
  }
  rec.note("aii standard metric sits on the symmetric family at t^2 = (2n+1)/(2(n+1)):");
  rec.note("  the family's published identification t^2 = (2n+1)/(n+1) is off by the factor 2");
  rec.note("  that also separates its lambda1 display from the normalized-metric value");
  rec.note("  n(2n+3)/(2n+1) used in the uniqueness argument; the anchors above are exact.");
  return rec.finish();
}

CriterionResult nu_instability(const Options& opt) {
  Recorder rec("C4", "nu-instability of the non-symmetric Einstein metrics");
  int n_max = opt.n_max >= 3 ? opt.n_max : 10;
  for (int n = 3; n <= n_max; ++n) {
    for (Rational s2 : {rat(1), rat(3, 2)}) {
      Rational t2 = s2 * rat(n, 2L * (n - 1));
      DiiiParams p{n, s2, t2};
      Rational e = diii_scalar_curvature(p) / rat(diii_dimension(n));
      rec.check(e == s2 * Rational(static_cast<long>(n) * n + n - 1,
                                   2L * n * (2 * n - 1)),
                "Einstein constant formula at n=" + std::to_string(n));
      Rational two_e = rat(2) * e;
      Rational published_l1 = s2 * rat(n - 1, 2L * n - 1);
      rec.check(published_l1 < two_e,
                "published inequality (n-1)/(2n-1) s^2 < 2E at n=" + std::to_string(n));
      auto l1 = diii_first_eigenvalue(p);
      rec.check(l1.value == s2 * rat(n, 2L * n - 1),
                "case-split lambda1 = n/(2n-1) s^2 at the Einstein point, n=" + std::to_string(n));
      rec.check(l1.value < two_e, "lambda1 < 2E at n=" + std::to_string(n));
      rec.check(nu_instability_verdict(l1.value, e) == NuVerdict::nu_unstable,
                "nu verdict at n=" + std::to_string(n));
      if (s2 == rat(1))
        rec.note("n=" + std::to_string(n) + ": margin 2E - lambda1 = " + (two_e - l1.value).str());
    }
  }
  rec.note("note: the Einstein-point lambda1 display (n-1)/(2n-1) s^2 sits below the");
  rec.note("  case-split value n/(2n-1) s^2 (the metric has s^2 < 2t^2); both sides were");
  rec.note("  checked against 2E and the instability verdict is unaffected.");
  for (int n = 3; n <= std::min(n_max, 6); ++n) {
    DiiiParams p{n, rat(1), rat(n, 2L * (n - 1))};
    auto l1 = diii_first_eigenvalue(p);
    auto table = diii_spectrum(p, l1.value, opt.threads);
    rec.check(!table.empty() && table.entries.front().value == l1.value,
              "enumerated lambda1 at the Einstein point, n=" + std::to_string(n));
  }
  return rec.finish();
}

namespace {

std::vector<AiiParams> aii_lambda1_grid(int n) {
  auto P = [n](Rational a, Rational b, Rational c) { return AiiParams{n, a, b, c}; };
  std::vector<AiiParams> g = {
      // vector candidate attains
      P(rat(1), rat(100), rat(100)), P(rat(1), rat(20), rat(30)), P(rat(1, 2), rat(10), rat(10)),
      P(rat(1), rat(6), rat(6)), P(rat(2), rat(100), rat(50)), P(rat(1), rat(7), rat(9)),
      // standard candidate attains
      P(rat(10), rat(1), rat(10)), P(rat(8), rat(1), rat(12)), P(rat(20), rat(3), rat(20)),
      P(rat(9), rat(2), rat(8)),
      // exterior-square candidate attains
      P(rat(10), rat(100), rat(1)), P(rat(12), rat(50), rat(1, 2)), P(rat(8), rat(30), rat(1)),
      P(rat(20), rat(100), rat(2)),
      // double-exterior candidate attains
      P(rat(10), rat(1000000), rat(1)), P(rat(20), rat(10000), rat(2)),
      P(rat(15), rat(100000), rat(3, 2)),
      // mixed / generic
      P(rat(1), rat(1), rat(1)), P(rat(2), rat(2), rat(2)), P(rat(3), rat(1), rat(2)),
      P(rat(1), rat(2), rat(1, 2)),
  };
  // exact ties
  g.push_back(AiiParams{n, rat(2L * n + 2), rat(2L * n + 1), rat(n + 1)});
  g.push_back(AiiParams{n, rat(n + 1), rat(2L * n + 1, 2), rat(n + 1, 2)});
  g.push_back(AiiParams{n, rat(1), Rational(2L * n + 1) * Rational(2L * n * n + n + 1) / rat(2),
                        rat(1, 2)});
  g.push_back(AiiParams{n, rat(1), Rational(static_cast<long>(n + 1) * (2 * n + 1), n), rat(100)});
  g.push_back(AiiParams{n, rat(2), Rational(static_cast<long>(n + 1) * (2 * n + 1), n) * rat(2),
                        rat(200)});
  return g;
}

}  // namespace

CriterionResult aii_lambda1_exactness(const Options& opt) {
  Recorder rec("C5", "first eigenvalue on the quaternionic-structures space, min of four candidates");
  for (int n : {2, 3}) {
    if (opt.n_override > 0 && n != opt.n_override) continue;
    auto grid = aii_lambda1_grid(n);
    bool tie_seen = false;
    std::array<bool, 4> group_attained{false, false, false, false};
    for (const auto& p : grid) {
      auto closed = aii_first_eigenvalue(p);
      auto table = aii_spectrum(p, closed.value, opt.threads);
      bool ok = !table.empty() && table.entries.front().value == closed.value &&
                table.multiplicity_of(closed.value) == closed.multiplicity;
      rec.check(ok, "enumerated minimum matches the candidate minimum at n=" +
                        std::to_string(n) + " r2=(" + p.r1_2.str() + "," + p.r2_2.str() + "," +
                        p.r3_2.str() + ")");
      auto cands = aii_lambda1_candidates(n);
      std::array<bool, 4> here{false, false, false, false};
      int groups = 0;
      const int group_of[6] = {0, 1, 1, 2, 2, 3};
      for (size_t ci = 0; ci < cands.size(); ++ci)
        if (aii_eigenvalue_form(n, cands[ci]).evaluate(p.squared()) == closed.value)
          here[group_of[ci]] = true;
      for (int gi = 0; gi < 4; ++gi)
        if (here[gi]) {
          group_attained[gi] = true;
          ++groups;
        }
      if (groups >= 2) tie_seen = true;
    }
    rec.check(group_attained[0] && group_attained[1] && group_attained[2] && group_attained[3],
              "all four attainment patterns covered at n=" + std::to_string(n));
    rec.check(tie_seen, "at least one exact tie covered at n=" + std::to_string(n));

    // highest multiplicity point
    AiiParams peak{n, rat(1),
                   Rational(2L * n + 1) * Rational(2L * n * n + n + 1) / rat(2), rat(1, 2)};
    auto closed = aii_first_eigenvalue(peak);
    long N = n;
    Integer expect = Integer(4 * N * N * N * N + 4 * N * N * N + 5 * N * N + 2 * N - 1);
    rec.check(closed.multiplicity == expect,
              "peak multiplicity 4n^4+4n^3+5n^2+2n-1 at n=" + std::to_string(n));
    auto table = aii_spectrum(peak, closed.value, opt.threads);
    rec.check(table.multiplicity_of(closed.value) == expect,
              "peak multiplicity confirmed by enumeration at n=" + std::to_string(n));
    rec.note("n=" + std::to_string(n) + ": " + std::to_string(grid.size()) +
             " parameter points, peak multiplicity " + expect.get_str());
  }
  return rec.finish();
}

CriterionResult cross_oracle(const Options& opt) {
  Recorder rec("C6", "direct enumeration vs branching-route spectrum");
  Rational cutoff = opt.oracle_cutoff;
  for (int n : {2, 3}) {
    if (opt.n_override > 0 && n != opt.n_override) continue;
    std::vector<AiiParams> points = {
        AiiParams{n, rat(1), rat(1), rat(1)},
        AiiParams{n, rat(1), rat(2), rat(1, 2)},
        AiiParams{n, rat(3, 2), rat(1, 2), rat(1)},
    };
    auto run_point = [&](const AiiParams& p, const Rational& c) {
      auto direct = aii_spectrum(p, c, opt.threads);
      auto oracle = aii_spectrum_by_branching(p, c, opt.threads);
      bool same = direct == oracle;
      rec.check(same, "multisets agree at n=" + std::to_string(n) + " r2=(" + p.r1_2.str() +
                          "," + p.r2_2.str() + "," + p.r3_2.str() + ") cutoff=" + c.str());
      if (same)
        rec.note("n=" + std::to_string(n) + " r2=(" + p.r1_2.str() + "," + p.r2_2.str() + "," +
                 p.r3_2.str() + ") cutoff=" + c.str() + ": " +
                 std::to_string(direct.entries.size()) + " entries agree exactly");
    };
    for (const auto& p : points) run_point(p, cutoff);
    run_point(AiiParams{n, rat(1), rat(2), rat(1, 2)}, rat(5, 2));
  }
  return rec.finish();
}

CriterionResult diii_uniqueness(const Options& opt) {
  Recorder rec("C7.1", "equal-volume pairs on the complex-structures space are distinguished");
  std::mt19937_64 rng(opt.seed);
  auto rand_rational = [&rng](int num_max, int den_max) {
    std::uniform_int_distribution<int> num(1, num_max), den(1, den_max);
    return Rational(num(rng), den(rng));
  };
  for (int n : {3, 4}) {
    if (opt.n_override > 0 && n != opt.n_override) continue;
    int accepted = 0, indistinguishable = 0;
    std::map<std::string, int> by_status;

    auto run_pair = [&](const DiiiParams& a, const DiiiParams& b) {
      HOMSPEC_CHECK(diii_volume_squared(a) == diii_volume_squared(b),
                    "constructed pair must share its volume");
      Rational cutoff = rat(3) * max(diii_second_eigenvalue_enumerated(a).value,
                                     diii_second_eigenvalue_enumerated(b).value);
      auto verdict = compare_diii(a, b, cutoff);
      ++accepted;
      ++by_status[iso_status_name(verdict.status)];
      if (verdict.status == IsoStatus::indistinguishable_up_to_cutoff) {
        ++indistinguishable;
        rec.check(false, "false indistinguishability, n=" + std::to_string(n) + " pair (" +
                             a.s2.str() + "," + a.t2.str() + ") vs (" + b.s2.str() + "," +
                             b.t2.str() + ")");
      }
      rec.check(verdict.status == IsoStatus::indistinguishable_up_to_cutoff ||
                    verdict.witness.has_value(),
                "every distinct verdict carries a witness");
    };

    // random equal-volume pairs: t_i = square, s2 adjusted by the volume relation
    while (accepted < opt.pairs) {
      Rational s1 = rand_rational(6, 2);
      Rational u = rand_rational(4, 2), v = rand_rational(4, 2);
      if (u == v) continue;
      Rational ratio = u / v;
      if (ratio > rat(2) || ratio < rat(1, 2)) continue;  // keep the Casimir balls small
      Rational s2 = s1 * pow(ratio, n - 1);
      run_pair(DiiiParams{n, s1, u * u}, DiiiParams{n, s2, v * v});
    }

    // swap pairs (s^2, t^2) -> (4t^2, s^2/4): equal volume and equal first
    // eigenvalue at n = 3, so the comparison must reach the second eigenvalue
    if (n == 3) {
      for (long k = 0; k < 8; ++k) {
        Rational s2 = rat(3) + Rational(k, 4);  // keeps 2t^2 < s^2 < 8t^2, s^2 != 4t^2
        if (s2 == rat(4)) continue;
        run_pair(DiiiParams{3, s2, rat(1)}, DiiiParams{3, rat(4), s2 / rat(4)});
      }
    }

    std::ostringstream line;
    line << "n=" << n << ": " << accepted << " equal-volume pairs, verdicts:";
    for (const auto& [k, c] : by_status) line << " " << k << "=" << c;
    rec.note(line.str());
    rec.check(indistinguishable == 0, "no false isospectrality at n=" + std::to_string(n));
  }
  return rec.finish();
}

CriterionResult aii_uniqueness(const Options& opt) {
  Recorder rec("C7.2", "symmetric quaternionic metric: multiplicity pattern and volume curve");
  for (int n = 2; n <= 6; ++n) {
    if (opt.n_override > 0 && n != opt.n_override) continue;
    Integer m = Integer(2L * n + 1) * Integer(2L * n + 2);
    auto sols = multiplicity_decomposition(n, m);
    rec.check(sols.size() == 1 && sols[0] == (std::array<int, 4>{1, 1, 0, 0}),
              "(1,1,0,0) is the unique decomposition at n=" + std::to_string(n));
    auto prof = volume_curve_profile(n, rat(1, 1000), opt.threads);
    rec.check(prof.rising_before_one, "curve rises on (0,1) at n=" + std::to_string(n));
    rec.check(prof.falling_after_one, "curve falls on (1,2n+3) at n=" + std::to_string(n));
    rec.check(prof.unit_points.size() == 1 && prof.unit_points[0] == rat(1),
              "theta=1 is the unique unit value on the grid at n=" + std::to_string(n));
    rec.note("n=" + std::to_string(n) + ": " + std::to_string(prof.samples) +
             " grid samples at step 1/1000");
  }
  // verdict spot checks for the comparison pipeline at n=2
  if (opt.n_override == 0 || opt.n_override == 2) {
    AiiParams sym{2, rat(6), rat(5), rat(3)};
    auto v0 = compare_aii_to_symmetric(sym, rat(3));
    rec.check(v0.status == IsoStatus::indistinguishable_up_to_cutoff,
              "symmetric metric is indistinguishable from itself");
    auto v1 = compare_aii_to_symmetric(volume_curve_params(2, rat(2)), rat(3));
    rec.check(v1.status == IsoStatus::distinct_by_volume,
              "theta=2 on the curve is separated by volume");
    AiiParams scaled{2, rat(12), rat(10), rat(6)};
    auto v2 = compare_aii_to_symmetric(scaled, rat(3));
    rec.check(v2.status == IsoStatus::distinct_by_lambda1,
              "rescaled symmetric metric is separated by lambda1");
    AiiParams skew{2, rat(14, 5), rat(1000), rat(1000)};
    auto v3 = compare_aii_to_symmetric(skew, rat(3));
    rec.check(v3.status == IsoStatus::distinct_by_multiplicity,
              "right lambda1 value with the wrong multiplicity is separated");
  }
  return rec.finish();
}

CriterionResult property_suites(const Options& opt) {
  Recorder rec("C8", "Casimir, dimension and parametrization property suites");

  // closed forms vs root-data Freudenthal, exhaustive small weights
  for (int n = 2; n <= 5; ++n) {
    auto g_odd = GroupData::so_odd(n);
    auto g_amb = GroupData::so_even_ambient(n);
    auto g_int = GroupData::so_even_intrinsic(n);
    int bad = 0, total = 0;
    std::vector<long long> a(n, 0);
    auto scan = [&](auto&& self, int pos, long long prev) -> void {
      if (pos == n) {
        ++total;
        if (casimir_scalar_so_odd(n, a) != casimir_from_roots(g_odd, std::span<const long long>(a)))
          ++bad;
        return;
      }
      for (long long v = 0; v <= prev; ++v) {
        a[pos] = v;
        self(self, pos + 1, v);
      }
    };
    scan(scan, 0, 5);
    rec.check(bad == 0, "so_odd Freudenthal agreement at n=" + std::to_string(n));
    rec.note("so(2n+1) n=" + std::to_string(n) + ": " + std::to_string(total) +
             " dominant weights scanned");

    bad = 0;
    std::vector<long long> b(n, 0);
    auto scan_d = [&](auto&& self, int pos, long long prev) -> void {
      if (pos == n - 1) {
        for (long long last = -prev; last <= prev; ++last) {
          b[pos] = last;
          Rational amb = casimir_scalar_so_even_ambient(n, b);
          if (amb != casimir_from_roots(g_amb, std::span<const long long>(b))) ++bad;
          if (casimir_scalar_so_even(n, b) != casimir_from_roots(g_int, std::span<const long long>(b)))
            ++bad;
          if (amb != killing_rescale_so(n) * casimir_scalar_so_even(n, b)) ++bad;
        }
        return;
      }
      for (long long v = 0; v <= prev; ++v) {
        b[pos] = v;
        self(self, pos + 1, v);
      }
    };
    scan_d(scan_d, 0, 5);
    rec.check(bad == 0, "so_even Freudenthal and rescale agreement at n=" + std::to_string(n));
  }

  for (int m = 3; m <= 7; ++m) {
    auto g = GroupData::su(m);
    int bad = 0, total = 0;
    std::vector<long long> z(m, 0);
    auto scan = [&](auto&& self, int pos, long long prev) -> void {
      if (pos == m - 1) {
        auto coords = project_sum_zero(std::span<const long long>(z));
        ++total;
        if (casimir_scalar_su(m, coords) != casimir_from_roots(g, std::span<const Rational>(coords)))
          ++bad;
        return;
      }
      for (long long v = 0; v <= prev; ++v) {
        z[pos] = v;
        self(self, pos + 1, v);
      }
    };
    scan(scan, 0, 5);
    rec.check(bad == 0, "su Freudenthal agreement at m=" + std::to_string(m));
  }

  // reductive K Casimir: closed decomposition vs root-data Freudenthal
  for (int n : {2, 3}) {
    auto gk = GroupData::k_reductive_ambient(n);
    int bad = 0, total = 0;
    for (long long q1 = 0; q1 <= 3; ++q1)
      for (long long k = -3; k <= 3; ++k) {
        std::vector<long long> q(n - 1, 0);
        q[0] = q1;
        std::vector<long long> raw(2 * n + 1, 0);
        for (int i = 1; i <= n; ++i) {
          long long Qi = (i <= n - 1) ? q1 : 0;  // q = q1*e_1
          raw[2 * i - 2] = Qi;
          raw[2 * i - 1] = Qi;
        }
        raw[2 * n] = k;
        auto mu = project_sum_zero(std::span<const long long>(raw));
        ++total;
        if (casimir_scalar_k_reductive_ambient(n, mu) !=
            casimir_from_roots(gk, std::span<const Rational>(mu)))
          ++bad;
      }
    rec.check(bad == 0, "reductive K Casimir decomposition at n=" + std::to_string(n));
    rec.note("K Casimir n=" + std::to_string(n) + ": " + std::to_string(total) + " weights");
  }

  // normalization anchors and stored inner-product constants
  for (int n = 2; n <= 8; ++n) {
    std::vector<long long> ad(n, 0);
    ad[0] = 1;
    ad[1] = 1;
    rec.check(casimir_scalar_so_odd(n, ad) == rat(1),
              "adjoint Casimir is 1 for so(2n+1), n=" + std::to_string(n));
    std::vector<Rational> adj(2 * n + 1, rat(0));
    adj[0] = rat(1);
    adj[2 * n] = rat(-1);
    rec.check(casimir_scalar_su(2 * n + 1, adj) == rat(1),
              "adjoint Casimir is 1 for su(2n+1), n=" + std::to_string(n));
    auto g_odd = GroupData::so_odd(n);
    rec.check(g_odd.gram == Rational(1, 4L * n - 2) &&
                  gram_from_adjoint_anchor(g_odd) == g_odd.gram,
              "so_odd inner-product constant 1/(4n-2), n=" + std::to_string(n));
    auto g_su = GroupData::su(2 * n + 1);
    rec.check(g_su.gram == Rational(1, 4L * n + 2) &&
                  gram_from_adjoint_anchor(g_su) == g_su.gram,
              "su inner-product constant 1/(4n+2), n=" + std::to_string(n));
  }

  // eigenvalue-form coefficient identities and positivity over a full index scan
  for (int n : {2, 3}) {
    int bad_sum = 0, bad_pos = 0, bad_round = 0, bad_mono_k = 0, total = 0;
    std::vector<long long> q(n - 1, 0);
    auto scan_q = [&](auto&& self, int pos) -> void {
      if (pos == n - 1) {
        std::vector<long long> l(n, 0);
        auto scan_l = [&](auto&& lself, int lpos) -> void {
          if (lpos == n) {
            long long L = 0;
            for (long long x : l) L += x;
            for (long long k = -4; k <= L; ++k) {
              QklIndex idx{q, k, l};
              if (qkl_is_zero(idx)) continue;
              ++total;
              auto form = aii_eigenvalue_form(n, idx);
              auto w = aii_weights_from_index(n, idx);
              Rational lam = casimir_scalar_su(2 * n + 1, w.lambda.coords);
              if (form.coeffs[0] + form.coeffs[1] + form.coeffs[2] != lam) ++bad_sum;
              if (form.coeffs[0].sign() < 0 || form.coeffs[1].sign() < 0 ||
                  form.coeffs[2].sign() < 0)
                ++bad_pos;
              if (!(aii_index_from_weights(n, w) == idx)) ++bad_round;
              if (k < L) {
                QklIndex at_top{q, L, l};
                if (!(aii_coeff_p1(n, idx) > aii_coeff_p1(n, at_top))) ++bad_mono_k;
              }
            }
            return;
          }
          long long cap = (lpos == 0) ? 4 : std::min<long long>(4, q[lpos - 1]);
          for (long long v = 0; v <= cap; ++v) {
            l[lpos] = v;
            lself(lself, lpos + 1);
          }
        };
        scan_l(scan_l, 0);
        return;
      }
      for (long long v = 0; v <= 4; ++v) {
        q[pos] = v;
        self(self, pos + 1);
      }
    };
    scan_q(scan_q, 0);
    rec.check(bad_sum == 0, "coefficient sum equals the ambient Casimir at n=" + std::to_string(n));
    rec.check(bad_pos == 0, "coefficient positivity at n=" + std::to_string(n));
    rec.check(bad_round == 0, "index/weight bijection at n=" + std::to_string(n));
    rec.check(bad_mono_k == 0, "p1 coefficient decreases toward k=L at n=" + std::to_string(n));
    rec.note("index scan n=" + std::to_string(n) + ": " + std::to_string(total) + " indices");

    // p3 coefficient grows in q, with the stated values on unit vectors
    int bad_q = 0;
    std::vector<long long> probe(n - 1, 0);
    auto scan_probe = [&](auto&& self, int pos) -> void {
      if (pos == n - 1) {
        QklIndex base{probe, 0, std::vector<long long>(n, 0)};
        for (int j = 0; j < n - 1; ++j) {
          auto bumped = probe;
          ++bumped[j];
          QklIndex more{bumped, 0, std::vector<long long>(n, 0)};
          if (!(aii_coeff_p3(n, more) > aii_coeff_p3(n, base))) ++bad_q;
        }
        return;
      }
      for (long long v = 0; v <= 3; ++v) {
        probe[pos] = v;
        self(self, pos + 1);
      }
    };
    scan_probe(scan_probe, 0);
    rec.check(bad_q == 0, "p3 coefficient grows in every q coordinate at n=" + std::to_string(n));
    for (int j = 1; j <= n - 1; ++j) {
      std::vector<long long> ej(n - 1, 0);
      ej[j - 1] = 1;
      QklIndex idx{ej, 0, std::vector<long long>(n, 0)};
      rec.check(aii_coeff_p3(n, idx) == Rational(j) * (rat(1) - Rational(j, n)),
                "p3 value j(1-j/n) on unit q vectors, n=" + std::to_string(n));
    }
  }

  // dimension anchors
  {
    std::vector<long long> w(3, 0);
    w[0] = 1;
    rec.check(weyl_dim_so_odd(3, w) == Integer(7), "dim 7 anchor");
    w = {1, 1, 0};
    rec.check(weyl_dim_so_odd(3, w) == Integer(21), "dim 21 anchor");
    w = {1, 1, 1};
    rec.check(weyl_dim_so_odd(3, w) == Integer(35), "dim 35 anchor");
    w = {2, 2, 0};
    rec.check(weyl_dim_so_odd(3, w) == Integer(168), "dim 168 anchor");
    std::vector<long long> w4 = {1, 1, 1, 1};
    rec.check(weyl_dim_so_odd(4, w4) == Integer(126), "dim 126 anchor");
    std::vector<long long> zero4(4, 0);
    rec.check(weyl_dim_so_odd(4, zero4) == Integer(1), "trivial dim 1");
  }
  for (int n : {2, 3}) {
    auto cands = aii_lambda1_candidates(n);
    long N = n;
    const Integer dims[6] = {Integer(4 * N) * Integer(N + 1), Integer(2 * N + 1),
                             Integer(2 * N + 1), Integer(N) * Integer(2 * N + 1),
                             Integer(N) * Integer(2 * N + 1),
                             Integer(N * N - 1) * Integer(2 * N + 1) * Integer(2 * N + 1)};
    for (size_t i = 0; i < cands.size(); ++i) {
      auto w = aii_weights_from_index(n, cands[i]);
      rec.check(weyl_dim_su(2 * n + 1, std::span<const Rational>(w.lambda.coords)) == dims[i],
                "candidate dimension formula " + std::to_string(i) + " at n=" + std::to_string(n));
    }
  }
  (void)opt;
  return rec.finish();
}

bool selector_known(const std::string& s) {
  static const std::vector<std::string> known = {
      "diii-lambda1", "diii-lambda2", "diii-einstein", "aii-lambda1",
      "aii-oracle",   "diii-uniqueness", "aii-uniqueness", "all"};
  for (const auto& k : known)
    if (k == s) return true;
  return false;
}

std::vector<CriterionResult> run(const std::string& selector, const Options& opt) {
  if (!selector_known(selector))
    throw std::invalid_argument("unknown theorem selector '" + selector + "'");
  std::vector<CriterionResult> out;
  auto want = [&](const char* s) { return selector == "all" || selector == s; };
  if (want("diii-lambda1")) out.push_back(diii_lambda1_exactness(opt));
  if (want("diii-lambda2")) out.push_back(diii_lambda2_regimes(opt));
  if (selector == "all") out.push_back(symmetric_anchors(opt));
  if (want("diii-einstein")) out.push_back(nu_instability(opt));
  if (want("aii-lambda1")) out.push_back(aii_lambda1_exactness(opt));
  if (want("aii-oracle")) out.push_back(cross_oracle(opt));
  if (want("diii-uniqueness")) out.push_back(diii_uniqueness(opt));
  if (want("aii-uniqueness")) out.push_back(aii_uniqueness(opt));
  if (selector == "all") out.push_back(property_suites(opt));
  return out;
}

}  // namespace homspec::verify
