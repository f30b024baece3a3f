#include "homspec/diii.hpp"

#include <algorithm>
#include <stdexcept>

#include "homspec/casimir.hpp"
#include "homspec/parallel.hpp"
#include "homspec/weight.hpp"
#include "homspec/weyl.hpp"

namespace homspec {

void validate(const DiiiParams& p) {
  if (p.n < 3) throw std::invalid_argument("diii: n >= 3 required");
  if (p.s2.sign() <= 0 || p.t2.sign() <= 0)
    throw std::invalid_argument("diii: squared parameters must be positive");
}

bool diii_pair_valid(int n, const DiiiPair& pair) {
  const auto& a = pair.hw_g;
  const auto& b = pair.hw_k;
  if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n) return false;
  if (!dominant_so_odd(a)) return false;
  // spherical cone: equal consecutive pairs, all nonnegative, zero tail for odd n
  for (int i = 0; i + 1 < n; i += 2)
    if (b[i] != b[i + 1]) return false;
  if (n % 2 == 1 && b[n - 1] != 0) return false;
  for (int i = 0; i < n; ++i)
    if (b[i] < 0) return false;
  if (!weakly_decreasing(std::span<const long long>(b))) return false;
  // interlacing a1 >= b1 >= a2 >= b2 >= ... >= a_n >= |b_n|
  for (int i = 0; i < n; ++i) {
    if (a[i] < b[i]) return false;
    if (i + 1 < n && b[i] < a[i + 1]) return false;
  }
  return true;
}

std::vector<long long> diii_spherical_partner(std::span<const long long> hw_g) {
  int n = static_cast<int>(hw_g.size());
  std::vector<long long> b(n, 0);
  for (int i = 0; i + 1 < n; i += 2) {
    b[i] = hw_g[i + 1];
    b[i + 1] = hw_g[i + 1];
  }
  return b;
}

EigenvalueForm diii_eigenvalue_form(int n, const DiiiPair& pair) {
  if (!diii_pair_valid(n, pair))
    throw std::invalid_argument("diii_eigenvalue_form: invalid spherical pair");
  Rational lam_g = casimir_scalar_so_odd(n, pair.hw_g);
  Rational lam_k = casimir_scalar_so_even_ambient(n, pair.hw_k);
  EigenvalueForm form{{lam_g - lam_k, lam_k}};
  HOMSPEC_CHECK(form.coeffs[0].sign() >= 0 && form.coeffs[1].sign() >= 0,
                "diii eigenvalue form has a negative coefficient");
  return form;
}

namespace {

void dominant_dfs(int n, int pos, long long prev, const Rational& budget,
                  std::vector<long long>& acc,
                  std::vector<std::vector<long long>>& out) {
  if (pos == n) {
    out.push_back(acc);
    return;
  }
  for (long long v = prev;; --v) {
    if (v < 0) break;
    acc[pos] = v;
    Integer term(static_cast<long>(v));
    term *= Integer(static_cast<long>(v + 2 * (n - (pos + 1)) + 1));
    Rational used(term, Integer(4L * n - 2));
    if (used <= budget) dominant_dfs(n, pos + 1, v, budget - used, acc, out);
    acc[pos] = 0;
    if (v == 0) break;
  }
}

}  // namespace

std::vector<std::vector<long long>> diii_dominant_weights_below(int n, const Rational& bound) {
  if (n < 1) throw std::invalid_argument("n >= 1 required");
  std::vector<std::vector<long long>> out;
  if (bound.sign() < 0) return out;
  std::vector<long long> acc(n, 0);
  // descend from the largest admissible first coordinate
  long long a1_max = 0;
  while (true) {
    Integer term(static_cast<long>(a1_max + 1));
    term *= Integer(static_cast<long>(a1_max + 1 + 2 * (n - 1) + 1));
    if (Rational(term, Integer(4L * n - 2)) > bound) break;
    ++a1_max;
  }
  dominant_dfs(n, 0, a1_max, bound, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

DiiiTable diii_spectrum(const DiiiParams& p, const Rational& cutoff, int threads) {
  validate(p);
  if (cutoff.sign() <= 0) throw std::invalid_argument("diii_spectrum: cutoff must be positive");

  Rational bound = cutoff / min(p.s2, p.t2);
  auto lambdas = diii_dominant_weights_below(p.n, bound);
  std::vector<Rational> params{p.s2, p.t2};

  auto entries = parallel_flat_map<SpectrumEntry<DiiiPair>>(
      lambdas.size(), threads, [&](size_t i) {
        std::vector<SpectrumEntry<DiiiPair>> out;
        const auto& a = lambdas[i];
        bool trivial = std::all_of(a.begin(), a.end(), [](long long v) { return v == 0; });
        if (trivial) return out;
        DiiiPair pair{a, diii_spherical_partner(a)};
        EigenvalueForm form = diii_eigenvalue_form(p.n, pair);
        Rational value = form.evaluate(params);
        HOMSPEC_CHECK(value.sign() > 0, "positive spectrum expected for a nonzero weight");
        if (value > cutoff) return out;
        Integer mult = weyl_dim_so_odd(p.n, pair.hw_g);
        out.push_back({value, std::move(form), std::move(mult), std::move(pair)});
        return out;
      });

  DiiiTable table;
  table.space = "diii";
  table.n = p.n;
  table.params = params;
  table.cutoff = cutoff;
  table.casimir_bound = bound;
  table.entries = std::move(entries);
  table.sort_entries();
  return table;
}

namespace {

std::vector<long long> weight_e1(int n) {
  std::vector<long long> w(n, 0);
  w[0] = 1;
  return w;
}

std::vector<long long> weight_omega(int n, int p) {
  std::vector<long long> w(n, 0);
  for (int i = 0; i < p; ++i) w[i] = 1;
  return w;
}

DiiiPair pair_e1(int n) { return {weight_e1(n), std::vector<long long>(n, 0)}; }
DiiiPair pair_omega2(int n) { return {weight_omega(n, 2), weight_omega(n, 2)}; }
DiiiPair pair_omega3(int n) { return {weight_omega(n, 3), weight_omega(n, 2)}; }
DiiiPair pair_omega4(int n) { return {weight_omega(n, 4), weight_omega(n, 4)}; }
DiiiPair pair_2omega2(int n) {
  std::vector<long long> w(n, 0);
  w[0] = 2;
  w[1] = 2;
  return {w, w};
}

}  // namespace

DiiiEigenvalue diii_first_eigenvalue(const DiiiParams& p) {
  validate(p);
  long n = p.n;
  Rational cand_vector = p.s2 * Rational(n, 2 * n - 1);
  Rational cand_adjoint = p.t2 * Rational(2 * n - 2, 2 * n - 1) + p.s2 * Rational(1, 2 * n - 1);
  Rational two_t2 = Rational(2) * p.t2;

  DiiiEigenvalue out;
  if (p.s2 < two_t2) {
    out = {cand_vector, Integer(2 * n + 1), {pair_e1(p.n)}};
  } else if (p.s2 > two_t2) {
    out = {cand_adjoint, Integer(n) * Integer(2 * n + 1), {pair_omega2(p.n)}};
  } else {
    HOMSPEC_CHECK(cand_vector == cand_adjoint, "boundary candidates must agree at s2 = 2t2");
    out = {cand_vector, Integer(n + 1) * Integer(2 * n + 1), {pair_e1(p.n), pair_omega2(p.n)}};
  }
  return out;
}

DiiiEigenvalue diii_second_eigenvalue(const DiiiParams& p) {
  validate(p);
  if (!(p.s2 > Rational(2) * p.t2))
    throw std::invalid_argument("diii_second_eigenvalue: hypothesis s2 > 2 t2 not met");
  long n = p.n;
  Rational cand_vector = p.s2 * Rational(n, 2 * n - 1);

  if (p.n >= 4) {
    Rational cand_omega4 =
        p.t2 * Rational(4 * n - 8, 2 * n - 1) + p.s2 * Rational(2, 2 * n - 1);
    Rational four_t2 = Rational(4) * p.t2;
    Integer dim_vec(2 * n + 1);
    Integer dim_o4 = binomial(2 * n + 1, 4);
    if (p.s2 < four_t2) return {cand_vector, dim_vec, {pair_e1(p.n)}};
    if (p.s2 > four_t2) return {cand_omega4, dim_o4, {pair_omega4(p.n)}};
    HOMSPEC_CHECK(cand_vector == cand_omega4, "boundary candidates must agree at s2 = 4t2");
    return {cand_vector, dim_vec + dim_o4, {pair_e1(p.n), pair_omega4(p.n)}};
  }

  // n = 3, published five-regime case split at 4t2 and 6t2
  Rational cand_omega3 = p.s2 * Rational(2, 5) + p.t2 * Rational(4, 5);
  Rational cand_2omega2 = p.s2 * Rational(1, 5) + p.t2 * Rational(2);
  Rational four_t2 = Rational(4) * p.t2;
  Rational six_t2 = Rational(6) * p.t2;
  if (p.s2 < four_t2) return {cand_vector, Integer(7), {pair_e1(3)}};
  if (p.s2 == four_t2)
    return {cand_vector, Integer(42), {pair_e1(3), pair_omega3(3)}};
  if (p.s2 < six_t2) return {cand_omega3, Integer(35), {pair_omega3(3)}};
  if (p.s2 == six_t2)
    return {cand_omega3, Integer(203), {pair_omega3(3), pair_2omega2(3)}};
  return {cand_2omega2, Integer(168), {pair_2omega2(3)}};
}

DiiiEigenvalue diii_second_eigenvalue_enumerated(const DiiiParams& p) {
  validate(p);
  // Any eigenvalue strictly above the first bounds the second from above.
  // The doubled vector weight always qualifies; the two first-eigenvalue
  // candidates qualify away from their own regime.
  Rational l1 = diii_first_eigenvalue(p).value;
  long n = p.n;
  Rational cand_vector = p.s2 * Rational(n, 2 * n - 1);
  Rational cand_adjoint = p.t2 * Rational(2 * n - 2, 2 * n - 1) + p.s2 * Rational(1, 2 * n - 1);
  Rational cand_double = p.s2 * Rational(2 * n + 1, 2 * n - 1);
  Rational cutoff = cand_double;
  if (cand_vector > l1) cutoff = min(cutoff, cand_vector);
  if (cand_adjoint > l1) cutoff = min(cutoff, cand_adjoint);

  DiiiTable table = diii_spectrum(p, cutoff);
  auto values = table.distinct_values();
  HOMSPEC_CHECK(values.size() >= 2, "second eigenvalue must appear below the candidate bound");
  DiiiEigenvalue out;
  out.value = values[1];
  out.multiplicity = table.multiplicity_of(values[1]);
  for (const auto& e : table.entries)
    if (e.value == out.value) out.attained.push_back(e.prov);
  return out;
}

}  // namespace homspec
