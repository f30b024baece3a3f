#include "homspec/aii.hpp"

#include <algorithm>
#include <stdexcept>

#include "homspec/casimir.hpp"
#include "homspec/parallel.hpp"
#include "homspec/root_data.hpp"
#include "homspec/weyl.hpp"

namespace homspec {

void validate(const AiiParams& p) {
  if (p.n < 2) throw std::invalid_argument("aii: n >= 2 required");
  if (p.r1_2.sign() <= 0 || p.r2_2.sign() <= 0 || p.r3_2.sign() <= 0)
    throw std::invalid_argument("aii: squared parameters must be positive");
}

bool qkl_valid(int n, const QklIndex& idx) {
  if (static_cast<int>(idx.q.size()) != n - 1) return false;
  if (static_cast<int>(idx.l.size()) != n) return false;
  for (long long v : idx.q)
    if (v < 0) return false;
  for (long long v : idx.l)
    if (v < 0) return false;
  for (int i = 2; i <= n; ++i)
    if (idx.l[i - 1] > idx.q[i - 2]) return false;
  long long L = 0;
  for (long long v : idx.l) L += v;
  return idx.k <= L;
}

bool qkl_is_zero(const QklIndex& idx) {
  if (idx.k != 0) return false;
  for (long long v : idx.q)
    if (v != 0) return false;
  for (long long v : idx.l)
    if (v != 0) return false;
  return true;
}

namespace {

struct QDerived {
  std::vector<long long> Q;  // length n, Q_n = 0
  long long Qt = 0;          // sum of the Q_i
};

QDerived derive(int n, const std::vector<long long>& q) {
  QDerived d;
  d.Q.assign(n, 0);
  for (int i = n - 2; i >= 0; --i) d.Q[i] = d.Q[i + 1] + q[i];
  for (long long v : d.Q) d.Qt += v;
  return d;
}

long long sum_of(const std::vector<long long>& v) {
  long long s = 0;
  for (long long x : v) s += x;
  return s;
}

Rational psi1_impl(int n, const QDerived& d, long long k, const std::vector<long long>& l) {
  Integer acc = 0;
  long long L = sum_of(l);
  for (int i = 1; i <= n; ++i) {
    Integer li(static_cast<long>(l[i - 1]));
    acc += li * Integer(static_cast<long>(l[i - 1] + 2 * d.Q[i - 1] - 4LL * i));
  }
  acc += Integer(static_cast<long>(2 * d.Qt));
  acc += Integer(static_cast<long>(L)) * Integer(static_cast<long>(L));
  acc += Integer(static_cast<long>(L)) * Integer(static_cast<long>(4LL * n + 4));
  acc -= Integer(2) * Integer(static_cast<long>(k)) * Integer(static_cast<long>(L + n));
  return Rational(acc, Integer(4L * n + 2));
}

Rational psi2_impl(int n, const QDerived& d, long long k) {
  Integer u = Integer(static_cast<long>(n)) * Integer(static_cast<long>(k)) -
              Integer(static_cast<long>(d.Qt));
  return Rational(u * u, Integer(static_cast<long>(n)) *
                             Integer(static_cast<long>(2LL * n + 1)) *
                             Integer(static_cast<long>(2LL * n + 1)));
}

Rational psi3_impl(int n, const QDerived& d) {
  Integer acc = 0;
  for (int i = 1; i <= n; ++i) {
    Integer qi(static_cast<long>(d.Q[i - 1]));
    acc += qi * Integer(static_cast<long>(d.Q[i - 1] - 4LL * i));
  }
  Integer nn(static_cast<long>(n));
  Integer qt(static_cast<long>(d.Qt));
  acc = acc * nn - qt * qt + Integer(2) * nn * Integer(static_cast<long>(n + 1)) * qt;
  return Rational(acc, nn * Integer(static_cast<long>(2LL * n + 1)));
}

void require_valid(int n, const QklIndex& idx, const char* what) {
  if (!qkl_valid(n, idx)) throw std::invalid_argument(std::string(what) + ": invalid index");
}

}  // namespace

Rational aii_coeff_p1(int n, const QklIndex& idx) {
  require_valid(n, idx, "aii_coeff_p1");
  return psi1_impl(n, derive(n, idx.q), idx.k, idx.l);
}

Rational aii_coeff_p2(int n, const QklIndex& idx) {
  require_valid(n, idx, "aii_coeff_p2");
  return psi2_impl(n, derive(n, idx.q), idx.k);
}

Rational aii_coeff_p3(int n, const QklIndex& idx) {
  require_valid(n, idx, "aii_coeff_p3");
  return psi3_impl(n, derive(n, idx.q));
}

EigenvalueForm aii_eigenvalue_form(int n, const QklIndex& idx) {
  require_valid(n, idx, "aii_eigenvalue_form");
  QDerived d = derive(n, idx.q);
  EigenvalueForm form{{psi1_impl(n, d, idx.k, idx.l), psi2_impl(n, d, idx.k), psi3_impl(n, d)}};
  for (const auto& c : form.coeffs)
    HOMSPEC_CHECK(c.sign() >= 0, "aii eigenvalue form has a negative coefficient");
  return form;
}

AiiWeights aii_weights_from_index(int n, const QklIndex& idx) {
  require_valid(n, idx, "aii_weights_from_index");
  QDerived d = derive(n, idx.q);
  long long L = sum_of(idx.l);

  std::vector<long long> raw_mu_prime(2 * n);
  std::vector<long long> raw_mu(2 * n + 1);
  std::vector<long long> raw_lambda(2 * n + 1);
  for (int i = 1; i <= n; ++i) {
    raw_mu_prime[2 * i - 2] = d.Q[i - 1];
    raw_mu_prime[2 * i - 1] = d.Q[i - 1];
    raw_mu[2 * i - 2] = d.Q[i - 1];
    raw_mu[2 * i - 1] = d.Q[i - 1];
    raw_lambda[2 * i - 2] = idx.l[i - 1] + d.Q[i - 1];
    raw_lambda[2 * i - 1] = d.Q[i - 1];
  }
  raw_mu[2 * n] = idx.k;
  raw_lambda[2 * n] = idx.k - L;

  AiiWeights w;
  w.lambda = Weight{Basis::su_full, project_sum_zero(std::span<const long long>(raw_lambda))};
  w.mu = Weight{Basis::su_full, project_sum_zero(std::span<const long long>(raw_mu))};
  w.mu_prime = Weight{Basis::su_sub, project_sum_zero(std::span<const long long>(raw_mu_prime))};

  HOMSPEC_CHECK(dominant_su(w.lambda.coords), "Lambda_{q,k,l} must be dominant");
  HOMSPEC_CHECK(dominant_su(w.mu_prime.coords), "mu'_q must be dominant");
  return w;
}

QklIndex aii_index_from_weights(int n, const AiiWeights& w) {
  const auto& a = w.lambda.coords;
  const auto& b = w.mu.coords;
  if (static_cast<int>(a.size()) != 2 * n + 1 || static_cast<int>(b.size()) != 2 * n + 1)
    throw std::invalid_argument("aii_index_from_weights: wrong coordinate counts");
  auto as_int = [](const Rational& r, const char* what) {
    if (!r.is_integer()) throw std::invalid_argument(std::string(what) + ": not an integer");
    return static_cast<long long>(r.numerator().get_si());
  };
  QklIndex idx;
  idx.l.resize(n);
  idx.q.resize(n - 1);
  for (int i = 1; i <= n; ++i)
    idx.l[i - 1] = as_int(a[2 * i - 2] - a[2 * i - 1], "l from Lambda");
  for (int j = 1; j <= n - 1; ++j)
    idx.q[j - 1] = as_int(a[2 * j - 1] - a[2 * j + 1], "q from Lambda");
  idx.k = as_int(b[2 * n] - b[2 * n - 1], "k from mu");
  if (!qkl_valid(n, idx))
    throw std::invalid_argument("aii_index_from_weights: weights do not define a valid index");
  AiiWeights round = aii_weights_from_index(n, idx);
  HOMSPEC_CHECK(round == w, "index/weight round trip mismatch");
  return idx;
}

namespace {

void q_dfs(int n, int pos, const Rational& bound, std::vector<long long>& q,
           std::vector<std::vector<long long>>& out) {
  for (long long v = 0;; ++v) {
    q[pos] = v;
    // Psi3 grows strictly in every coordinate, so overshooting ends this branch.
    if (psi3_impl(n, derive(n, q)) > bound) break;
    if (pos == n - 2)
      out.push_back(q);
    else
      q_dfs(n, pos + 1, bound, q, out);
  }
  q[pos] = 0;
}

std::vector<std::vector<long long>> enumerate_q(int n, const Rational& bound) {
  std::vector<std::vector<long long>> out;
  if (bound.sign() < 0) return out;
  std::vector<long long> q(n - 1, 0);
  q_dfs(n, 0, bound, q, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

AiiTable aii_spectrum(const AiiParams& p, const Rational& cutoff, int threads) {
  validate(p);
  if (cutoff.sign() <= 0) throw std::invalid_argument("aii_spectrum: cutoff must be positive");
  const int n = p.n;
  std::vector<Rational> params = p.squared();
  Rational casimir_bound = cutoff / std::min({p.r1_2, p.r2_2, p.r3_2});

  auto q_list = enumerate_q(n, cutoff / p.r3_2);

  auto entries = parallel_flat_map<SpectrumEntry<AiiProv>>(
      q_list.size(), threads, [&](size_t qi) {
        std::vector<SpectrumEntry<AiiProv>> out;
        const auto& q = q_list[qi];
        QDerived d = derive(n, q);
        Rational psi3 = psi3_impl(n, d);
        Rational base3 = p.r3_2 * psi3;
        if (base3 > cutoff) return out;

        // all choices of (l_2 .. l_n), each bounded by q_{i-1}
        std::vector<long long> rest(n - 1, 0);
        for (;;) {
          std::vector<long long> l(n, 0);
          for (int i = 2; i <= n; ++i) l[i - 1] = rest[i - 2];
          for (long long l1 = 0;; ++l1) {
            l[0] = l1;
            long long L = sum_of(l);
            // min over k <= L of the (p1, p2) share is bounded below by the
            // k = L coefficient alone
            Rational lower = p.r1_2 * psi1_impl(n, d, L, l) + base3;
            if (lower > cutoff) break;
            for (long long k = L;; --k) {
              QklIndex idx{q, k, l};
              if (qkl_is_zero(idx)) continue;
              Rational psi1 = psi1_impl(n, d, k, l);
              Rational psi2 = psi2_impl(n, d, k);
              Rational value = p.r1_2 * psi1 + p.r2_2 * psi2 + base3;
              if (value <= cutoff) {
                HOMSPEC_CHECK(psi1.sign() >= 0, "p1 coefficient must be nonnegative");
                HOMSPEC_CHECK(value.sign() > 0, "positive spectrum expected");
                AiiWeights w = aii_weights_from_index(n, idx);
                Integer mult = weyl_dim_su(2 * n + 1, std::span<const Rational>(w.lambda.coords));
                out.push_back({value,
                               EigenvalueForm{{psi1, psi2, psi3}},
                               std::move(mult),
                               AiiProv{idx, std::move(w)}});
              } else if (n * k <= d.Qt) {
                // at or below the vertex of the p2 parabola the value only
                // grows as k decreases further
                break;
              }
            }
          }
          // advance (l_2 .. l_n)
          int j = 0;
          for (; j < n - 1; ++j) {
            if (rest[j] < q[j]) {
              ++rest[j];
              std::fill(rest.begin(), rest.begin() + j, 0);
              break;
            }
          }
          if (j == n - 1) break;
        }
        return out;
      });

  AiiTable table;
  table.space = "aii";
  table.n = n;
  table.params = params;
  table.cutoff = cutoff;
  table.casimir_bound = casimir_bound;
  table.entries = std::move(entries);
  table.sort_entries();
  return table;
}

namespace {

void reps_dfs(int m, int pos, const Rational& bound, std::vector<long long>& diffs,
              std::vector<std::vector<long long>>& out) {
  auto casimir_of = [m](const std::vector<long long>& d) {
    std::vector<long long> z(m, 0);
    for (int j = m - 2; j >= 0; --j) z[j] = z[j + 1] + d[j];
    auto coords = project_sum_zero(std::span<const long long>(z));
    return casimir_scalar_su(m, coords);
  };
  for (long long v = 0;; ++v) {
    diffs[pos] = v;
    // the Casimir scalar grows strictly in every difference coordinate
    if (casimir_of(diffs) > bound) break;
    if (pos == m - 2) {
      std::vector<long long> z(m, 0);
      for (int j = m - 2; j >= 0; --j) z[j] = z[j + 1] + diffs[j];
      out.push_back(std::move(z));
    } else {
      reps_dfs(m, pos + 1, bound, diffs, out);
    }
  }
  diffs[pos] = 0;
}

}  // namespace

std::vector<std::vector<long long>> aii_dominant_reps_below(int m, const Rational& bound) {
  if (m < 2) throw std::invalid_argument("aii_dominant_reps_below: m >= 2 required");
  std::vector<std::vector<long long>> out;
  if (bound.sign() < 0) return out;
  std::vector<long long> diffs(m - 1, 0);
  reps_dfs(m, 0, bound, diffs, out);
  std::sort(out.begin(), out.end());
  return out;
}

AiiTable aii_spectrum_by_branching(const AiiParams& p, const Rational& cutoff, int threads) {
  validate(p);
  if (cutoff.sign() <= 0) throw std::invalid_argument("cutoff must be positive");
  const int n = p.n;
  const int m = 2 * n + 1;
  std::vector<Rational> params = p.squared();
  Rational casimir_bound = cutoff / std::min({p.r1_2, p.r2_2, p.r3_2});

  auto reps = aii_dominant_reps_below(m, casimir_bound);

  auto entries = parallel_flat_map<SpectrumEntry<AiiProv>>(
      reps.size(), threads, [&](size_t zi) {
        std::vector<SpectrumEntry<AiiProv>> out;
        const auto& z = reps[zi];
        auto a = project_sum_zero(std::span<const long long>(z));
        Rational lam_g = casimir_scalar_su(m, a);
        bool trivial = std::all_of(z.begin(), z.end(), [](long long v) { return v == 0; });
        if (trivial) return out;
        Integer dim = weyl_dim_su(m, std::span<const Rational>(a));
        Rational shift = (a[0] - Rational(z[0]));  // -sum(z)/m

        // interlacing choices z_1 >= w_1 >= z_2 >= ... >= z_2n >= w_2n >= z_{2n+1}
        std::vector<long long> w(2 * n, 0);
        auto emit_for = [&](const std::vector<long long>& wv) {
          std::vector<Rational> b(2 * n + 1);
          Rational bsum;
          for (int j = 0; j < 2 * n; ++j) {
            b[j] = Rational(wv[j]) + shift;
            bsum += b[j];
          }
          b[2 * n] = -bsum;
          auto mu_prime = center_shift_to_su_sub(n, b);
          for (int i = 1; i <= n; ++i)
            if (mu_prime[2 * i - 2] != mu_prime[2 * i - 1]) return;  // not spherical
          Rational lam_k = casimir_scalar_k_reductive_ambient(n, b);
          Rational lam_kp = killing_rescale_su(n) * casimir_scalar_su(2 * n, mu_prime);
          EigenvalueForm form{{lam_g - lam_k, lam_k - lam_kp, lam_kp}};
          for (const auto& c : form.coeffs)
            HOMSPEC_CHECK(c.sign() >= 0, "branching route: negative form coefficient");
          Rational value = form.evaluate(params);
          if (value.sign() <= 0 || value > cutoff) return;
          AiiWeights weights{Weight{Basis::su_full, a},
                             Weight{Basis::su_full, b},
                             Weight{Basis::su_sub, mu_prime}};
          QklIndex idx = aii_index_from_weights(n, weights);
          out.push_back({value, std::move(form), dim, AiiProv{idx, std::move(weights)}});
        };

        auto rec = [&](auto&& self, int j) -> void {
          if (j == 2 * n) {
            emit_for(w);
            return;
          }
          for (long long v = z[j + 1]; v <= z[j]; ++v) {
            w[j] = v;
            self(self, j + 1);
          }
        };
        rec(rec, 0);
        return out;
      });

  AiiTable table;
  table.space = "aii";
  table.n = n;
  table.params = params;
  table.cutoff = cutoff;
  table.casimir_bound = casimir_bound;
  table.entries = std::move(entries);
  table.sort_entries();
  return table;
}

std::vector<QklIndex> aii_lambda1_candidates(int n) {
  auto unit = [n](int i) {  // e_i in N_0^{n-1}, 1-based
    std::vector<long long> v(n - 1, 0);
    v[i - 1] += 1;
    return v;
  };
  std::vector<long long> zero_q(n - 1, 0);
  std::vector<long long> e1_l(n, 0);
  e1_l[0] = 1;
  std::vector<long long> en_l(n, 0);
  en_l[n - 1] = 1;
  std::vector<long long> zero_l(n, 0);

  std::vector<long long> q_sum = unit(1);
  q_sum[n - 2] += 1;  // e_1 + e_{n-1} (doubles when n = 2)

  return {
      QklIndex{zero_q, 0, e1_l},   QklIndex{zero_q, 1, e1_l},
      QklIndex{zero_q, -1, zero_l}, QklIndex{unit(1), 0, zero_l},
      QklIndex{unit(n - 1), 1, en_l}, QklIndex{q_sum, 1, en_l},
  };
}

AiiEigenvalue aii_first_eigenvalue(const AiiParams& p) {
  validate(p);
  const long n = p.n;
  auto cands = aii_lambda1_candidates(p.n);
  std::vector<Integer> dims = {
      Integer(4 * n) * Integer(n + 1),
      Integer(2 * n + 1),
      Integer(2 * n + 1),
      Integer(n) * Integer(2 * n + 1),
      Integer(n) * Integer(2 * n + 1),
      Integer(n * n - 1) * Integer(2 * n + 1) * Integer(2 * n + 1),
  };
  std::vector<Rational> params = p.squared();
  std::vector<Rational> values;
  values.reserve(cands.size());
  for (const auto& idx : cands)
    values.push_back(aii_eigenvalue_form(p.n, idx).evaluate(params));
  HOMSPEC_CHECK(values[1] == values[2], "dual standard candidates must agree");
  HOMSPEC_CHECK(values[3] == values[4], "dual exterior-square candidates must agree");

  Rational best = values[0];
  for (const auto& v : values) best = min(best, v);

  AiiEigenvalue out;
  out.value = best;
  out.multiplicity = 0;
  for (size_t i = 0; i < cands.size(); ++i) {
    if (values[i] == best) {
      out.multiplicity += dims[i];
      out.attained.push_back(cands[i]);
    }
  }
  return out;
}

}  // namespace homspec
