#pragma once

#include <span>
#include <vector>

#include "homspec/rational.hpp"
#include "homspec/spectrum.hpp"
#include "homspec/weight.hpp"

namespace homspec {

/// Squared parameters of the metric g_r on the space of quaternionic
/// structures, realized as SU(2n+1)/Sp(n). Requires n >= 2.
struct AiiParams {
  int n;
  Rational r1_2;
  Rational r2_2;
  Rational r3_2;

  std::vector<Rational> squared() const { return {r1_2, r2_2, r3_2}; }
};

void validate(const AiiParams& p);

/// Index of a spherical triple: q in N_0^{n-1}, k in Z, l in N_0^n with
/// l_i <= q_{i-1} for i = 2..n and k <= L = sum l_i. These constraints are
/// exactly dominance of the associated su(2n+1) highest weight.
struct QklIndex {
  std::vector<long long> q;
  long long k = 0;
  std::vector<long long> l;

  friend bool operator==(const QklIndex& a, const QklIndex& b) {
    return a.q == b.q && a.k == b.k && a.l == b.l;
  }
  friend bool operator<(const QklIndex& a, const QklIndex& b) {
    if (a.q != b.q) return a.q < b.q;
    if (a.k != b.k) return a.k < b.k;
    return a.l < b.l;
  }
};

bool qkl_valid(int n, const QklIndex& idx);
bool qkl_is_zero(const QklIndex& idx);

/// Coefficients of r1^2, r2^2, r3^2 in the eigenvalue attached to an index;
/// they measure the Casimir weight carried by the three isotropy summands.
Rational aii_coeff_p1(int n, const QklIndex& idx);
Rational aii_coeff_p2(int n, const QklIndex& idx);
Rational aii_coeff_p3(int n, const QklIndex& idx);
EigenvalueForm aii_eigenvalue_form(int n, const QklIndex& idx);

/// Highest weights of the G-, K- and K'-representations behind an index.
struct AiiWeights {
  Weight lambda;    // su(2n+1), 2n+1 coordinates, sum zero
  Weight mu;        // s(u(2n)+u(1)) as 2n+1 sum-zero coordinates
  Weight mu_prime;  // su(2n), 2n coordinates, sum zero

  friend bool operator==(const AiiWeights& a, const AiiWeights& b) {
    return a.lambda == b.lambda && a.mu == b.mu && a.mu_prime == b.mu_prime;
  }
};

AiiWeights aii_weights_from_index(int n, const QklIndex& idx);

/// Inverse of the parametrization; throws if the weights do not come from a
/// valid index (and asserts an exact round trip when they do).
QklIndex aii_index_from_weights(int n, const AiiWeights& w);

struct AiiProv {
  QklIndex idx;
  AiiWeights weights;

  friend bool operator==(const AiiProv& a, const AiiProv& b) {
    return a.idx == b.idx && a.weights == b.weights;
  }
  friend bool operator<(const AiiProv& a, const AiiProv& b) { return a.idx < b.idx; }
};

using AiiTable = SpectrumTable<AiiProv>;

/// Every positive eigenvalue <= cutoff, multiplicity dim V_Lambda, enumerated
/// directly over (q, k, l).
AiiTable aii_spectrum(const AiiParams& p, const Rational& cutoff, int threads = 1);

/// The same multiset computed by the independent route: dominant su(2n+1)
/// weights in a Casimir ball, interlacing restriction to K, center shift to
/// K', spherical filter, and the subalgebra Casimir scalars.
AiiTable aii_spectrum_by_branching(const AiiParams& p, const Rational& cutoff, int threads = 1);

/// Dominant su(m) integer representatives (z_1 >= ... >= z_m = 0) whose
/// projected weight has Casimir scalar <= bound.
std::vector<std::vector<long long>> aii_dominant_reps_below(int m, const Rational& bound);

struct AiiEigenvalue {
  Rational value;
  Integer multiplicity;
  std::vector<QklIndex> attained;
};

/// Smallest positive eigenvalue: minimum over the four candidate forms, with
/// multiplicity the sum of the dimensions of every candidate attaining it.
AiiEigenvalue aii_first_eigenvalue(const AiiParams& p);

/// The six candidate indices behind the first-eigenvalue minimum.
std::vector<QklIndex> aii_lambda1_candidates(int n);

}  // namespace homspec
