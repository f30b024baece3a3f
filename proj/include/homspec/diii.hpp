#pragma once

#include <span>
#include <vector>

#include "homspec/rational.hpp"
#include "homspec/spectrum.hpp"

namespace homspec {

/// Squared parameters of the metric g_{s,t} on the space of orthogonal
/// complex structures, realized as SO(2n+1)/U(n). Requires n >= 3 (the small
/// ranks collapse under special isomorphisms).
struct DiiiParams {
  int n;
  Rational s2;
  Rational t2;
};

void validate(const DiiiParams& p);

/// A spherical pair: a dominant so(2n+1) highest weight together with the
/// so(2n) highest weight it branches to with a U(n)-fixed vector.
struct DiiiPair {
  std::vector<long long> hw_g;  // a_i, length n
  std::vector<long long> hw_k;  // b_i, length n

  friend bool operator==(const DiiiPair& a, const DiiiPair& b) {
    return a.hw_g == b.hw_g && a.hw_k == b.hw_k;
  }
  friend bool operator<(const DiiiPair& a, const DiiiPair& b) {
    if (a.hw_g != b.hw_g) return a.hw_g < b.hw_g;
    return a.hw_k < b.hw_k;
  }
};

/// hw_g dominant; hw_k in the U(n)-spherical cone (equal consecutive pairs,
/// last coordinate zero for odd n); interlacing a1 >= b1 >= a2 >= ... >= |b_n|.
bool diii_pair_valid(int n, const DiiiPair& pair);

/// The unique spherical partner of a dominant weight: b_{2i-1} = b_{2i} = a_{2i}.
std::vector<long long> diii_spherical_partner(std::span<const long long> hw_g);

/// Coefficients (in s^2, t^2) of the eigenvalue attached to a spherical pair.
EigenvalueForm diii_eigenvalue_form(int n, const DiiiPair& pair);

/// All dominant so(2n+1) weights with Casimir scalar <= bound, sorted by
/// (Casimir, coordinates). Includes the zero weight.
std::vector<std::vector<long long>> diii_dominant_weights_below(int n, const Rational& bound);

using DiiiTable = SpectrumTable<DiiiPair>;

/// Every positive eigenvalue <= cutoff with its multiplicity dim V_Lambda.
/// Complete by the bound: eigenvalue >= min(s2,t2) * Casimir(Lambda).
DiiiTable diii_spectrum(const DiiiParams& p, const Rational& cutoff, int threads = 1);

struct DiiiEigenvalue {
  Rational value;
  Integer multiplicity;
  std::vector<DiiiPair> attained;
};

/// Smallest positive eigenvalue: min{ s^2 n/(2n-1), t^2 (2n-2)/(2n-1) + s^2/(2n-1) },
/// with multiplicity 2n+1 / n(2n+1) / (n+1)(2n+1) according to s^2 vs 2t^2.
DiiiEigenvalue diii_first_eigenvalue(const DiiiParams& p);

/// Second distinct eigenvalue under the hypothesis s^2 > 2t^2, as published:
/// n >= 4 splits at s^2 vs 4t^2 with multiplicities 2n+1 / 2n+1+C(2n+1,4) /
/// C(2n+1,4); n = 3 has five claimed regimes with multiplicities
/// 7 / 42 / 35 / 203 / 168 split at 4t^2 and 6t^2.
/// Note: the n = 3 regimes at and beyond s^2 = 6t^2 disagree with the
/// branching enumeration; see diii_second_eigenvalue_enumerated.
DiiiEigenvalue diii_second_eigenvalue(const DiiiParams& p);

/// Second distinct eigenvalue read off the enumerator (ground truth).
DiiiEigenvalue diii_second_eigenvalue_enumerated(const DiiiParams& p);

}  // namespace homspec
