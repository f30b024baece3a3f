#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "homspec/aii.hpp"
#include "homspec/diii.hpp"
#include "homspec/rational.hpp"

namespace homspec {

enum class IsoStatus {
  distinct_by_volume,
  distinct_by_lambda1,
  distinct_by_multiplicity,
  distinct_by_truncated_spectrum,
  indistinguishable_up_to_cutoff,
};

std::string iso_status_name(IsoStatus s);

/// The concrete invariant or eigenvalue atom separating two metrics.
struct IsoWitness {
  std::string invariant;  // volume, lambda1, lambda1_multiplicity, ...
  std::string lhs;
  std::string rhs;
};

struct IsospectralityVerdict {
  IsoStatus status;
  std::optional<IsoWitness> witness;
  std::vector<std::string> log;
};

/// Spectral comparison of two metrics on the same complex-structures space:
/// volume, then first-eigenvalue value and multiplicity, then the second
/// distinct eigenvalue, then exact truncated-multiset comparison. Every
/// distinct_* witness is re-verified against both enumerated spectra.
IsospectralityVerdict compare_diii(const DiiiParams& a, const DiiiParams& b,
                                   const Rational& cutoff);

/// Decides whether the given metric can be isospectral to the normalized
/// symmetric metric r^2 = (2n+2, 2n+1, n+1) on the quaternionic-structures
/// space: first-eigenvalue value, multiplicity decomposition, reduction to
/// the one-parameter curve, then the volume equation.
IsospectralityVerdict compare_aii_to_symmetric(const AiiParams& p, const Rational& cutoff);

/// Squared-volume ratio along the equal-first-eigenvalue curve
/// (r1^2, r2^2, r3^2) = (2n+3-theta, (2n+1)theta, (2n^2+3n+theta)/(2n+1)),
/// normalized so the value is 1 exactly at theta = 1. Domain 0 < theta < 2n+3.
Rational volume_curve_value(int n, const Rational& theta);

/// Parameters on the curve for a given theta.
AiiParams volume_curve_params(int n, const Rational& theta);

struct VolumeCurveProfile {
  size_t samples = 0;
  bool rising_before_one = false;   // strictly increasing differences on (0, 1]
  bool falling_after_one = false;   // strictly decreasing differences on [1, 2n+3)
  std::vector<Rational> unit_points;  // grid points with value exactly 1
};

/// Discrete monotonicity report for the volume curve on a uniform grid.
/// Grid evidence, not a derivative proof.
VolumeCurveProfile volume_curve_profile(int n, const Rational& step, int threads = 1);

/// All (a,b,c,d) in {0,1}^4 with
/// 2a(2n+1) + 2bn(2n+1) + 4cn(n+1) + d(n^2-1)(2n+1)^2 = M.
std::vector<std::array<int, 4>> multiplicity_decomposition(int n, const Integer& M);

}  // namespace homspec
