#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homspec/aii.hpp"
#include "homspec/diii.hpp"
#include "homspec/rational.hpp"

namespace homspec {

/// vol(g_{s,t}) = s^{2n} t^{n(n-1)} vol(g_{1,1}): exponents of (s, t).
std::pair<int, int> diii_volume_exponents(int n);
/// vol(g_r) = r1^{4n} r2 r3^{(n-1)(2n+1)} vol(g_{(1,1,1)}): exponents of (r1, r2, r3).
std::array<int, 3> aii_volume_exponents(int n);

/// Squared volume ratio against the normal metric; exact in the squared parameters.
Rational diii_volume_squared(const DiiiParams& p);
Rational aii_volume_squared(const AiiParams& p);

/// scal(g_{s,t}) = (1/(4n-2)) (2n(2n-1) s^2 + 2n(n-1)^2 t^2 - n(n-1) s^4/(2t^2)).
Rational diii_scalar_curvature(const DiiiParams& p);

int diii_dimension(int n);  // n(n+1)

/// The two Einstein loci among the g_{s,t}: symmetric t^2 = s^2/2 and the
/// non-symmetric family t^2 = n s^2 / (2(n-1)).
struct DiiiEinsteinLoci {
  Rational symmetric_t2_over_s2;      // 1/2
  Rational non_symmetric_t2_over_s2;  // n / (2(n-1))
};
DiiiEinsteinLoci diii_einstein_loci(int n);

bool diii_is_symmetric(const DiiiParams& p);
bool diii_is_einstein_non_symmetric(const DiiiParams& p);

/// Parameters of the standard symmetric metric (Einstein constant 1/2, first
/// eigenvalue 1): (s^2, t^2) = ((2n-1)/n, (2n-1)/(2n)).
DiiiParams diii_standard_symmetric(int n);

enum class NuVerdict { nu_unstable, inconclusive };
/// One-directional criterion: lambda1 < 2E certifies instability, anything
/// else proves nothing.
NuVerdict nu_instability_verdict(const Rational& lambda1, const Rational& einstein_constant);

enum class YamabeVerdict { yamabe_stable, yamabe_degenerate, not_implied };
YamabeVerdict diii_yamabe_verdict(const DiiiParams& p);

/// Symmetric metrics on the quaternionic side: r^2 = (2t^2, (2n+1)t^2/(n+1), t^2).
AiiParams aii_symmetric_params(int n, const Rational& t2);
/// t^2 if the parameters lie on the symmetric locus.
std::optional<Rational> aii_symmetric_t2(const AiiParams& p);
/// First eigenvalue along the symmetric family: n(2n+3) t^2 / ((n+1)(2n+1)).
Rational aii_symmetric_lambda1(int n, const Rational& t2);
/// The member isometric to the Killing metric of the ambient presentation,
/// t^2 = (2n+1)/(2(n+1)); its first eigenvalue is n(2n+3)/(2(n+1)^2).
AiiParams aii_standard_symmetric(int n);

struct GeometryReport {
  std::string space;
  int n = 0;
  std::vector<Rational> params;                  // squared parameters
  std::vector<std::pair<std::string, int>> volume_exponents;
  Rational volume_squared;                       // against the normal metric
  std::optional<Rational> scal;
  std::optional<Rational> einstein_constant;     // present on an Einstein locus
  Rational lambda1;
  Integer lambda1_multiplicity;
  bool symmetric = false;
  bool einstein = false;
  std::vector<std::string> verdicts;             // nu_unstable, nu_stable_test_inconclusive,
                                                 // yamabe_stable, yamabe_degenerate
};

GeometryReport diii_geometry(const DiiiParams& p);
GeometryReport aii_geometry(const AiiParams& p);

}  // namespace homspec
