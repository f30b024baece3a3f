#include "homspec/geometry.hpp"

namespace homspec {

std::pair<int, int> diii_volume_exponents(int n) {
  if (n < 3) throw std::invalid_argument("diii: n >= 3 required");
  return {2 * n, n * (n - 1)};
}

std::array<int, 3> aii_volume_exponents(int n) {
  if (n < 2) throw std::invalid_argument("aii: n >= 2 required");
  return {4 * n, 1, (n - 1) * (2 * n + 1)};
}

Rational diii_volume_squared(const DiiiParams& p) {
  validate(p);
  auto [es, et] = diii_volume_exponents(p.n);
  return pow(p.s2, es) * pow(p.t2, et);
}

Rational aii_volume_squared(const AiiParams& p) {
  validate(p);
  auto e = aii_volume_exponents(p.n);
  return pow(p.r1_2, e[0]) * pow(p.r2_2, e[1]) * pow(p.r3_2, e[2]);
}

Rational diii_scalar_curvature(const DiiiParams& p) {
  validate(p);
  long n = p.n;
  Rational term = Rational(2 * n * (2 * n - 1)) * p.s2 +
                  Rational(2 * n * (n - 1) * (n - 1)) * p.t2 -
                  Rational(n * (n - 1)) * p.s2 * p.s2 / (Rational(2) * p.t2);
  return term / Rational(4 * n - 2);
}

int diii_dimension(int n) { return n * (n + 1); }

DiiiEinsteinLoci diii_einstein_loci(int n) {
  if (n < 3) throw std::invalid_argument("diii: n >= 3 required");
  return {Rational(1, 2), Rational(n, 2L * (n - 1))};
}

bool diii_is_symmetric(const DiiiParams& p) {
  validate(p);
  return p.t2 * Rational(2) == p.s2;
}

bool diii_is_einstein_non_symmetric(const DiiiParams& p) {
  validate(p);
  return p.t2 == p.s2 * diii_einstein_loci(p.n).non_symmetric_t2_over_s2;
}

DiiiParams diii_standard_symmetric(int n) {
  if (n < 3) throw std::invalid_argument("diii: n >= 3 required");
  return DiiiParams{n, Rational(2L * n - 1, n), Rational(2L * n - 1, 2L * n)};
}

NuVerdict nu_instability_verdict(const Rational& lambda1, const Rational& einstein_constant) {
  return lambda1 < Rational(2) * einstein_constant ? NuVerdict::nu_unstable
                                                   : NuVerdict::inconclusive;
}

YamabeVerdict diii_yamabe_verdict(const DiiiParams& p) {
  Rational lhs = diii_first_eigenvalue(p).value;
  Rational rhs = diii_scalar_curvature(p) / Rational(diii_dimension(p.n) - 1);
  if (lhs > rhs) return YamabeVerdict::yamabe_stable;
  if (lhs == rhs) return YamabeVerdict::yamabe_degenerate;
  return YamabeVerdict::not_implied;
}

AiiParams aii_symmetric_params(int n, const Rational& t2) {
  if (n < 2) throw std::invalid_argument("aii: n >= 2 required");
  if (t2.sign() <= 0) throw std::invalid_argument("t2 must be positive");
  return AiiParams{n, Rational(2) * t2, Rational(2L * n + 1, n + 1) * t2, t2};
}

std::optional<Rational> aii_symmetric_t2(const AiiParams& p) {
  validate(p);
  Rational t2 = p.r3_2;
  AiiParams on_locus = aii_symmetric_params(p.n, t2);
  if (on_locus.r1_2 == p.r1_2 && on_locus.r2_2 == p.r2_2) return t2;
  return std::nullopt;
}

Rational aii_symmetric_lambda1(int n, const Rational& t2) {
  if (n < 2) throw std::invalid_argument("aii: n >= 2 required");
  return Rational(static_cast<long>(n) * (2 * n + 3)) * t2 /
         Rational(static_cast<long>(n + 1) * (2 * n + 1));
}

AiiParams aii_standard_symmetric(int n) {
  return aii_symmetric_params(n, Rational(2L * n + 1, 2L * (n + 1)));
}

GeometryReport diii_geometry(const DiiiParams& p) {
  validate(p);
  GeometryReport r;
  r.space = "diii";
  r.n = p.n;
  r.params = {p.s2, p.t2};
  auto [es, et] = diii_volume_exponents(p.n);
  r.volume_exponents = {{"s", es}, {"t", et}};
  r.volume_squared = diii_volume_squared(p);
  r.scal = diii_scalar_curvature(p);
  auto l1 = diii_first_eigenvalue(p);
  r.lambda1 = l1.value;
  r.lambda1_multiplicity = l1.multiplicity;
  r.symmetric = diii_is_symmetric(p);
  r.einstein = r.symmetric || diii_is_einstein_non_symmetric(p);
  if (r.einstein) {
    Rational e = *r.scal / Rational(diii_dimension(p.n));
    r.einstein_constant = e;
    r.verdicts.push_back(nu_instability_verdict(r.lambda1, e) == NuVerdict::nu_unstable
                             ? "nu_unstable"
                             : "nu_stable_test_inconclusive");
  }
  switch (diii_yamabe_verdict(p)) {
    case YamabeVerdict::yamabe_stable: r.verdicts.push_back("yamabe_stable"); break;
    case YamabeVerdict::yamabe_degenerate: r.verdicts.push_back("yamabe_degenerate"); break;
    case YamabeVerdict::not_implied: break;
  }
  return r;
}

GeometryReport aii_geometry(const AiiParams& p) {
  validate(p);
  GeometryReport r;
  r.space = "aii";
  r.n = p.n;
  r.params = p.squared();
  auto e = aii_volume_exponents(p.n);
  r.volume_exponents = {{"r1", e[0]}, {"r2", e[1]}, {"r3", e[2]}};
  r.volume_squared = aii_volume_squared(p);
  // no closed scalar-curvature formula is wired in for this family
  auto l1 = aii_first_eigenvalue(p);
  r.lambda1 = l1.value;
  r.lambda1_multiplicity = l1.multiplicity;
  auto t2 = aii_symmetric_t2(p);
  r.symmetric = t2.has_value();
  r.einstein = r.symmetric;  // the symmetric metrics are the only Einstein ones here
  if (t2) HOMSPEC_CHECK(aii_symmetric_lambda1(p.n, *t2) == r.lambda1,
                        "symmetric-family first eigenvalue must match the closed form");
  return r;
}

}  // namespace homspec
