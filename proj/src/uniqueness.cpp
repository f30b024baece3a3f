#include "homspec/uniqueness.hpp"

#include <algorithm>

#include "homspec/geometry.hpp"
#include "homspec/parallel.hpp"

namespace homspec {

std::string iso_status_name(IsoStatus s) {
  switch (s) {
    case IsoStatus::distinct_by_volume: return "distinct_by_volume";
    case IsoStatus::distinct_by_lambda1: return "distinct_by_lambda1";
    case IsoStatus::distinct_by_multiplicity: return "distinct_by_multiplicity";
    case IsoStatus::distinct_by_truncated_spectrum: return "distinct_by_truncated_spectrum";
    case IsoStatus::indistinguishable_up_to_cutoff: return "indistinguishable_up_to_cutoff";
  }
  return "?";
}

namespace {

template <class Prov>
std::vector<std::pair<Rational, Integer>> eigenvalue_atoms(const SpectrumTable<Prov>& t) {
  std::vector<std::pair<Rational, Integer>> atoms;
  for (const auto& e : t.entries) {
    if (!atoms.empty() && atoms.back().first == e.value)
      atoms.back().second += e.multiplicity;
    else
      atoms.emplace_back(e.value, e.multiplicity);
  }
  return atoms;
}

std::string atom_str(const std::pair<Rational, Integer>& a) {
  return a.first.str() + " x" + a.second.get_str();
}

}  // namespace

IsospectralityVerdict compare_diii(const DiiiParams& a, const DiiiParams& b,
                                   const Rational& cutoff) {
  validate(a);
  validate(b);
  if (a.n != b.n) throw std::invalid_argument("compare_diii: ranks differ");
  if (cutoff.sign() <= 0) throw std::invalid_argument("compare_diii: cutoff must be positive");

  IsospectralityVerdict v;
  if (a.s2 == b.s2 && a.t2 == b.t2) {
    v.status = IsoStatus::indistinguishable_up_to_cutoff;
    v.log.push_back("identical parameters, hence isometric");
    return v;
  }

  Rational vol_a = diii_volume_squared(a), vol_b = diii_volume_squared(b);
  if (vol_a != vol_b) {
    v.status = IsoStatus::distinct_by_volume;
    v.witness = IsoWitness{"volume_squared", vol_a.str(), vol_b.str()};
    v.log.push_back("squared volumes differ");
    return v;
  }
  v.log.push_back("volumes agree: s^2 t^{n-1} invariant matched");

  auto l1a = diii_first_eigenvalue(a), l1b = diii_first_eigenvalue(b);
  {
    // soundness: the closed-form atom must be what the enumerator sees
    auto ta = diii_spectrum(a, l1a.value);
    auto tb = diii_spectrum(b, l1b.value);
    HOMSPEC_CHECK(!ta.empty() && ta.entries.front().value == l1a.value &&
                      ta.multiplicity_of(l1a.value) == l1a.multiplicity,
                  "first-eigenvalue witness failed re-verification (lhs)");
    HOMSPEC_CHECK(!tb.empty() && tb.entries.front().value == l1b.value &&
                      tb.multiplicity_of(l1b.value) == l1b.multiplicity,
                  "first-eigenvalue witness failed re-verification (rhs)");
  }
  if (l1a.value != l1b.value) {
    v.status = IsoStatus::distinct_by_lambda1;
    v.witness = IsoWitness{"lambda1", l1a.value.str(), l1b.value.str()};
    v.log.push_back("first eigenvalues differ");
    return v;
  }
  if (l1a.multiplicity != l1b.multiplicity) {
    v.status = IsoStatus::distinct_by_multiplicity;
    v.witness = IsoWitness{"lambda1_multiplicity", l1a.multiplicity.get_str(),
                           l1b.multiplicity.get_str()};
    v.log.push_back("first-eigenvalue multiplicities differ");
    return v;
  }
  v.log.push_back("first eigenvalue and its multiplicity agree");

  auto l2a = diii_second_eigenvalue_enumerated(a);
  auto l2b = diii_second_eigenvalue_enumerated(b);
  if (l2a.value != l2b.value) {
    v.status = IsoStatus::distinct_by_truncated_spectrum;
    v.witness = IsoWitness{"lambda2", l2a.value.str(), l2b.value.str()};
    v.log.push_back("second distinct eigenvalues differ");
    return v;
  }
  if (l2a.multiplicity != l2b.multiplicity) {
    v.status = IsoStatus::distinct_by_multiplicity;
    v.witness = IsoWitness{"lambda2_multiplicity", l2a.multiplicity.get_str(),
                           l2b.multiplicity.get_str()};
    v.log.push_back("second-eigenvalue multiplicities differ");
    return v;
  }
  v.log.push_back("second eigenvalue and its multiplicity agree");

  auto atoms_a = eigenvalue_atoms(diii_spectrum(a, cutoff));
  auto atoms_b = eigenvalue_atoms(diii_spectrum(b, cutoff));
  size_t count = std::min(atoms_a.size(), atoms_b.size());
  for (size_t i = 0; i < count; ++i) {
    if (!(atoms_a[i] == atoms_b[i])) {
      v.status = IsoStatus::distinct_by_truncated_spectrum;
      v.witness = IsoWitness{"spectrum_atom", atom_str(atoms_a[i]), atom_str(atoms_b[i])};
      v.log.push_back("truncated spectra differ");
      return v;
    }
  }
  if (atoms_a.size() != atoms_b.size()) {
    size_t i = count;
    v.status = IsoStatus::distinct_by_truncated_spectrum;
    v.witness = IsoWitness{"spectrum_atom",
                           atoms_a.size() > count ? atom_str(atoms_a[i]) : "absent",
                           atoms_b.size() > count ? atom_str(atoms_b[i]) : "absent"};
    v.log.push_back("truncated spectra differ in length");
    return v;
  }
  v.status = IsoStatus::indistinguishable_up_to_cutoff;
  v.log.push_back("all invariants and the truncated spectra agree");
  return v;
}

AiiParams volume_curve_params(int n, const Rational& theta) {
  if (n < 2) throw std::invalid_argument("aii: n >= 2 required");
  if (theta.sign() <= 0 || theta >= Rational(2L * n + 3))
    throw std::invalid_argument("theta must lie in (0, 2n+3)");
  return AiiParams{n, Rational(2L * n + 3) - theta, Rational(2L * n + 1) * theta,
                   (Rational(2L * n * n + 3 * n) + theta) / Rational(2L * n + 1)};
}

Rational volume_curve_value(int n, const Rational& theta) {
  if (n < 2) throw std::invalid_argument("aii: n >= 2 required");
  if (theta.sign() <= 0 || theta >= Rational(2L * n + 3))
    throw std::invalid_argument("theta must lie in (0, 2n+3)");
  Rational f1 = (Rational(2L * n + 3) - theta) / Rational(2L * n + 2);
  Rational f3 = (Rational(2L * n * n + 3 * n) + theta) /
                Rational(static_cast<long>(n + 1) * (2 * n + 1));
  return pow(f1, 4L * n) * theta * pow(f3, static_cast<long>(n - 1) * (2 * n + 1));
}

VolumeCurveProfile volume_curve_profile(int n, const Rational& step, int threads) {
  if (step.sign() <= 0) throw std::invalid_argument("step must be positive");
  Rational end(2L * n + 3);
  size_t count = 0;
  for (Rational t = step; t < end; t += step) ++count;
  auto values = parallel_flat_map<Rational>(count, threads, [&](size_t j) {
    Rational theta = step * Rational(static_cast<long long>(j + 1));
    return std::vector<Rational>{volume_curve_value(n, theta)};
  });

  VolumeCurveProfile prof;
  prof.samples = count;
  prof.rising_before_one = true;
  prof.falling_after_one = true;
  Rational one(1);
  for (size_t j = 0; j + 1 < count; ++j) {
    Rational lo = step * Rational(static_cast<long long>(j + 1));
    Rational hi = lo + step;
    if (hi <= one && !(values[j] < values[j + 1])) prof.rising_before_one = false;
    if (lo >= one && !(values[j] > values[j + 1])) prof.falling_after_one = false;
  }
  for (size_t j = 0; j < count; ++j)
    if (values[j] == one)
      prof.unit_points.push_back(step * Rational(static_cast<long long>(j + 1)));
  return prof;
}

std::vector<std::array<int, 4>> multiplicity_decomposition(int n, const Integer& M) {
  if (n < 2) throw std::invalid_argument("n >= 2 required");
  std::vector<std::array<int, 4>> sols;
  Integer dim_std(2L * n + 1);
  Integer dim_ext = Integer(static_cast<long>(n)) * Integer(2L * n + 1);
  Integer dim_adj = Integer(4L * n) * Integer(static_cast<long>(n + 1));
  Integer dim_big =
      Integer(static_cast<long>(n) * n - 1) * Integer(2L * n + 1) * Integer(2L * n + 1);
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b)
      for (int c = 0; c <= 1; ++c)
        for (int d = 0; d <= 1; ++d) {
          Integer total = Integer(2 * a) * dim_std + Integer(2 * b) * dim_ext +
                          Integer(c) * dim_adj + Integer(d) * dim_big;
          if (total == M) sols.push_back({a, b, c, d});
        }
  return sols;
}

IsospectralityVerdict compare_aii_to_symmetric(const AiiParams& p, const Rational& cutoff) {
  validate(p);
  if (cutoff.sign() <= 0) throw std::invalid_argument("cutoff must be positive");
  const int n = p.n;
  AiiParams sym{n, Rational(2L * n + 2), Rational(2L * n + 1), Rational(static_cast<long>(n + 1))};

  IsospectralityVerdict v;
  if (p.r1_2 == sym.r1_2 && p.r2_2 == sym.r2_2 && p.r3_2 == sym.r3_2) {
    v.status = IsoStatus::indistinguishable_up_to_cutoff;
    v.log.push_back("identical to the normalized symmetric metric");
    return v;
  }

  Rational sym_l1 = Rational(static_cast<long>(n) * (2 * n + 3), 2L * n + 1);
  auto sym_first = aii_first_eigenvalue(sym);
  HOMSPEC_CHECK(sym_first.value == sym_l1, "symmetric first eigenvalue sanity");
  Integer sym_mult = Integer(2L * n + 1) * Integer(2L * n + 2);
  HOMSPEC_CHECK(sym_first.multiplicity == sym_mult, "symmetric multiplicity sanity");

  auto l1 = aii_first_eigenvalue(p);
  if (l1.value != sym_l1) {
    v.status = IsoStatus::distinct_by_lambda1;
    v.witness = IsoWitness{"lambda1", l1.value.str(), sym_l1.str()};
    v.log.push_back("first eigenvalue differs from the symmetric one");
    return v;
  }
  v.log.push_back("first eigenvalue matches n(2n+3)/(2n+1)");

  if (l1.multiplicity != sym_mult) {
    v.status = IsoStatus::distinct_by_multiplicity;
    v.witness =
        IsoWitness{"lambda1_multiplicity", l1.multiplicity.get_str(), sym_mult.get_str()};
    v.log.push_back("first-eigenvalue multiplicity differs from (2n+1)(2n+2)");
    return v;
  }
  auto sols = multiplicity_decomposition(n, sym_mult);
  HOMSPEC_CHECK(sols.size() == 1 && sols[0] == (std::array<int, 4>{1, 1, 0, 0}),
                "the multiplicity equation must force the (1,1,0,0) pattern");
  v.log.push_back("multiplicity decomposition forces the standard+exterior-square pattern");

  // the two attained candidate equations reduce the metric to the curve
  Rational theta = p.r2_2 / Rational(2L * n + 1);
  AiiParams on_curve = volume_curve_params(n, theta);
  HOMSPEC_CHECK(on_curve.r1_2 == p.r1_2 && on_curve.r2_2 == p.r2_2 && on_curve.r3_2 == p.r3_2,
                "metric with the symmetric lambda1 data must lie on the theta-curve");
  v.log.push_back("parameters lie on the curve, theta = " + theta.str());

  Rational vol = volume_curve_value(n, theta);
  HOMSPEC_CHECK(vol == aii_volume_squared(p) / aii_volume_squared(sym),
                "curve volume value must equal the squared-volume ratio");
  if (vol != Rational(1)) {
    v.status = IsoStatus::distinct_by_volume;
    v.witness = IsoWitness{"volume_curve_value", vol.str(), "1"};
    v.log.push_back("volume differs from the symmetric metric");
    return v;
  }

  // volume agrees yet parameters differ: fall back to the spectra themselves
  v.log.push_back("volume agrees; falling back to truncated spectra");
  auto atoms_p = eigenvalue_atoms(aii_spectrum(p, cutoff));
  auto atoms_s = eigenvalue_atoms(aii_spectrum(sym, cutoff));
  size_t count = std::min(atoms_p.size(), atoms_s.size());
  for (size_t i = 0; i < count; ++i) {
    if (!(atoms_p[i] == atoms_s[i])) {
      v.status = IsoStatus::distinct_by_truncated_spectrum;
      v.witness = IsoWitness{"spectrum_atom", atom_str(atoms_p[i]), atom_str(atoms_s[i])};
      return v;
    }
  }
  if (atoms_p.size() != atoms_s.size()) {
    v.status = IsoStatus::distinct_by_truncated_spectrum;
    v.witness = IsoWitness{"spectrum_atom", "length " + std::to_string(atoms_p.size()),
                           "length " + std::to_string(atoms_s.size())};
    return v;
  }
  v.status = IsoStatus::indistinguishable_up_to_cutoff;
  return v;
}

}  // namespace homspec
