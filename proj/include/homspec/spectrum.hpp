#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "homspec/rational.hpp"

namespace homspec {

/// A Laplace eigenvalue before substituting the metric: a linear form with
/// rational coefficients in the squared metric parameters.
struct EigenvalueForm {
  std::vector<Rational> coeffs;

  Rational evaluate(std::span<const Rational> squared_params) const {
    HOMSPEC_CHECK(squared_params.size() == coeffs.size(),
                  "eigenvalue form arity does not match the parameters");
    Rational v;
    for (size_t i = 0; i < coeffs.size(); ++i) v += coeffs[i] * squared_params[i];
    return v;
  }

  friend bool operator==(const EigenvalueForm& a, const EigenvalueForm& b) {
    return a.coeffs == b.coeffs;
  }
};

template <class Prov>
struct SpectrumEntry {
  Rational value;
  EigenvalueForm form;
  Integer multiplicity;
  Prov prov;

  friend bool operator==(const SpectrumEntry& a, const SpectrumEntry& b) {
    return a.value == b.value && a.form == b.form &&
           a.multiplicity == b.multiplicity && a.prov == b.prov;
  }
};

/// Truncated spectrum with its completeness certificate: every eigenvalue
/// <= cutoff appears, guaranteed by scanning all ambient Casimir scalars
/// <= casimir_bound.
template <class Prov>
struct SpectrumTable {
  std::string space;
  int n = 0;
  std::vector<Rational> params;  // squared metric parameters
  Rational cutoff;
  Rational casimir_bound;
  std::vector<SpectrumEntry<Prov>> entries;

  void sort_entries() {
    std::sort(entries.begin(), entries.end(),
              [](const SpectrumEntry<Prov>& a, const SpectrumEntry<Prov>& b) {
                if (a.value != b.value) return a.value < b.value;
                return a.prov < b.prov;
              });
  }

  bool empty() const { return entries.empty(); }

  /// Distinct eigenvalues in ascending order.
  std::vector<Rational> distinct_values() const {
    std::vector<Rational> out;
    for (const auto& e : entries)
      if (out.empty() || !(out.back() == e.value)) out.push_back(e.value);
    return out;
  }

  Integer multiplicity_of(const Rational& value) const {
    Integer m = 0;
    for (const auto& e : entries)
      if (e.value == value) m += e.multiplicity;
    return m;
  }

  /// Exact multiset equality, provenance and multiplicities included.
  friend bool operator==(const SpectrumTable& a, const SpectrumTable& b) {
    return a.entries == b.entries;
  }
};

}  // namespace homspec
