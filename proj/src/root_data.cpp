#include "homspec/root_data.hpp"

#include <stdexcept>

namespace homspec {

namespace {

std::vector<std::vector<int>> roots_so_odd(int n) {
  std::vector<std::vector<int>> roots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> p(n, 0), m(n, 0);
      p[i] = 1; p[j] = 1;
      m[i] = 1; m[j] = -1;
      roots.push_back(m);
      roots.push_back(p);
    }
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    roots.push_back(e);
  }
  return roots;
}

std::vector<std::vector<int>> roots_so_even(int n) {
  std::vector<std::vector<int>> roots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> p(n, 0), m(n, 0);
      p[i] = 1; p[j] = 1;
      m[i] = 1; m[j] = -1;
      roots.push_back(m);
      roots.push_back(p);
    }
  return roots;
}

std::vector<std::vector<int>> roots_su(int coords, int active) {
  // e_i - e_j for 1 <= i < j <= active, written in `coords` coordinates.
  std::vector<std::vector<int>> roots;
  for (int i = 0; i < active; ++i)
    for (int j = i + 1; j < active; ++j) {
      std::vector<int> r(coords, 0);
      r[i] = 1; r[j] = -1;
      roots.push_back(r);
    }
  return roots;
}

std::vector<Rational> half_sum_doubled(const std::vector<std::vector<int>>& roots, int coords) {
  std::vector<long long> acc(coords, 0);
  for (const auto& r : roots)
    for (int i = 0; i < coords; ++i) acc[i] += r[i];
  return std::vector<Rational>(acc.begin(), acc.end());
}

GroupData make(GroupData::Family fam, int n, int coords, Rational gram,
               std::vector<std::vector<int>> roots) {
  GroupData g;
  g.family = fam;
  g.n = n;
  g.coords = coords;
  g.gram = std::move(gram);
  g.positive_roots = std::move(roots);
  g.rho2 = half_sum_doubled(g.positive_roots, coords);
  return g;
}

}  // namespace

GroupData GroupData::so_odd(int n) {
  if (n < 1) throw std::invalid_argument("so_odd requires n >= 1");
  return make(Family::so_odd, n, n, Rational(1, 4L * n - 2), roots_so_odd(n));
}

GroupData GroupData::so_even_intrinsic(int n) {
  if (n < 2) throw std::invalid_argument("so_even requires n >= 2");
  return make(Family::so_even, n, n, Rational(1, 4L * n - 4), roots_so_even(n));
}

GroupData GroupData::so_even_ambient(int n) {
  if (n < 2) throw std::invalid_argument("so_even requires n >= 2");
  return make(Family::so_even, n, n, Rational(1, 4L * n - 2), roots_so_even(n));
}

GroupData GroupData::su(int m) {
  if (m < 2) throw std::invalid_argument("su requires m >= 2");
  return make(Family::su, m, m, Rational(1, 2L * m), roots_su(m, m));
}

GroupData GroupData::su_sub_ambient(int n) {
  if (n < 1) throw std::invalid_argument("su_sub requires n >= 1");
  return make(Family::su, 2 * n, 2 * n, Rational(1, 4L * n + 2), roots_su(2 * n, 2 * n));
}

GroupData GroupData::k_reductive_ambient(int n) {
  if (n < 1) throw std::invalid_argument("reductive k requires n >= 1");
  return make(Family::su_reductive_center, n, 2 * n + 1, Rational(1, 4L * n + 2),
              roots_su(2 * n + 1, 2 * n));
}

Rational killing_rescale_so(int n) { return Rational(2L * n - 2, 2L * n - 1); }

Rational killing_rescale_su(int n) { return Rational(2L * n, 2L * n + 1); }

Rational casimir_from_roots(const GroupData& g, std::span<const Rational> coords) {
  if (static_cast<int>(coords.size()) != g.coords)
    throw std::invalid_argument("coordinate count does not match the group data");
  Rational acc;
  for (int i = 0; i < g.coords; ++i) acc += coords[i] * (coords[i] + g.rho2[i]);
  return g.gram * acc;
}

Rational casimir_from_roots(const GroupData& g, std::span<const long long> coords) {
  std::vector<Rational> c(coords.begin(), coords.end());
  return casimir_from_roots(g, std::span<const Rational>(c));
}

Rational gram_from_adjoint_anchor(const GroupData& g) {
  std::vector<Rational> hw(g.coords, Rational(0));
  switch (g.family) {
    case GroupData::Family::so_odd:
    case GroupData::Family::so_even:
      if (g.coords < 2) throw std::invalid_argument("rank too small for adjoint anchor");
      hw[0] = 1;
      hw[1] = 1;
      break;
    case GroupData::Family::su:
      hw[0] = 1;
      hw[g.coords - 1] = -1;
      break;
    case GroupData::Family::su_reductive_center:
      throw std::invalid_argument("adjoint anchor needs a semisimple family");
  }
  Rational acc;
  for (int i = 0; i < g.coords; ++i) acc += hw[i] * (hw[i] + g.rho2[i]);
  HOMSPEC_CHECK(!acc.is_zero(), "degenerate adjoint pairing");
  return Rational(1) / acc;
}

}  // namespace homspec
