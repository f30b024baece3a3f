#include "homspec/weyl.hpp"

#include <stdexcept>
#include <vector>

#include "homspec/weight.hpp"

namespace homspec {

Integer weyl_dim_so_odd(int n, std::span<const long long> a) {
  if (static_cast<int>(a.size()) != n)
    throw std::invalid_argument("weyl_dim_so_odd: wrong coordinate count");
  if (!dominant_so_odd(a))
    throw std::invalid_argument("weyl_dim_so_odd: weight not dominant");
  // l_i = a_i + n - i + 1/2, m_i = n - i + 1/2; work with doubled values.
  std::vector<Integer> l2(n), m2(n);
  for (int i = 1; i <= n; ++i) {
    l2[i - 1] = Integer(static_cast<long>(2 * (a[i - 1] + n - i) + 1));
    m2[i - 1] = Integer(2L * (n - i) + 1);
  }
  Rational dim(1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j)
      dim *= Rational(l2[i] * l2[i] - l2[j] * l2[j], m2[i] * m2[i] - m2[j] * m2[j]);
    dim *= Rational(l2[i], m2[i]);
  }
  HOMSPEC_CHECK(dim.is_integer() && dim.sign() > 0, "so_odd Weyl dimension not a positive integer");
  return dim.numerator();
}

Integer weyl_dim_su(int m, std::span<const Rational> a) {
  if (static_cast<int>(a.size()) != m)
    throw std::invalid_argument("weyl_dim_su: wrong coordinate count");
  if (!weakly_decreasing(a))
    throw std::invalid_argument("weyl_dim_su: weight not dominant");
  for (int i = 1; i < m; ++i)
    if (!(a[i - 1] - a[i]).is_integer())
      throw std::invalid_argument("weyl_dim_su: coordinate differences must be integral");
  Rational dim(1);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      dim *= (a[i] - a[j] + Rational(j - i)) / Rational(j - i);
  HOMSPEC_CHECK(dim.is_integer() && dim.sign() > 0, "su Weyl dimension not a positive integer");
  return dim.numerator();
}

Integer weyl_dim_su(int m, std::span<const long long> a) {
  std::vector<Rational> r(a.begin(), a.end());
  return weyl_dim_su(m, std::span<const Rational>(r));
}

}  // namespace homspec
