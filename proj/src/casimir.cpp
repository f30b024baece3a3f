#include "homspec/casimir.hpp"

#include <stdexcept>

#include "homspec/root_data.hpp"
#include "homspec/weight.hpp"

namespace homspec {

namespace {

void require_length(size_t got, size_t want, const char* what) {
  if (got != want)
    throw std::invalid_argument(std::string(what) + ": wrong coordinate count");
}

}  // namespace

Rational casimir_scalar_so_odd(int n, std::span<const long long> a) {
  require_length(a.size(), static_cast<size_t>(n), "casimir_scalar_so_odd");
  if (!dominant_so_odd(a))
    throw std::invalid_argument("casimir_scalar_so_odd: weight not dominant");
  Integer acc = 0;
  for (int i = 1; i <= n; ++i) {
    Integer ai(static_cast<long>(a[i - 1]));
    acc += ai * (ai + 2 * (n - i) + 1);
  }
  return Rational(acc, Integer(4L * n - 2));
}

Rational casimir_scalar_so_even_ambient(int n, std::span<const long long> b) {
  require_length(b.size(), static_cast<size_t>(n), "casimir_scalar_so_even_ambient");
  if (!dominant_so_even(b))
    throw std::invalid_argument("casimir_scalar_so_even_ambient: weight not dominant");
  Integer acc = 0;
  for (int i = 1; i <= n; ++i) {
    Integer bi(static_cast<long>(b[i - 1]));
    acc += bi * (bi + 2 * (n - i));
  }
  return Rational(acc, Integer(4L * n - 2));
}

Rational casimir_scalar_so_even(int n, std::span<const long long> b) {
  Rational ambient = casimir_scalar_so_even_ambient(n, b);
  return ambient / killing_rescale_so(n);
}

Rational casimir_scalar_su(int m, std::span<const Rational> a) {
  require_length(a.size(), static_cast<size_t>(m), "casimir_scalar_su");
  if (!coord_sum(a).is_zero())
    throw std::invalid_argument("casimir_scalar_su: coordinates must sum to zero");
  if (!dominant_su(a))
    throw std::invalid_argument("casimir_scalar_su: weight not dominant");
  Rational acc;
  for (int i = 1; i <= m; ++i) acc += a[i - 1] * (a[i - 1] - Rational(2L * i));
  return acc / Rational(2L * m);
}

std::vector<Rational> center_shift_to_su_sub(int n, std::span<const Rational> b) {
  require_length(b.size(), static_cast<size_t>(2 * n + 1), "center_shift_to_su_sub");
  Rational shift = b[2 * n] / Rational(2L * n);
  std::vector<Rational> out;
  out.reserve(2 * n);
  for (int j = 0; j < 2 * n; ++j) out.push_back(b[j] + shift);
  return out;
}

Rational casimir_scalar_k_reductive_ambient(int n, std::span<const Rational> b) {
  require_length(b.size(), static_cast<size_t>(2 * n + 1), "casimir_scalar_k_reductive_ambient");
  if (!coord_sum(b).is_zero())
    throw std::invalid_argument("k casimir: coordinates must sum to zero");
  for (size_t i = 1; i + 1 < b.size(); ++i)
    if (b[i - 1] < b[i])
      throw std::invalid_argument("k casimir: weight not dominant for s(u(2n)+u(1))");
  std::vector<Rational> shifted = center_shift_to_su_sub(n, b);
  Rational lambda_sub = casimir_scalar_su(2 * n, shifted);
  return killing_rescale_su(n) * lambda_sub + b[2 * n] * b[2 * n] / Rational(4L * n);
}

}  // namespace homspec
