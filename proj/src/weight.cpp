#include "homspec/weight.hpp"

namespace homspec {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::so_odd: return "so_odd";
    case Basis::so_even: return "so_even";
    case Basis::su_full: return "su_full";
    case Basis::su_sub: return "su_sub";
  }
  return "?";
}

std::vector<Rational> project_sum_zero(std::span<const long long> v) {
  std::vector<Rational> r(v.begin(), v.end());
  return project_sum_zero(std::span<const Rational>(r));
}

std::vector<Rational> project_sum_zero(std::span<const Rational> v) {
  Rational sum = coord_sum(v);
  Rational shift = sum / Rational(static_cast<long long>(v.size()));
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(c - shift);
  return out;
}

bool weakly_decreasing(std::span<const long long> v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] < v[i]) return false;
  return true;
}

bool weakly_decreasing(std::span<const Rational> v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] < v[i]) return false;
  return true;
}

bool dominant_so_odd(std::span<const long long> a) {
  return weakly_decreasing(a) && (a.empty() || a.back() >= 0);
}

bool dominant_so_even(std::span<const long long> b) {
  if (b.size() < 2) return true;
  for (size_t i = 1; i + 1 < b.size(); ++i)
    if (b[i - 1] < b[i]) return false;
  long long last = b[b.size() - 1];
  long long abs_last = last < 0 ? -last : last;
  return b[b.size() - 2] >= abs_last;
}

bool dominant_su(std::span<const Rational> a) {
  if (!weakly_decreasing(a)) return false;
  if (!coord_sum(a).is_zero()) return false;
  for (size_t i = 1; i < a.size(); ++i)
    if (!(a[i - 1] - a[i]).is_integer()) return false;
  return true;
}

Rational coord_sum(std::span<const Rational> v) {
  Rational s;
  for (const auto& c : v) s += c;
  return s;
}

std::string coords_str(std::span<const long long> v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string coords_str(std::span<const Rational> v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += v[i].str();
  }
  return out;
}

}  // namespace homspec
