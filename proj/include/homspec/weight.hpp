#pragma once

#include <span>
#include <string>
#include <vector>

#include "homspec/rational.hpp"

namespace homspec {

/// Epsilon-coordinate basis a weight is written in.
enum class Basis {
  so_odd,   // B_n torus, n coordinates
  so_even,  // D_n torus (same coordinates as the ambient so_odd), n coordinates
  su_full,  // su(m) torus with m coordinates summing to zero
  su_sub,   // su(2n) torus inside su(2n+1), 2n coordinates summing to zero
};

std::string basis_name(Basis b);

struct Weight {
  Basis basis;
  std::vector<Rational> coords;

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.basis == b.basis && a.coords == b.coords;
  }
  friend bool operator<(const Weight& a, const Weight& b) {
    if (a.basis != b.basis) return a.basis < b.basis;
    return a.coords < b.coords;
  }
};

/// Subtracts the coordinate mean so the result sums to zero. Idempotent.
std::vector<Rational> project_sum_zero(std::span<const long long> v);
std::vector<Rational> project_sum_zero(std::span<const Rational> v);

bool weakly_decreasing(std::span<const long long> v);
bool weakly_decreasing(std::span<const Rational> v);

/// a_1 >= ... >= a_n >= 0, integers.
bool dominant_so_odd(std::span<const long long> a);
/// b_1 >= ... >= b_{n-1} >= |b_n|.
bool dominant_so_even(std::span<const long long> b);
/// Weakly decreasing, pairwise-integral differences, coordinates summing to zero.
bool dominant_su(std::span<const Rational> a);

Rational coord_sum(std::span<const Rational> v);

std::string coords_str(std::span<const long long> v);
std::string coords_str(std::span<const Rational> v);

}  // namespace homspec
