#pragma once

#include <span>
#include <vector>

#include "homspec/rational.hpp"

namespace homspec {

/// Casimir scalar of the so(2n+1)-irrep with highest weight sum a_i e_i,
/// Killing normalization: (1/(4n-2)) sum a_i (a_i + 2(n-i) + 1).
Rational casimir_scalar_so_odd(int n, std::span<const long long> a);

/// so(2n)-irrep Casimir against the ambient so(2n+1) form:
/// (1/(4n-2)) sum b_i (b_i + 2(n-i)).
Rational casimir_scalar_so_even_ambient(int n, std::span<const long long> b);

/// so(2n)-irrep Casimir in its own Killing normalization:
/// (1/(4n-4)) sum b_i (b_i + 2(n-i)).
Rational casimir_scalar_so_even(int n, std::span<const long long> b);

/// su(m)-irrep Casimir, Killing normalization, coordinates summing to zero:
/// (1/(2m)) sum a_i (a_i - 2i).
Rational casimir_scalar_su(int m, std::span<const Rational> a);

/// Center shift sending a dominant weight of s(u(2n)+u(1)) (2n+1 sum-zero
/// coordinates b) to the su(2n) weight (b_j + b_{2n+1}/(2n))_{j<=2n}.
std::vector<Rational> center_shift_to_su_sub(int n, std::span<const Rational> b);

/// Casimir of the s(u(2n)+u(1))-irrep with highest weight b against the
/// ambient su(2n+1) form: (2n/(2n+1)) lambda' + b_{2n+1}^2/(4n), where
/// lambda' is the su(2n) Casimir of the center-shifted weight.
Rational casimir_scalar_k_reductive_ambient(int n, std::span<const Rational> b);

}  // namespace homspec
