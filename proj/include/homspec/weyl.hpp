#pragma once

#include <span>

#include "homspec/rational.hpp"

namespace homspec {

/// Dimension of the so(2n+1)-irrep with highest weight sum a_i e_i.
/// Shifted-coordinate product with half-integer shifts; exact rationals
/// throughout, integrality asserted at the end.
Integer weyl_dim_so_odd(int n, std::span<const long long> a);

/// Dimension of the su(m)-irrep with highest weight a (rational coordinates,
/// pairwise-integral differences). Depends only on coordinate differences,
/// hence invariant under a uniform shift.
Integer weyl_dim_su(int m, std::span<const Rational> a);
Integer weyl_dim_su(int m, std::span<const long long> a);

}  // namespace homspec
