#pragma once

#include <span>
#include <vector>

#include "homspec/rational.hpp"

namespace homspec {

/// Root data for the group families in play, with an explicit choice of
/// invariant-form normalization on the epsilon basis. The inner product on the
/// weight space is diagonal in every basis used here, so a single rational
/// `gram` value (the common diagonal entry of B*) is enough.
struct GroupData {
  enum class Family { so_odd, so_even, su, su_reductive_center };

  Family family;
  int n;                                   // rank parameter as used by the closed forms
  int coords;                              // torus coordinate count
  Rational gram;                           // diagonal of B* on the epsilon basis
  std::vector<Rational> rho2;              // 2*rho, epsilon coordinates
  std::vector<std::vector<int>> positive_roots;

  /// so(2n+1) with its own Killing normalization: gram = 1/(4n-2).
  static GroupData so_odd(int n);
  /// so(2n) with its own Killing normalization: gram = 1/(4n-4).
  static GroupData so_even_intrinsic(int n);
  /// so(2n) inside so(2n+1): ambient normalization, gram = 1/(4n-2).
  static GroupData so_even_ambient(int n);
  /// su(m) with its own Killing normalization: gram = 1/(2m), m coordinates.
  static GroupData su(int m);
  /// su(2n) inside su(2n+1): ambient normalization, gram = 1/(4n+2), 2n coordinates.
  static GroupData su_sub_ambient(int n);
  /// s(u(2n)+u(1)) inside su(2n+1): ambient normalization, 2n+1 coordinates,
  /// roots of the semisimple part only.
  static GroupData k_reductive_ambient(int n);
};

/// Constant c with B_{so(2n)} = c * B_{so(2n+1)} restricted: (2n-2)/(2n-1).
Rational killing_rescale_so(int n);
/// Constant c with B_{su(2n)} = c * B_{su(2n+1)} restricted: 2n/(2n+1).
Rational killing_rescale_su(int n);

/// Casimir scalar via B*(L, L+2rho) computed from the stored root data.
/// For sum-zero bases the diagonal extension of B* is used, which agrees with
/// the intrinsic form on sum-zero functionals.
Rational casimir_from_roots(const GroupData& g, std::span<const Rational> coords);
Rational casimir_from_roots(const GroupData& g, std::span<const long long> coords);

/// Derives the gram constant from the normalization anchor: the adjoint
/// representation has Casimir scalar 1. Only for the semisimple families.
Rational gram_from_adjoint_anchor(const GroupData& g);

}  // namespace homspec
