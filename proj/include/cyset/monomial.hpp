#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyset/arith.hpp"
#include "cyset/cycle_set.hpp"
#include "cyset/permutation.hpp"

namespace cyset {

using ExponentVector = std::vector<Exponent>;

/// An element of the monomial representation, stored as its D*P
/// decomposition: row i holds q^cp[i] in column perm(i). The indeterminate q
/// itself is never materialised.
struct MonomialElement {
  ExponentVector cp;
  Permutation perm;

  static MonomialElement identity(std::size_t n);

  std::size_t size() const noexcept { return cp.size(); }
  /// Length over S u S^-1: the sum of |cp_i|.
  Exponent length() const;
  /// Every exponent is non-negative, i.e. the element lies in the monoid.
  bool is_positive() const noexcept;
  bool is_diagonal() const noexcept { return perm.is_identity(); }

  /// "cp=(2,1,1,0) perm=(12)", one-based cycles.
  std::string to_string() const;

  friend bool operator==(const MonomialElement&, const MonomialElement&) = default;
  friend auto operator<=>(const MonomialElement&, const MonomialElement&) = default;
};

/// Image of generator s_i: cp = e_i, perm = psi(s_i).
MonomialElement theta(const CycleSet& s, Index i);

/// result_i = c_{sigma(i)}: the exponent vector of P_sigma D P_sigma^-1.
ExponentVector conjugate_cp(const Permutation& sigma, std::span<const Exponent> c);

/// cp(ab) = cp(a) + conj(psi(a), cp(b)), psi(ab) = psi(b) o psi(a).
MonomialElement multiply(const MonomialElement& a, const MonomialElement& b);
MonomialElement inverse(const MonomialElement& g);
/// Matrix transpose; cp of the result is the column exponent vector of g.
MonomialElement transpose(const MonomialElement& g);
/// g^k for k >= 0 by repeated squaring.
MonomialElement power(const MonomialElement& g, std::uint64_t k);

/// Dense n x n pattern: entry (i, perm(i)) = cp_i, every other entry empty.
using NaiveMatrix = std::vector<std::vector<std::optional<Exponent>>>;

NaiveMatrix naive_matrix(const MonomialElement& g);
/// Schoolbook product of two monomial patterns (q^a * q^b = q^(a+b)).
/// Throws std::logic_error if a result entry would be a sum of several terms.
NaiveMatrix naive_product(const NaiveMatrix& a, const NaiveMatrix& b);
/// Inverse of naive_matrix; throws Error(NotAPermutation) on a non-monomial pattern.
MonomialElement from_naive_matrix(const NaiveMatrix& m);

}  // namespace cyset
