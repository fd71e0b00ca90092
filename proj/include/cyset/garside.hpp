#pragma once

#include <vector>

#include "cyset/calculus.hpp"
#include "cyset/monomial.hpp"

namespace cyset {

// Divisibility in the structure monoid. Arguments must be positive
// elements; Error(NegativeExponent) is raised otherwise.

bool left_divides(const MonomialElement& a, const MonomialElement& b);
/// Compares column exponents, i.e. cp of the transposes.
bool right_divides(const MonomialElement& a, const MonomialElement& b);

/// Row-wise minimum of exponents.
MonomialElement gcd_left(const CycleSet& s, const MonomialElement& a, const MonomialElement& b);
/// Row-wise maximum of exponents.
MonomialElement lcm_left(const CycleSet& s, const MonomialElement& a, const MonomialElement& b);
/// Column-wise minimum, realised through the transposed cycle set.
MonomialElement gcd_right(const CycleSet& s, const MonomialElement& a, const MonomialElement& b);
/// Column-wise maximum.
MonomialElement lcm_right(const CycleSet& s, const MonomialElement& a, const MonomialElement& b);

/// Delta^k: the element with cp = (k, ..., k).
MonomialElement delta(const CycleSet& s, Exponent k = 1);

inline constexpr std::size_t kDefaultDivisorSizeCap = 20;

/// All 2^n elements with cp in {0,1}^n, in binary counting order of the
/// cp vector (position 1 least significant). Throws Error(CapExceeded)
/// above the size cap.
std::vector<MonomialElement> divisors_of_delta(const CycleSet& s,
                                               std::size_t size_cap = kDefaultDivisorSizeCap);

/// Left divisors of g, ordered like the cp box they enumerate.
std::vector<MonomialElement> left_divisors(const CycleSet& s, const MonomialElement& g);
/// Right divisors of g.
std::vector<MonomialElement> right_divisors(const CycleSet& s, const MonomialElement& g);

struct BalanceReport {
  /// cp(g) == cp(g^t). Holds for every power of Delta; it does not imply
  /// balance in general.
  bool rows_match_columns;
  /// False when the divisor box exceeded the cap; only rows_match_columns
  /// was evaluated then.
  bool exact;
  /// Div(g) == Div_r(g); meaningful only when exact.
  bool balanced;
};

inline constexpr std::uint64_t kDefaultBalanceCap = 1'000'000;

BalanceReport is_balanced(const CycleSet& s, const MonomialElement& g,
                          std::uint64_t divisor_cap = kDefaultBalanceCap);

}  // namespace cyset
