#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyset/cycle_set.hpp"
#include "cyset/germ.hpp"

namespace cyset {

/// (s *1 t) *2 (s *1 u) versus (t *2 s) *1 (t *2 u), zero-based.
struct MixedWitness {
  Index s, t, u;
  Index left, right;
  std::string to_string() const;
};

/// First failing triple of the mixed cycle-set equation, lexicographic.
std::optional<MixedWitness> mixed_equation_check(const CycleSet& s1, const CycleSet& s2);

struct CommuteWitness {
  Index s, t;
  std::string to_string() const;
};

/// For each generator pair checks
/// psi2(s *1 t) o psi1(s) = psi1(t *2 s) o psi2(t),
/// the permutation part of s t' = t s' in the product of the germs.
/// Error(NotCoprime) unless the classes are coprime.
std::optional<CommuteWitness> germs_commute_check(const CycleSet& s1, const CycleSet& s2);

struct ZappaResult {
  CycleSet candidate;
  ValidationResult validation;
  std::uint64_t d1 = 1, d2 = 1, d = 1;
  std::uint64_t u = 0, v = 0;  // d2 u + d1 v = 1 mod d, 0 <= u < d1, 0 <= v < d2

  bool valid() const noexcept { return validation.valid(); }
};

struct BezoutPair {
  std::uint64_t u, v;
};

/// Error(NotCoprime) unless gcd(d1, d2) = 1.
BezoutPair zappa_bezout(std::uint64_t d1, std::uint64_t d2);

/// Builds psi(s_i) = psi2(s_j^[v]) o sigma with sigma = psi1(s_i^[u]) and
/// j = sigma(i), then validates. Errors: NotCoprime, DimensionMismatch.
ZappaResult zappa_compose(const CycleSet& s1, const CycleSet& s2);
/// Same with the classes already known.
ZappaResult zappa_compose(const CycleSet& s1, std::uint64_t d1, const CycleSet& s2, std::uint64_t d2);

struct SylowFactor {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
  std::uint64_t beta = 1;  // d / prime^exponent
  CycleSet cycle_set;      // retraction by beta, of class prime^exponent

  std::uint64_t alpha() const;
};

/// One factor per prime divisor of the class, ascending. Error(TrivialClass)
/// when d = 1.
std::vector<SylowFactor> sylow_decompose(const CycleSet& s);

/// Left fold of zappa_compose in ascending prime order. Errors: NotCoprime,
/// CompositionInvalid if an intermediate candidate is not a cycle set.
CycleSet sylow_recompose(const std::vector<SylowFactor>& factors);
CycleSet sylow_recompose(const std::vector<CycleSet>& factors);

struct SylowGroupReport {
  std::vector<std::uint64_t> primes;
  std::vector<std::uint64_t> subgroup_orders;   // closure sizes
  std::vector<std::uint64_t> expected_orders;   // alpha_i^n
  bool orders_ok = true;
  bool commute_ok = true;
  std::uint64_t factored = 0;  // germ elements checked
  bool factorization_ok = true;

  bool ok() const noexcept { return orders_ok && commute_ok && factorization_ok; }
};

/// Checks the Sylow subgroups of the germ: their orders, the set
/// commutation H_i H_j = H_j H_i on generator pairs, and that every germ
/// element is an ordered product h_1 ... h_r with h_i in H_i (built by
/// splitting residues with the Chinese remainder theorem).
SylowGroupReport sylow_group_checks(const CycleSet& s, std::uint64_t cap = kDefaultGermCap);

}  // namespace cyset
