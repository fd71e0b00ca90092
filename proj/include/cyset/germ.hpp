#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyset/calculus.hpp"
#include "cyset/cycle_set.hpp"
#include "cyset/monomial.hpp"

namespace cyset {

struct ClassChecks {
  bool ot_divides_d = true;       // o(T) | d
  bool d_divides_group = true;    // d | #G
  bool group_divides_dn = true;   // #G | d^n
  bool same_primes = true;        // d and #G have the same prime divisors
  bool d_divides_factorial = true;  // d | n!

  bool all() const noexcept {
    return ot_divides_d && d_divides_group && group_divides_dn && same_primes && d_divides_factorial;
  }
};

struct ClassReport {
  std::uint64_t d = 1;
  std::vector<std::uint64_t> per_generator;  // d_s, minimal with psi(s^[d_s]) = id
  std::uint64_t o_t = 1;
  std::uint64_t g_order = 1;
  ClassChecks checks;
};

/// Minimal k >= 1 with psi(s_i^[k]) = id.
std::uint64_t generator_class(const CycleSet& s, Index i);
/// Lcm of the generator classes, without the group computations.
std::uint64_t class_of(const CycleSet& s);
ClassReport dehornoy_class(const CycleSet& s);

/// Residues in [0, modulus) next to the permutation part.
struct GermElement {
  ExponentVector cp;
  Permutation perm;

  std::string to_string() const;
  friend bool operator==(const GermElement&, const GermElement&) = default;
  friend auto operator<=>(const GermElement&, const GermElement&) = default;
};

inline constexpr std::uint64_t kDefaultGermCap = 10'000'000;

struct GermClosure {
  std::uint64_t size = 0;  // elements reached (all of them when no conflict)
  /// Two elements with equal residues and different permutations, if found;
  /// the closure stops at the first one.
  std::optional<std::pair<GermElement, GermElement>> conflict;

  bool permutation_free() const noexcept { return !conflict; }
};

/// The finite quotient G/G^[d], or G/G^[m] for a multiple m of the class.
class Germ {
 public:
  /// Uses the class d of s. A modulus override must be a positive multiple
  /// of d (Error(InvalidModulus) otherwise).
  explicit Germ(CycleSet s, std::optional<Exponent> modulus = std::nullopt);
  /// Germ of an arbitrary table at a given modulus; no class is computed,
  /// so the table need not be a cycle set (used to exhibit non-germs).
  static Germ unchecked(CycleSet s, Exponent modulus);

  const CycleSet& cycle_set() const noexcept { return s_; }
  Exponent modulus() const noexcept { return d_; }
  std::size_t size() const noexcept { return s_.size(); }
  /// d^n; Error(Overflow) if it does not fit.
  std::uint64_t order() const;

  GermElement identity() const;
  GermElement generator(Index i) const;
  /// Throws Error(InvalidModulus) for residues outside [0, d).
  GermElement make_element(ExponentVector cp, Permutation perm) const;
  GermElement multiply(const GermElement& a, const GermElement& b) const;
  GermElement inverse(const GermElement& g) const;
  GermElement project(const MonomialElement& g) const;
  /// The unique germ element with the given residues (lifted through the
  /// monoid element with that cp).
  GermElement from_residues(std::span<const Exponent> residues) const;
  GermElement from_word(const Word& word) const;
  GermElement pi(const PiTuple& tuple) const;

  /// Closure of the generators under right multiplication.
  GermClosure closure(std::uint64_t cap = kDefaultGermCap) const;
  /// All d^n elements sorted by residue vector. Error(CapExceeded) above the
  /// cap; Error(NonDegeneracyViolation) if two elements share residues.
  std::vector<GermElement> enumerate(std::uint64_t cap = kDefaultGermCap) const;
  /// Visits the elements in the same order as enumerate() without storing them.
  void for_each(const std::function<void(const GermElement&)>& visit,
                std::uint64_t cap = kDefaultGermCap) const;

 private:
  Germ(CycleSet s, Exponent modulus, bool);
  CycleSet s_;
  Exponent d_ = 1;
};

bool is_permutation_free(const Germ& germ, std::uint64_t cap = kDefaultGermCap);

/// Signed-residue length: sum of |l_d(c_i)| with l_d(k) = k for 2k <= d,
/// k - d otherwise.
Exponent germ_length(std::span<const Exponent> residues, Exponent d);

struct ExchangeResult {
  bool applicable = false;               // s t_1 ... t_k is not reduced
  std::optional<std::size_t> omitted;    // an index i that works (zero-based)

  bool passed() const noexcept { return !applicable || omitted.has_value(); }
};

/// Checks the exchange property for prefix (t_1..t_k) and generator s. A tuple
/// is reduced when every generator occurs fewer than d times in it; the
/// prefix must be reduced (Error(NotReduced)).
ExchangeResult exchange_check(const Germ& germ, const PiTuple& prefix, Index s);

/// The cycle set on S^[k]: psi_k(s_i) = psi(s_i^[k]).
CycleSet retraction(const CycleSet& s, std::uint64_t k);

struct ClassBounds {
  std::uint64_t a_n = 0;           // closed form
  std::uint64_t a_n_brute = 0;     // max product over partitions into distinct parts
  std::uint64_t landau_g = 0;      // max lcm over all partitions
  std::uint64_t factorial_bound = 0;  // n!, 0 if it overflows
};

std::uint64_t max_distinct_product_closed_form(unsigned n);
std::uint64_t max_distinct_product_brute_force(unsigned n);
std::uint64_t landau(unsigned n);
/// Error(IndexOutOfRange) for n < 2.
ClassBounds class_bounds(unsigned n);

struct ConjectureReport {
  std::uint64_t d = 1;
  std::uint64_t g_order = 1;
  bool indecomposable = false;
  bool square_free = false;
  bool abelian = false;
  std::uint64_t a_n = 0;

  bool indecomposable_d_le_n = true;        // conjectured
  bool d_le_a_n = true;                     // conjectured
  bool squarefree_abelian_d_le_a_n = true;  // proved
  bool same_primes = true;                  // proved
  bool indecomposable_n_divides_group = true;  // proved
  ClassChecks checks;

  /// Names of failed checks; conjectural ones are prefixed "conjecture:".
  std::vector<std::string> violations() const;
};

ConjectureReport conjecture_report(const CycleSet& s);

}  // namespace cyset
