#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyset/permutation.hpp"

namespace cyset {

/// A table of n permutations psi[i] = psi(s_i) on {0..n-1}, read as the
/// binary operation s_i * s_j = s_{psi[i](j)}.
///
/// Construction only checks that every row is a permutation; the cycle-set
/// law is checked by validate(). Operations documented as requiring a valid
/// cycle set do not re-check it.
class CycleSet {
 public:
  CycleSet() = default;
  /// Throws Error(DimensionMismatch) if a row has the wrong degree.
  explicit CycleSet(std::vector<Permutation> psi);

  /// Rows in zero-based one-line notation. Throws Error(NotAPermutation)
  /// naming the first (one-based) offending row.
  static CycleSet from_table(const std::vector<std::vector<Index>>& rows);
  /// Rows in cycle notation, e.g. {"(1234)", "(1432)", "(24)", "(13)"}.
  static CycleSet from_cycles(const std::vector<std::string>& rows);

  static CycleSet trivial(std::size_t n);
  /// psi(s_i) = (1 2 ... n) for every i.
  static CycleSet cyclic(std::size_t n);

  std::size_t size() const noexcept { return psi_.size(); }
  const Permutation& psi(Index i) const { return psi_.at(i); }
  const std::vector<Permutation>& rows() const noexcept { return psi_; }
  Index star(Index i, Index j) const { return psi_[i](j); }

  friend bool operator==(const CycleSet&, const CycleSet&) = default;
  friend auto operator<=>(const CycleSet&, const CycleSet&) = default;

 private:
  std::vector<Permutation> psi_;
};

/// First failing triple of the cycle-set law, zero-based.
/// left = (s_i*s_j)*(s_i*s_u), right = (s_j*s_i)*(s_j*s_u).
struct LawWitness {
  Index i, j, u;
  Index left, right;

  /// "i j u: left vs right", one-based.
  std::string to_string() const;
  friend bool operator==(const LawWitness&, const LawWitness&) = default;
};

struct ValidationResult {
  std::optional<LawWitness> witness;

  bool valid() const noexcept { return !witness.has_value(); }
  explicit operator bool() const noexcept { return valid(); }
};

/// Checks the cycle-set law on all n^3 triples, reporting the
/// lexicographically first failure.
ValidationResult validate(const CycleSet& s);
/// Same, starting from a raw zero-based table (rows are checked first).
ValidationResult validate(const std::vector<std::vector<Index>>& rows);

struct DiagonalInfo {
  Permutation t;           // T(i) = psi(s_i)(i)
  std::uint64_t order;     // o(T)
  bool square_free;        // T = id
};

/// Throws Error(NonDegeneracyViolation) when i -> psi(s_i)(i) is not
/// injective; that cannot happen for a valid finite cycle set.
DiagonalInfo diagonal_map(const CycleSet& s);

struct PermGroupInfo {
  std::uint64_t order = 1;
  bool abelian = true;
  bool transitive = true;
  std::vector<std::vector<Index>> orbits;
  /// Sorted element list; left empty when the order exceeds the element cap.
  std::optional<std::vector<Permutation>> elements;
};

inline constexpr std::uint64_t kDefaultElementCap = 1'000'000;

/// The subgroup of S_n generated by the rows. The order is exact (computed
/// from a stabiliser chain); elements are materialised only below the cap.
PermGroupInfo perm_group(const CycleSet& s, std::uint64_t element_cap = kDefaultElementCap);

/// Orbits of the group generated by the given permutations, each sorted,
/// ordered by smallest point.
std::vector<std::vector<Index>> orbits_of(std::size_t n, const std::vector<Permutation>& gens);

/// Order of the group generated by gens (Schreier-Sims).
std::uint64_t group_order(std::size_t n, const std::vector<Permutation>& gens);

struct Component {
  std::vector<Index> orbit;   // original indices, increasing
  CycleSet induced;           // relabelled 0..|orbit|-1 in orbit order
};

/// One component per orbit of the permutation group; a single component
/// means the cycle set is indecomposable.
std::vector<Component> decompose(const CycleSet& s);

/// Parses the .cys text format: n, then n rows of one-based images.
/// '#' starts a comment and blank lines are ignored.
CycleSet parse_cys(std::string_view text);
/// Parses every block of a stream of .cys blocks (a census file body).
/// Lines of the form key=value or "hist a=b" are skipped.
std::vector<CycleSet> parse_cys_blocks(std::string_view text);
/// Canonical .cys text: n on the first line, one row per line, trailing newline.
std::string format_cys(const CycleSet& s);

/// Human-readable "psi(s_1)=(1234) ..." summary.
std::string describe(const CycleSet& s);

}  // namespace cyset
