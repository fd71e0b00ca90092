#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cyset {

/// Zero-based point index. Text I/O and reported witnesses are one-based.
using Index = std::uint32_t;

/// A bijection of {0, ..., n-1} stored in one-line notation.
///
/// Composition follows the functional convention: compose(a, b)(x) = a(b(x)),
/// so b is applied first.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t n);
  /// Throws Error(NotAPermutation) unless images is a bijection of 0..n-1.
  static Permutation from_images(std::vector<Index> images);
  /// One-based one-line notation, as written in .cys rows.
  static Permutation from_one_line(std::span<const long long> one_based);
  /// Cycle notation such as "(1234)(56)" or "id". Points are one-based;
  /// for n >= 10 points inside a cycle must be separated by spaces or commas.
  static Permutation from_cycles(std::size_t n, std::string_view cycles);

  std::size_t size() const noexcept { return images_.size(); }
  Index operator()(Index x) const { return images_[x]; }
  std::span<const Index> images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  /// Order in the symmetric group (lcm of cycle lengths).
  std::uint64_t order() const;
  /// Disjoint cycles of length >= 2, each starting at its smallest point,
  /// sorted by first point.
  std::vector<std::vector<Index>> cycles() const;

  /// One-based cycle notation, "id" for the identity.
  std::string to_cycle_string() const;
  /// One-based one-line notation, space separated.
  std::string to_one_line() const;

  friend Permutation compose(const Permutation& outer, const Permutation& inner);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<Index> images) : images_(std::move(images)) {}

  std::vector<Index> images_;
};

/// (outer o inner)(x) = outer(inner(x)).
Permutation compose(const Permutation& outer, const Permutation& inner);

}  // namespace cyset
