#pragma once

#include <utility>
#include <vector>

#include "cyset/cycle_set.hpp"
#include "cyset/monomial.hpp"

namespace cyset {

/// Ordered tuple of generator indices (t_1, ..., t_k), zero-based.
using PiTuple = std::vector<Index>;
/// Positive word over the generators, zero-based letters.
using Word = std::vector<Index>;

/// Omega_k(t_1, ..., t_k) evaluated through the representation:
/// psi(Pi_{k-1}(t_1..t_{k-1})) applied to t_k. Throws Error(EmptyTuple).
Index omega(const CycleSet& s, const PiTuple& tuple);

/// Omega_k evaluated from its defining double recursion
/// Omega_k(x) = Omega_{k-1}(x_1..x_{k-1}) * Omega_{k-1}(x_1..x_{k-2}, x_k),
/// memoised on (prefix length, last entry). Kept as an oracle for omega().
Index omega_recursive(const CycleSet& s, const PiTuple& tuple);

/// Pi_k(t_1, ..., t_k) = Omega_1(t_1) Omega_2(t_1,t_2) ... Omega_k(t_1..t_k).
/// The empty tuple gives the identity.
MonomialElement pi(const CycleSet& s, const PiTuple& tuple);

/// Product of the generator images along the word, left to right.
MonomialElement word_to_element(const CycleSet& s, const Word& word);

/// A tuple whose Pi equals the word, built left to right by inverting
/// s -> Omega_j(t_1, ..., t_{j-1}, s) at each letter.
PiTuple pi_expression(const CycleSet& s, const Word& word);

/// Equality in the structure monoid: the cp vectors (letter counts of any
/// Pi-expression) coincide.
bool words_equal(const CycleSet& s, const Word& w1, const Word& w2);
/// Equality in the germ of the given modulus: counts agree mod d.
bool germ_words_equal(const CycleSet& s, const Word& w1, const Word& w2, Exponent modulus);

/// s_i^[k]: for k >= 0 the product s T(s) ... T^{k-1}(s); for k < 0 the
/// inverse of t^[|k|] with t = T^{-|k|}(s). cp = k e_i in every case.
MonomialElement bracket_power(const CycleSet& s, Index i, Exponent k);
/// Only the permutation part psi(s_i^[k]) for k >= 0, without exponents.
Permutation bracket_permutation(const CycleSet& s, Index i, std::uint64_t k);

/// The cycle set carried by the transposed generators: index j holds the
/// transpose of s_{T^-1(j)}, so psi^t(s_j) = psi(s_{T^-1(j)})^-1.
/// Requires a valid cycle set (T bijective).
CycleSet transposed_cycle_set(const CycleSet& s);

/// Unique monoid element with the given non-negative cp (Pi over the
/// canonical tuple: c_1 copies of 1, then c_2 copies of 2, ...).
/// Throws Error(NegativeExponent).
MonomialElement cp_to_element(const CycleSet& s, std::span<const Exponent> c);

/// Unique monoid element whose column exponents (cp of its transpose) are c.
MonomialElement column_cp_to_element(const CycleSet& s, std::span<const Exponent> c);

struct Fraction {
  MonomialElement f;
  MonomialElement h;
};

/// g = f h^-1 with f, h positive, cp(f) = max(cp(g), 0) and
/// length(f) + length(h) = length(g).
Fraction left_fraction(const CycleSet& s, const MonomialElement& g);
/// g = f^-1 h with f, h positive and length(f) + length(h) = length(g);
/// the mirror of left_fraction through the transposed cycle set.
Fraction right_fraction(const CycleSet& s, const MonomialElement& g);

}  // namespace cyset
