#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyset/error.hpp"
#include "cyset/monomial.hpp"
#include "oracles.hpp"

using namespace cyset;

namespace {

MonomialElement element(ExponentVector cp, std::string_view cycles) {
  const auto n = cp.size();
  return {std::move(cp), Permutation::from_cycles(n, cycles)};
}

}  // namespace

TEST_CASE("theta") {
  const auto c3 = CycleSet::cyclic(3);
  const auto t = theta(c3, 0);
  CHECK(t.cp == ExponentVector{1, 0, 0});
  CHECK(t.perm.to_cycle_string() == "(123)");
  const auto pattern = naive_matrix(t);
  CHECK(pattern[0][1] == 1);
  CHECK(pattern[1][2] == 0);
  CHECK(pattern[2][0] == 0);
  CHECK_FALSE(pattern[0][0].has_value());
  const auto ex1 = CycleSet::from_cycles({"(1234)", "(1432)", "(24)", "(13)"});
  CHECK(theta(ex1, 2) == element({0, 0, 1, 0}, "(24)"));
  CHECK(theta(CycleSet::trivial(3), 1) == element({0, 1, 0}, "id"));
  CHECK_THROWS_AS(theta(c3, 3), Error);
}

TEST_CASE("conjugate_cp") {
  const auto sigma = Permutation::from_cycles(3, "(123)");
  CHECK(conjugate_cp(sigma, ExponentVector{1, 2, 3}) == ExponentVector{2, 3, 1});
  CHECK(conjugate_cp(Permutation::identity(3), ExponentVector{4, 5, 6}) == ExponentVector{4, 5, 6});
  CHECK(conjugate_cp(Permutation::from_cycles(3, "(13)"), ExponentVector{5, 0, 7}) == ExponentVector{7, 0, 5});
}

TEST_CASE("multiply, inverse, transpose: examples") {
  const auto a = element({1, 2, 3}, "(123)");
  const auto b = element({4, 5, 6}, "(13)");
  CHECK(multiply(a, b) == element({6, 8, 7}, "(12)"));
  CHECK(multiply(MonomialElement::identity(3), a) == a);
  const auto c3 = CycleSet::cyclic(3);
  CHECK(multiply(theta(c3, 0), theta(c3, 1)) == element({2, 0, 0}, "(132)"));
  CHECK(inverse(MonomialElement::identity(2)) == MonomialElement::identity(2));
  CHECK(inverse(element({1, 0}, "(12)")) == element({0, -1}, "(12)"));
  const auto ex1 = CycleSet::from_cycles({"(1234)", "(1432)", "(24)", "(13)"});
  const auto inv = inverse(theta(ex1, 0));
  CHECK(inv.cp == ExponentVector{0, -1, 0, 0});
  CHECK(inv.perm == Permutation::from_cycles(4, "(1432)"));
  CHECK(transpose(element({3, 1}, "id")) == element({3, 1}, "id"));
  CHECK(transpose(element({3, 0}, "(12)")) == element({0, 3}, "(12)"));
  CHECK_THROWS_AS(multiply(a, MonomialElement::identity(2)), Error);
}

TEST_CASE("oracle: naive matrix product on random pairs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const auto g = oracle::random_element(rng, n, -5, 5);
    const auto h = oracle::random_element(rng, n, -5, 5);
    const auto expected = oracle::multiply(naive_matrix(g), naive_matrix(h));
    REQUIRE(naive_matrix(multiply(g, h)) == expected);
    CHECK(naive_product(naive_matrix(g), naive_matrix(h)) == expected);
    CHECK(from_naive_matrix(naive_matrix(g)) == g);
  }
}

TEST_CASE("algebraic laws on random elements") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const auto a = oracle::random_element(rng, n, -4, 4);
    const auto b = oracle::random_element(rng, n, -4, 4);
    const auto c = oracle::random_element(rng, n, -4, 4);
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    CHECK(multiply(a, inverse(a)) == MonomialElement::identity(n));
    CHECK(multiply(inverse(a), a) == MonomialElement::identity(n));
    CHECK(transpose(transpose(a)) == a);
    CHECK(transpose(multiply(a, b)) == multiply(transpose(b), transpose(a)));
    // column exponents read from the dense pattern
    const auto m = naive_matrix(a);
    for (std::size_t col = 0; col < n; ++col)
      for (std::size_t row = 0; row < n; ++row)
        if (m[row][col]) CHECK(transpose(a).cp[col] == *m[row][col]);
    CHECK(multiply(a, b).cp == [&] {
      auto out = conjugate_cp(a.perm, b.cp);
      for (std::size_t i = 0; i < n; ++i) out[i] += a.cp[i];
      return out;
    }());
    CHECK(power(a, 3) == multiply(a, multiply(a, a)));
    CHECK(power(a, 0) == MonomialElement::identity(n));
  }
}

TEST_CASE("length is additive on the monoid") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto a = oracle::random_element(rng, n, 0, 5);
    const auto b = oracle::random_element(rng, n, 0, 5);
    CHECK(multiply(a, b).length() == a.length() + b.length());
  }
  CHECK(element({-2, 3, 0}, "id").length() == 5);
  CHECK_FALSE(element({-2, 3, 0}, "id").is_positive());
}

TEST_CASE("P_s D_{s*t} = D_t P_s on every small cycle set") {
  for (unsigned n = 1; n <= 4; ++n)
    for (const auto& t : oracle::all_cycle_sets(n)) {
      const auto s = oracle::set_of(t);
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
          ExponentVector e(n, 0);
          e[s.star(a, b)] = 1;
          ExponentVector expected(n, 0);
          expected[b] = 1;
          CHECK(conjugate_cp(s.psi(a), e) == expected);
        }
    }
}

TEST_CASE("overflow is reported") {
  const auto big = element({std::numeric_limits<Exponent>::max(), 0}, "id");
  CHECK_THROWS_AS(multiply(big, big), Error);
}
