#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyset/calculus.hpp"
#include "cyset/error.hpp"
#include "cyset/garside.hpp"
#include "oracles.hpp"

using namespace cyset;

namespace {

CycleSet ex1() { return CycleSet::from_cycles({"(1234)", "(1432)", "(24)", "(13)"}); }

std::vector<oracle::Table> small_sets(unsigned max_n) {
  std::vector<oracle::Table> out;
  for (unsigned n = 1; n <= max_n; ++n)
    for (auto& t : oracle::all_cycle_sets(n)) out.push_back(std::move(t));
  return out;
}

MonomialElement random_monoid(std::mt19937_64& rng, const CycleSet& s, std::size_t max_len) {
  Word w(rng() % (max_len + 1));
  for (auto& x : w) x = static_cast<Index>(rng() % s.size());
  return word_to_element(s, w);
}

// Every monoid element of length <= len, from all words.
std::set<MonomialElement> monoid_ball(const CycleSet& s, std::size_t len) {
  std::set<MonomialElement> out{MonomialElement::identity(s.size())};
  std::vector<MonomialElement> layer{MonomialElement::identity(s.size())};
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<MonomialElement> next;
    for (const auto& g : layer)
      for (Index i = 0; i < s.size(); ++i) {
        auto h = multiply(g, theta(s, i));
        if (out.insert(h).second) next.push_back(h);
      }
    layer = std::move(next);
  }
  return out;
}

// Div(g) and Div_r(g) from the definition: h | g iff h^-1 g (resp. g h^-1)
// lies in the monoid.
std::pair<std::set<MonomialElement>, std::set<MonomialElement>> divisor_sets(const CycleSet& s,
                                                                               const MonomialElement& g) {
  std::set<MonomialElement> left, right;
  for (const auto& h : monoid_ball(s, static_cast<std::size_t>(g.length()))) {
    if (multiply(inverse(h), g).is_positive()) left.insert(h);
    if (multiply(g, inverse(h)).is_positive()) right.insert(h);
  }
  return {left, right};
}

}  // namespace

TEST_CASE("divisibility: 2x2 example") {
  const auto s = CycleSet::from_cycles({"(12)", "(12)"});
  const MonomialElement g1{{3, 0}, Permutation::from_cycles(2, "(12)")};
  const MonomialElement g2{{4, 0}, Permutation::identity(2)};
  CHECK(g1 == word_to_element(s, {0, 1, 0}));  // reachable in the monoid
  CHECK(left_divides(g1, g2));
  CHECK_FALSE(right_divides(g1, g2));
  CHECK(left_divides(g1, g1));
  CHECK(right_divides(g1, g1));
  CHECK_THROWS_AS(left_divides(inverse(g1), g2), Error);
}

TEST_CASE("divisibility agrees with solving g1 h = g2") {
  std::mt19937_64 rng(31);
  const auto sets = small_sets(4);
  for (int trial = 0; trial < 800; ++trial) {
    const auto s = oracle::set_of(sets[rng() % sets.size()]);
    const auto a = random_monoid(rng, s, 4), b = random_monoid(rng, s, 6);
    CHECK(left_divides(a, b) == multiply(inverse(a), b).is_positive());
    CHECK(right_divides(a, b) == multiply(b, inverse(a)).is_positive());
  }
}

TEST_CASE("gcd and lcm: examples") {
  const auto s = ex1();
  const auto p13 = pi(s, {0, 2}), p12 = pi(s, {0, 1}), p24 = pi(s, {1, 3});
  CHECK(gcd_left(s, p13, p12).cp == ExponentVector{1, 0, 0, 0});
  CHECK(gcd_left(s, p13, p12) == pi(s, {0}));
  CHECK(lcm_left(s, p13, p24) == delta(s, 1));
  CHECK(lcm_left(s, p13, p24).cp == ExponentVector{1, 1, 1, 1});
  CHECK(gcd_left(s, p13, p13) == p13);
  CHECK(lcm_left(s, p13, p13) == p13);
  CHECK(gcd_right(s, p13, p13) == p13);
}

TEST_CASE("lattice laws on random monoid elements") {
  std::mt19937_64 rng(32);
  const auto sets = small_sets(4);
  for (int trial = 0; trial < 400; ++trial) {
    const auto s = oracle::set_of(sets[rng() % sets.size()]);
    const auto a = random_monoid(rng, s, 5), b = random_monoid(rng, s, 5), c = random_monoid(rng, s, 5);
    for (bool left : {true, false}) {
      auto gcd = [&](const auto& x, const auto& y) { return left ? gcd_left(s, x, y) : gcd_right(s, x, y); };
      auto lcm = [&](const auto& x, const auto& y) { return left ? lcm_left(s, x, y) : lcm_right(s, x, y); };
      auto divides = [&](const auto& x, const auto& y) { return left ? left_divides(x, y) : right_divides(x, y); };
      CHECK(gcd(a, b) == gcd(b, a));
      CHECK(lcm(a, b) == lcm(b, a));
      CHECK(gcd(gcd(a, b), c) == gcd(a, gcd(b, c)));
      CHECK(lcm(lcm(a, b), c) == lcm(a, lcm(b, c)));
      CHECK(gcd(a, a) == a);
      CHECK(divides(gcd(a, b), a));
      CHECK(divides(gcd(a, b), b));
      CHECK(divides(a, lcm(a, b)));
      CHECK(divides(b, lcm(a, b)));
      if (divides(c, a) && divides(c, b)) CHECK(divides(c, gcd(a, b)));
      if (divides(a, c) && divides(b, c)) CHECK(divides(lcm(a, b), c));
    }
    // cancellativity
    if (multiply(a, b) == multiply(a, c)) CHECK(b == c);
    if (multiply(b, a) == multiply(c, a)) CHECK(b == c);
  }
}

TEST_CASE("delta and its divisors") {
  const auto s = ex1();
  const auto d1 = delta(s, 1);
  CHECK(d1.cp == ExponentVector{1, 1, 1, 1});
  CHECK(d1 == pi(s, {0, 1, 2, 3}));
  CHECK(delta(s, 2) == multiply(d1, d1));
  CHECK(delta(CycleSet::trivial(3), 1).is_diagonal());
  CHECK_THROWS_AS(delta(s, 0), Error);

  const auto divs = divisors_of_delta(s);
  CHECK(divs.size() == 16);
  for (const auto& g : divs) {
    CHECK(left_divides(g, d1));
    CHECK(right_divides(g, d1));
  }
  for (Index i = 0; i < 4; ++i) CHECK(std::find(divs.begin(), divs.end(), theta(s, i)) != divs.end());
  CHECK(divisors_of_delta(CycleSet::trivial(2)).size() == 4);
  CHECK_THROWS_AS(divisors_of_delta(s, 3), Error);
  const auto [left, right] = divisor_sets(s, d1);
  CHECK(left == std::set<MonomialElement>(divs.begin(), divs.end()));
  CHECK(right == left);
}

TEST_CASE("balanced elements") {
  for (const auto& t : small_sets(3)) {
    const auto s = oracle::set_of(t);
    for (Exponent k = 1; k <= 3; ++k) {
      const auto r = is_balanced(s, delta(s, k));
      CHECK(r.exact);
      CHECK(r.balanced);
      CHECK(r.rows_match_columns);
    }
    CHECK(is_balanced(s, MonomialElement::identity(t.size())).balanced);
  }
  std::mt19937_64 rng(33);
  const auto sets = small_sets(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = oracle::set_of(sets[rng() % sets.size()]);
    const auto g = random_monoid(rng, s, 4);
    const auto r = is_balanced(s, g);
    const auto [left, right] = divisor_sets(s, g);
    CHECK(r.exact);
    CHECK(r.balanced == (left == right));
    const auto ld = left_divisors(s, g), rd = right_divisors(s, g);
    CHECK(std::set<MonomialElement>(ld.begin(), ld.end()) == left);
    CHECK(std::set<MonomialElement>(rd.begin(), rd.end()) == right);
  }
  // a generator has the divisors {1, s} on both sides
  for (const auto& t : small_sets(3)) {
    const auto s = oracle::set_of(t);
    for (Index i = 0; i < t.size(); ++i) CHECK(is_balanced(s, theta(s, i)).balanced);
  }
  // equal row and column exponents do not force balance: s_2 s_1 in
  // <s_1, s_2 | s_1^2 = s_2^2> is diagonal, yet Div = {1, s_2, g} and
  // Div_r = {1, s_1, g}
  const auto s = CycleSet::from_cycles({"(12)", "(12)"});
  const auto g = word_to_element(s, {1, 0});
  const auto r = is_balanced(s, g);
  CHECK(g.is_diagonal());
  CHECK(r.rows_match_columns);
  CHECK_FALSE(r.balanced);
  const auto [left, right] = divisor_sets(s, g);
  CHECK(left.count(theta(s, 1)));
  CHECK_FALSE(right.count(theta(s, 1)));
  const auto big = is_balanced(ex1(), delta(ex1(), 40), 1000);
  CHECK_FALSE(big.exact);
  CHECK(big.rows_match_columns);
}
