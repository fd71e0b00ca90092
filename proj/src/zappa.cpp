#include "cyset/zappa.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cyset/calculus.hpp"
#include "cyset/error.hpp"

namespace cyset {

namespace {

void require_same_size(const CycleSet& a, const CycleSet& b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch, "cycle sets of sizes " + std::to_string(a.size()) +
                                                  " and " + std::to_string(b.size()));
}

void require_coprime(std::uint64_t d1, std::uint64_t d2) {
  if (gcd_u64(d1, d2) != 1)
    throw Error(ErrorCode::NotCoprime,
                "classes " + std::to_string(d1) + " and " + std::to_string(d2) + " are not coprime");
}

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t out = 1;
  for (unsigned k = 0; k < e; ++k) out = static_cast<std::uint64_t>(checked_mul(static_cast<Exponent>(out), static_cast<Exponent>(base)));
  return out;
}

}  // namespace

std::string MixedWitness::to_string() const {
  return std::to_string(s + 1) + " " + std::to_string(t + 1) + " " + std::to_string(u + 1) + ": s_" +
         std::to_string(left + 1) + " vs s_" + std::to_string(right + 1);
}

std::string CommuteWitness::to_string() const {
  return std::to_string(s + 1) + " " + std::to_string(t + 1);
}

std::optional<MixedWitness> mixed_equation_check(const CycleSet& s1, const CycleSet& s2) {
  require_same_size(s1, s2);
  const auto n = static_cast<Index>(s1.size());
  for (Index s = 0; s < n; ++s)
    for (Index t = 0; t < n; ++t)
      for (Index u = 0; u < n; ++u) {
        const Index left = s2.star(s1.star(s, t), s1.star(s, u));
        const Index right = s1.star(s2.star(t, s), s2.star(t, u));
        if (left != right) return MixedWitness{s, t, u, left, right};
      }
  return std::nullopt;
}

std::optional<CommuteWitness> germs_commute_check(const CycleSet& s1, const CycleSet& s2) {
  require_same_size(s1, s2);
  require_coprime(class_of(s1), class_of(s2));
  const auto n = static_cast<Index>(s1.size());
  for (Index s = 0; s < n; ++s)
    for (Index t = 0; t < n; ++t) {
      const auto lhs = compose(s2.psi(s1.star(s, t)), s1.psi(s));
      const auto rhs = compose(s1.psi(s2.star(t, s)), s2.psi(t));
      if (lhs != rhs) return CommuteWitness{s, t};
    }
  return std::nullopt;
}

BezoutPair zappa_bezout(std::uint64_t d1, std::uint64_t d2) {
  require_coprime(d1, d2);
  const auto e = extended_euclid(static_cast<std::int64_t>(d2), static_cast<std::int64_t>(d1));
  return {static_cast<std::uint64_t>(floor_mod(e.x, static_cast<Exponent>(d1))),
          static_cast<std::uint64_t>(floor_mod(e.y, static_cast<Exponent>(d2)))};
}

ZappaResult zappa_compose(const CycleSet& s1, std::uint64_t d1, const CycleSet& s2, std::uint64_t d2) {
  require_same_size(s1, s2);
  const auto [u, v] = zappa_bezout(d1, d2);
  std::vector<Permutation> rows;
  rows.reserve(s1.size());
  for (Index i = 0; i < s1.size(); ++i) {
    const auto sigma = bracket_permutation(s1, i, u);
    rows.push_back(compose(bracket_permutation(s2, sigma(i), v), sigma));
  }
  ZappaResult r;
  r.candidate = CycleSet(std::move(rows));
  r.validation = validate(r.candidate);
  r.d1 = d1;
  r.d2 = d2;
  r.d = d1 * d2;
  r.u = u;
  r.v = v;
  return r;
}

ZappaResult zappa_compose(const CycleSet& s1, const CycleSet& s2) {
  require_same_size(s1, s2);
  return zappa_compose(s1, class_of(s1), s2, class_of(s2));
}

std::uint64_t SylowFactor::alpha() const { return ipow(prime, exponent); }

std::vector<SylowFactor> sylow_decompose(const CycleSet& s) {
  const auto d = class_of(s);
  if (d == 1) throw Error(ErrorCode::TrivialClass, "class 1 has no Sylow factors");
  std::vector<SylowFactor> out;
  for (const auto& [p, a] : factorize(d)) {
    SylowFactor f;
    f.prime = p;
    f.exponent = a;
    f.beta = d / f.alpha();
    f.cycle_set = retraction(s, f.beta);
    const auto cls = class_of(f.cycle_set);
    if (cls != f.alpha())
      throw Error(ErrorCode::CompositionInvalid, "retraction by " + std::to_string(f.beta) +
                                                     " has class " + std::to_string(cls) +
                                                     ", expected " + std::to_string(f.alpha()));
    out.push_back(std::move(f));
  }
  return out;
}

CycleSet sylow_recompose(const std::vector<CycleSet>& factors) {
  if (factors.empty()) throw Error(ErrorCode::EmptyTuple, "no factors to recompose");
  std::vector<std::pair<std::uint64_t, const CycleSet*>> ordered;
  for (const auto& f : factors) {
    const auto cls = class_of(f);
    const auto primes = prime_divisors(cls);
    ordered.emplace_back(primes.empty() ? 1 : primes.front(), &f);
  }
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  CycleSet acc = *ordered.front().second;
  auto acc_class = class_of(acc);
  for (std::size_t k = 1; k < ordered.size(); ++k) {
    const auto& next = *ordered[k].second;
    const auto next_class = class_of(next);
    auto r = zappa_compose(acc, acc_class, next, next_class);
    if (!r.valid())
      throw Error(ErrorCode::CompositionInvalid,
                  "composition " + std::to_string(k) + " is not a cycle set (witness " +
                      r.validation.witness->to_string() + ")");
    acc = std::move(r.candidate);
    acc_class = class_of(acc);
  }
  return acc;
}

CycleSet sylow_recompose(const std::vector<SylowFactor>& factors) {
  std::vector<CycleSet> sets;
  for (const auto& f : factors) sets.push_back(f.cycle_set);
  return sylow_recompose(sets);
}

SylowGroupReport sylow_group_checks(const CycleSet& s, std::uint64_t cap) {
  const Germ germ(s);
  const auto d = static_cast<std::uint64_t>(germ.modulus());
  if (d == 1) throw Error(ErrorCode::TrivialClass, "class 1 has no Sylow subgroups");
  const auto n = s.size();
  struct Sylow {
    std::uint64_t alpha, beta;
    std::vector<GermElement> gens;
    std::map<ExponentVector, GermElement> elements;  // keyed by residues
  };
  std::vector<Sylow> sylows;
  SylowGroupReport report;
  for (const auto& [p, a] : factorize(d)) {
    Sylow h;
    h.alpha = ipow(p, a);
    h.beta = d / h.alpha;
    for (Index i = 0; i < n; ++i)
      h.gens.push_back(germ.project(bracket_power(s, i, static_cast<Exponent>(h.beta))));
    std::set<GermElement> seen{germ.identity()};
    std::vector<GermElement> frontier{germ.identity()};
    while (!frontier.empty()) {
      std::vector<GermElement> next;
      for (const auto& g : frontier)
        for (const auto& x : h.gens) {
          auto y = germ.multiply(g, x);
          if (seen.insert(y).second) {
            if (seen.size() > cap) throw Error(ErrorCode::CapExceeded, "Sylow subgroup exceeds the cap");
            next.push_back(std::move(y));
          }
        }
      frontier = std::move(next);
    }
    report.primes.push_back(p);
    report.subgroup_orders.push_back(seen.size());
    report.expected_orders.push_back(ipow(h.alpha, static_cast<unsigned>(n)));
    if (report.subgroup_orders.back() != report.expected_orders.back()) report.orders_ok = false;
    for (const auto& g : seen)
      if (!h.elements.emplace(g.cp, g).second) report.orders_ok = false;
    sylows.push_back(std::move(h));
  }

  // Unique element of H_i whose residues agree with c modulo alpha_i.
  auto split = [&](const Sylow& h, const ExponentVector& c) -> const GermElement* {
    ExponentVector r(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
      const auto target = static_cast<std::uint64_t>(c[k]) % h.alpha;
      std::uint64_t x = 0;
      while (x % h.alpha != target) x += h.beta;
      r[k] = static_cast<Exponent>(x);
    }
    auto it = h.elements.find(r);
    return it == h.elements.end() ? nullptr : &it->second;
  };

  // x in H_j H_i: peel the H_j part off the left and test the rest.
  auto in_product = [&](const Sylow& hj, const Sylow& hi, const GermElement& x) {
    const auto* b = split(hj, x.cp);
    if (!b) return false;
    const auto rest = germ.multiply(germ.inverse(*b), x);
    return hi.elements.count(rest.cp) && hi.elements.at(rest.cp) == rest;
  };

  for (std::size_t i = 0; i < sylows.size() && report.commute_ok; ++i)
    for (std::size_t j = 0; j < sylows.size() && report.commute_ok; ++j) {
      if (i == j) continue;
      for (const auto& a : sylows[i].gens) {
        for (const auto& b : sylows[j].gens)
          if (!in_product(sylows[j], sylows[i], germ.multiply(a, b))) {
            report.commute_ok = false;
            break;
          }
        if (!report.commute_ok) break;
      }
    }

  germ.for_each(
      [&](const GermElement& g) {
        ++report.factored;
        if (!report.factorization_ok) return;
        auto rest = g;
        auto product = germ.identity();
        for (const auto& h : sylows) {
          const auto* part = split(h, rest.cp);
          if (!part) {
            report.factorization_ok = false;
            return;
          }
          product = germ.multiply(product, *part);
          rest = germ.multiply(germ.inverse(*part), rest);
        }
        if (product != g || rest != germ.identity()) report.factorization_ok = false;
      },
      cap);
  return report;
}

}  // namespace cyset
