#include "cyset/cycle_set.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "cyset/error.hpp"

namespace cyset {

CycleSet::CycleSet(std::vector<Permutation> psi) : psi_(std::move(psi)) {
  for (std::size_t i = 0; i < psi_.size(); ++i)
    if (psi_[i].size() != psi_.size())
      throw Error(ErrorCode::DimensionMismatch,
                  "row " + std::to_string(i + 1) + " has degree " +
                      std::to_string(psi_[i].size()) + ", expected " +
                      std::to_string(psi_.size()));
}

CycleSet CycleSet::from_table(const std::vector<std::vector<Index>>& rows) {
  std::vector<Permutation> psi;
  psi.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw Error(ErrorCode::DimensionMismatch,
                  "row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                      " entries, expected " + std::to_string(rows.size()));
    try {
      psi.push_back(Permutation::from_images(rows[i]));
    } catch (const Error&) {
      throw Error(ErrorCode::NotAPermutation,
                  "row " + std::to_string(i + 1) + " is not a permutation");
    }
  }
  return CycleSet(std::move(psi));
}

CycleSet CycleSet::from_cycles(const std::vector<std::string>& rows) {
  std::vector<Permutation> psi;
  psi.reserve(rows.size());
  for (const auto& r : rows) psi.push_back(Permutation::from_cycles(rows.size(), r));
  return CycleSet(std::move(psi));
}

CycleSet CycleSet::trivial(std::size_t n) {
  return CycleSet(std::vector<Permutation>(n, Permutation::identity(n)));
}

CycleSet CycleSet::cyclic(std::size_t n) {
  std::vector<Index> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Index>((i + 1) % n);
  return CycleSet(std::vector<Permutation>(n, Permutation::from_images(images)));
}

std::string LawWitness::to_string() const {
  std::ostringstream out;
  out << i + 1 << ' ' << j + 1 << ' ' << u + 1 << ": s_" << left + 1 << " vs s_" << right + 1;
  return out.str();
}

ValidationResult validate(const CycleSet& s) {
  const auto n = static_cast<Index>(s.size());
  for (Index i = 0; i < n; ++i) {
    const auto& pi = s.psi(i);
    for (Index j = 0; j < n; ++j) {
      const auto& pj = s.psi(j);
      const auto& left_op = s.psi(pi(j));
      const auto& right_op = s.psi(pj(i));
      for (Index u = 0; u < n; ++u) {
        const Index left = left_op(pi(u));
        const Index right = right_op(pj(u));
        if (left != right) return {LawWitness{i, j, u, left, right}};
      }
    }
  }
  return {};
}

ValidationResult validate(const std::vector<std::vector<Index>>& rows) {
  return validate(CycleSet::from_table(rows));
}

DiagonalInfo diagonal_map(const CycleSet& s) {
  const auto n = s.size();
  std::vector<Index> images(n);
  std::vector<std::optional<Index>> preimage(n);
  for (Index i = 0; i < n; ++i) {
    const Index v = s.star(i, i);
    if (preimage[v])
      throw Error(ErrorCode::NonDegeneracyViolation,
                  "s_" + std::to_string(*preimage[v] + 1) + "*s_" + std::to_string(*preimage[v] + 1) +
                      " = s_" + std::to_string(i + 1) + "*s_" + std::to_string(i + 1));
    preimage[v] = i;
    images[i] = v;
  }
  auto t = Permutation::from_images(std::move(images));
  const auto order = t.order();
  const bool square_free = t.is_identity();
  return {std::move(t), order, square_free};
}

std::vector<std::vector<Index>> orbits_of(std::size_t n, const std::vector<Permutation>& gens) {
  std::vector<int> label(n, -1);
  std::vector<std::vector<Index>> out;
  for (Index start = 0; start < n; ++start) {
    if (label[start] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<Index> orbit{start};
    label[start] = id;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const auto& g : gens) {
        const Index y = g(orbit[k]);
        if (label[y] < 0) {
          label[y] = id;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

namespace {

// Stabiliser chain built by the deterministic Schreier-Sims algorithm.
class StabilizerChain {
 public:
  explicit StabilizerChain(std::size_t n) : n_(n) {}

  void build(const std::vector<Permutation>& gens) {
    for (const auto& g : gens)
      if (!g.is_identity()) add_generator(sift_level_of(g), g);
    while (close_one()) {
    }
  }

  std::uint64_t order() const {
    std::uint64_t out = 1;
    for (const auto& level : levels_) out *= level.orbit.size();
    return out;
  }

 private:
  struct Level {
    Index base;
    std::vector<Permutation> gens;
    std::vector<std::optional<Permutation>> transversal;  // u with u(base) = point
    std::vector<Index> orbit;
  };

  // Generators of the stabiliser G^(i): everything stored at depth >= i.
  std::vector<const Permutation*> gens_from(std::size_t i) const {
    std::vector<const Permutation*> out;
    for (std::size_t k = i; k < levels_.size(); ++k)
      for (const auto& g : levels_[k].gens) out.push_back(&g);
    return out;
  }

  void rebuild_orbit(std::size_t i) {
    auto& level = levels_[i];
    level.transversal.assign(n_, std::nullopt);
    level.transversal[level.base] = Permutation::identity(n_);
    level.orbit = {level.base};
    const auto gens = gens_from(i);
    for (std::size_t k = 0; k < level.orbit.size(); ++k) {
      const Index p = level.orbit[k];
      for (const auto* g : gens) {
        const Index q = (*g)(p);
        if (!level.transversal[q]) {
          level.transversal[q] = compose(*g, *level.transversal[p]);
          level.orbit.push_back(q);
        }
      }
    }
  }

  // Strips h through levels >= from; returns the depth at which it stopped
  // (levels_.size() if it passed every level) and leaves the residue in h.
  std::size_t strip(Permutation& h, std::size_t from) const {
    for (std::size_t i = from; i < levels_.size(); ++i) {
      const auto& level = levels_[i];
      const Index x = h(level.base);
      if (!level.transversal[x]) return i;
      h = compose(level.transversal[x]->inverse(), h);
    }
    return levels_.size();
  }

  std::size_t sift_level_of(const Permutation& g) const {
    // A new generator belongs to the deepest level whose base points it fixes.
    std::size_t i = 0;
    while (i < levels_.size() && g(levels_[i].base) == levels_[i].base) ++i;
    return i;
  }

  void add_generator(std::size_t i, const Permutation& g) {
    if (i == levels_.size()) {
      Index base = 0;
      while (g(base) == base) ++base;
      levels_.push_back(Level{base, {}, {}, {}});
    }
    levels_[i].gens.push_back(g);
    for (std::size_t k = 0; k <= i; ++k) rebuild_orbit(k);
  }

  // Finds one Schreier generator that does not sift, adds its residue and
  // returns true; returns false once the chain is complete.
  bool close_one() {
    for (std::size_t ii = levels_.size(); ii-- > 0;) {
      const auto gens = gens_from(ii);
      const auto& level = levels_[ii];
      for (const Index p : level.orbit) {
        for (const auto* s : gens) {
          const Index q = (*s)(p);
          Permutation h = compose(level.transversal[q]->inverse(), compose(*s, *level.transversal[p]));
          const auto stop = strip(h, ii + 1);
          if (!h.is_identity()) {
            add_generator(stop, h);
            return true;
          }
        }
      }
    }
    return false;
  }

  std::size_t n_;
  std::vector<Level> levels_;
};

}  // namespace

std::uint64_t group_order(std::size_t n, const std::vector<Permutation>& gens) {
  StabilizerChain chain(n);
  chain.build(gens);
  return chain.order();
}

PermGroupInfo perm_group(const CycleSet& s, std::uint64_t element_cap) {
  const auto n = s.size();
  PermGroupInfo info;
  info.order = group_order(n, s.rows());
  info.orbits = orbits_of(n, s.rows());
  info.transitive = info.orbits.size() <= 1;
  info.abelian = true;
  for (std::size_t a = 0; a < n && info.abelian; ++a)
    for (std::size_t b = a + 1; b < n && info.abelian; ++b)
      if (compose(s.psi(a), s.psi(b)) != compose(s.psi(b), s.psi(a))) info.abelian = false;

  if (info.order <= element_cap) {
    std::set<Permutation> seen{Permutation::identity(n)};
    std::deque<Permutation> queue{Permutation::identity(n)};
    while (!queue.empty()) {
      auto g = std::move(queue.front());
      queue.pop_front();
      for (const auto& gen : s.rows()) {
        auto h = compose(gen, g);
        if (seen.insert(h).second) queue.push_back(std::move(h));
      }
    }
    info.elements.emplace(seen.begin(), seen.end());
  }
  return info;
}

std::vector<Component> decompose(const CycleSet& s) {
  std::vector<Component> out;
  for (auto& orbit : orbits_of(s.size(), s.rows())) {
    std::vector<Index> position(s.size(), 0);
    for (std::size_t k = 0; k < orbit.size(); ++k) position[orbit[k]] = static_cast<Index>(k);
    std::vector<Permutation> psi;
    for (const Index x : orbit) {
      std::vector<Index> images;
      for (const Index y : orbit) images.push_back(position[s.star(x, y)]);
      psi.push_back(Permutation::from_images(std::move(images)));
    }
    out.push_back(Component{std::move(orbit), CycleSet(std::move(psi))});
  }
  return out;
}

namespace {

std::vector<std::vector<long long>> numeric_lines(std::string_view text) {
  std::vector<std::vector<long long>> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find('=') != std::string::npos) continue;  // census footer
    std::istringstream fields(line);
    std::vector<long long> values;
    std::string token;
    while (fields >> token) {
      try {
        std::size_t used = 0;
        values.push_back(std::stoll(token, &used));
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(lineno) + ": '" + token + "' is not an integer");
      }
    }
    if (!values.empty()) lines.push_back(std::move(values));
  }
  return lines;
}

CycleSet block_from_lines(const std::vector<std::vector<long long>>& lines, std::size_t& pos) {
  const auto& header = lines[pos];
  if (header.size() != 1 || header[0] < 1)
    throw Error(ErrorCode::ParseError, "expected the size n on its own line");
  const auto n = static_cast<std::size_t>(header[0]);
  if (pos + n >= lines.size())
    throw Error(ErrorCode::ParseError, "expected " + std::to_string(n) + " rows");
  std::vector<Permutation> psi;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& row = lines[pos + i];
    if (row.size() != n)
      throw Error(ErrorCode::ParseError, "row " + std::to_string(i) + " has " +
                                             std::to_string(row.size()) + " entries, expected " +
                                             std::to_string(n));
    try {
      psi.push_back(Permutation::from_one_line(row));
    } catch (const Error&) {
      throw Error(ErrorCode::NotAPermutation, "row " + std::to_string(i) + " is not a permutation");
    }
  }
  pos += n + 1;
  return CycleSet(std::move(psi));
}

}  // namespace

CycleSet parse_cys(std::string_view text) {
  const auto lines = numeric_lines(text);
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty input");
  std::size_t pos = 0;
  auto out = block_from_lines(lines, pos);
  if (pos != lines.size()) throw Error(ErrorCode::ParseError, "trailing data after the table");
  return out;
}

std::vector<CycleSet> parse_cys_blocks(std::string_view text) {
  const auto lines = numeric_lines(text);
  std::vector<CycleSet> out;
  std::size_t pos = 0;
  while (pos < lines.size()) out.push_back(block_from_lines(lines, pos));
  return out;
}

std::string format_cys(const CycleSet& s) {
  std::string out = std::to_string(s.size()) + '\n';
  for (const auto& row : s.rows()) out += row.to_one_line() + '\n';
  return out;
}

std::string describe(const CycleSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ' ';
    out += "psi(s_" + std::to_string(i + 1) + ")=" + s.psi(static_cast<Index>(i)).to_cycle_string();
  }
  return out;
}

}  // namespace cyset
