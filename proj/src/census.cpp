#include "cyset/census.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <numeric>
#include <sstream>

#include "cyset/error.hpp"
#include "cyset/germ.hpp"

namespace cyset {

namespace {

constexpr std::int8_t kUnset = -1;

class Search {
 public:
  Search(std::size_t n, const EnumerateOptions& options, const CensusVisitor& visit)
      : n_(n), opt_(options), visit_(visit),
        table_(n * n, kUnset), inv_(n * n, kUnset), diag_used_(n, false) {
    if (opt_.resume_after) {
      if (opt_.resume_after->size() != n)
        throw Error(ErrorCode::DimensionMismatch, "resume table has the wrong size");
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
          resume_.push_back(static_cast<std::int8_t>(opt_.resume_after->star(i, j)));
    }
  }

  std::uint64_t run() {
    descend(0, !resume_.empty());
    return emitted_;
  }

 private:
  std::int8_t at(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }
  std::int8_t preimage(std::size_t row, std::size_t v) const { return inv_[row * n_ + v]; }

  bool triple_ok(std::size_t i, std::size_t j, std::size_t u) const {
    const auto a = at(i, j), b = at(i, u);
    if (a < 0 || b < 0) return true;
    const auto left = at(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    if (left < 0) return true;
    const auto c = at(j, i), e = at(j, u);
    if (c < 0 || e < 0) return true;
    const auto right = at(static_cast<std::size_t>(c), static_cast<std::size_t>(e));
    return right < 0 || left == right;
  }

  // Every triple that became fully determined with cell (a, b).
  bool consistent(std::size_t a, std::size_t b) const {
    for (std::size_t x = 0; x < n_; ++x) {
      if (!triple_ok(a, b, x) || !triple_ok(a, x, b) || !triple_ok(b, a, x) || !triple_ok(x, a, b))
        return false;
      const auto pa = preimage(x, a), pb = preimage(x, b);
      if (pa >= 0 && pb >= 0) {
        const auto j = static_cast<std::size_t>(pa), u = static_cast<std::size_t>(pb);
        if (!triple_ok(x, j, u) || !triple_ok(j, x, u)) return false;
      }
    }
    return true;
  }

  bool descend(std::size_t cell, bool tight) {
    if (cell == n_ * n_) {
      if (tight) return true;  // the resume table itself
      return emit();
    }
    const std::size_t a = cell / n_, b = cell % n_;
    const std::int8_t lower = tight ? resume_[cell] : 0;
    for (std::int8_t v = lower; v < static_cast<std::int8_t>(n_); ++v) {
      if (preimage(a, static_cast<std::size_t>(v)) >= 0) continue;
      if (a == b && opt_.diagonal_pruning && diag_used_[static_cast<std::size_t>(v)]) continue;
      table_[cell] = v;
      inv_[a * n_ + static_cast<std::size_t>(v)] = static_cast<std::int8_t>(b);
      if (a == b) diag_used_[static_cast<std::size_t>(v)] = true;
      bool keep_going = true;
      if (consistent(a, b)) keep_going = descend(cell + 1, tight && v == lower);
      if (a == b) diag_used_[static_cast<std::size_t>(v)] = false;
      inv_[a * n_ + static_cast<std::size_t>(v)] = kUnset;
      table_[cell] = kUnset;
      if (!keep_going) return false;
    }
    return true;
  }

  bool emit() {
    std::vector<Permutation> rows;
    rows.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      std::vector<Index> images(n_);
      for (std::size_t j = 0; j < n_; ++j) images[j] = static_cast<Index>(at(i, j));
      rows.push_back(Permutation::from_images(std::move(images)));
    }
    CycleSet s(std::move(rows));
    if (opt_.mode == CensusMode::UpToIso && !is_canonical(s)) return true;
    ++emitted_;
    return visit_(s);
  }

  std::size_t n_;
  const EnumerateOptions& opt_;
  const CensusVisitor& visit_;
  std::vector<std::int8_t> table_, inv_, resume_;
  std::vector<bool> diag_used_;
  std::uint64_t emitted_ = 0;
};

// Lexicographic comparison of relabel(s, tau) against s, cell by cell.
int compare_relabelled(const CycleSet& s, const std::vector<Index>& tau, const std::vector<Index>& tau_inv) {
  const auto n = s.size();
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const Index x = tau[s.star(tau_inv[a], tau_inv[b])];
      const Index y = s.star(a, b);
      if (x != y) return x < y ? -1 : 1;
    }
  return 0;
}

template <class Visit>
void for_each_relabelling(std::size_t n, Visit visit) {
  std::vector<Index> tau(n), tau_inv(n);
  std::iota(tau.begin(), tau.end(), 0);
  do {
    for (Index i = 0; i < n; ++i) tau_inv[tau[i]] = i;
    if (!visit(tau, tau_inv)) return;
  } while (std::next_permutation(tau.begin(), tau.end()));
}

bool is_prime_power(std::uint64_t d) { return factorize(d).size() <= 1; }

}  // namespace

std::uint64_t enumerate(std::size_t n, const EnumerateOptions& options, const CensusVisitor& visit) {
  if (n > options.cap)
    throw Error(ErrorCode::CapExceeded,
                "census size " + std::to_string(n) + " exceeds the cap " + std::to_string(options.cap));
  if (n == 0 || n > 127) throw Error(ErrorCode::CapExceeded, "census size must be in 1..127");
  return Search(n, options, visit).run();
}

std::vector<CycleSet> enumerate_all(std::size_t n, CensusMode mode, std::size_t cap) {
  std::vector<CycleSet> out;
  EnumerateOptions options;
  options.mode = mode;
  options.cap = cap;
  enumerate(n, options, [&](const CycleSet& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

CycleSet relabel(const CycleSet& s, const Permutation& tau) {
  const auto n = s.size();
  if (tau.size() != n) throw Error(ErrorCode::DimensionMismatch, "relabelling of the wrong degree");
  const auto tau_inv = tau.inverse();
  std::vector<Permutation> rows;
  for (Index a = 0; a < n; ++a) {
    std::vector<Index> images(n);
    for (Index b = 0; b < n; ++b) images[b] = tau(s.star(tau_inv(a), tau_inv(b)));
    rows.push_back(Permutation::from_images(std::move(images)));
  }
  return CycleSet(std::move(rows));
}

bool is_canonical(const CycleSet& s) {
  bool minimal = true;
  for_each_relabelling(s.size(), [&](const auto& tau, const auto& tau_inv) {
    if (compare_relabelled(s, tau, tau_inv) < 0) minimal = false;
    return minimal;
  });
  return minimal;
}

CycleSet canonical_form(const CycleSet& s) {
  CycleSet best = s;
  for_each_relabelling(s.size(), [&](const auto& tau, const auto&) {
    auto candidate = relabel(s, Permutation::from_images(tau));
    if (candidate < best) best = std::move(candidate);
    return true;
  });
  return best;
}

std::uint64_t automorphism_count(const CycleSet& s) {
  std::uint64_t count = 0;
  for_each_relabelling(s.size(), [&](const auto& tau, const auto& tau_inv) {
    if (compare_relabelled(s, tau, tau_inv) == 0) ++count;
    return true;
  });
  return count;
}

CensusAccumulator::CensusAccumulator(std::size_t n, CensusMode mode, bool sweep_conjectures)
    : sweep_(sweep_conjectures) {
  rec_.n = n;
  rec_.mode = mode;
  if (mode == CensusMode::UpToIso) rec_.iso_count = 0;
}

void CensusAccumulator::add(const CycleSet& s) {
  const auto d = class_of(s);
  std::uint64_t weight = 1;
  if (rec_.mode == CensusMode::UpToIso) {
    std::uint64_t fact = 1;
    for (std::size_t k = 2; k <= s.size(); ++k) fact *= k;
    weight = fact / automorphism_count(s);
    ++*rec_.iso_count;
  }
  if (sweep_) {
    const auto report = conjecture_report(s);
    for (const auto& v : report.violations())
      rec_.violations.push_back(std::to_string(rec_.emitted + 1) + ": " + v);
  }
  ++rec_.emitted;
  ++rec_.emitted_histogram[d];
  rec_.class_histogram[d] += weight;
  rec_.total_count += weight;
  rec_.dmax = std::max(rec_.dmax, d);
}

CensusRecord CensusAccumulator::finish() const {
  CensusRecord rec = rec_;
  std::uint64_t prime_power = 0;
  for (const auto& [d, count] : rec.class_histogram)
    if (is_prime_power(d)) prime_power += count;
  rec.prime_power_fraction =
      rec.total_count ? static_cast<double>(prime_power) / static_cast<double>(rec.total_count) : 0.0;
  for (const auto& [d, count] : rec.class_histogram) {
    const auto factors = factorize(d);
    if (factors.size() < 2) continue;
    std::uint64_t bound = 1;
    for (const auto& [p, a] : factors) {
      std::uint64_t q = 1;
      for (unsigned k = 0; k < a; ++k) q *= p;
      const auto it = rec.class_histogram.find(q);
      bound *= it == rec.class_histogram.end() ? 0 : it->second;
    }
    rec.nd_checks.push_back({d, count, bound});
  }
  return rec;
}

CensusRecord census_stats(std::size_t n, CensusMode mode, std::size_t cap) {
  CensusAccumulator acc(n, mode);
  EnumerateOptions options;
  options.mode = mode;
  options.cap = cap;
  enumerate(n, options, [&](const CycleSet& s) {
    acc.add(s);
    return true;
  });
  return acc.finish();
}

std::map<std::size_t, std::uint64_t> dmax_table(std::size_t n_from, std::size_t n_to, std::size_t cap) {
  std::map<std::size_t, std::uint64_t> out;
  for (std::size_t n = n_from; n <= n_to; ++n) {
    if (n > cap)
      throw Error(ErrorCode::CapExceeded,
                  "census size " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
    std::uint64_t dmax = 0;
    EnumerateOptions options;
    options.cap = cap;
    enumerate(n, options, [&](const CycleSet& s) {
      dmax = std::max(dmax, class_of(s));
      return true;
    });
    out[n] = dmax;
  }
  return out;
}

std::string census_footer(const CensusRecord& rec) {
  std::ostringstream out;
  out << "total=" << rec.emitted << "\n";
  out << "dmax=" << rec.dmax << "\n";
  for (const auto& [d, count] : rec.emitted_histogram) out << "hist " << d << "=" << count << "\n";
  return out.str();
}

namespace {

struct ExistingFile {
  std::string body;            // complete blocks, each followed by a blank line
  std::vector<CycleSet> sets;
  std::optional<std::string> footer;
};

ExistingFile read_census_file(const std::string& path) {
  ExistingFile f;
  std::ifstream in(path);
  if (!in) return f;
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  // Split into blank-line separated chunks; a chunk only counts when its
  // terminating blank line was written.
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto end = text.find("\n\n", pos);
    if (end == std::string::npos) {
      const std::string tail = text.substr(pos);
      if (tail.find('=') != std::string::npos && tail.find("total=") == 0) f.footer = tail;
      break;
    }
    const std::string chunk = text.substr(pos, end + 2 - pos);
    if (chunk.rfind("total=", 0) == 0) {
      f.footer = text.substr(pos);
      break;
    }
    f.sets.push_back(parse_cys(chunk));
    f.body += chunk;
    pos = end + 2;
  }
  return f;
}

}  // namespace

CensusRecord census_to_file(std::size_t n, CensusMode mode, const std::string& path, std::size_t cap) {
  auto existing = read_census_file(path);
  CensusAccumulator acc(n, mode);
  EnumerateOptions options;
  options.mode = mode;
  options.cap = cap;

  if (existing.footer) {
    std::size_t index = 0;
    enumerate(n, options, [&](const CycleSet& s) {
      if (index >= existing.sets.size() || existing.sets[index] != s)
        throw Error(ErrorCode::CensusMismatch, "block " + std::to_string(index + 1) + " of " + path +
                                                   " differs from the enumeration");
      ++index;
      acc.add(s);
      return true;
    });
    if (index != existing.sets.size())
      throw Error(ErrorCode::CensusMismatch, path + " has " + std::to_string(existing.sets.size()) +
                                                 " blocks, enumeration gives " + std::to_string(index));
    auto rec = acc.finish();
    if (census_footer(rec) != *existing.footer)
      throw Error(ErrorCode::CensusMismatch, "footer of " + path + " differs from the enumeration");
    return rec;
  }

  for (const auto& s : existing.sets) {
    if (s.size() != n) throw Error(ErrorCode::CensusMismatch, path + " holds a table of another size");
    acc.add(s);
  }
  if (!existing.sets.empty()) options.resume_after = existing.sets.back();

  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << existing.body;
  std::uint64_t since_flush = 0;
  enumerate(n, options, [&](const CycleSet& s) {
    acc.add(s);
    out << format_cys(s) << "\n";
    if (++since_flush == 1000) {
      out.flush();
      since_flush = 0;
    }
    return true;
  });
  auto rec = acc.finish();
  out << census_footer(rec);
  if (!out) throw Error(ErrorCode::ParseError, "write to " + path + " failed");
  return rec;
}

}  // namespace cyset
