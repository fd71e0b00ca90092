#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyset/cycle_set.hpp"

namespace cyset {

enum class CensusMode { Labeled, UpToIso };

inline constexpr std::size_t kDefaultCensusCap = 6;

struct EnumerateOptions {
  CensusMode mode = CensusMode::Labeled;
  std::size_t cap = kDefaultCensusCap;
  /// Skip every table up to and including this one (lexicographic order of
  /// the concatenated one-line rows).
  std::optional<CycleSet> resume_after;
  /// Reject partial tables whose diagonal entries repeat (T is a bijection
  /// on every cycle set).
  bool diagonal_pruning = true;
};

/// Return false to stop the enumeration.
using CensusVisitor = std::function<bool(const CycleSet&)>;

/// Depth-first search over the table cells in row-major order, checking every
/// triple of the law as soon as its four lookups are assigned. Tables are
/// emitted in increasing lexicographic order; in UpToIso mode only those
/// that are minimal under simultaneous relabelling. Returns the number
/// emitted. Error(CapExceeded) when n exceeds the cap.
std::uint64_t enumerate(std::size_t n, const EnumerateOptions& options, const CensusVisitor& visit);
std::vector<CycleSet> enumerate_all(std::size_t n, CensusMode mode = CensusMode::Labeled,
                                    std::size_t cap = kDefaultCensusCap);

/// tau . s: psi'(tau(i))(tau(j)) = tau(psi(i)(j)).
CycleSet relabel(const CycleSet& s, const Permutation& tau);
/// Lexicographically minimal relabelling.
CycleSet canonical_form(const CycleSet& s);
bool is_canonical(const CycleSet& s);
/// Number of tau with relabel(s, tau) = s.
std::uint64_t automorphism_count(const CycleSet& s);

struct NdCheck {
  std::uint64_t d;
  std::uint64_t count;  // N(n, d), labelled
  std::uint64_t bound;  // product of N(n, p^a) over the prime powers of d
  bool holds() const noexcept { return count <= bound; }
};

struct CensusRecord {
  std::size_t n = 0;
  CensusMode mode = CensusMode::Labeled;
  std::uint64_t total_count = 0;            // labelled
  std::optional<std::uint64_t> iso_count;   // UpToIso runs only
  std::uint64_t emitted = 0;
  std::uint64_t dmax = 0;
  std::map<std::uint64_t, std::uint64_t> class_histogram;  // labelled counts
  std::map<std::uint64_t, std::uint64_t> emitted_histogram;
  double prime_power_fraction = 0;  // labelled; class 1 counts as a prime power
  std::vector<NdCheck> nd_checks;
  std::vector<std::string> violations;  // "<index>: <check>" over emitted sets
};

/// Folds emitted sets into a CensusRecord. In UpToIso mode each set stands
/// for its whole relabelling orbit in the labelled statistics.
class CensusAccumulator {
 public:
  CensusAccumulator(std::size_t n, CensusMode mode, bool sweep_conjectures = true);
  void add(const CycleSet& s);
  CensusRecord finish() const;

 private:
  CensusRecord rec_;
  bool sweep_;
};

CensusRecord census_stats(std::size_t n, CensusMode mode = CensusMode::Labeled,
                          std::size_t cap = kDefaultCensusCap);

/// Largest class for each n in [n_from, n_to].
std::map<std::size_t, std::uint64_t> dmax_table(std::size_t n_from, std::size_t n_to,
                                                std::size_t cap = kDefaultCensusCap);

/// "total=<k>", "dmax=<d>" and one "hist <class>=<count>" line per class,
/// over the emitted sets.
std::string census_footer(const CensusRecord& rec);

/// Streams the census to a file of .cys blocks separated by blank lines,
/// followed by the footer. A finished file is verified against a fresh run
/// (Error(CensusMismatch) on any difference); a file without footer is
/// resumed after its last complete block.
CensusRecord census_to_file(std::size_t n, CensusMode mode, const std::string& path,
                            std::size_t cap = kDefaultCensusCap);

}  // namespace cyset
