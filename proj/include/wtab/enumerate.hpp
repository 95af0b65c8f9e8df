#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wtab/entry.hpp"
#include "wtab/perm.hpp"
#include "wtab/sgnperm.hpp"
#include "wtab/stable.hpp"
#include "wtab/tables.hpp"

namespace wtab {

/// Default cap on the number of candidates an enumeration may visit.
inline constexpr std::uint64_t kDefaultEnumCap = 5'000'000;

/// WTAB_MAX_ENUM when set to a positive integer, else kDefaultEnumCap.
std::uint64_t enum_cap_from_env();

/// Raised before any work when the candidate count exceeds the cap.
class EnumCapExceeded : public std::length_error {
public:
  EnumCapExceeded(std::uint64_t count, std::uint64_t cap);
  std::uint64_t count() const { return count_; }
  std::uint64_t cap() const { return cap_; }

private:
  std::uint64_t count_;
  std::uint64_t cap_;
};

struct TableFilter {
  /// Only weakly increasing rows (one representative per row class).
  bool row_classes_only = false;
  /// Only tables whose entries are pairwise comparable.
  bool single_coset = false;
  /// Only finite-dimensional labels on σ·P for this σ.
  std::optional<Perm> fd_sigma;
};

struct STableFilter {
  /// Only weakly increasing half rows (sTab^≤).
  bool weakly_increasing = false;
  /// Only finite-dimensional labels on σ·P for this σ.
  std::optional<SignedPerm> fd_sigma;
};

/// Number of candidates visited before filtering.
std::uint64_t count_candidates(const std::vector<int>& lengths, std::size_t alphabet_size,
                               bool multisets);

/// All fillings of the frame by the alphabet (sorted by canonical_less and
/// deduplicated first), in lexicographic order of the rows top to bottom.
/// Throws EnumCapExceeded before enumerating.
std::vector<Table> enumerate_tables(const Frame& f, std::vector<Entry> alphabet,
                                    const TableFilter& filter = {},
                                    std::uint64_t cap = enum_cap_from_env());

/// All s-tables on the s-frame with half rows drawn from the alphabet, in
/// lexicographic order of rows 1..m. Fillings that break the integrality
/// rule for φ are skipped.
std::vector<STable> enumerate_stables(const SFrame& f, Phi phi, std::vector<Entry> alphabet,
                                      const STableFilter& filter = {},
                                      std::uint64_t cap = enum_cap_from_env());

/// Integers lo..hi.
std::vector<Entry> integer_alphabet(int lo, int hi);

}  // namespace wtab
