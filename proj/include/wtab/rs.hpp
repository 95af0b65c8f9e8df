#pragma once

#include <span>
#include <vector>

#include "wtab/entry.hpp"
#include "wtab/frames.hpp"
#include "wtab/tables.hpp"

namespace wtab {

/// Insertion tableau, stored in the usual insertion orientation: left
/// justified, rows weakly increasing, columns strictly increasing downward
/// (both among comparable entries), row lengths weakly decreasing downward.
struct Tableau {
  std::vector<Row> rows;

  Partition shape() const;

  /// The tableau with each row in canonical order. Equality of RS outputs
  /// is equality of row-equivalence classes.
  Tableau row_class() const;

  /// Checks the three tableau conditions cell by cell.
  bool is_valid() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
};

/// Schensted row insertion of w, first letter first. x bumps the leftmost
/// entry of a row that is comparable to and strictly greater than x.
Tableau rs_tableau(std::span<const Entry> w);

/// RS of the canonical representative's word.
Tableau rs_class(const RowClass& rc);

/// Longest word accepted by greene_shape.
inline constexpr std::size_t kGreeneMaxLength = 16;

/// Shape determined from the word alone: λ_1 + ... + λ_k is the largest
/// total length of k disjoint weakly increasing subsequences. Exhaustive
/// over subsets of positions; throws std::length_error above
/// kGreeneMaxLength letters.
Partition greene_shape(std::span<const Entry> w);

/// Joseph's criterion on weights: equal RS outputs up to row equivalence.
/// Throws std::invalid_argument on a length mismatch.
bool same_annihilator(const Weight& lambda, const Weight& mu);

/// The weight whose coefficient sequence is the reading word of the table
/// that λ labels through K: μ_p = λ_{word(K)_p}.
Weight to_reading_order(const Weight& lambda, const Table& k);

}  // namespace wtab
