#pragma once

#include <optional>
#include <vector>

#include "wtab/entry.hpp"
#include "wtab/frames.hpp"

namespace wtab {

using Row = std::vector<Entry>;

/// A frame filled with entries; rows are listed top to bottom.
class Table {
public:
  /// Throws std::invalid_argument if row lengths differ from the frame.
  Table(Frame frame, std::vector<Row> rows);

  /// Left-justified table with the given rows (offsets all 0).
  static Table justified(std::vector<Row> rows);

  const Frame& frame() const { return frame_; }
  const std::vector<Row>& rows() const { return rows_; }
  /// Row i, 1-based from the top.
  const Row& row(int i) const { return rows_.at(i - 1); }
  int num_rows() const { return frame_.num_rows(); }

  friend bool operator==(const Table&, const Table&) = default;

private:
  Frame frame_;
  std::vector<Row> rows_;
};

/// Row-equivalence class of a table, held by its canonical representative.
class RowClass {
public:
  explicit RowClass(const Table& t);

  const Table& table() const { return rep_; }
  const Frame& frame() const { return rep_.frame(); }
  const std::vector<Row>& rows() const { return rep_.rows(); }
  const Row& row(int i) const { return rep_.row(i); }
  int num_rows() const { return rep_.num_rows(); }

  friend bool operator==(const RowClass&, const RowClass&) = default;

private:
  Table rep_;
};

/// Sorts a row so that no entry is strictly greater than an entry to its
/// right: integer cosets form contiguous blocks, ordered by the canonical
/// (re mod 1, im) key, each block weakly increasing.
Row canonical_row(Row r);

RowClass canonical_rows(const Table& t);

/// Entries row by row, left to right, top to bottom.
std::vector<Entry> word(const Table& t);

Table left_justify(const Table& t);

Table permute_rows(const Table& t, const Perm& sigma);

/// Requires a justified frame (throws std::invalid_argument otherwise).
/// Going down any column, consecutive boxes must strictly decrease; rows
/// that are too short to reach the column are skipped.
bool is_column_strict(const Table& t);

/// A column-strict table in the class, or nullopt. Requires a justified
/// frame. Greedy when the entries are pairwise comparable and the rows
/// reaching each column are consecutive (pyramids, upside-down pyramids,
/// s-tables): columns left to right, each column bottom-up, each box takes
/// the smallest unused entry of its row strictly greater than the box below.
/// Otherwise an exact backtracking search.
std::optional<Table> column_strict_witness(const RowClass& rc);

/// Boxes numbered 1..n top to bottom, left to right.
Table coordinate_table(const Frame& f);

/// Full table of an s-frame: top half holds 1..n top-down left to right,
/// bottom half holds -n..-1 by central symmetry.
Table coordinate_table(const SFrame& f);

/// Coefficients a_1..a_n of sum a_i eps_i.
struct Weight {
  std::vector<Entry> coeffs;
  friend bool operator==(const Weight&, const Weight&) = default;
};

/// a_i is the entry of A in the box that holds i in K. Only positive labels
/// of K are read; for s-tables pass the full tables.
Weight weight_of(const Table& a, const Table& k);

/// Inverse of weight_of for the fixed coordinate table K. Boxes of K holding
/// a negative label -i receive -a_i.
Table table_of(const Weight& w, const Table& k);

}  // namespace wtab
