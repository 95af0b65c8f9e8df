#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "wtab/perm.hpp"

namespace wtab {

/// One row of boxes. Boxes are 2 units wide; `offset` is the x-coordinate of
/// the centre of the leftmost box, so centres are offset, offset+2, ...
struct RowGeom {
  int offset = 0;
  int len = 1;

  int last_centre() const { return offset + 2 * (len - 1); }
  /// The same row reflected through x = 0.
  RowGeom mirrored() const { return {-last_centre(), len}; }

  friend auto operator<=>(const RowGeom&, const RowGeom&) = default;
};

/// Raised when a row list is not a permutation of a pyramid. Carries the
/// centre of the first unsupported box in the length-sorted stack (the
/// bottom row sits at y = 0, rows above at y = 2, 4, ...).
class FrameError : public std::invalid_argument {
public:
  FrameError(const std::string& what, int x, int y)
      : std::invalid_argument(what), x_(x), y_(y) {}
  int x() const { return x_; }
  int y() const { return y_; }

private:
  int x_;
  int y_;
};

/// Rows of boxes listed top to bottom; always some row permutation of a
/// pyramid.
class Frame {
public:
  /// Validates; throws FrameError.
  explicit Frame(std::vector<RowGeom> rows);

  int num_rows() const { return static_cast<int>(rows_.size()); }
  int num_boxes() const;
  const std::vector<RowGeom>& rows() const { return rows_; }
  /// Row i, 1-based from the top.
  const RowGeom& row(int i) const { return rows_.at(i - 1); }
  std::vector<int> lengths() const;

  bool is_justified() const;
  /// Lengths weakly increase from top to bottom (rows are valid already).
  bool is_pyramid() const;

  friend bool operator==(const Frame&, const Frame&) = default;

private:
  std::vector<RowGeom> rows_;
};

/// Throws FrameError with the first violating box.
Frame validate_frame(std::vector<RowGeom> rows);

/// Weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;  // sum of parts
  int num_parts() const { return static_cast<int>(parts.size()); }

  /// For (p_1^2, ..., p_r^2) returns (p_1, ..., p_r); throws otherwise.
  std::vector<int> pair_parts() const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Sorts lengths into a partition.
Partition partition_of(std::vector<int> lengths);

enum class Justification { Centred, Left };

/// Pyramid with rows of lengths p (longest at the bottom).
Frame pyramid(const Partition& p, Justification j = Justification::Centred);

/// Row i of the output is row σ^{-1}(i) of the input; offsets travel.
Frame permute_rows(const Frame& f, const Perm& sigma);

Frame left_justify(const Frame& f);

/// Centrally symmetric frame with 2m rows labelled 1..m, -m..-1 from the
/// bottom up. Only the bottom half (labels 1..m, outermost first) is stored;
/// row -i is the mirror image of row i.
class SFrame {
public:
  /// Validates the full frame; throws FrameError.
  explicit SFrame(std::vector<RowGeom> half_rows);

  int rank() const { return static_cast<int>(half_.size()); }
  const std::vector<RowGeom>& half_rows() const { return half_; }
  /// Geometry of the row with label i in {±1..±m}.
  RowGeom row(int label) const;
  int half_boxes() const;

  /// The full 2m-row frame, listed top to bottom (labels -1..-m, m..1).
  Frame full() const;

  friend bool operator==(const SFrame&, const SFrame&) = default;

private:
  std::vector<RowGeom> half_;
};

/// Symmetric pyramid of (p_1^2, ..., p_r^2): central rows longest, rows
/// centred on x = 0. `pairs` lists p_1 >= ... >= p_r.
SFrame symmetric_pyramid(const std::vector<int>& pairs);

/// Top-down label of the full frame's i-th row (1-based): -1, ..., -m, m, ..., 1.
int full_row_label(int m, int i);

}  // namespace wtab
