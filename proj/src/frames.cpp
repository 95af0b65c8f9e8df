#include "wtab/frames.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace wtab {

namespace {

bool has_centre(const RowGeom& r, int x) {
  return x >= r.offset && x <= r.last_centre() && (x - r.offset) % 2 == 0;
}

void check_support(const std::vector<RowGeom>& rows) {
  if (rows.empty()) throw FrameError("frame has no rows", 0, 0);
  for (const auto& r : rows)
    if (r.len < 1) throw FrameError("row of non-positive length", r.offset, 0);

  // Stack bottom-up, longest first; stable so equal rows keep their order.
  std::vector<RowGeom> stack = rows;
  std::stable_sort(stack.begin(), stack.end(),
                   [](const RowGeom& a, const RowGeom& b) { return a.len > b.len; });
  for (std::size_t level = 1; level < stack.size(); ++level) {
    const RowGeom& below = stack[level - 1];
    const RowGeom& row = stack[level];
    for (int x = row.offset; x <= row.last_centre(); x += 2) {
      if (!has_centre(below, x) &&
          !(has_centre(below, x - 1) && has_centre(below, x + 1))) {
        int y = 2 * static_cast<int>(level);
        throw FrameError("box at (" + std::to_string(x) + "," +
                             std::to_string(y) + ") is not supported",
                         x, y);
      }
    }
  }
}

}  // namespace

Frame validate_frame(std::vector<RowGeom> rows) { return Frame(std::move(rows)); }

Frame::Frame(std::vector<RowGeom> rows) : rows_(std::move(rows)) {
  check_support(rows_);
}

int Frame::num_boxes() const {
  int n = 0;
  for (const auto& r : rows_) n += r.len;
  return n;
}

std::vector<int> Frame::lengths() const {
  std::vector<int> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.len);
  return out;
}

bool Frame::is_justified() const {
  return std::all_of(rows_.begin(), rows_.end(), [&](const RowGeom& r) {
    return r.offset == rows_.front().offset;
  });
}

bool Frame::is_pyramid() const {
  for (std::size_t i = 1; i < rows_.size(); ++i)
    if (rows_[i].len < rows_[i - 1].len) return false;
  return true;
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must weakly decrease");
  }
}

int Partition::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

std::vector<int> Partition::pair_parts() const {
  if (parts.size() % 2 != 0)
    throw std::invalid_argument("partition does not have even multiplicity");
  std::vector<int> out;
  for (std::size_t i = 0; i < parts.size(); i += 2) {
    if (parts[i] != parts[i + 1])
      throw std::invalid_argument("partition does not have even multiplicity");
    out.push_back(parts[i]);
  }
  return out;
}

Partition partition_of(std::vector<int> lengths) {
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return Partition(std::move(lengths));
}

Frame pyramid(const Partition& p, Justification j) {
  if (p.parts.empty()) throw std::invalid_argument("empty partition");
  std::vector<RowGeom> rows;
  for (auto it = p.parts.rbegin(); it != p.parts.rend(); ++it) {
    int len = *it;
    rows.push_back({j == Justification::Centred ? -(len - 1) : 0, len});
  }
  return Frame(std::move(rows));
}

Frame permute_rows(const Frame& f, const Perm& sigma) {
  if (sigma.degree() != f.num_rows())
    throw std::invalid_argument("permutation degree does not match row count");
  Perm inv = sigma.inverse();
  std::vector<RowGeom> rows;
  for (int i = 1; i <= f.num_rows(); ++i) rows.push_back(f.row(inv(i)));
  return Frame(std::move(rows));
}

Frame left_justify(const Frame& f) {
  int left = f.rows().front().offset;
  for (const auto& r : f.rows()) left = std::min(left, r.offset);
  std::vector<RowGeom> rows;
  for (const auto& r : f.rows()) rows.push_back({left, r.len});
  return Frame(std::move(rows));
}

SFrame::SFrame(std::vector<RowGeom> half_rows) : half_(std::move(half_rows)) {
  if (half_.empty()) throw FrameError("s-frame has no rows", 0, 0);
  (void)full();
}

RowGeom SFrame::row(int label) const {
  if (label == 0 || std::abs(label) > rank())
    throw std::out_of_range("s-frame row label out of range");
  const RowGeom& r = half_[std::abs(label) - 1];
  return label > 0 ? r : r.mirrored();
}

int SFrame::half_boxes() const {
  int n = 0;
  for (const auto& r : half_) n += r.len;
  return n;
}

int full_row_label(int m, int i) { return i <= m ? -i : 2 * m + 1 - i; }

Frame SFrame::full() const {
  std::vector<RowGeom> rows;
  const int m = rank();
  for (int i = 1; i <= 2 * m; ++i) rows.push_back(row(full_row_label(m, i)));
  return Frame(std::move(rows));
}

SFrame symmetric_pyramid(const std::vector<int>& pairs) {
  Partition check(pairs);
  std::vector<RowGeom> half;
  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it)
    half.push_back({-(*it - 1), *it});
  return SFrame(std::move(half));
}

}  // namespace wtab
