#include "wtab/stable.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace wtab {

Phi parse_phi(const std::string& s) {
  if (s == "+" || s == "plus" || s == "D" || s == "so") return Phi::Plus;
  if (s == "-" || s == "minus" || s == "C" || s == "sp") return Phi::Minus;
  throw std::invalid_argument("phi must be '+' or '-', got '" + s + "'");
}

std::string to_string(Phi phi) { return phi == Phi::Plus ? "+" : "-"; }

bool is_phi_even(int l, Phi phi) {
  return phi == Phi::Plus ? l % 2 == 0 : l % 2 != 0;
}

Row negate_reverse(const Row& r) {
  Row out;
  out.reserve(r.size());
  for (auto it = r.rbegin(); it != r.rend(); ++it) out.push_back(-*it);
  return out;
}

STable::STable(SFrame frame, std::vector<Row> half_rows, Phi phi)
    : frame_(std::move(frame)), half_(std::move(half_rows)), phi_(phi) {
  if (static_cast<int>(half_.size()) != frame_.rank())
    throw std::invalid_argument("s-table half has the wrong number of rows");
  bool all_int = true;
  bool all_half = true;
  for (int i = 0; i < frame_.rank(); ++i) {
    if (static_cast<int>(half_[i].size()) != frame_.half_rows()[i].len)
      throw std::invalid_argument("s-table row " + std::to_string(i + 1) +
                                  " length does not match the frame");
    for (const auto& e : half_[i]) {
      all_int = all_int && e.is_integer();
      all_half = all_half && e.is_half_odd();
    }
  }
  if (phi_ == Phi::Minus && !all_int)
    throw std::invalid_argument("phi = - needs all entries in Z");
  if (phi_ == Phi::Plus && !all_int && !all_half)
    throw std::invalid_argument("phi = + needs all entries in Z or all in 1/2 + Z");
}

Row STable::row(int label) const {
  if (label == 0 || std::abs(label) > rank())
    throw std::out_of_range("s-table row label out of range");
  const Row& r = half_[std::abs(label) - 1];
  return label > 0 ? r : negate_reverse(r);
}

bool STable::is_weakly_increasing() const {
  for (const auto& r : half_)
    for (std::size_t j = 1; j < r.size(); ++j)
      if (strictly_greater(r[j - 1], r[j])) return false;
  return true;
}

STable STable::sorted() const {
  std::vector<Row> rows = half_;
  for (auto& r : rows) std::sort(r.begin(), r.end(), canonical_less);
  return STable(frame_, std::move(rows), phi_);
}

Table STable::full() const {
  const int m = rank();
  std::vector<Row> rows;
  for (int i = 1; i <= 2 * m; ++i) rows.push_back(row(full_row_label(m, i)));
  return Table(frame_.full(), std::move(rows));
}

bool stable_less(const STable& a, const STable& b) {
  if (a.frame().half_rows() != b.frame().half_rows())
    return a.frame().half_rows() < b.frame().half_rows();
  if (a.phi() != b.phi()) return a.phi() < b.phi();
  return std::lexicographical_compare(
      a.half_rows().begin(), a.half_rows().end(), b.half_rows().begin(),
      b.half_rows().end(), [](const Row& x, const Row& y) {
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(),
                                            y.end(), canonical_less);
      });
}

}  // namespace wtab
