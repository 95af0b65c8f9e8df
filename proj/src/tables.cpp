#include "wtab/tables.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wtab {

Table::Table(Frame frame, std::vector<Row> rows)
    : frame_(std::move(frame)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != frame_.num_rows())
    throw std::invalid_argument("table has " + std::to_string(rows_.size()) +
                                " rows but its frame has " +
                                std::to_string(frame_.num_rows()));
  for (int i = 1; i <= frame_.num_rows(); ++i)
    if (static_cast<int>(rows_[i - 1].size()) != frame_.row(i).len)
      throw std::invalid_argument("row " + std::to_string(i) +
                                  " length does not match the frame");
}

Table Table::justified(std::vector<Row> rows) {
  std::vector<RowGeom> geom;
  for (const auto& r : rows) geom.push_back({0, static_cast<int>(r.size())});
  return Table(Frame(std::move(geom)), std::move(rows));
}

Row canonical_row(Row r) {
  std::sort(r.begin(), r.end(), canonical_less);
  return r;
}

RowClass::RowClass(const Table& t)
    : rep_([&] {
        std::vector<Row> rows;
        rows.reserve(t.rows().size());
        for (const auto& r : t.rows()) rows.push_back(canonical_row(r));
        return Table(t.frame(), std::move(rows));
      }()) {}

RowClass canonical_rows(const Table& t) { return RowClass(t); }

std::vector<Entry> word(const Table& t) {
  std::vector<Entry> w;
  for (const auto& r : t.rows()) w.insert(w.end(), r.begin(), r.end());
  return w;
}

Table left_justify(const Table& t) {
  return Table(left_justify(t.frame()), t.rows());
}

Table permute_rows(const Table& t, const Perm& sigma) {
  Frame f = permute_rows(t.frame(), sigma);
  Perm inv = sigma.inverse();
  std::vector<Row> rows;
  for (int i = 1; i <= t.num_rows(); ++i) rows.push_back(t.row(inv(i)));
  return Table(std::move(f), std::move(rows));
}

bool is_column_strict(const Table& t) {
  if (!t.frame().is_justified())
    throw std::invalid_argument("column strictness needs a justified frame");
  int width = 0;
  for (const auto& r : t.rows()) width = std::max(width, static_cast<int>(r.size()));
  for (int c = 0; c < width; ++c) {
    const Entry* above = nullptr;
    for (const auto& r : t.rows()) {
      if (static_cast<int>(r.size()) <= c) continue;
      if (above && !strictly_greater(*above, r[c])) return false;
      above = &r[c];
    }
  }
  return true;
}

namespace {

bool single_coset(const std::vector<Row>& rows) {
  const Entry* first = nullptr;
  for (const auto& r : rows)
    for (const auto& e : r) {
      if (!first) {
        first = &e;
      } else if (!comparable(*first, e)) {
        return false;
      }
    }
  return true;
}

// Whether the rows reaching each column form one unbroken run.
bool columns_contiguous(const std::vector<Row>& rows) {
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.size());
  for (std::size_t c = 0; c < width; ++c) {
    int runs = 0;
    bool inside = false;
    for (const auto& r : rows) {
      bool reaches = r.size() > c;
      if (reaches && !inside) ++runs;
      inside = reaches;
    }
    if (runs > 1) return false;
  }
  return true;
}

// Columns left to right, boxes bottom-up; cells[k] = (row, column).
struct Search {
  std::vector<std::pair<int, int>> cells;
  std::vector<std::vector<Entry>> pool;   // unused entries per row
  std::vector<Row> out;
  std::vector<int> below;                 // index into cells of box below, -1

  bool run(std::size_t k) {
    if (k == cells.size()) return true;
    auto [row, col] = cells[k];
    const Entry* floor = below[k] < 0 ? nullptr
                                      : &out[cells[below[k]].first][cells[below[k]].second];
    auto& avail = pool[row];
    for (std::size_t i = 0; i < avail.size(); ++i) {
      if (i > 0 && avail[i] == avail[i - 1]) continue;
      if (floor && !strictly_greater(avail[i], *floor)) continue;
      Entry chosen = avail[i];
      avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(i));
      out[row][col] = chosen;
      if (run(k + 1)) return true;
      avail.insert(avail.begin() + static_cast<std::ptrdiff_t>(i), chosen);
    }
    return false;
  }
};

}  // namespace

std::optional<Table> column_strict_witness(const RowClass& rc) {
  const Table& t = rc.table();
  if (!t.frame().is_justified())
    throw std::invalid_argument("column strictness needs a justified frame");
  const int m = t.num_rows();
  int width = 0;
  for (const auto& r : t.rows()) width = std::max(width, static_cast<int>(r.size()));

  std::vector<Row> out(t.rows());
  if (single_coset(t.rows()) && columns_contiguous(t.rows())) {
    std::vector<Row> pool;
    for (const auto& r : t.rows()) pool.push_back(canonical_row(r));
    for (int c = 0; c < width; ++c) {
      const Entry* below = nullptr;
      for (int i = m - 1; i >= 0; --i) {
        if (static_cast<int>(t.rows()[i].size()) <= c) continue;
        auto& avail = pool[i];
        auto it = avail.begin();
        if (below)
          it = std::find_if(avail.begin(), avail.end(), [&](const Entry& e) {
            return strictly_greater(e, *below);
          });
        if (it == avail.end()) return std::nullopt;
        out[i][c] = *it;
        avail.erase(it);
        below = &out[i][c];
      }
    }
    return Table(t.frame(), std::move(out));
  }

  // Several integer cosets, or a short row between longer ones: the greedy
  // choice can strand a row, so search exactly.
  Search s;
  s.out = out;
  for (const auto& r : t.rows()) s.pool.push_back(canonical_row(r));
  for (int c = 0; c < width; ++c) {
    int prev = -1;
    for (int i = m - 1; i >= 0; --i) {
      if (static_cast<int>(t.rows()[i].size()) <= c) continue;
      s.cells.emplace_back(i, c);
      s.below.push_back(prev);
      prev = static_cast<int>(s.cells.size()) - 1;
    }
  }
  if (!s.run(0)) return std::nullopt;
  return Table(t.frame(), std::move(s.out));
}

Table coordinate_table(const Frame& f) {
  std::vector<Row> rows;
  std::int64_t next = 1;
  for (const auto& g : f.rows()) {
    Row r;
    for (int j = 0; j < g.len; ++j) r.emplace_back(next++);
    rows.push_back(std::move(r));
  }
  return Table(f, std::move(rows));
}

Table coordinate_table(const SFrame& f) {
  Frame full = f.full();
  const int m = f.rank();
  std::vector<Row> rows(static_cast<std::size_t>(2 * m));
  std::int64_t next = 1;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < full.row(i + 1).len; ++j) rows[i].emplace_back(next++);
  }
  for (int i = 0; i < m; ++i) {
    Row mirror;
    for (auto it = rows[i].rbegin(); it != rows[i].rend(); ++it)
      mirror.push_back(-*it);
    rows[2 * m - 1 - i] = std::move(mirror);
  }
  return Table(std::move(full), std::move(rows));
}

namespace {

void require_same_frame(const Table& a, const Table& k) {
  if (!(a.frame() == k.frame()))
    throw std::invalid_argument("table and coordinate table have different frames");
}

}  // namespace

Weight weight_of(const Table& a, const Table& k) {
  require_same_frame(a, k);
  std::map<std::int64_t, Entry> by_label;
  for (int i = 1; i <= k.num_rows(); ++i)
    for (std::size_t j = 0; j < k.row(i).size(); ++j) {
      const Entry& label = k.row(i)[j];
      if (!label.is_integer())
        throw std::invalid_argument("coordinate table must hold integers");
      auto v = label.re().numerator();
      if (v > 0) by_label[v] = a.row(i)[j];
    }
  Weight w;
  std::int64_t expect = 1;
  for (const auto& [label, value] : by_label) {
    if (label != expect++)
      throw std::invalid_argument("coordinate table labels are not 1..n");
    w.coeffs.push_back(value);
  }
  return w;
}

Table table_of(const Weight& w, const Table& k) {
  std::vector<Row> rows;
  const auto n = static_cast<std::int64_t>(w.coeffs.size());
  for (const auto& kr : k.rows()) {
    Row r;
    for (const auto& label : kr) {
      if (!label.is_integer())
        throw std::invalid_argument("coordinate table must hold integers");
      auto v = label.re().numerator();
      if (v == 0 || std::abs(v) > n)
        throw std::invalid_argument("coordinate label out of range of the weight");
      const Entry& a = w.coeffs[static_cast<std::size_t>(std::abs(v) - 1)];
      r.push_back(v > 0 ? a : -a);
    }
    rows.push_back(std::move(r));
  }
  return Table(k.frame(), std::move(rows));
}

}  // namespace wtab
