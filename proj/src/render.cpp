#include "wtab/render.hpp"

#include <algorithm>

namespace wtab {

namespace {

struct Layout {
  int pitch = 2;   // characters per box
  int min_offset = 0;
};

Layout layout(const std::vector<RowGeom>& geom, const std::vector<std::vector<std::string>>& cells) {
  Layout l;
  std::size_t widest = 1;
  for (const auto& r : cells)
    for (const auto& c : r) widest = std::max(widest, c.size());
  l.pitch = std::max(2, static_cast<int>(widest) + 1);
  if (l.pitch % 2) ++l.pitch;
  l.min_offset = geom.empty() ? 0 : geom.front().offset;
  for (const auto& g : geom) l.min_offset = std::min(l.min_offset, g.offset);
  return l;
}

std::string draw_row(const Layout& l, const RowGeom& g, const std::vector<std::string>& cells) {
  std::string line((g.offset - l.min_offset) * l.pitch / 2, ' ');
  for (const auto& c : cells) line += std::string(l.pitch - c.size(), ' ') + c;
  return line + '\n';
}

std::vector<std::vector<std::string>> cell_text(const std::vector<Row>& rows) {
  std::vector<std::vector<std::string>> out;
  for (const auto& r : rows) {
    std::vector<std::string> cells;
    for (const auto& e : r) cells.push_back(e.to_string());
    out.push_back(std::move(cells));
  }
  return out;
}

std::string draw(const std::vector<RowGeom>& geom, const std::vector<std::vector<std::string>>& cells,
                 int centre_after = -1) {
  Layout l = layout(geom, cells);
  std::string out;
  for (std::size_t i = 0; i < geom.size(); ++i) {
    out += draw_row(l, geom[i], cells[i]);
    if (static_cast<int>(i) == centre_after) {
      // x maps to character (x + 1 - min_offset) * pitch / 2.
      int col = (1 - l.min_offset) * l.pitch / 2;
      out += std::string(std::max(col, 0), ' ') + ".\n";
    }
  }
  return out;
}

}  // namespace

std::string render(const Frame& f) {
  std::vector<std::vector<std::string>> cells;
  for (const auto& g : f.rows()) cells.emplace_back(static_cast<std::size_t>(g.len), "#");
  return draw(f.rows(), cells);
}

std::string render(const Table& t) { return draw(t.frame().rows(), cell_text(t.rows())); }

std::string render(const STable& t) {
  Table full = t.full();
  return draw(full.frame().rows(), cell_text(full.rows()), t.rank() - 1);
}

std::string render(const Tableau& t) {
  std::vector<RowGeom> geom;
  for (const auto& r : t.rows) geom.push_back({0, static_cast<int>(r.size())});
  return draw(geom, cell_text(t.rows));
}

}  // namespace wtab
