#include "wtab/json_io.hpp"

#include <algorithm>

namespace wtab {

JsonError::JsonError(const std::string& what, std::size_t line, std::size_t column)
    : std::invalid_argument(line ? what + " at line " + std::to_string(line) + ", column " +
                                       std::to_string(column)
                                 : what),
      line_(line),
      column_(column) {}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = e.what();
    auto pos = msg.find("; ");
    throw JsonError("JSON syntax error" + (pos == std::string::npos ? "" : ": " + msg.substr(pos + 2)),
                    line, column);
  }
}

namespace {

Json rational_json(const Rational& q) {
  if (q.denominator() == 1) return q.numerator();
  return Json{{"num", q.numerator()}, {"den", q.denominator()}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_object() && j.contains("num") && j.contains("den")) {
    const Json& n = j.at("num");
    const Json& d = j.at("den");
    if (!n.is_number_integer() || !d.is_number_integer())
      throw JsonError("\"num\" and \"den\" must be integers");
    if (d.get<std::int64_t>() == 0) throw JsonError("zero denominator");
    return Rational(n.get<std::int64_t>(), d.get<std::int64_t>());
  }
  if (j.is_string()) {
    Entry e = parse_entry(j.get<std::string>());
    if (!e.is_real()) throw JsonError("expected a real number, got " + j.dump());
    return e.re();
  }
  throw JsonError("expected a number, got " + j.dump());
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw JsonError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

void require_kind(const Json& j, const std::string& kind) {
  if (j.is_object() && j.contains("kind") && j.at("kind") != kind)
    throw JsonError("expected kind \"" + kind + "\", got " + j.at("kind").dump());
}

std::vector<RowGeom> geometry_from_json(const Json& rows) {
  if (!rows.is_array()) throw JsonError("\"rows\" must be an array");
  std::vector<RowGeom> out;
  for (const auto& r : rows) {
    const Json& off = require(r, "offset");
    const Json& len = require(r, "len");
    if (!off.is_number_integer() || !len.is_number_integer())
      throw JsonError("row \"offset\" and \"len\" must be integers");
    if (len.get<int>() < 1) throw JsonError("row length must be positive");
    out.push_back({off.get<int>(), len.get<int>()});
  }
  return out;
}

Json geometry_json(const std::vector<RowGeom>& rows) {
  Json out = Json::array();
  for (const auto& g : rows) out.push_back({{"offset", g.offset}, {"len", g.len}});
  return out;
}

Json rows_json(const std::vector<Row>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json jr = Json::array();
    for (const auto& e : r) jr.push_back(to_json(e));
    out.push_back(std::move(jr));
  }
  return out;
}

std::vector<Row> rows_from_json(const Json& j) {
  if (!j.is_array()) throw JsonError("rows must be an array of arrays");
  std::vector<Row> out;
  for (const auto& r : j) out.push_back(row_from_json(r));
  return out;
}

// Frame and table errors from the library become input errors.
template <class F>
auto wrap(F&& f) {
  try {
    return f();
  } catch (const JsonError&) {
    throw;
  } catch (const FrameError&) {
    throw;
  } catch (const Json::exception& e) {
    throw JsonError(e.what());
  } catch (const std::invalid_argument& e) {
    throw JsonError(e.what());
  }
}

}  // namespace

Json to_json(const Entry& e) {
  if (e.is_real()) return rational_json(e.re());
  return Json{{"re", rational_json(e.re())}, {"im", rational_json(e.im())}};
}

Entry entry_from_json(const Json& j) {
  return wrap([&] {
    if (j.is_string()) return parse_entry(j.get<std::string>());
    if (j.is_object() && (j.contains("re") || j.contains("im"))) {
      Rational re = j.contains("re") ? rational_from_json(j.at("re")) : Rational(0);
      Rational im = j.contains("im") ? rational_from_json(j.at("im")) : Rational(0);
      return Entry(re, im);
    }
    return Entry(rational_from_json(j));
  });
}

Row row_from_json(const Json& j) {
  if (!j.is_array()) throw JsonError("a row must be an array of entries");
  Row r;
  for (const auto& e : j) r.push_back(entry_from_json(e));
  return r;
}

Json to_json(const Frame& f) {
  return Json{{"kind", "frame"}, {"rows", geometry_json(f.rows())}};
}

Json to_json(const SFrame& f) {
  return Json{{"kind", "sframe"}, {"rows", geometry_json(f.half_rows())}};
}

Json to_json(const Table& t) {
  return Json{{"kind", "table"}, {"frame", to_json(t.frame())}, {"rows", rows_json(t.rows())}};
}

Json to_json(const STable& t) {
  return Json{{"kind", "stable"},
              {"phi", to_string(t.phi())},
              {"sframe", to_json(t.frame())},
              {"half_rows", rows_json(t.half_rows())}};
}

Frame frame_from_json(const Json& j) {
  return wrap([&] {
    require_kind(j, "frame");
    return Frame(geometry_from_json(require(j, "rows")));
  });
}

SFrame sframe_from_json(const Json& j) {
  return wrap([&] {
    require_kind(j, "sframe");
    return SFrame(geometry_from_json(require(j, "rows")));
  });
}

Table table_from_json(const Json& j) {
  return wrap([&] {
    require_kind(j, "table");
    std::vector<Row> rows = rows_from_json(require(j, "rows"));
    if (!j.contains("frame")) return Table::justified(std::move(rows));
    return Table(frame_from_json(j.at("frame")), std::move(rows));
  });
}

STable stable_from_json(const Json& j) {
  return wrap([&] {
    require_kind(j, "stable");
    const Json& phi = require(j, "phi");
    if (!phi.is_string()) throw JsonError("\"phi\" must be \"+\" or \"-\"");
    std::vector<Row> half = rows_from_json(require(j, "half_rows"));
    if (j.contains("sframe"))
      return STable(sframe_from_json(j.at("sframe")), std::move(half),
                    parse_phi(phi.get<std::string>()));
    std::vector<RowGeom> geom;
    for (const auto& r : half) {
      int len = static_cast<int>(r.size());
      geom.push_back({-(len - 1), len});
    }
    return STable(SFrame(std::move(geom)), std::move(half), parse_phi(phi.get<std::string>()));
  });
}

std::variant<Table, STable> any_table_from_json(const Json& j) {
  if (j.is_object() && j.contains("kind") && j.at("kind") == "stable")
    return stable_from_json(j);
  if (j.is_object() && !j.contains("kind") && j.contains("half_rows"))
    return stable_from_json(j);
  return table_from_json(j);
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace wtab
