#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "wtab/entry.hpp"
#include "wtab/frames.hpp"
#include "wtab/stable.hpp"
#include "wtab/tables.hpp"

namespace wtab {

using Json = nlohmann::json;

/// Malformed input. line/column are 1-based and 0 when not applicable.
class JsonError : public std::invalid_argument {
public:
  JsonError(const std::string& what, std::size_t line = 0, std::size_t column = 0);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses text, reporting syntax errors with line and column.
Json parse_json(std::string_view text);

/// Integers as numbers, other rationals as {"num","den"}, non-real entries
/// as {"re","im"}. Strings such as "1/2-3i" are also accepted on input.
Json to_json(const Entry& e);
Entry entry_from_json(const Json& j);

Json to_json(const Frame& f);
Json to_json(const SFrame& f);
Json to_json(const Table& t);
Json to_json(const STable& t);

Frame frame_from_json(const Json& j);
SFrame sframe_from_json(const Json& j);
/// A missing frame means the left-justified frame of the rows.
Table table_from_json(const Json& j);
/// A missing s-frame means rows centred on x = 0, in label order.
STable stable_from_json(const Json& j);
Row row_from_json(const Json& j);

/// A "table" or "stable" document.
std::variant<Table, STable> any_table_from_json(const Json& j);

/// Canonical text: sorted keys, no whitespace.
std::string dump(const Json& j);

}  // namespace wtab
