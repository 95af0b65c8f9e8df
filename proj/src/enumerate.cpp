#include "wtab/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "wtab/stables.hpp"
#include "wtab/swaps.hpp"

namespace wtab {

EnumCapExceeded::EnumCapExceeded(std::uint64_t count, std::uint64_t cap)
    : std::length_error("enumeration would visit " + std::to_string(count) +
                        " candidates, above the cap of " + std::to_string(cap) +
                        " (raise WTAB_MAX_ENUM to allow it)"),
      count_(count),
      cap_(cap) {}

std::uint64_t enum_cap_from_env() {
  const char* v = std::getenv("WTAB_MAX_ENUM");
  if (!v || !*v) return kDefaultEnumCap;
  char* end = nullptr;
  unsigned long long n = std::strtoull(v, &end, 10);
  if (*end != '\0' || n == 0) return kDefaultEnumCap;
  return n;
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

// C(n + k - 1, k): multisets of size k from n letters.
std::uint64_t multichoose(std::uint64_t n, std::uint64_t k) {
  if (n == 0) return k == 0 ? 1 : 0;
  unsigned __int128 exact = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // Exact since each prefix product is itself a binomial coefficient.
    exact = exact * (n - 1 + i) / i;
    if (exact > kSaturated / 2) return kSaturated;
  }
  return static_cast<std::uint64_t>(exact);
}

std::uint64_t power(std::uint64_t n, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r = mul(r, n);
  return r;
}

std::vector<Entry> normalise(std::vector<Entry> alphabet) {
  std::sort(alphabet.begin(), alphabet.end(), canonical_less);
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  return alphabet;
}

// Index vectors for one row, in lexicographic order.
std::vector<std::vector<int>> row_choices(int len, int n, bool multisets) {
  std::vector<std::vector<int>> out;
  if (n == 0) return out;
  std::vector<int> idx(static_cast<std::size_t>(len), 0);
  while (true) {
    out.push_back(idx);
    int pos = len - 1;
    while (pos >= 0 && idx[pos] == n - 1) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int q = pos + 1; q < len; ++q) idx[q] = multisets ? idx[pos] : 0;
  }
  return out;
}

// Calls visit(rows) for every combination, first row varying slowest.
template <class Visit>
void product(const std::vector<std::vector<Row>>& per_row, Visit&& visit) {
  const std::size_t m = per_row.size();
  for (const auto& r : per_row)
    if (r.empty()) return;
  std::vector<std::size_t> pos(m, 0);
  std::vector<Row> rows(m);
  while (true) {
    for (std::size_t i = 0; i < m; ++i) rows[i] = per_row[i][pos[i]];
    visit(rows);
    std::size_t i = m;
    while (i > 0 && pos[i - 1] + 1 == per_row[i - 1].size()) --i;
    if (i == 0) break;
    ++pos[i - 1];
    for (std::size_t q = i; q < m; ++q) pos[q] = 0;
  }
}

std::vector<Row> rows_for(int len, const std::vector<Entry>& alphabet, bool multisets) {
  std::vector<Row> out;
  for (const auto& idx : row_choices(len, static_cast<int>(alphabet.size()), multisets)) {
    Row r;
    for (int i : idx) r.push_back(alphabet[i]);
    out.push_back(std::move(r));
  }
  return out;
}

bool pairwise_comparable(const std::vector<Row>& rows) {
  const Entry* first = nullptr;
  for (const auto& r : rows)
    for (const auto& e : r) {
      if (!first) first = &e;
      else if (!comparable(*first, e)) return false;
    }
  return true;
}

void check_cap(std::uint64_t count, std::uint64_t cap) {
  if (count > cap) throw EnumCapExceeded(count, cap);
}

}  // namespace

std::uint64_t count_candidates(const std::vector<int>& lengths, std::size_t alphabet_size,
                               bool multisets) {
  std::uint64_t total = 1;
  for (int len : lengths)
    total = mul(total, multisets ? multichoose(alphabet_size, static_cast<std::uint64_t>(len))
                                 : power(alphabet_size, len));
  return total;
}

std::vector<Table> enumerate_tables(const Frame& f, std::vector<Entry> alphabet,
                                    const TableFilter& filter, std::uint64_t cap) {
  alphabet = normalise(std::move(alphabet));
  const bool multisets = filter.row_classes_only;
  check_cap(count_candidates(f.lengths(), alphabet.size(), multisets), cap);
  std::vector<std::vector<Row>> per_row;
  for (int len : f.lengths()) per_row.push_back(rows_for(len, alphabet, multisets));
  std::vector<Table> out;
  product(per_row, [&](const std::vector<Row>& rows) {
    if (filter.single_coset && !pairwise_comparable(rows)) return;
    Table t(f, rows);
    if (filter.fd_sigma && !is_fd_typeA(RowClass(t), *filter.fd_sigma)) return;
    out.push_back(std::move(t));
  });
  return out;
}

std::vector<STable> enumerate_stables(const SFrame& f, Phi phi, std::vector<Entry> alphabet,
                                      const STableFilter& filter, std::uint64_t cap) {
  alphabet = normalise(std::move(alphabet));
  const bool multisets = filter.weakly_increasing;
  std::vector<int> lengths;
  for (const auto& g : f.half_rows()) lengths.push_back(g.len);
  check_cap(count_candidates(lengths, alphabet.size(), multisets), cap);
  std::vector<std::vector<Row>> per_row;
  for (int len : lengths) per_row.push_back(rows_for(len, alphabet, multisets));
  std::vector<STable> out;
  product(per_row, [&](const std::vector<Row>& rows) {
    std::optional<STable> t;
    try {
      t.emplace(f, rows, phi);
    } catch (const std::invalid_argument&) {
      return;  // integrality rule for φ
    }
    if (filter.fd_sigma && !is_fd_evenmult(*t, *filter.fd_sigma)) return;
    out.push_back(std::move(*t));
  });
  return out;
}

std::vector<Entry> integer_alphabet(int lo, int hi) {
  std::vector<Entry> out;
  for (int x = lo; x <= hi; ++x) out.emplace_back(x);
  return out;
}

}  // namespace wtab
