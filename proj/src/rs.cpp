#include "wtab/rs.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace wtab {

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  return Partition(std::move(parts));
}

Tableau Tableau::row_class() const {
  Tableau t;
  for (const auto& r : rows) t.rows.push_back(canonical_row(r));
  return t;
}

bool Tableau::is_valid() const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& r = rows[i];
    if (r.empty()) return false;
    if (i > 0 && r.size() > rows[i - 1].size()) return false;
    for (std::size_t a = 0; a < r.size(); ++a)
      for (std::size_t b = a + 1; b < r.size(); ++b)
        if (strictly_greater(r[a], r[b])) return false;
    if (i > 0) {
      const Row& up = rows[i - 1];
      for (std::size_t c = 0; c < r.size(); ++c)
        if (comparable(up[c], r[c]) && !strictly_less(up[c], r[c])) return false;
    }
  }
  return true;
}

Tableau rs_tableau(std::span<const Entry> w) {
  Tableau t;
  for (const Entry& letter : w) {
    Entry x = letter;
    for (std::size_t i = 0;; ++i) {
      if (i == t.rows.size()) {
        t.rows.push_back({x});
        break;
      }
      Row& r = t.rows[i];
      auto it = std::find_if(r.begin(), r.end(),
                             [&](const Entry& y) { return strictly_greater(y, x); });
      if (it == r.end()) {
        r.push_back(x);
        break;
      }
      std::swap(*it, x);
    }
  }
  return t;
}

Tableau rs_class(const RowClass& rc) {
  auto w = word(rc.table());
  return rs_tableau(w);
}

Partition greene_shape(std::span<const Entry> w) {
  const std::size_t n = w.size();
  if (n > kGreeneMaxLength)
    throw std::length_error("greene_shape: word longer than " +
                            std::to_string(kGreeneMaxLength));
  if (n == 0) return Partition{};

  // Positions i < j are related when w_i <= w_j; a subset is a union of k
  // weakly increasing subsequences iff its largest unrelated subset
  // (antichain) has at most k elements.
  std::vector<std::uint32_t> related(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Entry& lo = i < j ? w[i] : w[j];
      const Entry& hi = i < j ? w[j] : w[i];
      Order o = cmp_partial(lo, hi);
      if (o == Order::Less || o == Order::Equal) related[i] |= 1u << j;
    }

  // width[s] = largest antichain in s: either drop the lowest position or
  // keep it and drop everything related to it.
  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::uint8_t> width(static_cast<std::size_t>(full) + 1, 0);
  std::vector<int> largest(n + 1, 0);  // largest subset of each exact width
  for (std::uint32_t s = 1; s <= full; ++s) {
    int low = std::countr_zero(s);
    std::uint32_t rest = s & (s - 1);
    auto wd = std::max<std::uint8_t>(
        width[rest], static_cast<std::uint8_t>(1 + width[rest & ~related[low]]));
    width[s] = wd;
    largest[wd] = std::max(largest[wd], std::popcount(s));
  }
  std::vector<int> best(n + 1, 0);  // best[k]: largest subset of width <= k
  for (std::size_t k = 1; k <= n; ++k) best[k] = std::max(best[k - 1], largest[k]);

  std::vector<int> parts;
  for (std::size_t k = 1; k <= n; ++k) {
    int part = best[k] - best[k - 1];
    if (part == 0) break;
    parts.push_back(part);
  }
  return Partition(std::move(parts));
}

bool same_annihilator(const Weight& lambda, const Weight& mu) {
  if (lambda.coeffs.size() != mu.coeffs.size())
    throw std::invalid_argument("weights have different lengths");
  return rs_tableau(lambda.coeffs).row_class() == rs_tableau(mu.coeffs).row_class();
}

Weight to_reading_order(const Weight& lambda, const Table& k) {
  Weight out;
  for (const auto& label : word(k)) {
    if (!label.is_integer())
      throw std::invalid_argument("coordinate table must hold integers");
    auto v = label.re().numerator();
    if (v < 1 || v > static_cast<std::int64_t>(lambda.coeffs.size()))
      throw std::invalid_argument("coordinate label out of range");
    out.coeffs.push_back(lambda.coeffs[static_cast<std::size_t>(v - 1)]);
  }
  return out;
}

}  // namespace wtab
