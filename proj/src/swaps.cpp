#include "wtab/swaps.hpp"

#include <algorithm>
#include <stdexcept>

#include "wtab/rs.hpp"

namespace wtab {

namespace {

// Removes and returns the best partner of `x` from `pool`: the largest entry
// strictly below x (take_below) or the smallest entry strictly above x.
std::optional<Entry> take_partner(Row& pool, const Entry& x, bool take_below) {
  auto best = pool.end();
  for (auto it = pool.begin(); it != pool.end(); ++it) {
    Order o = cmp_partial(*it, x);
    if (take_below ? o != Order::Less : o != Order::Greater) continue;
    if (best == pool.end() ||
        (take_below ? strictly_greater(*it, *best) : strictly_less(*it, *best)))
      best = it;
  }
  if (best == pool.end()) return std::nullopt;
  Entry e = *best;
  pool.erase(best);
  return e;
}

bool rows_admit_column_strict(const Row& upper, const Row& lower) {
  Table pair = Table::justified({upper, lower});
  return column_strict_witness(RowClass(pair)).has_value();
}

}  // namespace

SwapResult swap_adjacent(const RowClass& a, int k) {
  const int m = a.num_rows();
  if (k < 1 || k >= m)
    throw std::out_of_range("swap index k=" + std::to_string(k) +
                            " outside 1.." + std::to_string(m - 1));
  const Row& c = a.row(k);
  const Row& d = a.row(k + 1);
  if (c.size() == d.size()) return a;
  if (!rows_admit_column_strict(c, d)) return std::nullopt;

  const bool upper_shorter = c.size() < d.size();
  // The shorter row dominates the selection; process it in descending order.
  Row dominating = upper_shorter ? c : d;
  Row pool = upper_shorter ? d : c;
  std::sort(dominating.begin(), dominating.end(), canonical_less);
  std::reverse(dominating.begin(), dominating.end());
  Row chosen;
  for (const Entry& x : dominating) {
    auto e = take_partner(pool, x, upper_shorter);
    if (!e) throw std::logic_error("swap selection failed after the column-strict gate");
    chosen.push_back(*e);
  }

  std::vector<Row> rows = a.rows();
  if (upper_shorter) {
    Row upper = c;
    upper.insert(upper.end(), pool.begin(), pool.end());
    rows[k - 1] = std::move(upper);
    rows[k] = std::move(chosen);
  } else {
    Row lower = d;
    lower.insert(lower.end(), pool.begin(), pool.end());
    rows[k - 1] = std::move(chosen);
    rows[k] = std::move(lower);
  }
  Frame f = permute_rows(a.frame(), Perm::simple(m, k));
  return RowClass(Table(std::move(f), std::move(rows)));
}

SwapResult apply_word(const std::vector<int>& word, const RowClass& a) {
  SwapResult cur = a;
  for (auto it = word.rbegin(); it != word.rend() && cur; ++it)
    cur = swap_adjacent(*cur, *it);
  return cur;
}

SwapResult star_act(const Perm& sigma, const RowClass& a) {
  if (sigma.degree() != a.num_rows())
    throw std::invalid_argument("permutation degree does not match row count");
  return apply_word(reduced_word(sigma), a);
}

WellDefinednessReport verify_star_well_defined(const RowClass& a, const Perm& sigma) {
  if (sigma.degree() != a.num_rows())
    throw std::invalid_argument("permutation degree does not match row count");
  WellDefinednessReport report;
  report.words = all_reduced_words(sigma);
  for (std::size_t i = 0; i < report.words.size(); ++i) {
    report.results.push_back(apply_word(report.words[i], a));
    if (report.results[i] != report.results.front()) report.divergent.push_back(i);
  }
  return report;
}

namespace {

void require_pyramid_frame(const RowClass& a, const Perm& sigma) {
  if (sigma.degree() != a.num_rows())
    throw std::invalid_argument("permutation degree does not match row count");
  if (!permute_rows(a.frame(), sigma.inverse()).is_pyramid())
    throw std::invalid_argument("frame is not sigma applied to a pyramid");
}

bool fd_on_pyramid(const RowClass& a) {
  return column_strict_witness(RowClass(left_justify(a.table()))).has_value();
}

}  // namespace

bool is_fd_typeA(const RowClass& a, const Perm& sigma) {
  require_pyramid_frame(a, sigma);
  if (sigma.is_identity()) return fd_on_pyramid(a);
  auto back = star_act(sigma.inverse(), a);
  if (!back || !fd_on_pyramid(*back)) return false;
  return star_act(sigma, *back) == a;
}

FdReport fd_typeA_report(const RowClass& a, const Perm& sigma) {
  FdReport r;
  r.finite_dimensional = is_fd_typeA(a, sigma);
  r.rs_shape_matches = rs_class(a).shape() == partition_of(a.frame().lengths());
  return r;
}

bool iso_typeA(const Perm& sigma, const RowClass& b, const Perm& sigma2,
               const RowClass& b2) {
  if (!is_fd_typeA(b, sigma) || !is_fd_typeA(b2, sigma2))
    throw std::invalid_argument("iso_typeA needs finite-dimensional labels");
  bool same_rs = rs_class(b).row_class() == rs_class(b2).row_class();
  Perm tau = compose(sigma2, sigma.inverse());
  bool transported = star_act(tau, b) == b2;
  if (same_rs != transported)
    throw std::logic_error("RS comparison and star transport disagree");
  return same_rs;
}

}  // namespace wtab
