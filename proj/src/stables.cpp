#include "wtab/stables.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "wtab/swaps.hpp"
#include "wtab/tables.hpp"

namespace wtab {

namespace {

bool positive(const Entry& x) { return x.is_real() && x.re() > Rational(0); }

// Real order used to rank ♯ candidates; the padding 0 may sit in another
// integer coset than the list itself.
bool real_less(const Entry& a, const Entry& b) {
  if (a.re() != b.re()) return a.re() < b.re();
  return a.im() < b.im();
}

// Whether `xs` (sorted by real_less) splits into pairs with positive sums.
// The smallest entry takes the smallest partner that works: any partner
// that works for it works for every larger entry too.
bool pairs_positively(std::vector<Entry> xs) {
  while (!xs.empty()) {
    Entry a = xs.front();
    xs.erase(xs.begin());
    auto it = std::find_if(xs.begin(), xs.end(),
                           [&](const Entry& b) { return positive(a + b); });
    if (it == xs.end()) return false;
    xs.erase(it);
  }
  return true;
}

}  // namespace

std::optional<Entry> sharp_element(std::span<const Entry> xs) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (!comparable(xs[i], xs[j]))
        throw std::invalid_argument("sharp element needs pairwise comparable entries, got " +
                                    xs[i].to_string() + " and " + xs[j].to_string());
  std::vector<Entry> all(xs.begin(), xs.end());
  if (all.size() % 2 == 0) all.emplace_back(0);
  std::sort(all.begin(), all.end(), real_less);
  for (std::size_t i = all.size(); i-- > 0;) {
    if (i + 1 < all.size() && all[i] == all[i + 1]) continue;
    std::vector<Entry> rest = all;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (pairs_positively(std::move(rest))) return all[i];
  }
  return std::nullopt;
}

CentralSharp central_sharp(const STable& a) {
  const int m = a.rank();
  Row up = a.row(m);
  Row down = a.row(-m);
  return {sharp_element(up), sharp_element(down)};
}

STable c_central(const STable& a) {
  const int m = a.rank();
  const Row& central = a.half_rows()[m - 1];
  if (is_phi_even(static_cast<int>(central.size()), a.phi())) return a.sorted();
  // The upper central row (label -m) decides; flipping a there is the same
  // as flipping -a in the stored row m.
  std::optional<Entry> upper = sharp_element(a.row(-m));
  if (!upper) throw std::domain_error("no sharp element in the upper central row");
  Entry from = -*upper;
  std::vector<Row> half = a.half_rows();
  Row& row = half[m - 1];
  auto it = std::find(row.begin(), row.end(), from);
  // A sharp element of 0 that only came from the padding flips nothing.
  if (it != row.end()) *it = -*it;
  return STable(a.frame(), std::move(half), a.phi()).sorted();
}

STableResult sbar_star(const STable& a, int k) {
  const int m = a.rank();
  if (k < 1 || k >= m)
    throw std::out_of_range("s-bar index k=" + std::to_string(k) + " outside 1.." +
                            std::to_string(m - 1));
  RowClass pair(Table::justified({a.row(-k), a.row(-k - 1)}));
  SwapResult swapped = swap_adjacent(pair, 1);
  if (!swapped) return std::nullopt;
  std::vector<Row> half = a.half_rows();
  half[k - 1] = negate_reverse(swapped->row(1));
  half[k] = negate_reverse(swapped->row(2));
  SFrame f = act_rows(SignedPerm::generator(m, Gen{k}), a.frame());
  return STable(std::move(f), std::move(half), a.phi()).sorted();
}

STableResult apply_word(const GenWord& word, const STable& b) {
  STableResult cur = b.sorted();
  for (auto it = word.rbegin(); it != word.rend() && cur; ++it) {
    if (it->is_r()) {
      try {
        cur = c_central(*cur);
      } catch (const std::domain_error&) {
        return std::nullopt;
      }
    } else {
      cur = sbar_star(*cur, it->k);
    }
  }
  return cur;
}

STableResult wstar_act(const SignedPerm& w, const STable& b) {
  if (w.rank() != b.rank())
    throw std::invalid_argument("signed permutation rank does not match the s-table");
  return apply_word(reduced_word(w), b);
}

ComponentGroup component_group(const std::vector<int>& pairs, Phi phi) {
  ComponentGroup g;
  g.pairs = pairs;
  g.phi = phi;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i > 0 && pairs[i] > pairs[i - 1])
      throw std::invalid_argument("pair lengths must be weakly decreasing");
    if (pairs[i] < 1) throw std::invalid_argument("pair lengths must be positive");
    if (!is_phi_odd(pairs[i], phi)) continue;
    if (std::find(g.odd_parts.begin(), g.odd_parts.end(), pairs[i]) != g.odd_parts.end())
      continue;
    g.odd_parts.push_back(pairs[i]);
    g.indices.push_back(static_cast<int>(i) + 1);
  }
  return g;
}

std::vector<int> pair_lengths(const SFrame& f) {
  std::vector<int> out;
  for (const auto& g : f.half_rows()) out.push_back(g.len);
  std::sort(out.rbegin(), out.rend());
  return out;
}

STableResult c_j(const STable& b, int j) {
  ComponentGroup g = component_group(pair_lengths(b.frame()), b.phi());
  if (j < 1 || j > g.d())
    throw std::out_of_range("component group generator c_" + std::to_string(j) +
                            " does not exist (d = " + std::to_string(g.d()) + ")");
  const int m = b.rank();
  const int len = g.odd_parts[j - 1];
  int t = m;
  while (b.frame().half_rows()[t - 1].len != len) --t;
  GenWord tau;
  for (int k = m - 1; k >= t; --k) tau.push_back(Gen{k});
  GenWord tau_inv(tau.rbegin(), tau.rend());
  STableResult moved = apply_word(tau, b);
  if (!moved) return std::nullopt;
  STable flipped = c_central(*moved);
  return apply_word(tau_inv, flipped);
}

std::vector<STable> component_orbit(const STable& a) {
  ComponentGroup g = component_group(pair_lengths(a.frame()), a.phi());
  std::vector<STable> orbit{a.sorted()};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (int j = 1; j <= g.d(); ++j) {
      STableResult next;
      try {
        next = c_j(orbit[i], j);
      } catch (const std::domain_error&) {
        continue;
      }
      if (!next) continue;
      if (std::find(orbit.begin(), orbit.end(), *next) == orbit.end())
        orbit.push_back(*next);
    }
  }
  std::sort(orbit.begin(), orbit.end(), stable_less);
  return orbit;
}

namespace {

void require_pyramid_sframe(const STable& a, const SignedPerm& sigma) {
  if (sigma.rank() != a.rank())
    throw std::invalid_argument("signed permutation rank does not match the s-table");
  SFrame base = act_rows(sigma.inverse(), a.frame());
  if (!(base == symmetric_pyramid(pair_lengths(a.frame()))))
    throw std::invalid_argument("s-frame is not sigma applied to a symmetric pyramid");
}

bool fd_on_pyramid(const STable& a) {
  for (const auto& member : component_orbit(a))
    if (column_strict_witness(RowClass(left_justify(member.full())))) return true;
  return false;
}

}  // namespace

bool is_fd_evenmult(const STable& a, const SignedPerm& sigma) {
  require_pyramid_sframe(a, sigma);
  if (sigma.is_identity()) return fd_on_pyramid(a);
  STableResult back = wstar_act(sigma.inverse(), a);
  if (!back || !fd_on_pyramid(*back)) return false;
  return wstar_act(sigma, *back) == a.sorted();
}

bool iso_evenmult(const SignedPerm& sigma, const STable& b, const SignedPerm& sigma2,
                  const STable& b2) {
  if (!is_fd_evenmult(b, sigma) || !is_fd_evenmult(b2, sigma2))
    throw std::invalid_argument("iso_evenmult needs finite-dimensional labels");
  SignedPerm tau = compose(sigma2, sigma.inverse());
  return wstar_act(tau, b) == b2.sorted();
}

RestrictedWeylData restricted_weyl_data(const std::vector<int>& pairs, Phi phi) {
  RestrictedWeylData data;
  data.group = component_group(pairs, phi);
  std::map<int, int, std::greater<>> mult;
  for (int p : pairs) ++mult[p];
  for (auto [part, count] : mult)
    data.factors.push_back({part, count, is_phi_odd(part, phi)});
  const int m = static_cast<int>(pairs.size());
  // The pair p_i sits at label m + 1 - i of the symmetric pyramid.
  for (int i : data.group.indices) data.z_generators.push_back(m + 1 - i);
  for (int k = 1; k <= m; ++k) {
    int len = pairs[m - k];
    auto it = std::find(data.group.odd_parts.begin(), data.group.odd_parts.end(), len);
    int j = it == data.group.odd_parts.end()
                ? 0
                : static_cast<int>(it - data.group.odd_parts.begin()) + 1;
    data.rules.push_back({k, len, j});
  }
  return data;
}

}  // namespace wtab
