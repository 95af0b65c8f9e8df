#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wtab/entry.hpp"
#include "wtab/sgnperm.hpp"
#include "wtab/stable.hpp"

namespace wtab {

/// Result of an s-table operation; nullopt means undefined.
using STableResult = std::optional<STable>;

/// The ♯-element: pad with 0 when the length is even, then the largest
/// possible last element over all orderings whose consecutive disjoint
/// pairs (1st,2nd), (3rd,4th), ... each sum to a positive number. nullopt
/// when no such ordering exists. Throws std::invalid_argument when two
/// entries are incomparable.
std::optional<Entry> sharp_element(std::span<const Entry> xs);

/// ♯-elements of the two central rows (labels m and -m).
struct CentralSharp {
  std::optional<Entry> row_m;
  std::optional<Entry> row_minus_m;
};
CentralSharp central_sharp(const STable& a);

/// The component group operator on the central pair of rows. Identity when
/// the central row length is φ-even. Otherwise one occurrence of the
/// ♯-element a of the upper central row -m becomes -a (and -a in row m
/// becomes a). Throws std::domain_error when row -m has no ♯-element, which
/// cannot happen for finite-dimensional labels.
STable c_central(const STable& a);

/// s̄_k ⋆ A for 1 <= k < m: the type A swap of rows -k (above) and -k-1
/// (below), mirrored onto rows k and k+1. Throws std::out_of_range for a bad
/// k.
STableResult sbar_star(const STable& a, int k);

/// Applies the generators of `word` right to left: s̄_k via sbar_star, r via
/// c_central.
STableResult apply_word(const GenWord& word, const STable& b);

/// w ⋆ B along the lexicographically least reduced word of w. A failing c
/// step counts as undefined.
STableResult wstar_act(const SignedPerm& w, const STable& b);

/// Generators c_1..c_d of the component group: one for each distinct φ-odd
/// pair length, in decreasing order of length.
struct ComponentGroup {
  std::vector<int> pairs;       // p_1 >= ... >= p_r (one per pair of rows)
  Phi phi = Phi::Plus;
  std::vector<int> odd_parts;   // p_{i_1} > ... > p_{i_d}
  std::vector<int> indices;     // i_1 < ... < i_d, 1-based into `pairs`
  int d() const { return static_cast<int>(odd_parts.size()); }
};
ComponentGroup component_group(const std::vector<int>& pairs, Phi phi);

/// c_j · B = τ^{-1} ⋆ (c · (τ ⋆ B)) with τ = s̄_{m-1} ... s̄_t, where t is
/// the most central label whose row has length p_{i_j}. j is 1-based.
STableResult c_j(const STable& b, int j);

/// Closure of {A} under c_1..c_d (undefined results are skipped), sorted by
/// stable_less.
std::vector<STable> component_orbit(const STable& a);

/// Whether A on σ·P labels a finite-dimensional module. For σ = id: some
/// member of the component orbit has a column-strict rearrangement of its
/// left-justified full table. Otherwise σ^{-1} ⋆ A must be defined, finite
/// dimensional on P, and carried back to A by σ. Throws
/// std::invalid_argument when σ^{-1} does not map the frame to a symmetric
/// pyramid.
bool is_fd_evenmult(const STable& a, const SignedPerm& sigma);

/// Labels on σ·P and σ'·P give isomorphic modules iff (σ'σ^{-1}) ⋆ B = B'.
/// Throws std::invalid_argument unless both are finite dimensional.
bool iso_evenmult(const SignedPerm& sigma, const STable& b,
                  const SignedPerm& sigma2, const STable& b2);

/// Structure of the restricted Weyl group for the pair partition `pairs`.
struct RestrictedWeylData {
  struct Factor {
    int part = 0;          // pair length
    int multiplicity = 0;  // number of row pairs of that length
    bool phi_odd = false;  // identity component of type D if odd, B if even
  };
  struct LabelRule {
    int label = 0;   // k in 1..m (symmetric pyramid labels)
    int length = 0;  // length of row k
    int c_index = 0; // j with p_k = p_{i_j}; 0 when r_k acts trivially
  };
  ComponentGroup group;
  std::vector<Factor> factors;
  std::vector<int> z_generators;  // labels k with r_k generating Z^e
  std::vector<LabelRule> rules;
};
/// `pairs` lists one length per pair of rows (weakly decreasing).
RestrictedWeylData restricted_weyl_data(const std::vector<int>& pairs, Phi phi);

/// Pair lengths of an s-frame that is a row permutation of a symmetric
/// pyramid, sorted decreasing.
std::vector<int> pair_lengths(const SFrame& f);

}  // namespace wtab
