#pragma once

#include <optional>
#include <vector>

#include "wtab/perm.hpp"
#include "wtab/tables.hpp"

namespace wtab {

/// Result of a row swap or of the ⋆-action; nullopt means undefined.
using SwapResult = std::optional<RowClass>;

/// s_k ⋆ Ā for rows k (above) and k+1 (below), 1 <= k < m.
///
/// Equal lengths: Ā unchanged. Otherwise the swap is defined iff the two
/// left-justified rows are row equivalent to column strict. With c = row k
/// (length s) and d = row k+1 (length t):
///  - s < t: the s entries e of d with the largest sum that can be matched
///    below c pointwise (e_i < c_i) become row k+1; row k is c plus the rest
///    of d;
///  - s > t: the t entries e of c with the smallest sum that can be matched
///    above d pointwise (e_i > d_i) become row k; row k+1 is d plus the rest
///    of c.
/// Row geometries travel with the swap. Throws std::out_of_range for a bad k.
SwapResult swap_adjacent(const RowClass& a, int k);

/// Applies s_{i_1} ⋆ (s_{i_2} ⋆ (... (s_{i_l} ⋆ Ā))); undefined if any step is.
SwapResult apply_word(const std::vector<int>& word, const RowClass& a);

/// σ ⋆ Ā along the lexicographically least reduced word of σ.
SwapResult star_act(const Perm& sigma, const RowClass& a);

struct WellDefinednessReport {
  std::vector<std::vector<int>> words;
  std::vector<SwapResult> results;
  /// Indices into `words` whose result differs from words[0].
  std::vector<std::size_t> divergent;

  bool agree() const { return divergent.empty(); }
};

/// Evaluates σ ⋆ Ā along every reduced word of σ.
WellDefinednessReport verify_star_well_defined(const RowClass& a, const Perm& sigma);

/// Whether Ā on the frame σ·P labels a finite-dimensional module, P a
/// pyramid. For σ = id: l(Ā) is row equivalent to column strict. Otherwise
/// σ^{-1} ⋆ Ā must be defined, finite dimensional on P, and carried back to
/// Ā by σ. Throws std::invalid_argument when σ^{-1}·F is not a pyramid.
bool is_fd_typeA(const RowClass& a, const Perm& sigma);

struct FdReport {
  bool finite_dimensional = false;
  /// Diagnostic: the RS shape of Ā equals the partition of P.
  bool rs_shape_matches = false;
};

FdReport fd_typeA_report(const RowClass& a, const Perm& sigma);

/// L_σ(B̄) ≅ L_σ'(B̄') for finite-dimensional labels: equal RS classes.
/// Throws std::invalid_argument if either label is not finite dimensional
/// and std::logic_error if the RS test and τ ⋆ B̄ = B̄' (τ = σ'σ^{-1})
/// disagree.
bool iso_typeA(const Perm& sigma, const RowClass& b, const Perm& sigma2,
               const RowClass& b2);

}  // namespace wtab
