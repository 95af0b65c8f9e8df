#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace wtab {

/// Element of the symmetric group S_m acting on row indices 1..m.
class Perm {
public:
  /// Identity of S_m.
  explicit Perm(int m = 1);

  /// One-line notation: images[i-1] = σ(i). Throws if not a bijection.
  static Perm from_images(std::vector<int> images);

  /// The simple transposition s_k = (k, k+1), 1 <= k < m.
  static Perm simple(int m, int k);

  /// Cycle notation such as "(1 2 3)(4 5)"; "id" or "()" is the identity.
  static Perm parse(std::string_view cycles, int m);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(i - 1); }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;

  /// Number of inversions; the Coxeter length in the generators s_k.
  int length() const;

  std::string to_cycles() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

private:
  std::vector<int> images_;
};

/// (u * v)(i) = u(v(i)): v acts first.
Perm compose(const Perm& u, const Perm& v);

/// Word [i_1, ..., i_l] with σ = s_{i_1} ... s_{i_l}; lexicographically least
/// among all reduced words.
std::vector<int> reduced_word(const Perm& sigma);

/// Every reduced word of σ, in lexicographic order.
std::vector<std::vector<int>> all_reduced_words(const Perm& sigma);

/// Product s_{i_1} ... s_{i_l} in S_m.
Perm from_word(int m, const std::vector<int>& word);

/// All elements of S_m in lexicographic one-line order.
std::vector<Perm> all_perms(int m);

}  // namespace wtab
