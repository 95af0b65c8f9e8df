#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wtab/frames.hpp"
#include "wtab/stable.hpp"

namespace wtab {

/// Generator of W_m: k = 0 is r = (m, -m), k = 1..m-1 is
/// s̄_k = (k, k+1)(-k, -k-1). Generators are ordered r < s̄_1 < s̄_2 < ...
struct Gen {
  int k = 0;
  bool is_r() const { return k == 0; }
  std::string to_string() const;
  friend auto operator<=>(const Gen&, const Gen&) = default;
};

using GenWord = std::vector<Gen>;

/// Parses "r s1 r" (also "s̄1", "sbar1").
GenWord parse_gen_word(std::string_view text);
std::string to_string(const GenWord& w);

/// Signed permutation of {±1..±m} with w(-i) = -w(i).
class SignedPerm {
public:
  explicit SignedPerm(int m = 1);

  /// images[i-1] = w(i). Throws unless |w(1)|..|w(m)| permutes 1..m.
  static SignedPerm from_images(std::vector<int> images);

  static SignedPerm generator(int m, Gen g);

  /// Cycle notation over signed labels, e.g. "(1 -2)(2 -1)"; a cycle whose
  /// mirror is absent is completed with it. Also accepts a generator word
  /// such as "r s1 r", and "id".
  static SignedPerm parse(std::string_view text, int m);

  int rank() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const;
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  SignedPerm inverse() const;

  /// Coxeter length in the generators r, s̄_1..s̄_{m-1}.
  int length() const;

  std::string to_cycles() const;

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;

private:
  std::vector<int> images_;
};

/// (u v)(i) = u(v(i)): v acts first. Throws on a rank mismatch.
SignedPerm compose(const SignedPerm& u, const SignedPerm& v);

/// Lexicographically least reduced word [g_1..g_l], w = g_1 ... g_l.
GenWord reduced_word(const SignedPerm& w);

std::vector<GenWord> all_reduced_words(const SignedPerm& w);

SignedPerm from_word(int m, const GenWord& word);

/// All 2^m m! elements, sorted.
std::vector<SignedPerm> all_signed_perms(int m);

/// The row labelled i moves to label w(i); rows stay mirror images.
SFrame act_rows(const SignedPerm& w, const SFrame& f);
STable act_rows(const SignedPerm& w, const STable& t);

}  // namespace wtab
