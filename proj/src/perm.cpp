#include "wtab/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "wtab/cycles.hpp"

namespace wtab {

Perm::Perm(int m) : images_(static_cast<std::size_t>(m)) {
  if (m < 1) throw std::invalid_argument("permutation degree must be >= 1");
  std::iota(images_.begin(), images_.end(), 1);
}

Perm Perm::from_images(std::vector<int> images) {
  const int m = static_cast<int>(images.size());
  std::vector<bool> seen(images.size(), false);
  for (int x : images) {
    if (x < 1 || x > m || seen[x - 1])
      throw std::invalid_argument("not a permutation of 1..m");
    seen[x - 1] = true;
  }
  Perm p(m);
  p.images_ = std::move(images);
  return p;
}

Perm Perm::simple(int m, int k) {
  if (k < 1 || k >= m)
    throw std::out_of_range("simple transposition index out of range");
  Perm p(m);
  std::swap(p.images_[k - 1], p.images_[k]);
  return p;
}

Perm Perm::parse(std::string_view text, int m) {
  Perm p(m);
  for (const auto& cycle : detail::parse_cycles(text)) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i];
      int to = cycle[(i + 1) % cycle.size()];
      if (from < 1 || from > m || to < 1 || to > m)
        throw std::invalid_argument("cycle entry out of range 1.." +
                                    std::to_string(m));
      p.images_[from - 1] = to;
    }
  }
  return from_images(p.images_);
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm p(degree());
  for (int i = 0; i < degree(); ++i) p.images_[images_[i] - 1] = i + 1;
  return p;
}

int Perm::length() const {
  int inv = 0;
  for (int i = 0; i < degree(); ++i)
    for (int j = i + 1; j < degree(); ++j)
      if (images_[i] > images_[j]) ++inv;
  return inv;
}

std::string Perm::to_cycles() const {
  std::ostringstream out;
  std::vector<bool> done(images_.size(), false);
  for (int i = 1; i <= degree(); ++i) {
    if (done[i - 1] || images_[i - 1] == i) continue;
    out << '(';
    int j = i;
    bool first = true;
    while (!done[j - 1]) {
      done[j - 1] = true;
      if (!first) out << ' ';
      out << j;
      first = false;
      j = images_[j - 1];
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "id" : s;
}

Perm compose(const Perm& u, const Perm& v) {
  if (u.degree() != v.degree())
    throw std::invalid_argument("permutation degree mismatch");
  std::vector<int> images(static_cast<std::size_t>(u.degree()));
  for (int i = 1; i <= u.degree(); ++i) images[i - 1] = u(v(i));
  return Perm::from_images(std::move(images));
}

namespace {

// s_k is a left descent of σ iff k+1 precedes k in one-line notation.
bool is_left_descent(const Perm& sigma, int k) {
  Perm inv = sigma.inverse();
  return inv(k) > inv(k + 1);
}

void collect_words(const Perm& sigma, std::vector<int>& prefix,
                   std::vector<std::vector<int>>& out) {
  if (sigma.is_identity()) {
    out.push_back(prefix);
    return;
  }
  for (int k = 1; k < sigma.degree(); ++k) {
    if (!is_left_descent(sigma, k)) continue;
    prefix.push_back(k);
    collect_words(compose(Perm::simple(sigma.degree(), k), sigma), prefix,
                  out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<int> reduced_word(const Perm& sigma) {
  std::vector<int> word;
  Perm rest = sigma;
  while (!rest.is_identity()) {
    int k = 1;
    while (!is_left_descent(rest, k)) ++k;
    word.push_back(k);
    rest = compose(Perm::simple(rest.degree(), k), rest);
  }
  return word;
}

std::vector<std::vector<int>> all_reduced_words(const Perm& sigma) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  collect_words(sigma, prefix, out);
  return out;
}

Perm from_word(int m, const std::vector<int>& word) {
  Perm p(m);
  for (int k : word) p = compose(p, Perm::simple(m, k));
  return p;
}

std::vector<Perm> all_perms(int m) {
  std::vector<int> images(static_cast<std::size_t>(m));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace wtab
