#include "wtab/sgnperm.hpp"

#include <algorithm>
#include <cstdlib>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "wtab/cycles.hpp"

namespace wtab {

std::string Gen::to_string() const {
  return is_r() ? "r" : "s" + std::to_string(k);
}

GenWord parse_gen_word(std::string_view text) {
  GenWord word;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "r") {
      word.push_back({0});
      continue;
    }
    std::string digits;
    if (tok.rfind("sbar", 0) == 0) {
      digits = tok.substr(4);
    } else if (tok.rfind("s̄", 0) == 0) {
      digits = tok.substr(std::string("s̄").size());
    } else if (tok.rfind('s', 0) == 0) {
      digits = tok.substr(1);
    } else {
      throw std::invalid_argument("unknown generator '" + tok + "'");
    }
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(),
                     [](unsigned char c) { return std::isdigit(c); }))
      throw std::invalid_argument("unknown generator '" + tok + "'");
    int k = std::stoi(digits);
    if (k < 1) throw std::invalid_argument("generator index must be >= 1");
    word.push_back({k});
  }
  return word;
}

std::string to_string(const GenWord& w) {
  std::string s;
  for (const auto& g : w) {
    if (!s.empty()) s += ' ';
    s += g.to_string();
  }
  return s;
}

SignedPerm::SignedPerm(int m) : images_(static_cast<std::size_t>(m)) {
  if (m < 1) throw std::invalid_argument("signed permutation rank must be >= 1");
  std::iota(images_.begin(), images_.end(), 1);
}

SignedPerm SignedPerm::from_images(std::vector<int> images) {
  const int m = static_cast<int>(images.size());
  std::vector<bool> seen(images.size(), false);
  for (int x : images) {
    int a = std::abs(x);
    if (a < 1 || a > m || seen[a - 1])
      throw std::invalid_argument("not a signed permutation of ±1..±m");
    seen[a - 1] = true;
  }
  SignedPerm w(m);
  w.images_ = std::move(images);
  return w;
}

SignedPerm SignedPerm::generator(int m, Gen g) {
  SignedPerm w(m);
  if (g.is_r()) {
    w.images_[m - 1] = -m;
  } else {
    if (g.k >= m) throw std::out_of_range("generator index out of range");
    std::swap(w.images_[g.k - 1], w.images_[g.k]);
  }
  return w;
}

SignedPerm SignedPerm::parse(std::string_view text, int m) {
  std::string t(text);
  if (t.find('(') == std::string::npos) {
    std::string trimmed;
    for (char c : t)
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.empty() || trimmed == "id") return SignedPerm(m);
    return from_word(m, parse_gen_word(text));
  }
  std::map<int, int> map;
  auto cycles = detail::parse_cycles(text);
  std::set<int> mentioned;
  for (const auto& c : cycles)
    for (int x : c) mentioned.insert(x);
  for (const auto& c : cycles) {
    for (int x : c)
      if (x == 0 || std::abs(x) > m)
        throw std::invalid_argument("signed label out of range ±1..±" +
                                    std::to_string(m));
    for (std::size_t i = 0; i < c.size(); ++i) map[c[i]] = c[(i + 1) % c.size()];
    bool mirror_absent = std::none_of(c.begin(), c.end(),
                                      [&](int x) { return mentioned.count(-x); });
    if (mirror_absent)
      for (std::size_t i = 0; i < c.size(); ++i)
        map[-c[i]] = -c[(i + 1) % c.size()];
  }
  std::vector<int> images(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    int pos = map.count(i) ? map[i] : i;
    int neg = map.count(-i) ? map[-i] : -i;
    if (neg != -pos)
      throw std::invalid_argument("cycles do not commute with negation at label " +
                                  std::to_string(i));
    images[i - 1] = pos;
  }
  return from_images(std::move(images));
}

int SignedPerm::operator()(int i) const {
  if (i == 0 || std::abs(i) > rank()) throw std::out_of_range("label out of range");
  return i > 0 ? images_[i - 1] : -images_[-i - 1];
}

bool SignedPerm::is_identity() const {
  for (int i = 0; i < rank(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

SignedPerm SignedPerm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= rank(); ++i) {
    int w = images_[i - 1];
    inv[std::abs(w) - 1] = w > 0 ? i : -i;
  }
  return from_images(std::move(inv));
}

int SignedPerm::length() const {
  // Relabel i -> m+1-i so that r becomes the sign change of 1; then the
  // usual type B formula inv(v) - sum of negative window entries applies.
  const int m = rank();
  auto relabel = [m](int x) { return x > 0 ? m + 1 - x : -(m + 1 + x); };
  std::vector<int> v(static_cast<std::size_t>(m));
  for (int j = 1; j <= m; ++j) v[j - 1] = relabel((*this)(relabel(j)));
  int len = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j)
      if (v[i] > v[j]) ++len;
    if (v[i] < 0) len -= v[i];
  }
  return len;
}

std::string SignedPerm::to_cycles() const {
  std::ostringstream out;
  std::set<int> done;
  for (int s : {1, -1}) {
    for (int i = 1; i <= rank(); ++i) {
      int start = s * i;
      if (done.count(start) || (*this)(start) == start) continue;
      out << '(';
      int j = start;
      bool first = true;
      while (!done.count(j)) {
        done.insert(j);
        if (!first) out << ' ';
        out << j;
        first = false;
        j = (*this)(j);
      }
      out << ')';
    }
  }
  std::string s = out.str();
  return s.empty() ? "id" : s;
}

SignedPerm compose(const SignedPerm& u, const SignedPerm& v) {
  if (u.rank() != v.rank()) throw std::invalid_argument("signed permutation rank mismatch");
  std::vector<int> images(static_cast<std::size_t>(u.rank()));
  for (int i = 1; i <= u.rank(); ++i) images[i - 1] = u(v(i));
  return SignedPerm::from_images(std::move(images));
}

namespace {

bool is_left_descent(const SignedPerm& w, Gen g) {
  return compose(SignedPerm::generator(w.rank(), g), w).length() < w.length();
}

void collect_words(const SignedPerm& w, GenWord& prefix, std::vector<GenWord>& out) {
  if (w.is_identity()) {
    out.push_back(prefix);
    return;
  }
  for (int k = 0; k < w.rank(); ++k) {
    Gen g{k};
    if (!is_left_descent(w, g)) continue;
    prefix.push_back(g);
    collect_words(compose(SignedPerm::generator(w.rank(), g), w), prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

GenWord reduced_word(const SignedPerm& w) {
  GenWord word;
  SignedPerm rest = w;
  while (!rest.is_identity()) {
    Gen g{0};
    while (!is_left_descent(rest, g)) ++g.k;
    word.push_back(g);
    rest = compose(SignedPerm::generator(rest.rank(), g), rest);
  }
  return word;
}

std::vector<GenWord> all_reduced_words(const SignedPerm& w) {
  std::vector<GenWord> out;
  GenWord prefix;
  collect_words(w, prefix, out);
  return out;
}

SignedPerm from_word(int m, const GenWord& word) {
  SignedPerm w(m);
  for (const auto& g : word) w = compose(w, SignedPerm::generator(m, g));
  return w;
}

std::vector<SignedPerm> all_signed_perms(int m) {
  std::vector<int> base(static_cast<std::size_t>(m));
  std::iota(base.begin(), base.end(), 1);
  std::vector<SignedPerm> out;
  do {
    for (int mask = 0; mask < (1 << m); ++mask) {
      std::vector<int> images = base;
      for (int i = 0; i < m; ++i)
        if (mask & (1 << i)) images[i] = -images[i];
      out.push_back(SignedPerm::from_images(std::move(images)));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  std::sort(out.begin(), out.end());
  return out;
}

SFrame act_rows(const SignedPerm& w, const SFrame& f) {
  if (w.rank() != f.rank()) throw std::invalid_argument("signed permutation rank mismatch");
  SignedPerm inv = w.inverse();
  std::vector<RowGeom> half;
  for (int j = 1; j <= f.rank(); ++j) half.push_back(f.row(inv(j)));
  return SFrame(std::move(half));
}

STable act_rows(const SignedPerm& w, const STable& t) {
  if (w.rank() != t.rank()) throw std::invalid_argument("signed permutation rank mismatch");
  SignedPerm inv = w.inverse();
  std::vector<Row> half;
  for (int j = 1; j <= t.rank(); ++j) half.push_back(t.row(inv(j)));
  return STable(act_rows(w, t.frame()), std::move(half), t.phi());
}

}  // namespace wtab
