#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace wtab {

using Rational = boost::rational<std::int64_t>;

bool is_integer(const Rational& q);

/// Floor of a rational, as a rational.
Rational floor(const Rational& q);

/// Exact complex number re + im*i with rational parts.
///
/// Equality is structural: boost::rational keeps fractions reduced with a
/// positive denominator, so two equal values have identical fields.
class Entry {
public:
  Entry() = default;
  Entry(std::int64_t n) : re_(n) {}  // NOLINT(google-explicit-constructor)
  Entry(Rational re) : re_(re) {}    // NOLINT(google-explicit-constructor)
  Entry(Rational re, Rational im) : re_(re), im_(im) {}

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_real() const { return im_ == Rational(0); }
  bool is_integer() const { return is_real() && wtab::is_integer(re_); }
  bool is_half_odd() const;

  Entry operator-() const { return {-re_, -im_}; }
  Entry& operator+=(const Entry& o);
  Entry& operator-=(const Entry& o);
  friend Entry operator+(Entry a, const Entry& b) { return a += b; }
  friend Entry operator-(Entry a, const Entry& b) { return a -= b; }

  friend bool operator==(const Entry& a, const Entry& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Representative of the class a + Z: (re mod 1, im).
  Entry coset() const { return {re_ - wtab::floor(re_), im_}; }

  std::string to_string() const;

private:
  Rational re_{0};
  Rational im_{0};
};

/// Strict total order used only for canonical forms (containers, sorting
/// blocks of incomparable entries). Orders by (re mod 1, im, re), so every
/// integer coset is contiguous and sorted by the partial order inside.
bool canonical_less(const Entry& a, const Entry& b);

struct CanonicalLess {
  bool operator()(const Entry& a, const Entry& b) const {
    return canonical_less(a, b);
  }
};

enum class Order { Less, Equal, Greater, Incomparable };

/// a <= b iff b - a is a nonnegative rational integer.
Order cmp_partial(const Entry& a, const Entry& b);

inline bool strictly_less(const Entry& a, const Entry& b) {
  return cmp_partial(a, b) == Order::Less;
}
inline bool strictly_greater(const Entry& a, const Entry& b) {
  return cmp_partial(a, b) == Order::Greater;
}
inline bool comparable(const Entry& a, const Entry& b) {
  return cmp_partial(a, b) != Order::Incomparable;
}

/// Parses "3", "-1/2", "2i", "1/2-3i", "-i". Throws std::invalid_argument.
Entry parse_entry(std::string_view text);

std::size_t hash_value(const Entry& e);

}  // namespace wtab

template <>
struct std::hash<wtab::Entry> {
  std::size_t operator()(const wtab::Entry& e) const {
    return wtab::hash_value(e);
  }
};
