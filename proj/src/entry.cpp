#include "wtab/entry.hpp"

#include <cctype>
#include <stdexcept>
#include <tuple>

namespace wtab {

bool is_integer(const Rational& q) { return q.denominator() == 1; }

Rational floor(const Rational& q) {
  auto n = q.numerator();
  auto d = q.denominator();
  auto f = n / d;
  if (n % d != 0 && n < 0) --f;
  return Rational(f);
}

bool Entry::is_half_odd() const {
  return is_real() && (re_ * 2).denominator() == 1 && re_.denominator() == 2;
}

Entry& Entry::operator+=(const Entry& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Entry& Entry::operator-=(const Entry& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

namespace {

std::string rational_string(const Rational& q) {
  std::string s = std::to_string(q.numerator());
  if (q.denominator() != 1) s += "/" + std::to_string(q.denominator());
  return s;
}

}  // namespace

std::string Entry::to_string() const {
  if (im_ == Rational(0)) return rational_string(re_);
  std::string im;
  if (im_ == Rational(1)) {
    im = "i";
  } else if (im_ == Rational(-1)) {
    im = "-i";
  } else {
    im = rational_string(im_) + "i";
  }
  if (re_ == Rational(0)) return im;
  if (im.front() != '-') im = "+" + im;
  return rational_string(re_) + im;
}

bool canonical_less(const Entry& a, const Entry& b) {
  Rational fa = a.re() - floor(a.re());
  Rational fb = b.re() - floor(b.re());
  return std::tie(fa, a.im(), a.re()) < std::tie(fb, b.im(), b.re());
}

Order cmp_partial(const Entry& a, const Entry& b) {
  Entry d = b - a;
  if (d.im() != Rational(0) || !is_integer(d.re())) return Order::Incomparable;
  if (d.re() > Rational(0)) return Order::Less;
  if (d.re() < Rational(0)) return Order::Greater;
  return Order::Equal;
}

namespace {

Rational parse_rational(std::string_view s, std::string_view whole) {
  auto fail = [&] {
    throw std::invalid_argument("malformed number '" + std::string(whole) +
                                "'");
  };
  if (s.empty()) fail();
  auto parse_int = [&](std::string_view t) -> std::int64_t {
    std::size_t i = 0;
    bool neg = false;
    if (i < t.size() && (t[i] == '+' || t[i] == '-')) {
      neg = t[i] == '-';
      ++i;
    }
    if (i == t.size()) fail();
    std::int64_t v = 0;
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) fail();
      v = v * 10 + (t[i] - '0');
    }
    return neg ? -v : v;
  };
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  auto den = parse_int(s.substr(slash + 1));
  if (den == 0) fail();
  return Rational(parse_int(s.substr(0, slash)), den);
}

}  // namespace

Entry parse_entry(std::string_view text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw std::invalid_argument("empty entry");
  if (t.back() != 'i') return Entry(parse_rational(t, text));

  // Split "re(+|-)im i" at the last sign that is not the leading one.
  std::string body = t.substr(0, t.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') {
      split = i;
      break;
    }
  }
  std::string re_part = split == std::string::npos ? "" : body.substr(0, split);
  std::string im_part =
      split == std::string::npos ? body : body.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part, text);
  return {re, parse_rational(im_part, text)};
}

std::size_t hash_value(const Entry& e) {
  std::size_t h = std::hash<std::int64_t>{}(e.re().numerator());
  auto mix = [&h](std::int64_t v) {
    h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  };
  mix(e.re().denominator());
  mix(e.im().numerator());
  mix(e.im().denominator());
  return h;
}

}  // namespace wtab
