#ifndef PLGROUP_RATIONAL_HPP
#define PLGROUP_RATIONAL_HPP

/// Exact rational scalars used throughout the library.
///
/// Every coordinate and every slope in the engine is a Rational.  The whole
/// decision machinery relies on exact comparisons, so no floating point is
/// used anywhere.  Values are immutable after construction and safe to share
/// between threads.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace plgroup {

using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always normalised: gcd(|num|, den) = 1,
/// den >= 1, zero is 0/1.  Backed by boost::multiprecision::cpp_rational,
/// which maintains exactly this canonical form.
using Rational = boost::multiprecision::cpp_rational;

/// Raised on malformed textual input (elements, rationals, words, trees).
/// `where` is a byte offset into the offending text when known.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg, std::size_t where = npos)
      : std::runtime_error(where == npos ? msg
                                         : "pos " + std::to_string(where) +
                                               ": " + msg),
        offset(where) {}
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t offset;
};

enum class Ordering { less, equal, greater };

inline Ordering rat_cmp(const Rational& a, const Rational& b) {
  if (a < b) return Ordering::less;
  if (a == b) return Ordering::equal;
  return Ordering::greater;
}

inline int sign(const Rational& a) { return a.sign(); }

inline Rational rat_add(const Rational& a, const Rational& b) { return a + b; }
inline Rational rat_sub(const Rational& a, const Rational& b) { return a - b; }
inline Rational rat_mul(const Rational& a, const Rational& b) { return a * b; }

inline Rational rat_div(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::invalid_argument("rational division by zero");
  return a / b;
}

/// b^e for integer e (negative allowed; b must be nonzero when e < 0).
inline Rational rat_pow(const Rational& b, long e) {
  if (e == 0) return Rational(1);
  if (b.is_zero() && e < 0)
    throw std::invalid_argument("zero to a negative power");
  Rational base = b;
  unsigned long n;
  if (e < 0) {
    base = Rational(denominator(b), numerator(b));
    n = static_cast<unsigned long>(-(e + 1)) + 1;  // avoids LONG_MIN overflow
  } else {
    n = static_cast<unsigned long>(e);
  }
  Rational acc(1);
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

/// Renders as "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& a) {
  std::string s = numerator(a).str();
  if (denominator(a) != 1) s += "/" + denominator(a).str();
  return s;
}

/// Parses "p", "p/q" or "-p/q".  Rejects q = 0, empty and trailing garbage.
inline Rational parse_rational(std::string_view text, std::size_t at = 0) {
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) -> Rational {
    throw ParseError(msg, at + i);
  };
  auto read_int = [&]() -> Integer {
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
      neg = text[i] == '-';
      ++i;
    }
    if (i >= text.size() || text[i] < '0' || text[i] > '9')
      fail("expected digit");
    Integer v = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      v = v * 10 + (text[i] - '0');
      ++i;
    }
    return neg ? Integer(-v) : v;
  };
  if (text.empty()) fail("empty rational");
  Integer num = read_int();
  Integer den = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = read_int();
    if (den == 0) fail("zero denominator");
    if (den < 0) fail("negative denominator");
  }
  if (i != text.size()) fail("trailing characters in rational");
  return Rational(num, den);
}

}  // namespace plgroup

#endif  // PLGROUP_RATIONAL_HPP
