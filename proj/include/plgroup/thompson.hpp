#ifndef PLGROUP_THOMPSON_HPP
#define PLGROUP_THOMPSON_HPP

/// Thompson's group F: elements built from generator words over {x0, x1} and
/// from tree pair diagrams.
///
/// Generator conventions: x0 is the node list
/// (0,0) (1/4,1/2) (1/2,3/4) (1,1), and x1 acts as the identity on [0,1/2]
/// and as a half-scale copy of x0 on [1/2,1].  Every element produced here
/// has dyadic breakpoints and power-of-two slopes.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plgroup/pl_map.hpp"
#include "plgroup/rational.hpp"

namespace plgroup {

inline const PLMap& f_generator_x0() {
  static const PLMap x0 = PLMap::from_nodes({{Rational(0), Rational(0)},
                                             {Rational(1, 4), Rational(1, 2)},
                                             {Rational(1, 2), Rational(3, 4)},
                                             {Rational(1), Rational(1)}});
  return x0;
}

inline const PLMap& f_generator_x1() {
  static const PLMap x1 = PLMap::from_nodes({{Rational(0), Rational(0)},
                                             {Rational(1, 2), Rational(1, 2)},
                                             {Rational(5, 8), Rational(3, 4)},
                                             {Rational(3, 4), Rational(7, 8)},
                                             {Rational(1), Rational(1)}});
  return x1;
}

/// Word over the generators: list of (generator index in {0,1}, exponent).
struct FWord {
  struct Letter {
    int generator;
    long exponent;
  };
  std::vector<Letter> letters;
};

/// The product of the letters in right-action order.
inline PLMap word_to_plmap(const FWord& w) {
  PLMap p = identity_map();
  for (const auto& [gen, exp] : w.letters) {
    const PLMap& g = gen == 0 ? f_generator_x0() : f_generator_x1();
    p = compose(p, power(g, exp));
  }
  return p;
}

/// Parses words like "x0 x1 x0^-1 x1^3".  Whitespace separates letters;
/// an optional ^k attaches an integer exponent.
inline FWord parse_fword(std::string_view text) {
  FWord w;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    if (i >= text.size()) break;
    if (text[i] != 'x') throw ParseError("expected generator 'x0' or 'x1'", i);
    ++i;
    if (i >= text.size() || (text[i] != '0' && text[i] != '1'))
      throw ParseError("generator index must be 0 or 1", i);
    int gen = text[i] - '0';
    ++i;
    long exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
      }
      if (i >= text.size() || text[i] < '0' || text[i] > '9')
        throw ParseError("expected integer exponent after '^'", i);
      exp = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        exp = exp * 10 + (text[i] - '0');
        ++i;
      }
      if (neg) exp = -exp;
    }
    w.letters.push_back({gen, exp});
  }
  return w;
}

// ---------------------------------------------------------------------------
// Tree pair diagrams.  A finite binary tree is handled in leaf-interval
// form: the ordered list of standard dyadic intervals its leaves cover.

namespace detail {

struct TreeParser {
  std::string_view text;
  std::size_t pos = 0;

  void leaves_of(const Rational& lo, const Rational& hi,
                 std::vector<std::pair<Rational, Rational>>& out) {
    if (pos >= text.size()) throw ParseError("unterminated tree", pos);
    if (text[pos] == '.') {
      ++pos;
      out.emplace_back(lo, hi);
      return;
    }
    if (text[pos] != '(') throw ParseError("expected '(' or '.'", pos);
    ++pos;
    Rational mid = (lo + hi) / 2;
    leaves_of(lo, mid, out);
    leaves_of(mid, hi, out);
    if (pos >= text.size() || text[pos] != ')')
      throw ParseError("expected ')'", pos);
    ++pos;
  }
};

inline std::vector<std::pair<Rational, Rational>> parse_tree(
    std::string_view text, std::size_t offset) {
  TreeParser p{text};
  std::vector<std::pair<Rational, Rational>> out;
  p.leaves_of(Rational(0), Rational(1), out);
  if (p.pos != text.size())
    throw ParseError("trailing characters after tree", offset + p.pos);
  return out;
}

inline bool is_dyadic(const Rational& r) {
  Integer d = denominator(r);
  while (d % 2 == 0) d /= 2;
  return d == 1;
}

/// Standard dyadic interval: [i/2^n, (i+1)/2^n].
inline bool is_standard_dyadic(const Rational& lo, const Rational& hi) {
  Rational w = hi - lo;
  if (numerator(w) != 1) return false;
  Integer d = denominator(w);
  while (d % 2 == 0) d /= 2;
  if (d != 1) return false;
  return denominator(lo / w) == 1;
}

inline bool is_power_of_two_slope(const Rational& m) {
  return (numerator(m) == 1 && [](Integer d) {
           while (d % 2 == 0) d /= 2;
           return d == 1;
         }(denominator(m))) ||
         (denominator(m) == 1 && [](Integer n) {
           while (n % 2 == 0) n /= 2;
           return n == 1;
         }(numerator(m)));
}

struct LeafPair {
  Rational d_lo, d_hi, r_lo, r_hi;
};

/// Splits [lo,hi] until f is affine on each piece and maps a standard dyadic
/// interval onto a standard dyadic interval.  For elements of F this always
/// terminates and yields the reduced (minimal) tree pair directly: a caret
/// whose merge would be legal is never produced, because the recursion stops
/// at the largest legal piece.
inline void minimal_leaf_pairs(const PLMap& f, const Rational& lo,
                               const Rational& hi, std::vector<LeafPair>& out,
                               int depth) {
  if (depth > 64)
    throw std::invalid_argument("tree pair: element is not in Thompson's F");
  bool affine = true;
  for (const Rational& b : f.breakpoints())
    if (lo < b && b < hi) {
      affine = false;
      break;
    }
  if (affine) {
    Rational flo = f(lo), fhi = f(hi);
    if (is_standard_dyadic(lo, hi) && is_standard_dyadic(flo, fhi)) {
      out.push_back({lo, hi, flo, fhi});
      return;
    }
  }
  Rational mid = (lo + hi) / 2;
  minimal_leaf_pairs(f, lo, mid, out, depth + 1);
  minimal_leaf_pairs(f, mid, hi, out, depth + 1);
}

/// Renders the binary tree whose leaves are the given standard dyadic
/// intervals, as a balanced-parenthesis string.
inline std::string render_tree(const std::vector<std::pair<Rational, Rational>>& leaves,
                               std::size_t& idx, const Rational& lo,
                               const Rational& hi) {
  if (idx < leaves.size() && leaves[idx].first == lo &&
      leaves[idx].second == hi) {
    ++idx;
    return ".";
  }
  Rational mid = (lo + hi) / 2;
  std::string l = render_tree(leaves, idx, lo, mid);
  std::string r = render_tree(leaves, idx, mid, hi);
  return "(" + l + r + ")";
}

}  // namespace detail

/// Tree pair in textual form: "domain|range", each tree written with '('
/// ')' around two subtrees and '.' for a leaf, e.g. "((..).)|(.(..))".
struct TreePair {
  std::vector<std::pair<Rational, Rational>> domain_leaves;
  std::vector<std::pair<Rational, Rational>> range_leaves;
};

inline TreePair parse_treepair(std::string_view text) {
  std::size_t bar = text.find('|');
  if (bar == std::string_view::npos)
    throw ParseError("tree pair needs 'domain|range'");
  TreePair t;
  t.domain_leaves = detail::parse_tree(text.substr(0, bar), 0);
  t.range_leaves = detail::parse_tree(text.substr(bar + 1), bar + 1);
  if (t.domain_leaves.size() != t.range_leaves.size())
    throw ParseError("tree pair leaf counts differ");
  return t;
}

/// The PL map sending the i-th domain leaf interval affinely onto the i-th
/// range leaf interval.
inline PLMap treepair_to_plmap(const TreePair& t) {
  std::vector<Node> nodes;
  nodes.push_back({Rational(0), Rational(0)});
  for (std::size_t i = 0; i < t.domain_leaves.size(); ++i)
    nodes.push_back({t.domain_leaves[i].second, t.range_leaves[i].second});
  return PLMap::from_nodes(std::move(nodes));
}

/// The minimal tree pair of an element of F.  Throws when the element does
/// not lie in F (non-dyadic breakpoints or slopes).
inline TreePair plmap_to_treepair(const PLMap& f) {
  std::vector<detail::LeafPair> pairs;
  detail::minimal_leaf_pairs(f, Rational(0), Rational(1), pairs, 0);
  TreePair t;
  for (const auto& p : pairs) {
    t.domain_leaves.emplace_back(p.d_lo, p.d_hi);
    t.range_leaves.emplace_back(p.r_lo, p.r_hi);
  }
  return t;
}

inline std::string to_string(const TreePair& t) {
  std::size_t i = 0;
  std::string d =
      detail::render_tree(t.domain_leaves, i, Rational(0), Rational(1));
  i = 0;
  std::string r =
      detail::render_tree(t.range_leaves, i, Rational(0), Rational(1));
  return d + "|" + r;
}

/// Structural membership test for F: dyadic breakpoints, power-of-two slopes.
inline bool in_thompson_f(const PLMap& f) {
  for (const Rational& b : f.breakpoints())
    if (!detail::is_dyadic(b)) return false;
  for (std::size_t i = 0; i < f.segment_count(); ++i)
    if (!detail::is_power_of_two_slope(f.slope(i))) return false;
  return true;
}

}  // namespace plgroup

#endif  // PLGROUP_THOMPSON_HPP
