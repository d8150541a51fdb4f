#ifndef PLGROUP_PL_MAP_HPP
#define PLGROUP_PL_MAP_HPP

/// Orientation-preserving piecewise-linear homeomorphisms of [0,1] with
/// rational breakpoints and slopes, under the right action x.f.
///
/// A map is stored as its canonical node list (x_i, y_i): x and y strictly
/// increasing from (0,0) to (1,1), and no interior node with equal slopes on
/// both sides.  Canonical form is unique, so function equality is node-list
/// identity.  All operations are pure; PLMap values are immutable in practice
/// and safe to share.
///
/// Composition is written in right-action order: x.(f*g) = (x.f).g, i.e.
/// compose(f, g) applies f first.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plgroup/rational.hpp"

namespace plgroup {

struct Node {
  Rational x;
  Rational y;
  friend bool operator==(const Node&, const Node&) = default;
};

/// Total order used wherever deterministic tie-breaking is required.
inline std::strong_ordering node_order(const Node& a, const Node& b) {
  if (a.x != b.x) return a.x < b.x ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
  if (a.y != b.y) return a.y < b.y ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

/// Sorted, duplicate-free set of interior breakpoints.
using BreakSet = std::vector<Rational>;

class PLMap {
 public:
  /// The identity map.
  PLMap() : nodes_{{Rational(0), Rational(0)}, {Rational(1), Rational(1)}} {}

  /// Builds the canonical map through the given nodes.  The input may carry
  /// non-breaking interior nodes (they are dropped); anything violating the
  /// homeomorphism invariants throws std::invalid_argument.
  static PLMap from_nodes(std::vector<Node> raw) {
    validate(raw);
    strip_fake_nodes(raw);
    PLMap f;
    f.nodes_ = std::move(raw);
    return f;
  }

  const std::vector<Node>& nodes() const { return nodes_; }
  std::size_t segment_count() const { return nodes_.size() - 1; }

  bool is_identity() const { return nodes_.size() == 2; }

  /// Slope of segment i, i.e. on [x_i, x_{i+1}].
  Rational slope(std::size_t i) const {
    return (nodes_[i + 1].y - nodes_[i].y) / (nodes_[i + 1].x - nodes_[i].x);
  }

  /// Exact image of x in [0,1].
  Rational operator()(const Rational& x) const {
    if (x < 0 || x > 1)
      throw std::invalid_argument("evaluate: point outside [0,1]");
    std::size_t i = segment_index(x);
    return nodes_[i].y + slope(i) * (x - nodes_[i].x);
  }

  /// Index of the segment whose half-open interval [x_i, x_{i+1}) contains x
  /// (the last segment is closed).
  std::size_t segment_index(const Rational& x) const {
    std::size_t lo = 0, hi = nodes_.size() - 1;
    while (hi - lo > 1) {
      std::size_t mid = (lo + hi) / 2;
      if (nodes_[mid].x <= x)
        lo = mid;
      else
        hi = mid;
    }
    return lo;
  }

  /// Interior node abscissae.  In canonical form these are exactly the
  /// points where the slope changes.
  BreakSet breakpoints() const {
    BreakSet b;
    for (std::size_t i = 1; i + 1 < nodes_.size(); ++i) b.push_back(nodes_[i].x);
    return b;
  }

  friend bool operator==(const PLMap& a, const PLMap& b) {
    return a.nodes_ == b.nodes_;
  }

 private:
  static void validate(const std::vector<Node>& raw) {
    if (raw.size() < 2)
      throw std::invalid_argument("PLMap: need at least two nodes");
    if (raw.front().x != 0 || raw.front().y != 0 || raw.back().x != 1 ||
        raw.back().y != 1)
      throw std::invalid_argument("PLMap: must fix 0 and 1");
    for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
      if (raw[i].x >= raw[i + 1].x)
        throw std::invalid_argument("PLMap: abscissae not strictly increasing");
      if (raw[i].y >= raw[i + 1].y)
        throw std::invalid_argument("PLMap: ordinates not strictly increasing");
    }
  }

  static void strip_fake_nodes(std::vector<Node>& raw) {
    std::vector<Node> out;
    out.reserve(raw.size());
    out.push_back(raw.front());
    for (std::size_t i = 1; i + 1 < raw.size(); ++i) {
      const Node& prev = out.back();
      const Node& cur = raw[i];
      const Node& next = raw[i + 1];
      Rational left = (cur.y - prev.y) / (cur.x - prev.x);
      Rational right = (next.y - cur.y) / (next.x - cur.x);
      if (left != right) out.push_back(cur);
    }
    out.push_back(raw.back());
    raw = std::move(out);
  }

  std::vector<Node> nodes_;
};

/// Lexicographic total order on canonical node lists; any deterministic
/// choice of "least signature" in the engine uses this.
inline std::strong_ordering compare(const PLMap& a, const PLMap& b) {
  const auto& na = a.nodes();
  const auto& nb = b.nodes();
  for (std::size_t i = 0; i < na.size() && i < nb.size(); ++i) {
    auto c = node_order(na[i], nb[i]);
    if (c != std::strong_ordering::equal) return c;
  }
  return na.size() <=> nb.size();
}

struct PLMapLess {
  bool operator()(const PLMap& a, const PLMap& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }
};

inline PLMap identity_map() { return PLMap(); }

inline PLMap canonicalize(std::vector<Node> raw) {
  return PLMap::from_nodes(std::move(raw));
}

inline Rational evaluate(const PLMap& f, const Rational& x) { return f(x); }

inline bool equals(const PLMap& f, const PLMap& g) { return f == g; }

/// Node list transposed: (y_i, x_i).
inline PLMap invert(const PLMap& f) {
  std::vector<Node> inv;
  inv.reserve(f.nodes().size());
  for (const Node& n : f.nodes()) inv.push_back({n.y, n.x});
  return PLMap::from_nodes(std::move(inv));
}

/// Right-action product: x.(fg) = (x.f).g.  The candidate node set is the
/// union of f's breaks with the preimages under f of g's breaks, resolved
/// exactly, then canonicalized; this avoids slope comparisons at spurious
/// nodes.
inline PLMap compose(const PLMap& f, const PLMap& g) {
  std::set<Rational> xs;
  xs.insert(Rational(0));
  xs.insert(Rational(1));
  for (std::size_t i = 1; i + 1 < f.nodes().size(); ++i)
    xs.insert(f.nodes()[i].x);
  PLMap finv = invert(f);
  for (std::size_t i = 1; i + 1 < g.nodes().size(); ++i)
    xs.insert(finv(g.nodes()[i].x));
  std::vector<Node> nodes;
  nodes.reserve(xs.size());
  for (const Rational& x : xs) nodes.push_back({x, g(f(x))});
  return PLMap::from_nodes(std::move(nodes));
}

/// g^h = h^-1 g h.  Its support is the image of supp(g) under h.
inline PLMap conjugate(const PLMap& g, const PLMap& h) {
  return compose(compose(invert(h), g), h);
}

/// f^k by repeated squaring.
inline PLMap power(const PLMap& f, long k) {
  if (k == 0) return identity_map();
  PLMap base = k < 0 ? invert(f) : f;
  unsigned long n = k < 0 ? static_cast<unsigned long>(-(k + 1)) + 1
                          : static_cast<unsigned long>(k);
  PLMap acc = identity_map();
  while (n > 0) {
    if (n & 1) acc = compose(acc, base);
    base = compose(base, base);
    n >>= 1;
  }
  return acc;
}

inline BreakSet breakpoints(const PLMap& f) { return f.breakpoints(); }

/// Union of the breakpoint sets of a family of elements (the set B_X).
inline BreakSet breakpoint_union(const std::vector<PLMap>& maps) {
  std::set<Rational> all;
  for (const PLMap& f : maps)
    for (const Rational& b : f.breakpoints()) all.insert(b);
  return BreakSet(all.begin(), all.end());
}

// ---------------------------------------------------------------------------
// Text format: whitespace-separated "x:y" node pairs with rational
// coordinates, e.g. "0:0 1/4:1/2 1/2:3/4 1:1".

inline std::string to_string(const PLMap& f) {
  std::string s;
  for (const Node& n : f.nodes()) {
    if (!s.empty()) s += ' ';
    s += to_string(n.x) + ":" + to_string(n.y);
  }
  return s;
}

inline PLMap parse_plmap(std::string_view text) {
  std::vector<Node> nodes;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' ||
                               text[i] == '\n' || text[i] == '\r'))
      ++i;
    if (i >= text.size()) break;
    std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t' &&
           text[i] != '\n' && text[i] != '\r')
      ++i;
    std::string_view pair = text.substr(start, i - start);
    std::size_t colon = pair.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("expected x:y node pair", start);
    nodes.push_back({parse_rational(pair.substr(0, colon), start),
                     parse_rational(pair.substr(colon + 1), start + colon + 1)});
  }
  if (nodes.empty()) throw ParseError("empty element text");
  return PLMap::from_nodes(std::move(nodes));
}

}  // namespace plgroup

#endif  // PLGROUP_PL_MAP_HPP
