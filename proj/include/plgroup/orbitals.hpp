#ifndef PLGROUP_ORBITALS_HPP
#define PLGROUP_ORBITALS_HPP

/// Orbitals (components of support), one-bump factors, end slopes and the
/// realised-end classification.
///
/// Orbital endpoints are computed as exact roots of affine pieces crossing
/// the diagonal; a point on the diagonal is fixed even when it is interior
/// to a segment.

#include <compare>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "plgroup/pl_map.hpp"
#include "plgroup/rational.hpp"

namespace plgroup {

/// Open interval (left, right) inside [0,1].
struct Interval {
  Rational left;
  Rational right;

  friend bool operator==(const Interval&, const Interval&) = default;

  bool contains_point(const Rational& x) const { return left < x && x < right; }
  /// Set containment of open intervals: (a,b) within (c,d).
  bool subset_of(const Interval& o) const {
    return o.left <= left && right <= o.right;
  }
  /// Closure containment: [a,b] inside (c,d).
  bool closure_inside(const Interval& o) const {
    return o.left < left && right < o.right;
  }
  bool intersects(const Interval& o) const {
    return left < o.right && o.left < right;
  }
};

/// (left, right) lexicographic; the deterministic interval order used for
/// every tie-break in the engine.
inline std::strong_ordering compare(const Interval& a, const Interval& b) {
  if (a.left != b.left)
    return a.left < b.left ? std::strong_ordering::less
                           : std::strong_ordering::greater;
  if (a.right != b.right)
    return a.right < b.right ? std::strong_ordering::less
                             : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

struct IntervalLess {
  bool operator()(const Interval& a, const Interval& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }
};

inline std::string to_string(const Interval& a) {
  return "(" + to_string(a.left) + "," + to_string(a.right) + ")";
}

/// Pair (orbital, signature): the orbital is a component of the signature's
/// support.  For factor signed orbitals the signature is one-bump, i.e. its
/// support is the orbital exactly.
struct SignedOrbital {
  Interval orbital;
  PLMap signature;

  friend bool operator==(const SignedOrbital&, const SignedOrbital&) = default;
};

inline std::strong_ordering compare(const SignedOrbital& a,
                                    const SignedOrbital& b) {
  auto c = compare(a.orbital, b.orbital);
  if (c != std::strong_ordering::equal) return c;
  return compare(a.signature, b.signature);
}

struct SignedOrbitalLess {
  bool operator()(const SignedOrbital& a, const SignedOrbital& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }
};

/// The components of supp(f) in increasing order; empty for the identity.
///
/// Critical points are the nodes plus all in-segment diagonal crossings;
/// between consecutive fixed critical points the sign of f(x) - x is
/// constant, so a midpoint probe decides whether the gap is support.
inline std::vector<Interval> orbital_tuple(const PLMap& f) {
  std::set<Rational> critical;
  for (const Node& n : f.nodes()) critical.insert(n.x);
  for (std::size_t i = 0; i + 1 < f.nodes().size(); ++i) {
    Rational m = f.slope(i);
    if (m == 1) continue;
    // y_i + m (x - x_i) = x  at  x = (y_i - m x_i) / (1 - m)
    Rational cross =
        (f.nodes()[i].y - m * f.nodes()[i].x) / (Rational(1) - m);
    if (f.nodes()[i].x < cross && cross < f.nodes()[i + 1].x)
      critical.insert(cross);
  }
  std::vector<Rational> fixed;
  for (const Rational& c : critical)
    if (f(c) == c) fixed.push_back(c);
  std::vector<Interval> orbitals;
  for (std::size_t i = 0; i + 1 < fixed.size(); ++i) {
    Rational mid = (fixed[i] + fixed[i + 1]) / 2;
    if (f(mid) != mid) orbitals.push_back({fixed[i], fixed[i + 1]});
  }
  return orbitals;
}

inline bool is_orbital_of(const PLMap& f, const Interval& a) {
  for (const Interval& o : orbital_tuple(f))
    if (o == a) return true;
  return false;
}

/// The factor of f over orbital A: equal to f on A, identity elsewhere.
/// A must be an orbital of f.
inline PLMap one_bump_factor(const PLMap& f, const Interval& a) {
  if (!is_orbital_of(f, a))
    throw std::invalid_argument("one_bump_factor: interval is not an orbital");
  std::vector<Node> nodes;
  if (a.left > 0) nodes.push_back({Rational(0), Rational(0)});
  nodes.push_back({a.left, a.left});
  for (const Node& n : f.nodes())
    if (a.left < n.x && n.x < a.right) nodes.push_back(n);
  nodes.push_back({a.right, a.right});
  if (a.right < 1) nodes.push_back({Rational(1), Rational(1)});
  return PLMap::from_nodes(std::move(nodes));
}

/// All factor signed orbitals of f, in increasing orbital order.  The factors
/// pairwise commute and multiply to f in any order.
inline std::vector<SignedOrbital> factor_signed_orbitals(const PLMap& f) {
  std::vector<SignedOrbital> out;
  for (const Interval& a : orbital_tuple(f))
    out.push_back({a, one_bump_factor(f, a)});
  return out;
}

/// Slope of f just right of a point x < 1.
inline Rational slope_right_at(const PLMap& f, const Rational& x) {
  if (x >= 1) throw std::invalid_argument("slope_right_at: x must be < 1");
  return f.slope(f.segment_index(x));
}

/// Slope of f just left of a point x > 0.
inline Rational slope_left_at(const PLMap& f, const Rational& x) {
  if (x <= 0) throw std::invalid_argument("slope_left_at: x must be > 0");
  const auto& nodes = f.nodes();
  std::size_t i = f.segment_index(x);
  if (nodes[i].x == x) --i;  // x is a node: take the segment ending at it
  return f.slope(i);
}

struct EndSlopes {
  Rational at_left;   // slope of the first affine piece right of the orbital's left end
  Rational at_right;  // slope of the last affine piece left of its right end
};

/// End slopes of a signed orbital.  For a one-bump signature moving points
/// right this satisfies at_left > 1 > at_right, and the reverse for a
/// left-mover; neither can equal 1.
inline EndSlopes end_slopes(const SignedOrbital& so) {
  return {slope_right_at(so.signature, so.orbital.left),
          slope_left_at(so.signature, so.orbital.right)};
}

enum class Realises { orbital, left_end, right_end, both_ends, none };

inline std::string to_string(Realises r) {
  switch (r) {
    case Realises::orbital: return "orbital";
    case Realises::left_end: return "left-end";
    case Realises::right_end: return "right-end";
    case Realises::both_ends: return "both-ends";
    case Realises::none: return "none";
  }
  return "?";
}

/// How f relates to the ends of (a,d): an orbital of f of the form (a,.)
/// inside [a,d] realises the left end, (.,d) the right end, and (a,d) itself
/// realises the orbital (which also counts as both ends).
inline Realises realises(const PLMap& f, const Interval& ad) {
  bool left = false, right = false;
  for (const Interval& o : orbital_tuple(f)) {
    if (o == ad) return Realises::orbital;
    if (o.left == ad.left && o.right <= ad.right) left = true;
    if (o.right == ad.right && o.left >= ad.left) right = true;
  }
  if (left && right) return Realises::both_ends;
  if (left) return Realises::left_end;
  if (right) return Realises::right_end;
  return Realises::none;
}

}  // namespace plgroup

#endif  // PLGROUP_ORBITALS_HPP
