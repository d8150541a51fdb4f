#ifndef PLGROUP_DYNAMICS_HPP
#define PLGROUP_DYNAMICS_HPP

/// Dynamical predicates on orbitals: transition chains, one-sided overlaps,
/// towers and exemplary towers, nice generating sets and their derived
/// length.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "plgroup/orbitals.hpp"
#include "plgroup/pl_map.hpp"
#include "plgroup/rational.hpp"

namespace plgroup {

enum class OrbitalPairClass {
  disjoint,
  equal,
  nested_proper,
  one_sided_overlap,
  transition_chain,
};

inline std::string to_string(OrbitalPairClass c) {
  switch (c) {
    case OrbitalPairClass::disjoint: return "disjoint";
    case OrbitalPairClass::equal: return "equal";
    case OrbitalPairClass::nested_proper: return "nested-proper";
    case OrbitalPairClass::one_sided_overlap: return "one-sided-overlap";
    case OrbitalPairClass::transition_chain: return "transition-chain";
  }
  return "?";
}

/// Exactly one class per unordered pair of intervals.  One-sided overlap:
/// the intervals intersect, share exactly one endpoint and neither contains
/// the other's closure.  Transition chain: a < c < b < d up to swapping.
inline OrbitalPairClass classify_pair(const Interval& a, const Interval& b) {
  if (a == b) return OrbitalPairClass::equal;
  if (!a.intersects(b)) return OrbitalPairClass::disjoint;
  if (a.closure_inside(b) || b.closure_inside(a))
    return OrbitalPairClass::nested_proper;
  if (a.left == b.left || a.right == b.right)
    return OrbitalPairClass::one_sided_overlap;
  return OrbitalPairClass::transition_chain;
}

inline bool is_bad_overlap(OrbitalPairClass c) {
  return c == OrbitalPairClass::one_sided_overlap ||
         c == OrbitalPairClass::transition_chain;
}

/// Some pair of the given signed orbitals forming a bad overlap, or nullopt.
/// The scan is over the stored set only, in (left, right, signature) order,
/// so the reported witness is the lexicographically least bad pair.
inline std::optional<std::pair<SignedOrbital, SignedOrbital>> find_bad_overlap(
    std::vector<SignedOrbital> orbs) {
  std::sort(orbs.begin(), orbs.end(), SignedOrbitalLess{});
  for (std::size_t i = 0; i < orbs.size(); ++i)
    for (std::size_t j = i + 1; j < orbs.size(); ++j)
      if (is_bad_overlap(classify_pair(orbs[i].orbital, orbs[j].orbital)))
        return std::make_pair(orbs[i], orbs[j]);
  return std::nullopt;
}

/// Height of the tallest tower inside the given set: the longest chain of
/// distinct intervals under containment.  Signed orbitals sharing an
/// interval cannot coexist in one tower, so each interval counts once.
inline int tower_height(const std::vector<SignedOrbital>& orbs) {
  std::vector<Interval> ivs;
  for (const SignedOrbital& so : orbs) ivs.push_back(so.orbital);
  std::sort(ivs.begin(), ivs.end(), IntervalLess{});
  ivs.erase(std::unique(ivs.begin(), ivs.end()), ivs.end());
  // sort by width ascending so containment only looks backwards
  std::sort(ivs.begin(), ivs.end(), [](const Interval& a, const Interval& b) {
    Rational wa = a.right - a.left, wb = b.right - b.left;
    if (wa != wb) return wa < wb;
    return IntervalLess{}(a, b);
  });
  std::vector<int> height(ivs.size(), 1);
  int best = ivs.empty() ? 0 : 1;
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (ivs[j].subset_of(ivs[i]) && ivs[j] != ivs[i])
        height[i] = std::max(height[i], height[j] + 1);
    best = std::max(best, height[i]);
  }
  return best;
}

/// A tower is exemplary when for every properly nested pair the inner
/// signature's orbitals stay clear of the outer orbital's ends: every
/// orbital of the inner signature meeting the outer interval has its closure
/// strictly inside it.
inline bool is_exemplary(const std::vector<SignedOrbital>& tower) {
  for (const SignedOrbital& inner : tower) {
    for (const SignedOrbital& outer : tower) {
      if (inner.orbital == outer.orbital) continue;
      if (!inner.orbital.subset_of(outer.orbital)) continue;
      for (const Interval& c : orbital_tuple(inner.signature))
        if (c.intersects(outer.orbital) && !c.closure_inside(outer.orbital))
          return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Nice generating sets (properties Z0-Z3).

struct NiceSetEntry {
  PLMap element;
  Interval orbital;
  Rational witness;  // r with every nested orbital inside the fundamental
                     // domain between r and r.h
};

struct NiceSet {
  std::vector<NiceSetEntry> entries;

  std::vector<SignedOrbital> signed_orbitals() const {
    std::vector<SignedOrbital> out;
    for (const auto& e : entries) out.push_back({e.orbital, e.element});
    return out;
  }
};

/// Violation report for a rejected candidate set.  `property` is one of
/// "Z0".."Z3"; `pair` holds the indices involved (one index for Z0/Z3).
struct NiceSetViolation {
  std::string property;
  std::vector<std::size_t> pair;
  std::string detail;
};

namespace detail {

/// The fundamental domain between r and r.h, oriented by the direction h
/// moves points (for a left-mover the interval is (r.h, r)).
inline Interval fundamental_domain(const PLMap& h, const Rational& r) {
  Rational image = h(r);
  return image > r ? Interval{r, image} : Interval{image, r};
}

}  // namespace detail

/// Checks Z0-Z3 for the given one-bump elements.  Witness points may be
/// supplied per element; missing ones are auto-searched.  The minimal left
/// endpoint of the nested orbitals is the optimal candidate: any valid r
/// must lie at or left of it, and r.h grows with r, so if it fails nothing
/// succeeds.
inline std::variant<NiceSet, NiceSetViolation> validate_nice_set(
    const std::vector<PLMap>& elements,
    const std::vector<std::optional<Rational>>& witnesses = {}) {
  std::vector<Interval> orbs;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    auto tuple = orbital_tuple(elements[i]);
    if (tuple.size() != 1)
      return NiceSetViolation{
          "Z0",
          {i},
          "element has " + std::to_string(tuple.size()) +
              " components of support; exactly one is required"};
    orbs.push_back(tuple[0]);
  }
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      OrbitalPairClass c = classify_pair(orbs[i], orbs[j]);
      if (is_bad_overlap(c))
        return NiceSetViolation{"Z1",
                                {i, j},
                                to_string(orbs[i]) + " and " + to_string(orbs[j]) +
                                    " form a " + to_string(c)};
      if (c == OrbitalPairClass::equal)
        return NiceSetViolation{
            "Z2", {i, j}, "distinct elements share the orbital " + to_string(orbs[i])};
    }
  NiceSet nice;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    std::vector<std::size_t> nested;
    for (std::size_t j = 0; j < elements.size(); ++j)
      if (j != i && orbs[j].subset_of(orbs[i]) && orbs[j] != orbs[i])
        nested.push_back(j);
    Rational r;
    if (i < witnesses.size() && witnesses[i]) {
      r = *witnesses[i];
      if (!orbs[i].contains_point(r))
        return NiceSetViolation{
            "Z3", {i}, "witness point " + to_string(r) + " outside the orbital"};
    } else if (nested.empty()) {
      r = (orbs[i].left + orbs[i].right) / 2;
    } else {
      r = orbs[nested.front()].left;
      for (std::size_t j : nested)
        if (orbs[j].left < r) r = orbs[j].left;
    }
    Interval domain = detail::fundamental_domain(elements[i], r);
    for (std::size_t j : nested)
      if (!orbs[j].subset_of(domain))
        return NiceSetViolation{
            "Z3",
            {i, j},
            "orbital " + to_string(orbs[j]) + " escapes the fundamental domain " +
                to_string(domain)};
    nice.entries.push_back({elements[i], orbs[i], r});
  }
  return nice;
}

/// Derived length of the group generated by a nice set: the largest height
/// of a tower of its signed orbitals.
inline int nice_derived_length(const NiceSet& z) {
  return tower_height(z.signed_orbitals());
}

}  // namespace plgroup

#endif  // PLGROUP_DYNAMICS_HPP
