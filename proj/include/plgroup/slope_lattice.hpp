#ifndef PLGROUP_SLOPE_LATTICE_HPP
#define PLGROUP_SLOPE_LATTICE_HPP

/// Discreteness of finitely generated multiplicative subgroups of the
/// positive rationals, least element above one, and discrete logarithms.
///
/// A subgroup of (R+, x) generated by rationals is discrete iff its
/// prime-exponent row lattice has rank <= 1, i.e. all generators are integer
/// powers of one rational.  Working on exponent vectors keeps everything an
/// exact integer computation: logarithms of rationals are transcendental in
/// general, but for rational slopes the extended-gcd combination of exponent
/// rows answers the same question and always terminates.

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "plgroup/factorization.hpp"
#include "plgroup/rational.hpp"

namespace plgroup {

/// Integer-exponent-vector view of a finitely generated multiplicative group
/// of positive rationals.  Row i of `matrix` is factorize(generators[i]) over
/// the union prime support `primes`.
struct ExponentLattice {
  std::vector<Rational> generators;
  std::vector<Integer> primes;
  std::vector<std::vector<long>> matrix;

  static ExponentLattice from_generators(const std::vector<Rational>& gens) {
    ExponentLattice lat;
    lat.generators = gens;
    std::vector<PrimeExponentVector> vecs;
    std::map<Integer, std::size_t> column;
    for (const Rational& g : gens) {
      if (g <= 0)
        throw std::invalid_argument("slope lattice: nonpositive generator");
      vecs.push_back(factorize(g));
      for (const auto& [p, e] : vecs.back()) column.emplace(p, 0);
    }
    for (auto& [p, idx] : column) {
      idx = lat.primes.size();
      lat.primes.push_back(p);
    }
    for (const auto& v : vecs) {
      std::vector<long> row(lat.primes.size(), 0);
      for (const auto& [p, e] : v) row[column[p]] = e;
      lat.matrix.push_back(std::move(row));
    }
    return lat;
  }
};

/// Least element above 1 of a discrete nontrivial group, with the exponents
/// expressing it in the generators.  Every generator is an integer power of
/// `base`.
struct DiscreteSlopeGroup {
  Rational base;
  std::vector<long> exponents;
};

namespace detail {

inline long gcd_ext(long a, long b, long& x, long& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return a >= 0 ? a : -a;
  }
  long x1, y1;
  long g = gcd_ext(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

inline long row_content(const std::vector<long>& row) {
  long g = 0;
  for (long v : row) {
    long a = v >= 0 ? v : -v;
    while (a != 0) {
      long t = g % a;
      g = a;
      a = t;
    }
  }
  return g;
}

/// If all rows lie on one line through the origin, returns the primitive
/// direction vector and per-row integer multiples; otherwise nullopt.
struct LineDecomposition {
  std::vector<long> direction;    // primitive (content 1)
  std::vector<long> multiples;    // row i = multiples[i] * direction
};

inline std::optional<LineDecomposition> decompose_rank_one(
    const std::vector<std::vector<long>>& rows, std::size_t width) {
  LineDecomposition dec;
  dec.direction.assign(width, 0);
  dec.multiples.assign(rows.size(), 0);
  std::size_t pivot_row = rows.size();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (row_content(rows[i]) != 0) {
      pivot_row = i;
      break;
    }
  }
  if (pivot_row == rows.size()) return dec;  // all rows zero: trivial group
  long content = row_content(rows[pivot_row]);
  for (std::size_t j = 0; j < width; ++j)
    dec.direction[j] = rows[pivot_row][j] / content;
  std::size_t lead = 0;
  while (dec.direction[lead] == 0) ++lead;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row[lead] % dec.direction[lead] != 0) return std::nullopt;
    long m = row[lead] / dec.direction[lead];
    for (std::size_t j = 0; j < width; ++j)
      if (row[j] != m * dec.direction[j]) return std::nullopt;
    dec.multiples[i] = m;
  }
  return dec;
}

}  // namespace detail

/// True iff the multiplicative group generated by Z is discrete.  All
/// entries must be positive.
inline bool is_discrete(const std::vector<Rational>& z) {
  auto lat = ExponentLattice::from_generators(z);
  return detail::decompose_rank_one(lat.matrix, lat.primes.size()).has_value();
}

/// The least element above 1 of the group generated by Z, together with an
/// exponent vector realising it.  Requires a discrete, nontrivial group.
inline DiscreteSlopeGroup least_above_one(const std::vector<Rational>& z) {
  auto lat = ExponentLattice::from_generators(z);
  auto dec = detail::decompose_rank_one(lat.matrix, lat.primes.size());
  if (!dec)
    throw std::invalid_argument("least_above_one: group is not discrete");
  // gcd over the nonzero multiples, accumulating Bezout coefficients.
  std::vector<long> coeff(z.size(), 0);
  long g = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    long m = dec->multiples[i];
    if (m == 0) continue;
    if (g == 0) {
      g = m >= 0 ? m : -m;
      coeff.assign(z.size(), 0);
      coeff[i] = m >= 0 ? 1 : -1;
    } else {
      long x, y;
      long g2 = detail::gcd_ext(g, m, x, y);
      for (long& c : coeff) c *= x;
      coeff[i] += y;
      g = g2;
    }
  }
  if (g == 0)
    throw std::invalid_argument("least_above_one: trivial group {1}");
  Rational primitive(1);
  for (std::size_t j = 0; j < lat.primes.size(); ++j)
    primitive *= rat_pow(Rational(lat.primes[j]), dec->direction[j]);
  Rational base = rat_pow(primitive, g);
  if (base < 1) {
    base = Rational(1) / base;
    for (long& c : coeff) c = -c;
  }
  return {base, coeff};
}

/// The integer l with base^l = m exactly, if one exists.  Requires base > 1.
inline std::optional<long> discrete_log(const Rational& m,
                                        const Rational& base) {
  if (base <= 1) throw std::invalid_argument("discrete_log: base must be > 1");
  if (m <= 0) throw std::invalid_argument("discrete_log: m must be positive");
  if (m == 1) return 0;
  PrimeExponentVector vb = factorize(base);
  PrimeExponentVector vm = factorize(m);
  // l = vm[p] / vb[p] on any prime of base; then verify componentwise.
  const auto& [p0, e0] = *vb.begin();
  auto it = vm.find(p0);
  if (it == vm.end()) return std::nullopt;
  if (it->second % e0 != 0) return std::nullopt;
  long l = it->second / e0;
  for (const auto& [p, e] : vb) {
    auto jt = vm.find(p);
    if (jt == vm.end() || jt->second != e * l) return std::nullopt;
  }
  for (const auto& [p, e] : vm)
    if (vb.find(p) == vb.end()) return std::nullopt;
  return l;
}

}  // namespace plgroup

#endif  // PLGROUP_SLOPE_LATTICE_HPP
