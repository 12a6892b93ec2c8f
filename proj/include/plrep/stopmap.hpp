#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "plrep/plmap.hpp"

namespace plrep {

// A nondegenerate closed subinterval of [0,1].
struct Interval {
  Rat lo;
  Rat hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

// The stop intervals of a reparametrization together with their values, in
// increasing order; the pairing interval -> value is the order-preserving
// stop map. The stop set is the union of the intervals; the move intervals
// are the closures of the components of its complement.
struct StopData {
  std::vector<std::pair<Interval, Rat>> stops;

  bool empty() const { return stops.empty(); }
  std::size_t size() const { return stops.size(); }

  // Throws InvalidStopData unless: intervals are nondegenerate, within
  // [0,1], pairwise disjoint and increasing; values strictly increasing in
  // [0,1]; an interval contains 0 iff its value is 0, and contains 1 iff its
  // value is 1.
  void validate() const;

  friend bool operator==(const StopData&, const StopData&) = default;
};

// One entry per maximal zero-slope plateau of f; empty for a homeomorphism.
StopData stop_data(const Reparam& f);

// Sorted stop values of f.
std::vector<Rat> stop_values(const Reparam& f);

// Closures of the complement components of the stop set; f is strictly
// increasing on each.
std::vector<Interval> move_intervals(const Reparam& f);

// Stop data of f o g computed purely from the stop data of the factors:
// stop intervals are g's plateaus whose value misses f's stop set plus the
// g-preimages of f's plateaus; values are f(C_g) union C_f. Agrees exactly
// with stop_data(compose(f, g)).
StopData compose_stop_data(const Reparam& f, const Reparam& g);

// The canonical reparametrization with exactly the given stop data: a single
// linear segment on every move interval. Throws InvalidStopData.
Reparam realize(const StopData& sd);

// Canonical class representative keyed by a finite stop-value set: for k
// sorted values the plateaus occupy [(2i-1)/(2k+1), 2i/(2k+1)].
// Input treated as a set; throws OutOfRange.
Reparam realize_values(std::vector<Rat> values);

// The iterative plateau-insertion construction: starting from the identity,
// step n inserts a plateau for values[n] at its unique preimage x* on the
// hosting segment (a,b), with half-width (1/4) min(x*-a, b-x*, 2^-n/slope)
// so that consecutive steps are closer than 2^-n in sup distance. For the
// values 0 and 1 the preimage lies at an endpoint and the plateau is
// one-sided with the same bound. Throws DuplicateValue, OutOfRange.
Reparam countable_builder(const std::vector<Rat>& values, std::size_t depth);

// Strictly increasing approximation within sup distance 1/n: piecewise
// linear through (c_k, k/n) where c_k is the minimal f-preimage of k/n.
Reparam approx_homeo(const Reparam& f, unsigned n);

// Non-injective approximation within sup distance 1/n: agrees with f on
// [c_1, 1], holds value 0 on [0, c_1/2].
Reparam approx_noninjective(const Reparam& f, unsigned n);

}  // namespace plrep
