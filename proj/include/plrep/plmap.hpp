#pragma once

#include <cstddef>
#include <vector>

#include "plrep/rat.hpp"

namespace plrep {

struct Breakpoint {
  Rat x;
  Rat y;
  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

// A piecewise-linear weakly increasing surjection of the unit interval fixing
// both endpoints, kept in canonical form: x strictly increasing, first point
// (0,0), last point (1,1), no interior breakpoint removable by collinearity.
// Canonical form makes semantic equality decidable by breakpoint-list
// equality. Immutable after construction.
class Reparam {
 public:
  // Validates and merges collinear interior breakpoints.
  // Throws BadEndpoints, NotMonotone, OutOfRange.
  static Reparam canonicalize(std::vector<Breakpoint> pts);

  static const Reparam& identity();

  const std::vector<Breakpoint>& points() const { return pts_; }
  std::size_t size() const { return pts_.size(); }

  friend bool operator==(const Reparam&, const Reparam&) = default;

 private:
  Reparam() = default;
  std::vector<Breakpoint> pts_;
};

// Pointwise value of f at t; throws OutOfRange for t outside [0,1].
Rat eval(const Reparam& f, const Rat& t);

// The monoid operation, t -> f(g(t)). Breakpoints are the union of g's
// breakpoints with the g-preimages of f's breakpoints (both endpoints where
// the preimage is a plateau), so the result is exact.
Reparam compose(const Reparam& f, const Reparam& g);

// Inverse in Homeo+(I); throws NotInjective if h has a zero-slope segment.
Reparam invert(const Reparam& h);

// Exact supremum metric ||f - g||_inf; attained at a merged breakpoint.
Rat sup_distance(const Reparam& f, const Reparam& g);

// Pointwise lattice operations on functions; crossings become breakpoints.
Reparam pointwise_max(const Reparam& f, const Reparam& g);
Reparam pointwise_min(const Reparam& f, const Reparam& g);

// t -> (1-s) f(t) + s g(t); throws OutOfRange for s outside [0,1].
Reparam convex_combination(const Reparam& f, const Reparam& g, const Rat& s);

// True iff every segment has positive slope.
bool is_homeo(const Reparam& f);

// Endpoints of the (possibly degenerate) preimage interval f^{-1}(v),
// v in [0,1].
Rat preimage_min(const Reparam& f, const Rat& v);
Rat preimage_max(const Reparam& f, const Rat& v);

// Sorted union of the breakpoint abscissae of f and g.
std::vector<Rat> merged_grid(const Reparam& f, const Reparam& g);

}  // namespace plrep
