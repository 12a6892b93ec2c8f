#pragma once

#include <utility>
#include <vector>

#include "plrep/lattice.hpp"

namespace plrep {

using Point = std::vector<Rat>;

struct PathBreakpoint {
  Rat t;
  Point p;
  friend bool operator==(const PathBreakpoint&, const PathBreakpoint&) =
      default;
};

// A piecewise-linear path in rational d-space, canonical: t strictly
// increasing from 0 to 1, no breakpoint removable by collinearity in the
// (t, point) graph, at least two breakpoints (a constant path keeps two
// equal points). Immutable after construction.
class Path {
 public:
  // Throws BadTimeRange, NotIncreasingTime, DimensionMismatch (a point of
  // the wrong width).
  static Path canonicalize(int dim, std::vector<PathBreakpoint> pts);

  int dim() const { return dim_; }
  const std::vector<PathBreakpoint>& points() const { return pts_; }
  bool is_constant() const;

  friend bool operator==(const Path&, const Path&) = default;

 private:
  Path() = default;
  int dim_ = 0;
  std::vector<PathBreakpoint> pts_;
};

struct PathStop {
  Interval interval;
  Point value;
  friend bool operator==(const PathStop&, const PathStop&) = default;
};

// Maximal constancy intervals of a path with their point values. For a
// constant path the whole flag is set and the single stop is [0,1].
struct PathStopData {
  std::vector<PathStop> stops;
  bool whole = false;
  friend bool operator==(const PathStopData&, const PathStopData&) = default;
};

// Canonical key of a trace class: the reduced vertex chain. No two
// consecutive vertices are equal and no interior vertex lies strictly
// between its neighbours in a consistent direction; a constant trace is a
// single vertex.
struct TraceNF {
  std::vector<Point> vertices;
  friend bool operator==(const TraceNF&, const TraceNF&) = default;
};

// Symbolic thin-homotopy witness between two equivalent paths p and q:
// p = r o phi, q = r o psi, eta = max(phi, psi). The two homotopy sheets
// are H1(s,t) = r((1-s) phi(t) + s eta(t)) and H2 with psi in place of phi.
struct HomotopyWitness {
  Path r;
  Reparam phi;
  Reparam psi;
  Reparam eta;
};

Point path_eval(const Path& p, const Rat& t);

// The right action of the reparametrization monoid: t -> p(f(t)), exact.
Path path_reparam(const Path& p, const Reparam& f);

PathStopData path_stop_data(const Path& p);

// No stop intervals, or constant.
bool is_regular(const Path& p);

struct Regularization {
  Path q;
  Reparam phi;  // p == path_reparam(q, phi)
};

// Factors p = q o phi with q regular; phi has stop intervals equal to p's
// constancy intervals, midpoint stop values (0 resp. 1 for an interval
// touching an endpoint of [0,1]) and linear move parts.
Regularization regularize(const Path& p);

TraceNF normal_form(const Path& p);

// Reparametrization (trace) equivalence, decided by normal-form equality.
// Throws DimensionMismatch.
bool equivalent(const Path& p, const Path& q);

struct SharedSource {
  Path r;  // regular
  Reparam phi;  // p == path_reparam(r, phi)
  Reparam psi;  // q == path_reparam(r, psi)
};

// A common regular source for two equivalent paths; throws NotEquivalent.
SharedSource shared_source(const Path& p, const Path& q);

// Given a regular p and a witness equality p o phi == p2 o phi2, returns the
// eta with p o eta == p2 (unique unless p is constant). Throws NotRegular,
// WitnessMismatch.
Reparam factor_regular(const Path& p, const Reparam& phi, const Path& p2,
                       const Reparam& phi2);

// First half traverses p at doubled speed, second half q. Throws
// EndpointMismatch, DimensionMismatch.
Path concat(const Path& p, const Path& q);

// Every coordinate weakly increasing along every segment (the product
// d-structure on rational space).
bool is_directed(const Path& p);

// True iff the path never revisits a point except by standing still;
// decided by exact segment-intersection tests on the normal form.
bool is_loop_free(const Path& p);

struct ImageChain {
  bool is_point = false;
  Point point;                 // set when is_point
  std::vector<Point> chain;    // set otherwise; injective vertex chain
};

// The image of a loop-free path: a point or an arc given by its vertex
// chain. Throws NotLoopFree.
ImageChain image_chain(const Path& p);

// Throws NotEquivalent.
HomotopyWitness thin_homotopy(const Path& p, const Path& q);

// side 1 evaluates r((1-s) phi(t) + s eta(t)), side 2 uses psi.
// Throws OutOfRange.
Point witness_eval(const HomotopyWitness& w, int side, const Rat& s,
                   const Rat& t);

std::pair<Reparam, Reparam> witness_endpoints(const HomotopyWitness& w);

}  // namespace plrep
