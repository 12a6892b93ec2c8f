#pragma once

#include <vector>

#include "plrep/factorization.hpp"

namespace plrep {

// A class of reparametrizations modulo homeomorphisms, keyed by its
// stop-value set (a complete invariant); the representative is the canonical
// realize_values section.
struct TraceClass {
  std::vector<Rat> values;
  Reparam representative;

  friend bool operator==(const TraceClass& a, const TraceClass& b) {
    return a.values == b.values;
  }
};

TraceClass class_of(const Reparam& f);
TraceClass class_from_values(std::vector<Rat> values);

// Order by stop-value-set inclusion; equivalently, b factors through a on
// the right.
bool leq(const TraceClass& a, const TraceClass& b);

// The distributive lattice operations: union resp. intersection of keys.
TraceClass join(const TraceClass& a, const TraceClass& b);
TraceClass meet(const TraceClass& a, const TraceClass& b);

// Constructive witness for the join: compose(f1, psi1) == compose(f2, psi2)
// and the composite's stop-value set is the union of the factors'.
struct JoinWitness {
  Reparam psi1;
  Reparam psi2;
};
JoinWitness join_witness(const Reparam& f1, const Reparam& f2);

// Constructive witness for the meet: phi carries exactly the intersection of
// the stop-value sets, compose(psi1, phi) == f1, and
// compose(psi2, phi) == compose(f2, rho) for the correction homeomorphism
// rho.
struct MeetWitness {
  Reparam rho;
  Reparam phi;
  Reparam psi1;
  Reparam psi2;
};
MeetWitness meet_witness(const Reparam& f1, const Reparam& f2);

}  // namespace plrep
