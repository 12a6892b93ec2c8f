#include "plrep/lattice.hpp"

#include <algorithm>

#include "plrep/error.hpp"

namespace plrep {

TraceClass class_from_values(std::vector<Rat> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  Reparam rep = realize_values(values);
  return TraceClass{std::move(values), std::move(rep)};
}

TraceClass class_of(const Reparam& f) { return class_from_values(stop_values(f)); }

bool leq(const TraceClass& a, const TraceClass& b) {
  return std::includes(b.values.begin(), b.values.end(), a.values.begin(),
                       a.values.end());
}

TraceClass join(const TraceClass& a, const TraceClass& b) {
  std::vector<Rat> u;
  std::set_union(a.values.begin(), a.values.end(), b.values.begin(),
                 b.values.end(), std::back_inserter(u));
  return class_from_values(std::move(u));
}

TraceClass meet(const TraceClass& a, const TraceClass& b) {
  std::vector<Rat> u;
  std::set_intersection(a.values.begin(), a.values.end(), b.values.begin(),
                        b.values.end(), std::back_inserter(u));
  return class_from_values(std::move(u));
}

JoinWitness join_witness(const Reparam& f1, const Reparam& f2) {
  const std::vector<Rat> c1 = stop_values(f1);
  const std::vector<Rat> c2 = stop_values(f2);
  // New stop values to graft onto f1: preimages of f2's values missing from
  // f1; those values avoid f1's stop set, so the preimages are points.
  std::vector<Rat> pre;
  for (const auto& v : c2) {
    if (!std::binary_search(c1.begin(), c1.end(), v)) {
      pre.push_back(preimage_min(f1, v));
    }
  }
  Reparam psi1 = realize_values(std::move(pre));
  const Reparam lifted = compose(f1, psi1);
  Reparam psi2 = right_lift(lifted, f2);
  return JoinWitness{std::move(psi1), std::move(psi2)};
}

MeetWitness meet_witness(const Reparam& f1, const Reparam& f2) {
  const StopData sd1 = stop_data(f1);
  const StopData sd2 = stop_data(f2);
  const std::vector<Rat> c2 = stop_values(f2);
  // phi keeps exactly f1's plateaus whose value f2 shares.
  StopData sd_phi;
  for (const auto& [iv, v] : sd1.stops) {
    if (std::binary_search(c2.begin(), c2.end(), v)) {
      sd_phi.stops.push_back({iv, v});
    }
  }
  Reparam phi = realize(sd_phi);
  Reparam psi1 = left_factor(f1, phi);

  // Correction homeomorphism: send each plateau of phi linearly onto the
  // f2-plateau with the same value, linear in between.
  std::vector<Breakpoint> rho_pts;
  rho_pts.push_back({Rat(0), Rat(0)});
  for (const auto& [iv, v] : sd_phi.stops) {
    const Interval* target = nullptr;
    for (const auto& [jv, w] : sd2.stops) {
      if (w == v) target = &jv;
    }
    if (iv.lo > 0) rho_pts.push_back({iv.lo, target->lo});
    rho_pts.push_back({iv.hi, target->hi});
  }
  if (rho_pts.back().x < 1) rho_pts.push_back({Rat(1), Rat(1)});
  Reparam rho = Reparam::canonicalize(std::move(rho_pts));

  Reparam psi2 = left_factor(compose(f2, rho), phi);
  return MeetWitness{std::move(rho), std::move(phi), std::move(psi1),
                     std::move(psi2)};
}

}  // namespace plrep
