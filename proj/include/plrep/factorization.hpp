#pragma once

#include <optional>
#include <vector>

#include "plrep/stopmap.hpp"

namespace plrep {

// Solves eta = phi o psi for psi. A lift exists iff the stop values of phi
// are contained in those of eta; otherwise NoRightLift is thrown.
//
// Without extra_stops the lift is minimal: its stop-value set is exactly the
// phi-preimage of C_eta \ C_phi, and it is a homeomorphism when the stop
// value sets agree. With extra_stops the result's stop-value set equals the
// given set, which must satisfy
//   phi^-1(C_eta \ C_phi)  subset  C  subset  phi^-1(C_eta \ C_phi) u D_phi
// (throws BadExtraStops otherwise); extra plateaus are laid out inside the
// phi-plateau images in the realize_values pattern.
Reparam right_lift(const Reparam& eta, const Reparam& phi,
                   const std::optional<std::vector<Rat>>& extra_stops =
                       std::nullopt);

// Solves eta = psi o phi for the unique psi. A factor exists iff every stop
// interval of phi is contained in a stop interval of eta; otherwise
// NoLeftFactor is thrown.
Reparam left_factor(const Reparam& eta, const Reparam& phi);

}  // namespace plrep
