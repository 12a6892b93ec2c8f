#pragma once

#include <string>

#include "plrep/io.hpp"

namespace plrep {

// Deterministic SVG (viewBox "0 0 512 512", y inverted for plotting) of a
// reparametrization graph, a path with dim <= 2, or a stop-data diagram with
// the interval-to-value pairing drawn in. Stop intervals are shaded.
// Throws Unrenderable for anything else.
std::string render(const Document& doc);

}  // namespace plrep
