#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace plrep {

// Exact rational numbers; always stored in lowest terms with a positive
// denominator.
using Rat = boost::multiprecision::cpp_rational;

// Lowest-terms "n/d" form, e.g. "0/1", "-3/4".
std::string rat_to_string(const Rat& r);

// Accepts "n" or "n/d" with optional sign; throws SyntaxError on malformed
// input or a zero denominator.
Rat parse_rat(const std::string& text);

inline bool in_unit(const Rat& r) { return r >= 0 && r <= 1; }

}  // namespace plrep
