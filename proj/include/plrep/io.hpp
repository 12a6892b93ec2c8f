#pragma once

#include <string>
#include <variant>

#include "plrep/trace.hpp"

namespace plrep {

// A typed value with its wire kind. Serialization is canonical: parsing a
// serialized document and re-serializing yields identical bytes.
struct Document {
  std::variant<Reparam, Path, StopData, TraceClass, HomotopyWitness> payload;

  const char* kind() const;
};

// Throws SyntaxError on malformed text, ValidationError (wrapping the
// violated rule) on invariant violations.
Document parse_document(const std::string& text);

std::string serialize(const Document& doc);

}  // namespace plrep
