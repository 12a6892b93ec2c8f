#include "plrep/rat.hpp"

#include <cctype>

#include "plrep/error.hpp"

namespace plrep {

using boost::multiprecision::cpp_int;

std::string rat_to_string(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

bool valid_int(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      if (!valid_int(text)) fail("SyntaxError", "bad rational '" + text + "'");
      return Rat(cpp_int(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) {
      fail("SyntaxError", "bad rational '" + text + "'");
    }
    cpp_int d(den);
    if (d == 0) fail("SyntaxError", "zero denominator in '" + text + "'");
    return Rat(cpp_int(num), d);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail("SyntaxError", "bad rational '" + text + "'");
  }
}

}  // namespace plrep
