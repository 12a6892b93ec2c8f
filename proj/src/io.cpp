#include "plrep/io.hpp"

#include <json.hpp>

#include "plrep/error.hpp"

namespace plrep {

using nlohmann::json;

namespace {

json rat_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from(const json& j) {
  if (!j.is_string()) fail("SyntaxError", "rational must be a string");
  return parse_rat(j.get<std::string>());
}

json reparam_payload(const Reparam& f) {
  json bps = json::array();
  for (const auto& bp : f.points()) {
    bps.push_back(json::array({rat_json(bp.x), rat_json(bp.y)}));
  }
  return json{{"breakpoints", std::move(bps)}};
}

Reparam reparam_from(const json& payload) {
  if (!payload.contains("breakpoints") || !payload["breakpoints"].is_array()) {
    fail("SyntaxError", "reparam payload needs a breakpoints array");
  }
  std::vector<Breakpoint> pts;
  for (const auto& bp : payload["breakpoints"]) {
    if (!bp.is_array() || bp.size() != 2) {
      fail("SyntaxError", "breakpoint must be a [x, y] pair");
    }
    pts.push_back({rat_from(bp[0]), rat_from(bp[1])});
  }
  return Reparam::canonicalize(std::move(pts));
}

json path_payload(const Path& p) {
  json bps = json::array();
  for (const auto& bp : p.points()) {
    json coords = json::array();
    for (const auto& c : bp.p) coords.push_back(rat_json(c));
    bps.push_back(json::array({rat_json(bp.t), std::move(coords)}));
  }
  return json{{"dim", p.dim()}, {"breakpoints", std::move(bps)}};
}

Path path_from(const json& payload) {
  if (!payload.contains("dim") || !payload["dim"].is_number_integer() ||
      !payload.contains("breakpoints") || !payload["breakpoints"].is_array()) {
    fail("SyntaxError", "path payload needs dim and breakpoints");
  }
  const int dim = payload["dim"].get<int>();
  std::vector<PathBreakpoint> pts;
  for (const auto& bp : payload["breakpoints"]) {
    if (!bp.is_array() || bp.size() != 2 || !bp[1].is_array()) {
      fail("SyntaxError", "path breakpoint must be [t, [coords...]]");
    }
    Point pt;
    for (const auto& c : bp[1]) pt.push_back(rat_from(c));
    pts.push_back({rat_from(bp[0]), std::move(pt)});
  }
  return Path::canonicalize(dim, std::move(pts));
}

json stopdata_payload(const StopData& sd) {
  json stops = json::array();
  for (const auto& [iv, v] : sd.stops) {
    stops.push_back(json::array(
        {json::array({rat_json(iv.lo), rat_json(iv.hi)}), rat_json(v)}));
  }
  return json{{"stops", std::move(stops)}};
}

StopData stopdata_from(const json& payload) {
  if (!payload.contains("stops") || !payload["stops"].is_array()) {
    fail("SyntaxError", "stopdata payload needs a stops array");
  }
  StopData sd;
  for (const auto& st : payload["stops"]) {
    if (!st.is_array() || st.size() != 2 || !st[0].is_array() ||
        st[0].size() != 2) {
      fail("SyntaxError", "stop must be [[lo, hi], value]");
    }
    sd.stops.push_back(
        {{rat_from(st[0][0]), rat_from(st[0][1])}, rat_from(st[1])});
  }
  sd.validate();
  return sd;
}

json class_payload(const TraceClass& tc) {
  json vals = json::array();
  for (const auto& v : tc.values) vals.push_back(rat_json(v));
  return json{{"values", std::move(vals)},
              {"representative", reparam_payload(tc.representative)}};
}

TraceClass class_from(const json& payload) {
  if (!payload.contains("values") || !payload["values"].is_array()) {
    fail("SyntaxError", "class payload needs a values array");
  }
  std::vector<Rat> values;
  for (const auto& v : payload["values"]) values.push_back(rat_from(v));
  TraceClass tc = class_from_values(std::move(values));
  if (payload.contains("representative")) {
    if (reparam_from(payload["representative"]) != tc.representative) {
      fail("ValidationError",
           "representative is not the canonical realization of the values");
    }
  }
  return tc;
}

json witness_payload(const HomotopyWitness& w) {
  return json{{"r", path_payload(w.r)},
              {"phi", reparam_payload(w.phi)},
              {"psi", reparam_payload(w.psi)},
              {"eta", reparam_payload(w.eta)}};
}

HomotopyWitness witness_from(const json& payload) {
  for (const char* key : {"r", "phi", "psi", "eta"}) {
    if (!payload.contains(key)) {
      fail("SyntaxError", std::string("witness payload needs ") + key);
    }
  }
  HomotopyWitness w{path_from(payload["r"]), reparam_from(payload["phi"]),
                    reparam_from(payload["psi"]), reparam_from(payload["eta"])};
  if (w.eta != pointwise_max(w.phi, w.psi)) {
    fail("ValidationError", "eta must be the pointwise max of phi and psi");
  }
  return w;
}

}  // namespace

const char* Document::kind() const {
  switch (payload.index()) {
    case 0: return "reparam";
    case 1: return "path";
    case 2: return "stopdata";
    case 3: return "class";
    default: return "witness";
  }
}

Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail("SyntaxError", e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string() ||
      !j.contains("payload")) {
    fail("SyntaxError", "document needs kind and payload");
  }
  const std::string kind = j["kind"].get<std::string>();
  const json& payload = j["payload"];
  try {
    if (kind == "reparam") return Document{reparam_from(payload)};
    if (kind == "path") return Document{path_from(payload)};
    if (kind == "stopdata") return Document{stopdata_from(payload)};
    if (kind == "class") return Document{class_from(payload)};
    if (kind == "witness") return Document{witness_from(payload)};
  } catch (const Error& e) {
    if (e.name() == "SyntaxError" || e.name() == "ValidationError") throw;
    fail("ValidationError", std::string(e.what()));
  }
  fail("SyntaxError", "unknown document kind '" + kind + "'");
}

std::string serialize(const Document& doc) {
  json payload;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Reparam>) {
          payload = reparam_payload(v);
        } else if constexpr (std::is_same_v<T, Path>) {
          payload = path_payload(v);
        } else if constexpr (std::is_same_v<T, StopData>) {
          payload = stopdata_payload(v);
        } else if constexpr (std::is_same_v<T, TraceClass>) {
          payload = class_payload(v);
        } else {
          payload = witness_payload(v);
        }
      },
      doc.payload);
  json j{{"kind", doc.kind()}, {"payload", std::move(payload)}};
  return j.dump();
}

}  // namespace plrep
