#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include "plrep/io.hpp"
#include "plrep/render.hpp"
#include "testutil.hpp"

using namespace plrep;
using namespace testutil;

namespace {

std::string roundtrip(const Document& d) {
  const std::string text = serialize(d);
  CHECK(serialize(parse_document(text)) == text);
  return text;
}

std::string err_name(const std::string& text) {
  try {
    parse_document(text);
  } catch (const Error& e) {
    return e.name();
  }
  return "";
}

}  // namespace

TEST_CASE("reparam documents") {
  const std::string text = roundtrip(Document{fix_A()});
  CHECK(text ==
        R"({"kind":"reparam","payload":{"breakpoints":[["0/1","0/1"],)"
        R"(["1/4","1/2"],["3/4","1/2"],["1/1","1/1"]]}})");
  // Exact rationals, never floats.
  const Document d = parse_document(
      R"({"kind":"reparam","payload":{"breakpoints":[["0/1","0/1"],["1/3","1/3"],["1/1","1/1"]]}})");
  CHECK(std::get<Reparam>(d.payload) == Reparam::identity());
}

TEST_CASE("parse errors") {
  CHECK(err_name("{nonsense") == "SyntaxError");
  CHECK(err_name(R"({"kind":"reparam"})") == "SyntaxError");
  CHECK(err_name(R"({"kind":"widget","payload":{}})") == "SyntaxError");
  CHECK(err_name(
            R"({"kind":"reparam","payload":{"breakpoints":[["0/1","0/1"],["1/2","0.5"],["1/1","1/1"]]}})") ==
        "SyntaxError");
  // Decreasing ordinates surface as a validation failure naming the rule.
  const std::string text =
      R"({"kind":"reparam","payload":{"breakpoints":[["0/1","0/1"],["1/4","3/4"],["1/2","1/4"],["1/1","1/1"]]}})";
  CHECK(err_name(text) == "ValidationError");
  try {
    parse_document(text);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("NotMonotone") != std::string::npos);
  }
}

TEST_CASE("all kinds round-trip") {
  Rng rng(601);
  for (int i = 0; i < 25; ++i) {
    roundtrip(Document{rand_reparam(rng)});
    roundtrip(Document{rand_path(rng, 1 + i % 3)});
    roundtrip(Document{stop_data(rand_reparam(rng))});
    roundtrip(Document{class_of(rand_reparam(rng))});
    const Path p = rand_path(rng, 2);
    roundtrip(Document{thin_homotopy(p, path_reparam(p, rand_reparam(rng)))});
  }
}

TEST_CASE("class and witness payload validation") {
  CHECK(err_name(
            R"({"kind":"class","payload":{"values":["1/2"],"representative":{"breakpoints":[["0/1","0/1"],["1/1","1/1"]]}}})") ==
        "ValidationError");
  const HomotopyWitness w = thin_homotopy(fix_idpath(), fix_P1());
  std::string good = serialize(Document{w});
  CHECK(err_name(good) == "");
  // Tamper with eta so it is no longer the pointwise max.
  nlohmann::json j = nlohmann::json::parse(good);
  j["payload"]["eta"] = j["payload"]["phi"];
  CHECK(err_name(j.dump()) == "ValidationError");
}

TEST_CASE("kind dispatch") {
  CHECK(std::string(Document{fix_A()}.kind()) == "reparam");
  CHECK(std::string(Document{fix_Pz()}.kind()) == "path");
  CHECK(std::string(Document{stop_data(fix_A())}.kind()) == "stopdata");
  CHECK(std::string(Document{class_of(fix_A())}.kind()) == "class");
}

TEST_CASE("render reparam") {
  const std::string id_svg = render(Document{Reparam::identity()});
  CHECK(id_svg.find("viewBox=\"0 0 512 512\"") != std::string::npos);
  CHECK(id_svg.find("stopband") == std::string::npos);
  CHECK(id_svg.find("<polyline") != std::string::npos);
  CHECK(id_svg.find("points=\"0.00,512.00 512.00,0.00\"") != std::string::npos);

  const std::string a_svg = render(Document{fix_A()});
  // One shaded band over [1/4, 3/4].
  CHECK(a_svg.find("class=\"stopband\" x=\"128.00\"") != std::string::npos);
  CHECK(a_svg.find("width=\"256.00\"") != std::string::npos);
  CHECK(a_svg.find("stopband", a_svg.find("stopband") + 1) == std::string::npos);
  // Deterministic output.
  CHECK(a_svg == render(Document{fix_A()}));
}

TEST_CASE("render stopdata and paths") {
  CHECK(render(Document{stop_data(fix_A())}).find("stopband") !=
        std::string::npos);
  CHECK(render(Document{fix_P1()}).find("stopband") != std::string::npos);
  CHECK(render(Document{fix_Pz()}).find("<polyline") != std::string::npos);
  const Path p3 = Path::canonicalize(
      3, {{Rat(0), {Rat(0), Rat(0), Rat(0)}}, {Rat(1), {Rat(1), Rat(1), Rat(1)}}});
  try {
    render(Document{p3});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.name() == std::string("Unrenderable"));
  }
}
