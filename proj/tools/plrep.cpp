// Command-line front end: exact rational documents in, documents (or SVG)
// out. Exit codes: 0 success / decided true, 1 decided false, 2 domain
// error, 3 input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "plrep/error.hpp"
#include "plrep/io.hpp"
#include "plrep/render.hpp"

namespace {

using namespace plrep;

constexpr int kFalse = 1;
constexpr int kDomainError = 2;
constexpr int kInputError = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("SyntaxError", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Document load(const std::string& path) { return parse_document(read_file(path)); }

Reparam load_reparam(const std::string& path) {
  Document d = load(path);
  if (const auto* f = std::get_if<Reparam>(&d.payload)) return *f;
  fail("ValidationError", "'" + path + "' is not a reparam document");
}

Path load_path(const std::string& path) {
  Document d = load(path);
  if (const auto* p = std::get_if<Path>(&d.payload)) return *p;
  fail("ValidationError", "'" + path + "' is not a path document");
}

StopData load_stopdata(const std::string& path) {
  Document d = load(path);
  if (const auto* sd = std::get_if<StopData>(&d.payload)) return *sd;
  fail("ValidationError", "'" + path + "' is not a stopdata document");
}

TraceClass load_class(const std::string& path) {
  Document d = load(path);
  if (const auto* tc = std::get_if<TraceClass>(&d.payload)) return *tc;
  if (const auto* f = std::get_if<Reparam>(&d.payload)) return class_of(*f);
  fail("ValidationError", "'" + path + "' is neither a class nor a reparam");
}

void emit(Document d) { std::cout << serialize(d) << "\n"; }

std::vector<Rat> parse_rats(const std::vector<std::string>& raw) {
  std::vector<Rat> out;
  for (const auto& s : raw) out.push_back(parse_rat(s));
  return out;
}

nlohmann::json point_json(const Point& pt) {
  nlohmann::json coords = nlohmann::json::array();
  for (const auto& c : pt) coords.push_back(rat_to_string(c));
  return coords;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact piecewise-linear reparametrizations and traces"};
  app.require_subcommand(1);

  std::string file_a, file_b, file_c, file_d;
  std::vector<std::string> value_args;
  unsigned n_arg = 1;
  std::size_t depth_arg = 0;
  std::string check_mode;

  auto* c_compose = app.add_subcommand("compose", "Compose two reparametrizations (first outer)");
  c_compose->add_option("f", file_a)->required();
  c_compose->add_option("g", file_b)->required();

  auto* c_stopmap = app.add_subcommand("stopmap", "Stop data of a reparametrization or path");
  c_stopmap->add_option("input", file_a)->required();

  auto* c_realize = app.add_subcommand("realize", "Canonical reparametrization with given stop data");
  c_realize->add_option("stopdata", file_a)->required();

  auto* c_rv = app.add_subcommand("realize-values", "Canonical reparametrization with given stop values");
  c_rv->add_option("values", value_args);

  auto* c_cb = app.add_subcommand("build-countable", "Iterative plateau-insertion construction");
  c_cb->add_option("--depth", depth_arg)->required();
  c_cb->add_option("values", value_args);

  auto* c_ah = app.add_subcommand("approx-homeo", "Strictly increasing approximation within 1/n");
  c_ah->add_option("f", file_a)->required();
  c_ah->add_option("n", n_arg)->required();

  auto* c_an = app.add_subcommand("approx-noninjective", "Non-injective approximation within 1/n");
  c_an->add_option("f", file_a)->required();
  c_an->add_option("n", n_arg)->required();

  auto* c_fr = app.add_subcommand("factor-right", "Solve eta = phi o psi for psi");
  c_fr->add_option("--eta", file_a)->required();
  c_fr->add_option("--phi", file_b)->required();
  c_fr->add_option("--extra-stops", value_args);

  auto* c_fl = app.add_subcommand("factor-left", "Solve eta = psi o phi for psi");
  c_fl->add_option("--eta", file_a)->required();
  c_fl->add_option("--phi", file_b)->required();

  auto* c_class = app.add_subcommand("class", "Trace class of a reparametrization");
  c_class->add_option("f", file_a)->required();

  auto* c_leq = app.add_subcommand("leq", "Class order (exit 0 true, 1 false)");
  c_leq->add_option("a", file_a)->required();
  c_leq->add_option("b", file_b)->required();

  auto* c_join = app.add_subcommand("join", "Join of two classes");
  c_join->add_option("a", file_a)->required();
  c_join->add_option("b", file_b)->required();

  auto* c_meet = app.add_subcommand("meet", "Meet of two classes");
  c_meet->add_option("a", file_a)->required();
  c_meet->add_option("b", file_b)->required();

  auto* c_jw = app.add_subcommand("join-witness", "Witness pair for the join");
  c_jw->add_option("f1", file_a)->required();
  c_jw->add_option("f2", file_b)->required();

  auto* c_mw = app.add_subcommand("meet-witness", "Witness tuple for the meet");
  c_mw->add_option("f1", file_a)->required();
  c_mw->add_option("f2", file_b)->required();

  auto* c_reg = app.add_subcommand("regularize", "Regular path and reparametrization factor");
  c_reg->add_option("p", file_a)->required();

  auto* c_nf = app.add_subcommand("normal-form", "Reduced vertex chain of a path's trace");
  c_nf->add_option("p", file_a)->required();

  auto* c_equiv = app.add_subcommand("equiv", "Trace equivalence (exit 0 true, 1 false)");
  c_equiv->add_option("p", file_a)->required();
  c_equiv->add_option("q", file_b)->required();

  auto* c_ss = app.add_subcommand("shared-source", "Common regular source of two equivalent paths");
  c_ss->add_option("p", file_a)->required();
  c_ss->add_option("q", file_b)->required();

  auto* c_th = app.add_subcommand("thin-homotopy", "Thin homotopy witness for two equivalent paths");
  c_th->add_option("p", file_a)->required();
  c_th->add_option("q", file_b)->required();

  auto* c_concat = app.add_subcommand("concat", "Concatenate two paths");
  c_concat->add_option("p", file_a)->required();
  c_concat->add_option("q", file_b)->required();

  auto* c_check = app.add_subcommand("check", "Path predicates (exit 0 true, 1 false)");
  c_check->add_option("mode", check_mode)
      ->required()
      ->check(CLI::IsMember({"is-regular", "is-directed", "is-loop-free"}));
  c_check->add_option("p", file_a)->required();

  auto* c_ic = app.add_subcommand("image-chain", "Image of a loop-free path");
  c_ic->add_option("p", file_a)->required();

  auto* c_render = app.add_subcommand("render", "Deterministic SVG figure");
  c_render->add_option("input", file_a)->required();

  CLI11_PARSE(app, argc, argv);

  bool parsing_inputs = true;  // errors before this flips are input errors
  try {
    if (c_compose->parsed()) {
      Reparam f = load_reparam(file_a), g = load_reparam(file_b);
      parsing_inputs = false;
      emit(Document{compose(f, g)});
    } else if (c_stopmap->parsed()) {
      Document d = load(file_a);
      parsing_inputs = false;
      if (const auto* f = std::get_if<Reparam>(&d.payload)) {
        emit(Document{stop_data(*f)});
      } else if (const auto* p = std::get_if<Path>(&d.payload)) {
        const PathStopData sd = path_stop_data(*p);
        nlohmann::json stops = nlohmann::json::array();
        for (const auto& st : sd.stops) {
          stops.push_back(nlohmann::json::array(
              {nlohmann::json::array({rat_to_string(st.interval.lo),
                                      rat_to_string(st.interval.hi)}),
               point_json(st.value)}));
        }
        std::cout << nlohmann::json{{"stops", stops}, {"whole", sd.whole}}.dump()
                  << "\n";
      } else {
        fail("ValidationError", "stopmap needs a reparam or path document");
      }
    } else if (c_realize->parsed()) {
      StopData sd = load_stopdata(file_a);
      parsing_inputs = false;
      emit(Document{realize(sd)});
    } else if (c_rv->parsed()) {
      std::vector<Rat> vs = parse_rats(value_args);
      parsing_inputs = false;
      emit(Document{realize_values(std::move(vs))});
    } else if (c_cb->parsed()) {
      std::vector<Rat> vs = parse_rats(value_args);
      parsing_inputs = false;
      emit(Document{countable_builder(vs, depth_arg)});
    } else if (c_ah->parsed()) {
      Reparam f = load_reparam(file_a);
      parsing_inputs = false;
      emit(Document{approx_homeo(f, n_arg)});
    } else if (c_an->parsed()) {
      Reparam f = load_reparam(file_a);
      parsing_inputs = false;
      emit(Document{approx_noninjective(f, n_arg)});
    } else if (c_fr->parsed()) {
      Reparam eta = load_reparam(file_a), phi = load_reparam(file_b);
      std::optional<std::vector<Rat>> extra;
      if (!value_args.empty()) extra = parse_rats(value_args);
      parsing_inputs = false;
      emit(Document{right_lift(eta, phi, extra)});
    } else if (c_fl->parsed()) {
      Reparam eta = load_reparam(file_a), phi = load_reparam(file_b);
      parsing_inputs = false;
      emit(Document{left_factor(eta, phi)});
    } else if (c_class->parsed()) {
      Reparam f = load_reparam(file_a);
      parsing_inputs = false;
      emit(Document{class_of(f)});
    } else if (c_leq->parsed()) {
      TraceClass a = load_class(file_a), b = load_class(file_b);
      parsing_inputs = false;
      return leq(a, b) ? 0 : kFalse;
    } else if (c_join->parsed() || c_meet->parsed()) {
      TraceClass a = load_class(file_a), b = load_class(file_b);
      parsing_inputs = false;
      emit(Document{c_join->parsed() ? join(a, b) : meet(a, b)});
    } else if (c_jw->parsed()) {
      Reparam f1 = load_reparam(file_a), f2 = load_reparam(file_b);
      parsing_inputs = false;
      JoinWitness w = join_witness(f1, f2);
      emit(Document{w.psi1});
      emit(Document{w.psi2});
    } else if (c_mw->parsed()) {
      Reparam f1 = load_reparam(file_a), f2 = load_reparam(file_b);
      parsing_inputs = false;
      MeetWitness w = meet_witness(f1, f2);
      emit(Document{w.rho});
      emit(Document{w.phi});
      emit(Document{w.psi1});
      emit(Document{w.psi2});
    } else if (c_reg->parsed()) {
      Path p = load_path(file_a);
      parsing_inputs = false;
      Regularization r = regularize(p);
      emit(Document{r.q});
      emit(Document{r.phi});
    } else if (c_nf->parsed()) {
      Path p = load_path(file_a);
      parsing_inputs = false;
      const TraceNF nf = normal_form(p);
      nlohmann::json verts = nlohmann::json::array();
      for (const auto& v : nf.vertices) verts.push_back(point_json(v));
      std::cout << nlohmann::json{{"dim", p.dim()}, {"vertices", verts}}.dump()
                << "\n";
    } else if (c_equiv->parsed()) {
      Path p = load_path(file_a), q = load_path(file_b);
      parsing_inputs = false;
      return equivalent(p, q) ? 0 : kFalse;
    } else if (c_ss->parsed()) {
      Path p = load_path(file_a), q = load_path(file_b);
      parsing_inputs = false;
      SharedSource s = shared_source(p, q);
      emit(Document{s.r});
      emit(Document{s.phi});
      emit(Document{s.psi});
    } else if (c_th->parsed()) {
      Path p = load_path(file_a), q = load_path(file_b);
      parsing_inputs = false;
      emit(Document{thin_homotopy(p, q)});
    } else if (c_concat->parsed()) {
      Path p = load_path(file_a), q = load_path(file_b);
      parsing_inputs = false;
      emit(Document{concat(p, q)});
    } else if (c_check->parsed()) {
      Path p = load_path(file_a);
      parsing_inputs = false;
      bool ok = check_mode == "is-regular"    ? is_regular(p)
                : check_mode == "is-directed" ? is_directed(p)
                                              : is_loop_free(p);
      return ok ? 0 : kFalse;
    } else if (c_ic->parsed()) {
      Path p = load_path(file_a);
      parsing_inputs = false;
      const ImageChain ic = image_chain(p);
      if (ic.is_point) {
        std::cout << nlohmann::json{{"point", point_json(ic.point)}}.dump()
                  << "\n";
      } else {
        nlohmann::json verts = nlohmann::json::array();
        for (const auto& v : ic.chain) verts.push_back(point_json(v));
        std::cout << nlohmann::json{{"chain", verts}}.dump() << "\n";
      }
    } else if (c_render->parsed()) {
      Document d = load(file_a);
      parsing_inputs = false;
      std::cout << render(d);
    }
  } catch (const Error& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    if (parsing_inputs || e.name() == "SyntaxError" ||
        e.name() == "ValidationError") {
      return kInputError;
    }
    return kDomainError;
  }
  return 0;
}
