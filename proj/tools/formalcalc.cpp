// Command-line front end: parses morphism description files and prints one
// JSON report per invocation.
#include "formalcalc/errors.hpp"
#include "formalcalc/localforms.hpp"
#include "formalcalc/parse.hpp"
#include "formalcalc/submanifold.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace formalcalc;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<std::string> source_names(const Shape& s) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < s.n; ++i) names.push_back("u" + std::to_string(i + 1));
  for (std::size_t j = 0; j < s.k; ++j) names.push_back("z" + std::to_string(j + 1));
  return names;
}

std::vector<std::string> target_names(const Shape& s) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < s.n; ++i) names.push_back("x" + std::to_string(i + 1));
  for (std::size_t j = 0; j < s.k; ++j) names.push_back("y" + std::to_string(j + 1));
  return names;
}

json point_json(const Point& p) {
  json out = json::array();
  for (const auto& r : p) out.push_back(rational_to_string(r));
  return out;
}

json triple_json(const RankTriple& t) {
  return json{{"total", t.total}, {"reduced", t.reduced}, {"formal", t.formal}};
}

// Components of a jet map rendered as "<lhs> = <expr in input vars>".
json jetmap_json(const JetMap& jm, const std::vector<std::string>& in_names,
                 const std::vector<std::string>& out_names) {
  json comps = json::object();
  for (std::size_t i = 0; i < out_names.size(); ++i)
    comps[out_names[i]] = jm.component(i).to_string(in_names);
  return json{{"source_basepoint", point_json(jm.src_basepoint())},
              {"target_basepoint", point_json(jm.tgt_basepoint())},
              {"components", comps}};
}

json morphism_json(const Morphism& m) {
  json comps = json::object();
  for (std::size_t i = 0; i < m.tgt().n; ++i)
    comps["x" + std::to_string(i + 1)] = m.cx()[i].to_string("u", "z");
  for (std::size_t j = 0; j < m.tgt().k; ++j)
    comps["y" + std::to_string(j + 1)] = m.cy()[j].to_string("u", "z");
  return json{{"source", {{"n", m.src().n}, {"k", m.src().k}}},
              {"target", {{"n", m.tgt().n}, {"k", m.tgt().k}}},
              {"components", comps}};
}

SliceSpec parse_spec(const std::string& text) {
  Point entries = parse_point(text);
  SliceSpec spec;
  if (entries.size() != 5)
    fail(errc::parse_error, "slice spec needs five entries n,n',r,k,k'");
  std::size_t vals[5];
  for (std::size_t i = 0; i < 5; ++i) {
    if (denominator(entries[i]) != 1 || entries[i] < 0)
      fail(errc::parse_error, "slice spec entries must be nonnegative integers");
    vals[i] = static_cast<std::size_t>(numerator(entries[i]));
  }
  spec.n = vals[0];
  spec.n_prime = vals[1];
  spec.r = vals[2];
  spec.k = vals[3];
  spec.k_prime = vals[4];
  spec.validate();
  return spec;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculus for morphisms of formal manifolds"};
  app.require_subcommand(1);
  app.fallthrough(); // lets --order appear after the subcommand arguments

  std::string file, file2, point_text, value_text, spec_text, expr_text;
  unsigned order = kDefaultOrder;
  app.add_option("--order", order, "truncation order (default 8)");

  auto* analyze = app.add_subcommand("analyze", "rank triple, classification, certificates");
  analyze->add_option("file", file)->required();
  analyze->add_option("--point", point_text)->required();

  auto* comp = app.add_subcommand("compose", "composition of two morphisms (outer inner)");
  comp->add_option("outer", file)->required();
  comp->add_option("inner", file2)->required();

  auto* invert = app.add_subcommand("invert", "formal inverse of the induced jet map");
  invert->add_option("file", file)->required();
  invert->add_option("--point", point_text)->required();

  auto* stand = app.add_subcommand("standardize", "constant-rank standard form");
  stand->add_option("file", file)->required();
  stand->add_option("--point", point_text)->required();

  auto* level = app.add_subcommand("level-set", "level set at a fiber point");
  level->add_option("file", file)->required();
  level->add_option("--point", point_text, "fiber point b")->required();
  level->add_option("--value", value_text, "target value a")->required();

  auto* slice = app.add_subcommand("slice-pullback", "pullback along a slice");
  slice->add_option("--spec", spec_text, "n,n',r,k,k'")->required();
  slice->add_option("--expr", expr_text, "expression in x/y")->required();

  auto* borel = app.add_subcommand("borel-preimage", "section of the slice pullback");
  borel->add_option("--spec", spec_text, "n,n',r,k,k'")->required();
  borel->add_option("--expr", expr_text, "expression in u/z")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  json report;
  report["command"] = app.get_subcommands()[0]->get_name();
  json inputs = json::object();
  if (!file.empty()) inputs["file"] = file;
  if (!file2.empty()) inputs["inner"] = file2;
  if (!point_text.empty()) inputs["point"] = point_text;
  if (!value_text.empty()) inputs["value"] = value_text;
  if (!spec_text.empty()) inputs["spec"] = spec_text;
  if (!expr_text.empty()) inputs["expr"] = expr_text;
  report["inputs"] = inputs;
  report["order"] = order;
  report["results"] = json::object();
  report["errors"] = json::array();

  try {
    json& res = report["results"];
    if (analyze->parsed()) {
      Morphism m = parse_morphism(read_file(file), order);
      Point b = parse_point(point_text);
      RankTriple t = m.rank_at(b);
      ClassifyFlags fl = m.classify_at(b);
      ConstantRankResult crc = constant_rank_check(m, b);
      res["underlying_point"] = point_json(m.underlying_point(b));
      res["rank_triple"] = triple_json(t);
      res["classification"] = {{"immersion", fl.immersion},
                               {"submersion", fl.submersion},
                               {"regular", fl.regular},
                               {"bijective_differential", fl.bijective_differential}};
      res["constant_rank"] = crc.constant;
      if (order >= 2) {
        KernelCertificate cert = kernel_surjectivity_certificate(m, b, order);
        res["kernel_certificate"] = {
            {"order", cert.order},
            {"dim_ker_deg2", cert.dim_ker_deg2},
            {"verdict", cert.verdict == CertVerdict::surjective_at_order
                            ? "surjective_at_order"
                            : "not_surjective"}};
      }
    } else if (comp->parsed()) {
      Morphism outer = parse_morphism(read_file(file), order);
      Morphism inner = parse_morphism(read_file(file2), order);
      Morphism c = compose(outer, inner);
      res["composition"] = morphism_json(c);
      res["text"] = print_morphism(c);
    } else if (invert->parsed()) {
      Morphism m = parse_morphism(read_file(file), order);
      Point b = parse_point(point_text);
      JetMap jm = morphism_to_jetmap(m, b, order);
      JetMap inv = jet_invert(jm, order);
      res["inverse"] = jetmap_json(inv, target_names(m.tgt()), source_names(m.src()));
      JetMap rt1 = compose(jm, inv), rt2 = compose(inv, jm);
      bool ok = rt1 == JetMap::identity(m.tgt(), jm.tgt_basepoint(), order) &&
                rt2 == JetMap::identity(m.src(), b, order);
      res["roundtrip"] = ok ? "ok" : "failed";
    } else if (stand->parsed()) {
      Morphism m = parse_morphism(read_file(file), order);
      Point b = parse_point(point_text);
      StandardizationResult st = standardize(m, b, order);
      res["rank_triple"] = triple_json(st.triple);
      res["r1"] = st.r1;
      res["r2"] = st.r2;
      res["r3"] = st.r3;
      res["standardized"] =
          jetmap_json(st.standardized, source_names(m.src()), target_names(m.tgt()));
      res["target_chart_change"] = jetmap_json(st.target_chart_change,
                                               target_names(m.tgt()),
                                               target_names(m.tgt()));
      res["source_chart_change"] = jetmap_json(st.source_chart_change,
                                               source_names(m.src()),
                                               source_names(m.src()));
      res["residual"] = st.residual;
    } else if (level->parsed()) {
      Morphism m = parse_morphism(read_file(file), order);
      Point b = parse_point(point_text);
      Point a = parse_point(value_text);
      LevelSetResult ls = level_set(m, a, b, order);
      res["fiber"] = {{"n", ls.fiber_n}, {"k", ls.fiber_k}};
      res["rank_triple"] = triple_json(ls.standardization.triple);
      std::vector<std::string> fiber_names;
      for (std::size_t i = 0; i < ls.fiber_n; ++i)
        fiber_names.push_back("u'" + std::to_string(i + 1));
      for (std::size_t j = 0; j < ls.fiber_k; ++j)
        fiber_names.push_back("z'" + std::to_string(j + 1));
      res["embedding"] = jetmap_json(ls.embedding, fiber_names, source_names(m.src()));
      json gens = json::array();
      for (const auto& g : ls.ideal_generators)
        gens.push_back(g.to_string(source_names(m.src())));
      res["ideal_generators"] = gens;
    } else if (slice->parsed()) {
      SliceSpec spec = parse_spec(spec_text);
      Fps f = parse_expression(expr_text, Shape{spec.n, spec.k}, order,
                               VarScheme{"x", "y"});
      res["pullback"] = slice_pullback(spec, f).to_string("u", "z");
    } else if (borel->parsed()) {
      SliceSpec spec = parse_spec(spec_text);
      Fps g = parse_expression(expr_text, Shape{spec.n_prime, spec.k_prime}, order,
                               VarScheme{"u", "z"});
      res["preimage"] = borel_preimage(spec, g, order).to_string("x", "y");
    }
  } catch (const calc_error& e) {
    report["errors"].push_back(
        {{"code", errc_name(e.code())}, {"message", e.what()}});
    std::cout << report.dump(2) << "\n";
    return errc_exit_code(e.code());
  } catch (const std::exception& e) {
    report["errors"].push_back({{"code", "internal"}, {"message", e.what()}});
    std::cout << report.dump(2) << "\n";
    return 5;
  }

  std::cout << report.dump(2) << "\n";
  return 0;
}
