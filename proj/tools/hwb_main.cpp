// hwb: batch front end for the Hecke/exotic-geometry workbench.
// Subcommands: relations | classify | count-simples | orbits | fibers | tables.
// All output is JSON (--pretty for indented); exit codes: 0 success/match,
// 2 verified mismatch, 1 usage or input error.

#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "hwb/report.hpp"

namespace {

using namespace hwb;

std::shared_ptr<const ChevalleyBasis> g2_chevalley() {
  static const auto cb = std::make_shared<const ChevalleyBasis>(
      ChevalleyBasis::build(RootDatum::preset("G2")));
  return cb;
}

int field_degree(int q) {
  switch (q) {
    case 3: return 1;
    case 9: return 2;
    case 27: return 3;
    case 81: return 4;
    default: throw CLI::ValidationError("--field must be one of 3, 9, 27, 81");
  }
}

CentralCharacter load_character(const std::string& spec, const RootDatum& d) {
  if (spec == "example1") return example1_character();
  if (spec == "example2") return example2_character();
  if (spec == "trivial" || spec == "a_e") return trivial_character();
  if (spec == "generic") return generic_character();
  std::ifstream in(spec);
  if (!in) throw std::runtime_error("cannot open character file: " + spec);
  nlohmann::json j;
  in >> j;
  return CentralCharacter::from_json(j, d.basis_names());
}

std::optional<std::vector<Rat>> generator_values(const CentralCharacter& a,
                                                 const std::vector<std::string>& sets) {
  if (sets.empty()) return std::nullopt;
  std::map<std::string, Rat> m;
  for (const auto& s : sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw std::runtime_error("--set expects name=value: " + s);
    m[s.substr(0, eq)] = Rat(s.substr(eq + 1));
  }
  std::vector<Rat> out;
  for (const auto& g : a.generators) {
    auto it = m.find(g);
    if (it == m.end())
      throw std::runtime_error("--set is missing a value for generator " + g);
    out.push_back(it->second);
  }
  return out;
}

void emit(const nlohmann::json& j, bool pretty) {
  std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine Hecke algebra / exotic nilpotent cone workbench"};
  app.require_subcommand(1);

  std::string type = "G2";
  std::string char_spec;
  std::vector<std::string> sets;
  int field = 9;
  int trials = 200;
  unsigned long long seed = 12345;
  bool pretty = false;
  bool stability = false;
  std::string rep = "v2ab+vb";

  auto add_common = [&](CLI::App* cmd, bool with_type) {
    if (with_type) cmd->add_option("--type", type, "Root datum preset (G2, A1, A2)");
    cmd->add_flag("--pretty", pretty, "Indented JSON output");
  };

  auto* c_rel = app.add_subcommand("relations", "Verify the defining relations in the antispherical model");
  add_common(c_rel, true);
  c_rel->add_option("--trials", trials, "Random inputs per relation");
  c_rel->add_option("--seed", seed, "RNG seed");

  auto* c_cls = app.add_subcommand("classify", "Classify the fixed space of a central character");
  add_common(c_cls, true);
  c_cls->add_option("--char", char_spec, "Character file or builtin name")->required();
  c_cls->add_option("--set", sets, "Generator values, e.g. q=2");
  c_cls->add_option("--field", field, "Field size 3^k for the classification");
  c_cls->add_flag("--stability", stability, "Also classify over the next field extension");

  auto* c_cnt = app.add_subcommand("count-simples", "Count simple modules of the specialized algebra");
  add_common(c_cnt, true);
  c_cnt->add_option("--char", char_spec, "Character file or builtin name")->required();
  c_cnt->add_option("--set", sets, "Generator values, e.g. q=2")->required();

  auto* c_orb = app.add_subcommand("orbits", "Exotic nilpotent orbit table with recomputed invariants");
  add_common(c_orb, false);
  c_orb->add_option("--field", field, "Field size 3^k");

  auto* c_fib = app.add_subcommand("fibers", "Springer fiber point count for a representative");
  add_common(c_fib, false);
  c_fib->add_option("--rep", rep, "Representative, e.g. v2ab+vb or 0");
  c_fib->add_option("--field", field, "Field size 3^k");

  auto* c_tab = app.add_subcommand("tables", "Dump the orbit table, stabilizer dims and fiber counts");
  add_common(c_tab, false);
  c_tab->add_option("--field", field, "Field size 3^k");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    nlohmann::json config{{"type", type}, {"set", sets}};

    if (c_rel->parsed()) {
      auto datum = RootDatum::preset(type);
      const ParameterFunction params = datum->num_simple() > 1
                                           ? ParameterFunction::by_length(*datum)
                                           : ParameterFunction::constant(*datum);
      auto ctx = make_context(datum, params);
      const RealizationReport rep_out = verify_realization(ctx, trials, 4, seed);
      nlohmann::json j = relations_to_json(rep_out);
      config["trials"] = trials;
      config["seed"] = seed;
      j["config"] = config;
      emit(j, pretty);
      return rep_out.all_ok() ? 0 : 2;
    }

    if (c_cls->parsed()) {
      auto datum = RootDatum::preset(type);
      const CentralCharacter a = load_character(char_spec, *datum);
      const auto gv = generator_values(a, sets);
      auto cb = type == "G2" ? g2_chevalley() : nullptr;
      ClassifyRun run = run_classify(datum, cb, a, field_degree(field), gv, stability);
      config["char"] = char_spec;
      config["field"] = field;
      run.json["config"] = config;
      emit(run.json, pretty);
      return (run.match && !*run.match) ? 2 : 0;
    }

    if (c_cnt->parsed()) {
      auto datum = RootDatum::preset(type);
      const CentralCharacter a = load_character(char_spec, *datum);
      const auto gv = generator_values(a, sets);
      if (!gv) throw std::runtime_error("count-simples requires --set");
      const auto st = a.specialize(*gv);
      if (!st) throw std::runtime_error("character does not specialize rationally");
      const auto& [s, t] = *st;
      const ParameterFunction params = t.size() == 1 ? ParameterFunction::constant(*datum)
                                                     : ParameterFunction::by_length(*datum);
      if (static_cast<int>(t.size()) != params.num_params())
        throw std::runtime_error("parameter count does not match the root datum");
      const SimpleCountResult res = count_simples(build_specialized(datum, params, s, t));
      nlohmann::json j = simple_count_to_json(res);
      config["char"] = char_spec;
      j["config"] = config;
      emit(j, pretty);
      return 0;
    }

    // Remaining subcommands are G2 characteristic-3 geometry.
    auto cb = g2_chevalley();
    auto geo = G2Geometry(std::make_shared<GF>(field_degree(field)), cb);
    config["field"] = field;

    if (c_fib->parsed()) {
      const auto x = geo.parse_rep(rep);
      nlohmann::json j;
      j["representative"] = geo.render(x);
      j["count"] = geo.fiber_point_count(x);
      j["cell_counts"] = geo.fiber_cell_counts(x);
      j["config"] = config;
      emit(j, pretty);
      return 0;
    }

    // orbits / tables: table with recomputed invariants.
    bool ok = true;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& rec : G2Geometry::orbit_table()) {
      const auto x = geo.parse_rep(rec.rep);
      nlohmann::json row;
      row["representative"] = rec.rep;
      row["stabilizer_dim"] = rec.stabilizer_dim;
      row["component_group_order"] = rec.component_group_order;
      const int sd = geo.stabilizer_dim(x);
      row["stabilizer_dim_recomputed"] = sd;
      ok = ok && (sd == rec.stabilizer_dim);
      if (c_tab->parsed()) {
        row["fiber_points"] = geo.fiber_point_count(x);
      }
      rows.push_back(std::move(row));
    }
    nlohmann::json j;
    j["orbits"] = std::move(rows);
    const auto bs = geo.b_stabilizer_solve(geo.parse_rep("v2ab+vb"));
    nlohmann::json bj;
    bj["unipotent_dim"] = bs.unipotent_dim;
    bj["torus_rank"] = bs.torus_rank;
    bj["t0_fixes"] = bs.t0_fixes;
    nlohmann::json factors = nlohmann::json::array();
    for (int g : bs.factor_roots) factors.push_back(root_name(geo.datum(), g));
    bj["factor_roots"] = std::move(factors);
    j["b_stabilizer_v2ab_vb"] = std::move(bj);
    j["config"] = config;
    j["table_match"] = ok;
    emit(j, pretty);
    return ok ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
