#include "hwb/report.hpp"

#include <sstream>

namespace hwb {

namespace {

CharValue cv(Rat tors, std::vector<Int> free) { return CharValue{std::move(tors), std::move(free)}; }

} // namespace

CentralCharacter example1_character() {
  CentralCharacter a;
  a.generators = {"q"};
  a.s_values = {cv(Rat(0), {0}), cv(Rat(0), {1})};       // alpha(s)=1, beta(s)=q
  a.t_values = {cv(Rat(0), {1}), cv(Rat(0), {1})};       // t1 = t2 = q
  return a;
}

CentralCharacter example2_character() {
  CentralCharacter a;
  a.generators = {"q"};
  a.s_values = {cv(Rat(1, 3), {0}), cv(Rat(0), {1})};    // alpha(s)=zeta_3, beta(s)=q
  a.t_values = {cv(Rat(1, 3), {1}), cv(Rat(0), {1})};    // t = (zeta_3 q, q)
  return a;
}

CentralCharacter trivial_character() {
  CentralCharacter a;
  a.generators = {"q"};
  a.s_values = {cv(Rat(0), {0}), cv(Rat(0), {0})};       // s = (1, 1)
  a.t_values = {cv(Rat(0), {1}), cv(Rat(0), {1})};       // t1 = t2 = q
  return a;
}

CentralCharacter generic_character() {
  CentralCharacter a;
  a.generators = {"u", "v"};
  a.s_values = {cv(Rat(0), {1, 0}), cv(Rat(0), {0, 1})}; // alpha(s)=u, beta(s)=v
  a.t_values = {cv(Rat(0), {1, 0}), cv(Rat(0), {0, 1})}; // t = (u, v)
  return a;
}

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string root_name(const RootDatum& d, int idx) {
  const Weight& w = d.root(idx);
  std::string out;
  for (int c = 0; c < d.rank(); ++c) {
    if (w[c] == 0) continue;
    std::string term;
    if (w[c] == -1)
      term = "-";
    else if (w[c] != 1)
      term = std::to_string(w[c]);
    term += d.basis_names()[c];
    if (!out.empty() && w[c] > 0) out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

nlohmann::json relations_to_json(const RealizationReport& r) {
  nlohmann::json j;
  j["seed"] = r.seed;
  j["all_ok"] = r.all_ok();
  nlohmann::json rels = nlohmann::json::array();
  for (const auto& rel : r.relations) {
    nlohmann::json e;
    e["relation"] = rel.relation;
    e["trials"] = rel.trials;
    e["failures"] = nlohmann::json::array();
    for (const auto& f : rel.failures)
      e["failures"].push_back({{"input", f.input}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    rels.push_back(std::move(e));
  }
  j["relations"] = std::move(rels);
  return j;
}

nlohmann::json simple_count_to_json(const SimpleCountResult& r) {
  return {{"dim", r.dim}, {"radical_dim", r.radical_dim}, {"simple_count", r.simple_count}};
}

nlohmann::json classify_result_to_json(const G2Geometry* geo, const ClassifyResult& r,
                                       const RootDatum& d) {
  nlohmann::json j;
  j["field_degree"] = r.k;
  nlohmann::json coords = nlohmann::json::array();
  for (int c : r.fixed_coords)
    coords.push_back(c < 12 ? root_name(d, c) : (c == 12 ? "hs" : "hl"));
  j["fixed_space"] = std::move(coords);
  nlohmann::json cr = nlohmann::json::array();
  for (int g : r.centralizer_roots) cr.push_back(root_name(d, g));
  j["centralizer_roots"] = std::move(cr);
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : r.classes) {
    nlohmann::json e;
    e["representative"] = c.rep_render;
    e["stabilizer_dim_in_centralizer"] = c.sig.sdim;
    nlohmann::json supp = nlohmann::json::array();
    for (int s : c.sig.support)
      supp.push_back(s < 12 ? root_name(d, s) : (s == 12 ? "hs" : "hl"));
    e["support_pattern"] = std::move(supp);
    if (c.sig.fiber >= 0) e["fiber_points"] = c.sig.fiber;
    e["points"] = c.points;
    e["orbit_count"] = c.orbit_count;
    classes.push_back(std::move(e));
  }
  j["classes"] = std::move(classes);
  j["class_count"] = r.classes.size();
  if (r.stability_checked) j["stable"] = r.stable;
  (void)geo;
  return j;
}

ClassifyRun run_classify(std::shared_ptr<const RootDatum> datum,
                         std::shared_ptr<const ChevalleyBasis> cb,
                         const CentralCharacter& a, int k,
                         const std::optional<std::vector<Rat>>& generator_values,
                         bool check_stability) {
  const RootDatum& d = *datum;
  const RootedRep V = RootedRep::by_length(d);
  ClassifyRun run;
  nlohmann::json& j = run.json;

  j["character"] = a.to_json(d.basis_names());

  const FixedSupport fs = fixed_support(d, a, V);
  nlohmann::json fsj = nlohmann::json::array();
  for (const auto& [root_idx, summand] : fs.root_lines) fsj.push_back(root_name(d, root_idx));
  for (int s : fs.zero_lines) fsj.push_back(s == 0 ? "hs" : "hl");
  j["fixed_support"] = std::move(fsj);

  nlohmann::json crj = nlohmann::json::array();
  for (int g : centralizer_roots(d, a)) crj.push_back(root_name(d, g));
  j["centralizer_roots"] = std::move(crj);

  const ReductionPair rp = reduction_pair(d, a, V);
  nlohmann::json rpj;
  nlohmann::json qa = nlohmann::json::array();
  for (int g : rp.qa_roots) qa.push_back(root_name(d, g));
  rpj["qa_roots"] = std::move(qa);
  nlohmann::json fr = nlohmann::json::array();
  for (const auto& [root_idx, summand] : rp.fixed_rep) fr.push_back(root_name(d, root_idx));
  rpj["fixed_rep"] = std::move(fr);
  j["reduction_pair"] = std::move(rpj);

  run.verdict = finiteness_verdict(d, a, V);
  j["verdict"] = to_string(run.verdict);

  if (run.verdict == Finiteness::Finite && cb && cb->datum.get() == datum.get()) {
    run.classes = fixed_space_classify(cb, a, k, check_stability);
    j["classification"] = classify_result_to_json(nullptr, *run.classes, d);
  }

  if (generator_values) {
    auto st = a.specialize(*generator_values);
    if (st) {
      const auto& [s, t] = *st;
      const ParameterFunction params = t.size() == 1
                                           ? ParameterFunction::constant(d)
                                           : ParameterFunction::by_length(d);
      if (static_cast<int>(t.size()) == params.num_params()) {
        const FiniteDimAlgebra A = build_specialized(datum, params, s, t);
        run.simples = count_simples(A);
        j["simple_modules"] = simple_count_to_json(*run.simples);
      }
    }
  }

  if (run.classes && run.simples) {
    run.match = (static_cast<int>(run.classes->classes.size()) == run.simples->simple_count);
    j["match"] = *run.match;
  }
  return run;
}

} // namespace hwb
