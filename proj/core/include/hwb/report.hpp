#pragma once
// JSON report assembly shared by the CLI and the test-suite, plus the bundled
// example central characters.

#include <optional>

#include <json.hpp>

#include "hwb/asph.hpp"
#include "hwb/classify.hpp"
#include "hwb/spec_algebra.hpp"

namespace hwb {

// Bundled characters over the G2 datum (free generator names in brackets):
//   example1: alpha(s)=1, beta(s)=q, t=(q,q)        [q]
//   example2: alpha(s)=zeta_3, beta(s)=q, t=(zeta_3 q, q)  [q]
//   trivial (a_e): s=(1,1), t=(q,q)                 [q]
//   generic: alpha(s)=u, beta(s)=v, t=(u,v)         [u,v]
CentralCharacter example1_character();
CentralCharacter example2_character();
CentralCharacter trivial_character();
CentralCharacter generic_character();

std::string rat_to_string(const Rat& r);
std::string root_name(const RootDatum& d, int idx);

nlohmann::json relations_to_json(const RealizationReport& r);
nlohmann::json simple_count_to_json(const SimpleCountResult& r);
nlohmann::json classify_result_to_json(const G2Geometry* geo, const ClassifyResult& r,
                                       const RootDatum& d);

struct ClassifyRun {
  Finiteness verdict = Finiteness::Unknown;
  std::optional<ClassifyResult> classes;
  std::optional<SimpleCountResult> simples;
  std::optional<bool> match;
  nlohmann::json json;
};

// Full classification pipeline: fixed support, centralizer subsystem,
// reduction pair, finiteness verdict; signature classes when Finite (G2 with
// a Chevalley basis supplied); simple-module count when the character
// specializes rationally; equality flag when both counts exist.
ClassifyRun run_classify(std::shared_ptr<const RootDatum> datum,
                         std::shared_ptr<const ChevalleyBasis> cb,
                         const CentralCharacter& a, int k,
                         const std::optional<std::vector<Rat>>& generator_values,
                         bool check_stability);

} // namespace hwb
