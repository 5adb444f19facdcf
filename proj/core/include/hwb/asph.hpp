#pragma once
//
// The antispherical module realized as operators on A[X*]:
//   act_theta(lambda) : multiplication by e^lambda
//   act_T(alpha)      : the generator T_{s_alpha} acting on e^lambda ⊗ 1
//   act_K(alpha)      : the geometric generator (1 - q(alpha) e^alpha) D'_alpha
// with D'_alpha(e^lambda) = (e^lambda - e^{s_alpha(lambda)-alpha})/(1-e^{-alpha}).
// As operators, act_K = -(act_T + q(alpha) e^alpha ·).

#include <random>

#include "hwb/hecke.hpp"

namespace hwb {

GroupAlgebraElement act_theta(const HeckeContext& ctx, const Weight& lambda,
                              const GroupAlgebraElement& m);
GroupAlgebraElement act_T(const HeckeContext& ctx, int simple_pos,
                          const GroupAlgebraElement& m);
GroupAlgebraElement act_K(const HeckeContext& ctx, int simple_pos,
                          const GroupAlgebraElement& m);
// D'_alpha extended additively (same closed monomial sum as laurent::demazure).
GroupAlgebraElement act_dprime(const HeckeContext& ctx, int simple_pos,
                               const GroupAlgebraElement& m);
// Action of a full Hecke element sum_w T_w f_w.
GroupAlgebraElement act_hecke(const HeckeElement& h, const GroupAlgebraElement& m);

struct RelationFailure {
  std::string relation;
  std::string input;
  std::string lhs;
  std::string rhs;
};

struct RelationReport {
  std::string relation;
  int trials = 0;
  std::vector<RelationFailure> failures;
  bool ok() const { return failures.empty(); }
};

struct RealizationReport {
  std::vector<RelationReport> relations;
  unsigned long long seed = 0;
  bool all_ok() const {
    for (const auto& r : relations)
      if (!r.ok()) return false;
    return true;
  }
};

// Checks, on random monomial inputs drawn from the box [-box, box]^r, the
// quadratic, braid and Bernstein relations as operator identities among
// {act_theta, act_T}, plus the translation identity act_K = -(act_T + q e^alpha).
RealizationReport verify_realization(const std::shared_ptr<const HeckeContext>& ctx,
                                     int trials, int box, unsigned long long seed);

// Random element helpers shared with the test-suite.
GroupAlgebraElement random_monomial(const HeckeContext& ctx, std::mt19937_64& rng, int box);
GroupAlgebraElement random_element(const HeckeContext& ctx, std::mt19937_64& rng, int box,
                                   int nterms);
HeckeElement random_hecke(const std::shared_ptr<const HeckeContext>& ctx,
                          std::mt19937_64& rng, int box, int nterms);

} // namespace hwb
