#include <doctest.h>

#include <random>

#include "hwb/asph.hpp"
#include "hwb/laurent.hpp"

using namespace hwb;

TEST_SUITE_BEGIN("asph");

namespace {
std::shared_ptr<const HeckeContext> ctx_for(const char* name) {
  auto d = RootDatum::preset(name);
  return make_context(d, d->num_simple() > 1 ? ParameterFunction::by_length(*d)
                                             : ParameterFunction::constant(*d));
}
} // namespace

TEST_CASE("dprime coincides with demazure") {
  auto ctx = ctx_for("G2");
  const RootDatum& d = *ctx->datum;
  std::mt19937_64 rng(37);
  for (int s = 0; s < d.num_simple(); ++s)
    for (int trial = 0; trial < 20; ++trial) {
      auto f = random_element(*ctx, rng, 4, 3);
      CHECK(act_dprime(*ctx, s, f) == demazure(d, s, f));
    }
}

TEST_CASE("K operator identity") {
  // act_K = -(act_T + q(alpha) e^alpha .)
  for (const char* name : {"A1", "A2", "G2"}) {
    auto ctx = ctx_for(name);
    const RootDatum& d = *ctx->datum;
    std::mt19937_64 rng(41);
    for (int s = 0; s < d.num_simple(); ++s) {
      const int sr = d.simple_indices()[s];
      GroupAlgebraElement qe_alpha =
          ctx->q_of_simple(s) * GroupAlgebraElement::monomial(d.root(sr), std::vector<int>(ctx->params.num_params(), 0));
      for (int trial = 0; trial < 10; ++trial) {
        auto f = random_element(*ctx, rng, 3, 3);
        CHECK(act_K(*ctx, s, f) == -(act_T(*ctx, s, f) + qe_alpha * f));
      }
    }
  }
}

TEST_CASE("module relations hold for all presets") {
  for (const char* name : {"A1", "A2", "G2"}) {
    auto ctx = ctx_for(name);
    auto rep = verify_realization(ctx, 25, 3, 43);
    INFO(name);
    CHECK(rep.all_ok());
  }
}

TEST_CASE("act_hecke is a module action") {
  auto ctx = ctx_for("G2");
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 5; ++trial) {
    auto a = random_hecke(ctx, rng, 2, 2);
    auto b = random_hecke(ctx, rng, 2, 2);
    auto m = random_element(*ctx, rng, 2, 2);
    CHECK(act_hecke(a * b, m) == act_hecke(a, act_hecke(b, m)));
  }
}

TEST_CASE("operators preserve integrality") {
  auto ctx = ctx_for("G2");
  const RootDatum& d = *ctx->datum;
  std::mt19937_64 rng(53);
  for (int s = 0; s < d.num_simple(); ++s)
    for (int trial = 0; trial < 10; ++trial) {
      auto f = random_monomial(*ctx, rng, 4);
      CHECK(act_T(*ctx, s, f).is_integral());
      CHECK(act_K(*ctx, s, f).is_integral());
    }
}

TEST_SUITE_END();
