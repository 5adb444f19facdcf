#include "hwb/asph.hpp"

namespace hwb {

GroupAlgebraElement act_theta(const HeckeContext& ctx, const Weight& lambda,
                              const GroupAlgebraElement& m) {
  return m * GroupAlgebraElement::monomial(
                 lambda, std::vector<int>(ctx.params.num_params(), 0), Rat(1));
}

GroupAlgebraElement act_dprime(const HeckeContext& ctx, int simple_pos,
                               const GroupAlgebraElement& m) {
  return demazure(*ctx.datum, simple_pos, m);
}

GroupAlgebraElement act_K(const HeckeContext& ctx, int simple_pos,
                          const GroupAlgebraElement& m) {
  const RootDatum& d = *ctx.datum;
  const Weight& alpha = d.root(d.simple_indices().at(simple_pos));
  const GroupAlgebraElement qea =
      ctx.q_of_simple(simple_pos) *
      GroupAlgebraElement::monomial(alpha, std::vector<int>(ctx.params.num_params(), 0),
                                    Rat(1));
  const GroupAlgebraElement one =
      GroupAlgebraElement::constant(d.rank(), ctx.params.num_params(), Rat(1));
  return (one - qea) * act_dprime(ctx, simple_pos, m);
}

GroupAlgebraElement act_T(const HeckeContext& ctx, int simple_pos,
                          const GroupAlgebraElement& m) {
  // T_{s_alpha} · m = -(1 - q e^alpha) D'(m) - q e^alpha m, i.e.
  // act_T = -(act_K + q e^alpha ·).
  const RootDatum& d = *ctx.datum;
  const Weight& alpha = d.root(d.simple_indices().at(simple_pos));
  const GroupAlgebraElement qea =
      ctx.q_of_simple(simple_pos) *
      GroupAlgebraElement::monomial(alpha, std::vector<int>(ctx.params.num_params(), 0),
                                    Rat(1));
  return -(act_K(ctx, simple_pos, m) + qea * m);
}

GroupAlgebraElement act_hecke(const HeckeElement& h, const GroupAlgebraElement& m) {
  const HeckeContext& ctx = *h.context();
  GroupAlgebraElement out;
  for (const auto& [w, f] : h.coords()) {
    GroupAlgebraElement cur = f * m;
    const auto& word = ctx.datum->weyl(w).word;
    for (auto it = word.rbegin(); it != word.rend(); ++it) cur = act_T(ctx, *it, cur);
    out = out + cur;
  }
  return out;
}

GroupAlgebraElement random_monomial(const HeckeContext& ctx, std::mt19937_64& rng, int box) {
  std::uniform_int_distribution<int> coord(-box, box);
  std::uniform_int_distribution<int> coeff(1, 5);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<int> wt(ctx.datum->rank());
  for (auto& v : wt) v = coord(rng);
  Rat c(coeff(rng));
  if (sign(rng)) c = -c;
  return GroupAlgebraElement::monomial(wt, std::vector<int>(ctx.params.num_params(), 0), c);
}

GroupAlgebraElement random_element(const HeckeContext& ctx, std::mt19937_64& rng, int box,
                                   int nterms) {
  GroupAlgebraElement out;
  for (int i = 0; i < nterms; ++i) out = out + random_monomial(ctx, rng, box);
  return out;
}

HeckeElement random_hecke(const std::shared_ptr<const HeckeContext>& ctx,
                          std::mt19937_64& rng, int box, int nterms) {
  std::uniform_int_distribution<int> wdist(0, ctx->datum->weyl_order() - 1);
  HeckeElement h(ctx);
  for (int i = 0; i < nterms; ++i) h.add_term(wdist(rng), random_monomial(*ctx, rng, box));
  return h;
}

namespace {

void record(RelationReport& rep, const HeckeContext& ctx, const GroupAlgebraElement& input,
            const GroupAlgebraElement& lhs, const GroupAlgebraElement& rhs) {
  ++rep.trials;
  if (!(lhs == rhs)) {
    const auto& bn = ctx.datum->basis_names();
    const auto& qn = ctx.params.names();
    rep.failures.push_back(
        {rep.relation, input.render(bn, qn), lhs.render(bn, qn), rhs.render(bn, qn)});
  }
}

} // namespace

RealizationReport verify_realization(const std::shared_ptr<const HeckeContext>& ctx,
                                     int trials, int box, unsigned long long seed) {
  const RootDatum& d = *ctx->datum;
  const int ns = d.num_simple();
  const int np = ctx->params.num_params();
  std::mt19937_64 rng(seed);
  RealizationReport report;
  report.seed = seed;
  std::uniform_int_distribution<int> coord(-box, box);

  const GroupAlgebraElement one = GroupAlgebraElement::constant(d.rank(), np, Rat(1));

  for (int i = 0; i < ns; ++i) {
    RelationReport quad{"quadratic[s" + std::to_string(i) + "]", 0, {}};
    RelationReport bern{"bernstein[s" + std::to_string(i) + "]", 0, {}};
    RelationReport kid{"K-identity[s" + std::to_string(i) + "]", 0, {}};
    const GroupAlgebraElement q = ctx->q_of_simple(i);
    const GroupAlgebraElement qm1 = q - one;
    const Weight& alpha = d.root(d.simple_indices().at(i));
    const GroupAlgebraElement ea =
        GroupAlgebraElement::monomial(alpha, std::vector<int>(np, 0), Rat(1));
    for (int t = 0; t < trials; ++t) {
      const GroupAlgebraElement m = random_monomial(*ctx, rng, box);
      // (i) T^2 = (q-1) T + q
      record(quad, *ctx, m, act_T(*ctx, i, act_T(*ctx, i, m)),
             qm1 * act_T(*ctx, i, m) + q * m);
      // (iv) theta(lambda) T - T theta(s lambda) = (q-1)(e^l - e^{sl})/(1-e^{-a})
      Weight lam(d.rank());
      for (auto& v : lam) v = coord(rng);
      const Weight slam = d.reflect(d.simple_indices().at(i), lam);
      const GroupAlgebraElement el =
          GroupAlgebraElement::monomial(lam, std::vector<int>(np, 0), Rat(1));
      const GroupAlgebraElement lhs =
          act_theta(*ctx, lam, act_T(*ctx, i, m)) - act_T(*ctx, i, act_theta(*ctx, slam, m));
      const GroupAlgebraElement rhs = qm1 * bernstein_diff(d, i, el) * m;
      record(bern, *ctx, m, lhs, rhs);
      // K = -(T + q e^alpha ·)
      record(kid, *ctx, m, act_K(*ctx, i, m), -(act_T(*ctx, i, m) + q * ea * m));
    }
    report.relations.push_back(std::move(quad));
    report.relations.push_back(std::move(bern));
    report.relations.push_back(std::move(kid));
  }

  // Braid relations as operator identities.
  for (int i = 0; i < ns; ++i)
    for (int j = i + 1; j < ns; ++j) {
      const int m_ord = d.coxeter_m(i, j);
      if (m_ord < 2) continue;
      RelationReport braid{"braid[s" + std::to_string(i) + ",s" + std::to_string(j) +
                               ";m=" + std::to_string(m_ord)
                               ,
                           0,
                           {}};
      for (int t = 0; t < trials; ++t) {
        GroupAlgebraElement m = random_monomial(*ctx, rng, box);
        GroupAlgebraElement a = m, b = m;
        // alternating words of length m, starting with s_i resp. s_j, applied
        // right-to-left so both sides act by the same group word order.
        for (int k = m_ord - 1; k >= 0; --k) {
          a = act_T(*ctx, (k % 2 == 0) ? i : j, a);
          b = act_T(*ctx, (k % 2 == 0) ? j : i, b);
        }
        record(braid, *ctx, m, a, b);
      }
      report.relations.push_back(std::move(braid));
    }

  return report;
}

} // namespace hwb
