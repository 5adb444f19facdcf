#include "hwb/hecke.hpp"

#include <sstream>

namespace hwb {

GroupAlgebraElement HeckeContext::q_of_simple(int simple_pos) const {
  const int r = datum->rank();
  const int np = params.num_params();
  const int pi = params.param_of_simple(*datum, simple_pos);
  if (q_values) {
    return GroupAlgebraElement::constant(r, np, q_values->at(pi));
  }
  std::vector<int> qe(np, 0);
  qe[pi] = 1;
  return GroupAlgebraElement::monomial(std::vector<int>(r, 0), qe, Rat(1));
}

bool HeckeContext::compatible(const HeckeContext& o) const {
  return datum.get() == o.datum.get() && params.num_params() == o.params.num_params() &&
         q_values == o.q_values;
}

std::shared_ptr<const HeckeContext> make_context(std::shared_ptr<const RootDatum> datum,
                                                 ParameterFunction params) {
  auto ctx = std::make_shared<HeckeContext>();
  ctx->datum = std::move(datum);
  ctx->params = std::move(params);
  return ctx;
}

HeckeElement HeckeElement::zero(std::shared_ptr<const HeckeContext> ctx) {
  return HeckeElement(std::move(ctx));
}

HeckeElement HeckeElement::unit(std::shared_ptr<const HeckeContext> ctx) {
  return T(std::move(ctx), 0);
}

HeckeElement HeckeElement::T(std::shared_ptr<const HeckeContext> ctx, int w) {
  HeckeElement h(ctx);
  h.add_term(w, GroupAlgebraElement::constant(ctx->datum->rank(),
                                              ctx->params.num_params(), Rat(1)));
  return h;
}

HeckeElement HeckeElement::theta(std::shared_ptr<const HeckeContext> ctx,
                                 const GroupAlgebraElement& f) {
  HeckeElement h(ctx);
  h.add_term(ctx->datum->weyl_identity(), f);
  return h;
}

void HeckeElement::add_term(int w, const GroupAlgebraElement& f) {
  if (f.is_zero()) return;
  auto [it, inserted] = coords_.emplace(w, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) coords_.erase(it);
  }
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
  if (!ctx_->compatible(*o.ctx_)) throw std::runtime_error("Hecke context mismatch");
  HeckeElement out = *this;
  for (const auto& [w, f] : o.coords_) out.add_term(w, f);
  return out;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const {
  if (!ctx_->compatible(*o.ctx_)) throw std::runtime_error("Hecke context mismatch");
  HeckeElement out = *this;
  for (const auto& [w, f] : o.coords_) out.add_term(w, -f);
  return out;
}

HeckeElement HeckeElement::mul_right_coeff(const GroupAlgebraElement& f) const {
  HeckeElement out(ctx_);
  for (const auto& [w, g] : coords_) out.add_term(w, g * f);
  return out;
}

// (sum_w T_w f_w) T_s: first move f past T_s with the Bernstein rule
//   f T_s = T_s (s·f) + (q-1) G_s(f),  G_s(f) = (f - s·f)/(1 - e^{-alpha}),
// then reduce T_w T_s with the quadratic/word rules.
HeckeElement HeckeElement::mul_right_Ts(int simple_pos) const {
  const RootDatum& d = *ctx_->datum;
  const int s = d.simple_reflection(simple_pos);
  const int sroot = d.simple_indices().at(simple_pos);
  const GroupAlgebraElement q = ctx_->q_of_simple(simple_pos);
  const GroupAlgebraElement qm1 =
      q - GroupAlgebraElement::constant(d.rank(), ctx_->params.num_params(), Rat(1));

  HeckeElement out(ctx_);
  for (const auto& [w, f] : coords_) {
    const GroupAlgebraElement sf = f.reflect(d, sroot);
    const GroupAlgebraElement g = bernstein_diff(d, simple_pos, f);
    const int ws = d.weyl_mul(w, s);
    if (d.weyl_length(ws) > d.weyl_length(w)) {
      out.add_term(ws, sf);
    } else {
      // T_w T_s = (q-1) T_w + q T_{ws}
      out.add_term(w, qm1 * sf);
      out.add_term(ws, q * sf);
    }
    out.add_term(w, qm1 * g);
  }
  return out;
}

HeckeElement HeckeElement::operator*(const HeckeElement& o) const {
  if (!ctx_->compatible(*o.ctx_)) throw std::runtime_error("Hecke context mismatch");
  const RootDatum& d = *ctx_->datum;
  HeckeElement out(ctx_);
  for (const auto& [w2, f2] : o.coords_) {
    HeckeElement cur = *this;
    for (int letter : d.weyl(w2).word) cur = cur.mul_right_Ts(letter);
    cur = cur.mul_right_coeff(f2);
    for (const auto& [w, f] : cur.coords_) out.add_term(w, f);
  }
  return out;
}

HeckeElement HeckeElement::specialize_params(const std::vector<Rat>& values) const {
  if (static_cast<int>(values.size()) != ctx_->params.num_params())
    throw std::runtime_error("wrong number of parameter values");
  auto nctx = std::make_shared<HeckeContext>(*ctx_);
  nctx->q_values = values;
  HeckeElement out(nctx);
  for (const auto& [w, f] : coords_) out.add_term(w, f.specialize_q(values));
  return out;
}

std::map<int, GroupAlgebraElement> HeckeElement::to_left_coords() const {
  // Express sum_w T_w f_w as sum_w g_w T_w by moving coefficients leftwards:
  //   T_s e^lambda = e^{s lambda} T_s + (q-1) G_s(e^lambda).
  const RootDatum& d = *ctx_->datum;
  // left_mul_Ts on a left-form map: T_s (sum g_v T_v).
  auto left_mul_Ts = [&](const std::map<int, GroupAlgebraElement>& h, int simple_pos) {
    const int s = d.simple_reflection(simple_pos);
    const int sroot = d.simple_indices().at(simple_pos);
    const GroupAlgebraElement q = ctx_->q_of_simple(simple_pos);
    const GroupAlgebraElement qm1 =
        q - GroupAlgebraElement::constant(d.rank(), ctx_->params.num_params(), Rat(1));
    std::map<int, GroupAlgebraElement> out;
    auto add = [&](int v, const GroupAlgebraElement& f) {
      if (f.is_zero()) return;
      auto [it, ins] = out.emplace(v, f);
      if (!ins) {
        it->second = it->second + f;
        if (it->second.is_zero()) out.erase(it);
      }
    };
    for (const auto& [v, g] : h) {
      const GroupAlgebraElement sg = g.reflect(d, sroot);
      const GroupAlgebraElement diff = bernstein_diff(d, simple_pos, g);
      const int sv = d.weyl_mul(s, v);
      // T_s g = sg T_s + (q-1) diff, then T_s T_v reduction on the left.
      if (d.weyl_length(sv) > d.weyl_length(v)) {
        add(sv, sg);
      } else {
        add(v, sg * qm1);
        add(sv, sg * q);
      }
      add(v, diff * qm1);
    }
    return out;
  };

  std::map<int, GroupAlgebraElement> acc;
  for (const auto& [w, f] : coords_) {
    std::map<int, GroupAlgebraElement> cur{{d.weyl_identity(), f}};
    const auto& word = d.weyl(w).word;
    for (auto it = word.rbegin(); it != word.rend(); ++it) cur = left_mul_Ts(cur, *it);
    for (const auto& [v, g] : cur) {
      auto [jt, ins] = acc.emplace(v, g);
      if (!ins) {
        jt->second = jt->second + g;
        if (jt->second.is_zero()) acc.erase(jt);
      }
    }
  }
  return acc;
}

std::string HeckeElement::render() const {
  if (coords_.empty()) return "0";
  const RootDatum& d = *ctx_->datum;
  // Length-then-lex order of w.
  std::vector<int> ws;
  for (const auto& [w, f] : coords_) ws.push_back(w);
  std::sort(ws.begin(), ws.end(), [&](int a, int b) {
    if (d.weyl_length(a) != d.weyl_length(b)) return d.weyl_length(a) < d.weyl_length(b);
    return d.weyl(a).word < d.weyl(b).word;
  });
  std::ostringstream os;
  bool first = true;
  for (int w : ws) {
    if (!first) os << "  +  ";
    first = false;
    os << "T[";
    const auto& word = d.weyl(w).word;
    for (size_t i = 0; i < word.size(); ++i) {
      if (i) os << ".";
      os << word[i];
    }
    os << "] * (" << coords_.at(w).render(d.basis_names(), ctx_->params.names()) << ")";
  }
  return os.str();
}

HeckeElement center_orbit_sum(std::shared_ptr<const HeckeContext> ctx, const Weight& lambda) {
  HeckeElement h(ctx);
  GroupAlgebraElement f;
  for (const auto& mu : ctx->datum->weyl_orbit(lambda))
    f.add_term(Mono{ExpoVec(mu.begin(), mu.end()),
                    ExpoVec(ctx->params.num_params(), 0)},
               Rat(1));
  h.add_term(ctx->datum->weyl_identity(), f);
  return h;
}

} // namespace hwb
