// Acceptance gate: run as `hwb_acceptance <n>` for criterion n in 1..10.
// Each criterion prints exactly one line "CRITERION n: PASS|FAIL - detail"
// and the process exits 0 on pass, 1 on fail.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hwb/classify.hpp"
#include "hwb/report.hpp"
#include "hwb/spec_algebra.hpp"

using namespace hwb;

namespace {

std::shared_ptr<const ChevalleyBasis> g2_cb() {
  static const auto cb =
      std::make_shared<const ChevalleyBasis>(ChevalleyBasis::build(RootDatum::preset("G2")));
  return cb;
}

std::shared_ptr<const HeckeContext> ctx_for(const char* name) {
  auto d = RootDatum::preset(name);
  return make_context(d, d->num_simple() > 1 ? ParameterFunction::by_length(*d)
                                             : ParameterFunction::constant(*d));
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

// 1. Quadratic, braid and Bernstein relations as operator identities in the
//    antispherical model for A1, A2, G2 on 200 random inputs each, plus
//    associativity of the algebra product on 100 random triples.
Outcome criterion1() {
  std::ostringstream os;
  bool ok = true;
  for (const char* name : {"A1", "A2", "G2"}) {
    auto ctx = ctx_for(name);
    auto rep = verify_realization(ctx, 200, 3, 101);
    bool all = rep.all_ok();
    ok = ok && all;
    os << name << (all ? " ok" : " FAILED") << "; ";
  }
  auto ctx = ctx_for("G2");
  std::mt19937_64 rng(103);
  int assoc_fail = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_hecke(ctx, rng, 1, 2);
    auto b = random_hecke(ctx, rng, 1, 2);
    auto c = random_hecke(ctx, rng, 1, 2);
    if (!((a * b) * c == a * (b * c))) ++assoc_fail;
  }
  ok = ok && assoc_fail == 0;
  os << "associativity failures " << assoc_fail << "/100";
  return {ok, os.str()};
}

// 2. act_K(alpha) = -(act_T(alpha) + q(alpha) e^alpha .) on 100 random inputs
//    per simple root of G2.
Outcome criterion2() {
  auto ctx = ctx_for("G2");
  const RootDatum& d = *ctx->datum;
  std::mt19937_64 rng(107);
  int failures = 0;
  for (int s = 0; s < d.num_simple(); ++s) {
    const int sr = d.simple_indices()[s];
    GroupAlgebraElement qe_alpha =
        ctx->q_of_simple(s) *
        GroupAlgebraElement::monomial(d.root(sr), std::vector<int>(ctx->params.num_params(), 0));
    for (int trial = 0; trial < 100; ++trial) {
      auto f = random_element(*ctx, rng, 3, 3);
      if (!(act_K(*ctx, s, f) == -(act_T(*ctx, s, f) + qe_alpha * f))) ++failures;
    }
  }
  std::ostringstream os;
  os << failures << " failures over 200 inputs";
  return {failures == 0, os.str()};
}

// 3. Quotient dimension equals |W| (2, 6, 12) for at least 3 rational
//    specializations per preset, including the totally non-reduced point s=1.
Outcome criterion3() {
  struct Case {
    const char* name;
    int expected;
  };
  std::ostringstream os;
  bool ok = true;
  for (auto [name, expected] : {Case{"A1", 2}, Case{"A2", 6}, Case{"G2", 12}}) {
    auto d = RootDatum::preset(name);
    std::vector<std::vector<Rat>> points;
    points.push_back(std::vector<Rat>(d->rank(), Rat(1))); // non-reduced point
    std::vector<Rat> p2, p3;
    for (int i = 0; i < d->rank(); ++i) {
      p2.push_back(Rat(i + 2));
      p3.push_back(Rat(1, i + 3));
    }
    points.push_back(p2);
    points.push_back(p3);
    os << name << ":";
    for (const auto& s : points) {
      QuotientRing R(d, s);
      os << " " << R.dim();
      ok = ok && R.dim() == expected;
    }
    os << " (want " << expected << "); ";
  }
  return {ok, os.str()};
}

int simple_count_for(const CentralCharacter& a, const std::vector<Rat>& gv) {
  auto st = a.specialize(gv);
  if (!st) return -1;
  const auto& [s, t] = *st;
  auto d = RootDatum::preset("G2");
  const ParameterFunction params = t.size() == 1 ? ParameterFunction::constant(*d)
                                                 : ParameterFunction::by_length(*d);
  return count_simples(build_specialized(d, params, s, t)).simple_count;
}

// 4. At alpha(s)=1, beta(s)=2, t=(2,2): 5 simple modules and 5 signature
//    classes (k=2, stable at k=3), distinguished by the five reference
//    representatives.
Outcome criterion4() {
  std::ostringstream os;
  const int simples = simple_count_for(example1_character(), {Rat(2)});
  os << "simples " << simples << "/5";
  auto cb = g2_cb();
  auto res = fixed_space_classify(cb, example1_character(), 2, true);
  os << ", classes " << res.classes.size() << "/5 at k=2, stable " << (res.stable ? "yes" : "no");
  bool ok = simples == 5 && res.classes.size() == 5 && res.stable;

  // The reference representatives must fall into five distinct classes.
  G2Geometry geo(std::make_shared<GF>(2), cb);
  std::set<int> hit;
  for (const char* r : {"0", "v3ab", "v2ab", "v2ab+v3ab", "vab+v3ab"})
    hit.insert(res.point_class[res.encode_point(geo.parse_rep(r), 9)]);
  os << ", reference reps hit " << hit.size() << "/5 classes";
  ok = ok && hit.size() == 5;
  return {ok, os.str()};
}

// 5. Trivial character with q1=q2=1: 6 simple modules = number of orbit-table
//    rows.
Outcome criterion5() {
  const int simples = simple_count_for(trivial_character(), {Rat(1)});
  const int orbits = static_cast<int>(G2Geometry::orbit_table().size());
  std::ostringstream os;
  os << "simples " << simples << ", orbit rows " << orbits;
  return {simples == 6 && orbits == 6, os.str()};
}

// 6. Generic positive-real character alpha(s)=2, beta(s)=3, t=(2,3): 4 simple
//    modules and 4 signature classes.
Outcome criterion6() {
  const int simples = simple_count_for(generic_character(), {Rat(2), Rat(3)});
  auto res = fixed_space_classify(g2_cb(), generic_character(), 2, false);
  std::ostringstream os;
  os << "simples " << simples << "/4, classes " << res.classes.size() << "/4";
  return {simples == 4 && res.classes.size() == 4, os.str()};
}

// 7. Example 2 (torsion in the parameter subgroup): verdict Infinite via the
//    torsion-free failure and the 2 < 3 dimension comparison.
Outcome criterion7() {
  auto d = RootDatum::preset("G2");
  const auto a = example2_character();
  const RootedRep V = RootedRep::by_length(*d);
  const bool tf = torsion_free_param_group(a);
  const int dim_group = d->rank() + static_cast<int>(centralizer_roots(*d, a).size());
  const int dim_fixed = fixed_support(*d, a, V).dim();
  const auto verdict = finiteness_verdict(*d, a, V);
  std::ostringstream os;
  os << "torsion-free " << (tf ? "true" : "false") << ", dim comparison " << dim_group << " < "
     << dim_fixed << ", verdict " << to_string(verdict);
  return {!tf && verdict == Finiteness::Infinite && dim_group == 2 && dim_fixed == 3, os.str()};
}

// 8. Orbit table over F9: stabilizer dims (14,8,8,6,4,2); Borel stabilizer of
//    the subregular representative has dimension 4 with the order-two torus
//    point fixing it.
Outcome criterion8() {
  G2Geometry geo(std::make_shared<GF>(2), g2_cb());
  std::vector<int> dims;
  for (const auto& rec : G2Geometry::orbit_table())
    dims.push_back(geo.stabilizer_dim(geo.parse_rep(rec.rep)));
  const std::vector<int> expect{14, 8, 8, 6, 4, 2};
  G2Geometry geo3(std::make_shared<GF>(1), g2_cb());
  auto bs = geo3.b_stabilizer_solve(geo3.parse_rep("v2ab+vb"));
  std::ostringstream os;
  os << "dims";
  for (int v : dims) os << " " << v;
  os << " (want 14 8 8 6 4 2), b-stab dim " << bs.unipotent_dim + bs.torus_rank << "/4, t0 "
     << (bs.t0_fixes ? "fixes" : "does not fix");
  return {dims == expect && bs.unipotent_dim + bs.torus_rank == 4 && bs.t0_fixes, os.str()};
}

// 9. Fiber point counts 1456 / 7 / 1 over F3; counts over F3 and F9 fit
//    polynomials in q with nonnegative coefficients.
Outcome criterion9() {
  auto cb = g2_cb();
  G2Geometry g3(std::make_shared<GF>(1), cb);
  G2Geometry g9(std::make_shared<GF>(2), cb);
  std::ostringstream os;
  bool ok = true;
  const std::vector<std::pair<const char*, long long>> want{
      {"0", 1456}, {"v2ab+vb", 7}, {"va+vb", 1}};
  for (auto [rep, expect] : want) {
    const long long n = g3.fiber_point_count(g3.parse_rep(rep));
    os << rep << " " << n << "/" << expect << "; ";
    ok = ok && n == expect;
  }
  bool fits_all = true;
  for (const auto& rec : G2Geometry::orbit_table()) {
    const long long a3 = g3.fiber_point_count(g3.parse_rep(rec.rep));
    const long long a9 = g9.fiber_point_count(g9.parse_rep(rec.rep));
    fits_all = fits_all && fits_nonneg_polynomial(a3, a9, 6);
  }
  os << "nonneg polynomial fit " << (fits_all ? "yes" : "no");
  return {ok && fits_all, os.str()};
}

// 10. Fixed supports and centralizer root sets of the two reference
//     characters.
Outcome criterion10() {
  auto d = RootDatum::preset("G2");
  const RootedRep V = RootedRep::by_length(*d);
  auto support_names = [&](const CentralCharacter& a) {
    std::vector<std::string> out;
    const auto fs = fixed_support(*d, a, V);
    for (auto [r, s] : fs.root_lines) out.push_back(root_name(*d, r));
    for (int s : fs.zero_lines) out.push_back(s == 0 ? "hs" : "hl");
    std::sort(out.begin(), out.end());
    return out;
  };
  auto cent_names = [&](const CentralCharacter& a) {
    std::vector<std::string> out;
    for (int g : centralizer_roots(*d, a)) out.push_back(root_name(*d, g));
    std::sort(out.begin(), out.end());
    return out;
  };
  const auto s1 = support_names(example1_character());
  const auto s2 = support_names(example2_character());
  const auto c1 = cent_names(example1_character());
  const auto c2 = cent_names(example2_character());
  const std::vector<std::string> want1{"2alpha+beta", "3alpha+beta", "alpha+beta", "beta"};
  const std::vector<std::string> want2{"3alpha+beta", "alpha+beta", "beta"};
  const std::vector<std::string> wantc1{"-alpha", "alpha"};
  std::ostringstream os;
  auto join = [](const std::vector<std::string>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
    return s + "}";
  };
  os << "supports " << join(s1) << " " << join(s2) << ", centralizers " << join(c1) << " "
     << join(c2);
  return {s1 == want1 && s2 == want2 && c1 == wantc1 && c2.empty(), os.str()};
}

} // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: hwb_acceptance <criterion 1..10>\n";
    return 2;
  }
  const int n = std::atoi(argv[1]);
  Outcome out;
  try {
    switch (n) {
      case 1: out = criterion1(); break;
      case 2: out = criterion2(); break;
      case 3: out = criterion3(); break;
      case 4: out = criterion4(); break;
      case 5: out = criterion5(); break;
      case 6: out = criterion6(); break;
      case 7: out = criterion7(); break;
      case 8: out = criterion8(); break;
      case 9: out = criterion9(); break;
      case 10: out = criterion10(); break;
      default: std::cerr << "usage: hwb_acceptance <criterion 1..10>\n"; return 2;
    }
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  std::cout << "CRITERION " << n << ": " << (out.pass ? "PASS" : "FAIL") << " - " << out.detail
            << "\n";
  return out.pass ? 0 : 1;
}
