#include <doctest.h>

#include <algorithm>

#include "hwb/char_arith.hpp"
#include "hwb/report.hpp"

using namespace hwb;

TEST_SUITE_BEGIN("char_arith");

namespace {
std::vector<std::string> names(const RootDatum& d, const std::vector<int>& roots) {
  std::vector<std::string> out;
  for (int g : roots) out.push_back(root_name(d, g));
  std::sort(out.begin(), out.end());
  return out;
}
} // namespace

TEST_CASE("char value arithmetic") {
  CharValue a{Rat(2, 3), {1, 0}};
  CharValue b{Rat(2, 3), {0, 2}};
  auto c = a + b;
  CHECK(c.tors == Rat(1, 3));
  CHECK(c.free == std::vector<Int>{1, 2});
  CHECK(a.scaled(3).tors == Rat(0));
  CHECK(a.scaled(-1).tors == Rat(1, 3));
  CHECK(CharValue::one(2).is_one());
}

TEST_CASE("char json round trip") {
  auto d = RootDatum::preset("G2");
  for (auto a : {example1_character(), example2_character(), generic_character()}) {
    auto j = a.to_json(d->basis_names());
    auto back = CentralCharacter::from_json(j, d->basis_names());
    CHECK(back.generators == a.generators);
    CHECK(back.s_values == a.s_values);
    CHECK(back.t_values == a.t_values);
  }
}

TEST_CASE("fixed supports of the bundled characters") {
  auto d = RootDatum::preset("G2");
  const RootedRep V = RootedRep::by_length(*d);

  const FixedSupport f1 = fixed_support(*d, example1_character(), V);
  std::vector<int> roots1;
  for (auto [r, s] : f1.root_lines) roots1.push_back(r);
  CHECK(names(*d, roots1) ==
        std::vector<std::string>{"2alpha+beta", "3alpha+beta", "alpha+beta", "beta"});
  CHECK(f1.zero_lines.empty());

  const FixedSupport f2 = fixed_support(*d, example2_character(), V);
  std::vector<int> roots2;
  for (auto [r, s] : f2.root_lines) roots2.push_back(r);
  CHECK(names(*d, roots2) == std::vector<std::string>{"3alpha+beta", "alpha+beta", "beta"});
  CHECK(f2.zero_lines.empty());
}

TEST_CASE("centralizer root sets") {
  auto d = RootDatum::preset("G2");
  CHECK(names(*d, centralizer_roots(*d, example1_character())) ==
        std::vector<std::string>{"-alpha", "alpha"});
  CHECK(centralizer_roots(*d, example2_character()).empty());
  // trivial character: all roots vanish
  CHECK(centralizer_roots(*d, trivial_character()).size() == 12);
}

TEST_CASE("finiteness verdicts") {
  auto d = RootDatum::preset("G2");
  const RootedRep V = RootedRep::by_length(*d);
  CHECK(finiteness_verdict(*d, example1_character(), V) == Finiteness::Finite);
  CHECK(finiteness_verdict(*d, example2_character(), V) == Finiteness::Infinite);
  CHECK(finiteness_verdict(*d, trivial_character(), V) == Finiteness::Finite);
  CHECK(finiteness_verdict(*d, generic_character(), V) == Finiteness::Finite);
}

TEST_CASE("torsion and membership") {
  CHECK(torsion_free_param_group(example1_character()));
  CHECK_FALSE(torsion_free_param_group(example2_character()));
  CHECK(is_positive_real(example1_character()));
  CHECK_FALSE(is_positive_real(example2_character()));
  // q is in <t1, t2> = <q> for example1
  CHECK(in_param_group(example1_character(), CharValue{Rat(0), {1}}));
  CHECK_FALSE(in_param_group(example1_character(), CharValue{Rat(1, 2), {0}}));
}

TEST_CASE("rational specialization") {
  auto st = example1_character().specialize({Rat(2)});
  REQUIRE(st.has_value());
  CHECK(st->first == std::vector<Rat>{Rat(1), Rat(2)});
  CHECK(st->second == std::vector<Rat>{Rat(2), Rat(2)});
  // torsion obstructs specialization
  CHECK_FALSE(example2_character().specialize({Rat(2)}).has_value());
}

TEST_CASE("connected centralizer check") {
  auto d = RootDatum::preset("G2");
  CHECK(is_connected_centralizer(*d, example1_character()));
  CHECK(is_connected_centralizer(*d, trivial_character()));
}

TEST_SUITE_END();
