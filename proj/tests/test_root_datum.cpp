#include <doctest.h>

#include "hwb/root_datum.hpp"

using namespace hwb;

TEST_SUITE_BEGIN("root_datum");

TEST_CASE("preset sizes") {
  auto g2 = RootDatum::preset("G2");
  CHECK(g2->rank() == 2);
  CHECK(g2->num_roots() == 12);
  CHECK(g2->weyl_order() == 12);
  CHECK(g2->negative_system().size() == 6);

  auto a2 = RootDatum::preset("A2");
  CHECK(a2->num_roots() == 6);
  CHECK(a2->weyl_order() == 6);

  auto a1 = RootDatum::preset("A1");
  CHECK(a1->num_roots() == 2);
  CHECK(a1->weyl_order() == 2);
}

TEST_CASE("G2 coxeter and lengths") {
  auto d = RootDatum::preset("G2");
  CHECK(d->coxeter_m(0, 1) == 6);
  int n_short = 0, n_long = 0;
  for (int i = 0; i < d->num_roots(); ++i)
    (d->length_class(i) == RootLength::Short ? n_short : n_long)++;
  CHECK(n_short == 6);
  CHECK(n_long == 6);
  // alpha is short, beta is long.
  CHECK(d->length_class(d->simple_indices()[0]) == RootLength::Short);
  CHECK(d->length_class(d->simple_indices()[1]) == RootLength::Long);
}

TEST_CASE("reflection fixes pairing") {
  auto d = RootDatum::preset("G2");
  for (int i = 0; i < d->num_roots(); ++i) {
    // s_gamma(gamma) = -gamma
    CHECK(d->reflect(i, d->root(i)) == d->root(d->opposite(i)));
    // involution
    for (int j = 0; j < d->num_roots(); ++j)
      CHECK(d->reflect(i, d->reflect(i, d->root(j))) == d->root(j));
  }
}

TEST_CASE("weyl group structure") {
  auto d = RootDatum::preset("G2");
  const int n = d->weyl_order();
  for (int w = 0; w < n; ++w) {
    CHECK(d->weyl_mul(w, d->weyl_inverse(w)) == d->weyl_identity());
    // the stored word multiplies out to w
    int acc = d->weyl_identity();
    for (int s : d->weyl(w).word) acc = d->weyl_mul(acc, d->simple_reflection(s));
    CHECK(acc == w);
    CHECK(d->weyl_length(w) == static_cast<int>(d->weyl(w).word.size()));
  }
  // action is a permutation of the roots
  for (int w = 0; w < n; ++w) {
    std::vector<char> seen(d->num_roots(), 0);
    for (int i = 0; i < d->num_roots(); ++i) seen[d->act_on_root(w, i)] = 1;
    for (char c : seen) CHECK(c == 1);
  }
}

TEST_CASE("longest element and length distribution") {
  auto d = RootDatum::preset("G2");
  int max_len = 0, count_max = 0;
  for (int w = 0; w < d->weyl_order(); ++w) {
    if (d->weyl_length(w) > max_len) {
      max_len = d->weyl_length(w);
      count_max = 0;
    }
    if (d->weyl_length(w) == max_len) ++count_max;
  }
  CHECK(max_len == 6);
  CHECK(count_max == 1);
}

TEST_CASE("coroot coordinates reproduce pairings") {
  for (const char* name : {"A1", "A2", "G2"}) {
    auto d = RootDatum::preset(name);
    for (int i = 0; i < d->num_roots(); ++i) {
      // <root_i, root_i^vee> = 2
      CHECK(d->pairing(d->root(i), i) == 2);
      // coroot_coords expresses root_i^vee in simple coroots
      const auto& cc = d->coroot_coords(i);
      for (int j = 0; j < d->num_roots(); ++j) {
        long long lhs = d->pairing(d->root(j), i);
        long long rhs = 0;
        for (int s = 0; s < d->num_simple(); ++s)
          rhs += static_cast<long long>(cc[s]) * d->pairing(d->root(j), d->simple_indices()[s]);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("fundamental weights pair correctly") {
  auto d = RootDatum::preset("G2");
  auto fw = d->fundamental_weights();
  REQUIRE(fw.size() == 2);
  for (int i = 0; i < 2; ++i) {
    REQUIRE(fw[i].has_value());
    for (int j = 0; j < 2; ++j)
      CHECK(d->pairing(*fw[i], d->simple_indices()[j]) == (i == j ? 1 : 0));
  }
}

TEST_SUITE_END();
