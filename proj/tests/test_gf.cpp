#include <doctest.h>

#include "hwb/gf.hpp"

using namespace hwb;

TEST_SUITE_BEGIN("gf");

TEST_CASE("field axioms exhaustively") {
  for (int k = 1; k <= 3; ++k) {
    GF F(k);
    const int q = F.size();
    CHECK(q == (k == 1 ? 3 : k == 2 ? 9 : 27));
    for (int a = 0; a < q; ++a) {
      CHECK(F.add(a, 0) == a);
      CHECK(F.mul(a, 1) == a);
      CHECK(F.add(a, F.neg(a)) == 0);
      if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
      for (int b = 0; b < q; ++b) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        for (int c = 0; c < q; ++c) {
          CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
          CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("frobenius is additive") {
  for (int k = 1; k <= 4; ++k) {
    GF F(k);
    for (int a = 0; a < F.size(); ++a)
      for (int b = 0; b < F.size(); ++b)
        CHECK(F.pow(F.add(a, b), 3) == F.add(F.pow(a, 3), F.pow(b, 3)));
  }
}

TEST_CASE("primitive element has full order") {
  for (int k = 1; k <= 4; ++k) {
    GF F(k);
    const int g = F.primitive();
    int x = 1;
    int order = 0;
    do {
      x = F.mul(x, g);
      ++order;
    } while (x != 1);
    CHECK(order == F.size() - 1);
  }
}

TEST_CASE("prime subfield embeds compatibly") {
  GF F3(1);
  for (int k = 2; k <= 4; ++k) {
    GF F(k);
    for (int a = 0; a < 3; ++a) {
      CHECK(F.in_prime_field(a));
      for (int b = 0; b < 3; ++b) {
        CHECK(F.add(a, b) == F3.add(a, b));
        CHECK(F.mul(a, b) == F3.mul(a, b));
      }
    }
  }
}

TEST_SUITE_END();
