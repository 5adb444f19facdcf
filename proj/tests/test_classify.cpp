#include <doctest.h>

#include <numeric>

#include "hwb/classify.hpp"
#include "hwb/report.hpp"

using namespace hwb;

TEST_SUITE_BEGIN("classify");

namespace {
std::shared_ptr<const ChevalleyBasis> g2_cb() {
  static const auto cb =
      std::make_shared<const ChevalleyBasis>(ChevalleyBasis::build(RootDatum::preset("G2")));
  return cb;
}
} // namespace

TEST_CASE("example1 classification structure at k=1") {
  auto res = fixed_space_classify(g2_cb(), example1_character(), 1, false);
  CHECK(res.k == 1);
  CHECK(res.fixed_coords.size() == 4);
  CHECK(res.centralizer_roots.size() == 2);
  // every point is assigned to a class; class point totals partition the space
  long long total = 1;
  for (size_t i = 0; i < res.fixed_coords.size(); ++i) total *= 3;
  CHECK(static_cast<long long>(res.point_class.size()) == total);
  long long sum = 0;
  for (const auto& c : res.classes) sum += c.points;
  CHECK(sum == total);
  for (int ci : res.point_class) {
    CHECK(ci >= 0);
    CHECK(ci < static_cast<int>(res.classes.size()));
  }
  // zero is its own class with full stabilizer
  auto zero_id = res.encode_point(std::vector<int>(14, 0), 3);
  const auto& zc = res.classes[res.point_class[zero_id]];
  CHECK(zc.points == 1);
  CHECK(zc.sig.support.empty());
}

TEST_CASE("encode_point rejects points off the fixed space") {
  auto res = fixed_space_classify(g2_cb(), example1_character(), 1, false);
  std::vector<int> x(14, 0);
  x[G2Geometry::HS] = 1; // zero-weight line is not in this fixed space
  CHECK_THROWS(res.encode_point(x, 3));
}

TEST_CASE("classification refuses infinite characters") {
  CHECK_THROWS(fixed_space_classify(g2_cb(), example2_character(), 1, false));
}

TEST_CASE("signatures are orbit invariants") {
  auto cb = g2_cb();
  auto res = fixed_space_classify(cb, example1_character(), 1, false);
  G2Geometry geo(std::make_shared<GF>(1), cb);
  // For sampled points, the class signature stabilizer dim matches the
  // point's own stabilizer dim in the centralizer.
  for (const auto& c : res.classes) {
    auto sig = point_signature(geo, res.centralizer_roots, c.rep);
    CHECK(sig.sdim == c.sig.sdim);
  }
}

TEST_CASE("run_classify pipelines example2 to an Infinite verdict") {
  auto d = RootDatum::preset("G2");
  auto run = run_classify(d, g2_cb(), example2_character(), 1, std::nullopt, false);
  CHECK(run.verdict == Finiteness::Infinite);
  CHECK_FALSE(run.classes.has_value());
  CHECK(run.json["verdict"] == "Infinite");
}

TEST_SUITE_END();
