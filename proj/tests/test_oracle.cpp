#include <doctest.h>

#include <algorithm>

#include "fqg/engine.hpp"
#include "fqg/oracle.hpp"

using namespace fqg;

TEST_CASE("q_class_count") {
  CHECK(q_class_count(metacyclic_group(3, 2, 0, 2), 5) == 3);
  CHECK(q_class_count(d2_group(1), 3) == 5);
  CHECK(q_class_count(metacyclic_group(12, 1, 0, 1), 13) == 12);
  CHECK(q_class_count(metacyclic_group(5, 1, 0, 1), 2) == 2);
}

TEST_CASE("center_split") {
  GroupAlgebra trivial(FiniteGroup::from_cayley(1, {0}), make_field(3, 1));
  auto t = center_split(trivial);
  REQUIRE(t.size() == 1);
  CHECK(t[0] == trivial.one());

  GroupAlgebra F2C3(metacyclic_group(3, 1, 0, 1), make_field(2, 1));
  auto c = center_split(F2C3);
  REQUIRE(c.size() == 2);
  CHECK(c[0] == F2C3.indicator({1, 2}));
  CHECK(c[1] == F2C3.indicator({0, 1, 2}));

  GroupAlgebra F5S3(metacyclic_group(3, 2, 0, 2), make_field(5, 1));
  auto s = center_split(F5S3);
  CHECK(s.size() == 3);
  auto dec = decompose(F5S3);
  std::vector<AlgebraElement> ours;
  for (auto& comp : dec.components) ours.push_back(comp.idempotent);
  std::sort(ours.begin(), ours.end(), [](const auto& a, const auto& b) { return a.c < b.c; });
  CHECK(ours == s);
}

TEST_CASE("center_split over extension fields") {
  GroupAlgebra FG(metacyclic_group(5, 1, 0, 1), make_field(2, 2));
  auto blocks = center_split(FG);
  CHECK(blocks.size() == q_class_count(FG.group(), 4));
  for (const auto& e : blocks) {
    CHECK(is_idempotent(e));
    CHECK_FALSE(is_zero(e));
  }
  GroupAlgebra F3(metacyclic_group(16, 4, 0, 3), make_field(3, 1));
  CHECK(center_split(F3).size() == q_class_count(F3.group(), 3));
}
