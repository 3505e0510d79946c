#include <doctest.h>

#include <random>

#include "fqg/error.hpp"
#include "fqg/group_algebra.hpp"

using namespace fqg;

namespace {

AlgebraElement random_element(const GroupAlgebra& FG, std::mt19937& rng) {
  std::uniform_int_distribution<Coeff> pick(0, static_cast<Coeff>(FG.field().size() - 1));
  auto x = FG.zero();
  for (auto& c : x.c) c = pick(rng);
  return x;
}

}  // namespace

TEST_CASE("ring identities") {
  GroupAlgebra FG(metacyclic_group(2, 1, 0, 1), make_field(3, 1));
  const auto a = FG.basis(1);
  const auto one = FG.one();
  CHECK(ga_mul(a, one) == a);
  const auto lhs = ga_mul(ga_add(one, a), ga_sub(one, a));
  CHECK(is_zero(lhs));
}

TEST_CASE("C3 over F_2") {
  GroupAlgebra FG(metacyclic_group(3, 1, 0, 1), make_field(2, 1));
  const auto eps = FG.indicator({1, 2});
  const auto eps2 = FG.indicator({0, 1, 2});
  CHECK(is_idempotent(eps));
  CHECK(is_idempotent(eps2));
  CHECK(is_idempotent(FG.zero()));
  CHECK(is_idempotent(FG.one()));
  CHECK(is_central(FG.zero()));
  CHECK(are_orthogonal(eps, eps2));
  CHECK(ga_add(eps, eps2) == FG.one());
  CHECK(format(eps) == "(1)*a + (1)*a^2");
  CHECK(format(FG.zero()) == "0");
}

TEST_CASE("mixed context") {
  GroupAlgebra A(metacyclic_group(3, 1, 0, 1), make_field(2, 1));
  GroupAlgebra B(metacyclic_group(3, 1, 0, 1), make_field(2, 1));
  CHECK_THROWS_AS(ga_mul(A.one(), B.one()), Error);
  CHECK_THROWS_AS(ga_add(A.one(), B.one()), Error);
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937 rng(5);
  for (auto [group, p, a] : {std::tuple{d1_group(2), 3u, 1u}, std::tuple{metacyclic_group(7, 3, 0, 2), 5u, 1u},
                             std::tuple{d2_group(2), 3u, 2u}}) {
    GroupAlgebra FG(group, make_field(p, a));
    for (int trial = 0; trial < 10; ++trial) {
      auto x = random_element(FG, rng), y = random_element(FG, rng), z = random_element(FG, rng);
      CHECK(ga_mul(x, y) == ga_mul_serial(x, y));
      CHECK(ga_mul(ga_mul(x, y), z) == ga_mul(x, ga_mul(y, z)));
      CHECK(ga_mul(x, ga_add(y, z)) == ga_add(ga_mul(x, y), ga_mul(x, z)));
      for (Element g = 0; g < FG.group().order(); g += 3) {
        CHECK(conjugate(ga_mul(x, y), g) == ga_mul(conjugate(x, g), conjugate(y, g)));
        CHECK(conjugate(conjugate(x, g), FG.group().inv(g)) == x);
      }
      CHECK(conjugate(x, 0) == x);
    }
  }
}

TEST_CASE("class sums span a subalgebra of the center") {
  std::mt19937 rng(9);
  GroupAlgebra FG(metacyclic_group(5, 4, 0, 2), make_field(3, 1));
  const auto& G = FG.group();
  const auto classes = conjugacy_classes(G);
  std::vector<std::size_t> class_of(G.order());
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (Element g : classes[i]) class_of[g] = i;
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = 0; j < classes.size(); ++j) {
      auto prod = ga_mul(FG.indicator(classes[i]), FG.indicator(classes[j]));
      CHECK(is_central(prod));
      // constant on classes
      for (Element g = 0; g < G.order(); ++g) CHECK(prod.c[g] == prod.c[classes[class_of[g]].front()]);
    }
  // e x e = e x for a central idempotent: use the averaging idempotent of G
  const Coeff inv = FG.field().inv(FG.field().from_int(static_cast<std::int64_t>(G.order())));
  std::vector<Element> all(G.order());
  for (Element g = 0; g < G.order(); ++g) all[g] = g;
  const auto e = ga_scale(FG.indicator(all), inv);
  CHECK(is_idempotent(e));
  CHECK(ideal_dimension(e) == 1);
  for (int t = 0; t < 5; ++t) {
    auto x = random_element(FG, rng);
    CHECK(ga_mul(ga_mul(e, x), e) == ga_mul(e, x));
  }
}
