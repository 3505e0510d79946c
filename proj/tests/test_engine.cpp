#include <doctest.h>

#include <set>

#include "fqg/engine.hpp"
#include "fqg/error.hpp"
#include "fqg/oracle.hpp"

using namespace fqg;

TEST_CASE("generator_cosets") {
  auto one = generator_cosets(1, 7);
  REQUIRE(one.size() == 1);
  CHECK(one[0].members == std::vector<std::uint64_t>{0});
  auto five = generator_cosets(5, 2);
  REQUIRE(five.size() == 1);
  CHECK(five[0].members == std::vector<std::uint64_t>{1, 2, 3, 4});
  auto eight = generator_cosets(8, 7);
  REQUIRE(eight.size() == 2);
  CHECK(eight[0].members == std::vector<std::uint64_t>{1, 7});
  CHECK(eight[1].members == std::vector<std::uint64_t>{3, 5});
  CHECK_THROWS_AS(generator_cosets(6, 3), Error);
  // partition of the units, uniform size
  for (std::uint64_t n = 2; n <= 60; ++n)
    for (std::uint64_t q : {3u, 5u, 7u, 11u, 13u}) {
      if (gcd_u64(n, q) != 1) continue;
      std::set<std::uint64_t> seen;
      for (const auto& C : generator_cosets(n, q)) {
        CHECK(C.members.size() == mult_order(n, q));
        for (auto j : C.members) CHECK(seen.insert(j).second);
      }
      std::uint64_t units = 0;
      for (std::uint64_t j = 1; j < n; ++j) units += gcd_u64(j, n) == 1;
      CHECK(seen.size() == units);
    }
}

TEST_CASE("coset_orbits") {
  auto S3 = metacyclic_group(3, 2, 0, 2);
  auto C3 = cyclic_subgroup(S3, 1);
  auto r = coset_orbits(S3, C3, trivial_subgroup(S3), 7);
  CHECK(r.representatives.size() == 1);
  CHECK(r.stabilizer == C3);

  auto D8 = metacyclic_group(4, 2, 0, 3);
  auto C4 = cyclic_subgroup(D8, 1);
  auto d = coset_orbits(D8, C4, trivial_subgroup(D8), 5);
  CHECK(d.representatives.size() == 1);
  CHECK(d.stabilizer == C4);

  auto Z12 = metacyclic_group(12, 1, 0, 1);
  auto z = coset_orbits(Z12, whole_group(Z12), trivial_subgroup(Z12), 5);
  CHECK(z.representatives.size() == generator_cosets(12, 5).size());
  CHECK(z.stabilizer == whole_group(Z12));

  auto V = cyclic_subgroup(D8, 4);
  CHECK_THROWS_AS(coset_orbits(D8, whole_group(D8), trivial_subgroup(D8), 3), Error);
  (void)V;
}

TEST_CASE("epsilon_idempotent") {
  // K = H: averaging idempotent
  GroupAlgebra FS3(metacyclic_group(3, 2, 0, 2), make_field(5, 1));
  const auto& S3 = FS3.group();
  auto C3 = cyclic_subgroup(S3, 1);
  auto avg = epsilon_idempotent(FS3, C3, C3, CyclotomicCoset{1, {0}});
  const Coeff third = FS3.field().inv(3);
  for (Element g = 0; g < 6; ++g) CHECK(avg.c[g] == (C3.contains(g) ? third : 0));

  GroupAlgebra F2C3(metacyclic_group(3, 1, 0, 1), make_field(2, 1));
  auto K = whole_group(F2C3.group());
  auto eps = epsilon_idempotent(F2C3, K, trivial_subgroup(F2C3.group()), generator_cosets(3, 2)[0]);
  CHECK(eps == F2C3.indicator({1, 2}));

  GroupAlgebra F7C3(metacyclic_group(3, 1, 0, 1), make_field(7, 1));
  auto e7 = epsilon_idempotent(F7C3, whole_group(F7C3.group()), trivial_subgroup(F7C3.group()),
                               CyclotomicCoset{3, {1}});
  CHECK(e7.c == std::vector<Coeff>{5, 6, 3});
  CHECK(is_idempotent(e7));
  // a eps = zeta eps with zeta = 2
  CHECK(ga_mul(F7C3.basis(1), e7) == ga_scale(e7, 2));

  // choice of member of C does not matter
  GroupAlgebra F3C8(metacyclic_group(8, 1, 0, 1), make_field(3, 1));
  const auto& G8 = F3C8.group();
  for (const auto& C : generator_cosets(8, 3)) {
    auto base = epsilon_idempotent(F3C8, whole_group(G8), trivial_subgroup(G8), C);
    CHECK(is_idempotent(base));
    for (auto j : C.members)
      CHECK(epsilon_idempotent(F3C8, whole_group(G8), trivial_subgroup(G8), C, std::nullopt, j) == base);
  }
}

TEST_CASE("ec_idempotent") {
  GroupAlgebra F2S3(metacyclic_group(3, 2, 0, 2), make_field(2, 1));
  const auto& S3 = F2S3.group();
  auto e = ec_idempotent(F2S3, cyclic_subgroup(S3, 1), trivial_subgroup(S3), generator_cosets(3, 2)[0]);
  CHECK(e == F2S3.indicator({1, 2}));

  GroupAlgebra F3D8(metacyclic_group(4, 2, 0, 3), make_field(3, 1));
  const auto& D8 = F3D8.group();
  auto cosets = generator_cosets(4, 3);
  REQUIRE(cosets.size() == 1);
  CHECK(cosets[0].members == std::vector<std::uint64_t>{1, 3});
  auto f = ec_idempotent(F3D8, cyclic_subgroup(D8, 1), trivial_subgroup(D8), cosets[0]);
  CHECK(is_central(f));
  CHECK(is_idempotent(f));
  CHECK(ideal_dimension(f) == 4);

  // K = G: nothing to conjugate
  auto g = ec_idempotent(F3D8, whole_group(D8), whole_group(D8), CyclotomicCoset{1, {0}});
  CHECK(g == epsilon_idempotent(F3D8, whole_group(D8), whole_group(D8), CyclotomicCoset{1, {0}}));
}

TEST_CASE("shoda_triples") {
  auto S3 = metacyclic_group(3, 2, 0, 2);
  auto t = shoda_triples(S3);
  REQUIRE(t.size() == 3);
  auto C3 = cyclic_subgroup(S3, 1);
  CHECK(t[0] == ShodaTriple{trivial_subgroup(S3), trivial_subgroup(S3), C3});
  CHECK(t[1] == ShodaTriple{C3, C3, whole_group(S3)});
  CHECK(t[2] == ShodaTriple{whole_group(S3), whole_group(S3), whole_group(S3)});

  for (const auto& G : {metacyclic_group(12, 1, 0, 1), metacyclic_group(4, 2, 1, 1)}) {
    auto triples = shoda_triples(G);
    std::size_t cyclic_quotients = 0;
    for (const auto& N : normal_subgroups(G)) cyclic_quotients += is_cyclic_quotient(G, whole_group(G), N);
    CHECK(triples.size() == cyclic_quotients);
    for (const auto& tr : triples) {
      CHECK(tr.N == tr.D);
      CHECK(tr.A == whole_group(G));
    }
  }
}

TEST_CASE("component_params") {
  auto S3 = metacyclic_group(3, 2, 0, 2);
  ShodaTriple t{trivial_subgroup(S3), trivial_subgroup(S3), cyclic_subgroup(S3, 1)};
  auto p = component_params(S3, t, 2);
  CHECK(p.d == 2);
  CHECK(p.l == 1);
  CHECK(p.orbits.stabilizer == whole_group(S3));

  auto Z12 = metacyclic_group(12, 1, 0, 1);
  for (const auto& tr : shoda_triples(Z12)) {
    auto cp = component_params(Z12, tr, 5);
    CHECK(cp.d == 1);
    CHECK(cp.l == mult_order(12 / tr.N.order(), 5));
  }
}

TEST_CASE("decompose") {
  GroupAlgebra F5S3(metacyclic_group(3, 2, 0, 2), make_field(5, 1));
  auto dec = decompose(F5S3, {.check_ideal_dimensions = true});
  CHECK(dec.summary.alpha == AlphaMap{{{1, 1}, 2}, {{2, 1}, 1}});
  CHECK(dec.summary.dimension() == 6);

  GroupAlgebra F3Q8(d2_group(1), make_field(3, 1));
  auto q8 = decompose(F3Q8, {.check_ideal_dimensions = true});
  CHECK(q8.summary.alpha == AlphaMap{{{1, 1}, 4}, {{2, 1}, 1}});

  GroupAlgebra F2S3(metacyclic_group(3, 2, 0, 2), make_field(2, 1));
  try {
    decompose(F2S3);
    FAIL("expected NotSemisimple");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSemisimple);
  }

  std::vector<std::uint32_t> c4{1, 2, 3, 0}, sw{1, 0, 2, 3};
  GroupAlgebra F5S4(permutation_group({c4, sw}), make_field(5, 1));
  try {
    decompose(F5S4);
    FAIL("expected NotMetabelian");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotMetabelian);
  }

  GroupAlgebra F7Z12(metacyclic_group(12, 1, 0, 1), make_field(7, 1));
  auto z = decompose(F7Z12);
  for (const auto& c : z.components) CHECK(c.d == 1);
  CHECK(z.summary.dimension() == 12);
}

TEST_CASE("aut_description") {
  WedderburnSummary s{5, 6, {{{1, 1}, 6}}};
  CHECK(aut_description(s) == AutExpr::symmetric(6));
  WedderburnSummary t{5, 4, {{{2, 1}, 1}}};
  CHECK(aut_description(t) == AutExpr::special_linear(2, 5, 1));
  WedderburnSummary u{5, 16, {{{1, 1}, 8}, {{2, 1}, 2}}};
  auto expected = AutExpr::direct_sum(
      {AutExpr::symmetric(8),
       AutExpr::semidirect(AutExpr::power(AutExpr::special_linear(2, 5, 1), 2), AutExpr::symmetric(2))});
  CHECK(aut_description(u) == expected.normalized());
  CHECK(aut_description(u).to_string() == "S_8 (+) (SL_2(F_5)^(2) x| S_2)");
  WedderburnSummary v{3, 16, {{{1, 1}, 4}, {{1, 2}, 2}, {{2, 2}, 1}}};
  CHECK(aut_description(v).to_string() == "S_4 (+) (Z_2^(2) x| S_2) (+) (SL_2(F_3^2) x| Z_2)");
}
