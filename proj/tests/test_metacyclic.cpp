#include <doctest.h>

#include <set>
#include <unordered_set>

#include "fqg/error.hpp"
#include "fqg/metacyclic.hpp"

using namespace fqg;

namespace {

const std::vector<MetacyclicParams> kCorpus = {
    {4, 2, 0, 3}, {5, 4, 0, 2}, {7, 3, 0, 2}, {9, 3, 0, 4},  {8, 2, 0, 3},
    {16, 4, 0, 3}, {8, 2, 2, 5}, {16, 2, 2, 9}, {32, 2, 2, 17}};

FiniteGroup build(const MetacyclicParams& P) { return metacyclic_group(P.n, P.t, P.k, P.r); }

std::set<std::vector<Coeff>> idempotent_set(const Decomposition& d) {
  std::set<std::vector<Coeff>> out;
  for (const auto& c : d.components) out.insert(c.idempotent.c);
  return out;
}

bool conjugate_in(const FiniteGroup& G, const Subgroup& X, const Subgroup& Y) {
  for (Element g = 0; g < G.order(); ++g)
    if (conjugate_subgroup(G, X, g) == Y) return true;
  return false;
}

}  // namespace

TEST_CASE("metacyclic validate") {
  const MetacyclicParams ok{4, 2, 0, 3};
  CHECK_NOTHROW(ok.validate());
  const MetacyclicParams bad_r{5, 2, 0, 2}, bad_k{4, 2, 1, 3};
  CHECK_THROWS_AS(bad_r.validate(), Error);
  CHECK_THROWS_AS(bad_k.validate(), Error);
}

TEST_CASE("normal_triples on D8") {
  MetacyclicParams P{4, 2, 0, 3};
  auto N = normal_triples(P);
  CHECK(N.size() == 6);
  for (auto want : {NormalTriple{1, 0, 1}, NormalTriple{1, 0, 2}, NormalTriple{2, 0, 1}, NormalTriple{2, 1, 1},
                    NormalTriple{2, 0, 2}, NormalTriple{4, 0, 2}})
    CHECK(std::find(N.begin(), N.end(), want) != N.end());
}

TEST_CASE("normal_triples matches brute force") {
  for (const auto& P : kCorpus) {
    CAPTURE(P.n);
    CAPTURE(P.t);
    auto G = build(P);
    std::unordered_set<Subgroup, SubgroupHash> closed;
    for (const auto& N : normal_triples(P)) {
      auto H = h_subgroup(G, P, N.v, N.i, N.c);
      CHECK(H.order() == P.n * P.t / (N.v * N.c));
      CHECK(closed.insert(H).second);
    }
    auto brute = normal_subgroups(G);
    CHECK(closed.size() == brute.size());
    for (const auto& H : brute) CHECK(closed.count(H) == 1);
  }
}

TEST_CASE("conjugacy law on X") {
  for (const auto& P : kCorpus) {
    auto G = build(P);
    for (const auto& N : normal_triples(P)) {
      const auto o = o_v(P, N.v);
      auto X = x_set(P, N);
      for (const auto& x : X)
        for (const auto& y : X) {
          CAPTURE(P.n);
          CAPTURE(x.alpha);
          CAPTURE(y.alpha);
          CHECK(conjugate_in(G, h_subgroup(G, P, x.v, x.alpha, x.beta * o), h_subgroup(G, P, y.v, y.alpha, y.beta * o)) ==
                x_equivalent(P, x, y));
        }
      auto reps = x_classes(P, N);
      for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(x_equivalent(P, reps[i], reps[j]));
    }
  }
}

TEST_CASE("core formula") {
  std::size_t checked = 0;
  for (const auto& P : kCorpus) {
    auto G = build(P);
    std::set<std::uint64_t> orders;
    for (std::uint64_t v = 1; v <= P.n; ++v)
      if (P.n % v == 0) orders.insert(o_v(P, v));
    for (auto o : orders)
      for (std::uint64_t u = 1; u <= P.n; ++u)
        for (std::uint64_t alpha = 0; alpha < u; ++alpha)
          for (std::uint64_t beta = 1; beta * o <= P.t; ++beta) {
            if (!in_b(P, o, u, alpha, beta) || std::gcd(std::gcd(u, alpha), beta) != 1) continue;
            auto f = core_formula(P, o, u, alpha, beta);
            CAPTURE(P.n);
            CAPTURE(u);
            CAPTURE(alpha);
            CAPTURE(beta);
            CHECK(core(G, h_subgroup(G, P, u, alpha, beta * o)) == h_subgroup(G, P, f.v, f.i, f.c));
            ++checked;
          }
  }
  CHECK(checked > 50);
}

TEST_CASE("metacyclic_decompose agrees with decompose") {
  for (const auto& P : kCorpus)
    for (std::uint64_t q : {3u, 5u, 7u, 11u, 13u}) {
      if (gcd_u64(q, P.n * P.t) != 1) continue;
      CAPTURE(P.n);
      CAPTURE(q);
      auto fast = metacyclic_decompose(P, make_field(q, 1));
      auto slow = decompose(*fast.algebra);
      CHECK(fast.decomposition.summary == slow.summary);
      CHECK(idempotent_set(fast.decomposition) == idempotent_set(slow));
    }
  const MetacyclicParams d8{4, 2, 0, 3};
  CHECK_THROWS_AS(metacyclic_decompose(d8, make_field(2, 1)), Error);
}
