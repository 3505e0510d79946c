#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "fqg/error.hpp"
#include "fqg/group.hpp"

using namespace fqg;

namespace {

FiniteGroup klein_four() {
  std::vector<Element> t(16);
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b) t[a * 4 + b] = a ^ b;
  return FiniteGroup::from_cayley(4, t);
}

FiniteGroup symmetric(unsigned n) {
  std::vector<std::uint32_t> cycle(n), swap(n);
  for (unsigned i = 0; i < n; ++i) {
    cycle[i] = (i + 1) % n;
    swap[i] = i;
  }
  std::swap(swap[0], swap[1]);
  return permutation_group({cycle, swap});
}

// Brute-force subgroup list: every subset closed under multiplication, found
// by closing every pair of elements and then every pair of those.
std::set<std::vector<Element>> subgroups_by_pairs(const FiniteGroup& G) {
  std::set<std::vector<Element>> found;
  std::vector<Subgroup> work;
  for (Element a = 0; a < G.order(); ++a)
    for (Element b = a; b < G.order(); ++b) {
      std::vector<Element> gens{a, b};
      auto H = generated_subgroup(G, gens);
      if (found.insert(H.members()).second) work.push_back(H);
    }
  // joins until stable
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Subgroup> snapshot = work;
    for (const auto& H : snapshot)
      for (const auto& K : snapshot) {
        std::vector<Element> gens = H.members();
        gens.insert(gens.end(), K.members().begin(), K.members().end());
        auto J = generated_subgroup(G, gens);
        if (found.insert(J.members()).second) {
          work.push_back(J);
          grew = true;
        }
      }
  }
  return found;
}

}  // namespace

TEST_CASE("from_cayley validation") {
  CHECK(FiniteGroup::from_cayley(1, {0}).order() == 1);
  CHECK(FiniteGroup::from_cayley(2, {0, 1, 1, 0}).order() == 2);
  auto t = klein_four().table();
  t[1 * 4 + 2] = 1;  // typo
  t[1 * 4 + 3] = 2;
  try {
    FiniteGroup::from_cayley(4, t);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK((e.kind() == ErrorKind::NotAssociative || e.kind() == ErrorKind::NoInverse));
  }
  // Latin square but not associative
  std::vector<Element> bad{0, 1, 2, 3, 4,  //
                           1, 0, 3, 4, 2,  //
                           2, 4, 0, 1, 3,  //
                           3, 2, 4, 0, 1,  //
                           4, 3, 1, 2, 0};
  try {
    FiniteGroup::from_cayley(5, bad);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAssociative);
    CHECK(std::string(e.what()).find("*") != std::string::npos);
  }
  CHECK_THROWS_AS(FiniteGroup::from_cayley(2, {1, 0, 0, 1}), Error);
  CHECK_THROWS_AS(FiniteGroup::from_cayley(2, {0, 1, 1, 1}), Error);
  CHECK_THROWS_AS(FiniteGroup::from_cayley(2, {0, 1, 1, 2}), Error);
}

TEST_CASE("metacyclic_group") {
  auto D8 = metacyclic_group(4, 2, 0, 3);
  CHECK(D8.order() == 8);
  CHECK_FALSE(is_abelian(D8));
  int order4 = 0;
  for (Element g = 0; g < 8; ++g) order4 += D8.element_order(g) == 4;
  CHECK(order4 == 2);
  CHECK(is_abelian(metacyclic_group(7, 1, 0, 1)));
  auto C4 = metacyclic_group(2, 2, 1, 1);
  CHECK(C4.element_order(2) == 4);  // b
  CHECK_THROWS_AS(metacyclic_group(5, 2, 0, 2), Error);
  CHECK_THROWS_AS(metacyclic_group(4, 2, 1, 3), Error);

  // b^{-1} a b = a^r and b^t = a^k in every corpus presentation
  struct P {
    std::uint64_t n, t, k, r;
  };
  for (P p : {P{4, 2, 0, 3}, P{5, 4, 0, 2}, P{7, 3, 0, 2}, P{9, 3, 0, 4}, P{8, 2, 0, 3},
              P{16, 4, 0, 3}, P{8, 2, 2, 5}, P{16, 2, 2, 9}}) {
    auto G = metacyclic_group(p.n, p.t, p.k, p.r);
    const Element a = 1, b = static_cast<Element>(p.n);
    CHECK(G.conj(a, b) == G.pow(a, static_cast<std::int64_t>(p.r)));
    CHECK(G.pow(b, static_cast<std::int64_t>(p.t)) == G.pow(a, static_cast<std::int64_t>(p.k)));
    CHECK(G.element_order(a) == p.n);
  }
}

TEST_CASE("d1 and d2 groups") {
  auto d1 = d1_group(1);
  CHECK(d1.order() == 8);
  CHECK(are_isomorphic(d1, metacyclic_group(4, 2, 0, 3)));
  auto d2 = d2_group(1);
  CHECK(d2.order() == 8);
  int involutions = 0;
  for (Element g = 0; g < 8; ++g) involutions += d2.element_order(g) == 2;
  CHECK(involutions == 1);  // quaternion
  CHECK_FALSE(are_isomorphic(d1, d2));
  auto g = d1_group(2);
  CHECK(g.order() == 16);
  auto Z = center(g);
  CHECK(Z.order() == 4);
  CHECK(Z.contains(1));  // t
  for (unsigned m = 2; m <= 4; ++m) {
    CHECK(center(d1_group(m)).order() == (1u << m));
    CHECK(center(d1_group(m)) == cyclic_subgroup(d1_group(m), 1));
  }
}

TEST_CASE("Latin square and inverse laws") {
  for (const auto& G : {metacyclic_group(16, 4, 0, 3), d1_group(3), d2_group(3), symmetric(4)}) {
    for (Element x = 0; x < G.order(); ++x) {
      std::vector<bool> row(G.order()), col(G.order());
      for (Element y = 0; y < G.order(); ++y) {
        row[G.mul(x, y)] = true;
        col[G.mul(y, x)] = true;
      }
      CHECK(std::all_of(row.begin(), row.end(), [](bool b) { return b; }));
      CHECK(std::all_of(col.begin(), col.end(), [](bool b) { return b; }));
      CHECK(G.inv(G.inv(x)) == x);
      CHECK(G.mul(x, G.inv(x)) == 0);
    }
  }
}

TEST_CASE("all_subgroups") {
  CHECK(all_subgroups(metacyclic_group(4, 1, 0, 1)).size() == 3);
  CHECK(all_subgroups(klein_four()).size() == 5);
  auto D8 = metacyclic_group(4, 2, 0, 3);
  CHECK(all_subgroups(D8).size() == 10);
  CHECK(normal_subgroups(D8).size() == 6);
  CHECK(normal_subgroups(metacyclic_group(12, 1, 0, 1)).size() == all_subgroups(metacyclic_group(12, 1, 0, 1)).size());
  CHECK(all_subgroups(symmetric(4)).size() == 30);
  CHECK_THROWS_AS(all_subgroups(D8, 4), Error);

  for (const auto& G : {D8, d1_group(2), d2_group(2), symmetric(4), metacyclic_group(9, 3, 0, 4)}) {
    auto lattice = all_subgroups(G);
    std::set<std::vector<Element>> ours;
    for (const auto& H : lattice) {
      ours.insert(H.members());
      CHECK(G.order() % H.order() == 0);
      for (Element x : H.members())
        for (Element y : H.members()) CHECK(H.contains(G.mul(x, y)));
    }
    CHECK(ours.size() == lattice.size());
    CHECK(std::is_sorted(lattice.begin(), lattice.end()));
    CHECK(ours == subgroups_by_pairs(G));
  }
}

TEST_CASE("derived subgroup, core, quotient, classes") {
  auto S3 = metacyclic_group(3, 2, 0, 2);
  CHECK(derived_subgroup(metacyclic_group(12, 1, 0, 1)).is_trivial());
  CHECK(derived_subgroup(S3).order() == 3);
  CHECK(is_metabelian(S3));
  CHECK_FALSE(is_metabelian(symmetric(4)));
  CHECK(is_metabelian(symmetric(3)));

  auto classes = conjugacy_classes(S3);
  std::multiset<std::size_t> sizes;
  for (const auto& c : classes) sizes.insert(c.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});

  auto D8 = metacyclic_group(4, 2, 0, 3);
  auto refl = cyclic_subgroup(D8, 4);  // b
  CHECK(core(D8, refl).is_trivial());
  auto lattice = all_subgroups(D8);
  auto normals = normal_subgroups(D8, lattice);
  for (const auto& H : lattice) {
    auto C = core(D8, H);
    CHECK(is_normal(D8, C));
    CHECK(C.is_subset_of(H));
    for (const auto& N : normals)
      if (N.is_subset_of(H)) CHECK(N.is_subset_of(C));
    CHECK((C == H) == is_normal(D8, H));
  }
  for (const auto& N : normals) CHECK(normalizer(D8, N) == whole_group(D8));

  auto Z4 = metacyclic_group(4, 1, 0, 1);
  auto Q = quotient(Z4, cyclic_subgroup(Z4, 2));
  CHECK(Q.table.order() == 2);
  CHECK(Q.lift[0] == 0);
  for (const auto& G : {D8, d1_group(2), symmetric(4)}) {
    for (const auto& N : normal_subgroups(G)) {
      auto QG = quotient(G, N);
      CHECK(QG.table.order() == G.order() / N.order());
      for (Element x = 0; x < G.order(); ++x)
        for (Element y = 0; y < G.order(); ++y)
          CHECK(QG.coset_of[G.mul(x, y)] == QG.table.mul(QG.coset_of[x], QG.coset_of[y]));
    }
  }
}

TEST_CASE("maximal_abelian_over_derived") {
  auto Z12 = metacyclic_group(12, 1, 0, 1);
  CHECK(maximal_abelian_over_derived(Z12) == whole_group(Z12));
  auto S3 = metacyclic_group(3, 2, 0, 2);
  CHECK(maximal_abelian_over_derived(S3) == cyclic_subgroup(S3, 1));
  auto D8 = metacyclic_group(4, 2, 0, 3);
  auto A = maximal_abelian_over_derived(D8);
  CHECK(A.order() == 4);
  CHECK(A.contains(2));
  CHECK_THROWS_AS(maximal_abelian_over_derived(symmetric(4)), Error);
}

TEST_CASE("cayley file round trip") {
  auto G = d1_group(2);
  std::stringstream ss;
  write_cayley(ss, G);
  auto H = read_cayley(ss);
  CHECK(H.table() == G.table());
  CHECK(H.labels() == G.labels());
  std::stringstream again;
  write_cayley(again, H);
  std::stringstream first;
  write_cayley(first, G);
  CHECK(again.str() == first.str());
  std::stringstream bad("order 2\n0 1\n1");
  CHECK_THROWS_AS(read_cayley(bad), Error);
}
