#include <doctest.h>

#include <random>

#include "fqg/error.hpp"
#include "fqg/field.hpp"

using namespace fqg;

namespace {

// All monic polynomials of degree d over F_p with p small, lowest degree first,
// enumerated in the lex order that compares from the constant term upward.
std::vector<Poly> monic_of_degree(std::uint64_t p, unsigned d) {
  std::vector<Poly> out;
  std::uint64_t total = 1;
  for (unsigned i = 0; i < d; ++i) total *= p;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Poly f(d + 1, 0);
    std::uint64_t v = idx;
    for (int i = static_cast<int>(d) - 1; i >= 0; --i) {
      f[i] = static_cast<Coeff>(v % p);
      v /= p;
    }
    f[d] = 1;
    out.push_back(f);
  }
  return out;
}

// Brute-force irreducibility by trial division with every monic polynomial of
// degree <= d/2.
bool irreducible_by_trial(const BaseField& F, const Poly& f) {
  const int d = poly::degree(f);
  for (int e = 1; 2 * e <= d; ++e)
    for (const auto& g : monic_of_degree(F.size(), static_cast<unsigned>(e)))
      if (poly::mod(F, f, g).empty()) return false;
  return d >= 1;
}

}  // namespace

TEST_CASE("make_field chooses the lex-least modulus") {
  CHECK(make_field(7, 1).base().modulus().empty());
  CHECK(make_field(2, 2).base().modulus() == Poly{1, 1, 1});
  CHECK(make_field(3, 2).base().modulus() == Poly{1, 0, 1});
  CHECK_THROWS_AS(make_field(9, 1), Error);
  try {
    make_field(15, 1);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPrime);
  }
}

TEST_CASE("least_irreducible agrees with trial-division enumeration") {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    BaseField F(p);
    for (unsigned d = 1; d <= 4; ++d) {
      Poly expected;
      for (const auto& f : monic_of_degree(p, d))
        if (irreducible_by_trial(F, f)) {
          expected = f;
          break;
        }
      if (d == 1) expected = poly::x();
      CHECK(poly::least_irreducible(F, d) == expected);
    }
  }
}

TEST_CASE("is_irreducible matches trial division") {
  for (std::uint64_t p : {2u, 3u}) {
    BaseField F(p);
    for (unsigned d = 1; d <= 5; ++d)
      for (const auto& f : monic_of_degree(p, d)) CHECK(poly::is_irreducible(F, f) == irreducible_by_trial(F, f));
  }
}

TEST_CASE("extend") {
  auto F7 = make_field(7, 1);
  auto e1 = F7.extend(1);
  CHECK(e1->degree() == 1);
  CHECK(e1 == F7.extend(1));
  auto F4 = make_field(2, 1).extend(2);
  CHECK(F4->modulus() == Poly{1, 1, 1});
  CHECK(F4->size() == 4);
  auto F25 = make_field(5, 1).extend(2);
  CHECK(F25->size() == 25);
  CHECK(F25->modulus() == poly::least_irreducible(BaseField(5), 2));
}

TEST_CASE("mult_order") {
  CHECK(mult_order(1, 5) == 1);
  CHECK(mult_order(7, 2) == 3);
  CHECK(mult_order(16, 7) == 2);
  CHECK_THROWS_AS(mult_order(6, 3), Error);
  // brute force
  for (std::uint64_t n = 1; n <= 40; ++n)
    for (std::uint64_t q : {3u, 5u, 7u, 11u, 13u}) {
      if (gcd_u64(n, q) != 1) continue;
      std::uint64_t s = 1, v = q % n;
      while (v != 1 % n) {
        v = v * q % n;
        ++s;
      }
      CHECK(mult_order(n, q) == s);
    }
}

TEST_CASE("field axioms on F_9 and an extension of F_4") {
  std::mt19937 rng(7);
  BaseField F9(3, 2);
  std::uniform_int_distribution<Coeff> pick(0, 8);
  for (int i = 0; i < 500; ++i) {
    Coeff a = pick(rng), b = pick(rng), c = pick(rng);
    CHECK(F9.mul(F9.mul(a, b), c) == F9.mul(a, F9.mul(b, c)));
    CHECK(F9.mul(a, F9.add(b, c)) == F9.add(F9.mul(a, b), F9.mul(a, c)));
    CHECK(F9.add(a, F9.neg(a)) == 0);
    if (a != 0) CHECK(F9.mul(a, F9.inv(a)) == 1);
  }
  auto tower = make_field(2, 2);
  auto E = tower.extend(3);  // F_64 over F_4
  std::uniform_int_distribution<Coeff> pick4(0, 3);
  auto rand_elem = [&] {
    ExtElem x(3);
    for (auto& c : x) c = pick4(rng);
    return x;
  };
  for (int i = 0; i < 200; ++i) {
    auto x = rand_elem(), y = rand_elem(), z = rand_elem();
    CHECK(E->mul(E->mul(x, y), z) == E->mul(x, E->mul(y, z)));
    CHECK(E->mul(x, E->add(y, z)) == E->add(E->mul(x, y), E->mul(x, z)));
    if (!E->is_zero(x)) CHECK(E->is_one(E->mul(x, E->inv(x))));
    CHECK(E->frobenius(E->mul(x, y)) == E->mul(E->frobenius(x), E->frobenius(y)));
    CHECK(E->frobenius(E->add(x, y)) == E->add(E->frobenius(x), E->frobenius(y)));
  }
}

TEST_CASE("Frobenius fixed set is exactly F_q") {
  auto tower = make_field(3, 1);
  auto E = tower.extend(2);
  int fixed = 0;
  for (int i = 0; i < 9; ++i) {
    auto x = E->element_at(i);
    const bool f = E->frobenius(x) == x;
    CHECK(f == E->in_base(x));
    fixed += f;
  }
  CHECK(fixed == 3);
}

TEST_CASE("primitive roots of unity") {
  auto F7 = make_field(7, 1);
  auto r = primitive_root_of_unity(F7, 3);
  CHECK(r.field->degree() == 1);
  CHECK(r.zeta == ExtElem{2});
  auto one = primitive_root_of_unity(F7, 1);
  CHECK(one.field->is_one(one.zeta));
  auto F2 = make_field(2, 1);
  auto z = primitive_root_of_unity(F2, 3);
  const auto& E = *z.field;
  CHECK(E.degree() == 2);
  CHECK(E.is_zero(E.add(E.add(E.mul(z.zeta, z.zeta), z.zeta), E.one())));
  for (std::uint64_t n : {5u, 8u, 9u, 12u, 16u, 21u}) {
    for (std::uint64_t p : {5u, 7u, 11u, 13u}) {
      if (gcd_u64(n, p) != 1) continue;
      auto tower = make_field(p, 1);
      auto root = primitive_root_of_unity(tower, n);
      CHECK(root.field->is_one(root.field->pow(root.zeta, n)));
      for (auto l : prime_factors(n)) CHECK_FALSE(root.field->is_one(root.field->pow(root.zeta, n / l)));
    }
  }
  CHECK_THROWS_AS(primitive_root_of_unity(F7, 14), Error);
}

TEST_CASE("field trace") {
  auto F2 = make_field(2, 1);
  auto F4 = F2.extend(2);
  CHECK(field_trace(*F4, F4->one()) == 0);
  auto z = primitive_root_of_unity(F2, 3);
  CHECK(field_trace(*z.field, z.zeta) == 1);
  auto F5 = make_field(5, 1).extend(1);
  CHECK(field_trace(*F5, F5->embed(3)) == 3);

  // linearity over F_q for an extension of F_9
  auto tower = make_field(3, 2);
  auto E = tower.extend(2);
  std::mt19937 rng(3);
  std::uniform_int_distribution<Coeff> pick(0, 8);
  const auto& F = tower.base();
  for (int i = 0; i < 100; ++i) {
    ExtElem x{pick(rng), pick(rng)}, y{pick(rng), pick(rng)};
    Coeff a = pick(rng), b = pick(rng);
    auto lhs = field_trace(*E, E->add(E->scale(x, a), E->scale(y, b)));
    auto rhs = F.add(F.mul(a, field_trace(*E, x)), F.mul(b, field_trace(*E, y)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("factor") {
  BaseField F7(7);
  auto f = poly::factor(F7, Poly{6, 0, 1});  // x^2 - 1
  REQUIRE(f.size() == 2);
  CHECK(f[0].factor == Poly{1, 1});
  CHECK(f[1].factor == Poly{6, 1});
  BaseField F2(2);
  auto g = poly::factor(F2, Poly{1, 1, 1});
  REQUIRE(g.size() == 1);
  CHECK(g[0].factor == Poly{1, 1, 1});
  auto h = poly::factor(F2, Poly{1, 0, 0, 1});
  REQUIRE(h.size() == 2);
  CHECK(h[0].factor == Poly{1, 1});
  CHECK(h[1].factor == Poly{1, 1, 1});

  // products re-multiply bit-exactly and every factor is irreducible
  std::mt19937 rng(11);
  for (std::uint64_t p : {2u, 3u, 5u}) {
    for (unsigned a : {1u, 2u}) {
      BaseField F(p, a);
      std::uniform_int_distribution<Coeff> pick(0, static_cast<Coeff>(F.size() - 1));
      for (int trial = 0; trial < 40; ++trial) {
        Poly f{1};
        const int parts = 1 + trial % 4;
        for (int k = 0; k < parts; ++k) {
          Poly g(2 + trial % 3);
          for (auto& c : g) c = pick(rng);
          g.back() = 1;
          f = poly::mul(F, f, g);
        }
        auto fs = poly::factor(F, f);
        Poly prod{1};
        for (const auto& [fac, mult] : fs) {
          CHECK(poly::is_irreducible(F, fac));
          for (unsigned k = 0; k < mult; ++k) prod = poly::mul(F, prod, fac);
        }
        CHECK(prod == f);
        CHECK(std::is_sorted(fs.begin(), fs.end(),
                             [](const auto& x, const auto& y) { return x.factor < y.factor; }));
      }
    }
  }
}
