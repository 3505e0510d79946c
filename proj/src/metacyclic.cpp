#include "fqg/metacyclic.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "fqg/error.hpp"

namespace fqg {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  for (; e; e >>= 1, b = mulmod(b, b, m))
    if (e & 1) r = mulmod(r, b, m);
  return r;
}

// a^i b^c as an element index; b^t = a^k is central.
Element power_word(const MetacyclicParams& P, std::uint64_t i, std::uint64_t c) {
  const std::uint64_t j = c % P.t;
  const std::uint64_t e = (i % P.n + mulmod(P.k % P.n, c / P.t, P.n)) % P.n;
  return static_cast<Element>(j * P.n + e);
}

// alpha (r - 1) mod v, then gcd with v
std::uint64_t gcd_ar(const MetacyclicParams& P, std::uint64_t alpha, std::uint64_t v) {
  const std::uint64_t r1 = (P.r % v + v - 1) % v;
  return std::gcd(mulmod(alpha % v, r1, v), v);
}

}  // namespace

void MetacyclicParams::validate() const {
  if (n == 0 || t == 0) throw Error(ErrorKind::BadPresentation, "n and t must be positive");
  if (powmod(r, t, n) != 1 % n) throw Error(ErrorKind::BadPresentation, "r^t != 1 (mod n)");
  if (mulmod(k % n, (r % n + n - 1) % n, n) != 0) throw Error(ErrorKind::BadPresentation, "k(r-1) != 0 (mod n)");
}

std::uint64_t o_v(const MetacyclicParams& P, std::uint64_t v) { return v == 1 ? 1 : mult_order(v, P.r); }

Subgroup h_subgroup(const FiniteGroup& G, const MetacyclicParams& P, std::uint64_t v, std::uint64_t i,
                    std::uint64_t c) {
  const Element gens[] = {power_word(P, v, 0), power_word(P, i, c)};
  return generated_subgroup(G, gens);
}

Subgroup g_ov(const FiniteGroup& G, const MetacyclicParams& P, std::uint64_t v) {
  return h_subgroup(G, P, 1, 0, o_v(P, v));
}

bool in_b(const MetacyclicParams& P, std::uint64_t o, std::uint64_t w, std::uint64_t i, std::uint64_t c) {
  if (w == 0 || P.n % w != 0) return false;
  if ((powmod(P.r, o, w) + w - 1) % w != 0) return false;
  const std::uint64_t oc = o * c;
  if (oc == 0 || P.t % oc != 0) return false;
  return (P.k % w + mulmod(i % w, P.t / oc, w)) % w == 0;
}

std::vector<NormalTriple> normal_triples(const MetacyclicParams& P) {
  std::vector<NormalTriple> out;
  for (auto v : divisors(P.n)) {
    const std::uint64_t o = o_v(P, v);
    const std::uint64_t r1 = (P.r % v + v - 1) % v;
    for (auto c : divisors(P.t)) {
      if (c % o != 0) continue;
      for (std::uint64_t i = 0; i < v; ++i)
        if ((P.k % v + mulmod(i, P.t / c, v)) % v == 0 && mulmod(i, r1, v) == 0) out.push_back({v, i, c});
    }
  }
  return out;
}

std::vector<XTriple> x_set(const MetacyclicParams& P, const NormalTriple& N) {
  const std::uint64_t v = N.v, o = o_v(P, v);
  std::vector<XTriple> out;
  if (N.c % o != 0) return out;
  for (auto beta : divisors(N.c / o)) {
    const std::uint64_t step = N.c / (beta * o);
    for (std::uint64_t alpha = 0; alpha < v; ++alpha) {
      if (mulmod(alpha, step, v) != N.i % v) continue;
      const u128 num = static_cast<u128>(N.c) * gcd_ar(P, alpha, v);
      if (num % (v * o) != 0 || num / (v * o) != beta) continue;
      if (std::gcd(std::gcd(v, alpha), beta) != 1) continue;
      if (!in_b(P, o, v, alpha, beta)) continue;
      out.push_back({v, alpha, beta});
    }
  }
  return out;
}

bool x_equivalent(const MetacyclicParams& P, const XTriple& x, const XTriple& y) {
  if (x.v != y.v || x.beta != y.beta) return false;
  const std::uint64_t v = x.v;
  const std::uint64_t period = o_v(P, v);
  std::uint64_t a = y.alpha % v;
  for (std::uint64_t j = 0; j < period; ++j, a = mulmod(a, P.r, v))
    if (a == x.alpha % v) return true;
  return false;
}

std::vector<XTriple> x_classes(const MetacyclicParams& P, const NormalTriple& N) {
  std::vector<XTriple> out;
  for (const auto& x : x_set(P, N)) {
    bool seen = false;
    for (const auto& y : out) seen = seen || x_equivalent(P, x, y);
    if (!seen) out.push_back(x);  // x_set is ordered by alpha within beta
  }
  return out;
}

NormalTriple core_formula(const MetacyclicParams& P, std::uint64_t o, std::uint64_t u, std::uint64_t alpha,
                          std::uint64_t beta) {
  const std::uint64_t g = gcd_ar(P, alpha, u);
  return {u, alpha * (u / g), beta * o * (u / g)};
}

std::vector<ShodaTriple> metacyclic_triples(const FiniteGroup& G, const MetacyclicParams& P) {
  std::vector<ShodaTriple> out;
  std::unordered_set<Subgroup, SubgroupHash> seen;
  for (const auto& N : normal_triples(P)) {
    Subgroup HN = h_subgroup(G, P, N.v, N.i, N.c);
    if (!seen.insert(HN).second)
      throw Error(ErrorKind::AssertionFailure, "H_{" + std::to_string(N.v) + "," + std::to_string(N.i) + "," +
                                                   std::to_string(N.c) + "} repeats an earlier normal subgroup");
    const std::uint64_t o = o_v(P, N.v);
    Subgroup A = g_ov(G, P, N.v);
    for (const auto& x : x_classes(P, N))
      out.push_back({HN, h_subgroup(G, P, x.v, x.alpha, x.beta * o), A});
  }
  return out;
}

MetacyclicDecomposition metacyclic_decompose(const MetacyclicParams& P, const FieldTower& field,
                                             const DecomposeOptions& options) {
  P.validate();
  const std::uint64_t order = P.n * P.t;
  if (gcd_u64(field.q(), order) != 1)
    throw Error(ErrorKind::NotSemisimple,
                "gcd(q, |G|) = gcd(" + std::to_string(field.q()) + ", " + std::to_string(order) + ") != 1");
  MetacyclicDecomposition out;
  out.algebra = std::make_shared<GroupAlgebra>(metacyclic_group(P.n, P.t, P.k, P.r), field);
  std::optional<std::mt19937_64> rng;
  if (options.seed) rng.emplace(*options.seed);
  out.decomposition = decompose_triples(*out.algebra, metacyclic_triples(out.algebra->group(), P), options,
                                        rng ? &*rng : nullptr);
  return out;
}

}  // namespace fqg
