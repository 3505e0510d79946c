#include "fqg/engine.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_set>

#include "fqg/error.hpp"

namespace fqg {

namespace {

constexpr std::uint64_t kUnset = ~std::uint64_t{0};

struct VectorHash {
  std::size_t operator()(const std::vector<Coeff>& v) const {
    std::size_t h = 0x84222325cbf29ce4ull;
    for (Coeff c : v) h = (h ^ c) * 0x100000001b3ull;
    return h;
  }
};

// tr(zeta^i) for 0 <= i < n, cached per (p, a, n).
const std::vector<Coeff>& trace_table(const FieldTower& tower, std::uint64_t n) {
  static std::mutex mutex;
  static std::map<std::tuple<std::uint64_t, unsigned, std::uint64_t>, std::vector<Coeff>> cache;
  const auto key = std::make_tuple(tower.prime_power().p, tower.prime_power().a, n);
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const RootOfUnity root = primitive_root_of_unity(tower, n);
  const ExtField& E = *root.field;
  std::vector<Coeff> traces(n);
  ExtElem power = E.one();
  for (std::uint64_t i = 0; i < n; ++i) {
    traces[i] = field_trace(E, power);
    power = E.mul(power, root.zeta);
  }
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(traces)).first->second;
}

// Order of x modulo H (x in K, H normal in K).
std::uint64_t order_mod(const FiniteGroup& G, const Subgroup& H, Element x) {
  std::uint64_t k = 1;
  for (Element y = x; !H.contains(y); y = G.mul(y, x)) ++k;
  return k;
}

bool normalizes(const FiniteGroup& G, const Subgroup& S, Element g) {
  for (Element s : S.members())
    if (!S.contains(G.conj(s, g))) return false;
  return true;
}

template <class T>
const T& pick(const std::vector<T>& v, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> dist(0, v.size() - 1);
  return v[dist(rng)];
}

}  // namespace

std::vector<CyclotomicCoset> generator_cosets(std::uint64_t n, std::uint64_t q) {
  if (gcd_u64(n, q) != 1)
    throw Error(ErrorKind::NotCoprime, "gcd(" + std::to_string(n) + ", " + std::to_string(q) + ") != 1");
  if (n == 1) return {CyclotomicCoset{1, {0}}};
  const std::uint64_t s = mult_order(n, q);
  std::vector<bool> seen(n, false);
  std::vector<CyclotomicCoset> out;
  for (std::uint64_t j = 1; j < n; ++j) {
    if (seen[j] || gcd_u64(j, n) != 1) continue;
    CyclotomicCoset C{n, {}};
    std::uint64_t x = j;
    do {
      seen[x] = true;
      C.members.push_back(x);
      x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * q % n);
    } while (x != j);
    std::sort(C.members.begin(), C.members.end());
    if (C.members.size() != s)
      throw Error(ErrorKind::AssertionFailure, "generator coset of " + std::to_string(j) + " mod " +
                                                   std::to_string(n) + " has size " +
                                                   std::to_string(C.members.size()) + ", expected " +
                                                   std::to_string(s));
    out.push_back(std::move(C));
  }
  return out;
}

std::vector<std::uint64_t> discrete_logs(const FiniteGroup& G, const Subgroup& K, const Subgroup& H,
                                         Element generator) {
  std::vector<std::uint64_t> log(G.order(), kUnset);
  const std::uint64_t n = K.order() / H.order();
  Element y = 0;
  for (std::uint64_t e = 0; e < n; ++e) {
    for (Element h : H.members()) log[G.mul(y, h)] = e;
    y = G.mul(y, generator);
  }
  for (Element k : K.members())
    if (log[k] == kUnset)
      throw Error(ErrorKind::NotCyclicQuotient, "element " + G.label(generator) + " does not generate K/H");
  return log;
}

CosetOrbits coset_orbits(const FiniteGroup& G, const Subgroup& K, const Subgroup& H, std::uint64_t q,
                         std::mt19937_64* rng) {
  if (!H.is_subset_of(K)) throw Error(ErrorKind::NotCyclicQuotient, "H is not contained in K");
  for (Element k : K.members())
    if (!normalizes(G, H, k)) throw Error(ErrorKind::NotCyclicQuotient, "H is not normal in K");
  CosetOrbits out;
  out.index = K.order() / H.order();
  const std::uint64_t n = out.index;

  if (rng) {
    std::vector<Element> gens;
    for (Element k : K.members())
      if (order_mod(G, H, k) == n) gens.push_back(k);
    if (gens.empty()) throw Error(ErrorKind::NotCyclicQuotient, "K/H is not cyclic");
    out.generator = pick(gens, *rng);
  } else if (!is_cyclic_quotient(G, K, H, &out.generator)) {
    throw Error(ErrorKind::NotCyclicQuotient, "K/H is not cyclic");
  }

  const auto log = discrete_logs(G, K, H, out.generator);
  const auto cosets = generator_cosets(n, q);
  std::vector<std::size_t> coset_of(n, 0);
  for (std::size_t i = 0; i < cosets.size(); ++i)
    for (auto j : cosets[i].members) coset_of[j] = i;

  // multiplier m_g with g^{-1} a g = a^{m_g} mod H, for g normalizing H and K
  std::vector<Element> acting;
  std::vector<std::uint64_t> multiplier;
  for (Element g = 0; g < G.order(); ++g) {
    if (!normalizes(G, H, g) || !normalizes(G, K, g)) continue;
    acting.push_back(g);
    multiplier.push_back(log[G.conj(out.generator, g)]);
  }

  const std::size_t c = cosets.size();
  auto image = [&](std::size_t i, std::uint64_t m) {
    return coset_of[static_cast<std::uint64_t>(static_cast<unsigned __int128>(cosets[i].representative()) * m % n)];
  };

  std::vector<std::size_t> parent(c);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (auto m : multiplier)
    for (std::size_t i = 0; i < c; ++i) {
      const std::size_t a = find(i), b = find(image(i, m));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

  std::optional<std::vector<Element>> stabilizer;
  for (std::size_t i = 0; i < c; ++i) {
    std::vector<Element> stab;
    for (std::size_t g = 0; g < acting.size(); ++g)
      if (image(i, multiplier[g]) == i) stab.push_back(acting[g]);
    if (!stabilizer) {
      stabilizer = std::move(stab);
    } else if (*stabilizer != stab) {
      throw Error(ErrorKind::AssertionFailure,
                  "stabilizer of coset " + std::to_string(cosets[i].representative()) + " differs from that of " +
                      std::to_string(cosets[0].representative()));
    }
  }
  out.stabilizer = Subgroup(G.order(), std::move(*stabilizer));

  std::map<std::size_t, std::vector<std::size_t>> orbits;
  for (std::size_t i = 0; i < c; ++i) orbits[find(i)].push_back(i);
  for (const auto& [root, members] : orbits) out.representatives.push_back(cosets[rng ? pick(members, *rng) : root]);
  std::sort(out.representatives.begin(), out.representatives.end(),
            [](const auto& a, const auto& b) { return a.representative() < b.representative(); });
  return out;
}

AlgebraElement epsilon_idempotent(const GroupAlgebra& FG, const Subgroup& K, const Subgroup& H,
                                  const CyclotomicCoset& C, std::optional<Element> generator,
                                  std::optional<std::uint64_t> j) {
  const FiniteGroup& G = FG.group();
  const BaseField& F = FG.field();
  const std::uint64_t n = K.order() / H.order();
  if (C.modulus != n) throw Error(ErrorKind::InternalInconsistency, "coset modulus does not match [K:H]");
  const std::uint64_t p = F.characteristic();
  if (K.order() % p == 0) throw Error(ErrorKind::NotCoprime, "characteristic divides |K|");
  Element gen = 0;
  if (generator) {
    gen = *generator;
  } else if (!is_cyclic_quotient(G, K, H, &gen)) {
    throw Error(ErrorKind::NotCyclicQuotient, "K/H is not cyclic");
  }
  const std::uint64_t jj = j.value_or(C.representative());
  const auto log = discrete_logs(G, K, H, gen);
  const auto& traces = trace_table(FG.tower(), n);
  const Coeff inv_k = F.inv(F.from_int(static_cast<std::int64_t>(K.order() % p)));

  AlgebraElement eps = FG.zero();
  for (Element g : K.members()) {
    const std::uint64_t e = static_cast<std::uint64_t>(static_cast<unsigned __int128>(jj) * log[g] % n);
    eps.c[G.inv(g)] = F.mul(inv_k, traces[e]);
  }
  return eps;
}

AlgebraElement ec_idempotent(const GroupAlgebra& FG, const Subgroup& K, const Subgroup& H,
                             const CyclotomicCoset& C, std::optional<Element> generator,
                             std::optional<std::uint64_t> j) {
  const AlgebraElement eps = epsilon_idempotent(FG, K, H, C, generator, j);
  std::unordered_set<std::vector<Coeff>, VectorHash> seen;
  AlgebraElement sum = FG.zero();
  for (Element g = 0; g < FG.group().order(); ++g) {
    AlgebraElement c = conjugate(eps, g);
    if (seen.insert(c.c).second) sum = ga_add(sum, c);
  }
  return sum;
}

std::vector<ShodaTriple> shoda_triples(const FiniteGroup& G, const DecomposeOptions& options,
                                       std::mt19937_64* rng) {
  if (!is_metabelian(G)) throw Error(ErrorKind::NotMetabelian, "G'' is not trivial");
  const auto lattice = all_subgroups(G, options.cap);
  const Subgroup derived = derived_subgroup(G);

  std::vector<std::optional<Subgroup>> derived_of(lattice.size());
  auto derived_at = [&](std::size_t i) -> const Subgroup& {
    if (!derived_of[i]) derived_of[i] = derived_subgroup(G, lattice[i]);
    return *derived_of[i];
  };

  std::vector<ShodaTriple> out;
  for (const Subgroup& N : lattice) {
    if (!is_normal(G, N)) continue;
    std::vector<Element> gens = derived.members();
    gens.insert(gens.end(), N.members().begin(), N.members().end());
    const Subgroup lower = generated_subgroup(G, gens);  // G'N

    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < lattice.size(); ++i)
      if (lower.is_subset_of(lattice[i]) && derived_at(i).is_subset_of(N)) candidates.push_back(i);
    std::vector<std::size_t> maximal;
    for (auto i : candidates) {
      bool is_max = true;
      for (auto k : candidates)
        if (k != i && lattice[k].order() > lattice[i].order() && lattice[i].is_subset_of(lattice[k])) {
          is_max = false;
          break;
        }
      if (is_max) maximal.push_back(i);
    }
    std::size_t chosen = maximal.front();
    if (rng) {
      chosen = pick(maximal, *rng);
    } else {
      for (auto i : maximal)
        if (lattice[i].order() > lattice[chosen].order()) chosen = i;
    }
    const Subgroup& A = lattice[chosen];

    std::set<Subgroup> classes;
    for (const Subgroup& D : lattice) {
      if (!N.is_subset_of(D) || !D.is_subset_of(A)) continue;
      if (!is_cyclic_quotient(G, A, D)) continue;
      if (!(core(G, D) == N)) continue;
      const auto conjugates = subgroup_conjugates(G, D);
      if (!classes.insert(conjugates.front()).second) continue;
      out.push_back({N, rng ? pick(conjugates, *rng) : conjugates.front(), A});
    }
  }
  std::sort(out.begin(), out.end(), [](const ShodaTriple& x, const ShodaTriple& y) {
    if (!(x.N == y.N)) return x.N < y.N;
    return x.D < y.D;
  });
  return out;
}

ComponentParams component_params(const FiniteGroup& G, const ShodaTriple& triple, std::uint64_t q,
                                 std::mt19937_64* rng) {
  ComponentParams out;
  out.orbits = coset_orbits(G, triple.A, triple.D, q, rng);
  const Subgroup& E = out.orbits.stabilizer;
  if (!triple.A.is_subset_of(E))
    throw Error(ErrorKind::InternalInconsistency, "stabilizer does not contain A");
  const std::uint64_t s = mult_order(out.orbits.index, q);
  const std::uint64_t e = E.order() / triple.A.order();
  if (s % e != 0)
    throw Error(ErrorKind::InternalInconsistency, "[E:A] = " + std::to_string(e) + " does not divide ord = " +
                                                      std::to_string(s));
  out.d = G.order() / triple.A.order();
  out.l = s / e;
  return out;
}

std::uint64_t WedderburnSummary::dimension() const {
  std::uint64_t total = 0;
  for (const auto& [key, a] : alpha) total += a * key.first * key.first * key.second;
  return total;
}

WedderburnSummary summarize(std::uint64_t q, std::uint64_t group_order,
                            const std::vector<ComponentDescriptor>& components) {
  WedderburnSummary s;
  s.q = q;
  s.group_order = group_order;
  for (const auto& c : components) ++s.alpha[{c.d, c.l}];
  return s;
}

AutExpr aut_description(const WedderburnSummary& summary) {
  std::vector<AutExpr> terms;
  for (const auto& [key, a] : summary.alpha) {
    const auto [d, l] = key;
    AutExpr k = AutExpr::semidirect(AutExpr::special_linear(d, summary.q, l), AutExpr::cyclic(l));
    terms.push_back(AutExpr::semidirect(AutExpr::power(std::move(k), a), AutExpr::symmetric(a)));
  }
  return AutExpr::direct_sum(std::move(terms)).normalized();
}

Decomposition decompose(const GroupAlgebra& FG, const DecomposeOptions& options) {
  const FiniteGroup& G = FG.group();
  const std::uint64_t q = FG.tower().q();
  if (gcd_u64(q, G.order()) != 1)
    throw Error(ErrorKind::NotSemisimple,
                "gcd(q, |G|) = gcd(" + std::to_string(q) + ", " + std::to_string(G.order()) + ") != 1");

  std::optional<std::mt19937_64> rng_storage;
  if (options.seed) rng_storage.emplace(*options.seed);
  std::mt19937_64* rng = rng_storage ? &*rng_storage : nullptr;
  return decompose_triples(FG, shoda_triples(G, options, rng), options, rng);
}

Decomposition decompose_triples(const GroupAlgebra& FG, std::vector<ShodaTriple> triples,
                                const DecomposeOptions& options, std::mt19937_64* rng) {
  const FiniteGroup& G = FG.group();
  const std::uint64_t q = FG.tower().q();
  Decomposition dec;
  dec.triples = std::move(triples);

  struct Work {
    std::size_t triple;
    CyclotomicCoset coset;
    Element generator;
    std::uint64_t j;
    std::uint64_t d, l;
  };
  std::vector<Work> work;
  for (std::size_t t = 0; t < dec.triples.size(); ++t) {
    const auto params = component_params(G, dec.triples[t], q, rng);
    for (const auto& C : params.orbits.representatives) {
      const std::uint64_t j = rng ? pick(C.members, *rng) : C.representative();
      work.push_back({t, C, params.orbits.generator, j, params.d, params.l});
    }
  }

  dec.components.resize(work.size());
  const auto count = static_cast<std::int64_t>(work.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    const Work& w = work[static_cast<std::size_t>(i)];
    const ShodaTriple& T = dec.triples[w.triple];
    dec.components[static_cast<std::size_t>(i)] = {w.d, w.l, ec_idempotent(FG, T.A, T.D, w.coset, w.generator, w.j),
                                                   w.triple, w.coset};
  }

  dec.summary = summarize(q, G.order(), dec.components);
  dec.aut = aut_description(dec.summary);
  if (options.check_invariants) check_decomposition(FG, dec, options.check_ideal_dimensions);
  return dec;
}

void check_decomposition(const GroupAlgebra& FG, const Decomposition& dec, bool ideal_dimensions) {
  const auto& comps = dec.components;
  auto fail = [](const std::string& what) { throw Error(ErrorKind::AssertionFailure, what); };

  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& e = comps[i].idempotent;
    if (is_zero(e)) fail("idempotent #" + std::to_string(i) + " is zero");
    if (!is_idempotent(e)) fail("idempotent #" + std::to_string(i) + " does not square to itself");
    if (!is_central(e)) fail("idempotent #" + std::to_string(i) + " is not central");
  }

  // pairwise products; report the first failing pair in (i, j) order
  const auto k = static_cast<std::int64_t>(comps.size());
  std::vector<char> bad(comps.size() * comps.size(), 0);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < k; ++i)
    for (std::int64_t j = i + 1; j < k; ++j)
      if (!are_orthogonal(comps[i].idempotent, comps[j].idempotent)) bad[i * k + j] = 1;
  for (std::int64_t i = 0; i < k; ++i)
    for (std::int64_t j = i + 1; j < k; ++j)
      if (bad[i * k + j]) fail("idempotents #" + std::to_string(i) + " and #" + std::to_string(j) + " are not orthogonal");

  AlgebraElement sum = FG.zero();
  for (const auto& c : comps) sum = ga_add(sum, c.idempotent);
  if (sum != FG.one()) {
    std::size_t g = 0;
    while (sum.c[g] == FG.one().c[g]) ++g;
    fail("idempotents do not sum to 1 (coefficient of " + FG.group().label(static_cast<Element>(g)) + " is " +
         format_coeff(FG.field(), sum.c[g]) + ")");
  }

  if (dec.summary.dimension() != FG.group().order())
    fail("sum of alpha d^2 l is " + std::to_string(dec.summary.dimension()) + ", expected " +
         std::to_string(FG.group().order()));

  if (ideal_dimensions) {
    std::vector<std::size_t> dims(comps.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < k; ++i) dims[i] = ideal_dimension(comps[i].idempotent);
    for (std::size_t i = 0; i < comps.size(); ++i)
      if (dims[i] != comps[i].d * comps[i].d * comps[i].l)
        fail("ideal of idempotent #" + std::to_string(i) + " has dimension " + std::to_string(dims[i]) +
             ", expected d^2 l = " + std::to_string(comps[i].d * comps[i].d * comps[i].l));
  }
}

}  // namespace fqg
