#pragma once

// Primitive central idempotents of F_q[G] for metabelian G from triples
// (N, D, A) of subgroups, and the Wedderburn / Aut summaries derived from them.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "fqg/aut.hpp"
#include "fqg/group.hpp"
#include "fqg/group_algebra.hpp"

namespace fqg {

/// A q-cyclotomic coset of units mod n.  For n = 1 the single coset {0}.
struct CyclotomicCoset {
  std::uint64_t modulus = 1;
  std::vector<std::uint64_t> members;  // sorted

  std::uint64_t representative() const { return members.front(); }
  friend bool operator==(const CyclotomicCoset&, const CyclotomicCoset&) = default;
  friend auto operator<=>(const CyclotomicCoset& a, const CyclotomicCoset& b) {
    return a.members <=> b.members;
  }
};

/// Orbits of j -> qj on the units mod n, sorted by least member.  Throws
/// NotCoprime.
std::vector<CyclotomicCoset> generator_cosets(std::uint64_t n, std::uint64_t q);

/// Exponents e(g) of gH relative to the generator of K/H, for g in K;
/// entries outside K are unset (~0).
std::vector<std::uint64_t> discrete_logs(const FiniteGroup& G, const Subgroup& K, const Subgroup& H,
                                         Element generator);

struct CosetOrbits {
  std::vector<CyclotomicCoset> representatives;  // one coset per orbit
  Subgroup stabilizer;                           // E_G(K/H)
  Element generator = 0;                         // fixed generator of K/H
  std::uint64_t index = 1;                       // [K:H]
};

/// Orbits of the generator cosets of K/H under conjugation by
/// N_G(H) ∩ N_G(K), and their common stabilizer.  Without rng the generator
/// is the least-index one and each orbit is represented by its coset with the
/// least member; rng picks both at random instead.  Throws NotCyclicQuotient,
/// AssertionFailure when the stabilizer depends on the coset.
CosetOrbits coset_orbits(const FiniteGroup& G, const Subgroup& K, const Subgroup& H, std::uint64_t q,
                         std::mt19937_64* rng = nullptr);

/// |K|^{-1} sum_{g in K} tr(zeta^{j e(g)}) g^{-1}, with zeta the canonical
/// primitive [K:H]-th root of unity.  generator/j default to the least-index
/// generator of K/H and the least member of C.
AlgebraElement epsilon_idempotent(const GroupAlgebra& FG, const Subgroup& K, const Subgroup& H,
                                  const CyclotomicCoset& C, std::optional<Element> generator = {},
                                  std::optional<std::uint64_t> j = {});

/// Sum of the distinct G-conjugates of epsilon_idempotent(...).
AlgebraElement ec_idempotent(const GroupAlgebra& FG, const Subgroup& K, const Subgroup& H,
                             const CyclotomicCoset& C, std::optional<Element> generator = {},
                             std::optional<std::uint64_t> j = {});

/// (N, D, A): N normal, N <= D <= A, A/N maximal abelian in G/N over (G/N)',
/// A/D cyclic, D/N core-free in G/N.
struct ShodaTriple {
  Subgroup N, D, A;
  friend bool operator==(const ShodaTriple&, const ShodaTriple&) = default;
};

struct DecomposeOptions {
  /// Randomizes every choice the result should not depend on: A among the
  /// maximal candidates, the conjugacy representative of D, the generator of
  /// A/D, the orbit representatives and the coset member j.
  std::optional<std::uint64_t> seed;
  std::size_t cap = kDefaultSubgroupCap;
  /// Idempotent, central, orthogonal, sum = 1, dimension identity.
  bool check_invariants = true;
  /// Also compare each ideal dimension against d^2 l (slower).
  bool check_ideal_dimensions = false;
};

/// Sorted by (|N|, N, |D|, D).  Throws NotMetabelian.
std::vector<ShodaTriple> shoda_triples(const FiniteGroup& G, const DecomposeOptions& options = {},
                                       std::mt19937_64* rng = nullptr);

struct ComponentParams {
  std::uint64_t d = 1;  // [G:A]
  std::uint64_t l = 1;  // ord_{[A:D]}(q) / [E:A]
  CosetOrbits orbits;
};

/// Throws InternalInconsistency if A is not inside E or the division is
/// not exact.
ComponentParams component_params(const FiniteGroup& G, const ShodaTriple& triple, std::uint64_t q,
                                 std::mt19937_64* rng = nullptr);

/// (d, l) -> alpha_{d,l}
using AlphaMap = std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t>;

struct WedderburnSummary {
  std::uint64_t q = 0;
  std::uint64_t group_order = 0;
  AlphaMap alpha;

  /// sum alpha d^2 l
  std::uint64_t dimension() const;
  friend bool operator==(const WedderburnSummary& a, const WedderburnSummary& b) {
    return a.q == b.q && a.alpha == b.alpha;
  }
};

struct ComponentDescriptor {
  std::uint64_t d = 1, l = 1;
  AlgebraElement idempotent;
  std::size_t triple = 0;  // index into Decomposition::triples
  CyclotomicCoset coset;
};

struct Decomposition {
  WedderburnSummary summary;
  std::vector<ShodaTriple> triples;
  std::vector<ComponentDescriptor> components;
  AutExpr aut;
};

/// Throws NotSemisimple, NotMetabelian, AssertionFailure.
Decomposition decompose(const GroupAlgebra& FG, const DecomposeOptions& options = {});

/// The same from a given triple list (the specialized paths supply their
/// own).  rng, when set, randomizes the generator, orbit representatives and j.
Decomposition decompose_triples(const GroupAlgebra& FG, std::vector<ShodaTriple> triples,
                                const DecomposeOptions& options = {}, std::mt19937_64* rng = nullptr);

/// Checks every decomposition invariant; throws AssertionFailure naming the
/// first violation and its witnesses.
void check_decomposition(const GroupAlgebra& FG, const Decomposition& dec, bool ideal_dimensions);

/// ⊕_{(d,l)} (SL_d(F_{q^l}) ⋊ Z_l)^{(α)} ⋊ S_α, normalized.
AutExpr aut_description(const WedderburnSummary& summary);

/// Summary from (d, l) descriptors.
WedderburnSummary summarize(std::uint64_t q, std::uint64_t group_order,
                            const std::vector<ComponentDescriptor>& components);

}  // namespace fqg
