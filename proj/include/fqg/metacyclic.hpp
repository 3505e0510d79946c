#pragma once

// Closed-form normal subgroups and Shoda data for
// G = <a, b | a^n = 1, b^t = a^k, b^{-1} a b = a^r>.

#include <cstdint>
#include <memory>
#include <vector>

#include "fqg/engine.hpp"
#include "fqg/group.hpp"

namespace fqg {

struct MetacyclicParams {
  std::uint64_t n = 1, t = 1, k = 0, r = 1;

  /// Throws BadPresentation unless r^t = 1 and k(r-1) = 0 (mod n).
  void validate() const;
  friend bool operator==(const MetacyclicParams&, const MetacyclicParams&) = default;
};

/// H_{v,i,c} = <a^v, a^i b^c>
struct NormalTriple {
  std::uint64_t v, i, c;
  friend bool operator==(const NormalTriple&, const NormalTriple&) = default;
};

/// Indexes H_{v, alpha, beta o_v}.
struct XTriple {
  std::uint64_t v, alpha, beta;
  friend bool operator==(const XTriple&, const XTriple&) = default;
};

/// ord_v(r); o_1 = 1.
std::uint64_t o_v(const MetacyclicParams& P, std::uint64_t v);

/// <a^v, a^i b^c> inside G = metacyclic_group(P); c may equal t.
Subgroup h_subgroup(const FiniteGroup& G, const MetacyclicParams& P, std::uint64_t v, std::uint64_t i,
                    std::uint64_t c);
/// <a, b^{o_v}>
Subgroup g_ov(const FiniteGroup& G, const MetacyclicParams& P, std::uint64_t v);

/// (w, i, c) in B_o: w | n, w | r^o - 1, o c | t, w | k + i t/(o c).
bool in_b(const MetacyclicParams& P, std::uint64_t o, std::uint64_t w, std::uint64_t i, std::uint64_t c);

/// Every (v, i, c) with v | n, c | t, 0 <= i < v, v | k + i t/c, o_v | c and
/// v | i(r-1); ordered by v, then c, then i.
std::vector<NormalTriple> normal_triples(const MetacyclicParams& P);

/// All of X_{v,i,c}, alpha ranging over 0..v-1, ordered by (beta, alpha).
std::vector<XTriple> x_set(const MetacyclicParams& P, const NormalTriple& N);
/// beta equal and alpha1 = alpha2 r^j (mod v) for some j.
bool x_equivalent(const MetacyclicParams& P, const XTriple& x, const XTriple& y);
/// One representative (least alpha) per ~-class.
std::vector<XTriple> x_classes(const MetacyclicParams& P, const NormalTriple& N);

/// Generators (u, e, delta) of core(H_{u, alpha, beta o}) = <a^u, a^e b^delta>
/// with delta = beta u o / gcd(alpha(r-1), u) and e = alpha delta/(beta o).
NormalTriple core_formula(const MetacyclicParams& P, std::uint64_t o, std::uint64_t u, std::uint64_t alpha,
                          std::uint64_t beta);

/// The triples (H_{v,i,c}, H_{v,alpha,beta o_v}, G_{o_v}) in normal_triples order.
std::vector<ShodaTriple> metacyclic_triples(const FiniteGroup& G, const MetacyclicParams& P);

/// Builds metacyclic_group(P) over the given field and decomposes through the
/// closed-form triples.  Throws NotSemisimple, BadPresentation.
struct MetacyclicDecomposition {
  std::shared_ptr<GroupAlgebra> algebra;
  Decomposition decomposition;
};
MetacyclicDecomposition metacyclic_decompose(const MetacyclicParams& P, const FieldTower& field,
                                             const DecomposeOptions& options = {});

}  // namespace fqg
