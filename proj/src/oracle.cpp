#include "fqg/oracle.hpp"

#include <algorithm>

#include "fqg/error.hpp"
#include "fqg/linalg.hpp"

namespace fqg {

namespace {

void require_semisimple(const FiniteGroup& G, std::uint64_t q) {
  if (gcd_u64(q, G.order()) != 1)
    throw Error(ErrorKind::NotSemisimple,
                "gcd(" + std::to_string(q) + ", " + std::to_string(G.order()) + ") != 1");
}

AlgebraElement algebra_pow(const AlgebraElement& x, std::uint64_t e, const AlgebraElement& unit) {
  AlgebraElement result = unit;
  AlgebraElement base = x;
  while (e > 0) {
    if (e & 1) result = ga_mul(result, base);
    base = ga_mul(base, base);
    e >>= 1;
  }
  return result;
}

// Split block e using z e: returns the refined blocks, or {e} when the
// minimal polynomial of z e on e Z is irreducible.
std::vector<AlgebraElement> split_with(const AlgebraElement& e, const AlgebraElement& z) {
  const BaseField& F = e.ring->field();
  const AlgebraElement ze = ga_mul(z, e);
  LinearSpan span(F, e.c.size());
  std::vector<AlgebraElement> powers{e};
  Poly mu;
  while (true) {
    auto dep = span.insert(powers.back().c);
    if (dep) {
      // powers.back() = sum dep[i] powers[i]
      mu.assign(powers.size(), 0);
      for (std::size_t i = 0; i < dep->size(); ++i) mu[i] = F.neg((*dep)[i]);
      mu.back() = F.one();
      break;
    }
    powers.push_back(ga_mul(powers.back(), ze));
  }
  if (poly::degree(mu) <= 1) return {e};
  const auto factors = poly::factor(F, mu);
  for (const auto& f : factors)
    if (f.multiplicity > 1)
      throw Error(ErrorKind::NotSemisimple, "minimal polynomial of a central element is not squarefree");
  if (factors.size() == 1) return {e};

  std::vector<AlgebraElement> out;
  for (const auto& f : factors) {
    const Poly cofactor = poly::divmod(F, mu, f.factor).first;
    // s cofactor + t f = 1, so s cofactor is 1 mod f and 0 mod the rest
    const auto g = poly::xgcd(F, cofactor, f.factor);
    const Poly u = poly::mod(F, poly::mul(F, g.s, cofactor), mu);
    AlgebraElement ei = e.ring->zero();
    for (std::size_t i = 0; i < u.size(); ++i)
      if (u[i] != 0) ei = ga_add(ei, ga_scale(powers[i], u[i]));
    out.push_back(std::move(ei));
  }
  return out;
}

// An element of e Z fixed by x -> x^q and not in F_q e, if any.  The fixed
// ring of Frobenius on a product of fields has one dimension per factor.
std::optional<AlgebraElement> frobenius_witness(const AlgebraElement& e, const std::vector<AlgebraElement>& sums) {
  const BaseField& F = e.ring->field();
  const std::uint64_t q = e.ring->tower().q();
  LinearSpan span(F, e.c.size());
  std::vector<AlgebraElement> basis;
  for (const auto& z : sums) {
    AlgebraElement b = ga_mul(z, e);
    if (!span.insert(b.c)) basis.push_back(std::move(b));
  }
  if (basis.size() <= 1) return std::nullopt;
  std::vector<Vector> images;
  for (const auto& b : basis) {
    AlgebraElement y = ga_sub(algebra_pow(b, q, e), b);
    LinearSpan copy = span;
    auto coords = copy.insert(y.c);
    if (!coords) throw Error(ErrorKind::InternalInconsistency, "Frobenius image leaves the block");
    images.push_back(std::move(*coords));
  }
  for (const auto& c : left_kernel(F, images)) {
    AlgebraElement x = e.ring->zero();
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) x = ga_add(x, ga_scale(basis[i], c[i]));
    // x is a scalar multiple of e iff x and e are dependent
    LinearSpan pair(F, e.c.size());
    pair.insert(e.c);
    if (!pair.insert(x.c)) return x;
  }
  return std::nullopt;
}

}  // namespace

std::uint64_t q_class_count(const FiniteGroup& G, std::uint64_t q) {
  require_semisimple(G, q);
  const auto classes = conjugacy_classes(G);
  std::vector<std::size_t> class_of(G.order());
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (Element g : classes[i]) class_of[g] = i;
  std::vector<bool> seen(classes.size(), false);
  std::uint64_t orbits = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (seen[i]) continue;
    ++orbits;
    for (std::size_t c = i; !seen[c]; c = class_of[G.pow(classes[c].front(), static_cast<std::int64_t>(q % G.exponent()))])
      seen[c] = true;
  }
  return orbits;
}

std::vector<AlgebraElement> class_sums(const GroupAlgebra& FG) {
  std::vector<AlgebraElement> out;
  for (const auto& cls : conjugacy_classes(FG.group())) out.push_back(FG.indicator(cls));
  return out;
}

std::vector<AlgebraElement> center_split(const GroupAlgebra& FG) {
  require_semisimple(FG.group(), FG.tower().q());
  const auto sums = class_sums(FG);
  std::vector<AlgebraElement> blocks{FG.one()};

  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& z : sums) {
      std::vector<AlgebraElement> next;
      for (const auto& e : blocks) {
        auto parts = split_with(e, z);
        changed = changed || parts.size() > 1;
        for (auto& p : parts) next.push_back(std::move(p));
      }
      blocks = std::move(next);
    }
    if (changed) continue;
    // Class sums alone can leave a block that is a product of isomorphic
    // fields; a Frobenius-fixed element separates those.
    std::vector<AlgebraElement> next;
    for (const auto& e : blocks) {
      auto w = frobenius_witness(e, sums);
      if (!w) {
        next.push_back(e);
        continue;
      }
      auto parts = split_with(e, *w);
      if (parts.size() < 2) throw Error(ErrorKind::InternalInconsistency, "Frobenius-fixed element failed to split");
      changed = true;
      for (auto& p : parts) next.push_back(std::move(p));
    }
    blocks = std::move(next);
  }
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.c < b.c; });
  return blocks;
}

}  // namespace fqg
