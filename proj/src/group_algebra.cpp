#include "fqg/group_algebra.hpp"

#include <sstream>

#include "fqg/error.hpp"
#include "fqg/linalg.hpp"

namespace fqg {

std::size_t AlgebraElementHash::operator()(const AlgebraElement& x) const {
  std::size_t h = 0x84222325cbf29ce4ull;
  for (Coeff c : x.c) h = (h ^ c) * 0x100000001b3ull;
  return h;
}

GroupAlgebra::GroupAlgebra(FiniteGroup group, FieldTower field)
    : group_(std::make_shared<const FiniteGroup>(std::move(group))), field_(std::move(field)) {}

AlgebraElement GroupAlgebra::zero() const { return {this, std::vector<Coeff>(dimension(), 0)}; }

AlgebraElement GroupAlgebra::one() const { return basis(0); }

AlgebraElement GroupAlgebra::basis(Element g) const {
  auto x = zero();
  x.c[g] = field().one();
  return x;
}

AlgebraElement GroupAlgebra::indicator(const std::vector<Element>& elements) const {
  auto x = zero();
  for (Element g : elements) x.c[g] = field().add(x.c[g], field().one());
  return x;
}

AlgebraElement GroupAlgebra::from_coeffs(std::vector<Coeff> c) const {
  if (c.size() != dimension())
    throw Error(ErrorKind::MixedContext, "coefficient vector has the wrong length");
  return {this, std::move(c)};
}

void require_same_ring(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.ring == nullptr || x.ring != y.ring)
    throw Error(ErrorKind::MixedContext, "operands belong to different group algebras");
}

AlgebraElement ga_add(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_ring(x, y);
  const BaseField& F = x.ring->field();
  AlgebraElement z = x;
  for (std::size_t i = 0; i < z.c.size(); ++i) z.c[i] = F.add(z.c[i], y.c[i]);
  return z;
}

AlgebraElement ga_sub(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_ring(x, y);
  const BaseField& F = x.ring->field();
  AlgebraElement z = x;
  for (std::size_t i = 0; i < z.c.size(); ++i) z.c[i] = F.sub(z.c[i], y.c[i]);
  return z;
}

AlgebraElement ga_scale(const AlgebraElement& x, Coeff s) {
  const BaseField& F = x.ring->field();
  AlgebraElement z = x;
  for (auto& c : z.c) c = F.mul(c, s);
  return z;
}

AlgebraElement ga_mul_serial(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_ring(x, y);
  const FiniteGroup& G = x.ring->group();
  const BaseField& F = x.ring->field();
  AlgebraElement z = x.ring->zero();
  const std::size_t n = G.order();
  for (Element a = 0; a < n; ++a) {
    if (x.c[a] == 0) continue;
    const auto row = G.row(a);
    for (Element b = 0; b < n; ++b)
      if (y.c[b] != 0) z.c[row[b]] = F.add(z.c[row[b]], F.mul(x.c[a], y.c[b]));
  }
  return z;
}

AlgebraElement ga_mul(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_ring(x, y);
  const FiniteGroup& G = x.ring->group();
  const BaseField& F = x.ring->field();
  const auto n = static_cast<std::int64_t>(G.order());
  AlgebraElement z = x.ring->zero();

  // (xy)[g] = sum_a x[a] y[a^{-1} g]
  if (F.is_prime_field()) {
    const std::uint64_t p = F.characteristic();
#pragma omp parallel for schedule(static) if (n >= 64)
    for (std::int64_t g = 0; g < n; ++g) {
      std::uint64_t acc = 0;
      for (Element a = 0; a < static_cast<Element>(n); ++a) {
        if (x.c[a] == 0) continue;
        acc += static_cast<std::uint64_t>(x.c[a]) * y.c[G.mul(G.inv(a), static_cast<Element>(g))];
        // p < 2^20, so 2^23 products fit before reducing
        if ((a & 0x3fff) == 0x3fff) acc %= p;
      }
      z.c[g] = static_cast<Coeff>(acc % p);
    }
  } else {
#pragma omp parallel for schedule(static) if (n >= 64)
    for (std::int64_t g = 0; g < n; ++g) {
      Coeff acc = 0;
      for (Element a = 0; a < static_cast<Element>(n); ++a)
        if (x.c[a] != 0) acc = F.add(acc, F.mul(x.c[a], y.c[G.mul(G.inv(a), static_cast<Element>(g))]));
      z.c[g] = acc;
    }
  }
  return z;
}

AlgebraElement conjugate(const AlgebraElement& x, Element g) {
  const FiniteGroup& G = x.ring->group();
  AlgebraElement z = x.ring->zero();
  for (Element h = 0; h < G.order(); ++h) z.c[G.conj(h, g)] = x.c[h];
  return z;
}

bool is_zero(const AlgebraElement& x) {
  for (Coeff c : x.c)
    if (c != 0) return false;
  return true;
}

bool is_idempotent(const AlgebraElement& x) { return ga_mul(x, x) == x; }

bool is_central(const AlgebraElement& x) {
  for (Element g : generating_set(x.ring->group()))
    if (conjugate(x, g) != x) return false;
  return true;
}

bool are_orthogonal(const AlgebraElement& x, const AlgebraElement& y) {
  return is_zero(ga_mul(x, y)) && is_zero(ga_mul(y, x));
}

std::size_t ideal_dimension(const AlgebraElement& e) {
  const FiniteGroup& G = e.ring->group();
  const std::size_t n = G.order();
  // row g: coefficients of g e, (g e)[g h] = e[h]
  std::vector<Vector> rows(n, Vector(n, 0));
  for (Element g = 0; g < n; ++g) {
    const auto row = G.row(g);
    for (Element h = 0; h < n; ++h) rows[g][row[h]] = e.c[h];
  }
  return rank(e.ring->field(), std::move(rows));
}

std::string format_coeff(const BaseField& F, Coeff c) {
  std::ostringstream out;
  out << '(';
  const auto d = F.digits(c);
  for (std::size_t i = 0; i < d.size(); ++i) out << (i ? "," : "") << d[i];
  out << ')';
  return out.str();
}

std::string format(const AlgebraElement& x) {
  const FiniteGroup& G = x.ring->group();
  const BaseField& F = x.ring->field();
  std::ostringstream out;
  bool first = true;
  for (Element g = 0; g < G.order(); ++g) {
    if (x.c[g] == 0) continue;
    if (!first) out << " + ";
    out << format_coeff(F, x.c[g]) << '*' << G.label(g);
    first = false;
  }
  if (first) return "0";
  return out.str();
}

}  // namespace fqg
