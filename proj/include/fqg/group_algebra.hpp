#pragma once

// Dense arithmetic in the group algebra F_q[G].

#include <memory>
#include <string>
#include <vector>

#include "fqg/field.hpp"
#include "fqg/group.hpp"

namespace fqg {

class GroupAlgebra;

/// Coefficients indexed by group element; c.size() == |G|.
struct AlgebraElement {
  const GroupAlgebra* ring = nullptr;
  std::vector<Coeff> c;

  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
    return x.ring == y.ring && x.c == y.c;
  }
};

struct AlgebraElementHash {
  std::size_t operator()(const AlgebraElement& x) const;
};

class GroupAlgebra {
 public:
  GroupAlgebra(FiniteGroup group, FieldTower field);

  const FiniteGroup& group() const { return *group_; }
  const FieldTower& tower() const { return field_; }
  const BaseField& field() const { return field_.base(); }
  std::size_t dimension() const { return group_->order(); }

  AlgebraElement zero() const;
  AlgebraElement one() const;
  AlgebraElement basis(Element g) const;
  /// Sum of the listed elements.
  AlgebraElement indicator(const std::vector<Element>& elements) const;
  AlgebraElement from_coeffs(std::vector<Coeff> c) const;

 private:
  std::shared_ptr<const FiniteGroup> group_;
  FieldTower field_;
};

/// Throw MixedContext unless both elements live in the same algebra.
void require_same_ring(const AlgebraElement& x, const AlgebraElement& y);

AlgebraElement ga_add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement ga_sub(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement ga_scale(const AlgebraElement& x, Coeff s);
/// Convolution, parallel over output coefficients.
AlgebraElement ga_mul(const AlgebraElement& x, const AlgebraElement& y);
/// Reference convolution: scatter every product term, one thread.
AlgebraElement ga_mul_serial(const AlgebraElement& x, const AlgebraElement& y);

/// Linear extension of h -> g^{-1} h g.
AlgebraElement conjugate(const AlgebraElement& x, Element g);

bool is_zero(const AlgebraElement& x);
bool is_idempotent(const AlgebraElement& x);
bool is_central(const AlgebraElement& x);
/// xy = yx = 0
bool are_orthogonal(const AlgebraElement& x, const AlgebraElement& y);

/// F_q-dimension of the left ideal F_q[G] e, i.e. the rank of x -> x e.
std::size_t ideal_dimension(const AlgebraElement& e);

/// "(c)*label + ..." over nonzero coefficients in index order; "0" if none.
/// A coefficient prints as its coordinate tuple over F_p.
std::string format(const AlgebraElement& x);
std::string format_coeff(const BaseField& F, Coeff c);

}  // namespace fqg
