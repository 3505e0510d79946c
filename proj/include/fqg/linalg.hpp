#pragma once

// Small dense linear algebra over a BaseField.

#include <cstddef>
#include <optional>
#include <vector>

#include "fqg/field.hpp"

namespace fqg {

using Vector = std::vector<Coeff>;

/// Rank of the matrix whose rows are given.
std::size_t rank(const BaseField& F, std::vector<Vector> rows);

/// A growing list of vectors kept in echelon form.  insert() either adds an
/// independent vector or reports how it combines the earlier insertions.
class LinearSpan {
 public:
  LinearSpan(const BaseField& F, std::size_t dim) : F_(&F), dim_(dim) {}

  /// nullopt when v was independent (and is now part of the span);
  /// otherwise c with v = sum_i c[i] * (i-th inserted vector).
  std::optional<Vector> insert(const Vector& v);
  std::size_t size() const { return count_; }

 private:
  struct Row {
    Vector v;        // reduced vector, pivot entry 1
    Vector combo;    // v as a combination of inserted vectors
    std::size_t pivot;
  };
  const BaseField* F_;
  std::size_t dim_;
  std::size_t count_ = 0;
  std::vector<Row> rows_;
};

/// Basis of {c : sum_i c[i] rows[i] = 0}.
std::vector<Vector> left_kernel(const BaseField& F, const std::vector<Vector>& rows);

}  // namespace fqg
