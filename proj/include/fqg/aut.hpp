#pragma once

// Symbolic terms for Aut(F_q[G]); nothing here builds an actual group.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fqg {

class AutExpr {
 public:
  enum class Kind { Trivial, DirectSum, Semidirect, SpecialLinear, Cyclic, Symmetric, Power };

  static AutExpr trivial();
  static AutExpr direct_sum(std::vector<AutExpr> terms);
  /// left ⋊ right
  static AutExpr semidirect(AutExpr left, AutExpr right);
  /// SL_d(F_{q^l})
  static AutExpr special_linear(std::uint64_t d, std::uint64_t q, std::uint64_t l);
  static AutExpr cyclic(std::uint64_t n);
  static AutExpr symmetric(std::uint64_t n);
  /// base^{(n)}, the n-fold direct product
  static AutExpr power(AutExpr base, std::uint64_t n);

  Kind kind() const { return kind_; }
  const std::vector<AutExpr>& children() const { return children_; }

  /// Drops trivial factors: SL_1, Z_1, S_0, S_1, x^(1) = x, x^(0) = 1,
  /// flattens nested sums and sorts summands by sort_key(), then rendering.
  AutExpr normalized() const;
  bool is_trivial() const { return kind_ == Kind::Trivial; }

  /// ASCII rendering, e.g. "S_8 (+) (SL_2(F_5)^(2) x| S_2)".
  std::string to_string() const;

  /// (d, l) of the component a summand describes: taken from its leftmost
  /// SL_d(F_{q^l}) or Z_l, with a bare S_n counting as (1, 1).
  std::pair<std::uint64_t, std::uint64_t> sort_key() const;

  friend bool operator==(const AutExpr&, const AutExpr&) = default;

 private:
  Kind kind_ = Kind::Trivial;
  std::vector<AutExpr> children_;
  std::uint64_t d_ = 0, q_ = 0, l_ = 0, n_ = 0;
};

}  // namespace fqg
