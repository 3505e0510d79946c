#pragma once

// Finite groups as Cayley tables, plus the subgroup-lattice services the
// idempotent enumeration relies on.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace fqg {

/// Index of a group element; the identity is always 0.
using Element = std::uint32_t;

struct MetacyclicTag {
  std::uint64_t n, t, k, r;
  friend bool operator==(const MetacyclicTag&, const MetacyclicTag&) = default;
};
struct D1Tag {
  unsigned m;
  friend bool operator==(const D1Tag&, const D1Tag&) = default;
};
struct D2Tag {
  unsigned m;
  friend bool operator==(const D2Tag&, const D2Tag&) = default;
};
struct FileTag {
  friend bool operator==(const FileTag&, const FileTag&) = default;
};
using GroupMeta = std::variant<FileTag, MetacyclicTag, D1Tag, D2Tag>;

class FiniteGroup {
 public:
  /// Validates the table: index 0 must be the identity, every element needs
  /// a two-sided inverse, and the operation must be associative (checked
  /// exhaustively up to order 512 and on a fixed sample above).
  static FiniteGroup from_cayley(std::size_t order, std::vector<Element> table,
                                 std::vector<std::string> labels = {}, GroupMeta meta = FileTag{});

  std::size_t order() const { return order_; }
  Element identity() const { return 0; }
  Element mul(Element x, Element y) const { return table_[x * order_ + y]; }
  Element inv(Element x) const { return inv_[x]; }
  /// g^{-1} h g
  Element conj(Element h, Element g) const { return mul(inv_[g], mul(h, g)); }
  Element pow(Element x, std::int64_t e) const;
  std::uint64_t element_order(Element x) const { return elem_order_[x]; }
  std::uint64_t exponent() const;

  const std::vector<Element>& table() const { return table_; }
  std::span<const Element> row(Element x) const {
    return {table_.data() + static_cast<std::size_t>(x) * order_, order_};
  }
  /// Label of an element; "g<i>" when the group carries no labels.
  std::string label(Element x) const;
  const std::vector<std::string>& labels() const { return labels_; }
  const GroupMeta& meta() const { return meta_; }

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inv_;
  std::vector<std::uint64_t> elem_order_;
  std::vector<std::string> labels_;
  GroupMeta meta_;
};

/// G = <a, b | a^n = 1, b^t = a^k, b^{-1} a b = a^r>, element a^i b^j at
/// index j*n + i.  Throws BadPresentation unless r^t = 1 and k(r-1) = 0 mod n.
FiniteGroup metacyclic_group(std::uint64_t n, std::uint64_t t, std::uint64_t k, std::uint64_t r);

/// Type D1: x^2 = y^2 = t^{2^m} = 1, t central, yx = xy t^{2^{m-1}}.  Element
/// t^c x^e y^f at index c + 2^m (e + 2 f).
FiniteGroup d1_group(unsigned m);

/// Type D2 via its metacyclic form <x, y | x^{2^{m+1}}, y^2 = x^2,
/// y^{-1} x y = x^{2^m + 1}>.
FiniteGroup d2_group(unsigned m);

/// Closure of the given permutations (each a vector of images of 0..d-1).
/// Elements are sorted lexicographically, so the identity comes first.
FiniteGroup permutation_group(const std::vector<std::vector<std::uint32_t>>& generators);

/// Reads/writes the Cayley-table text format:
///   order N
///   N rows of N indices
///   label i name      (optional)
FiniteGroup read_cayley(std::istream& in);
FiniteGroup read_cayley_file(const std::string& path);
void write_cayley(std::ostream& out, const FiniteGroup& group);

/// A subgroup identified by its member set.
class Subgroup {
 public:
  Subgroup() = default;
  /// members need not be sorted; they are not checked for closure.
  Subgroup(std::size_t group_order, std::vector<Element> members);

  std::size_t order() const { return members_.size(); }
  const std::vector<Element>& members() const { return members_; }
  bool contains(Element x) const { return x < mask_.size() && mask_[x]; }
  bool is_subset_of(const Subgroup& other) const;
  bool is_trivial() const { return members_.size() == 1; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }
  /// Orders by (order, member list).
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.members_.size() != b.members_.size()) return a.members_.size() < b.members_.size();
    return a.members_ < b.members_;
  }

 private:
  std::vector<Element> members_;
  std::vector<bool> mask_;
};

struct SubgroupHash {
  std::size_t operator()(const Subgroup& s) const;
};

struct QuotientGroup {
  FiniteGroup table;
  Subgroup modulus;
  /// coset index of each parent element; cosets are numbered by least member
  std::vector<Element> coset_of;
  /// least element of each coset
  std::vector<Element> lift;
};

/// Default cap on the group order for lattice enumeration.
inline constexpr std::size_t kDefaultSubgroupCap = 512;

Subgroup whole_group(const FiniteGroup& G);
Subgroup trivial_subgroup(const FiniteGroup& G);
Subgroup generated_subgroup(const FiniteGroup& G, std::span<const Element> generators);
Subgroup cyclic_subgroup(const FiniteGroup& G, Element g);

/// Every subgroup exactly once, sorted by (order, members).  Throws
/// CapExceeded when |G| > cap.
std::vector<Subgroup> all_subgroups(const FiniteGroup& G, std::size_t cap = kDefaultSubgroupCap);

bool is_normal(const FiniteGroup& G, const Subgroup& H);
bool is_abelian(const FiniteGroup& G, const Subgroup& H);
bool is_abelian(const FiniteGroup& G);
std::vector<Subgroup> normal_subgroups(const FiniteGroup& G, std::size_t cap = kDefaultSubgroupCap);
/// Filter of a precomputed lattice.
std::vector<Subgroup> normal_subgroups(const FiniteGroup& G, const std::vector<Subgroup>& lattice);

/// [H, H] for a subgroup H (G' when H = G).
Subgroup derived_subgroup(const FiniteGroup& G, const Subgroup& H);
Subgroup derived_subgroup(const FiniteGroup& G);
Subgroup center(const FiniteGroup& G);
Subgroup centralizer(const FiniteGroup& G, const Subgroup& S);
Subgroup normalizer(const FiniteGroup& G, const Subgroup& S);
/// H^g = g^{-1} H g
Subgroup conjugate_subgroup(const FiniteGroup& G, const Subgroup& H, Element g);
/// The G-orbit of H under conjugation, sorted.
std::vector<Subgroup> subgroup_conjugates(const FiniteGroup& G, const Subgroup& H);
/// Intersection of all conjugates of H.
Subgroup core(const FiniteGroup& G, const Subgroup& H);
QuotientGroup quotient(const FiniteGroup& G, const Subgroup& N);
/// Classes sorted by least member; members sorted.
std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& G);
bool is_metabelian(const FiniteGroup& G);
/// Greedy generating set: scan elements in index order, keep those not yet
/// generated.
std::vector<Element> generating_set(const FiniteGroup& G);

/// The largest abelian subgroup containing G', ties broken by the lex-least
/// member list.  Throws NotMetabelian.
Subgroup maximal_abelian_over_derived(const FiniteGroup& G, std::size_t cap = kDefaultSubgroupCap);

/// True when H/K is cyclic; K must be normal in H.  On success sets the
/// least-index element generating H/K.
bool is_cyclic_quotient(const FiniteGroup& G, const Subgroup& H, const Subgroup& K,
                        Element* generator = nullptr);

/// Backtracking search over images of a greedy generating set.  Small
/// groups only.
bool are_isomorphic(const FiniteGroup& A, const FiniteGroup& B);

}  // namespace fqg
