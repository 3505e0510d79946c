#include "fqg/aut.hpp"

#include <algorithm>

namespace fqg {

AutExpr AutExpr::trivial() { return AutExpr{}; }

AutExpr AutExpr::direct_sum(std::vector<AutExpr> terms) {
  AutExpr e;
  e.kind_ = Kind::DirectSum;
  e.children_ = std::move(terms);
  return e;
}

AutExpr AutExpr::semidirect(AutExpr left, AutExpr right) {
  AutExpr e;
  e.kind_ = Kind::Semidirect;
  e.children_ = {std::move(left), std::move(right)};
  return e;
}

AutExpr AutExpr::special_linear(std::uint64_t d, std::uint64_t q, std::uint64_t l) {
  AutExpr e;
  e.kind_ = Kind::SpecialLinear;
  e.d_ = d;
  e.q_ = q;
  e.l_ = l;
  return e;
}

AutExpr AutExpr::cyclic(std::uint64_t n) {
  AutExpr e;
  e.kind_ = Kind::Cyclic;
  e.n_ = n;
  return e;
}

AutExpr AutExpr::symmetric(std::uint64_t n) {
  AutExpr e;
  e.kind_ = Kind::Symmetric;
  e.n_ = n;
  return e;
}

AutExpr AutExpr::power(AutExpr base, std::uint64_t n) {
  AutExpr e;
  e.kind_ = Kind::Power;
  e.children_ = {std::move(base)};
  e.n_ = n;
  return e;
}

AutExpr AutExpr::normalized() const {
  switch (kind_) {
    case Kind::Trivial:
      return trivial();
    case Kind::SpecialLinear:
      return d_ <= 1 ? trivial() : *this;
    case Kind::Cyclic:
    case Kind::Symmetric:
      return n_ <= 1 ? trivial() : *this;
    case Kind::Power: {
      AutExpr base = children_[0].normalized();
      if (base.is_trivial() || n_ == 0) return trivial();
      if (n_ == 1) return base;
      return power(std::move(base), n_);
    }
    case Kind::Semidirect: {
      AutExpr left = children_[0].normalized();
      AutExpr right = children_[1].normalized();
      if (left.is_trivial()) return right;
      if (right.is_trivial()) return left;
      return semidirect(std::move(left), std::move(right));
    }
    case Kind::DirectSum: {
      std::vector<AutExpr> flat;
      for (const auto& child : children_) {
        AutExpr c = child.normalized();
        if (c.is_trivial()) continue;
        if (c.kind_ == Kind::DirectSum) {
          for (auto& g : c.children_) flat.push_back(std::move(g));
        } else {
          flat.push_back(std::move(c));
        }
      }
      if (flat.empty()) return trivial();
      if (flat.size() == 1) return flat.front();
      std::stable_sort(flat.begin(), flat.end(), [](const AutExpr& a, const AutExpr& b) {
        const auto ka = a.sort_key(), kb = b.sort_key();
        if (ka != kb) return ka < kb;
        return a.to_string() < b.to_string();
      });
      return direct_sum(std::move(flat));
    }
  }
  return *this;
}

namespace {

std::string field_name(std::uint64_t q, std::uint64_t l) {
  if (l == 1) return "F_" + std::to_string(q);
  return "F_" + std::to_string(q) + "^" + std::to_string(l);
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> AutExpr::sort_key() const {
  switch (kind_) {
    case Kind::SpecialLinear:
      return {d_, l_};
    case Kind::Cyclic:
      return {1, n_};
    case Kind::Symmetric:
    case Kind::Trivial:
      return {1, 1};
    default:
      for (const auto& c : children_) {
        if (c.kind_ == Kind::Symmetric) continue;
        return c.sort_key();
      }
      return {1, 1};
  }
}

std::string AutExpr::to_string() const {
  auto wrapped = [](const AutExpr& e) {
    const bool atomic = e.kind_ == Kind::Trivial || e.kind_ == Kind::SpecialLinear ||
                        e.kind_ == Kind::Cyclic || e.kind_ == Kind::Symmetric;
    return atomic ? e.to_string() : "(" + e.to_string() + ")";
  };
  switch (kind_) {
    case Kind::Trivial:
      return "1";
    case Kind::SpecialLinear:
      return "SL_" + std::to_string(d_) + "(" + field_name(q_, l_) + ")";
    case Kind::Cyclic:
      return "Z_" + std::to_string(n_);
    case Kind::Symmetric:
      return "S_" + std::to_string(n_);
    case Kind::Power:
      return wrapped(children_[0]) + "^(" + std::to_string(n_) + ")";
    case Kind::Semidirect:
      return (children_[0].kind_ == Kind::Power ? children_[0].to_string() : wrapped(children_[0])) +
             " x| " + wrapped(children_[1]);
    case Kind::DirectSum: {
      std::string out;
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i) out += " (+) ";
        out += children_[i].kind_ == Kind::Semidirect ? "(" + children_[i].to_string() + ")"
                                                      : children_[i].to_string();
      }
      return out;
    }
  }
  return "?";
}

}  // namespace fqg
