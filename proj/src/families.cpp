#include "fqg/families.hpp"

#include "fqg/error.hpp"
#include "fqg/field.hpp"
#include "fqg/group_algebra.hpp"

namespace fqg {

namespace {

std::uint64_t pow2(std::uint64_t e) { return std::uint64_t{1} << e; }

void require(unsigned m, std::uint64_t q) {
  if (q % 2 == 0) throw Error(ErrorKind::EvenQ, "q = " + std::to_string(q) + " is even");
  if (m < 2) throw Error(ErrorKind::BadPresentation, "closed forms need m >= 2");
}

// One display term F_{q^l}^{(count)} or M_d(F_{q^l})^{(count)}.
struct Term {
  std::uint64_t d, l, count;
};

WedderburnSummary collect(std::uint64_t q, unsigned m, const std::vector<Term>& terms) {
  WedderburnSummary s{q, pow2(m + 2), {}};
  for (const auto& t : terms)
    if (t.count > 0) s.alpha[{t.d, t.l}] += t.count;
  return s;
}

std::vector<Term> d1_terms(unsigned m, const Lambda& L) {
  const std::uint64_t lam = L.value;
  std::vector<Term> out;
  if (L.branch == 1) {
    if (m <= lam) return {{1, 1, pow2(m + 1)}, {2, 1, pow2(m - 1)}};
    if (m == lam + 1) return {{1, 1, pow2(m + 1)}, {2, 2, pow2(m - 2)}};
    out.push_back({1, 1, pow2(lam + 2)});
    for (std::uint64_t a = lam + 1; a <= m - 1; ++a) out.push_back({1, pow2(a - lam), pow2(lam + 1)});
    out.push_back({2, pow2(m - lam), pow2(lam - 1)});
    return out;
  }
  if (m <= lam + 1) return {{1, 1, 8}, {1, 2, pow2(m) - 4}, {2, 2, pow2(m - 2)}};
  if (m == lam + 2) return {{1, 1, 8}, {1, 2, pow2(m) - 4}, {2, 4, pow2(m - 3)}};
  out.push_back({1, 1, 8});
  out.push_back({1, 2, pow2(lam + 2) - 4});
  for (std::uint64_t a = lam + 2; a <= m - 1; ++a) out.push_back({1, pow2(a - lam), pow2(lam + 1)});
  out.push_back({2, pow2(m - lam), pow2(lam - 1)});
  return out;
}

std::vector<Term> d2_terms(unsigned m, const Lambda& L) {
  const std::uint64_t lam = L.value;
  std::vector<Term> out;
  if (L.branch == 1) {
    if (m <= lam) return {{1, 1, pow2(m + 1)}, {2, 1, pow2(m - 1)}};
    out.push_back({1, 1, pow2(lam + 1)});
    for (std::uint64_t a = lam + 1; a <= m; ++a) out.push_back({1, pow2(a - lam), pow2(lam)});
    out.push_back({2, pow2(m - lam), pow2(lam - 1)});
    return out;
  }
  if (m <= lam + 1) return {{1, 1, 4}, {1, 2, pow2(m) - 2}, {2, 2, pow2(m - 2)}};
  out.push_back({1, 1, 4});
  out.push_back({1, 2, pow2(lam + 1) - 2});
  for (std::uint64_t a = lam + 2; a <= m; ++a) out.push_back({1, pow2(a - lam), pow2(lam)});
  out.push_back({2, pow2(m - lam), pow2(lam - 1)});
  return out;
}

AutExpr sym(std::uint64_t n) { return AutExpr::symmetric(n); }

// Z_l^{(n)} x| S_n
AutExpr zwreath(std::uint64_t l, std::uint64_t n) {
  return AutExpr::semidirect(AutExpr::power(AutExpr::cyclic(l), n), sym(n));
}

// (SL_2(F_{q^l}) x| Z_l)^{(n)} x| S_n
AutExpr slwreath(std::uint64_t q, std::uint64_t l, std::uint64_t n) {
  auto base = l == 1 ? AutExpr::special_linear(2, q, 1)
                     : AutExpr::semidirect(AutExpr::special_linear(2, q, l), AutExpr::cyclic(l));
  return AutExpr::semidirect(AutExpr::power(std::move(base), n), sym(n));
}

AutExpr h_lambda(unsigned m, std::uint64_t q, std::uint64_t lam) {
  return slwreath(q, pow2(m - lam), pow2(lam - 1));
}

}  // namespace

std::string to_string(Family f) { return f == Family::D1 ? "D1" : "D2"; }

FiniteGroup family_group(Family f, unsigned m) { return f == Family::D1 ? d1_group(m) : d2_group(m); }

Lambda lambda_of(std::uint64_t q) {
  if (q % 2 == 0) throw Error(ErrorKind::EvenQ, "q = " + std::to_string(q) + " is even");
  Lambda L;
  L.branch = q % 4 == 1 ? 1 : -1;
  std::uint64_t x = L.branch == 1 ? q - 1 : q + 1;
  while (x % 2 == 0) {
    x /= 2;
    ++L.value;
  }
  return L;
}

WedderburnSummary d1_closed_form(unsigned m, std::uint64_t q) {
  require(m, q);
  return collect(q, m, d1_terms(m, lambda_of(q)));
}

WedderburnSummary d2_closed_form(unsigned m, std::uint64_t q) {
  require(m, q);
  return collect(q, m, d2_terms(m, lambda_of(q)));
}

WedderburnSummary closed_form(Family f, unsigned m, std::uint64_t q) {
  return f == Family::D1 ? d1_closed_form(m, q) : d2_closed_form(m, q);
}

AutExpr d1_aut_closed_form(unsigned m, std::uint64_t q) {
  require(m, q);
  const Lambda L = lambda_of(q);
  const std::uint64_t lam = L.value;
  std::vector<AutExpr> t;
  if (L.branch == 1) {
    if (m <= lam) {
      t = {sym(pow2(m + 1)), slwreath(q, 1, pow2(m - 1))};
    } else if (m == lam + 1) {
      t = {sym(pow2(m + 1)), slwreath(q, 2, pow2(m - 2))};
    } else {
      t.push_back(sym(pow2(lam + 2)));
      for (std::uint64_t a = lam + 1; a <= m - 1; ++a) t.push_back(zwreath(pow2(a - lam), pow2(lam + 1)));
      t.push_back(h_lambda(m, q, lam));
    }
  } else {
    if (m <= lam + 1) {
      t = {sym(8), zwreath(2, pow2(m) - 4), slwreath(q, 2, pow2(m - 2))};
    } else if (m == lam + 2) {
      t = {sym(8), zwreath(2, pow2(m) - 4), slwreath(q, 4, pow2(m - 3))};
    } else {
      t = {sym(8), zwreath(2, pow2(lam + 2) - 4)};
      for (std::uint64_t a = lam + 2; a <= m - 1; ++a) t.push_back(zwreath(pow2(a - lam), pow2(lam + 1)));
      t.push_back(h_lambda(m, q, lam));
    }
  }
  return AutExpr::direct_sum(std::move(t)).normalized();
}

AutExpr d2_aut_closed_form(unsigned m, std::uint64_t q) {
  require(m, q);
  const Lambda L = lambda_of(q);
  const std::uint64_t lam = L.value;
  std::vector<AutExpr> t;
  if (L.branch == 1) {
    if (m <= lam) {
      t = {sym(pow2(m + 1)), slwreath(q, 1, pow2(m - 1))};
    } else {
      t.push_back(sym(pow2(lam + 1)));
      for (std::uint64_t a = lam + 1; a <= m; ++a) t.push_back(zwreath(pow2(a - lam), pow2(lam)));
      t.push_back(h_lambda(m, q, lam));
    }
  } else {
    if (m <= lam + 1) {
      t = {sym(4), zwreath(2, pow2(m) - 2), slwreath(q, 2, pow2(m - 2))};
    } else {
      t = {sym(4), zwreath(2, pow2(lam + 1) - 2)};
      for (std::uint64_t a = lam + 2; a <= m; ++a) t.push_back(zwreath(pow2(a - lam), pow2(lam)));
      t.push_back(h_lambda(m, q, lam));
    }
  }
  return AutExpr::direct_sum(std::move(t)).normalized();
}

AutExpr aut_closed_form(Family f, unsigned m, std::uint64_t q) {
  return f == Family::D1 ? d1_aut_closed_form(m, q) : d2_aut_closed_form(m, q);
}

std::vector<Subgroup> d1_normal_subgroup_list(const FiniteGroup& G, unsigned m) {
  if (m < 2) throw Error(ErrorKind::BadPresentation, "the list needs m >= 2");
  const Element t = 1, x = static_cast<Element>(pow2(m)), y = static_cast<Element>(pow2(m + 1));
  auto tp = [&](std::uint64_t e) { return G.pow(t, static_cast<std::int64_t>(pow2(e))); };
  const Element xy = G.mul(x, y), top = tp(m - 1);

  std::vector<std::vector<Element>> gens;
  for (unsigned a = 0; a < m; ++a) {
    gens.push_back({tp(a), x});
    gens.push_back({tp(a), y});
    gens.push_back({tp(a), xy});
    gens.push_back({tp(a), x, y});
  }
  for (unsigned b = 0; b + 1 < m; ++b) {
    const Element tb = tp(b);
    gens.push_back({G.mul(tb, x)});
    gens.push_back({G.mul(tb, y)});
    gens.push_back({top, G.mul(tb, xy)});
    gens.push_back({top, x, G.mul(tb, y)});
    gens.push_back({top, G.mul(tb, x), y});
    gens.push_back({G.mul(tb, x), G.mul(tb, y)});
  }
  for (unsigned c = 0; c < m; ++c) gens.push_back({tp(c)});

  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Subgroup S = generated_subgroup(G, gens[i]);
    if (!is_normal(G, S)) throw Error(ErrorKind::AssertionFailure, "entry #" + std::to_string(i) + " is not normal");
    for (std::size_t j = 0; j < out.size(); ++j)
      if (out[j] == S)
        throw Error(ErrorKind::AssertionFailure,
                    "entry #" + std::to_string(i) + " repeats entry #" + std::to_string(j));
    out.push_back(std::move(S));
  }
  return out;
}

FamilyComparison compare_family(Family f, unsigned m, const FieldTower& field, const DecomposeOptions& options) {
  const std::uint64_t q = field.q();
  FamilyComparison c;
  c.family = f;
  c.m = m;
  c.q = q;
  c.closed = closed_form(f, m, q);
  c.closed_aut = aut_closed_form(f, m, q);
  c.closed_dimension_ok = c.closed.dimension() == pow2(m + 2);
  GroupAlgebra FG(family_group(f, m), field);
  const auto dec = decompose(FG, options);
  c.engine = dec.summary;
  c.engine_aut = dec.aut;
  return c;
}

}  // namespace fqg
