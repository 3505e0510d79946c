#include "fqg/group.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_set>

#include "fqg/error.hpp"
#include "fqg/field.hpp"

namespace fqg {

namespace {

constexpr std::size_t kExhaustiveAssociativity = 512;
constexpr std::size_t kAssociativitySamples = 200000;

std::string power_label(const std::string& symbol, std::uint64_t e) {
  if (e == 0) return "";
  if (e == 1) return symbol;
  return symbol + "^" + std::to_string(e);
}

std::uint64_t powmod_small(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * base % m);
    base = static_cast<std::uint64_t>(static_cast<unsigned __int128>(base) * base % m);
    e >>= 1;
  }
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup FiniteGroup::from_cayley(std::size_t order, std::vector<Element> table,
                                     std::vector<std::string> labels, GroupMeta meta) {
  if (order == 0) throw Error(ErrorKind::InvalidTable, "group order must be positive");
  if (table.size() != order * order)
    throw Error(ErrorKind::InvalidTable, "expected " + std::to_string(order * order) +
                                             " entries, got " + std::to_string(table.size()));
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] >= order)
      throw Error(ErrorKind::InvalidTable, "entry " + std::to_string(table[i]) + " at row " +
                                               std::to_string(i / order) + " column " +
                                               std::to_string(i % order) + " out of range");
  if (!labels.empty() && labels.size() != order)
    throw Error(ErrorKind::InvalidTable, "label count does not match order");

  FiniteGroup G;
  G.order_ = order;
  G.table_ = std::move(table);
  G.labels_ = std::move(labels);
  G.meta_ = meta;
  const std::size_t n = order;

  for (Element x = 0; x < n; ++x)
    if (G.mul(0, x) != x || G.mul(x, 0) != x)
      throw Error(ErrorKind::NoIdentity,
                  "element 0 is not a two-sided identity (witness " + std::to_string(x) + ")");

  G.inv_.assign(n, 0);
  for (Element x = 0; x < n; ++x) {
    const auto row = G.row(x);
    const auto it = std::find(row.begin(), row.end(), Element{0});
    if (it == row.end())
      throw Error(ErrorKind::NoInverse, "element " + std::to_string(x) + " has no right inverse");
    const Element y = static_cast<Element>(it - row.begin());
    if (G.mul(y, x) != 0)
      throw Error(ErrorKind::NoInverse, "element " + std::to_string(x) + " has right inverse " +
                                            std::to_string(y) + " that is not a left inverse");
    G.inv_[x] = y;
  }

  auto report = [](Element a, Element b, Element c) {
    throw Error(ErrorKind::NotAssociative, "(" + std::to_string(a) + "*" + std::to_string(b) +
                                               ")*" + std::to_string(c) + " != " +
                                               std::to_string(a) + "*(" + std::to_string(b) +
                                               "*" + std::to_string(c) + ")");
  };
  if (n <= kExhaustiveAssociativity) {
    // First violation in (a, b, c) lexicographic order, independent of the schedule.
    std::int64_t first = -1;
    const std::int64_t nn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic) reduction(max : first)
    for (std::int64_t a = nn - 1; a >= 0; --a) {
      for (std::int64_t b = 0; b < nn; ++b) {
        const Element ab = G.mul(static_cast<Element>(a), static_cast<Element>(b));
        const auto row_ab = G.row(ab);
        for (std::int64_t c = 0; c < nn; ++c) {
          if (row_ab[c] != G.mul(static_cast<Element>(a), G.mul(static_cast<Element>(b),
                                                                 static_cast<Element>(c)))) {
            // encode so that the max picks the lexicographically least triple
            const std::int64_t code = ((nn - 1 - a) * nn + (nn - 1 - b)) * nn + (nn - 1 - c);
            first = std::max(first, code);
            b = nn;
            break;
          }
        }
      }
    }
    if (first >= 0) {
      const std::int64_t c = nn - 1 - first % nn;
      const std::int64_t b = nn - 1 - (first / nn) % nn;
      const std::int64_t a = nn - 1 - first / (nn * nn);
      report(static_cast<Element>(a), static_cast<Element>(b), static_cast<Element>(c));
    }
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (std::size_t i = 0; i < kAssociativitySamples; ++i) {
      const Element a = pick(rng), b = pick(rng), c = pick(rng);
      if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c))) report(a, b, c);
    }
  }

  G.elem_order_.assign(n, 1);
  for (Element x = 0; x < n; ++x) {
    std::uint64_t k = 1;
    for (Element y = x; y != 0; y = G.mul(y, x)) ++k;
    G.elem_order_[x] = x == 0 ? 1 : k;
  }
  return G;
}

Element FiniteGroup::pow(Element x, std::int64_t e) const {
  const auto ord = static_cast<std::int64_t>(elem_order_[x]);
  std::int64_t r = e % ord;
  if (r < 0) r += ord;
  Element out = 0;
  Element base = x;
  auto k = static_cast<std::uint64_t>(r);
  while (k > 0) {
    if (k & 1) out = mul(out, base);
    base = mul(base, base);
    k >>= 1;
  }
  return out;
}

std::uint64_t FiniteGroup::exponent() const {
  std::uint64_t e = 1;
  for (auto o : elem_order_) e = std::lcm(e, o);
  return e;
}

std::string FiniteGroup::label(Element x) const {
  if (!labels_.empty()) return labels_[x];
  return "g" + std::to_string(x);
}

// ---------------------------------------------------------------------------
// Constructors

FiniteGroup metacyclic_group(std::uint64_t n, std::uint64_t t, std::uint64_t k, std::uint64_t r) {
  if (n == 0 || t == 0) throw Error(ErrorKind::BadPresentation, "n and t must be positive");
  const std::uint64_t rr = r % n;
  if (powmod_small(rr, t, n) != 1 % n)
    throw Error(ErrorKind::BadPresentation, "r^t != 1 (mod n)");
  const std::uint64_t kk = k % n;
  if (static_cast<unsigned __int128>(kk) * ((rr + n - 1) % n) % n != 0)
    throw Error(ErrorKind::BadPresentation, "k(r-1) != 0 (mod n)");

  // b a^i = a^{i r^{-1}} b, and r^{-1} = r^{t-1}.
  std::vector<std::uint64_t> rinv_pow(t, 1 % n);
  const std::uint64_t rinv = powmod_small(rr, t - 1, n);
  for (std::uint64_t j = 1; j < t; ++j)
    rinv_pow[j] = static_cast<std::uint64_t>(static_cast<unsigned __int128>(rinv_pow[j - 1]) * rinv % n);

  const std::size_t order = n * t;
  std::vector<Element> table(order * order);
  for (std::uint64_t j1 = 0; j1 < t; ++j1)
    for (std::uint64_t i1 = 0; i1 < n; ++i1)
      for (std::uint64_t j2 = 0; j2 < t; ++j2)
        for (std::uint64_t i2 = 0; i2 < n; ++i2) {
          std::uint64_t i = (i1 + i2 * rinv_pow[j1]) % n;
          std::uint64_t j = j1 + j2;
          if (j >= t) {
            j -= t;
            i = (i + kk) % n;
          }
          table[(j1 * n + i1) * order + (j2 * n + i2)] = static_cast<Element>(j * n + i);
        }
  std::vector<std::string> labels(order);
  for (std::uint64_t j = 0; j < t; ++j)
    for (std::uint64_t i = 0; i < n; ++i) {
      std::string l = power_label("a", i) + power_label("b", j);
      labels[j * n + i] = l.empty() ? "1" : l;
    }
  return FiniteGroup::from_cayley(order, std::move(table), std::move(labels),
                                  MetacyclicTag{n, t, k, r});
}

FiniteGroup d1_group(unsigned m) {
  if (m == 0) throw Error(ErrorKind::BadPresentation, "m must be at least 1");
  const std::uint64_t N = std::uint64_t{1} << m;
  const std::uint64_t half = N / 2;
  const std::size_t order = 4 * N;
  auto index = [&](std::uint64_t c, std::uint64_t e, std::uint64_t f) {
    return static_cast<Element>(c + N * (e + 2 * f));
  };
  std::vector<Element> table(order * order);
  for (std::uint64_t f1 = 0; f1 < 2; ++f1)
    for (std::uint64_t e1 = 0; e1 < 2; ++e1)
      for (std::uint64_t c1 = 0; c1 < N; ++c1)
        for (std::uint64_t f2 = 0; f2 < 2; ++f2)
          for (std::uint64_t e2 = 0; e2 < 2; ++e2)
            for (std::uint64_t c2 = 0; c2 < N; ++c2) {
              // y^{f1} x^{e2} = x^{e2} y^{f1} t^{2^{m-1} f1 e2}
              const std::uint64_t c = (c1 + c2 + half * f1 * e2) % N;
              table[index(c1, e1, f1) * order + index(c2, e2, f2)] =
                  index(c, (e1 + e2) % 2, (f1 + f2) % 2);
            }
  std::vector<std::string> labels(order);
  for (std::uint64_t f = 0; f < 2; ++f)
    for (std::uint64_t e = 0; e < 2; ++e)
      for (std::uint64_t c = 0; c < N; ++c) {
        std::string l = power_label("t", c) + power_label("x", e) + power_label("y", f);
        labels[index(c, e, f)] = l.empty() ? "1" : l;
      }
  return FiniteGroup::from_cayley(order, std::move(table), std::move(labels), D1Tag{m});
}

FiniteGroup d2_group(unsigned m) {
  if (m == 0) throw Error(ErrorKind::BadPresentation, "m must be at least 1");
  const std::uint64_t n = std::uint64_t{2} << m;
  const FiniteGroup base = metacyclic_group(n, 2, 2, (n / 2) + 1);
  std::vector<std::string> labels(base.order());
  for (std::uint64_t j = 0; j < 2; ++j)
    for (std::uint64_t i = 0; i < n; ++i) {
      std::string l = power_label("x", i) + power_label("y", j);
      labels[j * n + i] = l.empty() ? "1" : l;
    }
  return FiniteGroup::from_cayley(base.order(), base.table(), std::move(labels), D2Tag{m});
}

FiniteGroup permutation_group(const std::vector<std::vector<std::uint32_t>>& generators) {
  if (generators.empty()) return FiniteGroup::from_cayley(1, {0});
  const std::size_t degree = generators.front().size();
  using Perm = std::vector<std::uint32_t>;
  auto compose = [&](const Perm& p, const Perm& q) {  // apply p, then q
    Perm r(degree);
    for (std::size_t i = 0; i < degree; ++i) r[i] = q[p[i]];
    return r;
  };
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::map<Perm, Element> seen{{id, 0}};
  std::deque<Perm> queue{id};
  while (!queue.empty()) {
    Perm p = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      Perm r = compose(p, g);
      if (seen.emplace(r, 0).second) queue.push_back(std::move(r));
    }
  }
  std::vector<Perm> elems;
  for (auto& [perm, idx] : seen) {
    idx = static_cast<Element>(elems.size());
    elems.push_back(perm);
  }
  const std::size_t n = elems.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = seen.at(compose(elems[a], elems[b]));
  return FiniteGroup::from_cayley(n, std::move(table));
}

FiniteGroup read_cayley(std::istream& in) {
  std::string word;
  std::size_t order = 0;
  if (!(in >> word) || word != "order" || !(in >> order) || order == 0)
    throw Error(ErrorKind::ParseError, "expected 'order N' header");
  std::vector<Element> table(order * order);
  for (std::size_t i = 0; i < table.size(); ++i) {
    long long v = 0;
    if (!(in >> v)) throw Error(ErrorKind::ParseError, "table truncated at entry " + std::to_string(i));
    if (v < 0 || static_cast<std::size_t>(v) >= order)
      throw Error(ErrorKind::InvalidTable, "entry " + std::to_string(v) + " out of range");
    table[i] = static_cast<Element>(v);
  }
  std::vector<std::string> labels;
  while (in >> word) {
    if (word != "label") throw Error(ErrorKind::ParseError, "unexpected token '" + word + "'");
    std::size_t idx = 0;
    std::string name;
    if (!(in >> idx >> name) || idx >= order)
      throw Error(ErrorKind::ParseError, "malformed label line");
    if (labels.empty()) {
      labels.resize(order);
      for (std::size_t i = 0; i < order; ++i) labels[i] = "g" + std::to_string(i);
    }
    labels[idx] = name;
  }
  return FiniteGroup::from_cayley(order, std::move(table), std::move(labels));
}

FiniteGroup read_cayley_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  return read_cayley(in);
}

void write_cayley(std::ostream& out, const FiniteGroup& group) {
  const std::size_t n = group.order();
  out << "order " << n << '\n';
  for (Element x = 0; x < n; ++x) {
    const auto row = group.row(x);
    for (std::size_t y = 0; y < n; ++y) out << (y ? " " : "") << row[y];
    out << '\n';
  }
  for (std::size_t i = 0; i < group.labels().size(); ++i)
    out << "label " << i << ' ' << group.labels()[i] << '\n';
}

// ---------------------------------------------------------------------------
// Subgroups

Subgroup::Subgroup(std::size_t group_order, std::vector<Element> members)
    : members_(std::move(members)), mask_(group_order, false) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Element x : members_) mask_[x] = true;
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  if (order() > other.order()) return false;
  return std::all_of(members_.begin(), members_.end(), [&](Element x) { return other.contains(x); });
}

std::size_t SubgroupHash::operator()(const Subgroup& s) const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Element x : s.members()) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

Subgroup whole_group(const FiniteGroup& G) {
  std::vector<Element> all(G.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(G.order(), std::move(all));
}

Subgroup trivial_subgroup(const FiniteGroup& G) { return Subgroup(G.order(), {0}); }

namespace {

// Closure of seed under right multiplication by gens.
std::vector<Element> close(const FiniteGroup& G, std::vector<Element> seed,
                           std::span<const Element> gens) {
  std::vector<bool> in(G.order(), false);
  for (Element x : seed) in[x] = true;
  if (!in[0]) {
    in[0] = true;
    seed.push_back(0);
  }
  std::vector<Element> members = seed;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Element x = members[i];
    for (Element g : gens) {
      const Element y = G.mul(x, g);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  return members;
}

}  // namespace

Subgroup generated_subgroup(const FiniteGroup& G, std::span<const Element> generators) {
  return Subgroup(G.order(), close(G, {0}, generators));
}

Subgroup cyclic_subgroup(const FiniteGroup& G, Element g) {
  std::vector<Element> members{0};
  for (Element y = g; y != 0; y = G.mul(y, g)) members.push_back(y);
  return Subgroup(G.order(), std::move(members));
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& G, std::size_t cap) {
  if (G.order() > cap)
    throw Error(ErrorKind::CapExceeded,
                "group order " + std::to_string(G.order()) + " exceeds cap " + std::to_string(cap));

  struct Entry {
    Subgroup group;
    std::vector<Element> gens;
  };
  std::unordered_set<Subgroup, SubgroupHash> seen;
  std::vector<Entry> cyclics;
  for (Element g = 0; g < G.order(); ++g) {
    Subgroup c = cyclic_subgroup(G, g);
    if (seen.insert(c).second) cyclics.push_back({std::move(c), {g}});
  }

  std::vector<Entry> frontier = cyclics;
  while (!frontier.empty()) {
    std::vector<std::vector<Entry>> found(frontier.size());
    const auto count = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
      const Entry& h = frontier[static_cast<std::size_t>(i)];
      std::unordered_set<Subgroup, SubgroupHash> local;
      for (const Entry& c : cyclics) {
        if (c.group.is_subset_of(h.group)) continue;
        std::vector<Element> gens = h.gens;
        gens.push_back(c.gens.front());
        Subgroup join(G.order(), close(G, h.group.members(), gens));
        if (local.insert(join).second)
          found[static_cast<std::size_t>(i)].push_back({std::move(join), std::move(gens)});
      }
    }
    std::vector<Entry> next;
    for (auto& batch : found)
      for (auto& e : batch)
        if (seen.insert(e.group).second) next.push_back(std::move(e));
    frontier = std::move(next);
  }
  std::vector<Subgroup> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> generating_set(const FiniteGroup& G) {
  std::vector<Element> gens;
  std::vector<Element> members{0};
  std::vector<bool> in(G.order(), false);
  in[0] = true;
  for (Element x = 1; x < G.order(); ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    members = close(G, members, gens);
    for (Element y : members) in[y] = true;
  }
  return gens;
}

bool is_normal(const FiniteGroup& G, const Subgroup& H) {
  for (Element g : generating_set(G))
    for (Element h : H.members())
      if (!H.contains(G.conj(h, g))) return false;
  return true;
}

bool is_abelian(const FiniteGroup& G, const Subgroup& H) {
  const auto& m = H.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (G.mul(m[i], m[j]) != G.mul(m[j], m[i])) return false;
  return true;
}

bool is_abelian(const FiniteGroup& G) {
  const auto gens = generating_set(G);
  for (Element a : gens)
    for (Element b : gens)
      if (G.mul(a, b) != G.mul(b, a)) return false;
  return true;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& G, const std::vector<Subgroup>& lattice) {
  std::vector<Subgroup> out;
  for (const auto& H : lattice)
    if (is_normal(G, H)) out.push_back(H);
  return out;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& G, std::size_t cap) {
  return normal_subgroups(G, all_subgroups(G, cap));
}

Subgroup derived_subgroup(const FiniteGroup& G, const Subgroup& H) {
  std::vector<Element> commutators;
  std::vector<bool> seen(G.order(), false);
  for (Element x : H.members())
    for (Element y : H.members()) {
      const Element c = G.mul(G.mul(G.inv(x), G.inv(y)), G.mul(x, y));
      if (!seen[c]) {
        seen[c] = true;
        commutators.push_back(c);
      }
    }
  return generated_subgroup(G, commutators);
}

Subgroup derived_subgroup(const FiniteGroup& G) { return derived_subgroup(G, whole_group(G)); }

Subgroup center(const FiniteGroup& G) { return centralizer(G, whole_group(G)); }

Subgroup centralizer(const FiniteGroup& G, const Subgroup& S) {
  std::vector<Element> out;
  for (Element g = 0; g < G.order(); ++g) {
    bool commutes = true;
    for (Element s : S.members())
      if (G.mul(g, s) != G.mul(s, g)) {
        commutes = false;
        break;
      }
    if (commutes) out.push_back(g);
  }
  return Subgroup(G.order(), std::move(out));
}

Subgroup conjugate_subgroup(const FiniteGroup& G, const Subgroup& H, Element g) {
  std::vector<Element> out;
  out.reserve(H.order());
  for (Element h : H.members()) out.push_back(G.conj(h, g));
  return Subgroup(G.order(), std::move(out));
}

Subgroup normalizer(const FiniteGroup& G, const Subgroup& S) {
  std::vector<Element> out;
  for (Element g = 0; g < G.order(); ++g) {
    bool fixes = true;
    for (Element s : S.members())
      if (!S.contains(G.conj(s, g))) {
        fixes = false;
        break;
      }
    if (fixes) out.push_back(g);
  }
  return Subgroup(G.order(), std::move(out));
}

std::vector<Subgroup> subgroup_conjugates(const FiniteGroup& G, const Subgroup& H) {
  std::unordered_set<Subgroup, SubgroupHash> orbit;
  for (Element g = 0; g < G.order(); ++g) orbit.insert(conjugate_subgroup(G, H, g));
  std::vector<Subgroup> out(orbit.begin(), orbit.end());
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup core(const FiniteGroup& G, const Subgroup& H) {
  std::vector<bool> keep(G.order(), false);
  for (Element h : H.members()) keep[h] = true;
  for (Element g = 0; g < G.order(); ++g)
    for (Element h : H.members())
      if (keep[h] && !H.contains(G.conj(h, G.inv(g)))) keep[h] = false;
  std::vector<Element> out;
  for (Element h : H.members())
    if (keep[h]) out.push_back(h);
  return Subgroup(G.order(), std::move(out));
}

QuotientGroup quotient(const FiniteGroup& G, const Subgroup& N) {
  const std::size_t n = G.order();
  constexpr Element kUnset = ~Element{0};
  std::vector<Element> coset_of(n, kUnset);
  std::vector<Element> lift;
  for (Element g = 0; g < n; ++g) {
    if (coset_of[g] != kUnset) continue;
    const auto idx = static_cast<Element>(lift.size());
    lift.push_back(g);
    for (Element h : N.members()) coset_of[G.mul(g, h)] = idx;
  }
  const std::size_t m = lift.size();
  std::vector<Element> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table[a * m + b] = coset_of[G.mul(lift[a], lift[b])];
  std::vector<std::string> labels;
  if (!G.labels().empty())
    for (Element g : lift) labels.push_back(G.label(g) + "N");
  return QuotientGroup{FiniteGroup::from_cayley(m, std::move(table), std::move(labels)), N,
                       std::move(coset_of), std::move(lift)};
}

std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& G) {
  const std::size_t n = G.order();
  std::vector<bool> done(n, false);
  std::vector<std::vector<Element>> classes;
  for (Element x = 0; x < n; ++x) {
    if (done[x]) continue;
    std::vector<Element> cls;
    for (Element g = 0; g < n; ++g) {
      const Element y = G.conj(x, g);
      if (!done[y]) {
        done[y] = true;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

bool is_metabelian(const FiniteGroup& G) {
  const Subgroup d1 = derived_subgroup(G);
  return derived_subgroup(G, d1).is_trivial();
}

Subgroup maximal_abelian_over_derived(const FiniteGroup& G, std::size_t cap) {
  if (!is_metabelian(G)) throw Error(ErrorKind::NotMetabelian, "G'' is not trivial");
  const Subgroup derived = derived_subgroup(G);
  const auto lattice = all_subgroups(G, cap);
  // lattice is sorted by (order, members): take the largest order, least members.
  std::optional<Subgroup> best;
  for (const auto& A : lattice) {
    if (!derived.is_subset_of(A) || !is_abelian(G, A)) continue;
    if (!best || A.order() > best->order()) best = A;
  }
  return *best;
}

bool is_cyclic_quotient(const FiniteGroup& G, const Subgroup& H, const Subgroup& K,
                        Element* generator) {
  const std::size_t n = H.order() / K.order();
  for (Element x : H.members()) {
    std::size_t k = 1;
    Element y = x;
    while (!K.contains(y)) {
      y = G.mul(y, x);
      ++k;
    }
    if (k == n) {
      if (generator) *generator = x;
      return true;
    }
  }
  return false;
}

bool are_isomorphic(const FiniteGroup& A, const FiniteGroup& B) {
  if (A.order() != B.order()) return false;
  const std::size_t n = A.order();
  const auto gens = generating_set(A);
  std::vector<std::vector<Element>> choices(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Element y = 0; y < n; ++y)
      if (B.element_order(y) == A.element_order(gens[i])) choices[i].push_back(y);

  std::vector<Element> images(gens.size());
  auto try_map = [&]() {
    constexpr Element kUnset = ~Element{0};
    std::vector<Element> phi(n, kUnset);
    std::vector<bool> hit(n, false);
    phi[0] = 0;
    hit[0] = true;
    std::vector<Element> order{0};
    for (std::size_t i = 0; i < order.size(); ++i) {
      const Element x = order[i];
      for (std::size_t g = 0; g < gens.size(); ++g) {
        const Element y = A.mul(x, gens[g]);
        const Element img = B.mul(phi[x], images[g]);
        if (phi[y] == kUnset) {
          if (hit[img]) return false;
          phi[y] = img;
          hit[img] = true;
          order.push_back(y);
        } else if (phi[y] != img) {
          return false;
        }
      }
    }
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (phi[A.mul(x, y)] != B.mul(phi[x], phi[y])) return false;
    return true;
  };
  std::function<bool(std::size_t)> search = [&](std::size_t depth) {
    if (depth == gens.size()) return try_map();
    for (Element y : choices[depth]) {
      images[depth] = y;
      if (search(depth + 1)) return true;
    }
    return false;
  };
  return search(0);
}

}  // namespace fqg
