#include "fqg/field.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "fqg/error.hpp"

namespace fqg {

namespace {

// Multiplication tables are indexed by field element, so q is bounded.
constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 20;

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::InvalidTable: return "InvalidTable";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::BadPresentation: return "BadPresentation";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::MixedContext: return "MixedContext";
    case ErrorKind::NotCyclicQuotient: return "NotCyclicQuotient";
    case ErrorKind::NotMetabelian: return "NotMetabelian";
    case ErrorKind::NotSemisimple: return "NotSemisimple";
    case ErrorKind::EvenQ: return "EvenQ";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::AssertionFailure: return "AssertionFailure";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::uint64_t mult_order(std::uint64_t n, std::uint64_t q) {
  if (n == 0) throw Error(ErrorKind::NotCoprime, "modulus must be positive");
  if (n == 1) return 1;
  if (gcd_u64(n, q % n) != 1)
    throw Error(ErrorKind::NotCoprime,
                "gcd(" + std::to_string(n) + ", " + std::to_string(q) + ") != 1");
  const std::uint64_t base = q % n;
  std::uint64_t v = base;
  std::uint64_t s = 1;
  while (v != 1) {
    v = mulmod_u64(v, base, n);
    ++s;
  }
  return s;
}

PrimePower PrimePower::make(std::uint64_t p, unsigned a) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (a == 0) throw Error(ErrorKind::ParseError, "exponent must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < a; ++i) {
    if (q > std::numeric_limits<std::uint64_t>::max() / p)
      throw Error(ErrorKind::ResourceLimit, "p^a overflows");
    q *= p;
  }
  return PrimePower{p, a, q};
}

// ---------------------------------------------------------------------------
// BaseField

BaseField::BaseField(std::uint64_t p) : p_(p), a_(1), q_(p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (q_ > kMaxFieldSize)
    throw Error(ErrorKind::ResourceLimit, "field size " + std::to_string(q_) + " too large");
  build_tables();
}

BaseField::BaseField(std::uint64_t p, unsigned a) : p_(p), a_(a) {
  const PrimePower pp = PrimePower::make(p, a);
  q_ = pp.q;
  if (q_ > kMaxFieldSize)
    throw Error(ErrorKind::ResourceLimit, "field size " + std::to_string(q_) + " too large");
  if (a_ > 1) {
    const BaseField prime(p);
    modulus_ = poly::least_irreducible(prime, a_);
  }
  build_tables();
}

Coeff BaseField::add_slow(Coeff x, Coeff y) const {
  Coeff out = 0;
  Coeff place = 1;
  for (unsigned i = 0; i < a_; ++i) {
    const std::uint32_t dx = x % p_, dy = y % p_;
    out += static_cast<Coeff>(((dx + dy) % p_) * place);
    x /= static_cast<Coeff>(p_);
    y /= static_cast<Coeff>(p_);
    place *= static_cast<Coeff>(p_);
  }
  return out;
}

Coeff BaseField::neg(Coeff x) const {
  if (a_ == 1) return x == 0 ? 0 : static_cast<Coeff>(p_ - x);
  Coeff out = 0;
  Coeff place = 1;
  for (unsigned i = 0; i < a_; ++i) {
    const std::uint32_t d = x % p_;
    out += static_cast<Coeff>(((p_ - d) % p_) * place);
    x /= static_cast<Coeff>(p_);
    place *= static_cast<Coeff>(p_);
  }
  return out;
}

Coeff BaseField::inv(Coeff x) const {
  if (x == 0) throw Error(ErrorKind::InternalInconsistency, "inverse of zero");
  const std::uint32_t l = log_[x];
  return exp_[l == 0 ? 0 : static_cast<std::uint32_t>(q_ - 1) - l];
}

Coeff BaseField::pow(Coeff x, std::uint64_t e) const {
  if (e == 0) return 1;
  if (x == 0) return 0;
  return exp_[static_cast<std::uint32_t>(mulmod_u64(log_[x], e % (q_ - 1), q_ - 1))];
}

Coeff BaseField::from_int(std::int64_t v) const {
  const std::int64_t p = static_cast<std::int64_t>(p_);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<Coeff>(r);
}

std::vector<std::uint32_t> BaseField::digits(Coeff x) const {
  std::vector<std::uint32_t> out(a_);
  for (unsigned i = 0; i < a_; ++i) {
    out[i] = static_cast<std::uint32_t>(x % p_);
    x /= static_cast<Coeff>(p_);
  }
  return out;
}

void BaseField::build_tables() {
  // Raw multiplication of codes, used only while the tables are built.
  std::unique_ptr<BaseField> prime;
  if (a_ > 1) prime = std::make_unique<BaseField>(p_);
  auto raw_mul = [&](Coeff x, Coeff y) -> Coeff {
    if (a_ == 1) return static_cast<Coeff>(mulmod_u64(x, y, p_));
    Poly fx, fy;
    for (unsigned i = 0; i < a_; ++i) {
      fx.push_back(x % p_);
      fy.push_back(y % p_);
      x /= static_cast<Coeff>(p_);
      y /= static_cast<Coeff>(p_);
    }
    poly::normalize(fx);
    poly::normalize(fy);
    const Poly r = poly::mulmod(*prime, fx, fy, modulus_);
    Coeff out = 0, place = 1;
    for (std::size_t i = 0; i < r.size(); ++i) {
      out += r[i] * place;
      place *= static_cast<Coeff>(p_);
    }
    return out;
  };

  exp_.assign(q_, 0);
  log_.assign(q_, 0);
  if (q_ == 2) {
    exp_[0] = 1;
    log_[1] = 0;
    return;
  }
  for (Coeff g = 2; g < q_; ++g) {
    // Walk the powers of g; it is a generator iff it reaches q-1 distinct values.
    Coeff v = 1;
    std::uint64_t k = 0;
    bool ok = true;
    std::vector<bool> seen(q_, false);
    for (k = 0; k < q_ - 1; ++k) {
      if (seen[v]) {
        ok = false;
        break;
      }
      seen[v] = true;
      exp_[k] = v;
      v = raw_mul(v, g);
    }
    if (!ok || v != 1) continue;
    for (std::uint64_t i = 0; i < q_ - 1; ++i) log_[exp_[i]] = static_cast<std::uint32_t>(i);
    return;
  }
  throw Error(ErrorKind::InternalInconsistency, "no primitive element found");
}

// ---------------------------------------------------------------------------
// Polynomials

namespace poly {

void normalize(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly x() { return Poly{0, 1}; }

Poly constant(Coeff c) { return c == 0 ? Poly{} : Poly{c}; }

Poly add(const BaseField& F, const Poly& f, const Poly& g) {
  Poly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Coeff a = i < f.size() ? f[i] : 0;
    const Coeff b = i < g.size() ? g[i] : 0;
    r[i] = F.add(a, b);
  }
  normalize(r);
  return r;
}

Poly sub(const BaseField& F, const Poly& f, const Poly& g) {
  Poly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Coeff a = i < f.size() ? f[i] : 0;
    const Coeff b = i < g.size() ? g[i] : 0;
    r[i] = F.sub(a, b);
  }
  normalize(r);
  return r;
}

Poly scale(const BaseField& F, const Poly& f, Coeff c) {
  Poly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = F.mul(f[i], c);
  normalize(r);
  return r;
}

Poly mul(const BaseField& F, const Poly& f, const Poly& g) {
  if (f.empty() || g.empty()) return {};
  Poly r(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(f[i], g[j]));
  }
  normalize(r);
  return r;
}

std::pair<Poly, Poly> divmod(const BaseField& F, const Poly& f, const Poly& g) {
  if (g.empty()) throw Error(ErrorKind::InternalInconsistency, "polynomial division by zero");
  Poly r = f;
  normalize(r);
  if (r.size() < g.size()) return {Poly{}, r};
  Poly quo(r.size() - g.size() + 1, 0);
  const Coeff lead_inv = F.inv(g.back());
  for (std::size_t k = r.size(); k-- >= g.size();) {
    const Coeff c = F.mul(r[k], lead_inv);
    const std::size_t shift = k - (g.size() - 1);
    quo[shift] = c;
    if (c != 0)
      for (std::size_t j = 0; j < g.size(); ++j) r[shift + j] = F.sub(r[shift + j], F.mul(c, g[j]));
    if (k == 0) break;
  }
  normalize(quo);
  normalize(r);
  return {quo, r};
}

Poly mod(const BaseField& F, const Poly& f, const Poly& g) { return divmod(F, f, g).second; }

Poly make_monic(const BaseField& F, const Poly& f) {
  if (f.empty()) return f;
  return scale(F, f, F.inv(f.back()));
}

Poly gcd(const BaseField& F, Poly f, Poly g) {
  normalize(f);
  normalize(g);
  while (!g.empty()) {
    Poly r = mod(F, f, g);
    f = std::move(g);
    g = std::move(r);
  }
  return make_monic(F, f);
}

XgcdResult xgcd(const BaseField& F, const Poly& f, const Poly& h) {
  Poly r0 = f, r1 = h;
  Poly s0 = constant(1), s1{};
  Poly t0{}, t1 = constant(1);
  normalize(r0);
  normalize(r1);
  while (!r1.empty()) {
    auto [quo, rem] = divmod(F, r0, r1);
    Poly s2 = sub(F, s0, mul(F, quo, s1));
    Poly t2 = sub(F, t0, mul(F, quo, t1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {r0, s0, t0};
  const Coeff c = F.inv(r0.back());
  return {scale(F, r0, c), scale(F, s0, c), scale(F, t0, c)};
}

Poly derivative(const BaseField& F, const Poly& f) {
  if (f.size() <= 1) return {};
  Poly r(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i)
    r[i - 1] = F.mul(f[i], F.from_int(static_cast<std::int64_t>(i % F.characteristic())));
  normalize(r);
  return r;
}

Poly mulmod(const BaseField& F, const Poly& f, const Poly& g, const Poly& m) {
  return mod(F, mul(F, f, g), m);
}

Poly powmod(const BaseField& F, const Poly& f, const BigInt& e, const Poly& m) {
  Poly result = mod(F, constant(1), m);
  if (e == 0) return result;
  Poly base = mod(F, f, m);
  const std::size_t bits = boost::multiprecision::msb(e) + 1;
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(F, result, result, m);
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i)))
      result = mulmod(F, result, base, m);
  }
  return result;
}

Poly frobenius_pow(const BaseField& F, const Poly& f, std::uint64_t k, const Poly& m) {
  Poly r = mod(F, f, m);
  const BigInt q = F.size();
  for (std::uint64_t i = 0; i < k; ++i) r = powmod(F, r, q, m);
  return r;
}

bool is_irreducible(const BaseField& F, const Poly& f) {
  const int s = degree(f);
  if (s <= 0) return false;
  if (s == 1) return true;
  if (f[0] == 0) return false;
  const Poly monic = make_monic(F, f);
  // X[i] = x^(q^i) mod f
  std::vector<Poly> X{mod(F, x(), monic)};
  const BigInt q = F.size();
  for (int i = 1; i <= s; ++i) X.push_back(powmod(F, X.back(), q, monic));
  if (X[static_cast<std::size_t>(s)] != X[0]) return false;
  for (std::uint64_t l : prime_factors(static_cast<std::uint64_t>(s))) {
    const Poly h = sub(F, X[static_cast<std::size_t>(s) / l], x());
    if (degree(gcd(F, h, monic)) != 0) return false;
  }
  return true;
}

Poly least_irreducible(const BaseField& F, unsigned s) {
  if (s == 0) throw Error(ErrorKind::InternalInconsistency, "degree must be positive");
  if (s == 1) return x();
  const std::uint64_t q = F.size();
  // digits[0] is the constant term and the most significant position.
  std::vector<Coeff> digits(s, 0);
  digits[0] = 1;  // constant term 0 means x divides f
  for (;;) {
    Poly f(digits.begin(), digits.end());
    f.push_back(1);
    if (is_irreducible(F, f)) return f;
    std::size_t pos = s;
    while (pos-- > 0) {
      if (++digits[pos] < q) break;
      digits[pos] = 0;
      if (pos == 0) throw Error(ErrorKind::InternalInconsistency, "no irreducible found");
    }
  }
}

namespace {

// p-th root of a polynomial whose derivative vanishes.
Poly pth_root(const BaseField& F, const Poly& f) {
  const std::uint64_t p = F.characteristic();
  std::uint64_t root_exp = 1;  // x -> x^(q/p) inverts Frobenius on F_q
  for (unsigned i = 1; i < F.degree(); ++i) root_exp *= p;
  Poly r;
  for (std::size_t i = 0; i < f.size(); i += p) r.push_back(F.pow(f[i], root_exp));
  normalize(r);
  return r;
}

void squarefree(const BaseField& F, const Poly& f, unsigned mult, std::vector<Factor>& out) {
  Poly c = gcd(F, f, derivative(F, f));
  Poly w = divmod(F, f, c).first;
  unsigned i = 1;
  while (degree(w) > 0) {
    Poly y = gcd(F, w, c);
    Poly fac = divmod(F, w, y).first;
    if (degree(fac) > 0) out.push_back({make_monic(F, fac), i * mult});
    w = std::move(y);
    c = divmod(F, c, w).first;
    ++i;
  }
  if (degree(c) > 0)
    squarefree(F, pth_root(F, c), mult * static_cast<unsigned>(F.characteristic()), out);
}

// Deterministic candidate polynomials of degree < bound, skipping constants.
Poly candidate(const BaseField& F, std::uint64_t index) {
  Poly a;
  const std::uint64_t q = F.size();
  while (index > 0) {
    a.push_back(static_cast<Coeff>(index % q));
    index /= q;
  }
  normalize(a);
  return a;
}

void equal_degree(const BaseField& F, const Poly& g, unsigned d, std::vector<Poly>& out) {
  const int n = degree(g);
  if (n == static_cast<int>(d)) {
    out.push_back(g);
    return;
  }
  const std::uint64_t q = F.size();
  const bool even = F.characteristic() == 2;
  for (std::uint64_t idx = q;; ++idx) {
    Poly a = candidate(F, idx);
    if (degree(a) >= n) throw Error(ErrorKind::InternalInconsistency, "equal-degree split failed");
    Poly b;
    if (even) {
      // absolute trace to F_2 of a in F_{q^d}
      const unsigned terms = F.degree() * d;
      Poly t = mod(F, a, g);
      b = t;
      for (unsigned i = 1; i < terms; ++i) {
        t = mulmod(F, t, t, g);
        b = add(F, b, t);
      }
    } else {
      // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q-1)/2)
      Poly conj = mod(F, a, g);
      Poly norm = conj;
      for (unsigned i = 1; i < d; ++i) {
        conj = powmod(F, conj, BigInt(q), g);
        norm = mulmod(F, norm, conj, g);
      }
      b = sub(F, powmod(F, norm, BigInt((q - 1) / 2), g), constant(1));
    }
    Poly h = gcd(F, b, g);
    if (degree(h) > 0 && degree(h) < n) {
      equal_degree(F, h, d, out);
      equal_degree(F, divmod(F, g, h).first, d, out);
      return;
    }
  }
}

}  // namespace

std::vector<Factor> factor(const BaseField& F, const Poly& f_in) {
  Poly f = f_in;
  normalize(f);
  if (degree(f) < 1) throw Error(ErrorKind::InternalInconsistency, "factor of a constant");
  f = make_monic(F, f);
  std::vector<Factor> sqf;
  squarefree(F, f, 1, sqf);

  std::vector<Factor> out;
  for (const auto& [part, mult] : sqf) {
    Poly g = part;
    Poly h = mod(F, x(), g);
    const BigInt q = F.size();
    for (unsigned d = 1; 2 * static_cast<int>(d) <= degree(g); ++d) {
      h = powmod(F, h, q, g);
      Poly dd = gcd(F, sub(F, h, x()), g);
      if (degree(dd) > 0) {
        std::vector<Poly> pieces;
        equal_degree(F, dd, d, pieces);
        for (auto& piece : pieces) out.push_back({std::move(piece), mult});
        g = divmod(F, g, dd).first;
        h = mod(F, h, g);
      }
    }
    if (degree(g) > 0) out.push_back({g, mult});
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    return a.factor != b.factor ? a.factor < b.factor : a.multiplicity < b.multiplicity;
  });
  return out;
}

}  // namespace poly

// ---------------------------------------------------------------------------
// Extensions

ExtField::ExtField(std::shared_ptr<const BaseField> base, unsigned s)
    : base_(std::move(base)), s_(s) {
  if (s_ == 0) throw Error(ErrorKind::InternalInconsistency, "extension degree must be positive");
  modulus_ = poly::least_irreducible(*base_, s_);
  size_ = 1;
  for (unsigned i = 0; i < s_; ++i) size_ *= base_->size();
}

Poly ExtField::to_poly(const ExtElem& x) const {
  Poly f(x.begin(), x.end());
  poly::normalize(f);
  return f;
}

ExtElem ExtField::from_poly(const Poly& f) const {
  ExtElem x(s_, 0);
  std::copy(f.begin(), f.end(), x.begin());
  return x;
}

ExtElem ExtField::one() const { return embed(1); }

ExtElem ExtField::embed(Coeff c) const {
  ExtElem x(s_, 0);
  x[0] = c;
  return x;
}

bool ExtField::is_zero(const ExtElem& x) const {
  return std::all_of(x.begin(), x.end(), [](Coeff c) { return c == 0; });
}

bool ExtField::is_one(const ExtElem& x) const { return x == one(); }

ExtElem ExtField::add(const ExtElem& x, const ExtElem& y) const {
  ExtElem r(s_);
  for (unsigned i = 0; i < s_; ++i) r[i] = base_->add(x[i], y[i]);
  return r;
}

ExtElem ExtField::sub(const ExtElem& x, const ExtElem& y) const {
  ExtElem r(s_);
  for (unsigned i = 0; i < s_; ++i) r[i] = base_->sub(x[i], y[i]);
  return r;
}

ExtElem ExtField::scale(const ExtElem& x, Coeff c) const {
  ExtElem r(s_);
  for (unsigned i = 0; i < s_; ++i) r[i] = base_->mul(x[i], c);
  return r;
}

ExtElem ExtField::mul(const ExtElem& x, const ExtElem& y) const {
  return from_poly(poly::mulmod(*base_, to_poly(x), to_poly(y), modulus_));
}

ExtElem ExtField::pow(const ExtElem& x, const BigInt& e) const {
  return from_poly(poly::powmod(*base_, to_poly(x), e, modulus_));
}

ExtElem ExtField::pow(const ExtElem& x, std::uint64_t e) const { return pow(x, BigInt(e)); }

ExtElem ExtField::inv(const ExtElem& x) const {
  if (is_zero(x)) throw Error(ErrorKind::InternalInconsistency, "inverse of zero");
  return pow(x, BigInt(size_ - 2));
}

ExtElem ExtField::frobenius(const ExtElem& x) const { return pow(x, BigInt(base_->size())); }

bool ExtField::in_base(const ExtElem& x) const {
  return std::all_of(x.begin() + 1, x.end(), [](Coeff c) { return c == 0; });
}

ExtElem ExtField::element_at(const BigInt& index) const {
  ExtElem x(s_, 0);
  BigInt rest = index;
  const BigInt q = base_->size();
  for (unsigned i = s_; i-- > 0;) {
    x[i] = static_cast<Coeff>(rest % q);
    rest /= q;
  }
  return x;
}

// ---------------------------------------------------------------------------
// Tower

FieldTower::FieldTower(PrimePower pp) : pp_(pp), cache_(std::make_shared<Cache>()) {
  base_ = pp.a == 1 ? std::make_shared<const BaseField>(pp.p)
                    : std::make_shared<const BaseField>(pp.p, pp.a);
}

std::shared_ptr<const ExtField> FieldTower::extend(unsigned s) const {
  std::lock_guard lock(cache_->mutex);
  auto it = cache_->fields.find(s);
  if (it != cache_->fields.end()) return it->second;
  auto field = std::make_shared<const ExtField>(base_, s);
  cache_->fields.emplace(s, field);
  return field;
}

FieldTower make_field(std::uint64_t p, unsigned a) { return FieldTower(PrimePower::make(p, a)); }

RootOfUnity primitive_root_of_unity(const FieldTower& tower, std::uint64_t n) {
  const std::uint64_t s = mult_order(n, tower.q());
  auto field = tower.extend(static_cast<unsigned>(s));
  if (n == 1) return {field, field->one()};

  const BigInt exponent = (field->size() - 1) / n;
  const auto primes = prime_factors(n);
  auto exact_order_n = [&](const ExtElem& y) {
    if (!field->is_one(field->pow(y, n))) return false;
    for (std::uint64_t l : primes)
      if (field->is_one(field->pow(y, n / l))) return false;
    return true;
  };

  for (BigInt idx = 1; idx < field->size(); ++idx) {
    const ExtElem x = field->element_at(idx);
    const ExtElem y = field->pow(x, exponent);
    if (!exact_order_n(y)) continue;
    // The elements of exact order n are the powers y^j with gcd(j, n) = 1.
    ExtElem best = y;
    ExtElem power = y;
    for (std::uint64_t j = 2; j < n; ++j) {
      power = field->mul(power, y);
      if (gcd_u64(j, n) == 1 && ExtField::lex_less(power, best)) best = power;
    }
    return {field, best};
  }
  throw Error(ErrorKind::InternalInconsistency, "no primitive root of unity found");
}

Coeff field_trace(const ExtField& field, const ExtElem& x) {
  ExtElem sum = x;
  ExtElem conj = x;
  for (unsigned i = 1; i < field.degree(); ++i) {
    conj = field.frobenius(conj);
    sum = field.add(sum, conj);
  }
  if (!field.in_base(sum))
    throw Error(ErrorKind::InternalInconsistency, "trace is not fixed by Frobenius");
  return sum[0];
}

}  // namespace fqg
