#pragma once

// Exact arithmetic in F_q (q = p^a) and in extensions F_{q^s} built as
// quotient rings F_q[x]/(f) directly over the base field.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fqg {

using BigInt = boost::multiprecision::cpp_int;

/// An element of F_q encoded as the integer sum c_i p^i of its coordinates
/// over F_p.  For a prime field this is just the residue.
using Coeff = std::uint32_t;

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
/// The zero polynomial is the empty vector.
using Poly = std::vector<Coeff>;

struct PrimePower {
  std::uint64_t p = 2;
  unsigned a = 1;
  std::uint64_t q = 2;

  /// Throws NotPrime when p fails the primality check.
  static PrimePower make(std::uint64_t p, unsigned a);
};

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// Least s >= 1 with q^s = 1 (mod n); ord_1(q) = 1.  Throws NotCoprime.
std::uint64_t mult_order(std::uint64_t n, std::uint64_t q);

/// The field F_q with table-driven multiplication.
class BaseField {
 public:
  /// F_p.
  explicit BaseField(std::uint64_t p);
  /// F_{p^a}; the modulus is the lex-least monic irreducible of degree a.
  BaseField(std::uint64_t p, unsigned a);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return a_; }
  std::uint64_t size() const { return q_; }
  bool is_prime_field() const { return a_ == 1; }
  /// Modulus over F_p (empty for a prime field).
  const Poly& modulus() const { return modulus_; }

  Coeff zero() const { return 0; }
  Coeff one() const { return 1; }

  Coeff add(Coeff x, Coeff y) const {
    if (a_ == 1) {
      const std::uint32_t s = x + y;
      return s >= p_ ? s - static_cast<std::uint32_t>(p_) : s;
    }
    return add_slow(x, y);
  }
  Coeff neg(Coeff x) const;
  Coeff sub(Coeff x, Coeff y) const { return add(x, neg(y)); }
  Coeff mul(Coeff x, Coeff y) const {
    if (x == 0 || y == 0) return 0;
    std::uint32_t e = log_[x] + log_[y];
    if (e >= q_ - 1) e -= static_cast<std::uint32_t>(q_ - 1);
    return exp_[e];
  }
  /// Throws on zero.
  Coeff inv(Coeff x) const;
  Coeff pow(Coeff x, std::uint64_t e) const;
  /// Image of an integer under Z -> F_p -> F_q.
  Coeff from_int(std::int64_t v) const;
  /// Coordinates over F_p, lowest first, length a.
  std::vector<std::uint32_t> digits(Coeff x) const;

 private:
  Coeff add_slow(Coeff x, Coeff y) const;
  void build_tables();

  std::uint64_t p_;
  unsigned a_;
  std::uint64_t q_;
  Poly modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

/// Polynomial arithmetic over a BaseField.
namespace poly {

void normalize(Poly& f);
int degree(const Poly& f);  // -1 for the zero polynomial
Poly add(const BaseField& F, const Poly& f, const Poly& g);
Poly sub(const BaseField& F, const Poly& f, const Poly& g);
Poly scale(const BaseField& F, const Poly& f, Coeff c);
Poly mul(const BaseField& F, const Poly& f, const Poly& g);
/// Quotient and remainder; g must be nonzero.
std::pair<Poly, Poly> divmod(const BaseField& F, const Poly& f, const Poly& g);
Poly mod(const BaseField& F, const Poly& f, const Poly& g);
Poly make_monic(const BaseField& F, const Poly& f);
Poly gcd(const BaseField& F, Poly f, Poly g);
/// Returns (g, s, t) with s f + t h = g, g monic.
struct XgcdResult {
  Poly g, s, t;
};
XgcdResult xgcd(const BaseField& F, const Poly& f, const Poly& h);
Poly derivative(const BaseField& F, const Poly& f);
Poly mulmod(const BaseField& F, const Poly& f, const Poly& g, const Poly& m);
Poly powmod(const BaseField& F, const Poly& f, const BigInt& e, const Poly& m);
/// f^(q^k) mod m by k repeated q-th powers.
Poly frobenius_pow(const BaseField& F, const Poly& f, std::uint64_t k, const Poly& m);
Poly x();
Poly constant(Coeff c);

/// Rabin's test.
bool is_irreducible(const BaseField& F, const Poly& f);
/// Lex-least monic irreducible of degree s (coefficients compared from the
/// constant term upward).
Poly least_irreducible(const BaseField& F, unsigned s);

struct Factor {
  Poly factor;
  unsigned multiplicity;
  friend bool operator==(const Factor&, const Factor&) = default;
};
/// Monic factorization of a monic polynomial of degree >= 1.  Factors are
/// sorted lexicographically by coefficient vector.
std::vector<Factor> factor(const BaseField& F, const Poly& f);

}  // namespace poly

/// Element of F_{q^s}: coefficient vector of length s over F_q.
using ExtElem = std::vector<Coeff>;

/// F_{q^s} = F_q[x]/(f) with f the lex-least monic irreducible of degree s.
class ExtField {
 public:
  ExtField(std::shared_ptr<const BaseField> base, unsigned s);

  const BaseField& base() const { return *base_; }
  unsigned degree() const { return s_; }
  const Poly& modulus() const { return modulus_; }
  /// q^s as an exact integer.
  const BigInt& size() const { return size_; }

  ExtElem zero() const { return ExtElem(s_, 0); }
  ExtElem one() const;
  ExtElem embed(Coeff c) const;
  bool is_zero(const ExtElem& x) const;
  bool is_one(const ExtElem& x) const;

  ExtElem add(const ExtElem& x, const ExtElem& y) const;
  ExtElem sub(const ExtElem& x, const ExtElem& y) const;
  ExtElem scale(const ExtElem& x, Coeff c) const;
  ExtElem mul(const ExtElem& x, const ExtElem& y) const;
  ExtElem pow(const ExtElem& x, const BigInt& e) const;
  ExtElem pow(const ExtElem& x, std::uint64_t e) const;
  ExtElem inv(const ExtElem& x) const;
  /// x -> x^q.
  ExtElem frobenius(const ExtElem& x) const;
  /// True when x lies in the embedded copy of F_q.
  bool in_base(const ExtElem& x) const;

  /// The index-th element in coefficient-lex order (constant term most
  /// significant).  index < q^s.
  ExtElem element_at(const BigInt& index) const;
  /// Coefficient-lex comparison, constant term first.
  static bool lex_less(const ExtElem& x, const ExtElem& y) { return x < y; }

 private:
  Poly to_poly(const ExtElem& x) const;
  ExtElem from_poly(const Poly& f) const;

  std::shared_ptr<const BaseField> base_;
  unsigned s_;
  Poly modulus_;
  BigInt size_;
};

/// F_q together with its lazily built extensions.  Copies share state; the
/// extension cache is safe to fill from several threads.
class FieldTower {
 public:
  explicit FieldTower(PrimePower pp);

  const PrimePower& prime_power() const { return pp_; }
  const BaseField& base() const { return *base_; }
  std::shared_ptr<const BaseField> base_ptr() const { return base_; }
  std::uint64_t q() const { return pp_.q; }

  /// F_{q^s}; s = 1 gives the base field as a degree-one extension.
  std::shared_ptr<const ExtField> extend(unsigned s) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<unsigned, std::shared_ptr<const ExtField>> fields;
  };

  PrimePower pp_;
  std::shared_ptr<const BaseField> base_;
  std::shared_ptr<Cache> cache_;
};

FieldTower make_field(std::uint64_t p, unsigned a);

struct RootOfUnity {
  std::shared_ptr<const ExtField> field;  // F_{q^s}, s = ord_n(q)
  ExtElem zeta;
};

/// The lex-least element of exact multiplicative order n in F_{q^s},
/// s = ord_n(q).  Throws NotCoprime.
RootOfUnity primitive_root_of_unity(const FieldTower& tower, std::uint64_t n);

/// Sum of the Frobenius conjugates of x down to F_q.  Throws
/// InternalInconsistency if the sum is not fixed by Frobenius.
Coeff field_trace(const ExtField& field, const ExtElem& x);

}  // namespace fqg
