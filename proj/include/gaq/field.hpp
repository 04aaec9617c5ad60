#pragma once

// Exact scalar arithmetic: arbitrary-precision rationals (GMP) and prime
// fields F_p with machine-word residues for p < 2^31.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gaq {

inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

enum class FieldKind { rationals, prime };

struct FieldSpec {
  FieldKind kind = FieldKind::rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {FieldKind::rationals, 0}; }
  static FieldSpec prime(std::uint32_t p) {
    if (!is_prime_u32(p)) throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
    return {FieldKind::prime, p};
  }
  std::uint32_t characteristic() const { return kind == FieldKind::rationals ? 0 : p; }
  std::string name() const { return kind == FieldKind::rationals ? "Q" : "F" + std::to_string(p); }
  bool operator==(const FieldSpec&) const = default;
};

// Field of rationals. Elements are kept canonical (lowest terms); GMP
// preserves canonical form through arithmetic as long as inputs are canonical,
// so only raw num/den construction needs an explicit canonicalize.
class Rationals {
 public:
  using Elem = mpq_class;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_long(long v) const { return Elem(v); }
  Elem from_fraction(long num, long den) const {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Elem e(num, den);
    e.canonicalize();
    return e;
  }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return 1 / a;
  }
  void add_assign(Elem& a, const Elem& b) const { a += b; }
  void submul_assign(Elem& a, const Elem& c, const Elem& b) const { a -= c * b; }

  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  // Pivot weight: total bit size of numerator and denominator.
  std::size_t pivot_weight(const Elem& a) const {
    return mpz_sizeinbase(a.get_num_mpz_t(), 2) + mpz_sizeinbase(a.get_den_mpz_t(), 2);
  }

  std::string to_string(const Elem& a) const { return a.get_str(); }
  Elem parse(const std::string& s) const {
    Elem e;
    if (e.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    e.canonicalize();
    return e;
  }

  std::uint32_t characteristic() const { return 0; }
  FieldSpec spec() const { return FieldSpec::rationals(); }
  bool operator==(const Rationals&) const = default;
};

// Prime field F_p, p < 2^31. Residues live in [0, p); products fit in 64 bits.
class PrimeField {
 public:
  using Elem = std::uint64_t;

  PrimeField() : p_(2) {}
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime_u32(p)) throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_long(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return pow(a, p_ - 2);
  }
  void add_assign(Elem& a, Elem b) const { a = add(a, b); }
  void submul_assign(Elem& a, Elem c, Elem b) const { a = sub(a, mul(c, b)); }

  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  std::size_t pivot_weight(Elem) const { return 1; }

  std::string to_string(Elem a) const { return std::to_string(a); }
  Elem parse(const std::string& s) const {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad residue: " + s);
    return from_long(v);
  }

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t modulus() const { return p_; }
  FieldSpec spec() const { return FieldSpec::prime(p_); }
  bool operator==(const PrimeField&) const = default;

 private:
  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::uint32_t p_;
};

template <class F>
concept ExactField = requires(const F f, typename F::Elem a) {
  { f.zero() } -> std::convertible_to<typename F::Elem>;
  { f.add(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.inv(a) } -> std::convertible_to<typename F::Elem>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
};

// Runtime field dispatch: problem files pick Q or F_p, the engine is templated.
template <class Fn>
auto with_field(const FieldSpec& fs, Fn&& fn) {
  if (fs.kind == FieldKind::rationals) return fn(Rationals{});
  return fn(PrimeField{fs.p});
}

}  // namespace gaq
