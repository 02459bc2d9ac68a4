#ifndef HOPFCYC_SCALAR_HPP
#define HOPFCYC_SCALAR_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "hopfcyc/error.hpp"

namespace hopfcyc {

/// Exact rationals. Plain GMP value type; every helper below is a free function
/// so that templates can treat `Rational` and `Zp` uniformly.
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline Rational inverse(const Rational& x)
{
  if (is_zero(x)) throw Error(Errc::DivisionByZero, "inverse of zero");
  return Rational(1) / x;
}
inline std::string format_scalar(const Rational& x)
{
  Rational c = x;
  c.canonicalize();
  return c.get_str();
}

/// Residue modulo a prime. The modulus travels with the value; mixing moduli is
/// a logic error.
class Zp {
public:
  Zp() = default;
  Zp(std::uint64_t value, std::uint64_t modulus) : v_(value % modulus), p_(modulus) {}

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  friend Zp operator+(Zp a, Zp b) { return Zp::raw(a.v_ + b.v_ >= a.p_ ? a.v_ + b.v_ - a.p_ : a.v_ + b.v_, a.p_); }
  friend Zp operator-(Zp a, Zp b) { return Zp::raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_); }
  friend Zp operator*(Zp a, Zp b) { return Zp::raw(a.v_ * b.v_ % a.p_, a.p_); }
  friend Zp operator/(Zp a, Zp b) { return a * b.inverse(); }
  Zp operator-() const { return Zp::raw(v_ == 0 ? 0 : p_ - v_, p_); }
  Zp& operator+=(Zp b) { return *this = *this + b; }
  Zp& operator-=(Zp b) { return *this = *this - b; }
  Zp& operator*=(Zp b) { return *this = *this * b; }
  friend bool operator==(Zp a, Zp b) { return a.v_ == b.v_; }

  Zp inverse() const
  {
    if (v_ == 0) throw Error(Errc::DivisionByZero, "inverse of zero residue");
    // Fermat: p is prime.
    std::uint64_t result = 1, base = v_, e = p_ - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return Zp::raw(result, p_);
  }

private:
  static Zp raw(std::uint64_t v, std::uint64_t p)
  {
    Zp z;
    z.v_ = v;
    z.p_ = p;
    return z;
  }
  std::uint64_t v_ = 0;
  std::uint64_t p_ = 2;
};

inline bool is_zero(const Zp& x) { return x.value() == 0; }
inline Zp inverse(const Zp& x) { return x.inverse(); }
inline std::string format_scalar(const Zp& x) { return std::to_string(x.value()); }
inline std::ostream& operator<<(std::ostream& os, const Zp& x) { return os << x.value(); }

inline bool is_prime(std::uint64_t n)
{
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Which ground field a structure lives over.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };
  Kind kind = Kind::Rationals;
  std::uint64_t p = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint64_t p)
  {
    // Products of two residues must fit in 64 bits.
    if (!is_prime(p) || p >= (std::uint64_t(1) << 31))
      throw Error(Errc::InvalidField, "modulus " + std::to_string(p) + " is not a supported prime");
    return {Kind::PrimeField, p};
  }
  std::uint64_t characteristic() const { return kind == Kind::Rationals ? 0 : p; }
  std::string name() const { return kind == Kind::Rationals ? "Q" : "F" + std::to_string(p); }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

template <class K> class Field;

template <> class Field<Rational> {
public:
  Field() = default;
  explicit Field(const FieldSpec& spec)
  {
    if (spec.kind != FieldSpec::Kind::Rationals) throw Error(Errc::InvalidField, "expected the rationals");
  }
  FieldSpec spec() const { return FieldSpec::rationals(); }
  Rational zero() const { return 0; }
  Rational one() const { return 1; }
  Rational from_int(long n) const { return n; }

  /// Integers or fractions "a/b".
  Rational parse(std::string_view text) const
  {
    Rational r;
    std::string s(text);
    if (s.empty() || r.set_str(s, 10) != 0) throw Error(Errc::ParseError, "bad rational literal '" + s + "'");
    if (r.get_den() == 0) throw Error(Errc::ParseError, "zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
  }
};

template <> class Field<Zp> {
public:
  explicit Field(std::uint64_t p) : spec_(FieldSpec::prime(p)) {}
  explicit Field(const FieldSpec& spec) : spec_(spec)
  {
    if (spec.kind != FieldSpec::Kind::PrimeField) throw Error(Errc::InvalidField, "expected a prime field");
    spec_ = FieldSpec::prime(spec.p);
  }
  FieldSpec spec() const { return spec_; }
  std::uint64_t modulus() const { return spec_.p; }
  Zp zero() const { return Zp(0, spec_.p); }
  Zp one() const { return Zp(1, spec_.p); }
  Zp from_int(long n) const
  {
    long m = n % static_cast<long>(spec_.p);
    if (m < 0) m += static_cast<long>(spec_.p);
    return Zp(static_cast<std::uint64_t>(m), spec_.p);
  }

  /// Residues, signed integers, or fractions "a/b" with b invertible mod p.
  Zp parse(std::string_view text) const
  {
    Rational r = Field<Rational>().parse(text);
    mpz_class p(static_cast<unsigned long>(spec_.p));
    mpz_class num = r.get_num() % p, den = r.get_den() % p;
    if (num < 0) num += p;
    if (den == 0) throw Error(Errc::ParseError, "denominator vanishes mod p in '" + std::string(text) + "'");
    return Zp(num.get_ui(), spec_.p) / Zp(den.get_ui(), spec_.p);
  }

private:
  FieldSpec spec_;
};

} // namespace hopfcyc

#endif // HOPFCYC_SCALAR_HPP
