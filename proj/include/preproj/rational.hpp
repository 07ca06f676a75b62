#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace preproj {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class so that generic code never sees
/// gmpxx expression templates.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
    requires(sizeof(I) <= sizeof(long))
  Rational(I n) : v_(static_cast<long>(n)) {}  // NOLINT: implicit by design of the ring
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class v);

  /// Parses "n" or "n/d" (optional leading '-'); throws std::invalid_argument.
  static Rational parse(std::string_view text);

  [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
  [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(v_); }
  [[nodiscard]] const mpq_class& gmp() const { return v_; }
  [[nodiscard]] mpz_class numerator() const { return v_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return v_.get_den(); }
  [[nodiscard]] std::string to_string() const { return v_.get_str(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class v_;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }

/// Prime field Z/P. P is a compile-time constant so that integer literals in
/// generic formulas convert without a runtime modulus.
template <std::uint32_t P>
class Zp {
  static_assert(P >= 2 && P < (1u << 16), "small primes only");

 public:
  static constexpr std::uint32_t modulus = P;

  Zp() = default;
  template <std::integral I>
  Zp(I n) : v_(reduce(static_cast<long long>(n))) {}  // NOLINT

  /// Image of a rational under Z -> Z/P; throws if P divides the denominator.
  static Zp from_rational(const Rational& r) {
    const mpz_class p = P;
    const mpz_class den = mpz_class(r.denominator() % p);
    if (den == 0) {
      throw std::domain_error("denominator of " + r.to_string() + " vanishes mod " +
                              std::to_string(P));
    }
    mpz_class num = r.numerator() % p;
    if (num < 0) num += p;
    return Zp(static_cast<long long>(num.get_si())) / Zp(static_cast<long long>(den.get_si()));
  }

  [[nodiscard]] std::uint32_t value() const { return v_; }
  [[nodiscard]] bool is_zero() const { return v_ == 0; }

  [[nodiscard]] Zp inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero in prime field");
    Zp result(1), base = *this;
    for (std::uint32_t e = P - 2; e != 0; e >>= 1) {
      if (e & 1u) result *= base;
      base *= base;
    }
    return result;
  }

  Zp& operator+=(Zp o) { v_ = (v_ + o.v_) % P; return *this; }
  Zp& operator-=(Zp o) { v_ = (v_ + P - o.v_) % P; return *this; }
  Zp& operator*=(Zp o) { v_ = static_cast<std::uint32_t>((std::uint64_t{v_} * o.v_) % P); return *this; }
  Zp& operator/=(Zp o) { return *this *= o.inverse(); }

  friend Zp operator+(Zp a, Zp b) { return a += b; }
  friend Zp operator-(Zp a, Zp b) { return a -= b; }
  friend Zp operator*(Zp a, Zp b) { return a *= b; }
  friend Zp operator/(Zp a, Zp b) { return a /= b; }
  friend Zp operator-(Zp a) { return Zp() - a; }
  friend bool operator==(Zp a, Zp b) = default;

  friend std::ostream& operator<<(std::ostream& os, Zp a) { return os << a.v_; }

 private:
  static std::uint32_t reduce(long long n) {
    long long r = n % static_cast<long long>(P);
    return static_cast<std::uint32_t>(r < 0 ? r + P : r);
  }
  std::uint32_t v_ = 0;
};

template <std::uint32_t P>
bool is_zero(Zp<P> a) {
  return a.is_zero();
}

/// Conversion from the rationals into a coefficient field.
template <class Field>
Field field_cast(const Rational& r);

template <>
inline Rational field_cast<Rational>(const Rational& r) {
  return r;
}

template <class Field>
  requires requires(const Rational& r) { Field::from_rational(r); }
Field field_cast(const Rational& r) {
  return Field::from_rational(r);
}

inline std::string to_string(const Rational& r) { return r.to_string(); }
template <std::uint32_t P>
std::string to_string(Zp<P> a) {
  return std::to_string(a.value());
}

}  // namespace preproj
