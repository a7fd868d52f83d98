#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

namespace runsgf {

using BigInt = mpz_class;

// Exact rational number, always in lowest terms with a positive denominator.
// Thin value wrapper over GMP's mpq_class that turns division by zero into
// an exception instead of a signal.
class BigRational {
 public:
  BigRational() = default;

  template <std::signed_integral T>
  BigRational(T value) : q_(static_cast<long>(value)) {}

  template <std::unsigned_integral T>
  BigRational(T value) : q_(static_cast<unsigned long>(value)) {}

  BigRational(const BigInt& value) : q_(value) {}  // NOLINT(implicit)

  // Throws std::domain_error when den is zero.
  BigRational(const BigInt& num, const BigInt& den);

  // Accepts "a/b", an integer, or a terminating decimal such as "0.125".
  // Throws std::invalid_argument on anything else.
  static BigRational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }

  BigRational abs() const;
  BigRational pow(unsigned exponent) const;
  // Integer exponent; negative powers of zero throw std::domain_error.
  BigRational pow(long exponent) const;

  // Canonical "a/b" form, or "a" for integers.
  std::string str() const { return q_.get_str(); }

  // Fixed-point rendering rounded half-to-even to sig_digits significant digits.
  std::string to_decimal(int sig_digits = 10) const;

  double to_double() const { return q_.get_d(); }

  BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
  BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
  BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  friend BigRational operator-(const BigRational& a) {
    BigRational r;
    r.q_ = -a.q_;
    return r;
  }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

BigInt pow(const BigInt& base, unsigned exponent);

}  // namespace runsgf
