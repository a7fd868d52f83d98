#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "runsgf/rational.hpp"

namespace runsgf {

// Degree reported for the zero polynomial.
inline constexpr long kZeroDegree = -1;

/*
 * Dense univariate polynomial over Q, coefficients stored by ascending power.
 * The trailing coefficient is never zero, so the zero polynomial is the empty
 * coefficient list.
 *
 * Used both for polynomials in the mark variable (PolyW) and, internally, for
 * univariate polynomials in z when stripping content.
 */
class QPoly {
 public:
  QPoly() = default;
  QPoly(BigRational constant);  // NOLINT(implicit)
  explicit QPoly(std::vector<BigRational> coeffs);

  static QPoly monomial(BigRational c, std::size_t degree);
  static QPoly variable() { return monomial(BigRational(1), 1); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  // Coefficient of x^i; zero beyond the degree.
  BigRational coeff(std::size_t i) const;
  std::span<const BigRational> coeffs() const { return c_; }
  const BigRational& leading() const { return c_.back(); }

  BigRational evaluate(const BigRational& x) const;
  QPoly derivative() const;
  QPoly monic() const;
  // p(c·x)
  QPoly scale_argument(const BigRational& c) const;

  // Euclidean division; throws std::domain_error on a zero divisor.
  std::pair<QPoly, QPoly> divmod(const QPoly& divisor) const;
  // Monic gcd; gcd(0, 0) = 0.
  static QPoly gcd(QPoly a, QPoly b);

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const BigRational& s);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator-(const QPoly& a);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const BigRational& s) { return a *= s; }
  friend bool operator==(const QPoly& a, const QPoly& b) = default;

  // e.g. "1 - 2*w + 1/4*w^2"
  std::string str(const std::string& var = "w") const;

 private:
  void trim();
  std::vector<BigRational> c_;
};

// Polynomial in the mark variable (w or u).
using PolyW = QPoly;

/*
 * Polynomial in z whose coefficients are polynomials in the mark variable,
 * i.e. an element of Q[w][z]. Trailing zero coefficients are stripped.
 */
class PolyZ {
 public:
  PolyZ() = default;
  PolyZ(PolyW constant);  // NOLINT(implicit)
  PolyZ(BigRational constant) : PolyZ(PolyW(std::move(constant))) {}  // NOLINT(implicit)
  explicit PolyZ(std::vector<PolyW> coeffs);

  static PolyZ monomial(PolyW c, std::size_t z_degree);
  // Embeds a univariate polynomial in z (no mark dependence).
  static PolyZ from_z(const QPoly& p);

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  PolyW coeff(std::size_t i) const;
  std::span<const PolyW> coeffs() const { return c_; }

  // Highest power of the mark variable present; kZeroDegree for zero.
  long mark_degree() const;
  bool is_mark_free() const { return mark_degree() <= 0; }

  // [mark^d] as a mark-free polynomial in z.
  PolyZ mark_coefficient(std::size_t d) const;
  PolyZ evaluate_mark(const BigRational& value) const;
  PolyZ mark_derivative() const;
  // f(c·z)
  PolyZ scale_z(const BigRational& c) const;

  // Coefficient of mark^j as a univariate polynomial in z, for each j.
  std::vector<QPoly> mark_slices() const;
  // Monic gcd over Q[z] of all mark slices: the part of the polynomial that
  // is a function of z alone.
  QPoly z_content() const;
  // Exact division by a univariate polynomial in z; throws std::domain_error
  // when it does not divide.
  PolyZ divide_by_z(const QPoly& divisor) const;
  // Exact division in Q[w][z]; throws std::domain_error when inexact.
  PolyZ divide_exact(const PolyZ& divisor) const;

  PolyZ& operator+=(const PolyZ& o);
  PolyZ& operator-=(const PolyZ& o);
  PolyZ& operator*=(const PolyW& s);

  friend PolyZ operator+(PolyZ a, const PolyZ& b) { return a += b; }
  friend PolyZ operator-(PolyZ a, const PolyZ& b) { return a -= b; }
  friend PolyZ operator-(const PolyZ& a);
  friend PolyZ operator*(const PolyZ& a, const PolyZ& b);
  friend PolyZ operator*(PolyZ a, const PolyW& s) { return a *= s; }
  friend bool operator==(const PolyZ& a, const PolyZ& b) = default;

  std::string str(const std::string& mark = "w") const;

 private:
  void trim();
  std::vector<PolyW> c_;
};

}  // namespace runsgf
