#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "runsgf/polynomial.hpp"

namespace runsgf {

struct MalformedGF : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DegenerateSystem : std::runtime_error {
  DegenerateSystem() : std::runtime_error("degenerate transfer system: matrix is singular") {}
};

/*
 * A rational function num(w, z) / den(w, z) with num, den in Q[w][z].
 *
 * Construction normalizes: factors of z alone shared by numerator and
 * denominator are divided out, then both are scaled so that the constant
 * term of the denominator is exactly 1. A denominator whose z^0 coefficient
 * is not a nonzero constant is rejected, since the function would have no
 * power series in z over Q[w].
 *
 * No bivariate gcd is attempted, so two equal functions may still differ in
 * representation; operator== compares by cross-multiplication.
 */
class RationalGF {
 public:
  enum class Reduce { shared_z_content, none };

  RationalGF() : den_(BigRational(1)) {}
  RationalGF(BigRational constant) : num_(std::move(constant)), den_(BigRational(1)) {}  // NOLINT
  RationalGF(PolyZ num, PolyZ den, Reduce reduce = Reduce::shared_z_content);

  const PolyZ& numerator() const { return num_; }
  const PolyZ& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  long mark_degree() const { return std::max(num_.mark_degree(), den_.mark_degree()); }
  // Value at z = 0, which is num(0) since den(0) = 1.
  PolyW constant_term() const { return num_.coeff(0); }

  RationalGF evaluate_mark(const BigRational& value) const;
  // d/dmark as a rational function.
  RationalGF mark_derivative() const;
  // f(w, c·z)
  RationalGF scale_z(const BigRational& c) const;
  RationalGF times_mark(const PolyW& m) const;

  RationalGF& operator+=(const RationalGF& o);
  RationalGF& operator-=(const RationalGF& o);
  RationalGF& operator*=(const RationalGF& o);

  friend RationalGF operator+(RationalGF a, const RationalGF& b) { return a += b; }
  friend RationalGF operator-(RationalGF a, const RationalGF& b) { return a -= b; }
  friend RationalGF operator*(RationalGF a, const RationalGF& b) { return a *= b; }
  friend RationalGF operator-(const RationalGF& a);

  // Equality as rational functions: num1·den2 == num2·den1.
  friend bool operator==(const RationalGF& a, const RationalGF& b);
  // Same stored numerator and denominator.
  bool identical(const RationalGF& o) const { return num_ == o.num_ && den_ == o.den_; }

  std::string str(const std::string& mark = "w") const;

 private:
  PolyZ num_;
  PolyZ den_;
};

// Builds the normalized function num/den.
RationalGF gf_normalize(PolyZ num, PolyZ den);

// [z^0] f, ..., [z^n_max] f via the recurrence induced by the denominator.
std::vector<PolyW> series_coeffs(const RationalGF& f, std::size_t n_max);

using GFMatrix = std::vector<std::vector<RationalGF>>;

// Solution of M·x = rhs written over one common denominator: x_j = numerators[j] / denominator.
struct CommonDenominatorSolution {
  std::vector<PolyZ> numerators;
  PolyZ denominator;
};

// Cramer's rule with fraction-free (Bareiss) determinants after clearing the
// denominators row by row. Throws DegenerateSystem when M is singular.
CommonDenominatorSolution solve_common_denominator(const GFMatrix& m, std::span<const RationalGF> rhs);

// Exact solution of M·x = rhs over the field of rational functions.
std::vector<RationalGF> fraction_field_solve(const GFMatrix& m, std::span<const RationalGF> rhs);

// Fraction-free determinant of a square polynomial matrix.
PolyZ bareiss_determinant(std::vector<std::vector<PolyZ>> a);

}  // namespace runsgf
