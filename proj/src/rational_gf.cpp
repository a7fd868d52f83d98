#include "runsgf/rational_gf.hpp"

#include <algorithm>

namespace runsgf {

RationalGF::RationalGF(PolyZ num, PolyZ den, Reduce reduce) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw MalformedGF("generating function with zero denominator");
  if (num_.is_zero()) {
    den_ = PolyZ(BigRational(1));
    return;
  }
  if (reduce == Reduce::shared_z_content) {
    const QPoly g = QPoly::gcd(num_.z_content(), den_.z_content());
    if (g.degree() > 0) {
      num_ = num_.divide_by_z(g);
      den_ = den_.divide_by_z(g);
    }
  }
  const PolyW lead = den_.coeff(0);
  if (lead.is_zero() || !lead.is_constant()) {
    throw MalformedGF("denominator constant term is not an invertible constant: " + den_.str());
  }
  const BigRational inv = BigRational(1) / lead.coeff(0);
  num_ *= PolyW(inv);
  den_ *= PolyW(inv);
}

RationalGF gf_normalize(PolyZ num, PolyZ den) { return RationalGF(std::move(num), std::move(den)); }

RationalGF RationalGF::evaluate_mark(const BigRational& value) const {
  return RationalGF(num_.evaluate_mark(value), den_.evaluate_mark(value));
}

RationalGF RationalGF::mark_derivative() const {
  return RationalGF(num_.mark_derivative() * den_ - num_ * den_.mark_derivative(), den_ * den_);
}

RationalGF RationalGF::scale_z(const BigRational& c) const {
  return RationalGF(num_.scale_z(c), den_.scale_z(c));
}

RationalGF RationalGF::times_mark(const PolyW& m) const { return RationalGF(num_ * m, den_); }

RationalGF& RationalGF::operator+=(const RationalGF& o) {
  if (den_ == o.den_) {
    *this = RationalGF(num_ + o.num_, den_);
  } else {
    *this = RationalGF(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RationalGF& RationalGF::operator-=(const RationalGF& o) { return *this += -o; }

RationalGF& RationalGF::operator*=(const RationalGF& o) {
  *this = RationalGF(num_ * o.num_, den_ * o.den_);
  return *this;
}

RationalGF operator-(const RationalGF& a) {
  RationalGF r = a;
  r.num_ = -r.num_;
  return r;
}

bool operator==(const RationalGF& a, const RationalGF& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RationalGF::str(const std::string& mark) const {
  return "(" + num_.str(mark) + ") / (" + den_.str(mark) + ")";
}

std::vector<PolyW> series_coeffs(const RationalGF& f, std::size_t n_max) {
  const PolyZ& num = f.numerator();
  const PolyZ& den = f.denominator();
  // den(0) == 1 by construction.
  const std::size_t dd = den.size();
  std::vector<PolyW> out;
  out.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    PolyW c = num.coeff(n);
    for (std::size_t j = 1; j < dd && j <= n; ++j) {
      const PolyW& dj = den.coeffs()[j];
      if (dj.is_zero()) continue;
      c -= dj * out[n - j];
    }
    out.push_back(std::move(c));
  }
  return out;
}

PolyZ bareiss_determinant(std::vector<std::vector<PolyZ>> a) {
  const std::size_t n = a.size();
  if (n == 0) return PolyZ(BigRational(1));
  bool negate = false;
  PolyZ prev(BigRational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).divide_exact(prev);
      }
      a[i][k] = PolyZ();
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

CommonDenominatorSolution solve_common_denominator(const GFMatrix& m, std::span<const RationalGF> rhs) {
  const std::size_t n = m.size();
  if (rhs.size() != n) throw std::invalid_argument("right-hand side length does not match matrix");
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("matrix is not square");
  }

  // Clear denominators row by row: multiply row i (and rhs_i) by the product
  // of its distinct denominators.
  std::vector<std::vector<PolyZ>> a(n, std::vector<PolyZ>(n));
  std::vector<PolyZ> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<PolyZ> dens;
    auto note = [&](const PolyZ& d) {
      if (d == PolyZ(BigRational(1))) return;
      if (std::find(dens.begin(), dens.end(), d) == dens.end()) dens.push_back(d);
    };
    for (const auto& e : m[i]) note(e.denominator());
    note(rhs[i].denominator());
    PolyZ scale(BigRational(1));
    for (const auto& d : dens) scale = scale * d;
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = m[i][j].numerator() * scale.divide_exact(m[i][j].denominator());
    }
    b[i] = rhs[i].numerator() * scale.divide_exact(rhs[i].denominator());
  }

  CommonDenominatorSolution sol;
  sol.denominator = bareiss_determinant(a);
  if (sol.denominator.is_zero()) throw DegenerateSystem();
  sol.numerators.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    auto aj = a;
    for (std::size_t i = 0; i < n; ++i) aj[i][j] = b[i];
    sol.numerators.push_back(bareiss_determinant(std::move(aj)));
  }
  return sol;
}

std::vector<RationalGF> fraction_field_solve(const GFMatrix& m, std::span<const RationalGF> rhs) {
  auto sol = solve_common_denominator(m, rhs);
  std::vector<RationalGF> x;
  x.reserve(sol.numerators.size());
  for (auto& num : sol.numerators) x.emplace_back(std::move(num), sol.denominator);
  return x;
}

}  // namespace runsgf
