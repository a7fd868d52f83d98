#include "runsgf/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace runsgf {

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(BigRational constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

QPoly::QPoly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(BigRational c, std::size_t degree) {
  if (c.is_zero()) return {};
  std::vector<BigRational> v(degree + 1);
  v[degree] = std::move(c);
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BigRational QPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigRational(); }

BigRational QPoly::evaluate(const BigRational& x) const {
  BigRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigRational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * BigRational(i);
  return QPoly(std::move(d));
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  const BigRational inv = BigRational(1) / leading();
  return *this * inv;
}

QPoly QPoly::scale_argument(const BigRational& c) const {
  std::vector<BigRational> v(c_);
  BigRational power(1);
  for (auto& x : v) {
    x *= power;
    power *= c;
  }
  return QPoly(std::move(v));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if (degree() < divisor.degree()) return {QPoly(), *this};
  std::vector<BigRational> rem(c_);
  std::vector<BigRational> quot(c_.size() - divisor.c_.size() + 1);
  const BigRational inv_lead = BigRational(1) / divisor.leading();
  const std::size_t dd = divisor.c_.size() - 1;
  for (std::size_t i = quot.size(); i-- > 0;) {
    const BigRational q = rem[i + dd] * inv_lead;
    quot[i] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[i + j] -= q * divisor.c_[j];
  }
  rem.resize(dd);
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a.divmod(b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const BigRational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

QPoly operator-(const QPoly& a) {
  QPoly r = a;
  for (auto& x : r.c_) x = -x;
  return r;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(v));
}

std::string QPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    BigRational mag = c_[i].abs();
    if (first) {
      if (c_[i].sign() < 0) os << "-";
    } else {
      os << (c_[i].sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == BigRational(1);
    if (i == 0 || !unit) os << mag;
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- PolyZ

PolyZ::PolyZ(PolyW constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

PolyZ::PolyZ(std::vector<PolyW> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyZ PolyZ::monomial(PolyW c, std::size_t z_degree) {
  if (c.is_zero()) return {};
  std::vector<PolyW> v(z_degree + 1);
  v[z_degree] = std::move(c);
  return PolyZ(std::move(v));
}

PolyZ PolyZ::from_z(const QPoly& p) {
  std::vector<PolyW> v;
  v.reserve(p.size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return PolyZ(std::move(v));
}

void PolyZ::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyW PolyZ::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : PolyW(); }

long PolyZ::mark_degree() const {
  long d = kZeroDegree;
  for (const auto& c : c_) d = std::max(d, c.degree());
  return d;
}

PolyZ PolyZ::mark_coefficient(std::size_t d) const {
  std::vector<PolyW> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.emplace_back(c.coeff(d));
  return PolyZ(std::move(v));
}

PolyZ PolyZ::evaluate_mark(const BigRational& value) const {
  std::vector<PolyW> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.emplace_back(c.evaluate(value));
  return PolyZ(std::move(v));
}

PolyZ PolyZ::mark_derivative() const {
  std::vector<PolyW> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c.derivative());
  return PolyZ(std::move(v));
}

PolyZ PolyZ::scale_z(const BigRational& c) const {
  std::vector<PolyW> v(c_);
  BigRational power(1);
  for (auto& x : v) {
    x *= power;
    power *= c;
  }
  return PolyZ(std::move(v));
}

std::vector<QPoly> PolyZ::mark_slices() const {
  const long md = mark_degree();
  std::vector<QPoly> slices;
  for (long j = 0; j <= md; ++j) {
    std::vector<BigRational> zc(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) zc[i] = c_[i].coeff(static_cast<std::size_t>(j));
    slices.emplace_back(std::move(zc));
  }
  return slices;
}

QPoly PolyZ::z_content() const {
  QPoly g;
  for (auto& s : mark_slices()) {
    g = QPoly::gcd(std::move(g), std::move(s));
    if (g.degree() == 0) break;
  }
  return g;
}

PolyZ PolyZ::divide_by_z(const QPoly& divisor) const {
  const auto slices = mark_slices();
  std::vector<PolyW> out;
  for (std::size_t j = 0; j < slices.size(); ++j) {
    auto [q, r] = slices[j].divmod(divisor);
    if (!r.is_zero()) throw std::domain_error("inexact division by univariate polynomial");
    const auto qs = q.coeffs();
    if (out.size() < qs.size()) out.resize(qs.size());
    for (std::size_t i = 0; i < qs.size(); ++i) out[i] += PolyW::monomial(qs[i], j);
  }
  return PolyZ(std::move(out));
}

PolyZ PolyZ::divide_exact(const PolyZ& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  PolyZ rem = *this;
  std::vector<PolyW> quot(c_.size() >= divisor.c_.size() ? c_.size() - divisor.c_.size() + 1 : 0);
  const std::size_t dd = divisor.c_.size() - 1;
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    auto [q, r] = rem.c_.back().divmod(divisor.c_.back());
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    const std::size_t shift = rem.c_.size() - 1 - dd;
    const std::size_t before = rem.c_.size();
    for (std::size_t j = 0; j <= dd; ++j) rem.c_[shift + j] -= q * divisor.c_[j];
    rem.trim();
    quot[shift] = std::move(q);
    if (rem.c_.size() >= before) throw std::logic_error("division failed to reduce degree");
  }
  if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
  return PolyZ(std::move(quot));
}

PolyZ& PolyZ::operator+=(const PolyZ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

PolyZ& PolyZ::operator-=(const PolyZ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

PolyZ& PolyZ::operator*=(const PolyW& s) {
  for (auto& c : c_) c = c * s;
  trim();
  return *this;
}

PolyZ operator-(const PolyZ& a) {
  PolyZ r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

PolyZ operator*(const PolyZ& a, const PolyZ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<PolyW> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      v[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return PolyZ(std::move(v));
}

std::string PolyZ::str(const std::string& mark) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    const bool simple = c_[i].size() == 1;
    const bool negative = simple && c_[i].coeff(0).sign() < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const BigRational mag = simple ? c_[i].coeff(0).abs() : BigRational();
    if (i == 0) {
      os << (simple ? mag.str() : c_[i].str(mark));
      continue;
    }
    if (simple && mag != BigRational(1)) {
      os << mag << "*";
    } else if (!simple) {
      os << "(" << c_[i].str(mark) << ")*";
    }
    os << "z";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace runsgf
