#include "runsgf/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace runsgf {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

BigInt pow10(unsigned e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// floor(log10(x)) for x > 0.
long decimal_exponent(const mpq_class& x) {
  long e = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 10));
  auto ten_to = [](long k) {
    mpq_class t(1);
    const mpq_class ten(10);
    for (long i = 0; i < (k < 0 ? -k : k); ++i) t *= ten;
    return k < 0 ? mpq_class(1 / t) : t;
  };
  while (x < ten_to(e)) --e;
  while (x >= ten_to(e + 1)) ++e;
  return e;
}

}  // namespace

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto fail = [&] {
    return std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
  };

  BigRational result;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw fail();
    const BigInt d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    result = BigRational(BigInt(std::string(num)), d);
  } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    const auto frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || !all_digits(frac)) throw fail();
    const BigInt scale = pow10(static_cast<unsigned>(frac.size()));
    result = BigRational(BigInt(std::string(whole)) * scale + BigInt(std::string(frac)), scale);
  } else {
    if (!all_digits(s)) throw fail();
    result = BigRational(BigInt(std::string(s)));
  }
  return negative ? -result : result;
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  q_ /= o.q_;
  return *this;
}

BigRational BigRational::abs() const {
  BigRational r;
  r.q_ = ::abs(q_);
  return r;
}

BigRational BigRational::pow(unsigned exponent) const {
  BigRational r;
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), exponent);
  r.q_ = mpq_class(num, den);
  return r;
}

BigRational BigRational::pow(long exponent) const {
  if (exponent >= 0) return pow(static_cast<unsigned>(exponent));
  if (is_zero()) throw std::domain_error("negative power of zero");
  return BigRational(1) / pow(static_cast<unsigned>(-exponent));
}

std::string BigRational::to_decimal(int sig_digits) const {
  if (sig_digits < 1) throw std::invalid_argument("significant digits must be positive");
  if (is_zero()) return "0";
  const mpq_class a = ::abs(q_);
  long e = decimal_exponent(a);

  // Scale so that exactly sig_digits digits sit before the decimal point.
  long shift = sig_digits - 1 - e;
  mpq_class scaled = a;
  if (shift >= 0) {
    scaled *= mpq_class(pow10(static_cast<unsigned>(shift)));
  } else {
    scaled /= mpq_class(pow10(static_cast<unsigned>(-shift)));
  }
  mpz_class floor_part;
  mpz_fdiv_q(floor_part.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  const mpq_class remainder = scaled - mpq_class(floor_part);
  const int half = cmp(remainder, mpq_class(1, 2));
  if (half > 0 || (half == 0 && mpz_odd_p(floor_part.get_mpz_t()))) floor_part += 1;
  if (floor_part == pow10(static_cast<unsigned>(sig_digits))) {
    floor_part = pow10(static_cast<unsigned>(sig_digits - 1));
    --shift;
  }

  const std::string digits = floor_part.get_str();
  std::string out = sign() < 0 ? "-" : "";
  const long n = static_cast<long>(digits.size());
  if (shift <= 0) {
    out += digits + std::string(static_cast<size_t>(-shift), '0');
  } else if (shift >= n) {
    out += "0." + std::string(static_cast<size_t>(shift - n), '0') + digits;
  } else {
    out += digits.substr(0, static_cast<size_t>(n - shift)) + "." + digits.substr(static_cast<size_t>(n - shift));
  }
  return out;
}

BigInt pow(const BigInt& base, unsigned exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

}  // namespace runsgf
