#include "runsgf/patterns.hpp"

#include <sstream>
#include <stdexcept>

namespace runsgf {

namespace {

const PolyW kOne{BigRational(1)};

// 1 - c·z
PolyZ one_minus(const BigRational& c) { return PolyZ(std::vector<PolyW>{kOne, PolyW(-c)}); }

// c·z^d
PolyZ z_power(const BigRational& c, std::size_t d) { return PolyZ::monomial(PolyW(c), d); }

// w - 1
PolyW w_minus_one() { return PolyW(std::vector<BigRational>{BigRational(-1), BigRational(1)}); }

PolyZ power(const PolyZ& p, std::size_t e) {
  PolyZ r(BigRational(1));
  for (std::size_t i = 0; i < e; ++i) r = r * p;
  return r;
}

// prod_i p_i^{k_i}
BigRational pattern_weight(const PatternSpec& spec, const ProbModel& probs) {
  BigRational w(1);
  for (std::size_t s = 1; s <= spec.ell(); ++s) w *= probs.p(s).pow(spec.k(s));
  return w;
}

// prod_{i=2}^{l-1} (1 - p_i z); the empty product for l = 2.
PolyZ middle_product(const ProbModel& probs) {
  PolyZ r(BigRational(1));
  for (std::size_t s = 2; s + 1 <= probs.size(); ++s) r = r * one_minus(probs.p(s));
  return r;
}

std::size_t resolve_prefix(const PatternSpec& spec, std::size_t prefix) {
  if (prefix == 0) return spec.ell();
  if (prefix > spec.ell()) throw std::invalid_argument("prefix longer than the pattern");
  return prefix;
}

DistributionTable table_from_poly(const PatternSpec& spec, std::size_t n, TableMode mode, const PolyW& f) {
  const std::size_t m_max = spec.max_occurrences(n);
  if (f.degree() > static_cast<long>(m_max)) {
    throw std::logic_error("length " + std::to_string(n) + " produced " + std::to_string(f.degree()) +
                           " occurrences, above the bound " + std::to_string(m_max));
  }
  DistributionTable t{n, mode, std::vector<BigRational>(m_max + 1)};
  for (std::size_t m = 0; m <= m_max; ++m) t.values[m] = f.coeff(m);
  return t;
}

std::vector<PolyW> run_recurrence(const RecurrenceSpec& rec, std::size_t n_max) {
  std::vector<PolyW> f;
  f.reserve(n_max + 1);
  const PolyW jump = w_minus_one() * rec.pattern_coeff;
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (n < rec.lag) {
      f.push_back(kOne);
      continue;
    }
    PolyW next;
    for (std::size_t i = 1; i <= rec.coeffs.size() && i <= n; ++i) {
      if (!rec.coeffs[i - 1].is_zero()) next += f[n - i] * rec.coeffs[i - 1];
    }
    next += jump * f[n - rec.lag];
    f.push_back(std::move(next));
  }
  return f;
}

// Elementary symmetric sums of {1, p_2, ..., p_{l-1}} rendered as text:
// entry j lists the terms of e_j in lexicographic subset order.
std::vector<std::vector<std::string>> symbolic_elementary(std::size_t ell) {
  std::vector<std::string> factors{"1"};
  for (std::size_t s = 2; s + 1 <= ell; ++s) factors.push_back("p_" + std::to_string(s));
  const std::size_t r = factors.size();
  std::vector<std::vector<std::string>> e(r + 1);
  for (std::size_t j = 1; j <= r; ++j) {
    std::vector<std::size_t> idx(j);
    for (std::size_t i = 0; i < j; ++i) idx[i] = i;
    while (true) {
      std::string term;
      for (auto i : idx) {
        if (i > 0) term += factors[i];
      }
      e[j].push_back(term.empty() ? "1" : term);
      std::size_t pos = j;
      while (pos > 0 && idx[pos - 1] == r - j + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < j; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return e;
}

std::string join_terms(const std::vector<std::string>& terms) {
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) s += (i ? " + " : "") + terms[i];
  return s;
}

// "(1 + p_2) " / "p_2 " / "" for the unit coefficient.
std::string coefficient_prefix(const std::vector<std::string>& terms) {
  if (terms.size() == 1) return terms[0] == "1" ? "" : terms[0] + " ";
  return "(" + join_terms(terms) + ") ";
}

}  // namespace

namespace detail {

BlockGFs run_blocks(unsigned k, const BigRational& weight) {
  const PolyZ den = one_minus(weight);
  return {RationalGF(z_power(weight, 1) - z_power(weight.pow(k), k), den),
          RationalGF(z_power(weight.pow(k), k), den)};
}

RightEndGFs right_end_closed(std::span<const unsigned> thresholds, std::span<const BigRational> weights) {
  if (thresholds.empty() || thresholds.size() > weights.size()) throw std::invalid_argument("bad right-end prefix");
  BigRational coeff(1);
  BigRational sum;
  std::size_t k = 0;
  PolyZ den(BigRational(1));
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    coeff *= weights[i].pow(thresholds[i]);
    sum += weights[i];
    k += thresholds[i];
    if (i > 0) den = den * one_minus(weights[i]);
  }
  den = den * one_minus(sum);
  RationalGF at_end(z_power(coeff, k), den);
  RationalGF all(z_power(sum, 1), one_minus(sum));
  return {at_end, all - at_end};
}

}  // namespace detail

BlockGFs block_gfs(const PatternSpec& spec, const ProbModel& probs, std::size_t state) {
  check_compatible(spec, probs);
  if (state < 1 || state > spec.ell()) throw std::out_of_range("state label out of range");
  return detail::run_blocks(spec.k(state), probs.p(state));
}

RightEndGFs right_end_gf(const PatternSpec& spec, const ProbModel& probs, std::size_t prefix) {
  check_compatible(spec, probs);
  prefix = resolve_prefix(spec, prefix);
  return detail::right_end_closed(spec.thresholds().first(prefix), probs.probs());
}

RightEndGFs right_end_gf_iid(const PatternSpec& spec, std::size_t prefix) {
  prefix = resolve_prefix(spec, prefix);
  std::size_t k = 0;
  for (std::size_t s = 1; s <= prefix; ++s) k += spec.k(s);
  const BigRational states(prefix);
  const PolyZ den = power(one_minus(BigRational(1)), prefix - 1) * one_minus(states);
  RationalGF at_end(z_power(BigRational(1), k), den);
  RationalGF all(z_power(states, 1), one_minus(states));
  return {at_end, all - at_end};
}

RationalGF pattern_gf(const PatternSpec& spec, const ProbModel& probs) {
  check_compatible(spec, probs);
  const PolyZ num = middle_product(probs);
  const PolyZ den = one_minus(BigRational(1)) * num - z_power(pattern_weight(spec, probs), spec.k_total()) * w_minus_one();
  return RationalGF(num, den);
}

RationalGF pattern_gf_iid(const PatternSpec& spec) {
  const PolyZ num = power(one_minus(BigRational(1)), spec.ell() - 2);
  const PolyZ den = num * one_minus(BigRational(spec.ell())) - z_power(BigRational(1), spec.k_total()) * w_minus_one();
  return RationalGF(num, den);
}

RecurrenceSpec recurrence_spec(const PatternSpec& spec, const ProbModel& probs) {
  check_compatible(spec, probs);
  const PolyZ u = one_minus(BigRational(1)) * middle_product(probs);
  RecurrenceSpec rec;
  for (std::size_t j = 1; j < spec.ell(); ++j) rec.coeffs.push_back(-u.coeff(j).coeff(0));
  rec.pattern_coeff = pattern_weight(spec, probs);
  rec.lag = spec.k_total();
  return rec;
}

std::string expansion_text(std::size_t ell) {
  const auto e = symbolic_elementary(ell);
  std::ostringstream os;
  os << "U_" << ell << "(z) = ";
  if (ell > 2) {
    os << "(1-z)";
    for (std::size_t s = 2; s + 1 <= ell; ++s) os << "(1-p_" << s << "z)";
    os << " = ";
  }
  os << "1";
  for (std::size_t j = 1; j < e.size(); ++j) {
    os << (j % 2 == 1 ? " - " : " + ") << coefficient_prefix(e[j]) << "z";
    if (j > 1) os << "^" << j;
  }
  return os.str();
}

std::string recurrence_text(std::size_t ell) {
  const auto e = symbolic_elementary(ell);
  const std::string f = "F_{" + std::to_string(ell) + ",";
  std::ostringstream os;
  os << f << "n}(w) = ";
  for (std::size_t j = 1; j < e.size(); ++j) {
    if (j > 1) os << (j % 2 == 1 ? " + " : " - ");
    os << coefficient_prefix(e[j]) << f << "n-" << j << "}(w)";
  }
  os << " + (w-1) ";
  if (ell == 2) {
    os << "p_1^{k_1}p_2^{k_2}";
  } else {
    os << "\\prod_{i=1}^{" << ell << "} p_i^{k_i}";
  }
  os << " " << f << "n-k}(w)";
  return os.str();
}

DistributionTable distribution_from_recurrence(const PatternSpec& spec, const RecurrenceSpec& rec, std::size_t n) {
  const auto f = run_recurrence(rec, n);
  return table_from_poly(spec, n, TableMode::probability, f[n]);
}

std::vector<DistributionTable> distributions_up_to(const PatternSpec& spec, const ProbModel& probs, std::size_t n_max) {
  return distributions_up_to(spec, recurrence_spec(spec, probs), n_max);
}

std::vector<DistributionTable> distributions_up_to(const PatternSpec& spec, const RecurrenceSpec& rec, std::size_t n_max) {
  const auto f = run_recurrence(rec, n_max);
  std::vector<DistributionTable> out;
  out.reserve(f.size());
  for (std::size_t n = 0; n < f.size(); ++n) out.push_back(table_from_poly(spec, n, TableMode::probability, f[n]));
  return out;
}

DistributionTable distribution(const PatternSpec& spec, const ProbModel& probs, std::size_t n) {
  return distribution_from_recurrence(spec, recurrence_spec(spec, probs), n);
}

std::vector<DistributionTable> tables_from_series(const PatternSpec& spec, std::span<const PolyW> coeffs, TableMode mode) {
  std::vector<DistributionTable> out;
  out.reserve(coeffs.size());
  for (std::size_t n = 0; n < coeffs.size(); ++n) out.push_back(table_from_poly(spec, n, mode, coeffs[n]));
  return out;
}

std::vector<DistributionTable> counts_iid_up_to(const PatternSpec& spec, std::size_t n_max) {
  return tables_from_series(spec, series_coeffs(pattern_gf_iid(spec), n_max), TableMode::count);
}

DistributionTable counts_iid(const PatternSpec& spec, std::size_t n) { return counts_iid_up_to(spec, n).back(); }

RationalGF mean_gf(const RationalGF& g) { return g.mark_derivative().evaluate_mark(BigRational(1)); }

BigRational expected_count(const PatternSpec& spec, const ProbModel& probs, std::size_t n) {
  const auto c = series_coeffs(mean_gf(pattern_gf(spec, probs)), n);
  return c[n].coeff(0);
}

BigRational expected_count_principal(const PatternSpec& spec, const ProbModel& probs, std::size_t n) {
  check_compatible(spec, probs);
  if (n < spec.k_total()) throw std::invalid_argument("principal part needs n >= k");
  BigRational den(1);
  for (std::size_t s = 2; s + 1 <= spec.ell(); ++s) den *= BigRational(1) - probs.p(s);
  return pattern_weight(spec, probs) * BigRational(n - spec.k_total() + 1) / den;
}

BigRational mean_closed_form_ell3(const PatternSpec& spec, const ProbModel& probs, std::size_t n) {
  check_compatible(spec, probs);
  if (spec.ell() != 3) throw std::invalid_argument("closed-form mean is for three states");
  if (n < spec.k_total()) return {};
  const BigRational& p2 = probs.p(2);
  const BigRational q = BigRational(1) - p2;
  const unsigned j = static_cast<unsigned>(n - spec.k_total() + 1);
  return pattern_weight(spec, probs) * (BigRational(j) / q - p2 * (BigRational(1) - p2.pow(j)) / (q * q));
}

BigRational mean_closed_form_iid_ell3(const PatternSpec& spec, std::size_t n) {
  if (spec.ell() != 3) throw std::invalid_argument("closed-form mean is for three states");
  if (n < spec.k_total()) return {};
  const long k = spec.k_total();
  const long nn = static_cast<long>(n);
  const BigRational three(3);
  const BigRational quarter(BigInt(1), BigInt(4));
  return three.pow(-nn) * (quarter + quarter * BigRational(1 + 2 * nn - 2 * k) * three.pow(nn - k + 1));
}

}  // namespace runsgf
