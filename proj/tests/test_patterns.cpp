#include <doctest.h>

#include <algorithm>
#include <cctype>

#include "runsgf/oracle.hpp"
#include "runsgf/patterns.hpp"
#include "test_support.hpp"

using namespace runsgf;
using testing::q;

namespace {

const PolyW kOne{BigRational(1)};
const PolyW w = PolyW::variable();
const PolyZ z = PolyZ::monomial(kOne, 1);

PolyZ linear(const BigRational& c) { return PolyZ(q(1)) - z * PolyZ(c); }

PolyZ z_pow(std::size_t k) { return PolyZ::monomial(kOne, k); }

std::string squeeze(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  return s;
}

DistributionTable counts_table(std::size_t n, std::vector<long> values) {
  DistributionTable t;
  t.n = n;
  t.mode = TableMode::count;
  for (long v : values) t.values.push_back(q(v));
  return t;
}

}  // namespace

TEST_CASE("pattern and probability validation") {
  CHECK_THROWS_AS(PatternSpec({3}), std::invalid_argument);
  CHECK_THROWS_AS(PatternSpec({}), std::invalid_argument);
  CHECK_THROWS_AS(PatternSpec({1, 0, 2}), std::invalid_argument);
  const PatternSpec spec({2, 2, 3});
  CHECK(spec.ell() == 3);
  CHECK(spec.k_total() == 7);
  CHECK(spec.k(3) == 3);
  CHECK(spec.max_occurrences(17) == 2);

  CHECK_THROWS_AS(ProbModel({q(1, 2), q(1, 3)}), std::invalid_argument);
  CHECK_THROWS_AS(ProbModel({q(1), q(0)}), std::invalid_argument);
  CHECK_THROWS_AS(ProbModel({q(3, 2), q(-1, 2)}), std::invalid_argument);
  CHECK(ProbModel::uniform(4).p(2) == q(1, 4));
  CHECK_THROWS_AS(check_compatible(spec, ProbModel::uniform(2)), std::invalid_argument);
}

TEST_CASE("run block generating functions") {
  const PatternSpec spec({1, 2});
  const ProbModel probs({q(1, 2), q(1, 2)});
  const BlockGFs first = block_gfs(spec, probs, 1);
  CHECK(first.short_runs.is_zero());
  CHECK(first.long_runs == RationalGF(z * PolyZ(q(1, 2)), linear(q(1, 2))));

  const BlockGFs second = block_gfs(spec, probs, 2);
  CHECK(second.short_runs == RationalGF(z * PolyZ(q(1, 2)) - z * z * PolyZ(q(1, 4)), linear(q(1, 2))));
  CHECK(second.long_runs == RationalGF(z * z * PolyZ(q(1, 4)), linear(q(1, 2))));

  std::mt19937 gen(17);
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned k = gen() % 5 + 1;
    const BigRational p = q(static_cast<long>(gen() % 9 + 1), 10);
    const BlockGFs b = detail::run_blocks(k, p);
    CHECK(b.short_runs + b.long_runs == RationalGF(z * PolyZ(p), linear(p)));
  }
}

TEST_CASE("right-end functions") {
  const ProbModel probs({q(1, 6), q(1, 3), q(1, 2)});
  const PatternSpec two({2, 3});
  const ProbModel p2({q(1, 4), q(3, 4)});
  const BigRational c = q(1, 4).pow(2u) * q(3, 4).pow(3u);
  CHECK(right_end_gf(two, p2).at_end == RationalGF(z_pow(5) * PolyZ(c), linear(q(3, 4)) * (linear(q(1, 4)) - z * PolyZ(q(3, 4)))));

  const PatternSpec spec({2, 2, 3});
  const auto re = right_end_gf(spec, probs);
  CHECK(series_coeffs(re.at_end, 7)[7] == PolyW(q(1, 2592)));
  CHECK(re.at_end + re.complement == RationalGF(z, linear(q(1))));

  // Over a strict prefix the total weight is below one.
  const auto prefix = right_end_gf(spec, probs, 2);
  CHECK(prefix.at_end + prefix.complement == RationalGF(z * PolyZ(q(1, 2)), linear(q(1, 2))));

  for (std::size_t ell = 2; ell <= 5; ++ell) {
    PatternSpec s(std::vector<unsigned>(ell, 2));
    PolyZ den = linear(BigRational(ell));
    for (std::size_t i = 1; i < ell; ++i) den = den * linear(q(1));
    CHECK(right_end_gf_iid(s).at_end == RationalGF(z_pow(2 * ell), den));
  }
}

TEST_CASE("closed-form double generating functions") {
  const PatternSpec two({1, 2});
  const ProbModel p2({q(1, 3), q(2, 3)});
  const PolyZ wm1(w - kOne);
  CHECK(pattern_gf(two, p2) == RationalGF(PolyZ(q(1)), linear(q(1)) - wm1 * z_pow(3) * PolyZ(q(4, 27))));
  CHECK(pattern_gf_iid(two) == RationalGF(PolyZ(q(1)), linear(q(2)) - wm1 * z_pow(3)));

  const PatternSpec three({2, 2, 3});
  const ProbModel p3({q(1, 6), q(1, 3), q(1, 2)});
  const BigRational c = q(1, 2592);
  CHECK(pattern_gf(three, p3) == RationalGF(linear(q(1, 3)), linear(q(1)) * linear(q(1, 3)) - wm1 * z_pow(7) * PolyZ(c)));
  CHECK(pattern_gf_iid(three) == RationalGF(linear(q(1)), linear(q(1)) * linear(q(3)) - wm1 * z_pow(7)));

  // Swapping k_1 and k_2 changes nothing in the counting case.
  CHECK(pattern_gf_iid(PatternSpec({3, 1, 2})) == pattern_gf_iid(PatternSpec({1, 3, 2})));

  CHECK(pattern_gf(three, p3).evaluate_mark(q(1)) == RationalGF(PolyZ(q(1)), linear(q(1))));

  const PatternSpec four({1, 2, 1, 2});
  CHECK(pattern_gf(four, ProbModel::uniform(4)).scale_z(q(4)) == pattern_gf_iid(four));
}

TEST_CASE("recurrence coefficients") {
  const PatternSpec two({1, 1});
  const auto r2 = recurrence_spec(two, ProbModel::uniform(2));
  CHECK(r2.coeffs == std::vector<BigRational>{q(1)});
  CHECK(r2.pattern_coeff == q(1, 4));
  CHECK(r2.lag == 2);

  const auto r3 = recurrence_spec(PatternSpec({2, 2, 3}), ProbModel({q(1, 6), q(1, 3), q(1, 2)}));
  CHECK(r3.coeffs == std::vector<BigRational>{q(4, 3), q(-1, 3)});
  CHECK(r3.lag == 7);

  const BigRational p2 = q(1, 5), p3 = q(3, 10);
  const auto r4 = recurrence_spec(PatternSpec({1, 1, 1, 1}), ProbModel({q(1, 10), p2, p3, q(2, 5)}));
  CHECK(r4.coeffs == std::vector<BigRational>{q(1) + p2 + p3, -(p2 + p3 + p2 * p3), p2 * p3});
}

TEST_CASE("recurrence and expansion text") {
  CHECK(squeeze(expansion_text(2)) == squeeze("U_2(z) = 1 - z"));
  CHECK(squeeze(recurrence_text(2)) == squeeze("F_{2, n}(w) = F_{2, n-1}(w) + (w-1) p_1^{k_1}p_2^{k_2} F_{2, n-k}(w)"));
  CHECK(squeeze(expansion_text(3)) == squeeze("U_3(z) = (1-z)  (1-p_2z) = 1 - (1 + p_2) z + p_2 z^2"));
  CHECK(squeeze(recurrence_text(3)) ==
        squeeze("F_{3, n}(w) = (1 + p_2) F_{3, n-1}(w) - p_2 F_{3, n-2}(w) + (w-1)\\prod_{i=1}^{3} p_i^{k_i} F_{3, n-k}(w)"));
  CHECK(squeeze(expansion_text(4)) ==
        squeeze("U_4(z) = (1-z)  (1-p_2z)(1-p_3z) = 1 - (1 + p_2 + p_3) z + (p_2 +p_3 +p_2p_3)z^2 - p_2p_3 z^3"));
  CHECK(squeeze(recurrence_text(5)).find("p_2p_3p_4F_{5,n-4}(w)") != std::string::npos);
}

TEST_CASE("distribution tables from the recurrence") {
  const PatternSpec spec({2, 2, 3});
  const ProbModel probs({q(1, 6), q(1, 3), q(1, 2)});
  for (std::size_t n = 0; n < 7; ++n) {
    const auto t = distribution(spec, probs, n);
    CHECK(t.values == std::vector<BigRational>{q(1)});
  }
  const auto t = distribution(spec, probs, 17);
  CHECK(t.values[0].to_decimal(10) == "0.9939258642");
  CHECK(t.values[1].to_decimal(10) == "0.006071881114");
  CHECK(t.values[2].to_decimal(10) == "0.000002254704073");
  CHECK(t.total() == q(1));

  const PatternSpec binary({1, 1});
  CHECK(counts_iid(binary, 3) == counts_table(3, {4, 4}));
  CHECK(counts_iid(binary, 2) == counts_table(2, {3, 1}));
  CHECK(counts_iid(spec, 5) == counts_table(5, {243}));
  CHECK(counts_iid(spec, 17).counts() == std::vector<BigInt>{BigInt(128210550), BigInt(929204), BigInt(409)});

  CHECK_THROWS_AS(distribution(spec, probs, 17).counts(), std::logic_error);
}

TEST_CASE("normalization and support up to n = 200") {
  std::mt19937 gen(23);
  for (std::size_t ell = 2; ell <= 4; ++ell) {
    const PatternSpec spec(std::vector<unsigned>(ell, 1));
    const ProbModel probs = testing::random_probs(gen, ell);
    for (const auto& t : distributions_up_to(spec, probs, 200)) {
      CHECK(t.total() == q(1));
      CHECK(t.values.size() == spec.max_occurrences(t.n) + 1);
    }
    const BigRational base(ell);
    for (const auto& t : counts_iid_up_to(spec, 80)) CHECK(t.total() == base.pow(static_cast<unsigned>(t.n)));
  }
}

TEST_CASE("property: recurrence, series and oracle agree") {
  std::mt19937 gen(29);
  for (std::size_t ell = 2; ell <= 4; ++ell) {
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<unsigned> k(ell);
      for (auto& x : k) x = gen() % 3 + 1;
      const PatternSpec spec(k);
      const ProbModel probs = testing::random_probs(gen, ell);
      const auto rec = distributions_up_to(spec, probs, 40);
      CHECK(rec == tables_from_series(spec, series_coeffs(pattern_gf(spec, probs), 40), TableMode::probability));
      for (std::size_t n = 0; n <= 14; ++n) CHECK(rec[n] == oracle::dp_distribution(spec, probs, n));
    }
  }
}

TEST_CASE("tables reject coefficients beyond the occurrence bound") {
  const PatternSpec spec({1, 1});
  std::vector<PolyW> bad{kOne, w * w};
  CHECK_THROWS_AS(tables_from_series(spec, bad, TableMode::count), std::logic_error);
}

TEST_CASE("mean occurrence count") {
  const PatternSpec spec({2, 2, 3});
  const ProbModel probs({q(1, 6), q(1, 3), q(1, 2)});
  const auto t = distribution(spec, probs, 17);
  CHECK(expected_count(spec, probs, 17) == t.first_moment());
  CHECK(mean_closed_form_ell3(spec, probs, 17) == t.first_moment());
  CHECK(expected_count(spec, probs, 6) == q(0));
  CHECK(mean_closed_form_ell3(spec, probs, 6) == q(0));

  // With two states the linear part is the whole mean.
  const PatternSpec two({2, 1});
  const ProbModel p2({q(2, 5), q(3, 5)});
  for (std::size_t n = 3; n <= 20; ++n) CHECK(expected_count(two, p2, n) == expected_count_principal(two, p2, n));

  const PatternSpec six({2, 2, 2});
  const ProbModel third = ProbModel::uniform(3);
  CHECK(expected_count_principal(six, third, 20) == q(1, 729) * q(15) * q(3, 2));
  CHECK(expected_count_principal(six, third, 6) == q(1, 729) * q(3, 2));
  CHECK_THROWS_AS(expected_count_principal(six, third, 5), std::invalid_argument);

  for (std::size_t n = 0; n <= 40; ++n) {
    const BigRational scale = BigRational(3).pow(static_cast<unsigned>(n));
    CHECK(mean_closed_form_iid_ell3(six, n) == expected_count(six, third, n));
    CHECK(mean_closed_form_iid_ell3(six, n) * scale == counts_iid(six, n).first_moment());
  }
}
