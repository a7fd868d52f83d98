#include <doctest.h>

#include <random>

#include "runsgf/rational_gf.hpp"
#include "test_support.hpp"

using namespace runsgf;
using testing::q;

namespace {

const PolyW w = PolyW::variable();
const PolyZ z = PolyZ::monomial(PolyW(BigRational(1)), 1);

// Cofactor expansion, for checking the fraction-free determinant.
PolyZ laplace(const std::vector<std::vector<PolyZ>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  PolyZ total;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<PolyZ>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<PolyZ> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) row.push_back(a[r][c]);
      }
      minor.push_back(row);
    }
    const PolyZ term = a[0][j] * laplace(minor);
    if (j % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

// Power series of num/den by long division, one coefficient at a time.
std::vector<PolyW> long_division(const PolyZ& num, const PolyZ& den, std::size_t n_max) {
  REQUIRE(den.coeff(0) == PolyW(BigRational(1)));
  std::vector<PolyW> out;
  for (std::size_t n = 0; n <= n_max; ++n) {
    PolyW c = num.coeff(n);
    for (std::size_t j = 1; j <= n; ++j) c -= den.coeff(j) * out[n - j];
    out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("rational arithmetic stays in lowest terms") {
  CHECK(q(2, 4) == q(1, 2));
  CHECK(q(-3, -6).str() == "1/2");
  CHECK(q(3, -6).str() == "-1/2");
  CHECK((q(1, 6) + q(1, 3) + q(1, 2)) == BigRational(1));
  CHECK(q(2, 3).pow(3u) == q(8, 27));
  CHECK(q(2, 3).pow(-2L) == q(9, 4));
  CHECK_THROWS_AS(BigRational(0).pow(-1L), std::domain_error);
  CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(0)), std::domain_error);
  CHECK_THROWS_AS(q(1) / BigRational(0), std::domain_error);
  CHECK(q(1, 3) < q(1, 2));
}

TEST_CASE("parsing accepts fractions, integers and terminating decimals") {
  CHECK(BigRational::parse("1/6") == q(1, 6));
  CHECK(BigRational::parse(" 0.125 ") == q(1, 8));
  CHECK(BigRational::parse(".5") == q(1, 2));
  CHECK(BigRational::parse("-3") == q(-3));
  CHECK(BigRational::parse("4/8") == q(1, 2));
  CHECK_THROWS_AS(BigRational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(BigRational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(BigRational::parse("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(BigRational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(BigRational::parse("1e-3"), std::invalid_argument);
}

TEST_CASE("decimal rendering rounds half to even") {
  CHECK(q(1, 3).to_decimal(10) == "0.3333333333");
  CHECK(q(2, 3).to_decimal(10) == "0.6666666667");
  CHECK(q(1, 8).to_decimal(2) == "0.12");
  CHECK(q(3, 8).to_decimal(2) == "0.38");
  CHECK(q(5, 2).to_decimal(1) == "2");
  CHECK(q(7, 2).to_decimal(1) == "4");
  CHECK(q(-1, 8).to_decimal(2) == "-0.12");
  CHECK(BigRational(0).to_decimal(10) == "0");
  CHECK(q(409, 181398528).to_decimal(10) == "0.000002254704073");
  CHECK(q(123456, 1).to_decimal(3) == "123000");
  CHECK(q(999, 1000).to_decimal(2) == "1.0");
}

TEST_CASE("univariate polynomial division and gcd") {
  const QPoly a = (w - QPoly(q(1))) * (w - QPoly(q(2)));
  const QPoly b = (w - QPoly(q(1))) * (w + QPoly(q(3)));
  CHECK(QPoly::gcd(a, b) == w - QPoly(q(1)));
  CHECK(QPoly::gcd(QPoly(), QPoly()).is_zero());
  const auto [quot, rem] = a.divmod(w - QPoly(q(2)));
  CHECK(quot == w - QPoly(q(1)));
  CHECK(rem.is_zero());
  CHECK_THROWS_AS(a.divmod(QPoly()), std::domain_error);
  CHECK(a.derivative() == w * QPoly(q(2)) - QPoly(q(3)));
  CHECK(a.evaluate(q(2)) == BigRational(0));
  CHECK(a.scale_argument(q(2)).evaluate(q(1)) == a.evaluate(q(2)));
  CHECK(QPoly(std::vector<BigRational>{q(1), q(0), q(0)}).degree() == 0);
  CHECK(QPoly().degree() == kZeroDegree);
}

TEST_CASE("exact division in Q[w][z]") {
  std::mt19937 gen(11);
  for (int trial = 0; trial < 40; ++trial) {
    const PolyZ a = testing::random_polyz(gen, 4, 2);
    PolyZ b = testing::random_polyz(gen, 3, 2);
    if (b.is_zero()) continue;
    CHECK((a * b).divide_exact(b) == a);
  }
  CHECK_THROWS_AS((z + PolyZ(q(1))).divide_exact(z * z), std::domain_error);
  CHECK_THROWS_AS(z.divide_exact(PolyZ()), std::domain_error);
}

TEST_CASE("z-content is the shared univariate factor of all mark slices") {
  const QPoly one_minus_z({q(1), q(-1)});
  const PolyZ p = PolyZ::from_z(one_minus_z) * (PolyZ(w) + z);
  CHECK(p.z_content() == QPoly({q(1), q(-1)}).monic());
  const PolyZ r = PolyZ::from_z(one_minus_z) * PolyZ(w) + PolyZ::from_z(one_minus_z) * z;
  CHECK(r.divide_by_z(one_minus_z) == PolyZ(w) + z);
}

TEST_CASE("normalization divides out shared z-factors and fixes den(0) = 1") {
  const PolyZ one_minus_z = PolyZ(q(1)) - z;
  const RationalGF g(z * one_minus_z * PolyZ(q(3)), one_minus_z * one_minus_z * PolyZ(q(3)));
  CHECK(g.numerator() == z);
  CHECK(g.denominator() == one_minus_z);

  const RationalGF kept(z * one_minus_z, one_minus_z * one_minus_z, RationalGF::Reduce::none);
  CHECK(kept.denominator() == one_minus_z * one_minus_z);
  CHECK(kept == g);
  CHECK_FALSE(kept.identical(g));

  CHECK_THROWS_AS(RationalGF(PolyZ(q(1)), z), MalformedGF);
  CHECK_THROWS_AS(RationalGF(PolyZ(q(1)), PolyZ()), MalformedGF);
  CHECK_THROWS_AS(RationalGF(PolyZ(q(1)), PolyZ(w) + z), MalformedGF);
}

TEST_CASE("series of simple functions") {
  const RationalGF geometric(PolyZ(q(1)), PolyZ(q(1)) - z * PolyZ(q(2)));
  const auto c = series_coeffs(geometric, 10);
  for (std::size_t n = 0; n <= 10; ++n) CHECK(c[n] == PolyW(q(1L << n)));

  // 1 / (1 - (1 + w) z): binomial rows.
  const RationalGF rows(PolyZ(q(1)), PolyZ(q(1)) - z * PolyZ(w + PolyW(q(1))));
  const auto r = series_coeffs(rows, 6);
  CHECK(r[6] == PolyW({q(1), q(6), q(15), q(20), q(15), q(6), q(1)}));

  CHECK(series_coeffs(RationalGF(), 3).size() == 4);
}

TEST_CASE("property: series agrees with long division") {
  std::mt19937 gen(5);
  for (int trial = 0; trial < 50; ++trial) {
    const PolyZ num = testing::random_polyz(gen, 5, 2);
    PolyZ den = testing::random_polyz(gen, 4, 2) * z + PolyZ(q(1));
    const RationalGF f(num, den, RationalGF::Reduce::none);
    CHECK(series_coeffs(f, 15) == long_division(num, den, 15));
  }
}

TEST_CASE("property: field operations on rational functions") {
  std::mt19937 gen(7);
  auto random_gf = [&] {
    return RationalGF(testing::random_polyz(gen, 3, 1), testing::random_polyz(gen, 3, 1) * z + PolyZ(q(1)));
  };
  for (int trial = 0; trial < 30; ++trial) {
    const RationalGF a = random_gf();
    const RationalGF b = random_gf();
    const RationalGF c = random_gf();
    CHECK((a + b) - b == a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == RationalGF());
    CHECK(-(-a) == a);

    // The product's series is the Cauchy product of the series.
    const auto sa = series_coeffs(a, 8);
    const auto sb = series_coeffs(b, 8);
    const auto sab = series_coeffs(a * b, 8);
    for (std::size_t n = 0; n <= 8; ++n) {
      PolyW conv;
      for (std::size_t i = 0; i <= n; ++i) conv += sa[i] * sb[n - i];
      CHECK(sab[n] == conv);
    }
  }
}

TEST_CASE("mark operations") {
  const RationalGF f(PolyZ(w * w) * z, PolyZ(q(1)) - z);
  CHECK(f.mark_degree() == 2);
  CHECK(f.evaluate_mark(q(3)) == RationalGF(PolyZ(q(9)) * z, PolyZ(q(1)) - z));
  CHECK(f.mark_derivative() == RationalGF(PolyZ(w * QPoly(q(2))) * z, PolyZ(q(1)) - z));
  CHECK(f.scale_z(q(2)) == RationalGF(PolyZ(w * w * QPoly(q(2))) * z, PolyZ(q(1)) - z * PolyZ(q(2))));
  CHECK(f.times_mark(w) == RationalGF(PolyZ(w * w * w) * z, PolyZ(q(1)) - z));

  // d/dw of 1/(1 - w z) is z/(1 - w z)^2.
  const RationalGF g(PolyZ(q(1)), PolyZ(q(1)) - PolyZ(w) * z);
  const PolyZ d = PolyZ(q(1)) - PolyZ(w) * z;
  CHECK(g.mark_derivative() == RationalGF(z, d * d));
}

TEST_CASE("property: fraction-free determinant equals cofactor expansion") {
  std::mt19937 gen(3);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<std::vector<PolyZ>> a(n, std::vector<PolyZ>(n));
      for (auto& row : a) {
        for (auto& x : row) x = testing::random_polyz(gen, 2, 1);
      }
      CHECK(bareiss_determinant(a) == laplace(a));
    }
  }
  // Needs a row swap: the leading entry is zero.
  std::vector<std::vector<PolyZ>> swap{{PolyZ(), z}, {PolyZ(q(1)), PolyZ(w)}};
  CHECK(bareiss_determinant(swap) == -z);
  std::vector<std::vector<PolyZ>> singular{{z, z}, {z, z}};
  CHECK(bareiss_determinant(singular).is_zero());
}

TEST_CASE("property: fraction-field solve satisfies the system") {
  std::mt19937 gen(9);
  // Checking by substitution is far slower than the solve, so stay at 3x3.
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      GFMatrix m(n, std::vector<RationalGF>(n));
      std::vector<RationalGF> rhs(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const RationalGF entry(testing::random_polyz(gen, 2, 1) * z, PolyZ(q(1)) - z * PolyZ(testing::random_polyw(gen, 1)));
          m[i][j] = i == j ? RationalGF(q(1)) - entry : entry;
        }
        rhs[i] = RationalGF(testing::random_polyz(gen, 2, 1), PolyZ(q(1)) + z);
      }
      const auto x = fraction_field_solve(m, rhs);
      for (std::size_t i = 0; i < n; ++i) {
        RationalGF lhs;
        for (std::size_t j = 0; j < n; ++j) lhs += m[i][j] * x[j];
        CHECK(lhs == rhs[i]);
      }
    }
  }
}

TEST_CASE("singular systems are reported") {
  const RationalGF one(q(1));
  GFMatrix m{{one, one}, {one, one}};
  std::vector<RationalGF> rhs{one, one};
  CHECK_THROWS_AS(fraction_field_solve(m, rhs), DegenerateSystem);
}
