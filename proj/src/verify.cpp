#include "runsgf/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "runsgf/constructions.hpp"
#include "runsgf/oracle.hpp"
#include "runsgf/patterns.hpp"

namespace runsgf {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
  return s;
}

std::string describe(const PatternSpec& spec, const std::optional<ProbModel>& probs) {
  std::vector<std::string> k, p;
  for (unsigned v : spec.thresholds()) k.push_back(std::to_string(v));
  std::string s = "l=" + std::to_string(spec.ell()) + " k=(" + join(k) + ")";
  if (probs) {
    for (const auto& v : probs->probs()) p.push_back(v.str());
    s += " p=(" + join(p) + ")";
  } else {
    s += " iid";
  }
  return s;
}

bool fits_budget(std::size_t ell, std::size_t n, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > budget / ell) return false;
    total *= ell;
  }
  return true;
}

// Runs the named comparisons in order and stops at the first failure.
class Checker {
 public:
  explicit Checker(std::string name) { result_.name = std::move(name); }

  void tables(const std::string& what, const std::vector<DistributionTable>& expected,
              const std::vector<DistributionTable>& actual) {
    if (!result_.pass) return;
    if (auto diff = first_difference(expected, actual)) fail(what + ": " + *diff);
  }

  void totals(const std::vector<DistributionTable>& tables, const std::function<BigRational(std::size_t)>& expected) {
    if (!result_.pass) return;
    for (const auto& t : tables) {
      if (t.total() != expected(t.n)) {
        fail("normalization: n=" + std::to_string(t.n) + " sums to " + t.total().str() + ", expected " + expected(t.n).str());
        return;
      }
    }
  }

  void that(bool ok, const std::string& what) {
    if (result_.pass && !ok) fail(what);
  }

  void fail(std::string detail) {
    result_.pass = false;
    result_.detail = std::move(detail);
  }

  CheckResult result() const { return result_; }

 private:
  CheckResult result_;
};

CheckResult check_point(const PatternSpec& spec, const ProbModel& probs, const VerifyOptions& opt) {
  Checker c(describe(spec, probs));
  try {
    RecurrenceSpec rec = recurrence_spec(spec, probs);
    if (opt.perturb) rec.coeffs.back() = -rec.coeffs.back();

    const RationalGF closed = pattern_gf(spec, probs);
    const RationalGF engine = pattern_gf_engine(spec, probs);
    std::vector<DistributionTable> dp, enumerated;
    for (std::size_t n = 0; n <= opt.n_max; ++n) {
      dp.push_back(oracle::dp_distribution(spec, probs, n));
      if (fits_budget(spec.ell(), n, opt.budget)) enumerated.push_back(oracle::enumerate_distribution(spec, probs, n, opt.budget));
    }
    std::vector<DistributionTable> dp_prefix(dp.begin(), dp.begin() + static_cast<long>(enumerated.size()));

    c.tables("enumeration vs dynamic program", enumerated, dp_prefix);
    c.tables("recurrence vs oracle", dp, distributions_up_to(spec, rec, opt.n_max));
    c.tables("closed-form series vs oracle", dp, tables_from_series(spec, series_coeffs(closed, opt.n_max), TableMode::probability));
    c.tables("transfer-engine series vs oracle", dp, tables_from_series(spec, series_coeffs(engine, opt.n_max), TableMode::probability));
    c.that(engine == closed, "transfer-engine G differs from the closed form");
    const auto re_closed = right_end_gf(spec, probs);
    const auto re_engine = right_end_gf_engine(spec, probs);
    c.that(re_closed.at_end == re_engine.at_end, "right-end H differs between engine and closed form");
    c.that(re_closed.complement == re_engine.complement, "right-end H' differs between engine and closed form");
    c.totals(dp, [](std::size_t) { return BigRational(1); });
  } catch (const std::exception& e) {
    c.fail(std::string("exception: ") + e.what());
  }
  return c.result();
}

CheckResult check_iid(const PatternSpec& spec, const VerifyOptions& opt) {
  Checker c(describe(spec, std::nullopt));
  try {
    const auto closed = counts_iid_up_to(spec, opt.n_max);
    std::vector<DistributionTable> dp, enumerated;
    for (std::size_t n = 0; n <= opt.n_max; ++n) {
      dp.push_back(oracle::dp_distribution(spec, std::nullopt, n));
      if (fits_budget(spec.ell(), n, opt.budget)) enumerated.push_back(oracle::enumerate_distribution(spec, std::nullopt, n, opt.budget));
    }
    std::vector<DistributionTable> dp_prefix(dp.begin(), dp.begin() + static_cast<long>(enumerated.size()));
    c.tables("enumerated counts vs dynamic program", enumerated, dp_prefix);
    c.tables("closed-form counts vs oracle", dp, closed);
    const BigRational ell(spec.ell());
    c.totals(closed, [&](std::size_t n) { return ell.pow(static_cast<unsigned>(n)); });

    const RationalGF iid = pattern_gf_iid(spec);
    c.that(pattern_gf(spec, ProbModel::uniform(spec.ell())).scale_z(ell) == iid,
           "substitution p_i = 1/l, z -> l z does not give the counting GF");
    c.that(pattern_gf_engine_iid(spec) == iid, "transfer-engine counting GF differs from the closed form");
  } catch (const std::exception& e) {
    c.fail(std::string("exception: ") + e.what());
  }
  return c.result();
}

std::vector<CheckResult> golden_checks() {
  std::vector<CheckResult> out;
  const PatternSpec spec({2, 2, 3});
  {
    Checker c("golden probability table l=3 k=(2,2,3) p=(1/6,1/3,1/2) n=17");
    const ProbModel probs({BigRational(1, 6), BigRational(1, 3), BigRational(1, 2)});
    const auto t = distribution(spec, probs, 17);
    const std::vector<std::string> expected{"0.9939258642", "0.006071881114", "0.000002254704073"};
    c.that(t.values.size() == expected.size(), "table has " + std::to_string(t.values.size()) + " entries");
    for (std::size_t m = 0; m < expected.size() && m < t.values.size(); ++m) {
      c.that(t.values[m].to_decimal(10) == expected[m],
             "P(" + std::to_string(m) + ") = " + t.values[m].to_decimal(10) + ", expected " + expected[m]);
    }
    c.that(t.total() == BigRational(1), "probabilities do not sum to 1");
    out.push_back(c.result());
  }
  {
    Checker c("golden count table l=3 k=(2,2,3) n=17");
    const auto counts = counts_iid(spec, 17).counts();
    const std::vector<BigInt> expected{BigInt(128210550), BigInt(929204), BigInt(409)};
    c.that(counts == expected, "counts differ from 128210550, 929204, 409");
    BigInt sum;
    for (const auto& v : counts) sum += v;
    c.that(sum == pow(BigInt(3), 17), "counts do not sum to 3^17");
    out.push_back(c.result());
  }
  {
    Checker c("example sequence l=3 k=(2,1,2) has 3 occurrences");
    const auto seq = oracle::parse_sequence("223111233331121122233223311233312");
    const PatternSpec ex({2, 1, 2});
    const auto direct = oracle::count_in_sequence(ex, seq);
    const auto regex = oracle::count_in_sequence_regex(ex, seq);
    c.that(direct == 3, "run-window count is " + std::to_string(direct));
    c.that(regex == 3, "regex count is " + std::to_string(regex));
    out.push_back(c.result());
  }
  return out;
}

}  // namespace

std::optional<std::string> first_difference(const std::vector<DistributionTable>& expected,
                                            const std::vector<DistributionTable>& actual) {
  if (expected.size() != actual.size()) {
    return "table count " + std::to_string(actual.size()) + " vs " + std::to_string(expected.size());
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto& e = expected[i];
    const auto& a = actual[i];
    const std::size_t len = std::max(e.values.size(), a.values.size());
    for (std::size_t m = 0; m < len; ++m) {
      const BigRational ev = m < e.values.size() ? e.values[m] : BigRational();
      const BigRational av = m < a.values.size() ? a.values[m] : BigRational();
      if (ev != av) {
        return "first difference at n=" + std::to_string(e.n) + " m=" + std::to_string(m) + ": expected " + ev.str() +
               ", got " + av.str();
      }
    }
  }
  return std::nullopt;
}

std::vector<ProbModel> verification_probs(std::size_t ell) {
  std::vector<ProbModel> out{ProbModel::uniform(ell)};
  std::mt19937 gen(static_cast<std::mt19937::result_type>(20200 + ell));
  for (int r = 0; r < 2; ++r) {
    std::vector<unsigned long> weights(ell);
    unsigned long total = 0;
    for (auto& w : weights) {
      w = gen() % 12 + 1;
      total += w;
    }
    std::vector<BigRational> p;
    for (auto w : weights) p.emplace_back(BigInt(w), BigInt(total));
    out.emplace_back(std::move(p));
  }
  return out;
}

std::vector<std::vector<unsigned>> threshold_grid(std::size_t ell, unsigned k_max) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> k(ell, 1);
  while (true) {
    out.push_back(k);
    std::size_t pos = ell;
    while (pos > 0 && k[pos - 1] == k_max) k[--pos] = 1;
    if (pos == 0) break;
    ++k[pos - 1];
  }
  return out;
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  std::vector<std::function<CheckResult()>> tasks;
  for (std::size_t ell : options.ells) {
    const auto probs = verification_probs(ell);
    for (const auto& k : threshold_grid(ell, options.k_max)) {
      const PatternSpec spec(k);
      for (const auto& p : probs) tasks.emplace_back([spec, p, &options] { return check_point(spec, p, options); });
      tasks.emplace_back([spec, &options] { return check_iid(spec, options); });
    }
  }

  std::vector<CheckResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  unsigned workers = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(tasks.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = tasks[i]();
      });
    }
  }

  auto golden = golden_checks();
  results.insert(results.end(), golden.begin(), golden.end());
  return results;
}

}  // namespace runsgf
