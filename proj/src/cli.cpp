#include "runsgf/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <sstream>

#include "runsgf/oracle.hpp"
#include "runsgf/patterns.hpp"
#include "runsgf/verify.hpp"

namespace runsgf::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::size_t parse_count(const std::string& text, const std::string& what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError(what + " must be a non-negative integer, got '" + text + "'");
  }
  return std::stoull(text);
}

PatternSpec spec_of(const RunConfig& cfg) {
  if (cfg.thresholds.size() != cfg.ell) {
    throw UsageError("--k lists " + std::to_string(cfg.thresholds.size()) + " thresholds but --ell is " + std::to_string(cfg.ell));
  }
  return PatternSpec(cfg.thresholds);
}

std::optional<ProbModel> probs_of(const RunConfig& cfg) {
  if (!cfg.probs) return std::nullopt;
  if (cfg.probs->size() != cfg.ell) {
    throw UsageError("--p lists " + std::to_string(cfg.probs->size()) + " probabilities but --ell is " + std::to_string(cfg.ell));
  }
  return ProbModel(*cfg.probs);
}

std::vector<std::size_t> lengths_of(const RunConfig& cfg) {
  std::vector<std::size_t> ns;
  for (std::size_t n = cfg.n_from; n <= cfg.n_to; ++n) ns.push_back(n);
  return ns;
}

Json spec_json(const PatternSpec& spec) {
  Json j;
  j["ell"] = spec.ell();
  j["k"] = Json(std::vector<unsigned>(spec.thresholds().begin(), spec.thresholds().end()));
  return j;
}

Json probs_json(const std::optional<ProbModel>& probs) {
  if (!probs) return nullptr;
  Json arr = Json::array();
  for (const auto& p : probs->probs()) arr.push_back(p.str());
  return arr;
}

Json poly_json(const PolyZ& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) {
    Json w = Json::array();
    for (const auto& x : c.coeffs()) w.push_back(x.str());
    arr.push_back(w);
  }
  return arr;
}

Json gf_json(const RationalGF& g) {
  Json j;
  j["numerator"] = poly_json(g.numerator());
  j["denominator"] = poly_json(g.denominator());
  return j;
}

std::string decimal_of(const BigRational& v, TableMode mode, int digits) {
  return mode == TableMode::count ? v.str() : v.to_decimal(digits);
}

Json table_json(const PatternSpec& spec, const std::optional<ProbModel>& probs, const DistributionTable& t, int digits) {
  Json j;
  j["spec"] = spec_json(spec);
  j["probs"] = probs_json(probs);
  j["n"] = t.n;
  j["mode"] = to_string(t.mode);
  Json values = Json::array();
  for (std::size_t m = 0; m < t.values.size(); ++m) {
    Json v;
    v["m"] = m;
    v["exact"] = t.values[m].str();
    v["decimal"] = decimal_of(t.values[m], t.mode, digits);
    values.push_back(v);
  }
  j["values"] = values;
  return j;
}

// "0.99 + 0.006 w + 0.000002 w^2"
std::string table_polynomial(const DistributionTable& t, int digits) {
  std::string s;
  for (std::size_t m = 0; m < t.values.size(); ++m) {
    if (t.values[m].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += decimal_of(t.values[m], t.mode, digits);
    if (m >= 1) s += " w";
    if (m >= 2) s += "^" + std::to_string(m);
  }
  return s.empty() ? "0" : s;
}

void print_tables(const RunConfig& cfg, const PatternSpec& spec, const std::optional<ProbModel>& probs,
                  const std::vector<DistributionTable>& tables, std::ostream& out) {
  switch (cfg.format) {
    case Format::json: {
      if (!cfg.n_is_range) {
        out << table_json(spec, probs, tables.front(), cfg.digits).dump(2) << "\n";
      } else {
        Json arr = Json::array();
        for (const auto& t : tables) arr.push_back(table_json(spec, probs, t, cfg.digits));
        out << arr.dump(2) << "\n";
      }
      break;
    }
    case Format::csv:
      out << "n,m,exact,decimal\n";
      for (const auto& t : tables) {
        for (std::size_t m = 0; m < t.values.size(); ++m) {
          out << t.n << "," << m << "," << t.values[m].str() << "," << decimal_of(t.values[m], t.mode, cfg.digits) << "\n";
        }
      }
      break;
    case Format::text:
      for (const auto& t : tables) {
        const std::string name = t.mode == TableMode::count ? "A" : "F";
        out << name << "_{" << spec.ell() << "," << t.n << "}(w) = " << table_polynomial(t, cfg.digits) << "\n";
        for (std::size_t m = 0; m < t.values.size(); ++m) {
          out << "  m=" << m << "  " << t.values[m].str() << "  " << decimal_of(t.values[m], t.mode, cfg.digits) << "\n";
        }
      }
      break;
  }
}

}  // namespace

std::uint64_t enumeration_budget() {
  if (const char* env = std::getenv("RUNSGF_BUDGET")) {
    try {
      const auto v = parse_count(env, "RUNSGF_BUDGET");
      if (v > 0) return v;
    } catch (const UsageError&) {
    }
  }
  return oracle::kDefaultBudget;
}

int cmd_dist(const RunConfig& cfg, std::ostream& out) {
  const PatternSpec spec = spec_of(cfg);
  const auto probs = probs_of(cfg);
  const ProbModel model = probs ? *probs : ProbModel::uniform(spec.ell());
  const auto all = distributions_up_to(spec, model, cfg.n_to);
  std::vector<DistributionTable> tables(all.begin() + static_cast<long>(cfg.n_from), all.end());
  for (const auto& t : tables) {
    if (t.total() != BigRational(1)) throw std::logic_error("probabilities for n=" + std::to_string(t.n) + " sum to " + t.total().str());
  }
  print_tables(cfg, spec, probs ? probs : std::optional<ProbModel>(model), tables, out);
  return kExitOk;
}

int cmd_counts(const RunConfig& cfg, std::ostream& out) {
  if (cfg.probs) throw UsageError("counts is for equiprobable states; drop --p or use dist");
  const PatternSpec spec = spec_of(cfg);
  const auto all = counts_iid_up_to(spec, cfg.n_to);
  std::vector<DistributionTable> tables(all.begin() + static_cast<long>(cfg.n_from), all.end());
  const BigRational ell(spec.ell());
  for (const auto& t : tables) {
    if (t.total() != ell.pow(static_cast<unsigned>(t.n))) {
      throw std::logic_error("counts for n=" + std::to_string(t.n) + " sum to " + t.total().str() + ", not l^n");
    }
  }
  print_tables(cfg, spec, std::nullopt, tables, out);
  return kExitOk;
}

int cmd_gf(const RunConfig& cfg, std::ostream& out) {
  const PatternSpec spec = spec_of(cfg);
  const auto probs = probs_of(cfg);
  const ProbModel model = probs ? *probs : ProbModel::uniform(spec.ell());
  const RationalGF g = probs ? pattern_gf(spec, *probs) : pattern_gf_iid(spec);
  const RecurrenceSpec rec = recurrence_spec(spec, model);
  std::optional<RightEndGFs> re;
  if (cfg.right_end) re = probs ? right_end_gf(spec, *probs) : right_end_gf_iid(spec);

  if (cfg.format == Format::json) {
    Json j;
    j["spec"] = spec_json(spec);
    j["probs"] = probs_json(probs);
    j["mode"] = probs ? "probability" : "count";
    j["G"] = gf_json(g);
    Json r;
    Json a = Json::array();
    for (const auto& c : rec.coeffs) a.push_back(c.str());
    r["a"] = a;
    r["pattern_coeff"] = rec.pattern_coeff.str();
    r["lag"] = rec.lag;
    r["expansion"] = expansion_text(spec.ell());
    r["text"] = recurrence_text(spec.ell());
    j["recurrence"] = r;
    if (re) {
      j["H"] = gf_json(re->at_end);
      j["H_comp"] = gf_json(re->complement);
    }
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  if (cfg.format == Format::csv) {
    out << "function,part,z_power,w_power,coefficient\n";
    auto rows = [&](const std::string& fn, const RationalGF& f) {
      for (const auto& [part, poly] : {std::pair{"numerator", &f.numerator()}, std::pair{"denominator", &f.denominator()}}) {
        for (std::size_t i = 0; i < poly->size(); ++i) {
          const auto c = poly->coeff(i);
          for (std::size_t k = 0; k < c.size(); ++k) {
            out << fn << "," << part << "," << i << "," << k << "," << c.coeff(k).str() << "\n";
          }
        }
      }
    };
    rows("G", g);
    if (re) {
      rows("H", re->at_end);
      rows("H_comp", re->complement);
    }
    return kExitOk;
  }
  const std::string gname = probs ? "G" : "G~";
  out << gname << "_" << spec.ell() << "(w,z) = " << g.str() << "\n";
  if (re) {
    out << "H_" << spec.ell() << "(z) = " << re->at_end.str() << "\n";
    out << "H'_" << spec.ell() << "(z) = " << re->complement.str() << "\n";
  }
  out << expansion_text(spec.ell()) << "\n";
  out << recurrence_text(spec.ell()) << "\n";
  for (std::size_t i = 0; i < rec.coeffs.size(); ++i) out << "a_" << i + 1 << " = " << rec.coeffs[i] << "\n";
  out << "prod p_i^{k_i} = " << rec.pattern_coeff << ", k = " << rec.lag << "\n";
  return kExitOk;
}

int cmd_expect(const RunConfig& cfg, std::ostream& out) {
  const PatternSpec spec = spec_of(cfg);
  const auto probs = probs_of(cfg);
  const ProbModel model = probs ? *probs : ProbModel::uniform(spec.ell());
  const auto means = series_coeffs(mean_gf(pattern_gf(spec, model)), cfg.n_to);

  Json arr = Json::array();
  for (std::size_t n : lengths_of(cfg)) {
    const BigRational mean = means[n].coeff(0);
    std::optional<BigRational> principal;
    if (cfg.principal && n >= spec.k_total()) principal = expected_count_principal(spec, model, n);
    if (cfg.format == Format::json) {
      Json j;
      j["spec"] = spec_json(spec);
      j["probs"] = probs_json(model);
      j["n"] = n;
      j["mean"] = {{"exact", mean.str()}, {"decimal", mean.to_decimal(cfg.digits)}};
      if (cfg.principal) {
        j["principal"] = principal ? Json{{"exact", principal->str()}, {"decimal", principal->to_decimal(cfg.digits)}} : Json(nullptr);
      }
      arr.push_back(j);
    } else if (cfg.format == Format::csv) {
      if (n == cfg.n_from) out << "n,exact,decimal" << (cfg.principal ? ",principal_exact,principal_decimal" : "") << "\n";
      out << n << "," << mean.str() << "," << mean.to_decimal(cfg.digits);
      if (cfg.principal) out << "," << (principal ? principal->str() : "") << "," << (principal ? principal->to_decimal(cfg.digits) : "");
      out << "\n";
    } else {
      out << "E[X_n] n=" << n << " = " << mean.str() << " = " << mean.to_decimal(cfg.digits) << "\n";
      if (cfg.principal) {
        out << "  principal = " << (principal ? principal->str() + " = " + principal->to_decimal(cfg.digits) : "undefined (n < k)") << "\n";
      }
    }
  }
  if (cfg.format == Format::json) out << (cfg.n_is_range ? arr : arr.front()).dump(2) << "\n";
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  VerifyOptions opt;
  opt.ells = cfg.verify_ells;
  opt.k_max = cfg.verify_k_max;
  opt.n_max = cfg.verify_n_max;
  opt.perturb = cfg.perturb;
  opt.threads = cfg.threads;
  opt.budget = cfg.budget ? cfg.budget : enumeration_budget();
  for (auto ell : opt.ells) {
    if (ell < 2) throw UsageError("--ells entries must be at least 2");
  }
  if (opt.k_max < 1) throw UsageError("--kmax must be at least 1");

  const auto results = run_verification(opt);
  std::size_t failed = 0;
  Json arr = Json::array();
  for (const auto& r : results) {
    if (!r.pass) ++failed;
    if (cfg.format == Format::json) {
      arr.push_back({{"check", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    } else {
      out << (r.pass ? "PASS " : "FAIL ") << r.name << (r.pass ? "" : ": " + r.detail) << "\n";
    }
  }
  if (cfg.format == Format::json) {
    out << Json{{"checks", arr}, {"failed", failed}}.dump(2) << "\n";
  } else {
    out << results.size() << " checks, " << failed << " failed\n";
  }
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact distributions of (k1,...,kl) run patterns in multi-state trials"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string k_text, p_text, n_text, format_text = "text", ells_text = "2,3";

  auto add_pattern = [&](CLI::App* sub, bool with_probs, bool with_n) {
    sub->add_option("--ell", cfg.ell, "number of states")->required()->check(CLI::Range(2, 64));
    sub->add_option("--k", k_text, "thresholds k1,...,kl")->required();
    if (with_probs) sub->add_option("--p", p_text, "probabilities p1,...,pl as a/b or terminating decimals (default: equiprobable)");
    if (with_n) sub->add_option("--n", n_text, "sequence length, or an inclusive range a:b")->required();
    sub->add_option("--format", format_text, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--digits", cfg.digits, "significant digits for decimals")->check(CLI::Range(1, 1000));
  };

  auto* dist = app.add_subcommand("dist", "probabilities P_n(m) of m occurrences");
  add_pattern(dist, true, true);
  auto* counts = app.add_subcommand("counts", "numbers A_n(m) of sequences with m occurrences, equiprobable states");
  add_pattern(counts, false, true);
  auto* gf = app.add_subcommand("gf", "double generating function and its recurrence");
  add_pattern(gf, true, false);
  gf->add_flag("--right-end", cfg.right_end, "also print the right-end pair H, H'");
  auto* expect = app.add_subcommand("expect", "mean occurrence count");
  add_pattern(expect, true, true);
  expect->add_flag("--principal", cfg.principal, "also print the part linear in n");
  auto* verify = app.add_subcommand("verify", "cross-check every computation route");
  verify->add_option("--ells", ells_text, "state counts to sweep, comma separated");
  verify->add_option("--kmax", cfg.verify_k_max, "largest threshold in the sweep");
  verify->add_option("--nmax", cfg.verify_n_max, "largest sequence length in the sweep");
  verify->add_option("--threads", cfg.threads, "worker threads (0: all cores)");
  verify->add_option("--format", format_text, "json or text")->check(CLI::IsMember({"json", "text"}));
  verify->add_flag("--perturb", cfg.perturb, "test only: corrupt one recurrence coefficient");

  std::vector<std::string> argv_store{"runsgf"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    cfg.format = format_text == "json" ? Format::json : (format_text == "csv" ? Format::csv : Format::text);
    if (!verify->parsed()) {
      for (const auto& part : split(k_text, ',')) {
        const auto v = parse_count(part, "threshold");
        if (v == 0) throw UsageError("thresholds must be at least 1");
        cfg.thresholds.push_back(static_cast<unsigned>(v));
      }
      if (!p_text.empty()) {
        std::vector<BigRational> probs;
        for (const auto& part : split(p_text, ',')) probs.push_back(BigRational::parse(part));
        cfg.probs = std::move(probs);
      }
      if (!n_text.empty()) {
        if (const auto colon = n_text.find(':'); colon != std::string::npos) {
          cfg.n_from = parse_count(n_text.substr(0, colon), "--n");
          cfg.n_to = parse_count(n_text.substr(colon + 1), "--n");
          cfg.n_is_range = true;
          if (cfg.n_to < cfg.n_from) throw UsageError("--n range is empty");
        } else {
          cfg.n_from = cfg.n_to = parse_count(n_text, "--n");
        }
      }
    } else {
      cfg.verify_ells.clear();
      for (const auto& part : split(ells_text, ',')) cfg.verify_ells.push_back(parse_count(part, "--ells"));
    }

    if (dist->parsed()) return cmd_dist(cfg, out);
    if (counts->parsed()) return cmd_counts(cfg, out);
    if (gf->parsed()) return cmd_gf(cfg, out);
    if (expect->parsed()) return cmd_expect(cfg, out);
    return cmd_verify(cfg, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
}

}  // namespace runsgf::cli
