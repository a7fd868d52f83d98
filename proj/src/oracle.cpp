#include "runsgf/oracle.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <regex>
#include <string>
#include <unordered_map>

namespace runsgf::oracle {

namespace {

void decompose_into(std::span<const unsigned> seq, std::vector<RunBlock>& runs) {
  runs.clear();
  for (unsigned s : seq) {
    if (!runs.empty() && runs.back().symbol == s) {
      ++runs.back().length;
    } else {
      runs.push_back({s, 1});
    }
  }
}

std::size_t count_windows(const PatternSpec& spec, const std::vector<RunBlock>& runs) {
  const std::size_t ell = spec.ell();
  if (runs.size() < ell) return 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i + ell <= runs.size(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < ell && ok; ++j) {
      ok = runs[i + j].symbol == j + 1 && runs[i + j].length >= spec.k(j + 1);
    }
    if (ok) ++count;
  }
  return count;
}

void check_labels(const PatternSpec& spec, std::span<const unsigned> seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] < 1 || seq[i] > spec.ell()) {
      throw std::invalid_argument("invalid sequence: label " + std::to_string(seq[i]) + " at position " +
                                  std::to_string(i) + " is outside 1.." + std::to_string(spec.ell()));
    }
  }
}

char symbol_char(unsigned s) { return s <= 9 ? static_cast<char>('0' + s) : static_cast<char>('a' + (s - 10)); }

std::vector<BigRational> symbol_weights(const PatternSpec& spec, const std::optional<ProbModel>& probs) {
  if (!probs) return std::vector<BigRational>(spec.ell(), BigRational(1));
  check_compatible(spec, *probs);
  return {probs->probs().begin(), probs->probs().end()};
}

TableMode mode_of(const std::optional<ProbModel>& probs) {
  return probs ? TableMode::probability : TableMode::count;
}

// (n+1)^ell * (m_max+1), or nullopt if it does not fit in 64 bits.
std::optional<std::uint64_t> histogram_key_space(std::size_t ell, std::size_t n, std::size_t m_max) {
  std::uint64_t space = m_max + 1;
  for (std::size_t i = 0; i < ell; ++i) {
    if (space > std::numeric_limits<std::uint64_t>::max() / (n + 1)) return std::nullopt;
    space *= n + 1;
  }
  return space;
}

}  // namespace

std::vector<RunBlock> run_decomposition(const PatternSpec& spec, std::span<const unsigned> seq) {
  check_labels(spec, seq);
  std::vector<RunBlock> runs;
  decompose_into(seq, runs);
  return runs;
}

std::size_t count_in_sequence(const PatternSpec& spec, std::span<const unsigned> seq) {
  return count_windows(spec, run_decomposition(spec, seq));
}

std::size_t count_in_sequence_regex(const PatternSpec& spec, std::span<const unsigned> seq) {
  check_labels(spec, seq);
  std::string text;
  text.reserve(seq.size());
  for (unsigned s : seq) text.push_back(symbol_char(s));
  std::string pattern;
  for (std::size_t s = 1; s <= spec.ell(); ++s) {
    pattern += symbol_char(static_cast<unsigned>(s));
    pattern += "{" + std::to_string(spec.k(s)) + ",}";
  }
  const std::regex re(pattern);
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

std::vector<unsigned> parse_sequence(std::string_view text) {
  std::vector<unsigned> seq;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c < '1' || c > '9') throw std::invalid_argument(std::string("invalid sequence symbol '") + c + "'");
    seq.push_back(static_cast<unsigned>(c - '0'));
  }
  return seq;
}

DistributionTable enumerate_distribution(const PatternSpec& spec, const std::optional<ProbModel>& probs,
                                         std::size_t n, std::uint64_t budget) {
  const std::size_t ell = spec.ell();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > budget / ell) {
      throw BudgetExceeded(std::to_string(ell) + "^" + std::to_string(n) + " sequences exceed the enumeration budget of " +
                           std::to_string(budget) + "; use dp_distribution");
    }
    total *= ell;
  }
  const auto weights = symbol_weights(spec, probs);
  const std::size_t m_max = spec.max_occurrences(n);
  DistributionTable table{n, mode_of(probs), std::vector<BigRational>(m_max + 1)};

  // Every sequence with the same symbol counts has the same weight, so tally
  // (occurrences, symbol counts) first and weight each class once at the end.
  const auto key_space = histogram_key_space(ell, n, m_max);
  std::unordered_map<std::uint64_t, std::uint64_t> histogram;
  std::vector<unsigned> seq(n, 1);
  std::vector<RunBlock> runs;
  runs.reserve(n);
  std::vector<std::size_t> symbol_count(ell);

  auto weight_of = [&](const std::vector<std::size_t>& counts) {
    BigRational w(1);
    for (std::size_t s = 0; s < ell; ++s) w *= weights[s].pow(static_cast<unsigned>(counts[s]));
    return w;
  };

  for (std::uint64_t it = 0; it < total; ++it) {
    decompose_into(seq, runs);
    const std::size_t m = count_windows(spec, runs);
    std::fill(symbol_count.begin(), symbol_count.end(), 0);
    for (unsigned s : seq) ++symbol_count[s - 1];
    if (key_space) {
      std::uint64_t key = m;
      for (std::size_t s = 0; s < ell; ++s) key = key * (n + 1) + symbol_count[s];
      ++histogram[key];
    } else {
      table.values[m] += weight_of(symbol_count);
    }
    // Odometer increment.
    for (std::size_t pos = n; pos-- > 0;) {
      if (seq[pos] < ell) {
        ++seq[pos];
        break;
      }
      seq[pos] = 1;
    }
  }

  for (const auto& [key, times] : histogram) {
    std::uint64_t rest = key;
    std::vector<std::size_t> counts(ell);
    for (std::size_t s = ell; s-- > 0;) {
      counts[s] = rest % (n + 1);
      rest /= n + 1;
    }
    table.values[rest] += weight_of(counts) * BigRational(times);
  }
  return table;
}

DistributionTable dp_distribution(const PatternSpec& spec, const std::optional<ProbModel>& probs, std::size_t n) {
  const unsigned ell = static_cast<unsigned>(spec.ell());
  const auto weights = symbol_weights(spec, probs);
  const std::size_t m_max = spec.max_occurrences(n);

  using Layer = std::map<OracleState, std::vector<BigRational>>;
  Layer layer;
  layer[OracleState{}] = std::vector<BigRational>{BigRational(1)};

  for (std::size_t step = 0; step < n; ++step) {
    Layer next;
    for (const auto& [st, by_count] : layer) {
      for (unsigned t = 1; t <= ell; ++t) {
        OracleState to;
        bool credit = false;
        if (st.last_symbol == t) {
          to = st;
          to.run_length = std::min(st.run_length + 1, spec.k(t));
          credit = t == ell && st.stage == ell - 1 && st.run_length < spec.k(t) && to.run_length == spec.k(t);
        } else {
          unsigned stage = 0;
          if (st.last_symbol != 0) {
            const unsigned s = st.last_symbol;
            const bool long_enough = st.run_length >= spec.k(s);
            if (s < ell && s == st.stage + 1 && long_enough) {
              stage = st.stage + 1;
            } else if (s == 1 && long_enough) {
              stage = 1;
            }
          }
          to = OracleState{t, 1, stage};
          credit = t == ell && stage == ell - 1 && spec.k(t) == 1;
        }
        auto& dst = next[to];
        if (dst.size() < by_count.size() + 1) dst.resize(by_count.size() + 1);
        for (std::size_t m = 0; m < by_count.size(); ++m) {
          if (by_count[m].is_zero()) continue;
          dst[m + (credit ? 1 : 0)] += by_count[m] * weights[t - 1];
        }
      }
    }
    layer = std::move(next);
  }

  DistributionTable table{n, mode_of(probs), std::vector<BigRational>(m_max + 1)};
  for (const auto& [st, by_count] : layer) {
    for (std::size_t m = 0; m < by_count.size(); ++m) {
      if (by_count[m].is_zero()) continue;
      if (m > m_max) throw std::logic_error("dynamic program exceeded the occurrence bound");
      table.values[m] += by_count[m];
    }
  }
  return table;
}

}  // namespace runsgf::oracle
