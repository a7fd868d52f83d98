#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "runsgf/pattern_spec.hpp"

namespace runsgf::cli {

enum class Command { dist, counts, gf, expect, verify };
enum class Format { json, csv, text };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::dist;
  std::size_t ell = 0;
  std::vector<unsigned> thresholds;
  std::optional<std::vector<BigRational>> probs;  // absent: equiprobable states
  std::size_t n_from = 0;
  std::size_t n_to = 0;
  bool n_is_range = false;
  Format format = Format::text;
  int digits = 10;

  bool right_end = false;  // gf
  bool principal = false;  // expect

  // verify
  std::vector<std::size_t> verify_ells{2, 3};
  unsigned verify_k_max = 3;
  std::size_t verify_n_max = 12;
  bool perturb = false;
  unsigned threads = 0;  // 0: hardware concurrency

  std::uint64_t budget = 0;  // 0: default or RUNSGF_BUDGET
};

// Enumeration budget: RUNSGF_BUDGET if set to a positive integer, else the default.
std::uint64_t enumeration_budget();

// Runs the tool with the arguments after the program name; returns the exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

int cmd_dist(const RunConfig& cfg, std::ostream& out);
int cmd_counts(const RunConfig& cfg, std::ostream& out);
int cmd_gf(const RunConfig& cfg, std::ostream& out);
int cmd_expect(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);

}  // namespace runsgf::cli
