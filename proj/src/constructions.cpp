#include "runsgf/constructions.hpp"

#include <stdexcept>
#include <vector>

namespace runsgf {

namespace {

const PolyW kZero;
const PolyW kOne{BigRational(1)};

RightEndGFs engine_prefix(std::span<const unsigned> k, std::span<const BigRational> weights, std::size_t prefix) {
  const BlockGFs first = detail::run_blocks(k[0], weights[0]);
  RightEndGFs level{first.long_runs, first.short_runs};
  for (std::size_t j = 1; j < prefix; ++j) {
    const BlockGFs next = detail::run_blocks(k[j], weights[j]);
    const MarkedGF tagged = system_gf(right_end_system(level, next));
    RationalGF at_end = extract_mark_coefficient(tagged, MarkVariable::u, 1);
    RationalGF all = system_gf(pattern_system(level, next, kOne)).gf;
    level = RightEndGFs{at_end, all - at_end};
  }
  return level;
}

RationalGF engine_full(std::span<const unsigned> k, std::span<const BigRational> weights) {
  const std::size_t ell = k.size();
  const RightEndGFs prefix = engine_prefix(k, weights, ell - 1);
  const BlockGFs last = detail::run_blocks(k[ell - 1], weights[ell - 1]);
  return system_gf_with_empty(pattern_system(prefix, last)).gf;
}

std::size_t resolve(const PatternSpec& spec, std::size_t prefix) {
  if (prefix == 0) return spec.ell();
  if (prefix > spec.ell()) throw std::invalid_argument("prefix longer than the pattern");
  return prefix;
}

}  // namespace

TransferSystem pattern_system(const RightEndGFs& prefix, const BlockGFs& last, const PolyW& occurrence_mark) {
  TransferSystem sys;
  sys.mark = MarkVariable::w;
  sys.blocks = {prefix.complement, prefix.at_end, last.short_runs, last.long_runs};
  sys.marks = {
      {kZero, kZero, kOne, kOne},
      {kZero, kZero, kOne, occurrence_mark},
      {kOne, kOne, kZero, kZero},
      {kOne, kOne, kZero, kZero},
  };
  return sys;
}

TransferSystem right_end_system(const RightEndGFs& prefix, const BlockGFs& last) {
  const PolyW u = PolyW::variable();
  TransferSystem sys;
  sys.mark = MarkVariable::u;
  sys.blocks = {prefix.complement, prefix.at_end, last.short_runs, last.long_runs, last.long_runs};
  sys.marks = {
      {kZero, kZero, kOne, kOne, kOne},
      {kZero, kZero, kOne, kOne, u},
      {kOne, kOne, kZero, kZero, kZero},
      {kOne, kOne, kZero, kZero, kZero},
      {kZero, kZero, kZero, kZero, kZero},
  };
  return sys;
}

RightEndGFs right_end_gf_engine(const PatternSpec& spec, const ProbModel& probs, std::size_t prefix) {
  check_compatible(spec, probs);
  return engine_prefix(spec.thresholds(), probs.probs(), resolve(spec, prefix));
}

RightEndGFs right_end_gf_engine_iid(const PatternSpec& spec, std::size_t prefix) {
  const std::vector<BigRational> ones(spec.ell(), BigRational(1));
  return engine_prefix(spec.thresholds(), ones, resolve(spec, prefix));
}

RationalGF pattern_gf_engine(const PatternSpec& spec, const ProbModel& probs) {
  check_compatible(spec, probs);
  return engine_full(spec.thresholds(), probs.probs());
}

RationalGF pattern_gf_engine_iid(const PatternSpec& spec) {
  const std::vector<BigRational> ones(spec.ell(), BigRational(1));
  return engine_full(spec.thresholds(), ones);
}

}  // namespace runsgf
