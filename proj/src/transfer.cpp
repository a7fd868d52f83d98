#include "runsgf/transfer.hpp"

#include <string>

namespace runsgf {

std::string_view to_string(MarkVariable v) { return v == MarkVariable::w ? "w" : "u"; }

void TransferSystem::validate() const {
  const std::size_t s = blocks.size();
  if (s == 0) throw MalformedSystem("transfer system has no blocks");
  if (marks.size() != s) throw MalformedSystem("mark matrix has " + std::to_string(marks.size()) + " rows for " + std::to_string(s) + " blocks");
  const PolyW one(BigRational(1));
  const PolyW var = PolyW::variable();
  for (std::size_t i = 0; i < s; ++i) {
    if (marks[i].size() != s) throw MalformedSystem("mark matrix is not square");
    if (!marks[i][i].is_zero()) throw MalformedSystem("diagonal mark must be zero");
    for (const auto& m : marks[i]) {
      if (!m.is_zero() && m != one && m != var) {
        throw MalformedSystem("unsupported mark '" + m.str(std::string(to_string(mark))) + "'; marks are 0, 1 or the mark variable");
      }
    }
    if (!blocks[i].constant_term().is_zero()) {
      throw MalformedSystem("block " + std::to_string(i + 1) + " has a nonzero constant term");
    }
  }
}

GFMatrix assemble_matrix(const TransferSystem& sys) {
  sys.validate();
  const std::size_t s = sys.blocks.size();
  GFMatrix m(s, std::vector<RationalGF>(s));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      if (i == j) {
        m[i][j] = RationalGF(BigRational(1));
      } else if (!sys.marks[i][j].is_zero()) {
        m[i][j] = -sys.blocks[i].times_mark(sys.marks[i][j]);
      }
    }
  }
  return m;
}

MarkedGF system_gf(const TransferSystem& sys) {
  const GFMatrix m = assemble_matrix(sys);
  const auto sol = solve_common_denominator(m, sys.blocks);
  PolyZ total;
  for (const auto& n : sol.numerators) total += n;
  return {RationalGF(std::move(total), sol.denominator), sys.mark};
}

MarkedGF system_gf_with_empty(const TransferSystem& sys) {
  MarkedGF g = system_gf(sys);
  g.gf = RationalGF(g.gf.numerator() + g.gf.denominator(), g.gf.denominator());
  return g;
}

RationalGF extract_mark_coefficient(const MarkedGF& g, MarkVariable var, std::size_t degree) {
  if (g.mark != var) return degree == 0 ? g.gf : RationalGF();
  if (!g.gf.denominator().is_mark_free()) {
    throw std::invalid_argument("cannot extract a mark coefficient: denominator depends on " + std::string(to_string(var)));
  }
  return RationalGF(g.gf.numerator().mark_coefficient(degree), g.gf.denominator());
}

}  // namespace runsgf
