#pragma once

#include <string>
#include <vector>

namespace g2 {

// A named family of closed formulas, rendered from the same symbolic objects
// the checks certify, so the printed text can never drift from what was
// verified.
struct FormulaEntry {
  std::string lhs;
  std::string text;
  std::string latex;
};

struct FormulaSet {
  std::string name;
  std::string note;
  std::vector<FormulaEntry> entries;
};

const std::vector<FormulaSet>& formula_sets();
const FormulaSet& formula_named(const std::string& name);

enum class FormulaFormat { kText, kLatex, kJson };

std::string render_formulas(const FormulaSet& f, FormulaFormat fmt);

}  // namespace g2
