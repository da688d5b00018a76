#include "g2/formulas.hpp"

#include <cctype>

#include "json.hpp"

#include "g2/bigcell.hpp"
#include "g2/nbar.hpp"

namespace g2 {
namespace {

std::string latex_lhs(const std::string& plain) {
  if (plain == "x_alpha") return "x_{\\alpha}";
  size_t i = 0;
  while (i < plain.size() && !std::isdigit(static_cast<unsigned char>(plain[i]))) ++i;
  size_t j = i;
  while (j < plain.size() && std::isdigit(static_cast<unsigned char>(plain[j]))) ++j;
  if (i == 0 || i == plain.size()) return plain;
  return plain.substr(0, i) + "_{" + plain.substr(i, j - i) + "}" + plain.substr(j);
}

FormulaSet nbar_set() {
  RatFn x21 = RatFn::var(Sym::x21);
  RatFn x31 = RatFn::var(Sym::x31);
  RatFn x32 = RatFn::var(Sym::x32);
  NbarCoords<RatFn> y = nbar_closed_form(x21, x31, x32);
  FormulaSet f;
  f.name = "nbar";
  f.note = "opposite component of w0^-1 n on the x10 = 1 slice; the denominator "
           "is a power of x21^2 + x32";
  const char* names[] = {"y10", "y11", "y21", "y31", "y32"};
  auto arr = y.as_array();
  for (int i = 0; i < 5; ++i)
    f.entries.push_back({names[i], arr[i]->str(), arr[i]->latex()});
  return f;
}

FormulaSet levi_set() {
  NbarCoords<RatFn> y{RatFn::var(Sym::y10), RatFn::var(Sym::y11),
                      RatFn::var(Sym::y21), RatFn::var(Sym::y31),
                      RatFn::var(Sym::y32)};
  GL2Elem<RatFn> m = levi_block_formula(y);
  FormulaSet f;
  f.name = "levi-block";
  f.note = "Levi block of the P-component, written in the opposite coordinates";
  f.entries.push_back({"a", m.a.str(), m.a.latex()});
  f.entries.push_back({"b", m.b.str(), m.b.latex()});
  f.entries.push_back({"c", m.c.str(), m.c.latex()});
  f.entries.push_back({"d", m.d.str(), m.d.latex()});
  f.entries.push_back({"det", m.det().str(), m.det().latex()});
  return f;
}

FormulaSet x_alpha_set() {
  RatFn xa = x_alpha_formula(RatFn::var(Sym::x21), RatFn::var(Sym::x31),
                             RatFn::var(Sym::x32));
  FormulaSet f;
  f.name = "x-alpha";
  f.note = "first coordinate of log(w0^-1 nbar w0), the argument of the twist";
  f.entries.push_back({"x_alpha", xa.str(), xa.latex()});
  return f;
}

FormulaSet law_set() {
  const NbarLaw& l = nbar_law();
  FormulaSet f;
  f.name = "group-law";
  f.note = "multiplication in exponential coordinates; primed letters belong to "
           "the right factor";
  const char* names[] = {"z10", "z11", "z21", "z31", "z32"};
  auto arr = l.as_array();
  for (int i = 0; i < 5; ++i)
    f.entries.push_back({names[i], arr[i]->str(), arr[i]->latex()});
  return f;
}

FormulaSet box_set() {
  const char* names[] = {"y10", "y11", "y21", "y31", "y32"};
  long exps[5];
  KappaBox b2 = KappaBox::at(2);
  KappaBox b3 = KappaBox::at(3);
  for (int i = 0; i < 5; ++i) {
    long e = 0;
    for (long cand = 1; cand <= 6 && !e; ++cand) {
      long p2 = 1, p3 = 1;
      for (long k = 0; k < cand; ++k) { p2 *= 2; p3 *= 3; }
      if (b2.floors[i] == -p2 && b3.floors[i] == -p3) e = cand;
    }
    if (!e) throw internal_error("box floor is not minus a pure power of the level");
    exps[i] = e;
  }
  FormulaSet f;
  f.name = "box";
  f.note = "valuation floors of the compact box at level kappa";
  for (int i = 0; i < 5; ++i) {
    std::string lhs = std::string("v(") + names[i] + ")";
    std::string e = std::to_string(exps[i]);
    std::string text = ">= -kappa" + (exps[i] == 1 ? std::string() : "^" + e);
    std::string latex = "\\ge -\\kappa" + (exps[i] == 1 ? std::string() : "^{" + e + "}");
    f.entries.push_back({lhs, text, latex});
  }
  return f;
}

}  // namespace

const std::vector<FormulaSet>& formula_sets() {
  static const std::vector<FormulaSet> sets = {nbar_set(), levi_set(), x_alpha_set(),
                                               law_set(), box_set()};
  return sets;
}

const FormulaSet& formula_named(const std::string& name) {
  for (const FormulaSet& f : formula_sets())
    if (f.name == name) return f;
  std::string known;
  for (const FormulaSet& f : formula_sets()) known += " " + f.name;
  throw input_error("unknown formula '" + name + "'; known:" + known);
}

std::string render_formulas(const FormulaSet& f, FormulaFormat fmt) {
  if (fmt == FormulaFormat::kJson) {
    nlohmann::ordered_json j;
    j["name"] = f.name;
    j["note"] = f.note;
    j["entries"] = nlohmann::ordered_json::array();
    for (const FormulaEntry& e : f.entries)
      j["entries"].push_back({{"lhs", e.lhs}, {"text", e.text}, {"latex", e.latex}});
    return j.dump(2) + "\n";
  }
  std::string out;
  if (fmt == FormulaFormat::kText) {
    out += "# " + f.name + ": " + f.note + "\n";
    for (const FormulaEntry& e : f.entries) {
      bool relation = !e.text.empty() && e.text[0] == '>';
      out += e.lhs + (relation ? " " : " = ") + e.text + "\n";
    }
    return out;
  }
  out += "% " + f.name + ": " + f.note + "\n";
  for (const FormulaEntry& e : f.entries) {
    bool relation = e.latex.rfind("\\ge", 0) == 0;
    out += latex_lhs(e.lhs) + (relation ? " " : " = ") + e.latex + " \\\\\n";
  }
  return out;
}

}  // namespace g2
