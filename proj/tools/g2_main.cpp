#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "g2/formulas.hpp"
#include "g2/report.hpp"
#include "g2/stability.hpp"

namespace {

using namespace g2;

std::string root_str(const Root& r) {
  auto part = [](int c, const char* name) -> std::string {
    if (c == 0) return "";
    if (c == 1) return name;
    if (c == -1) return std::string("-") + name;
    return std::to_string(c) + " " + name;
  };
  std::string a = part(r.ca, "alpha");
  std::string b = part(r.cb, "beta");
  if (a.empty()) return b.empty() ? "0" : b;
  if (b.empty()) return a;
  return a + (r.cb > 0 ? " + " + b : " - " + part(-r.cb, "beta"));
}

template <typename R>
void print_mat(std::ostream& os, const Mat7<R>& m, const std::string& indent) {
  std::vector<std::vector<std::string>> cells(7, std::vector<std::string>(7));
  std::vector<size_t> width(7, 0);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      cells[i][j] = m.at(i, j).str();
      width[j] = std::max(width[j], cells[i][j].size());
    }
  for (int i = 0; i < 7; ++i) {
    os << indent << "[";
    for (int j = 0; j < 7; ++j) {
      os << " " << std::string(width[j] - cells[i][j].size(), ' ') << cells[i][j];
    }
    os << " ]\n";
  }
}

std::string sparse_entries(const Mat7<Rat>& m) {
  std::string out;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      if (!m.at(i, j).is_zero()) {
        if (!out.empty()) out += " ";
        out += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
               ")=" + m.at(i, j).str();
      }
  return out;
}

int cmd_table(const std::string& which) {
  if (which == "roots") {
    std::printf("%-10s %-16s %-6s %s\n", "coord", "root", "norm", "weight on diag(a, b)");
    for (const Root& r : positive_roots())
      for (int sign : {1, -1}) {
        Root g{sign * r.ca, sign * r.cb};
        CharLattice c = CharLattice::of_root(g);
        Poly w = Poly::var(Sym::b).scale(Rat(g.ca)) +
                 (Poly::var(Sym::a) - Poly::var(Sym::b)).scale(Rat(g.cb));
        std::printf("%-10s %-16s %-6s %s\n", std::string(sym_name(root_coord(g))).c_str(),
                    root_str(g).c_str(), bilinear_form(c, c).str().c_str(),
                    w.str().c_str());
      }
    const CharacterConstants& cc = character_constants();
    std::printf("\nform on the simple roots: (alpha,alpha) = %s, (beta,beta) = %s, "
                "(alpha,beta) = %s\n",
                bilinear_form(CharLattice::of_root(kAlpha), CharLattice::of_root(kAlpha))
                    .str().c_str(),
                bilinear_form(CharLattice::of_root(kBeta), CharLattice::of_root(kBeta))
                    .str().c_str(),
                bilinear_form(CharLattice::of_root(kAlpha), CharLattice::of_root(kBeta))
                    .str().c_str());
    auto [tp, tq] = torus_exponents(cc.two_rho);
    std::printf("sum of nilradical roots: %s alpha + %s beta = u^%ld v^%ld = det^%s\n",
                cc.two_rho.ca.str().c_str(), cc.two_rho.cb.str().c_str(), tp, tq,
                cc.rho_det_multiple.str().c_str());
    return 0;
  }
  if (which == "weyl") {
    std::printf("%-8s %-4s %-18s %-18s %s\n", "word", "len", "alpha ->", "beta ->",
                "representative (nonzero entries)");
    for (const WeylTableEntry& t : weyl_table()) {
      CharLattice ia = t.elem.apply(CharLattice::of_root(kAlpha));
      CharLattice ib = t.elem.apply(CharLattice::of_root(kBeta));
      Root ra{static_cast<int>(ia.ca.num().get_si()), static_cast<int>(ia.cb.num().get_si())};
      Root rb{static_cast<int>(ib.ca.num().get_si()), static_cast<int>(ib.cb.num().get_si())};
      std::printf("%-8s %-4d %-18s %-18s %s\n",
                  t.word.empty() ? "e" : word_str(t.word).c_str(), t.length,
                  root_str(ra).c_str(), root_str(rb).c_str(),
                  sparse_entries(t.rep).c_str());
    }
    return 0;
  }
  throw input_error("unknown table '" + which + "'; known: roots, weyl");
}

struct OrbitArgs {
  std::string x10 = "1", x11 = "0", x21 = "0", x31 = "0", x32 = "0";
  std::string kind = "d0";
};

int cmd_orbit_reduce(const OrbitArgs& a) {
  NCoords<Rat> n{Rat::parse(a.x10), Rat::parse(a.x11), Rat::parse(a.x21),
                 Rat::parse(a.x31), Rat::parse(a.x32)};
  DomainKind kind;
  if (a.kind == "d") kind = DomainKind::D;
  else if (a.kind == "d0") kind = DomainKind::D0;
  else throw input_error("kind must be d or d0");
  CanonicalRep<Rat> rep = canonical_rep(n, kind);
  std::printf("input   n   = %s\n", n.str().c_str());
  std::printf("reduced rep = %s  (%s)\n", rep.rep.n.str().c_str(),
              kind == DomainKind::D ? "x11 = 0" : "x10 = 1, x11 = 0");
  std::printf("unipotent conjugator u(x) with x = %s\n", rep.u.str().c_str());
  if (rep.t) std::printf("central conjugator z(t) with t = %s\n", rep.t->str().c_str());
  return 0;
}

struct DecompArgs {
  std::string x21 = "1", x31 = "1", x32 = "1";
  bool symbolic = false;
};

template <typename R>
void print_decomp(const BigCellDecomp<R>& dec, const R& xa) {
  std::printf("D      = %s\n", dec.disc.str().c_str());
  std::printf("m      = [a = %s, b = %s; c = %s, d = %s], det = %s\n",
              dec.m.a.str().c_str(), dec.m.b.str().c_str(), dec.m.c.str().c_str(),
              dec.m.d.str().c_str(), dec.m.det().str().c_str());
  std::printf("n'     = %s\n", dec.nprime.str().c_str());
  std::printf("nbar   = (%s, %s, %s, %s, %s)\n", dec.nbar.y10.str().c_str(),
              dec.nbar.y11.str().c_str(), dec.nbar.y21.str().c_str(),
              dec.nbar.y31.str().c_str(), dec.nbar.y32.str().c_str());
  BruhatGL2<R> br = bruhat_gl2(dec.m);
  std::printf("bruhat m = u(%s) diag(%s, %s) w u(%s)\n", br.u1.str().c_str(),
              br.t1.str().c_str(), br.t2.str().c_str(), br.u2.str().c_str());
  std::printf("x_alpha  = %s\n", xa.str().c_str());
  std::printf("recomposition w0^-1 n = m n' nbar verified\n");
}

int cmd_bigcell_decompose(const DecompArgs& a) {
  if (a.symbolic) {
    DomainPoint<RatFn> pt = DomainPoint<RatFn>::d0(
        RatFn::var(Sym::x21), RatFn::var(Sym::x31), RatFn::var(Sym::x32));
    BigCellDecomp<RatFn> dec = decompose(pt);
    RatFn xa = x_alpha_formula(RatFn::var(Sym::x21), RatFn::var(Sym::x31),
                               RatFn::var(Sym::x32));
    std::printf("n = (1, 0, x21, x31, x32) on the slice\n");
    print_decomp(dec, xa);
    return 0;
  }
  Rat x21 = Rat::parse(a.x21), x31 = Rat::parse(a.x31), x32 = Rat::parse(a.x32);
  DomainPoint<Rat> pt = DomainPoint<Rat>::d0(x21, x31, x32);
  BigCellDecomp<Rat> dec = decompose(pt);
  Rat xa = x_alpha_formula(x21, x31, x32);
  std::printf("n = (1, 0, %s, %s, %s)\n", x21.str().c_str(), x31.str().c_str(),
              x32.str().c_str());
  print_decomp(dec, xa);
  return 0;
}

int cmd_nbar_certify(unsigned long p, long kappa_max) {
  int bad = 0;
  auto line = [&](bool ok, const std::string& what) {
    std::printf("[%s] %s\n", ok ? "ok" : "fail", what.c_str());
    if (!ok) ++bad;
  };
  GroupLawCertificate c = group_law_certificate();
  line(c.matches_exp_route, "law agrees with the matrix exponential route");
  line(c.identity_axiom, "identity axiom");
  line(c.inverse_axiom, "inverse axiom (coordinatewise negation)");
  line(c.associative, "associativity as a polynomial identity in 15 variables");
  for (const LawReading& r : c.readings)
    line(r.name == std::string("primed-letter") ? r.identity_axiom && r.matches_frozen
                                                : !r.identity_axiom,
         "reading '" + r.name + "' " +
             (r.identity_axiom ? "satisfies" : "violates") + " the identity axiom");
  CentralConjCertificate cw = central_conj_certificate();
  std::string ws;
  for (int i = 0; i < 5; ++i) ws += (i ? ", " : "") + std::to_string(cw.weights[i]);
  line(cw.derived, "central conjugation weights (" + ws + ")");
  TropMode mode = p >= 5 ? TropMode::kPlain : TropMode::kConstantAware;
  long k = minimal_stable_kappa(p, mode, kappa_max);
  line(k >= 1, "least tropically closed box level at p = " + std::to_string(p) +
                   ": kappa = " + std::to_string(k));
  return bad ? 1 : 0;
}

int cmd_stability_audit(bool units) {
  StabilityAudit a = stability_audit(units);
  std::printf("%-40s %-10s %-8s %s\n", "factor", "omega_pi", "omega", "|t| exponent");
  for (const LedgerRow& r : a.ledger.rows) {
    std::string tpart = std::to_string(r.t_const);
    if (r.t_s_coeff) tpart += (r.t_s_coeff > 0 ? " + " : " - ") +
                              std::to_string(std::abs(r.t_s_coeff)) + " s";
    std::printf("%-40s %-10ld %-8ld %s\n", r.factor.c_str(), r.e_omega_pi, r.e_omega,
                tpart.c_str());
  }
  std::string net_t = std::to_string(a.ledger.net_t_const);
  if (a.ledger.net_t_s_coeff)
    net_t += (a.ledger.net_t_s_coeff > 0 ? " + " : " - ") +
             std::to_string(std::abs(a.ledger.net_t_s_coeff)) + " s";
  std::printf("%-40s %-10ld %-8ld %s\n", "net", a.ledger.net_e_omega_pi,
              a.ledger.net_e_omega, net_t.c_str());
  std::printf("scaling variable restricted to units: %s\n", units ? "yes" : "no");
  std::printf("%s\n", a.conclusion.c_str());
  return a.vanishing_forced ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic for a 7x7 realization of split G2: tables, orbit "
               "reductions, big-cell decompositions and verification certificates"};
  app.require_subcommand(1);
  int rc = 0;

  auto* table = app.add_subcommand("table", "print the root or Weyl group tables");
  std::string which = "roots";
  table->add_option("name", which, "roots or weyl");
  table->callback([&] { rc = cmd_table(which); });

  auto* orbit = app.add_subcommand("orbit", "conjugation orbits in the nilradical");
  auto* reduce = orbit->add_subcommand("reduce", "canonical representative of a point");
  OrbitArgs oa;
  reduce->add_option("--x10", oa.x10, "coordinate (rational)");
  reduce->add_option("--x11", oa.x11, "coordinate (rational)");
  reduce->add_option("--x21", oa.x21, "coordinate (rational)");
  reduce->add_option("--x31", oa.x31, "coordinate (rational)");
  reduce->add_option("--x32", oa.x32, "coordinate (rational)");
  reduce->add_option("--kind", oa.kind, "d (unipotent only) or d0 (also central)");
  reduce->callback([&] { rc = cmd_orbit_reduce(oa); });
  orbit->require_subcommand(1);

  auto* bigcell = app.add_subcommand("bigcell", "decomposition w0^-1 n = m n' nbar");
  auto* dcmp = bigcell->add_subcommand("decompose", "decompose a slice point");
  DecompArgs da;
  dcmp->add_option("--x21", da.x21, "coordinate (rational)");
  dcmp->add_option("--x31", da.x31, "coordinate (rational)");
  dcmp->add_option("--x32", da.x32, "coordinate (rational)");
  dcmp->add_flag("--symbolic", da.symbolic, "decompose with indeterminates instead");
  dcmp->callback([&] { rc = cmd_bigcell_decompose(da); });
  bigcell->require_subcommand(1);

  auto* nbar = app.add_subcommand("nbar", "opposite-nilradical certificates");
  auto* certify = nbar->add_subcommand("certify", "group law and box certificates");
  unsigned long cp = 5;
  long ckmax = 6;
  certify->add_option("--p", cp, "residue characteristic");
  certify->add_option("--kappa-max", ckmax, "largest box level scanned");
  certify->callback([&] { rc = cmd_nbar_certify(cp, ckmax); });
  nbar->require_subcommand(1);

  auto* stab = app.add_subcommand("stability", "scaling bookkeeping of the integrand");
  auto* audit = stab->add_subcommand("audit", "per-factor responses and the net factor");
  bool units = true;
  audit->add_flag("--units,!--no-units", units,
                  "restrict the scaling variable to a unit subgroup");
  audit->callback([&] { rc = cmd_stability_audit(units); });
  stab->require_subcommand(1);

  auto* formula = app.add_subcommand("formula", "print certified closed formulas");
  std::string fname = "list";
  std::string ffmt = "text";
  formula->add_option("name", fname, "formula family, or 'list'");
  formula->add_option("--format", ffmt, "text, latex or json");
  formula->callback([&] {
    if (fname == "list") {
      for (const FormulaSet& f : formula_sets())
        std::printf("%-12s %s\n", f.name.c_str(), f.note.c_str());
      return;
    }
    FormulaFormat fmt;
    if (ffmt == "text") fmt = FormulaFormat::kText;
    else if (ffmt == "latex") fmt = FormulaFormat::kLatex;
    else if (ffmt == "json") fmt = FormulaFormat::kJson;
    else throw input_error("format must be text, latex or json");
    std::fputs(render_formulas(formula_named(fname), fmt).c_str(), stdout);
  });

  auto* verify = app.add_subcommand("verify", "run certification checks");
  std::string selector = "all";
  CheckContext ctx;
  std::string vfmt = "text";
  std::string out_path;
  bool list_only = false;
  verify->add_option("selector", selector, "check id, dotted prefix, or 'all'");
  verify->add_option("--seed", ctx.seed, "seed for the sampled checks");
  verify->add_option("--p", ctx.p, "residue characteristic for the box checks");
  verify->add_option("--kappa-min", ctx.kappa_min, "smallest admissible box level");
  verify->add_option("--kappa-max", ctx.kappa_max, "largest box level scanned");
  verify->add_option("--samples", ctx.samples, "sample count per sampled check");
  verify->add_option("--threads", ctx.exec.threads, "thread count for parallel runs");
  verify->add_flag("--parallel,!--no-parallel", ctx.exec.parallel,
                   "rerun sampled kernels under OpenMP and compare");
  verify->add_option("--format", vfmt, "text or json");
  verify->add_option("--out", out_path, "write the report to this file");
  verify->add_flag("--list", list_only, "list matching check ids without running");
  verify->callback([&] {
    if (list_only) {
      for (const Check* c : select_checks(selector))
        std::printf("%-42s %s\n", c->id.c_str(), c->title.c_str());
      return;
    }
    std::vector<CheckResult> results = run_selected(selector, ctx);
    std::string report;
    if (vfmt == "text") report = report_text(results, ctx);
    else if (vfmt == "json") report = report_json(results, ctx);
    else throw input_error("format must be text or json");
    if (out_path.empty()) {
      std::fputs(report.c_str(), stdout);
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw input_error("cannot open '" + out_path + "' for writing");
      f << report;
    }
    for (const CheckResult& r : results)
      if (!r.pass) rc = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
