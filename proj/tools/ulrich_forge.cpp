#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ulrich/closure.hpp"
#include "ulrich/koszul.hpp"
#include "ulrich/pipelines.hpp"
#include "ulrich/report.hpp"
#include "ulrich/semigroup.hpp"
#include "ulrich/sequences.hpp"

using namespace ulrich;

namespace {

struct Options {
  std::string json_path, expect, field = "q", vars = "x,y";
  int n = 2;
  std::string ring;
  std::string ideal, nf, equal;
  bool colength = false;
  std::string gens;
  bool gaps = false, mult = false;
  int hilbert = -1;
  std::string in;
  int tmax = 12;
  std::string module, sop;
  std::string family, range = "1..12";
  bool reduce_torsion = false;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

Ambient ambient_from(const std::string& vars) {
  std::vector<std::string> names;
  std::stringstream ss(vars);
  for (std::string v; std::getline(ss, v, ',');) {
    v.erase(0, v.find_first_not_of(" \t"));
    v.erase(v.find_last_not_of(" \t") + 1);
    if (!v.empty()) names.push_back(v);
  }
  if (names.empty()) throw UsageError("--vars needs at least one variable");
  return Ambient(names);
}

std::string read_ring_argument(const std::string& arg) {
  std::ifstream in(arg);
  if (!in) return arg;
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  // Skip blank lines and '#' comments.
  std::string out;
  std::stringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    auto p = line.find('#');
    if (p != std::string::npos) line.erase(p);
    out += line + " ";
  }
  return out;
}

std::pair<int, int> parse_range(const std::string& r) {
  auto dots = r.find("..");
  if (dots == std::string::npos) throw UsageError("--range must look like A..B");
  try {
    int a = std::stoi(r.substr(0, dots)), b = std::stoi(r.substr(dots + 2));
    if (a < 1 || b < a) throw UsageError("--range needs 1 <= A <= B");
    return {a, b};
  } catch (const std::logic_error&) {
    throw UsageError("--range must look like A..B");
  }
}

template <Field F>
Ideal<F> ideal_of(const std::string& text, const Ambient& A, const F& field) {
  auto gens = parse_generators<F>(text, A, field);
  return Ideal<F>(field, A.size(), gens);
}

template <Field F>
Json basis_json(const Ideal<F>& I, const Ambient& A) {
  return to_string(I.basis(), A);
}

// ---------------------------------------------------------------------------

template <Field F>
Report run_groebner(const Options& o, const F& field) {
  auto A = ambient_from(o.vars);
  auto I = ideal_of(o.ideal, A, field);
  Report rep;
  rep.pipeline = "groebner";
  rep.field = field.name();
  rep.inputs["ideal"] = o.ideal;
  rep.inputs["vars"] = o.vars;
  rep.add("basis satisfies the Buchberger criterion", "groebner-basis", satisfies_buchberger_criterion(I),
          {{"basis", basis_json(I, A)}, {"order", I.order().name()}});
  if (!o.nf.empty()) {
    auto f = parse_polynomial<F>(o.nf, A, field);
    auto r = normal_form(f, I);
    rep.inputs["nf"] = o.nf;
    rep.add_verdict("normal form", "normal-form", r.is_zero() ? "MEMBER" : "NOT_MEMBER",
                    {{"normal_form", to_string(r, A)}}, false);
    rep.verdict = r.is_zero() ? "MEMBER" : "NOT_MEMBER";
    std::cout << to_string(r, A) << "\n";
  } else if (o.colength) {
    auto c = colength(I);
    Json cert{{"colength", c ? Json(*c) : Json("infinite")}};
    if (c && *c <= 64) {
      Json sm = Json::array();
      for (const auto& m : *standard_monomials(I)) sm.push_back(exponent_string(m, A.size()));
      cert["standard_monomials"] = sm;
    }
    rep.verdict = c ? "FINITE" : "INFINITE";
    rep.add_verdict("colength", "colength", rep.verdict, cert, false);
    std::cout << (c ? std::to_string(*c) : std::string("infinite")) << "\n";
  } else if (!o.equal.empty()) {
    auto J = ideal_of(o.equal, A, field);
    bool eq = ideals_equal(I, J);
    rep.inputs["equal"] = o.equal;
    rep.verdict = eq ? "EQUAL" : "UNEQUAL";
    rep.add_verdict("ideal equality", "ideal-equality", rep.verdict,
                    {{"I", basis_json(I, A)}, {"J", basis_json(J, A)}}, false);
    std::cout << rep.verdict << "\n";
  } else {
    rep.verdict = "OK";
    std::cout << to_string(I.basis(), A) << "\n";
  }
  return rep;
}

Report run_semigroup(const Options& o) {
  auto g = parse_semigroup(o.gens);
  Report rep;
  rep.pipeline = "semigroup";
  rep.inputs["semigroup"] = to_string(g);
  std::cout << to_string(g) << "\n";
  if (o.gaps) {
    auto gs = find_gap_set(g);
    rep.verdict = gs.finite ? "FINITE" : "NOT_FINITE_WITHIN_BOUND";
    Json list = Json::array();
    for (const auto& e : gs.gaps) list.push_back(exponent_string(e, g.dim()));
    rep.add_verdict("gap set", "gap-set", rep.verdict,
                    {{"count", gs.gaps.size()}, {"shell_top", gs.shell_top}, {"gaps", list}}, false);
    if (gs.finite) {
      std::cout << "gaps (" << gs.gaps.size() << "):";
      for (const auto& e : gs.gaps) std::cout << " " << exponent_string(e, g.dim());
      std::cout << "\n";
    } else {
      std::cout << "gap set not finite within degree " << gs.shell_top << "\n";
    }
  } else if (o.mult) {
    auto e = multiplicity(g);
    rep.verdict = e.stabilized ? "STABILIZED" : "INCONCLUSIVE";
    rep.add_verdict("Hilbert-Samuel multiplicity", "multiplicity", rep.verdict,
                    {{"value", e.value}, {"difference_order", e.difference_order}, {"window_start", e.window_start}},
                    true);
    std::cout << "multiplicity: " << (e.stabilized ? std::to_string(e.value) : std::string("INCONCLUSIVE")) << "\n";
  } else if (o.hilbert >= 0) {
    auto t = hilbert_samuel_table(g, o.hilbert);
    rep.verdict = "OK";
    rep.add_verdict("Hilbert-Samuel function", "hilbert-samuel", "COMPUTED", {{"values", t}}, false);
    for (std::size_t i = 0; i < t.size(); ++i) std::cout << "HS(" << i << ") = " << t[i] << "\n";
  } else {
    rep.verdict = "OK";
    std::cout << "nu(m_R) = " << nu_max_ideal(g) << "\n";
  }
  return rep;
}

template <Field F>
Report run_reduction(const Options& o, const F& field) {
  auto A = ambient_from(o.vars);
  auto I = ideal_of(o.ideal, A, field);
  auto J = ideal_of(o.in, A, field);
  auto c = is_reduction(I, J, o.tmax);
  Report rep;
  rep.pipeline = "reduction";
  rep.field = field.name();
  rep.inputs["ideal"] = o.ideal;
  rep.inputs["in"] = o.in;
  rep.inputs["tmax"] = o.tmax;
  Json cert{{"certificate", c.describe()}};
  if (c.positive()) cert["reverified"] = c.reverified;
  rep.verdict = to_string(c.kind);
  rep.add_verdict("I is a reduction of J", "reduction", rep.verdict, cert, false);
  std::cout << c.describe() << "\n";
  return rep;
}

// cyclic J | ideal J | free r | finlen J, separated by ';'
template <Field F>
ModuleRep<F> parse_module(const std::string& text, const Ambient& A, const F& field) {
  ModuleRep<F> M;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ';');) {
    std::stringstream ps(part);
    std::string kind;
    ps >> kind;
    std::string rest;
    std::getline(ps, rest);
    if (kind.empty()) continue;
    if (kind == "cyclic")
      M = M + ModuleRep<F>::cyclic(ideal_of(rest, A, field));
    else if (kind == "ideal")
      M = M + ModuleRep<F>::ideal(ideal_of(rest, A, field));
    else if (kind == "free")
      M = M + ModuleRep<F>::free(std::stoi(rest));
    else if (kind == "finlen")
      M = M + ModuleRep<F>::finite_length(FiniteLengthModule<F>::quotient(ideal_of(rest, A, field)));
    else
      throw UsageError("unknown module summand '" + kind + "'");
  }
  if (M.summands.empty()) throw UsageError("--module is empty");
  return M;
}

template <Field F>
Report run_koszul(const Options& o, const F& field) {
  auto A = ambient_from(o.vars);
  auto M = parse_module<F>(o.module, A, field);
  auto sop = parse_generators<F>(o.sop, A, field);
  if (sop.size() != 2) throw UsageError("--sop needs exactly two elements");
  auto row = module_row(0, M, sop[0], sop[1]);
  Report rep;
  rep.pipeline = "koszul";
  rep.field = field.name();
  rep.inputs["module"] = o.module;
  rep.inputs["sop"] = o.sop;
  const auto& t = row.tally;
  rep.add("chi1 is nonnegative", "serre-chi1", t.chi1() >= 0,
          {{"h0", t.h0}, {"h1", t.h1}, {"h2", t.h2}, {"chi", t.chi()}, {"chi1", t.chi1()}, {"nu", row.nu},
           {"e", row.e}});
  rep.verdict = rep.required_pass() ? "COMPUTED" : "FAIL";
  std::cout << "h = " << t.to_string() << "  chi = " << t.chi() << "  chi1 = " << t.chi1() << "  nu = " << row.nu
            << "  e = " << row.e << "\n";
  return rep;
}

Json limit_json(const RatioLimit& l) { return l.describe(); }

void print_table(const AsymptoticTable& t) {
  std::cout << "n\tnu\te\th0\th1\th2\tchi1\te/nu\th1/nu\n";
  for (const auto& r : t.rows)
    std::cout << r.n << "\t" << r.nu << "\t" << r.e << "\t" << r.tally.h0 << "\t" << r.tally.h1 << "\t" << r.tally.h2
              << "\t" << r.chi1() << "\t" << AsymptoticRow::ratio(r.e, r.nu) << "\t"
              << AsymptoticRow::ratio(r.tally.h1, r.nu) << "\n";
  std::cout << "e/nu -> " << t.e_over_nu.describe() << "\n"
            << "h1/nu -> " << t.h1_over_nu.describe() << "\n"
            << "h2/nu -> " << t.h2_over_nu.describe() << "\n"
            << "chi1/nu -> " << t.chi1_over_nu.describe() << "\n";
}

Json table_json(const AsymptoticTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows)
    rows.push_back({{"n", r.n}, {"nu", r.nu}, {"e", r.e}, {"h", {r.tally.h0, r.tally.h1, r.tally.h2}},
                    {"chi1", r.chi1()}});
  return {{"rows", rows},
          {"e_over_nu", limit_json(t.e_over_nu)},
          {"h1_over_nu", limit_json(t.h1_over_nu)},
          {"h2_over_nu", limit_json(t.h2_over_nu)},
          {"chi1_over_nu", limit_json(t.chi1_over_nu)},
          {"exact", t.exact}};
}

template <Field F>
Report run_analyze(const Options& o, const F& field) {
  auto [a, b] = parse_range(o.range);
  Report rep;
  rep.pipeline = "analyze";
  rep.field = field.name();
  rep.inputs["family"] = o.family;
  rep.inputs["range"] = o.range;
  if (is_monomial_family(o.family)) {
    auto fam = parse_monomial_family(o.family, a, b);
    auto sr = saturate_over_S<F>(fam, field);
    std::cout << "t = " << sr.t << "  nu_R(S) = " << sr.nu_R_S << "\n";
    std::cout << "n\tnu_R(M)\tnu_R(MS)\tnu_S(MS)\tl(MS/M)\th1\te(M)\te(MS)\n";
    bool bounds = true;
    Json rows = Json::array();
    for (const auto& r : sr.rows) {
      std::cout << r.n << "\t" << r.nu_R_M << "\t" << r.nu_R_MS << "\t" << r.nu_S_MS << "\t" << r.quotient_length
                << "\t" << r.h1 << "\t" << r.e_M << "\t" << r.e_MS << "\n";
      bounds = bounds && r.length_bound && r.generator_bound && r.multiplicity_equal;
      rows.push_back({{"n", r.n},
                      {"nu_R_M", r.nu_R_M},
                      {"nu_R_MS", r.nu_R_MS},
                      {"nu_S_MS", r.nu_S_MS},
                      {"quotient_length", r.quotient_length},
                      {"h1", r.h1},
                      {"e_M", r.e_M},
                      {"e_MS", r.e_MS}});
    }
    rep.add("length, generator and multiplicity bounds hold for every index", "saturation-bounds", bounds,
            {{"t", sr.t}, {"nu_R_S", sr.nu_R_S}, {"rows", rows}});
    rep.add("asymptotic equivalences are transitive", "equivalence-ledger", sr.ledger.transitive(),
            {{"entries", sr.ledger.entries().size()}});
    print_table(sr.s_side);
    rep.add_verdict("S-side sequence classification", "sequence-verdict", to_string(sr.s_side.verdict),
                    table_json(sr.s_side), false);
    rep.verdict = rep.required_pass() ? to_string(sr.s_side.verdict) : "FAIL";
    std::cout << "verdict: " << rep.verdict << "\n";
    return rep;
  }
  auto fam = parse_family<F>(o.family, a, b, field);
  AsymptoticTable t;
  if (o.reduce_torsion) {
    auto tr = torsion_reduce(fam);
    bool ok = tr.ledger.transitive();
    for (bool v : tr.identity_holds) ok = ok && v;
    for (bool v : tr.torsion_chi1_is_h0) ok = ok && v;
    rep.add("torsion-free reduction identities hold", "torsion-reduction", ok,
            {{"original", table_json(tr.original)}, {"ledger_entries", tr.ledger.entries().size()}});
    std::cout << "original family:\n";
    print_table(tr.original);
    std::cout << "verdict: " << to_string(tr.original.verdict) << "\n\ntorsion-free part:\n";
    t = tr.reduced;
  } else {
    t = analyze(fam);
  }
  print_table(t);
  rep.add_verdict("sequence classification", "sequence-verdict", to_string(t.verdict), table_json(t), false);
  rep.verdict = rep.required_pass() ? to_string(t.verdict) : "FAIL";
  std::cout << "verdict: " << rep.verdict << (t.exact ? " (exact)" : " (tail evidence)") << "\n";
  return rep;
}

template <Field F>
Report dispatch(const std::string& cmd, const Options& o, const F& field) {
  if (cmd == "verify-35") return verify_no_ulrich_family<F>(o.n, field);
  if (cmd == "verify-51") return verify_weak_lim_ulrich_equivalence<F>(read_ring_argument(o.ring), field);
  if (cmd == "verify-37") return verify_localized_family<F>(o.n, field);
  if (cmd == "groebner") return run_groebner<F>(o, field);
  if (cmd == "semigroup") return run_semigroup(o);
  if (cmd == "reduction") return run_reduction<F>(o, field);
  if (cmd == "koszul") return run_koszul<F>(o, field);
  if (cmd == "analyze") return run_analyze<F>(o, field);
  throw UsageError("unknown subcommand");
}

int exit_code(const std::string& verdict, const std::string& expect) {
  if (!expect.empty()) {
    if (verdict == expect) return 0;
    return verdict == "INCONCLUSIVE" ? 3 : 1;
  }
  if (verdict == "INCONCLUSIVE") return 3;
  if (verdict == "PRECONDITION_FAILED" || verdict == "REFUSED" || verdict == "FAIL") return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ulrich-forge: exact verification of Ulrich-module nonexistence examples"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--json", o.json_path, "write the full report as JSON")->group("Global");
  app.add_option("--expect", o.expect, "exit 0 only if the verdict matches")->group("Global");
  app.add_option("--field", o.field, "coefficient field: q or fp:P")->group("Global");
  app.add_option("--vars", o.vars, "comma-separated variable names")->group("Global");
  app.set_help_all_flag("--help-all");

  auto* v35 = app.add_subcommand("verify-35", "R_n = k[x^n, x^{n+1}, x^n y, y^n, y^{n+1}, x y^n, x y] has no Ulrich modules");
  v35->add_option("--n", o.n)->required();
  auto* v51 = app.add_subcommand("verify-51", "IS = m_R S and the equivalent Ulrich conditions");
  v51->add_option("--ring", o.ring, "file (or inline text) `ring ambient=(x,y) gens=[...] [reduction=[...]]`")
      ->required();
  auto* v37 = app.add_subcommand("verify-37", "three-dimensional T_n and its localization");
  v37->add_option("--n", o.n)->required();

  auto* gb = app.add_subcommand("groebner", "reduced Groebner basis, normal forms, colength, equality");
  gb->add_option("--ideal", o.ideal)->required();
  auto* nf = gb->add_option("--nf", o.nf);
  auto* cl = gb->add_flag("--colength", o.colength);
  auto* eq = gb->add_option("--equal", o.equal);
  nf->excludes(cl)->excludes(eq);
  cl->excludes(eq);

  auto* sg = app.add_subcommand("semigroup", "affine semigroup gap sets and multiplicities");
  sg->add_option("--gens", o.gens, "e.g. \"sg 2 {(2,0),(3,0),(1,1)}\"")->required();
  auto* sgg = sg->add_flag("--gaps", o.gaps);
  auto* sgm = sg->add_flag("--multiplicity", o.mult);
  auto* sgh = sg->add_option("--hilbert", o.hilbert)->check(CLI::NonNegativeNumber);
  sgg->excludes(sgm)->excludes(sgh);
  sgm->excludes(sgh);

  auto* red = app.add_subcommand("reduction", "is --ideal a reduction of --in");
  red->add_option("--ideal", o.ideal)->required();
  red->add_option("--in", o.in)->required();
  red->add_option("--tmax", o.tmax)->check(CLI::NonNegativeNumber);

  auto* kz = app.add_subcommand("koszul", "Koszul homology lengths of an S-module");
  kz->add_option("--module", o.module, "summands `cyclic J`, `ideal J`, `free r`, `finlen J` joined by ';'")
      ->required();
  kz->add_option("--sop", o.sop, "two elements, e.g. \"x^2, y^2\"")->required();

  auto* an = app.add_subcommand("analyze", "asymptotic classification of a module family");
  an->add_option("--family", o.family)->required();
  an->add_option("--range", o.range);
  an->add_flag("--reduce-torsion", o.reduce_torsion);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();

  Report rep;
  try {
    if (o.field == "q") {
      rep = dispatch<RationalField>(cmd, o, RationalField{});
    } else if (o.field.rfind("fp:", 0) == 0) {
      std::optional<PrimeField> F;
      try {
        F = parse_field<PrimeField>(o.field);
      } catch (const std::exception& e) {
        throw UsageError(e.what());
      }
      rep = dispatch<PrimeField>(cmd, o, *F);
    } else {
      throw UsageError("--field must be q or fp:P");
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const IncreaseBound& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (cmd.rfind("verify-", 0) == 0) std::cout << rep.to_text();
  if (!o.json_path.empty()) {
    std::ofstream out(o.json_path);
    if (!out) {
      std::cerr << "cannot write " << o.json_path << "\n";
      return 2;
    }
    out << rep.to_json().dump(2) << "\n";
  }
  return exit_code(rep.verdict, o.expect);
}
