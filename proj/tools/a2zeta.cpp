// Command line front end: build quotient complexes, validate them, compute
// the L-function polynomials and run the identity suite.
//
// Exit codes: 0 all requested checks pass, 1 usage or domain error,
// 2 structural validation failure, 3 identity failure.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "a2zeta/builders.hpp"
#include "a2zeta/cover.hpp"
#include "a2zeta/lfun.hpp"

using namespace a2zeta;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw DomainError("cannot write file: " + out_path);
  out << text << "\n";
}

QuotientComplex load_complex(const std::string& path) {
  if (path.empty()) return one_vertex_complex_q2(false);
  return complex_from_json(slurp(path));
}

std::string resolve_rep_spec(const std::string& rep_spec) {
  if (rep_spec.empty() || rep_spec[0] == '{' || rep_spec == "trivial" || rep_spec == "regular" ||
      rep_spec == "permutation" || rep_spec == "natural")
    return rep_spec;
  return slurp(rep_spec);
}

std::string poly_line(const char* name, const Poly& p) {
  std::ostringstream os;
  os << name << " (deg " << p.degree() << "):";
  for (const auto& s : poly_to_strings(p)) os << " " << s;
  return os.str();
}

void print_text_report(const LReport& r, std::ostream& os) {
  os << "q=" << r.q << " d=" << r.d << " N=(" << r.n0 << "," << r.n1 << "," << r.n2
     << ") chi=" << r.chi << "\n";
  os << poly_line("P0", r.p0) << "\n";
  os << poly_line("P1", r.p1) << "\n";
  os << poly_line("P2", r.p2) << "\n";
  for (const auto& [name, ok] : r.checks) os << (ok ? "pass " : "FAIL ") << name << "\n";
  for (const auto& note : r.notes) os << "note: " << note << "\n";
}

int run_build(const std::string& out, long q, const std::string& presentation,
              const std::string& voltage, const std::string& cover_spec,
              const std::string& emit_presentation) {
  if (q != 2 && q != 3) throw DomainError("unsupported q");
  TrianglePresentation t;
  if (!presentation.empty()) {
    t = presentation_from_json(slurp(presentation));
    if (t.q != q) throw DomainError("presentation q does not match --q");
  } else {
    t = find_triangle_presentation(q);
  }
  if (!emit_presentation.empty()) emit(presentation_to_json(t), emit_presentation);
  QuotientComplex base;
  if (voltage == "trivial")
    base = complex_from_presentation(t, FiniteGroup::trivial(),
                                     std::vector<int>(t.lambda.size(), 0));
  else
    base = complex_from_presentation(t, FiniteGroup::cyclic(3),
                                     std::vector<int>(t.lambda.size(), 1));
  QuotientComplex result = base;
  if (!cover_spec.empty()) {
    if (cover_spec == "natural")
      result = build_natural_cover(base);
    else
      result = build_cover(base, action_from_json(base.group(), slurp(cover_spec)));
  }
  ValidationReport rep = validate(result);
  emit(complex_to_json(result), out);
  if (!rep.pass()) {
    std::cerr << rep.summary();
    return 2;
  }
  return 0;
}

int run_check(const std::string& which, const std::string& complex_path,
              const std::string& rep_spec, const std::string& cover_path, int n_max,
              const std::string& format, const std::string& out,
              const std::string& dump_operators) {
  QuotientComplex c = load_complex(complex_path);
  ValidationReport vr = validate(c);
  if (!vr.pass()) {
    std::cerr << vr.summary();
    return 2;
  }
  Representation rho = resolve_representation(c.group(), resolve_rep_spec(rep_spec));

  LReport r = compute_l_report(c, rho);
  bool ran_any = false;
  auto want = [&](const char* name) { return which == "all" || which == name; };

  if (want("identity")) {
    IdentityVerdict v = check_main_identity(r);
    r.add_check("main_identity", v.pass);
    if (!v.pass) r.notes.push_back("main identity: " + v.detail);
    DegreeVerdict dv = check_degrees(r, v.pass);
    r.add_check("deg_p0_is_3dN0", dv.deg_p0_exact);
    r.add_check("degree_balance", dv.balance);
    std::ostringstream os;
    os << "deg P1 observed " << r.deg_p1 << " (2dN1 = " << dv.two_d_n1
       << ", 3dN1 = " << dv.three_d_n1 << ")";
    r.notes.push_back(os.str());
    ran_any = true;
  }
  if (want("functional")) {
    FunctionalEquationVerdict v = check_functional_equation(c, rho);
    r.add_check("functional_reversal", v.reversal);
    r.add_check("functional_epsilon_squared", v.epsilon_squared);
    r.add_check("functional_quotient_form", v.quotient_form);
    if (!v.pass && !v.detail.empty()) r.notes.push_back("functional equation: " + v.detail);
    if (c.group().size() > 2) {
      try {
        r.add_check("functional_reversal_float_dual_pair",
                    check_functional_equation_float(c, 1, 1e-9));
      } catch (const DomainError&) {
      }
    }
    ran_any = true;
  }
  if (want("cohomology") || want("operators") || !dump_operators.empty()) {
    OperatorSet ops = build_operators(c, rho);
    if (!dump_operators.empty()) emit(operators_to_json(ops), dump_operators);
    if (want("operators")) {
      OperatorChecks oc = run_operator_checks(ops);
      r.add_check("d1_d0_zero", oc.d1d0_zero);
      r.add_check("je_squared_u3", oc.je_squared);
      r.add_check("q_unipotent", oc.q_unipotent);
      r.add_check("det_i_minus_je", oc.det_i_minus_je);
      r.add_check("n_squared_zero", oc.n_squared_zero);
      r.add_check("contraction_identity", oc.contraction_identity);
      r.add_check("phi2_factorization", oc.phi2_factorization);
      r.add_check("det_jc_circulant", oc.det_jc_circulant);
      r.add_check("cochain_map_d0", oc.cochain_map_d0);
      r.add_check("cochain_map_d1", oc.cochain_map_d1);
      r.add_check("phi0_is_hecke", oc.phi0_is_hecke);
      r.add_check("det_conjugated_edge", oc.det_conjugated_edge);
      r.add_check("conjugation_preserves_det", oc.conjugation_preserves_det);
    }
    if (want("cohomology")) {
      CohomologyVerdict v = check_chain_determinants(ops, r);
      r.add_check("det_phi0_is_p0", v.det_phi0);
      r.add_check("det_phi1_is_p1", v.det_phi1);
      r.add_check("det_phi2_is_p2", v.det_phi2);
      r.add_check("alternating_product", v.alternating);
    }
    ran_any = true;
  }
  if (want("trace")) {
    TraceVerdict v = check_trace_identity(c, rho, n_max);
    for (int n = 1; n <= n_max; ++n) {
      r.add_check("trace_edge_n" + std::to_string(n), v.edge_ok[n]);
      r.add_check("trace_chamber_n" + std::to_string(n), v.chamber_ok[n]);
    }
    ran_any = true;
  }
  if ((which == "induction" || which == "all") && !cover_path.empty()) {
    QuotientComplex cover = complex_from_json(slurp(cover_path));
    ValidationReport cv = validate(cover);
    if (!cv.pass()) {
      std::cerr << cv.summary();
      return 2;
    }
    Representation reg = resolve_representation(c.group(), "regular");
    LReport base_reg = compute_l_report(c, reg);
    LReport cover_triv = compute_l_report(cover, Representation::trivial(cover.group()));
    InductionVerdict iv = check_induction(base_reg, cover_triv);
    r.add_check("induction_l1", iv.l1_equal);
    r.add_check("induction_l2", iv.l2_equal);
    r.add_check("induction_degree_scaling", iv.degree_scaling);
    LReport base_triv = compute_l_report(c, Representation::trivial(c.group()));
    DivisibilityVerdict dv = check_divisibility(base_triv, cover_triv);
    r.add_check("divisibility_p1", dv.p1_divides);
    r.add_check("divisibility_p2", dv.p2_divides);
    if (dv.pass) {
      r.notes.push_back(poly_line("quotient1", dv.quotient1));
      r.notes.push_back(poly_line("quotient2", dv.quotient2));
      r.add_check("divisibility_float_crosscheck", divisibility_float_crosscheck(c, dv, 1e-9));
    }
    ran_any = true;
  } else if (which == "induction") {
    throw DomainError("check induction needs --cover");
  }
  if (!ran_any) throw DomainError("unknown check: " + which);

  std::string text;
  if (format == "json") {
    text = report_to_json(r);
  } else {
    std::ostringstream os;
    print_text_report(r, os);
    text = os.str();
  }
  emit(text, out);
  return r.all_pass() ? 0 : 3;
}

int run_lfun(const std::string& complex_path, const std::string& rep_spec,
             const std::string& format, const std::string& out) {
  QuotientComplex c = load_complex(complex_path);
  ValidationReport vr = validate(c);
  if (!vr.pass()) {
    std::cerr << vr.summary();
    return 2;
  }
  Representation rho = resolve_representation(c.group(), resolve_rep_spec(rep_spec));
  LReport r = compute_l_report(c, rho);
  std::string text;
  if (format == "json") {
    text = report_to_json(r);
  } else {
    std::ostringstream os;
    print_text_report(r, os);
    text = os.str();
  }
  emit(text, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact L-function toolkit for rank-2 quotient complexes"};
  app.require_subcommand(1);

  std::string out, presentation, voltage = "z3", cover_spec, complex_path, emit_presentation;
  std::string rep_spec = "trivial", format = "text", which = "all", dump_operators;
  long q = 2;
  int n_max = 6;

  CLI::App* build = app.add_subcommand("build", "construct a complex and write it as JSON");
  build->add_option("--q", q, "residue size (2 or 3)");
  build->add_option("--presentation", presentation, "triangle presentation JSON file");
  build->add_option("--voltage", voltage, "voltage assignment: z3 or trivial")
      ->check(CLI::IsMember({"z3", "trivial"}));
  build->add_option("--cover", cover_spec, "sheet action file, or 'natural'");
  build->add_option("--out", out, "output file (stdout when omitted)");
  build->add_option("--emit-presentation", emit_presentation,
                    "also write the triangle presentation to this file");

  CLI::App* check = app.add_subcommand("check", "run identity checks");
  check->add_option("which", which,
                    "identity|functional|cohomology|operators|trace|induction|all")
      ->check(CLI::IsMember(
          {"identity", "functional", "cohomology", "operators", "trace", "induction", "all"}));
  check->add_option("--complex", complex_path, "complex JSON file (built-in q=2 when omitted)");
  check->add_option("--rep", rep_spec, "trivial|regular|permutation or a representation file");
  check->add_option("--cover", cover_spec, "cover complex JSON file (enables induction checks)");
  check->add_option("--n-max", n_max, "walk length bound for the trace checks")
      ->check(CLI::PositiveNumber);
  check->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  check->add_option("--out", out, "output file (stdout when omitted)");
  check->add_option("--dump-operators", dump_operators,
                    "also write every operator matrix to this JSON file");

  CLI::App* lfun = app.add_subcommand("lfun", "print the three reciprocal polynomials");
  lfun->add_option("--complex", complex_path, "complex JSON file (built-in q=2 when omitted)");
  lfun->add_option("--rep", rep_spec, "trivial|regular|permutation or a representation file");
  lfun->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  lfun->add_option("--out", out, "output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
    if (build->parsed())
      return run_build(out, q, presentation, voltage, cover_spec, emit_presentation);
    if (check->parsed())
      return run_check(which, complex_path, rep_spec, cover_spec, n_max, format, out,
                       dump_operators);
    if (lfun->parsed()) return run_lfun(complex_path, rep_spec, format, out);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const StructureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const FaceMapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
