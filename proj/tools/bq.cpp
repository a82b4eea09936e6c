// bq: command-line front end for the exact Hopf / Yetter-Drinfeld engine.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 bad input.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bq/e2_bridge.hpp"
#include "bq/io.hpp"
#include "bq/report.hpp"
#include "bq/suites.hpp"
#include "bq/sweedler.hpp"

namespace {

using json = nlohmann::json;
using namespace bq;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;

/// Input problem detected after argument parsing.
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Global {
  std::string json_path;
  std::string store = ".bq-store";
};

json q(const Rational& x) { return to_string(x); }
json desc(const CFamilyDescriptor& d) { return json::array({q(d.a), q(d.t), q(d.s)}); }

Rational arg(const std::string& text, const std::string& what) {
  try {
    return parse_rational(text);
  } catch (const parse_error& e) {
    throw input_error(what + ": " + e.what());
  }
}

CFamilyDescriptor descriptor(const std::vector<std::string>& v, std::size_t from = 0) {
  return {arg(v.at(from), "a"), arg(v.at(from + 1), "t"), arg(v.at(from + 2), "s")};
}

/// Writes `out` to --json (or stdout for "-") and returns `code`.
int emit(const Global& g, const json& out, int code) {
  if (g.json_path == "-") {
    std::cout << out.dump(2) << "\n";
  } else if (!g.json_path.empty()) {
    std::ofstream f(g.json_path);
    if (!f) throw input_error("cannot write " + g.json_path);
    f << out.dump(2) << "\n";
  }
  return code;
}

/// Human-readable lines go to stdout unless JSON is going there.
std::ostream& say(const Global& g) {
  static std::ofstream null;
  return g.json_path == "-" ? null : std::cout;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

std::filesystem::path stored(const Global& g, const std::string& name) {
  return std::filesystem::path(g.store) / (name + ".json");
}

/// A file path, or @name for a definition cached by `define`.
json load(const Global& g, const std::string& ref) {
  const std::string path = !ref.empty() && ref[0] == '@' ? stored(g, ref.substr(1)).string() : ref;
  if (!std::filesystem::exists(path)) throw input_error("no such file: " + path);
  return io::read_file(path);
}

json axiom_json(const AxiomReport& r) {
  json a = json::array();
  for (const auto& i : r.items) a.push_back({{"family", i.family}, {"passed", i.passed}, {"detail", i.detail}});
  return a;
}

int cmd_define(const Global& g, const std::string& file, std::string name) {
  const json doc = load(g, file);
  const io::Definition def = io::definition_from(doc);
  json out{{"command", "define"}, {"file", file}, {"kind", io::kind_of(doc)}};
  const StructureAlgebra& alg = std::holds_alternative<StructureAlgebra>(def) ? std::get<StructureAlgebra>(def)
                                : std::holds_alternative<HopfAlgebra>(def)    ? std::get<HopfAlgebra>(def).alg()
                                                                              : std::get<YDAlgebra>(def).alg;
  const AlgebraAxiomReport ar = check_algebra_axioms(alg);
  json triples = json::array();
  for (const auto& t : ar.associativity) triples.push_back({t[0], t[1], t[2]});
  out["associativity_violations"] = triples;
  out["unit_violations"] = {{"left", ar.left_unit}, {"right", ar.right_unit}};
  AxiomReport rep = to_axiom_report(ar);
  if (ar.ok()) {
    if (const auto* h = std::get_if<HopfAlgebra>(&def)) rep.append(check_hopf_axioms(*h), "hopf.");
    if (const auto* y = std::get_if<YDAlgebra>(&def)) {
      rep.append(check_yd_algebra(*y), "yd.");
      if (rep.ok()) out["azumaya"] = is_h_azumaya(*y);
    }
    if (std::holds_alternative<StructureAlgebra>(def)) out["central_simple"] = is_central_simple(alg);
  }
  out["checks"] = axiom_json(rep);
  out["valid"] = rep.ok();
  say(g) << out["kind"].get<std::string>() << " of dimension " << alg.dim() << ": " << (rep.ok() ? "valid" : "INVALID")
         << "\n";
  for (const auto& i : rep.items)
    if (!i.passed) say(g) << "  " << i.family << ": " << i.detail << "\n";
  if (!triples.empty()) {
    say(g) << "  violated associativity triples (i, j, l):";
    for (const auto& t : ar.associativity) say(g) << " (" << t[0] << "," << t[1] << "," << t[2] << ")";
    say(g) << "\n";
  }
  if (rep.ok()) {
    if (name.empty()) name = std::filesystem::path(file).stem().string();
    std::filesystem::create_directories(g.store);
    std::ofstream f(stored(g, name));
    f << doc.dump() << "\n";
    out["stored_as"] = name;
    say(g) << "stored as @" << name << "\n";
  }
  return emit(g, out, rep.ok() ? kPass : kFail);
}

int cmd_verify(const Global& g, const std::vector<std::string>& ids, std::uint64_t seed, std::size_t samples,
               const std::optional<std::string>& t, const std::optional<std::string>& qv) {
  for (const auto& id : ids)
    if (!suites::is_suite_id(id)) throw input_error("unknown suite '" + id + "'");
  suites::Options opt;
  if (t || qv) {
    if (!t || !qv) throw input_error("--t and --q go together");
    const Rational tt = arg(*t, "--t"), qq = arg(*qv, "--q");
    if (sgn(tt) == 0 || tt == 1 || qq == 2) throw input_error("--t must avoid 0 and 1, --q must differ from 2");
    opt.not_subgroup_pairs.emplace_back(tt, qq);
  }
  std::vector<std::string> run = ids;
  if (t && std::find(run.begin(), run.end(), "not-subgroup") == run.end() &&
      std::find(run.begin(), run.end(), "all") == run.end())
    run.push_back("not-subgroup");
  const auto results = suites::run_suites(run, seed, samples, opt);
  const json out = report::to_json(results);
  for (const auto& s : results) {
    say(g) << s.suite << ": " << (s.records.size() - s.failures()) << "/" << s.records.size() << " passed\n";
    for (const auto& r : s.records)
      if (!r.passed) say(g) << "  FAIL " << r.check_id << " " << r.params.dump() << " " << r.payload.dump() << "\n";
  }
  const bool ok = out["summary"]["failed"].get<std::size_t>() == 0;
  say(g) << (ok ? "all checks passed" : "some checks FAILED") << "\n";
  return emit(g, out, ok ? kPass : kFail);
}

int cmd_classify(const Global& g, const std::vector<std::string>& v) {
  const CFamilyDescriptor d = descriptor(v);
  const auto H4 = h4_hopf();
  const YDAlgebra C = build_C(H4, d);
  const bool valid = check_yd_algebra(C).ok();
  const bool az = is_h_azumaya(C);
  bool ok = valid && az == d.azumaya();
  const CFamilyDescriptor canon = canonical_descriptor(d);
  ok = ok && find_c_isomorphism(C, build_C(H4, canon)).has_value();
  json out{{"command", "classify"}, {"descriptor", desc(d)}, {"canonical", desc(canon)}, {"yd_valid", valid}, {"azumaya", az}};
  say(g) << "C" << d.str() << ": " << (az ? "Azumaya" : "not Azumaya (2a = st), so it has no Brauer class") << "\n";
  say(g) << "  canonical descriptor C" << canon.str() << "\n";
  if (az) {
    const CMembership m = c_membership(d);
    out["membership"] = {{"i", m.in_i.str()}, {"iota", m.in_iota.str()}};
    out["bw_type"] = sgn(d.t) == 0 && sgn(d.s) == 0;
    say(g) << "  Im(i_l): l = " << m.in_i.str() << "\n  Im(iota_l): l = " << m.in_iota.str() << "\n";
    if (out["bw_type"].get<bool>()) say(g) << "  Brauer-Wall type (t = s = 0)\n";
  }
  if (sgn(d.s) == 0 && sgn(d.a) != 0) {
    const BM0Invariant inv = classify_bm0(H4, d);
    ok = ok && inv.agree();
    out["bm0"] = {{"beta", q(inv.beta)}, {"beta_witness", q(inv.beta_witness)}, {"square_class", inv.square_class.get_str()}};
    say(g) << "  beta = " << inv.beta << " (witness " << inv.beta_witness << "), square class " << inv.square_class << "\n";
  }
  out["ok"] = ok;
  return emit(g, out, ok ? kPass : kFail);
}

int cmd_product(const Global& g, const std::vector<std::string>& v) {
  const CFamilyDescriptor x = descriptor(v, 0), y = descriptor(v, 3);
  const auto H4 = h4_hopf();
  const YDAlgebra P = sharp_product(build_C(H4, x), build_C(H4, y));
  const QuaternionPresentation want = c_product(x, y);
  const auto read = read_quaternion(P);
  const bool ok = check_yd_algebra(P).ok() && read && *read == want;
  json out{{"command", "product"},
           {"x", desc(x)},
           {"y", desc(y)},
           {"presentation",
            {{"X^2", q(want.X2)}, {"Y^2", q(want.Y2)}, {"XY+YX", q(want.anti)}, {"h.X", q(want.hX)}, {"h.Y", q(want.hY)},
             {"rho(X)", "X(x)g + " + to_string(want.sX) + "(x)h"}, {"rho(Y)", "Y(x)g + " + to_string(want.sY) + "(x)h"}}},
           {"algebra", io::yd_json(P, "H4")},
           {"azumaya", is_h_azumaya(P)},
           {"ok", ok}};
  say(g) << "X = x#1, Y = 1#y: X^2 = " << want.X2 << ", Y^2 = " << want.Y2 << ", XY + YX = " << want.anti << "\n"
         << "h.X = " << want.hX << ", h.Y = " << want.hY << ", rho(X) = X(x)g + " << want.sX << "(x)h, rho(Y) = Y(x)g + "
         << want.sY << "(x)h\n"
         << "structure constants " << (ok ? "match" : "DO NOT match") << " the presentation\n";
  return emit(g, out, ok ? kPass : kFail);
}

int cmd_conjugate(const Global& g, const std::vector<std::string>& v) {
  const CFamilyDescriptor d = descriptor(v);
  const Rational alpha = arg(v.at(3), "alpha");
  if (sgn(alpha) == 0) throw input_error("alpha must be nonzero");
  const auto H4 = h4_hopf();
  const CFamilyDescriptor img = aut_conjugate(d, alpha);
  const YDAlgebra tw = aut_twist(build_C(H4, d), alpha);
  const auto iso = find_c_isomorphism(tw, build_C(H4, img));
  const bool ok = check_yd_algebra(tw).ok() && iso.has_value();
  say(g) << "C" << d.str() << " conjugated by alpha = " << alpha << ": C" << img.str()
         << (ok ? " (isomorphism x -> " + to_string(*iso) + " y)" : " (structural check FAILED)") << "\n";
  json out{{"command", "conjugate"}, {"descriptor", desc(d)}, {"alpha", q(alpha)}, {"image", desc(img)}, {"ok", ok}};
  if (iso) out["isomorphism_scale"] = q(*iso);
  return emit(g, out, ok ? kPass : kFail);
}

int cmd_transport(const Global& g, const std::string& which, const std::vector<std::string>& v) {
  const CFamilyDescriptor d = descriptor(v);
  const auto H4 = h4_hopf();
  TransportResult res;
  json out{{"command", "transport"}, {"map", which}, {"descriptor", desc(d)}};
  if (which == "psi") {
    if (v.size() != 4) throw input_error("transport psi needs a t s and the twist parameter");
    const Rational s = arg(v[3], "parameter");
    out["parameter"] = q(s);
    res = psi_transport(H4, d, s);
  } else {
    if (v.size() != 3) throw input_error("transport phi takes exactly a t s");
    res = phi_transport(H4, d);
  }
  out["image"] = desc(res.image);
  if (res.structural) out["structural"] = desc(*res.structural);
  out["ok"] = res.ok();
  say(g) << which << ": C" << d.str() << " -> C" << res.image.str() << " "
         << (res.ok() ? "(structurally confirmed)" : "(structural check FAILED)") << "\n";
  return emit(g, out, res.ok() ? kPass : kFail);
}

int cmd_intersect(const Global& g, const std::vector<std::string>& v) {
  const Rational t = arg(v.at(0), "t"), s = arg(v.at(1), "s");
  const IntersectionReport r = intersection_report(t, s);
  bool ok = true;
  // Each witness must lie in both images it claims to generate.
  auto witness = [&](const std::optional<CFamilyDescriptor>& w, bool first_i, bool second_i) -> json {
    if (!w) return nullptr;
    const CMembership m = c_membership(*w);
    const Membership& a = first_i ? m.in_i : m.in_iota;
    const Membership& b = second_i ? m.in_i : m.in_iota;
    ok = ok && a.contains(t) && b.contains(s);
    return desc(*w);
  };
  json out{{"command", "intersect"},
           {"t", q(t)},
           {"s", q(s)},
           {"i_t_iota_s", {{"nontrivial", r.i_iota_nontrivial}, {"witness", witness(r.i_iota_witness, true, false)}}},
           {"i_t_i_s", {{"nontrivial", r.i_i_nontrivial}, {"witness", witness(r.i_i_witness, true, true)}}},
           {"iota_t_iota_s", {{"nontrivial", r.iota_iota_nontrivial}, {"witness", witness(r.iota_iota_witness, false, false)}}}};
  out["ok"] = ok;
  auto line = [&](const std::string& what, bool nt, const std::optional<CFamilyDescriptor>& w) {
    say(g) << what << ": " << (nt ? "nontrivial" : "only the Brauer-Wall part") << (w ? ", common generator C" + w->str() : "")
           << "\n";
  };
  line("Im(i_t) and Im(iota_s)", r.i_iota_nontrivial, r.i_iota_witness);
  line("Im(i_t) and Im(i_s)", r.i_i_nontrivial, r.i_i_witness);
  line("Im(iota_t) and Im(iota_s)", r.iota_iota_nontrivial, r.iota_iota_witness);
  return emit(g, out, ok ? kPass : kFail);
}

int cmd_kernel_witness(const Global& g) {
  const KernelWitness kw = kernel_witness(dh4(), e2_hopf());
  json out{{"command", "kernel-witness"}, {"steps", axiom_json(kw.steps)}, {"ok", kw.steps.ok()}};
  for (const auto& i : kw.steps.items) say(g) << (i.passed ? "pass " : "FAIL ") << i.family << (i.passed ? "" : ": " + i.detail) << "\n";
  return emit(g, out, kw.steps.ok() ? kPass : kFail);
}

int cmd_counterexample(const Global& g, const std::vector<std::string>& v) {
  const Rational t = arg(v.at(0), "t"), qq = arg(v.at(1), "q");
  if (sgn(t) == 0 || t == 1 || qq == 2) throw input_error("needs t not in {0, 1} and q != 2");
  report::Recorder r("counterexample", 0, 0);
  suites::not_subgroup_record(r, t, qq, "closure_fails");
  const auto rec = r.take().records.front();
  json out{{"command", "counterexample"}, {"t", q(t)}, {"q", q(qq)}, {"result", rec.payload}, {"ok", rec.passed}};
  say(g) << "C(1;" << t << ",2) # C(1;1," << qq << "): "
         << (rec.passed ? "closure fails; X - Y is odd and in the graded center, no inner x1 or x2 witness"
                        : "verification FAILED")
         << "\n";
  return emit(g, out, rec.passed ? kPass : kFail);
}

int cmd_inner_equivalence(const Global& g, const std::string& file) {
  const json doc = load(g, file);
  if (io::kind_of(doc) != "yd") throw input_error("expects a yd definition over E2");
  const YDAlgebra A = io::yd_from(doc);
  if (A.H->dim() != 8) throw input_error("expects a yd definition over E2");
  const AxiomReport valid = check_yd_algebra(A);
  if (!valid.ok()) {
    say(g) << "not a YD algebra:\n" << valid.summary();
    return emit(g, {{"command", "inner-equivalence"}, {"valid", false}, {"checks", axiom_json(valid)}}, kFail);
  }
  const InnerEquivalenceReport r = inner_equivalence_check(A);
  json out{{"command", "inner-equivalence"},
           {"valid", true},
           {"azumaya", r.azumaya},
           {"x1_inner", r.x1_inner()},
           {"x2_inner", r.x2_inner()},
           {"graded_central_simple", r.graded_central_simple},
           {"equivalent", r.equivalent},
           {"e2_inner", r.e2_inner},
           {"central_simple", r.central_simple},
           {"ok", r.ok()}};
  if (r.v1) out["x1_witness"] = io::to_json(*r.v1);
  if (r.v2) out["x2_witness"] = io::to_json(*r.v2);
  say(g) << "Azumaya: " << yes(r.azumaya) << "\nx1 inner: " << yes(r.x1_inner()) << "\nx2 inner: " << yes(r.x2_inner())
         << "\ngraded central simple: " << yes(r.graded_central_simple) << "\nE(2)-action inner: " << yes(r.e2_inner)
         << "\ncentral simple: " << yes(r.central_simple) << "\n"
         << (r.ok() ? "equivalences hold" : "equivalences FAIL (or the algebra is not Azumaya)") << "\n";
  return emit(g, out, r.ok() ? kPass : kFail);
}

int cmd_show(const Global& g, const std::vector<std::string>& v) {
  json out;
  if (v.at(0) == "C") {
    if (v.size() != 4) throw input_error("show C needs a t s");
    const CFamilyDescriptor d = descriptor(v, 1);
    out = io::yd_json(build_C(h4_hopf(), d), "H4");
    out["name"] = "C" + d.str();
  } else if (v.at(0) == "CE") {
    if (v.size() != 4) throw input_error("show CE needs a lambda mu");
    const YDAlgebra A = build_CE(e2_hopf(), h4_hopf(), arg(v[1], "a"), arg(v[2], "lambda"), arg(v[3], "mu"));
    out = io::yd_json(A, "E2");
  } else {
    try {
      out = io::hopf_json(*io::named_hopf(v[0]));
    } catch (const std::invalid_argument& e) {
      throw input_error(e.what());
    }
  }
  if (g.json_path.empty()) std::cout << out.dump(2) << "\n";
  return emit(g, out, kPass);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for Hopf and Yetter-Drinfeld algebras over H4, E(2) and D(H4)"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--json", g.json_path, "write the JSON result to this path ('-' for stdout)");
  app.add_option("--store", g.store, "directory for definitions cached by define")->capture_default_str();

  std::string file, name, which;
  std::vector<std::string> nums;
  std::vector<std::string> ids{"all"};
  std::uint64_t seed = 1;
  std::size_t samples = 20;
  std::optional<std::string> t_opt, q_opt;

  auto* define = app.add_subcommand("define", "load and check an algebra, Hopf or YD definition");
  define->add_option("file", file, "JSON definition")->required();
  define->add_option("--name", name, "cache name (default: file stem)");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", ids, "suite id or 'all' (repeatable)")->capture_default_str();
  verify->add_option("--seed", seed, "random seed")->capture_default_str();
  verify->add_option("--samples", samples, "random samples per check family")->capture_default_str();
  verify->add_option("--t", t_opt, "t for an extra graded-closure check (with --q)");
  verify->add_option("--q", q_opt, "q for an extra graded-closure check (with --t)");

  auto* classify = app.add_subcommand("classify", "Azumaya status, membership and invariants of C(a;t,s)");
  classify->add_option("values", nums, "a t s")->expected(3)->required();
  auto* product = app.add_subcommand("product", "presentation of C(a;t,s) # C(a';t',s')");
  product->add_option("values", nums, "a t s a' t' s'")->expected(6)->required();
  auto* conjugate = app.add_subcommand("conjugate", "conjugate C(a;t,s) by the automorphism h -> alpha h");
  conjugate->add_option("values", nums, "a t s alpha")->expected(4)->required();
  auto* transport = app.add_subcommand("transport", "apply psi (a 0 1 s) or phi (a 1 t)");
  transport->add_option("map", which)->required()->check(CLI::IsMember({"psi", "phi"}));
  transport->add_option("values", nums, "a t s [param]")->expected(3, 4)->required();
  auto* intersect = app.add_subcommand("intersect", "intersections of the images of i and iota");
  intersect->add_option("values", nums, "t s")->expected(2)->required();
  auto* kernel = app.add_subcommand("kernel-witness", "verify the nontrivial kernel element End(P)");
  auto* counter = app.add_subcommand("counterexample", "graded classes not closed under the product, for t q");
  counter->add_option("values", nums, "t q")->expected(2)->required();
  auto* inner = app.add_subcommand("inner-equivalence", "inner actions vs graded central simplicity for a YD file over E2");
  inner->add_option("file", file, "JSON definition or @name")->required();
  auto* show = app.add_subcommand("show", "print a builder as JSON: H4, H4dual, E2, DH4, kZ2, C a t s, CE a lambda mu");
  show->add_option("values", nums, "what")->expected(1, 4)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  try {
    if (*define) return cmd_define(g, file, name);
    if (*verify) return cmd_verify(g, ids, seed, samples, t_opt, q_opt);
    if (*classify) return cmd_classify(g, nums);
    if (*product) return cmd_product(g, nums);
    if (*conjugate) return cmd_conjugate(g, nums);
    if (*transport) return cmd_transport(g, which, nums);
    if (*intersect) return cmd_intersect(g, nums);
    if (*kernel) return cmd_kernel_witness(g);
    if (*counter) return cmd_counterexample(g, nums);
    if (*inner) return cmd_inner_equivalence(g, file);
    if (*show) return cmd_show(g, nums);
  } catch (const io::schema_error& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
