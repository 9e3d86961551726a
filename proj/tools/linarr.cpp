// Command-line front end: build, verify, combinatorics, containment, render, compare.
//
// Exit codes: 0 computed and matched expectations, 1 computed but a property
// failed, 2 usage or computation error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "linarr/arrangement.hpp"
#include "linarr/freeness.hpp"
#include "linarr/ideals.hpp"
#include "linarr/isomorphism.hpp"
#include "linarr/render.hpp"

using namespace linarr;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFailed = 1;
constexpr int kError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Arrangement load_arrangement(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  return Arrangement::read(in);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
  if (!out) throw UsageError("cannot write " + path);
}

json line_list(const Arrangement& a) {
  json out = json::array();
  for (const auto& l : a.lines()) out.push_back(l.equation());
  return out;
}

json t_vector(const WeakCombinatorics& w) {
  json t = json::object();
  for (const auto& [mult, count] : w.t) t["t_" + std::to_string(mult)] = count;
  return t;
}

struct Outcome {
  json result;
  int exit_code = kOk;
};

// ---- build ----

struct BuildArgs {
  std::string family;
  std::optional<int> k;
  std::string out;
};

Outcome cmd_build(const BuildArgs& args) {
  Arrangement a;
  if (args.family == "a12k7") {
    if (!args.k) throw UsageError("family a12k7 needs --k");
    a = build_family_12k7(*args.k);
  } else {
    if (args.k) throw UsageError("--k applies to family a12k7 only");
    a = build_a31_3();
  }
  std::ostringstream text;
  a.write(text);
  write_text(args.out, text.str());
  return {{{"line_count", a.size()}, {"lines", line_list(a)}, {"path", args.out}}};
}

// ---- verify ----

struct VerifyArgs {
  std::string arrangement, table, expect;
};

Outcome cmd_verify(const VerifyArgs& args) {
  auto a = load_arrangement(args.arrangement);
  std::ifstream in(args.table);
  if (!in) throw UsageError("cannot read " + args.table);
  const auto table = AdditionTable::read(in);
  const auto expect = ExponentTriple::parse(args.expect);
  const auto order = table.resolve(a);
  for (std::size_t i = 0; i < order.size(); ++i) a.set_label(order[i], table.rows[i].name);
  const auto cert = freeness_replay(a, order);

  json recorded = json::array();
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& row = table.rows[i];
    if (!row.exponents) continue;
    if (*row.exponents != cert.steps[i].exponents) {
      recorded.push_back({{"label", row.name},
                          {"recorded", row.exponents->values()},
                          {"computed", cert.steps[i].exponents.values()}});
    }
  }
  Outcome o;
  o.result = {{"certificate", cert.to_json()},
              {"verdict", cert.verdict},
              {"expected", expect.values()},
              {"recorded_exponent_mismatches", recorded}};
  if (cert.verdict) {
    o.result["final_exponents"] = cert.final_exponents().values();
    if (cert.final_exponents() != expect) {
      o.result["mismatch"] = "final exponents " + cert.final_exponents().to_string() + " differ from expected " +
                             expect.to_string();
      o.exit_code = kPropertyFailed;
    }
  } else {
    const auto& bad = cert.steps[*cert.failing_step];
    o.result["failing_step"] = {{"index", *cert.failing_step},
                                {"label", bad.label},
                                {"restriction_count", bad.restriction_count}};
    o.exit_code = kPropertyFailed;
  }
  return o;
}

// ---- combinatorics ----

Outcome cmd_combinatorics(const std::string& path, bool with_points) {
  const auto a = load_arrangement(path);
  if (a.size() < 2) throw UsageError("need at least two lines");
  const auto locus = singular_locus(a);
  const auto w = weak_combinatorics(locus, a.size());
  json result = {{"line_count", a.size()},
                 {"point_count", locus.size()},
                 {"t", t_vector(w)},
                 {"pair_count", w.pair_count()},
                 {"pair_count_identity", w.pair_count() == a.size() * (a.size() - 1) / 2}};
  if (with_points) {
    json pts = json::array();
    for (const auto& p : locus.points) pts.push_back({{"point", p.point.to_string()}, {"multiplicity", p.multiplicity()}});
    result["points"] = pts;
  }
  return {result};
}

// ---- containment ----

struct ContainmentArgs {
  std::string arrangement;
  unsigned m = 3, r = 2, max_degree = 60, threads = 1;
  std::string field = "exact";
  bool first_witness = false;
};

json generator_degrees(const std::map<unsigned, std::size_t>& h) {
  json out = json::object();
  for (const auto& [d, n] : h) out[std::to_string(d)] = n;
  return out;
}

template <class Field>
json report_common(const ContainmentReport<Field>& report) {
  return {{"contained", report.contained},
          {"field", report.field},
          {"witness_degrees", generator_degrees(report.witness_degrees)},
          {"radical_generator_degrees", generator_degrees(report.radical_generator_degrees)},
          {"symbolic_generator_degrees", generator_degrees(report.symbolic_generator_degrees)},
          {"degrees_scanned", {report.degrees_scanned.first, report.degrees_scanned.second}},
          {"exhaustive", report.exhaustive},
          {"wall_time_ms", report.wall_time_ms}};
}

json factor_summary(const Arrangement& a, const std::vector<std::size_t>& lines, unsigned quotient_degree) {
  json eqs = json::array();
  for (std::size_t i : lines) eqs.push_back(a.line(i).equation());
  return {{"line_factor_count", lines.size()}, {"line_factors", eqs}, {"quotient_degree", quotient_degree}};
}

Outcome cmd_containment(const ContainmentArgs& args) {
  if (args.m == 0 || args.r == 0) throw UsageError("--m and --r must be at least 1");
  const auto a = load_arrangement(args.arrangement);
  if (a.size() < 2) throw UsageError("need at least two lines");
  const auto scheme = FatPointScheme::uniform(singular_locus(a).point_set(), 1);
  const ContainmentOptions options{args.max_degree, args.threads, args.first_witness};

  json result;
  if (args.field == "exact") {
    const ExactField field;
    const auto report = containment_check(field, scheme, args.m, args.r, options);
    result = report_common(report);
    json witnesses = json::array(), counts = json::array(), factors = json::array();
    for (const auto& w : report.witnesses) {
      const auto form = to_form(w);
      const auto f = witness_line_factors(form, a);
      witnesses.push_back(form.to_string());
      counts.push_back(f.lines.size());
      factors.push_back(factor_summary(a, f.lines, f.quotient.degree()));
    }
    result["witnesses"] = witnesses;
    result["line_factor_counts"] = counts;
    result["witness_factorizations"] = factors;
  } else {
    // Two independent primes; the verdict is reported only when they agree.
    const auto ra = containment_check(PrimeFieldA{}, scheme, args.m, args.r, options);
    const auto rb = containment_check(PrimeFieldB{}, scheme, args.m, args.r, options);
    if (ra.contained != rb.contained || ra.witness_degrees != rb.witness_degrees ||
        ra.symbolic_generator_degrees != rb.symbolic_generator_degrees) {
      throw std::runtime_error("modular runs disagree; a prime divides a relevant minor");
    }
    result = report_common(ra);
    result["field"] = ra.field + "," + rb.field;
    result["wall_time_ms"] = ra.wall_time_ms + rb.wall_time_ms;
    json counts = json::array(), factors = json::array();
    for (const auto& w : ra.witnesses) {
      const auto f = witness_line_factors(PrimeFieldA{}, w, a);
      counts.push_back(f.lines.size());
      factors.push_back(factor_summary(a, f.lines, f.quotient.degree));
    }
    result["witnesses"] = json::array();
    result["witness_count"] = ra.witnesses.size();
    result["line_factor_counts"] = counts;
    result["witness_factorizations"] = factors;
  }
  return {result};
}

// ---- render ----

Outcome cmd_render(const std::string& path, const std::string& window, const std::string& out) {
  const auto a = load_arrangement(path);
  const auto r = render_svg(a, Window::parse(window));
  write_text(out, r.svg);
  return {{{"segments", r.segments}, {"legend_infinity", r.has_line_at_infinity}, {"path", out}}};
}

// ---- compare ----

Outcome cmd_compare(const std::string& pa, const std::string& pb) {
  const auto a = load_arrangement(pa);
  const auto b = load_arrangement(pb);
  const auto wa = weak_combinatorics(a);
  const auto wb = weak_combinatorics(b);
  return {{{"a", {{"line_count", a.size()}, {"t", t_vector(wa)}}},
           {"b", {{"line_count", b.size()}, {"t", t_vector(wb)}}},
           {"weak_combinatorics_equal", wa == wb},
           {"isomorphic", incidence_isomorphic(a, b)}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Line arrangements over Q(sqrt 3): construction, freeness, containment"};
  app.require_subcommand(1);
  std::string report_path;
  app.add_option("--report", report_path, "Write the JSON report to this file instead of stdout");

  json inputs;
  std::function<Outcome()> action;

  BuildArgs build;
  auto* sub_build = app.add_subcommand("build", "Write an arrangement file");
  sub_build->add_option("family", build.family, "a12k7 or a31_3")->required()->check(CLI::IsMember({"a12k7", "a31_3"}));
  sub_build->add_option("--k", build.k, "Family parameter for a12k7");
  sub_build->add_option("--out", build.out, "Arrangement file to write")->required();
  sub_build->callback([&] {
    inputs = {{"family", build.family}, {"out", build.out}};
    if (build.k) inputs["k"] = *build.k;
    action = [&] { return cmd_build(build); };
  });

  VerifyArgs verify;
  auto* sub_verify = app.add_subcommand("verify", "Replay an addition order and check the final exponents");
  sub_verify->add_option("arrangement", verify.arrangement)->required();
  sub_verify->add_option("--table", verify.table, "Addition order file")->required();
  sub_verify->add_option("--expect", verify.expect, "Expected exponents, e.g. {1,7,11}")->required();
  std::string verify_out;
  sub_verify->add_option("--out", verify_out, "Same as --report");
  sub_verify->callback([&] {
    inputs = {{"arrangement", verify.arrangement}, {"table", verify.table}, {"expect", verify.expect}};
    if (!verify_out.empty()) report_path = verify_out;
    action = [&] { return cmd_verify(verify); };
  });

  std::string comb_path, comb_out;
  bool comb_points = false;
  auto* sub_comb = app.add_subcommand("combinatorics", "Singular locus and weak combinatorics");
  sub_comb->add_option("arrangement", comb_path)->required();
  sub_comb->add_flag("--points", comb_points, "List the singular points");
  sub_comb->add_option("--out", comb_out, "Same as --report");
  sub_comb->callback([&] {
    inputs = {{"arrangement", comb_path}, {"points", comb_points}};
    if (!comb_out.empty()) report_path = comb_out;
    action = [&] { return cmd_combinatorics(comb_path, comb_points); };
  });

  ContainmentArgs cont;
  std::string cont_out;
  auto* sub_cont = app.add_subcommand("containment", "Decide J^(m) in J^r for the singular locus");
  sub_cont->add_option("arrangement", cont.arrangement)->required();
  sub_cont->add_option("--m", cont.m, "Symbolic power")->capture_default_str();
  sub_cont->add_option("--r", cont.r, "Ordinary power")->capture_default_str();
  sub_cont->add_option("--max-degree", cont.max_degree, "Degree cap for generator searches")->capture_default_str();
  sub_cont->add_option("--threads", cont.threads, "Worker threads per graded piece batch")->capture_default_str();
  sub_cont->add_option("--field", cont.field, "exact, or modular (two primes)")
      ->capture_default_str()
      ->check(CLI::IsMember({"exact", "modular"}));
  sub_cont->add_flag("--first-witness", cont.first_witness, "Stop after the lowest failing degree");
  sub_cont->add_option("--out", cont_out, "Same as --report");
  sub_cont->callback([&] {
    inputs = {{"arrangement", cont.arrangement}, {"m", cont.m},           {"r", cont.r},
              {"max_degree", cont.max_degree},   {"threads", cont.threads}, {"field", cont.field},
              {"first_witness", cont.first_witness}};
    if (!cont_out.empty()) report_path = cont_out;
    action = [&] { return cmd_containment(cont); };
  });

  std::string render_path, render_window, render_out;
  auto* sub_render = app.add_subcommand("render", "Draw the affine chart z = 1 as SVG");
  sub_render->add_option("arrangement", render_path)->required();
  sub_render->add_option("--window", render_window, "xmin,xmax,ymin,ymax")->required();
  sub_render->add_option("--out", render_out, "SVG file to write")->required();
  sub_render->callback([&] {
    inputs = {{"arrangement", render_path}, {"window", render_window}, {"out", render_out}};
    action = [&] { return cmd_render(render_path, render_window, render_out); };
  });

  std::string cmp_a, cmp_b, cmp_out;
  auto* sub_cmp = app.add_subcommand("compare", "Weak combinatorics and lattice isomorphism of two arrangements");
  sub_cmp->add_option("a", cmp_a)->required();
  sub_cmp->add_option("b", cmp_b)->required();
  sub_cmp->add_option("--out", cmp_out, "Same as --report");
  sub_cmp->callback([&] {
    inputs = {{"a", cmp_a}, {"b", cmp_b}};
    if (!cmp_out.empty()) report_path = cmp_out;
    action = [&] { return cmd_compare(cmp_a, cmp_b); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  json report = {{"command", command}, {"inputs", inputs}};
  int exit_code = kOk;
  try {
    auto outcome = action();
    report["result"] = std::move(outcome.result);
    exit_code = outcome.exit_code;
  } catch (const DegreeCapExceeded& e) {
    report["error"] = {{"kind", "degree_cap_exceeded"}, {"message", e.what()}, {"generators_found", e.generators_found()}};
    exit_code = kError;
  } catch (const std::exception& e) {
    report["error"] = {{"kind", "error"}, {"message", e.what()}};
    exit_code = kError;
  }
  report["exit_code"] = exit_code;

  const std::string text = report.dump(2) + "\n";
  if (report_path.empty()) {
    std::cout << text;
  } else {
    try {
      write_text(report_path, text);
    } catch (const std::exception& e) {
      std::cerr << e.what() << "\n";
      return kError;
    }
  }
  if (exit_code == kError && report.contains("error")) std::cerr << "error: " << report["error"]["message"].get<std::string>() << "\n";
  return exit_code;
}
