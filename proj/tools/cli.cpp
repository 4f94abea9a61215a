#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "polarmap/chow.hpp"
#include "polarmap/differential.hpp"
#include "polarmap/elimination.hpp"
#include "polarmap/equivalence.hpp"
#include "polarmap/error.hpp"
#include "polarmap/parse.hpp"
#include "polarmap/polar_geometry.hpp"
#include "polarmap/random.hpp"

namespace polarmap::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string form;
  std::string g;
  std::string point;
  std::string line;
  std::string target;
  int degree = 0;
  bool random = false;
  std::uint64_t seed = 1;
  std::uint64_t prime = kDefaultPrime;
  int trials = 1;
  std::string output = "text";
};

/// Bad flags, unreadable files: reported with exit status 1.
class InputError : public Error {
 public:
  using Error::Error;
};

enum Flag : unsigned {
  kForm = 1u << 0,
  kG = 1u << 1,
  kPoint = 1u << 2,
  kLine = 1u << 3,
  kTarget = 1u << 4,
  kRandom = 1u << 5,  // --random, --degree, --seed, --trials
  kPrime = 1u << 6,
};

std::string read_form_text(const std::string& spec) {
  if (spec.empty() || spec.front() != '@') return spec;
  std::ifstream in(spec.substr(1));
  if (!in) throw InputError("cannot read input file " + spec.substr(1));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return strip_comments(buffer.str());
}

TernaryForm load_form(const std::string& spec, const char* flag) {
  if (spec.empty()) throw InputError(std::string("missing ") + flag);
  return parse_form(read_form_text(spec));
}

std::array<Scalar, 3> parse_triple(const std::string& text) {
  return parse_point(text).coords();
}

std::string verdict_name(bool match) { return match ? "MATCH" : "MISMATCH"; }

/// MISMATCH dominates DEGENERATE, which dominates MATCH.
std::string combine(const std::string& a, const std::string& b) {
  if (a == "MISMATCH" || b == "MISMATCH") return "MISMATCH";
  if (a == "DEGENERATE" || b == "DEGENERATE") return "DEGENERATE";
  return "MATCH";
}

Json points_json(const std::vector<ProjPoint>& points) {
  Json out = Json::array();
  for (const auto& p : points) out.push_back(p.to_string());
  return out;
}

Json matrix_json(const ScalarMatrix3& a) {
  Json out = Json::array();
  for (const auto& row : a) {
    out.push_back(row[0].to_string() + " " + row[1].to_string() + " " + row[2].to_string());
  }
  return out;
}

Json count_json(const CountReport& r) {
  Json out;
  out["kind"] = to_string(r.kind);
  out["with_multiplicity"] = r.with_multiplicity ? Json(*r.with_multiplicity) : Json(nullptr);
  if (r.common_component) {
    out["common_component"] = r.common_component->to_string();
    out["common_component_degree"] = r.common_component->degree();
  }
  out["elimination_variable"] = "x" + std::to_string(r.variable);
  out["prime"] = r.prime;
  out["distinct_over_fp"] = r.distinct_rational();
  out["positive_dimensional_over_fp"] = r.positive_dimensional;
  if (r.points.size() <= 16) out["points_over_fp"] = points_json(r.points);
  return out;
}

/// The forms a verification command runs on: `trials` random forms of the
/// requested degree, or the single form given with --form.
std::vector<TernaryForm> input_forms(const Options& o, Sampler& sampler) {
  if (!o.random) return {load_form(o.form, "--form")};
  if (o.degree < 2) throw InputError("--random needs --degree >= 2");
  if (o.trials < 1) throw InputError("--trials must be positive");
  std::vector<TernaryForm> forms;
  for (int t = 0; t < o.trials; ++t) forms.push_back(sampler.form(o.degree));
  return forms;
}

std::pair<TernaryForm, TernaryForm> input_pair(const Options& o, Sampler& sampler) {
  if (o.random) {
    if (o.degree < 2) throw InputError("--random needs --degree >= 2");
    TernaryForm f = sampler.form(o.degree);
    return {f, sampler.form(o.degree)};
  }
  return {load_form(o.form, "--form"), load_form(o.g, "--g")};
}

/// Runs `body` once per input form, collecting per-trial reports and the
/// combined verdict.
void over_forms(Json& doc, const Options& o, Sampler& sampler,
                const std::function<std::string(const TernaryForm&, Json&)>& body) {
  std::string verdict = "MATCH";
  Json trials = Json::array();
  for (const auto& f : input_forms(o, sampler)) {
    Json t;
    t["form"] = f.to_string();
    t["degree"] = f.degree();
    try {
      t["verdict"] = body(f, t);
    } catch (const DegenerateError& e) {
      t["verdict"] = "DEGENERATE";
      t["reason"] = e.what();
    }
    verdict = combine(verdict, t["verdict"].get<std::string>());
    trials.push_back(std::move(t));
  }
  doc["trials"] = std::move(trials);
  doc["verdict"] = verdict;
}

Json cmd_parse(const Options& o, Sampler&) {
  const TernaryForm f = load_form(o.form, "--form");
  Json doc;
  doc["computed"] = {{"canonical", f.to_string()},
                     {"degree", f.degree()},
                     {"terms", f.term_count()},
                     {"field", f.field().name()}};
  return doc;
}

Json cmd_hessian(const Options& o, Sampler&) {
  const TernaryForm f = load_form(o.form, "--form");
  const TernaryForm h = hessian_det(f);
  Json doc;
  doc["inputs"] = {{"form", f.to_string()}};
  doc["computed"] = {{"hessian", h.to_string()},
                     {"degree", h.is_zero() ? Json(nullptr) : Json(h.degree())},
                     {"cone", h.is_zero()}};
  if (!h.is_zero()) {
    const int claimed = 3 * (f.degree() - 2);
    doc["claim"] = {{"formula", "deg hess_f = 3(d-2)"}, {"value", claimed}};
    doc["verdict"] = verdict_name(h.degree() == claimed);
  }
  return doc;
}

Json cmd_polar_eval(const Options& o, Sampler&) {
  const TernaryForm f = load_form(o.form, "--form");
  if (o.point.empty()) throw InputError("missing --point");
  const ProjPoint p = parse_point(o.point);
  Json doc;
  doc["inputs"] = {{"form", f.to_string()}, {"point", p.to_string()}};
  doc["computed"] = {{"image", polar_eval(f, p).to_string()}};
  return doc;
}

Json cmd_fiber(const Options& o, Sampler& sampler) {
  Json doc;
  doc["claim"] = {{"formula", "polar map is finite of degree (d-1)^2"}};
  over_forms(doc, o, sampler, [&](const TernaryForm& f, Json& t) {
    const ProjPoint q = o.target.empty() ? sampler.point() : parse_point(o.target);
    const CountReport r = fiber_degree(f, q, o.prime);
    const int claimed = (f.degree() - 1) * (f.degree() - 1);
    t["target"] = q.to_string();
    t["claimed"] = claimed;
    t["count"] = count_json(r);
    if (!r.with_multiplicity) return std::string("DEGENERATE");
    return verdict_name(*r.with_multiplicity == claimed);
  });
  return doc;
}

Json cmd_classes(const Options& o, Sampler& sampler) {
  Json doc;
  doc["claim"] = {{"graph", "(d-1)^2 h1^2 + (d-1) h1 h2 + h2^2"},
                  {"ramification", "3(d-2) h1 h2^2 + 3(d-1)(d-2) h1^2 h2"}};
  over_forms(doc, o, sampler, [&](const TernaryForm& f, Json& t) {
    const int d = f.degree();
    const ChowClass graph = graph_class(d);
    const GraphSliceCounts counts = graph_slice_counts(f, sampler);
    const bool graph_ok =
        counts.n1 == graph(0, 2) && counts.n12 == graph(1, 1) && counts.n2 == graph(2, 0);
    t["graph_class"] = graph.to_string();
    t["graph_counts"] = {counts.n1, counts.n12, counts.n2};
    if (d < 3) return verdict_name(graph_ok);
    const ChowClass ram = ramification_class(d);
    const PushforwardDegrees push = pushforward_degrees(d);
    const TernaryForm h = hessian_det(f);
    const CountReport branch = branch_degree_count(f, sampler.line(), o.prime);
    t["ramification_class"] = ram.to_string();
    t["pushforwards_claimed"] = {push.hessian_degree, push.branch_degree};
    t["pushforwards_computed"] = {h.is_zero() ? Json(nullptr) : Json(h.degree()),
                                  branch.with_multiplicity ? Json(*branch.with_multiplicity)
                                                           : Json(nullptr)};
    if (h.is_zero() || !branch.with_multiplicity) return std::string("DEGENERATE");
    const bool ram_ok = h.degree() == push.hessian_degree &&
                        *branch.with_multiplicity == push.branch_degree;
    return verdict_name(graph_ok && ram_ok);
  });
  return doc;
}

Json cmd_branch(const Options& o, Sampler& sampler) {
  Json doc;
  doc["claim"] = {{"formula", "deg B_f = 3(d-1)(d-2)"}};
  over_forms(doc, o, sampler, [&](const TernaryForm& f, Json& t) {
    const auto ell = o.line.empty() ? sampler.line() : parse_triple(o.line);
    const CountReport r = branch_degree_count(f, ell, o.prime);
    const int claimed = 3 * (f.degree() - 1) * (f.degree() - 2);
    t["line"] = TernaryForm::linear(ell).to_string();
    t["claimed"] = claimed;
    t["count"] = count_json(r);
    if (!r.with_multiplicity) return std::string("DEGENERATE");
    return verdict_name(*r.with_multiplicity == claimed);
  });
  return doc;
}

Json cmd_steinerian(const Options& o, Sampler& sampler) {
  Json doc;
  doc["claim"] = {{"formula", "Gamma_f = 3(d-2)^2 h1^2 h2 + 3(d-2) h1 h2^2"}};
  over_forms(doc, o, sampler, [&](const TernaryForm& f, Json& t) {
    const int d = f.degree();
    const ChowClass gamma = steinerian_class(d);
    t["class"] = gamma.to_string();
    t["claimed"] = {gamma(1, 2), gamma(2, 1)};
    const SteinerianCounts c = steinerian_slice_counts(f, sampler);
    t["computed"] = {c.c1, c.c2};
    return verdict_name(c.c1 == gamma(1, 2) && c.c2 == gamma(2, 1));
  });
  return doc;
}

Json cmd_same_ramification(const Options& o, Sampler& sampler) {
  const auto [f, g] = input_pair(o, sampler);
  const ProportionalityResult r = same_ramification_test(f, g);
  Json doc;
  doc["inputs"] = {{"form", f.to_string()}, {"g", g.to_string()}};
  Json computed;
  if (r.verdict == ProportionalityResult::Verdict::ProportionalForms) {
    computed["result"] = "proportional";
    computed["lambda"] = r.lambda->to_string();
  } else {
    static const char* names[] = {"m01", "m02", "m12"};
    computed["result"] = "distinct";
    computed["witness_minor"] = names[r.witness_index];
    computed["witness"] = r.witness->to_string();
  }
  doc["computed"] = std::move(computed);
  return doc;
}

Json cmd_mammana(const Options& o, Sampler& sampler) {
  const TernaryForm f = o.random ? sampler.form(o.degree) : load_form(o.form, "--form");
  const MammanaSolution sol = mammana_solve(f);
  Json doc;
  doc["inputs"] = {{"form", f.to_string()}};
  Json basis = Json::array();
  for (int k = 0; k < sol.dimension(); ++k) {
    basis.push_back({{"matrix", matrix_json(sol.basis[k])},
                     {"partner", sol.partners[k].to_string()},
                     {"polar_net_contained", polar_net_contains(f, sol.partners[k])}});
  }
  const ScalarMatrix3 generic = invertible_member(sol);
  const TernaryForm partner = mammana_partner(f, generic);
  doc["computed"] = {{"dimension", sol.dimension()},
                     {"basis", std::move(basis)},
                     {"invertible_member",
                      {{"matrix", matrix_json(generic)},
                       {"partner", partner.to_string()},
                       {"polar_net_equal", polar_net_equal(f, partner)}}}};
  return doc;
}

Json cmd_nu(const Options& o, Sampler& sampler) {
  const auto [f, g] = input_pair(o, sampler);
  const int d = f.degree();
  Json doc;
  doc["inputs"] = {{"form", f.to_string()}, {"g", g.to_string()}};
  doc["claim"] = {{"formula", "nu_{f,g} has fibers of degree <= (d-1)^2 and contracts curves of "
                              "degree <= d-1"},
                  {"fiber_bound", (d - 1) * (d - 1)},
                  {"contracted_degree_bound", d - 1}};
  Json computed;
  if (!o.point.empty()) {
    const ProjPoint p = parse_point(o.point);
    computed["point"] = p.to_string();
    computed["image"] = nu_eval(f, g, p).to_string();
  }
  const ProjPoint q = o.target.empty() ? sampler.point() : parse_point(o.target);
  const CountReport r = nu_fiber_bound(f, g, q, o.prime);
  computed["target"] = q.to_string();
  computed["fiber"] = count_json(r);
  doc["computed"] = std::move(computed);
  bool ok = true;
  if (r.with_multiplicity) ok = *r.with_multiplicity <= (d - 1) * (d - 1);
  if (r.common_component) ok = r.common_component->degree() <= d - 1;
  doc["verdict"] = verdict_name(ok);
  return doc;
}

Json cmd_zfg(const Options& o, Sampler& sampler) {
  const auto [f, g] = input_pair(o, sampler);
  const ZfgSystem z = zfg_build(f, g);
  const ProductTestResult r = zfg_product_test(f, g, o.prime, o.seed);
  Json doc;
  doc["inputs"] = {{"form", f.to_string()}, {"g", g.to_string()}};
  Json test;
  test["result"] = to_string(r.verdict);
  if (r.line) test["line"] = r.line->to_string();
  if (r.minor_vector) test["minor_vector"] = r.minor_vector->to_string();
  if (!r.component_images.empty()) test["component_images"] = points_json(r.component_images);
  if (!r.witness.empty()) test["witness"] = points_json(r.witness);
  test["vertical_points_over_fp"] = points_json(r.vertical_points);
  test["prime"] = r.prime;
  test["note"] = r.note;
  doc["computed"] = {{"eq1", z.eq1.to_string()},
                     {"eq2", z.eq2.to_string()},
                     {"degenerate", z.degenerate},
                     {"product_test", std::move(test)}};
  return doc;
}

Json cmd_st_check(const Options& o, Sampler&) {
  const TernaryForm f = load_form(o.form, "--form");
  Json doc;
  doc["inputs"] = {{"form", f.to_string()}};
  Json partitions = Json::array();
  bool any = false;
  for (int v = 0; v < 3; ++v) {
    const int block[] = {v};
    const bool st = sebastiani_thom_check(f, block);
    any = any || st;
    std::string rest;
    for (int w = 0; w < 3; ++w) {
      if (w != v) rest += (rest.empty() ? "" : ",") + std::to_string(w);
    }
    partitions.push_back({{"partition", "{" + std::to_string(v) + "}|{" + rest + "}"},
                          {"sebastiani_thom", st}});
  }
  Json computed;
  computed["partitions"] = std::move(partitions);
  computed["sebastiani_thom"] = any;
  if (f.degree() >= 2) {
    const TernaryForm h = hessian_det(f);
    computed["hessian"] = h.to_string();
    if (!h.is_zero()) computed["hessian_reduced"] = squarefree_part(h).to_string();
  }
  doc["computed"] = std::move(computed);
  return doc;
}

Json cmd_type14(const Options& o, Sampler& sampler) {
  Type14Spec spec;
  if (o.random) {
    if (o.degree < 3) throw InputError("--random needs --degree >= 3");
    spec = random_type14(o.degree, sampler);
  } else {
    spec.alpha = load_form(o.form, "--form");
    spec.beta = load_form(o.g, "--g");
  }
  const TernaryForm f = type14_generate(spec);
  const int d = f.degree();
  const int mult = point_multiplicity(f, coordinate_point(0));
  Json doc;
  doc["inputs"] = {{"alpha", spec.alpha.to_string()}, {"beta", spec.beta.to_string()}};
  doc["claim"] = {{"formula", "(1:0:0) has multiplicity >= d-1"}, {"value", d - 1}};
  Json computed;
  computed["form"] = f.to_string();
  computed["multiplicity"] = mult;
  if (d >= 3 && !is_cone(f)) computed["mammana_dimension"] = mammana_solve(f).dimension();
  doc["computed"] = std::move(computed);
  doc["verdict"] = verdict_name(mult >= d - 1);
  return doc;
}

/// "2*m^3 + 6*m^2 + 1", highest degree first.
std::string univariate_string(const std::array<Scalar, 4>& coeffs, const std::string& var) {
  std::string out;
  for (int k = 3; k >= 0; --k) {
    const Scalar& c = coeffs[k];
    if (c.is_zero()) continue;
    std::string text = c.to_string();
    const bool negative = !text.empty() && text.front() == '-';
    if (negative) text.erase(0, 1);
    if (out.empty()) {
      out = negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string power = k == 0 ? "" : k == 1 ? var : var + "^" + std::to_string(k);
    if (k == 0) {
      out += text;
    } else if (text == "1") {
      out += power;
    } else {
      out += (text.find('/') != std::string::npos ? "(" + text + ")" : text) + "*" + power;
    }
  }
  return out.empty() ? "0" : out;
}

Json cmd_hesse(const Options& o, Sampler& sampler) {
  if (!o.random && o.target.empty()) throw InputError("missing --target (or --random)");
  Json doc;
  doc["claim"] = {{"formula", "hess(f_m) is f_mu' with mu' = -(1+2m^3)/(6m^2); the map is 3:1 "
                              "along the pencil"},
                  {"value", 3},
                  {"scope", "Hesse pencil x^3+y^3+z^3+6m*xyz only"}};
  std::string verdict = "MATCH";
  Json trials = Json::array();
  const int n = o.random ? o.trials : 1;
  for (int t = 0; t < n; ++t) {
    const Scalar mu = o.random ? sampler.coefficient() / sampler.nonzero_coefficient()
                               : Scalar::parse(o.target);
    const HessePreimageCount c = hesse_preimage_count(mu);
    Json tr;
    tr["target"] = mu.to_string();
    tr["cubic"] = univariate_string(c.cubic, "m");
    tr["discriminant"] = c.discriminant.to_string();
    tr["with_multiplicity"] = c.with_multiplicity;
    tr["distinct"] = c.distinct;
    Json roots = Json::array();
    bool consistent = true;
    for (const auto& [m, mult] : c.rational_roots) {
      const HesseParam p = hesse_hessian_param(m);
      const bool maps = p.mu_prime && *p.mu_prime == mu;
      consistent = consistent && maps;
      roots.push_back({{"m", m.to_string()}, {"multiplicity", mult}, {"maps_to_target", maps}});
    }
    tr["rational_roots"] = std::move(roots);
    tr["verdict"] = verdict_name(c.with_multiplicity == 3 && consistent);
    verdict = combine(verdict, tr["verdict"].get<std::string>());
    trials.push_back(std::move(tr));
  }
  doc["trials"] = std::move(trials);
  doc["verdict"] = verdict;
  return doc;
}

void render_text(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto is_flat = [](const Json& v) {
    return std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
  };
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_object()) {
      out << pad << it.key() << ":\n";
      render_text(v, out, indent + 2);
    } else if (v.is_array() && is_flat(v)) {
      out << pad << it.key() << ": [";
      for (std::size_t k = 0; k < v.size(); ++k) out << (k ? ", " : "") << scalar(v[k]);
      out << "]\n";
    } else if (v.is_array()) {
      out << pad << it.key() << ":\n";
      for (const auto& e : v) {
        if (e.is_object()) {
          out << pad << "  -\n";
          render_text(e, out, indent + 4);
        } else {
          out << pad << "  - " << (e.is_array() ? e.dump() : scalar(e)) << "\n";
        }
      }
    } else {
      out << pad << it.key() << ": " << scalar(v) << "\n";
    }
  }
}

struct Command {
  const char* name;
  const char* help;
  unsigned flags;
  Json (*handler)(const Options&, Sampler&);
};

const Command kCommands[] = {
    {"parse", "Parse a form and print it canonically", kForm, cmd_parse},
    {"hessian", "Hessian determinant and cone test", kForm, cmd_hessian},
    {"polar-eval", "Evaluate the polar map at a point", kForm | kPoint, cmd_polar_eval},
    {"fiber", "Degree of a fiber of the polar map", kForm | kTarget | kRandom | kPrime, cmd_fiber},
    {"classes", "Graph and ramification classes against slice counts", kForm | kRandom | kPrime,
     cmd_classes},
    {"branch", "Degree of the branch curve", kForm | kLine | kRandom | kPrime, cmd_branch},
    {"steinerian", "Steinerian class against slice counts", kForm | kRandom, cmd_steinerian},
    {"same-ramification", "Forms with the same ramification are proportional (d >= 4)",
     kForm | kG | kRandom, cmd_same_ramification},
    {"mammana", "Matrices A with A*M_f symmetric and their partner forms", kForm | kRandom,
     cmd_mammana},
    {"nu", "The map nu_{f,g} and its fibers", kForm | kG | kPoint | kTarget | kRandom | kPrime,
     cmd_nu},
    {"zfg", "The surface Z_{f,g} and the product test", kForm | kG | kRandom | kPrime, cmd_zfg},
    {"st-check", "Sebastiani-Thom splitting for each coordinate partition", kForm, cmd_st_check},
    {"type14", "Generate a type (14) form x0*alpha' + beta", kForm | kG | kRandom, cmd_type14},
    {"hesse", "Hessian map along the Hesse pencil", kTarget | kRandom, cmd_hesse},
};

std::string join_args(const std::vector<std::string>& args) {
  std::string out;
  for (const auto& a : args) out += (out.empty() ? "" : " ") + a;
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polar maps and Hessians of plane curves", "polarmap"};
  app.require_subcommand(1);
  Options o;
  std::map<CLI::App*, const Command*> by_app;
  for (const Command& c : kCommands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    if (c.flags & kForm) sub->add_option("-f,--form", o.form, "Form, inline or @file");
    if (c.flags & kG) sub->add_option("--g", o.g, "Second form, inline or @file");
    if (c.flags & kPoint) sub->add_option("--point", o.point, "Point a:b:c");
    if (c.flags & kLine) sub->add_option("--line", o.line, "Line coefficients a:b:c");
    if (c.flags & kTarget) sub->add_option("--target", o.target, "Target point or parameter");
    if (c.flags & kRandom) {
      sub->add_flag("--random", o.random, "Use random forms");
      sub->add_option("--trials", o.trials, "Number of random trials");
    }
    if (c.flags & (kRandom | kTarget | kLine)) {
      sub->add_option("--seed", o.seed, "Seed for random choices");
    }
    if (c.flags & kRandom) sub->add_option("--degree", o.degree, "Degree of random forms");
    if (c.flags & kPrime) sub->add_option("--prime", o.prime, "Prime for enumeration over F_p");
    sub->add_option("--output", o.output, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
    by_app[sub] = &c;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }
  const Command* command = by_app.at(app.get_subcommands().front());

  Json doc;
  doc["command"] = join_args(args);
  const auto start = std::chrono::steady_clock::now();
  try {
    Field::prime(o.prime);
    Sampler sampler(o.seed);
    Json body = command->handler(o, sampler);
    doc["config"] = {{"seed", o.seed}, {"prime", o.prime}, {"trials", o.trials}};
    for (auto it = body.begin(); it != body.end(); ++it) doc[it.key()] = it.value();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    // Parse errors, refused domains and degeneracies of single computations.
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (o.output == "structured") {
    out << doc.dump(2) << "\n";
  } else {
    render_text(doc, out, 0);
    std::ostringstream timing;
    timing.precision(3);
    timing << std::fixed << ms;
    out << "timing_ms: " << timing.str() << "\n";
  }
  if (doc.contains("verdict") && doc["verdict"] != "MATCH") return kExitMismatch;
  return kExitOk;
}

}  // namespace polarmap::cli
