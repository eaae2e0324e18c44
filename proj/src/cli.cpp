#include "mhpp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "mhpp/errors.hpp"
#include "mhpp/generators.hpp"
#include "mhpp/json_io.hpp"
#include "mhpp/parallel.hpp"
#include "mhpp/stability.hpp"

namespace mhpp::cli {

namespace {

using json_io::Json;

struct Options {
  std::string verb;
  std::string target;
  std::string input;
  bool witness = false;
  bool strict = false;
  bool force = false;
  bool schema = false;
  bool bases = false;
  std::uint64_t seed = 0;
  std::string lambda_samples;
  std::string mu_samples;
  std::size_t term_cap = 0;
  std::size_t threads = 1;
  std::string q;
  std::string threshold;
  long n = 3;
  std::size_t samples = 20;
  std::size_t vertices = 4;
  std::size_t edges = 4;
  std::size_t d = 3;
};

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::proves_stable: return kExitTrue;
    case Verdict::proves_unstable: return kExitFalse;
    case Verdict::inconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (!item.empty()) out.push_back(parse_rational(item));
  }
  return out;
}

class Runner {
 public:
  Runner(const Options& o, std::istream& in, std::ostream& out) : o_(o), in_(in), out_(out) {}

  int dispatch() {
    if (o_.verb == "check") return check();
    if (o_.verb == "trop") return emit(json_io::function_to_json(tropicalize(polynomial())), kExitTrue);
    if (o_.verb == "construct") return construct();
    if (o_.verb == "certify") return certify();
    if (o_.verb == "gen") return gen();
    if (o_.verb == "max") {
      const MaxResult m = brute_max(function());
      return emit(Json{{"value", json_io::rational_to_json(m.value)},
                       {"argmax", json_io::point_set_to_json(m.argmax)}},
                  kExitTrue);
    }
    throw CLI::ValidationError("unknown verb " + o_.verb);
  }

 private:
  const Json& input() {
    if (!loaded_) {
      std::string text;
      if (o_.input.empty() || o_.input == "-") {
        std::stringstream ss;
        ss << in_.rdbuf();
        text = ss.str();
      } else {
        std::ifstream f(o_.input);
        if (!f) throw InputError("cannot read " + o_.input);
        std::stringstream ss;
        ss << f.rdbuf();
        text = ss.str();
      }
      doc_ = json_io::parse(text);
      loaded_ = true;
    }
    return doc_;
  }

  PointSet point_set() { return json_io::point_set_from_json(input()); }
  DiscreteFunction function() { return json_io::function_from_json(input()); }
  PuiseuxPolynomial polynomial() { return json_io::polynomial_from_json(input()); }

  int emit(const Json& j, int code) {
    out_ << j.dump(2) << '\n';
    return code;
  }

  int report(const CheckReport& r) {
    return emit(json_io::report_to_json(r, o_.witness), r.verdict ? kExitTrue : kExitFalse);
  }

  int certificate(const StabilityCertificate& c) {
    return emit(json_io::certificate_to_json(c), verdict_code(c.verdict));
  }

  std::vector<Rational> lambdas() const { return parse_list(o_.lambda_samples); }

  int check() {
    const std::string& t = o_.target;
    if (t == "jump-system") return report(is_jump_system(point_set()));
    if (t == "j2") return report(check_J2(point_set()));
    if (t == "j-natural") return report(check_J_natural(point_set()));
    if (t == "delta-matroid") return report(is_delta_matroid(point_set()));
    if (t == "matroid") return report(is_matroid_basis_set(point_set()));
    if (t == "m") return report(check_M(function()));
    if (t == "m-loc") return report(check_M_loc(function()));
    if (t == "m-natural") return report(check_M_natural(function()));
    if (t == "m-natural-literal") return report(check_M_natural_literal(function()));
    if (t == "hive") return report(is_hive(function(), o_.strict));
    if (t == "trop-hive") return report(trop_of_hpp_is_hive_check(polynomial()));
    throw CLI::ValidationError("unknown check target " + t);
  }

  Json rhombus_json(const RhombusQuotientReport& r) {
    Json j = json_io::report_to_json(r.report, o_.witness);
    if (r.min_quotient) j["min_quotient"] = json_io::rational_to_json(*r.min_quotient);
    if (r.min_rhombus) {
      j["min_rhombus"] = Json{{"alpha", json_io::point_to_json(r.min_rhombus->alpha)},
                              {"beta", json_io::point_to_json(r.min_rhombus->beta)},
                              {"gamma", json_io::point_to_json(r.min_rhombus->gamma)},
                              {"delta", json_io::point_to_json(r.min_rhombus->delta)}};
    }
    return j;
  }

  int construct() {
    const std::string& t = o_.target;
    if (t == "onevar") return emit(json_io::polynomial_to_json(onevar_hpp_construct(function())), kExitTrue);
    if (t == "strict-hive") {
      const auto mus = parse_list(o_.mu_samples);
      const StrictHiveResult r = strict_hive_to_puiseux_hpp(function(), mus);
      return emit(Json{{"polynomial", json_io::polynomial_to_json(r.polynomial)},
                       {"certificate", json_io::certificate_to_json(r.certificate)}},
                  verdict_code(r.certificate.verdict));
    }
    if (t == "quant-b") {
      if (o_.q.empty()) throw CLI::ValidationError("construct quant-b requires --Q");
      const auto lams = lambdas();
      const QuantBResult r = quant_b_construct(function(), parse_rational(o_.q), o_.force, lams);
      int code = verdict_code(r.harness.verdict);
      if (code == kExitTrue && !r.rhombus.report.verdict) code = kExitInconclusive;
      return emit(Json{{"polynomial", json_io::polynomial_to_json(r.polynomial)},
                       {"rhombus", rhombus_json(r.rhombus)},
                       {"certificate", json_io::certificate_to_json(r.harness)}},
                  code);
    }
    throw CLI::ValidationError("unknown construct target " + t);
  }

  std::vector<std::vector<Rational>> sr_samples(std::size_t n) {
    std::vector<std::vector<Rational>> out;
    const Json& j = input();
    if (j.is_object() && j.contains("samples")) {
      for (const Json& s : j.at("samples")) {
        std::vector<Rational> x;
        for (const Json& v : s) x.push_back(json_io::rational_from_json(v));
        out.push_back(std::move(x));
      }
      return out;
    }
    out.emplace_back(n, Rational(0));
    std::mt19937_64 rng(o_.seed);
    std::uniform_int_distribution<long> num(-12, 12);
    for (std::size_t k = 1; k < o_.samples; ++k) {
      std::vector<Rational> x;
      for (std::size_t i = 0; i < n; ++i) x.push_back(ratio(num(rng), 4));
      out.push_back(std::move(x));
    }
    return out;
  }

  int certify() {
    const std::string& t = o_.target;
    if (t == "newton") {
      const auto p = json_io::rational_univariate_from_json(input());
      const Json& j = input();
      const long n = (j.is_object() && j.contains("n")) ? j.at("n").get<long>() : p.degree();
      return report(newton_check(p, n));
    }
    if (t == "val-newton") {
      const Json& j = input();
      if (j.is_object() && j.contains("coeffs")) {
        const auto p = json_io::puiseux_univariate_from_json(j);
        std::vector<std::pair<LatticePoint, Rational>> entries;
        for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
          if (!p.coeffs()[k].is_zero()) {
            entries.emplace_back(LatticePoint{static_cast<int>(k)}, p.coeffs()[k].valuation().value());
          }
        }
        return report(val_newton_check(DiscreteFunction(entries), o_.strict));
      }
      return report(val_newton_check(function(), o_.strict));
    }
    if (t == "hutchinson") {
      const auto p = json_io::puiseux_univariate_from_json(input());
      bool constant = true;
      for (const auto& c : p.coeffs()) constant = constant && c.as_rational().has_value();
      return certificate(constant ? hutchinson_check(to_rational(p), o_.strict) : hutchinson_check(p, o_.strict));
    }
    if (t == "sturm") {
      const auto p = json_io::rational_univariate_from_json(input());
      const SturmResult r = sturm_real_rooted(p);
      StabilityCertificate c;
      c.kind = CertificateKind::sturm;
      c.detail.push_back({"real roots with multiplicity vs degree", PuiseuxNumber(r.real_count),
                          PuiseuxNumber(r.degree), false, r.real_count >= r.degree});
      c.verdict = r.all_real ? Verdict::proves_stable : Verdict::proves_unstable;
      c.notes.push_back("distinct real roots: " + std::to_string(r.distinct_real_count));
      if (r.multiple_nonzero_root) c.notes.push_back("has a multiple nonzero root");
      return certificate(c);
    }
    if (t == "sr") {
      const PuiseuxPolynomial p = polynomial();
      const auto samples = sr_samples(p.nvars());
      const CheckReport r = sr_falsifier(p, samples);
      Json j = json_io::report_to_json(r, o_.witness);
      j["stability"] = r.verdict ? "inconclusive" : "proves-unstable";
      return emit(j, r.verdict ? kExitInconclusive : kExitFalse);
    }
    if (t == "lemma-basic") {
      const auto lams = lambdas();
      return certificate(lemma_basic_harness(polynomial(), lams));
    }
    if (t == "rhombus") {
      std::optional<Rational> th;
      if (!o_.threshold.empty()) th = parse_rational(o_.threshold);
      const RhombusQuotientReport r = rhombus_quotient_check(polynomial(), th);
      return emit(rhombus_json(r), r.report.verdict ? kExitTrue : kExitFalse);
    }
    throw CLI::ValidationError("unknown certify target " + t);
  }

  int gen() {
    const std::string& t = o_.target;
    if (t == "graph-poly") {
      return emit(json_io::polynomial_to_json(degree_sequence_poly(json_io::graph_from_json(input()))), kExitTrue);
    }
    if (t == "matching") {
      return emit(json_io::polynomial_to_json(matching_poly(json_io::graph_from_json(input()))), kExitTrue);
    }
    if (t == "psd-det") {
      const Json& j = input();
      const Json& mats = j.is_object() ? j.at("matrices") : j;
      std::vector<Matrix<PuiseuxNumber>> ms;
      for (const Json& m : mats) ms.push_back(json_io::puiseux_matrix_from_json(m));
      if (j.is_object() && j.contains("weights")) {
        const Json& w = j.at("weights");
        if (w.size() != ms.size()) throw InputError("psd-det: one weight per matrix expected");
        for (std::size_t i = 0; i < ms.size(); ++i) {
          const PuiseuxNumber s = PuiseuxNumber::t_power(json_io::rational_from_json(w[i]));
          ms[i] = ms[i].map([&](const PuiseuxNumber& x) { return x * s; });
        }
      }
      return emit(json_io::polynomial_to_json(psd_det_poly(ms)), kExitTrue);
    }
    if (t == "basis-poly") {
      const Json& j = input();
      const Json& m = j.is_object() ? j.at("matrix") : j;
      return emit(json_io::polynomial_to_json(basis_generating_poly(json_io::puiseux_matrix_from_json(m))), kExitTrue);
    }
    if (t == "skew") {
      const Json& j = input();
      const Json& m = j.is_object() ? j.at("matrix") : j;
      return emit(json_io::function_to_json(skew_minors_function(json_io::puiseux_matrix_from_json(m))), kExitTrue);
    }
    if (t == "fano") {
      if (o_.bases) return emit(json_io::point_set_to_json(fano_bases()), kExitTrue);
      return emit(json_io::function_to_json(fano_distance()), kExitTrue);
    }
    if (t == "random-hive") {
      const auto h = o_.strict ? random_strict_hive(o_.n, o_.seed) : random_hive(o_.n, o_.seed);
      return emit(json_io::function_to_json(h), kExitTrue);
    }
    if (t == "random-graph") {
      return emit(json_io::graph_to_json(random_graph(o_.vertices, o_.edges, o_.seed)), kExitTrue);
    }
    if (t == "random-psd") return emit(json_io::matrix_to_json(random_psd(o_.d, o_.seed)), kExitTrue);
    throw CLI::ValidationError("unknown gen target " + t);
  }

  const Options& o_;
  std::istream& in_;
  std::ostream& out_;
  Json doc_;
  bool loaded_ = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact checkers for jump systems, M-concave functions and stable polynomials", "mhpp"};
  app.fallthrough();
  app.require_subcommand(0, 1);

  app.add_option("-i,--input", o.input, "Input JSON file (default: stdin)");
  app.add_flag("--witness", o.witness, "Include the witness of a failed check");
  app.add_flag("--strict", o.strict, "Strict variant (hive, val-newton, hutchinson, random-hive)");
  app.add_flag("--force", o.force, "quant-b: allow Q below 2(n-1)");
  app.add_flag("--schema", o.schema, "Print the JSON schemas and exit");
  app.add_flag("--bases", o.bases, "gen fano: emit the basis set instead of the distance function");
  app.add_option("--seed", o.seed, "Random seed");
  app.add_option("--lambda-samples", o.lambda_samples, "Comma-separated positive rationals");
  app.add_option("--mu-samples", o.mu_samples, "strict-hive: comma-separated exponents mu for lambda = t^mu");
  app.add_option("--term-cap", o.term_cap, "Maximum number of terms per polynomial");
  app.add_option("--threads", o.threads, "Worker threads for pair enumeration")->check(CLI::PositiveNumber);
  app.add_option("--Q", o.q, "quant-b: base Q");
  app.add_option("--threshold", o.threshold, "certify rhombus: fixed lower bound");
  app.add_option("--n", o.n, "random-hive: triangle level");
  app.add_option("--samples", o.samples, "sr: number of sample points");
  app.add_option("--vertices", o.vertices, "random-graph: vertex count");
  app.add_option("--edges", o.edges, "random-graph: edge count");
  app.add_option("--d", o.d, "random-psd: size");

  auto verb = [&](const char* name, const char* help, std::vector<std::string> targets) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->parse_complete_callback([&o, sub] { o.verb = sub->get_name(); });
    if (!targets.empty()) {
      sub->add_option("target", o.target)->required()->check(CLI::IsMember(targets));
    }
  };
  verb("check", "Axiom and concavity checks",
       {"jump-system", "j2", "j-natural", "delta-matroid", "matroid", "m", "m-loc", "m-natural",
        "m-natural-literal", "hive", "trop-hive"});
  verb("trop", "Tropicalize a polynomial", {});
  verb("construct", "Build polynomials from functions", {"onevar", "strict-hive", "quant-b"});
  verb("certify", "Stability certificates",
       {"newton", "val-newton", "hutchinson", "sturm", "sr", "lemma-basic", "rhombus"});
  verb("gen", "Example generators",
       {"graph-poly", "matching", "psd-det", "basis-poly", "skew", "fano", "random-hive", "random-graph",
        "random-psd"});
  verb("max", "Maximization", {"brute"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  if (o.schema) {
    out << json_io::schemas().dump(2) << '\n';
    return kExitTrue;
  }
  if (o.verb.empty()) {
    err << app.help();
    return kExitUsage;
  }

  const std::size_t old_cap = term_cap();
  const std::size_t old_threads = thread_count();
  if (o.term_cap > 0) set_term_cap(o.term_cap);
  set_thread_count(o.threads);
  int code = 0;
  try {
    Runner runner(o, in, out);
    code = runner.dispatch();
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    code = kExitUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    code = kExitBadInput;
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << '\n';
    code = kExitGuard;
  } catch (const nlohmann::json::exception& e) {
    err << "error: json: " << e.what() << '\n';
    code = kExitBadInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    code = kExitGuard;
  }
  set_term_cap(old_cap);
  set_thread_count(old_threads);
  return code;
}

}  // namespace mhpp::cli
