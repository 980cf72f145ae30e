#include "heisverma/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "heisverma/branching.hpp"
#include "heisverma/realize.hpp"
#include "heisverma/serialize.hpp"
#include "heisverma/verma.hpp"

namespace heisverma {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  Json json;
  std::ostringstream text;
  int code = kExitMatch;
};

Json lambda_json(const RunConfig& cfg) {
  if (cfg.generic) return "generic";
  return Json::array({cfg.l1.str(), cfg.l2.str()});
}

Json header(const RunConfig& cfg) {
  return {{"schema_version", kSchemaVersion}, {"command", cfg.command}, {"n", cfg.n}, {"r", cfg.r},
          {"lambda", lambda_json(cfg)}};
}

std::string lambda_text(const RunConfig& cfg) {
  return cfg.generic ? "generic" : "(" + cfg.l1.str() + ", " + cfg.l2.str() + ")";
}

void need_rational(const RunConfig& cfg) {
  if (cfg.generic) throw UsageError(cfg.command + " needs a rational lambda, e.g. --lambda 0,0");
}

void need_split(const RunConfig& cfg) {
  if (cfg.n < 3 || cfg.r >= cfg.n || cfg.n - cfg.r <= 2)
    throw UsageError("n - r must exceed 2 (got n = " + std::to_string(cfg.n) + ", r = " + std::to_string(cfg.r) + ")");
}

Character numeric_character(const RunConfig& cfg) { return {cfg.n, ParamScalar(cfg.l1), ParamScalar(cfg.l2)}; }

// --------------------------------------------------------------- realize

void cmd_realize(const RunConfig& cfg, Outcome& o, std::ostream& err) {
  if (cfg.n == 0) throw UsageError("n must be positive");
  if (cfg.n < 3) err << "warning: n = " << cfg.n << "; classify and verify need n >= 3 (n - r > 2)\n";
  const Realization real =
      cfg.generic ? Realization::generic(cfg.n) : Realization(cfg.n, ParamScalar(cfg.l1), ParamScalar(cfg.l2));
  o.json = header(cfg);
  o.json["parameter"] = "closed-form parameter (lambda enters the formulas literally)";
  Json ops = Json::array();
  const auto& basis = canonical_basis(cfg.n);
  o.text << "realization n = " << cfg.n << ", parameter " << lambda_text(cfg) << "\n";
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const std::string name = basis[k].name();
    ops.push_back({{"element", to_json(basis[k])},
                   {"name", name},
                   {"pi_text", real.pi(k).str()},
                   {"pi_hat_text", real.pi_hat(k).str()},
                   {"pi", to_json(real.pi(k))},
                   {"pi_hat", to_json(real.pi_hat(k))}});
    o.text << "pi(" << name << ") = " << real.pi(k).str() << "\n";
    o.text << "pi_hat(" << name << ") = " << real.pi_hat(k).str() << "\n";
  }
  o.json["operators"] = ops;
}

// ----------------------------------------------------------------- solve

void cmd_solve(const RunConfig& cfg, Outcome& o) {
  need_rational(cfg);
  if (cfg.r >= cfg.n) throw UsageError("solve needs r < n");
  struct Slice {
    unsigned m;
    long t;
    std::vector<PolyVector> basis;
  };
  std::vector<Slice> slices;
  for (unsigned m = 0; m <= cfg.m_max; ++m)
    for (long t : admissible_t(cfg.n, cfg.r, m))
      if (!cfg.t || *cfg.t == t) slices.push_back({m, t, {}});
  parallel_for(slices.size(), [&](std::size_t i) {
    slices[i].basis = brute_force_solve(cfg.l1, cfg.l2, cfg.n, cfg.r, slices[i].m, slices[i].t);
  });

  o.json = header(cfg);
  o.json["m_max"] = cfg.m_max;
  if (cfg.t) o.json["t"] = *cfg.t;
  o.json["slices_checked"] = slices.size();
  Json out = Json::array();
  o.text << "singular vectors, n = " << cfg.n << ", r = " << cfg.r << ", lambda = " << lambda_text(cfg) << "\n";
  for (const auto& s : slices) {
    if (s.basis.empty()) continue;
    Json basis = Json::array();
    o.text << "m = " << s.m << ", t = " << s.t << ": dim " << s.basis.size() << "\n";
    for (const auto& p : s.basis) {
      const PbwVector v = poly_to_pbw(p);
      basis.push_back({{"polynomial", to_json(p)}, {"text", p.str()}, {"pbw", to_json(v)}, {"pbw_text", v.str()}});
      o.text << "  " << p.str() << "\n    <-> " << v.str() << "\n";
    }
    out.push_back({{"m", s.m}, {"t", s.t}, {"dim", s.basis.size()}, {"basis", basis}});
  }
  o.json["slices"] = out;
}

// -------------------------------------------------------------- classify

void cmd_classify(const RunConfig& cfg, Outcome& o) {
  need_split(cfg);
  need_rational(cfg);
  const auto comps = enumerate_components(cfg.l1, cfg.l2, cfg.n, cfg.r, cfg.m_max);
  o.json = header(cfg);
  o.json["m_max"] = cfg.m_max;
  Json list = Json::array();
  o.text << "components, n = " << cfg.n << ", r = " << cfg.r << ", lambda = " << lambda_text(cfg)
         << ", m <= " << cfg.m_max << "\n";
  for (const auto& c : comps) {
    Json j = to_json(c);
    j["dim"] = component_dimension(c);
    list.push_back(j);
    o.text << c.label() << " " << to_string(c.case_tag) << " m = " << c.m() << " t = " << c.t()
           << " dim = " << component_dimension(c) << "\n";
  }
  o.json["components"] = list;
}

// ---------------------------------------------------------------- verify

struct ExampleCheck {
  std::string name;
  PbwVector vector;
  unsigned r = 0;
};

// Example vectors whose hypotheses hold for this configuration.
std::vector<ExampleCheck> applicable_examples(const RunConfig& cfg, const Character& lambda) {
  std::vector<ExampleCheck> out;
  if (cfg.r == 0) {
    if (cfg.generic) return out;
    // the product vector of length a needs l1 + l2 + n = a - 1
    const Rational a = cfg.l1 + cfg.l2 + Rational(long(cfg.n)) + Rational(1);
    if (a.is_integer() && a.sign() > 0 && 2 * a.to_long() <= long(cfg.m_max))
      out.push_back({"r0-product-a" + a.str(), conjecture_vector(lambda, unsigned(a.to_long())), 0});
    return out;
  }
  for (unsigned which = 1; which <= 4; ++which)
    for (unsigned a = 0; a + (which > 2 ? 2 : 0) <= cfg.m_max; ++a)
      out.push_back({"r1-family" + std::to_string(which) + "-a" + std::to_string(a), example_r1(which, lambda, a),
                     cfg.r});
  return out;
}

void cmd_verify(const RunConfig& cfg, Outcome& o) {
  need_split(cfg);
  o.json = header(cfg);
  o.json["m_max"] = cfg.m_max;
  Json mismatches = Json::array();
  o.text << "verify n = " << cfg.n << ", r = " << cfg.r << ", lambda = " << lambda_text(cfg) << ", m <= " << cfg.m_max
         << "\n";

  const CertificationReport cert = certify_homomorphism(Realization::generic(cfg.n));
  o.json["homomorphism"] = {{"pairs", cert.pairs}, {"ok", cert.ok()}, {"failures", cert.failures}};
  o.text << "homomorphism: " << cert.pairs << " pairs, " << (cert.ok() ? "ok" : "FAILED") << "\n";
  for (const auto& f : cert.failures) mismatches.push_back({{"check", "homomorphism"}, {"detail", f}});

  const Character lambda = cfg.generic ? Character::generic(cfg.n) : numeric_character(cfg);
  std::vector<SliceReport> slices;
  if (!cfg.generic) {
    slices = cross_validate(cfg.l1, cfg.l2, cfg.n, cfg.r, cfg.m_max);
    Json js = Json::array();
    std::size_t matched = 0;
    for (const auto& s : slices) {
      Json comps = Json::array();
      for (const auto& c : s.components) comps.push_back(c.label());
      Json basis = Json::array();
      for (const auto& p : s.basis) basis.push_back({{"polynomial", to_json(p)}, {"text", p.str()}});
      Json j = {{"m", s.m},
                {"t", s.t},
                {"oracle_dim", s.oracle_dim},
                {"predicted_dim", s.predicted_dim},
                {"formula_dim", s.formula_dim},
                {"span_match", s.span_match},
                {"recurrences_ok", s.recurrences_ok},
                {"match", s.match()},
                {"components", comps},
                {"basis", basis}};
      if (s.match()) ++matched;
      else mismatches.push_back({{"check", "slice"}, {"m", s.m}, {"t", s.t}, {"oracle_dim", s.oracle_dim},
                                 {"predicted_dim", s.predicted_dim}, {"formula_dim", s.formula_dim}});
      js.push_back(j);
    }
    o.json["slices"] = js;
    o.text << "slices: " << matched << "/" << slices.size() << " match\n";
    for (const auto& s : slices)
      if (s.oracle_dim > 0 || !s.match())
        o.text << "  m = " << s.m << " t = " << s.t << " oracle " << s.oracle_dim << " predicted " << s.predicted_dim
               << (s.match() ? "" : "  MISMATCH") << "\n";
  }

  Json ex = Json::array();
  const VermaModule M(lambda);
  for (const auto& e : applicable_examples(cfg, lambda)) {
    const bool singular = M.is_singular(e.vector, e.r);
    const PolyVector p = M.to_polynomial(e.vector);
    Json j = {{"name", e.name},        {"pbw", to_json(e.vector)},   {"pbw_text", e.vector.str()},
              {"polynomial", to_json(p)}, {"polynomial_text", p.str()}, {"singular", singular}};
    bool ok = singular;
    if (!cfg.generic) {
      const auto parts = euler_bidegree(p, cfg.r);
      bool in_span = false;
      if (parts.size() == 1) {
        const auto& [m, t, comp] = parts.front();
        std::vector<PolyVector> basis;
        bool found = false;
        for (const auto& s : slices)
          if (s.m == m && s.t == t) {
            basis = s.basis;
            found = true;
          }
        if (!found) basis = brute_force_solve(cfg.l1, cfg.l2, cfg.n, cfg.r, unsigned(m), t);
        const std::size_t before = span_rank(basis);
        basis.push_back(p);
        in_span = span_rank(basis) == before;
        j["m"] = m;
        j["t"] = t;
      }
      j["in_oracle_span"] = in_span;
      ok = ok && in_span;
    }
    if (!ok) mismatches.push_back({{"check", "example"}, {"name", e.name}});
    o.text << "example " << e.name << ": " << (ok ? "ok" : "FAILED") << "\n  " << e.vector.str() << "\n  <-> "
           << p.str() << "\n";
    ex.push_back(j);
  }
  o.json["examples"] = ex;
  o.json["mismatches"] = mismatches;
  o.json["status"] = mismatches.empty() ? "match" : "mismatch";
  o.text << "status: " << (mismatches.empty() ? "match" : "mismatch") << "\n";
  if (!mismatches.empty()) o.code = kExitMismatch;
}

// -------------------------------------------------------------- examples

void cmd_examples(const RunConfig& cfg, Outcome& o) {
  if (cfg.n < 2) throw UsageError("examples needs n >= 2");
  o.json = {{"schema_version", kSchemaVersion}, {"command", cfg.command}, {"n", cfg.n}, {"a_max", cfg.a}};
  Json list = Json::array();
  bool all = true;
  for (const auto& e : example_catalog(cfg.n, cfg.n + 1, cfg.a)) {
    const VermaModule M(e.lambda);
    const bool singular = M.is_singular(e.vector, e.r);
    const bool cross = M.crosscheck_phi(e.vector);
    const PolyVector p = M.to_polynomial(e.vector);
    all = all && singular && cross;
    list.push_back({{"name", e.name},
                    {"n", e.n},
                    {"r", e.r},
                    {"lambda", Json::array({e.lambda.l1.str(), e.lambda.l2.str()})},
                    {"pbw", to_json(e.vector)},
                    {"pbw_text", e.vector.str()},
                    {"polynomial", to_json(p)},
                    {"polynomial_text", p.str()},
                    {"singular", singular},
                    {"crosscheck", cross}});
    o.text << e.name << " (n = " << e.n << ", r = " << e.r << ", lambda = (" << e.lambda.l1.str() << ", "
           << e.lambda.l2.str() << ")): " << (singular && cross ? "singular" : "FAILED") << "\n  " << e.vector.str()
           << "\n  <-> " << p.str() << "\n";
  }
  o.json["examples"] = list;
  o.json["status"] = all ? "match" : "mismatch";
  if (!all) o.code = kExitMismatch;
}

// ------------------------------------------------------------ conjecture

void cmd_conjecture(const RunConfig& cfg, Outcome& o) {
  if (cfg.r != 0) throw UsageError("conjecture is an r = 0 statement");
  if (cfg.a == 0) throw UsageError("a must be positive");
  if (cfg.n < 1) throw UsageError("n must be positive");
  RunConfig c = cfg;
  if (c.generic) {
    c.generic = false;
    c.l1 = Rational(0);
    c.l2 = Rational(long(c.a) - 1 - long(c.n));
  }
  if (c.l1 + c.l2 + Rational(long(c.n)) != Rational(long(c.a) - 1))
    throw UsageError("conjecture needs lambda1 + lambda2 + n = a - 1");
  const ConjectureVerdict v = factorization_check(c.l1, c.l2, c.a, c.n);
  o.json = header(c);
  o.json["a"] = c.a;
  o.json["verdict"] = v.verdict;
  o.json["pbw_verdict"] = v.pbw_verdict;
  o.json["pbw"] = to_json(v.vector);
  o.json["pbw_text"] = v.vector.str();
  o.json["polynomial"] = to_json(v.polynomial);
  o.json["polynomial_text"] = v.polynomial.str();
  o.text << "conjecture a = " << c.a << ", n = " << c.n << ", lambda = " << lambda_text(c) << "\n";
  o.text << "verdict: " << (v.verdict ? "true" : "false") << " (module side: " << (v.pbw_verdict ? "true" : "false")
         << ")\n";
  o.text << "vector: " << v.vector.str() << "\n";
  o.text << "polynomial: " << v.polynomial.str() << "\n";
}

}  // namespace

void parse_lambda(const std::string& text, RunConfig& cfg) {
  if (text == "generic") {
    cfg.generic = true;
    return;
  }
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("lambda must be 'generic' or 'p,q'");
  cfg.l1 = Rational::parse(text.substr(0, comma));
  cfg.l2 = Rational::parse(text.substr(comma + 1));
  cfg.generic = false;
}

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Outcome o;
  try {
    if (cfg.format != "json" && cfg.format != "text") throw UsageError("format must be json or text");
    if (cfg.command == "realize") cmd_realize(cfg, o, err);
    else if (cfg.command == "solve") cmd_solve(cfg, o);
    else if (cfg.command == "classify") cmd_classify(cfg, o);
    else if (cfg.command == "verify") cmd_verify(cfg, o);
    else if (cfg.command == "examples") cmd_examples(cfg, o);
    else if (cfg.command == "conjecture") cmd_conjecture(cfg, o);
    else throw UsageError("unknown command '" + cfg.command + "'");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::string body = cfg.format == "json" ? o.json.dump(2) + "\n" : o.text.str();
  if (cfg.output.empty() || cfg.output == "-") {
    out << body;
  } else {
    std::ofstream f(cfg.output);
    if (!f) {
      err << "error: cannot write " << cfg.output << "\n";
      return kExitUsage;
    }
    f << body;
  }
  return o.code;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Singular vectors of Heisenberg parabolic generalized Verma modules"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string lambda = "generic";
  long t = 0;

  const char* names[][2] = {{"realize", "Print pi and pi_hat for every basis element"},
                            {"solve", "Brute-force singular vectors per (m, t) slice"},
                            {"classify", "List isotypical components predicted by the theorems"},
                            {"verify", "Homomorphism check, oracle versus theorem, example vectors"},
                            {"examples", "Check the catalogue of explicit singular vectors"},
                            {"conjecture", "Test the product formula for r = 0"}};
  std::vector<CLI::App*> subs;
  for (const auto& [name, help] : names) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("--n", cfg.n, "Rank parameter: g = sl(n+2)");
    s->add_option("--r", cfg.r, "Split index: g' = sl(n-r+2)");
    s->add_option("--lambda", lambda, "'generic' or 'p,q' with rationals p, q");
    s->add_option("--m-max", cfg.m_max, "Largest weighted degree m");
    s->add_option("--t", t, "Restrict solve to one t");
    s->add_option("--a", cfg.a, "Product length (conjecture) or largest family parameter (examples)");
    s->add_option("--output", cfg.output, "Output path (default: standard output)");
    s->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    subs.push_back(s);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kExitMatch : kExitUsage;
  }
  for (auto* s : subs)
    if (s->parsed()) {
      cfg.command = s->get_name();
      if (s->count("--t")) cfg.t = t;
    }
  try {
    parse_lambda(lambda, cfg);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return run_command(cfg, out, err);
}

}  // namespace heisverma
