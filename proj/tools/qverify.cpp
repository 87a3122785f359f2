// qverify: generate families, fit structure relations and check the identities
// around them. Exit status: 0 pass, 1 mathematical failure, 2 usage error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "awq/qverify.hpp"

namespace qv = awq::qv;

namespace {

struct Cli {
  qv::VerifyConfig cfg;
  std::vector<std::string> params;
  std::string pi;
  std::string mode = "formal";
  std::string u = "1/2";
  std::string out;
  std::string format = "json";
};

void common_flags(CLI::App* sub, Cli& c, bool needs_family) {
  auto* fam = sub->add_option("--family", c.cfg.family.name, "family name (see --list)");
  if (needs_family) fam->required();
  sub->add_option("--param", c.params, "family parameter key=value, value in the Scalar grammar")
      ->type_name("KEY=VALUE");
  sub->add_option("--n-max", c.cfg.n_max, "largest index")->default_val(qv::default_horizon());
  sub->add_option("--mode", c.mode, "formal | rational | float")->default_val("formal");
  sub->add_option("--u", c.u, "evaluation point u = q^(1/4) for rational and float modes")->default_val("1/2");
  sub->add_option("--tol", c.cfg.tol, "float-mode tolerance, relative to term magnitudes")
      ->default_val(awq::kDefaultFloatTol);
  sub->add_option("--out", c.out, "write the report here instead of stdout");
  sub->add_option("--format", c.format, "json | csv | text")->default_val("json");
}

void finish(Cli& c, const std::string& command) {
  c.cfg.command = command;
  for (const auto& kv : c.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw qv::UsageError("--param expects key=value, got '" + kv + "'");
    c.cfg.family.params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  if (!c.pi.empty()) c.cfg.pi = c.pi;
  c.cfg.mode = qv::parse_mode(c.mode);
  if (c.format != "json" && c.format != "csv" && c.format != "text")
    throw qv::UsageError("unknown format '" + c.format + "' (json, csv, text)");
  try {
    c.cfg.u0 = awq::Rational::parse(c.u);
  } catch (const awq::Error& e) {
    throw qv::UsageError("--u: " + std::string(e.what()));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of Askey-Wilson structure relations for orthogonal polynomial families"};
  app.require_subcommand(0, 1);
  bool list = false;
  app.add_flag("--list", list, "list the family catalog");

  Cli gen, fit, verify, system;
  auto* g = app.add_subcommand("gen", "print P_n and the recurrence coefficients");
  common_flags(g, gen, true);
  auto* f = app.add_subcommand("fit", "fit pi S_q P_n = (a_n x + b_n) P_n + c_n P_{n-1}");
  common_flags(f, fit, true);
  f->add_option("--pi", fit.pi, "polynomial a x - c (default: the family's own, else 1)");
  auto* v = app.add_subcommand("verify", "run one relation check");
  common_flags(v, verify, true);
  v->add_option("--relation", verify.cfg.relation,
                "sq-pi1 | sq-linear | dq-five-term | system | initial | t-fit | uniqueness | power")
      ->required();
  v->add_option("--pi", verify.pi, "polynomial a x - c");
  auto* s = app.add_subcommand("system", "residuals of the difference system");
  common_flags(s, system, false);
  s->add_option("--pi", system.pi, "fit the relation with this pi instead of the family's own");
  s->add_option("--n-min", system.cfg.n_min, "smallest index")->default_val(2);
  s->add_option("--input", system.cfg.input, "JSON file with arrays B, C, a, b, c (and optionally k1, k2)");
  for (auto* sub : {v, s})
    sub->add_flag("--waive-standing-assumption",
                  (sub == v ? verify : system).cfg.waive_standing_assumption,
                  "do not require r_n = t_n + a_n - a_{n-1} to be nonzero");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : qv::kExitUsage;
  }
  if (list) {
    std::cout << qv::catalog_listing();
    return 0;
  }
  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return qv::kExitUsage;
  }

  Cli* c = g->parsed() ? &gen : f->parsed() ? &fit : v->parsed() ? &verify : &system;
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    finish(*c, command);
    const auto outcome = qv::run(c->cfg);
    const std::string text = qv::render(outcome.report, c->format);
    if (c->out.empty()) {
      std::cout << text;
    } else {
      std::ofstream os(c->out);
      if (!os) throw qv::UsageError("cannot write " + c->out);
      os << text;
    }
    return outcome.exit_code;
  } catch (const qv::UsageError& e) {
    std::cerr << "qverify: " << e.what() << "\n";
    return qv::kExitUsage;
  }
}
