#include "awq/qverify.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "awq/relations.hpp"

namespace awq::qv {

using nlohmann::json;

long default_horizon() {
  if (const char* env = std::getenv("QVERIFY_HORIZON")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0) return v;
  }
  return 32;
}

Mode parse_mode(const std::string& s) {
  if (s == "formal") return Mode::Formal;
  if (s == "rational") return Mode::Rational;
  if (s == "float") return Mode::Float;
  throw UsageError("unknown mode '" + s + "' (formal, rational, float)");
}

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::Formal: return "formal";
    case Mode::Rational: return "rational";
    case Mode::Float: return "float";
  }
  return "?";
}

namespace {

struct CatalogEntry {
  const char* name;
  const char* params;  // key=default list, for the listing
  const char* about;
};

constexpr CatalogEntry kCatalog[] = {
    {"chebyshev-t", "", "monic Chebyshev, first kind; relation S_q T_n = alpha_n T_n"},
    {"chebyshev-u", "", "monic Chebyshev, second kind; no relation"},
    {"chebyshev-u-zero", "", "Chebyshev U paired with the zero relation a = b = c = 0"},
    {"asc", "c=0 d=0 base=q", "Al-Salam-Chihara"},
    {"cdqh", "a=1 b=0 c=0 base=q", "continuous dual q-Hahn"},
    {"asc-theorem1", "sigma=1", "Al-Salam-Chihara (sigma, sigma q^(1/2)) with its S_q relation"},
    {"cdqh-theorem1", "sigma=1", "continuous dual q-Hahn (sigma, -sigma, sigma q^(1/4)), base q^(1/2), with its S_q relation"},
    {"chebyshev-t-theorem2", "c=0", "Chebyshev T with (x - c) S_q T_n = alpha_n (x - c) T_n"},
};

template <class F>
std::string S(const F& v) {
  return FieldTraits<F>::str(v);
}

template <class F>
json strings(const std::vector<F>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(S(x));
  return a;
}

template <class F>
struct Resolved {
  TTRRSpec<F> spec;
  std::optional<RelationCoeffs<F>> relation;
  bool standing_assumption = true;  // false where r_n vanishes identically
  std::string note;
};

class Params {
 public:
  explicit Params(const FamilyArgs& a) : a_(a) {}

  std::string text(const std::string& key, const std::string& dflt) {
    used_.push_back(key);
    auto it = a_.params.find(key);
    return it == a_.params.end() ? dflt : it->second;
  }

  template <class F>
  F value(const std::string& key, const std::string& dflt, const Lattice<F>& lat) {
    const std::string t = text(key, dflt);
    try {
      return lat.lift(Scalar::parse(t));
    } catch (const Error& e) {
      throw UsageError("parameter " + key + "=" + t + ": " + e.what());
    }
  }

  int sigma() {
    const std::string t = text("sigma", "1");
    if (t == "1" || t == "+1") return 1;
    if (t == "-1") return -1;
    throw UsageError("sigma must be 1 or -1, got " + t);
  }

  Base base() {
    const std::string t = text("base", "q");
    if (t == "q") return Base::Q;
    if (t == "q_half" || t == "q^(1/2)") return Base::QHalf;
    throw UsageError("base must be q or q_half, got " + t);
  }

  void finish() const {
    for (const auto& [k, v] : a_.params)
      if (std::find(used_.begin(), used_.end(), k) == used_.end())
        throw UsageError("family " + a_.name + " takes no parameter '" + k + "'\n" + catalog_listing());
  }

 private:
  const FamilyArgs& a_;
  std::vector<std::string> used_;
};

template <class F>
Resolved<F> resolve(const FamilyArgs& args, const Lattice<F>& lat) {
  Params p(args);
  Resolved<F> r;
  const std::string& n = args.name;
  try {
    if (n == "chebyshev-t") {
      std::tie(r.spec, r.relation) = theorem1_family(Theorem1Kind::ChebyshevT, 1, lat);
      r.standing_assumption = false;
      r.note = "r_n = 0 identically for this relation; the standing assumption is not checked";
    } else if (n == "chebyshev-u") {
      r.spec = chebyshev_U<F>();
    } else if (n == "chebyshev-u-zero") {
      r.spec = chebyshev_U<F>();
      auto z = Seq<F>::constant(F(0));
      r.relation = RelationCoeffs<F>{z, z, z, XPoly<F>(F(1))};
      r.standing_assumption = false;
      r.note = "r_n = 0 identically for this relation; the standing assumption is not checked";
    } else if (n == "asc") {
      const F c = p.value("c", "0", lat), d = p.value("d", "0", lat);
      r.spec = al_salam_chihara(c, d, p.base(), lat);
    } else if (n == "cdqh") {
      const F a = p.value("a", "1", lat), b = p.value("b", "0", lat), c = p.value("c", "0", lat);
      r.spec = cont_dual_q_hahn(a, b, c, p.base(), lat);
    } else if (n == "asc-theorem1") {
      std::tie(r.spec, r.relation) = theorem1_family(Theorem1Kind::AlSalamChihara, p.sigma(), lat);
    } else if (n == "cdqh-theorem1") {
      std::tie(r.spec, r.relation) = theorem1_family(Theorem1Kind::ContDualQHahn, p.sigma(), lat);
    } else if (n == "chebyshev-t-theorem2") {
      std::tie(r.spec, r.relation) = theorem2_chebyshev(p.value("c", "0", lat), lat);
    } else {
      throw UsageError("unknown family '" + n + "'\n" + catalog_listing());
    }
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError("family " + n + ": " + e.what());
  }
  p.finish();
  return r;
}

template <class F>
XPoly<F> lift_poly(const XPoly<Scalar>& p, const Lattice<F>& lat) {
  std::vector<F> c;
  for (const auto& s : p.coeffs()) c.push_back(lat.lift(s));
  return XPoly<F>(std::move(c));
}

template <class F>
XPoly<F> parse_pi(const std::string& text, const Lattice<F>& lat) {
  XPoly<Scalar> p;
  try {
    p = parse_xpoly(text);
  } catch (const Error& e) {
    throw UsageError("--pi '" + text + "': " + e.what());
  }
  if (p.degree() > 1 || p.is_zero()) throw UsageError("--pi must be a nonzero polynomial of degree at most 1");
  return lift_poly(p, lat);
}

template <class F>
json residual_json(const ResidualReport<F>& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json j{{"check", e.check}, {"n", e.n}, {"status", status_name(e.status)}, {"values", strings(e.values)}};
    if (!FieldTraits<F>::exact && e.status != Status::NotEvaluated) j["scale"] = e.scale;
    if (!e.note.empty()) j["note"] = e.note;
    entries.push_back(std::move(j));
  }
  json out{{"all_zero", r.all_zero()},
           {"evaluated", r.entries.size() - r.count(Status::NotEvaluated)},
           {"not_evaluated", r.count(Status::NotEvaluated)},
           {"nonzero", r.count(Status::Nonzero)},
           {"entries", std::move(entries)}};
  if (!FieldTraits<F>::exact) out["max_abs"] = r.max_abs();
  if (!r.notes.empty()) out["notes"] = r.notes;
  return out;
}

template <class F>
json fit_json(const FitResult<F>& res, long last) {
  if (const auto* f = std::get_if<FitFailure<F>>(&res)) {
    return {{"n", f->n}, {"degrees", f->degrees}, {"coefficients", strings(f->coefficients)}};
  }
  const auto& rel = std::get<RelationCoeffs<F>>(res);
  json rows = json::array();
  for (long n = 0; n <= last; ++n) rows.push_back({{"n", n}, {"a", S(rel.a(n))}, {"b", S(rel.b(n))}, {"c", S(rel.c(n))}});
  return rows;
}

json make_check(const std::string& name, bool pass, json payload = json::object()) {
  payload["name"] = name;
  payload["status"] = pass ? "pass" : "fail";
  return payload;
}

template <class F>
class Runner {
 public:
  Runner(const VerifyConfig& cfg, const Lattice<F>& lat) : cfg_(cfg), lat_(lat) {}

  int run(json& rep) {
    json checks = json::array();
    json notes = json::array();
    try {
      if (cfg_.command == "system" && !cfg_.input.empty()) {
        system_from_file(checks);
      } else {
        fam_ = resolve(cfg_.family, lat_);
        if (cfg_.command == "gen") gen(rep);
        else if (cfg_.command == "fit") fit(checks, rep);
        else if (cfg_.command == "system") system(checks, notes);
        else verify(checks, notes);
      }
    } catch (const UsageError&) {
      throw;
    } catch (const Error& e) {
      rep["error"] = e.what();
      checks.push_back(make_check("error", false, {{"message", e.what()}}));
    }
    bool pass = true;
    for (const auto& c : checks) pass = pass && c["status"] == "pass";
    rep["checks"] = std::move(checks);
    rep["notes"] = std::move(notes);
    rep["status"] = pass ? "pass" : "fail";
    return pass ? kExitPass : kExitFail;
  }

 private:
  double tol() const { return cfg_.tol; }

  void gen(json& rep) {
    const auto inst = generate(fam_.spec, cfg_.n_max);
    json rows = json::array();
    for (long n = 0; n <= cfg_.n_max; ++n) {
      rows.push_back({{"n", n},
                      {"B", S(fam_.spec.B(n))},
                      {"C", S(fam_.spec.C(n))},
                      {"P", inst.polys[n].str()},
                      {"coefficients", strings(inst.polys[n].coeffs())}});
    }
    rep["rows"] = std::move(rows);
  }

  XPoly<F> pi_or(const XPoly<F>& dflt) const { return cfg_.pi ? parse_pi(*cfg_.pi, lat_) : dflt; }

  // A relation to check against: the family's own when it has one and no --pi
  // overrides it, otherwise a fit of pi S_q P_n on the given horizon.
  std::optional<RelationCoeffs<F>> relation(long horizon, json& checks) {
    if (fam_.relation && (!cfg_.pi || pi_or(fam_.relation->pi) == fam_.relation->pi)) return fam_.relation;
    const XPoly<F> pi = pi_or(XPoly<F>(F(1)));
    auto res = fit_s_relation(generate(fam_.spec, horizon), pi, lat_, tol());
    if (auto* rel = std::get_if<RelationCoeffs<F>>(&res)) return *rel;
    checks.push_back(make_check("fit", false, {{"pi", pi.str()}, {"failure", fit_json(res, 0)}}));
    return std::nullopt;
  }

  void fit(json& checks, json& rep) {
    const XPoly<F> pi = pi_or(fam_.relation ? fam_.relation->pi : XPoly<F>(F(1)));
    fit_check(pi, checks, &rep);
  }

  void fit_check(const XPoly<F>& pi, json& checks, json* rep) {
    const auto inst = generate(fam_.spec, cfg_.n_max + 1);
    const auto res = fit_s_relation(inst, pi, lat_, tol());
    const bool ok = std::holds_alternative<RelationCoeffs<F>>(res);
    json payload{{"pi", pi.str()}};
    if (ok) payload["coefficients"] = fit_json(res, cfg_.n_max);
    else payload["failure"] = fit_json(res, 0);
    if (rep && ok) (*rep)["rows"] = payload["coefficients"];
    checks.push_back(make_check("fit", ok, std::move(payload)));
    if (ok && fam_.relation && fam_.relation->pi == pi) {
      auto cmp = compare_relations(std::get<RelationCoeffs<F>>(res), *fam_.relation, 0, cfg_.n_max, tol());
      checks.push_back(make_check("closed-form", cmp.all_zero(), {{"residuals", residual_json(cmp)}}));
    }
  }

  void verify(json& checks, json& notes) {
    const std::string& r = cfg_.relation;
    if (r == "sq-pi1") {
      fit_check(XPoly<F>(F(1)), checks, nullptr);
    } else if (r == "sq-linear") {
      XPoly<F> pi;
      if (cfg_.pi) pi = parse_pi(*cfg_.pi, lat_);
      else if (fam_.relation && fam_.relation->pi.degree() == 1) pi = fam_.relation->pi;
      else throw UsageError("sq-linear needs --pi for family " + cfg_.family.name);
      if (pi.degree() != 1) throw UsageError("sq-linear needs a degree-one pi");
      fit_check(pi, checks, nullptr);
    } else if (r == "dq-five-term") {
      dq_five_term(checks);
    } else if (r == "system") {
      system(checks, notes);
    } else if (r == "initial") {
      auto rel = relation(cfg_.n_max + 1, checks);
      if (!rel) return;
      const auto seqs = system_sequences(fam_.spec, *rel, lat_);
      const bool pi1 = rel->pi.degree() == 0;
      const F c = pi1 ? F(0) : -rel->pi.coeff(0) / rel->pi.coeff(1);
      auto rep = initial_residuals(pi1 ? InitialCase::Pi1 : InitialCase::PiDeg1, seqs, c, lat_, tol());
      checks.push_back(make_check("initial", rep.all_zero(),
                                  {{"case", pi1 ? "pi1" : "pi_deg1"}, {"residuals", residual_json(rep)}}));
    } else if (r == "t-fit") {
      auto rel = relation(cfg_.n_max + 1, checks);
      if (!rel) return;
      auto t = t_fit_check(system_sequences(fam_.spec, *rel, lat_), cfg_.n_max, lat_, tol());
      checks.push_back(make_check("t-fit", t.check.all_zero(),
                                  {{"k1", S(t.k1)}, {"k2", S(t.k2)}, {"residuals", residual_json(t.check)}}));
    } else if (r == "uniqueness") {
      auto rel = relation(cfg_.n_max + 1, checks);
      if (!rel) return;
      const F v = uniqueness_product(system_sequences(fam_.spec, *rel, lat_), lat_);
      checks.push_back(make_check("uniqueness", negligible<F>(v, 1.0, tol()), {{"product", S(v)}}));
    } else if (r == "power") {
      auto rel = relation(cfg_.n_max + 1, checks);
      if (!rel) return;
      auto rep = power_constraints(*rel, fam_.spec, cfg_.n_max, lat_, tol());
      checks.push_back(make_check("power", rep.all_zero(), {{"residuals", residual_json(rep)}}));
    } else {
      throw UsageError("unknown relation '" + r +
                       "' (sq-pi1, sq-linear, dq-five-term, system, initial, t-fit, uniqueness, power)");
    }
  }

  void dq_five_term(json& checks) {
    const long N = cfg_.n_max;
    auto rel = relation(N + 2, checks);
    if (!rel) return;
    const auto inst = generate(fam_.spec, N + 2);
    const auto chk = verify_dq_five_term(inst, *rel, N, lat_, tol());
    json rows = json::array();
    bool r1_zero = true, rest_nonzero = true;
    for (long n = 0; n <= N; ++n) {
      const auto& c = chk.coeffs[n];
      rows.push_back({{"n", n}, {"r1", S(c.r1)}, {"r2", S(c.r2)}, {"r3", S(c.r3)}, {"r4", S(c.r4)}, {"r5", S(c.r5)}});
      r1_zero = r1_zero && negligible<F>(c.r1, 1.0, tol());
      if (n >= 2)
        for (const F& v : {c.r2, c.r3, c.r4, c.r5}) rest_nonzero = rest_nonzero && !negligible<F>(v, 0.0, tol());
    }
    json shape{{"r1_zero", r1_zero}, {"r2_to_r5_nonzero_from_n2", rest_nonzero}};
    if (r1_zero && rest_nonzero && rel->pi.degree() == 0)
      shape["note"] = "r1 = 0 with r2..r5 nonzero: pi U_2 has degree 2 and the relation spans P_{n+1}..P_{n-2}";
    checks.push_back(make_check("dq-five-term", chk.report.all_zero(),
                                {{"coefficients", std::move(rows)}, {"shape", std::move(shape)},
                                 {"residuals", residual_json(chk.report)}}));
  }

  void system(json& checks, json& notes) {
    auto rel = relation(cfg_.n_max + 4, checks);
    if (!rel) return;
    SystemOptions opt;
    opt.tol = tol();
    opt.enforce_standing_assumption = fam_.standing_assumption && !cfg_.waive_standing_assumption;
    if (!fam_.note.empty()) notes.push_back(fam_.note);
    run_system(system_sequences(fam_.spec, *rel, lat_), opt, checks);
    if (cfg_.family.name == "chebyshev-u-zero") {
      auto res = fit_s_relation(generate(fam_.spec, std::max(3L, cfg_.n_max)), XPoly<F>(F(1)), lat_, tol());
      if (const auto* f = std::get_if<FitFailure<F>>(&res))
        notes.push_back("these sequences solve the difference system, but S_q P_n = b_n P_n + c_n P_{n-1} fails at n = " +
                        std::to_string(f->n) + " (run: fit --family chebyshev-u --pi 1)");
    }
  }

  void run_system(const SystemSequences<F>& seqs, const SystemOptions& opt, json& checks) {
    try {
      auto rep = system_residuals(seqs, cfg_.n_min, cfg_.n_max, lat_, opt);
      checks.push_back(make_check("system", rep.all_zero(),
                                  {{"k1", S(seqs.k1)}, {"k2", S(seqs.k2)}, {"residuals", residual_json(rep)}}));
    } catch (const StandingAssumptionError& e) {
      checks.push_back(make_check("system", false, {{"message", e.what()}, {"index", e.index()}}));
    }
  }

  void system_from_file(json& checks) {
    std::ifstream in(cfg_.input);
    if (!in) throw UsageError("cannot read input file " + cfg_.input);
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::exception& e) {
      throw UsageError("input file " + cfg_.input + ": " + e.what());
    }
    auto column = [&](const char* key) {
      if (!doc.contains(key) || !doc[key].is_array()) throw UsageError(std::string("input file lacks array '") + key + "'");
      std::vector<F> v;
      for (const auto& x : doc[key]) v.push_back(lat_.lift(Scalar::parse(x.is_string() ? x.get<std::string>() : x.dump())));
      return Seq<F>::table(std::move(v));
    };
    SystemSequences<F> s{column("B"), column("C"), column("a"), column("b"), column("c")};
    if (doc.contains("k1") && doc.contains("k2")) {
      s.k1 = lat_.lift(Scalar::parse(doc["k1"].get<std::string>()));
      s.k2 = lat_.lift(Scalar::parse(doc["k2"].get<std::string>()));
    } else {
      std::tie(s.k1, s.k2) = t_constants(s.c(1), s.c(2), s.C(1), s.C(2), lat_);
    }
    SystemOptions opt;
    opt.tol = tol();
    opt.enforce_standing_assumption = !cfg_.waive_standing_assumption;
    run_system(s, opt, checks);
  }

  const VerifyConfig& cfg_;
  const Lattice<F>& lat_;
  Resolved<F> fam_;
};

void validate(const VerifyConfig& cfg) {
  static const char* commands[] = {"gen", "fit", "verify", "system"};
  if (std::find_if(std::begin(commands), std::end(commands), [&](const char* c) { return cfg.command == c; }) ==
      std::end(commands))
    throw UsageError("unknown command '" + cfg.command + "'");
  if (cfg.n_max < 0) throw UsageError("--n-max must be nonnegative");
  if (cfg.command != "gen" && cfg.n_max < 2) throw UsageError("--n-max must be at least 2");
  if (cfg.command == "system" && cfg.n_min > cfg.n_max) throw UsageError("--n-min exceeds --n-max");
  if (cfg.mode != Mode::Formal && !(cfg.u0 > Rational(0) && cfg.u0 < Rational(1)))
    throw UsageError("--u must lie strictly between 0 and 1, got " + cfg.u0.str());
  if (cfg.mode == Mode::Float && !(cfg.tol > 0)) throw UsageError("--tol must be positive");
  if (cfg.command == "verify" && cfg.relation.empty()) throw UsageError("verify needs --relation");
  if (cfg.family.name.empty() && !(cfg.command == "system" && !cfg.input.empty()))
    throw UsageError("--family is required\n" + catalog_listing());
}

json config_echo(const VerifyConfig& cfg) {
  json c{{"command", cfg.command}, {"n_max", cfg.n_max}, {"mode", mode_name(cfg.mode)}};
  if (!cfg.family.name.empty()) c["family"] = {{"name", cfg.family.name}, {"params", cfg.family.params}};
  if (!cfg.relation.empty()) c["relation"] = cfg.relation;
  if (cfg.pi) c["pi"] = *cfg.pi;
  if (cfg.command == "system") c["n_min"] = cfg.n_min;
  if (cfg.mode != Mode::Formal) c["u"] = cfg.u0.str();
  if (cfg.mode == Mode::Float) c["tol"] = cfg.tol;
  if (cfg.waive_standing_assumption) c["waive_standing_assumption"] = true;
  if (!cfg.input.empty()) c["input"] = cfg.input;
  return c;
}

}  // namespace

std::string catalog_listing() {
  std::ostringstream os;
  os << "families:\n";
  for (const auto& e : kCatalog) {
    os << "  " << e.name;
    if (*e.params) os << " [" << e.params << "]";
    os << "  " << e.about << "\n";
  }
  return os.str();
}

Outcome run(const VerifyConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  out.report = {{"schema_version", kSchemaVersion}, {"tool", "qverify"}, {"config", config_echo(cfg)}};
  switch (cfg.mode) {
    case Mode::Formal: {
      const Lattice<Scalar> lat;
      out.exit_code = Runner<Scalar>(cfg, lat).run(out.report);
      break;
    }
    case Mode::Rational: {
      const Lattice<Rational> lat(cfg.u0);
      out.exit_code = Runner<Rational>(cfg, lat).run(out.report);
      break;
    }
    case Mode::Float: {
      const Lattice<double> lat(cfg.u0);
      out.exit_code = Runner<double>(cfg, lat).run(out.report);
      break;
    }
  }
  out.report["timing"] = {
      {"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
  return out;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ";") + cell(x);
    return s;
  }
  return v.dump();
}

// Collects (check name, residual entry) pairs from every check of a report.
std::vector<std::pair<std::string, json>> residual_rows(const json& report) {
  std::vector<std::pair<std::string, json>> out;
  for (const auto& c : report.value("checks", json::array()))
    if (c.contains("residuals"))
      for (const auto& e : c["residuals"]["entries"]) out.emplace_back(c["name"].get<std::string>(), e);
  return out;
}

std::string render_csv(const json& report) {
  std::ostringstream os;
  if (report.contains("rows")) {
    const json& rows = report["rows"];
    std::vector<std::string> cols{"n"};
    if (!rows.empty())
      for (const auto& [k, v] : rows[0].items())
        if (k != "n") cols.push_back(k);
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    os << "\n";
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_field(cell(r[cols[i]]));
      os << "\n";
    }
    return os.str();
  }
  os << "n,check,equation,status,value\n";
  for (const auto& [check, e] : residual_rows(report))
    os << e["n"].get<long>() << "," << csv_field(check) << "," << csv_field(e["check"].get<std::string>()) << ","
       << e["status"].get<std::string>() << "," << csv_field(cell(e["values"])) << "\n";
  return os.str();
}

std::string render_text(const json& report) {
  std::ostringstream os;
  const json& cfg = report["config"];
  os << "qverify " << cfg["command"].get<std::string>();
  if (cfg.contains("family")) os << "  family=" << cfg["family"]["name"].get<std::string>();
  if (cfg.contains("relation")) os << "  relation=" << cfg["relation"].get<std::string>();
  os << "  mode=" << cfg["mode"].get<std::string>() << "\n";
  if (report.contains("rows"))
    for (const auto& r : report["rows"]) {
      os << "  n=" << r["n"].get<long>();
      for (const auto& [k, v] : r.items())
        if (k != "n" && k != "coefficients") os << "  " << k << " = " << cell(v);
      os << "\n";
    }
  for (const auto& c : report.value("checks", json::array())) {
    os << "  [" << c["status"].get<std::string>() << "] " << c["name"].get<std::string>();
    if (c.contains("message")) os << ": " << c["message"].get<std::string>();
    if (c.contains("failure")) {
      const json& f = c["failure"];
      os << ": fails at n = " << f["n"].get<long>() << ", spurious degrees " << cell(f["degrees"])
         << ", coefficients " << cell(f["coefficients"]);
    }
    if (c.contains("k1")) os << "  k1 = " << c["k1"].get<std::string>() << ", k2 = " << c["k2"].get<std::string>();
    if (c.contains("product")) os << "  product = " << c["product"].get<std::string>();
    if (c.contains("residuals")) {
      const json& r = c["residuals"];
      os << "  (" << r["evaluated"].get<long>() << " evaluated, " << r["nonzero"].get<long>() << " nonzero, "
         << r["not_evaluated"].get<long>() << " not evaluated)";
    }
    if (c.contains("shape") && c["shape"].contains("note")) os << "\n      " << c["shape"]["note"].get<std::string>();
    os << "\n";
  }
  int shown = 0;
  for (const auto& [check, e] : residual_rows(report)) {
    if (e["status"] != "nonzero") continue;
    if (shown++ == 20) {
      os << "    ...\n";
      break;
    }
    os << "    " << e["check"].get<std::string>() << " n=" << e["n"].get<long>() << ": " << cell(e["values"]) << "\n";
  }
  for (const auto& n : report.value("notes", json::array())) os << "  note: " << n.get<std::string>() << "\n";
  os << "status: " << report["status"].get<std::string>() << "\n";
  return os.str();
}

}  // namespace

std::string render(const json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  if (format == "csv") return render_csv(report);
  if (format == "text") return render_text(report);
  throw UsageError("unknown format '" + format + "' (json, csv, text)");
}

}  // namespace awq::qv
