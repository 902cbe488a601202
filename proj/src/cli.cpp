#include "cwe/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "cwe/closedform.hpp"
#include "cwe/codes.hpp"
#include "cwe/serialize.hpp"

namespace cwe {

using nlohmann::json;

namespace {

struct GlobalFlags {
  bool json_out = false;
  bool no_timing = false;
};

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::string element_text(const FieldCtx& ctx, FqElem x) {
  std::ostringstream os;
  const auto l = ctx.log(x);
  if (l) os << "theta^" << *l << ' ';
  os << '[';
  const auto c = ctx.coeffs(x);
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ']';
  return os.str();
}

std::string code_triple(std::uint64_t n, unsigned k, std::uint64_t d) {
  return "[" + std::to_string(n) + ", " + std::to_string(k) + ", " + std::to_string(d) + "]";
}

void emit_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

// field-info

int cmd_field_info(unsigned p, unsigned e, const GlobalFlags& g, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const FieldCtx ctx = FieldCtx::build(p, e);
  const double ms = elapsed_ms(start);
  if (g.json_out) {
    json doc{{"command", "field-info"}, {"field", field_json(ctx)}, {"prime_field", e == 1}};
    if (!g.no_timing) doc["timing_ms"] = ms;
    emit_json(out, doc);
    return exit_ok;
  }
  out << "field    F_" << p << '^' << e << (e == 1 ? " (prime field)" : "") << "\n";
  out << "q        " << ctx.q() << "\n";
  out << "modulus  " << ctx.modulus_string() << "\n";
  out << "theta    " << element_text(ctx, ctx.theta()) << ", a root of the modulus, order " << ctx.q() - 1
      << " (primitive)\n";
  if (!g.no_timing) out << "time     " << std::fixed << std::setprecision(3) << ms << " ms\n";
  return exit_ok;
}

// code

struct CodeArgs {
  unsigned p = 0, e = 0, k = 0, c = 0;
  std::string a;
  std::string mode = "both";
  bool force = false;
};

void print_summary_text(std::ostream& out, const std::string& title, std::uint64_t n, unsigned dim, std::uint64_t dmin,
                        std::uint64_t mult, const WeightEnumerator& we, const CompleteWeightEnumerator& cwe) {
  out << title << "  " << code_triple(n, dim, dmin);
  if (mult != 1) out << "  (each codeword repeated " << mult << " times)";
  out << "\n  WE   " << we.to_string() << "\n  CWE  " << cwe_to_string(cwe) << "\n";
}

int cmd_code(const CodeArgs& a, const GlobalFlags& g, std::ostream& out, std::ostream& err) {
  const bool want_enum = a.mode != "predict";
  const bool want_pred = a.mode != "enumerate";
  if (want_enum && !a.force) {
    std::uint64_t q = 0;
    try {
      q = ipow(a.p, a.e);
    } catch (const std::overflow_error&) {
      q = std::numeric_limits<std::uint64_t>::max();
    }
    if (q > large_q_limit) {
      err << "error: enumeration at q = " << a.p << "^" << a.e << " exceeds " << large_q_limit
          << "; pass --force to proceed\n";
      return exit_usage;
    }
  }
  const CodeParams params = resolve_point({a.p, a.e, a.k, a.a, a.c});
  const CaseClass cls = classify(params);

  std::optional<CodeSummary> code;
  std::string enum_note;
  if (want_enum) {
    try {
      code = build_code(params);
    } catch (const EmptyDefiningSet& ex) {
      enum_note = ex.what();
    }
  }
  std::optional<Prediction> pred;
  std::string pred_note;
  if (want_pred) {
    try {
      pred = predict(params);
    } catch (const NoClosedForm& ex) {
      pred_note = ex.what();
    }
  }

  std::optional<bool> we_match, cwe_match;
  json diff = json::array();
  if (code && pred) {
    we_match = pred->we == code->we && pred->length == code->length && pred->dimension == code->dimension;
    diff = cwe_diff(pred->terms, code->cwe);
    cwe_match = diff.empty();
  }

  if (g.json_out) {
    json doc{{"command", "code"},
             {"mode", a.mode},
             {"field", field_json(params.ctx())},
             {"params", params_json(params)},
             {"case", case_json(cls)}};
    if (want_enum) doc["enumeration"] = code ? summary_json(*code) : json{{"note", enum_note}};
    if (want_pred) doc["prediction"] = pred ? prediction_json(*pred) : json{{"note", pred_note}};
    if (we_match) {
      doc["match"] = json{{"match", *we_match && *cwe_match}, {"we", *we_match}, {"cwe", *cwe_match}, {"cwe_diff", diff}};
    }
    emit_json(out, doc);
  } else {
    const FieldCtx& ctx = params.ctx();
    out << "field   F_" << params.p() << '^' << params.e() << ", modulus " << ctx.modulus_string() << "\n";
    out << "params  k=" << params.k() << " d=" << params.d() << " m=" << params.m() << " s=" << params.s()
        << " a=" << element_text(ctx, params.a()) << " c=" << params.c().value << "\n";
    out << "case    " << cls.number() << " (" << (cls.condition_holds ? "condition holds" : "condition fails")
        << "), closed form: " << cls.source() << "\n";
    if (want_enum) {
      if (code) {
        print_summary_text(out, "enumerated", code->length, code->dimension, code->min_distance, code->multiplicity,
                           code->we, code->cwe);
      } else {
        out << "enumerated  " << enum_note << "\n";
      }
    }
    if (want_pred) {
      if (pred) {
        print_summary_text(out, "predicted ", pred->length, pred->dimension, pred->we.min_nonzero(), pred->multiplicity,
                           pred->we, pred->cwe);
      } else {
        out << "predicted   " << pred_note << "\n";
      }
    }
    if (we_match) {
      out << "match   " << ((*we_match && *cwe_match) ? "true" : "false") << " (WE " << (*we_match ? "equal" : "differs")
          << ", CWE " << (*cwe_match ? "equal" : "differs") << ")\n";
      for (const auto& row : diff) out << "  diff  " << row.dump() << "\n";
    }
  }
  return (we_match && !*we_match) ? exit_check_failed : exit_ok;
}

// sweep

CheckResult expect_check(const ConfigPoint& cp) {
  CheckResult r{"expect", "config expect.we", CheckStatus::pass, nullptr, nullptr, {}, 0};
  const auto start = std::chrono::steady_clock::now();
  WeightEnumerator want;
  want.counts = *cp.expect_we;
  WeightEnumerator got;
  try {
    got = build_code(resolve_point(cp.spec)).we;
  } catch (const EmptyDefiningSet&) {
    r.detail = "empty defining set";
  }
  r.expected = we_json(want);
  r.actual = we_json(got);
  if (!(want == got)) r.status = CheckStatus::fail;
  r.wall_us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string spec_text(const PointSpec& s) {
  std::ostringstream os;
  os << "p=" << s.p << " e=" << s.e << " k=" << s.k << " a=" << s.a << " c=" << s.c;
  return os.str();
}

int cmd_sweep(const std::string& path, const GlobalFlags& g, std::ostream& out, std::ostream& err) {
  SweepConfig cfg;
  try {
    cfg = load_sweep_config(path);
  } catch (const ConfigError& ex) {
    err << "error: " << ex.what() << '\n';
    return exit_usage;
  }
  std::vector<PointSpec> plan;
  for (const ConfigPoint& cp : cfg.points) plan.push_back(cp.spec);
  const auto start = std::chrono::steady_clock::now();
  SweepResult res = sweep(plan, cfg.options);

  for (std::size_t i = 0; i < cfg.points.size(); ++i) {
    SweepEntry& entry = res.entries[i];
    if (!entry.diagnostic.empty()) err << "warning: " << spec_text(entry.spec) << ": " << entry.diagnostic << '\n';
    if (entry.report && cfg.points[i].expect_we) {
      entry.report->checks.push_back(expect_check(cfg.points[i]));
      ++res.summary["expect"][to_string(entry.report->checks.back().status)];
    }
  }
  const double ms = elapsed_ms(start);

  if (g.json_out) {
    json doc = sweep_json(res, !g.no_timing);
    doc["command"] = "sweep";
    if (!g.no_timing) doc["timing_ms"] = ms;
    emit_json(out, doc);
  } else {
    for (const SweepEntry& entry : res.entries) {
      out << std::left << std::setw(36) << spec_text(entry.spec);
      if (!entry.report) {
        out << "skipped: " << entry.diagnostic << "\n";
        continue;
      }
      out << std::setw(14) << entry.report->params["case"]["source"].get<std::string>()
          << (entry.report->passed() ? "pass" : "FAIL");
      for (const CheckResult& c : entry.report->checks) {
        if (c.status == CheckStatus::fail || c.status == CheckStatus::warn) out << "  " << c.name << ':' << to_string(c.status);
      }
      out << "\n";
    }
    out << "\nsummary\n";
    for (const auto& [name, counts] : res.summary) {
      out << "  " << std::left << std::setw(14) << name;
      for (const auto& [status, n] : counts) out << ' ' << status << '=' << n;
      out << "\n";
    }
    out << "invalid points: " << res.invalid_points << "\n";
    if (!g.no_timing) out << "time: " << std::fixed << std::setprecision(1) << ms << " ms\n";
  }

  if (res.invalid_points != 0) return exit_usage;
  return res.all_pass() ? exit_ok : exit_check_failed;
}

// config parsing

unsigned config_uint(const json& obj, const std::string& key, const std::string& locus, bool required,
                     unsigned fallback = 0) {
  if (!obj.contains(key)) {
    if (required) throw ConfigError(locus + "." + key + ": missing");
    return fallback;
  }
  const json& v = obj.at(key);
  if (!v.is_number_unsigned()) throw ConfigError(locus + "." + key + ": expected a non-negative integer");
  return v.get<unsigned>();
}

}  // namespace

SweepConfig parse_sweep_config(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& ex) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < ex.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ConfigError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": syntax error");
  }
  const std::string loc = origin + ": ";
  if (!doc.is_object()) throw ConfigError(loc + "top level must be an object");
  for (const auto& [key, v] : doc.items()) {
    if (key != "points" && key != "options") throw ConfigError(loc + key + ": unknown key");
  }
  SweepConfig cfg;
  if (doc.contains("options")) {
    const json& o = doc["options"];
    if (!o.is_object()) throw ConfigError(loc + "options: expected an object");
    for (const auto& [key, v] : o.items()) {
      if (key != "full_b_limit" && key != "b_samples" && key != "seed") throw ConfigError(loc + "options." + key + ": unknown key");
      if (!v.is_number_unsigned()) throw ConfigError(loc + "options." + key + ": expected a non-negative integer");
    }
    cfg.options.full_b_limit = o.value("full_b_limit", cfg.options.full_b_limit);
    cfg.options.b_samples = o.value("b_samples", cfg.options.b_samples);
    cfg.options.seed = o.value("seed", cfg.options.seed);
  }
  if (!doc.contains("points") || !doc["points"].is_array()) throw ConfigError(loc + "points: expected an array");
  const json& pts = doc["points"];
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string at = loc + "points[" + std::to_string(i) + "]";
    const json& pt = pts[i];
    if (!pt.is_object()) throw ConfigError(at + ": expected an object");
    for (const auto& [key, v] : pt.items()) {
      if (key != "p" && key != "e" && key != "k" && key != "a" && key != "c" && key != "expect") {
        throw ConfigError(at + "." + key + ": unknown key");
      }
    }
    ConfigPoint cp;
    cp.spec.p = config_uint(pt, "p", at, true);
    cp.spec.e = config_uint(pt, "e", at, true);
    cp.spec.k = config_uint(pt, "k", at, true);
    cp.spec.c = config_uint(pt, "c", at, false, 0);
    if (!pt.contains("a")) throw ConfigError(at + ".a: missing");
    const json& a = pt["a"];
    if (a.is_string()) {
      cp.spec.a = a.get<std::string>();
    } else if (a.is_array()) {
      std::string s = "[";
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (!a[j].is_number_unsigned()) throw ConfigError(at + ".a[" + std::to_string(j) + "]: expected a non-negative integer");
        s += (j ? "," : "") + std::to_string(a[j].get<std::uint64_t>());
      }
      cp.spec.a = s + "]";
    } else {
      throw ConfigError(at + ".a: expected a string or a coefficient array");
    }
    if (pt.contains("expect")) {
      const json& ex = pt["expect"];
      if (!ex.is_object() || !ex.contains("we") || !ex["we"].is_object()) {
        throw ConfigError(at + ".expect: expected {\"we\": {weight: count, ...}}");
      }
      std::map<std::uint64_t, std::uint64_t> we;
      for (const auto& [w, n] : ex["we"].items()) {
        std::uint64_t weight = 0;
        std::istringstream is(w);
        if (!(is >> weight) || !is.eof() || !n.is_number_unsigned()) {
          throw ConfigError(at + ".expect.we." + w + ": expected \"weight\": count");
        }
        we[weight] = n.get<std::uint64_t>();
      }
      cp.expect_we = std::move(we);
    }
    cfg.points.push_back(std::move(cp));
  }
  return cfg;
}

SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_sweep_config(ss.str(), path);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weight enumerators of trace codes from quadratic defining sets"};
  app.require_subcommand(1);
  GlobalFlags g;
  app.add_flag("--json", g.json_out, "Emit JSON on standard output");
  app.add_flag("--no-timing", g.no_timing, "Omit wall-clock timings");

  unsigned fp = 0, fe = 0;
  CLI::App* field = app.add_subcommand("field-info", "Describe the field F_{p^e} and its canonical generator");
  field->add_option("--p", fp, "Odd prime")->required();
  field->add_option("--e", fe, "Extension degree")->required();

  CodeArgs ca;
  CLI::App* code = app.add_subcommand("code", "Build C_{D_c} and print its enumerators");
  code->add_option("--p", ca.p, "Odd prime")->required();
  code->add_option("--e", ca.e, "Even extension degree")->required();
  code->add_option("--k", ca.k, "Frobenius exponent k (e/gcd(k,e) must be even)")->required();
  code->add_option("--a", ca.a,
                   "theta^t, a coefficient vector [c0,...,c_{e-1}], or holds/fails for the least power of theta in "
                   "that condition class")
      ->required();
  code->add_option("--c", ca.c, "Level c in F_p")->default_val(0);
  code->add_option("--mode", ca.mode, "enumerate, predict or both")
      ->default_val("both")
      ->check(CLI::IsMember({"enumerate", "predict", "both"}));
  code->add_flag("--force", ca.force, "Allow enumeration above q = 10^7");

  std::string config;
  CLI::App* sw = app.add_subcommand("sweep", "Run the verifier over every point of a config file");
  sw->add_option("config", config, "JSON config path")->required();

  for (CLI::App* sub : {field, code, sw}) {
    sub->add_flag("--json", g.json_out, "Emit JSON on standard output");
    sub->add_flag("--no-timing", g.no_timing, "Omit wall-clock timings");
  }

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& ex) {
    app.exit(ex, out, err);
    return exit_ok;
  } catch (const CLI::CallForAllHelp& ex) {
    app.exit(ex, out, err);
    return exit_ok;
  } catch (const CLI::ParseError& ex) {
    app.exit(ex, out, err);
    return exit_usage;
  }

  try {
    if (*field) return cmd_field_info(fp, fe, g, out);
    if (*code) return cmd_code(ca, g, out, err);
    return cmd_sweep(config, g, out, err);
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << '\n';
    return exit_usage;
  }
}

}  // namespace cwe
