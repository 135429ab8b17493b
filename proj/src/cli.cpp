#include "quintic/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "quintic/classgroup.hpp"
#include "quintic/error.hpp"
#include "quintic/genus.hpp"
#include "quintic/k0_primes.hpp"
#include "quintic/radicand.hpp"
#include "quintic/residue_symbols.hpp"
#include "quintic/selftest.hpp"
#include "quintic/serialize.hpp"

namespace quintic {

const char* const kHypothesisBanner =
    "hypothesis: form verdicts are candidates satisfying necessary conditions only; "
    "the 5-class group of k is assumed, not verified, to be of type (5,5) with an "
    "ambiguous subgroup of rank 1";

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;

struct GlobalFlags {
  bool json = false;
  bool csv = false;
  bool quiet = false;
  std::string out_path;
};

std::uint64_t parse_u64(const std::string& text, const char* what) {
  std::uint64_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be a non-negative integer, got '" + text + "'");
  }
  return v;
}

std::uint64_t parse_radicand(const std::string& text) {
  std::uint64_t n = parse_u64(text, "n");
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be at least 2");
  return n;
}

mpz_class parse_mpz(const std::string& text, const char* what) {
  mpz_class v;
  std::string body = text;
  if (!body.empty() && body[0] == '+') body.erase(0, 1);
  if (body.empty() || v.set_str(body, 10) != 0) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be an integer, got '" + text + "'");
  }
  return v;
}

// "7" or "a0,a1,a2,a3"
CycInt parse_cycint(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() == 1) return CycInt(parse_mpz(parts[0], "a"));
  if (parts.size() != 4) {
    throw Error(ErrorCode::InvalidArgument, "a must be an integer or four comma-separated coefficients");
  }
  CycInt::Coefficients c;
  for (std::size_t i = 0; i < 4; ++i) c[i] = parse_mpz(parts[i], "coefficient");
  return CycInt(c);
}

Json envelope(const std::string& command, Json input, Json result, std::vector<std::string> warnings) {
  Json env;
  env["tool_version"] = kToolVersion;
  env["command"] = command;
  env["input"] = std::move(input);
  env["result"] = std::move(result);
  warnings.insert(warnings.begin(), kHypothesisBanner);
  env["warnings"] = std::move(warnings);
  return env;
}

std::string csv_field(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <class T>
std::string opt_str(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

std::string csv_header(const RadicandForm& form) {
  std::string line = "n,verdict,e,p,q";
  for (const auto& c : form.checks) line += "," + csv_field(c.name) + "," + csv_field(c.name + " [witness]");
  return line;
}

std::string csv_row(const RadicandForm& form) {
  std::string line = std::to_string(form.n) + "," + std::string(verdict_name(form.verdict)) + "," +
                     opt_str(form.e) + "," + opt_str(form.p) + "," + opt_str(form.q);
  for (const auto& c : form.checks) {
    line += std::string(",") + (c.pass ? "pass" : "fail") + "," + csv_field(c.witness);
  }
  return line;
}

void print_form_text(std::ostream& os, const RadicandForm& form) {
  os << "n = " << form.n << "\n";
  os << "verdict: " << verdict_name(form.verdict);
  if (form.verdict != Verdict::None) os << " (candidate)";
  os << "\n";
  if (form.e) os << "e = " << *form.e << "\n";
  if (form.p) os << "p = " << *form.p << "\n";
  if (form.q) os << "q = " << *form.q << "\n";
  os << "checks:\n";
  for (const auto& c : form.checks) {
    os << "  [" << (c.pass ? "pass" : "fail") << "] " << c.name << ": " << c.witness << "\n";
  }
}

void print_json(std::ostream& os, const Json& j) { os << j.dump(2) << "\n"; }

// h_gamma per n from a "n,h_gamma" CSV with '#' comments.
std::optional<mpz_class> lookup_class_number(const std::string& path, std::uint64_t n) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open table '" + path + "'");
  std::optional<mpz_class> found;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    line = line.substr(first);
    line.erase(line.find_last_not_of(" \t") + 1);
    if (line == "n,h_gamma") continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw Error(ErrorCode::InvalidArgument, path + ":" + std::to_string(line_no) + ": expected 'n,h_gamma'");
    }
    const std::uint64_t key = parse_u64(line.substr(0, comma), "table n");
    const mpz_class h = parse_mpz(line.substr(comma + 1), "table h_gamma");
    if (key != n) continue;
    if (found && *found != h) {
      throw Error(ErrorCode::InvalidArgument, "table lists conflicting class numbers for " + std::to_string(n));
    }
    found = h;
  }
  return found;
}

Json error_json(const Error& e) {
  Json j;
  j["code"] = std::string(error_code_name(e.code()));
  j["message"] = e.what();
  return j;
}

Json capitulation_json(const RadicandForm& form, Json certificate, std::vector<std::string>& warnings) {
  const ClassGroupModel model = canonical_model();
  const SubgroupLattice lattice = subgroup_lattice(model);
  const auto perm = tau2_permutation(model, lattice);
  Json out;
  out["n"] = form.n;
  out["form"] = verdict_name(form.verdict);
  Json types = Json::array();
  for (const auto& t : enumerate_capitulation_types()) types.push_back(to_json(t));
  out["admissible_types"] = std::move(types);
  out["certificate"] = std::move(certificate);
  out["tau2_permutation"] = perm;
  out["tau2_cycle_type"] = cycle_type(perm);
  Json model_json;
  model_json["sigma"] = to_json(model.sigma);
  model_json["tau"] = to_json(model.tau);
  out["model"] = std::move(model_json);
  Json subgroups = Json::array();
  for (std::size_t i = 0; i < 6; ++i) {
    Json s;
    s["index"] = i + 1;
    s["field"] = SubgroupLattice::kFieldNames[i];
    s["line"] = to_json(lattice.subgroups[i]);
    subgroups.push_back(std::move(s));
  }
  out["subgroups"] = std::move(subgroups);
  warnings.push_back(kTau2CycleWarning);
  return out;
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(&out), err_(err) {}

  GlobalFlags flags;

  std::ostream& out() { return *out_; }

  void open_output() {
    if (flags.out_path.empty()) return;
    file_.open(flags.out_path, std::ios::binary | std::ios::trunc);
    if (!file_) throw Error(ErrorCode::InvalidArgument, "cannot write '" + flags.out_path + "'");
    out_ = &file_;
  }

  void info(const std::string& text) {
    if (!flags.quiet) err_ << text << "\n";
  }

  std::ostream& err() { return err_; }

  // classify ---------------------------------------------------------------
  int classify_cmd(const std::string& n_text) {
    const std::uint64_t n = parse_radicand(n_text);
    const RadicandForm form = classify(n);
    if (flags.csv) {
      out() << csv_header(form) << "\n" << csv_row(form) << "\n";
    } else if (flags.json) {
      print_json(out(), envelope("classify", Json{{"n", n}}, to_json(form), {}));
    } else {
      print_form_text(out(), form);
      if (!flags.quiet) out() << kHypothesisBanner << "\n";
    }
    return kExitOk;
  }

  // factor -----------------------------------------------------------------
  int factor_cmd(const std::string& n_text) {
    const std::uint64_t n = parse_radicand(n_text);
    const CycFactorization f = factor_radicand(n);
    if (!(f.product() == CycInt(mpz_class(std::to_string(n))))) {
      throw Error(ErrorCode::InternalInvariant, "factorization does not multiply back to n");
    }
    if (flags.json) {
      print_json(out(), envelope("factor", Json{{"n", n}}, to_json(f), {}));
      return kExitOk;
    }
    out() << n << " = (" << f.unit.to_string() << ")";
    for (const auto& [q, e] : f.factors) out() << " * (" << q.element.to_string() << ")^" << e;
    out() << "\n";
    for (const auto& [q, e] : f.factors) {
      out() << "  above " << q.rational_prime << ": pi = " << q.element.to_string() << ", f = " << q.residue_degree
            << ", e = " << q.ramification << ", exponent " << e << "\n";
    }
    return kExitOk;
  }

  // symbol -----------------------------------------------------------------
  int symbol_cmd(const std::string& a_text, const std::string& p_text) {
    const CycInt a = parse_cycint(a_text);
    const std::uint64_t p = parse_u64(p_text, "p");
    if (p == 5) throw Error(ErrorCode::SymbolUndefined, "the quintic symbol is undefined at lambda");
    const auto primes = factor_rational_prime(p);
    Json symbols = Json::array();
    for (const auto& q : primes) {
      Json item;
      item["prime"] = to_json(q);
      item["symbol"] = quintic_symbol(a, q);
      symbols.push_back(std::move(item));
    }
    Json result;
    result["a"] = to_json(a);
    result["p"] = p;
    result["legend"] = "symbol i stands for zeta^i";
    result["symbols"] = std::move(symbols);
    if (flags.json) {
      Json input;
      input["a"] = to_json(a);
      input["p"] = p;
      print_json(out(), envelope("symbol", std::move(input), std::move(result), {}));
      return kExitOk;
    }
    out() << "legend: i stands for zeta^i\n";
    for (const auto& item : result["symbols"]) {
      out() << "  (" << a.to_string() << " / " << cycint_from_json(item["prime"]["pi"]).to_string()
            << ")_5 = " << item["symbol"].get<int>() << "\n";
    }
    return kExitOk;
  }

  // genus ------------------------------------------------------------------
  int genus_cmd(const std::string& n_text, int assumed_rank) {
    const std::uint64_t n = parse_radicand(n_text);
    const GenusReport report = genus_report(n, assumed_rank);
    if (flags.json) {
      Json input;
      input["n"] = n;
      input["assumed_rank"] = assumed_rank;
      print_json(out(), envelope("genus", std::move(input), to_json(report), report.warnings));
      return kExitOk;
    }
    out() << "n = " << n << "\nr = " << report.r << "\ngenus number = " << report.genus_number.get_str()
          << "\n";
    for (const auto& poly : report.absolute_components) {
      out() << "  M(" << poly.p << "): x^5";
      for (int k = 4; k >= 0; --k) {
        const mpz_class& c = poly.coefficients[k];
        if (c == 0) continue;
        out() << (c < 0 ? " - " : " + ") << mpz_class(abs(c)).get_str();
        if (k >= 1) out() << "x";
        if (k >= 2) out() << "^" << k;
      }
      out() << "\n";
    }
    out() << "d = " << report.d << "\n";
    out() << "q* = " << (report.qstar_inferred ? std::to_string(*report.qstar_inferred) : "n/a") << "\n";
    out() << "relative genus candidates: " << report.relative_candidates.size() << "\n";
    for (const auto& w : report.warnings) out() << "warning: " << w << "\n";
    return kExitOk;
  }

  // report -----------------------------------------------------------------
  int report_cmd(const std::string& n_text, const std::optional<std::string>& h_text,
                 const std::optional<std::string>& table) {
    const std::uint64_t n = parse_radicand(n_text);
    if (h_text && table) throw Error(ErrorCode::InvalidArgument, "--h-gamma and --table are mutually exclusive");
    std::optional<mpz_class> h_gamma;
    if (h_text) h_gamma = parse_mpz(*h_text, "h_gamma");
    if (table) h_gamma = lookup_class_number(*table, n);

    std::vector<std::string> warnings;
    Json errors = Json::array();
    auto record = [&](const char* component, const Error& e) {
      if (e.code() == ErrorCode::InternalInvariant) throw e;
      Json item;
      item["component"] = component;
      item["code"] = std::string(error_code_name(e.code()));
      item["message"] = e.what();
      errors.push_back(std::move(item));
      return Json(nullptr);
    };

    const RadicandForm form = classify(n);
    Json result;
    result["radicand"] = to_json(form);
    result["factorization"] = to_json(factor_radicand(n));

    const GenusReport genus = genus_report(n);
    result["genus"] = to_json(genus);
    warnings.insert(warnings.end(), genus.warnings.begin(), genus.warnings.end());

    try {
      result["corollary"] = to_json(corollary_report(n, h_gamma));
    } catch (const Error& e) {
      result["corollary"] = record("corollary", e);
    }

    Json certificate;
    try {
      const GeneratorCertificate cert = generator_certificate(n, form);
      certificate = to_json(cert);
      warnings.insert(warnings.end(), cert.warnings.begin(), cert.warnings.end());
    } catch (const Error& e) {
      certificate = record("certificate", e);
    }

    result["capitulation"] = capitulation_json(form, std::move(certificate), warnings);
    result["errors"] = std::move(errors);

    Json input;
    input["n"] = n;
    input["h_gamma"] = h_gamma ? to_json(*h_gamma) : Json(nullptr);
    const Json env = envelope("report", std::move(input), std::move(result), std::move(warnings));
    print_json(out(), env);
    return kExitOk;
  }

  // enumerate --------------------------------------------------------------
  int enumerate_cmd(const std::string& lo_text, const std::string& hi_text, const std::string& form_text,
                    bool jsonl, std::optional<std::string> from_text, int workers) {
    const std::uint64_t lo = parse_u64(lo_text, "lo");
    const std::uint64_t hi = parse_u64(hi_text, "hi");
    if (lo < 2 || lo > hi) {
      throw Error(ErrorCode::RangeInvalid, "need 2 <= lo <= hi, got [" + lo_text + ", " + hi_text + "]");
    }
    if (workers < 1) throw Error(ErrorCode::InvalidArgument, "--workers must be at least 1");
    if (jsonl && flags.csv) throw Error(ErrorCode::InvalidArgument, "--jsonl and --csv are mutually exclusive");

    std::optional<Verdict> filter;
    bool any_form = false;
    if (form_text == "any") {
      any_form = true;
    } else if (form_text != "all") {
      filter = parse_verdict(form_text);
      if (!filter) throw Error(ErrorCode::InvalidArgument, "unknown form '" + form_text + "'");
    }

    std::uint64_t start = lo;
    if (from_text) {
      const std::uint64_t from = parse_u64(*from_text, "--from");
      if (from > hi + 1 || from < lo) {
        throw Error(ErrorCode::RangeInvalid, "--from must lie in [lo, hi + 1]");
      }
      start = from;
    }

    constexpr std::uint64_t kChunk = 1 << 16;
    bool header_written = false;
    std::uint64_t emitted = 0;
    for (std::uint64_t a = start; a <= hi;) {
      const std::uint64_t b = std::min(hi, a + kChunk - 1);
      auto batch = workers == 1 ? enumerate_serial(a, b, filter) : enumerate_parallel(a, b, filter, workers);
      for (const auto& [n, form] : batch) {
        if (any_form && form.verdict == Verdict::None) continue;
        if (flags.csv) {
          if (!header_written) {
            out() << csv_header(form) << "\n";
            header_written = true;
          }
          out() << csv_row(form) << "\n";
        } else {
          out() << envelope("enumerate", Json{{"n", n}}, to_json(form), {}).dump() << "\n";
        }
        ++emitted;
      }
      if (b == hi) break;
      a = b + 1;
    }
    out().flush();
    info("# emitted " + std::to_string(emitted) + " radicands from [" + std::to_string(start) + ", " +
         std::to_string(hi) + "]");
    return kExitOk;
  }

  // selftest ---------------------------------------------------------------
  int selftest_cmd(const SelftestOptions& options) {
    const auto results = run_selftest(options);
    std::vector<std::string> failed;
    Json suites = Json::array();
    for (const auto& r : results) {
      if (r.failures > 0) failed.push_back(r.name);
      if (flags.json) {
        Json s;
        s["suite"] = r.name;
        s["checks"] = r.checks;
        s["failures"] = r.failures;
        s["notes"] = r.notes;
        suites.push_back(std::move(s));
        continue;
      }
      out() << "suite " << r.name << ": " << r.checks << " checks, " << r.failures << " failures "
            << (r.failures == 0 ? "PASS" : "FAIL") << "\n";
      if (!flags.quiet) {
        for (const auto& note : r.notes) out() << "    " << note << "\n";
      }
    }
    if (flags.json) {
      Json input;
      input["suite"] = options.suite ? Json(*options.suite) : Json(nullptr);
      input["inject_fault"] = options.inject_fault ? Json(*options.inject_fault) : Json(nullptr);
      Json result;
      result["suites"] = std::move(suites);
      result["failed"] = failed;
      print_json(out(), envelope("selftest", std::move(input), std::move(result), {}));
    }
    if (!failed.empty()) {
      std::string names;
      for (const auto& f : failed) names += (names.empty() ? "" : ", ") + f;
      err_ << "selftest failed: " << names << "\n";
      return kExitInternal;
    }
    if (!flags.json) out() << "selftest passed\n";
    return kExitOk;
  }

 private:
  std::ostream* out_;
  std::ostream& err_;
  std::ofstream file_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arithmetic of pure quintic fields Q(n^(1/5)) with a (5,5) 5-class group", "quintic"};
  app.require_subcommand(1);
  Runner runner(out, err);
  GlobalFlags& g = runner.flags;
  app.add_flag("--json", g.json, "JSON output");
  app.add_flag("--csv", g.csv, "CSV output where supported");
  app.add_option("--out", g.out_path, "write output to FILE");
  app.add_flag("--quiet", g.quiet, "suppress informational text");

  std::string n_text, a_text, p_text, lo_text, hi_text;
  std::optional<std::string> h_gamma, table, from;
  int assumed_rank = 1;
  std::string form_text = "any";
  bool jsonl = false;
  int workers = 1;
  SelftestOptions st;
  std::string suite, fault;

  auto* classify_app = app.add_subcommand("classify", "classify a radicand into Forms I/II/III");
  classify_app->add_option("n", n_text, "radicand")->required();
  auto* factor_app = app.add_subcommand("factor", "factor n over Z[zeta_5]");
  factor_app->add_option("n", n_text, "radicand")->required();
  auto* symbol_app = app.add_subcommand("symbol", "quintic residue symbols at the primes above p");
  symbol_app->add_option("a", a_text, "integer or a0,a1,a2,a3")->required();
  symbol_app->add_option("p", p_text, "rational prime")->required();
  auto* genus_app = app.add_subcommand("genus", "absolute and relative genus data");
  genus_app->add_option("n", n_text, "radicand")->required();
  genus_app->add_option("--assumed-rank", assumed_rank, "assumed rank of the ambiguous class group");
  auto* report_app = app.add_subcommand("report", "full pipeline report as JSON");
  report_app->add_option("n", n_text, "radicand")->required();
  report_app->add_option("--h-gamma", h_gamma, "class number of Q(n^(1/5))");
  report_app->add_option("--table", table, "CSV file with n,h_gamma rows");
  auto* enumerate_app = app.add_subcommand("enumerate", "classify every radicand in [lo, hi]");
  enumerate_app->add_option("lo", lo_text, "lower bound")->required();
  enumerate_app->add_option("hi", hi_text, "upper bound")->required();
  enumerate_app->add_option("--form", form_text, "I, II, III, None, any (default) or all");
  enumerate_app->add_flag("--jsonl", jsonl, "one JSON envelope per line (default)");
  enumerate_app->add_option("--from", from, "resume at this n");
  enumerate_app->add_option("--workers", workers, "worker threads");
  auto* selftest_app = app.add_subcommand("selftest", "run the oracle and invariant suites");
  selftest_app->add_option("--suite", suite, "run one suite");
  selftest_app->add_option("--inject-fault", fault, "perturb one suite to prove it can fail");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: InvalidArgument: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (g.json && g.csv) throw Error(ErrorCode::InvalidArgument, "--json and --csv are mutually exclusive");
    runner.open_output();
    if (*classify_app) return runner.classify_cmd(n_text);
    if (*factor_app) return runner.factor_cmd(n_text);
    if (*symbol_app) return runner.symbol_cmd(a_text, p_text);
    if (*genus_app) return runner.genus_cmd(n_text, assumed_rank);
    if (*report_app) return runner.report_cmd(n_text, h_gamma, table);
    if (*enumerate_app) return runner.enumerate_cmd(lo_text, hi_text, form_text, jsonl, from, workers);
    if (*selftest_app) {
      if (!suite.empty()) st.suite = suite;
      if (!fault.empty()) st.inject_fault = fault;
      return runner.selftest_cmd(st);
    }
  } catch (const Error& e) {
    err << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    if (g.json) {
      Json j;
      j["tool_version"] = kToolVersion;
      j["error"] = error_json(e);
      out << j.dump(2) << "\n";
    }
    return e.code() == ErrorCode::InternalInvariant ? kExitInternal : kExitInput;
  } catch (const std::exception& e) {
    err << "error: InternalInvariant: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}

}  // namespace quintic
