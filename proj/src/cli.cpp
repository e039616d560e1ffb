#include "ringforge/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ringforge/classify.hpp"
#include "ringforge/construction_a.hpp"
#include "ringforge/counting.hpp"
#include "ringforge/iso.hpp"
#include "ringforge/json_io.hpp"

namespace ringforge {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  unsigned p = 0;
  unsigned r = 1;
  std::size_t s = 0;
  std::size_t t = 0;
  std::string format = "json";
  unsigned workers = 1;
  std::optional<std::uint64_t> budget;
};

std::uint64_t resolve_budget(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("RINGFORGE_BUDGET")) {
    try {
      std::size_t used = 0;
      const std::string text(env);
      const unsigned long long v = std::stoull(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return v;
    } catch (const std::exception&) {
      throw UsageError("RINGFORGE_BUDGET must be a non-negative integer");
    }
  }
  return kDefaultBudget;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

std::string matrix_text(const Mat& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.n; ++i) {
    if (i > 0) os << "; ";
    for (std::size_t j = 0; j < m.n; ++j) os << (j > 0 ? " " : "") << m(i, j);
  }
  os << ']';
  return os.str();
}

std::string verify_text(const VerifySuiteResult& res, bool timings) {
  std::size_t wn = 4, we = 8, wm = 8;
  for (const auto& c : res.checks) {
    wn = std::max(wn, c.name.size());
    we = std::max(we, c.expected.size());
    wm = std::max(wm, c.measured.size());
  }
  std::ostringstream os;
  os << std::left << std::setw(8) << "status" << std::setw(static_cast<int>(wn) + 2) << "check"
     << std::setw(static_cast<int>(we) + 2) << "expected" << std::setw(static_cast<int>(wm) + 2) << "measured";
  if (timings) os << std::setw(10) << "seconds";
  os << "source\n";
  for (const auto& c : res.checks) {
    std::string status = to_string(c.status);
    for (auto& ch : status) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    os << std::setw(8) << status << std::setw(static_cast<int>(wn) + 2) << c.name
       << std::setw(static_cast<int>(we) + 2) << c.expected << std::setw(static_cast<int>(wm) + 2)
       << (c.status == CheckStatus::skipped ? "-" : c.measured);
    if (timings) {
      std::ostringstream t;
      t << std::fixed << std::setprecision(3) << c.runtime_s;
      os << std::setw(10) << t.str();
    }
    os << c.source << '\n';
  }
  os << res.count(CheckStatus::pass) << " passed, " << res.count(CheckStatus::fail) << " failed, "
     << res.count(CheckStatus::skipped) << " skipped\n";
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::BudgetExceeded:
    case ErrorCode::TooLargeForExhaustive:
      return 1;
    default:
      return 2;
  }
}

void add_field_options(CLI::App* cmd, Common& c, bool with_t) {
  cmd->add_option("--p", c.p, "Characteristic")->required();
  cmd->add_option("--r", c.r, "Degree of the field over F_p")->default_val(1);
  cmd->add_option("--s", c.s, "Dimension of U")->required();
  if (with_t) cmd->add_option("--t", c.t, "Dimension of W")->required();
}

void add_run_options(CLI::App* cmd, Common& c) {
  cmd->add_option("--workers", c.workers, "Worker threads")->default_val(1)->check(CLI::Range(1u, 256u));
  cmd->add_option("--budget", c.budget, "Maximum estimated group actions");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run_command(args, out, err, default_checks());
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                const std::vector<Check>& checks) {
  CLI::App app{"Classification of Construction-A rings of characteristic p", "ringforge"};
  app.require_subcommand(1);
  Common c;

  auto* classify = app.add_subcommand("classify", "Equivalence classes of t-dimensional matrix subspaces");
  add_field_options(classify, c, true);
  add_run_options(classify, c);
  bool no_frobenius = false, filter_compatible = false, symmetric_only = false;
  std::string strategy = "auto";
  classify->add_flag("--no-frobenius", no_frobenius, "Act by GL(s,F) only");
  classify->add_flag("--filter-compatible", filter_compatible, "Keep only classes with a compatible member");
  classify->add_option("--strategy", strategy, "Orbit strategy")->check(CLI::IsMember({"auto", "sweep", "bfs"}));
  classify->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  auto* congruence = app.add_subcommand("congruence", "Congruence classes of s x s matrices");
  add_field_options(congruence, c, false);
  add_run_options(congruence, c);
  congruence->add_flag("--symmetric-only", symmetric_only, "Restrict to symmetric matrices");
  congruence->add_option("--strategy", strategy, "Orbit strategy")->check(CLI::IsMember({"auto", "sweep", "bfs"}));
  congruence->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  auto* count = app.add_subcommand("count", "Closed-form counts");
  std::string kind;
  long long cq = 0, cp = 0, cr = 1, cs = 0, ct = 0, clambda = 0;
  count->add_option("--kind", kind, "Count kind")
      ->required()
      ->check(CLI::IsMember({"s1", "t_eq_s2", "waterhouse", "nc_symmetric", "prediction"}));
  count->add_option("--q", cq, "Field order");
  count->add_option("--p", cp, "Characteristic");
  count->add_option("--r", cr, "Field degree")->default_val(1);
  count->add_option("--s", cs, "Dimension of U");
  count->add_option("--t", ct, "Dimension of W");
  count->add_option("--lambda", clambda, "Dimension of V")->default_val(0);
  count->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  auto* iso = app.add_subcommand("iso", "Isomorphism test between two ring specs");
  std::string left, right, mode = "central";
  std::uint64_t seed = 42;
  bool check_witness = false;
  iso->add_option("--left", left, "Ring spec JSON file")->required();
  iso->add_option("--right", right, "Ring spec JSON file")->required();
  iso->add_option("--mode", mode, "Test mode")
      ->check(CLI::IsMember({"central", "global_twist", "s1t1", "row_twisted"}));
  iso->add_option("--workers", c.workers, "Worker threads")->default_val(1)->check(CLI::Range(1u, 256u));
  iso->add_option("--seed", seed, "Sampling seed for witness verification")->default_val(42);
  iso->add_flag("--check", check_witness, "Verify the witness as an explicit ring isomorphism");

  auto* ring = app.add_subcommand("ring", "Build a ring, check axioms and report its structure");
  std::string spec_path, axioms = "auto";
  std::uint64_t samples = 100000;
  bool table = false;
  ring->add_option("--spec", spec_path, "Ring spec JSON file")->required();
  ring->add_option("--axioms", axioms, "Axiom check mode")
      ->check(CLI::IsMember({"auto", "exhaustive", "sampled", "none"}));
  ring->add_option("--seed", seed, "Sampling seed")->default_val(42);
  ring->add_option("--samples", samples, "Sampled triples")->default_val(100000);
  ring->add_flag("--table", table, "Export the multiplication table (|R| <= 4096)");
  ring->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  auto* reps = app.add_subcommand("reps", "Congruence class representative lists");
  std::string reps_kind = "case";
  add_field_options(reps, c, false);
  reps->add_option("--kind", reps_kind, "List kind")->check(CLI::IsMember({"case", "symmetric"}));
  reps->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));

  auto* verify = app.add_subcommand("verify", "Reproduce the published counts");
  std::string scope = "fast";
  bool timings = false;
  std::string verify_format = "text";
  verify->add_option("--scope", scope, "fast or full")->check(CLI::IsMember({"fast", "full"}));
  verify->add_option("--format", verify_format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  verify->add_flag("--timings", timings, "Include per-check runtimes");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  std::ostringstream buf;
  int code = 0;
  try {
    if (*classify || *congruence) {
      const FiniteField f = FiniteField::create(c.p, c.r);
      ClassifyOptions opts;
      opts.use_frobenius = !no_frobenius;
      opts.filter_compatible = filter_compatible;
      opts.symmetric_only = symmetric_only;
      opts.workers = c.workers;
      opts.budget = resolve_budget(c.budget);
      opts.strategy = strategy == "sweep" ? Strategy::sweep : strategy == "bfs" ? Strategy::bfs : Strategy::automatic;
      const ClassReport report = *classify ? classify_subspaces(f, c.s, c.t, opts) : classify_congruence(f, c.s, opts);
      if (c.format == "csv") {
        buf << to_csv(report);
      } else {
        buf << to_json(report).dump(2) << '\n';
      }
    } else if (*count) {
      auto need = [&](const char* flag) {
        if (count->count(flag) == 0) throw UsageError(std::string("count --kind ") + kind + " requires " + flag);
      };
      json params;
      BigInt value;
      std::string status = "exact";
      std::optional<Prediction> prediction;
      if (kind == "s1") {
        params = {{"r", cr}, {"lambda", clambda}};
        value = count_case_s1(cr, clambda);
      } else if (kind == "t_eq_s2") {
        need("--s");
        params = {{"r", cr}, {"s", cs}, {"lambda", clambda}};
        value = count_case_t_s2(cr, cs, clambda);
      } else if (kind == "waterhouse") {
        need("--q");
        need("--s");
        if (cq < 2) throw Error(ErrorCode::RangeError, "q must be a prime power");
        params = {{"q", cq}, {"s", cs}};
        value = waterhouse_count(static_cast<std::uint64_t>(cq), cs);
      } else if (kind == "nc_symmetric") {
        need("--s");
        params = {{"s", cs}};
        value = nc_symmetric(cs);
      } else {
        need("--p");
        need("--s");
        need("--t");
        if (cp < 2) throw Error(ErrorCode::NonPrimeP, "p must be prime");
        params = {{"p", cp}, {"r", cr}, {"s", cs}, {"t", ct}, {"lambda", clambda}};
        prediction = paper_predictions(static_cast<std::uint64_t>(cp), cr, cs, ct, clambda);
        value = prediction->value;
        status = to_string(prediction->status);
      }
      if (c.format == "csv") {
        buf << "kind,value,status\n" << kind << ',' << value.str() << ',' << status << '\n';
      } else {
        json doc = {{"kind", kind}, {"params", params}, {"value", big_to_json(value)}, {"status", status}};
        if (prediction) {
          doc["source"] = prediction->source;
          if (prediction->commutative) doc["commutative"] = big_to_json(*prediction->commutative);
          if (prediction->measured) doc["measured"] = big_to_json(*prediction->measured);
        }
        buf << doc.dump(2) << '\n';
      }
    } else if (*iso) {
      const RingSpec a = ring_spec_from_json(read_json_file(left));
      const RingSpec d = ring_spec_from_json(read_json_file(right));
      const auto witness = iso_test(a, d, parse_iso_mode(mode), c.workers);
      json doc = {{"mode", mode}, {"isomorphic", witness.has_value()}};
      if (witness) {
        doc["witness"] = to_json(*witness);
        if (check_witness) {
          const WitnessCheck wc = verify_witness(Ring::create(a), Ring::create(d), *witness, seed);
          doc["witness_check"] = {{"ok", wc.ok}, {"exhaustive", wc.exhaustive}, {"failure", wc.failure}};
          if (!wc.ok) code = 1;
        }
      } else {
        doc["result"] = "not isomorphic";
      }
      buf << doc.dump(2) << '\n';
    } else if (*ring) {
      const Ring rg = Ring::create(ring_spec_from_json(read_json_file(spec_path)));
      std::optional<AxiomReport> ax;
      if (axioms != "none") {
        const auto order = rg.order();
        const bool small = order && *order <= 406;
        const bool exhaustive = axioms == "exhaustive" || (axioms == "auto" && small);
        ax = check_axioms(rg, exhaustive ? AxiomMode{ExhaustiveMode{}} : AxiomMode{SampledMode{seed, samples}});
        if (!ax->passed) code = 1;
      }
      const StructureReport st = ring_structure(rg);
      if (c.format == "csv") {
        if (table) {
          buf << multiplication_table_csv(rg);
        } else {
          buf << "key,value\n";
          for (const auto& [k, v] : to_json(st).items()) buf << k << ',' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
          if (ax) buf << "axioms_passed," << (ax->passed ? "true" : "false") << '\n';
        }
      } else {
        json doc = {{"spec", to_json(rg.spec())}, {"structure", to_json(st)}};
        doc["axioms"] = ax ? to_json(*ax) : json(nullptr);
        if (table) doc["table"] = multiplication_table_json(rg);
        buf << doc.dump(2) << '\n';
      }
    } else if (*reps) {
      const FiniteField f = FiniteField::create(c.p, c.r);
      const std::vector<Mat> list = reps_kind == "case" ? case_rep_list(f, c.s) : newman_symmetric_reps(f, c.s);
      if (c.format == "text") {
        for (const auto& m : list) buf << matrix_text(m) << '\n';
      } else if (c.format == "csv") {
        buf << "index,rank,symmetric,matrix\n";
        for (std::size_t i = 0; i < list.size(); ++i) {
          buf << i << ',' << linalg::rank(f, list[i]) << ',' << (list[i].is_symmetric() ? "true" : "false") << ','
              << matrix_text(list[i]) << '\n';
        }
      } else {
        json arr = json::array();
        for (const auto& m : list) arr.push_back(to_json(m));
        buf << json{{"p", f.p()}, {"r", f.r()}, {"s", c.s}, {"kind", reps_kind}, {"count", list.size()}, {"matrices", arr}}
                   .dump(2)
            << '\n';
      }
    } else if (*verify) {
      const VerifySuiteResult res = run_verify_suite(scope == "full" ? Scope::full : Scope::fast, checks);
      if (verify_format == "json") {
        json arr = json::array();
        for (const auto& ch : res.checks) {
          json j = {{"name", ch.name},
                    {"expected", ch.expected},
                    {"measured", ch.measured},
                    {"source", ch.source},
                    {"status", to_string(ch.status)}};
          if (timings) j["runtime_s"] = ch.runtime_s;
          arr.push_back(j);
        }
        buf << json{{"scope", scope}, {"checks", arr}, {"exit_code", res.exit_code}}.dump(2) << '\n';
      } else if (verify_format == "csv") {
        buf << "name,expected,measured,status,source" << (timings ? ",runtime_s" : "") << '\n';
        for (const auto& ch : res.checks) {
          buf << csv_field(ch.name) << ',' << csv_field(ch.expected) << ',' << csv_field(ch.measured) << ','
              << to_string(ch.status) << ',' << csv_field(ch.source);
          if (timings) buf << ',' << ch.runtime_s;
          buf << '\n';
        }
      } else {
        buf << verify_text(res, timings);
      }
      for (const auto& ch : res.checks) {
        if (ch.status == CheckStatus::fail) err << "FAILED: " << ch.name << " (expected " << ch.expected << ", measured " << ch.measured << ")\n";
      }
      code = res.exit_code;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  out << buf.str();
  return code;
}

}  // namespace ringforge
