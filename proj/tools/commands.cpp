#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <thread>

#include "cli.hpp"
#include "ptb/euler.hpp"
#include "ptb/tracefield.hpp"

namespace ptb::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Globals {
  bool json = false;
  long precision_bits = 128;
  int growth_depth = 12;
  int jobs = 1;
  bool no_verdict = false;
};

AnalysisOptions analysis_options(const Globals& g) {
  AnalysisOptions opt;
  opt.identify.precision_bits = g.precision_bits;
  opt.identify.growth_depth = g.growth_depth;
  return opt;
}

// ---- cache

class ReportCache {
 public:
  explicit ReportCache(const Globals& g) {
    const char* root = std::getenv("PTB_CACHE_DIR");
    if (!root || !*root) return;
    dir_ = fs::path(root) / (std::string(kEngineVersion) + "-p" + std::to_string(g.precision_bits) + "-g" +
                             std::to_string(g.growth_depth));
    std::error_code ec;
    fs::create_directories(*dir_, ec);
    if (ec) dir_.reset();
  }

  bool lookup(const MonodromyWord& w, std::vector<TraceFieldReport>& out) const {
    if (!dir_) return false;
    std::ifstream in(file_for(w));
    if (!in) return false;
    try {
      const json j = json::parse(in);
      if (j.at("engine") != kEngineVersion || j.at("word") != format_word(w)) return false;
      std::vector<TraceFieldReport> reports;
      for (const auto& r : j.at("reports")) reports.push_back(report_from_json(r));
      if (reports.empty()) return false;
      out = std::move(reports);
      return true;
    } catch (const std::exception&) {
      return false;
    }
  }

  void store(const MonodromyWord& w, const std::vector<TraceFieldReport>& reports) const {
    if (!dir_) return;
    json j{{"engine", kEngineVersion}, {"word", format_word(w)}, {"reports", json::array()}};
    for (const auto& r : reports) j["reports"].push_back(to_json(r));
    const fs::path target = file_for(w);
    std::ostringstream tag;
    tag << std::this_thread::get_id();
    const fs::path tmp = target.string() + ".tmp." + tag.str();
    {
      std::ofstream o(tmp);
      if (!o) return;
      o << j.dump() << '\n';
      if (!o) return;
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) fs::remove(tmp, ec);
  }

  SweepCache hooks() const {
    if (!dir_) return {};
    return {[this](const MonodromyWord& w, std::vector<TraceFieldReport>& r) { return lookup(w, r); },
            [this](const MonodromyWord& w, const std::vector<TraceFieldReport>& r) { store(w, r); }};
  }

 private:
  fs::path file_for(const MonodromyWord& w) const { return *dir_ / (format_word(w) + ".json"); }
  std::optional<fs::path> dir_;
};

// ---- rendering

std::string signature_text(const NumberFieldSignature& s) {
  return "degree " + std::to_string(s.degree) + ", r1 = " + std::to_string(s.r1) + ", r2 = " + std::to_string(s.r2);
}

void print_report(const TraceFieldReport& r, std::ostream& out) {
  const IntMatrix2 m = word_matrix(r.word);
  out << "word      " << format_word(r.word) << '\n';
  out << "matrix    [[" << m(0, 0) << ", " << m(0, 1) << "], [" << m(1, 0) << ", " << m(1, 1) << "]]  trace "
      << trace(m) << '\n';
  out << "H1        " << format_group(r.h1) << '\n';
  out << "K         " << format_poly(r.K_minpoly) << "  (" << signature_text(r.K_signature) << ")\n";
  out << "k         " << format_poly(r.k_minpoly) << "  (" << signature_text(r.k_signature) << ")\n";
  out << "[K:k]     " << (r.index_log2 >= 0 ? "2^" + std::to_string(r.index_log2) : std::string("not a power of 2"))
      << '\n';
  out << "lift      sign class " << format_sign_class(r.sign_class) << '\n';
  out << "part 1    " << (r.part1_ok ? "ok, K has no real place" : "FAILED, K has a real place") << '\n';
  out << "part 2    ";
  if (!r.part2_ok) {
    out << "FAILED, k has a real place and H1 has no 2-torsion\n";
  } else if (r.k_signature.r1 == 0) {
    out << "ok, k has no real place\n";
  } else {
    out << "ok, k has a real place and H1 has 2-torsion\n";
  }
  if (r.ambiguous) out << "note      geometric character ambiguous; this is one of several candidates\n";
}

// ---- analyze

int cmd_analyze(const std::string& text, const Globals& g, std::ostream& out, std::ostream& err) {
  MonodromyWord w;
  try {
    w = parse_word(text);
  } catch (const WordParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  if (!is_hyperbolic(w)) {
    err << "error: " << format_word(w) << " is not hyperbolic (|trace| <= 2)\n";
    return 2;
  }
  std::vector<TraceFieldReport> reports;
  const ReportCache cache(g);
  if (!cache.lookup(w, reports)) {
    try {
      reports = theorem_a_reports(w, analysis_options(g));
    } catch (const BudgetError& e) {
      err << "error: " << e.what() << '\n';
      return 3;
    } catch (const NotHyperbolicError& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return 1;
    }
    cache.store(w, reports);
  }
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (g.json) {
      out << to_json(reports[i]).dump() << '\n';
    } else {
      if (reports.size() > 1) out << "candidate " << i + 1 << " of " << reports.size() << '\n';
      print_report(reports[i], out);
    }
  }
  if (reports.front().ambiguous) {
    err << "ambiguous: " << reports.size() << " inequivalent candidates pass the geometric tests\n";
    return 4;
  }
  if (g.no_verdict) return 0;
  return (reports.front().part1_ok && reports.front().part2_ok) ? 0 : 1;
}

// ---- sweep

int cmd_sweep(long bound, const std::string& out_path, const Globals& g, std::ostream& out, std::ostream& err) {
  if (bound < 2) {
    err << "error: --max-exponent must be at least 2\n";
    return 2;
  }
  const ReportCache cache(g);
  const SweepResult res = sweep(bound, g.jobs, analysis_options(g), cache.hooks());
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "error: cannot write " << out_path << '\n';
      return 2;
    }
  }
  std::ostream& records = out_path.empty() ? out : file;
  std::ostream& summary = out_path.empty() ? err : out;
  long even = 0, index_ok = 0;
  for (const auto& r : res.reports) {
    records << to_json(r).dump() << '\n';
    even += r.K_minpoly.degree() % 2 == 0;
    index_ok += r.index_log2 >= 0;
  }
  const std::size_t n = res.reports.size();
  summary << std::left << std::setw(22) << "records" << n << '\n'
          << std::setw(22) << "part 1 ok" << res.part1_ok << '\n'
          << std::setw(22) << "part 2 ok" << res.part2_ok << '\n'
          << std::setw(22) << "even deg K" << even << '\n'
          << std::setw(22) << "[K:k] power of 2" << index_ok << '\n'
          << std::setw(22) << "ambiguous" << res.ambiguous << '\n'
          << std::setw(22) << "failures" << res.failures.size() << '\n';
  for (const auto& f : res.failures) err << "failed: " << f.word << ": " << f.message << '\n';
  if (!res.all_ok()) {
    for (const auto& r : res.reports) {
      if (!(r.part1_ok && r.part2_ok && r.K_minpoly.degree() % 2 == 0 && r.index_log2 >= 0)) {
        err << "failed: " << format_word(r.word) << " does not satisfy the verdict\n";
      }
    }
    return 1;
  }
  return 0;
}

// ---- verify-paper

const char* const kFixture = R"({
  "records": [
    {"id": "m039", "word": "RL4", "expected_torsion": ["4"], "expected_k_poly": ["1", "1", "-1", "1"],
     "source": "census manifold m039, torus bundle with monodromy RL^4; k has minimal polynomial x^3 - x^2 + x + 1"},
    {"id": "m040", "word": "-RL4", "expected_torsion": ["8"], "expected_k_poly": ["1", "1", "-1", "1"],
     "source": "census manifold m040, torus bundle with monodromy -RL^4; same k as m039"},
    {"id": "v2231", "word": "RL2RL3", "expected_torsion": ["16"],
     "expected_k_poly": ["-2", "4", "-2", "-2", "0", "-3", "0", "1"],
     "source": "census manifold v2231, torus bundle with monodromy RL^2RL^3; k has minimal polynomial x^7 - 3x^5 - 2x^3 - 2x^2 + 4x - 2"},
    {"id": "button", "word": "-R4L2", "expected_torsion": ["2", "6"], "expected_k_degree": 3, "expected_K_degree": 12,
     "source": "Button's example, monodromy -R^4L^2: trace field of degree 12, invariant trace field of degree 3"},
    {"id": "quintic", "polynomial": ["1", "-2", "2", "1", "-1", "1"], "expected_min_r1": 1,
     "source": "x^5 - x^4 + x^3 + 2x^2 - 2x + 1 has odd degree, hence a real place"},
    {"id": "cubic", "polynomial": ["-2", "3", "-1", "1"], "expected_min_r1": 1,
     "source": "x^3 - x^2 + 3x - 2 has a real place"}
  ]
})";

struct Row {
  std::string id, check, expected, computed;
  bool pass = false;
  std::string source;
};

std::string torsion_text(const std::vector<BigInt>& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + t[i].get_str();
  return s + "]";
}

std::vector<Row> run_record(const json& rec, const Globals& g) {
  std::vector<Row> rows;
  const std::string id = rec.at("id").get<std::string>();
  const std::string source = rec.value("source", "");
  if (rec.contains("polynomial")) {
    const UniPoly f = poly_from_json(rec.at("polynomial"));
    const NumberFieldSignature s = signature_of_poly(f);
    const int want = rec.at("expected_min_r1").get<int>();
    rows.push_back({id, "r1 of " + format_poly(f), ">= " + std::to_string(want), std::to_string(s.r1), s.r1 >= want,
                    source});
    return rows;
  }
  const MonodromyWord w = parse_word(rec.at("word").get<std::string>());
  const TraceFieldReport r = theorem_a_verdict(w, analysis_options(g));
  std::vector<BigInt> want_t;
  for (const auto& t : rec.at("expected_torsion")) want_t.emplace_back(t.get<std::string>());
  rows.push_back({id, format_word(w) + " torsion", torsion_text(want_t), torsion_text(r.h1.torsion),
                  r.h1.torsion == want_t, source});
  if (rec.contains("expected_k_poly")) {
    const UniPoly k = poly_from_json(rec.at("expected_k_poly"));
    rows.push_back({id, format_word(w) + " k", "Q[x]/(" + format_poly(k) + ")", format_poly(r.k_minpoly),
                    fields_isomorphic(r.k_minpoly, k), source});
  }
  if (rec.contains("expected_k_degree")) {
    const int d = rec.at("expected_k_degree").get<int>();
    rows.push_back({id, format_word(w) + " deg k", std::to_string(d), std::to_string(r.k_minpoly.degree()),
                    r.k_minpoly.degree() == d, source});
  }
  if (rec.contains("expected_K_degree")) {
    const int d = rec.at("expected_K_degree").get<int>();
    rows.push_back({id, format_word(w) + " deg K", std::to_string(d), std::to_string(r.K_minpoly.degree()),
                    r.K_minpoly.degree() == d, source});
  }
  return rows;
}

int cmd_verify_paper(const std::string& fixture_path, const std::vector<std::string>& only, const Globals& g,
                     std::ostream& out, std::ostream& err) {
  json fixture;
  try {
    if (fixture_path.empty()) {
      fixture = json::parse(embedded_fixture());
    } else {
      std::ifstream in(fixture_path);
      if (!in) throw std::runtime_error("cannot read " + fixture_path);
      fixture = json::parse(in);
    }
    for (const auto& rec : fixture.at("records")) {
      rec.at("id").get<std::string>();
      if (!rec.contains("polynomial") && !rec.contains("word")) throw std::runtime_error("record without word");
    }
  } catch (const std::exception& e) {
    err << "error: bad fixture: " << e.what() << '\n';
    return 2;
  }
  std::vector<Row> rows;
  bool matched = false;
  for (const auto& rec : fixture.at("records")) {
    const std::string id = rec.at("id").get<std::string>();
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    matched = true;
    try {
      for (auto& r : run_record(rec, g)) rows.push_back(std::move(r));
    } catch (const json::exception& e) {
      err << "error: bad fixture record " << id << ": " << e.what() << '\n';
      return 2;
    } catch (const std::exception& e) {
      rows.push_back({id, "evaluation", "-", std::string("error: ") + e.what(), false, rec.value("source", "")});
    }
  }
  if (!matched) {
    err << "error: no fixture record matches --only\n";
    return 2;
  }
  bool all = true;
  json jrows = json::array();
  std::size_t w_id = 2, w_check = 5, w_exp = 8, w_comp = 8;
  for (const auto& r : rows) {
    w_id = std::max(w_id, r.id.size());
    w_check = std::max(w_check, r.check.size());
    w_exp = std::max(w_exp, r.expected.size());
    w_comp = std::max(w_comp, r.computed.size());
  }
  auto line = [&](const std::string& a, const std::string& b, const std::string& c, const std::string& d,
                  const std::string& e) {
    out << std::left << std::setw(static_cast<int>(w_id + 2)) << a << std::setw(static_cast<int>(w_check + 2)) << b
        << std::setw(static_cast<int>(w_exp + 2)) << c << std::setw(static_cast<int>(w_comp + 2)) << d << e << '\n';
  };
  if (!g.json) line("id", "check", "expected", "computed", "result");
  for (const auto& r : rows) {
    all = all && r.pass;
    if (g.json) {
      jrows.push_back({{"id", r.id},
                       {"check", r.check},
                       {"expected", r.expected},
                       {"computed", r.computed},
                       {"pass", r.pass},
                       {"source", r.source}});
    } else {
      line(r.id, r.check, r.expected, r.computed, r.pass ? "PASS" : "FAIL");
    }
  }
  if (g.json) out << jrows.dump() << '\n';
  for (const auto& r : rows) {
    if (!r.pass) err << "mismatch in " << r.id << " (" << r.source << "): " << r.check << " computed " << r.computed << '\n';
  }
  return all ? 0 : 1;
}

// ---- euler

int cmd_euler(const std::string& text, const Globals& g, std::ostream& out, std::ostream& err) {
  RealCharacter c;
  try {
    c = parse_real_character(text);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  EulerResult r;
  try {
    r = relative_euler_class(c);
  } catch (const EulerPreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ReducibleCharacterError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const EllipticCharacterError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  std::optional<MilnorWoodVerdict> v;
  if (!r.degenerate) v = milnor_wood_parity_check(r);
  if (g.json) {
    json j{{"character", c.str()}, {"s1", r.s1}, {"s2", r.s2}, {"degenerate", r.degenerate}, {"chi", r.chi}};
    j["e"] = r.e ? json(*r.e) : json(nullptr);
    if (v) {
      j["mw_ok"] = v->mw_ok;
      j["parity_odd"] = v->parity_odd;
    }
    out << j.dump() << '\n';
  } else {
    out << "character  " << c.str() << '\n';
    out << "signs      s1 = " << r.s1 << ", s2 = " << r.s2 << '\n';
    if (r.e) {
      out << "euler      e = " << *r.e << "  (chi = " << r.chi << ")\n";
      out << "milnor     |e| <= -chi: " << (v->mw_ok ? "yes" : "NO") << '\n';
      out << "parity     " << (v->parity_odd ? "odd" : "even") << '\n';
    } else {
      out << "euler      undefined, degenerate development\n";
    }
  }
  return r.degenerate ? 3 : 0;
}

// ---- field

int cmd_field(const std::string& coeffs, const Globals& g, std::ostream& out, std::ostream& err) {
  UniPoly f;
  try {
    std::vector<std::string> parts;
    std::stringstream ss(coeffs);
    for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
    f = from_coeff_strings(parts);
    if (f.degree() < 1) throw std::invalid_argument("polynomial must have positive degree");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  NumberFieldSignature s;
  try {
    s = signature_of_poly(f);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  if (g.json) {
    out << json{{"minpoly", poly_to_json(f)}, {"degree", s.degree}, {"r1", s.r1}, {"r2", s.r2}}.dump() << '\n';
  } else {
    out << format_poly(f) << "  (" << signature_text(s) << ")\n";
  }
  return 0;
}

// Values such as "-RL4" or "-2,3,1" would otherwise be read as clusters of
// short flags.
std::vector<std::string> protect_negative_values(std::vector<std::string> args) {
  static const std::regex signed_word("^-[RL][RL0-9]*$");
  static const std::regex numbers("^-[0-9][0-9/,.;:a-z-]*$");
  std::size_t start = 0;
  while (start < args.size() && args[start] != "analyze" && args[start] != "field" && args[start] != "euler") ++start;
  if (start == args.size()) return args;
  const std::string cmd = args[start];
  for (std::size_t i = start + 1; i < args.size(); ++i) {
    if (cmd == "analyze" && std::regex_match(args[i], signed_word)) {
      args[i] = "--word=" + args[i];
    } else if (cmd == "field" && std::regex_match(args[i], numbers)) {
      args[i] = "--coefficients=" + args[i];
    } else if (cmd == "euler" && args[i] == "--character" && i + 1 < args.size()) {
      args[i] = "--character=" + args[i + 1];
      args.erase(args.begin() + static_cast<long>(i) + 1);
    }
  }
  return args;
}

}  // namespace

const std::string& embedded_fixture() {
  static const std::string s = kFixture;
  return s;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Globals g;
  CLI::App app{"Trace fields and Euler classes of punctured-torus bundles", "ptb"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", g.json, "Emit JSON");
  app.add_option("--precision-bits", g.precision_bits, "Starting precision for complex roots")
      ->check(CLI::Range(32L, 1L << 16));
  app.add_option("--growth-depth", g.growth_depth, "Depth of the primitive-trace growth test")->check(CLI::Range(2, 40));
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1, 1024));
  app.add_flag("--no-verdict", g.no_verdict, "Exit 0 whatever the verdict");

  std::string word;
  auto* analyze = app.add_subcommand("analyze", "Trace fields, homology and verdict for one monodromy word");
  analyze->add_option("word,--word", word, "Monodromy word such as RL4 or -R4L2")->required();

  long bound = 0;
  std::string out_path;
  auto* sweep_cmd = app.add_subcommand("sweep", "Verdicts for every hyperbolic word up to a total exponent");
  sweep_cmd->add_option("--max-exponent", bound, "Bound on the total exponent")->required();
  sweep_cmd->add_option("--out", out_path, "Write line-delimited JSON records here");

  std::string fixture_path;
  std::vector<std::string> only;
  auto* verify = app.add_subcommand("verify-paper", "Check the built-in regression fixture");
  verify->add_option("--fixture", fixture_path, "Use this fixture file instead of the built-in one");
  verify->add_option("--only", only, "Run only these record ids");

  std::string character;
  auto* euler = app.add_subcommand("euler", "Relative Euler class of a real character");
  euler->add_option("--character", character, "x,y,z with p/q or algebraic:c0;c1;...:lo:hi coordinates")->required();

  std::string coeffs;
  auto* field = app.add_subcommand("field", "Signature of the number field of an irreducible polynomial");
  field->add_option("coefficients,--coefficients", coeffs, "Comma-separated coefficients, lowest degree first")->required();

  const std::vector<std::string> args = protect_negative_values(raw_args);
  std::vector<const char*> argv{"ptb"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (*analyze) return cmd_analyze(word, g, out, err);
  if (*sweep_cmd) return cmd_sweep(bound, out_path, g, out, err);
  if (*verify) return cmd_verify_paper(fixture_path, only, g, out, err);
  if (*euler) return cmd_euler(character, g, out, err);
  if (*field) return cmd_field(coeffs, g, out, err);
  return 2;
}

}  // namespace ptb::cli
