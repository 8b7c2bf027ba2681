#include "ptb/tracefield.hpp"

#include <atomic>
#include <chrono>
#include <map>
#include <thread>

namespace ptb {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

UniPoly mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& f) { return (a * b) % f; }

UniPoly combination(const UniPoly& a, const UniPoly& b, const UniPoly& d, long c) {
  return a + b.scaled(BigRational(c)) + d.scaled(BigRational(c * c));
}

// Primitive element a + c b + c^2 d of the subfield generated by a, b, d.
UniPoly subfield_minpoly(const UniPoly& f, const UniPoly& a, const UniPoly& b, const UniPoly& d, int target) {
  for (long c = 0; c <= kMaxPrimitiveShift; ++c) {
    const UniPoly m = minpoly_in_quotient_unchecked(f, combination(a, b, d, c) % f);
    if (m.degree() == target) return m;
  }
  throw PrimitiveElementError("no primitive element x + c y + c^2 z with c <= " + std::to_string(kMaxPrimitiveShift));
}

struct Identified {
  std::vector<CharacterComponent> selected;
  bool ambiguous = false;
  double ms = 0;
};

Identified identify(const MonodromyWord& w, const AnalysisOptions& opt) {
  const auto t0 = Clock::now();
  const auto comps = solve_characters(w, opt.solve);
  GeometricSolution g = identify_geometric(comps, w, opt.identify);
  return {std::move(g.selected), g.ambiguous, ms_since(t0)};
}

int log2_exact(int q) {
  if (q <= 0 || (q & (q - 1)) != 0) return -1;
  int e = 0;
  while (q > 1) {
    q >>= 1;
    ++e;
  }
  return e;
}

}  // namespace

std::pair<UniPoly, NumberFieldSignature> trace_field(const CharacterComponent& comp) {
  const UniPoly& f = comp.factor;
  const UniPoly K = subfield_minpoly(f, comp.rur_x, comp.rur_y, comp.rur_z, f.degree());
  return {K, signature_of_poly(K)};
}

std::pair<UniPoly, NumberFieldSignature> trace_field(const MonodromyWord& w, const AnalysisOptions& opt) {
  const Identified id = identify(w, opt);
  return trace_field(id.selected.front());
}

std::pair<UniPoly, NumberFieldSignature> invariant_trace_field(const CharacterComponent& comp) {
  const UniPoly& f = comp.factor;
  const UniPoly a = mulmod(comp.rur_x, comp.rur_x, f);
  const UniPoly b = mulmod(comp.rur_y, comp.rur_y, f);
  const UniPoly d = mulmod(mulmod(comp.rur_x, comp.rur_y, f), comp.rur_z, f);
  const int dim = subalgebra_dimension(f, {a, b, d});
  if (dim == f.degree()) return trace_field(comp);
  const UniPoly k = subfield_minpoly(f, a, b, d, dim);
  return {k, signature_of_poly(k)};
}

TraceFieldReport report_for(const MonodromyWord& w, const CharacterComponent& comp, bool ambiguous) {
  const auto t0 = Clock::now();
  TraceFieldReport r;
  r.word = w;
  std::tie(r.K_minpoly, r.K_signature) = trace_field(comp);
  std::tie(r.k_minpoly, r.k_signature) = invariant_trace_field(comp);
  const int dK = r.K_minpoly.degree(), dk = r.k_minpoly.degree();
  r.index_log2 = (dK % dk == 0) ? log2_exact(dK / dk) : -1;
  r.h1 = h1_of_bundle(w);
  r.part1_ok = r.K_signature.r1 == 0;
  r.part2_ok = r.k_signature.r1 == 0 || has_two_torsion(r.h1);
  r.ambiguous = ambiguous;
  r.sign_class = comp.sign_class;
  r.runtime_ms = ms_since(t0);
  return r;
}

std::vector<TraceFieldReport> theorem_a_reports(const MonodromyWord& w, const AnalysisOptions& opt) {
  const Identified id = identify(w, opt);
  std::vector<TraceFieldReport> out;
  for (const auto& c : id.selected) {
    out.push_back(report_for(w, c, id.ambiguous));
    out.back().runtime_ms += id.ms;
  }
  return out;
}

TraceFieldReport theorem_a_verdict(const MonodromyWord& w, const AnalysisOptions& opt) {
  return theorem_a_reports(w, opt).front();
}

bool SweepResult::all_ok() const {
  if (!failures.empty()) return false;
  std::map<std::string, bool> good;
  for (const auto& r : reports) {
    const bool ok = r.part1_ok && r.part2_ok && r.K_minpoly.degree() % 2 == 0 && r.index_log2 >= 0;
    good[format_word(r.word)] |= ok;
  }
  for (const auto& [w, ok] : good) {
    if (!ok) return false;
  }
  return true;
}

SweepResult sweep(long max_total_exponent, int jobs, const AnalysisOptions& opt, const SweepCache& cache) {
  const std::vector<MonodromyWord> words = enumerate_words(max_total_exponent);
  struct Outcome {
    std::vector<TraceFieldReport> reports;
    std::string error;
    bool cached = false;
  };
  std::vector<Outcome> per_word(words.size());
  if (cache.lookup) {
    for (std::size_t i = 0; i < words.size(); ++i) per_word[i].cached = cache.lookup(words[i], per_word[i].reports);
  }
  // The trace action ignores the sign, so w and -w share one solve.
  std::vector<MonodromyWord> unsigned_words;
  std::map<std::string, std::size_t> slot;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (per_word[i].cached) continue;
    MonodromyWord u = words[i];
    u.sign = 1;
    if (slot.emplace(format_word(u), unsigned_words.size()).second) unsigned_words.push_back(u);
  }

  std::vector<Identified> solved(unsigned_words.size());
  std::vector<std::string> solve_error(unsigned_words.size());

  auto run_pool = [&](std::size_t n, const auto& task) {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) task(i);
    };
    const int k = std::max(1, std::min<int>(jobs, static_cast<int>(n)));
    std::vector<std::thread> pool;
    for (int t = 1; t < k; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
  };

  run_pool(unsigned_words.size(), [&](std::size_t i) {
    try {
      solved[i] = identify(unsigned_words[i], opt);
    } catch (const std::exception& e) {
      solve_error[i] = e.what();
    }
  });
  run_pool(words.size(), [&](std::size_t i) {
    if (per_word[i].cached) return;
    MonodromyWord u = words[i];
    u.sign = 1;
    const std::size_t s = slot.at(format_word(u));
    if (!solve_error[s].empty()) {
      per_word[i].error = solve_error[s];
      return;
    }
    try {
      for (const auto& c : solved[s].selected) {
        per_word[i].reports.push_back(report_for(words[i], c, solved[s].ambiguous));
        per_word[i].reports.back().runtime_ms += solved[s].ms;
      }
    } catch (const std::exception& e) {
      per_word[i].error = e.what();
      return;
    }
    if (cache.store) cache.store(words[i], per_word[i].reports);
  });

  SweepResult res;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (!per_word[i].error.empty()) {
      res.failures.push_back({format_word(words[i]), per_word[i].error});
      continue;
    }
    for (auto& r : per_word[i].reports) {
      res.part1_ok += r.part1_ok;
      res.part2_ok += r.part2_ok;
      res.ambiguous += r.ambiguous;
      res.reports.push_back(std::move(r));
    }
  }
  return res;
}

nlohmann::json poly_to_json(const UniPoly& p) { return to_coeff_strings(p); }

UniPoly poly_from_json(const nlohmann::json& j) { return from_coeff_strings(j.get<std::vector<std::string>>()); }

nlohmann::json to_json(const TraceFieldReport& r) {
  const IntMatrix2 m = word_matrix(r.word);
  nlohmann::json torsion = nlohmann::json::array();
  for (const auto& t : r.h1.torsion) torsion.push_back(t.get_str());
  return {
      {"word", format_word(r.word)},
      {"matrix", {m(0, 0).get_str(), m(0, 1).get_str(), m(1, 0).get_str(), m(1, 1).get_str()}},
      {"trace", trace(m).get_str()},
      {"h1", {{"betti", r.h1.betti}, {"torsion", torsion}}},
      {"K", {{"minpoly", poly_to_json(r.K_minpoly)}, {"r1", r.K_signature.r1}, {"r2", r.K_signature.r2}}},
      {"k", {{"minpoly", poly_to_json(r.k_minpoly)}, {"r1", r.k_signature.r1}, {"r2", r.k_signature.r2}}},
      {"index_log2", r.index_log2},
      {"part1_ok", r.part1_ok},
      {"part2_ok", r.part2_ok},
      {"ambiguous", r.ambiguous},
      {"sign_class", format_sign_class(r.sign_class)},
      {"runtime_ms", r.runtime_ms},
  };
}

TraceFieldReport report_from_json(const nlohmann::json& j) {
  TraceFieldReport r;
  r.word = parse_word(j.at("word").get<std::string>());
  r.h1.betti = j.at("h1").at("betti").get<int>();
  for (const auto& t : j.at("h1").at("torsion")) r.h1.torsion.emplace_back(t.get<std::string>());
  auto field = [](const nlohmann::json& f, UniPoly& p, NumberFieldSignature& s) {
    p = poly_from_json(f.at("minpoly"));
    s.r1 = f.at("r1").get<int>();
    s.r2 = f.at("r2").get<int>();
    s.degree = p.degree();
  };
  field(j.at("K"), r.K_minpoly, r.K_signature);
  field(j.at("k"), r.k_minpoly, r.k_signature);
  r.index_log2 = j.at("index_log2").get<int>();
  r.part1_ok = j.at("part1_ok").get<bool>();
  r.part2_ok = j.at("part2_ok").get<bool>();
  r.ambiguous = j.at("ambiguous").get<bool>();
  if (j.contains("sign_class")) {
    const std::string s = j.at("sign_class").get<std::string>();
    for (const auto& c : kSignClasses) {
      if (format_sign_class(c) == s) r.sign_class = c;
    }
  }
  r.runtime_ms = j.value("runtime_ms", 0.0);
  return r;
}

}  // namespace ptb
