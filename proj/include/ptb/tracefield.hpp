#pragma once

// Trace field K = Q(x, y, z) and invariant trace field k = Q(x^2, y^2, xyz)
// of the geometric character, with the per-word verdicts and a bulk sweep.

#include <functional>
#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "ptb/fricke.hpp"
#include "ptb/homology.hpp"
#include "ptb/numberfield.hpp"

namespace ptb {

struct TraceFieldReport {
  MonodromyWord word;
  UniPoly K_minpoly;
  NumberFieldSignature K_signature;
  UniPoly k_minpoly;
  NumberFieldSignature k_signature;
  int index_log2 = 0;  // -1 if deg K / deg k is not a power of two
  AbelianGroupInfo h1;
  bool part1_ok = false;
  bool part2_ok = false;
  bool ambiguous = false;
  SignClass sign_class{1, 1, 1};
  double runtime_ms = 0;
};

struct AnalysisOptions {
  SolveOptions solve;
  IdentifyOptions identify;
};

class PrimitiveElementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr long kMaxPrimitiveShift = 50;

/// Minimal polynomial of a primitive element x + c y + c^2 z of Q(x, y, z).
std::pair<UniPoly, NumberFieldSignature> trace_field(const CharacterComponent& comp);
/// Same, after solving and identifying the geometric character of w
/// (the first selected candidate when identification is ambiguous).
std::pair<UniPoly, NumberFieldSignature> trace_field(const MonodromyWord& w, const AnalysisOptions& opt = {});

/// Minimal polynomial of a primitive element of Q(x^2, y^2, xyz).
std::pair<UniPoly, NumberFieldSignature> invariant_trace_field(const CharacterComponent& comp);

/// Report for one geometric candidate.
TraceFieldReport report_for(const MonodromyWord& w, const CharacterComponent& comp, bool ambiguous);

/// One report per selected candidate (several only when ambiguous).
std::vector<TraceFieldReport> theorem_a_reports(const MonodromyWord& w, const AnalysisOptions& opt = {});

/// The report for the first selected candidate.
TraceFieldReport theorem_a_verdict(const MonodromyWord& w, const AnalysisOptions& opt = {});

struct SweepFailure {
  std::string word;
  std::string message;
};

struct SweepResult {
  std::vector<TraceFieldReport> reports;  // canonical word order
  std::vector<SweepFailure> failures;
  long part1_ok = 0;
  long part2_ok = 0;
  long ambiguous = 0;

  /// No failures, and every word has a candidate satisfying both parts
  /// with even deg K and a 2-power index.
  bool all_ok() const;
};

/// Optional per-word cache. lookup returns true and fills the reports when
/// the word is known; store is called from worker threads.
struct SweepCache {
  std::function<bool(const MonodromyWord&, std::vector<TraceFieldReport>&)> lookup;
  std::function<void(const MonodromyWord&, const std::vector<TraceFieldReport>&)> store;
};

/// All hyperbolic words of total exponent <= bound, on `jobs` worker threads.
/// A word and its negative share one solve.
SweepResult sweep(long max_total_exponent, int jobs, const AnalysisOptions& opt = {}, const SweepCache& cache = {});

nlohmann::json to_json(const TraceFieldReport& r);
TraceFieldReport report_from_json(const nlohmann::json& j);
nlohmann::json poly_to_json(const UniPoly& p);
UniPoly poly_from_json(const nlohmann::json& j);

}  // namespace ptb
