#ifndef RADACT_VERIFIER_HPP
#define RADACT_VERIFIER_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "radact/radical.hpp"
#include "radact/universe.hpp"

namespace radact {

using Json = nlohmann::ordered_json;

enum class Verdict { Holds, Violated, HypothesisFails, Skipped };

// What one instance of a checked statement produced. `detail` becomes the
// witness when the verdict is Violated.
struct Outcome {
  Verdict verdict = Verdict::Holds;
  Json detail;

  static Outcome holds() { return {Verdict::Holds, {}}; }
  static Outcome filtered() { return {Verdict::HypothesisFails, {}}; }
  static Outcome skipped(std::string why) { return {Verdict::Skipped, Json{{"reason", why}}}; }
  static Outcome violated(Json detail) { return {Verdict::Violated, std::move(detail)}; }
  static Outcome check(bool ok, Json detail) {
    return ok ? holds() : violated(std::move(detail));
  }
};

// Counts outcomes for one statement and keeps the first violation. With an
// instance filter only the matching instance is evaluated.
class Tally {
 public:
  explicit Tally(std::optional<std::string> only = std::nullopt) : only_(std::move(only)) {}

  // Runs `eval` for the named instance. Out-of-bounds errors (SizeBound,
  // BoundExceeded, NotInUniverse) count as skipped.
  void record(const std::string& instance, const std::function<Outcome()>& eval);

  std::size_t checked() const { return holds_ + violated_; }
  std::size_t violated() const { return violated_; }
  std::size_t filtered() const { return filtered_; }
  std::size_t skipped() const { return skipped_; }
  const std::optional<Json>& witness() const { return witness_; }

 private:
  std::optional<std::string> only_;
  std::size_t holds_ = 0;
  std::size_t violated_ = 0;
  std::size_t filtered_ = 0;
  std::size_t skipped_ = 0;
  std::optional<Json> witness_;
};

struct Checker {
  std::string id;
  std::string title;
  // Empty, or a qualifier such as "bounded-universe verification".
  std::string scope;
  std::function<void(const Universe&, Tally&)> run;
};

struct OutOfScopeResult {
  std::string id;
  std::string reason;
};

enum class Status { Verified, Violated, SkippedOutOfBounds };
const char* to_string(Status s);

struct TheoremReport {
  std::string theorem_id;
  std::string title;
  Status status = Status::SkippedOutOfBounds;
  std::size_t instances_checked = 0;
  // Instances excluded because a hypothesis of the statement fails.
  std::size_t hypothesis_filtered = 0;
  std::size_t instances_skipped = 0;
  std::optional<Json> witness;
  std::string scope;
  double duration_ms = 0;
};

const std::vector<Checker>& checkers();
const std::vector<OutOfScopeResult>& out_of_scope_results();
const Checker& find_checker(const std::string& id);  // throws UnknownTheorem

TheoremReport verify(const std::string& theorem_id, const Universe& u,
                     std::optional<std::string> only_instance = std::nullopt);
std::vector<TheoremReport> verify_all(const Universe& u);
// Re-runs the checker on the witnessed instance alone; true iff it is
// violated again.
bool recheck_witness(const std::string& theorem_id, const Universe& u, const Json& witness);

// Flags aggregated over every monoid of the universe.
Taxonomy universe_taxonomy(const Universe& u, const Radical& r);

struct SuiteReport {
  std::string timestamp;
  Bounds bounds;
  std::vector<std::string> radicals;
  std::vector<TheoremReport> reports;
  Json taxonomy;
  bool any_violated() const;
};

// Runs the given checkers (all when empty), optionally on one instance.
SuiteReport run_suite(const Universe& u, const std::vector<std::string>& ids = {},
                      const std::optional<std::string>& only_instance = std::nullopt);

Json to_json(const TheoremReport& r);
Json to_json(const SuiteReport& s);
std::string to_text(const TheoremReport& r);
std::string to_text(const SuiteReport& s);

// A copy of `base` as an extensional table over the universe acts whose
// value on one act breaks r(A/r(A)) = Δ. `corrupted` receives that act.
Radical mutant_radical(const Universe& u, const Radical& base, std::string* corrupted = nullptr);

// Witness payload helpers shared by the checkers.
Json act_json(const FiniteAct& a);
Json congruence_json(const Congruence& c);

}  // namespace radact

#endif  // RADACT_VERIFIER_HPP
