#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "radact/injectivity.hpp"
#include "radact/universe.hpp"
#include "radact/verifier.hpp"
#include "report_mask.hpp"

namespace {

using radact::Status;
using radact::Universe;

struct Verdict {
  bool pass = false;
  std::string detail;
};

// All listed checkers ran at least one instance and none was violated.
Verdict suites(const Universe& u, const std::vector<std::string>& ids) {
  Verdict v{true, ""};
  for (const std::string& id : ids) {
    const radact::TheoremReport r = radact::verify(id, u);
    std::ostringstream s;
    s << id << " " << radact::to_string(r.status) << " checked=" << r.instances_checked
      << " skipped=" << r.instances_skipped << "; ";
    v.detail += s.str();
    if (r.status != Status::Verified) v.pass = false;
    if (r.witness) v.detail += "witness " + r.witness->dump() + "; ";
  }
  return v;
}

const radact::Radical& radical_named(const Universe& u, const std::string& name) {
  for (const radact::Radical& r : u.radicals()) {
    if (r.name() == name) return r;
  }
  throw radact::Error(radact::ErrorKind::InvalidArgument, "no radical " + name);
}

Verdict density_coincidence(const Universe& u) {
  std::size_t pairs = 0;
  std::size_t mismatches = 0;
  std::string first;
  for (const radact::Radical& r : u.radicals()) {
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      for (const radact::FiniteAct& a : u.acts(i)) {
        for (const radact::Subact& b : radact::subacts(a)) {
          if (b.members == 0) continue;
          const radact::FiniteAct factor = radact::rees_quotient(a, b).act;
          const bool radical_factor = radact::radical_of(r, factor).is_total();
          ++pairs;
          if (radact::is_r_dense(r, b) != radical_factor) {
            if (mismatches++ == 0) first = r.name() + " " + a.key();
          }
        }
      }
    }
  }
  Verdict v{mismatches == 0, std::to_string(pairs) + " (r, A, B) triples, " +
                                 std::to_string(mismatches) + " mismatches"};
  if (!first.empty()) v.detail += ", first at " + first;
  return v;
}

Verdict baer_equivalences(const Universe& u) {
  const radact::Radical& rg = radical_named(u, "rG");
  std::size_t acts = 0;
  std::size_t mode_mismatches = 0;
  std::size_t criterion_mismatches = 0;
  for (std::size_t i = 0; i < u.num_monoids(); ++i) {
    radact::MonoidLab& lab = u.lab(i);
    for (const radact::FiniteAct& a : u.acts(i)) {
      ++acts;
      if (lab.r_injective(rg, a, radact::InjMode::Criterion) !=
          lab.r_injective(rg, a, radact::InjMode::Universe)) {
        ++mode_mismatches;
      }
      if (radact::is_injective(a, lab.tests()) != radact::is_injective_skornjakov(a, lab.tests())) {
        ++criterion_mismatches;
      }
    }
  }
  Verdict v = suites(u, {"C7.9"});
  v.pass = v.pass && mode_mismatches == 0 && criterion_mismatches == 0;
  v.detail = std::to_string(acts) + " acts, " + std::to_string(mode_mismatches) +
             " criterion/universe mismatches for rG, " + std::to_string(criterion_mismatches) +
             " large-cyclic/full-cyclic mismatches; " + v.detail;
  return v;
}

Verdict rg_injective_is_injective(const Universe& u) {
  const radact::Radical& rg = radical_named(u, "rG");
  std::size_t acts = 0;
  std::vector<std::string> mismatches;
  for (std::size_t i = 0; i < u.num_monoids(); ++i) {
    radact::MonoidLab& lab = u.lab(i);
    for (const radact::FiniteAct& a : u.acts(i)) {
      ++acts;
      if (lab.r_injective(rg, a) != lab.injective(a)) mismatches.push_back(a.name());
    }
  }
  Verdict v{mismatches.empty(), std::to_string(acts) + " acts, " +
                                    std::to_string(mismatches.size()) + " disagreements"};
  if (!mismatches.empty()) {
    v.detail += " (rG-injective but not injective:";
    for (const std::string& n : mismatches) v.detail += " " + n;
    v.detail += ")";
  }
  return v;
}

Verdict mutation_sensitivity(const Universe& base) {
  Universe u = Universe::standard(base.bounds());
  std::string victim;
  u.set_radicals({radact::mutant_radical(u, radact::Radical::rG(), &victim)});
  const radact::TheoremReport r = radact::verify("AX", u);
  const bool rechecked = r.witness && radact::recheck_witness("AX", u, *r.witness);
  std::ostringstream out, err;
  const int code =
      radact::cli::run({"verify", "--mutant", "--radical", "rG", "--theorem", "AX"}, out, err);
  Verdict v{r.status == Status::Violated && rechecked && code == radact::cli::kExitViolation, ""};
  v.detail = "corrupted " + victim + ", AX " + radact::to_string(r.status) +
             ", witness rechecked " + (rechecked ? "yes" : "no") + ", cli exit " +
             std::to_string(code);
  return v;
}

Verdict determinism() {
  const std::vector<std::string> args = {"--report", "json", "verify", "--all"};
  std::ostringstream out1, err1, out2, err2;
  const int c1 = radact::cli::run(args, out1, err1);
  const int c2 = radact::cli::run(args, out2, err2);
  const radact::Json a = fixtures::mask_wall_clock(radact::Json::parse(out1.str()));
  const radact::Json b = fixtures::mask_wall_clock(radact::Json::parse(out2.str()));
  const bool same = a.dump() == b.dump() && c1 == c2;
  return {same, std::to_string(a["reports"].size()) + " reports, identical apart from timestamp " +
                    "and duration_ms: " + (same ? "yes" : "no") + ", exit " + std::to_string(c1)};
}

}  // namespace

int main() {
  const Universe u = Universe::standard();
  struct Criterion {
    const char* name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {"axiom suites", [&] { return suites(u, {"AX", "D2.1"}); }},
      {"quotient lemma sweep", [&] { return suites(u, {"L1.2"}); }},
      {"weak heredity biconditional", [&] { return suites(u, {"T2.8"}); }},
      {"density coincidence", [&] { return density_coincidence(u); }},
      {"constructive lemmas", [&] { return suites(u, {"L5.1", "T3.10", "T5.5"}); }},
      {"Baer equivalences", [&] { return baer_equivalences(u); }},
      {"rG-injective iff injective", [&] { return rg_injective_is_injective(u); }},
      {"minimal r-injective hull", [&] { return suites(u, {"P7.1"}); }},
      {"six-way heredity equivalence", [&] { return suites(u, {"T7.3"}); }},
      {"mutation sensitivity", [&] { return mutation_sensitivity(u); }},
      {"determinism", [] { return determinism(); }},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].run();
    } catch (const std::exception& e) {
      v = {false, std::string("error: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && v.pass;
    std::printf("criterion %zu %s: %s [%.1fs] %s\n", i + 1, criteria[i].name,
                v.pass ? "PASS" : "FAIL", secs, v.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
