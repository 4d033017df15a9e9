#include <sstream>

#include "radact/verifier.hpp"

namespace radact {

void Tally::record(const std::string& instance, const std::function<Outcome()>& eval) {
  if (only_ && *only_ != instance) return;
  Outcome o;
  try {
    o = eval();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SizeBound && e.kind() != ErrorKind::BoundExceeded &&
        e.kind() != ErrorKind::NotInUniverse) {
      throw;
    }
    o = Outcome::skipped(e.what());
  }
  switch (o.verdict) {
    case Verdict::Holds: ++holds_; break;
    case Verdict::HypothesisFails: ++filtered_; break;
    case Verdict::Skipped: ++skipped_; break;
    case Verdict::Violated:
      ++violated_;
      if (!witness_) {
        Json w;
        w["instance"] = instance;
        for (auto& [k, v] : o.detail.items()) w[k] = v;
        witness_ = std::move(w);
      }
      break;
  }
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Verified: return "verified";
    case Status::Violated: return "violated";
    case Status::SkippedOutOfBounds: return "skipped-out-of-bounds";
  }
  return "unknown";
}

bool SuiteReport::any_violated() const {
  for (const TheoremReport& r : reports) {
    if (r.status == Status::Violated) return true;
  }
  return false;
}

Json to_json(const TheoremReport& r) {
  Json j;
  j["theorem_id"] = r.theorem_id;
  j["title"] = r.title;
  j["status"] = to_string(r.status);
  j["instances_checked"] = r.instances_checked;
  j["hypothesis_filtered"] = r.hypothesis_filtered;
  j["instances_skipped"] = r.instances_skipped;
  j["witness"] = r.witness ? *r.witness : Json(nullptr);
  if (!r.scope.empty()) j["scope"] = r.scope;
  j["duration_ms"] = r.duration_ms;
  return j;
}

Json to_json(const SuiteReport& s) {
  Json j;
  j["timestamp"] = s.timestamp;
  j["bounds"] = Json{{"monoid_max", s.bounds.monoid_max},
                     {"act_max", s.bounds.act_max},
                     {"hull_bound", s.bounds.hull_bound}};
  j["radicals"] = s.radicals;
  Json reports = Json::array();
  std::size_t verified = 0, violated = 0, skipped = 0;
  for (const TheoremReport& r : s.reports) {
    reports.push_back(to_json(r));
    if (r.status == Status::Verified) ++verified;
    if (r.status == Status::Violated) ++violated;
    if (r.status == Status::SkippedOutOfBounds) ++skipped;
  }
  j["reports"] = std::move(reports);
  j["taxonomy"] = s.taxonomy;
  j["summary"] = Json{{"verified", verified}, {"violated", violated}, {"skipped", skipped}};
  return j;
}

std::string to_text(const TheoremReport& r) {
  std::ostringstream out;
  out << r.theorem_id << "  " << to_string(r.status) << "  checked=" << r.instances_checked
      << " filtered=" << r.hypothesis_filtered << " skipped=" << r.instances_skipped;
  if (!r.scope.empty()) out << "  [" << r.scope << "]";
  out << "  " << r.title;
  out << "  (" << static_cast<long long>(r.duration_ms) << " ms)";
  if (r.witness) out << "\n    witness: " << r.witness->dump();
  return out.str();
}

std::string to_text(const SuiteReport& s) {
  std::ostringstream out;
  std::size_t violated = 0;
  for (const TheoremReport& r : s.reports) {
    out << to_text(r) << "\n";
    if (r.status == Status::Violated) ++violated;
  }
  out << "taxonomy:\n";
  for (auto& [name, t] : s.taxonomy.items()) {
    out << "  " << name << ":";
    for (auto& [flag, v] : t["flags"].items()) out << " " << flag << "=" << (v.get<bool>() ? 1 : 0);
    out << "\n";
  }
  out << s.reports.size() << " results, " << violated << " violated\n";
  return out.str();
}

}  // namespace radact
