#ifndef RADACT_TESTS_REPORT_MASK_HPP
#define RADACT_TESTS_REPORT_MASK_HPP

#include "radact/verifier.hpp"

namespace fixtures {

// Blanks the wall-clock fields of a suite report: the timestamp and every
// duration_ms.
inline radact::Json mask_wall_clock(radact::Json j) {
  if (j.contains("timestamp")) j["timestamp"] = "";
  if (j.contains("reports")) {
    for (radact::Json& r : j["reports"]) r["duration_ms"] = 0;
  }
  return j;
}

}  // namespace fixtures

#endif  // RADACT_TESTS_REPORT_MASK_HPP
