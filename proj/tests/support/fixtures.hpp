#ifndef RADACT_TESTS_FIXTURES_HPP
#define RADACT_TESTS_FIXTURES_HPP

#include <string>

#include "radact/act.hpp"
#include "radact/monoid.hpp"
#include "radact/universe.hpp"

namespace fixtures {

inline radact::FiniteMonoid T1() { return radact::FiniteMonoid::validate({{0}}, 0, "T1"); }

// {1, e}: index 0 is the identity, index 1 the idempotent e.
inline radact::FiniteMonoid E2() {
  return radact::FiniteMonoid::validate({{0, 1}, {1, 1}}, 0, "E2");
}

inline radact::FiniteMonoid Z2() {
  return radact::FiniteMonoid::validate({{0, 1}, {1, 0}}, 0, "Z2");
}

// E2 acting on itself: element 0 is 1, element 1 is e.
inline radact::FiniteAct R2() { return radact::FiniteAct::validate(E2(), {{0, 1}, {1, 1}}, "R2"); }

// n points with the trivial action of m.
inline radact::FiniteAct trivial_points(const radact::FiniteMonoid& m, int n) {
  std::vector<std::vector<int>> rows(m.size());
  for (auto& row : rows) {
    for (int x = 0; x < n; ++x) row.push_back(x);
  }
  return radact::FiniteAct::validate(m, rows, "P" + std::to_string(n));
}

// The default universe, built once per test binary.
inline const radact::Universe& standard_universe() {
  static const radact::Universe u = radact::Universe::standard();
  return u;
}

}  // namespace fixtures

#endif  // RADACT_TESTS_FIXTURES_HPP
