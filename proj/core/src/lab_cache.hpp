#ifndef RADACT_SRC_LAB_CACHE_HPP
#define RADACT_SRC_LAB_CACHE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "radact/injectivity.hpp"

namespace radact {

struct MonoidLab::RadicalCache {
  std::optional<Taxonomy> taxonomy;
  std::optional<std::vector<CyclicTests::Pair>> dense_cyclic;
  std::optional<std::vector<FiniteAct>> free_targets;
  std::optional<std::vector<CyclicTests::Pair>> dense_inclusions;
  std::map<std::string, bool> criterion;
  std::map<std::string, bool> universe;
  std::map<std::string, bool> orthogonal;
  std::map<std::string, std::optional<Extension>> hulls;
  std::map<std::string, std::optional<Extension>> minimal;
};

}  // namespace radact

#endif  // RADACT_SRC_LAB_CACHE_HPP
