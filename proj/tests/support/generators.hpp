#ifndef RADACT_TESTS_GENERATORS_HPP
#define RADACT_TESTS_GENERATORS_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "radact/act.hpp"
#include "radact/congruence.hpp"
#include "radact/monoid.hpp"

namespace gen {

// Seeded source of random monoids, acts and maps. Every finite act is a
// quotient of a coproduct of regular acts, so acts are drawn that way.
class Source {
 public:
  explicit Source(std::uint32_t seed) : rng_(seed) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (const radact::FiniteMonoid& m : radact::enumerate_monoids(n)) monoids_.push_back(m);
    }
  }

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin() { return below(2) == 1; }

  const radact::FiniteMonoid& monoid() { return monoids_[below(monoids_.size())]; }

  // An act of at most max_size points over m.
  radact::FiniteAct act(const radact::FiniteMonoid& m, std::size_t max_size = 6) {
    radact::FiniteAct a = coin() ? radact::left_regular_act(m) : radact::trivial_act(m);
    while (a.size() + m.size() <= max_size && coin()) {
      a = radact::coproduct(a, coin() ? radact::left_regular_act(m) : radact::trivial_act(m)).act;
    }
    std::vector<std::pair<radact::Elem, radact::Elem>> pairs;
    const std::size_t count = below(3);
    for (std::size_t k = 0; k < count; ++k) {
      pairs.emplace_back(static_cast<radact::Elem>(below(a.size())),
                         static_cast<radact::Elem>(below(a.size())));
    }
    return relabel(radact::quotient(a, radact::generated_congruence(a, pairs)).act);
  }

  radact::FiniteAct act(std::size_t max_size = 6) { return act(monoid(), max_size); }

  // The same act with its points permuted at random.
  radact::FiniteAct relabel(const radact::FiniteAct& a) {
    std::vector<radact::Elem> perm(a.size());
    std::iota(perm.begin(), perm.end(), radact::Elem{0});
    std::shuffle(perm.begin(), perm.end(), rng_);
    std::vector<radact::Elem> flat(a.table().size());
    for (std::size_t s = 0; s < a.monoid().size(); ++s) {
      for (std::size_t x = 0; x < a.size(); ++x) {
        flat[s * a.size() + perm[x]] = perm[a.act(static_cast<radact::Elem>(s), static_cast<radact::Elem>(x))];
      }
    }
    return radact::FiniteAct::trusted(a.monoid(), a.size(), std::move(flat), a.name());
  }

  radact::Congruence congruence(const radact::FiniteAct& a) {
    const std::vector<radact::Congruence> all = radact::all_congruences(a);
    return all[below(all.size())];
  }

  radact::Subact subact(const radact::FiniteAct& a) {
    const std::vector<radact::Subact> all = radact::subacts(a);
    return all[below(all.size())];
  }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

 private:
  std::mt19937 rng_;
  std::vector<radact::FiniteMonoid> monoids_;
};

}  // namespace gen

#endif  // RADACT_TESTS_GENERATORS_HPP
