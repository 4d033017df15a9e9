#ifndef RADACT_UNIVERSE_HPP
#define RADACT_UNIVERSE_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "radact/act.hpp"
#include "radact/injectivity.hpp"
#include "radact/monoid.hpp"
#include "radact/radical.hpp"

namespace radact {

struct Bounds {
  std::size_t monoid_max = 3;
  std::size_t act_max = 4;
  std::size_t hull_bound = 6;
};

// All monoids up to monoid_max and, per monoid, all acts up to act_max, each
// deduplicated up to isomorphism. Monoids are named "M<n>.<i>" and acts
// "M<n>.<i>/A<m>.<j>", numbered in enumeration order from 0.
class Universe {
 public:
  explicit Universe(Bounds bounds);

  // delta, nabla, rG and tL_rG on the default bounds.
  static Universe standard(Bounds bounds = {});

  const Bounds& bounds() const { return bounds_; }
  std::size_t num_monoids() const { return monoids_.size(); }
  const FiniteMonoid& monoid(std::size_t i) const { return monoids_[i]; }
  const std::vector<FiniteAct>& acts(std::size_t i) const { return acts_[i]; }
  std::size_t num_acts() const;
  // Lazily created per-monoid working context.
  MonoidLab& lab(std::size_t i) const;

  const std::vector<Radical>& radicals() const { return radicals_; }
  void add_radical(Radical r);
  void set_radicals(std::vector<Radical> rs);

  // Index of the member monoid isomorphic to m.
  std::optional<std::size_t> monoid_index(const FiniteMonoid& m) const;
  // The member act (over monoid i) isomorphic to a, if one exists.
  std::optional<FiniteAct> lookup(const FiniteAct& a) const;
  // Element-level isomorphism a -> member, if a member exists.
  std::optional<ActHom> iso_to_member(const FiniteAct& a) const;

  // Finds a monoid or act by its catalogue name.
  std::optional<std::size_t> monoid_by_name(const std::string& name) const;
  std::optional<FiniteAct> act_by_name(const std::string& name) const;

 private:
  Bounds bounds_;
  std::vector<FiniteMonoid> monoids_;
  std::vector<std::vector<FiniteAct>> acts_;
  // canonical monoid table -> index
  std::map<std::vector<Elem>, std::size_t> monoid_keys_;
  // monoid index -> canonical act key -> member position
  std::vector<std::map<std::string, std::size_t>> act_keys_;
  mutable std::vector<std::unique_ptr<MonoidLab>> labs_;
  std::vector<Radical> radicals_;
};

// Acts of the given size over m up to isomorphism, in canonical form,
// ordered by first occurrence in the enumeration.
std::vector<FiniteAct> enumerate_acts(const FiniteMonoid& m, std::size_t size);

}  // namespace radact

#endif  // RADACT_UNIVERSE_HPP
