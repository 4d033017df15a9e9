#include "radact/universe.hpp"

#include <set>

#include "radact/enumeration.hpp"

namespace radact {

std::vector<FiniteAct> enumerate_acts(const FiniteMonoid& m, std::size_t size) {
  std::vector<FiniteAct> out;
  std::set<std::string> seen;
  for_each_action(m, std::nullopt, size, [&](const FiniteAct& a) {
    FiniteAct c = canonical_form(a).act;
    if (seen.insert(c.key()).second) out.push_back(c);
    return true;
  });
  return out;
}

Universe::Universe(Bounds bounds) : bounds_(bounds) {
  if (bounds.monoid_max == 0 || bounds.act_max == 0) {
    throw Error(ErrorKind::InvalidArgument, "universe bounds must be at least 1");
  }
  for (std::size_t n = 1; n <= bounds.monoid_max; ++n) {
    std::size_t i = 0;
    for (const FiniteMonoid& m : enumerate_monoids(n)) {
      const std::string name = "M" + std::to_string(n) + "." + std::to_string(i++);
      FiniteMonoid named = m.renamed(name);
      monoid_keys_.emplace(std::vector<Elem>(m.table().begin(), m.table().end()),
                           monoids_.size());
      std::vector<FiniteAct> acts;
      std::map<std::string, std::size_t> keys;
      for (std::size_t k = 1; k <= bounds.act_max; ++k) {
        std::size_t j = 0;
        for (const FiniteAct& a : enumerate_acts(named, k)) {
          keys.emplace(a.key(), acts.size());
          acts.push_back(a.renamed(name + "/A" + std::to_string(k) + "." + std::to_string(j++)));
        }
      }
      monoids_.push_back(named);
      acts_.push_back(std::move(acts));
      act_keys_.push_back(std::move(keys));
    }
  }
  labs_.resize(monoids_.size());
}

Universe Universe::standard(Bounds bounds) {
  Universe u(bounds);
  u.set_radicals({Radical::delta(), Radical::nabla(), Radical::rG(), lr_radical(Radical::rG())});
  return u;
}

std::size_t Universe::num_acts() const {
  std::size_t n = 0;
  for (const auto& a : acts_) n += a.size();
  return n;
}

MonoidLab& Universe::lab(std::size_t i) const {
  if (!labs_[i]) labs_[i] = std::make_unique<MonoidLab>(monoids_[i], acts_[i], bounds_.hull_bound);
  return *labs_[i];
}

void Universe::add_radical(Radical r) {
  for (Radical& existing : radicals_) {
    if (existing.name() == r.name()) {
      existing = std::move(r);
      return;
    }
  }
  radicals_.push_back(std::move(r));
}

void Universe::set_radicals(std::vector<Radical> rs) {
  radicals_.clear();
  for (Radical& r : rs) add_radical(std::move(r));
}

std::optional<std::size_t> Universe::monoid_index(const FiniteMonoid& m) const {
  if (m.size() > bounds_.monoid_max) return std::nullopt;
  FiniteMonoid c = canonical_monoid(m);
  auto it = monoid_keys_.find(std::vector<Elem>(c.table().begin(), c.table().end()));
  if (it == monoid_keys_.end()) return std::nullopt;
  return it->second;
}

std::optional<FiniteAct> Universe::lookup(const FiniteAct& a) const {
  if (a.size() > bounds_.act_max) return std::nullopt;
  std::optional<std::size_t> i = monoid_index(a.monoid());
  if (!i || !(monoids_[*i] == a.monoid())) return std::nullopt;
  auto it = act_keys_[*i].find(canonical_form(a).act.key());
  if (it == act_keys_[*i].end()) return std::nullopt;
  return acts_[*i][it->second];
}

std::optional<ActHom> Universe::iso_to_member(const FiniteAct& a) const {
  std::optional<FiniteAct> member = lookup(a);
  if (!member) return std::nullopt;
  return find_isomorphism(a, *member);
}

std::optional<std::size_t> Universe::monoid_by_name(const std::string& name) const {
  for (std::size_t i = 0; i < monoids_.size(); ++i) {
    if (monoids_[i].name() == name) return i;
  }
  return std::nullopt;
}

std::optional<FiniteAct> Universe::act_by_name(const std::string& name) const {
  for (const auto& acts : acts_) {
    for (const FiniteAct& a : acts) {
      if (a.name() == name) return a;
    }
  }
  return std::nullopt;
}

}  // namespace radact
