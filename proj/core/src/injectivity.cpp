#include "radact/injectivity.hpp"

#include "lab_cache.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace radact {

bool is_large(const FiniteAct& a, ElemSet b) {
  return is_essential(a, rees_congruence(a, b));
}

bool is_large_by_congruences(const FiniteAct& a, ElemSet b) {
  for (const Congruence& chi : all_congruences(a, std::max(a.size(), kDefaultCongruenceBound))) {
    if (chi.is_diagonal()) continue;
    bool injective_on_b = true;
    for (Elem x : elements_of(b)) {
      if ((chi.block_containing(x) & b) != singleton(x)) {
        injective_on_b = false;
        break;
      }
    }
    if (injective_on_b) return false;
  }
  return true;
}

bool collectively_large(const FiniteAct& a, std::span<const ElemSet> family) {
  std::vector<Subact> system;
  for (ElemSet b : family) system.push_back(make_subact(a, b));
  return is_essential(a, rees_congruence(a, system));
}

bool collectively_large_by_homs(const FiniteAct& a, std::span<const ElemSet> family,
                                std::span<const FiniteAct> targets) {
  for (const FiniteAct& t : targets) {
    for (const ActHom& f : all_homs(a, t)) {
      if (f.injective()) continue;
      bool injective_on_members = true;
      for (ElemSet b : family) {
        if (cardinality(f.image_of(b)) != cardinality(b)) {
          injective_on_members = false;
          break;
        }
      }
      if (injective_on_members) return false;
    }
  }
  return true;
}

CyclicTests::CyclicTests(const FiniteMonoid& m) : monoid_(m) {
  const FiniteAct s = left_regular_act(m);
  std::set<std::string> seen;
  for (const Congruence& chi : all_congruences(s, std::max(s.size(), kDefaultCongruenceBound))) {
    FiniteAct c = quotient(s, chi).act.renamed("S/(" + chi.to_string() + ")");
    if (!seen.insert(canonical_form(c).act.key()).second) continue;
    cyclic_.push_back(c);
    for (const Subact& b : subacts(c)) {
      if (b.members == c.carrier()) continue;
      all_.push_back(Pair{c, b.members});
      if (is_large(c, b.members)) large_.push_back(Pair{c, b.members});
    }
  }
}

bool extends_along(const FiniteAct& a, ElemSet sub, const FiniteAct& q) {
  const EmbeddedSubact e = as_act(make_subact(a, sub));
  for (const ActHom& g : all_homs(e.act, q)) {
    std::vector<Elem> partial(a.size(), kUnset);
    for (Elem x : elements_of(sub)) partial[x] = g(e.local[x]);
    if (!extend_partial_hom(a, q, std::move(partial))) return false;
  }
  return true;
}

namespace {

const CyclicTests& shared_tests(const FiniteMonoid& m) {
  static std::mutex mu;
  static std::map<std::vector<Elem>, std::unique_ptr<CyclicTests>> cache;
  std::vector<Elem> key(m.table().begin(), m.table().end());
  key.push_back(m.identity());
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[key];
  if (!slot) slot = std::make_unique<CyclicTests>(m);
  return *slot;
}

bool all_extend(std::span<const CyclicTests::Pair> pairs, const FiniteAct& q) {
  for (const CyclicTests::Pair& p : pairs) {
    if (!extends_along(p.cyclic, p.sub, q)) return false;
  }
  return true;
}

}  // namespace

bool is_injective(const FiniteAct& q) { return is_injective(q, shared_tests(q.monoid())); }

bool is_injective(const FiniteAct& q, const CyclicTests& tests) {
  return zeros(q) != 0 && all_extend(tests.large_pairs(), q);
}

bool is_injective_skornjakov(const FiniteAct& q, const CyclicTests& tests) {
  return zeros(q) != 0 && all_extend(tests.all_pairs(), q);
}

bool is_weakly_injective(const FiniteAct& q) {
  const FiniteAct s = left_regular_act(q.monoid());
  for (const Subact& k : subacts(s)) {
    if (k.members != s.carrier() && !extends_along(s, k.members, q)) return false;
  }
  return true;
}

const char* to_string(InjMode mode) {
  switch (mode) {
    case InjMode::Auto: return "auto";
    case InjMode::Criterion: return "criterion";
    case InjMode::Universe: return "universe";
  }
  return "unknown";
}

MonoidLab::MonoidLab(FiniteMonoid monoid, std::vector<FiniteAct> acts, std::size_t hull_bound)
    : monoid_(std::move(monoid)),
      acts_(std::move(acts)),
      tests_(monoid_),
      hull_bound_(hull_bound) {}

MonoidLab::RadicalCache& MonoidLab::cache(const Radical& r) {
  auto& slot = caches_[r.name()];
  if (!slot) slot = std::make_shared<RadicalCache>();
  return *slot;
}

const Taxonomy& MonoidLab::taxonomy(const Radical& r) {
  RadicalCache& c = cache(r);
  if (!c.taxonomy) c.taxonomy = classify_radical(r, acts_);
  return *c.taxonomy;
}

bool MonoidLab::injective(const FiniteAct& q) {
  auto it = injective_.find(q.key());
  if (it != injective_.end()) return it->second;
  const bool v = is_injective(q, tests_);
  injective_.emplace(q.key(), v);
  return v;
}

bool MonoidLab::injective_universe(const FiniteAct& q) {
  return zeros(q) != 0 && all_extend(inclusions(), q);
}

bool MonoidLab::weakly_injective(const FiniteAct& q) { return is_weakly_injective(q); }

const std::vector<CyclicTests::Pair>& MonoidLab::inclusions() {
  if (!inclusions_) {
    std::vector<CyclicTests::Pair> out;
    for (const FiniteAct& b : acts_) {
      for (const Subact& s : subacts(b)) {
        if (s.members != b.carrier()) out.push_back(CyclicTests::Pair{b, s.members});
      }
    }
    inclusions_ = std::move(out);
  }
  return *inclusions_;
}

const std::vector<CyclicTests::Pair>& MonoidLab::dense_inclusions(const Radical& r) {
  RadicalCache& c = cache(r);
  if (!c.dense_inclusions) {
    std::vector<CyclicTests::Pair> out;
    for (const CyclicTests::Pair& p : inclusions()) {
      if (is_r_dense(r, Subact{p.cyclic, p.sub})) out.push_back(p);
    }
    c.dense_inclusions = std::move(out);
  }
  return *c.dense_inclusions;
}

bool MonoidLab::r_injective(const Radical& r, const FiniteAct& q, InjMode mode) {
  if (mode == InjMode::Auto) {
    mode = taxonomy(r).zero_hereditary ? InjMode::Criterion : InjMode::Universe;
  }
  RadicalCache& c = cache(r);
  if (mode == InjMode::Universe) {
    auto it = c.universe.find(q.key());
    if (it != c.universe.end()) return it->second;
    const bool v = all_extend(dense_inclusions(r), q);
    c.universe.emplace(q.key(), v);
    return v;
  }
  if (!taxonomy(r).zero_hereditary) {
    throw Error(ErrorKind::ModeUnavailable, "criterion mode needs a zero-hereditary radical; '" +
                                                r.name() + "' is not: " +
                                                taxonomy(r).witnesses.at("zero_hereditary"));
  }
  auto it = c.criterion.find(q.key());
  if (it != c.criterion.end()) return it->second;
  if (!c.dense_cyclic) {
    std::vector<CyclicTests::Pair> dense;
    for (const CyclicTests::Pair& p : tests_.all_pairs()) {
      if (is_r_dense(r, Subact{p.cyclic, p.sub})) dense.push_back(p);
    }
    c.dense_cyclic = std::move(dense);
    std::vector<FiniteAct> targets;
    const FiniteAct theta = trivial_act(monoid_);
    for (const FiniteAct& cyc : tests_.cyclic_acts()) {
      if (is_radical_act(r, coproduct(cyc, theta).act)) targets.push_back(cyc);
    }
    c.free_targets = std::move(targets);
  }
  bool v = all_extend(*c.dense_cyclic, q);
  for (std::size_t i = 0; v && i < c.free_targets->size(); ++i) {
    v = hom_exists((*c.free_targets)[i], q);
  }
  c.criterion.emplace(q.key(), v);
  return v;
}

bool MonoidLab::orthogonal_r_injective(const Radical& r, const FiniteAct& q) {
  RadicalCache& c = cache(r);
  auto it = c.orthogonal.find(q.key());
  if (it != c.orthogonal.end()) return it->second;
  bool v = r_injective(r, q);
  for (const CyclicTests::Pair& p : dense_inclusions(r)) {
    if (!v) break;
    const EmbeddedSubact e = as_act(make_subact(p.cyclic, p.sub));
    for (const ActHom& g : all_homs(e.act, q)) {
      std::vector<Elem> partial(p.cyclic.size(), kUnset);
      for (Elem x : elements_of(p.sub)) partial[x] = g(e.local[x]);
      if (count_extensions(p.cyclic, q, std::move(partial), 2) != 1) {
        v = false;
        break;
      }
    }
  }
  c.orthogonal.emplace(q.key(), v);
  return v;
}

bool is_r_injective(const Radical& r, const FiniteAct& q, MonoidLab& lab, InjMode mode) {
  return lab.r_injective(r, q, mode);
}

bool is_orthogonal_r_injective(const Radical& r, const FiniteAct& q, MonoidLab& lab) {
  return lab.orthogonal_r_injective(r, q);
}

}  // namespace radact
