#include <functional>

#include "radact/enumeration.hpp"
#include "radact/injectivity.hpp"

#include "lab_cache.hpp"

namespace radact {

namespace {

// First Q ⊇ A (A on the leading indices) of least size accepted by `accept`.
std::optional<FiniteAct> search_superact(const FiniteAct& a, std::size_t bound,
                                         const std::function<bool(const FiniteAct&)>& accept) {
  std::optional<FiniteAct> found;
  for (std::size_t k = a.size(); k <= bound && !found; ++k) {
    for_each_action(a.monoid(), a, k, [&](const FiniteAct& q) {
      if (!accept(q)) return true;
      found = q;
      return false;
    });
  }
  return found;
}

ActHom leading_inclusion(const FiniteAct& a, const FiniteAct& q) {
  std::vector<Elem> map(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) map[x] = static_cast<Elem>(x);
  return make_hom(a, q, std::move(map));
}

Extension describe_extension(const Radical* r, ActHom embedding, std::string note = {}) {
  Extension e{std::move(embedding), false, false, false, false, {}, std::move(note)};
  const ElemSet image = e.embedding.image();
  e.large = is_large(e.embedding.target, image);
  e.essential = is_large_by_congruences(e.embedding.target, image);
  if (r != nullptr) {
    e.radical = r->name();
    e.r_dense = is_r_dense(*r, Subact{e.embedding.target, image});
    e.r_essential = e.large && e.r_dense;
  }
  return e;
}

std::optional<Extension> hull_search(const FiniteAct& a, std::size_t bound,
                                     const CyclicTests& tests) {
  const std::size_t outside_zeros_allowed = zeros(a) == 0 ? 1 : 0;
  const ElemSet inner = a.carrier();
  std::optional<FiniteAct> q = search_superact(a, bound, [&](const FiniteAct& cand) {
    const ElemSet z = zeros(cand);
    // A large subact rules out a zero outside A when A has one, and a second
    // zero outside A otherwise.
    if (z == 0 || cardinality(z & ~inner) > outside_zeros_allowed) return false;
    return is_large(cand, inner) && is_injective(cand, tests);
  });
  if (!q) return std::nullopt;
  FiniteAct named = q->renamed("E(" + (a.name().empty() ? std::string("A") : a.name()) + ")");
  return describe_extension(nullptr, leading_inclusion(a, named));
}

std::optional<Extension> closure_hull(const Radical& r, const FiniteAct& a,
                                      const Extension& hull) {
  const Subact c = closure(r, hull.embedding.target, hull.embedding.image());
  const EmbeddedSubact e = as_act(c);
  std::vector<Elem> map(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) map[x] = e.local[hull.embedding(static_cast<Elem>(x))];
  FiniteAct named = e.act.renamed("E_" + r.name() + "(" +
                                  (a.name().empty() ? std::string("A") : a.name()) + ")");
  return describe_extension(&r, make_hom(a, named, std::move(map)));
}

std::optional<Extension> minimal_search(const Radical& r, const FiniteAct& a, std::size_t bound,
                                        MonoidLab& lab) {
  const ElemSet inner = a.carrier();
  std::optional<FiniteAct> q = search_superact(a, bound, [&](const FiniteAct& cand) {
    return lab.r_injective(r, cand) && is_r_dense(r, Subact{cand, inner});
  });
  if (!q) return std::nullopt;
  return describe_extension(&r, leading_inclusion(a, *q));
}

constexpr const char* kSearchNote =
    "radical is not Kurosh-Amitsur on this universe; minimal r-injective extension by search";

}  // namespace

std::optional<Extension> MonoidLab::injective_hull(const FiniteAct& a) {
  auto it = hulls_.find(a.key());
  if (it != hulls_.end()) return it->second;
  std::optional<Extension> e = hull_search(a, hull_bound_, tests_);
  hulls_.emplace(a.key(), e);
  return e;
}

std::optional<Extension> MonoidLab::minimal_r_injective_extension(const Radical& r,
                                                                  const FiniteAct& a) {
  RadicalCache& c = cache(r);
  auto it = c.minimal.find(a.key());
  if (it != c.minimal.end()) return it->second;
  std::optional<Extension> e = minimal_search(r, a, hull_bound_, *this);
  c.minimal.emplace(a.key(), e);
  return e;
}

std::optional<Extension> MonoidLab::r_injective_hull(const Radical& r, const FiniteAct& a) {
  RadicalCache& c = cache(r);
  auto it = c.hulls.find(a.key());
  if (it != c.hulls.end()) return it->second;
  std::optional<Extension> e;
  if (taxonomy(r).kurosh_amitsur) {
    if (std::optional<Extension> h = injective_hull(a)) e = closure_hull(r, a, *h);
  } else {
    e = minimal_r_injective_extension(r, a);
    if (e) e->note = kSearchNote;
  }
  c.hulls.emplace(a.key(), e);
  return e;
}

Extension injective_hull(const FiniteAct& a, std::size_t size_bound) {
  CyclicTests tests(a.monoid());
  std::optional<Extension> e = hull_search(a, size_bound, tests);
  if (!e) {
    throw Error(ErrorKind::BoundExceeded, "no injective hull of " + describe(a) +
                                              " within size " + std::to_string(size_bound));
  }
  return *e;
}

Extension r_injective_hull(const Radical& r, const FiniteAct& a, std::size_t size_bound,
                           MonoidLab& lab) {
  std::optional<Extension> e;
  if (lab.taxonomy(r).kurosh_amitsur) {
    e = closure_hull(r, a, injective_hull(a, size_bound));
  } else {
    e = minimal_search(r, a, size_bound, lab);
    if (e) e->note = kSearchNote;
  }
  if (!e) {
    throw Error(ErrorKind::BoundExceeded, "no " + r.name() + "-injective hull of " + describe(a) +
                                              " within size " + std::to_string(size_bound));
  }
  return *e;
}

}  // namespace radact
