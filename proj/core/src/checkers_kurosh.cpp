#include "checkers.hpp"

namespace radact {

namespace {

using check::key;
using check::witness;

template <typename Body>
void kurosh_acts(const Universe& u, Tally& t, Body body) {
  for (const Radical& r : u.radicals()) {
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      MonoidLab& lab = u.lab(i);
      for (const FiniteAct& a : u.acts(i)) {
        t.record(key(r.name(), a.name()), [&] {
          if (!lab.taxonomy(r).kurosh_amitsur) return Outcome::filtered();
          return body(r, lab, a);
        });
      }
    }
  }
}

Outcome closure_hull_minimal(const Radical& r, MonoidLab& lab, const FiniteAct& a) {
  const std::optional<Extension> h = lab.r_injective_hull(r, a);
  if (!h) return Outcome::skipped("no injective hull within the bound");
  const FiniteAct& q = h->embedding.target;
  const bool inj = lab.r_injective(r, q);
  if (!inj || !h->r_essential) {
    return Outcome::violated(witness(&r, {a, q}, {{"r_injective", inj},
                                                  {"r_essential", h->r_essential}}));
  }
  const std::optional<Extension> m = lab.minimal_r_injective_extension(r, a);
  if (!m) {
    return Outcome::violated(witness(&r, {a, q}, {{"minimal_extension", nullptr}}));
  }
  const FiniteAct& p = m->embedding.target;
  std::vector<Elem> partial(q.size(), kUnset);
  for (std::size_t x = 0; x < a.size(); ++x) {
    partial[h->embedding(static_cast<Elem>(x))] = m->embedding(static_cast<Elem>(x));
  }
  const bool iso = q.size() == p.size() && find_isomorphism_extending(q, p, partial).has_value();
  return Outcome::check(iso, witness(&r, {a, q, p}, {{"isomorphic_over_A", iso}}));
}

Outcome closed_in_hull(const Radical& r, MonoidLab& lab, const FiniteAct& a) {
  const std::optional<Extension> e = lab.injective_hull(a);
  if (!e) return Outcome::skipped("no injective hull within the bound");
  const bool lhs = lab.r_injective(r, a);
  const bool rhs = is_r_closed(r, Subact{e->embedding.target, e->embedding.image()});
  return Outcome::check(lhs == rhs, witness(&r, {a, e->embedding.target},
                                            {{"r_injective", lhs}, {"r_closed_in_hull", rhs}}));
}

Outcome hull_semisimple(const Radical& r, MonoidLab& lab, const FiniteAct& a) {
  if (!lab.r_injective(r, a)) return Outcome::filtered();
  const std::optional<Extension> e = lab.injective_hull(a);
  if (!e) return Outcome::skipped("no injective hull within the bound");
  const bool lhs = is_semisimple_act(r, a);
  const bool rhs = is_semisimple_act(r, e->embedding.target);
  return Outcome::check(lhs == rhs, witness(&r, {a, e->embedding.target},
                                            {{"semisimple", lhs}, {"hull_semisimple", rhs}}));
}

Outcome radical_hulls(const Radical& r, MonoidLab& lab, const FiniteAct& a) {
  if (is_radical_act(r, a)) {
    const std::optional<Extension> h = lab.r_injective_hull(r, a);
    if (h && !is_radical_act(r, h->embedding.target)) {
      return Outcome::violated(witness(&r, {a, h->embedding.target}, {{"part", "1"}}));
    }
  }
  if (lab.r_injective(r, a)) {
    for (ElemSet x : check::sigma_masks(a, r(a))) {
      if (!lab.r_injective(r, as_act(Subact{a, x}).act)) {
        return Outcome::violated(witness(&r, {a}, {{"part", "2"}, {"class", x}}));
      }
    }
  }
  return Outcome::holds();
}

// Truth values of the six heredity conditions for one monoid.
struct HeredityFacts {
  bool hereditary;
  bool collapse;
  bool subact_closed;
  bool r_hulls;
  bool hulls;
  bool rees;
};

HeredityFacts heredity_facts(const Universe& u, std::size_t i, const Radical& r) {
  MonoidLab& lab = u.lab(i);
  HeredityFacts f{lab.taxonomy(r).hereditary, true, true, true, true, true};
  for (const FiniteAct& b : u.acts(i)) {
    const std::optional<Extension> e = lab.injective_hull(b);
    std::vector<ActHom> ext = check::extensions(u, i, b);
    if (e) ext.push_back(e->embedding);
    for (const Congruence& kappa : all_congruences(b)) {
      const bool radical = is_radical_act(r, quotient(b, kappa).act);
      bool some = false;
      for (const ActHom& m : ext) {
        if (check::collapses_in_extension(r, m, kappa)) {
          some = true;
          break;
        }
      }
      if (radical != some) f.collapse = false;
    }
    if (is_radical_act(r, b)) {
      for (const Subact& s : subacts(b)) {
        if (!is_radical_act(r, as_act(s).act)) f.subact_closed = false;
      }
    }
    if (is_semisimple_act(r, b)) {
      const std::optional<Extension> h = lab.r_injective_hull(r, b);
      if (h && !is_semisimple_act(r, h->embedding.target)) f.r_hulls = false;
      if (e && !is_semisimple_act(r, e->embedding.target)) f.hulls = false;
    }
    for (const std::vector<ElemSet>& fam : check::disjoint_families(b)) {
      std::vector<Subact> sys;
      bool classes_semisimple = true;
      for (ElemSet m : fam) {
        sys.push_back(Subact{b, m});
        classes_semisimple = classes_semisimple && is_semisimple_act(r, as_act(sys.back()).act);
      }
      if (classes_semisimple && is_essential(b, rees_congruence(b, sys)) &&
          !is_semisimple_act(r, b)) {
        f.rees = false;
      }
    }
  }
  return f;
}

void heredity(const Universe& u, Tally& t) {
  for (const Radical& r : u.radicals()) {
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      t.record(key(r.name(), u.monoid(i).name()), [&] {
        if (!u.lab(i).taxonomy(r).kurosh_amitsur) return Outcome::filtered();
        const HeredityFacts f = heredity_facts(u, i, r);
        const bool agree = f.hereditary == f.collapse && f.hereditary == f.subact_closed &&
                           f.hereditary == f.r_hulls && f.hereditary == f.hulls &&
                           f.hereditary == f.rees;
        return Outcome::check(agree, Json{{"radical", r.name()},
                                          {"monoid", u.monoid(i).name()},
                                          {"hereditary", f.hereditary},
                                          {"collapse", f.collapse},
                                          {"subact_closed", f.subact_closed},
                                          {"r_hulls", f.r_hulls},
                                          {"hulls", f.hulls},
                                          {"rees", f.rees}});
      });
    }
  }
}

void rg_injectivity(const Universe& u, Tally& t) {
  Radical rg = Radical::rG();
  for (const Radical& r : u.radicals()) {
    if (r.name() == "rG") rg = r;
  }
  for (std::size_t i = 0; i < u.num_monoids(); ++i) {
    MonoidLab& lab = u.lab(i);
    for (const FiniteAct& a : u.acts(i)) {
      t.record(key(a.name()), [&] {
        const bool lhs = lab.r_injective(rg, a);
        const bool rhs = lab.injective(a);
        return Outcome::check(lhs == rhs, witness(&rg, {a}, {{"rG_injective", lhs},
                                                             {"injective", rhs},
                                                             {"has_zero", zeros(a) != 0}}));
      });
    }
  }
}

void injective_criteria(const Universe& u, Tally& t) {
  for (std::size_t i = 0; i < u.num_monoids(); ++i) {
    MonoidLab& lab = u.lab(i);
    for (const FiniteAct& a : u.acts(i)) {
      t.record(key(a.name()), [&] {
        const bool large_pairs = lab.injective(a);
        const bool all_pairs = is_injective_skornjakov(a, lab.tests());
        const bool universe = lab.injective_universe(a);
        return Outcome::check(large_pairs == all_pairs && all_pairs == universe,
                              witness(nullptr, {a}, {{"large_pairs", large_pairs},
                                                     {"all_pairs", all_pairs},
                                                     {"universe", universe}}));
      });
    }
  }
}

}  // namespace

void add_kurosh_checkers(std::vector<Checker>& out) {
  out.push_back({"P7.1", "Kurosh-Amitsur r: the closure of A in E(A) is its minimal r-injective hull",
                 "", [](const Universe& u, Tally& t) { kurosh_acts(u, t, closure_hull_minimal); }});
  out.push_back({"C7.2", "Kurosh-Amitsur r: r-injective iff r-closed in the injective hull", "",
                 [](const Universe& u, Tally& t) { kurosh_acts(u, t, closed_in_hull); }});
  out.push_back({"T7.3", "Kurosh-Amitsur r: six equivalent forms of heredity", "", heredity});
  out.push_back({"T7.5", "Kurosh-Amitsur r: an r-injective act is semisimple iff its hull is", "",
                 [](const Universe& u, Tally& t) { kurosh_acts(u, t, hull_semisimple); }});
  out.push_back({"T7.6", "Kurosh-Amitsur r: radical acts have radical r-injective hulls", "",
                 [](const Universe& u, Tally& t) { kurosh_acts(u, t, radical_hulls); }});
  out.push_back({"T7.8", "r_G-injective iff injective", "", rg_injectivity});
  out.push_back({"C7.9", "injectivity by large cyclic pairs, by all cyclic pairs and by the universe",
                 "", injective_criteria});
}

}  // namespace radact
