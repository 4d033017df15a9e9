#include <algorithm>

#include "checkers.hpp"

namespace radact {

namespace {

using check::key;
using check::witness;

bool subset(ElemSet a, ElemSet b) { return (a & ~b) == 0; }

std::string map_string(const std::vector<Elem>& m) {
  std::string s;
  for (Elem x : m) s += std::to_string(x) + ",";
  return s;
}

void closure_axioms(const Universe& u, Tally& t) {
  for (const Radical& r : u.radicals()) {
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      const auto& acts = u.acts(i);
      for (const FiniteAct& a : acts) {
        const std::vector<ElemSet> subs = check::subact_masks(a);
        for (ElemSet b : subs) {
          t.record(key(r.name(), "c1c2", a.name(), check::mask(b)), [&] {
            const ElemSet cb = closure(r, a, b).members;
            if (!subset(b, cb)) {
              return Outcome::violated(witness(&r, {a}, {{"axiom", "c1"}, {"B", b}, {"c(B)", cb}}));
            }
            if (closure(r, a, cb).members != cb) {
              return Outcome::violated(
                  witness(&r, {a}, {{"axiom", "idempotent"}, {"B", b}, {"c(B)", cb}}));
            }
            for (ElemSet b2 : subs) {
              if (subset(b, b2) && !subset(cb, closure(r, a, b2).members)) {
                return Outcome::violated(
                    witness(&r, {a}, {{"axiom", "c2"}, {"B", b}, {"C", b2}}));
              }
            }
            return Outcome::holds();
          });
        }
      }
      for (const FiniteAct& a : acts) {
        const std::vector<ElemSet> subs = check::subact_masks(a);
        for (const FiniteAct& c : acts) {
          for (const ActHom& f : all_homs(a, c)) {
            t.record(key(r.name(), "c3", a.name(), c.name(), map_string(f.map)), [&] {
              for (ElemSet b : subs) {
                const ElemSet lhs = f.image_of(closure(r, a, b).members);
                const ElemSet rhs = closure(r, c, f.image_of(b)).members;
                if (!subset(lhs, rhs)) {
                  return Outcome::violated(witness(
                      &r, {a, c}, {{"axiom", "c3"}, {"hom", f.map}, {"B", b}}));
                }
              }
              return Outcome::holds();
            });
          }
        }
      }
    }
  }
}

void dense_under_quotient(const Universe& u, Tally& t) {
  for (const Radical& r : u.radicals()) {
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      for (const FiniteAct& a : u.acts(i)) {
        for (const Subact& b : subacts(a)) {
          if (!is_r_dense(r, b)) continue;
          const EmbeddedSubact e = as_act(b);
          for (const Congruence& chi : all_congruences(e.act)) {
            t.record(key(r.name(), a.name(), check::mask(b.members), chi.to_string()), [&] {
              const Congruence ext = smallest_extension(b, chi);
              const Quotient q = quotient(a, ext);
              const Subact image{q.act, q.projection.image_of(b.members)};
              return Outcome::check(is_r_dense(r, image),
                                    witness(&r, {a}, {{"B", b.members}, {"chi", chi.to_string()}}));
            });
          }
        }
      }
    }
  }
}

void closed_sigma(const Universe& u, Tally& t) {
  for (const Radical& r : u.radicals()) {
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      for (const FiniteAct& a : u.acts(i)) {
        for (const Subact& b : subacts(a)) {
          if (!is_r_closed(r, b)) continue;
          t.record(key(r.name(), a.name(), check::mask(b.members)), [&] {
            const EmbeddedSubact e = as_act(b);
            const std::vector<ElemSet> sa = check::sigma_masks(a, r(a));
            for (ElemSet xb_local : check::sigma_masks(e.act, r(e.act))) {
              const ElemSet xb = check::to_parent(e, xb_local);
              for (ElemSet xa : sa) {
                if ((xa & xb) == 0) continue;
                if (!subset(xb, xa) || !subset(xa, b.members)) {
                  return Outcome::violated(
                      witness(&r, {a}, {{"B", b.members}, {"X_A", xa}, {"X_B", xb}}));
                }
              }
            }
            return Outcome::holds();
          });
        }
      }
    }
  }
}

bool closure_weakly_hereditary(const Radical& r, const std::vector<FiniteAct>& acts, Json& why) {
  for (const FiniteAct& a : acts) {
    for (const Subact& b : subacts(a)) {
      const Subact c = closure(r, b);
      const EmbeddedSubact e = as_act(c);
      ElemSet lb = 0;
      for (Elem x : b.elements()) lb |= singleton(e.local[x]);
      const ElemSet inner = check::to_parent(e, closure(r, e.act, lb).members);
      if (inner != c.members) {
        why = Json{{"act", a.name()}, {"B", b.members}, {"c_A(B)", c.members},
                   {"c_{c_A(B)}(B)", inner}};
        return false;
      }
    }
  }
  return true;
}

void weak_heredity(const Universe& u, Tally& t) {
  for (const Radical& r : u.radicals()) {
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      t.record(key(r.name(), u.monoid(i).name()), [&] {
        Json why = Json::object();
        const bool closure_side = closure_weakly_hereditary(r, u.acts(i), why);
        const bool flag = u.lab(i).taxonomy(r).weakly_hereditary;
        return Outcome::check(closure_side == flag, Json{{"radical", r.name()},
                                                         {"monoid", u.monoid(i).name()},
                                                         {"closure_side", closure_side},
                                                         {"flag", flag},
                                                         {"closure_failure", why}});
      });
    }
  }
}

template <typename Body>
void closed_subacts(const Universe& u, Tally& t, bool Taxonomy::*flag, Body body) {
  for (const Radical& r : u.radicals()) {
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      const bool hyp = u.lab(i).taxonomy(r).*flag;
      for (const FiniteAct& a : u.acts(i)) {
        for (const Subact& b : subacts(a)) {
          t.record(key(r.name(), a.name(), check::mask(b.members)), [&] {
            if (!hyp || !is_r_closed(r, b)) return Outcome::filtered();
            return body(r, a, b);
          });
        }
      }
    }
  }
}

Outcome sigma_inherited(const Radical& r, const FiniteAct& a, const Subact& b) {
  const EmbeddedSubact e = as_act(b);
  const std::vector<ElemSet> sa = check::sigma_masks(a, r(a));
  for (ElemSet local : check::sigma_masks(e.act, r(e.act))) {
    const ElemSet x = check::to_parent(e, local);
    if (std::find(sa.begin(), sa.end(), x) == sa.end()) {
      return Outcome::violated(witness(&r, {a}, {{"B", b.members}, {"X", x}}));
    }
  }
  return Outcome::holds();
}

Outcome radical_restricts(const Radical& r, const FiniteAct& a, const Subact& b) {
  const Congruence lhs = r(as_act(b).act);
  const Congruence rhs = restrict_to(b, r(a));
  return Outcome::check(lhs == rhs, witness(&r, {a}, {{"B", b.members},
                                                      {"r(B)", lhs.to_string()},
                                                      {"r(A)|B", rhs.to_string()}}));
}

std::vector<ActHom> extensions_with_hull(const Universe& u, std::size_t i, const FiniteAct& b,
                                         const std::optional<Extension>& hull) {
  std::vector<ActHom> out = check::extensions(u, i, b);
  if (hull) out.push_back(hull->embedding);
  return out;
}

void hull_collapse(const Universe& u, Tally& t) {
  for (const Radical& r : u.radicals()) {
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      for (const FiniteAct& b : u.acts(i)) {
        for (const Congruence& chi : all_congruences(b)) {
          t.record(key(r.name(), b.name(), chi.to_string()), [&] {
            const std::optional<Extension> hull = u.lab(i).injective_hull(b);
            if (!hull) return Outcome::skipped("no injective hull within the bound");
            const bool in_hull = check::collapses_in_extension(r, hull->embedding, chi);
            bool some = false;
            for (const ActHom& m : extensions_with_hull(u, i, b, hull)) {
              if (check::collapses_in_extension(r, m, chi)) {
                some = true;
                break;
              }
            }
            return Outcome::check(in_hull == some,
                                  witness(&r, {b, hull->embedding.target},
                                          {{"chi", chi.to_string()},
                                           {"in_hull", in_hull},
                                           {"in_some_extension", some}}));
          });
        }
      }
    }
  }
}

void hull_closure(const Universe& u, Tally& t) {
  for (const Radical& r : u.radicals()) {
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      for (const FiniteAct& b : u.acts(i)) {
        for (const Subact& c : subacts(b)) {
          t.record(key(r.name(), b.name(), check::mask(c.members)), [&] {
            const std::optional<Extension> hull = u.lab(i).injective_hull(b);
            if (!hull) return Outcome::skipped("no injective hull within the bound");
            auto covers = [&](const ActHom& m) {
              return subset(m.image(), closure(r, m.target, m.image_of(c.members)).members);
            };
            const bool in_hull = covers(hull->embedding);
            bool some = false;
            for (const ActHom& m : extensions_with_hull(u, i, b, hull)) {
              if (covers(m)) {
                some = true;
                break;
              }
            }
            return Outcome::check(in_hull == some,
                                  witness(&r, {b, hull->embedding.target},
                                          {{"C", c.members},
                                           {"in_hull", in_hull},
                                           {"in_some_extension", some}}));
          });
        }
      }
    }
  }
}

void dense_by_extensions(const Universe& u, Tally& t) {
  for (const Radical& r : u.radicals()) {
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      t.record(key(r.name(), u.monoid(i).name()), [&] {
        const bool flag = u.lab(i).taxonomy(r).zero_hereditary;
        bool agree = true;
        Json why = Json::object();
        for (const FiniteAct& b : u.acts(i)) {
          const std::optional<Extension> hull = u.lab(i).injective_hull(b);
          for (const Subact& c : subacts(b)) {
            const bool dense = is_r_dense(r, c);
            bool some = false;
            for (const ActHom& m : extensions_with_hull(u, i, b, hull)) {
              if (subset(m.image(), closure(r, m.target, m.image_of(c.members)).members)) {
                some = true;
                break;
              }
            }
            if (dense != some && agree) {
              agree = false;
              why = Json{{"act", b.name()}, {"C", c.members}, {"dense", dense},
                         {"extension_side", some}};
            }
          }
        }
        return Outcome::check(flag == agree, Json{{"radical", r.name()},
                                                  {"monoid", u.monoid(i).name()},
                                                  {"zero_hereditary", flag},
                                                  {"characterisation_holds", agree},
                                                  {"first_disagreement", why}});
      });
    }
  }
}

}  // namespace

void add_closure_checkers(std::vector<Checker>& out) {
  out.push_back({"D2.1", "c^r is a closure operator", "", closure_axioms});
  out.push_back({"L2.2", "r-density survives quotients by congruences of the dense subact", "",
                 dense_under_quotient});
  out.push_back({"P2.3", "classes of r(B) and r(A) are nested or disjoint for r-closed B", "",
                 closed_sigma});
  out.push_back({"T2.8", "c^r is weakly hereditary iff r is", "", weak_heredity});
  out.push_back({"P2.9", "pre-Kurosh r: subact classes of r(B) are classes of r(A) for r-closed B",
                 "", [](const Universe& u, Tally& t) {
                   closed_subacts(u, t, &Taxonomy::pre_kurosh, sigma_inherited);
                 }});
  out.push_back({"C2.10", "Kurosh-Amitsur r: r(B) is the restriction of r(A) for r-closed B", "",
                 [](const Universe& u, Tally& t) {
                   closed_subacts(u, t, &Taxonomy::kurosh_amitsur, radical_restricts);
                 }});
  out.push_back({"L2.11", "collapse in the injective hull iff collapse in some extension", "",
                 hull_collapse});
  out.push_back({"T2.12", "closure in the injective hull iff closure in some extension", "",
                 hull_closure});
  out.push_back({"P2.13", "zero-hereditary iff density is witnessed by extensions",
                 "bounded-universe verification", dense_by_extensions});
}

}  // namespace radact
