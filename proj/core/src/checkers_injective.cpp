#include <set>

#include "checkers.hpp"
#include "radact/enumeration.hpp"

namespace radact {

namespace {

using check::key;
using check::witness;
using Pair = CyclicTests::Pair;

bool subset(ElemSet a, ElemSet b) { return (a & ~b) == 0; }

std::string map_string(const std::vector<Elem>& m) {
  std::string s;
  for (Elem x : m) s += std::to_string(x) + ",";
  return s;
}

// Injective homs between acts of monoid i with r-dense image.
std::vector<ActHom> r_monos(const Universe& u, std::size_t i, const Radical& r) {
  std::vector<ActHom> out;
  for (const FiniteAct& a : u.acts(i)) {
    for (const FiniteAct& b : u.acts(i)) {
      if (b.size() < a.size()) continue;
      for (ActHom& f : all_homs(a, b)) {
        if (is_r_mono(r, f)) out.push_back(std::move(f));
      }
    }
  }
  return out;
}

template <typename Body>
void per_act(const Universe& u, Tally& t, Body body) {
  for (const Radical& r : u.radicals()) {
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      for (const FiniteAct& a : u.acts(i)) {
        t.record(key(r.name(), a.name()), [&] { return body(r, i, a); });
      }
    }
  }
}

void semisimple_factor(const Universe& u, Tally& t) {
  for (const Radical& r : u.radicals()) {
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      MonoidLab& lab = u.lab(i);
      for (const FiniteAct& e : u.acts(i)) {
        for (const Subact& f : subacts(e)) {
          t.record(key(r.name(), e.name(), check::mask(f.members)), [&] {
            if (!lab.r_injective(r, e) || !is_semisimple_act(r, rees_quotient(e, f).act)) {
              return Outcome::filtered();
            }
            return Outcome::check(lab.r_injective(r, as_act(f).act),
                                  witness(&r, {e}, {{"F", f.members}}));
          });
        }
      }
    }
  }
}

void lr_description(const Universe& u, Tally& t) {
  for (const Radical& r : u.radicals()) {
    const Radical tl = lr_radical(r);
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      t.record(key(r.name(), "kurosh_amitsur", u.monoid(i).name()), [&] {
        const Taxonomy tax = classify_radical(tl, u.acts(i));
        return Outcome::check(tax.kurosh_amitsur,
                              Json{{"radical", tl.name()}, {"monoid", u.monoid(i).name()},
                                   {"reason", tax.witnesses.count("kurosh_amitsur")
                                                  ? tax.witnesses.at("kurosh_amitsur")
                                                  : ""}});
      });
      std::set<std::size_t> dense_quotients;
      for (const FiniteAct& a : u.acts(i)) {
        for (const Subact& b : subacts(a)) {
          if (!is_r_dense(r, b)) continue;
          if (auto m = u.lookup(rees_quotient(a, b).act)) {
            for (std::size_t k = 0; k < u.acts(i).size(); ++k) {
              if (u.acts(i)[k].name() == m->name()) dense_quotients.insert(k);
            }
          }
        }
      }
      for (std::size_t k = 0; k < u.acts(i).size(); ++k) {
        const FiniteAct& a = u.acts(i)[k];
        t.record(key(r.name(), a.name()), [&] {
          const bool by_quotients = dense_quotients.count(k) > 0;
          const bool by_class = in_Lr(r, a);
          const bool by_radical = is_radical_act(tl, a);
          return Outcome::check(by_quotients == by_class && by_class == by_radical,
                                witness(&r, {a}, {{"dense_quotient", by_quotients},
                                                  {"in_L_r", by_class},
                                                  {"t_radical", by_radical}}));
        });
      }
    }
  }
}

void lr_injectivity(const Universe& u, Tally& t) {
  for (const Radical& r : u.radicals()) {
    const Radical tl = lr_radical(r);
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      for (const FiniteAct& a : u.acts(i)) {
        t.record(key(r.name(), a.name()), [&] {
          const bool lhs = u.lab(i).r_injective(r, a);
          const bool rhs = u.lab(i).r_injective(tl, a);
          return Outcome::check(lhs == rhs, witness(&r, {a}, {{"r_injective", lhs},
                                                             {"t_injective", rhs}}));
        });
      }
    }
  }
}

void orthogonal_semisimple(const Universe& u, Tally& t) {
  for (const Radical& r : u.radicals()) {
    const Radical tl = lr_radical(r);
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      for (const FiniteAct& a : u.acts(i)) {
        t.record(key(r.name(), a.name()), [&] {
          if (!u.lab(i).orthogonal_r_injective(r, a)) return Outcome::filtered();
          return Outcome::check(is_semisimple_act(tl, a), witness(&r, {a}));
        });
      }
    }
  }
}

void images_in_closure(const Universe& u, Tally& t) {
  for (const Radical& r : u.radicals()) {
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      MonoidLab& lab = u.lab(i);
      for (const FiniteAct& q : u.acts(i)) {
        t.record(key(r.name(), q.name()), [&] {
          if (!lab.r_injective(r, q)) return Outcome::filtered();
          for (const Pair& p : lab.dense_inclusions(r)) {
            for (const ActHom& g : all_homs(p.cyclic, q)) {
              const ElemSet lhs = g.image();
              const ElemSet rhs = closure(r, q, g.image_of(p.sub)).members;
              if (!subset(lhs, rhs)) {
                return Outcome::violated(witness(&r, {q, p.cyclic}, {{"sub", p.sub},
                                                                     {"hom", g.map}}));
              }
            }
          }
          return Outcome::holds();
        });
      }
    }
  }
}

void closure_injectivity(const Universe& u, Tally& t) {
  for (const Radical& r : u.radicals()) {
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      MonoidLab& lab = u.lab(i);
      for (const FiniteAct& a : u.acts(i)) {
        t.record(key(r.name(), "i", a.name()), [&] {
          if (!lab.r_injective(r, a)) return Outcome::filtered();
          for (const Subact& b : subacts(a)) {
            if (!lab.r_injective(r, as_act(closure(r, b)).act)) {
              return Outcome::violated(witness(&r, {a}, {{"part", "i"}, {"B", b.members}}));
            }
          }
          return Outcome::holds();
        });
        t.record(key(r.name(), "ii", a.name()), [&] {
          const std::optional<Extension> e = lab.injective_hull(a);
          if (!e) return Outcome::skipped("no injective hull within the bound");
          const Subact c = closure(r, e->embedding.target, e->embedding.image());
          return Outcome::check(lab.r_injective(r, as_act(c).act),
                                witness(&r, {a, e->embedding.target},
                                        {{"part", "ii"}, {"closure", c.members}}));
        });
        t.record(key(r.name(), "iii", a.name()), [&] {
          const bool lhs = lab.r_injective(r, a);
          bool rhs = true;
          for (const Subact& b : subacts(a)) {
            if (is_r_closed(r, b) && !lab.r_injective(r, as_act(b).act)) rhs = false;
          }
          return Outcome::check(lhs == rhs, witness(&r, {a}, {{"part", "iii"},
                                                             {"r_injective", lhs},
                                                             {"closed_subacts", rhs}}));
        });
      }
    }
  }
}

void pushouts(const Universe& u, Tally& t) {
  for (const Radical& r : u.radicals()) {
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      for (const Pair& p : u.lab(i).dense_inclusions(r)) {
        const EmbeddedSubact e = as_act(make_subact(p.cyclic, p.sub));
        const ActHom& m = e.inclusion;
        for (const FiniteAct& c : u.acts(i)) {
          for (const ActHom& f : all_homs(e.act, c)) {
            t.record(key(r.name(), p.cyclic.name(), check::mask(p.sub), c.name(),
                         map_string(f.map)),
                     [&] {
                       const Pushout po = transfer_pushout(r, m, f);
                       const bool commutes = compose(po.v, m).map == compose(po.u, f).map;
                       const bool mono = po.u.injective() && is_r_mono(r, po.u);
                       const FiniteAct lhs =
                           rees_quotient(po.d, make_subact(po.d, po.u.image())).act;
                       const FiniteAct rhs = rees_quotient(p.cyclic, make_subact(p.cyclic, p.sub)).act;
                       const bool iso = find_isomorphism(lhs, rhs).has_value();
                       return Outcome::check(commutes && mono && iso,
                                             witness(&r, {p.cyclic, c, po.d},
                                                     {{"sub", p.sub},
                                                      {"f", f.map},
                                                      {"commutes", commutes},
                                                      {"u_r_mono", mono},
                                                      {"factor_iso", iso}}));
                     });
          }
        }
      }
    }
  }
}

// Chains of two or three acts whose links satisfy `link_ok`, with every act
// satisfying `act_ok`.
template <typename ActOk, typename LinkOk, typename Visit>
void for_each_chain(const Universe& u, std::size_t i, ActOk act_ok, LinkOk link_ok, Visit visit) {
  std::vector<FiniteAct> members;
  for (const FiniteAct& a : u.acts(i)) {
    if (act_ok(a)) members.push_back(a);
  }
  std::vector<ActHom> links;
  for (const FiniteAct& a : members) {
    for (const FiniteAct& b : members) {
      if (b.size() < a.size()) continue;
      for (ActHom& f : all_homs(a, b)) {
        if (f.injective() && link_ok(f)) links.push_back(std::move(f));
      }
    }
  }
  for (const ActHom& f : links) {
    visit(DirectedChain::make({f.source, f.target}, {f}), map_string(f.map));
    for (const ActHom& g : links) {
      if (!(g.source == f.target)) continue;
      visit(DirectedChain::make({f.source, f.target, g.target}, {f, g}),
            map_string(f.map) + "/" + map_string(g.map));
    }
  }
}

std::string chain_name(const DirectedChain& c) {
  std::string s;
  for (std::size_t k = 0; k < c.length(); ++k) s += (k ? ">" : "") + c.act(k).name();
  return s;
}

void radical_limits(const Universe& u, Tally& t) {
  for (const Radical& r : u.radicals()) {
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      for_each_chain(
          u, i, [&](const FiniteAct& a) { return is_radical_act(r, a); },
          [](const ActHom&) { return true; },
          [&](const DirectedChain& c, const std::string& maps) {
            t.record(key(r.name(), chain_name(c), maps), [&] {
              const DirectLimit lim = direct_limit(c);
              return Outcome::check(is_radical_act(r, lim.act),
                                    witness(&r, {c.act(0), c.act(c.length() - 1), lim.act}));
            });
          });
    }
  }
}

void directed_legs(const Universe& u, Tally& t) {
  for (const Radical& r : u.radicals()) {
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      for_each_chain(
          u, i, [](const FiniteAct&) { return true; },
          [&](const ActHom& f) { return is_r_mono(r, f); },
          [&](const DirectedChain& c, const std::string& maps) {
            t.record(key(r.name(), chain_name(c), maps), [&] {
              const DirectLimit lim = direct_limit(c);
              for (std::size_t k = 0; k < lim.legs.size(); ++k) {
                if (!is_r_mono(r, lim.legs[k])) {
                  return Outcome::violated(witness(&r, {c.act(k), lim.act},
                                                   {{"leg", k}, {"map", lim.legs[k].map}}));
                }
              }
              return Outcome::holds();
            });
          });
    }
  }
}

void mono_class(const Universe& u, Tally& t) {
  for (const Radical& r : u.radicals()) {
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      const std::vector<ActHom> monos = r_monos(u, i, r);
      for (const ActHom& f : monos) {
        t.record(key(r.name(), "composition", f.source.name(), f.target.name(), map_string(f.map)),
                 [&] {
                   for (const ActHom& g : monos) {
                     if (!(g.source == f.target)) continue;
                     if (!is_r_mono(r, compose(g, f))) {
                       return Outcome::violated(witness(&r, {f.source, f.target, g.target},
                                                        {{"f", f.map}, {"g", g.map}}));
                     }
                   }
                   return Outcome::holds();
                 });
        t.record(key(r.name(), "isomorphisms", f.source.name(), f.target.name(), map_string(f.map)),
                 [&] {
                   for (const ActHom& h : all_homs(f.target, f.target)) {
                     if (!h.injective()) continue;
                     if (!is_r_mono(r, compose(h, f))) {
                       return Outcome::violated(witness(&r, {f.source, f.target},
                                                        {{"f", f.map}, {"iso", h.map}}));
                     }
                   }
                   return Outcome::holds();
                 });
      }
      for (const FiniteAct& a : u.acts(i)) {
        t.record(key(r.name(), "identity", a.name()), [&] {
          return Outcome::check(is_r_mono(r, identity_hom(a)), witness(&r, {a}));
        });
      }
    }
  }
}

// Retractions are sought for universe r-monos out of A and for the r-dense
// one-point superacts of A.
bool absolute_retract(const Universe& u, const Radical& r, const FiniteAct& a,
                      const std::vector<ActHom>& monos) {
  for (const ActHom& m : monos) {
    if (!(m.source == a)) continue;
    std::vector<Elem> partial(m.target.size(), kUnset);
    for (std::size_t x = 0; x < a.size(); ++x) partial[m(static_cast<Elem>(x))] = static_cast<Elem>(x);
    if (!extend_partial_hom(m.target, a, std::move(partial))) return false;
  }
  if (a.size() + 1 > u.bounds().hull_bound) return true;
  return for_each_action(a.monoid(), a, a.size() + 1, [&](const FiniteAct& q) {
    if (!is_r_dense(r, Subact{q, a.carrier()})) return true;
    std::vector<Elem> partial(q.size(), kUnset);
    for (std::size_t x = 0; x < a.size(); ++x) partial[x] = static_cast<Elem>(x);
    return extend_partial_hom(q, a, std::move(partial)).has_value();
  });
}

// A proper r-essential extension among universe embeddings and one-point
// superacts.
bool has_proper_r_essential_extension(const Universe& u, std::size_t i, const Radical& r,
                                      const FiniteAct& a) {
  for (const ActHom& m : check::extensions(u, i, a)) {
    if (m.target.size() > a.size() && is_large(m.target, m.image()) &&
        is_r_dense(r, Subact{m.target, m.image()})) {
      return true;
    }
  }
  if (a.size() + 1 > u.bounds().hull_bound) return false;
  return !for_each_action(a.monoid(), a, a.size() + 1, [&](const FiniteAct& q) {
    return !(is_large(q, a.carrier()) && is_r_dense(r, Subact{q, a.carrier()}));
  });
}

void well_behaved(const Universe& u, Tally& t) {
  for (const Radical& r : u.radicals()) {
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      const std::vector<ActHom> monos = r_monos(u, i, r);
      for (const FiniteAct& a : u.acts(i)) {
        t.record(key(r.name(), a.name()), [&] {
          const bool inj = u.lab(i).r_injective(r, a);
          const bool retract = absolute_retract(u, r, a, monos);
          const bool maximal = !has_proper_r_essential_extension(u, i, r, a);
          return Outcome::check(inj == retract && inj == maximal,
                                witness(&r, {a}, {{"r_injective", inj},
                                                  {"absolute_retract", retract},
                                                  {"no_proper_r_essential_extension", maximal}}));
        });
      }
    }
  }
}

void hull_maximal(const Universe& u, Tally& t) {
  for (std::size_t i = 0; i < u.num_monoids(); ++i) {
    for (const FiniteAct& a : u.acts(i)) {
      t.record(key(a.name()), [&] {
        const std::optional<Extension> e = u.lab(i).injective_hull(a);
        if (!e) return Outcome::skipped("no injective hull within the bound");
        const FiniteAct& q = e->embedding.target;
        if (q.size() >= u.bounds().hull_bound) return Outcome::skipped("no room within the bound");
        for (std::size_t n = q.size() + 1; n <= u.bounds().hull_bound; ++n) {
          std::optional<FiniteAct> bigger;
          for_each_action(q.monoid(), q, n, [&](const FiniteAct& p) {
            if (is_large(p, q.carrier())) {
              bigger = p;
              return false;
            }
            return true;
          });
          if (bigger) return Outcome::violated(witness(nullptr, {a, q, *bigger}));
        }
        return Outcome::holds();
      });
    }
  }
}

void coproduct_closed_injectives(const Universe& u, Tally& t) {
  constexpr std::size_t kProductBound = 8;
  for (const Radical& r : u.radicals()) {
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      MonoidLab& lab = u.lab(i);
      const bool hyp = check::radical_class_coproduct_closed(u, i, r) &&
                       is_radical_act(r, coproduct(trivial_act(u.monoid(i)),
                                                   trivial_act(u.monoid(i))).act);
      const auto& acts = u.acts(i);
      for (const FiniteAct& q : acts) {
        t.record(key(r.name(), "zero", q.name()), [&] {
          if (!hyp || !lab.r_injective(r, q)) return Outcome::filtered();
          return Outcome::check(zeros(q) != 0, witness(&r, {q}));
        });
      }
      for (std::size_t x = 0; x < acts.size(); ++x) {
        for (std::size_t y = x; y < acts.size(); ++y) {
          if (acts[x].size() * acts[y].size() > kProductBound) continue;
          t.record(key(r.name(), "product", acts[x].name(), acts[y].name()), [&] {
            if (!hyp) return Outcome::filtered();
            const FiniteAct parts[] = {acts[x], acts[y]};
            const FiniteAct p = product(parts);
            const bool lhs = lab.r_injective(r, p);
            const bool rhs = lab.r_injective(r, acts[x]) && lab.r_injective(r, acts[y]);
            return Outcome::check(lhs == rhs, witness(&r, {acts[x], acts[y]},
                                                      {{"product", lhs}, {"factors", rhs}}));
          });
        }
      }
    }
  }
}

template <typename PairOk>
void cyclic_test(const Universe& u, Tally& t, PairOk pair_ok) {
  for (const Radical& r : u.radicals()) {
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      MonoidLab& lab = u.lab(i);
      const bool hyp = lab.taxonomy(r).zero_hereditary;
      for (const FiniteAct& q : u.acts(i)) {
        t.record(key(r.name(), q.name()), [&] {
          if (!hyp || zeros(q) == 0) return Outcome::filtered();
          const bool lhs = lab.r_injective(r, q, InjMode::Universe);
          bool rhs = true;
          for (const Pair& p : lab.tests().all_pairs()) {
            if (pair_ok(r, p) && !extends_along(p.cyclic, p.sub, q)) {
              rhs = false;
              break;
            }
          }
          return Outcome::check(lhs == rhs, witness(&r, {q}, {{"r_injective", lhs},
                                                             {"cyclic_criterion", rhs}}));
        });
      }
    }
  }
}

void weak_injectivity(const Universe& u, Tally& t) {
  for (const Radical& r : u.radicals()) {
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      MonoidLab& lab = u.lab(i);
      const bool hyp = lab.taxonomy(r).hereditary;
      const FiniteAct s = left_regular_act(u.monoid(i));
      const FiniteAct p = quotient(s, r(s)).act;
      for (const FiniteAct& q : u.acts(i)) {
        t.record(key(r.name(), q.name()), [&] {
          if (!hyp || !is_semisimple_act(r, q)) return Outcome::filtered();
          const bool lhs = lab.weakly_injective(q);
          bool rhs = true;
          for (const Subact& k : subacts(p)) {
            if (!extends_along(p, k.members, q)) rhs = false;
          }
          return Outcome::check(lhs == rhs, witness(&r, {q, p}, {{"weakly_injective", lhs},
                                                                {"extends_to_S/r(S)", rhs}}));
        });
      }
    }
  }
}

}  // namespace

void add_injective_checkers(std::vector<Checker>& out) {
  out.push_back({"T4.2", "subacts with semisimple Rees factor inherit r-injectivity", "",
                 semisimple_factor});
  out.push_back({"L4.3", "quotients by r-dense subacts form the radical class of a Kurosh-Amitsur radical",
                 "", lr_description});
  out.push_back({"T4.4", "r-injectivity equals t-injectivity for t induced by L_r", "",
                 lr_injectivity});
  out.push_back({"T4.5", "orthogonal r-injective acts are t-semisimple", "", orthogonal_semisimple});
  out.push_back({"T4.6", "homs into an r-injective act map r-dense subacts densely", "",
                 images_in_closure});
  out.push_back({"C4.7", "r-closures of subacts of r-injective acts are r-injective", "",
                 closure_injectivity});
  out.push_back({"L5.1", "the transfer pushout of an r-mono is an r-mono", "", pushouts});
  out.push_back({"L5.3", "direct limits of chains of radical acts are radical", "",
                 radical_limits});
  out.push_back({"T5.5", "legs of an r-directed chain are r-monos", "", directed_legs});
  out.push_back({"R5.6", "r-monos contain the isomorphisms and are closed under composition", "",
                 mono_class});
  out.push_back({"WB1", "r-injective iff absolute retract iff no proper r-essential extension",
                 "bounded-universe verification", well_behaved});
  out.push_back({"WB3", "injective hulls have no proper large extension", "", hull_maximal});
  out.push_back({"T6.1", "coproduct-closed radical class: r-injectives have zeros and products",
                 "", coproduct_closed_injectives});
  out.push_back({"T6.2", "zero-hereditary r: r-injective iff r-dense cyclic subacts extend", "",
                 [](const Universe& u, Tally& t) {
                   cyclic_test(u, t, [](const Radical& r, const Pair& p) {
                     return is_r_dense(r, Subact{p.cyclic, p.sub});
                   });
                 }});
  out.push_back({"C6.3", "zero-hereditary r: r-injective iff r-large cyclic subacts extend", "",
                 [](const Universe& u, Tally& t) {
                   cyclic_test(u, t, [](const Radical& r, const Pair& p) {
                     return is_large(p.cyclic, p.sub) && is_r_dense(r, Subact{p.cyclic, p.sub});
                   });
                 }});
  out.push_back({"T6.5", "hereditary r: semisimple weak injectives are tested on S/r(S)", "",
                 weak_injectivity});
}

}  // namespace radact
