#include <algorithm>
#include <set>

#include "checkers.hpp"

namespace radact {

namespace {

using check::key;
using check::witness;

std::string map_string(const std::vector<Elem>& m) {
  std::string s;
  for (Elem x : m) s += std::to_string(x) + ",";
  return s;
}

void large_meets(const Universe& u, Tally& t) {
  for (std::size_t i = 0; i < u.num_monoids(); ++i) {
    for (const FiniteAct& a : u.acts(i)) {
      for (const Subact& b : subacts(a)) {
        t.record(key(a.name(), check::mask(b.members)), [&] {
          if (b.trivial() || !is_large(a, b.members)) return Outcome::filtered();
          return Outcome::check(intersection_large(a, b.members),
                                witness(nullptr, {a}, {{"B", b.members}}));
        });
      }
    }
  }
}

// Semisimple A with r-dense B: B is ∩-large, under a per-monoid hypothesis.
template <typename Hyp>
void dense_in_semisimple(const Universe& u, Tally& t, Hyp hyp) {
  for (const Radical& r : u.radicals()) {
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      const bool h = hyp(u, i, r);
      for (const FiniteAct& a : u.acts(i)) {
        for (const Subact& b : subacts(a)) {
          t.record(key(r.name(), a.name(), check::mask(b.members)), [&] {
            if (!h || !is_semisimple_act(r, a) || !is_r_dense(r, b)) return Outcome::filtered();
            return Outcome::check(intersection_large(a, b.members),
                                  witness(&r, {a}, {{"B", b.members}}));
          });
        }
      }
    }
  }
}

void collective_largeness(const Universe& u, Tally& t) {
  for (std::size_t i = 0; i < u.num_monoids(); ++i) {
    for (const FiniteAct& a : u.acts(i)) {
      for (const std::vector<ElemSet>& fam : check::disjoint_families(a)) {
        std::string name;
        for (ElemSet m : fam) name += check::mask(m) + ",";
        t.record(key(a.name(), name), [&] {
          const bool by_congruence = collectively_large(a, fam);
          const bool by_homs = collectively_large_by_homs(a, fam, u.acts(i));
          return Outcome::check(by_congruence == by_homs,
                                witness(nullptr, {a}, {{"family", fam},
                                                       {"by_congruence", by_congruence},
                                                       {"by_homs", by_homs}}));
        });
      }
    }
  }
}

bool essential_mono(const ActHom& f, const std::vector<FiniteAct>& targets) {
  if (!f.injective()) return false;
  for (const FiniteAct& c : targets) {
    for (const ActHom& g : all_homs(f.target, c)) {
      if (!g.injective() && compose(g, f).injective()) return false;
    }
  }
  return true;
}

void essential_monos(const Universe& u, Tally& t) {
  for (std::size_t i = 0; i < u.num_monoids(); ++i) {
    for (const FiniteAct& a : u.acts(i)) {
      for (const FiniteAct& b : u.acts(i)) {
        for (const ActHom& f : all_homs(a, b)) {
          t.record(key(a.name(), b.name(), map_string(f.map)), [&] {
            const bool by_homs = essential_mono(f, u.acts(i));
            const bool by_rees =
                f.injective() && is_essential(b, rees_congruence(b, f.image()));
            return Outcome::check(by_homs == by_rees,
                                  witness(nullptr, {a, b}, {{"hom", f.map},
                                                            {"by_homs", by_homs},
                                                            {"by_rees", by_rees}}));
          });
        }
      }
    }
  }
}

void complement_quotients(const Universe& u, Tally& t) {
  for (std::size_t i = 0; i < u.num_monoids(); ++i) {
    for (const FiniteAct& a : u.acts(i)) {
      for (const Congruence& chi : all_congruences(a)) {
        for (const Congruence& kappa : maximal_complements(a, chi)) {
          t.record(key(a.name(), chi.to_string(), kappa.to_string()), [&] {
            const Quotient q = quotient(a, kappa);
            const Congruence image = quotient_congruence(q, join(a, kappa, chi));
            return Outcome::check(is_essential(q.act, image),
                                  witness(nullptr, {a}, {{"chi", chi.to_string()},
                                                        {"kappa", kappa.to_string()}}));
          });
        }
      }
    }
  }
}

void complement_on_classes(const Universe& u, Tally& t) {
  for (std::size_t i = 0; i < u.num_monoids(); ++i) {
    for (const FiniteAct& a : u.acts(i)) {
      for (const Congruence& chi : all_congruences(a)) {
        const std::vector<ElemSet> sigma = check::sigma_masks(a, chi);
        for (const Congruence& kappa : maximal_complements(a, chi)) {
          t.record(key(a.name(), chi.to_string(), kappa.to_string()), [&] {
            for (ElemSet x : sigma) {
              const Congruence part = restrict_to(Subact{a, x}, kappa);
              if (!part.is_diagonal()) {
                return Outcome::violated(witness(nullptr, {a}, {{"chi", chi.to_string()},
                                                                {"kappa", kappa.to_string()},
                                                                {"class", x}}));
              }
            }
            return Outcome::holds();
          });
        }
      }
    }
  }
}

void rees_image(const Universe& u, Tally& t) {
  for (std::size_t i = 0; i < u.num_monoids(); ++i) {
    for (const FiniteAct& a : u.acts(i)) {
      for (const Subact& b : subacts(a)) {
        const Congruence rho = rees_congruence(a, b.members);
        for (const Congruence& kappa : maximal_complements(a, rho)) {
          t.record(key(a.name(), check::mask(b.members), kappa.to_string()), [&] {
            const Quotient q = quotient(a, kappa);
            std::set<std::pair<Elem, Elem>> lhs;
            for (auto [x, y] : image_relation(q.projection, rho)) {
              if (x != y) lhs.emplace(std::min(x, y), std::max(x, y));
            }
            const Congruence rhs = quotient_congruence(q, join(a, rho, kappa));
            std::set<std::pair<Elem, Elem>> rhs_pairs;
            for (std::size_t x = 0; x < q.act.size(); ++x) {
              for (std::size_t y = x + 1; y < q.act.size(); ++y) {
                if (rhs.related(static_cast<Elem>(x), static_cast<Elem>(y))) {
                  rhs_pairs.emplace(static_cast<Elem>(x), static_cast<Elem>(y));
                }
              }
            }
            return Outcome::check(lhs == rhs_pairs,
                                  witness(nullptr, {a}, {{"B", b.members},
                                                        {"kappa", kappa.to_string()}}));
          });
        }
      }
    }
  }
}

void banaschewski(const Universe& u, Tally& t) {
  for (const Radical& r : u.radicals()) {
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      for (const FiniteAct& a : u.acts(i)) {
        for (const Subact& b : subacts(a)) {
          if (!is_r_dense(r, b)) continue;
          t.record(key(r.name(), a.name(), check::mask(b.members)), [&] {
            const BanaschewskiResult res = banaschewski_reduce(r, as_act(b).inclusion);
            return Outcome::check(res.injective && res.large && res.r_dense,
                                  witness(&r, {a}, {{"B", b.members},
                                                    {"kappa", res.kappa.to_string()},
                                                    {"injective", res.injective},
                                                    {"large", res.large},
                                                    {"r_dense", res.r_dense}}));
          });
        }
      }
    }
  }
}

}  // namespace

void add_large_checkers(std::vector<Checker>& out) {
  out.push_back({"L2.15", "large subacts are intersection-large", "", large_meets});
  out.push_back({"T2.16", "pre-hereditary r: r-dense subacts of semisimple acts are intersection-large",
                 "", [](const Universe& u, Tally& t) {
                   dense_in_semisimple(u, t, [](const Universe& v, std::size_t i, const Radical& r) {
                     return v.lab(i).taxonomy(r).pre_hereditary;
                   });
                 }});
  out.push_back({"P2.17",
                 "zero-hereditary r with coproduct-closed semisimple class: r-dense subacts of "
                 "semisimple acts are intersection-large",
                 "", [](const Universe& u, Tally& t) {
                   dense_in_semisimple(u, t, [](const Universe& v, std::size_t i, const Radical& r) {
                     return v.lab(i).taxonomy(r).zero_hereditary &&
                            check::semisimple_class_coproduct_closed(v, i, r);
                   });
                 }});
  out.push_back({"T3.4", "collective largeness by congruences agrees with the hom definition", "",
                 collective_largeness});
  out.push_back({"C3.5", "essential monos are exactly the injective homs with essential Rees image",
                 "", essential_monos});
  out.push_back({"T3.6", "(kappa v chi)/kappa is essential on A/kappa for maximal complements", "",
                 complement_quotients});
  out.push_back({"L3.7", "a maximal complement of chi is diagonal on every subact class of chi", "",
                 complement_on_classes});
  out.push_back({"L3.8", "the projection of rho_B equals (rho_B v kappa)/kappa", "", rees_image});
  out.push_back({"T3.10", "the reduction of an r-mono is a large r-mono", "", banaschewski});
}

}  // namespace radact
