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

void hoehnke_axioms(const Universe& u, Tally& t) {
  for (const Radical& r : u.radicals()) {
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      const auto& acts = u.acts(i);
      for (const FiniteAct& a : acts) {
        t.record(key(r.name(), "ii", a.name()), [&] {
          const Congruence ra = r(a);
          const Quotient q = quotient(a, ra);
          const Congruence rq = r(q.act);
          return Outcome::check(rq.is_diagonal(),
                                witness(&r, {a}, {{"r(A)", ra.to_string()},
                                                  {"r(A/r(A))", rq.to_string()}}));
        });
      }
      for (const FiniteAct& a : acts) {
        for (const FiniteAct& b : acts) {
          for (const ActHom& f : all_homs(a, b)) {
            t.record(key(r.name(), "i", a.name(), b.name(), map_string(f.map)), [&] {
              const Congruence ra = r(a);
              const Congruence rb = r(b);
              for (std::size_t x = 0; x < a.size(); ++x) {
                for (std::size_t y = x + 1; y < a.size(); ++y) {
                  if (ra.related(static_cast<Elem>(x), static_cast<Elem>(y)) &&
                      !rb.related(f(static_cast<Elem>(x)), f(static_cast<Elem>(y)))) {
                    return Outcome::violated(witness(
                        &r, {a, b},
                        {{"hom", f.map}, {"r(A)", ra.to_string()}, {"r(B)", rb.to_string()}}));
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
}

void subact_placement(const Universe& u, Tally& t) {
  for (const Radical& r : u.radicals()) {
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      for (const FiniteAct& a : u.acts(i)) {
        t.record(key(r.name(), a.name()), [&] {
          const Congruence ra = r(a);
          const std::vector<ElemSet> sigma = check::sigma_masks(a, ra);
          for (const Subact& b : subacts(a)) {
            if (!b.trivial() && is_radical_act(r, as_act(b).act)) {
              bool placed = false;
              for (ElemSet x : sigma) placed = placed || (b.members & ~x) == 0;
              if (!placed) {
                return Outcome::violated(witness(
                    &r, {a}, {{"part", "i"}, {"subact", b.members}, {"r(A)", ra.to_string()}}));
              }
            }
            const ElemSet cls = ra.block_containing(static_cast<Elem>(std::countr_zero(b.members)));
            if ((b.members & ~cls) == 0 && !is_closed(a, cls)) {
              return Outcome::violated(witness(
                  &r, {a}, {{"part", "ii"}, {"subact", b.members}, {"class", cls}}));
            }
          }
          return Outcome::holds();
        });
      }
    }
  }
}

void quotient_below_radical(const Universe& u, Tally& t) {
  for (const Radical& r : u.radicals()) {
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      for (const FiniteAct& a : u.acts(i)) {
        const Congruence ra = r(a);
        for (const Congruence& chi : all_congruences(a)) {
          if (!chi.leq(ra)) continue;
          t.record(key(r.name(), a.name(), chi.to_string()), [&] {
            const Quotient q = quotient(a, chi);
            const Congruence lhs = r(q.act);
            const Congruence rhs = quotient_congruence(q, ra);
            return Outcome::check(lhs == rhs, witness(&r, {a}, {{"chi", chi.to_string()},
                                                                 {"r(A/chi)", lhs.to_string()},
                                                                 {"r(A)/chi", rhs.to_string()}}));
          });
        }
      }
    }
  }
}

struct Edge {
  const char* name;
  bool (*holds)(const Taxonomy&);
};

const Edge kEdges[] = {
    {"hereditary => pre_hereditary", [](const Taxonomy& x) { return !x.hereditary || x.pre_hereditary; }},
    {"pre_hereditary => zero_hereditary",
     [](const Taxonomy& x) { return !x.pre_hereditary || x.zero_hereditary; }},
    {"zero_hereditary => weakly_hereditary",
     [](const Taxonomy& x) { return !x.zero_hereditary || x.weakly_hereditary; }},
    {"kurosh_amitsur => pre_kurosh", [](const Taxonomy& x) { return !x.kurosh_amitsur || x.pre_kurosh; }},
    {"pre_kurosh => weakly_hereditary",
     [](const Taxonomy& x) { return !x.pre_kurosh || x.weakly_hereditary; }},
    {"hereditary kurosh_amitsur => hereditary",
     [](const Taxonomy& x) { return !(x.hereditary && x.kurosh_amitsur) || x.hereditary; }},
    {"kurosh_amitsur and pre_hereditary => hereditary",
     [](const Taxonomy& x) { return !(x.kurosh_amitsur && x.pre_hereditary) || x.hereditary; }},
};

void taxonomy_network(const Universe& u, Tally& t) {
  for (const Radical& r : u.radicals()) {
    const Taxonomy tax = universe_taxonomy(u, r);
    for (const Edge& e : kEdges) {
      t.record(key(r.name(), e.name), [&] {
        Json w{{"radical", r.name()}, {"edge", e.name}};
        for (const auto& [flag, why] : tax.witnesses) w["refuted"][flag] = why;
        return Outcome::check(e.holds(tax), w);
      });
    }
  }
}

// Truth values of the coproduct conditions for a Kurosh-Amitsur radical on
// one monoid of the universe.
struct CoproductFacts {
  bool closed;        // ℝ_r closed under coproducts
  bool one_class;     // |Σ_{r(A)}| ≤ 1 everywhere and ℝ_r has a non-trivial member
  bool theta_pair;    // Θ ⨿ Θ ∈ ℝ_r
  bool zeros_inside;  // every closure contains all zeros
  bool split;         // each A has A_r ∈ ℝ_r containing the zeros with r(A) = ρ_{A_r}
  bool closed_quotients;  // r(A/B) = Δ for every r-closed B
};

CoproductFacts coproduct_facts(const Universe& u, std::size_t i, const Radical& r) {
  const FiniteAct theta = trivial_act(u.monoid(i));
  CoproductFacts f{};
  f.theta_pair = is_radical_act(r, coproduct(theta, theta).act);
  f.closed = check::radical_class_coproduct_closed(u, i, r) && f.theta_pair;
  f.one_class = false;
  bool at_most_one = true;
  f.zeros_inside = true;
  f.split = true;
  f.closed_quotients = true;
  for (const FiniteAct& a : u.acts(i)) {
    const Congruence ra = r(a);
    const std::vector<ElemSet> sigma = check::sigma_masks(a, ra);
    if (sigma.size() > 1) at_most_one = false;
    if (a.size() >= 2 && ra.is_total()) f.one_class = true;
    const ElemSet z = zeros(a);
    bool found = ra.is_diagonal() && z == 0;  // A_r empty
    for (const Subact& b : subacts(a)) {
      const Subact c = closure(r, b);
      if ((z & ~c.members) != 0) f.zeros_inside = false;
      if (c.members == b.members && !r(rees_quotient(a, b).act).is_diagonal()) {
        f.closed_quotients = false;
      }
      if ((z & ~b.members) == 0 && is_radical_act(r, as_act(b).act) &&
          rees_congruence(a, b.members) == ra) {
        found = true;
      }
    }
    if (!found) f.split = false;
  }
  f.one_class = f.one_class && at_most_one;
  return f;
}

Json facts_json(const CoproductFacts& f) {
  return Json{{"closed", f.closed},
              {"one_class", f.one_class},
              {"theta_pair", f.theta_pair},
              {"zeros_inside", f.zeros_inside},
              {"split", f.split},
              {"closed_quotients", f.closed_quotients}};
}

template <typename Cmp>
void coproduct_checker(const Universe& u, Tally& t, Cmp agree) {
  for (const Radical& r : u.radicals()) {
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      t.record(key(r.name(), u.monoid(i).name()), [&] {
        if (u.bounds().act_max < 2) return Outcome::skipped("needs acts of size 2");
        if (!u.lab(i).taxonomy(r).kurosh_amitsur) return Outcome::filtered();
        const CoproductFacts f = coproduct_facts(u, i, r);
        return Outcome::check(agree(f), Json{{"radical", r.name()},
                                             {"monoid", u.monoid(i).name()},
                                             {"facts", facts_json(f)}});
      });
    }
  }
}

void semisimple_dense_escape(const Universe& u, Tally& t) {
  for (const Radical& r : u.radicals()) {
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      const bool hyp = check::semisimple_class_coproduct_closed(u, i, r);
      for (const FiniteAct& a : u.acts(i)) {
        for (const Subact& b : subacts(a)) {
          if (b.members == a.carrier()) continue;
          t.record(key(r.name(), a.name(), check::mask(b.members)), [&] {
            if (!hyp || !is_semisimple_act(r, a) || !is_r_dense(r, b)) return Outcome::filtered();
            for (std::size_t x = 0; x < a.size(); ++x) {
              if (contains(b.members, x)) continue;
              for (std::size_t s = 0; s < a.monoid().size(); ++s) {
                if (contains(b.members, a.act(static_cast<Elem>(s), static_cast<Elem>(x)))) {
                  return Outcome::holds();
                }
              }
            }
            return Outcome::violated(witness(&r, {a}, {{"subact", b.members}}));
          });
        }
      }
    }
  }
}

bool pair_conditions(const Universe& u, std::size_t i, const Radical& r, Json& why) {
  bool ok = true;
  auto fail = [&](const char* cond, const FiniteAct& a) {
    if (ok) why = Json{{"condition", cond}, {"act", a.name()}};
    ok = false;
  };
  for (const FiniteAct& a : u.acts(i)) {
    const bool rad = is_radical_act(r, a);
    const bool semi = is_semisimple_act(r, a);
    if (rad && semi && a.size() > 1) fail("intersection", a);
    if (rad) {
      for (const Congruence& chi : all_congruences(a)) {
        if (!is_radical_act(r, quotient(a, chi).act)) fail("images", a);
      }
    }
    if (semi) {
      for (const Subact& b : subacts(a)) {
        if (!is_semisimple_act(r, as_act(b).act)) fail("subacts", a);
      }
    }
    bool system = false;
    for (const std::vector<ElemSet>& fam : check::disjoint_families(a)) {
      bool members_radical = true;
      std::vector<Subact> sys;
      for (ElemSet m : fam) {
        sys.push_back(Subact{a, m});
        members_radical = members_radical && is_radical_act(r, as_act(sys.back()).act);
      }
      if (members_radical && is_semisimple_act(r, rees_quotient(a, sys).act)) {
        system = true;
        break;
      }
    }
    if (!system) fail("system", a);
  }
  return ok;
}

void kurosh_pair(const Universe& u, Tally& t) {
  for (const Radical& r : u.radicals()) {
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      t.record(key(r.name(), u.monoid(i).name()), [&] {
        Json why = Json::object();
        const bool pair = pair_conditions(u, i, r, why);
        const bool ka = u.lab(i).taxonomy(r).kurosh_amitsur;
        return Outcome::check(pair == ka, Json{{"radical", r.name()},
                                               {"monoid", u.monoid(i).name()},
                                               {"pair_conditions", pair},
                                               {"kurosh_amitsur", ka},
                                               {"first_failure", why}});
      });
    }
  }
}

// Membership predicates from the explicit class descriptions.
bool described_radical(const FiniteAct& a) {
  for (Elem theta : elements_of(zeros(a))) {
    bool all_reach = true;
    for (std::size_t x = 0; x < a.size() && all_reach; ++x) {
      bool reach = false;
      for (std::size_t s = 0; s < a.monoid().size() && !reach; ++s) {
        reach = a.act(static_cast<Elem>(s), static_cast<Elem>(x)) == theta;
      }
      all_reach = reach;
    }
    if (all_reach) return true;
  }
  return false;
}

bool described_semisimple(const FiniteAct& a) {
  for (const Subact& b : subacts(a)) {
    if (b.trivial()) continue;
    bool has_zero_free_cyclic = false;
    for (Elem x : b.elements()) {
      const ElemSet c = cyclic_subact(a, x).members;
      if ((c & zeros(a)) == 0) has_zero_free_cyclic = true;
    }
    if (!has_zero_free_cyclic) return false;
  }
  return true;
}

void rg_construction(const Universe& u, Tally& t) {
  const Radical rg = Radical::rG();
  for (std::size_t i = 0; i < u.num_monoids(); ++i) {
    t.record(key("hereditary", u.monoid(i).name()), [&] {
      const Taxonomy& tax = u.lab(i).taxonomy(rg);
      return Outcome::check(tax.hereditary && tax.kurosh_amitsur,
                            Json{{"monoid", u.monoid(i).name()},
                                 {"hereditary", tax.hereditary},
                                 {"kurosh_amitsur", tax.kurosh_amitsur}});
    });
    for (const FiniteAct& a : u.acts(i)) {
      const bool srad = described_radical(a);
      const bool ssemi = described_semisimple(a);
      t.record(key("semisimple-class", a.name()), [&] {
        const bool actual = is_semisimple_act(rg, a);
        return Outcome::check(actual == ssemi, witness(&rg, {a}, {{"described", ssemi},
                                                                  {"actual", actual}}));
      });
      t.record(key("radical-class", a.name()), [&] {
        const bool actual = is_radical_act(rg, a);
        return Outcome::check(actual == srad, witness(&rg, {a}, {{"described", srad},
                                                                 {"actual", actual}}));
      });
      t.record(key("intersection", a.name()), [&] {
        return Outcome::check(!(srad && ssemi) || a.size() == 1, witness(&rg, {a}));
      });
      t.record(key("images", a.name()), [&] {
        if (!srad) return Outcome::filtered();
        for (const Congruence& chi : all_congruences(a)) {
          if (!described_radical(quotient(a, chi).act)) {
            return Outcome::violated(witness(&rg, {a}, {{"chi", chi.to_string()}}));
          }
        }
        return Outcome::holds();
      });
      t.record(key("subacts", a.name()), [&] {
        if (!ssemi) return Outcome::filtered();
        for (const Subact& b : subacts(a)) {
          if (!described_semisimple(as_act(b).act)) {
            return Outcome::violated(witness(&rg, {a}, {{"subact", b.members}}));
          }
        }
        return Outcome::holds();
      });
      t.record(key("system", a.name()), [&] {
        std::vector<Subact> sys;
        for (Elem theta : elements_of(zeros(a))) {
          sys.push_back(Subact{a, rg_annihilated_union(a, theta)});
        }
        for (std::size_t x = 0; x < sys.size(); ++x) {
          for (std::size_t y = x + 1; y < sys.size(); ++y) {
            if ((sys[x].members & sys[y].members) != 0) {
              return Outcome::violated(witness(&rg, {a}, {{"overlap", {sys[x].members,
                                                                        sys[y].members}}}));
            }
          }
        }
        for (const Subact& x : sys) {
          if (!described_radical(as_act(x).act)) {
            return Outcome::violated(witness(&rg, {a}, {{"not_radical", x.members}}));
          }
        }
        const bool ok = described_semisimple(rees_quotient(a, sys).act);
        return Outcome::check(ok, witness(&rg, {a}, {{"factor_not_semisimple", true}}));
      });
    }
  }
}

}  // namespace

void add_radical_checkers(std::vector<Checker>& out) {
  out.push_back({"AX", "Hoehnke axioms: homs respect r, and r(A/r(A)) is diagonal", "",
                 hoehnke_axioms});
  out.push_back({"R1.1", "radical subacts sit inside classes of r(A); classes holding a subact are subacts",
                 "", subact_placement});
  out.push_back({"L1.2", "r(A/chi) = r(A)/chi for chi below r(A)", "", quotient_below_radical});
  out.push_back({"F1", "implication network between radical kinds", "empirical over registered radicals",
                 taxonomy_network});
  out.push_back({"T2.4", "coproduct closure of the radical class: four equivalent forms", "",
                 [](const Universe& u, Tally& t) {
                   coproduct_checker(u, t, [](const CoproductFacts& f) {
                     return f.closed == f.one_class && f.closed == f.theta_pair &&
                            f.closed == f.zeros_inside;
                   });
                 }});
  out.push_back({"C2.4", "coproduct closure iff a zero-containing radical subact carries r(A)", "",
                 [](const Universe& u, Tally& t) {
                   coproduct_checker(u, t,
                                     [](const CoproductFacts& f) { return f.closed == f.split; });
                 }});
  out.push_back({"T2.5", "coproduct closure iff quotients by r-closed subacts are semisimple", "",
                 [](const Universe& u, Tally& t) {
                   coproduct_checker(u, t, [](const CoproductFacts& f) {
                     return f.closed == f.closed_quotients;
                   });
                 }});
  out.push_back({"P2.6", "a proper r-dense subact of a semisimple act is reached from outside", "",
                 semisimple_dense_escape});
  out.push_back({"L7.4", "Kurosh-Amitsur radicals are characterised by their class pair",
                 "bounded-universe verification", kurosh_pair});
  out.push_back({"RG", "r_G is a hereditary Kurosh-Amitsur radical with the stated classes", "",
                 rg_construction});
}

}  // namespace radact
