#include "radact/verifier.hpp"

#include <chrono>
#include <ctime>

#include "checkers.hpp"

namespace radact {

namespace {

std::vector<Checker> build_registry() {
  std::vector<Checker> out;
  add_radical_checkers(out);
  add_closure_checkers(out);
  add_large_checkers(out);
  add_injective_checkers(out);
  add_kurosh_checkers(out);
  return out;
}

std::string utc_now() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

}  // namespace

const std::vector<Checker>& checkers() {
  static const std::vector<Checker> registry = build_registry();
  return registry;
}

const std::vector<OutOfScopeResult>& out_of_scope_results() {
  static const std::vector<OutOfScopeResult> list = {
      {"WB2", "existence of hulls for arbitrary acts; a bounded search cannot certify it"},
  };
  return list;
}

const Checker& find_checker(const std::string& id) {
  for (const Checker& c : checkers()) {
    if (c.id == id) return c;
  }
  throw Error(ErrorKind::UnknownTheorem, "no checker registered for '" + id + "'");
}

TheoremReport verify(const std::string& theorem_id, const Universe& u,
                     std::optional<std::string> only_instance) {
  const Checker& c = find_checker(theorem_id);
  Tally tally(std::move(only_instance));
  const auto start = std::chrono::steady_clock::now();
  c.run(u, tally);
  const auto stop = std::chrono::steady_clock::now();
  TheoremReport r;
  r.theorem_id = c.id;
  r.title = c.title;
  r.scope = c.scope;
  r.instances_checked = tally.checked();
  r.hypothesis_filtered = tally.filtered();
  r.instances_skipped = tally.skipped();
  r.witness = tally.witness();
  if (tally.violated() > 0) {
    r.status = Status::Violated;
  } else if (tally.checked() > 0) {
    r.status = Status::Verified;
  } else {
    r.status = Status::SkippedOutOfBounds;
  }
  r.duration_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return r;
}

std::vector<TheoremReport> verify_all(const Universe& u) {
  std::vector<TheoremReport> out;
  for (const Checker& c : checkers()) out.push_back(verify(c.id, u));
  return out;
}

bool recheck_witness(const std::string& theorem_id, const Universe& u, const Json& witness) {
  if (!witness.contains("instance")) return false;
  return verify(theorem_id, u, witness.at("instance").get<std::string>()).status ==
         Status::Violated;
}

Taxonomy universe_taxonomy(const Universe& u, const Radical& r) {
  Taxonomy out;
  for (std::size_t i = 0; i < u.num_monoids(); ++i) {
    const Taxonomy& t = u.lab(i).taxonomy(r);
    auto merge = [&](bool Taxonomy::*flag, const char* name) {
      if (out.*flag && !(t.*flag)) {
        out.*flag = false;
        out.witnesses[name] = t.witnesses.at(name);
      }
    };
    merge(&Taxonomy::hereditary, "hereditary");
    merge(&Taxonomy::pre_hereditary, "pre_hereditary");
    merge(&Taxonomy::weakly_hereditary, "weakly_hereditary");
    merge(&Taxonomy::zero_hereditary, "zero_hereditary");
    merge(&Taxonomy::pre_kurosh, "pre_kurosh");
    merge(&Taxonomy::kurosh_amitsur, "kurosh_amitsur");
  }
  return out;
}

SuiteReport run_suite(const Universe& u, const std::vector<std::string>& ids,
                      const std::optional<std::string>& only_instance) {
  SuiteReport s;
  s.timestamp = utc_now();
  s.bounds = u.bounds();
  for (const Radical& r : u.radicals()) s.radicals.push_back(r.name());
  if (ids.empty()) {
    for (const Checker& c : checkers()) s.reports.push_back(verify(c.id, u, only_instance));
  } else {
    for (const std::string& id : ids) s.reports.push_back(verify(id, u, only_instance));
  }
  s.taxonomy = Json::object();
  for (const Radical& r : u.radicals()) {
    Taxonomy t = universe_taxonomy(u, r);
    Json flags{{"hereditary", t.hereditary},         {"pre_hereditary", t.pre_hereditary},
               {"weakly_hereditary", t.weakly_hereditary}, {"zero_hereditary", t.zero_hereditary},
               {"pre_kurosh", t.pre_kurosh},         {"kurosh_amitsur", t.kurosh_amitsur}};
    Json witnesses = Json::object();
    for (const auto& [k, v] : t.witnesses) witnesses[k] = v;
    s.taxonomy[r.name()] = Json{{"flags", flags}, {"witnesses", witnesses}};
  }
  return s;
}

Radical mutant_radical(const Universe& u, const Radical& base, std::string* corrupted) {
  ExtensionalTable table;
  std::optional<FiniteAct> victim;
  for (std::size_t i = 0; i < u.num_monoids(); ++i) {
    for (const FiniteAct& a : u.acts(i)) table.set(a, base(a));
  }
  // First act C = A/r(A) with r(A) ≠ Δ and |C| ≥ 2; setting r(C) = ∇ breaks
  // r(A/r(A)) = Δ at A.
  for (std::size_t i = 0; i < u.num_monoids() && !victim; ++i) {
    for (const FiniteAct& a : u.acts(i)) {
      const Congruence ra = base(a);
      if (ra.is_diagonal()) continue;
      FiniteAct c = quotient(a, ra).act;
      if (c.size() < 2) continue;
      victim = u.lookup(c);
      if (victim) break;
    }
  }
  if (!victim) {
    throw Error(ErrorKind::InvalidArgument, "no act in the universe can carry the mutation");
  }
  table.set(*victim, total(*victim));
  if (corrupted) *corrupted = victim->name();
  return Radical::extensional(base.name() + "_mutant", std::move(table));
}

Json act_json(const FiniteAct& a) {
  Json rows = Json::array();
  for (std::size_t s = 0; s < a.monoid().size(); ++s) {
    auto row = a.row(static_cast<Elem>(s));
    rows.push_back(std::vector<int>(row.begin(), row.end()));
  }
  Json mon = Json::array();
  for (std::size_t x = 0; x < a.monoid().size(); ++x) {
    Json row = Json::array();
    for (std::size_t y = 0; y < a.monoid().size(); ++y) {
      row.push_back(a.monoid().mul(static_cast<Elem>(x), static_cast<Elem>(y)));
    }
    mon.push_back(std::move(row));
  }
  return Json{{"name", a.name()},
              {"monoid", a.monoid().name()},
              {"monoid_table", mon},
              {"action", rows}};
}

Json congruence_json(const Congruence& c) { return c.to_string(); }

namespace check {

std::string mask(ElemSet s) { return std::to_string(s); }

Json witness(const Radical* r, std::vector<FiniteAct> acts, Json extra) {
  Json w;
  if (r) w["radical"] = r->name();
  Json list = Json::array();
  for (const FiniteAct& a : acts) list.push_back(act_json(a));
  w["acts"] = std::move(list);
  for (auto& [k, v] : extra.items()) w[k] = v;
  return w;
}

std::vector<ElemSet> subact_masks(const FiniteAct& a) {
  std::vector<ElemSet> out;
  for (const Subact& s : subacts(a)) out.push_back(s.members);
  return out;
}

std::vector<ActHom> extensions(const Universe& u, std::size_t i, const FiniteAct& b) {
  std::vector<ActHom> out{identity_hom(b)};
  for (const FiniteAct& a : u.acts(i)) {
    if (a.size() < b.size()) continue;
    for (ActHom& f : all_homs(b, a)) {
      if (f.injective()) out.push_back(std::move(f));
    }
  }
  return out;
}

namespace {

void families_from(const std::vector<ElemSet>& subs, std::size_t start, ElemSet used,
                   std::vector<ElemSet>& current, std::vector<std::vector<ElemSet>>& out) {
  out.push_back(current);
  for (std::size_t k = start; k < subs.size(); ++k) {
    if ((subs[k] & used) != 0) continue;
    current.push_back(subs[k]);
    families_from(subs, k + 1, used | subs[k], current, out);
    current.pop_back();
  }
}

template <typename Pred>
bool coproduct_closed(const Universe& u, std::size_t i, Pred member) {
  const auto& acts = u.acts(i);
  for (std::size_t x = 0; x < acts.size(); ++x) {
    if (!member(acts[x])) continue;
    for (std::size_t y = x; y < acts.size(); ++y) {
      if (acts[x].size() + acts[y].size() > u.bounds().act_max || !member(acts[y])) continue;
      if (!member(coproduct(acts[x], acts[y]).act)) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::vector<ElemSet>> disjoint_families(const FiniteAct& a) {
  std::vector<std::vector<ElemSet>> out;
  std::vector<ElemSet> current;
  families_from(subact_masks(a), 0, 0, current, out);
  return out;
}

bool radical_class_coproduct_closed(const Universe& u, std::size_t i, const Radical& r) {
  return coproduct_closed(u, i, [&](const FiniteAct& a) { return is_radical_act(r, a); });
}

bool semisimple_class_coproduct_closed(const Universe& u, std::size_t i, const Radical& r) {
  return coproduct_closed(u, i, [&](const FiniteAct& a) { return is_semisimple_act(r, a); });
}

std::vector<ElemSet> sigma_masks(const FiniteAct& a, const Congruence& c) {
  std::vector<ElemSet> out;
  for (const Subact& b : class_system(a, c).blocks) out.push_back(b.members);
  return out;
}

ElemSet to_parent(const EmbeddedSubact& e, ElemSet local) {
  return e.inclusion.image_of(local);
}

bool collapses_in_extension(const Radical& r, const ActHom& m, const Congruence& chi_on_b) {
  const FiniteAct& a = m.target;
  std::vector<std::pair<Elem, Elem>> pairs;
  for (std::size_t x = 0; x < m.source.size(); ++x) {
    for (std::size_t y = x + 1; y < m.source.size(); ++y) {
      if (chi_on_b.related(static_cast<Elem>(x), static_cast<Elem>(y))) {
        pairs.emplace_back(m(static_cast<Elem>(x)), m(static_cast<Elem>(y)));
      }
    }
  }
  // χ ∨ Δ_A: the pairs are already closed on the image, so no new merges arise.
  Quotient q = quotient(a, generated_congruence(a, pairs));
  const Congruence rq = r(q.act);
  const Elem first = q.projection(m(0));
  for (std::size_t x = 1; x < m.source.size(); ++x) {
    if (!rq.related(first, q.projection(m(static_cast<Elem>(x))))) return false;
  }
  return true;
}

}  // namespace check

}  // namespace radact
