#include "radact/radical.hpp"

#include <mutex>
#include <unordered_map>

namespace radact {

const char* to_string(RadicalKind kind) {
  switch (kind) {
    case RadicalKind::BuiltinRG: return "builtin-rG";
    case RadicalKind::BuiltinDelta: return "builtin-delta";
    case RadicalKind::BuiltinNabla: return "builtin-nabla";
    case RadicalKind::InducedFromSemisimpleClass: return "induced-from-semisimple-class";
    case RadicalKind::ExtensionalTable: return "extensional-table";
  }
  return "unknown";
}

namespace {

// Con bound used when evaluating induced radicals; coproducts and pushouts of
// universe acts reach eight elements.
constexpr std::size_t kInducedCongruenceBound = 10;

Congruence transport(const Congruence& on_canonical, const std::vector<Elem>& relabel) {
  std::vector<Elem> labels(relabel.size());
  for (std::size_t x = 0; x < relabel.size(); ++x) labels[x] = on_canonical.block_of(relabel[x]);
  return Congruence::from_labels(labels);
}

}  // namespace

void ExtensionalTable::set(const FiniteAct& act, const Congruence& value) {
  require_congruence(act, value);
  CanonicalAct c = canonical_form(act);
  // value on canonical elements: canonical x relates to y iff originals do.
  std::vector<Elem> inverse(act.size());
  for (std::size_t x = 0; x < act.size(); ++x) inverse[c.relabel[x]] = static_cast<Elem>(x);
  entries_.insert_or_assign(c.act.key(), Entry{c.act, transport(value, inverse)});
}

std::optional<Congruence> ExtensionalTable::lookup(const FiniteAct& act) const {
  CanonicalAct c = canonical_form(act);
  auto it = entries_.find(c.act.key());
  if (it == entries_.end()) return std::nullopt;
  return transport(it->second.value, c.relabel);
}

struct Radical::State {
  std::string name;
  RadicalKind kind;
  std::function<Congruence(const FiniteAct&)> eval;
  std::mutex mu;
  std::unordered_map<std::string, Congruence> memo;
};

Radical Radical::delta() {
  auto s = std::make_shared<State>();
  s->name = "delta";
  s->kind = RadicalKind::BuiltinDelta;
  s->eval = [](const FiniteAct& a) { return diagonal(a); };
  return Radical(std::move(s));
}

Radical Radical::nabla() {
  auto s = std::make_shared<State>();
  s->name = "nabla";
  s->kind = RadicalKind::BuiltinNabla;
  s->eval = [](const FiniteAct& a) { return total(a); };
  return Radical(std::move(s));
}

Radical Radical::rG() {
  auto s = std::make_shared<State>();
  s->name = "rG";
  s->kind = RadicalKind::BuiltinRG;
  s->eval = [](const FiniteAct& a) { return rg_congruence(a); };
  return Radical(std::move(s));
}

Radical Radical::induced(std::string name, ClassOracle semisimple) {
  auto s = std::make_shared<State>();
  s->name = std::move(name);
  s->kind = RadicalKind::InducedFromSemisimpleClass;
  s->eval = [oracle = std::move(semisimple)](const FiniteAct& a) {
    Congruence out = total(a);
    for (const Congruence& chi : all_congruences(a, kInducedCongruenceBound)) {
      if (oracle.member(quotient(a, chi).act)) out = meet(out, chi);
    }
    return out;
  };
  return Radical(std::move(s));
}

Radical Radical::extensional(std::string name, ExtensionalTable table) {
  auto s = std::make_shared<State>();
  s->name = name;
  s->kind = RadicalKind::ExtensionalTable;
  s->eval = [name, t = std::move(table)](const FiniteAct& a) {
    std::optional<Congruence> v = t.lookup(a);
    if (!v) {
      throw Error(ErrorKind::NotInUniverse,
                  "radical '" + name + "' has no entry for " + describe(a));
    }
    return *v;
  };
  return Radical(std::move(s));
}

const std::string& Radical::name() const { return state_->name; }

RadicalKind Radical::kind() const { return state_->kind; }

Congruence Radical::operator()(const FiniteAct& a) const {
  {
    std::lock_guard<std::mutex> lock(state_->mu);
    auto it = state_->memo.find(a.key());
    if (it != state_->memo.end()) return it->second;
  }
  Congruence value = state_->eval(a);
  std::lock_guard<std::mutex> lock(state_->mu);
  state_->memo.emplace(a.key(), value);
  return value;
}

Congruence radical_of(const Radical& r, const FiniteAct& a) { return r(a); }

ElemSet rg_annihilated_union(const FiniteAct& a, Elem theta) {
  const std::size_t n = a.monoid().size();
  // reaches[x]: some s has s x = theta.
  ElemSet reaches = 0;
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t s = 0; s < n; ++s) {
      if (a.act(static_cast<Elem>(s), static_cast<Elem>(x)) == theta) {
        reaches |= singleton(x);
        break;
      }
    }
  }
  ElemSet out = 0;
  for (std::size_t x = 0; x < a.size(); ++x) {
    ElemSet c = cyclic_subact(a, static_cast<Elem>(x)).members;
    if ((c & ~reaches) == 0) out |= c;
  }
  return out;
}

Congruence rg_congruence(const FiniteAct& a) {
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem theta : elements_of(zeros(a))) {
    for (Elem y : elements_of(rg_annihilated_union(a, theta))) {
      if (y != theta) pairs.emplace_back(theta, y);
    }
  }
  return generated_congruence(a, pairs);
}

bool is_radical_act(const Radical& r, const FiniteAct& a) { return r(a).is_total(); }

bool is_semisimple_act(const Radical& r, const FiniteAct& a) { return r(a).is_diagonal(); }

bool in_Lr(const Radical& r, const FiniteAct& a) {
  return zeros(a) != 0 && is_radical_act(r, a);
}

Radical lr_radical(const Radical& r) {
  ClassOracle semisimple{"no non-trivial subact in L_" + r.name(), [r](const FiniteAct& a) {
                           for (const Subact& b : subacts(a)) {
                             if (!b.trivial() && in_Lr(r, as_act(b).act)) return false;
                           }
                           return true;
                         }};
  return Radical::induced("tL_" + r.name(), std::move(semisimple));
}

Radical register_induced(std::string name, ClassOracle semisimple,
                         std::span<const FiniteAct> universe, std::size_t product_size_bound) {
  auto fail = [&](const std::string& what, const FiniteAct& witness) {
    throw Error(ErrorKind::Registration,
                "class '" + semisimple.name + "' " + what + ": " + describe(witness));
  };
  std::vector<const FiniteAct*> members;
  for (const FiniteAct& a : universe) {
    const bool in = semisimple.member(a);
    if (a.size() == 1 && !in) fail("misses a trivial act", a);
    if (semisimple.member(canonical_form(a).act) != in) fail("is not closed under isomorphism", a);
    if (in) {
      members.push_back(&a);
      for (const Subact& b : subacts(a)) {
        if (!semisimple.member(as_act(b).act)) fail("is not closed under subacts", a);
      }
    }
    if (a.size() <= kInducedCongruenceBound && !in) {
      for (const Congruence& chi : all_congruences(a, kInducedCongruenceBound)) {
        if (chi.is_diagonal()) continue;
        if (!semisimple.member(quotient(a, chi).act)) continue;
        bool all_in = true;
        for (const Subact& b : class_system(a, chi).blocks) {
          if (!semisimple.member(as_act(b).act)) {
            all_in = false;
            break;
          }
        }
        if (all_in) fail("is not closed under congruence extensions", a);
      }
    }
  }
  for (const FiniteAct* a : members) {
    for (const FiniteAct* b : members) {
      if (!(a->monoid() == b->monoid()) || a->size() * b->size() > product_size_bound) continue;
      FiniteAct factors[] = {*a, *b};
      FiniteAct p = product(factors);
      if (!semisimple.member(p)) fail("is not closed under products", p);
    }
  }
  return Radical::induced(std::move(name), std::move(semisimple));
}

}  // namespace radact
