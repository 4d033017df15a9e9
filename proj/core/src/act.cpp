#include "radact/act.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace radact {

namespace {

std::string make_key(const FiniteMonoid& m, std::size_t size, const std::vector<Elem>& table) {
  std::string key;
  key.reserve(3 + m.table().size() + table.size());
  key.push_back(static_cast<char>(m.size()));
  key.push_back(static_cast<char>(m.identity()));
  for (Elem e : m.table()) key.push_back(static_cast<char>(e));
  key.push_back(static_cast<char>(size));
  for (Elem e : table) key.push_back(static_cast<char>(e));
  return key;
}

}  // namespace

FiniteAct FiniteAct::validate(const FiniteMonoid& monoid,
                              const std::vector<std::vector<int>>& action, std::string name) {
  const std::size_t n = monoid.size();
  if (action.size() != n) {
    throw Error(ErrorKind::BadTable, "action table needs one row per monoid element (" +
                                         std::to_string(n) + "), got " +
                                         std::to_string(action.size()));
  }
  const std::size_t m = action[0].size();
  if (m == 0 || m > kMaxCarrier) {
    throw Error(ErrorKind::BadTable, "carrier size must be between 1 and 64");
  }
  std::vector<Elem> flat;
  flat.reserve(n * m);
  for (std::size_t s = 0; s < n; ++s) {
    if (action[s].size() != m) {
      throw Error(ErrorKind::BadTable, "row " + std::to_string(s) + " has " +
                                           std::to_string(action[s].size()) +
                                           " entries, expected " + std::to_string(m));
    }
    for (std::size_t a = 0; a < m; ++a) {
      int v = action[s][a];
      if (v < 0 || static_cast<std::size_t>(v) >= m) {
        throw Error(ErrorKind::BadTable, "entry out of range at (" + std::to_string(s) + "," +
                                             std::to_string(a) + ")");
      }
      flat.push_back(static_cast<Elem>(v));
    }
  }
  const std::size_t e = monoid.identity();
  for (std::size_t a = 0; a < m; ++a) {
    if (flat[e * m + a] != a) {
      throw Error(ErrorKind::IdentityAxiom, "1a != a at a=" + std::to_string(a));
    }
  }
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t s = 0; s < n; ++s) {
      const std::size_t ts = monoid.mul(static_cast<Elem>(t), static_cast<Elem>(s));
      for (std::size_t a = 0; a < m; ++a) {
        if (flat[t * m + flat[s * m + a]] != flat[ts * m + a]) {
          throw Error(ErrorKind::AssocAxiom, "t(sa) != (ts)a at (t,s,a)=(" + std::to_string(t) +
                                                 "," + std::to_string(s) + "," +
                                                 std::to_string(a) + ")");
        }
      }
    }
  }
  return trusted(monoid, m, std::move(flat), std::move(name));
}

FiniteAct FiniteAct::trusted(const FiniteMonoid& monoid, std::size_t size, std::vector<Elem> flat,
                             std::string name) {
  auto d = std::make_shared<Data>(Data{monoid, size, {}, {}, {}});
  d->key = make_key(monoid, size, flat);
  d->table = std::move(flat);
  d->name = std::move(name);
  return FiniteAct(std::move(d));
}

FiniteAct FiniteAct::renamed(std::string name) const {
  return trusted(data_->monoid, data_->size, data_->table, std::move(name));
}

bool operator==(const FiniteAct& a, const FiniteAct& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->key == b.data_->key;
}

void require_same_monoid(const FiniteAct& a, const FiniteAct& b) {
  if (!(a.monoid() == b.monoid())) {
    throw Error(ErrorKind::MonoidMismatch, "acts are over different monoids");
  }
}

bool ActHom::injective() const { return cardinality(image()) == map.size(); }

bool ActHom::surjective() const { return image() == target.carrier(); }

ElemSet ActHom::image() const {
  ElemSet out = 0;
  for (Elem b : map) out |= singleton(b);
  return out;
}

ElemSet ActHom::image_of(ElemSet s) const {
  ElemSet out = 0;
  for (Elem a : elements_of(s)) out |= singleton(map[a]);
  return out;
}

ActHom make_hom(const FiniteAct& source, const FiniteAct& target, std::vector<Elem> map) {
  require_same_monoid(source, target);
  if (map.size() != source.size()) {
    throw Error(ErrorKind::InvalidArgument, "map length differs from source size");
  }
  for (Elem b : map) {
    if (b >= target.size()) throw Error(ErrorKind::InvalidArgument, "map value out of range");
  }
  for (std::size_t s = 0; s < source.monoid().size(); ++s) {
    for (std::size_t a = 0; a < source.size(); ++a) {
      const auto se = static_cast<Elem>(s);
      if (map[source.act(se, static_cast<Elem>(a))] != target.act(se, map[a])) {
        throw Error(ErrorKind::NotEquivariant, "f(sa) != s f(a) at (s,a)=(" + std::to_string(s) +
                                                   "," + std::to_string(a) + ")");
      }
    }
  }
  return ActHom{source, target, std::move(map)};
}

ActHom identity_hom(const FiniteAct& a) {
  std::vector<Elem> map(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) map[i] = static_cast<Elem>(i);
  return ActHom{a, a, std::move(map)};
}

ActHom compose(const ActHom& g, const ActHom& f) {
  if (!(f.target == g.source)) {
    throw Error(ErrorKind::ActMismatch, "compose: target of f differs from source of g");
  }
  std::vector<Elem> map(f.map.size());
  for (std::size_t a = 0; a < map.size(); ++a) map[a] = g.map[f.map[a]];
  return ActHom{f.source, g.target, std::move(map)};
}

bool is_closed(const FiniteAct& a, ElemSet s) {
  for (Elem x : elements_of(s)) {
    for (std::size_t t = 0; t < a.monoid().size(); ++t) {
      if (!contains(s, a.act(static_cast<Elem>(t), x))) return false;
    }
  }
  return true;
}

ElemSet generated_subact(const FiniteAct& a, ElemSet s) {
  ElemSet out = 0;
  for (Elem x : elements_of(s)) {
    for (std::size_t t = 0; t < a.monoid().size(); ++t) {
      out |= singleton(a.act(static_cast<Elem>(t), x));
    }
  }
  return out;
}

Subact make_subact(const FiniteAct& a, ElemSet members) {
  if (members == 0 || (members & ~a.carrier()) != 0 || !is_closed(a, members)) {
    throw Error(ErrorKind::InvalidArgument, "not a non-empty closed subset");
  }
  return Subact{a, members};
}

EmbeddedSubact as_act(const Subact& b) {
  const FiniteAct& p = b.parent;
  std::vector<Elem> elems = b.elements();
  std::vector<Elem> local(p.size(), kUnset);
  for (std::size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<Elem>(i);
  const std::size_t n = p.monoid().size();
  const std::size_t k = elems.size();
  std::vector<Elem> flat(n * k);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t i = 0; i < k; ++i) {
      flat[s * k + i] = local[p.act(static_cast<Elem>(s), elems[i])];
    }
  }
  FiniteAct act = FiniteAct::trusted(p.monoid(), k, std::move(flat));
  return EmbeddedSubact{act, ActHom{act, p, elems}, std::move(local)};
}

ElemSet zeros(const FiniteAct& a) {
  ElemSet out = 0;
  for (std::size_t x = 0; x < a.size(); ++x) {
    bool zero = true;
    for (std::size_t s = 0; s < a.monoid().size() && zero; ++s) {
      zero = a.act(static_cast<Elem>(s), static_cast<Elem>(x)) == x;
    }
    if (zero) out |= singleton(x);
  }
  return out;
}

Subact cyclic_subact(const FiniteAct& a, Elem x) {
  return Subact{a, generated_subact(a, singleton(x))};
}

std::vector<Subact> subacts(const FiniteAct& a) {
  // Every subact is a union of cyclic subacts; close the cyclic ones under union.
  std::vector<ElemSet> cyclic;
  for (std::size_t x = 0; x < a.size(); ++x) {
    cyclic.push_back(generated_subact(a, singleton(x)));
  }
  std::vector<ElemSet> found;
  std::vector<ElemSet> frontier;
  auto add = [&](ElemSet s) {
    if (std::find(found.begin(), found.end(), s) == found.end()) {
      found.push_back(s);
      frontier.push_back(s);
    }
  };
  for (ElemSet c : cyclic) add(c);
  while (!frontier.empty()) {
    ElemSet s = frontier.back();
    frontier.pop_back();
    for (ElemSet c : cyclic) {
      if ((s | c) != s) add(s | c);
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<Subact> out;
  out.reserve(found.size());
  for (ElemSet s : found) out.push_back(Subact{a, s});
  return out;
}

Coproduct coproduct(const FiniteAct& a, const FiniteAct& b) {
  require_same_monoid(a, b);
  const std::size_t n = a.monoid().size();
  const std::size_t m = a.size() + b.size();
  if (m > kMaxCarrier) throw Error(ErrorKind::SizeBound, "coproduct exceeds carrier cap");
  std::vector<Elem> flat(n * m);
  for (std::size_t s = 0; s < n; ++s) {
    const auto se = static_cast<Elem>(s);
    for (std::size_t x = 0; x < a.size(); ++x) flat[s * m + x] = a.act(se, static_cast<Elem>(x));
    for (std::size_t y = 0; y < b.size(); ++y) {
      flat[s * m + a.size() + y] = static_cast<Elem>(a.size() + b.act(se, static_cast<Elem>(y)));
    }
  }
  FiniteAct c = FiniteAct::trusted(a.monoid(), m, std::move(flat));
  std::vector<Elem> left(a.size());
  std::vector<Elem> right(b.size());
  for (std::size_t x = 0; x < a.size(); ++x) left[x] = static_cast<Elem>(x);
  for (std::size_t y = 0; y < b.size(); ++y) right[y] = static_cast<Elem>(a.size() + y);
  return Coproduct{c, ActHom{a, c, std::move(left)}, ActHom{b, c, std::move(right)}};
}

FiniteAct product(std::span<const FiniteAct> acts) {
  if (acts.empty()) throw Error(ErrorKind::InvalidArgument, "product of no acts");
  std::size_t m = 1;
  for (const FiniteAct& a : acts) {
    require_same_monoid(acts[0], a);
    m *= a.size();
    if (m > kMaxCarrier) throw Error(ErrorKind::SizeBound, "product exceeds carrier cap");
  }
  if (acts.size() == 1) return acts[0];
  const std::size_t n = acts[0].monoid().size();
  std::vector<Elem> flat(n * m);
  // Mixed radix, first factor most significant.
  std::vector<std::size_t> digits(acts.size());
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t x = 0; x < m; ++x) {
      std::size_t rest = x;
      for (std::size_t i = acts.size(); i-- > 0;) {
        digits[i] = rest % acts[i].size();
        rest /= acts[i].size();
      }
      std::size_t y = 0;
      for (std::size_t i = 0; i < acts.size(); ++i) {
        y = y * acts[i].size() +
            acts[i].act(static_cast<Elem>(s), static_cast<Elem>(digits[i]));
      }
      flat[s * m + x] = static_cast<Elem>(y);
    }
  }
  return FiniteAct::trusted(acts[0].monoid(), m, std::move(flat));
}

FiniteAct trivial_act(const FiniteMonoid& m) {
  return FiniteAct::trusted(m, 1, std::vector<Elem>(m.size(), 0), "Theta");
}

FiniteAct left_regular_act(const FiniteMonoid& m) {
  std::vector<Elem> flat(m.table().begin(), m.table().end());
  return FiniteAct::trusted(m, m.size(), std::move(flat));
}

namespace {

// Iso-invariant colour classes by iterated refinement; colours are ranks of
// sorted signatures, so the class order is itself invariant.
std::vector<int> refine_colours(const FiniteAct& a) {
  const std::size_t n = a.monoid().size();
  const std::size_t m = a.size();
  std::vector<int> colour(m, 0);
  std::size_t classes = 1;
  while (true) {
    std::vector<std::vector<int>> sig(m);
    for (std::size_t x = 0; x < m; ++x) {
      auto& s = sig[x];
      s.push_back(colour[x]);
      for (std::size_t t = 0; t < n; ++t) {
        s.push_back(colour[a.act(static_cast<Elem>(t), static_cast<Elem>(x))]);
      }
      std::vector<int> pre;
      for (std::size_t t = 0; t < n; ++t) {
        for (std::size_t y = 0; y < m; ++y) {
          if (a.act(static_cast<Elem>(t), static_cast<Elem>(y)) == x) {
            pre.push_back(static_cast<int>(t * 1024) + colour[y]);
          }
        }
      }
      std::sort(pre.begin(), pre.end());
      s.push_back(-1);
      s.insert(s.end(), pre.begin(), pre.end());
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t x = 0; x < m; ++x) {
      colour[x] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[x]) -
                                   distinct.begin());
    }
    if (distinct.size() == classes) break;
    classes = distinct.size();
  }
  return colour;
}

}  // namespace

CanonicalAct canonical_form(const FiniteAct& a) {
  const std::size_t n = a.monoid().size();
  const std::size_t m = a.size();
  std::vector<int> colour = refine_colours(a);
  // Positions are grouped by colour; within a colour any order is allowed.
  std::vector<int> slot_colour(colour);
  std::sort(slot_colour.begin(), slot_colour.end());
  std::vector<Elem> order;  // canonical position -> original element
  std::vector<bool> used(m, false);
  std::vector<Elem> best_table;
  std::vector<Elem> best_relabel;
  std::vector<Elem> relabel(m);
  std::vector<Elem> tab(n * m);
  auto evaluate = [&] {
    for (std::size_t i = 0; i < m; ++i) relabel[order[i]] = static_cast<Elem>(i);
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t i = 0; i < m; ++i) {
        tab[s * m + i] = relabel[a.act(static_cast<Elem>(s), order[i])];
      }
    }
    if (best_table.empty() || tab < best_table) {
      best_table = tab;
      best_relabel = relabel;
    }
  };
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == m) {
      evaluate();
      return;
    }
    for (std::size_t x = 0; x < m; ++x) {
      if (used[x] || colour[x] != slot_colour[pos]) continue;
      used[x] = true;
      order.push_back(static_cast<Elem>(x));
      self(self, pos + 1);
      order.pop_back();
      used[x] = false;
    }
  };
  rec(rec, 0);
  return CanonicalAct{FiniteAct::trusted(a.monoid(), m, std::move(best_table), a.name()),
                      std::move(best_relabel)};
}

std::string describe(const FiniteAct& a) {
  std::ostringstream out;
  out << (a.name().empty() ? "act" : a.name()) << " [";
  for (std::size_t s = 0; s < a.monoid().size(); ++s) {
    if (s) out << " / ";
    for (std::size_t x = 0; x < a.size(); ++x) {
      if (x) out << ' ';
      out << static_cast<int>(a.act(static_cast<Elem>(s), static_cast<Elem>(x)));
    }
  }
  out << "]";
  return out.str();
}

}  // namespace radact
