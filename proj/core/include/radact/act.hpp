#ifndef RADACT_ACT_HPP
#define RADACT_ACT_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "radact/monoid.hpp"
#include "radact/types.hpp"

namespace radact {

// A finite left S-act: a non-empty carrier {0..m-1} with s·a stored row-major
// by monoid element. Immutable; copies share the table.
class FiniteAct {
 public:
  // Checks shape, 1a = a and t(sa) = (ts)a. Throws IdentityAxiom / AssocAxiom
  // with a witness, or BadTable for shape problems.
  static FiniteAct validate(const FiniteMonoid& monoid,
                            const std::vector<std::vector<int>>& action,
                            std::string name = {});

  // Construction from a flat table already known to satisfy the axioms.
  static FiniteAct trusted(const FiniteMonoid& monoid, std::size_t size,
                           std::vector<Elem> flat, std::string name = {});

  const FiniteMonoid& monoid() const { return data_->monoid; }
  std::size_t size() const { return data_->size; }
  Elem act(Elem s, Elem a) const { return data_->table[s * data_->size + a]; }
  std::span<const Elem> row(Elem s) const {
    return std::span<const Elem>(data_->table).subspan(s * data_->size, data_->size);
  }
  std::span<const Elem> table() const { return data_->table; }
  const std::string& name() const { return data_->name; }
  ElemSet carrier() const { return full_set(data_->size); }

  FiniteAct renamed(std::string name) const;

  // Byte key identifying monoid table and action table; used for caches.
  const std::string& key() const { return data_->key; }

  friend bool operator==(const FiniteAct& a, const FiniteAct& b);

 private:
  struct Data {
    FiniteMonoid monoid;
    std::size_t size = 0;
    std::vector<Elem> table;
    std::string name;
    std::string key;
  };
  explicit FiniteAct(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  std::shared_ptr<const Data> data_;
};

// Throws MonoidMismatch unless both acts are over equal monoids.
void require_same_monoid(const FiniteAct& a, const FiniteAct& b);

// An equivariant map between acts over the same monoid.
struct ActHom {
  FiniteAct source;
  FiniteAct target;
  std::vector<Elem> map;

  Elem operator()(Elem a) const { return map[a]; }
  bool injective() const;
  bool surjective() const;
  ElemSet image() const;
  ElemSet image_of(ElemSet s) const;
};

// Validates equivariance f(sa) = s f(a); throws NotEquivariant.
ActHom make_hom(const FiniteAct& source, const FiniteAct& target, std::vector<Elem> map);
ActHom identity_hom(const FiniteAct& a);
// g ∘ f
ActHom compose(const ActHom& g, const ActHom& f);

// A non-empty action-closed subset of an act.
struct Subact {
  FiniteAct parent;
  ElemSet members = 0;

  std::size_t size() const { return cardinality(members); }
  bool trivial() const { return size() <= 1; }
  std::vector<Elem> elements() const { return elements_of(members); }
  friend bool operator==(const Subact& a, const Subact& b) {
    return a.parent == b.parent && a.members == b.members;
  }
};

bool is_closed(const FiniteAct& a, ElemSet s);
// Least action-closed superset of s.
ElemSet generated_subact(const FiniteAct& a, ElemSet s);
// Throws InvalidArgument unless members is non-empty and closed.
Subact make_subact(const FiniteAct& a, ElemSet members);

// A subact viewed as an act in its own right: members relabelled 0..k-1 in
// increasing order, together with the inclusion hom.
struct EmbeddedSubact {
  FiniteAct act;
  ActHom inclusion;
  // Parent element -> local index, or 0xFF outside the subact.
  std::vector<Elem> local;
};
EmbeddedSubact as_act(const Subact& b);

ElemSet zeros(const FiniteAct& a);
Subact cyclic_subact(const FiniteAct& a, Elem x);
// All subacts, ascending by bitmask.
std::vector<Subact> subacts(const FiniteAct& a);

struct Quotient {
  FiniteAct act;
  ActHom projection;
};

struct Coproduct {
  FiniteAct act;
  ActHom left;
  ActHom right;
};

Coproduct coproduct(const FiniteAct& a, const FiniteAct& b);
FiniteAct product(std::span<const FiniteAct> acts);

// The one-element act over a monoid.
FiniteAct trivial_act(const FiniteMonoid& m);
// The left regular act S acting on itself; element i is monoid element i.
FiniteAct left_regular_act(const FiniteMonoid& m);

// Result of canonicalisation: the canonical act and the relabelling
// original element -> canonical element.
struct CanonicalAct {
  FiniteAct act;
  std::vector<Elem> relabel;
};
CanonicalAct canonical_form(const FiniteAct& a);

// Marks unassigned points of partial maps.
inline constexpr Elem kUnset = 0xFF;

// A bijective equivariant map, first in lexicographic order of the map vector.
std::optional<ActHom> find_isomorphism(const FiniteAct& a, const FiniteAct& b);

// A bijective equivariant map agreeing with the partial map (kUnset = free).
std::optional<ActHom> find_isomorphism_extending(const FiniteAct& a, const FiniteAct& b,
                                                 const std::vector<Elem>& partial);

// Every equivariant map a -> b in lexicographic order.
std::vector<ActHom> all_homs(const FiniteAct& a, const FiniteAct& b);

// First extension (lexicographic) of a partial map.
std::optional<std::vector<Elem>> extend_partial_hom(const FiniteAct& a, const FiniteAct& b,
                                                    std::vector<Elem> partial);
// Number of extensions, stopping once `cap` are found.
std::size_t count_extensions(const FiniteAct& a, const FiniteAct& b,
                             std::vector<Elem> partial, std::size_t cap);
bool hom_exists(const FiniteAct& a, const FiniteAct& b);

std::string describe(const FiniteAct& a);

}  // namespace radact

#endif  // RADACT_ACT_HPP
