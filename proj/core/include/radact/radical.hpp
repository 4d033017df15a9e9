#ifndef RADACT_RADICAL_HPP
#define RADACT_RADICAL_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>

#include "radact/act.hpp"
#include "radact/congruence.hpp"

namespace radact {

enum class RadicalKind {
  BuiltinRG,
  BuiltinDelta,
  BuiltinNabla,
  InducedFromSemisimpleClass,
  ExtensionalTable,
};

const char* to_string(RadicalKind kind);

// A decidable class of acts.
struct ClassOracle {
  std::string name;
  std::function<bool(const FiniteAct&)> member;
};

// Explicit radical values keyed by the canonical form of an act. Values are
// partitions of the canonical act's carrier.
class ExtensionalTable {
 public:
  void set(const FiniteAct& act, const Congruence& value);
  std::optional<Congruence> lookup(const FiniteAct& act) const;
  std::size_t size() const { return entries_.size(); }

 private:
  struct Entry {
    FiniteAct canonical;
    Congruence value;  // on the canonical act
  };
  std::map<std::string, Entry> entries_;
};

// An assignment A ↦ r(A) ∈ Con(A). Evaluations are memoised per act table;
// copies share the memo.
class Radical {
 public:
  static Radical delta();
  static Radical nabla();
  static Radical rG();
  // r_S(A) = ⋀{χ ∈ Con(A) : A/χ ∈ S}.
  static Radical induced(std::string name, ClassOracle semisimple);
  static Radical extensional(std::string name, ExtensionalTable table);

  const std::string& name() const;
  RadicalKind kind() const;

  Congruence operator()(const FiniteAct& a) const;

 private:
  struct State;
  explicit Radical(std::shared_ptr<State> s) : state_(std::move(s)) {}
  std::shared_ptr<State> state_;
};

Congruence radical_of(const Radical& r, const FiniteAct& a);

// The built-in r_G formula, exposed for direct use and testing.
Congruence rg_congruence(const FiniteAct& a);
// X_θ for a zero θ: union of cyclic subacts all of whose elements reach θ.
ElemSet rg_annihilated_union(const FiniteAct& a, Elem theta);

bool is_radical_act(const Radical& r, const FiniteAct& a);
bool is_semisimple_act(const Radical& r, const FiniteAct& a);
// Membership in 𝕃_r: A has a zero and A ∈ ℝ_r.
bool in_Lr(const Radical& r, const FiniteAct& a);
// The Kurosh-Amitsur radical t_{𝕃_r} induced by 𝕃_r: its semisimple class is
// the acts without a non-trivial subact in 𝕃_r.
Radical lr_radical(const Radical& r);

// Verifies the semisimple-class closure conditions on the given acts and
// returns the induced radical. Throws Registration with a witness on failure.
Radical register_induced(std::string name, ClassOracle semisimple,
                         std::span<const FiniteAct> universe,
                         std::size_t product_size_bound = 16);

// c^r_A(B) = π^{-1}([B]_{r(A/B)}) for π : A → A/B.
Subact closure(const Radical& r, const FiniteAct& a, ElemSet b);
Subact closure(const Radical& r, const Subact& b);
bool is_r_dense(const Radical& r, const Subact& b);
bool is_r_closed(const Radical& r, const Subact& b);
// Injective with r-dense image.
bool is_r_mono(const Radical& r, const ActHom& m);
// A/B ∈ ℝ_r, computed without the closure operator.
bool density_equivalent(const Radical& r, const Subact& b);
// Every subact X with |X| ≥ 2 meets B in at least two points.
bool intersection_large(const FiniteAct& a, ElemSet b);

// Flags of the radical taxonomy, each quantified over a list of acts.
struct Taxonomy {
  bool hereditary = true;
  bool pre_hereditary = true;
  bool weakly_hereditary = true;
  bool zero_hereditary = true;
  bool pre_kurosh = true;
  bool kurosh_amitsur = true;
  // Human-readable witness for each false flag.
  std::map<std::string, std::string> witnesses;
};

Taxonomy classify_radical(const Radical& r, std::span<const FiniteAct> acts);

}  // namespace radact

#endif  // RADACT_RADICAL_HPP
