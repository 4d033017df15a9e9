#ifndef RADACT_INJECTIVITY_HPP
#define RADACT_INJECTIVITY_HPP

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "radact/act.hpp"
#include "radact/congruence.hpp"
#include "radact/radical.hpp"

namespace radact {

// B ≤ A is large iff ρ_B is essential on A.
bool is_large(const FiniteAct& a, ElemSet b);
// Definition-level check: every congruence injective on B is Δ.
bool is_large_by_congruences(const FiniteAct& a, ElemSet b);

// Disjoint family; decided through essentiality of ρ_Σ.
bool collectively_large(const FiniteAct& a, std::span<const ElemSet> family);
// Hom-based definition: every hom into one of `targets` that is injective on
// each member is injective.
bool collectively_large_by_homs(const FiniteAct& a, std::span<const ElemSet> family,
                                std::span<const FiniteAct> targets);

struct Extension {
  ActHom embedding;
  bool large = false;
  bool essential = false;
  bool r_dense = false;
  bool r_essential = false;
  std::string radical;  // empty for plain injective hulls
  std::string note;
};

struct Pushout {
  FiniteAct d;
  ActHom u;  // C -> D
  ActHom v;  // B -> D
};

// Completes A -m-> B, A -f-> C to a square with u an r-mono. D carries C on
// indices 0..|C|-1 followed by B ∖ m(A) in increasing order. Throws NotRMono.
Pushout transfer_pushout(const Radical& r, const ActHom& m, const ActHom& f);

struct BanaschewskiResult {
  Congruence kappa;
  Quotient reduced;  // A/κ and g
  ActHom composite;  // g ∘ f
  bool injective = false;
  bool large = false;
  bool r_dense = false;
};

// κ = maximal_complement(A, ρ_{f(B)}), X = A/κ. Throws NotRMono.
BanaschewskiResult banaschewski_reduce(const Radical& r, const ActHom& f);

// A finite chain A_0 -> A_1 -> ... -> A_k of injective homs.
class DirectedChain {
 public:
  static DirectedChain make(std::vector<FiniteAct> acts, std::vector<ActHom> links);

  std::size_t length() const { return acts_.size(); }
  const FiniteAct& act(std::size_t i) const { return acts_[i]; }
  const ActHom& link(std::size_t i) const { return links_[i]; }
  // f_{ij} for i ≤ j; f_{ii} is the identity.
  ActHom composite(std::size_t i, std::size_t j) const;

 private:
  std::vector<FiniteAct> acts_;
  std::vector<ActHom> links_;
};

struct DirectLimit {
  FiniteAct act;
  std::vector<ActHom> legs;  // π ∘ u_i
  Congruence chi;            // on the coproduct
};

DirectLimit direct_limit(const DirectedChain& chain);

// Baer-type test objects for one monoid: cyclic acts S/χ and their subacts.
class CyclicTests {
 public:
  explicit CyclicTests(const FiniteMonoid& m);

  struct Pair {
    FiniteAct cyclic;
    ElemSet sub;
  };
  const FiniteMonoid& monoid() const { return monoid_; }
  const std::vector<FiniteAct>& cyclic_acts() const { return cyclic_; }
  const std::vector<Pair>& large_pairs() const { return large_; }
  const std::vector<Pair>& all_pairs() const { return all_; }

 private:
  FiniteMonoid monoid_;
  std::vector<FiniteAct> cyclic_;
  std::vector<Pair> large_;
  std::vector<Pair> all_;
};

// Every hom sub -> q extends along sub ⊆ a.
bool extends_along(const FiniteAct& a, ElemSet sub, const FiniteAct& q);

// Q has a zero and each hom from a large subact of a cyclic act extends.
bool is_injective(const FiniteAct& q);
bool is_injective(const FiniteAct& q, const CyclicTests& tests);
// Q has a zero and each hom from any subact of a cyclic act extends.
bool is_injective_skornjakov(const FiniteAct& q, const CyclicTests& tests);
// Every hom from a subact K of the left regular act extends to S.
bool is_weakly_injective(const FiniteAct& q);

enum class InjMode { Auto, Criterion, Universe };
const char* to_string(InjMode mode);

// Per-monoid working context: the universe acts of one monoid plus caches
// for taxonomy flags, injectivity verdicts and hulls. Verdicts never depend
// on cache state.
class MonoidLab {
 public:
  MonoidLab(FiniteMonoid monoid, std::vector<FiniteAct> acts, std::size_t hull_bound);

  const FiniteMonoid& monoid() const { return monoid_; }
  const std::vector<FiniteAct>& acts() const { return acts_; }
  const CyclicTests& tests() const { return tests_; }
  std::size_t hull_bound() const { return hull_bound_; }

  const Taxonomy& taxonomy(const Radical& r);

  bool injective(const FiniteAct& q);
  // Every mono B ≤ A between universe acts, plus the zero requirement.
  bool injective_universe(const FiniteAct& q);
  bool weakly_injective(const FiniteAct& q);

  // Criterion mode: every hom from an r-dense subact of a cyclic act extends,
  // and each cyclic C with C ⨿ Θ ∈ ℝ_r maps into Q. Requires r zero-hereditary
  // on this lab (ModeUnavailable otherwise). Universe mode: every r-mono
  // between universe acts. Auto picks the criterion when available.
  bool r_injective(const Radical& r, const FiniteAct& q, InjMode mode = InjMode::Auto);
  bool orthogonal_r_injective(const Radical& r, const FiniteAct& q);

  // Dense inclusions A' ≤ B among universe acts (proper ones only).
  const std::vector<CyclicTests::Pair>& dense_inclusions(const Radical& r);
  // Every inclusion B' ≤ B among universe acts, proper ones only.
  const std::vector<CyclicTests::Pair>& inclusions();

  // Minimal injective extension with large image within the hull bound.
  std::optional<Extension> injective_hull(const FiniteAct& a);
  // c^r_{E(A)}(A) for Kurosh-Amitsur r; otherwise the minimal r-injective
  // r-essential extension found by search (noted in Extension::note).
  std::optional<Extension> r_injective_hull(const Radical& r, const FiniteAct& a);
  // Size-minimal r-injective extension with r-dense image, by exhaustive
  // search over superacts of A.
  std::optional<Extension> minimal_r_injective_extension(const Radical& r, const FiniteAct& a);

 private:
  struct RadicalCache;
  RadicalCache& cache(const Radical& r);

  FiniteMonoid monoid_;
  std::vector<FiniteAct> acts_;
  CyclicTests tests_;
  std::size_t hull_bound_;
  std::map<std::string, std::shared_ptr<RadicalCache>> caches_;
  std::map<std::string, bool> injective_;
  std::map<std::string, std::optional<Extension>> hulls_;
  std::optional<std::vector<CyclicTests::Pair>> inclusions_;
};

bool is_r_injective(const Radical& r, const FiniteAct& q, MonoidLab& lab,
                    InjMode mode = InjMode::Auto);
bool is_orthogonal_r_injective(const Radical& r, const FiniteAct& q, MonoidLab& lab);

// Minimal extension Q ⊇ A (|Q| ≤ size_bound) with Q injective and A large;
// throws BoundExceeded when none exists within the bound.
Extension injective_hull(const FiniteAct& a, std::size_t size_bound);
Extension r_injective_hull(const Radical& r, const FiniteAct& a, std::size_t size_bound,
                           MonoidLab& lab);

}  // namespace radact

#endif  // RADACT_INJECTIVITY_HPP
