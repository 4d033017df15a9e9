#ifndef RADACT_CONGRUENCE_HPP
#define RADACT_CONGRUENCE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "radact/act.hpp"

namespace radact {

// A partition of {0..m-1} in canonical form: block labels are assigned in
// order of least element, so equality is structural.
class Congruence {
 public:
  Congruence() = default;
  // Canonicalises arbitrary labels.
  static Congruence from_labels(std::span<const Elem> labels);
  static Congruence from_blocks(std::size_t size, std::span<const ElemSet> blocks);

  std::size_t size() const { return label_.size(); }
  std::size_t num_blocks() const { return num_blocks_; }
  Elem block_of(Elem a) const { return label_[a]; }
  bool related(Elem a, Elem b) const { return label_[a] == label_[b]; }
  std::span<const Elem> labels() const { return label_; }
  std::vector<ElemSet> blocks() const;
  ElemSet block_containing(Elem a) const;
  bool is_diagonal() const { return num_blocks_ == label_.size(); }
  bool is_total() const { return num_blocks_ <= 1; }

  // Inclusion of relations.
  bool leq(const Congruence& other) const;

  // "0 1 | 2 | 3 4"
  std::string to_string() const;

  friend bool operator==(const Congruence&, const Congruence&) = default;
  friend auto operator<=>(const Congruence& a, const Congruence& b) {
    return a.label_ <=> b.label_;
  }

 private:
  std::vector<Elem> label_;
  std::size_t num_blocks_ = 0;
};

// Parses "0 1 | 2" style partitions; throws ParseError.
Congruence parse_partition(const std::string& text, std::size_t size);

bool is_compatible(const FiniteAct& a, const Congruence& c);
// Throws InvalidArgument unless c is a congruence of a.
void require_congruence(const FiniteAct& a, const Congruence& c);

Congruence diagonal(const FiniteAct& a);
Congruence total(const FiniteAct& a);
Congruence diagonal(std::size_t size);

// Least congruence containing the pairs (union-find closure).
Congruence generated_congruence(const FiniteAct& a,
                                std::span<const std::pair<Elem, Elem>> pairs);
Congruence principal_congruence(const FiniteAct& a, Elem x, Elem y);

Congruence meet(const Congruence& a, const Congruence& b);
Congruence join(const FiniteAct& act, const Congruence& a, const Congruence& b);

// Rees congruence of a system of pairwise disjoint subsets; throws NotDisjoint.
Congruence rees_congruence(const FiniteAct& a, std::span<const Subact> system);
Congruence rees_congruence(const FiniteAct& a, ElemSet block);
bool is_rees(const FiniteAct& a, const Congruence& c);

struct ClassSystem {
  Congruence congruence;
  std::vector<Subact> blocks;  // non-trivial classes that are subacts
};
ClassSystem class_system(const FiniteAct& a, const Congruence& c);

// χ_B on a subact B (indices local to as_act(B)) extended by singletons.
Congruence smallest_extension(const Subact& b, const Congruence& chi_b);
// Restriction of c to the subact, in local indices of as_act(b).
Congruence restrict_to(const Subact& b, const Congruence& c);

inline constexpr std::size_t kDefaultCongruenceBound = 7;

// Full Con(A) by join-closure of principal congruences, ascending canonical
// order. Throws SizeBound above the bound.
std::vector<Congruence> all_congruences(const FiniteAct& a,
                                        std::size_t bound = kDefaultCongruenceBound);

// χ is essential iff it meets every non-diagonal congruence non-trivially.
// Decided through principal congruences, which every non-diagonal congruence
// contains.
bool is_essential(const FiniteAct& a, const Congruence& c);

Congruence kernel(const ActHom& f);

// Maximal congruences κ with χ ∧ κ = Δ; ascending canonical order.
std::vector<Congruence> maximal_complements(const FiniteAct& a, const Congruence& chi,
                                            std::size_t bound = kDefaultCongruenceBound);
// The canonically least element of maximal_complements.
Congruence maximal_complement(const FiniteAct& a, const Congruence& chi,
                              std::size_t bound = kDefaultCongruenceBound);

Quotient quotient(const FiniteAct& a, const Congruence& c);
Quotient rees_quotient(const FiniteAct& a, std::span<const Subact> system);
// A/B for a single subact, singletons allowed (then a relabelling).
Quotient rees_quotient(const FiniteAct& a, const Subact& b);

// For τ ⊇ κ, the congruence τ/κ on A/κ (given the projection).
Congruence quotient_congruence(const Quotient& q, const Congruence& tau);
// Image relation {(f a, f b) : a τ b} as a set of pairs on the target.
std::vector<std::pair<Elem, Elem>> image_relation(const ActHom& f, const Congruence& tau);
// Preimage f^{-1}(τ) of a congruence on the target.
Congruence preimage(const ActHom& f, const Congruence& tau);

}  // namespace radact

#endif  // RADACT_CONGRUENCE_HPP
