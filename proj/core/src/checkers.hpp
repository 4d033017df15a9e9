#ifndef RADACT_SRC_CHECKERS_HPP
#define RADACT_SRC_CHECKERS_HPP

#include <string>
#include <utility>
#include <vector>

#include "radact/injectivity.hpp"
#include "radact/verifier.hpp"

namespace radact {

void add_radical_checkers(std::vector<Checker>& out);
void add_closure_checkers(std::vector<Checker>& out);
void add_large_checkers(std::vector<Checker>& out);
void add_injective_checkers(std::vector<Checker>& out);
void add_kurosh_checkers(std::vector<Checker>& out);

namespace check {

// Instance key: fields joined by '|'.
template <typename... Parts>
std::string key(const Parts&... parts) {
  std::string out;
  ((out += (out.empty() ? "" : "|"), out += parts), ...);
  return out;
}

std::string mask(ElemSet s);

// {"radical": ..., "acts": [...]} style witness.
Json witness(const Radical* r, std::vector<FiniteAct> acts, Json extra = Json::object());

// Proper and improper subacts as masks, ascending.
std::vector<ElemSet> subact_masks(const FiniteAct& a);

// Injective homs b -> a over the acts of monoid i, plus the identity of b.
std::vector<ActHom> extensions(const Universe& u, std::size_t i, const FiniteAct& b);

// Lists of pairwise disjoint non-empty subacts (including the empty family).
std::vector<std::vector<ElemSet>> disjoint_families(const FiniteAct& a);

// ℝ_r / 𝕊_r closed under binary coproducts of members whose coproduct stays
// within the act bound.
bool radical_class_coproduct_closed(const Universe& u, std::size_t i, const Radical& r);
bool semisimple_class_coproduct_closed(const Universe& u, std::size_t i, const Radical& r);

// The part of Σ_{r(a)} as masks.
std::vector<ElemSet> sigma_masks(const FiniteAct& a, const Congruence& c);

// Transports a local mask of an embedded subact to the parent.
ElemSet to_parent(const EmbeddedSubact& e, ElemSet local);

// Whether the image of `sub` lies in a single class of r(A/χ̄) for the
// smallest extension χ̄ of χ along the embedding m: B -> A.
bool collapses_in_extension(const Radical& r, const ActHom& m, const Congruence& chi_on_b);

}  // namespace check

}  // namespace radact

#endif  // RADACT_SRC_CHECKERS_HPP
