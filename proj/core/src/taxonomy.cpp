#include "radact/radical.hpp"

namespace radact {

namespace {

void refute(Taxonomy& t, bool Taxonomy::*flag, const std::string& name, const std::string& why) {
  if (t.*flag) {
    t.*flag = false;
    t.witnesses[name] = why;
  }
}

bool subact_radical(const Radical& r, const FiniteAct& a, ElemSet members) {
  return is_radical_act(r, as_act(Subact{a, members}).act);
}

}  // namespace

Taxonomy classify_radical(const Radical& r, std::span<const FiniteAct> acts) {
  Taxonomy t;
  for (const FiniteAct& a : acts) {
    const Congruence ra = r(a);
    const ElemSet z = zeros(a);
    const std::vector<Subact> subs = subacts(a);
    const std::string where = describe(a);

    for (const Subact& b : subs) {
      if (!(r(as_act(b).act) == restrict_to(b, ra))) {
        refute(t, &Taxonomy::hereditary, "hereditary",
               where + " subact mask " + std::to_string(b.members));
      }
    }

    ClassSystem sigma = class_system(a, ra);
    if (!is_rees(a, ra)) {
      refute(t, &Taxonomy::kurosh_amitsur, "kurosh_amitsur", where + " r(A) not Rees");
    }
    for (const Subact& x : sigma.blocks) {
      const bool x_radical = subact_radical(r, a, x.members);
      if (!x_radical) {
        refute(t, &Taxonomy::pre_kurosh, "pre_kurosh", where + " class mask " +
                                                           std::to_string(x.members));
        refute(t, &Taxonomy::kurosh_amitsur, "kurosh_amitsur",
               where + " class mask " + std::to_string(x.members));
        if ((x.members & z) != 0) {
          refute(t, &Taxonomy::weakly_hereditary, "weakly_hereditary",
                 where + " class mask " + std::to_string(x.members));
        }
      }
      for (const Subact& y : subs) {
        if ((y.members & ~x.members) != 0 || y.trivial()) continue;
        if (subact_radical(r, a, y.members)) continue;
        refute(t, &Taxonomy::pre_hereditary, "pre_hereditary",
               where + " subact mask " + std::to_string(y.members));
        if ((y.members & z) != 0) {
          refute(t, &Taxonomy::zero_hereditary, "zero_hereditary",
                 where + " subact mask " + std::to_string(y.members));
        }
      }
    }
  }
  return t;
}

}  // namespace radact
