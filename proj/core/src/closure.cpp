#include <bit>

#include "radact/radical.hpp"

namespace radact {

Subact closure(const Radical& r, const FiniteAct& a, ElemSet b) {
  if (b == 0 || !is_closed(a, b)) {
    throw Error(ErrorKind::InvalidArgument, "closure needs a subact");
  }
  Quotient q = rees_quotient(a, Subact{a, b});
  Congruence rq = r(q.act);
  const Elem point = q.projection(static_cast<Elem>(std::countr_zero(b)));
  ElemSet cls = rq.block_containing(point);
  ElemSet out = 0;
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (contains(cls, q.projection(static_cast<Elem>(x)))) out |= singleton(x);
  }
  return Subact{a, out};
}

Subact closure(const Radical& r, const Subact& b) { return closure(r, b.parent, b.members); }

bool is_r_dense(const Radical& r, const Subact& b) {
  return closure(r, b).members == b.parent.carrier();
}

bool is_r_closed(const Radical& r, const Subact& b) { return closure(r, b).members == b.members; }

bool is_r_mono(const Radical& r, const ActHom& m) {
  if (!m.injective()) return false;
  return is_r_dense(r, Subact{m.target, m.image()});
}

bool density_equivalent(const Radical& r, const Subact& b) {
  return is_radical_act(r, rees_quotient(b.parent, b).act);
}

bool intersection_large(const FiniteAct& a, ElemSet b) {
  for (const Subact& x : subacts(a)) {
    if (!x.trivial() && cardinality(x.members & b) < 2) return false;
  }
  return true;
}

}  // namespace radact
