#include "radact/injectivity.hpp"

namespace radact {

Pushout transfer_pushout(const Radical& r, const ActHom& m, const ActHom& f) {
  if (!(m.source == f.source)) {
    throw Error(ErrorKind::ActMismatch, "pushout legs need a common source");
  }
  if (!is_r_mono(r, m)) throw Error(ErrorKind::NotRMono, "first leg is not an r-mono");
  const FiniteAct& b = m.target;
  const FiniteAct& c = f.target;
  const FiniteMonoid& mon = b.monoid();
  const ElemSet image = m.image();

  std::vector<Elem> m_inverse(b.size(), kUnset);
  for (std::size_t x = 0; x < m.source.size(); ++x) m_inverse[m(static_cast<Elem>(x))] = static_cast<Elem>(x);

  // D = C ⊎ (B ∖ m(A)); v sends outside points to their slot and m(A) through f.
  std::vector<Elem> v(b.size());
  std::size_t next = c.size();
  for (std::size_t x = 0; x < b.size(); ++x) {
    v[x] = contains(image, x) ? f(m_inverse[x]) : static_cast<Elem>(next++);
  }
  const std::size_t dsize = next;
  std::vector<Elem> flat(mon.size() * dsize);
  for (std::size_t s = 0; s < mon.size(); ++s) {
    const Elem se = static_cast<Elem>(s);
    for (std::size_t y = 0; y < c.size(); ++y) flat[s * dsize + y] = c.act(se, static_cast<Elem>(y));
    for (std::size_t x = 0; x < b.size(); ++x) {
      if (!contains(image, x)) flat[s * dsize + v[x]] = v[b.act(se, static_cast<Elem>(x))];
    }
  }
  FiniteAct d = FiniteAct::trusted(mon, dsize, std::move(flat), "D");
  std::vector<Elem> u(c.size());
  for (std::size_t y = 0; y < c.size(); ++y) u[y] = static_cast<Elem>(y);
  return Pushout{d, make_hom(c, d, std::move(u)), make_hom(b, d, std::move(v))};
}

BanaschewskiResult banaschewski_reduce(const Radical& r, const ActHom& f) {
  if (!is_r_mono(r, f)) throw Error(ErrorKind::NotRMono, "map is not an r-mono");
  const FiniteAct& a = f.target;
  const std::size_t bound = std::max(a.size(), kDefaultCongruenceBound);
  Congruence kappa = maximal_complement(a, rees_congruence(a, f.image()), bound);
  Quotient reduced = quotient(a, kappa);
  ActHom composite = compose(reduced.projection, f);
  const ElemSet image = composite.image();
  BanaschewskiResult out{kappa, reduced, composite, composite.injective(),
                         is_large(reduced.act, image), false};
  out.r_dense = is_r_dense(r, Subact{reduced.act, image});
  return out;
}

DirectedChain DirectedChain::make(std::vector<FiniteAct> acts, std::vector<ActHom> links) {
  if (acts.empty() || links.size() + 1 != acts.size()) {
    throw Error(ErrorKind::InvalidArgument, "a chain of k+1 acts needs k links");
  }
  for (std::size_t i = 0; i < links.size(); ++i) {
    if (!(links[i].source == acts[i]) || !(links[i].target == acts[i + 1])) {
      throw Error(ErrorKind::ActMismatch, "link " + std::to_string(i) + " does not join acts " +
                                              std::to_string(i) + " and " +
                                              std::to_string(i + 1));
    }
    if (!links[i].injective()) {
      throw Error(ErrorKind::InvalidArgument, "link " + std::to_string(i) + " is not injective");
    }
  }
  DirectedChain chain;
  chain.acts_ = std::move(acts);
  chain.links_ = std::move(links);
  return chain;
}

ActHom DirectedChain::composite(std::size_t i, std::size_t j) const {
  if (i > j || j >= acts_.size()) throw Error(ErrorKind::InvalidArgument, "bad chain indices");
  ActHom out = identity_hom(acts_[i]);
  for (std::size_t k = i; k < j; ++k) out = compose(links_[k], out);
  return out;
}

DirectLimit direct_limit(const DirectedChain& chain) {
  const std::size_t last = chain.length() - 1;
  FiniteAct sum = chain.act(0);
  std::vector<std::size_t> offset{0};
  for (std::size_t i = 1; i < chain.length(); ++i) {
    offset.push_back(sum.size());
    sum = coproduct(sum, chain.act(i)).act;
  }
  // a_i χ a_j iff f_{ik}(a_i) = f_{jk}(a_j) for the last index k.
  std::vector<Elem> labels(sum.size());
  for (std::size_t i = 0; i < chain.length(); ++i) {
    const ActHom to_last = chain.composite(i, last);
    for (std::size_t x = 0; x < chain.act(i).size(); ++x) {
      labels[offset[i] + x] = to_last(static_cast<Elem>(x));
    }
  }
  Congruence chi = Congruence::from_labels(labels);
  Quotient q = quotient(sum, chi);
  std::vector<ActHom> legs;
  for (std::size_t i = 0; i < chain.length(); ++i) {
    std::vector<Elem> map(chain.act(i).size());
    for (std::size_t x = 0; x < map.size(); ++x) map[x] = q.projection(static_cast<Elem>(offset[i] + x));
    legs.push_back(make_hom(chain.act(i), q.act, std::move(map)));
  }
  return DirectLimit{q.act, std::move(legs), chi};
}

}  // namespace radact
