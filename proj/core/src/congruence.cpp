#include "radact/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace radact {

Congruence Congruence::from_labels(std::span<const Elem> labels) {
  Congruence c;
  c.label_.resize(labels.size());
  std::vector<int> rename(256, -1);
  Elem next = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    int& r = rename[labels[i]];
    if (r < 0) r = next++;
    c.label_[i] = static_cast<Elem>(r);
  }
  c.num_blocks_ = next;
  return c;
}

Congruence Congruence::from_blocks(std::size_t size, std::span<const ElemSet> blocks) {
  std::vector<Elem> labels(size, kUnset);
  Elem label = 0;
  for (ElemSet b : blocks) {
    for (Elem x : elements_of(b)) {
      if (x >= size || labels[x] != kUnset) {
        throw Error(ErrorKind::InvalidArgument, "blocks do not form a partition");
      }
      labels[x] = label;
    }
    ++label;
  }
  for (Elem& l : labels) {
    if (l == kUnset) throw Error(ErrorKind::InvalidArgument, "blocks do not cover the carrier");
  }
  return from_labels(labels);
}

std::vector<ElemSet> Congruence::blocks() const {
  std::vector<ElemSet> out(num_blocks_, 0);
  for (std::size_t i = 0; i < label_.size(); ++i) out[label_[i]] |= singleton(i);
  return out;
}

ElemSet Congruence::block_containing(Elem a) const {
  ElemSet out = 0;
  for (std::size_t i = 0; i < label_.size(); ++i) {
    if (label_[i] == label_[a]) out |= singleton(i);
  }
  return out;
}

bool Congruence::leq(const Congruence& other) const {
  // Each block of this lies inside one block of other.
  std::vector<int> image(num_blocks_, -1);
  for (std::size_t i = 0; i < label_.size(); ++i) {
    int& im = image[label_[i]];
    if (im < 0) {
      im = other.label_[i];
    } else if (im != other.label_[i]) {
      return false;
    }
  }
  return true;
}

std::string Congruence::to_string() const {
  std::ostringstream out;
  bool first_block = true;
  for (ElemSet b : blocks()) {
    if (!first_block) out << " | ";
    first_block = false;
    bool first = true;
    for (Elem x : elements_of(b)) {
      if (!first) out << ' ';
      first = false;
      out << static_cast<int>(x);
    }
  }
  return out.str();
}

Congruence parse_partition(const std::string& text, std::size_t size) {
  std::vector<ElemSet> blocks;
  std::istringstream in(text);
  std::string token;
  ElemSet current = 0;
  ElemSet seen = 0;
  auto close_block = [&] {
    if (current == 0) throw Error(ErrorKind::ParseError, "empty block in partition");
    blocks.push_back(current);
    current = 0;
  };
  while (in >> token) {
    if (token == "|") {
      close_block();
      continue;
    }
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(token, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != token.size() || token.empty()) {
      throw Error(ErrorKind::ParseError, "expected element index, got '" + token + "'");
    }
    if (v >= size) throw Error(ErrorKind::ParseError, "element " + token + " out of range");
    if (contains(seen, v)) throw Error(ErrorKind::ParseError, "element " + token + " repeated");
    seen |= singleton(v);
    current |= singleton(v);
  }
  close_block();
  if (seen != full_set(size)) throw Error(ErrorKind::ParseError, "partition does not cover 0.." +
                                                                      std::to_string(size - 1));
  return Congruence::from_blocks(size, blocks);
}

bool is_compatible(const FiniteAct& a, const Congruence& c) {
  if (c.size() != a.size()) return false;
  for (Elem g : a.monoid().generators()) {
    for (std::size_t x = 0; x < a.size(); ++x) {
      for (std::size_t y = x + 1; y < a.size(); ++y) {
        if (c.related(static_cast<Elem>(x), static_cast<Elem>(y)) &&
            !c.related(a.act(g, static_cast<Elem>(x)), a.act(g, static_cast<Elem>(y)))) {
          return false;
        }
      }
    }
  }
  return true;
}

void require_congruence(const FiniteAct& a, const Congruence& c) {
  if (c.size() != a.size()) throw Error(ErrorKind::ActMismatch, "congruence size differs from act");
  if (!is_compatible(a, c)) {
    throw Error(ErrorKind::InvalidArgument, "partition " + c.to_string() + " is not compatible");
  }
}

Congruence diagonal(std::size_t size) {
  std::vector<Elem> labels(size);
  std::iota(labels.begin(), labels.end(), Elem{0});
  return Congruence::from_labels(labels);
}

Congruence diagonal(const FiniteAct& a) { return diagonal(a.size()); }

Congruence total(const FiniteAct& a) {
  std::vector<Elem> labels(a.size(), 0);
  return Congruence::from_labels(labels);
}

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (y < x) std::swap(x, y);
    parent[y] = x;
    return true;
  }
  std::vector<std::size_t> parent;
};

Congruence closure_of(const FiniteAct& a, std::vector<std::pair<Elem, Elem>> work) {
  UnionFind uf(a.size());
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if (!uf.unite(x, y)) continue;
    for (Elem g : a.monoid().generators()) work.emplace_back(a.act(g, x), a.act(g, y));
  }
  std::vector<Elem> labels(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) labels[i] = static_cast<Elem>(uf.find(i));
  return Congruence::from_labels(labels);
}

std::vector<std::pair<Elem, Elem>> spanning_pairs(const Congruence& c) {
  std::vector<std::pair<Elem, Elem>> out;
  std::vector<int> first(c.num_blocks(), -1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    int& f = first[c.block_of(static_cast<Elem>(i))];
    if (f < 0) {
      f = static_cast<int>(i);
    } else {
      out.emplace_back(static_cast<Elem>(f), static_cast<Elem>(i));
    }
  }
  return out;
}

void require_same_size(const Congruence& a, const Congruence& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::ActMismatch, "congruences on different acts");
}

}  // namespace

Congruence generated_congruence(const FiniteAct& a,
                                std::span<const std::pair<Elem, Elem>> pairs) {
  for (auto [x, y] : pairs) {
    if (x >= a.size() || y >= a.size()) {
      throw Error(ErrorKind::InvalidArgument, "pair outside the carrier");
    }
  }
  return closure_of(a, std::vector<std::pair<Elem, Elem>>(pairs.begin(), pairs.end()));
}

Congruence principal_congruence(const FiniteAct& a, Elem x, Elem y) {
  std::pair<Elem, Elem> p{x, y};
  return generated_congruence(a, std::span<const std::pair<Elem, Elem>>(&p, 1));
}

Congruence meet(const Congruence& a, const Congruence& b) {
  require_same_size(a, b);
  std::map<std::pair<Elem, Elem>, Elem> ids;
  std::vector<Elem> labels(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto key = std::make_pair(a.block_of(static_cast<Elem>(i)), b.block_of(static_cast<Elem>(i)));
    auto it = ids.try_emplace(key, static_cast<Elem>(ids.size())).first;
    labels[i] = it->second;
  }
  return Congruence::from_labels(labels);
}

Congruence join(const FiniteAct& act, const Congruence& a, const Congruence& b) {
  require_same_size(a, b);
  if (a.size() != act.size()) throw Error(ErrorKind::ActMismatch, "congruence size differs");
  auto pairs = spanning_pairs(a);
  auto more = spanning_pairs(b);
  pairs.insert(pairs.end(), more.begin(), more.end());
  return closure_of(act, std::move(pairs));
}

Congruence rees_congruence(const FiniteAct& a, std::span<const Subact> system) {
  std::vector<ElemSet> blocks;
  ElemSet used = 0;
  for (const Subact& b : system) {
    if ((used & b.members) != 0) {
      throw Error(ErrorKind::NotDisjoint, "subacts of the system overlap at element " +
                                              std::to_string(std::countr_zero(used & b.members)));
    }
    if (!is_closed(a, b.members) || b.members == 0) {
      throw Error(ErrorKind::InvalidArgument, "system member is not a subact");
    }
    used |= b.members;
    blocks.push_back(b.members);
  }
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (!contains(used, x)) blocks.push_back(singleton(x));
  }
  std::sort(blocks.begin(), blocks.end(),
            [](ElemSet l, ElemSet r) { return std::countr_zero(l) < std::countr_zero(r); });
  return Congruence::from_blocks(a.size(), blocks);
}

Congruence rees_congruence(const FiniteAct& a, ElemSet block) {
  Subact b{a, block};
  return rees_congruence(a, std::span<const Subact>(&b, 1));
}

bool is_rees(const FiniteAct& a, const Congruence& c) {
  for (ElemSet b : c.blocks()) {
    if (cardinality(b) > 1 && !is_closed(a, b)) return false;
  }
  return true;
}

ClassSystem class_system(const FiniteAct& a, const Congruence& c) {
  ClassSystem out{c, {}};
  for (ElemSet b : c.blocks()) {
    if (cardinality(b) > 1 && is_closed(a, b)) out.blocks.push_back(Subact{a, b});
  }
  return out;
}

Congruence smallest_extension(const Subact& b, const Congruence& chi_b) {
  std::vector<Elem> members = b.elements();
  if (chi_b.size() != members.size()) {
    throw Error(ErrorKind::ActMismatch, "congruence size differs from subact");
  }
  const std::size_t m = b.parent.size();
  std::vector<Elem> labels(m);
  for (std::size_t x = 0; x < m; ++x) labels[x] = static_cast<Elem>(members.size() + x);
  for (std::size_t i = 0; i < members.size(); ++i) labels[members[i]] = chi_b.block_of(static_cast<Elem>(i));
  return Congruence::from_labels(labels);
}

Congruence restrict_to(const Subact& b, const Congruence& c) {
  std::vector<Elem> members = b.elements();
  std::vector<Elem> labels(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) labels[i] = c.block_of(members[i]);
  return Congruence::from_labels(labels);
}

std::vector<Congruence> all_congruences(const FiniteAct& a, std::size_t bound) {
  if (a.size() > bound) {
    throw Error(ErrorKind::SizeBound, "act has " + std::to_string(a.size()) +
                                          " elements, congruence bound is " +
                                          std::to_string(bound));
  }
  std::vector<Congruence> principal;
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = x + 1; y < a.size(); ++y) {
      principal.push_back(principal_congruence(a, static_cast<Elem>(x), static_cast<Elem>(y)));
    }
  }
  std::sort(principal.begin(), principal.end());
  principal.erase(std::unique(principal.begin(), principal.end()), principal.end());
  std::set<Congruence> found(principal.begin(), principal.end());
  std::vector<Congruence> frontier(principal.begin(), principal.end());
  while (!frontier.empty()) {
    Congruence c = frontier.back();
    frontier.pop_back();
    for (const Congruence& p : principal) {
      if (p.leq(c)) continue;
      Congruence j = join(a, c, p);
      if (found.insert(j).second) frontier.push_back(j);
    }
  }
  found.insert(diagonal(a));
  return {found.begin(), found.end()};
}

bool is_essential(const FiniteAct& a, const Congruence& c) {
  if (c.size() != a.size()) throw Error(ErrorKind::ActMismatch, "congruence size differs");
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = x + 1; y < a.size(); ++y) {
      if (meet(c, principal_congruence(a, static_cast<Elem>(x), static_cast<Elem>(y)))
              .is_diagonal()) {
        return false;
      }
    }
  }
  return true;
}

Congruence kernel(const ActHom& f) { return Congruence::from_labels(f.map); }

std::vector<Congruence> maximal_complements(const FiniteAct& a, const Congruence& chi,
                                            std::size_t bound) {
  std::vector<Congruence> all = all_congruences(a, bound);
  std::vector<Congruence> disjoint;
  for (const Congruence& k : all) {
    if (meet(chi, k).is_diagonal()) disjoint.push_back(k);
  }
  std::vector<Congruence> out;
  for (const Congruence& k : disjoint) {
    bool maximal = true;
    for (const Congruence& other : disjoint) {
      if (!(other == k) && k.leq(other)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(k);
  }
  return out;
}

Congruence maximal_complement(const FiniteAct& a, const Congruence& chi, std::size_t bound) {
  return maximal_complements(a, chi, bound).front();
}

Quotient quotient(const FiniteAct& a, const Congruence& c) {
  if (c.size() != a.size()) throw Error(ErrorKind::ActMismatch, "congruence size differs");
  const std::size_t n = a.monoid().size();
  const std::size_t k = c.num_blocks();
  std::vector<Elem> flat(n * k);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t x = 0; x < a.size(); ++x) {
      flat[s * k + c.block_of(static_cast<Elem>(x))] =
          c.block_of(a.act(static_cast<Elem>(s), static_cast<Elem>(x)));
    }
  }
  FiniteAct q = FiniteAct::trusted(a.monoid(), k, std::move(flat));
  std::vector<Elem> proj(c.labels().begin(), c.labels().end());
  return Quotient{q, ActHom{a, q, std::move(proj)}};
}

Quotient rees_quotient(const FiniteAct& a, std::span<const Subact> system) {
  return quotient(a, rees_congruence(a, system));
}

Quotient rees_quotient(const FiniteAct& a, const Subact& b) {
  return quotient(a, rees_congruence(a, std::span<const Subact>(&b, 1)));
}

Congruence quotient_congruence(const Quotient& q, const Congruence& tau) {
  const ActHom& p = q.projection;
  std::vector<Elem> labels(q.act.size(), kUnset);
  for (std::size_t x = 0; x < p.map.size(); ++x) {
    Elem& l = labels[p.map[x]];
    Elem t = tau.block_of(static_cast<Elem>(x));
    if (l == kUnset) {
      l = t;
    } else if (l != t) {
      throw Error(ErrorKind::InvalidArgument, "tau does not contain the kernel");
    }
  }
  return Congruence::from_labels(labels);
}

std::vector<std::pair<Elem, Elem>> image_relation(const ActHom& f, const Congruence& tau) {
  std::vector<std::pair<Elem, Elem>> out;
  for (std::size_t x = 0; x < f.map.size(); ++x) {
    for (std::size_t y = x + 1; y < f.map.size(); ++y) {
      if (tau.related(static_cast<Elem>(x), static_cast<Elem>(y))) {
        out.emplace_back(f.map[x], f.map[y]);
      }
    }
  }
  return out;
}

Congruence preimage(const ActHom& f, const Congruence& tau) {
  std::vector<Elem> labels(f.map.size());
  for (std::size_t x = 0; x < f.map.size(); ++x) labels[x] = tau.block_of(f.map[x]);
  return Congruence::from_labels(labels);
}

}  // namespace radact
