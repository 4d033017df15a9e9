#include <functional>

#include "radact/act.hpp"

namespace radact {

namespace {

// Backtracking over the points of the source in index order. Setting f(x)
// forces f(gx) = g f(x) for each monoid generator g; these forced values are
// propagated eagerly and undone through a trail.
class HomSearch {
 public:
  HomSearch(const FiniteAct& a, const FiniteAct& b, bool bijective)
      : a_(a), b_(b), bijective_(bijective), f_(a.size(), kUnset), inv_(b.size(), kUnset) {
    require_same_monoid(a, b);
  }

  bool seed(const std::vector<Elem>& partial) {
    for (std::size_t x = 0; x < partial.size(); ++x) {
      if (partial[x] == kUnset) continue;
      if (partial[x] >= b_.size() || !assign(static_cast<Elem>(x), partial[x])) return false;
    }
    return true;
  }

  // Calls visit for each completion in lexicographic order until it returns false.
  bool run(const std::function<bool(const std::vector<Elem>&)>& visit) {
    std::size_t x = 0;
    while (x < f_.size() && f_[x] != kUnset) ++x;
    if (x == f_.size()) return visit(f_);
    for (std::size_t v = 0; v < b_.size(); ++v) {
      std::size_t mark = trail_.size();
      if (assign(static_cast<Elem>(x), static_cast<Elem>(v))) {
        if (!run(visit)) return false;
      }
      undo(mark);
    }
    return true;
  }

 private:
  bool assign(Elem x, Elem v) {
    if (f_[x] != kUnset) return f_[x] == v;
    if (bijective_ && inv_[v] != kUnset) return false;
    f_[x] = v;
    if (bijective_) inv_[v] = x;
    trail_.push_back(x);
    for (Elem g : a_.monoid().generators()) {
      if (!assign(a_.act(g, x), b_.act(g, v))) return false;
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      Elem x = trail_.back();
      trail_.pop_back();
      if (bijective_) inv_[f_[x]] = kUnset;
      f_[x] = kUnset;
    }
  }

  const FiniteAct& a_;
  const FiniteAct& b_;
  bool bijective_;
  std::vector<Elem> f_;
  std::vector<Elem> inv_;
  std::vector<Elem> trail_;
};

}  // namespace

std::optional<ActHom> find_isomorphism(const FiniteAct& a, const FiniteAct& b) {
  require_same_monoid(a, b);
  if (a.size() != b.size()) return std::nullopt;
  if (cardinality(zeros(a)) != cardinality(zeros(b))) return std::nullopt;
  HomSearch search(a, b, true);
  std::optional<ActHom> out;
  search.run([&](const std::vector<Elem>& f) {
    out = ActHom{a, b, f};
    return false;
  });
  return out;
}

std::optional<ActHom> find_isomorphism_extending(const FiniteAct& a, const FiniteAct& b,
                                                 const std::vector<Elem>& partial) {
  require_same_monoid(a, b);
  if (a.size() != b.size() || partial.size() != a.size()) return std::nullopt;
  HomSearch search(a, b, true);
  if (!search.seed(partial)) return std::nullopt;
  std::optional<ActHom> out;
  search.run([&](const std::vector<Elem>& f) {
    out = ActHom{a, b, f};
    return false;
  });
  return out;
}

std::vector<ActHom> all_homs(const FiniteAct& a, const FiniteAct& b) {
  HomSearch search(a, b, false);
  std::vector<ActHom> out;
  search.run([&](const std::vector<Elem>& f) {
    out.push_back(ActHom{a, b, f});
    return true;
  });
  return out;
}

std::optional<std::vector<Elem>> extend_partial_hom(const FiniteAct& a, const FiniteAct& b,
                                                    std::vector<Elem> partial) {
  if (partial.size() != a.size()) {
    throw Error(ErrorKind::InvalidArgument, "partial map length differs from source size");
  }
  HomSearch search(a, b, false);
  if (!search.seed(partial)) return std::nullopt;
  std::optional<std::vector<Elem>> out;
  search.run([&](const std::vector<Elem>& f) {
    out = f;
    return false;
  });
  return out;
}

std::size_t count_extensions(const FiniteAct& a, const FiniteAct& b, std::vector<Elem> partial,
                             std::size_t cap) {
  if (partial.size() != a.size()) {
    throw Error(ErrorKind::InvalidArgument, "partial map length differs from source size");
  }
  HomSearch search(a, b, false);
  if (!search.seed(partial)) return 0;
  std::size_t count = 0;
  search.run([&](const std::vector<Elem>&) { return ++count < cap; });
  return count;
}

bool hom_exists(const FiniteAct& a, const FiniteAct& b) {
  return extend_partial_hom(a, b, std::vector<Elem>(a.size(), kUnset)).has_value();
}

}  // namespace radact
