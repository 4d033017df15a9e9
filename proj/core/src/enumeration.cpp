#include "radact/enumeration.hpp"

#include <vector>

namespace radact {

namespace {

class ActionFiller {
 public:
  ActionFiller(const FiniteMonoid& monoid, const std::optional<FiniteAct>& base, std::size_t size)
      : m_(monoid), n_(monoid.size()), size_(size), table_(n_ * size, kUnset) {
    const std::size_t k = base ? base->size() : 0;
    for (std::size_t x = 0; x < size; ++x) table_[m_.identity() * size + x] = static_cast<Elem>(x);
    for (std::size_t s = 0; s < n_; ++s) {
      for (std::size_t x = 0; x < k; ++x) {
        table_[s * size + x] = base->act(static_cast<Elem>(s), static_cast<Elem>(x));
      }
    }
    for (Elem s : m_.non_identity()) {
      for (std::size_t x = k; x < size; ++x) cells_.push_back(s * size + x);
    }
  }

  bool run(const std::function<bool(const FiniteAct&)>& visit) { return fill(0, visit); }

 private:
  Elem at(std::size_t s, std::size_t x) const { return table_[s * size_ + x]; }

  // Checks every instance of t(sa) = (ts)a that involves cell (s0, x0).
  bool consistent(std::size_t s0, std::size_t x0) const {
    const Elem v = at(s0, x0);
    for (std::size_t t = 0; t < n_; ++t) {
      Elem lhs = at(t, v);
      Elem rhs = at(m_.mul(static_cast<Elem>(t), static_cast<Elem>(s0)), x0);
      if (lhs != kUnset && rhs != kUnset && lhs != rhs) return false;
    }
    for (std::size_t s = 0; s < n_; ++s) {
      for (std::size_t a = 0; a < size_; ++a) {
        if (at(s, a) != x0) continue;
        Elem rhs = at(m_.mul(static_cast<Elem>(s0), static_cast<Elem>(s)), a);
        if (rhs != kUnset && rhs != v) return false;
      }
    }
    for (std::size_t t = 0; t < n_; ++t) {
      for (std::size_t s = 0; s < n_; ++s) {
        if (m_.mul(static_cast<Elem>(t), static_cast<Elem>(s)) != s0) continue;
        Elem sx = at(s, x0);
        if (sx == kUnset) continue;
        Elem lhs = at(t, sx);
        if (lhs != kUnset && lhs != v) return false;
      }
    }
    return true;
  }

  bool fill(std::size_t i, const std::function<bool(const FiniteAct&)>& visit) {
    if (i == cells_.size()) {
      return visit(FiniteAct::trusted(m_, size_, table_));
    }
    const std::size_t cell = cells_[i];
    const std::size_t s = cell / size_;
    const std::size_t x = cell % size_;
    for (std::size_t v = 0; v < size_; ++v) {
      table_[cell] = static_cast<Elem>(v);
      if (consistent(s, x) && !fill(i + 1, visit)) {
        table_[cell] = kUnset;
        return false;
      }
    }
    table_[cell] = kUnset;
    return true;
  }

  const FiniteMonoid& m_;
  std::size_t n_;
  std::size_t size_;
  std::vector<Elem> table_;
  std::vector<std::size_t> cells_;
};

}  // namespace

bool for_each_action(const FiniteMonoid& monoid, const std::optional<FiniteAct>& base,
                     std::size_t size, const std::function<bool(const FiniteAct&)>& visit) {
  if (base && !(base->monoid() == monoid)) {
    throw Error(ErrorKind::MonoidMismatch, "base act is over a different monoid");
  }
  if (size == 0 || size > kMaxCarrier || (base && base->size() > size)) {
    throw Error(ErrorKind::InvalidArgument, "size must cover the base act");
  }
  ActionFiller filler(monoid, base, size);
  return filler.run(visit);
}

}  // namespace radact
