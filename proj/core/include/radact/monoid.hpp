#ifndef RADACT_MONOID_HPP
#define RADACT_MONOID_HPP

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "radact/types.hpp"

namespace radact {

// A finite monoid given by its multiplication table. Immutable; copies share
// the underlying table.
class FiniteMonoid {
 public:
  // Checks the identity laws and associativity. Throws Error{BadIdentity} or
  // Error{NotAssociative} naming a witness.
  static FiniteMonoid validate(const std::vector<std::vector<int>>& table,
                               int identity, std::string name = {});

  std::size_t size() const { return data_->size; }
  Elem identity() const { return data_->identity; }
  Elem mul(Elem x, Elem y) const { return data_->table[x * data_->size + y]; }
  const std::string& name() const { return data_->name; }
  std::span<const Elem> table() const { return data_->table; }

  // Non-identity elements in index order.
  const std::vector<Elem>& non_identity() const { return data_->non_identity; }

  // A generating set, chosen greedily in index order.
  const std::vector<Elem>& generators() const { return data_->generators; }

  FiniteMonoid renamed(std::string name) const;

  // Structural equality: same size, identity and table.
  friend bool operator==(const FiniteMonoid& a, const FiniteMonoid& b);

  bool same_object(const FiniteMonoid& other) const { return data_ == other.data_; }

 private:
  struct Data {
    std::size_t size = 0;
    Elem identity = 0;
    std::vector<Elem> table;
    std::vector<Elem> non_identity;
    std::vector<Elem> generators;
    std::string name;
  };
  explicit FiniteMonoid(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  static std::shared_ptr<Data> build(std::size_t n, Elem identity, std::vector<Elem> table,
                                     std::string name);

  std::shared_ptr<const Data> data_;
};

// Canonical relabelling of a monoid: identity first, then the lexicographically
// least table over the remaining permutations.
FiniteMonoid canonical_monoid(const FiniteMonoid& m);

bool monoids_isomorphic(const FiniteMonoid& a, const FiniteMonoid& b);

// All monoids with exactly n elements up to isomorphism, in canonical order.
std::vector<FiniteMonoid> enumerate_monoids(std::size_t n);

}  // namespace radact

#endif  // RADACT_MONOID_HPP
