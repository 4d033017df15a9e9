#include "radact/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace radact {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::BadIdentity: return "BadIdentity";
    case ErrorKind::IdentityAxiom: return "IdentityAxiom";
    case ErrorKind::AssocAxiom: return "AssocAxiom";
    case ErrorKind::BadTable: return "BadTable";
    case ErrorKind::NotDisjoint: return "NotDisjoint";
    case ErrorKind::ActMismatch: return "ActMismatch";
    case ErrorKind::MonoidMismatch: return "MonoidMismatch";
    case ErrorKind::NotEquivariant: return "NotEquivariant";
    case ErrorKind::SizeBound: return "SizeBound";
    case ErrorKind::NotInUniverse: return "NotInUniverse";
    case ErrorKind::NotRMono: return "NotRMono";
    case ErrorKind::ModeUnavailable: return "ModeUnavailable";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::NotKuroshAmitsur: return "NotKuroshAmitsur";
    case ErrorKind::UnknownTheorem: return "UnknownTheorem";
    case ErrorKind::Registration: return "Registration";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::string triple(std::size_t x, std::size_t y, std::size_t z) {
  std::ostringstream out;
  out << "(" << x << "," << y << "," << z << ")";
  return out.str();
}

}  // namespace

std::shared_ptr<FiniteMonoid::Data> FiniteMonoid::build(std::size_t n, Elem identity,
                                                        std::vector<Elem> table,
                                                        std::string name) {
  auto d = std::make_shared<Data>();
  d->size = n;
  d->identity = identity;
  d->table = std::move(table);
  d->name = std::move(name);
  for (std::size_t x = 0; x < n; ++x) {
    if (x != identity) d->non_identity.push_back(static_cast<Elem>(x));
  }
  // Greedy generating set: add the first element not yet generated.
  std::vector<bool> generated(n, false);
  generated[identity] = true;
  for (std::size_t x = 0; x < n; ++x) {
    if (generated[x]) continue;
    d->generators.push_back(static_cast<Elem>(x));
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t a = 0; a < n; ++a) {
        if (!generated[a]) continue;
        for (Elem g : d->generators) {
          Elem p = d->table[g * n + a];
          if (!generated[p]) {
            generated[p] = true;
            grew = true;
          }
        }
      }
    }
  }
  return d;
}

FiniteMonoid FiniteMonoid::validate(const std::vector<std::vector<int>>& table, int identity,
                                    std::string name) {
  const std::size_t n = table.size();
  if (n == 0 || n > kMaxCarrier) {
    throw Error(ErrorKind::BadTable, "monoid table must have between 1 and 64 rows");
  }
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    if (table[x].size() != n) {
      throw Error(ErrorKind::BadTable, "monoid table is not square at row " + std::to_string(x));
    }
    for (std::size_t y = 0; y < n; ++y) {
      int v = table[x][y];
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw Error(ErrorKind::BadTable, "entry out of range at (" + std::to_string(x) + "," +
                                             std::to_string(y) + ")");
      }
      flat.push_back(static_cast<Elem>(v));
    }
  }
  if (identity < 0 || static_cast<std::size_t>(identity) >= n) {
    throw Error(ErrorKind::BadIdentity, "identity index out of range");
  }
  const auto e = static_cast<std::size_t>(identity);
  for (std::size_t x = 0; x < n; ++x) {
    if (flat[e * n + x] != x || flat[x * n + e] != x) {
      throw Error(ErrorKind::BadIdentity,
                  "identity law fails at x=" + std::to_string(x));
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (flat[flat[x * n + y] * n + z] != flat[x * n + flat[y * n + z]]) {
          throw Error(ErrorKind::NotAssociative, "associativity fails at " + triple(x, y, z));
        }
      }
    }
  }
  return FiniteMonoid(build(n, static_cast<Elem>(identity), std::move(flat), std::move(name)));
}

FiniteMonoid FiniteMonoid::renamed(std::string name) const {
  return FiniteMonoid(build(data_->size, data_->identity, data_->table, std::move(name)));
}

bool operator==(const FiniteMonoid& a, const FiniteMonoid& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->size == b.data_->size && a.data_->identity == b.data_->identity &&
         a.data_->table == b.data_->table;
}

namespace {

// Table of m relabelled by perm (old -> new).
std::vector<Elem> relabel_table(const FiniteMonoid& m, const std::vector<Elem>& perm) {
  const std::size_t n = m.size();
  std::vector<Elem> out(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      out[perm[x] * n + perm[y]] = perm[m.mul(static_cast<Elem>(x), static_cast<Elem>(y))];
    }
  }
  return out;
}

std::vector<std::vector<int>> to_rows(std::size_t n, const std::vector<Elem>& flat) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) rows[x][y] = flat[x * n + y];
  }
  return rows;
}

}  // namespace

FiniteMonoid canonical_monoid(const FiniteMonoid& m) {
  const std::size_t n = m.size();
  // perm maps old -> new; identity always goes to 0.
  std::vector<Elem> others = m.non_identity();
  std::vector<Elem> best;
  do {
    std::vector<Elem> perm(n);
    perm[m.identity()] = 0;
    for (std::size_t i = 0; i < others.size(); ++i) perm[others[i]] = static_cast<Elem>(i + 1);
    std::vector<Elem> t = relabel_table(m, perm);
    if (best.empty() || t < best) best = std::move(t);
  } while (std::next_permutation(others.begin(), others.end()));
  return FiniteMonoid::validate(to_rows(n, best), 0, m.name());
}

bool monoids_isomorphic(const FiniteMonoid& a, const FiniteMonoid& b) {
  if (a.size() != b.size()) return false;
  return canonical_monoid(a) == canonical_monoid(b);
}

std::vector<FiniteMonoid> enumerate_monoids(std::size_t n) {
  if (n == 0) return {};
  // Identity 0; fill the cells (x,y) with x,y >= 1 and keep associative tables.
  std::vector<Elem> table(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    table[x] = static_cast<Elem>(x);
    table[x * n] = static_cast<Elem>(x);
  }
  std::vector<std::size_t> cells;
  for (std::size_t x = 1; x < n; ++x) {
    for (std::size_t y = 1; y < n; ++y) cells.push_back(x * n + y);
  }
  std::set<std::vector<Elem>> seen;
  std::vector<FiniteMonoid> out;
  std::vector<std::vector<Elem>> found;
  auto associative = [&] {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          if (table[table[x * n + y] * n + z] != table[x * n + table[y * n + z]]) return false;
        }
      }
    }
    return true;
  };
  std::size_t k = cells.size();
  std::vector<std::size_t> digits(k, 0);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) table[cells[i]] = static_cast<Elem>(digits[i]);
    if (associative()) {
      FiniteMonoid m = canonical_monoid(FiniteMonoid::validate(to_rows(n, table), 0));
      std::vector<Elem> key(m.table().begin(), m.table().end());
      if (seen.insert(key).second) found.push_back(key);
    }
    std::size_t i = 0;
    while (i < k && ++digits[i] == n) digits[i++] = 0;
    if (i == k) break;
  }
  std::sort(found.begin(), found.end());
  for (const auto& t : found) out.push_back(FiniteMonoid::validate(to_rows(n, t), 0));
  return out;
}

}  // namespace radact
