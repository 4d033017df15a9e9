#include "oracle.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

namespace {

// Calls visit(cells) for every assignment of `count` cells with values < base.
template <typename Visit>
void for_each_assignment(std::size_t count, int base, Visit visit) {
  std::vector<int> cells(count, 0);
  while (true) {
    visit(cells);
    std::size_t i = 0;
    while (i < count && ++cells[i] == base) cells[i++] = 0;
    if (i == count) return;
  }
}

Labels normalise(const std::vector<int>& raw_labels) {
  Labels out(raw_labels.size());
  std::vector<int> seen;
  for (std::size_t i = 0; i < raw_labels.size(); ++i) {
    auto it = std::find(seen.begin(), seen.end(), raw_labels[i]);
    if (it == seen.end()) {
      seen.push_back(raw_labels[i]);
      out[i] = static_cast<int>(seen.size()) - 1;
    } else {
      out[i] = static_cast<int>(it - seen.begin());
    }
  }
  return out;
}

}  // namespace

RawMonoid raw(const radact::FiniteMonoid& m) {
  RawMonoid out;
  out.identity = m.identity();
  const int n = static_cast<int>(m.size());
  out.mul.assign(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) out.mul[x][y] = m.table()[x * n + y];
  }
  return out;
}

RawAct raw(const radact::FiniteAct& a) {
  RawAct out;
  out.monoid = raw(a.monoid());
  const int n = out.monoid.size();
  const int k = static_cast<int>(a.size());
  out.action.assign(n, std::vector<int>(k));
  for (int s = 0; s < n; ++s) {
    for (int x = 0; x < k; ++x) out.action[s][x] = a.table()[s * k + x];
  }
  return out;
}

bool is_monoid(const Table& mul, int identity) {
  const int n = static_cast<int>(mul.size());
  if (identity < 0 || identity >= n) return false;
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(mul[x].size()) != n) return false;
    if (mul[identity][x] != x || mul[x][identity] != x) return false;
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (mul[mul[x][y]][z] != mul[x][mul[y][z]]) return false;
      }
    }
  }
  return true;
}

bool is_act(const RawMonoid& m, const Table& action) {
  const int n = m.size();
  if (static_cast<int>(action.size()) != n || action[0].empty()) return false;
  const int k = static_cast<int>(action[0].size());
  for (int s = 0; s < n; ++s) {
    if (static_cast<int>(action[s].size()) != k) return false;
    for (int x = 0; x < k; ++x) {
      if (action[s][x] < 0 || action[s][x] >= k) return false;
    }
  }
  for (int x = 0; x < k; ++x) {
    if (action[m.identity][x] != x) return false;
  }
  for (int t = 0; t < n; ++t) {
    for (int s = 0; s < n; ++s) {
      for (int x = 0; x < k; ++x) {
        if (action[t][action[s][x]] != action[m.mul[t][s]][x]) return false;
      }
    }
  }
  return true;
}

std::size_t count_monoids(int n) {
  std::set<Table> classes;
  const std::size_t free_cells = static_cast<std::size_t>((n - 1) * (n - 1));
  for_each_assignment(free_cells, n, [&](const std::vector<int>& cells) {
    Table mul(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x) {
      mul[0][x] = x;
      mul[x][0] = x;
    }
    std::size_t c = 0;
    for (int x = 1; x < n; ++x) {
      for (int y = 1; y < n; ++y) mul[x][y] = cells[c++];
    }
    if (!is_monoid(mul, 0)) return;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Table best;
    do {
      Table t(n, std::vector<int>(n));
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) t[perm[x]][perm[y]] = perm[mul[x][y]];
      }
      if (best.empty() || t < best) best = t;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    classes.insert(best);
  });
  return classes.size();
}

std::size_t count_acts(const RawMonoid& m, int k) {
  const int n = m.size();
  std::set<Table> classes;
  const std::size_t free_cells = static_cast<std::size_t>((n - 1) * k);
  for_each_assignment(free_cells, k, [&](const std::vector<int>& cells) {
    Table action(n, std::vector<int>(k));
    std::size_t c = 0;
    for (int s = 0; s < n; ++s) {
      for (int x = 0; x < k; ++x) action[s][x] = s == m.identity ? x : cells[c++];
    }
    if (!is_act(m, action)) return;
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    Table best;
    do {
      Table t(n, std::vector<int>(k));
      for (int s = 0; s < n; ++s) {
        for (int x = 0; x < k; ++x) t[s][perm[x]] = perm[action[s][x]];
      }
      if (best.empty() || t < best) best = t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(best);
  });
  return classes.size();
}

std::vector<Labels> all_partitions(int n) {
  std::vector<Labels> out;
  Labels cur(n, 0);
  // Restricted growth strings: cur[i] ≤ 1 + max(cur[0..i-1]).
  auto rec = [&](auto&& self, int i, int max_label) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= max_label + 1; ++v) {
      cur[i] = v;
      self(self, i + 1, std::max(max_label, v));
    }
  };
  if (n == 0) return {Labels{}};
  cur[0] = 0;
  rec(rec, 1, 0);
  return out;
}

bool compatible(const RawAct& a, const Labels& p) {
  for (const std::vector<int>& row : a.action) {
    for (int x = 0; x < a.size(); ++x) {
      for (int y = 0; y < a.size(); ++y) {
        if (p[x] == p[y] && p[row[x]] != p[row[y]]) return false;
      }
    }
  }
  return true;
}

std::vector<Labels> congruences(const RawAct& a) {
  std::vector<Labels> out;
  for (const Labels& p : all_partitions(a.size())) {
    if (compatible(a, p)) out.push_back(p);
  }
  return out;
}

std::vector<int> zeros(const RawAct& a) {
  std::vector<int> out;
  for (int x = 0; x < a.size(); ++x) {
    bool fixed = true;
    for (const std::vector<int>& row : a.action) fixed = fixed && row[x] == x;
    if (fixed) out.push_back(x);
  }
  return out;
}

std::vector<Subset> subacts(const RawAct& a) {
  std::vector<Subset> out;
  const int k = a.size();
  for (unsigned mask = 1; mask < (1U << k); ++mask) {
    Subset s(k);
    for (int x = 0; x < k; ++x) s[x] = (mask >> x) & 1U;
    bool closed = true;
    for (const std::vector<int>& row : a.action) {
      for (int x = 0; x < k; ++x) closed = closed && (!s[x] || s[row[x]]);
    }
    if (closed) out.push_back(s);
  }
  return out;
}

Subset orbit(const RawAct& a, int x) {
  Subset s(a.size(), false);
  for (const std::vector<int>& row : a.action) s[row[x]] = true;
  return s;
}

std::vector<std::vector<int>> homs(const RawAct& a, const RawAct& b) {
  std::vector<std::vector<int>> out;
  for_each_assignment(static_cast<std::size_t>(a.size()), b.size(), [&](const std::vector<int>& f) {
    for (int s = 0; s < a.monoid.size(); ++s) {
      for (int x = 0; x < a.size(); ++x) {
        if (f[a.action[s][x]] != b.action[s][f[x]]) return;
      }
    }
    out.push_back(f);
  });
  return out;
}

bool isomorphic(const RawAct& a, const RawAct& b) {
  if (a.size() != b.size() || a.monoid.mul != b.monoid.mul) return false;
  for (const std::vector<int>& f : homs(a, b)) {
    std::vector<int> image(f);
    std::sort(image.begin(), image.end());
    if (std::unique(image.begin(), image.end()) == image.end()) return true;
  }
  return false;
}

RawQuotient rees_quotient(const RawAct& a, const Subset& b) {
  std::vector<int> raw_labels(a.size());
  int first_b = -1;
  for (int x = 0; x < a.size(); ++x) {
    if (b[x] && first_b < 0) first_b = x;
    raw_labels[x] = b[x] ? first_b : x;
  }
  RawQuotient q;
  q.projection = normalise(raw_labels);
  const int m = *std::max_element(q.projection.begin(), q.projection.end()) + 1;
  q.act.monoid = a.monoid;
  q.act.action.assign(a.monoid.size(), std::vector<int>(m));
  for (int s = 0; s < a.monoid.size(); ++s) {
    for (int x = 0; x < a.size(); ++x) q.act.action[s][q.projection[x]] = q.projection[a.action[s][x]];
  }
  return q;
}

Labels generated(const RawAct& a, const std::vector<std::pair<int, int>>& pairs) {
  const int k = a.size();
  std::vector<std::vector<bool>> rel(k, std::vector<bool>(k, false));
  for (int x = 0; x < k; ++x) rel[x][x] = true;
  for (auto [x, y] : pairs) rel[x][y] = rel[y][x] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < k; ++x) {
      for (int y = 0; y < k; ++y) {
        if (!rel[x][y]) continue;
        for (const std::vector<int>& row : a.action) {
          if (!rel[row[x]][row[y]]) rel[row[x]][row[y]] = rel[row[y]][row[x]] = changed = true;
        }
        for (int z = 0; z < k; ++z) {
          if (rel[y][z] && !rel[x][z]) rel[x][z] = rel[z][x] = changed = true;
        }
      }
    }
  }
  std::vector<int> raw_labels(k);
  for (int x = 0; x < k; ++x) {
    int least = x;
    for (int y = 0; y < k; ++y) {
      if (rel[x][y]) least = std::min(least, y);
    }
    raw_labels[x] = least;
  }
  return normalise(raw_labels);
}

Labels rg(const RawAct& a) {
  std::vector<std::pair<int, int>> pairs;
  for (int theta : zeros(a)) {
    for (int x = 0; x < a.size(); ++x) {
      const Subset cyc = orbit(a, x);
      bool annihilated = true;
      for (int y = 0; y < a.size(); ++y) {
        if (!cyc[y]) continue;
        bool reaches = false;
        for (const std::vector<int>& row : a.action) reaches = reaches || row[y] == theta;
        annihilated = annihilated && reaches;
      }
      if (!annihilated) continue;
      for (int y = 0; y < a.size(); ++y) {
        if (cyc[y]) pairs.emplace_back(y, theta);
      }
    }
  }
  return generated(a, pairs);
}

Labels labels_of(const radact::Congruence& c) {
  std::vector<int> raw_labels(c.labels().begin(), c.labels().end());
  return normalise(raw_labels);
}

radact::ElemSet mask_of(const Subset& s) {
  radact::ElemSet m = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i]) m |= radact::ElemSet{1} << i;
  }
  return m;
}

Subset subset_of(radact::ElemSet mask, int n) {
  Subset s(n);
  for (int i = 0; i < n; ++i) s[i] = (mask >> i) & 1U;
  return s;
}

}  // namespace oracle
