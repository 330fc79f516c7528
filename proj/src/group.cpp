#include "sdp/group.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <optional>

#include "sdp/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sdp {

namespace {

void check_shape(const std::vector<std::vector<Elem>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error("EmptyTable", "multiplication table is empty");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw Error("NotSquare", "multiplication table is not square",
                  {{"order", n}, {"row_length", row.size()}});
    for (Elem x : row)
      if (x < 0 || x >= n)
        throw Error("EntryOutOfRange", "table entry out of range", {{"entry", x}, {"order", n}});
  }
}

std::vector<Elem> flatten(const std::vector<std::vector<Elem>>& table) {
  std::vector<Elem> flat;
  flat.reserve(table.size() * table.size());
  for (const auto& row : table) flat.insert(flat.end(), row.begin(), row.end());
  return flat;
}

Elem find_identity(const std::vector<Elem>& tab, int n) {
  for (Elem e = 0; e < n; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x)
      ok = tab[static_cast<size_t>(e) * n + x] == x && tab[static_cast<size_t>(x) * n + e] == x;
    if (ok) return e;
  }
  throw Error("NoIdentity", "table has no two-sided identity");
}

// Exhaustive associativity sweep.  Returns the lexicographically first
// violating triple, or nullopt.  The OpenMP version scans the whole cube and
// reduces to the smallest encoded triple so that its answer is identical to
// the serial one.
std::optional<std::array<Elem, 3>> first_nonassoc_serial(const std::vector<Elem>& tab, int n) {
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        Elem xy = tab[static_cast<size_t>(x) * n + y];
        Elem yz = tab[static_cast<size_t>(y) * n + z];
        if (tab[static_cast<size_t>(xy) * n + z] != tab[static_cast<size_t>(x) * n + yz])
          return std::array<Elem, 3>{x, y, z};
      }
  return std::nullopt;
}

std::optional<std::array<Elem, 3>> first_nonassoc_parallel(const std::vector<Elem>& tab, int n) {
  const long long none = std::numeric_limits<long long>::max();
  long long best = none;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(min : best)
#endif
  for (Elem x = 0; x < n; ++x) {
    long long local = none;
    for (Elem y = 0; y < n && local == none; ++y)
      for (Elem z = 0; z < n && local == none; ++z) {
        Elem xy = tab[static_cast<size_t>(x) * n + y];
        Elem yz = tab[static_cast<size_t>(y) * n + z];
        if (tab[static_cast<size_t>(xy) * n + z] != tab[static_cast<size_t>(x) * n + yz])
          local = (static_cast<long long>(x) * n + y) * n + z;
      }
    if (local < best) best = local;
  }
  if (best == none) return std::nullopt;
  Elem z = static_cast<Elem>(best % n);
  Elem y = static_cast<Elem>((best / n) % n);
  Elem x = static_cast<Elem>(best / (static_cast<long long>(n) * n));
  return std::array<Elem, 3>{x, y, z};
}

}  // namespace

FiniteGroup FiniteGroup::validate(const std::vector<std::vector<Elem>>& table) {
  check_shape(table);
  const int n = static_cast<int>(table.size());
  auto flat = flatten(table);

  FiniteGroup g;
  g.order_ = n;
  g.identity_ = find_identity(flat, n);

  g.inv_.assign(n, -1);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (flat[static_cast<size_t>(x) * n + y] == g.identity_ &&
          flat[static_cast<size_t>(y) * n + x] == g.identity_) {
        g.inv_[x] = y;
        break;
      }
    }
    if (g.inv_[x] < 0)
      throw Error("NoInverse", "element has no two-sided inverse", {{"element", x}});
  }

  auto bad = (n >= 64) ? first_nonassoc_parallel(flat, n) : first_nonassoc_serial(flat, n);
  if (bad)
    throw Error("NotAssociative", "multiplication table is not associative",
                {{"x", (*bad)[0]}, {"y", (*bad)[1]}, {"z", (*bad)[2]}});

  g.table_ = std::move(flat);
  return g;
}

Monoid validate_monoid(const std::vector<std::vector<Elem>>& table) {
  check_shape(table);
  const int n = static_cast<int>(table.size());
  auto flat = flatten(table);
  Monoid m;
  m.order = n;
  m.identity = find_identity(flat, n);
  auto bad = first_nonassoc_serial(flat, n);
  if (bad)
    throw Error("NotAssociative", "multiplication table is not associative",
                {{"x", (*bad)[0]}, {"y", (*bad)[1]}, {"z", (*bad)[2]}});
  std::vector<Elem> inv(n, -1);
  bool all = true;
  for (Elem x = 0; x < n && all; ++x) {
    for (Elem y = 0; y < n; ++y)
      if (flat[static_cast<size_t>(x) * n + y] == m.identity &&
          flat[static_cast<size_t>(y) * n + x] == m.identity) {
        inv[x] = y;
        break;
      }
    all = inv[x] >= 0;
  }
  m.table = std::move(flat);
  if (all) m.inverse = std::move(inv);
  return m;
}

bool FiniteGroup::is_abelian() const {
  for (Elem x = 0; x < order_; ++x)
    for (Elem y = x + 1; y < order_; ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

std::vector<Elem> FiniteGroup::elements() const {
  std::vector<Elem> v(order_);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::vector<std::vector<Elem>> FiniteGroup::rows() const {
  std::vector<std::vector<Elem>> out(order_);
  for (Elem x = 0; x < order_; ++x)
    out[x].assign(table_.begin() + static_cast<size_t>(x) * order_,
                  table_.begin() + static_cast<size_t>(x + 1) * order_);
  return out;
}

Monoid FiniteGroup::as_monoid() const {
  Monoid m;
  m.order = order_;
  m.table = table_;
  m.identity = identity_;
  m.inverse = inv_;
  return m;
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<Elem> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Subgroup h;
  h.parent = &g;
  h.mask.assign(g.order(), 0);
  for (Elem x : members) {
    if (x < 0 || x >= g.order())
      throw Error("EntryOutOfRange", "subgroup member out of range", {{"element", x}});
    h.mask[static_cast<size_t>(x)] = 1;
  }
  h.members = std::move(members);
  if (!h.contains(g.identity()))
    throw Error("NotASubgroup", "member set does not contain the identity");
  for (Elem x : h.members) {
    if (!h.contains(g.inv(x)))
      throw Error("NotASubgroup", "member set not closed under inverses", {{"element", x}});
    for (Elem y : h.members)
      if (!h.contains(g.mul(x, y)))
        throw Error("NotASubgroup", "member set not closed under multiplication",
                    {{"x", x}, {"y", y}});
  }
  return h;
}

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<Elem>& gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Elem> queue;
  auto push = [&](Elem x) {
    if (!seen[static_cast<size_t>(x)]) {
      seen[static_cast<size_t>(x)] = 1;
      queue.push_back(x);
    }
  };
  push(g.identity());
  for (Elem x : gens) {
    if (x < 0 || x >= g.order())
      throw Error("EntryOutOfRange", "generator out of range", {{"element", x}});
    push(x);
  }
  // BFS closure under multiplication; inverses come for free in a finite group
  for (size_t head = 0; head < queue.size(); ++head) {
    const size_t known = queue.size();
    for (size_t k = 0; k < known; ++k) {
      push(g.mul(queue[head], queue[k]));
      push(g.mul(queue[k], queue[head]));
    }
  }
  std::vector<Elem> members;
  for (Elem x = 0; x < g.order(); ++x)
    if (seen[static_cast<size_t>(x)]) members.push_back(x);
  Subgroup h;
  h.parent = &g;
  h.members = std::move(members);
  h.mask = std::move(seen);
  return h;
}

std::vector<Elem> complex_product(const FiniteGroup& g,
                                  const std::vector<std::vector<Elem>>& subsets) {
  std::vector<char> cur(g.order(), 0);
  cur[static_cast<size_t>(g.identity())] = 1;
  for (const auto& s : subsets) {
    std::vector<char> next(g.order(), 0);
    for (Elem x = 0; x < g.order(); ++x) {
      if (!cur[static_cast<size_t>(x)]) continue;
      for (Elem y : s) {
        if (y < 0 || y >= g.order())
          throw Error("EntryOutOfRange", "subset element out of range", {{"element", y}});
        next[static_cast<size_t>(g.mul(x, y))] = 1;
      }
    }
    cur = std::move(next);
  }
  std::vector<Elem> out;
  for (Elem x = 0; x < g.order(); ++x)
    if (cur[static_cast<size_t>(x)]) out.push_back(x);
  return out;
}

std::vector<Elem> conjugate_set(const FiniteGroup& g, const std::vector<Elem>& ks,
                                const std::vector<Elem>& hs) {
  std::vector<char> seen(g.order(), 0);
  for (Elem k : ks)
    for (Elem h : hs) seen[static_cast<size_t>(g.conj(k, h))] = 1;
  std::vector<Elem> out;
  for (Elem x = 0; x < g.order(); ++x)
    if (seen[static_cast<size_t>(x)]) out.push_back(x);
  return out;
}

Subgroup commutator_subgroup(const FiniteGroup& g, const std::vector<Elem>& ks,
                             const std::vector<Elem>& hs) {
  std::vector<Elem> gens;
  for (Elem k : ks)
    for (Elem h : hs) gens.push_back(g.comm(k, h));
  return generated_subgroup(g, gens);
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem m : h.members)
      if (!h.contains(g.conj(x, m))) return false;
  return true;
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw Error("EntryOutOfRange", "cyclic group order must be positive");
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FiniteGroup::validate(t);
}

FiniteGroup klein_group() {
  // xor table on two bits
  std::vector<std::vector<Elem>> t(4, std::vector<Elem>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[i][j] = i ^ j;
  return FiniteGroup::validate(t);
}

FiniteGroup dihedral_group(int n) {
  if (n < 1) throw Error("EntryOutOfRange", "dihedral parameter must be positive");
  // elements 0..n-1 rotations, n..2n-1 reflections
  auto compose = [n](int x, int y) {
    bool rx = x >= n, ry = y >= n;
    int ax = x % n, ay = y % n;
    if (!rx && !ry) return (ax + ay) % n;
    if (!rx && ry) return (ay + ax) % n + n;
    if (rx && !ry) return (ax - ay + n) % n + n;
    return (ax - ay + n) % n;
  };
  std::vector<std::vector<Elem>> t(2 * n, std::vector<Elem>(2 * n));
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) t[i][j] = compose(i, j);
  return FiniteGroup::validate(t);
}

std::vector<int> perm_unrank(int n, int idx) {
  std::vector<int> pool(n), p(n);
  std::iota(pool.begin(), pool.end(), 0);
  int fact = 1;
  for (int i = 2; i < n; ++i) fact *= i;  // (n-1)!
  for (int i = 0; i < n; ++i) {
    int pick = (n - 1 - i > 0) ? idx / fact : 0;
    idx %= (fact > 0 ? fact : 1);
    p[i] = pool[static_cast<size_t>(pick)];
    pool.erase(pool.begin() + pick);
    if (n - 1 - i > 1) fact /= (n - 1 - i);
  }
  return p;
}

int perm_rank(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  int fact = 1;
  for (int i = 2; i < n; ++i) fact *= i;
  int idx = 0;
  for (int i = 0; i < n; ++i) {
    auto it = std::find(pool.begin(), pool.end(), p[static_cast<size_t>(i)]);
    idx += static_cast<int>(it - pool.begin()) * fact;
    pool.erase(it);
    if (n - 1 - i > 1) fact /= (n - 1 - i);
  }
  return idx;
}

FiniteGroup symmetric_group(int n) {
  // n = 7 would already mean a 5040^3 validation sweep
  if (n < 1 || n > 6) throw Error("EntryOutOfRange", "symmetric_group supports 1 <= n <= 6");
  int order = 1;
  for (int i = 2; i <= n; ++i) order *= i;
  std::vector<std::vector<int>> perms(order);
  for (int i = 0; i < order; ++i) perms[static_cast<size_t>(i)] = perm_unrank(n, i);
  std::vector<std::vector<Elem>> t(order, std::vector<Elem>(order));
  std::vector<int> comp(n);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      // (p*q)(x) = p(q(x))
      for (int x = 0; x < n; ++x) comp[x] = perms[static_cast<size_t>(i)][static_cast<size_t>(perms[static_cast<size_t>(j)][static_cast<size_t>(x)])];
      t[static_cast<size_t>(i)][static_cast<size_t>(j)] = perm_rank(comp);
    }
  return FiniteGroup::validate(t);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int n = a.order() * b.order();
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  auto enc = [&](Elem x, Elem y) { return x * b.order() + y; };
  for (Elem x1 = 0; x1 < a.order(); ++x1)
    for (Elem y1 = 0; y1 < b.order(); ++y1)
      for (Elem x2 = 0; x2 < a.order(); ++x2)
        for (Elem y2 = 0; y2 < b.order(); ++y2)
          t[static_cast<size_t>(enc(x1, y1))][static_cast<size_t>(enc(x2, y2))] =
              enc(a.mul(x1, x2), b.mul(y1, y2));
  return FiniteGroup::validate(t);
}

}  // namespace sdp
