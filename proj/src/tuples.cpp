#include "sdp/tuples.hpp"

#include <algorithm>

#include "sdp/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sdp {

Tuple unit_tuple(const TotalSystem& s) {
  Tuple t(static_cast<size_t>(s.rank()));
  for (int i = 1; i <= s.rank(); ++i) t[static_cast<size_t>(i - 1)] = s.factor(i).identity();
  return t;
}

Tuple elementary_tuple(const TotalSystem& s, int i, Elem h) {
  Tuple t = unit_tuple(s);
  t[static_cast<size_t>(i - 1)] = h;
  return t;
}

bool is_unit(const TotalSystem& s, const Tuple& t) {
  for (int i = 1; i <= s.rank(); ++i)
    if (t[static_cast<size_t>(i - 1)] != s.factor(i).identity()) return false;
  return true;
}

int rank_of(const TotalSystem& s, const Tuple& t) {
  for (int i = s.rank(); i >= 1; --i)
    if (t[static_cast<size_t>(i - 1)] != s.factor(i).identity()) return i;
  return 0;
}

int corank_of(const TotalSystem& s, const Tuple& t) {
  for (int i = 1; i <= s.rank(); ++i)
    if (t[static_cast<size_t>(i - 1)] != s.factor(i).identity()) return i;
  return s.rank() + 1;
}

bool noninterfering(const TotalSystem& s, const Tuple& u, const Tuple& v) {
  return rank_of(s, u) <= corank_of(s, v);
}

Tuple mu_a(const TotalSystem& s, const Tuple& u, const Tuple& v) {
  if (!noninterfering(s, u, v))
    throw Error("Interfering", "mu_A needs rank(u) <= corank(v)",
                {{"u", u}, {"v", v}, {"rank_u", rank_of(s, u)}, {"corank_v", corank_of(s, v)}});
  Tuple out = u;
  for (int i = 1; i <= s.rank(); ++i) {
    Elem x = out[static_cast<size_t>(i - 1)];
    Elem y = v[static_cast<size_t>(i - 1)];
    out[static_cast<size_t>(i - 1)] = s.factor(i).mul(x, y);
  }
  return out;
}

Tuple mu_a_family(const TotalSystem& s, const std::vector<Tuple>& ts) {
  if (ts.empty()) throw Error("EmptyWord", "mu_A over an empty family");
  Tuple acc = ts.front();
  for (size_t n = 1; n < ts.size(); ++n) acc = mu_a(s, acc, ts[n]);
  return acc;
}

Tuple phi_conj(const TotalSystem& s, int k, Elem ak, int j, Elem hj) {
  if (!(1 <= j && j < k && k <= s.rank()))
    throw Error("IndexError", "conjugation operator needs r >= k > j >= 1", {{"k", k}, {"j", j}});
  Tuple t = unit_tuple(s);
  for (int i = 1; i < j; ++i) t[static_cast<size_t>(i - 1)] = s.br(k, j, i, ak, hj);
  t[static_cast<size_t>(j - 1)] = s.act(k, j, ak, hj);
  return t;
}

Tuple commutator_bracket(const TotalSystem& s, int k, Elem ak, int j, Elem hj) {
  Tuple t = phi_conj(s, k, ak, j, hj);
  const FiniteGroup& hjg = s.factor(j);
  t[static_cast<size_t>(j - 1)] = hjg.mul(t[static_cast<size_t>(j - 1)], hjg.inv(hj));
  return t;
}

namespace {

// mu_m recursion of the inductive construction: split off the top letters,
// push the left one through the right-hand tail with the conjugation
// operators, recurse one stage down.  Letters that are group units are
// skipped; on a normalized system this is exactly the defining formula.
Tuple mu_rec(const TotalSystem& s, const Tuple& u, const Tuple& v, int m) {
  if (m <= 1) {
    Tuple out = unit_tuple(s);
    if (s.rank() >= 1)
      out[0] = s.factor(1).mul(u[0], v[0]);
    return out;
  }
  const Elem a = u[static_cast<size_t>(m - 1)];
  const Elem b = v[static_cast<size_t>(m - 1)];

  Tuple inner;
  bool have_inner = false;
  for (int t = 1; t < m; ++t) {
    const Elem letter = v[static_cast<size_t>(t - 1)];
    if (letter == s.factor(t).identity()) continue;
    Tuple ft = (a == s.factor(m).identity()) ? elementary_tuple(s, t, letter)
                                             : phi_conj(s, m, a, t, letter);
    inner = have_inner ? mu_rec(s, inner, ft, m - 1) : std::move(ft);
    have_inner = true;
  }

  Tuple res;
  if (!have_inner) {
    res = u;
    res[static_cast<size_t>(m - 1)] = s.factor(m).identity();
  } else {
    Tuple u2 = u;
    u2[static_cast<size_t>(m - 1)] = s.factor(m).identity();
    res = mu_rec(s, u2, inner, m - 1);
  }
  res[static_cast<size_t>(m - 1)] = s.factor(m).mul(a, b);
  return res;
}

}  // namespace

Tuple phi_ext(const TotalSystem& s, int k, Elem ak, const Tuple& v) {
  if (!(1 < k && k <= s.rank()))
    throw Error("IndexError", "extended operator needs 1 < k <= r", {{"k", k}});
  if (rank_of(s, v) >= k)
    throw Error("RankError", "phi_ext needs rank(v) < k", {{"k", k}, {"rank_v", rank_of(s, v)}});
  Tuple acc;
  bool have = false;
  for (int t = 1; t < k; ++t) {
    const Elem letter = v[static_cast<size_t>(t - 1)];
    if (letter == s.factor(t).identity()) continue;
    Tuple ft = (ak == s.factor(k).identity()) ? elementary_tuple(s, t, letter)
                                              : phi_conj(s, k, ak, t, letter);
    acc = have ? mu_rec(s, acc, ft, k - 1) : std::move(ft);
    have = true;
  }
  if (!have) return unit_tuple(s);
  return acc;
}

Tuple mu(const TotalSystem& s, const Tuple& u, const Tuple& v) {
  return mu_rec(s, u, v, s.rank());
}

Tuple mu_rank(const TotalSystem& s, const Tuple& u, const Tuple& v, int m) {
  if (m < 1 || m > s.rank()) throw Error("IndexError", "mu_rank stage out of range", {{"m", m}});
  if (rank_of(s, u) > m || rank_of(s, v) > m)
    throw Error("RankError", "mu_rank arguments must lie in R_m",
                {{"m", m}, {"rank_u", rank_of(s, u)}, {"rank_v", rank_of(s, v)}});
  return mu_rec(s, u, v, m);
}

Tuple mu_word(const TotalSystem& s, const std::vector<Tuple>& ts) {
  if (ts.empty()) throw Error("EmptyWord", "mu over an empty word");
  Tuple acc = ts.front();
  for (size_t n = 1; n < ts.size(); ++n) acc = mu(s, acc, ts[n]);
  return acc;
}

long long tuple_index(const TotalSystem& s, const Tuple& t) {
  long long idx = 0;
  for (int i = 1; i <= s.rank(); ++i) idx = idx * s.factor(i).order() + t[static_cast<size_t>(i - 1)];
  return idx;
}

Tuple tuple_of_index(const TotalSystem& s, long long idx) {
  Tuple t(static_cast<size_t>(s.rank()));
  for (int i = s.rank(); i >= 1; --i) {
    t[static_cast<size_t>(i - 1)] = static_cast<Elem>(idx % s.factor(i).order());
    idx /= s.factor(i).order();
  }
  return t;
}

MuTable build_mu_table(const TotalSystem& s, long long cap, bool parallel) {
  const long long n = s.product_order();
  if (n > cap)
    throw Error("SizeCapExceeded", "product order exceeds the table cap",
                {{"order", n}, {"cap", cap}});
  MuTable mt;
  mt.n = n;
  mt.tab.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
#endif
  for (long long x = 0; x < n; ++x) {
    Tuple u = tuple_of_index(s, x);
    for (long long y = 0; y < n; ++y) {
      Tuple v = tuple_of_index(s, y);
      mt.tab[static_cast<size_t>(x) * n + y] = static_cast<int>(tuple_index(s, mu(s, u, v)));
    }
  }
  return mt;
}

}  // namespace sdp
