#include "sdp/assoc.hpp"

#include <algorithm>
#include <limits>

#include "sdp/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sdp {

namespace {

std::vector<Tuple> enumerate_set(const TotalSystem& s, const TupleSet& set) {
  std::vector<Tuple> out;
  switch (set.kind) {
    case TupleSet::Kind::factor: {
      for (Elem h = 0; h < s.factor(set.t).order(); ++h)
        out.push_back(elementary_tuple(s, set.t, h));
      break;
    }
    case TupleSet::Kind::band: {
      long long n = 1;
      for (int i = 1; i <= set.t; ++i) n *= s.factor(i).order();
      for (long long idx = 0; idx < n; ++idx) {
        long long rest = idx;
        Tuple t = unit_tuple(s);
        for (int i = set.t; i >= 1; --i) {
          t[static_cast<size_t>(i - 1)] = static_cast<Elem>(rest % s.factor(i).order());
          rest /= s.factor(i).order();
        }
        out.push_back(std::move(t));
      }
      break;
    }
    case TupleSet::Kind::all: {
      const long long n = s.product_order();
      for (long long idx = 0; idx < n; ++idx) out.push_back(tuple_of_index(s, idx));
      break;
    }
  }
  return out;
}

// Associativity sweep over explicit tuple lists, returning the first failing
// triple in list order.  Used by the elementary checks where the domains are
// small; the |G|^3 sweeps below go through the cached table instead.
CheckResult sweep_triples(const TotalSystem& s, const std::vector<Tuple>& us,
                          const std::vector<Tuple>& vs, const std::vector<Tuple>& ws) {
  for (const Tuple& a : us)
    for (const Tuple& b : vs)
      for (const Tuple& c : ws) {
        Tuple lhs = mu(s, a, mu(s, b, c));
        Tuple rhs = mu(s, mu(s, a, b), c);
        if (lhs != rhs) return {false, AssocWitness{a, b, c, lhs, rhs}};
      }
  return {true, std::nullopt};
}

}  // namespace

CheckResult check_elementary(const TotalSystem& s, int k, int j, int i) {
  const int r = s.rank();
  if (k < 1 || k > r || j < 1 || j > r || i < 1 || i > r)
    throw Error("IndexError", "factor index out of range", {{"k", k}, {"j", j}, {"i", i}});
  return sweep_triples(s, enumerate_set(s, TupleSet::factor(k)),
                       enumerate_set(s, TupleSet::factor(j)),
                       enumerate_set(s, TupleSet::factor(i)));
}

std::vector<std::pair<AssocCondition, CheckResult>> check_all_elementary(const TotalSystem& s) {
  std::vector<std::pair<AssocCondition, CheckResult>> out;
  for (int k = 1; k <= s.rank(); ++k)
    for (int j = 1; j <= k; ++j)
      for (int i = 1; i <= j; ++i)
        out.push_back({AssocCondition{k, j, i, std::nullopt}, check_elementary(s, k, j, i)});
  return out;
}

bool all_hold(const std::vector<std::pair<AssocCondition, CheckResult>>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const auto& p) { return p.second.holds; });
}

namespace {

CheckResult brute_force_table(const TotalSystem& s, const MuTable& mt, bool parallel) {
  const long long n = mt.n;
  const long long none = std::numeric_limits<long long>::max();
  long long best = none;
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) reduction(min : best)
#endif
    for (long long x = 0; x < n; ++x) {
      long long local = none;
      for (long long y = 0; y < n && local == none; ++y) {
        const int xy = mt.at(x, y);
        for (long long z = 0; z < n; ++z) {
          if (mt.at(xy, z) != mt.at(x, mt.at(y, z))) {
            local = (x * n + y) * n + z;
            break;
          }
        }
      }
      if (local < best) best = local;
    }
  } else {
    for (long long x = 0; x < n && best == none; ++x)
      for (long long y = 0; y < n && best == none; ++y) {
        const int xy = mt.at(x, y);
        for (long long z = 0; z < n; ++z)
          if (mt.at(xy, z) != mt.at(x, mt.at(y, z))) {
            best = (x * n + y) * n + z;
            break;
          }
      }
  }
  if (best == none) return {true, std::nullopt};
  const long long z = best % n, y = (best / n) % n, x = best / (n * n);
  Tuple a = tuple_of_index(s, x), b = tuple_of_index(s, y), c = tuple_of_index(s, z);
  return {false, AssocWitness{a, b, c, mu(s, a, mu(s, b, c)), mu(s, mu(s, a, b), c)}};
}

}  // namespace

CheckResult brute_force_associative(const TotalSystem& s, const CheckOptions& opt) {
  MuTable mt = build_mu_table(s, opt.brute_cap, opt.parallel);
  return brute_force_table(s, mt, opt.parallel);
}

CheckResult brute_force_on_rank(const TotalSystem& s, int m, const CheckOptions& opt) {
  long long n = 1;
  for (int i = 1; i <= m; ++i) n *= s.factor(i).order();
  if (n > opt.brute_cap)
    throw Error("SizeCapExceeded", "rank band exceeds the brute-force cap",
                {{"order", n}, {"cap", opt.brute_cap}});
  auto band = enumerate_set(s, TupleSet::band(m));
  return sweep_triples(s, band, band, band);
}

CheckResult check_phi_multiplicative(const TotalSystem& s, int k, const CheckOptions& opt) {
  if (!(1 < k && k <= s.rank()))
    throw Error("IndexError", "check_phi_multiplicative needs 1 < k <= r", {{"k", k}});
  long long n = 1;
  for (int i = 1; i < k; ++i) n *= s.factor(i).order();
  if (n * n > opt.pair_cap * opt.pair_cap)
    throw Error("SizeCapExceeded", "R_{k-1} x R_{k-1} exceeds the pairwise cap",
                {{"band_order", n}, {"cap", opt.pair_cap}});
  auto band = enumerate_set(s, TupleSet::band(k - 1));
  for (Elem ak = 0; ak < s.factor(k).order(); ++ak)
    for (const Tuple& v : band)
      for (const Tuple& w : band) {
        Tuple lhs = phi_ext(s, k, ak, mu(s, v, w));
        Tuple rhs = mu(s, phi_ext(s, k, ak, v), phi_ext(s, k, ak, w));
        if (lhs != rhs)
          return {false, AssocWitness{elementary_tuple(s, k, ak), v, w, lhs, rhs}};
      }
  return {true, std::nullopt};
}

CheckResult check_phi_composition(const TotalSystem& s, int k, const CheckOptions& opt) {
  if (!(1 < k && k <= s.rank()))
    throw Error("IndexError", "check_phi_composition needs 1 < k <= r", {{"k", k}});
  long long n = 1;
  for (int i = 1; i < k; ++i) n *= s.factor(i).order();
  if (n > opt.pair_cap)
    throw Error("SizeCapExceeded", "R_{k-1} exceeds the pairwise cap",
                {{"band_order", n}, {"cap", opt.pair_cap}});
  auto band = enumerate_set(s, TupleSet::band(k - 1));
  for (Elem ak = 0; ak < s.factor(k).order(); ++ak)
    for (Elem bk = 0; bk < s.factor(k).order(); ++bk) {
      const Elem ab = s.factor(k).mul(ak, bk);
      for (const Tuple& w : band) {
        Tuple lhs = phi_ext(s, k, ab, w);
        Tuple rhs = phi_ext(s, k, ak, phi_ext(s, k, bk, w));
        if (lhs != rhs)
          return {false,
                  AssocWitness{elementary_tuple(s, k, ak), elementary_tuple(s, k, bk), w, lhs, rhs}};
      }
    }
  return {true, std::nullopt};
}

CheckResult check_component(const TotalSystem& s, int k, int j, int i, int l) {
  const int r = s.rank();
  if (!(1 <= i && i <= j && j <= k && k <= r) || l < 1 || l > r)
    throw Error("IndexError", "check_component needs r >= k >= j >= i >= 1 and 1 <= l <= r",
                {{"k", k}, {"j", j}, {"i", i}, {"l", l}});
  for (Elem a = 0; a < s.factor(k).order(); ++a)
    for (Elem b = 0; b < s.factor(j).order(); ++b)
      for (Elem c = 0; c < s.factor(i).order(); ++c) {
        Tuple ta = elementary_tuple(s, k, a);
        Tuple tb = elementary_tuple(s, j, b);
        Tuple tc = elementary_tuple(s, i, c);
        Tuple lhs = mu(s, ta, mu(s, tb, tc));
        Tuple rhs = mu(s, mu(s, ta, tb), tc);
        if (lhs[static_cast<size_t>(l - 1)] != rhs[static_cast<size_t>(l - 1)])
          return {false, AssocWitness{ta, tb, tc, lhs, rhs}};
      }
  return {true, std::nullopt};
}

CheckResult check_triples(const TotalSystem& s, TupleSet u, TupleSet v, TupleSet w,
                          const CheckOptions& opt) {
  auto us = enumerate_set(s, u), vs = enumerate_set(s, v), ws = enumerate_set(s, w);
  const long long total = static_cast<long long>(us.size()) * static_cast<long long>(vs.size()) *
                          static_cast<long long>(ws.size());
  if (total > opt.brute_cap * opt.brute_cap * opt.brute_cap)
    throw Error("SizeCapExceeded", "triple domain exceeds the brute-force cap",
                {{"triples", total}});
  return sweep_triples(s, us, vs, ws);
}

}  // namespace sdp
