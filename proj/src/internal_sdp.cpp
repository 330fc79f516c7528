#include "sdp/internal_sdp.hpp"

#include <algorithm>
#include <map>

#include "sdp/assoc.hpp"
#include "sdp/error.hpp"

namespace sdp {

namespace {

std::vector<std::vector<Elem>> partial_products(const SdpCandidate& cand) {
  std::vector<std::vector<Elem>> out;
  std::vector<std::vector<Elem>> sets;
  for (const Subgroup& h : cand.factors) {
    sets.push_back(h.members);
    out.push_back(complex_product(*cand.g, sets));
  }
  return out;
}

// Re-index a subgroup as a standalone group.
FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
  std::map<Elem, int> pos;
  for (size_t n = 0; n < h.members.size(); ++n) pos[h.members[n]] = static_cast<int>(n);
  std::vector<std::vector<Elem>> tab(h.members.size(), std::vector<Elem>(h.members.size()));
  for (size_t x = 0; x < h.members.size(); ++x)
    for (size_t y = 0; y < h.members.size(); ++y)
      tab[x][y] = pos.at(g.mul(h.members[x], h.members[y]));
  return FiniteGroup::validate(tab);
}

}  // namespace

SdpReport check_internal_sdp(const SdpCandidate& cand) {
  const FiniteGroup& g = *cand.g;
  const int r = static_cast<int>(cand.factors.size());
  SdpReport rep;

  auto products = partial_products(cand);
  for (int i = 0; i < r; ++i) {
    // condition 1: H_1...H_i normal in G (the set must first be a subgroup)
    Subgroup p;
    try {
      p = make_subgroup(g, products[static_cast<size_t>(i)]);
    } catch (const Error&) {
      rep.failed = "normality";
      rep.failed_index = i + 1;
      return rep;
    }
    if (!is_normal(g, p)) {
      rep.failed = "normality";
      rep.failed_index = i + 1;
      for (Elem x = 0; x < g.order() && !rep.witness; ++x)
        for (Elem m : p.members)
          if (!p.contains(g.conj(x, m))) {
            rep.witness = g.conj(x, m);
            break;
          }
      return rep;
    }
  }

  // 2a: the full product set covers G
  if (static_cast<int>(products.back().size()) != g.order()) {
    rep.failed = "surjectivity";
    return rep;
  }
  // 2b: each partial product meets the next factor trivially
  for (int i = 0; i + 1 < r; ++i) {
    const auto& p = products[static_cast<size_t>(i)];
    for (Elem x : cand.factors[static_cast<size_t>(i + 1)].members)
      if (x != g.identity() && std::binary_search(p.begin(), p.end(), x)) {
        rep.failed = "uniqueness";
        rep.failed_index = i + 1;
        rep.witness = x;
        return rep;
      }
  }
  long long total_count = 1;
  for (const Subgroup& h : cand.factors) total_count *= h.order();
  if (total_count != g.order()) {
    // unreachable once 1, 2a and 2b hold; kept as a tripwire
    rep.failed = "uniqueness";
    return rep;
  }

  // build the factorization table by enumerating all products; uniqueness is
  // implied by the counting above but is rechecked while filling the table
  rep.factorization.assign(static_cast<size_t>(g.order()), {});
  std::vector<char> seen(static_cast<size_t>(g.order()), 0);
  long long total = 1;
  for (int i = 0; i < r; ++i) total *= cand.factors[static_cast<size_t>(i)].order();
  for (long long idx = 0; idx < total; ++idx) {
    long long rest = idx;
    Tuple t(static_cast<size_t>(r));
    for (int i = r - 1; i >= 0; --i) {
      const auto& mem = cand.factors[static_cast<size_t>(i)].members;
      t[static_cast<size_t>(i)] = static_cast<Elem>(rest % static_cast<long long>(mem.size()));
      rest /= static_cast<long long>(mem.size());
    }
    Elem prod_elem = g.identity();
    for (int i = 0; i < r; ++i)
      prod_elem = g.mul(prod_elem,
                        cand.factors[static_cast<size_t>(i)].members[static_cast<size_t>(t[static_cast<size_t>(i)])]);
    if (seen[static_cast<size_t>(prod_elem)]) {
      rep.failed = "uniqueness";
      rep.witness = prod_elem;
      rep.factorization.clear();
      return rep;
    }
    seen[static_cast<size_t>(prod_elem)] = 1;
    rep.factorization[static_cast<size_t>(prod_elem)] = std::move(t);
  }

  rep.is_sdp = true;
  return rep;
}

TermwiseReport check_termwise(const SdpCandidate& cand) {
  const FiniteGroup& g = *cand.g;
  std::vector<Elem> all_gens;
  for (const Subgroup& h : cand.factors)
    all_gens.insert(all_gens.end(), h.members.begin(), h.members.end());
  if (generated_subgroup(g, all_gens).order() != g.order())
    throw Error("NotGenerating", "the factors do not generate the group");

  auto products = partial_products(cand);
  TermwiseReport rep;
  rep.conjugation_ok = true;
  rep.commutator_ok = true;
  const int r = static_cast<int>(cand.factors.size());
  for (int j = 1; j < r; ++j)
    for (int i = 0; i < j; ++i) {
      const auto& pi = products[static_cast<size_t>(i)];
      for (Elem hj : cand.factors[static_cast<size_t>(j)].members)
        for (Elem hi : cand.factors[static_cast<size_t>(i)].members) {
          if (!std::binary_search(pi.begin(), pi.end(), g.conj(hj, hi)))
            rep.conjugation_ok = false;
          if (!std::binary_search(pi.begin(), pi.end(), g.comm(hj, hi)))
            rep.commutator_ok = false;
        }
    }
  return rep;
}

bool check_iterated_2sdp(const SdpCandidate& cand) {
  const FiniteGroup& g = *cand.g;
  auto products = partial_products(cand);
  const int r = static_cast<int>(cand.factors.size());
  try {
    for (int i = 0; i < r; ++i) {
      Subgroup p = make_subgroup(g, products[static_cast<size_t>(i)]);
      long long expected = 1;
      for (int t = 0; t <= i; ++t) expected *= cand.factors[static_cast<size_t>(t)].order();
      if (static_cast<long long>(p.order()) != expected)
        return false;  // some earlier product meets the next factor nontrivially
      if (i + 1 < r) {
        // normal in the next stage only
        Subgroup next = make_subgroup(g, products[static_cast<size_t>(i + 1)]);
        FiniteGroup stage = subgroup_as_group(g, next);
        std::map<Elem, int> pos;
        for (size_t n = 0; n < next.members.size(); ++n)
          pos[next.members[n]] = static_cast<int>(n);
        std::vector<Elem> inner;
        for (Elem x : p.members) inner.push_back(pos.at(x));
        if (!is_normal(stage, make_subgroup(stage, inner))) return false;
      }
    }
  } catch (const Error&) {
    return false;  // some partial product is not even a subgroup
  }
  return static_cast<int>(products.back().size()) == g.order();
}

Tuple factorize(const SdpCandidate& cand, const SdpReport& report, Elem g) {
  if (!report.is_sdp || report.factorization.empty())
    throw Error("NotAnSdp", "factorize needs a passing report");
  if (g < 0 || g >= cand.g->order())
    throw Error("EntryOutOfRange", "element out of range", {{"element", g}});
  return report.factorization[static_cast<size_t>(g)];
}

TotalSystem extract_total_system(const SdpCandidate& cand, const SdpReport& report) {
  if (!report.is_sdp) throw Error("NotAnSdp", "extraction needs a passing report");
  const FiniteGroup& g = *cand.g;
  const int r = static_cast<int>(cand.factors.size());

  std::vector<FiniteGroup> factors;
  for (const Subgroup& h : cand.factors) factors.push_back(subgroup_as_group(g, h));

  std::map<std::pair<int, int>, std::vector<std::vector<Elem>>> actions;
  std::map<std::tuple<int, int, int>, std::vector<std::vector<Elem>>> brackets;
  for (int k = 2; k <= r; ++k)
    for (int j = 1; j < k; ++j) {
      const auto& mk = cand.factors[static_cast<size_t>(k - 1)].members;
      const auto& mj = cand.factors[static_cast<size_t>(j - 1)].members;
      std::vector<std::vector<Elem>> act(mk.size(), std::vector<Elem>(mj.size()));
      std::vector<std::vector<std::vector<Elem>>> brs(
          static_cast<size_t>(j - 1),
          std::vector<std::vector<Elem>>(mk.size(), std::vector<Elem>(mj.size())));
      for (size_t x = 0; x < mk.size(); ++x)
        for (size_t y = 0; y < mj.size(); ++y) {
          // h_k h_j factors as [h_k,h_j]^1 ... [h_k,h_j]^{j-1} (^{phi}h_j) h_k
          const Tuple t = factorize(cand, report, g.mul(mk[x], mj[y]));
          for (int p = j + 1; p <= r; ++p) {
            const Elem expect = (p == k) ? static_cast<Elem>(x)
                                         : factors[static_cast<size_t>(p - 1)].identity();
            if (t[static_cast<size_t>(p - 1)] != expect)
              throw Error("ShapeViolation",
                          "product h_k h_j factors outside positions {1..j, k}",
                          {{"k", k}, {"j", j}, {"component", p}});
          }
          act[x][y] = t[static_cast<size_t>(j - 1)];
          for (int p = 1; p < j; ++p) brs[static_cast<size_t>(p - 1)][x][y] = t[static_cast<size_t>(p - 1)];
        }
      actions[{k, j}] = std::move(act);
      for (int p = 1; p < j; ++p) brackets[{k, j, p}] = std::move(brs[static_cast<size_t>(p - 1)]);
    }
  return TotalSystem::create(std::move(factors), actions, brackets);
}

bool roundtrip_verify(const SdpCandidate& cand) {
  SdpReport rep = check_internal_sdp(cand);
  if (!rep.is_sdp) return false;
  TotalSystem s = extract_total_system(cand, rep);
  const FiniteGroup& g = *cand.g;
  const int r = static_cast<int>(cand.factors.size());

  // (h_1,...,h_r) -> h_1 ... h_r must carry mu onto the group law, bijectively
  const long long n = s.product_order();
  if (n != g.order()) return false;
  std::vector<Elem> embed(static_cast<size_t>(n));
  std::vector<char> hit(static_cast<size_t>(g.order()), 0);
  for (long long idx = 0; idx < n; ++idx) {
    Tuple t = tuple_of_index(s, idx);
    Elem prod = g.identity();
    for (int p = 0; p < r; ++p)
      prod = g.mul(prod, cand.factors[static_cast<size_t>(p)].members[static_cast<size_t>(t[static_cast<size_t>(p)])]);
    embed[static_cast<size_t>(idx)] = prod;
    hit[static_cast<size_t>(prod)] = 1;
  }
  if (std::find(hit.begin(), hit.end(), 0) != hit.end()) return false;
  for (long long x = 0; x < n; ++x)
    for (long long y = 0; y < n; ++y) {
      Tuple prod = mu(s, tuple_of_index(s, x), tuple_of_index(s, y));
      if (embed[static_cast<size_t>(tuple_index(s, prod))] !=
          g.mul(embed[static_cast<size_t>(x)], embed[static_cast<size_t>(y)]))
        return false;
    }
  CheckOptions opt;
  opt.brute_cap = std::max<long long>(opt.brute_cap, n);
  return brute_force_associative(s, opt).holds;
}

}  // namespace sdp
