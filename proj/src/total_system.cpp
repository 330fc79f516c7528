#include "sdp/total_system.hpp"

#include <algorithm>

#include "sdp/error.hpp"

namespace sdp {

namespace {

std::vector<Elem> flatten_checked(const std::vector<std::vector<Elem>>& rows, int nrows, int ncols,
                                  int codomain_order, const char* what) {
  if (static_cast<int>(rows.size()) != nrows)
    throw Error("TableShape", std::string(what) + ": wrong row count",
                {{"expected", nrows}, {"got", rows.size()}});
  std::vector<Elem> flat;
  flat.reserve(static_cast<size_t>(nrows) * ncols);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != ncols)
      throw Error("TableShape", std::string(what) + ": wrong column count",
                  {{"expected", ncols}, {"got", row.size()}});
    for (Elem v : row) {
      if (v < 0 || v >= codomain_order)
        throw Error("EntryOutOfRange", std::string(what) + ": entry outside codomain",
                    {{"entry", v}, {"codomain_order", codomain_order}});
      flat.push_back(v);
    }
  }
  return flat;
}

}  // namespace

TotalSystem TotalSystem::create(
    std::vector<FiniteGroup> factors,
    const std::map<std::pair<int, int>, std::vector<std::vector<Elem>>>& actions,
    const std::map<std::tuple<int, int, int>, std::vector<std::vector<Elem>>>& brackets) {
  if (factors.empty()) throw Error("RankTooSmall", "a total system needs at least one factor");
  TotalSystem s;
  s.factors_ = std::move(factors);
  const int r = s.rank();
  s.pair_slot_.assign(static_cast<size_t>(r) * r, -1);
  s.triple_slot_.assign(static_cast<size_t>(r) * r * r, -1);

  for (const auto& [key, rows] : actions) {
    auto [k, j] = key;
    if (!(1 <= j && j < k && k <= r))
      throw Error("IndexOutOfRange", "action key must satisfy r >= k > j >= 1",
                  {{"k", k}, {"j", j}});
    (void)rows;
  }
  for (const auto& [key, rows] : brackets) {
    auto [k, j, i] = key;
    if (!(1 <= i && i < j && j < k && k <= r))
      throw Error("IndexOutOfRange", "bracket key must satisfy r >= k > j > i >= 1",
                  {{"k", k}, {"j", j}, {"i", i}});
    (void)rows;
  }

  for (int k = 2; k <= r; ++k)
    for (int j = 1; j < k; ++j) {
      auto it = actions.find({k, j});
      if (it == actions.end())
        throw Error("MissingTable", "missing action table", {{"k", k}, {"j", j}});
      Table t;
      t.cols = s.factor(j).order();
      t.data = flatten_checked(it->second, s.factor(k).order(), t.cols, s.factor(j).order(),
                               "action table");
      s.pair_slot_[static_cast<size_t>((k - 1) * r + (j - 1))] = static_cast<int>(s.tables_.size());
      s.tables_.push_back(std::move(t));
    }
  for (int k = 3; k <= r; ++k)
    for (int j = 2; j < k; ++j)
      for (int i = 1; i < j; ++i) {
        auto it = brackets.find({k, j, i});
        if (it == brackets.end())
          throw Error("MissingTable", "missing bracket table", {{"k", k}, {"j", j}, {"i", i}});
        Table t;
        t.cols = s.factor(j).order();
        t.data = flatten_checked(it->second, s.factor(k).order(), t.cols, s.factor(i).order(),
                                 "bracket table");
        s.triple_slot_[static_cast<size_t>(((k - 1) * r + (j - 1)) * r + (i - 1))] =
            static_cast<int>(s.tables_.size());
        s.tables_.push_back(std::move(t));
      }
  return s;
}

long long TotalSystem::product_order() const {
  long long n = 1;
  for (const auto& g : factors_) n *= g.order();
  return n;
}

std::vector<std::vector<Elem>> TotalSystem::action_rows(int k, int j) const {
  const Table& t = tables_[static_cast<size_t>(act_idx(k, j))];
  std::vector<std::vector<Elem>> rows(static_cast<size_t>(factor(k).order()));
  for (int x = 0; x < factor(k).order(); ++x)
    rows[static_cast<size_t>(x)].assign(t.data.begin() + static_cast<size_t>(x) * t.cols,
                                        t.data.begin() + static_cast<size_t>(x + 1) * t.cols);
  return rows;
}

std::vector<std::vector<Elem>> TotalSystem::bracket_rows(int k, int j, int i) const {
  const Table& t = tables_[static_cast<size_t>(br_idx(k, j, i))];
  std::vector<std::vector<Elem>> rows(static_cast<size_t>(factor(k).order()));
  for (int x = 0; x < factor(k).order(); ++x)
    rows[static_cast<size_t>(x)].assign(t.data.begin() + static_cast<size_t>(x) * t.cols,
                                        t.data.begin() + static_cast<size_t>(x + 1) * t.cols);
  return rows;
}

NormalizationReport check_normalized(const TotalSystem& s) {
  NormalizationReport rep;
  const int r = s.rank();
  for (int k = 2; k <= r; ++k)
    for (int j = 1; j < k; ++j) {
      const Elem ek = s.factor(k).identity();
      const Elem ej = s.factor(j).identity();
      for (Elem h = 0; h < s.factor(j).order(); ++h)
        if (s.act(k, j, ek, h) != h) rep.violations.push_back({1, k, j, 0, h});
      for (Elem h = 0; h < s.factor(k).order(); ++h)
        if (s.act(k, j, h, ej) != ej) rep.violations.push_back({2, k, j, 0, h});
    }
  for (int k = 3; k <= r; ++k)
    for (int j = 2; j < k; ++j)
      for (int i = 1; i < j; ++i) {
        const Elem ek = s.factor(k).identity();
        const Elem ej = s.factor(j).identity();
        const Elem ei = s.factor(i).identity();
        for (Elem h = 0; h < s.factor(j).order(); ++h)
          if (s.br(k, j, i, ek, h) != ei) rep.violations.push_back({3, k, j, i, h});
        for (Elem h = 0; h < s.factor(k).order(); ++h)
          if (s.br(k, j, i, h, ej) != ei) rep.violations.push_back({4, k, j, i, h});
      }
  return rep;
}

TotalSystem trivial_system(std::vector<FiniteGroup> factors) {
  std::map<std::pair<int, int>, std::vector<std::vector<Elem>>> actions;
  std::map<std::tuple<int, int, int>, std::vector<std::vector<Elem>>> brackets;
  const int r = static_cast<int>(factors.size());
  for (int k = 2; k <= r; ++k)
    for (int j = 1; j < k; ++j) {
      std::vector<std::vector<Elem>> t(
          static_cast<size_t>(factors[static_cast<size_t>(k - 1)].order()),
          std::vector<Elem>(static_cast<size_t>(factors[static_cast<size_t>(j - 1)].order())));
      for (auto& row : t)
        for (size_t y = 0; y < row.size(); ++y) row[y] = static_cast<Elem>(y);
      actions[{k, j}] = std::move(t);
    }
  for (int k = 3; k <= r; ++k)
    for (int j = 2; j < k; ++j)
      for (int i = 1; i < j; ++i) {
        brackets[{k, j, i}] = std::vector<std::vector<Elem>>(
            static_cast<size_t>(factors[static_cast<size_t>(k - 1)].order()),
            std::vector<Elem>(static_cast<size_t>(factors[static_cast<size_t>(j - 1)].order()),
                              factors[static_cast<size_t>(i - 1)].identity()));
      }
  return TotalSystem::create(std::move(factors), actions, brackets);
}

TotalSystem restrict_system(const TotalSystem& s, int j, int k) {
  const int r = s.rank();
  if (!(1 <= j && j < k && k <= r))
    throw Error("IndexOutOfRange", "restriction needs 1 <= j < k <= r", {{"j", j}, {"k", k}});
  // positions 1..j keep their index, H_k becomes position j+1
  std::vector<FiniteGroup> factors;
  for (int t = 1; t <= j; ++t) factors.push_back(s.factor(t));
  factors.push_back(s.factor(k));
  auto old_of = [&](int p) { return p <= j ? p : k; };

  std::map<std::pair<int, int>, std::vector<std::vector<Elem>>> actions;
  std::map<std::tuple<int, int, int>, std::vector<std::vector<Elem>>> brackets;
  for (int p = 2; p <= j + 1; ++p)
    for (int q = 1; q < p; ++q) actions[{p, q}] = s.action_rows(old_of(p), old_of(q));
  for (int p = 3; p <= j + 1; ++p)
    for (int q = 2; q < p; ++q)
      for (int t = 1; t < q; ++t)
        brackets[{p, q, t}] = s.bracket_rows(old_of(p), old_of(q), old_of(t));
  return TotalSystem::create(std::move(factors), actions, brackets);
}

TotalSystem quotient_system(const TotalSystem& s) {
  const int r = s.rank();
  if (r < 2) throw Error("RankTooSmall", "quotient needs rank >= 2", {{"r", r}});
  std::vector<FiniteGroup> factors;
  for (int t = 2; t <= r; ++t) factors.push_back(s.factor(t));
  std::map<std::pair<int, int>, std::vector<std::vector<Elem>>> actions;
  std::map<std::tuple<int, int, int>, std::vector<std::vector<Elem>>> brackets;
  for (int k = 2; k <= r - 1; ++k)
    for (int j = 1; j < k; ++j) actions[{k, j}] = s.action_rows(k + 1, j + 1);
  for (int k = 3; k <= r - 1; ++k)
    for (int j = 2; j < k; ++j)
      for (int i = 1; i < j; ++i) brackets[{k, j, i}] = s.bracket_rows(k + 1, j + 1, i + 1);
  return TotalSystem::create(std::move(factors), actions, brackets);
}

TotalSystem random_normalized_system(std::vector<FiniteGroup> factors, Rng& rng) {
  const int r = static_cast<int>(factors.size());
  std::map<std::pair<int, int>, std::vector<std::vector<Elem>>> actions;
  std::map<std::tuple<int, int, int>, std::vector<std::vector<Elem>>> brackets;
  for (int k = 2; k <= r; ++k)
    for (int j = 1; j < k; ++j) {
      const FiniteGroup& hk = factors[static_cast<size_t>(k - 1)];
      const FiniteGroup& hj = factors[static_cast<size_t>(j - 1)];
      std::vector<std::vector<Elem>> t(static_cast<size_t>(hk.order()),
                                       std::vector<Elem>(static_cast<size_t>(hj.order())));
      for (Elem x = 0; x < hk.order(); ++x)
        for (Elem y = 0; y < hj.order(); ++y) {
          if (x == hk.identity())
            t[static_cast<size_t>(x)][static_cast<size_t>(y)] = y;
          else if (y == hj.identity())
            t[static_cast<size_t>(x)][static_cast<size_t>(y)] = hj.identity();
          else
            t[static_cast<size_t>(x)][static_cast<size_t>(y)] = rng.below(hj.order());
        }
      actions[{k, j}] = std::move(t);
    }
  for (int k = 3; k <= r; ++k)
    for (int j = 2; j < k; ++j)
      for (int i = 1; i < j; ++i) {
        const FiniteGroup& hk = factors[static_cast<size_t>(k - 1)];
        const FiniteGroup& hj = factors[static_cast<size_t>(j - 1)];
        const FiniteGroup& hi = factors[static_cast<size_t>(i - 1)];
        std::vector<std::vector<Elem>> t(static_cast<size_t>(hk.order()),
                                         std::vector<Elem>(static_cast<size_t>(hj.order())));
        for (Elem x = 0; x < hk.order(); ++x)
          for (Elem y = 0; y < hj.order(); ++y) {
            if (x == hk.identity() || y == hj.identity())
              t[static_cast<size_t>(x)][static_cast<size_t>(y)] = hi.identity();
            else
              t[static_cast<size_t>(x)][static_cast<size_t>(y)] = rng.below(hi.order());
          }
        brackets[{k, j, i}] = std::move(t);
      }
  return TotalSystem::create(std::move(factors), actions, brackets);
}

std::vector<std::vector<Elem>> endomorphism_tables(const FiniteGroup& g) {
  // brute force over all value tables; fine for the tiny groups this is used on
  const int n = g.order();
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> f(static_cast<size_t>(n), 0);
  while (true) {
    bool hom = f[static_cast<size_t>(g.identity())] == g.identity();
    for (Elem x = 0; x < n && hom; ++x)
      for (Elem y = 0; y < n && hom; ++y)
        hom = f[static_cast<size_t>(g.mul(x, y))] ==
              g.mul(f[static_cast<size_t>(x)], f[static_cast<size_t>(y)]);
    if (hom) out.push_back(f);
    int pos = n - 1;
    while (pos >= 0 && f[static_cast<size_t>(pos)] == n - 1) {
      f[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++f[static_cast<size_t>(pos)];
  }
  return out;
}

TotalSystem random_action_structured_system(std::vector<FiniteGroup> factors, Rng& rng) {
  const int r = static_cast<int>(factors.size());
  std::map<std::pair<int, int>, std::vector<std::vector<Elem>>> actions;
  std::map<std::tuple<int, int, int>, std::vector<std::vector<Elem>>> brackets;
  for (int k = 2; k <= r; ++k)
    for (int j = 1; j < k; ++j) {
      const FiniteGroup& hk = factors[static_cast<size_t>(k - 1)];
      const FiniteGroup& hj = factors[static_cast<size_t>(j - 1)];
      auto endos = endomorphism_tables(hj);
      // phi: H_k -> End(H_j) as a monoid homomorphism: phi(1) = id and
      // phi(xy) = phi(x) o phi(y); sampled by rejection over assignments.
      const int n = hk.order();
      std::vector<int> choice(static_cast<size_t>(n));
      auto composes = [&](const std::vector<int>& c) {
        for (Elem x = 0; x < n; ++x)
          for (Elem y = 0; y < n; ++y) {
            const auto& fx = endos[static_cast<size_t>(c[static_cast<size_t>(x)])];
            const auto& fy = endos[static_cast<size_t>(c[static_cast<size_t>(y)])];
            const auto& fxy = endos[static_cast<size_t>(c[static_cast<size_t>(hk.mul(x, y))])];
            for (Elem h = 0; h < hj.order(); ++h)
              if (fxy[static_cast<size_t>(h)] !=
                  fx[static_cast<size_t>(fy[static_cast<size_t>(h)])])
                return false;
          }
        return true;
      };
      // identity endomorphism index
      int id_idx = -1;
      for (size_t e = 0; e < endos.size(); ++e) {
        bool is_id = true;
        for (Elem h = 0; h < hj.order() && is_id; ++h) is_id = endos[e][static_cast<size_t>(h)] == h;
        if (is_id) {
          id_idx = static_cast<int>(e);
          break;
        }
      }
      for (int tries = 0;; ++tries) {
        for (Elem x = 0; x < n; ++x)
          choice[static_cast<size_t>(x)] =
              (x == hk.identity()) ? id_idx : rng.below(static_cast<int>(endos.size()));
        if (composes(choice)) break;
        if (tries > 20000) {  // fall back to the trivial action
          for (Elem x = 0; x < n; ++x) choice[static_cast<size_t>(x)] = id_idx;
          break;
        }
      }
      std::vector<std::vector<Elem>> t(static_cast<size_t>(n),
                                       std::vector<Elem>(static_cast<size_t>(hj.order())));
      for (Elem x = 0; x < n; ++x)
        for (Elem h = 0; h < hj.order(); ++h)
          t[static_cast<size_t>(x)][static_cast<size_t>(h)] =
              endos[static_cast<size_t>(choice[static_cast<size_t>(x)])][static_cast<size_t>(h)];
      actions[{k, j}] = std::move(t);
    }
  for (int k = 3; k <= r; ++k)
    for (int j = 2; j < k; ++j)
      for (int i = 1; i < j; ++i) {
        const FiniteGroup& hk = factors[static_cast<size_t>(k - 1)];
        const FiniteGroup& hj = factors[static_cast<size_t>(j - 1)];
        const FiniteGroup& hi = factors[static_cast<size_t>(i - 1)];
        std::vector<std::vector<Elem>> t(static_cast<size_t>(hk.order()),
                                         std::vector<Elem>(static_cast<size_t>(hj.order())));
        for (Elem x = 0; x < hk.order(); ++x)
          for (Elem y = 0; y < hj.order(); ++y)
            t[static_cast<size_t>(x)][static_cast<size_t>(y)] =
                (x == hk.identity() || y == hj.identity()) ? hi.identity()
                                                           : rng.below(hi.order());
        brackets[{k, j, i}] = std::move(t);
      }
  return TotalSystem::create(std::move(factors), actions, brackets);
}

}  // namespace sdp
