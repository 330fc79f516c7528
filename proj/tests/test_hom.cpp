#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "sdp/error.hpp"
#include "sdp/hom.hpp"
#include "sdp/rng.hpp"

using namespace sdp;

namespace {

// inclusion maps of the S3 factorization: Z3 -> powers of (012), Z2 -> (01)
struct S3Inclusions {
  fx::S3Fixture f;
  TotalSystem s;
  AssembledMap m;

  S3Inclusions()
      : s(extract_total_system(f.cand, check_internal_sdp(f.cand))),
        m(assemble(s, f.g.as_monoid(),
                   {f.cand.factors[0].members, f.cand.factors[1].members})) {}
};

std::vector<std::vector<Elem>> all_hom_tables(const FiniteGroup& from, const Monoid& to) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> f(static_cast<size_t>(from.order()), 0);
  while (true) {
    bool hom = f[static_cast<size_t>(from.identity())] == to.identity;
    for (Elem x = 0; x < from.order() && hom; ++x)
      for (Elem y = 0; y < from.order() && hom; ++y)
        hom = f[static_cast<size_t>(from.mul(x, y))] ==
              to.mul(f[static_cast<size_t>(x)], f[static_cast<size_t>(y)]);
    if (hom) out.push_back(f);
    int pos = from.order() - 1;
    while (pos >= 0 && f[static_cast<size_t>(pos)] == to.order - 1) {
      f[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++f[static_cast<size_t>(pos)];
  }
  return out;
}

}  // namespace

TEST_CASE("assemble validates arities") {
  TotalSystem s = trivial_system({cyclic_group(2), cyclic_group(3)});
  Monoid t = cyclic_group(4).as_monoid();
  try {
    assemble(s, t, {{0, 0}});
    FAIL("expected ArityMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == "ArityMismatch");
  }
  try {
    assemble(s, t, {{0, 0}, {0, 9, 0}});
    FAIL("expected ArityMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == "ArityMismatch");
  }
}

TEST_CASE("constant-identity components assemble to the constant-identity map") {
  TotalSystem s = trivial_system({cyclic_group(2), cyclic_group(3)});
  Monoid t = symmetric_group(3).as_monoid();
  AssembledMap m = assemble(s, t, {{0, 0}, {0, 0, 0}});
  for (long long x = 0; x < s.product_order(); ++x)
    CHECK(m.apply(tuple_of_index(s, x)) == t.identity);
}

TEST_CASE("the S3 inclusions assemble to the factorization bijection") {
  S3Inclusions fix;
  SdpReport rep = check_internal_sdp(fix.f.cand);
  for (long long x = 0; x < 6; ++x) {
    Tuple t = tuple_of_index(fix.s, x);
    Elem g = fix.m.apply(t);
    CHECK(factorize(fix.f.cand, rep, g) == t);
  }
}

TEST_CASE("componentwise homomorphisms into an abelian target assemble to one") {
  TotalSystem s = trivial_system({cyclic_group(2), cyclic_group(2)});
  FiniteGroup z4 = cyclic_group(4);
  AssembledMap m = assemble(s, z4.as_monoid(), {{0, 2}, {0, 2}});
  auto rep = check_hom_all(m);
  CHECK(rep.pairwise);
  CHECK(rep.brute);
}

TEST_CASE("check_hom_pair") {
  S3Inclusions fix;
  SUBCASE("j = k with a homomorphic component holds") {
    CHECK(check_hom_pair(fix.m, 1, 1).holds);
    CHECK(check_hom_pair(fix.m, 2, 2).holds);
  }
  SUBCASE("the mixed pair holds for the inclusions") {
    CHECK(check_hom_pair(fix.m, 2, 1).holds);
  }
  SUBCASE("a sabotaged bottom component fails at (1,1) with a witness") {
    auto bad = fix.f.cand.factors[0].members;
    std::swap(bad[0], bad[1]);  // no longer a homomorphism
    AssembledMap m2 = assemble(fix.s, fix.f.g.as_monoid(),
                               {bad, fix.f.cand.factors[1].members});
    auto res = check_hom_pair(m2, 1, 1);
    CHECK_FALSE(res.holds);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->lhs != res.witness->rhs);
  }
  SUBCASE("index validation") {
    try {
      check_hom_pair(fix.m, 1, 2);
      FAIL("expected IndexError");
    } catch (const Error& e) {
      CHECK(e.code() == "IndexError");
    }
  }
}

TEST_CASE("check_hom_all: pairwise conditions match the brute-force sweep") {
  SUBCASE("identity assembly into the associative product itself") {
    // target = the reconstructed multiplication table of the S3 system
    TotalSystem s = fx::s3_system();
    MuTable mt = build_mu_table(s, 64);
    std::vector<std::vector<Elem>> rows(6, std::vector<Elem>(6));
    for (long long x = 0; x < 6; ++x)
      for (long long y = 0; y < 6; ++y)
        rows[static_cast<size_t>(x)][static_cast<size_t>(y)] = mt.at(x, y);
    Monoid target = validate_monoid(rows);
    // f_i = canonical embeddings: h_1 -> (h_1, 0), h_2 -> (0, h_2)
    AssembledMap m = assemble(s, target,
                              {{static_cast<Elem>(tuple_index(s, {0, 0})),
                                static_cast<Elem>(tuple_index(s, {1, 0})),
                                static_cast<Elem>(tuple_index(s, {2, 0}))},
                               {static_cast<Elem>(tuple_index(s, {0, 0})),
                                static_cast<Elem>(tuple_index(s, {0, 1}))}});
    auto rep = check_hom_all(m);
    CHECK(rep.pairwise);
    CHECK(rep.brute);
    for (long long x = 0; x < 6; ++x) CHECK(m.apply(tuple_of_index(s, x)) == x);
  }
  SUBCASE("S3 inclusions, 36 pairs") {
    S3Inclusions fix;
    auto rep = check_hom_all(fix.m);
    CHECK(rep.pairwise);
    CHECK(rep.brute);
    CHECK(rep.pairs.size() == 3);
  }
  SUBCASE("S4 inclusions, 576 pairs") {
    fx::S4Fixture f;
    SdpReport rep = check_internal_sdp(f.cand);
    TotalSystem s = extract_total_system(f.cand, rep);
    AssembledMap m = assemble(s, f.g.as_monoid(),
                              {f.cand.factors[0].members, f.cand.factors[1].members,
                               f.cand.factors[2].members});
    auto hr = check_hom_all(m);
    CHECK(hr.pairwise);
    CHECK(hr.brute);
  }
}

TEST_CASE("commutator criterion") {
  SUBCASE("abelian everything: both sides trivial") {
    TotalSystem s = trivial_system({cyclic_group(2), cyclic_group(2)});
    AssembledMap m = assemble(s, cyclic_group(4).as_monoid(), {{0, 2}, {0, 2}});
    auto cc = check_commutator_criterion(m);
    CHECK(cc.holds);
    CHECK(cc.simplified_checked);  // brackets are trivial in a rank-2 system
  }
  SUBCASE("S3 inclusions: verdict matches check_hom_all") {
    S3Inclusions fix;
    auto cc = check_commutator_criterion(fix.m);
    auto rep = check_hom_all(fix.m);
    CHECK(cc.holds == (rep.pairwise && rep.brute));
    CHECK(cc.holds);
  }
  SUBCASE("collapsing the top factor breaks both checks together") {
    S3Inclusions fix;
    AssembledMap m2 = assemble(fix.s, fix.f.g.as_monoid(),
                               {fix.f.cand.factors[0].members,
                                {fix.f.g.identity(), fix.f.g.identity()}});
    auto cc = check_commutator_criterion(m2);
    auto rep = check_hom_all(m2);
    CHECK_FALSE(cc.holds);
    CHECK_FALSE(rep.pairwise);
    CHECK_FALSE(rep.brute);
  }
  SUBCASE("non-homomorphic components are rejected") {
    S3Inclusions fix;
    auto bad = fix.f.cand.factors[0].members;
    std::swap(bad[0], bad[1]);
    AssembledMap m2 = assemble(fix.s, fix.f.g.as_monoid(),
                               {bad, fix.f.cand.factors[1].members});
    try {
      check_commutator_criterion(m2);
      FAIL("expected ComponentNotHom");
    } catch (const Error& e) {
      CHECK(e.code() == "ComponentNotHom");
      CHECK(e.details().at("factor") == 1);
    }
  }
}

TEST_CASE("f(mu_A(u, a_k)) = f(u) f(a_k) by construction") {
  Rng rng(81);
  TotalSystem s = trivial_system({cyclic_group(2), cyclic_group(3), cyclic_group(2)});
  Monoid t = dihedral_group(4).as_monoid();
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<std::vector<Elem>> maps;
    for (int i = 1; i <= 3; ++i) {
      std::vector<Elem> f(static_cast<size_t>(s.factor(i).order()));
      for (auto& v : f) v = rng.below(t.order);
      maps.push_back(std::move(f));
    }
    CHECK(homspit_identity(assemble(s, t, maps)));
  }
}

TEST_CASE("stagewise sufficiency for homomorphisms") {
  // if f is a homomorphism on R_{k-1} and every H[f;k,j] holds, it is one on R_k
  Rng rng(82);
  fx::S3Fixture f3;
  TotalSystem s = extract_total_system(f3.cand, check_internal_sdp(f3.cand));
  Monoid t = f3.g.as_monoid();
  int premise_held = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<std::vector<Elem>> maps;
    for (int i = 1; i <= 2; ++i) {
      const auto& homs = all_hom_tables(s.factor(i), t);
      if (rng.below(2)) {
        maps.push_back(homs[static_cast<size_t>(rng.below(static_cast<int>(homs.size())))]);
      } else {
        std::vector<Elem> f(static_cast<size_t>(s.factor(i).order()));
        for (auto& v : f) v = rng.below(t.order);
        maps.push_back(std::move(f));
      }
    }
    AssembledMap m = assemble(s, t, maps);

    // brute-force homomorphism check on the band R_1 (k = 2 case)
    bool on_r1 = true;
    for (Elem x = 0; x < s.factor(1).order() && on_r1; ++x)
      for (Elem y = 0; y < s.factor(1).order() && on_r1; ++y) {
        Tuple u = elementary_tuple(s, 1, x), v = elementary_tuple(s, 1, y);
        on_r1 = m.apply(mu(s, u, v)) == t.mul(m.apply(u), m.apply(v));
      }
    bool pairs_k2 = check_hom_pair(m, 2, 1).holds && check_hom_pair(m, 2, 2).holds;
    if (on_r1 && pairs_k2) {
      ++premise_held;
      CHECK(check_hom_all(m).brute);
    }
  }
  CHECK(premise_held > 0);
}

TEST_CASE("pairwise conditions suffice on sampled instances") {
  Rng rng(83);
  fx::S4Fixture f4;
  TotalSystem s4 = extract_total_system(f4.cand, check_internal_sdp(f4.cand));
  std::vector<const TotalSystem*> systems;
  TotalSystem triv = trivial_system({cyclic_group(2), cyclic_group(3)});
  systems.push_back(&triv);
  systems.push_back(&s4);
  std::vector<FiniteGroup> targets = {cyclic_group(2), cyclic_group(4), symmetric_group(3),
                                      dihedral_group(4)};
  int cor_checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const TotalSystem& s = *systems[static_cast<size_t>(trial % 2)];
    Monoid t = targets[static_cast<size_t>(rng.below(4))].as_monoid();
    std::vector<std::vector<Elem>> maps;
    bool all_hom = true;
    for (int i = 1; i <= s.rank(); ++i) {
      if (rng.below(3) == 0) {
        const auto& homs = all_hom_tables(s.factor(i), t);
        maps.push_back(homs[static_cast<size_t>(rng.below(static_cast<int>(homs.size())))]);
      } else {
        std::vector<Elem> f(static_cast<size_t>(s.factor(i).order()));
        for (auto& v : f) v = rng.below(t.order);
        f[static_cast<size_t>(s.factor(i).identity())] = t.identity;
        maps.push_back(std::move(f));
        all_hom = false;
      }
    }
    AssembledMap m = assemble(s, t, maps);
    auto rep = check_hom_all(m);
    CHECK(rep.pairwise == rep.brute);
    if (all_hom) {
      ++cor_checked;
      auto cc = check_commutator_criterion(m);
      CHECK(cc.holds == (rep.pairwise && rep.brute));
    }
  }
  CHECK(cor_checked > 0);
}
