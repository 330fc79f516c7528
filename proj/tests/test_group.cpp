#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>

#include "fixtures.hpp"
#include "sdp/error.hpp"
#include "sdp/group.hpp"
#include "sdp/rng.hpp"

using namespace sdp;

namespace {

std::string error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("validate_group accepts Z2 and reports identity") {
  FiniteGroup g = FiniteGroup::validate({{0, 1}, {1, 0}});
  CHECK(g.order() == 2);
  CHECK(g.identity() == 0);
  CHECK(g.inv(1) == 1);
}

TEST_CASE("validate_group rejects a table without inverses") {
  try {
    FiniteGroup::validate({{0, 1}, {1, 1}});
    FAIL("expected NoInverse");
  } catch (const Error& e) {
    CHECK(e.code() == "NoInverse");
    CHECK(e.details().at("element") == 1);
  }
}

TEST_CASE("validate_group rejects a table without identity") {
  CHECK(error_code([] { FiniteGroup::validate({{1, 1}, {1, 1}}); }) == "NoIdentity");
}

TEST_CASE("validate_group reports the first non-associative triple") {
  // unit and inverses fine, associativity broken; first bad triple is (1,1,2)
  try {
    FiniteGroup::validate({{0, 1, 2}, {1, 0, 1}, {2, 2, 0}});
    FAIL("expected NotAssociative");
  } catch (const Error& e) {
    CHECK(e.code() == "NotAssociative");
    CHECK(e.details().at("x") == 1);
    CHECK(e.details().at("y") == 1);
    CHECK(e.details().at("z") == 2);
  }
}

TEST_CASE("validate_group accepts S3 built from permutation composition") {
  FiniteGroup s3 = FiniteGroup::validate(fx::perm_table(3));
  CHECK(s3.order() == 6);
  CHECK(s3.identity() == 0);  // the identity permutation is lexicographically first
  CHECK_FALSE(s3.is_abelian());
}

TEST_CASE("stock groups validate and match the independent permutation oracle") {
  CHECK(symmetric_group(3).rows() == fx::perm_table(3));
  CHECK(symmetric_group(4).rows() == fx::perm_table(4));
  CHECK(cyclic_group(1).order() == 1);
  CHECK(klein_group().is_abelian());
  CHECK_FALSE(dihedral_group(4).is_abelian());
  CHECK(direct_product(cyclic_group(2), cyclic_group(3)).order() == 6);
}

TEST_CASE("complex_product") {
  fx::S3Fixture f;
  const FiniteGroup& g = f.g;
  const Elem e = g.identity();

  SUBCASE("identity sets") {
    CHECK(complex_product(g, {{e}, {e}}) == std::vector<Elem>{e});
  }
  SUBCASE("A3 times a transposition gives all of S3") {
    auto prod = complex_product(g, {f.cand.factors[0].members, f.cand.factors[1].members});
    CHECK(prod == g.elements());
  }
  SUBCASE("a subgroup times itself is itself") {
    auto t = f.cand.factors[1].members;
    CHECK(complex_product(g, {t, t}) == t);
  }
  SUBCASE("setwise product is associative") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      auto pick = [&] {
        std::vector<Elem> s;
        for (Elem x = 0; x < g.order(); ++x)
          if (rng.below(2)) s.push_back(x);
        if (s.empty()) s.push_back(g.identity());
        return s;
      };
      auto a = pick(), b = pick(), c = pick();
      CHECK(complex_product(g, {complex_product(g, {a, b}), c}) ==
            complex_product(g, {a, complex_product(g, {b, c})}));
    }
  }
}

TEST_CASE("is_normal") {
  fx::S3Fixture f;
  CHECK(is_normal(f.g, f.cand.factors[0]));        // A3
  CHECK_FALSE(is_normal(f.g, f.cand.factors[1]));  // a transposition subgroup
  CHECK(is_normal(f.g, make_subgroup(f.g, f.g.elements())));
}

TEST_CASE("conjugate_set") {
  fx::S3Fixture f;
  const FiniteGroup& g = f.g;
  const Elem t01 = fx::perm_index(f.perms, fx::cycle(3, {0, 1}));

  CHECK(conjugate_set(g, {g.identity()}, f.cand.factors[1].members) == f.cand.factors[1].members);
  CHECK(conjugate_set(g, {t01}, {g.identity()}) == std::vector<Elem>{g.identity()});

  // conjugating one transposition by the 3-cycles yields all three
  auto conj = conjugate_set(g, f.cand.factors[0].members, {t01});
  std::vector<Elem> transpositions = {fx::perm_index(f.perms, fx::cycle(3, {0, 1})),
                                      fx::perm_index(f.perms, fx::cycle(3, {0, 2})),
                                      fx::perm_index(f.perms, fx::cycle(3, {1, 2}))};
  std::sort(transpositions.begin(), transpositions.end());
  CHECK(conj == transpositions);
}

TEST_CASE("is_normal matches the conjugation characterization") {
  fx::S4Fixture f;
  Rng rng(3);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Elem> gens = {rng.below(f.g.order())};
    if (rng.below(2)) gens.push_back(rng.below(f.g.order()));
    Subgroup h = generated_subgroup(f.g, gens);
    auto conj = conjugate_set(f.g, f.g.elements(), h.members);
    const bool contained = std::includes(h.members.begin(), h.members.end(), conj.begin(), conj.end());
    CHECK(is_normal(f.g, h) == contained);
  }
}

TEST_CASE("commutator_subgroup") {
  fx::S3Fixture f;
  SUBCASE("trivial factor gives the trivial subgroup") {
    CHECK(commutator_subgroup(f.g, {f.g.identity()}, f.g.elements()).order() == 1);
  }
  SUBCASE("[S3,S3] is A3") {
    Subgroup d = commutator_subgroup(f.g, f.g.elements(), f.g.elements());
    CHECK(d.members == f.cand.factors[0].members);
  }
  SUBCASE("abelian groups have trivial derived subgroup") {
    FiniteGroup z6 = cyclic_group(6);
    CHECK(commutator_subgroup(z6, z6.elements(), z6.elements()).order() == 1);
  }
}

TEST_CASE("generated_subgroup") {
  fx::S3Fixture f;
  CHECK(generated_subgroup(f.g, {}).members == std::vector<Elem>{f.g.identity()});
  CHECK(generated_subgroup(f.g, {fx::perm_index(f.perms, fx::cycle(3, {0, 1, 2}))}).order() == 3);
  CHECK(generated_subgroup(f.g, {fx::perm_index(f.perms, fx::cycle(3, {0, 1})),
                                 fx::perm_index(f.perms, fx::cycle(3, {0, 1, 2}))})
            .order() == 6);
}

TEST_CASE("make_subgroup validates closure") {
  fx::S3Fixture f;
  CHECK(make_subgroup(f.g, f.cand.factors[0].members).order() == 3);
  try {
    make_subgroup(f.g, {f.g.identity(), fx::perm_index(f.perms, fx::cycle(3, {0, 1, 2}))});
    FAIL("expected NotASubgroup");
  } catch (const Error& e) {
    CHECK(e.code() == "NotASubgroup");
  }
}

TEST_CASE("group axioms hold on every validated group") {
  Rng rng(5);
  for (const FiniteGroup& g : {cyclic_group(5), klein_group(), dihedral_group(3),
                               symmetric_group(4), direct_product(cyclic_group(2), cyclic_group(4))}) {
    for (int trial = 0; trial < 50; ++trial) {
      Elem x = rng.below(g.order()), y = rng.below(g.order()), z = rng.below(g.order());
      CHECK(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)));
      CHECK(g.mul(x, g.identity()) == x);
      CHECK(g.mul(g.identity(), x) == x);
      CHECK(g.mul(x, g.inv(x)) == g.identity());
    }
  }
}

TEST_CASE("monoid validation") {
  Monoid m = validate_monoid({{0, 1}, {1, 1}});  // max(x,y): associative, unit 0, no inverses
  CHECK(m.order == 2);
  CHECK(m.identity == 0);
  CHECK_FALSE(m.is_group());
  CHECK(symmetric_group(3).as_monoid().is_group());
}
