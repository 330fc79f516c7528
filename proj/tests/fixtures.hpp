#pragma once

// Shared fixtures.  The permutation arithmetic here is deliberately written
// from scratch so the expected values it produces stay independent of the
// library code under test.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "sdp/internal_sdp.hpp"
#include "sdp/io.hpp"
#include "sdp/total_system.hpp"
#include "sdp/tuples.hpp"

namespace fx {

using Perm = std::vector<int>;

inline Perm compose(const Perm& p, const Perm& q) {  // (p*q)(x) = p(q(x))
  Perm r(p.size());
  for (size_t x = 0; x < p.size(); ++x) r[x] = p[static_cast<size_t>(q[x])];
  return r;
}

inline Perm identity_perm(int n) {
  Perm p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// cycle given as the list of points it moves, e.g. {0,1,2} for the 3-cycle
inline Perm cycle(int n, const std::vector<int>& pts) {
  Perm p = identity_perm(n);
  for (size_t i = 0; i < pts.size(); ++i)
    p[static_cast<size_t>(pts[i])] = pts[(i + 1) % pts.size()];
  return p;
}

inline std::vector<Perm> all_perms(int n) {
  Perm p = identity_perm(n);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;  // lexicographic order
}

inline int perm_index(const std::vector<Perm>& perms, const Perm& p) {
  return static_cast<int>(std::find(perms.begin(), perms.end(), p) - perms.begin());
}

// symmetric-group multiplication table computed with the local composition
inline std::vector<std::vector<int>> perm_table(int n) {
  auto perms = all_perms(n);
  std::vector<std::vector<int>> t(perms.size(), std::vector<int>(perms.size()));
  for (size_t i = 0; i < perms.size(); ++i)
    for (size_t j = 0; j < perms.size(); ++j)
      t[i][j] = perm_index(perms, compose(perms[i], perms[j]));
  return t;
}

// Z3 x| Z2 with the nontrivial element of Z2 acting by inversion
inline sdp::TotalSystem s3_system() {
  std::vector<sdp::FiniteGroup> factors = {sdp::cyclic_group(3), sdp::cyclic_group(2)};
  std::map<std::pair<int, int>, std::vector<std::vector<sdp::Elem>>> actions;
  actions[{2, 1}] = {{0, 1, 2}, {0, 2, 1}};
  return sdp::TotalSystem::create(std::move(factors), actions, {});
}

// (Z2,Z2,Z2) with phi_3^2 sending the generator to the constant-identity map;
// that map is an endomorphism but phi_3^2 is not a homomorphism into End, so
// exactly A[3,3,2] fails.
inline sdp::TotalSystem sabotaged_system() {
  std::vector<sdp::FiniteGroup> factors = {sdp::cyclic_group(2), sdp::cyclic_group(2),
                                           sdp::cyclic_group(2)};
  std::map<std::pair<int, int>, std::vector<std::vector<sdp::Elem>>> actions;
  actions[{2, 1}] = {{0, 1}, {0, 1}};
  actions[{3, 1}] = {{0, 1}, {0, 1}};
  actions[{3, 2}] = {{0, 1}, {0, 0}};
  std::map<std::tuple<int, int, int>, std::vector<std::vector<sdp::Elem>>> brackets;
  brackets[{3, 2, 1}] = {{0, 0}, {0, 0}};
  return sdp::TotalSystem::create(std::move(factors), actions, brackets);
}

struct S4Fixture {
  sdp::FiniteGroup g;
  sdp::SdpCandidate cand;  // V4, <(012)>, <(01)>
  std::vector<Perm> perms;

  S4Fixture() : g(sdp::FiniteGroup::validate(perm_table(4))), perms(all_perms(4)) {
    cand.g = &g;
    cand.factors.push_back(sdp::generated_subgroup(
        g, {perm_index(perms, compose(cycle(4, {0, 1}), cycle(4, {2, 3}))),
            perm_index(perms, compose(cycle(4, {0, 2}), cycle(4, {1, 3})))}));
    cand.factors.push_back(sdp::generated_subgroup(g, {perm_index(perms, cycle(4, {0, 1, 2}))}));
    cand.factors.push_back(sdp::generated_subgroup(g, {perm_index(perms, cycle(4, {0, 1}))}));
  }
};

struct S3Fixture {
  sdp::FiniteGroup g;
  sdp::SdpCandidate cand;  // <(012)>, <(01)>
  std::vector<Perm> perms;

  S3Fixture() : g(sdp::FiniteGroup::validate(perm_table(3))), perms(all_perms(3)) {
    cand.g = &g;
    cand.factors.push_back(sdp::generated_subgroup(g, {perm_index(perms, cycle(3, {0, 1, 2}))}));
    cand.factors.push_back(sdp::generated_subgroup(g, {perm_index(perms, cycle(3, {0, 1}))}));
  }
};

}  // namespace fx
