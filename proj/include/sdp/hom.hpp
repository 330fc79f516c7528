#pragma once

#include <optional>
#include <vector>

#include "sdp/assoc.hpp"
#include "sdp/total_system.hpp"
#include "sdp/tuples.hpp"

namespace sdp {

// Per-factor maps f_i : H_i -> target assembled into f(h_1...h_r) =
// f(h_1)...f(h_r).  The target only needs to be an associative table with a
// unit; inverses are required by the commutator criterion alone.
struct AssembledMap {
  const TotalSystem* system = nullptr;
  Monoid target;
  std::vector<std::vector<Elem>> components;  // components[i][h] = f_{i+1}(h)

  Elem apply(const Tuple& t) const;
};

// Error ArityMismatch when the component tables do not line up with the
// factor orders or the target.
AssembledMap assemble(const TotalSystem& s, Monoid target,
                      std::vector<std::vector<Elem>> components);

struct HomWitness {
  Tuple u, v;
  Elem lhs, rhs;  // f(u.v) vs f(u)f(v)
};

struct HomCheckResult {
  bool holds = true;
  std::optional<HomWitness> witness;
};

// H[f; k, j]: f(mu(a_k, b_j)) == f(a_k) f(b_j) over elementary pairs, k >= j.
HomCheckResult check_hom_pair(const AssembledMap& m, int k, int j);

// All H[f; k, j] for r >= k >= j >= 1, cross-checked against the full
// brute-force homomorphism sweep over G x G (within the pair cap).
struct HomReport {
  bool pairwise = true;   // every H[f;k,j]
  bool brute = true;      // f(u.v) == f(u)f(v) for all tuples
  std::vector<std::pair<std::pair<int, int>, HomCheckResult>> pairs;
  std::optional<HomWitness> brute_witness;
};
HomReport check_hom_all(const AssembledMap& m, const CheckOptions& opt = {});

// Commutator criterion: with group target, homomorphic components and an
// associative system, f is a homomorphism iff it preserves the commutators
// [a_k, b_j] for k > j.  Where a pair's brackets are trivial the simplified
// conjugation form is additionally tested.  Error ComponentNotHom(i).
struct CommutatorReport {
  bool holds = true;
  bool simplified_checked = false;  // some pair had ^{H_k}H_j inside H_j
  std::optional<HomWitness> witness;
};
CommutatorReport check_commutator_criterion(const AssembledMap& m);

// f(mu_A(u, a_k)) == f(u) f(a_k); holds by construction, kept as a smoke test.
bool homspit_identity(const AssembledMap& m, const CheckOptions& opt = {});

}  // namespace sdp
