#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdp/total_system.hpp"
#include "sdp/tuples.hpp"

namespace sdp {

struct SdpCandidate {
  const FiniteGroup* g = nullptr;
  std::vector<Subgroup> factors;  // ordered; the order is part of the data
};

struct SdpReport {
  bool is_sdp = false;
  // failed condition: "normality" (with index i), "surjectivity", or
  // "uniqueness" (with index i), plus a witness element where applicable
  std::string failed;
  int failed_index = 0;
  std::optional<Elem> witness;
  // when is_sdp: group element -> factorization (h_1, ..., h_r)
  std::vector<Tuple> factorization;
};

// Checks that each partial product H_1...H_i is normal in G, that the full
// product is all of G, and that H_1...H_i meets H_{i+1} trivially.
SdpReport check_internal_sdp(const SdpCandidate& cand);

// Conditions 1' (conjugates land in the partial products) and 1'' (commutators
// do).  Requires the factors to generate G; error NotGenerating.  Both
// verdicts agree with condition 1 of check_internal_sdp.
struct TermwiseReport {
  bool conjugation_ok = false;  // ^{H_j} H_i subset of H_1...H_i for i < j
  bool commutator_ok = false;   // [H_j, H_i] subset of H_1...H_i for i < j
};
TermwiseReport check_termwise(const SdpCandidate& cand);

// True iff each H_1...H_i is a subgroup normal in H_1...H_{i+1} with trivial
// intersection and full product at every stage.  Weaker than the full check:
// intermediate products need not be normal in G.
bool check_iterated_2sdp(const SdpCandidate& cand);

// The unique (h_1, ..., h_r) with g = h_1 h_2 ... h_r.  Requires a prior
// passing check; error NotAnSdp.
Tuple factorize(const SdpCandidate& cand, const SdpReport& report, Elem g);

// Reads the action and bracket tables off the factorizations of the products
// h_k h_j.  Error ShapeViolation if some product factors outside positions
// {1..j, k}.
TotalSystem extract_total_system(const SdpCandidate& cand, const SdpReport& report);

// Rebuilds the external product from the extracted system and verifies that
// (h_1,...,h_r) -> h_1 ... h_r carries the reconstructed multiplication onto
// the group law bijectively, and that the reconstruction is associative.
bool roundtrip_verify(const SdpCandidate& cand);

}  // namespace sdp
