#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sdp/group.hpp"
#include "sdp/rng.hpp"

namespace sdp {

// An r-total system over factor groups H_1..H_r: an action table for every
// pair k > j and a bracket table for every triple k > j > i.  Actions are
// stored evaluated, as the composite (h_k, h_j) -> result in H_j; brackets as
// (h_k, h_j) -> element of H_i.  Immutable after construction.
class TotalSystem {
 public:
  // Tables keyed by their index pairs/triples; every required key must be
  // present, entries must lie in the codomain group.  Error codes
  // MissingTable / TableShape / EntryOutOfRange.
  static TotalSystem create(std::vector<FiniteGroup> factors,
                            const std::map<std::pair<int, int>, std::vector<std::vector<Elem>>>& actions,
                            const std::map<std::tuple<int, int, int>, std::vector<std::vector<Elem>>>& brackets);

  int rank() const { return static_cast<int>(factors_.size()); }
  const FiniteGroup& factor(int i) const { return factors_[static_cast<size_t>(i - 1)]; }
  const std::vector<FiniteGroup>& factors() const { return factors_; }

  // ^{phi_k^j(hk)} hj, for k > j
  Elem act(int k, int j, Elem hk, Elem hj) const {
    const Table& t = tables_[static_cast<size_t>(act_idx(k, j))];
    return t.data[static_cast<size_t>(hk) * t.cols + hj];
  }
  // [hk, hj]_{kj}^i, for k > j > i
  Elem br(int k, int j, int i, Elem hk, Elem hj) const {
    const Table& t = tables_[static_cast<size_t>(br_idx(k, j, i))];
    return t.data[static_cast<size_t>(hk) * t.cols + hj];
  }

  long long product_order() const;  // |H_1| * ... * |H_r|
  std::vector<std::vector<Elem>> action_rows(int k, int j) const;
  std::vector<std::vector<Elem>> bracket_rows(int k, int j, int i) const;

 private:
  struct Table {
    int cols = 0;
    std::vector<Elem> data;
  };
  int act_idx(int k, int j) const { return pair_slot_[static_cast<size_t>((k - 1) * rank() + (j - 1))]; }
  int br_idx(int k, int j, int i) const {
    return triple_slot_[static_cast<size_t>(((k - 1) * rank() + (j - 1)) * rank() + (i - 1))];
  }

  std::vector<FiniteGroup> factors_;
  std::vector<Table> tables_;
  std::vector<int> pair_slot_;    // (k,j) -> table slot
  std::vector<int> triple_slot_;  // (k,j,i) -> table slot

  friend TotalSystem trivial_system(std::vector<FiniteGroup> factors);
};

// One violated normalization requirement.  cond is one of 'i','ii','iii','iv'
// (stored as 1..4); k,j,i give the table, x the witness element.
struct NormViolation {
  int cond = 0;
  int k = 0, j = 0, i = 0;
  Elem witness = 0;
};

struct NormalizationReport {
  std::vector<NormViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks the four unit requirements:
//   (i)  act(k,j,1,h) == h            (identity of H_k acts as the identity map)
//   (ii) act(k,j,h,1) == 1            (every action fixes the unit)
//   (iii) br(k,j,i,1,h) == 1
//   (iv)  br(k,j,i,h,1) == 1
NormalizationReport check_normalized(const TotalSystem& s);

// All actions the identity map, all brackets constantly 1; mu becomes the
// direct-product law.
TotalSystem trivial_system(std::vector<FiniteGroup> factors);

// The (j+1)-system over H_1..H_j, H_k obtained by forgetting every factor
// other than the ones shown; H_k is reindexed to position j+1.  Requires
// 1 <= j < k <= r; error IndexOutOfRange.
TotalSystem restrict_system(const TotalSystem& s, int j, int k);

// The (r-1)-system over H_2..H_r obtained by forgetting everything involving
// H_1.  Requires r >= 2; error RankTooSmall.
TotalSystem quotient_system(const TotalSystem& s);

// Tables filled uniformly at random subject only to the normalization
// requirements (i)-(iv).  Such systems are almost never associative.
TotalSystem random_normalized_system(std::vector<FiniteGroup> factors, Rng& rng);

// Like random_normalized_system but every phi_k^j is a genuine action: the
// map h_k -> phi(h_k) is a monoid homomorphism into End(H_j).  Brackets stay
// uniformly random.  Used by the axiom adjudication oracle.
TotalSystem random_action_structured_system(std::vector<FiniteGroup> factors, Rng& rng);

// All endomorphism tables of g (value tables of group homomorphisms g -> g).
std::vector<std::vector<Elem>> endomorphism_tables(const FiniteGroup& g);

}  // namespace sdp
