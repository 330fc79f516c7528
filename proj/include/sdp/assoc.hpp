#pragma once

#include <optional>
#include <vector>

#include "sdp/tuples.hpp"

namespace sdp {

struct AssocCondition {
  int k = 0, j = 0, i = 0;
  std::optional<int> l;  // componentwise condition when present
};

struct AssocWitness {
  Tuple a, b, c;
  Tuple lhs;  // a . (b . c)
  Tuple rhs;  // (a . b) . c
};

struct CheckResult {
  bool holds = true;
  std::optional<AssocWitness> witness;  // lexicographically first failure
};

struct CheckOptions {
  long long pair_cap = 4096;   // cap on |G| for checks quadratic in |G|
  long long brute_cap = 512;   // cap on |G| for the |G|^3 sweep
  bool parallel = true;
};

// Elementary condition A[k,j,i]: mu(a_k, mu(b_j, c_i)) == mu(mu(a_k, b_j), c_i)
// over single-factor triples.  Any index order is accepted; increasing orders
// hold automatically.
CheckResult check_elementary(const TotalSystem& s, int k, int j, int i);

// Every A[k,j,i] with r >= k >= j >= i >= 1, in lexicographic order.
std::vector<std::pair<AssocCondition, CheckResult>> check_all_elementary(const TotalSystem& s);
bool all_hold(const std::vector<std::pair<AssocCondition, CheckResult>>& results);

// Exhaustive associativity over all |G|^3 triples of tuples.
CheckResult brute_force_associative(const TotalSystem& s, const CheckOptions& opt = {});

// Exhaustive associativity over triples from R_m (tuples of rank <= m).
CheckResult brute_force_on_rank(const TotalSystem& s, int m, const CheckOptions& opt = {});

// phi_{a_k}(v . w) == phi_{a_k}(v) . phi_{a_k}(w) over H_k x R_{k-1} x R_{k-1};
// equivalent to A[H_k, R_{k-1}, R_{k-1}].
CheckResult check_phi_multiplicative(const TotalSystem& s, int k, const CheckOptions& opt = {});

// phi_{a_k b_k}(w) == (phi_{a_k} o phi_{b_k})(w) over H_k x H_k x R_{k-1};
// equivalent to A[H_k, H_k, R_{k-1}].
CheckResult check_phi_composition(const TotalSystem& s, int k, const CheckOptions& opt = {});

// The l-th component only of A[k,j,i], over single-factor triples.
// Requires r >= k >= j >= i >= 1 and 1 <= l <= r.
CheckResult check_component(const TotalSystem& s, int k, int j, int i, int l);

// Generic A[U,V,W] over set selectors: factor(t) = elementary tuples from
// H_t, band(t) = all tuples of rank <= t, all() = the whole product set.
struct TupleSet {
  enum class Kind { factor, band, all } kind = Kind::all;
  int t = 0;
  static TupleSet factor(int t) { return {Kind::factor, t}; }
  static TupleSet band(int t) { return {Kind::band, t}; }
  static TupleSet all() { return {Kind::all, 0}; }
};
CheckResult check_triples(const TotalSystem& s, TupleSet u, TupleSet v, TupleSet w,
                          const CheckOptions& opt = {});

}  // namespace sdp
