#pragma once

#include <span>
#include <vector>

#include "sdp/total_system.hpp"

namespace sdp {

// An element of the product set G = H_1 x ... x H_r, stored as one index per
// factor.  tuples[i] lives in factor i+1.
using Tuple = std::vector<Elem>;

Tuple unit_tuple(const TotalSystem& s);
Tuple elementary_tuple(const TotalSystem& s, int i, Elem h);
bool is_unit(const TotalSystem& s, const Tuple& t);

// Largest index with a nontrivial entry; 0 for the unit tuple.
int rank_of(const TotalSystem& s, const Tuple& t);
// Smallest index with a nontrivial entry; r+1 for the unit tuple.
int corank_of(const TotalSystem& s, const Tuple& t);

bool noninterfering(const TotalSystem& s, const Tuple& u, const Tuple& v);

// Concatenation product, defined when rank(u) <= corank(v); the overlapping
// entry (if any) is multiplied in its factor group.  Error: Interfering.
Tuple mu_a(const TotalSystem& s, const Tuple& u, const Tuple& v);

// mu_a over a noninterfering family, left to right.
Tuple mu_a_family(const TotalSystem& s, const std::vector<Tuple>& ts);

// Conjugation operator: the tuple
//   [a_k,h_j]^1 . [a_k,h_j]^2 ... [a_k,h_j]^{j-1} . ^{phi_k^j(a_k)} h_j
// of rank <= j.  Requires k > j; error IndexError.
Tuple phi_conj(const TotalSystem& s, int k, Elem ak, int j, Elem hj);

// Commutator bracket phi_{a_k}(h_j) . h_j^{-1}; component j is
// ^{phi_k^j(a_k)}h_j h_j^{-1}.  Requires k > j.
Tuple commutator_bracket(const TotalSystem& s, int k, Elem ak, int j, Elem hj);

// Extended conjugation operator on tuples of rank < k, defined by the
// left-parenthesized recursion over the letters of v.  Error: RankError.
Tuple phi_ext(const TotalSystem& s, int k, Elem ak, const Tuple& v);

// The full magma multiplication mu = mu_r.
Tuple mu(const TotalSystem& s, const Tuple& u, const Tuple& v);

// The stage-m multiplication mu_m; u and v must have rank <= m.  mu_m is an
// extension chain, so this agrees with mu on its domain (tested, not assumed).
Tuple mu_rank(const TotalSystem& s, const Tuple& u, const Tuple& v, int m);

// Left-parenthesized fold of mu over a nonempty word of tuples.
Tuple mu_word(const TotalSystem& s, const std::vector<Tuple>& ts);

// Tuple <-> dense index, component 1 most significant so that integer order
// equals lexicographic order on tuples.
long long tuple_index(const TotalSystem& s, const Tuple& t);
Tuple tuple_of_index(const TotalSystem& s, long long idx);

// Cached full multiplication table of mu over G, indexed by tuple_index.
// Observable results are identical with or without the cache.
struct MuTable {
  long long n = 0;
  std::vector<int> tab;  // n*n entries
  int at(long long x, long long y) const { return tab[static_cast<size_t>(x) * n + y]; }
};

// Error SizeCapExceeded when |G| > cap.  parallel selects the OpenMP kernel;
// both produce identical tables.
MuTable build_mu_table(const TotalSystem& s, long long cap, bool parallel = true);

}  // namespace sdp
