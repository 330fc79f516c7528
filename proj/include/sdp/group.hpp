#pragma once

#include <optional>
#include <string>
#include <vector>

namespace sdp {

using Elem = int;

// Associative multiplication table with a two-sided unit; inverses optional.
// This is the most general target the homomorphism checks accept.
struct Monoid {
  int order = 0;
  std::vector<Elem> table;  // row-major, order x order
  Elem identity = 0;
  std::optional<std::vector<Elem>> inverse;  // present iff every element is invertible

  Elem mul(Elem x, Elem y) const { return table[static_cast<size_t>(x) * order + y]; }
  bool is_group() const { return inverse.has_value(); }
};

// A finite group as an explicit multiplication table over indices [0, order).
// Identity and inverse tables are derived at validation time, never stored in
// files.  Immutable after construction; safe to share across threads.
class FiniteGroup {
 public:
  // Checks the three group axioms exhaustively and throws Error with codes
  // NoIdentity / NoInverse / NotAssociative (lexicographically first witness)
  // on failure.
  static FiniteGroup validate(const std::vector<std::vector<Elem>>& table);

  int order() const { return order_; }
  Elem mul(Elem x, Elem y) const { return table_[static_cast<size_t>(x) * order_ + y]; }
  Elem inv(Elem x) const { return inv_[x]; }
  Elem identity() const { return identity_; }
  Elem conj(Elem k, Elem h) const { return mul(mul(k, h), inv(k)); }        // k h k^-1
  Elem comm(Elem k, Elem h) const { return mul(conj(k, h), inv(h)); }       // k h k^-1 h^-1

  bool is_abelian() const;
  std::vector<Elem> elements() const;  // 0..order-1
  std::vector<std::vector<Elem>> rows() const;  // table as list of rows (for io)
  Monoid as_monoid() const;

  bool operator==(const FiniteGroup& o) const {
    return order_ == o.order_ && table_ == o.table_;
  }

 private:
  FiniteGroup() = default;
  int order_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  Elem identity_ = 0;
};

// Monoid validation: associativity + unit; inverse table filled in when it
// exists.  Error codes NotAssociative / NoIdentity.
Monoid validate_monoid(const std::vector<std::vector<Elem>>& table);

// Subgroup of a fixed parent group.  Membership mask gives O(1) tests during
// closure sweeps.
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<Elem> members;   // sorted ascending
  std::vector<char> mask;      // size parent->order()

  bool contains(Elem x) const { return mask[static_cast<size_t>(x)] != 0; }
  int order() const { return static_cast<int>(members.size()); }
};

// Builds a subgroup from an explicit member list, checking closure under
// multiplication and inverses.  Error code NotASubgroup.
Subgroup make_subgroup(const FiniteGroup& g, std::vector<Elem> members);

// Closure of gens (plus the identity) under multiplication.
Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<Elem>& gens);

// Setwise product of the given subsets, in list order.  Result sorted.
std::vector<Elem> complex_product(const FiniteGroup& g,
                                  const std::vector<std::vector<Elem>>& subsets);

// { k h k^-1 : k in K, h in H }, sorted.
std::vector<Elem> conjugate_set(const FiniteGroup& g, const std::vector<Elem>& ks,
                                const std::vector<Elem>& hs);

// Subgroup generated by all commutators [k,h].
Subgroup commutator_subgroup(const FiniteGroup& g, const std::vector<Elem>& ks,
                             const std::vector<Elem>& hs);

// True iff g h g^-1 lies in H for every g in G, h in H.
bool is_normal(const FiniteGroup& g, const Subgroup& h);

// --- stock groups used by the CLI and tests -------------------------------

FiniteGroup cyclic_group(int n);
FiniteGroup klein_group();
FiniteGroup dihedral_group(int n);     // order 2n, n >= 1
FiniteGroup symmetric_group(int n);    // order n!, permutations in lexicographic order
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// Permutation helpers for the symmetric groups: index <-> image vector, in
// the same lexicographic order used by symmetric_group.
std::vector<int> perm_unrank(int n, int idx);
int perm_rank(const std::vector<int>& p);

}  // namespace sdp
