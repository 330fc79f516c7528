#pragma once

#include <string>
#include <vector>

#include "sdp/total_system.hpp"

namespace sdp::sym {

// Symbolic products of bracket/action atoms.  An Expr is a product of atoms
// inside one factor group H_level; the empty Expr denotes the unit.  Letters
// a, b, c carry the levels k, j, i of the condition being evaluated.
//
// Conventions baked into the canonical form (matching the compact notation
// the axiom table is written in):
//   * nested actions merge into one composition chain: ^{x}(^{y}z) == ^{x.y}z;
//   * an action over a product of non-letter atoms distributes atomwise,
//     while a product of plain letters stays a single target (^{a}(bc));
//   * a composite actor entry splits into chain entries unless it is a plain
//     letter product (so ^{ab}c keeps the in-group product, distinct from the
//     composition ^{a.b}c);
//   * bracket operands are kept as whole expressions;
//   * unit operands vanish (the normalization rules applied structurally).
struct Atom;

struct Expr {
  int level = 0;
  std::vector<Atom> atoms;

  bool unit() const { return atoms.empty(); }
};

struct Atom {
  enum class Kind { base, bracket, action };
  Kind kind = Kind::base;
  int level = 0;  // which H_level the atom's value lives in

  char symbol = 0;  // base: one of 'a','b','c'

  Expr left, right;  // bracket operands; target level is this->level

  std::vector<Expr> actors;  // action composition chain, outermost first
  Expr target;               // action target; level equals this->level
};

bool operator==(const Atom& x, const Atom& y);
bool operator==(const Expr& x, const Expr& y);
inline bool operator!=(const Atom& x, const Atom& y) { return !(x == y); }
inline bool operator!=(const Expr& x, const Expr& y) { return !(x == y); }

// Canonicalizing constructors.
Expr base_expr(char symbol, int level);
Expr bracket_expr(const Expr& left, const Expr& right, int target_level);
Expr action_expr(std::vector<Expr> chain, const Expr& target);
Expr concat(const Expr& x, const Expr& y);

// Normal form of a symbolic product: one word per level, 1-indexed.
struct NormalForm {
  std::vector<Expr> levels;

  explicit NormalForm(int rank = 0);
  int rank() const { return static_cast<int>(levels.size()); }
  Expr& level(int i) { return levels[static_cast<size_t>(i - 1)]; }
  const Expr& level(int i) const { return levels[static_cast<size_t>(i - 1)]; }
  NormalForm resized(int rank) const;
};

bool operator==(const NormalForm& x, const NormalForm& y);

NormalForm letter_form(char symbol, int level, int rank);

// Conjugation operator applied symbolically; actor must live strictly above
// every nonunit level of v.  Error: LevelError.
NormalForm sym_phi(const Expr& actor, const NormalForm& v);

// The inductive multiplication applied symbolically.
NormalForm sym_mu(const NormalForm& u, const NormalForm& v);

// One componentwise condition A[k,j,i;l]: the level-l words of both sides of
// a.(b.c) = (a.b).c.
struct ConditionForm {
  int k = 0, j = 0, i = 0, l = 0;
  Expr lhs;  // level-l word of a.(b.c)
  Expr rhs;  // level-l word of (a.b).c
  bool vacuous = false;

  std::string name() const;
};

// Both sides share components above i; this is asserted internally (error
// code InternalVacuousnessViolation would signal an engine bug).  Returns the
// conditions for 1 <= l <= i.
std::vector<ConditionForm> generate_conditions(int k, int j, int i);

// Full normal forms of both sides, for the worked-example checks.
std::pair<NormalForm, NormalForm> evaluate_sides(int k, int j, int i);

// Canonical skeleton with concrete levels erased to their order pattern; two
// conditions are formally similar iff their keys compare equal.
struct SimilarityKey {
  std::string repr;
  bool operator==(const SimilarityKey& o) const { return repr == o.repr; }
  bool operator<(const SimilarityKey& o) const { return repr < o.repr; }
};
SimilarityKey similarity_key(const ConditionForm& c);

// The representative rows A[k,k-1,i;1] (1 <= i <= k-1) and A[k,k,k-1;1] for
// each 2 <= k <= max_k, in table order.
std::vector<ConditionForm> canonical_representatives(int max_k);

// Rendering: compact bracket/action notation; the two k=2 rows render as
// prose, vacuous rows as "1 = 1".
std::string render_expr(const Expr& e);
std::string render_equation(const ConditionForm& c);  // always symbolic
std::string render(const ConditionForm& c);           // prose special cases

// Parser for the rendered notation.  Letter levels are taken from (k,j,i).
Expr parse_expr(const std::string& text, int k, int j, int i);
ConditionForm parse_condition(int k, int j, int i, int l, const std::string& equation);

// Numeric evaluation of a condition in a concrete total system at one
// assignment a->ak, b->bj, c->ci.  Error: LevelMismatch.
std::pair<Elem, Elem> instantiate(const ConditionForm& c, const TotalSystem& s, Elem ak, Elem bj,
                                  Elem ci);
// True iff both sides agree for every assignment.
bool instantiate_all_equal(const ConditionForm& c, const TotalSystem& s);

// Bundled reference table of the k <= 5 representative axioms.
struct ReferenceRow {
  int k, j, i, l;
  const char* equation;  // in render_expr notation
  const char* prose;     // nullptr unless the row is conventionally stated as prose
};
const std::vector<ReferenceRow>& reference_axiom_table();

}  // namespace sdp::sym
