#include "sdp/symbolic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "sdp/error.hpp"

namespace sdp::sym {

bool operator==(const Expr& x, const Expr& y) {
  return x.level == y.level && x.atoms == y.atoms;
}

bool operator==(const Atom& x, const Atom& y) {
  if (x.kind != y.kind || x.level != y.level) return false;
  switch (x.kind) {
    case Atom::Kind::base:
      return x.symbol == y.symbol;
    case Atom::Kind::bracket:
      return x.left == y.left && x.right == y.right;
    case Atom::Kind::action:
      return x.actors == y.actors && x.target == y.target;
  }
  return false;
}

namespace {

bool all_base(const Expr& e) {
  return std::all_of(e.atoms.begin(), e.atoms.end(),
                     [](const Atom& a) { return a.kind == Atom::Kind::base; });
}

// Composite actor entries split into chain entries; plain letter products
// (in-group products like ab) stay single entries.
void push_entry(std::vector<Expr>& chain, const Expr& e) {
  if (e.unit()) return;  // acting by a unit changes nothing
  if (e.atoms.size() > 1 && !all_base(e)) {
    for (const Atom& a : e.atoms) {
      Expr one;
      one.level = e.level;
      one.atoms.push_back(a);
      chain.push_back(std::move(one));
    }
  } else {
    chain.push_back(e);
  }
}

}  // namespace

Expr base_expr(char symbol, int level) {
  Expr e;
  e.level = level;
  Atom a;
  a.kind = Atom::Kind::base;
  a.symbol = symbol;
  a.level = level;
  e.atoms.push_back(std::move(a));
  return e;
}

Expr bracket_expr(const Expr& left, const Expr& right, int target_level) {
  Expr e;
  e.level = target_level;
  if (left.unit() || right.unit()) return e;  // [1,h] = [h,1] = 1
  if (!(left.level > right.level && right.level >= target_level))
    throw Error("LevelError", "bracket needs left level > right level >= target level",
                {{"left", left.level}, {"right", right.level}, {"target", target_level}});
  Atom a;
  a.kind = Atom::Kind::bracket;
  a.level = target_level;
  a.left = left;
  a.right = right;
  e.atoms.push_back(std::move(a));
  return e;
}

Expr concat(const Expr& x, const Expr& y) {
  if (x.unit()) return y;
  if (y.unit()) return x;
  if (x.level != y.level)
    throw Error("LevelError", "cannot concatenate words of different levels",
                {{"x_level", x.level}, {"y_level", y.level}});
  Expr e = x;
  e.atoms.insert(e.atoms.end(), y.atoms.begin(), y.atoms.end());
  return e;
}

Expr action_expr(std::vector<Expr> chain, const Expr& target) {
  Expr unit_out;
  unit_out.level = target.level;
  if (target.unit()) return unit_out;  // every action fixes the unit

  std::vector<Expr> entries;
  for (const Expr& e : chain) push_entry(entries, e);
  if (entries.empty()) return target;  // acting by units only

  if (target.atoms.size() == 1) {
    const Atom& t = target.atoms.front();
    if (t.kind == Atom::Kind::action) {
      // ^{x}(^{y}z) == ^{x.y}z
      std::vector<Expr> merged = entries;
      merged.insert(merged.end(), t.actors.begin(), t.actors.end());
      Atom a;
      a.kind = Atom::Kind::action;
      a.level = t.level;
      a.actors = std::move(merged);
      a.target = t.target;
      Expr e;
      e.level = target.level;
      e.atoms.push_back(std::move(a));
      return e;
    }
    Atom a;
    a.kind = Atom::Kind::action;
    a.level = target.level;
    a.actors = std::move(entries);
    a.target = target;
    Expr e;
    e.level = target.level;
    e.atoms.push_back(std::move(a));
    return e;
  }

  if (all_base(target)) {
    // a product of plain letters is acted on as a whole (the endomorphism
    // conditions live exactly here)
    Atom a;
    a.kind = Atom::Kind::action;
    a.level = target.level;
    a.actors = std::move(entries);
    a.target = target;
    Expr e;
    e.level = target.level;
    e.atoms.push_back(std::move(a));
    return e;
  }

  // distribute over the atoms of a composite word
  Expr out;
  out.level = target.level;
  for (const Atom& at : target.atoms) {
    Expr one;
    one.level = target.level;
    one.atoms.push_back(at);
    out = concat(out, action_expr(entries, one));
  }
  return out;
}

NormalForm::NormalForm(int rank) : levels(static_cast<size_t>(rank)) {
  for (int i = 1; i <= rank; ++i) levels[static_cast<size_t>(i - 1)].level = i;
}

NormalForm NormalForm::resized(int rank) const {
  NormalForm out(rank);
  for (int i = 1; i <= std::min(rank, this->rank()); ++i) out.level(i) = level(i);
  for (int i = rank + 1; i <= this->rank(); ++i)
    if (!level(i).unit())
      throw Error("LevelError", "resize would drop nonunit levels", {{"level", i}});
  return out;
}

bool operator==(const NormalForm& x, const NormalForm& y) {
  const int r = std::max(x.rank(), y.rank());
  for (int i = 1; i <= r; ++i) {
    const bool xe = i > x.rank() || x.level(i).unit();
    const bool ye = i > y.rank() || y.level(i).unit();
    if (xe != ye) return false;
    if (!xe && !(x.level(i) == y.level(i))) return false;
  }
  return true;
}

NormalForm letter_form(char symbol, int level, int rank) {
  NormalForm f(rank);
  f.level(level) = base_expr(symbol, level);
  return f;
}

namespace {

int top_level(const NormalForm& f) {
  for (int i = f.rank(); i >= 1; --i)
    if (!f.level(i).unit()) return i;
  return 0;
}

// Conjugation operator applied to a single letter (the level-t word of a
// tuple): brackets into levels 1..t-1 plus the action at level t.
NormalForm phi_letter(const Expr& actor, const Expr& letter, int rank) {
  const int t = letter.level;
  NormalForm out(rank);
  for (int s = 1; s < t; ++s) out.level(s) = bracket_expr(actor, letter, s);
  out.level(t) = action_expr({actor}, letter);
  return out;
}

}  // namespace

NormalForm sym_mu(const NormalForm& u, const NormalForm& v) {
  const int rank = std::max(u.rank(), v.rank());
  NormalForm uu = u.resized(rank), vv = v.resized(rank);
  const int m = std::max(top_level(uu), top_level(vv));
  if (m == 0) return NormalForm(rank);
  if (m == 1) {
    NormalForm out(rank);
    out.level(1) = concat(uu.level(1), vv.level(1));
    return out;
  }
  const Expr a = uu.level(m);
  const Expr b = vv.level(m);

  NormalForm inner(rank);
  bool have = false;
  for (int t = 1; t < m; ++t) {
    if (vv.level(t).unit()) continue;
    NormalForm ft(rank);
    if (a.unit())
      ft.level(t) = vv.level(t);
    else
      ft = phi_letter(a, vv.level(t), rank);
    inner = have ? sym_mu(inner, ft) : std::move(ft);
    have = true;
  }

  NormalForm left = uu;
  left.level(m) = Expr{};
  left.level(m).level = m;
  NormalForm res = have ? sym_mu(left, inner) : left;
  res.level(m) = concat(a, b);
  return res;
}

NormalForm sym_phi(const Expr& actor, const NormalForm& v) {
  const int k = actor.level;
  if (top_level(v) >= k)
    throw Error("LevelError", "actor level must exceed the rank of the target",
                {{"actor_level", k}, {"target_rank", top_level(v)}});
  NormalForm acc(v.rank());
  bool have = false;
  for (int t = 1; t < k && t <= v.rank(); ++t) {
    if (v.level(t).unit()) continue;
    NormalForm ft = phi_letter(actor, v.level(t), v.rank());
    acc = have ? sym_mu(acc, ft) : std::move(ft);
    have = true;
  }
  return acc;
}

std::string ConditionForm::name() const {
  std::ostringstream os;
  os << "A[" << k << "," << j << "," << i << ";" << l << "]";
  return os.str();
}

std::pair<NormalForm, NormalForm> evaluate_sides(int k, int j, int i) {
  if (!(k >= j && j >= i && i >= 1))
    throw Error("IndexError", "condition indices must satisfy k >= j >= i >= 1",
                {{"k", k}, {"j", j}, {"i", i}});
  NormalForm a = letter_form('a', k, k);
  NormalForm b = letter_form('b', j, k);
  NormalForm c = letter_form('c', i, k);
  NormalForm lhs = sym_mu(a, sym_mu(b, c));
  NormalForm rhs = sym_mu(sym_mu(a, b), c);
  return {lhs, rhs};
}

std::vector<ConditionForm> generate_conditions(int k, int j, int i) {
  auto [lhs, rhs] = evaluate_sides(k, j, i);
  for (int l = i + 1; l <= k; ++l)
    if (!(lhs.level(l) == rhs.level(l)))
      throw Error("InternalVacuousnessViolation",
                  "components above i differ; symbolic engine is inconsistent",
                  {{"k", k}, {"j", j}, {"i", i}, {"l", l}});
  std::vector<ConditionForm> out;
  for (int l = 1; l <= i; ++l) {
    ConditionForm c;
    c.k = k;
    c.j = j;
    c.i = i;
    c.l = l;
    c.lhs = lhs.level(l);
    c.rhs = rhs.level(l);
    c.vacuous = c.lhs == c.rhs;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<ConditionForm> canonical_representatives(int max_k) {
  if (max_k < 2) throw Error("IndexError", "representative table starts at k = 2", {{"max_k", max_k}});
  std::vector<ConditionForm> out;
  for (int k = 2; k <= max_k; ++k) {
    for (int i = 1; i <= k - 1; ++i) out.push_back(generate_conditions(k, k - 1, i).front());
    out.push_back(generate_conditions(k, k, k - 1).front());
  }
  return out;
}

// ---- canonical serialization and similarity keys --------------------------

namespace {

void collect_levels(const Expr& e, std::set<int>& out);

void collect_levels(const Atom& a, std::set<int>& out) {
  out.insert(a.level);
  if (a.kind == Atom::Kind::bracket) {
    collect_levels(a.left, out);
    collect_levels(a.right, out);
  } else if (a.kind == Atom::Kind::action) {
    for (const Expr& e : a.actors) collect_levels(e, out);
    collect_levels(a.target, out);
  }
}

void collect_levels(const Expr& e, std::set<int>& out) {
  for (const Atom& a : e.atoms) collect_levels(a, out);
  if (!e.atoms.empty()) out.insert(e.level);
}

void remap_levels(Expr& e, const std::map<int, int>& m);

void remap_levels(Atom& a, const std::map<int, int>& m) {
  a.level = m.at(a.level);
  if (a.kind == Atom::Kind::bracket) {
    remap_levels(a.left, m);
    remap_levels(a.right, m);
  } else if (a.kind == Atom::Kind::action) {
    for (Expr& e : a.actors) remap_levels(e, m);
    remap_levels(a.target, m);
  }
}

void remap_levels(Expr& e, const std::map<int, int>& m) {
  auto it = m.find(e.level);
  if (it != m.end()) e.level = it->second;
  for (Atom& a : e.atoms) remap_levels(a, m);
}

void serialize(const Expr& e, std::ostringstream& os);

void serialize(const Atom& a, std::ostringstream& os) {
  switch (a.kind) {
    case Atom::Kind::base:
      os << a.symbol << '@' << a.level;
      break;
    case Atom::Kind::bracket:
      os << "K[";
      serialize(a.left, os);
      os << '|';
      serialize(a.right, os);
      os << "]@" << a.level;
      break;
    case Atom::Kind::action:
      os << "X{";
      for (size_t n = 0; n < a.actors.size(); ++n) {
        if (n) os << ';';
        serialize(a.actors[n], os);
      }
      os << "}(";
      serialize(a.target, os);
      os << ")@" << a.level;
      break;
  }
}

void serialize(const Expr& e, std::ostringstream& os) {
  for (size_t n = 0; n < e.atoms.size(); ++n) {
    if (n) os << '.';
    serialize(e.atoms[n], os);
  }
}

std::string serialize(const Expr& e) {
  std::ostringstream os;
  serialize(e, os);
  return os.str();
}

}  // namespace

SimilarityKey similarity_key(const ConditionForm& c) {
  std::set<int> levels;
  collect_levels(c.lhs, levels);
  collect_levels(c.rhs, levels);
  std::map<int, int> dense;
  int next = 1;
  for (int lv : levels) dense[lv] = next++;
  Expr lhs = c.lhs, rhs = c.rhs;
  remap_levels(lhs, dense);
  remap_levels(rhs, dense);
  return SimilarityKey{serialize(lhs) + " == " + serialize(rhs)};
}

// ---- rendering -------------------------------------------------------------

namespace {

constexpr const char* kDot = "·";

std::string render_atom(const Atom& a);

std::string render_operand(const Expr& e) {
  if (e.unit()) return "1";
  std::string out;
  if (all_base(e)) {
    for (const Atom& a : e.atoms) out.push_back(a.symbol);
    return out;
  }
  for (size_t n = 0; n < e.atoms.size(); ++n) {
    if (n) out += kDot;
    out += render_atom(e.atoms[n]);
  }
  return out;
}

std::string render_target(const Expr& e) {
  if (e.atoms.size() == 1) {
    const Atom& a = e.atoms.front();
    if (a.kind == Atom::Kind::base) return std::string(1, a.symbol);
    if (a.kind == Atom::Kind::bracket) return render_atom(a);
    return "(" + render_atom(a) + ")";
  }
  return "(" + render_operand(e) + ")";
}

std::string render_atom(const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::base:
      return std::string(1, a.symbol);
    case Atom::Kind::bracket:
      return "[" + render_operand(a.left) + "," + render_operand(a.right) + "]^" +
             std::to_string(a.level);
    case Atom::Kind::action: {
      std::string out = "^{";
      for (size_t n = 0; n < a.actors.size(); ++n) {
        if (n) out += kDot;
        out += render_operand(a.actors[n]);
      }
      out += "}";
      out += render_target(a.target);
      return out;
    }
  }
  return {};
}

}  // namespace

std::string render_expr(const Expr& e) {
  if (e.unit()) return "1";
  std::string out;
  for (size_t n = 0; n < e.atoms.size(); ++n) {
    if (n) out += kDot;
    out += render_atom(e.atoms[n]);
  }
  return out;
}

std::string render_equation(const ConditionForm& c) {
  // canonical side order, independent of which side came from which grouping:
  // shorter word first (the unexpanded compound product reads better there),
  // ties broken structurally
  const Expr& x = c.lhs;
  const Expr& y = c.rhs;
  const bool swap = std::make_pair(y.atoms.size(), serialize(y)) <
                    std::make_pair(x.atoms.size(), serialize(x));
  const Expr& first = swap ? y : x;
  const Expr& second = swap ? x : y;
  return render_expr(first) + " = " + render_expr(second);
}

std::string render(const ConditionForm& c) {
  if (c.k == 2 && c.j == 1 && c.i == 1 && c.l == 1) return "Image(phi_2^1) in End(H_1)";
  if (c.k == 2 && c.j == 2 && c.i == 1 && c.l == 1) return "phi_2^1 is a homomorphism";
  if (c.vacuous) return "1 = 1";
  return render_equation(c);
}

// ---- parser ----------------------------------------------------------------

namespace {

struct Parser {
  const std::string& text;
  size_t pos = 0;
  int k, j, i;

  explicit Parser(const std::string& t, int k_, int j_, int i_) : text(t), k(k_), j(j_), i(i_) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c))
      throw Error("ParseError", std::string("expected '") + c + "'",
                  {{"at", pos}, {"text", text}});
  }

  bool eat_dot() {
    skip_ws();
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      return true;
    }
    // UTF-8 middle dot 0xC2 0xB7
    if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos]) == 0xC2 &&
        static_cast<unsigned char>(text[pos + 1]) == 0xB7) {
      pos += 2;
      return true;
    }
    return false;
  }

  int level_of(char sym) const {
    if (sym == 'a') return k;
    if (sym == 'b') return j;
    if (sym == 'c') return i;
    throw Error("ParseError", "unknown letter", {{"letter", std::string(1, sym)}});
  }

  int parse_int() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw Error("ParseError", "expected an integer", {{"at", pos}});
    return std::stoi(text.substr(start, pos - start));
  }

  bool at_letter() {
    skip_ws();
    return pos < text.size() && (text[pos] == 'a' || text[pos] == 'b' || text[pos] == 'c');
  }

  Expr parse_letter_run() {
    skip_ws();
    Expr e;
    bool first = true;
    while (pos < text.size() && (text[pos] == 'a' || text[pos] == 'b' || text[pos] == 'c')) {
      Expr one = base_expr(text[pos], level_of(text[pos]));
      if (first) {
        e = one;
        first = false;
      } else {
        e = concat(e, one);
      }
      ++pos;
    }
    return e;
  }

  Expr parse_factor() {
    skip_ws();
    if (pos >= text.size()) throw Error("ParseError", "unexpected end of input", {{"text", text}});
    char c = text[pos];
    if (c == '[') {
      ++pos;
      Expr left = parse_word(true);
      expect(',');
      Expr right = parse_word(true);
      expect(']');
      expect('^');
      int lvl = parse_int();
      return bracket_expr(left, right, lvl);
    }
    if (c == '^') {
      ++pos;
      expect('{');
      std::vector<Expr> chain;
      chain.push_back(parse_factor());
      while (eat_dot()) chain.push_back(parse_factor());
      expect('}');
      Expr target;
      skip_ws();
      if (pos < text.size() && text[pos] == '(') {
        ++pos;
        target = parse_word(false);
        expect(')');
      } else if (at_letter()) {
        // a single letter; longer runs must be parenthesized
        target = base_expr(text[pos], level_of(text[pos]));
        ++pos;
      } else {
        target = parse_factor();
      }
      return action_expr(std::move(chain), target);
    }
    if (c == '(') {
      ++pos;
      Expr e = parse_word(false);
      expect(')');
      return e;
    }
    if (c == 'a' || c == 'b' || c == 'c') return parse_letter_run();
    throw Error("ParseError", "unexpected character", {{"at", pos}, {"text", text}});
  }

  // stop_in_bracket: stop at ',' or ']' without consuming
  Expr parse_word(bool stop_in_bracket) {
    Expr e = parse_factor();
    for (;;) {
      size_t save = pos;
      if (eat_dot()) {
        Expr f = parse_factor();
        e = concat(e, f);
        continue;
      }
      skip_ws();
      if (stop_in_bracket && pos < text.size() && (text[pos] == ',' || text[pos] == ']')) break;
      pos = save;
      break;
    }
    return e;
  }
};

}  // namespace

Expr parse_expr(const std::string& text, int k, int j, int i) {
  Parser p(text, k, j, i);
  Expr e = p.parse_word(false);
  p.skip_ws();
  if (p.pos != text.size())
    throw Error("ParseError", "trailing input", {{"at", p.pos}, {"text", text}});
  return e;
}

ConditionForm parse_condition(int k, int j, int i, int l, const std::string& equation) {
  int depth = 0;
  size_t split = std::string::npos;
  for (size_t n = 0; n + 1 < equation.size(); ++n) {
    char c = equation[n];
    if (c == '[' || c == '{' || c == '(') ++depth;
    if (c == ']' || c == '}' || c == ')') --depth;
    if (depth == 0 && c == '=' && n > 0 && equation[n - 1] == ' ' && equation[n + 1] == ' ') {
      split = n;
      break;
    }
  }
  if (split == std::string::npos)
    throw Error("ParseError", "equation must contain ' = '", {{"text", equation}});
  ConditionForm c;
  c.k = k;
  c.j = j;
  c.i = i;
  c.l = l;
  c.lhs = parse_expr(equation.substr(0, split - 1), k, j, i);
  c.rhs = parse_expr(equation.substr(split + 2), k, j, i);
  c.vacuous = c.lhs == c.rhs;
  return c;
}

// ---- numeric instantiation --------------------------------------------------

namespace {

struct Assignment {
  Elem a, b, c;
};

Elem eval_expr(const Expr& e, const TotalSystem& s, const Assignment& as);

Elem eval_atom(const Atom& at, const TotalSystem& s, const Assignment& as) {
  switch (at.kind) {
    case Atom::Kind::base: {
      if (at.symbol == 'a') return as.a;
      if (at.symbol == 'b') return as.b;
      return as.c;
    }
    case Atom::Kind::bracket: {
      const Elem vl = eval_expr(at.left, s, as);
      const Elem vr = eval_expr(at.right, s, as);
      const int kl = at.left.level, kr = at.right.level;
      if (at.level < kr) return s.br(kl, kr, at.level, vl, vr);
      // the convention bracket [h_k, h_j]^j = ^{phi(h_k)}h_j h_j^{-1}
      const FiniteGroup& hj = s.factor(kr);
      return hj.mul(s.act(kl, kr, vl, vr), hj.inv(vr));
    }
    case Atom::Kind::action: {
      Elem v = eval_expr(at.target, s, as);
      for (auto it = at.actors.rbegin(); it != at.actors.rend(); ++it) {
        const Elem ve = eval_expr(*it, s, as);
        v = s.act(it->level, at.level, ve, v);
      }
      return v;
    }
  }
  return 0;
}

Elem eval_expr(const Expr& e, const TotalSystem& s, const Assignment& as) {
  const FiniteGroup& h = s.factor(e.level);
  Elem v = h.identity();
  for (const Atom& at : e.atoms) v = h.mul(v, eval_atom(at, s, as));
  return v;
}

}  // namespace

std::pair<Elem, Elem> instantiate(const ConditionForm& c, const TotalSystem& s, Elem ak, Elem bj,
                                  Elem ci) {
  if (c.k > s.rank())
    throw Error("LevelMismatch", "condition level exceeds the system rank",
                {{"k", c.k}, {"rank", s.rank()}});
  if (ak < 0 || ak >= s.factor(c.k).order() || bj < 0 || bj >= s.factor(c.j).order() || ci < 0 ||
      ci >= s.factor(c.i).order())
    throw Error("LevelMismatch", "assignment out of range", {{"a", ak}, {"b", bj}, {"c", ci}});
  Assignment as{ak, bj, ci};
  Expr lhs = c.lhs, rhs = c.rhs;
  if (lhs.level == 0) lhs.level = c.l;
  if (rhs.level == 0) rhs.level = c.l;
  return {eval_expr(lhs, s, as), eval_expr(rhs, s, as)};
}

bool instantiate_all_equal(const ConditionForm& c, const TotalSystem& s) {
  for (Elem a = 0; a < s.factor(c.k).order(); ++a)
    for (Elem b = 0; b < s.factor(c.j).order(); ++b)
      for (Elem x = 0; x < s.factor(c.i).order(); ++x) {
        auto [l, r] = instantiate(c, s, a, b, x);
        if (l != r) return false;
      }
  return true;
}

// ---- bundled reference table -------------------------------------------------

const std::vector<ReferenceRow>& reference_axiom_table() {
  static const std::vector<ReferenceRow> rows = {
      {2, 1, 1, 1, "^{a}(bc) = ^{a}b·^{a}c", "Image(phi_2^1) in End(H_1)"},
      {2, 2, 1, 1, "^{a·b}c = ^{ab}c", "phi_2^1 is a homomorphism"},

      {3, 2, 1, 1, "[a,b]^1·^{^{a}b·a}c = ^{a·b}c·[a,b]^1", nullptr},
      {3, 2, 2, 1, "[a,bc]^1 = [a,b]^1·^{^{a}b}[a,c]^1", nullptr},
      {3, 3, 2, 1, "[ab,c]^1 = ^{a}[b,c]^1·[a,^{b}c]^1", nullptr},

      {4, 3, 1, 1, "[a,b]^1·^{[a,b]^2·^{a}b·a}c = ^{a·b}c·[a,b]^1",
       nullptr},
      {4, 3, 2, 1,
       "[a,b]^1·^{[a,b]^2·^{a}b}[a,c]^1·^{[a,b]^2}[^{a}b,^{a}c]^1 = "
       "^{a}[b,c]^1·[a,^{b}c]^1·^{^{a·b}c}[a,b]^1",
       nullptr},
      {4, 3, 3, 1,
       "[a,bc]^1 = [a,b]^1·^{[a,b]^2·^{a}b}[a,c]^1·^{[a,b]^2}[^{a}b,[a,c]^2]^1",
       nullptr},
      {4, 4, 3, 1,
       "[ab,c]^1 = ^{a}[b,c]^1·[a,[b,c]^2]^1·^{^{a}[b,c]^2}[a,^{b}c]^1", nullptr},

      {5, 4, 1, 1,
       "[a,b]^1·^{[a,b]^2·[a,b]^3·^{a}b·a}c = ^{a·b}c·[a,b]^1",
       nullptr},
      {5, 4, 2, 1,
       "[a,b]^1·^{[a,b]^2·[a,b]^3·^{a}b}[a,c]^1·^{[a,b]^3}[^{a}b,^{a}c]^1"
       "·[[a,b]^3,^{^{a}b·a}c]^1 = "
       "^{a}[b,c]^1·[a,^{b}c]^1·^{^{a·b}c}[a,b]^1",
       nullptr},
      {5, 4, 3, 1,
       "[a,b]^1·^{[a,b]^2·[a,b]^3·^{a}b}[a,c]^1·^{[a,b]^2·[a,b]^3}"
       "[^{a}b,[a,c]^2]^1·^{[a,b]^3}[[a,b]^3,^{^{a}b}[a,c]^2]^1·"
       "^{[a,b]^2·^{[a,b]^3·^{a}b}[a,c]^2·[a,b]^3}[^{a}b,^{a}c]^1·"
       "^{[a,b]^2·^{[a,b]^3·^{a}b}[a,c]^2}[[a,b]^3,[^{a}b,^{a}c]^2]^1 = "
       "^{a}[b,c]^1·[a,[b,c]^2]^1·^{^{a}[b,c]^2}[a,^{b}c]^1·"
       "^{^{a}[b,c]^2·[a,^{b}c]^2·a·^{b}c}[a,b]^1·"
       "^{^{a}[b,c]^2·[a,^{b}c]^2}[^{a·b}c,[a,b]^2]^1",
       nullptr},
      {5, 4, 4, 1,
       "[a,bc]^1 = [a,b]^1·^{[a,b]^2·[a,b]^3·^{a}b}[a,c]^1·"
       "[^{a}b,[a,c]^2]^1·^{[a,b]^2}[[a,b]^3,^{^{a}b}[a,c]^2]^1·"
       "^{[a,b]^2·^{[a,b]^3·^{a}b}[a,c]^2·[a,b]^3}[^{a}b,[a,c]^3]^1·"
       "^{[a,b]^2·^{[a,b]^3·^{a}b}[a,c]^2}[[a,b]^3,[^{a}b,[a,c]^3]^2]^1",
       nullptr},
      {5, 5, 4, 1,
       "[ab,c]^1 = ^{a}[b,c]^1·[a,[b,c]^2]^1·^{^{a}[b,c]^2}[a,[b,c]^3]^1·"
       "^{^{a}[b,c]^2·[a,[b,c]^3]^2·^{a}[b,c]^3}[a,^{b}c]^1·"
       "^{^{a}[b,c]^2·[a,[b,c]^3]^2}[^{a}[b,c]^3,[a,^{b}c]^2]^1",
       nullptr},
  };
  return rows;
}

}  // namespace sdp::sym
