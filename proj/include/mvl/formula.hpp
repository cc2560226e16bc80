#ifndef MVL_FORMULA_HPP
#define MVL_FORMULA_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace mvl {

// ── Terms ────────────────────────────────────────────────────────────────
// Var | Const | FuncApp. The parser produces Var for every bare identifier;
// interpretation resolves unbound variables against the structure's nullary
// functions, so Const is mainly for programmatic construction.

class Term;
using TermPtr = std::shared_ptr<const Term>;

enum class TermKind { Var, Const, FuncApp };

class Term {
public:
    TermKind kind;
    std::string name;
    std::vector<TermPtr> args;  // FuncApp only

    static TermPtr var(std::string name);
    static TermPtr constant(std::string name);
    static TermPtr func(std::string name, std::vector<TermPtr> args);
};

bool equal(const Term& a, const Term& b);
std::string render_term(const Term& t);

// ── Formulas ─────────────────────────────────────────────────────────────
// Core cases: Atom, Bottom, PredApp, Strong, Implies, Forall, Exists.
// Sugar cases: And, Or, Not, Iff, Top, StrongPow. Desugared formulas contain
// core cases only. Nodes are immutable and shared freely across threads.

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

enum class FormulaKind {
    Atom,
    Bottom,
    PredApp,
    Strong,
    Implies,
    Forall,
    Exists,
    And,
    Or,
    Not,
    Iff,
    Top,
    StrongPow,
};

class Formula {
public:
    FormulaKind kind;
    std::string name;            // Atom / PredApp name, Forall / Exists variable
    std::vector<TermPtr> terms;  // PredApp arguments
    FormulaPtr lhs, rhs;         // children; unary cases use lhs only
    long power = 0;              // StrongPow exponent, >= 1
};

FormulaPtr atom(std::string name);
FormulaPtr bottom();
FormulaPtr top();
// Collapses to atom() when terms is empty: nullary predicates are atoms.
FormulaPtr pred(std::string name, std::vector<TermPtr> terms);
FormulaPtr strong(FormulaPtr a, FormulaPtr b);
FormulaPtr implies(FormulaPtr a, FormulaPtr b);
FormulaPtr land(FormulaPtr a, FormulaPtr b);
FormulaPtr lor(FormulaPtr a, FormulaPtr b);
FormulaPtr lnot(FormulaPtr a);
FormulaPtr iff(FormulaPtr a, FormulaPtr b);
FormulaPtr strong_pow(FormulaPtr base, long n);
FormulaPtr forall(std::string var, FormulaPtr body);
FormulaPtr exists(std::string var, FormulaPtr body);

bool equal(const Formula& a, const Formula& b);
inline bool equal(const FormulaPtr& a, const FormulaPtr& b) { return equal(*a, *b); }

// Rewrites sugar into the core connectives:
//   And(a,b)       -> Strong(a, Implies(a,b))
//   Or(a,b)        -> And(Implies(a,b)->b, Implies(b,a)->a), expanded
//   Not(a)         -> Implies(a, Bottom)
//   Iff(a,b)       -> Strong(Implies(a,b), Implies(b,a))
//   Top            -> Implies(Bottom, Bottom)
//   StrongPow(a,n) -> n-fold Strong (left-nested)
FormulaPtr desugar(const FormulaPtr& f);

// Minimal parentheses under the precedence table ~ > & > /\ > \/ > -> > <->,
// -> right-associative, the other binary connectives left-associative.
// parse_formula(render_formula(f)) == f for every grammar-expressible f.
std::string render_formula(const Formula& f);
inline std::string render_formula(const FormulaPtr& f) { return render_formula(*f); }

std::set<std::string> free_variables(const Formula& f);
std::set<std::string> atom_names(const Formula& f);
std::set<std::string> predicate_names(const Formula& f);
bool is_propositional(const Formula& f);  // no PredApp, no quantifiers

struct Theory {
    std::string name;
    std::vector<FormulaPtr> formulas;
};

}  // namespace mvl

#endif
