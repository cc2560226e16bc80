#include "mvl/formula.hpp"

#include <stdexcept>

namespace mvl {

TermPtr Term::var(std::string name) {
    auto t = std::make_shared<Term>();
    t->kind = TermKind::Var;
    t->name = std::move(name);
    return t;
}

TermPtr Term::constant(std::string name) {
    auto t = std::make_shared<Term>();
    t->kind = TermKind::Const;
    t->name = std::move(name);
    return t;
}

TermPtr Term::func(std::string name, std::vector<TermPtr> args) {
    auto t = std::make_shared<Term>();
    t->kind = TermKind::FuncApp;
    t->name = std::move(name);
    t->args = std::move(args);
    return t;
}

bool equal(const Term& a, const Term& b) {
    if (a.kind != b.kind || a.name != b.name || a.args.size() != b.args.size()) return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!equal(*a.args[i], *b.args[i])) return false;
    return true;
}

std::string render_term(const Term& t) {
    if (t.kind != TermKind::FuncApp) return t.name;
    std::string out = t.name + "(";
    for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i) out += ", ";
        out += render_term(*t.args[i]);
    }
    return out + ")";
}

namespace {

FormulaPtr node(FormulaKind kind) {
    auto f = std::make_shared<Formula>();
    f->kind = kind;
    return f;
}

FormulaPtr binary(FormulaKind kind, FormulaPtr a, FormulaPtr b) {
    auto f = std::make_shared<Formula>();
    f->kind = kind;
    f->lhs = std::move(a);
    f->rhs = std::move(b);
    return f;
}

}  // namespace

FormulaPtr atom(std::string name) {
    auto f = std::make_shared<Formula>();
    f->kind = FormulaKind::Atom;
    f->name = std::move(name);
    return f;
}

FormulaPtr bottom() { return node(FormulaKind::Bottom); }
FormulaPtr top() { return node(FormulaKind::Top); }

FormulaPtr pred(std::string name, std::vector<TermPtr> terms) {
    if (terms.empty()) return atom(std::move(name));
    auto f = std::make_shared<Formula>();
    f->kind = FormulaKind::PredApp;
    f->name = std::move(name);
    f->terms = std::move(terms);
    return f;
}

FormulaPtr strong(FormulaPtr a, FormulaPtr b) { return binary(FormulaKind::Strong, std::move(a), std::move(b)); }
FormulaPtr implies(FormulaPtr a, FormulaPtr b) { return binary(FormulaKind::Implies, std::move(a), std::move(b)); }
FormulaPtr land(FormulaPtr a, FormulaPtr b) { return binary(FormulaKind::And, std::move(a), std::move(b)); }
FormulaPtr lor(FormulaPtr a, FormulaPtr b) { return binary(FormulaKind::Or, std::move(a), std::move(b)); }
FormulaPtr iff(FormulaPtr a, FormulaPtr b) { return binary(FormulaKind::Iff, std::move(a), std::move(b)); }

FormulaPtr lnot(FormulaPtr a) {
    auto f = std::make_shared<Formula>();
    f->kind = FormulaKind::Not;
    f->lhs = std::move(a);
    return f;
}

FormulaPtr strong_pow(FormulaPtr base, long n) {
    if (n < 1) throw std::invalid_argument("strong power exponent must be >= 1");
    auto f = std::make_shared<Formula>();
    f->kind = FormulaKind::StrongPow;
    f->lhs = std::move(base);
    f->power = n;
    return f;
}

FormulaPtr forall(std::string var, FormulaPtr body) {
    auto f = std::make_shared<Formula>();
    f->kind = FormulaKind::Forall;
    f->name = std::move(var);
    f->lhs = std::move(body);
    return f;
}

FormulaPtr exists(std::string var, FormulaPtr body) {
    auto f = std::make_shared<Formula>();
    f->kind = FormulaKind::Exists;
    f->name = std::move(var);
    f->lhs = std::move(body);
    return f;
}

bool equal(const Formula& a, const Formula& b) {
    if (a.kind != b.kind || a.name != b.name || a.power != b.power) return false;
    if (a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i)
        if (!equal(*a.terms[i], *b.terms[i])) return false;
    if ((a.lhs == nullptr) != (b.lhs == nullptr)) return false;
    if (a.lhs && !equal(*a.lhs, *b.lhs)) return false;
    if ((a.rhs == nullptr) != (b.rhs == nullptr)) return false;
    if (a.rhs && !equal(*a.rhs, *b.rhs)) return false;
    return true;
}

FormulaPtr desugar(const FormulaPtr& f) {
    switch (f->kind) {
        case FormulaKind::Atom:
        case FormulaKind::Bottom:
        case FormulaKind::PredApp:
            return f;
        case FormulaKind::Strong:
            return strong(desugar(f->lhs), desugar(f->rhs));
        case FormulaKind::Implies:
            return implies(desugar(f->lhs), desugar(f->rhs));
        case FormulaKind::Forall:
            return forall(f->name, desugar(f->lhs));
        case FormulaKind::Exists:
            return exists(f->name, desugar(f->lhs));
        case FormulaKind::And: {
            auto a = desugar(f->lhs), b = desugar(f->rhs);
            return strong(a, implies(a, b));
        }
        case FormulaKind::Or: {
            auto a = desugar(f->lhs), b = desugar(f->rhs);
            auto l = implies(implies(a, b), b);
            auto r = implies(implies(b, a), a);
            return strong(l, implies(l, r));  // l /\ r, expanded
        }
        case FormulaKind::Not:
            return implies(desugar(f->lhs), bottom());
        case FormulaKind::Iff: {
            auto a = desugar(f->lhs), b = desugar(f->rhs);
            return strong(implies(a, b), implies(b, a));
        }
        case FormulaKind::Top:
            return implies(bottom(), bottom());
        case FormulaKind::StrongPow: {
            auto base = desugar(f->lhs);
            FormulaPtr acc = base;
            for (long i = 1; i < f->power; ++i) acc = strong(acc, base);
            return acc;
        }
    }
    throw std::logic_error("unknown formula kind");
}

namespace {

// Binding strength; parenthesize a child whenever its level is below the
// context, or equal on the non-associating side.
enum Level : int { kIff = 1, kImp = 2, kOr = 3, kAnd = 4, kStrong = 5, kUnary = 6, kAtomic = 7 };

int level_of(const Formula& f) {
    switch (f.kind) {
        case FormulaKind::Iff: return kIff;
        case FormulaKind::Implies: return kImp;
        case FormulaKind::Or: return kOr;
        case FormulaKind::And: return kAnd;
        case FormulaKind::Strong: return kStrong;
        case FormulaKind::Not:
        case FormulaKind::Forall:
        case FormulaKind::Exists: return kUnary;
        default: return kAtomic;
    }
}

void render(const Formula& f, int min_level, std::string& out) {
    int lv = level_of(f);
    bool parens = lv < min_level;
    if (parens) out += "(";
    switch (f.kind) {
        case FormulaKind::Atom:
            out += f.name;
            break;
        case FormulaKind::Bottom:
            out += "0";
            break;
        case FormulaKind::Top:
            out += "1";
            break;
        case FormulaKind::PredApp: {
            out += f.name + "(";
            for (std::size_t i = 0; i < f.terms.size(); ++i) {
                if (i) out += ", ";
                out += render_term(*f.terms[i]);
            }
            out += ")";
            break;
        }
        case FormulaKind::StrongPow: {
            // The grammar attaches ^n to identifier applications only; other
            // bases are printed in their expanded n-fold form.
            if (f.lhs->kind == FormulaKind::Atom || f.lhs->kind == FormulaKind::PredApp) {
                render(*f.lhs, kAtomic, out);
                out += "^" + std::to_string(f.power);
            } else {
                render(*desugar(std::make_shared<Formula>(f)), min_level, out);
            }
            break;
        }
        case FormulaKind::Not:
            out += "~";
            render(*f.lhs, kUnary, out);
            break;
        case FormulaKind::Forall:
        case FormulaKind::Exists:
            out += (f.kind == FormulaKind::Forall ? "forall " : "exists ") + f.name + ". ";
            render(*f.lhs, kUnary, out);
            break;
        case FormulaKind::Iff:
        case FormulaKind::Implies:
        case FormulaKind::Or:
        case FormulaKind::And:
        case FormulaKind::Strong: {
            const char* op = f.kind == FormulaKind::Iff      ? " <-> "
                             : f.kind == FormulaKind::Implies ? " -> "
                             : f.kind == FormulaKind::Or      ? " \\/ "
                             : f.kind == FormulaKind::And     ? " /\\ "
                                                              : " & ";
            bool right_assoc = f.kind == FormulaKind::Implies;
            render(*f.lhs, right_assoc ? lv + 1 : lv, out);
            out += op;
            render(*f.rhs, right_assoc ? lv : lv + 1, out);
            break;
        }
    }
    if (parens) out += ")";
}

}  // namespace

std::string render_formula(const Formula& f) {
    std::string out;
    render(f, kIff, out);
    return out;
}

namespace {

void term_vars(const Term& t, std::set<std::string>& out) {
    if (t.kind == TermKind::Var) out.insert(t.name);
    for (const auto& a : t.args) term_vars(*a, out);
}

void free_vars(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
    switch (f.kind) {
        case FormulaKind::PredApp: {
            std::set<std::string> vars;
            for (const auto& t : f.terms) term_vars(*t, vars);
            for (const auto& v : vars)
                if (!bound.count(v)) out.insert(v);
            return;
        }
        case FormulaKind::Forall:
        case FormulaKind::Exists: {
            bool fresh = bound.insert(f.name).second;
            free_vars(*f.lhs, bound, out);
            if (fresh) bound.erase(f.name);
            return;
        }
        default:
            if (f.lhs) free_vars(*f.lhs, bound, out);
            if (f.rhs) free_vars(*f.rhs, bound, out);
            return;
    }
}

template <typename Fn>
void walk(const Formula& f, Fn&& fn) {
    fn(f);
    if (f.lhs) walk(*f.lhs, fn);
    if (f.rhs) walk(*f.rhs, fn);
}

}  // namespace

std::set<std::string> free_variables(const Formula& f) {
    std::set<std::string> bound, out;
    free_vars(f, bound, out);
    return out;
}

std::set<std::string> atom_names(const Formula& f) {
    std::set<std::string> out;
    walk(f, [&](const Formula& g) {
        if (g.kind == FormulaKind::Atom) out.insert(g.name);
    });
    return out;
}

std::set<std::string> predicate_names(const Formula& f) {
    std::set<std::string> out;
    walk(f, [&](const Formula& g) {
        if (g.kind == FormulaKind::PredApp || g.kind == FormulaKind::Atom) out.insert(g.name);
    });
    return out;
}

bool is_propositional(const Formula& f) {
    bool ok = true;
    walk(f, [&](const Formula& g) {
        if (g.kind == FormulaKind::PredApp || g.kind == FormulaKind::Forall || g.kind == FormulaKind::Exists)
            ok = false;
    });
    return ok;
}

}  // namespace mvl
