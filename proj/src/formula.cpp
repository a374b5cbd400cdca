#include "pcpctl/formula.hpp"

#include <vector>

namespace pcpctl {

std::string_view to_string(Comparison cmp) {
    switch (cmp) {
        case Comparison::greater: return ">";
        case Comparison::equal: return "=";
        case Comparison::greater_equal: return ">=";
    }
    return "?";
}

bool compare(const Rational& value, Comparison cmp, const Rational& bound) {
    switch (cmp) {
        case Comparison::greater: return value > bound;
        case Comparison::equal: return value == bound;
        case Comparison::greater_equal: return value >= bound;
    }
    return false;
}

StatePtr truth() { return std::make_shared<const StateFormula>(); }

StatePtr falsity() { return negation(truth()); }

StatePtr atom(std::string name) {
    StateFormula f;
    f.kind = StateFormula::Kind::atom;
    f.atom = std::move(name);
    return std::make_shared<const StateFormula>(std::move(f));
}

StatePtr negation(StatePtr inner) {
    StateFormula f;
    f.kind = StateFormula::Kind::negation;
    f.left = std::move(inner);
    return std::make_shared<const StateFormula>(std::move(f));
}

StatePtr conjunction(StatePtr a, StatePtr b) {
    StateFormula f;
    f.kind = StateFormula::Kind::conjunction;
    f.left = std::move(a);
    f.right = std::move(b);
    return std::make_shared<const StateFormula>(std::move(f));
}

StatePtr disjunction(StatePtr a, StatePtr b) {
    return negation(conjunction(negation(std::move(a)), negation(std::move(b))));
}

StatePtr probability(Comparison cmp, Rational bound, PathPtr path) {
    if (bound < 0 || bound > 1) throw std::invalid_argument("probability bound " + to_string(bound) + " outside [0,1]");
    StateFormula f;
    f.kind = StateFormula::Kind::probability;
    f.cmp = cmp;
    f.bound = std::move(bound);
    f.path = std::move(path);
    return std::make_shared<const StateFormula>(std::move(f));
}

PathPtr lift(StatePtr s) {
    PathFormula f;
    f.kind = PathFormula::Kind::state;
    f.state = std::move(s);
    return std::make_shared<const PathFormula>(std::move(f));
}

PathPtr next(StatePtr s) {
    PathFormula f;
    f.kind = PathFormula::Kind::next;
    f.left = lift(std::move(s));
    return std::make_shared<const PathFormula>(std::move(f));
}

PathPtr until(StatePtr guard, StatePtr target) {
    PathFormula f;
    f.kind = PathFormula::Kind::until;
    f.left = lift(std::move(guard));
    f.right = lift(std::move(target));
    return std::make_shared<const PathFormula>(std::move(f));
}

bool is_pctl(const StateFormula& f) {
    switch (f.kind) {
        case StateFormula::Kind::truth:
        case StateFormula::Kind::atom: return true;
        case StateFormula::Kind::negation: return is_pctl(*f.left);
        case StateFormula::Kind::conjunction: return is_pctl(*f.left) && is_pctl(*f.right);
        case StateFormula::Kind::probability: return is_pctl(*f.path);
    }
    return false;
}

bool is_pctl(const PathFormula& f) {
    auto state_operand = [](const PathPtr& p) { return p->kind == PathFormula::Kind::state && is_pctl(*p->state); };
    switch (f.kind) {
        case PathFormula::Kind::next: return state_operand(f.left);
        case PathFormula::Kind::until: return state_operand(f.left) && state_operand(f.right);
        default: return false;
    }
}

bool equal(const StateFormula& a, const StateFormula& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case StateFormula::Kind::truth: return true;
        case StateFormula::Kind::atom: return a.atom == b.atom;
        case StateFormula::Kind::negation: return equal(*a.left, *b.left);
        case StateFormula::Kind::conjunction: return equal(*a.left, *b.left) && equal(*a.right, *b.right);
        case StateFormula::Kind::probability:
            return a.cmp == b.cmp && a.bound == b.bound && equal(*a.path, *b.path);
    }
    return false;
}

bool equal(const PathFormula& a, const PathFormula& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case PathFormula::Kind::state: return equal(*a.state, *b.state);
        case PathFormula::Kind::next:
        case PathFormula::Kind::negation: return equal(*a.left, *b.left);
        case PathFormula::Kind::until:
        case PathFormula::Kind::conjunction: return equal(*a.left, *b.left) && equal(*a.right, *b.right);
    }
    return false;
}

// ---------------------------------------------------------------------------
// Printing. Levels: 1 or, 2 and, 3 until, 4 unary, 5 primary.

namespace {

// Leaves of a left-leaning conjunction chain.
void conjuncts(const StatePtr& f, std::vector<StatePtr>& out) {
    if (f->kind == StateFormula::Kind::conjunction) {
        conjuncts(f->left, out);
        out.push_back(f->right);
    } else {
        out.push_back(f);
    }
}

// Disjuncts when f is !(!d1 & ... & !dn) with n >= 2.
std::vector<StatePtr> disjuncts(const StateFormula& f) {
    if (f.kind != StateFormula::Kind::negation || f.left->kind != StateFormula::Kind::conjunction) return {};
    std::vector<StatePtr> leaves;
    conjuncts(f.left, leaves);
    std::vector<StatePtr> out;
    for (const auto& leaf : leaves) {
        if (leaf->kind != StateFormula::Kind::negation) return {};
        out.push_back(leaf->left);
    }
    return out;
}

int level(const StateFormula& f) {
    switch (f.kind) {
        case StateFormula::Kind::conjunction: return 2;
        case StateFormula::Kind::negation:
            if (f.left->kind == StateFormula::Kind::truth) return 5;
            return disjuncts(f).empty() ? 4 : 1;
        default: return 5;
    }
}

int level(const PathFormula& f) {
    switch (f.kind) {
        case PathFormula::Kind::state: return level(*f.state);
        case PathFormula::Kind::conjunction: return 2;
        case PathFormula::Kind::until: return 3;
        default: return 4;
    }
}

void print(const PathFormula& f, int min_level, std::string& out);

void print(const StateFormula& f, int min_level, std::string& out) {
    const bool parens = level(f) < min_level;
    if (parens) out += '(';
    switch (f.kind) {
        case StateFormula::Kind::truth: out += "true"; break;
        case StateFormula::Kind::atom: out += f.atom; break;
        case StateFormula::Kind::conjunction:
            print(*f.left, 2, out);
            out += " & ";
            print(*f.right, 3, out);
            break;
        case StateFormula::Kind::negation: {
            auto ds = disjuncts(f);
            if (f.left->kind == StateFormula::Kind::truth) {
                out += "false";
            } else if (ds.empty()) {
                out += '!';
                print(*f.left, 4, out);
            } else {
                for (std::size_t i = 0; i < ds.size(); ++i) {
                    if (i) out += " | ";
                    print(*ds[i], 2, out);
                }
            }
            break;
        }
        case StateFormula::Kind::probability:
            out += "P{";
            out += to_string(f.cmp);
            out += to_string(f.bound);
            out += "}[";
            print(*f.path, 0, out);
            out += ']';
            break;
    }
    if (parens) out += ')';
}

void print(const PathFormula& f, int min_level, std::string& out) {
    if (f.kind == PathFormula::Kind::state) {
        print(*f.state, min_level, out);
        return;
    }
    const bool parens = level(f) < min_level;
    if (parens) out += '(';
    switch (f.kind) {
        case PathFormula::Kind::next:
            out += "X ";
            print(*f.left, 4, out);
            break;
        case PathFormula::Kind::until:
            print(*f.left, 4, out);
            out += " U ";
            print(*f.right, 3, out);
            break;
        case PathFormula::Kind::negation:
            out += '!';
            print(*f.left, 4, out);
            break;
        case PathFormula::Kind::conjunction:
            print(*f.left, 2, out);
            out += " & ";
            print(*f.right, 3, out);
            break;
        case PathFormula::Kind::state: break;
    }
    if (parens) out += ')';
}

}  // namespace

std::string to_string(const StateFormula& f) {
    std::string out;
    print(f, 0, out);
    return out;
}

std::string to_string(const PathFormula& f) {
    std::string out;
    print(f, 0, out);
    return out;
}

}  // namespace pcpctl
