#ifndef PCPCTL_FORMULA_HPP
#define PCPCTL_FORMULA_HPP

#include "pcpctl/rational.hpp"

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pcpctl {

// PCTL abstract syntax.
//
//   Phi ::= true | p | !Phi | Phi & Phi | P{~r}[phi]      ~ in {>, =, >=}
//   phi ::= X Phi | Phi U Phi
//
// Path formulas may additionally be built from boolean combinations and
// nested temporal operators (the PCTL* shape); those parse and print but the
// evaluator rejects them with UnsupportedFormula. Disjunction and false are
// sugar: a | b is !(!a & !b), false is !true.

enum class Comparison { greater, equal, greater_equal };

std::string_view to_string(Comparison cmp);
bool compare(const Rational& value, Comparison cmp, const Rational& bound);

struct StateFormula;
struct PathFormula;
using StatePtr = std::shared_ptr<const StateFormula>;
using PathPtr = std::shared_ptr<const PathFormula>;

struct StateFormula {
    enum class Kind { truth, atom, negation, conjunction, probability };

    Kind kind = Kind::truth;
    std::string atom;          // atom
    StatePtr left, right;      // negation (left), conjunction
    Comparison cmp = Comparison::equal;  // probability
    Rational bound;            // probability
    PathPtr path;              // probability
};

struct PathFormula {
    enum class Kind { next, until, state, negation, conjunction };

    Kind kind = Kind::next;
    PathPtr left, right;  // next (left), until, negation (left), conjunction
    StatePtr state;       // state
};

// Constructors.
StatePtr truth();
StatePtr falsity();
StatePtr atom(std::string name);
StatePtr negation(StatePtr f);
StatePtr conjunction(StatePtr a, StatePtr b);
StatePtr disjunction(StatePtr a, StatePtr b);
/// Throws std::invalid_argument unless 0 <= bound <= 1.
StatePtr probability(Comparison cmp, Rational bound, PathPtr path);

PathPtr next(StatePtr f);
PathPtr until(StatePtr guard, StatePtr target);
PathPtr lift(StatePtr f);

/// True for X Phi and Phi1 U Phi2 with state-formula operands, recursively
/// through every nested probability quantifier.
bool is_pctl(const PathFormula& f);
bool is_pctl(const StateFormula& f);

/// Round-trippable text in the parser's grammar.
std::string to_string(const StateFormula& f);
std::string to_string(const PathFormula& f);

/// Structural equality.
bool equal(const StateFormula& a, const StateFormula& b);
bool equal(const PathFormula& a, const PathFormula& b);

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::invalid_argument(message + " at offset " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Grammar (precedence low to high: |, &, U, unary):
///
///   expr    ::= or
///   or      ::= and ('|' and)*
///   and     ::= until ('&' until)*
///   until   ::= unary ('U' until)?
///   unary   ::= '!' unary | 'X' unary | primary
///   primary ::= 'true' | 'false' | ATOM | '(' expr ')' | 'P' '{' cmp RATIONAL '}' '[' expr ']'
///   cmp     ::= '>' | '=' | '>='
///
/// Atoms are stack-symbol names: an identifier ([A-Za-z_][A-Za-z0-9_']*),
/// optionally followed without whitespace by a group such as "(1,2)" or
/// "(A,.)", or a bare pair "(A,B)".
StatePtr parse_state_formula(std::string_view text);
PathPtr parse_path_formula(std::string_view text);

}  // namespace pcpctl

#endif  // PCPCTL_FORMULA_HPP
