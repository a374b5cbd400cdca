#ifndef PCPCTL_ORACLE_HPP
#define PCPCTL_ORACLE_HPP

#include "pcpctl/evaluator.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace pcpctl {

// Brute-force reference semantics: explicit enumeration of path prefixes with
// per-step weight multiplication. Shares nothing with Evaluator beyond the
// chain's successor function and the head assignment; no graph is built and
// no linear system is solved.

struct PathRecord {
    FinitePath path;
    Weight weight;        // product of step weights (amplitude product for quantum chains)
    Rational probability; // weight.mass()
    bool satisfies = true;
};

struct Enumeration {
    std::vector<PathRecord> paths;  // minimal satisfying prefixes, depth-first in rule order
    Rational satisfied_mass;
    Rational residual;  // mass of prefixes still unresolved at max_depth
};

/// Minimal finite paths of at most `max_depth` transitions that resolve the
/// path formula positively. For U, a prefix ends at the first state meeting
/// the target; prefixes through a state meeting neither operand, or reaching
/// the absorbing empty configuration without meeting the target, are dropped.
/// Nested probability quantifiers are evaluated by recursive enumeration with
/// the same depth; std::runtime_error if such a nested value stays unresolved.
Enumeration enumerate_satisfying_paths(const LazyChain& chain, const Configuration& start, const PathFormula& formula,
                                       const HeadAssignment& assignment, std::size_t max_depth);

struct OracleResult {
    Rational probability;  // enumerated mass; exact when residual == 0
    Rational residual;
};

OracleResult oracle_until_probability(const LazyChain& chain, const Configuration& start, const PathFormula& formula,
                                      const HeadAssignment& assignment, std::size_t max_depth);

/// One line per path: "1/32: F (A,A) Z' -> (A,A) Z' -> ...", then totals.
std::string format_report(const PushdownSystem& system, const Enumeration& e);

}  // namespace pcpctl

#endif  // PCPCTL_ORACLE_HPP
