#ifndef PCPCTL_EVALUATOR_HPP
#define PCPCTL_EVALUATOR_HPP

#include "pcpctl/formula.hpp"
#include "pcpctl/markov.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace pcpctl {

/// Simple (head-based) valuation: atom p holds in a configuration iff its
/// head symbol is in H_p. The empty configuration satisfies no atom.
class HeadAssignment {
public:
    /// Every stack symbol is an atom true exactly on configurations it heads.
    static HeadAssignment identity(const PushdownSystem& system);

    /// Replaces H_atom.
    void assign(const std::string& atom, const std::vector<SymbolId>& heads);

    bool knows(const std::string& atom) const { return heads_.count(atom) != 0; }

    /// Throws std::invalid_argument for an atom that was never assigned.
    bool holds(const std::string& atom, const Configuration& config) const;

private:
    std::unordered_map<std::string, std::vector<bool>> heads_;
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(std::size_t budget)
        : std::runtime_error("exact evaluation explored more than " + std::to_string(budget) +
                             " states") {}
};

struct UnsupportedFormula : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A bounded-mode interval that does not decide a probability comparison.
struct Undetermined : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact value (lo == hi) or the bounded-mode enclosure [lo, hi].
struct ProbResult {
    Rational lo;
    Rational hi;

    bool exact() const { return lo == hi; }
    /// Three-valued comparison: nullopt when the interval straddles `bound`.
    std::optional<bool> decide(Comparison cmp, const Rational& bound) const;
};

std::string to_string(const ProbResult& r);

/// Guarded reachable fragment used by the until solver. Target nodes satisfy
/// the target formula, failure nodes satisfy neither formula, interior nodes
/// satisfy guard and not target. Only interior nodes have out-edges.
struct WeightedGraph {
    enum class NodeKind { interior, target, failure };

    std::vector<Configuration> nodes;
    std::vector<NodeKind> kinds;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> edges;
};

struct EvalOptions {
    std::size_t node_budget = 1'000'000;
    /// When set, a probability quantifier whose exact evaluation exceeds the
    /// node budget falls back to a depth-limited enclosure.
    std::optional<std::size_t> bounded_depth;
};

enum class EvalMode { exact, bounded };

/// PCTL evaluator over a lazily expanded chain. Sequential; keep one instance
/// per thread. State formula truth is memoized for the duration of one
/// outermost call.
class Evaluator {
public:
    Evaluator(LazyChain chain, HeadAssignment assignment, EvalOptions options = {});

    const LazyChain& chain() const noexcept { return chain_; }

    bool holds(const Configuration& config, const StateFormula& formula);

    /// Exact probability. Throws BudgetExceeded or UnsupportedFormula.
    Rational probability(const Configuration& config, const PathFormula& formula);

    /// Depth-limited enclosure of the probability: [reached, reached + unresolved].
    ProbResult bounded_probability(const Configuration& config, const PathFormula& formula, std::size_t depth);

    ProbResult path_probability(const Configuration& config, const PathFormula& formula, EvalMode mode,
                                std::size_t depth = 0);

    /// Breadth-first guarded exploration; throws BudgetExceeded when more than
    /// `budget` nodes are discovered.
    WeightedGraph reachable_subgraph(const Configuration& config, const StateFormula& guard,
                                     const StateFormula& target, std::size_t budget);

    /// Reachability probabilities for every node of `graph`.
    static std::vector<Rational> solve_until(const WeightedGraph& graph);

private:
    Rational next_probability(const Configuration& config, const StateFormula& operand);
    const StateFormula& state_operand(const PathPtr& p) const;

    LazyChain chain_;
    HeadAssignment assignment_;
    EvalOptions options_;
    std::unordered_map<const StateFormula*, std::unordered_map<Configuration, bool, ConfigurationHash>> memo_;
    std::size_t depth_ = 0;

    friend struct EvalScope;
};

// Free-function forms; each call uses a fresh Evaluator.
bool eval_state(const LazyChain& chain, const Configuration& config, const StateFormula& formula,
                const HeadAssignment& assignment, EvalOptions options = {});
ProbResult path_probability(const LazyChain& chain, const Configuration& config, const PathFormula& formula,
                            const HeadAssignment& assignment, EvalMode mode, std::size_t depth = 0,
                            EvalOptions options = {});

}  // namespace pcpctl

#endif  // PCPCTL_EVALUATOR_HPP
