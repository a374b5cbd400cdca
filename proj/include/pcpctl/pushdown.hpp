#ifndef PCPCTL_PUSHDOWN_HPP
#define PCPCTL_PUSHDOWN_HPP

#include "pcpctl/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pcpctl {

enum class Flavor { probabilistic, quantum };

std::string_view to_string(Flavor flavor);

/// Index into a PushdownSystem's alphabet.
struct SymbolId {
    std::uint32_t value = 0;
    friend auto operator<=>(const SymbolId&, const SymbolId&) = default;
};

/// Stack content, element 0 is the top of the stack. Empty means epsilon.
struct Configuration {
    std::vector<SymbolId> stack;

    bool empty() const noexcept { return stack.empty(); }
    std::size_t size() const noexcept { return stack.size(); }
    SymbolId head() const { return stack.front(); }

    friend bool operator==(const Configuration&, const Configuration&) = default;
};

struct ConfigurationHash {
    std::size_t operator()(const Configuration& c) const noexcept;
};

/// Real linear form sum_k c_k * theta_k over named phase parameters.
/// Parameters are plain names ("t1" ... "t9", "t2_3", ...).
class PhaseForm {
public:
    PhaseForm() = default;
    static PhaseForm term(std::string parameter, Rational coefficient = 1);

    PhaseForm& operator+=(const PhaseForm& other);
    friend PhaseForm operator+(PhaseForm lhs, const PhaseForm& rhs) { return lhs += rhs; }
    friend bool operator==(const PhaseForm&, const PhaseForm&) = default;

    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<std::string, Rational>& terms() const noexcept { return terms_; }

private:
    std::map<std::string, Rational> terms_;  // zero coefficients are never stored
};

/// "1/2*t7+t5", "0" for the zero form. Parameters print in name order.
std::string to_string(const PhaseForm& phase);
/// Inverse of to_string. Throws std::invalid_argument.
PhaseForm parse_phase(std::string_view text);

/// Transition weight: either a probability, or an amplitude sqrt(q) * e^{i*phase}
/// stored as its squared modulus q and symbolic phase.
class Weight {
public:
    static Weight probability(Rational p);
    static Weight amplitude(Rational squared_modulus, PhaseForm phase = {});

    bool is_amplitude() const noexcept { return amplitude_; }
    /// Probability, or squared modulus of an amplitude.
    const Rational& mass() const noexcept { return mass_; }
    const PhaseForm& phase() const noexcept { return phase_; }

    /// Composition along a path: masses multiply, phases add. Mixing a
    /// probability with an amplitude throws std::logic_error.
    Weight operator*(const Weight& next) const;

    friend bool operator==(const Weight&, const Weight&) = default;

private:
    Weight(bool amplitude, Rational mass, PhaseForm phase)
        : amplitude_(amplitude), mass_(std::move(mass)), phase_(std::move(phase)) {}

    bool amplitude_ = false;
    Rational mass_;
    PhaseForm phase_;
};

/// "1/2" or "sq=1/2 phase=1/2*t7".
std::string to_string(const Weight& weight);

struct Rule {
    SymbolId lhs;
    std::vector<SymbolId> rhs;  // at most two symbols
    Weight weight;
};

/// Stateless probabilistic or quantum pushdown system. The stateful
/// variants are not constructed here: every reduction in this project only
/// needs the stateless classes.
class PushdownSystem {
public:
    explicit PushdownSystem(Flavor flavor) : flavor_(flavor) {}

    Flavor flavor() const noexcept { return flavor_; }

    /// Adds `name` to the alphabet if absent. Names must be nonempty, contain
    /// no whitespace and must not be "eps".
    SymbolId intern(std::string_view name);
    std::optional<SymbolId> find(std::string_view name) const;
    /// Throws std::out_of_range for unknown names.
    SymbolId at(std::string_view name) const;
    const std::string& name(SymbolId id) const { return names_.at(id.value); }
    std::size_t alphabet_size() const noexcept { return names_.size(); }
    const std::vector<std::string>& alphabet() const noexcept { return names_; }

    /// Throws std::invalid_argument when |rhs| > 2, the weight is zero or
    /// outside (0,1], or the weight kind does not match the flavor.
    void add_rule(std::string_view lhs, const std::vector<std::string>& rhs, Weight weight);
    void add_rule(SymbolId lhs, std::vector<SymbolId> rhs, Weight weight);

    const std::vector<Rule>& rules() const noexcept { return rules_; }
    /// Rules for one head symbol, in declaration order.
    std::vector<std::reference_wrapper<const Rule>> rules_for(SymbolId lhs) const;

    /// Parses a whitespace-separated configuration, top first. "eps" or an
    /// empty string is the empty stack. Throws std::invalid_argument on an
    /// unknown symbol.
    Configuration parse_configuration(std::string_view text) const;
    /// Space-separated, top first; "eps" for the empty stack.
    std::string format(const Configuration& config) const;

private:
    Flavor flavor_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, SymbolId> index_;
    std::vector<Rule> rules_;
    std::vector<std::vector<std::size_t>> by_lhs_;
};

struct ValidationIssue {
    std::string symbol;
    std::string message;
    Rational weight_sum;
};

/// Empty when the system is well-formed: every symbol has a rule, per-symbol
/// weight sums (probabilities or squared moduli) equal 1, and no right-hand
/// side is repeated for the same head.
std::vector<ValidationIssue> validate(const PushdownSystem& system);

struct NoHeadError : std::logic_error {
    NoHeadError() : std::logic_error("the empty configuration has no head symbol") {}
};

struct Successor {
    Configuration config;
    Weight weight;
};

/// Prefix rewriting of the head symbol, in rule declaration order. Throws
/// NoHeadError on the empty configuration.
std::vector<Successor> successors(const PushdownSystem& system, const Configuration& config);

}  // namespace pcpctl

#endif  // PCPCTL_PUSHDOWN_HPP
