#include "pcpctl/markov.hpp"

namespace pcpctl {

LazyChain::LazyChain(PushdownSystem system) {
    auto issues = validate(system);
    if (!issues.empty()) {
        std::string message = "invalid pushdown system:";
        for (const auto& issue : issues) {
            message += " [" + issue.symbol + ": " + issue.message + ", sum " + to_string(issue.weight_sum) + "]";
        }
        throw InvalidSystemError(message);
    }
    system_ = std::make_shared<const PushdownSystem>(std::move(system));
}

Weight LazyChain::unit() const {
    return flavor() == Flavor::quantum ? Weight::amplitude(1) : Weight::probability(1);
}

std::vector<Successor> LazyChain::successors(const Configuration& state) const {
    if (state.empty()) return {Successor{state, unit()}};
    return pcpctl::successors(*system_, state);
}

std::optional<Weight> LazyChain::transition(const Configuration& from, const Configuration& to) const {
    for (auto& s : successors(from)) {
        if (s.config == to) return std::move(s.weight);
    }
    return std::nullopt;
}

Weight path_weight(const LazyChain& chain, const FinitePath& path) {
    if (path.states.empty()) throw NotAPathError("a path has at least one state");
    Weight total = chain.unit();
    for (std::size_t i = 0; i + 1 < path.states.size(); ++i) {
        auto step = chain.transition(path.states[i], path.states[i + 1]);
        if (!step) {
            throw NotAPathError("no transition " + chain.system().format(path.states[i]) + " -> " +
                                chain.system().format(path.states[i + 1]));
        }
        total = total * *step;
    }
    return total;
}

Rational cylinder_probability(const LazyChain& chain, const FinitePath& path) {
    // For amplitudes, |prod r_i e^{i eta_i}|^2 = prod r_i^2, which is exactly
    // the accumulated squared modulus.
    return path_weight(chain, path).mass();
}

PushdownSystem project_to_probabilistic(const PushdownSystem& quantum) {
    if (quantum.flavor() != Flavor::quantum) throw std::invalid_argument("projection expects a quantum system");
    PushdownSystem out(Flavor::probabilistic);
    for (const auto& name : quantum.alphabet()) out.intern(name);
    for (const auto& rule : quantum.rules()) {
        out.add_rule(rule.lhs, rule.rhs, Weight::probability(rule.weight.mass()));
    }
    return out;
}

}  // namespace pcpctl
