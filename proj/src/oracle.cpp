#include "pcpctl/oracle.hpp"

#include <functional>

namespace pcpctl {

namespace {

class Enumerator {
public:
    Enumerator(const LazyChain& chain, const HeadAssignment& assignment, std::size_t max_depth)
        : chain_(chain), assignment_(assignment), max_depth_(max_depth) {}

    Enumeration run(const Configuration& start, const PathFormula& formula) {
        Enumeration result;
        result.satisfied_mass = 0;
        result.residual = 0;
        switch (formula.kind) {
            case PathFormula::Kind::next: {
                const StateFormula& operand = state_of(formula.left);
                for (const auto& s : chain_.successors(start)) {
                    if (!satisfied(s.config, operand)) continue;
                    Weight w = chain_.unit() * s.weight;
                    result.satisfied_mass += w.mass();
                    result.paths.push_back({FinitePath{{start, s.config}}, w, w.mass(), true});
                }
                return result;
            }
            case PathFormula::Kind::until: {
                guard_ = &state_of(formula.left);
                target_ = &state_of(formula.right);
                std::vector<Configuration> prefix{start};
                walk(prefix, chain_.unit(), result);
                return result;
            }
            default: throw std::invalid_argument("oracle handles X and U path formulas only");
        }
    }

private:
    static const StateFormula& state_of(const PathPtr& p) {
        if (p->kind != PathFormula::Kind::state) throw std::invalid_argument("oracle handles PCTL path formulas only");
        return *p->state;
    }

    void walk(std::vector<Configuration>& prefix, const Weight& weight, Enumeration& out) {
        const Configuration& here = prefix.back();
        if (satisfied(here, *target_)) {
            out.satisfied_mass += weight.mass();
            out.paths.push_back({FinitePath{prefix}, weight, weight.mass(), true});
            return;
        }
        if (!satisfied(here, *guard_)) return;
        // eps only loops to itself, so the until can no longer resolve
        if (here.empty()) return;
        if (prefix.size() - 1 == max_depth_) {
            out.residual += weight.mass();
            return;
        }
        for (const auto& s : chain_.successors(here)) {
            prefix.push_back(s.config);
            walk(prefix, weight * s.weight, out);
            prefix.pop_back();
        }
    }

    bool satisfied(const Configuration& c, const StateFormula& f) {
        switch (f.kind) {
            case StateFormula::Kind::truth: return true;
            case StateFormula::Kind::atom: return assignment_.holds(f.atom, c);
            case StateFormula::Kind::negation: return !satisfied(c, *f.left);
            case StateFormula::Kind::conjunction: return satisfied(c, *f.left) && satisfied(c, *f.right);
            case StateFormula::Kind::probability: {
                Enumerator nested(chain_, assignment_, max_depth_);
                auto e = nested.run(c, *f.path);
                const Rational& lo = e.satisfied_mass;
                const Rational hi = e.satisfied_mass + e.residual;
                if (e.residual == 0) return compare(lo, f.cmp, f.bound);
                if (f.cmp == Comparison::greater && lo > f.bound) return true;
                if (f.cmp == Comparison::greater_equal && lo >= f.bound) return true;
                if (hi < f.bound || (f.cmp == Comparison::greater && hi == f.bound)) return false;
                if (f.cmp == Comparison::equal && (f.bound < lo || f.bound > hi)) return false;
                throw std::runtime_error("oracle depth " + std::to_string(max_depth_) +
                                         " too small to decide a nested probability quantifier");
            }
        }
        return false;
    }

    const LazyChain& chain_;
    const HeadAssignment& assignment_;
    std::size_t max_depth_;
    const StateFormula* guard_ = nullptr;
    const StateFormula* target_ = nullptr;
};

}  // namespace

Enumeration enumerate_satisfying_paths(const LazyChain& chain, const Configuration& start, const PathFormula& formula,
                                       const HeadAssignment& assignment, std::size_t max_depth) {
    if (max_depth == 0) throw std::invalid_argument("max_depth must be at least 1");
    return Enumerator(chain, assignment, max_depth).run(start, formula);
}

OracleResult oracle_until_probability(const LazyChain& chain, const Configuration& start, const PathFormula& formula,
                                      const HeadAssignment& assignment, std::size_t max_depth) {
    auto e = enumerate_satisfying_paths(chain, start, formula, assignment, max_depth);
    return {e.satisfied_mass, e.residual};
}

std::string format_report(const PushdownSystem& system, const Enumeration& e) {
    std::string out;
    for (const auto& record : e.paths) {
        out += to_string(record.probability);
        if (record.weight.is_amplitude()) out += " (phase " + to_string(record.weight.phase()) + ")";
        out += ": ";
        for (std::size_t i = 0; i < record.path.states.size(); ++i) {
            if (i) out += " -> ";
            out += system.format(record.path.states[i]);
        }
        out += '\n';
    }
    out += "paths: " + std::to_string(e.paths.size()) + "\n";
    out += "total: " + to_string(e.satisfied_mass) + "\n";
    out += "residual: " + to_string(e.residual) + "\n";
    return out;
}

}  // namespace pcpctl
