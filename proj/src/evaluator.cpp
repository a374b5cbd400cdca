#include "pcpctl/evaluator.hpp"

#include <deque>
#include <functional>

namespace pcpctl {

// ---------------------------------------------------------------------------
// HeadAssignment

HeadAssignment HeadAssignment::identity(const PushdownSystem& system) {
    HeadAssignment a;
    for (std::uint32_t s = 0; s < system.alphabet_size(); ++s) {
        std::vector<bool> heads(system.alphabet_size(), false);
        heads[s] = true;
        a.heads_.emplace(system.name(SymbolId{s}), std::move(heads));
    }
    return a;
}

void HeadAssignment::assign(const std::string& atom, const std::vector<SymbolId>& heads) {
    std::vector<bool> bits;
    for (auto h : heads) {
        if (h.value >= bits.size()) bits.resize(h.value + 1, false);
        bits[h.value] = true;
    }
    heads_[atom] = std::move(bits);
}

bool HeadAssignment::holds(const std::string& atom, const Configuration& config) const {
    auto it = heads_.find(atom);
    if (it == heads_.end()) throw std::invalid_argument("atomic proposition '" + atom + "' has no assignment");
    if (config.empty()) return false;
    auto h = config.head().value;
    return h < it->second.size() && it->second[h];
}

// ---------------------------------------------------------------------------
// ProbResult

std::optional<bool> ProbResult::decide(Comparison cmp, const Rational& bound) const {
    switch (cmp) {
        case Comparison::greater:
            if (lo > bound) return true;
            if (hi <= bound) return false;
            return std::nullopt;
        case Comparison::greater_equal:
            if (lo >= bound) return true;
            if (hi < bound) return false;
            return std::nullopt;
        case Comparison::equal:
            if (exact()) return lo == bound;
            if (bound < lo || bound > hi) return false;
            return std::nullopt;
    }
    return std::nullopt;
}

std::string to_string(const ProbResult& r) {
    if (r.exact()) return to_string(r.lo);
    return "[" + to_string(r.lo) + ", " + to_string(r.hi) + "]";
}

// ---------------------------------------------------------------------------
// Evaluator

// The memo is keyed by formula address, so it must not outlive the formulas
// of the outermost call.
struct EvalScope {
    Evaluator& ev;
    explicit EvalScope(Evaluator& e) : ev(e) {
        if (ev.depth_++ == 0) ev.memo_.clear();
    }
    ~EvalScope() { --ev.depth_; }
};

Evaluator::Evaluator(LazyChain chain, HeadAssignment assignment, EvalOptions options)
    : chain_(std::move(chain)), assignment_(std::move(assignment)), options_(options) {}

const StateFormula& Evaluator::state_operand(const PathPtr& p) const {
    if (!p || p->kind != PathFormula::Kind::state) {
        throw UnsupportedFormula("path operator applied to a path formula (PCTL* is not evaluated)");
    }
    return *p->state;
}

bool Evaluator::holds(const Configuration& config, const StateFormula& formula) {
    EvalScope scope(*this);
    auto& cache = memo_[&formula];
    if (auto it = cache.find(config); it != cache.end()) return it->second;

    bool value = false;
    switch (formula.kind) {
        case StateFormula::Kind::truth: value = true; break;
        case StateFormula::Kind::atom: value = assignment_.holds(formula.atom, config); break;
        case StateFormula::Kind::negation: value = !holds(config, *formula.left); break;
        case StateFormula::Kind::conjunction:
            value = holds(config, *formula.left) && holds(config, *formula.right);
            break;
        case StateFormula::Kind::probability: {
            try {
                value = compare(probability(config, *formula.path), formula.cmp, formula.bound);
            } catch (const BudgetExceeded&) {
                if (!options_.bounded_depth) throw;
                auto enclosure = bounded_probability(config, *formula.path, *options_.bounded_depth);
                auto decided = enclosure.decide(formula.cmp, formula.bound);
                if (!decided) {
                    throw Undetermined("bounded evaluation of " + to_string(formula) + " at " +
                                       chain_.system().format(config) + " gives " + to_string(enclosure) +
                                       ", which does not decide the comparison");
                }
                value = *decided;
            }
            break;
        }
    }
    cache.emplace(config, value);
    return value;
}

Rational Evaluator::next_probability(const Configuration& config, const StateFormula& operand) {
    Rational p = 0;
    for (const auto& s : chain_.successors(config)) {
        if (holds(s.config, operand)) p += s.weight.mass();
    }
    return p;
}

Rational Evaluator::probability(const Configuration& config, const PathFormula& formula) {
    EvalScope scope(*this);
    switch (formula.kind) {
        case PathFormula::Kind::next: return next_probability(config, state_operand(formula.left));
        case PathFormula::Kind::until: {
            auto graph = reachable_subgraph(config, state_operand(formula.left), state_operand(formula.right),
                                            options_.node_budget);
            return solve_until(graph).front();
        }
        default: throw UnsupportedFormula("only X and U path formulas are evaluated, got " + to_string(formula));
    }
}

ProbResult Evaluator::bounded_probability(const Configuration& config, const PathFormula& formula,
                                          std::size_t depth) {
    EvalScope scope(*this);
    if (formula.kind == PathFormula::Kind::next) {
        Rational p = next_probability(config, state_operand(formula.left));
        return {p, p};
    }
    if (formula.kind != PathFormula::Kind::until) {
        throw UnsupportedFormula("only X and U path formulas are evaluated, got " + to_string(formula));
    }
    const StateFormula& guard = state_operand(formula.left);
    const StateFormula& target = state_operand(formula.right);

    Rational reached = 0;
    Rational unresolved = 0;
    std::vector<std::pair<Configuration, Rational>> frontier{{config, Rational(1)}};
    for (std::size_t step = 0; step <= depth && !frontier.empty(); ++step) {
        std::vector<std::pair<Configuration, Rational>> next_frontier;
        std::unordered_map<Configuration, std::size_t, ConfigurationHash> index;
        for (auto& [state, mass] : frontier) {
            if (holds(state, target)) {
                reached += mass;
                continue;
            }
            if (!holds(state, guard)) continue;
            if (step == depth) {
                unresolved += mass;
                continue;
            }
            for (auto& s : chain_.successors(state)) {
                Rational m = mass * s.weight.mass();
                auto [it, inserted] = index.emplace(s.config, next_frontier.size());
                if (inserted) {
                    next_frontier.emplace_back(std::move(s.config), std::move(m));
                } else {
                    next_frontier[it->second].second += m;
                }
            }
        }
        frontier = std::move(next_frontier);
    }
    return {reached, reached + unresolved};
}

ProbResult Evaluator::path_probability(const Configuration& config, const PathFormula& formula, EvalMode mode,
                                       std::size_t depth) {
    EvalScope scope(*this);
    if (mode == EvalMode::bounded) return bounded_probability(config, formula, depth);
    Rational p = probability(config, formula);
    return {p, p};
}

WeightedGraph Evaluator::reachable_subgraph(const Configuration& config, const StateFormula& guard,
                                            const StateFormula& target, std::size_t budget) {
    EvalScope scope(*this);
    WeightedGraph g;
    std::unordered_map<Configuration, std::size_t, ConfigurationHash> index;
    std::deque<std::size_t> queue;

    auto add = [&](const Configuration& c) -> std::size_t {
        if (auto it = index.find(c); it != index.end()) return it->second;
        if (g.nodes.size() >= budget) throw BudgetExceeded(budget);
        auto kind = WeightedGraph::NodeKind::failure;
        if (holds(c, target)) {
            kind = WeightedGraph::NodeKind::target;
        } else if (holds(c, guard)) {
            kind = WeightedGraph::NodeKind::interior;
        }
        std::size_t id = g.nodes.size();
        g.nodes.push_back(c);
        g.kinds.push_back(kind);
        g.edges.emplace_back();
        index.emplace(c, id);
        if (kind == WeightedGraph::NodeKind::interior) queue.push_back(id);
        return id;
    };

    add(config);
    while (!queue.empty()) {
        std::size_t i = queue.front();
        queue.pop_front();
        Configuration here = g.nodes[i];
        for (const auto& s : chain_.successors(here)) {
            std::size_t j = add(s.config);
            auto& out = g.edges[i];
            bool merged = false;
            for (auto& [dst, p] : out) {
                if (dst == j) {
                    p += s.weight.mass();
                    merged = true;
                }
            }
            if (!merged) out.emplace_back(j, s.weight.mass());
        }
    }
    return g;
}

namespace {

// Solves A x = b in place by Gauss-Jordan elimination over the rationals.
std::vector<Rational> gauss_solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::logic_error("singular until system");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        Rational inv = 1 / a[col][col];
        for (std::size_t k = col; k < n; ++k) a[col][k] *= inv;
        b[col] *= inv;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rational factor = a[row][col];
            for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
            b[row] -= factor * b[col];
        }
    }
    return b;
}

}  // namespace

std::vector<Rational> Evaluator::solve_until(const WeightedGraph& g) {
    using Kind = WeightedGraph::NodeKind;
    const std::size_t n = g.nodes.size();
    std::vector<Rational> value(n, Rational(0));

    // Interior nodes that cannot reach a target have probability 0.
    std::vector<std::vector<std::size_t>> reverse(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [j, p] : g.edges[i]) reverse[j].push_back(i);
    }
    std::vector<bool> live(n, false);
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < n; ++i) {
        if (g.kinds[i] == Kind::target) {
            value[i] = 1;
            live[i] = true;
            stack.push_back(i);
        }
    }
    while (!stack.empty()) {
        std::size_t j = stack.back();
        stack.pop_back();
        for (auto i : reverse[j]) {
            if (!live[i]) {
                live[i] = true;
                stack.push_back(i);
            }
        }
    }
    auto unknown = [&](std::size_t i) { return g.kinds[i] == Kind::interior && live[i]; };

    // Iterative Tarjan over the unknown nodes; SCCs come out sinks first.
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> order(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> scc_stack;
    std::size_t counter = 0;

    auto solve_component = [&](const std::vector<std::size_t>& comp) {
        if (comp.size() == 1) {
            std::size_t i = comp.front();
            Rational self = 0, rest = 0;
            for (const auto& [j, p] : g.edges[i]) {
                if (j == i) {
                    self += p;
                } else {
                    rest += p * value[j];
                }
            }
            value[i] = rest / (1 - self);
            return;
        }
        std::unordered_map<std::size_t, std::size_t> local;
        for (std::size_t k = 0; k < comp.size(); ++k) local.emplace(comp[k], k);
        std::vector<std::vector<Rational>> a(comp.size(), std::vector<Rational>(comp.size(), Rational(0)));
        std::vector<Rational> b(comp.size(), Rational(0));
        for (std::size_t k = 0; k < comp.size(); ++k) {
            a[k][k] = 1;
            for (const auto& [j, p] : g.edges[comp[k]]) {
                if (auto it = local.find(j); it != local.end()) {
                    a[k][it->second] -= p;
                } else {
                    b[k] += p * value[j];
                }
            }
        }
        auto x = gauss_solve(std::move(a), std::move(b));
        for (std::size_t k = 0; k < comp.size(); ++k) value[comp[k]] = x[k];
    };

    for (std::size_t root = 0; root < n; ++root) {
        if (!unknown(root) || order[root] != unvisited) continue;
        std::vector<std::pair<std::size_t, std::size_t>> call{{root, 0}};
        order[root] = low[root] = counter++;
        scc_stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [v, edge] = call.back();
            if (edge < g.edges[v].size()) {
                std::size_t w = g.edges[v][edge].first;
                ++edge;
                if (!unknown(w)) continue;
                if (order[w] == unvisited) {
                    order[w] = low[w] = counter++;
                    scc_stack.push_back(w);
                    on_stack[w] = true;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], order[w]);
                }
                continue;
            }
            if (low[v] == order[v]) {
                std::vector<std::size_t> comp;
                std::size_t w;
                do {
                    w = scc_stack.back();
                    scc_stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != v);
                solve_component(comp);
            }
            std::size_t finished = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[finished]);
        }
    }
    return value;
}

bool eval_state(const LazyChain& chain, const Configuration& config, const StateFormula& formula,
                const HeadAssignment& assignment, EvalOptions options) {
    Evaluator ev(chain, assignment, options);
    return ev.holds(config, formula);
}

ProbResult path_probability(const LazyChain& chain, const Configuration& config, const PathFormula& formula,
                            const HeadAssignment& assignment, EvalMode mode, std::size_t depth,
                            EvalOptions options) {
    Evaluator ev(chain, assignment, options);
    return ev.path_probability(config, formula, mode, depth);
}

}  // namespace pcpctl
