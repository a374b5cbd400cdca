#include "pcpctl/reduction.hpp"

#include "pcpctl/oracle.hpp"

namespace pcpctl {

std::string_view to_string(Variant v) {
    switch (v) {
        case Variant::eq10: return "eq10";
        case Variant::remark9a: return "remark9a";
        case Variant::remark9b: return "remark9b";
    }
    return "?";
}

Variant parse_variant(std::string_view text) {
    if (text == "eq10") return Variant::eq10;
    if (text == "remark9a") return Variant::remark9a;
    if (text == "remark9b") return Variant::remark9b;
    throw std::invalid_argument("unknown variant '" + std::string(text) + "' (expected eq10, remark9a or remark9b)");
}

std::string pair_symbol(char x, char y) { return std::string{'(', x, ',', y, ')'}; }
std::string mark_symbol(char x, char y) { return "X_" + pair_symbol(x, y); }
std::string guess_symbol(std::size_t i, std::size_t j) {
    return "G(" + std::to_string(i) + "," + std::to_string(j) + ")";
}
std::string chain_symbol(std::size_t i) { return "N" + std::to_string(i); }

namespace {

Weight make_weight(Flavor flavor, const Rational& mass, PhaseForm phase) {
    if (flavor == Flavor::probabilistic) return Weight::probability(mass);
    return Weight::amplitude(mass, std::move(phase));
}

PhaseForm theta_term(const std::string& name, const Rational& coefficient = 1) {
    return PhaseForm::term(name, coefficient);
}

// n-ary disjunction shaped like the parser's output, so text round-trips.
StatePtr any_of(const std::vector<StatePtr>& items) {
    StatePtr acc = negation(items.front());
    for (std::size_t i = 1; i < items.size(); ++i) acc = conjunction(acc, negation(items[i]));
    return negation(acc);
}

const std::string kZ = "Z";
const std::string kZp{kBottom};

}  // namespace

std::vector<RuleSpec> build_guess_rules(const ModifiedPcpInstance& instance, Flavor flavor) {
    const std::size_t n = instance.size();
    const std::size_t m = instance.width();
    const Rational pick(1, n);
    const Rational again(1, n + 1);
    std::vector<RuleSpec> rules;

    for (std::size_t i = 1; i <= n; ++i) {
        rules.push_back({kZ, {guess_symbol(i, 1), kZp}, make_weight(flavor, pick, theta_term("t1", ratio(i, n)))});
    }
    for (std::size_t i = 1; i <= n; ++i) {
        const auto& [u, v] = instance.pair(i);
        for (std::size_t j = 1; j <= m; ++j) {
            rules.push_back({guess_symbol(i, j),
                             {guess_symbol(i, j + 1), pair_symbol(u[j - 1], v[j - 1])},
                             make_weight(flavor, 1, theta_term("t" + std::to_string(i) + "_" + std::to_string(j)))});
        }
        rules.push_back({guess_symbol(i, m + 1), {"C"}, make_weight(flavor, again, theta_term("t2", Rational(1, n + 1)))});
        for (std::size_t l = 1; l <= n; ++l) {
            rules.push_back({guess_symbol(i, m + 1),
                             {guess_symbol(l, 1)},
                             make_weight(flavor, again, theta_term("t2", ratio(l + 1, n + 1)))});
        }
    }
    return rules;
}

std::vector<RuleSpec> build_verify_rules(Flavor flavor) {
    const Rational half(1, 2);
    std::vector<RuleSpec> rules;
    rules.push_back({"C", {"N"}, make_weight(flavor, 1, theta_term("t3"))});
    rules.push_back({"N", {"F"}, make_weight(flavor, half, theta_term("t4", half))});
    rules.push_back({"N", {"S"}, make_weight(flavor, half, theta_term("t4"))});
    rules.push_back({"F", {}, make_weight(flavor, 1, theta_term("t5"))});
    rules.push_back({"S", {}, make_weight(flavor, 1, theta_term("t6"))});
    for (char x : kPairLetters) {
        for (char y : kPairLetters) {
            rules.push_back({pair_symbol(x, y), {mark_symbol(x, y)}, make_weight(flavor, half, theta_term("t7", half))});
            rules.push_back({pair_symbol(x, y), {}, make_weight(flavor, half, theta_term("t7"))});
        }
    }
    rules.push_back({kZp, {mark_symbol('A', 'B')}, make_weight(flavor, half, theta_term("t8", half))});
    rules.push_back({kZp, {mark_symbol('B', 'A')}, make_weight(flavor, half, theta_term("t8"))});
    for (char x : kPairLetters) {
        for (char y : kPairLetters) {
            rules.push_back({mark_symbol(x, y), {}, make_weight(flavor, 1, theta_term("t9"))});
        }
    }
    return rules;
}

namespace {

void intern_verify_alphabet(PushdownSystem& system, Variant variant, std::size_t chain_length) {
    for (const char* s : {"C", "N"}) system.intern(s);
    if (variant == Variant::remark9a) {
        for (std::size_t i = 1; i <= chain_length; ++i) system.intern(chain_symbol(i));
    }
    for (const char* s : {"F", "S"}) system.intern(s);
    for (char x : kPairLetters) {
        for (char y : kPairLetters) system.intern(pair_symbol(x, y));
    }
    for (char x : kPairLetters) {
        for (char y : kPairLetters) system.intern(mark_symbol(x, y));
    }
}

void add_rules(PushdownSystem& system, const std::vector<RuleSpec>& rules) {
    for (const auto& r : rules) system.add_rule(r.lhs, r.rhs, r.weight);
}

// Verify rules with the variant's replacement for the C rule.
std::vector<RuleSpec> variant_verify_rules(Flavor flavor, Variant variant, std::size_t chain_length) {
    auto rules = build_verify_rules(flavor);
    if (variant == Variant::eq10) return rules;
    rules.erase(rules.begin());  // C -> N
    std::vector<RuleSpec> head;
    if (variant == Variant::remark9a) {
        if (chain_length == 0) throw std::invalid_argument("remark9a needs at least one N_i link");
        head.push_back({"C", {chain_symbol(1)}, make_weight(flavor, 1, theta_term("t3"))});
        for (std::size_t i = 1; i < chain_length; ++i) {
            head.push_back({chain_symbol(i), {chain_symbol(i + 1)}, make_weight(flavor, 1, theta_term("t3"))});
        }
        head.push_back({chain_symbol(chain_length), {"N"}, make_weight(flavor, 1, theta_term("t3"))});
    } else {
        const Rational half(1, 2);
        head.push_back({"C", {"F"}, make_weight(flavor, half, theta_term("t3", half))});
        head.push_back({"C", {"S"}, make_weight(flavor, half, theta_term("t3"))});
    }
    rules.insert(rules.begin(), head.begin(), head.end());
    return rules;
}

}  // namespace

PushdownSystem verification_system(Flavor flavor) {
    PushdownSystem system(flavor);
    intern_verify_alphabet(system, Variant::eq10, 0);
    system.intern(kZp);
    add_rules(system, build_verify_rules(flavor));
    return system;
}

PathPtr phi1() {
    StatePtr guard = negation(atom("S"));
    std::vector<StatePtr> targets;
    for (char z : kPairLetters) {
        guard = conjunction(guard, negation(atom(mark_symbol('A', z))));
        guard = conjunction(guard, negation(atom(mark_symbol('B', z))));
        targets.push_back(atom(mark_symbol('A', z)));
    }
    return until(guard, any_of(targets));
}

PathPtr phi2() {
    StatePtr guard = negation(atom("F"));
    std::vector<StatePtr> targets;
    for (char z : kPairLetters) {
        guard = conjunction(guard, negation(atom(mark_symbol(z, 'A'))));
        guard = conjunction(guard, negation(atom(mark_symbol(z, 'B'))));
        targets.push_back(atom(mark_symbol(z, 'B')));
    }
    return until(guard, any_of(targets));
}

int theta(std::string_view letter) {
    if (letter == "A" || letter == kBottom) return 1;
    if (letter == "B") return 0;
    throw std::invalid_argument("theta is defined on A, B and Z' only");
}

int theta_bar(std::string_view letter) {
    if (letter == "B" || letter == kBottom) return 1;
    if (letter == "A") return 0;
    throw std::invalid_argument("theta_bar is defined on A, B and Z' only");
}

namespace {

Rational binary_weight(std::string_view word, int (*indicator)(std::string_view)) {
    if (word.size() >= kBottom.size() && word.substr(word.size() - kBottom.size()) == kBottom) {
        word.remove_suffix(kBottom.size());
    }
    Rational sum = 0;
    unsigned i = 1;
    for (char c : word) {
        if (c != 'A' && c != 'B') {
            throw std::invalid_argument("rho expects a word over {A,B}, got '" + std::string(word) + "'");
        }
        if (indicator(std::string_view(&c, 1))) sum += inverse_power_of_two(i);
        ++i;
    }
    if (indicator(kBottom)) sum += inverse_power_of_two(i);
    return sum;
}

}  // namespace

Rational rho(std::string_view word) { return binary_weight(word, &theta); }
Rational rho_bar(std::string_view word) { return binary_weight(word, &theta_bar); }

namespace {

void require_open_unit(const Rational& t) {
    if (t <= 0 || t >= 1) throw std::invalid_argument("t must satisfy 0 < t < 1, got " + to_string(t));
}

}  // namespace

StatePtr verify_condition(const Rational& t) {
    require_open_unit(t);
    return conjunction(probability(Comparison::equal, t / 2, phi1()),
                       probability(Comparison::equal, (1 - t) / 2, phi2()));
}

StatePtr witness_condition(const Rational& t, Variant variant) {
    switch (variant) {
        case Variant::eq10:
            return conjunction(atom("C"), probability(Comparison::equal, 1, next(verify_condition(t))));
        case Variant::remark9a:
            return conjunction(
                atom("C"),
                probability(Comparison::equal, 1,
                            until(truth(), probability(Comparison::equal, 1, next(verify_condition(t))))));
        case Variant::remark9b: {
            require_open_unit(t);
            return conjunction(conjunction(atom("C"), probability(Comparison::equal, t / 2, phi1())),
                               probability(Comparison::equal, (1 - t) / 2, phi2()));
        }
    }
    throw std::logic_error("unhandled variant");
}

StatePtr build_formula(const Rational& t, Variant variant) {
    return probability(Comparison::greater, 0, until(truth(), witness_condition(t, variant)));
}

ReductionOutput reduce(const ModifiedPcpInstance& instance, Flavor flavor, Variant variant, std::size_t chain_length) {
    PushdownSystem system(flavor);
    system.intern(kZ);
    system.intern(kZp);
    intern_verify_alphabet(system, variant, chain_length);
    for (std::size_t i = 1; i <= instance.size(); ++i) {
        for (std::size_t j = 1; j <= instance.width() + 1; ++j) system.intern(guess_symbol(i, j));
    }
    add_rules(system, build_guess_rules(instance, flavor));
    add_rules(system, variant_verify_rules(flavor, variant, chain_length));

    HeadAssignment assignment = HeadAssignment::identity(system);
    return ReductionOutput{std::move(system), phi1(), phi2(), std::move(assignment), variant};
}

std::string firsts(const PairStack& alpha) {
    std::string out;
    for (const auto& [x, y] : alpha) out.push_back(x);
    return out;
}

std::string seconds(const PairStack& alpha) {
    std::string out;
    for (const auto& [x, y] : alpha) out.push_back(y);
    return out;
}

std::string format_stack(const PairStack& alpha) {
    std::string out;
    for (const auto& [x, y] : alpha) out += pair_symbol(x, y) + " ";
    out += kBottom;
    return out;
}

Configuration stacked(const PushdownSystem& system, std::string_view head, const PairStack& alpha) {
    Configuration c;
    if (!head.empty()) c.stack.push_back(system.at(head));
    for (const auto& [x, y] : alpha) c.stack.push_back(system.at(pair_symbol(x, y)));
    c.stack.push_back(system.at(kBottom));
    return c;
}

GuessWitness guess_path_for(const ModifiedPcpInstance& instance, const IndexWord& w, const PushdownSystem& system) {
    w.check_range(instance.size());
    const std::size_t m = instance.width();
    GuessWitness witness;
    auto& states = witness.path.states;

    // The stack below the G head: pairs written so far (top-first) and Z'.
    PairStack written;
    auto with_head = [&](const std::string& head) { return stacked(system, head, written); };

    Configuration start;
    start.stack.push_back(system.at(kZ));
    states.push_back(start);
    for (std::size_t step = 0; step < w.size(); ++step) {
        const std::size_t i = w.indices()[step];
        states.push_back(with_head(guess_symbol(i, 1)));
        const auto& [u, v] = instance.pair(i);
        for (std::size_t j = 1; j <= m; ++j) {
            written.insert(written.begin(), {u[j - 1], v[j - 1]});
            states.push_back(with_head(guess_symbol(i, j + 1)));
        }
    }
    states.push_back(with_head("C"));
    witness.alpha = std::move(written);
    return witness;
}

// ---------------------------------------------------------------------------
// WitnessChecker

WitnessChecker::WitnessChecker(PcpInstance instance, Flavor flavor, Variant variant, std::size_t chain_length,
                               EvalOptions options)
    : instance_(std::move(instance)),
      modified_(pad_instance(instance_)),
      reduction_(reduce(modified_, flavor, variant, chain_length)),
      chain_(reduction_.system),
      options_(options) {}

WitnessReport WitnessChecker::check(const IndexWord& w, std::optional<Rational> t) const {
    if (t) require_open_unit(*t);
    const PushdownSystem& system = chain_.system();
    auto witness = guess_path_for(modified_, w, system);

    WitnessReport report{w, witness.alpha, cylinder_probability(chain_, witness.path), 0, 0, t,
                         false, false, 0, 0, false, std::nullopt};
    report.solution = check_solution(instance_, w);

    Evaluator evaluator(chain_, reduction_.assignment, options_);
    const Configuration at_n = stacked(system, "N", witness.alpha);
    report.p1 = evaluator.probability(at_n, *reduction_.phi1);
    report.p2 = evaluator.probability(at_n, *reduction_.phi2);
    if (t) {
        report.verdict = report.p1 == *t / 2 && report.p2 == (1 - *t) / 2;
        report.condition_holds =
            evaluator.holds(stacked(system, "C", witness.alpha), *witness_condition(*t, reduction_.variant));
    } else {
        report.verdict = report.p1 + report.p2 == Rational(1, 2);
    }

    const std::size_t depth = 2 * witness.alpha.size() + 8;
    auto o1 = oracle_until_probability(chain_, at_n, *reduction_.phi1, reduction_.assignment, depth);
    auto o2 = oracle_until_probability(chain_, at_n, *reduction_.phi2, reduction_.assignment, depth);
    report.oracle_p1 = o1.probability;
    report.oracle_p2 = o2.probability;
    report.oracle_agrees = o1.residual == 0 && o2.residual == 0 && o1.probability == report.p1 &&
                           o2.probability == report.p2;
    return report;
}

WitnessReport check_witness(const PcpInstance& instance, const IndexWord& w, std::optional<Rational> t, Flavor flavor) {
    return WitnessChecker(instance, flavor).check(w, std::move(t));
}

}  // namespace pcpctl
