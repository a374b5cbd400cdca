#include "items.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace pcpctl::kernels {

namespace detail {

namespace {

std::size_t power(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    while (exp--) r *= base;
    return r;
}

// Splits a shortest-first index into (length, code within that length).
std::pair<std::size_t, std::size_t> locate(std::size_t index, std::size_t base) {
    std::size_t length = 1, block = base;
    while (index >= block) {
        index -= block;
        ++length;
        block *= base;
    }
    return {length, index};
}

std::vector<std::size_t> digits(std::size_t code, std::size_t base, std::size_t length) {
    std::vector<std::size_t> d(length);
    for (std::size_t i = length; i-- > 0;) {
        d[i] = code % base;
        code /= base;
    }
    return d;
}

std::size_t cumulative(std::size_t base, std::size_t max_length) {
    std::size_t total = 0;
    for (std::size_t l = 1; l <= max_length; ++l) total += power(base, l);
    return total;
}

}  // namespace

std::string word_at(std::size_t index) {
    auto [length, code] = locate(index, 2);
    std::string w;
    for (auto d : digits(code, 2, length)) w += d ? 'B' : 'A';
    return w;
}

std::size_t word_count(std::size_t max_length) { return cumulative(2, max_length); }

PairStack stack_at(std::size_t index) {
    auto [length, code] = locate(index, 9);
    PairStack alpha;
    for (auto d : digits(code, 9, length)) alpha.emplace_back(kPairLetters[d / 3], kPairLetters[d % 3]);
    return alpha;
}

IndexWord index_word_at(std::size_t index, std::size_t pairs) {
    auto [length, code] = locate(index, pairs);
    auto d = digits(code, pairs, length);
    for (auto& x : d) ++x;
    return IndexWord(std::move(d));
}

std::size_t index_word_count(std::size_t pairs, std::size_t max_k) { return cumulative(pairs, max_k); }

std::string check_rho_pair(const std::string& x, const std::string& y) {
    bool sum_is_one = rho(x) + rho_bar(y) == 1;
    if (sum_is_one == (x == y)) return {};
    return "x=" + x + " y=" + y + ": rho+rho_bar=" + to_string(rho(x) + rho_bar(y));
}

StackContext::StackContext(Flavor flavor, bool with_oracle)
    : chain(verification_system(flavor)),
      assignment(HeadAssignment::identity(chain.system())),
      phi1(pcpctl::phi1()),
      phi2(pcpctl::phi2()),
      with_oracle(with_oracle) {}

std::string check_stack(const StackContext& ctx, Evaluator& evaluator, const PairStack& alpha) {
    const auto& system = ctx.chain.system();
    const Rational want1 = rho(trim(firsts(alpha)));
    const Rational want2 = rho_bar(trim(seconds(alpha)));
    const Configuration f = stacked(system, "F", alpha);
    const Configuration s = stacked(system, "S", alpha);

    std::ostringstream err;
    Rational got1 = evaluator.probability(f, *ctx.phi1);
    Rational got2 = evaluator.probability(s, *ctx.phi2);
    if (got1 != want1) err << " phi1=" << to_string(got1) << " want " << to_string(want1);
    if (got2 != want2) err << " phi2=" << to_string(got2) << " want " << to_string(want2);
    if (ctx.with_oracle) {
        const std::size_t depth = 2 * alpha.size() + 8;
        auto o1 = oracle_until_probability(ctx.chain, f, *ctx.phi1, ctx.assignment, depth);
        auto o2 = oracle_until_probability(ctx.chain, s, *ctx.phi2, ctx.assignment, depth);
        if (o1.residual != 0 || o1.probability != got1) err << " oracle phi1=" << to_string(o1.probability);
        if (o2.residual != 0 || o2.probability != got2) err << " oracle phi2=" << to_string(o2.probability);
    }
    std::string e = err.str();
    return e.empty() ? e : format_stack(alpha) + ":" + e;
}

std::string check_witness_item(const WitnessChecker& checker, const IndexWord& w) {
    // alpha sits on the stack last pair first, so t is rho of the reversed word
    std::string u = concatenate(checker.modified(), w).first;
    std::reverse(u.begin(), u.end());
    const Rational t = rho(trim(u));
    auto report = checker.check(w, t);
    std::ostringstream err;
    if (report.verdict != report.solution) err << " verdict " << report.verdict << " vs direct " << report.solution;
    if (!report.oracle_agrees) err << " oracle disagrees";
    if (report.condition_holds != report.verdict) err << " condition at C differs from verdict";
    if ((report.p1 + report.p2 == Rational(1, 2)) != report.solution) err << " sum test differs";
    std::string e = err.str();
    return e.empty() ? e : "w=" + to_string(w) + ":" + e;
}

void record(SweepResult& result, const std::string& failure) {
    ++result.checked;
    if (failure.empty()) return;
    ++result.failures;
    if (result.samples.size() < kMaxSamples) result.samples.push_back(failure);
}

void merge(SweepResult& into, SweepResult&& part) {
    into.checked += part.checked;
    into.failures += part.failures;
    for (auto& s : part.samples) {
        if (into.samples.size() < kMaxSamples) into.samples.push_back(std::move(s));
    }
}

}  // namespace detail

using namespace detail;

std::size_t stack_count(std::size_t max_length) { return detail::index_word_count(9, max_length); }
std::size_t word_pair_count(std::size_t max_length) { return word_count(max_length) * word_count(max_length); }

SweepResult rho_sweep_serial(std::size_t max_length) {
    SweepResult result;
    const std::size_t n = word_count(max_length);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string x = word_at(i);
        for (std::size_t j = 0; j < n; ++j) record(result, check_rho_pair(x, word_at(j)));
    }
    return result;
}

SweepResult stack_sweep_serial(std::size_t max_length, Flavor flavor, bool with_oracle) {
    StackContext ctx(flavor, with_oracle);
    Evaluator evaluator(ctx.chain, ctx.assignment);
    SweepResult result;
    const std::size_t n = stack_count(max_length);
    for (std::size_t i = 0; i < n; ++i) record(result, check_stack(ctx, evaluator, stack_at(i)));
    return result;
}

SweepResult witness_sweep_serial(const PcpInstance& instance, std::size_t max_k, Flavor flavor) {
    WitnessChecker checker(instance, flavor);
    SweepResult result;
    const std::size_t n = index_word_count(instance.size(), max_k);
    for (std::size_t i = 0; i < n; ++i) record(result, check_witness_item(checker, index_word_at(i, instance.size())));
    return result;
}

SweepResult amplitude_sweep(const std::vector<PcpInstance>& instances, std::size_t paths, std::size_t max_length,
                            std::uint32_t seed) {
    struct Pair {
        LazyChain quantum;
        LazyChain projected;
    };
    std::vector<Pair> chains;
    for (const auto& inst : instances) {
        auto out = reduce(pad_instance(inst), Flavor::quantum);
        PushdownSystem projected = project_to_probabilistic(out.system);
        chains.push_back({LazyChain(std::move(out.system)), LazyChain(std::move(projected))});
    }

    std::mt19937 rng(seed);
    SweepResult result;
    for (std::size_t p = 0; p < paths; ++p) {
        const auto& [quantum, projected] = chains[p % chains.size()];
        const std::size_t length = std::uniform_int_distribution<std::size_t>(1, max_length)(rng);
        FinitePath path{{quantum.system().parse_configuration("Z")}};
        Rational moduli = 1;
        PhaseForm phase;
        for (std::size_t step = 0; step < length; ++step) {
            auto next = quantum.successors(path.states.back());
            auto pick = std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng);
            moduli *= next[pick].weight.mass();
            phase += next[pick].weight.phase();
            path.states.push_back(std::move(next[pick].config));
        }
        Weight product = path_weight(quantum, path);
        std::string failure;
        if (product.mass() != moduli) failure = "|prod a|^2=" + to_string(product.mass()) + " vs " + to_string(moduli);
        if (!(product.phase() == phase)) failure += " phase " + to_string(product.phase());
        if (cylinder_probability(projected, path) != moduli) failure += " projected chain differs";
        if (!failure.empty()) failure = "path " + std::to_string(p) + ": " + failure;
        record(result, failure);
    }
    return result;
}

std::vector<PcpInstance> random_instances(std::size_t count, std::size_t max_pairs, std::size_t max_width,
                                          std::uint32_t seed) {
    std::mt19937 rng(seed);
    auto word = [&] {
        std::size_t len = std::uniform_int_distribution<std::size_t>(1, max_width)(rng);
        std::string w;
        for (std::size_t i = 0; i < len; ++i) w += std::uniform_int_distribution<int>(0, 1)(rng) ? 'B' : 'A';
        return w;
    };
    std::vector<PcpInstance> out;
    for (std::size_t c = 0; c < count; ++c) {
        std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_pairs)(rng);
        std::vector<PcpInstance::Pair> pairs;
        for (std::size_t i = 0; i < n; ++i) {
            std::string u = word();
            pairs.emplace_back(std::move(u), word());
        }
        out.emplace_back(std::move(pairs));
    }
    return out;
}

}  // namespace pcpctl::kernels
