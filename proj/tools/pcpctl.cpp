// pcpctl: reduce PCP instances to pushdown PCTL checks, audit witnesses,
// and inspect the induced chains.

#include "pcpctl/dot.hpp"
#include "pcpctl/io.hpp"
#include "pcpctl/kernels.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>

using namespace pcpctl;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Errors that map to exit status 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string input;
    bool quantum = false;
    std::string t_text;
    std::string variant = "eq10";
    std::size_t chain = 1;

    Flavor flavor() const { return quantum ? Flavor::quantum : Flavor::probabilistic; }
    std::optional<Rational> t() const {
        if (t_text.empty()) return std::nullopt;
        Rational t = parse_rational(t_text);
        if (t <= 0 || t >= 1) throw InputError("--t must lie strictly between 0 and 1");
        return t;
    }
};

void add_reduction_flags(CLI::App* cmd, Common& c) {
    cmd->add_flag("--quantum", c.quantum, "Use amplitudes with symbolic phases");
    cmd->add_option("--variant", c.variant, "Formula variant: eq10, remark9a, remark9b")->capture_default_str();
    cmd->add_option("--chain", c.chain, "Number of N_i links for remark9a")->check(CLI::PositiveNumber)
        ->capture_default_str();
}

PcpInstance instance_from(const std::string& path) {
    if (!std::filesystem::exists(path)) throw InputError("no such file: " + path);
    try {
        return load_instance(path);
    } catch (const FormatError& e) {
        throw InputError(e.what());
    }
}

// A chain plus atom assignment, from either an instance (.json, reduced on
// the fly) or a system file.
struct Model {
    std::unique_ptr<LazyChain> chain;
    HeadAssignment assignment;
};

Model model_from(const Common& c) {
    if (!std::filesystem::exists(c.input)) throw InputError("no such file: " + c.input);
    if (std::filesystem::path(c.input).extension() == ".json") {
        auto out = reduce(pad_instance(instance_from(c.input)), c.flavor(), parse_variant(c.variant), c.chain);
        HeadAssignment a = out.assignment;
        return {std::make_unique<LazyChain>(std::move(out.system)), std::move(a)};
    }
    PushdownSystem system = [&] {
        try {
            return load_system(c.input);
        } catch (const FormatError& e) {
            throw InputError(e.what());
        }
    }();
    HeadAssignment a = HeadAssignment::identity(system);
    return {std::make_unique<LazyChain>(std::move(system)), std::move(a)};
}

void write_to(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

int run_reduce(const Common& c, const std::string& output, const std::string& formula_out) {
    auto instance = instance_from(c.input);
    auto out = reduce(pad_instance(instance), c.flavor(), parse_variant(c.variant), c.chain);
    const Rational t = c.t().value_or(Rational(1, 2));
    const std::string formula = to_string(*out.formula(t));

    std::ostringstream system_text;
    system_text << "# formula (t = " << to_string(t) << "): " << formula << '\n';
    write_system(system_text, out.system);
    write_to(output, system_text.str());
    if (!formula_out.empty()) write_to(formula_out, formula + '\n');

    std::cerr << "alphabet: " << out.system.alphabet_size() << " symbols, " << out.system.rules().size()
              << " rules\n";
    if (output != "-") std::cout << "formula: " << formula << '\n';
    return kOk;
}

int run_check_witness(const Common& c, const std::string& w_text, bool json) {
    auto instance = instance_from(c.input);
    IndexWord w = parse_index_word(w_text);
    w.check_range(instance.size());
    WitnessChecker checker(instance, c.flavor(), parse_variant(c.variant), c.chain);
    auto report = checker.check(w, c.t());
    std::cout << (json ? witness_report_json(report, instance) + "\n" : witness_report_text(report));
    return report.consistent() ? kOk : kFailed;
}

int run_search(const Common& c, std::size_t max_k, bool json) {
    auto instance = instance_from(c.input);
    auto found = kernels::brute_force_solve_parallel(instance, max_k);
    if (!found) {
        std::cout << "no solution with at most " << max_k << " indices\n";
        return kOk;
    }
    std::cout << "found: " << to_string(*found) << '\n';
    auto report = WitnessChecker(instance, c.flavor(), parse_variant(c.variant), c.chain).check(*found, c.t());
    std::cout << (json ? witness_report_json(report, instance) + "\n" : witness_report_text(report));
    return report.consistent() ? kOk : kFailed;
}

int run_solve(const Common& c, std::size_t max_k) {
    auto instance = instance_from(c.input);
    auto found = kernels::brute_force_solve_parallel(instance, max_k);
    if (!found) {
        std::cout << "no solution with at most " << max_k << " indices\n";
        return kOk;
    }
    std::string u, v;
    for (auto j : found->indices()) {
        u += instance.pair(j).first;
        v += instance.pair(j).second;
    }
    std::cout << "solution: " << to_string(*found) << '\n' << "word: " << u << '\n';
    return u == v ? kOk : kFailed;
}

int run_unfold(const Common& c, const std::string& start, std::size_t depth, const std::string& stop,
               const std::string& dot) {
    Model m = model_from(c);
    UnfoldOptions opts;
    opts.depth = depth;
    StatePtr stop_formula;
    std::shared_ptr<Evaluator> ev;
    if (!stop.empty()) {
        stop_formula = parse_state_formula(stop);
        ev = std::make_shared<Evaluator>(*m.chain, m.assignment);
        opts.stop = [ev, stop_formula](const Configuration& s) { return ev->holds(s, *stop_formula); };
    }
    Configuration from = m.chain->system().parse_configuration(start);
    write_to(dot, unfold_dot(*m.chain, from, opts));
    return kOk;
}

int run_eval(const Common& c, const std::string& start, const std::string& text, std::size_t budget,
             std::optional<std::size_t> depth) {
    Model m = model_from(c);
    EvalOptions opts;
    opts.node_budget = budget;
    opts.bounded_depth = depth;
    Configuration from = m.chain->system().parse_configuration(start);

    StatePtr state;
    PathPtr path;
    try {
        state = parse_state_formula(text);
    } catch (const ParseError&) {
        path = parse_path_formula(text);
    }
    try {
        Evaluator ev(*m.chain, m.assignment, opts);
        if (state) {
            std::cout << (ev.holds(from, *state) ? "true" : "false") << '\n';
        } else if (depth) {
            std::cout << to_string(ev.bounded_probability(from, *path, *depth)) << '\n';
        } else {
            std::cout << to_string(ev.probability(from, *path)) << '\n';
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << e.what() << "; rerun with --depth N for a bounded enclosure\n";
        return kFailed;
    } catch (const Undetermined& e) {
        std::cerr << e.what() << "; try a larger --depth\n";
        return kFailed;
    }
    return kOk;
}

int run_validate(const Common& c) {
    if (!std::filesystem::exists(c.input)) throw InputError("no such file: " + c.input);
    PushdownSystem system = [&] {
        if (std::filesystem::path(c.input).extension() == ".json") {
            return reduce(pad_instance(instance_from(c.input)), c.flavor(), parse_variant(c.variant), c.chain).system;
        }
        try {
            return load_system(c.input);
        } catch (const FormatError& e) {
            throw InputError(e.what());
        }
    }();
    auto issues = validate(system);
    for (const auto& i : issues) {
        std::cout << i.symbol << ": " << i.message << " (sum " << to_string(i.weight_sum) << ")\n";
    }
    if (!issues.empty()) return kFailed;
    std::cout << "valid " << to_string(system.flavor()) << " system: " << system.alphabet_size() << " symbols, "
              << system.rules().size() << " rules\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reductions from PCP to PCTL checks on pushdown Markov chains"};
    app.require_subcommand(1);
    Common c;

    std::string output = "-", formula_out, w_text, start, stop, dot = "-", formula_text, word;
    std::size_t max_k = 6, depth = 8, budget = 1'000'000;
    std::optional<std::size_t> eval_depth;
    bool json = false, bar = false;

    auto* reduce_cmd = app.add_subcommand("reduce", "Emit the pushdown system and formula for an instance");
    reduce_cmd->add_option("instance", c.input, "Instance JSON")->required();
    add_reduction_flags(reduce_cmd, c);
    reduce_cmd->add_option("--t", c.t_text, "Formula constant, default 1/2");
    reduce_cmd->add_option("-o,--output", output, "System file ('-' for stdout)");
    reduce_cmd->add_option("--formula", formula_out, "Also write the formula here");

    auto* witness_cmd = app.add_subcommand("check-witness", "Check one index word through the reduction");
    witness_cmd->add_option("instance", c.input)->required();
    witness_cmd->add_option("--w", w_text, "Index word, e.g. 1,2,1")->required();
    add_reduction_flags(witness_cmd, c);
    witness_cmd->add_option("--t", c.t_text, "Check p1 = t/2 and p2 = (1-t)/2 instead of p1 + p2 = 1/2");
    witness_cmd->add_flag("--json", json);

    auto* search_cmd = app.add_subcommand("search", "Brute-force a solution, then check it as a witness");
    search_cmd->add_option("instance", c.input)->required();
    search_cmd->add_option("--max-k", max_k)->check(CLI::PositiveNumber)->capture_default_str();
    add_reduction_flags(search_cmd, c);
    search_cmd->add_option("--t", c.t_text);
    search_cmd->add_flag("--json", json);

    auto* rho_cmd = app.add_subcommand("rho", "Binary value of a word over {A,B}");
    rho_cmd->add_option("word", word)->required();
    rho_cmd->add_flag("--bar", bar, "Use the complementary indicator");

    auto* solve_cmd = app.add_subcommand("solve-pcp", "Brute-force PCP search");
    solve_cmd->add_option("instance", c.input)->required();
    solve_cmd->add_option("--max-k", max_k)->check(CLI::PositiveNumber)->capture_default_str();

    auto* unfold_cmd = app.add_subcommand("unfold", "Unfolding tree as Graphviz DOT");
    unfold_cmd->add_option("model", c.input, "Instance JSON or system file")->required();
    unfold_cmd->add_option("--start", start, "Start configuration, top first")->required();
    unfold_cmd->add_option("--depth", depth)->check(CLI::PositiveNumber)->capture_default_str();
    unfold_cmd->add_option("--stop", stop, "State formula; matching nodes are leaves");
    unfold_cmd->add_option("--dot", dot, "Output path ('-' for stdout)");
    add_reduction_flags(unfold_cmd, c);

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a PCTL state or path formula");
    eval_cmd->add_option("model", c.input, "Instance JSON or system file")->required();
    eval_cmd->add_option("--start", start)->required();
    eval_cmd->add_option("--formula", formula_text)->required();
    eval_cmd->add_option("--budget", budget, "Node budget for exact evaluation")->check(CLI::PositiveNumber)
        ->capture_default_str();
    eval_cmd->add_option("--depth", eval_depth, "Bounded mode depth")->check(CLI::PositiveNumber);
    add_reduction_flags(eval_cmd, c);

    auto* validate_cmd = app.add_subcommand("validate", "Check stochasticity / unitarity");
    validate_cmd->add_option("model", c.input, "Instance JSON or system file")->required();
    add_reduction_flags(validate_cmd, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*reduce_cmd) return run_reduce(c, output, formula_out);
        if (*witness_cmd) return run_check_witness(c, w_text, json);
        if (*search_cmd) return run_search(c, max_k, json);
        if (*rho_cmd) {
            std::cout << to_string(bar ? rho_bar(word) : rho(word)) << '\n';
            return kOk;
        }
        if (*solve_cmd) return run_solve(c, max_k);
        if (*unfold_cmd) return run_unfold(c, start, depth, stop, dot);
        if (*eval_cmd) return run_eval(c, start, formula_text, budget, eval_depth);
        if (*validate_cmd) return run_validate(c);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailed;
    }
    return kUsage;
}
