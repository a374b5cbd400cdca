// Acceptance suite: one PASS/FAIL line per criterion, with wall time.

#include "pcpctl/kernels.hpp"
#include "pcpctl/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace pcpctl;

namespace {

const PairStack kSample{{'A', 'A'}, {'A', '.'}, {'.', 'A'}, {'B', 'B'}};

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

PcpInstance make(std::vector<PcpInstance::Pair> pairs) { return PcpInstance(std::move(pairs)); }

std::vector<PcpInstance> named_instances() {
    return {make({{"A", "A"}}), make({{"A", "B"}}), make({{"A", "AB"}, {"BA", "A"}})};
}

std::vector<Rational> sorted_masses(const Enumeration& e) {
    std::vector<Rational> out;
    for (const auto& p : e.paths) out.push_back(p.probability);
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<Rational> kFourPaths{Rational(1, 32), Rational(1, 32), Rational(1, 4), Rational(1, 2)};

void sample_checks(Flavor flavor, Outcome& out) {
    LazyChain chain(verification_system(flavor));
    auto assignment = HeadAssignment::identity(chain.system());
    Evaluator ev(chain, assignment);
    auto f = stacked(chain.system(), "F", kSample);
    auto s = stacked(chain.system(), "S", kSample);

    Rational p1 = ev.probability(f, *phi1());
    Rational p2 = ev.probability(s, *phi2());
    out.require(p1 == Rational(13, 16), "phi1 at F alpha Z' = " + to_string(p1));
    out.require(p2 == Rational(3, 16), "phi2 at S alpha Z' = " + to_string(p2));
    out.require(p1 == Rational(1, 2) + Rational(1, 4) + Rational(1, 16), "13/16 sum");
    out.require(p2 == Rational(1, 8) + Rational(1, 16), "3/16 sum");

    auto e = enumerate_satisfying_paths(chain, f, *phi1(), assignment, 12);
    out.require(e.paths.size() == 4, "oracle found " + std::to_string(e.paths.size()) + " phi1 paths");
    out.require(sorted_masses(e) == kFourPaths, "path probabilities differ from {1/2,1/4,1/32,1/32}");
    out.require(e.residual == 0 && e.satisfied_mass == p1, "oracle total disagrees with evaluator");
    for (const auto& p : e.paths) {
        out.require(cylinder_probability(chain, p.path) == p.probability, "cylinder probability mismatch");
        out.require(p.weight.is_amplitude() == (flavor == Flavor::quantum), "weight kind");
    }
    auto o2 = oracle_until_probability(chain, s, *phi2(), assignment, 12);
    out.require(o2.residual == 0 && o2.probability == p2, "oracle phi2 disagrees");
}

Outcome criterion1() {
    Outcome out;
    sample_checks(Flavor::probabilistic, out);
    return out;
}

Outcome criterion2() {
    Outcome out;
    sample_checks(Flavor::quantum, out);

    std::vector<PcpInstance> instances = named_instances();
    for (const auto& inst : instances) {
        for (auto variant : {Variant::eq10, Variant::remark9a, Variant::remark9b}) {
            auto q = reduce(pad_instance(inst), Flavor::quantum, variant, 2).system;
            auto p = reduce(pad_instance(inst), Flavor::probabilistic, variant, 2).system;
            auto projected = project_to_probabilistic(q);
            bool same = projected.alphabet() == p.alphabet() && projected.rules().size() == p.rules().size();
            for (std::size_t i = 0; same && i < p.rules().size(); ++i) {
                const auto& a = projected.rules()[i];
                const auto& b = p.rules()[i];
                same = a.lhs == b.lhs && a.rhs == b.rhs && a.weight == b.weight;
            }
            out.require(same, "projection differs from the probabilistic system");
        }
    }
    return out;
}

Outcome criterion3() {
    Outcome out;
    auto r = kernels::rho_sweep_parallel(6);
    out.require(r.checked == 15876, "checked " + std::to_string(r.checked) + " pairs");
    out.require(r.failures == 0, std::to_string(r.failures) + " failures");
    for (const auto& s : r.samples) out.require(false, s);
    return out;
}

Outcome criterion4() {
    Outcome out;
    for (auto flavor : {Flavor::probabilistic, Flavor::quantum}) {
        auto r = kernels::stack_sweep_parallel(4, flavor, true);
        out.require(r.checked == 7380, "checked " + std::to_string(r.checked) + " stacks");
        out.require(r.failures == 0, std::string(to_string(flavor)) + ": " + std::to_string(r.failures) + " failures");
        for (const auto& s : r.samples) out.require(false, s);
    }
    return out;
}

Outcome criterion5() {
    Outcome out;
    std::vector<PcpInstance> instances = named_instances();
    for (auto& inst : kernels::random_instances(20, 2, 2, 20240601)) instances.push_back(std::move(inst));
    std::size_t words = 0;
    for (const auto& inst : instances) {
        for (auto flavor : {Flavor::probabilistic, Flavor::quantum}) {
            auto r = kernels::witness_sweep_parallel(inst, 4, flavor);
            words += r.checked;
            out.require(r.ok(), std::to_string(r.failures) + " witness failures");
            for (const auto& s : r.samples) out.require(false, s);
        }
    }
    out.require(words > 0, "no words checked");
    return out;
}

Outcome criterion6() {
    Outcome out;
    auto r = kernels::amplitude_sweep(kernels::random_instances(20, 2, 2, 606), 1000, 40, 6);
    out.require(r.checked == 1000, "checked " + std::to_string(r.checked) + " paths");
    out.require(r.failures == 0, std::to_string(r.failures) + " failures");
    for (const auto& s : r.samples) out.require(false, s);
    return out;
}

Outcome criterion7() {
    Outcome out;
    std::vector<PcpInstance> instances = named_instances();
    for (auto& inst : kernels::random_instances(20, 2, 2, 20240601)) instances.push_back(std::move(inst));
    for (const auto& inst : instances) {
        for (auto flavor : {Flavor::probabilistic, Flavor::quantum}) {
            for (auto variant : {Variant::eq10, Variant::remark9a, Variant::remark9b}) {
                out.require(validate(reduce(pad_instance(inst), flavor, variant, 2).system).empty(),
                            "a generated system does not validate");
            }
        }
    }
    for (auto flavor : {Flavor::probabilistic, Flavor::quantum}) {
        const auto original = reduce(pad_instance(make({{"A", "A"}})), flavor).system;
        for (std::size_t victim = 0; victim < original.rules().size(); ++victim) {
            PushdownSystem mutated(flavor);
            for (const auto& name : original.alphabet()) mutated.intern(name);
            for (std::size_t i = 0; i < original.rules().size(); ++i) {
                const auto& r = original.rules()[i];
                Weight w = r.weight;
                if (i == victim) {
                    Rational changed = w.mass() * Rational(2, 3);
                    w = flavor == Flavor::quantum ? Weight::amplitude(changed, w.phase())
                                                  : Weight::probability(changed);
                }
                mutated.add_rule(r.lhs, r.rhs, w);
            }
            out.require(!validate(mutated).empty(), "mutation of rule " + std::to_string(victim) + " not detected");
        }
    }
    return out;
}

void collect_bounds(const StateFormula& f, std::vector<Rational>& out);
void collect_bounds(const PathFormula& f, std::vector<Rational>& out) {
    if (f.state) collect_bounds(*f.state, out);
    if (f.left) collect_bounds(*f.left, out);
    if (f.right) collect_bounds(*f.right, out);
}
void collect_bounds(const StateFormula& f, std::vector<Rational>& out) {
    if (f.kind == StateFormula::Kind::probability) {
        if (f.cmp == Comparison::equal) out.push_back(f.bound);
        collect_bounds(*f.path, out);
    }
    if (f.left) collect_bounds(*f.left, out);
    if (f.right) collect_bounds(*f.right, out);
}

Outcome criterion8() {
    Outcome out;
    std::vector<Rational> bounds;
    collect_bounds(*build_formula(Rational(1, 3)), bounds);
    out.require(std::count(bounds.begin(), bounds.end(), Rational(1, 6)) == 1, "no P{=1/6} conjunct");
    out.require(std::count(bounds.begin(), bounds.end(), Rational(1, 3)) == 1, "no P{=1/3} conjunct");

    auto aa = make({{"A", "A"}});
    for (auto t : {Rational(3, 4), Rational(1, 2), Rational(1, 3)}) {
        auto base = WitnessChecker(aa, Flavor::probabilistic).check(IndexWord({1}), t);
        out.require(base.condition_holds == base.verdict, "eq10 condition differs from its inner conjunction");
        for (auto variant : {Variant::remark9a, Variant::remark9b}) {
            auto f = build_formula(t, variant);
            out.require(is_pctl(*f) && equal(*f, *parse_state_formula(to_string(*f))),
                        std::string(to_string(variant)) + " does not type-check");
            for (std::size_t k : {1, 3}) {
                auto r = WitnessChecker(aa, Flavor::probabilistic, variant, k).check(IndexWord({1}), t);
                out.require(r.condition_holds == base.verdict,
                            std::string(to_string(variant)) + " verdict differs at t=" + to_string(t));
            }
        }
    }
    return out;
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // 0: no limit
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "sample stack: 13/16, 3/16, four phi1 paths", 1, criterion1},
        {2, "quantum sample stack and projection", 1, criterion2},
        {3, "rho + rho_bar = 1 iff equal, words up to length 6", 10, criterion3},
        {4, "phi1/phi2 = rho/rho_bar, all stacks up to length 4", 60, criterion4},
        {5, "witness verdicts = direct checks, k <= 4, both flavors", 120, criterion5},
        {6, "1000 random quantum paths: |prod a|^2 = prod |a|^2", 5, criterion6},
        {7, "validation and single-rule mutation", 0, criterion7},
        {8, "formula family and variants on (A,A)", 0, criterion8},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
            std::ostringstream os;
            os << "took " << secs << " s, limit " << c.limit_seconds << " s";
            out.require(false, os.str());
        }
        if (!out.ok) ++failed;
        std::printf("%s criterion %d: %s (%.3f s)%s%s\n", out.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                    out.ok ? "" : " -- ", out.detail.c_str());
    }
    return failed == 0 ? 0 : 1;
}
