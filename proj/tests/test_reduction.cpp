#include "pcpctl/oracle.hpp"
#include "pcpctl/reduction.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace pcpctl;

namespace {

PcpInstance make(std::vector<PcpInstance::Pair> pairs) { return PcpInstance(std::move(pairs)); }

const PairStack kSample{{'A', 'A'}, {'A', '.'}, {'.', 'A'}, {'B', 'B'}};

}  // namespace

TEST_CASE("binary word values") {
    CHECK(rho("AAB") == Rational(13, 16));
    CHECK(rho_bar("AAB") == Rational(3, 16));
    CHECK(rho("AABZ'") == Rational(13, 16));
    CHECK(rho("") == Rational(1, 2));
    CHECK(rho_bar("") == Rational(1, 2));
    CHECK(rho("A") == Rational(3, 4));
    CHECK(rho("B") == Rational(1, 4));
    CHECK(rho_bar("A") == Rational(1, 4));
    CHECK(rho("AB") + rho_bar("AB") == 1);
    CHECK(rho("AB") + rho_bar("BA") != 1);
    CHECK(theta("Z'") == 1);
    CHECK(theta_bar("Z'") == 1);
    CHECK(theta("B") == 0);
    CHECK_THROWS_AS(rho("AC"), std::invalid_argument);
}

TEST_CASE("symbol names") {
    CHECK(pair_symbol('A', '.') == "(A,.)");
    CHECK(mark_symbol('.', 'B') == "X_(.,B)");
    CHECK(guess_symbol(2, 3) == "G(2,3)");
    CHECK(chain_symbol(4) == "N4");
    CHECK(parse_variant("remark9b") == Variant::remark9b);
    CHECK(to_string(Variant::remark9a) == "remark9a");
    CHECK_THROWS_AS(parse_variant("eq11"), std::invalid_argument);
}

TEST_CASE("reduction of the single pair (A,A)") {
    auto out = reduce(pad_instance(make({{"A", "A"}})), Flavor::probabilistic);
    const auto& s = out.system;
    CHECK(s.alphabet_size() == 26);
    CHECK(s.rules().size() == 38);
    CHECK(validate(s).empty());
    std::set<std::string> names(s.alphabet().begin(), s.alphabet().end());
    CHECK(names.size() == s.alphabet_size());
    for (const char* must : {"Z", "Z'", "C", "N", "F", "S", "G(1,1)", "G(1,2)", "(.,.)", "X_(.,.)"}) {
        CHECK(names.count(must) == 1);
    }
    CHECK(build_guess_rules(pad_instance(make({{"A", "A"}})), Flavor::probabilistic).size() == 4);
    CHECK(build_verify_rules(Flavor::probabilistic).size() == 34);

    auto g12 = s.rules_for(s.at("G(1,2)"));
    REQUIRE(g12.size() == 2);
    CHECK(g12[0].get().weight.mass() == Rational(1, 2));
    CHECK(s.format(Configuration{g12[0].get().rhs}) == "C");
}

TEST_CASE("guess rules of a two-pair instance") {
    auto padded = pad_instance(make({{"A", "AB"}, {"BA", "A"}}));
    auto rules = build_guess_rules(padded, Flavor::quantum);
    // 2 starts, 2 x 2 writes, 2 x (1 stop + 2 continues)
    CHECK(rules.size() == 12);
    CHECK(rules[0].weight.mass() == Rational(1, 2));
    CHECK(to_string(rules[0].weight.phase()) == "1/2*t1");
    CHECK(to_string(rules[1].weight.phase()) == "t1");
    CHECK(rules[2].lhs == "G(1,1)");
    CHECK(rules[2].rhs == std::vector<std::string>{"G(1,2)", "(A,A)"});
    CHECK(rules[3].rhs == std::vector<std::string>{"G(1,3)", "(.,B)"});
    CHECK(to_string(rules[3].weight.phase()) == "t1_2");
    CHECK(rules[4].rhs == std::vector<std::string>{"C"});
    CHECK(rules[4].weight.mass() == Rational(1, 3));
    CHECK(to_string(rules[4].weight.phase()) == "1/3*t2");
    CHECK(to_string(rules[6].weight.phase()) == "t2");

    auto out = reduce(padded, Flavor::quantum);
    CHECK(validate(out.system).empty());
    CHECK(out.system.alphabet_size() == 6 + 18 + 6);
}

TEST_CASE("verify phase on the sample stack") {
    LazyChain chain(verification_system(Flavor::probabilistic));
    Evaluator ev(chain, HeadAssignment::identity(chain.system()));
    CHECK(firsts(kSample) == "AA.B");
    CHECK(seconds(kSample) == "A.AB");
    CHECK(format_stack(kSample) == "(A,A) (A,.) (.,A) (B,B) Z'");
    CHECK(ev.probability(stacked(chain.system(), "F", kSample), *phi1()) == Rational(13, 16));
    CHECK(ev.probability(stacked(chain.system(), "S", kSample), *phi2()) == Rational(3, 16));
    // the other head blocks each formula immediately
    CHECK(ev.probability(stacked(chain.system(), "S", kSample), *phi1()) == 0);
    CHECK(ev.probability(stacked(chain.system(), "F", kSample), *phi2()) == 0);

    auto at_n = stacked(chain.system(), "N", kSample);
    CHECK(ev.probability(at_n, *phi1()) == Rational(13, 32));
    CHECK(ev.holds(at_n, *probability(Comparison::equal, Rational(13, 32), phi1())));
    CHECK(ev.holds(at_n, *verify_condition(Rational(13, 16))));
}

TEST_CASE("formula family") {
    auto f = verify_condition(Rational(1, 3));
    REQUIRE(f->kind == StateFormula::Kind::conjunction);
    CHECK(f->left->bound == Rational(1, 6));
    CHECK(f->right->bound == Rational(1, 3));
    CHECK(f->left->cmp == Comparison::equal);

    auto top = build_formula(Rational(1, 3));
    CHECK(top->kind == StateFormula::Kind::probability);
    CHECK(top->cmp == Comparison::greater);
    CHECK(top->bound == 0);
    CHECK(to_string(*witness_condition(Rational(1, 3), Variant::remark9b)).rfind("C & P{=1/6}[", 0) == 0);
    for (auto v : {Variant::eq10, Variant::remark9a, Variant::remark9b}) {
        auto g = build_formula(Rational(1, 3), v);
        CHECK(is_pctl(*g));
        CHECK(equal(*g, *parse_state_formula(to_string(*g))));
    }
    CHECK_THROWS_AS(build_formula(Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(build_formula(Rational(1)), std::invalid_argument);
}

TEST_CASE("guess path for an index word") {
    auto padded = pad_instance(make({{"A", "AB"}, {"BA", "A"}}));
    auto out = reduce(padded, Flavor::probabilistic);
    LazyChain chain(out.system);
    auto g = guess_path_for(padded, IndexWord({1, 2}), chain.system());
    // last written column on top
    CHECK(format_stack(g.alpha) == "(A,.) (B,A) (.,B) (A,A) Z'");
    CHECK(g.path.states.size() == 8);
    CHECK(chain.system().format(g.path.states.back()) == "C (A,.) (B,A) (.,B) (A,A) Z'");
    // 1/2 * 1 * 1 * 1/3 * 1 * 1 * 1/3
    CHECK(cylinder_probability(chain, g.path) == Rational(1, 18));
    CHECK_THROWS_AS(guess_path_for(padded, IndexWord({3}), chain.system()), std::out_of_range);
}

TEST_CASE("witness checks on small instances") {
    auto aa = check_witness(make({{"A", "A"}}), IndexWord({1}));
    CHECK(aa.verdict);
    CHECK(aa.solution);
    CHECK(aa.p1 == Rational(3, 8));
    CHECK(aa.p2 == Rational(1, 8));
    CHECK(aa.guess_probability == Rational(1, 2));
    CHECK(aa.oracle_agrees);
    CHECK(aa.consistent());

    auto ab = check_witness(make({{"A", "B"}}), IndexWord({1}));
    CHECK_FALSE(ab.verdict);
    CHECK_FALSE(ab.solution);
    CHECK(ab.p1 + ab.p2 == Rational(3, 4));
    CHECK(ab.consistent());

    auto two = make({{"A", "AB"}, {"BA", "A"}});
    CHECK(check_witness(two, IndexWord({1, 2})).verdict);
    CHECK_FALSE(check_witness(two, IndexWord({2, 1})).verdict);
    CHECK_FALSE(check_witness(two, IndexWord({1})).verdict);

    auto with_t = check_witness(make({{"A", "A"}}), IndexWord({1}), Rational(3, 4));
    CHECK(with_t.verdict);
    CHECK(with_t.condition_holds == true);
    auto wrong_t = check_witness(make({{"A", "A"}}), IndexWord({1}), Rational(1, 2));
    CHECK_FALSE(wrong_t.verdict);
    CHECK(wrong_t.condition_holds == false);
    CHECK_THROWS_AS(check_witness(make({{"A", "A"}}), IndexWord({1}), Rational(1)), std::invalid_argument);

    auto quantum = check_witness(make({{"A", "A"}}), IndexWord({1}), std::nullopt, Flavor::quantum);
    CHECK(quantum.p1 == Rational(3, 8));
    CHECK(quantum.p2 == Rational(1, 8));
    CHECK(quantum.consistent());
}

TEST_CASE("formula variants agree on the (A,A) witness") {
    auto inst = make({{"A", "A"}});
    for (auto t : {Rational(3, 4), Rational(1, 2), Rational(1, 4)}) {
        auto base = WitnessChecker(inst, Flavor::probabilistic).check(IndexWord({1}), t);
        for (std::size_t k : {1, 3}) {
            auto a = WitnessChecker(inst, Flavor::probabilistic, Variant::remark9a, k).check(IndexWord({1}), t);
            CHECK(a.condition_holds == base.condition_holds);
        }
        auto b = WitnessChecker(inst, Flavor::probabilistic, Variant::remark9b).check(IndexWord({1}), t);
        CHECK(b.condition_holds == base.condition_holds);
        CHECK(base.condition_holds == (t == Rational(3, 4)));
    }
}

TEST_CASE("the N_i chain variant can be satisfied after the split") {
    // For (B,A) and t = 1/2 both F alpha Z' and S alpha Z' have a successor
    // (alpha Z') where phi1 and phi2 each have probability 1/4, so the
    // inner "true U" is met almost surely although the words differ.
    auto inst = make({{"B", "A"}});
    auto base = WitnessChecker(inst, Flavor::probabilistic).check(IndexWord({1}), Rational(1, 2));
    CHECK_FALSE(base.verdict);
    CHECK(base.condition_holds == false);
    auto chained = WitnessChecker(inst, Flavor::probabilistic, Variant::remark9a, 2).check(IndexWord({1}), Rational(1, 2));
    CHECK_FALSE(chained.verdict);
    CHECK(chained.condition_holds == true);
    auto split = WitnessChecker(inst, Flavor::probabilistic, Variant::remark9b).check(IndexWord({1}), Rational(1, 2));
    CHECK(split.condition_holds == false);
}

TEST_CASE("variant systems") {
    auto padded = pad_instance(make({{"A", "A"}}));
    auto a = reduce(padded, Flavor::probabilistic, Variant::remark9a, 3);
    CHECK(validate(a.system).empty());
    CHECK(a.system.alphabet_size() == 29);
    CHECK(a.system.rules().size() == 41);
    auto b = reduce(padded, Flavor::quantum, Variant::remark9b);
    CHECK(validate(b.system).empty());
    auto c_rules = b.system.rules_for(b.system.at("C"));
    REQUIRE(c_rules.size() == 2);
    CHECK(c_rules[0].get().weight.mass() == Rational(1, 2));
}

TEST_CASE("checkers may be shared across threads") {
    WitnessChecker checker(make({{"A", "AB"}, {"BA", "A"}}), Flavor::probabilistic);
    std::vector<int> ok(8, 0);
#pragma omp parallel for
    for (int i = 0; i < 8; ++i) ok[i] = checker.check(IndexWord({1, 2})).verdict ? 1 : 0;
    CHECK(std::count(ok.begin(), ok.end(), 1) == 8);
}
