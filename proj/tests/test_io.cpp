#include "pcpctl/io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace pcpctl;

TEST_CASE("instance JSON") {
    std::istringstream in(R"({"pairs": [["A", "ABA"], ["B", "A"]]})");
    auto inst = read_instance(in);
    CHECK(inst.size() == 2);
    CHECK(inst.pair(1).second == "ABA");
    std::ostringstream out;
    write_instance(out, inst);
    CHECK(out.str() == "{\"pairs\":[[\"A\",\"ABA\"],[\"B\",\"A\"]]}\n");

    for (const char* bad : {"{", "[]", R"({"pairs": 3})", R"({"pairs": [["A"]]})", R"({"pairs": [["A", "C"]]})",
                            R"({"pairs": []})"}) {
        std::istringstream b(bad);
        CHECK_THROWS_AS(read_instance(b), FormatError);
    }
}

TEST_CASE("system text round trip, both flavors") {
    auto padded = pad_instance(PcpInstance(std::vector<PcpInstance::Pair>{{"A", "AB"}, {"BA", "A"}}));
    for (auto flavor : {Flavor::probabilistic, Flavor::quantum}) {
        auto original = reduce(padded, flavor).system;
        std::ostringstream out;
        write_system(out, original);
        std::istringstream in(out.str());
        auto back = read_system(in);
        CHECK(back.flavor() == flavor);
        CHECK(back.alphabet() == original.alphabet());
        REQUIRE(back.rules().size() == original.rules().size());
        for (std::size_t i = 0; i < back.rules().size(); ++i) {
            CHECK(back.rules()[i].lhs == original.rules()[i].lhs);
            CHECK(back.rules()[i].rhs == original.rules()[i].rhs);
            CHECK(back.rules()[i].weight == original.rules()[i].weight);
        }
        std::ostringstream again;
        write_system(again, back);
        CHECK(again.str() == out.str());
    }
}

TEST_CASE("system text details") {
    std::istringstream in(R"(# comment
flavor quantum
N -> F @ sq=1/2 phase=1/2*t4   # trailing comment
N -> S @ sq=1/2 phase=t4
F -> eps @ sq=1
S -> @ sq=1 phase=t6
)");
    auto s = read_system(in);
    CHECK(s.rules().size() == 4);
    CHECK(to_string(s.rules()[0].weight) == "sq=1/2 phase=1/2*t4");
    CHECK(s.rules()[2].rhs.empty());
    CHECK(s.rules()[3].rhs.empty());
    CHECK(validate(s).empty());
}

TEST_CASE("system text errors") {
    for (const char* bad : {"X -> eps @ 1\n", "flavor fuzzy\n", "flavor probabilistic\nX eps @ 1\n",
                            "flavor probabilistic\nX -> eps\n", "flavor probabilistic\nX -> eps @ x\n",
                            "flavor probabilistic\nX -> A B C @ 1\n", "flavor quantum\nX -> eps @ 1\n", ""}) {
        std::istringstream b(bad);
        CHECK_THROWS_AS(read_system(b), FormatError);
    }
}

TEST_CASE("witness report formats") {
    auto inst = PcpInstance(std::vector<PcpInstance::Pair>{{"A", "A"}});
    auto report = check_witness(inst, IndexWord({1}));
    auto text = witness_report_text(report);
    CHECK(text.rfind("solution: yes; p1=3/8 p2=1/8; oracle agrees\n", 0) == 0);
    auto doc = nlohmann::json::parse(witness_report_json(report, inst));
    CHECK(doc["p1"] == "3/8");
    CHECK(doc["p2"] == "1/8");
    CHECK(doc["alpha"] == "(A,A) Z'");
    CHECK(doc["verdict"] == true);
    CHECK(doc["oracle"]["agrees"] == true);
    CHECK(doc["w"] == nlohmann::json::array({1}));
    CHECK(doc["t"].is_null());
}
