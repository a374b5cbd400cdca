#include "pcpctl/pcp.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace pcpctl;

namespace {

PcpInstance make(std::vector<PcpInstance::Pair> pairs) { return PcpInstance(std::move(pairs)); }

}  // namespace

TEST_CASE("instances reject empty words and foreign letters") {
    CHECK_THROWS_AS(make({}), std::invalid_argument);
    CHECK_THROWS_AS(make({{"", "A"}}), std::invalid_argument);
    CHECK_THROWS_AS(make({{"AC", "A"}}), std::invalid_argument);
    CHECK_THROWS_AS(make({{"A.", "A"}}), std::invalid_argument);
    auto ok = make({{"A", "ABA"}, {"B", "A"}});
    CHECK(ok.size() == 2);
    CHECK(ok.max_word_length() == 3);
    CHECK(ok.pair(2).first == "B");
    CHECK_THROWS_AS(ok.pair(0), std::out_of_range);
    CHECK_THROWS_AS(ok.pair(3), std::out_of_range);
}

TEST_CASE("padding to a common width") {
    auto padded = pad_instance(make({{"A", "ABA"}, {"B", "A"}}));
    CHECK(padded.width() == 3);
    CHECK(padded.pair(1) == ModifiedPcpInstance::Pair{"A..", "ABA"});
    CHECK(padded.pair(2) == ModifiedPcpInstance::Pair{"B..", "A.."});
    CHECK_THROWS_AS(ModifiedPcpInstance({{"A", "AB"}}, 2), std::invalid_argument);
    CHECK(trim("A..B.") == "AB");
    CHECK(trim("...") == "");
}

TEST_CASE("index words") {
    CHECK(parse_index_word("1,2,1").indices() == std::vector<std::size_t>{1, 2, 1});
    CHECK(parse_index_word(" 2 1 ") == IndexWord({2, 1}));
    CHECK(to_string(IndexWord({1, 2})) == "1,2");
    CHECK_THROWS_AS(parse_index_word(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_index_word("0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_index_word("1,x"), std::invalid_argument);
    CHECK_THROWS_AS(IndexWord({3}).check_range(2), std::out_of_range);
}

TEST_CASE("solutions") {
    auto aa = make({{"A", "A"}});
    auto ab = make({{"A", "B"}});
    auto two = make({{"A", "AB"}, {"BA", "A"}});
    CHECK(check_solution(aa, IndexWord({1})));
    CHECK(check_solution(aa, IndexWord({1, 1, 1})));
    CHECK_FALSE(check_solution(ab, IndexWord({1})));
    CHECK(check_solution(two, IndexWord({1, 2})));
    CHECK_FALSE(check_solution(two, IndexWord({2, 1})));
    CHECK_THROWS_AS(check_solution(two, IndexWord({3})), std::out_of_range);

    CHECK(brute_force_solve(two, 4) == IndexWord({1, 2}));
    CHECK_FALSE(brute_force_solve(ab, 5).has_value());
    CHECK(brute_force_solve(aa, 1) == IndexWord({1}));
    CHECK_THROWS_AS(brute_force_solve(aa, 0), std::invalid_argument);
}

TEST_CASE("concatenation keeps bullets") {
    auto padded = pad_instance(make({{"A", "AB"}, {"BA", "A"}}));
    auto [u, v] = concatenate(padded, IndexWord({1, 2}));
    CHECK(u == "A.BA");
    CHECK(v == "ABA.");
    CHECK(trim(u) == trim(v));
}

TEST_CASE("index word enumeration order") {
    std::vector<std::string> seen;
    for_each_index_word(2, 2, [&](const IndexWord& w) {
        seen.push_back(to_string(w));
        return true;
    });
    CHECK(seen == std::vector<std::string>{"1,1", "1,2", "2,1", "2,2"});
    int calls = 0;
    for_each_index_word(3, 3, [&](const IndexWord&) { return ++calls < 5; });
    CHECK(calls == 5);
}
