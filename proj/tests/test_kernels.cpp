#include "pcpctl/kernels.hpp"

#include <doctest.h>

using namespace pcpctl;

namespace {

void check_same(const kernels::SweepResult& a, const kernels::SweepResult& b) {
    CHECK(a.checked == b.checked);
    CHECK(a.failures == b.failures);
    CHECK(a.samples.size() == b.samples.size());
}

}  // namespace

TEST_CASE("space sizes") {
    CHECK(kernels::word_pair_count(6) == 15876);
    CHECK(kernels::stack_count(4) == 7380);
    CHECK(kernels::stack_count(1) == 9);
}

TEST_CASE("serial and parallel sweeps agree") {
    check_same(kernels::rho_sweep_serial(4), kernels::rho_sweep_parallel(4));
    CHECK(kernels::rho_sweep_parallel(4).ok());
    check_same(kernels::stack_sweep_serial(2, Flavor::quantum), kernels::stack_sweep_parallel(2, Flavor::quantum));
    CHECK(kernels::stack_sweep_parallel(2, Flavor::probabilistic).checked == 90);

    PcpInstance two(std::vector<PcpInstance::Pair>{{"A", "AB"}, {"BA", "A"}});
    auto s = kernels::witness_sweep_serial(two, 3, Flavor::probabilistic);
    auto p = kernels::witness_sweep_parallel(two, 3, Flavor::probabilistic);
    check_same(s, p);
    CHECK(s.checked == 14);
    CHECK(s.ok());
}

TEST_CASE("parallel brute force returns the serial answer") {
    for (const auto& inst : kernels::random_instances(30, 3, 3, 5)) {
        CHECK(kernels::brute_force_solve_parallel(inst, 5) == brute_force_solve(inst, 5));
    }
    PcpInstance two(std::vector<PcpInstance::Pair>{{"A", "AB"}, {"BA", "A"}});
    CHECK(kernels::brute_force_solve_parallel(two, 3) == IndexWord({1, 2}));
    CHECK_THROWS_AS(kernels::brute_force_solve_parallel(two, 0), std::invalid_argument);
}

TEST_CASE("random instances are reproducible and in range") {
    auto a = kernels::random_instances(20, 2, 2, 42);
    auto b = kernels::random_instances(20, 2, 2, 42);
    REQUIRE(a.size() == 20);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].pairs() == b[i].pairs());
        CHECK(a[i].size() <= 2);
        CHECK(a[i].max_word_length() <= 2);
    }
}

TEST_CASE("failures are counted and sampled") {
    kernels::SweepResult r;
    CHECK_FALSE(r.ok());
    r.checked = 3;
    CHECK(r.ok());
    r.failures = 1;
    CHECK_FALSE(r.ok());
}
