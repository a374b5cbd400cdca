#include "items.hpp"

#include <omp.h>

#include <limits>

namespace pcpctl::kernels {

using namespace detail;

SweepResult rho_sweep_parallel(std::size_t max_length) {
    const std::size_t n = word_count(max_length);
    SweepResult result;
#pragma omp parallel
    {
        SweepResult local;
#pragma omp for schedule(static)
        for (std::size_t i = 0; i < n; ++i) {
            const std::string x = word_at(i);
            for (std::size_t j = 0; j < n; ++j) record(local, check_rho_pair(x, word_at(j)));
        }
#pragma omp critical
        merge(result, std::move(local));
    }
    return result;
}

SweepResult stack_sweep_parallel(std::size_t max_length, Flavor flavor, bool with_oracle) {
    const StackContext ctx(flavor, with_oracle);
    const std::size_t n = stack_count(max_length);
    SweepResult result;
#pragma omp parallel
    {
        Evaluator evaluator(ctx.chain, ctx.assignment);
        SweepResult local;
#pragma omp for schedule(dynamic, 64)
        for (std::size_t i = 0; i < n; ++i) record(local, check_stack(ctx, evaluator, stack_at(i)));
#pragma omp critical
        merge(result, std::move(local));
    }
    return result;
}

SweepResult witness_sweep_parallel(const PcpInstance& instance, std::size_t max_k, Flavor flavor) {
    const WitnessChecker checker(instance, flavor);
    const std::size_t n = index_word_count(instance.size(), max_k);
    SweepResult result;
#pragma omp parallel
    {
        SweepResult local;
#pragma omp for schedule(dynamic, 1)
        for (std::size_t i = 0; i < n; ++i) {
            record(local, check_witness_item(checker, index_word_at(i, instance.size())));
        }
#pragma omp critical
        merge(result, std::move(local));
    }
    return result;
}

std::optional<IndexWord> brute_force_solve_parallel(const PcpInstance& instance, std::size_t max_k) {
    if (max_k == 0) throw std::invalid_argument("max_k must be at least 1");
    const std::size_t n = instance.size();
    std::size_t begin = 0;
    for (std::size_t k = 1; k <= max_k; ++k) {
        const std::size_t end = index_word_count(n, k);
        std::size_t best = std::numeric_limits<std::size_t>::max();
#pragma omp parallel for schedule(static) reduction(min : best)
        for (std::size_t i = begin; i < end; ++i) {
            if (i < best && check_solution(instance, index_word_at(i, n))) best = i;
        }
        if (best != std::numeric_limits<std::size_t>::max()) return index_word_at(best, n);
        begin = end;
    }
    return std::nullopt;
}

}  // namespace pcpctl::kernels
