#ifndef PCPCTL_KERNELS_HPP
#define PCPCTL_KERNELS_HPP

#include "pcpctl/reduction.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Exhaustive sweeps over the desk-scale property spaces. Each sweep has a
// serial reference and an OpenMP version that must report the same counts;
// only the order of sample failures may differ.

namespace pcpctl::kernels {

struct SweepResult {
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::vector<std::string> samples;  // first few failures, human readable

    bool ok() const noexcept { return checked > 0 && failures == 0; }
};

inline constexpr std::size_t kMaxSamples = 8;

/// Every pair (x, y) of words over {A,B} with 1 <= |x|, |y| <= max_length:
/// x == y  iff  rho(x) + rho_bar(y) == 1.
SweepResult rho_sweep_serial(std::size_t max_length);
SweepResult rho_sweep_parallel(std::size_t max_length);

/// Every pair stack alpha with 1 <= |alpha| <= max_length over {A,B,.}^2:
/// phi1 from F alpha Z' equals rho(trim(firsts)) and phi2 from S alpha Z'
/// equals rho_bar(trim(seconds)), by the evaluator and, when `with_oracle`,
/// by path enumeration as well.
SweepResult stack_sweep_serial(std::size_t max_length, Flavor flavor, bool with_oracle = true);
SweepResult stack_sweep_parallel(std::size_t max_length, Flavor flavor, bool with_oracle = true);

/// Every index word with k <= max_k: the witness check with t = rho of the
/// stacked first components agrees with direct checking, the evaluator agrees with
/// the oracle, and the condition at C alpha Z' matches the verdict.
SweepResult witness_sweep_serial(const PcpInstance& instance, std::size_t max_k, Flavor flavor);
SweepResult witness_sweep_parallel(const PcpInstance& instance, std::size_t max_k, Flavor flavor);

/// Same answer as pcpctl::brute_force_solve.
std::optional<IndexWord> brute_force_solve_parallel(const PcpInstance& instance, std::size_t max_k);

/// Random walks of up to `max_length` steps from Z in the quantum reductions
/// of `instances`: the squared modulus of the amplitude product equals the
/// product of squared moduli and the projected chain's cylinder probability.
SweepResult amplitude_sweep(const std::vector<PcpInstance>& instances, std::size_t paths, std::size_t max_length,
                            std::uint32_t seed);

/// Reproducible random instances with 1..max_pairs pairs and words of length
/// 1..max_width.
std::vector<PcpInstance> random_instances(std::size_t count, std::size_t max_pairs, std::size_t max_width,
                                          std::uint32_t seed);

/// Number of stacks / word pairs the sweeps visit.
std::size_t stack_count(std::size_t max_length);
std::size_t word_pair_count(std::size_t max_length);

}  // namespace pcpctl::kernels

#endif  // PCPCTL_KERNELS_HPP
