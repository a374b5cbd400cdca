// Per-item checks shared by the serial and OpenMP sweeps.
#ifndef PCPCTL_KERNELS_ITEMS_HPP
#define PCPCTL_KERNELS_ITEMS_HPP

#include "pcpctl/kernels.hpp"
#include "pcpctl/oracle.hpp"

namespace pcpctl::kernels::detail {

// Item `index` of all words over {A,B} of length 1..max, shortest first.
std::string word_at(std::size_t index);
std::size_t word_count(std::size_t max_length);

PairStack stack_at(std::size_t index);
IndexWord index_word_at(std::size_t index, std::size_t pairs);
std::size_t index_word_count(std::size_t pairs, std::size_t max_k);

// Empty string on success, otherwise a description of the failure.
std::string check_rho_pair(const std::string& x, const std::string& y);

struct StackContext {
    LazyChain chain;
    HeadAssignment assignment;
    PathPtr phi1;
    PathPtr phi2;
    bool with_oracle;

    StackContext(Flavor flavor, bool with_oracle);
};
std::string check_stack(const StackContext& ctx, Evaluator& evaluator, const PairStack& alpha);

std::string check_witness_item(const WitnessChecker& checker, const IndexWord& w);

void record(SweepResult& result, const std::string& failure);
void merge(SweepResult& into, SweepResult&& part);

}  // namespace pcpctl::kernels::detail

#endif  // PCPCTL_KERNELS_ITEMS_HPP
