#ifndef PCPCTL_REDUCTION_HPP
#define PCPCTL_REDUCTION_HPP

#include "pcpctl/evaluator.hpp"
#include "pcpctl/pcp.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pcpctl {

// Compiles a PCP instance into a stateless pushdown system whose induced chain
// guesses a candidate solution (guess phase) and then audits it by two
// random walks whose success probabilities encode the stacked words in binary
// (verify phase). Word equality becomes the PCTL condition
//
//   P{=t/2}[phi1] & P{=(1-t)/2}[phi2]   at N alpha Z'.

/// Pair-component letters, in alphabet order.
inline constexpr std::array<char, 3> kPairLetters{'A', 'B', kBullet};

enum class Variant {
    eq10,      // C -> N, formula with P{=1}[X ...]
    remark9a,  // C -> N1 -> ... -> Nk -> N, formula with P{=1}[true U P{=1}[X ...]]
    remark9b,  // C -> F | S, formula without the X step
};

std::string_view to_string(Variant v);
/// Accepts "eq10", "remark9a", "remark9b". Throws std::invalid_argument.
Variant parse_variant(std::string_view text);

// Stack symbol names.
std::string pair_symbol(char x, char y);  // "(A,.)"
std::string mark_symbol(char x, char y);  // "X_(A,.)"
std::string guess_symbol(std::size_t i, std::size_t j);  // "G(1,2)"
std::string chain_symbol(std::size_t i);  // "N1"
inline constexpr std::string_view kBottom = "Z'";

struct RuleSpec {
    std::string lhs;
    std::vector<std::string> rhs;
    Weight weight;
};

/// Guess-phase rules: Z pushes G(i,1) Z' uniformly, G(i,j) writes the j-th
/// pair column, G(i,m+1) either stops (C) or starts another pair, uniformly.
/// The quantum flavor carries the same squared moduli with symbolic phases.
std::vector<RuleSpec> build_guess_rules(const ModifiedPcpInstance& instance, Flavor flavor);

/// Verify-phase rules with uniform probabilities (C -> N variant).
std::vector<RuleSpec> build_verify_rules(Flavor flavor);

/// The verify rules alone, as a valid standalone system (no Z, no G symbols).
PushdownSystem verification_system(Flavor flavor);

/// phi1 = (!S & AND_z(!X_(A,z) & !X_(B,z))) U OR_z X_(A,z)
PathPtr phi1();
/// phi2 = (!F & AND_z(!X_(z,A) & !X_(z,B))) U OR_z X_(z,B)
PathPtr phi2();

/// Letter indicators on {A, B, Z'}: theta(A) = theta(Z') = 1, theta(B) = 0,
/// theta_bar(B) = theta_bar(Z') = 1, theta_bar(A) = 0.
int theta(std::string_view letter);
int theta_bar(std::string_view letter);

/// rho(x1..xn Z') = sum_i theta(x_i) / 2^i with Z' as the final letter. The
/// argument is the word over {A,B}; a trailing "Z'" is accepted and ignored.
Rational rho(std::string_view word);
Rational rho_bar(std::string_view word);

/// Top-level formula for a rational constant 0 < t < 1.
StatePtr build_formula(const Rational& t, Variant variant = Variant::eq10);

/// The part of the formula checked at C alpha Z' (the operand of "true U").
StatePtr witness_condition(const Rational& t, Variant variant = Variant::eq10);

/// P{=t/2}[phi1] & P{=(1-t)/2}[phi2], checked at N alpha Z'.
StatePtr verify_condition(const Rational& t);

struct ReductionOutput {
    PushdownSystem system;
    PathPtr phi1;
    PathPtr phi2;
    HeadAssignment assignment;
    Variant variant = Variant::eq10;

    StatePtr formula(const Rational& t) const { return build_formula(t, variant); }
};

/// Full system: guess rules, verify rules, and the variant's rule changes.
/// `chain_length` is the number k of N_i links in remark9a.
ReductionOutput reduce(const ModifiedPcpInstance& instance, Flavor flavor, Variant variant = Variant::eq10,
                       std::size_t chain_length = 1);

/// A stacked candidate: pairs top-first, as they sit on the stack.
using PairStack = std::vector<std::pair<char, char>>;

std::string firsts(const PairStack& alpha);
std::string seconds(const PairStack& alpha);
/// "(A,A) (A,.) Z'"-style text of alpha followed by the bottom marker.
std::string format_stack(const PairStack& alpha);

/// Configuration head · alpha · Z' in `system`.
Configuration stacked(const PushdownSystem& system, std::string_view head, const PairStack& alpha);

struct GuessWitness {
    PairStack alpha;
    FinitePath path;  // Z => C alpha Z'
};

/// The unique guess-phase path for w. Throws std::out_of_range on a bad index.
GuessWitness guess_path_for(const ModifiedPcpInstance& instance, const IndexWord& w, const PushdownSystem& system);

struct WitnessReport {
    IndexWord w;
    PairStack alpha;
    Rational guess_probability;  // cylinder probability of Z => C alpha Z'
    Rational p1;                 // phi1 from N alpha Z'
    Rational p2;                 // phi2 from N alpha Z'
    std::optional<Rational> t;
    bool verdict = false;        // reduction's answer
    bool solution = false;       // direct concatenation check
    Rational oracle_p1;
    Rational oracle_p2;
    bool oracle_agrees = false;  // oracle exact (residual 0) and equal to p1, p2
    std::optional<bool> condition_holds;  // witness_condition(t) at C alpha Z', when t is given

    bool consistent() const { return verdict == solution && oracle_agrees; }
};

/// Builds the reduction once and checks index words against it. check() is
/// const and uses a private evaluator per call, so one checker may be shared
/// between threads.
class WitnessChecker {
public:
    WitnessChecker(PcpInstance instance, Flavor flavor, Variant variant = Variant::eq10, std::size_t chain_length = 1,
                   EvalOptions options = {});

    const PcpInstance& instance() const noexcept { return instance_; }
    const ModifiedPcpInstance& modified() const noexcept { return modified_; }
    const ReductionOutput& reduction() const noexcept { return reduction_; }
    const LazyChain& chain() const noexcept { return chain_; }

    /// With t: verdict is p1 = t/2 and p2 = (1-t)/2. Without t: verdict is
    /// p1 + p2 = 1/2, which is equivalent for t = 2 p1. Throws
    /// std::invalid_argument when t is not strictly between 0 and 1.
    WitnessReport check(const IndexWord& w, std::optional<Rational> t = std::nullopt) const;

private:
    PcpInstance instance_;
    ModifiedPcpInstance modified_;
    ReductionOutput reduction_;
    LazyChain chain_;
    EvalOptions options_;
};

WitnessReport check_witness(const PcpInstance& instance, const IndexWord& w, std::optional<Rational> t = std::nullopt,
                            Flavor flavor = Flavor::probabilistic);

}  // namespace pcpctl

#endif  // PCPCTL_REDUCTION_HPP
