#ifndef PCPCTL_MARKOV_HPP
#define PCPCTL_MARKOV_HPP

#include "pcpctl/pushdown.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcpctl {

struct InvalidSystemError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotAPathError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The infinite-state (quantum) Markov chain induced by a pushdown system.
/// States are configurations; successors are computed on demand. The empty
/// configuration gets an absorbing self-loop of weight 1 so every state has a
/// successor.
///
/// Cheap to copy: the system is shared and immutable.
class LazyChain {
public:
    /// Throws InvalidSystemError listing the validation issues.
    explicit LazyChain(PushdownSystem system);

    const PushdownSystem& system() const noexcept { return *system_; }
    Flavor flavor() const noexcept { return system_->flavor(); }

    std::vector<Successor> successors(const Configuration& state) const;

    /// Weight of the direct transition from -> to, or nullopt if absent.
    std::optional<Weight> transition(const Configuration& from, const Configuration& to) const;

    /// Unit weight in this chain's flavor (empty product).
    Weight unit() const;

private:
    std::shared_ptr<const PushdownSystem> system_;
};

/// Finite path s_0 s_1 ... s_n.
struct FinitePath {
    std::vector<Configuration> states;
};

/// Product of step weights along the path. For quantum chains this is the
/// amplitude product: squared moduli multiply, phases add. Throws
/// NotAPathError if a step is not a transition, or the path is empty.
Weight path_weight(const LazyChain& chain, const FinitePath& path);

/// Probability of the cylinder set of `path`: the product of step
/// probabilities, or the squared modulus of the amplitude product.
Rational cylinder_probability(const LazyChain& chain, const FinitePath& path);

/// Replaces every amplitude by its squared modulus. The result validates as
/// a probabilistic system whenever the input validates as a quantum one.
PushdownSystem project_to_probabilistic(const PushdownSystem& quantum);

}  // namespace pcpctl

#endif  // PCPCTL_MARKOV_HPP
