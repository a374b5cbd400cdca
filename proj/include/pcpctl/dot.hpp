#ifndef PCPCTL_DOT_HPP
#define PCPCTL_DOT_HPP

#include "pcpctl/markov.hpp"

#include <cstddef>
#include <functional>
#include <string>

namespace pcpctl {

struct UnfoldOptions {
    std::size_t depth = 8;
    /// Nodes satisfying this are drawn double-circled and not expanded.
    std::function<bool(const Configuration&)> stop;
    /// Skip the absorbing self-loop of the empty configuration.
    bool hide_epsilon_loop = true;
};

/// Depth-bounded unfolding of the chain from `start` as a Graphviz digraph.
/// Nodes are tree positions (a configuration may appear more than once),
/// labelled with the configuration; edges carry the rule weight. Output is
/// deterministic: children follow rule order.
std::string unfold_dot(const LazyChain& chain, const Configuration& start, const UnfoldOptions& options);

}  // namespace pcpctl

#endif  // PCPCTL_DOT_HPP
