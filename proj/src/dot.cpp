#include "pcpctl/dot.hpp"

#include <sstream>

namespace pcpctl {

namespace {

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

struct Unfolder {
    const LazyChain& chain;
    const UnfoldOptions& options;
    std::ostringstream out;
    std::size_t next_id = 0;

    std::size_t node(const Configuration& config, bool stopped, bool frontier) {
        std::size_t id = next_id++;
        out << "  n" << id << " [label=\"" << escape(chain.system().format(config)) << '"';
        if (stopped) out << ", peripheries=2";
        if (frontier) out << ", style=dashed";
        out << "];\n";
        return id;
    }

    std::size_t visit(const Configuration& config, std::size_t depth) {
        bool stopped = options.stop && options.stop(config);
        bool frontier = !stopped && depth == options.depth && !config.empty();
        std::size_t id = node(config, stopped, frontier);
        if (stopped || depth == options.depth) return id;
        if (config.empty() && options.hide_epsilon_loop) return id;
        for (const auto& s : chain.successors(config)) {
            std::size_t child = visit(s.config, depth + 1);
            out << "  n" << id << " -> n" << child << " [label=\"" << escape(to_string(s.weight)) << "\"];\n";
        }
        return id;
    }
};

}  // namespace

std::string unfold_dot(const LazyChain& chain, const Configuration& start, const UnfoldOptions& options) {
    Unfolder u{chain, options, {}, 0};
    u.out << "digraph unfolding {\n";
    u.out << "  node [shape=box, fontname=\"monospace\"];\n";
    u.visit(start, 0);
    u.out << "}\n";
    return u.out.str();
}

}  // namespace pcpctl
