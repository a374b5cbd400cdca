#ifndef PCPCTL_PCP_HPP
#define PCPCTL_PCP_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pcpctl {

/// Padding letter of modified instances. Written '.' in every text format.
inline constexpr char kBullet = '.';

/// A PCP instance over the fixed alphabet {A, B}.
class PcpInstance {
public:
    using Pair = std::pair<std::string, std::string>;

    /// Throws std::invalid_argument when there are no pairs, a word is empty,
    /// or a word contains anything other than 'A' and 'B'.
    explicit PcpInstance(std::vector<Pair> pairs);

    const std::vector<Pair>& pairs() const noexcept { return pairs_; }
    std::size_t size() const noexcept { return pairs_.size(); }
    const Pair& pair(std::size_t one_based_index) const;

    /// Length of the longest word in any pair.
    std::size_t max_word_length() const noexcept;

private:
    std::vector<Pair> pairs_;
};

/// Instance whose words all have the same length m, padded with kBullet.
class ModifiedPcpInstance {
public:
    using Pair = std::pair<std::string, std::string>;

    /// Throws std::invalid_argument on ragged lengths or foreign letters.
    ModifiedPcpInstance(std::vector<Pair> pairs, std::size_t width);

    const std::vector<Pair>& pairs() const noexcept { return pairs_; }
    std::size_t size() const noexcept { return pairs_.size(); }
    std::size_t width() const noexcept { return width_; }
    const Pair& pair(std::size_t one_based_index) const;

private:
    std::vector<Pair> pairs_;
    std::size_t width_;
};

/// Nonempty sequence of 1-based pair indices j_1 ... j_k.
class IndexWord {
public:
    /// Throws std::invalid_argument when empty or when an index is 0.
    explicit IndexWord(std::vector<std::size_t> indices);

    const std::vector<std::size_t>& indices() const noexcept { return indices_; }
    std::size_t size() const noexcept { return indices_.size(); }

    /// Throws std::out_of_range if an index exceeds `pair_count`.
    void check_range(std::size_t pair_count) const;

    friend bool operator==(const IndexWord&, const IndexWord&) = default;

private:
    std::vector<std::size_t> indices_;
};

/// Parses "1,2,1" (commas or whitespace).
IndexWord parse_index_word(std::string_view text);
std::string to_string(const IndexWord& w);

/// Erases every kBullet.
std::string trim(std::string_view word);

/// Right-pads every word with kBullet up to the longest word length.
ModifiedPcpInstance pad_instance(const PcpInstance& instance);

/// u_{j1}...u_{jk} == v_{j1}...v_{jk}. Throws std::out_of_range on a bad index.
bool check_solution(const PcpInstance& instance, const IndexWord& w);

/// The two concatenations of a modified instance, bullets kept.
std::pair<std::string, std::string> concatenate(const ModifiedPcpInstance& instance, const IndexWord& w);

/// Shortest, then lexicographically first, solution with at most `max_k`
/// indices. Serial reference; see kernels::brute_force_solve_parallel.
std::optional<IndexWord> brute_force_solve(const PcpInstance& instance, std::size_t max_k);

/// Calls `visit` on every index word of length exactly k over 1..n, in
/// lexicographic order. Stops early when `visit` returns false.
template <typename Visitor>
void for_each_index_word(std::size_t n, std::size_t k, Visitor&& visit) {
    std::vector<std::size_t> digits(k, 1);
    while (true) {
        if (!visit(IndexWord(digits))) return;
        std::size_t pos = k;
        while (pos > 0 && digits[pos - 1] == n) {
            digits[pos - 1] = 1;
            --pos;
        }
        if (pos == 0) return;
        ++digits[pos - 1];
    }
}

}  // namespace pcpctl

#endif  // PCPCTL_PCP_HPP
