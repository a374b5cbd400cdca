#include "pcpctl/pcp.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace pcpctl {

namespace {

void require_word(const std::string& word, bool allow_bullet) {
    if (word.empty()) throw std::invalid_argument("PCP words must be nonempty");
    for (char c : word) {
        if (c == 'A' || c == 'B') continue;
        if (allow_bullet && c == kBullet) continue;
        throw std::invalid_argument("illegal letter '" + std::string(1, c) + "' in word '" + word + "'");
    }
}

}  // namespace

PcpInstance::PcpInstance(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
    if (pairs_.empty()) throw std::invalid_argument("a PCP instance needs at least one pair");
    for (const auto& [u, v] : pairs_) {
        require_word(u, false);
        require_word(v, false);
    }
}

const PcpInstance::Pair& PcpInstance::pair(std::size_t one_based_index) const {
    if (one_based_index == 0 || one_based_index > pairs_.size()) {
        throw std::out_of_range("pair index " + std::to_string(one_based_index) + " outside 1.." +
                                std::to_string(pairs_.size()));
    }
    return pairs_[one_based_index - 1];
}

std::size_t PcpInstance::max_word_length() const noexcept {
    std::size_t m = 0;
    for (const auto& [u, v] : pairs_) m = std::max({m, u.size(), v.size()});
    return m;
}

ModifiedPcpInstance::ModifiedPcpInstance(std::vector<Pair> pairs, std::size_t width)
    : pairs_(std::move(pairs)), width_(width) {
    if (pairs_.empty()) throw std::invalid_argument("a modified PCP instance needs at least one pair");
    for (const auto& [u, v] : pairs_) {
        require_word(u, true);
        require_word(v, true);
        if (u.size() != width_ || v.size() != width_) {
            throw std::invalid_argument("modified PCP words must all have length " + std::to_string(width_));
        }
    }
}

const ModifiedPcpInstance::Pair& ModifiedPcpInstance::pair(std::size_t one_based_index) const {
    if (one_based_index == 0 || one_based_index > pairs_.size()) {
        throw std::out_of_range("pair index " + std::to_string(one_based_index) + " outside 1.." +
                                std::to_string(pairs_.size()));
    }
    return pairs_[one_based_index - 1];
}

IndexWord::IndexWord(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
    if (indices_.empty()) throw std::invalid_argument("index word must be nonempty");
    if (std::find(indices_.begin(), indices_.end(), std::size_t{0}) != indices_.end()) {
        throw std::invalid_argument("pair indices are 1-based");
    }
}

void IndexWord::check_range(std::size_t pair_count) const {
    for (auto j : indices_) {
        if (j > pair_count) {
            throw std::out_of_range("pair index " + std::to_string(j) + " outside 1.." + std::to_string(pair_count));
        }
    }
}

IndexWord parse_index_word(std::string_view text) {
    std::vector<std::size_t> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("malformed index word '" + std::string(text) + "'");
        }
        std::size_t value = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            value = value * 10 + static_cast<std::size_t>(text[i] - '0');
            ++i;
        }
        out.push_back(value);
    }
    return IndexWord(std::move(out));
}

std::string to_string(const IndexWord& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << w.indices()[i];
    }
    return os.str();
}

std::string trim(std::string_view word) {
    std::string out;
    out.reserve(word.size());
    for (char c : word) {
        if (c != kBullet) out.push_back(c);
    }
    return out;
}

ModifiedPcpInstance pad_instance(const PcpInstance& instance) {
    const std::size_t m = instance.max_word_length();
    std::vector<ModifiedPcpInstance::Pair> padded;
    padded.reserve(instance.size());
    for (const auto& [u, v] : instance.pairs()) {
        padded.emplace_back(u + std::string(m - u.size(), kBullet), v + std::string(m - v.size(), kBullet));
    }
    return ModifiedPcpInstance(std::move(padded), m);
}

bool check_solution(const PcpInstance& instance, const IndexWord& w) {
    w.check_range(instance.size());
    std::string top, bottom;
    for (auto j : w.indices()) {
        top += instance.pair(j).first;
        bottom += instance.pair(j).second;
    }
    return top == bottom;
}

std::pair<std::string, std::string> concatenate(const ModifiedPcpInstance& instance, const IndexWord& w) {
    w.check_range(instance.size());
    std::pair<std::string, std::string> out;
    for (auto j : w.indices()) {
        out.first += instance.pair(j).first;
        out.second += instance.pair(j).second;
    }
    return out;
}

std::optional<IndexWord> brute_force_solve(const PcpInstance& instance, std::size_t max_k) {
    if (max_k == 0) throw std::invalid_argument("max_k must be at least 1");
    std::optional<IndexWord> found;
    for (std::size_t k = 1; k <= max_k && !found; ++k) {
        for_each_index_word(instance.size(), k, [&](const IndexWord& w) {
            if (check_solution(instance, w)) {
                found = w;
                return false;
            }
            return true;
        });
    }
    return found;
}

}  // namespace pcpctl
