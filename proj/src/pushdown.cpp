#include "pcpctl/pushdown.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace pcpctl {

std::string_view to_string(Flavor flavor) {
    return flavor == Flavor::probabilistic ? "probabilistic" : "quantum";
}

std::size_t ConfigurationHash::operator()(const Configuration& c) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto s : c.stack) {
        h ^= s.value + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h ^ c.stack.size();
}

// ---------------------------------------------------------------------------
// PhaseForm

PhaseForm PhaseForm::term(std::string parameter, Rational coefficient) {
    PhaseForm f;
    coefficient.canonicalize();
    if (coefficient != 0) f.terms_.emplace(std::move(parameter), std::move(coefficient));
    return f;
}

PhaseForm& PhaseForm::operator+=(const PhaseForm& other) {
    for (const auto& [name, c] : other.terms_) {
        auto [it, inserted] = terms_.emplace(name, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

std::string to_string(const PhaseForm& phase) {
    if (phase.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [name, c] : phase.terms()) {
        Rational magnitude = abs(c);
        if (c < 0) {
            out += "-";
        } else if (!first) {
            out += "+";
        }
        if (magnitude != 1) out += to_string(magnitude) + "*";
        out += name;
        first = false;
    }
    return out;
}

PhaseForm parse_phase(std::string_view text) {
    PhaseForm result;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("malformed phase '" + std::string(text) + "': " + why);
    };
    skip_ws();
    if (text.substr(i) == "0") return result;
    bool first = true;
    while (true) {
        skip_ws();
        if (i >= text.size()) {
            if (first) fail("empty");
            break;
        }
        Rational sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        Rational coefficient = 1;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::size_t start = i;
            while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
            coefficient = parse_rational(text.substr(start, i - start));
            skip_ws();
            if (i >= text.size() || text[i] != '*') fail("expected '*' after coefficient");
            ++i;
            skip_ws();
        }
        std::size_t start = i;
        if (i >= text.size() || !(std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
            fail("expected parameter name");
        }
        while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
        result += PhaseForm::term(std::string(text.substr(start, i - start)), sign * coefficient);
        first = false;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Weight

Weight Weight::probability(Rational p) {
    p.canonicalize();
    return Weight(false, std::move(p), {});
}

Weight Weight::amplitude(Rational squared_modulus, PhaseForm phase) {
    squared_modulus.canonicalize();
    return Weight(true, std::move(squared_modulus), std::move(phase));
}

Weight Weight::operator*(const Weight& next) const {
    if (amplitude_ != next.amplitude_) throw std::logic_error("cannot compose a probability with an amplitude");
    return Weight(amplitude_, mass_ * next.mass_, phase_ + next.phase_);
}

std::string to_string(const Weight& weight) {
    if (!weight.is_amplitude()) return to_string(weight.mass());
    return "sq=" + to_string(weight.mass()) + " phase=" + to_string(weight.phase());
}

// ---------------------------------------------------------------------------
// PushdownSystem

SymbolId PushdownSystem::intern(std::string_view name) {
    if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
    if (name.empty() || name == "eps") throw std::invalid_argument("illegal stack symbol name '" + std::string(name) + "'");
    for (char c : name) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("stack symbol names cannot contain whitespace");
        }
    }
    SymbolId id{static_cast<std::uint32_t>(names_.size())};
    names_.emplace_back(name);
    index_.emplace(names_.back(), id);
    by_lhs_.emplace_back();
    return id;
}

std::optional<SymbolId> PushdownSystem::find(std::string_view name) const {
    if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
    return std::nullopt;
}

SymbolId PushdownSystem::at(std::string_view name) const {
    if (auto id = find(name)) return *id;
    throw std::out_of_range("unknown stack symbol '" + std::string(name) + "'");
}

void PushdownSystem::add_rule(std::string_view lhs, const std::vector<std::string>& rhs, Weight weight) {
    SymbolId head = intern(lhs);
    std::vector<SymbolId> body;
    body.reserve(rhs.size());
    for (const auto& s : rhs) body.push_back(intern(s));
    add_rule(head, std::move(body), std::move(weight));
}

void PushdownSystem::add_rule(SymbolId lhs, std::vector<SymbolId> rhs, Weight weight) {
    if (lhs.value >= names_.size()) throw std::out_of_range("rule head is not in the alphabet");
    for (auto s : rhs) {
        if (s.value >= names_.size()) throw std::out_of_range("rule body symbol is not in the alphabet");
    }
    if (rhs.size() > 2) {
        throw std::invalid_argument("rule for '" + names_[lhs.value] + "' pushes more than two symbols");
    }
    if (weight.is_amplitude() != (flavor_ == Flavor::quantum)) {
        throw std::invalid_argument("weight kind does not match the system flavor");
    }
    if (weight.mass() <= 0 || weight.mass() > 1) {
        throw std::invalid_argument("rule weight for '" + names_[lhs.value] + "' must lie in (0,1], got " +
                                    to_string(weight.mass()));
    }
    by_lhs_[lhs.value].push_back(rules_.size());
    rules_.push_back(Rule{lhs, std::move(rhs), std::move(weight)});
}

std::vector<std::reference_wrapper<const Rule>> PushdownSystem::rules_for(SymbolId lhs) const {
    std::vector<std::reference_wrapper<const Rule>> out;
    for (auto idx : by_lhs_.at(lhs.value)) out.emplace_back(rules_[idx]);
    return out;
}

Configuration PushdownSystem::parse_configuration(std::string_view text) const {
    Configuration config;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        if (token == "eps") continue;
        auto id = find(token);
        if (!id) throw std::invalid_argument("unknown stack symbol '" + token + "' in configuration");
        config.stack.push_back(*id);
    }
    return config;
}

std::string PushdownSystem::format(const Configuration& config) const {
    if (config.empty()) return "eps";
    std::string out;
    for (std::size_t i = 0; i < config.size(); ++i) {
        if (i) out += ' ';
        out += name(config.stack[i]);
    }
    return out;
}

std::vector<ValidationIssue> validate(const PushdownSystem& system) {
    std::vector<ValidationIssue> issues;
    for (std::uint32_t s = 0; s < system.alphabet_size(); ++s) {
        SymbolId id{s};
        auto rules = system.rules_for(id);
        Rational sum = 0;
        std::set<std::vector<SymbolId>> bodies;
        for (const Rule& r : rules) {
            sum += r.weight.mass();
            if (!bodies.insert(r.rhs).second) {
                issues.push_back({system.name(id), "duplicate right-hand side", sum});
            }
        }
        if (rules.empty()) {
            issues.push_back({system.name(id), "no rule", sum});
        } else if (sum != 1) {
            issues.push_back({system.name(id),
                              system.flavor() == Flavor::probabilistic ? "probabilities do not sum to 1"
                                                                       : "squared moduli do not sum to 1",
                              sum});
        }
    }
    return issues;
}

std::vector<Successor> successors(const PushdownSystem& system, const Configuration& config) {
    if (config.empty()) throw NoHeadError();
    std::vector<Successor> out;
    for (const Rule& r : system.rules_for(config.head())) {
        Configuration next;
        next.stack.reserve(r.rhs.size() + config.size() - 1);
        next.stack.insert(next.stack.end(), r.rhs.begin(), r.rhs.end());
        next.stack.insert(next.stack.end(), config.stack.begin() + 1, config.stack.end());
        out.push_back(Successor{std::move(next), r.weight});
    }
    return out;
}

}  // namespace pcpctl
