#include "pcpctl/io.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>

namespace pcpctl {

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    return in;
}

}  // namespace

PcpInstance read_instance(std::istream& in) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("instance file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("pairs") || !doc["pairs"].is_array()) {
        throw FormatError("instance file needs a \"pairs\" array");
    }
    std::vector<PcpInstance::Pair> pairs;
    for (const auto& p : doc["pairs"]) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
            throw FormatError("each pair must be a two-element array of strings");
        }
        pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
    try {
        return PcpInstance(std::move(pairs));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

PcpInstance load_instance(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_instance(in);
}

void write_instance(std::ostream& out, const PcpInstance& instance) {
    nlohmann::json doc;
    doc["pairs"] = nlohmann::json::array();
    for (const auto& [u, v] : instance.pairs()) doc["pairs"].push_back({u, v});
    out << doc.dump() << '\n';
}

PushdownSystem read_system(std::istream& in) {
    std::optional<PushdownSystem> system;
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& why) {
        throw FormatError("system file line " + std::to_string(line_no) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream words(line);
        std::string first;
        if (!(words >> first)) continue;

        if (first == "flavor") {
            std::string value;
            words >> value;
            if (system) fail("duplicate flavor line");
            if (value == "probabilistic") {
                system.emplace(Flavor::probabilistic);
            } else if (value == "quantum") {
                system.emplace(Flavor::quantum);
            } else {
                fail("unknown flavor '" + value + "'");
            }
            continue;
        }
        if (!system) fail("the flavor line must come first");
        if (first == "alphabet") {
            std::string symbol;
            while (words >> symbol) system->intern(symbol);
            continue;
        }

        auto at = line.find('@');
        if (at == std::string::npos) fail("rule without '@ weight'");
        std::istringstream lhs_rhs(line.substr(0, at));
        std::string lhs, arrow, symbol;
        lhs_rhs >> lhs >> arrow;
        if (arrow != "->") fail("expected 'X -> alpha @ weight'");
        std::vector<std::string> rhs;
        while (lhs_rhs >> symbol) {
            if (symbol != "eps") rhs.push_back(symbol);
        }

        std::string weight_text = line.substr(at + 1);
        try {
            if (system->flavor() == Flavor::probabilistic) {
                system->add_rule(lhs, rhs, Weight::probability(parse_rational(weight_text)));
            } else {
                auto sq = weight_text.find("sq=");
                auto ph = weight_text.find("phase=");
                if (sq == std::string::npos) fail("quantum weight needs sq=<rational>");
                std::string sq_text = weight_text.substr(sq + 3, ph == std::string::npos ? std::string::npos : ph - sq - 3);
                PhaseForm phase;
                if (ph != std::string::npos) phase = parse_phase(weight_text.substr(ph + 6));
                system->add_rule(lhs, rhs, Weight::amplitude(parse_rational(sq_text), std::move(phase)));
            }
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }
    if (!system) throw FormatError("system file has no flavor line");
    return std::move(*system);
}

PushdownSystem load_system(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_system(in);
}

void write_system(std::ostream& out, const PushdownSystem& system) {
    out << "flavor " << to_string(system.flavor()) << '\n';
    out << "alphabet";
    for (const auto& name : system.alphabet()) out << ' ' << name;
    out << '\n';
    for (const auto& rule : system.rules()) {
        out << system.name(rule.lhs) << " ->";
        if (rule.rhs.empty()) out << " eps";
        for (auto s : rule.rhs) out << ' ' << system.name(s);
        out << " @ " << to_string(rule.weight) << '\n';
    }
}

std::string witness_report_json(const WitnessReport& r, const PcpInstance& instance) {
    nlohmann::json doc;
    doc["instance"] = nlohmann::json::array();
    for (const auto& [u, v] : instance.pairs()) doc["instance"].push_back({u, v});
    doc["w"] = r.w.indices();
    doc["alpha"] = format_stack(r.alpha);
    doc["guess_probability"] = to_string(r.guess_probability);
    doc["p1"] = to_string(r.p1);
    doc["p2"] = to_string(r.p2);
    doc["t"] = r.t ? nlohmann::json(to_string(*r.t)) : nlohmann::json(nullptr);
    doc["verdict"] = r.verdict;
    doc["solution"] = r.solution;
    doc["oracle"] = {{"p1", to_string(r.oracle_p1)}, {"p2", to_string(r.oracle_p2)}, {"agrees", r.oracle_agrees}};
    if (r.condition_holds) doc["condition_holds"] = *r.condition_holds;
    doc["consistent"] = r.consistent();
    return doc.dump(2);
}

std::string witness_report_text(const WitnessReport& r) {
    std::ostringstream os;
    os << "solution: " << (r.verdict ? "yes" : "no") << "; p1=" << to_string(r.p1) << " p2=" << to_string(r.p2)
       << "; oracle " << (r.oracle_agrees ? "agrees" : "DISAGREES") << '\n';
    os << "w: " << to_string(r.w) << '\n';
    os << "alpha: " << format_stack(r.alpha) << '\n';
    os << "guess path probability: " << to_string(r.guess_probability) << '\n';
    if (r.t) {
        os << "t: " << to_string(*r.t) << '\n';
        if (r.condition_holds) os << "condition at C alpha Z': " << (*r.condition_holds ? "true" : "false") << '\n';
    } else {
        os << "p1+p2: " << to_string(r.p1 + r.p2) << " (1/2 iff the words match)\n";
    }
    os << "direct check: " << (r.solution ? "solution" : "not a solution") << '\n';
    os << "consistent: " << (r.consistent() ? "yes" : "no") << '\n';
    return os.str();
}

}  // namespace pcpctl
