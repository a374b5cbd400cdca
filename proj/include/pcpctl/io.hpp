#ifndef PCPCTL_IO_HPP
#define PCPCTL_IO_HPP

#include "pcpctl/oracle.hpp"
#include "pcpctl/reduction.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace pcpctl {

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// PCP instance files are JSON:  {"pairs": [["A", "ABA"], ["B", "A"]]}

PcpInstance read_instance(std::istream& in);
PcpInstance load_instance(const std::filesystem::path& path);
void write_instance(std::ostream& out, const PcpInstance& instance);

// Pushdown-system files are line-oriented text:
//
//   # comment
//   flavor probabilistic            (or quantum)
//   alphabet Z Z' C ...             (optional; fixes symbol order)
//   Z -> G(1,1) Z' @ 1/2
//   F -> eps @ 1
//   N -> F @ sq=1/2 phase=1/2*t4     (quantum)
//
// Symbols are separated by whitespace; "eps" is the empty word.

PushdownSystem read_system(std::istream& in);
PushdownSystem load_system(const std::filesystem::path& path);
void write_system(std::ostream& out, const PushdownSystem& system);

/// Structured witness report as JSON text.
std::string witness_report_json(const WitnessReport& report, const PcpInstance& instance);

/// "solution: yes; p1=3/8 p2=1/8; oracle agrees" plus detail lines.
std::string witness_report_text(const WitnessReport& report);

}  // namespace pcpctl

#endif  // PCPCTL_IO_HPP
