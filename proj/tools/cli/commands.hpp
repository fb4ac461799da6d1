#ifndef CYCLEDUAL_TOOLS_COMMANDS_HPP
#define CYCLEDUAL_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cycledual/cyclo.hpp"
#include "cycledual/distance.hpp"

namespace cycledual::cli {

enum ExitCode : int { kSuccess = 0, kCheckFailure = 1, kUsageError = 2 };

struct ConstructOptions {
    DualKind kind = DualKind::euclidean;
    unsigned s = 1;
    unsigned m = 3;
    std::uint64_t mu = 1;
    std::optional<std::uint64_t> b;
    std::optional<std::string> out_path;
};

struct DistanceOptions {
    std::string cert_path;
    DistanceMethod method = DistanceMethod::exhaustive;
    std::optional<std::uint64_t> budget;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    unsigned workers = 1;
};

struct TableOptions {
    DualKind kind = DualKind::euclidean;
    unsigned s = 1;
    unsigned m_max = 3;
    std::vector<std::uint64_t> mu_filter;
    unsigned workers = 1;
};

int cmd_construct(const ConstructOptions& options, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& cert_path, std::ostream& out, std::ostream& err);
int cmd_distance(const DistanceOptions& options, std::ostream& out, std::ostream& err);
int cmd_table(const TableOptions& options, std::ostream& out, std::ostream& err);
int cmd_factor(std::uint64_t q, std::uint64_t n, std::ostream& out, std::ostream& err);

/// Parses a full command line (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// CYCLEDUAL_BUDGET when set, else the library default.
std::uint64_t default_budget();

}  // namespace cycledual::cli

#endif  // CYCLEDUAL_TOOLS_COMMANDS_HPP
