#ifndef CYCLEDUAL_DISTANCE_HPP
#define CYCLEDUAL_DISTANCE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "cycledual/gf.hpp"
#include "cycledual/matrix.hpp"

namespace cycledual {

enum class DistanceMethod { exhaustive, bch, sampled };

std::string_view to_string(DistanceMethod method) noexcept;
std::optional<DistanceMethod> parse_distance_method(std::string_view text) noexcept;

struct DistanceReport {
    DistanceMethod method;
    std::uint64_t value;
    bool exact;
    std::uint64_t enumerated;
    std::optional<std::uint64_t> seed;

    friend bool operator==(const DistanceReport&, const DistanceReport&) = default;
};

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 26;

struct ExhaustiveOptions {
    std::uint64_t budget = kDefaultBudget;
    /// Number of message-range partitions, each run on its own thread.
    unsigned workers = 1;
    /// When nonzero, enumeration stops as soon as a codeword of this weight
    /// is found; the bound proves it minimal.
    std::uint64_t known_lower_bound = 0;
};

/// Number of nonzero coordinates.
std::size_t weight(std::span<const Elem> word) noexcept;

/// q^k - 1, or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> nonzero_codeword_count(const Field& field, std::size_t k) noexcept;

/**
 * Minimum weight over all nonzero codewords of the row space of `basis`,
 * enumerating messages in lexicographic order (last symbol fastest).
 *
 * The rows must be linearly independent (std::invalid_argument "not a
 * basis" otherwise). Throws std::length_error("exhaustive enumeration
 * infeasible ...") when q^k - 1 exceeds the budget. The value does not
 * depend on the worker count.
 */
DistanceReport exact_min_distance(const Field& field, const Matrix& basis, const ExhaustiveOptions& options = {});

/// Minimum weight over `trials` random nonzero codewords drawn from a
/// seeded mt19937_64. Never below the true minimum distance.
DistanceReport sampled_weight_upper_bound(const Field& field, const Matrix& basis, std::uint64_t trials,
                                          std::uint64_t seed);

}  // namespace cycledual

#endif  // CYCLEDUAL_DISTANCE_HPP
