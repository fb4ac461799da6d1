#include "cycledual/distance.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <future>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace cycledual {

std::string_view to_string(DistanceMethod method) noexcept {
    switch (method) {
        case DistanceMethod::exhaustive: return "exhaustive";
        case DistanceMethod::bch: return "bch";
        case DistanceMethod::sampled: return "sampled";
    }
    return "unknown";
}

std::optional<DistanceMethod> parse_distance_method(std::string_view text) noexcept {
    if (text == "exhaustive") return DistanceMethod::exhaustive;
    if (text == "bch") return DistanceMethod::bch;
    if (text == "sampled") return DistanceMethod::sampled;
    return std::nullopt;
}

std::size_t weight(std::span<const Elem> word) noexcept {
    return static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Elem e) { return e != 0; }));
}

std::optional<std::uint64_t> nonzero_codeword_count(const Field& field, std::size_t k) noexcept {
    const auto bits = static_cast<std::uint64_t>(field.degree()) * k;
    if (bits > 64) return std::nullopt;
    if (bits == 64) return std::numeric_limits<std::uint64_t>::max();
    return (std::uint64_t{1} << bits) - 1;
}

namespace {

void require_basis(const Field& field, const Matrix& basis) {
    if (basis.rows() == 0) throw std::invalid_argument("no basis");
    if (rank(field, basis) != basis.rows()) throw std::invalid_argument("not a basis");
}

struct ChunkResult {
    std::uint64_t min_weight = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t enumerated = 0;
};

// scaled[t][j] holds (2^t - 1) * row j. Stepping symbol v to v + 1 (mod q)
// adds (v xor (v + 1)) * row, and v xor (v + 1) is always of that form.
using ScaledRows = std::vector<std::vector<std::vector<Elem>>>;

ScaledRows scale_rows(const Field& field, const Matrix& basis) {
    const unsigned s = field.degree();
    ScaledRows scaled(s + 1);
    for (unsigned t = 1; t <= s; ++t) {
        const auto c = static_cast<Elem>((std::uint64_t{1} << t) - 1);
        scaled[t].resize(basis.rows());
        for (std::size_t j = 0; j < basis.rows(); ++j) {
            auto& out = scaled[t][j];
            out.resize(basis.cols());
            const auto row = basis.row(j);
            for (std::size_t l = 0; l < basis.cols(); ++l) out[l] = field.mul(c, row[l]);
        }
    }
    return scaled;
}

ChunkResult enumerate_range(const Field& field, const Matrix& basis, const ScaledRows& scaled, std::uint64_t lo,
                            std::uint64_t hi, std::uint64_t stop_at, std::atomic<bool>& stop) {
    ChunkResult result;
    if (lo >= hi) return result;
    const unsigned s = field.degree();
    const std::size_t k = basis.rows();
    const std::size_t n = basis.cols();
    const auto mask = static_cast<Elem>(field.size() - 1);

    std::vector<Elem> digits(k);
    std::vector<Elem> word(n, 0);
    for (std::size_t j = 0; j < k; ++j) {
        digits[j] = static_cast<Elem>((lo >> (s * (k - 1 - j))) & mask);
        if (digits[j] == 0) continue;
        const auto row = basis.row(j);
        for (std::size_t l = 0; l < n; ++l) word[l] ^= field.mul(digits[j], row[l]);
    }

    for (std::uint64_t idx = lo;; ++idx) {
        const std::uint64_t w = weight(word);
        ++result.enumerated;
        if (w < result.min_weight) {
            result.min_weight = w;
            if (w <= stop_at) stop.store(true, std::memory_order_relaxed);
        }
        if (idx + 1 >= hi) break;
        if ((idx & 0x3ff) == 0 && stop.load(std::memory_order_relaxed)) break;

        std::size_t j = k - 1;
        while (digits[j] == mask) {
            digits[j] = 0;
            const auto& add = scaled[s][j];
            for (std::size_t l = 0; l < n; ++l) word[l] ^= add[l];
            --j;
        }
        const auto t = static_cast<unsigned>(std::countr_one(digits[j])) + 1;
        const auto& add = scaled[t][j];
        for (std::size_t l = 0; l < n; ++l) word[l] ^= add[l];
        ++digits[j];
    }
    return result;
}

}  // namespace

DistanceReport exact_min_distance(const Field& field, const Matrix& basis, const ExhaustiveOptions& options) {
    require_basis(field, basis);
    const auto count = nonzero_codeword_count(field, basis.rows());
    if (!count || *count > options.budget) {
        const std::string required =
            count ? std::to_string(*count) : "q^" + std::to_string(basis.rows()) + " - 1 (beyond 64 bits)";
        throw std::length_error("exhaustive enumeration infeasible: requires " + required + " codewords, budget " +
                                std::to_string(options.budget));
    }

    const ScaledRows scaled = scale_rows(field, basis);
    const std::uint64_t workers = std::clamp<std::uint64_t>(options.workers, 1, *count);
    const std::uint64_t stop_at = options.known_lower_bound == 0 ? 0 : options.known_lower_bound;
    std::atomic<bool> stop{false};

    // Message indices 1..count; partition i covers [bound(i), bound(i + 1)).
    auto bound = [&](std::uint64_t i) {
        return 1 + static_cast<std::uint64_t>(static_cast<unsigned __int128>(*count) * i / workers);
    };
    std::vector<std::future<ChunkResult>> jobs;
    for (std::uint64_t i = 1; i < workers; ++i) {
        jobs.push_back(std::async(std::launch::async, enumerate_range, std::cref(field), std::cref(basis),
                                  std::cref(scaled), bound(i), bound(i + 1), stop_at, std::ref(stop)));
    }
    ChunkResult total = enumerate_range(field, basis, scaled, bound(0), bound(1), stop_at, stop);
    for (auto& job : jobs) {
        const ChunkResult part = job.get();
        total.min_weight = std::min(total.min_weight, part.min_weight);
        total.enumerated += part.enumerated;
    }

    const bool completed = total.enumerated == *count;
    const bool proven = completed || (stop_at != 0 && total.min_weight == stop_at);
    return DistanceReport{DistanceMethod::exhaustive, total.min_weight, proven, total.enumerated, std::nullopt};
}

DistanceReport sampled_weight_upper_bound(const Field& field, const Matrix& basis, std::uint64_t trials,
                                          std::uint64_t seed) {
    if (trials == 0) throw std::invalid_argument("trials must be positive");
    require_basis(field, basis);
    const std::size_t k = basis.rows();
    const std::size_t n = basis.cols();
    const std::uint64_t q = field.size();
    const unsigned s = field.degree();

    // products[j][c] = c * row j, when small enough to tabulate.
    const bool tabulate = q * k * n <= (std::uint64_t{1} << 24);
    std::vector<std::vector<Elem>> products;
    if (tabulate) {
        products.resize(k);
        for (std::size_t j = 0; j < k; ++j) {
            products[j].resize(q * n);
            const auto row = basis.row(j);
            for (std::uint64_t c = 0; c < q; ++c) {
                for (std::size_t l = 0; l < n; ++l) products[j][c * n + l] = field.mul(static_cast<Elem>(c), row[l]);
            }
        }
    }

    std::mt19937_64 engine(seed);
    std::uint64_t pool = 0;
    unsigned pool_bits = 0;
    auto draw_symbol = [&]() {
        if (pool_bits < s) {
            pool = engine();
            pool_bits = 64;
        }
        const auto symbol = static_cast<Elem>(pool & (q - 1));
        pool >>= s;
        pool_bits -= s;
        return symbol;
    };

    std::vector<Elem> message(k);
    std::vector<Elem> word(n);
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        bool nonzero = false;
        while (!nonzero) {
            for (auto& m : message) {
                m = draw_symbol();
                nonzero = nonzero || m != 0;
            }
        }
        std::fill(word.begin(), word.end(), 0);
        for (std::size_t j = 0; j < k; ++j) {
            if (message[j] == 0) continue;
            if (tabulate) {
                const Elem* add = products[j].data() + static_cast<std::size_t>(message[j]) * n;
                for (std::size_t l = 0; l < n; ++l) word[l] ^= add[l];
            } else {
                const auto row = basis.row(j);
                for (std::size_t l = 0; l < n; ++l) word[l] ^= field.mul(message[j], row[l]);
            }
        }
        best = std::min<std::uint64_t>(best, weight(word));
    }
    return DistanceReport{DistanceMethod::sampled, best, false, trials, seed};
}

}  // namespace cycledual
