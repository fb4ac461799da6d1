#ifndef CYCLEDUAL_CYCLO_HPP
#define CYCLEDUAL_CYCLO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cycledual/gf.hpp"
#include "cycledual/poly.hpp"

namespace cycledual {

using Residue = std::uint64_t;

/// Which inner product a dual is taken with respect to.
enum class DualKind { euclidean, hermitian };

std::string_view to_string(DualKind kind) noexcept;
std::optional<DualKind> parse_dual_kind(std::string_view text) noexcept;

/**
 * @brief A subset of Z_n together with the coset base it is meant to be
 * closed under (q, or q^2 for Hermitian work).
 *
 * Members are kept sorted and unique. Closure is not enforced on
 * construction; predicates that need it check is_coset_closed().
 */
class DefiningSet {
public:
    DefiningSet(std::uint64_t n, std::uint64_t base, std::vector<Residue> members = {});

    std::uint64_t n() const noexcept { return n_; }
    std::uint64_t base() const noexcept { return base_; }
    const std::vector<Residue>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(Residue i) const noexcept;
    bool is_coset_closed() const;
    std::vector<bool> bitmap() const;

    friend bool operator==(const DefiningSet& a, const DefiningSet& b) noexcept {
        return a.n_ == b.n_ && a.base_ == b.base_ && a.members_ == b.members_;
    }
    friend bool operator!=(const DefiningSet& a, const DefiningSet& b) noexcept { return !(a == b); }

private:
    std::uint64_t n_;
    std::uint64_t base_;
    std::vector<Residue> members_;
};

/// Orbit of i under multiplication by q modulo n, ascending.
std::vector<Residue> coset(std::uint64_t n, std::uint64_t q, Residue i);

/// Partition of Z_n into q-cyclotomic cosets, ordered by minimal representative.
std::vector<std::vector<Residue>> all_cosets(std::uint64_t n, std::uint64_t q);

/// {c * i mod n : i in T}. c = -1 gives T^{-1}, c = -q gives T^{-q}.
DefiningSet set_map(const DefiningSet& t, std::int64_t c);
DefiningSet complement(const DefiningSet& t);
DefiningSet set_union(const DefiningSet& a, const DefiningSet& b);
bool disjoint(const DefiningSet& a, const DefiningSet& b);

/// C_1 ∪ ... ∪ C_b. b = 0 gives the empty set.
DefiningSet bch_defining_set(std::uint64_t n, std::uint64_t q, std::uint64_t b);

/// 1 + the longest cyclically consecutive run inside T (n + 1 when T = Z_n).
std::uint64_t bch_bound(const DefiningSet& t);

/// T ∩ T^{-1} = ∅ (euclidean) or T ∩ T^{-q} = ∅ (hermitian, q the
/// conjugation power). Throws std::invalid_argument("defining set not
/// coset-closed") when T is not closed under its base.
bool is_dual_containing_set(const DefiningSet& t, DualKind kind, std::uint64_t q);

enum class GcdForm { minus_minus, plus_minus };

/// Closed form of gcd(q^a - 1, q^b - 1) or gcd(q^a + 1, q^b - 1).
std::uint64_t gcd_lemma(std::uint64_t q, std::uint64_t a, std::uint64_t b, GcdForm form);

/// Smallest m >= 1 with q^m ≡ 1 (mod n); nullopt when gcd(q, n) != 1.
std::optional<unsigned> multiplicative_order(std::uint64_t q, std::uint64_t n);

/// All positive divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// q^e with overflow reported as nullopt.
std::optional<std::uint64_t> checked_pow(std::uint64_t q, std::uint64_t e) noexcept;

/// ∏_{j in coset} (x - beta^j), pulled back to the base field of emb.
/// Throws std::invalid_argument("coset/base mismatch") if a coefficient
/// falls outside the embedded subfield.
Poly minimal_polynomial(const std::vector<Residue>& coset, const FieldElement& beta, const Embedding& emb);

/// Comma-separated ascending decimal residues; empty string for ∅.
std::string format_residues(const std::vector<Residue>& members);
std::optional<std::vector<Residue>> parse_residues(const std::string& text);

}  // namespace cycledual

#endif  // CYCLEDUAL_CYCLO_HPP
