#ifndef CYCLEDUAL_CONSTRUCT_HPP
#define CYCLEDUAL_CONSTRUCT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cycledual/cyclic.hpp"
#include "cycledual/cyclo.hpp"
#include "cycledual/distance.hpp"
#include "cycledual/matrix.hpp"
#include "cycledual/poly.hpp"

namespace cycledual {

/// Output position p takes input position source[p].
struct CoordinatePermutation {
    std::vector<std::size_t> source;

    std::size_t size() const noexcept { return source.size(); }
    bool is_bijection() const;
    CoordinatePermutation inverse() const;
    std::vector<Elem> apply(std::span<const Elem> word) const;
    Matrix apply_rows(const Matrix& m) const;
};

/**
 * Interleaving that turns (x | y), |x| = |y| = n odd, into w with
 * w_p = x_{p mod n} for even p and w_p = y_{p mod n} for odd p. This is the
 * coordinate map behind the identity
 * w(x) = a_even(x^2) + x^{n+1} a_odd(x^2) + x b_odd(x^2) + x^n b_even(x^2).
 */
CoordinatePermutation interleave_permutation(std::uint64_t n);

/// out[p] = in[(p - by) mod length], i.e. multiplication by x^by.
CoordinatePermutation cyclic_shift(std::size_t length, std::size_t by = 1);

/// The [u | u + v] code built from a dual-containing cyclic code C and its
/// dual of the chosen kind.
struct UUVCode {
    CyclicCode inner;
    CyclicCode inner_dual;
    DualKind kind;
    /// Rows [u | u] for u in a basis of C, then [0 | v] for v in a basis of the dual.
    Matrix basis;
    std::uint64_t bch_inner;
    std::uint64_t bch_dual;
    /// min{bch_dual, 2 * bch_inner}.
    std::uint64_t floor_min;

    std::size_t length() const noexcept { return basis.cols(); }
    std::size_t dimension() const noexcept { return basis.rows(); }
};

/// Builds [u | u + v] and checks self-duality before returning. Throws
/// std::invalid_argument when C is not dual-containing of the requested kind.
UUVCode uuv_construct(const CyclicCode& inner, DualKind kind);

/// g1^2 g2, where g1 generates C and g1 g2 generates its dual.
/// Throws std::invalid_argument("containment violated") when g1 does not
/// divide the dual generator.
Poly repeated_root_generator(const CyclicCode& inner, DualKind kind);

struct VanLintReport {
    bool passed = false;
    bool dimension_match = false;
    /// First basis row whose interleaved image is not a multiple of g1^2 g2.
    std::optional<std::size_t> failing_row;

    explicit operator bool() const noexcept { return passed; }
};

/// Interleaves every basis row and tests divisibility by g1^2 g2; with equal
/// dimensions that proves the two codes coincide.
VanLintReport verify_van_lint_equivalence(const UUVCode& code);

/// dimension == length / 2 and G G^T = 0 (or G conj(G)^T = 0 for hermitian,
/// conjugation by the square root of the field order).
/// Throws std::invalid_argument("not a basis") on dependent rows.
bool verify_self_dual(const Field& field, const Matrix& basis, DualKind kind);

/// Every permuted basis row lies in the row space of the basis.
bool check_code_automorphism(const Field& field, const Matrix& basis, const CoordinatePermutation& perm);

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    std::string to_string() const;
    friend bool operator==(const Rational&, const Rational&) = default;
};

struct FamilyParams {
    DualKind kind = DualKind::euclidean;
    unsigned s = 1;
    unsigned m = 3;
    std::uint64_t mu = 1;
    std::optional<std::uint64_t> b_override;
};

/// The defining-set half of a family run: no fields or polynomials, so it
/// scales to lengths where building the codes would not.
struct FamilyPlan {
    FamilyParams params;
    /// Alphabet is GF(2^alphabet_degree): s for euclidean, 2s for hermitian.
    unsigned alphabet_degree;
    /// 2^s, the q of the design-distance formulas.
    std::uint64_t q;
    /// Base of the cyclotomic cosets, |alphabet|.
    std::uint64_t coset_base;
    std::uint64_t n_inner;
    Rational delta;
    std::uint64_t b;
    DefiningSet defining_set;
};

/// Validates parameters (m odd, mu | 2^{sm} - 1 or 2^{2sm} - 1, at most
/// 32-bit extensions, b >= 1 unless overridden) and computes the inner
/// defining set C_1 ∪ ... ∪ C_b with b = ceil(delta) - 1.
/// Throws std::invalid_argument with a readable message on bad input.
FamilyPlan plan_family(const FamilyParams& params);

/// Closed-form distance floor of the family, with n the outer length.
struct PaperFloor {
    /// Radicand as a reduced fraction and the subtracted term (0 for hermitian).
    Rational radicand;
    Rational offset;
    double value;
    /// max(1, ceil(value)), computed exactly.
    std::int64_t clamped;

    std::string expression() const;
};

PaperFloor paper_floor(DualKind kind, unsigned s, unsigned m, std::uint64_t mu);

struct CertificateChecks {
    bool dual_containing = false;
    bool self_dual = false;
    bool van_lint_equivalence = false;
    bool cyclic_invariance = false;

    bool all() const noexcept { return dual_containing && self_dual && van_lint_equivalence && cyclic_invariance; }
    friend bool operator==(const CertificateChecks&, const CertificateChecks&) = default;
};

/// Full record of one family run.
struct SelfDualCertificate {
    FamilyPlan plan;
    std::uint64_t n;  // outer length 2 n_inner
    std::uint64_t k;  // outer dimension n_inner

    Field alphabet;
    unsigned ext_degree;
    std::uint64_t ext_modulus;
    Elem primitive_element;
    std::uint64_t beta_exponent;

    Poly inner_generator;
    Poly dual_generator;
    Poly g2;
    Poly outer_generator;
    DefiningSet dual_defining_set;

    std::uint64_t bch_inner;
    std::uint64_t bch_dual;
    std::uint64_t floor_min;
    PaperFloor paper;

    CertificateChecks checks;
    std::optional<DistanceReport> distance;
};

/// Runs the whole pipeline: inner BCH code, dual-containment, [u | u + v],
/// g1^2 g2, interleaving check, shift invariance of the interleaved code.
/// Throws std::invalid_argument if the constructed defining set is not
/// dual-containing.
SelfDualCertificate build_family(const FamilyParams& params);

/// [u | u] / [0 | v] rows from generators of C and of its dual.
Matrix uuv_basis(const Field& field, std::uint64_t n, const Poly& inner_generator, const Poly& dual_generator);

}  // namespace cycledual

#endif  // CYCLEDUAL_CONSTRUCT_HPP
