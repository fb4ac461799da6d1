#include "cycledual/construct.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cycledual {

bool CoordinatePermutation::is_bijection() const {
    std::vector<bool> hit(source.size(), false);
    for (std::size_t s : source) {
        if (s >= source.size() || hit[s]) return false;
        hit[s] = true;
    }
    return true;
}

CoordinatePermutation CoordinatePermutation::inverse() const {
    CoordinatePermutation inv;
    inv.source.resize(source.size());
    for (std::size_t p = 0; p < source.size(); ++p) inv.source[source[p]] = p;
    return inv;
}

std::vector<Elem> CoordinatePermutation::apply(std::span<const Elem> word) const {
    if (word.size() != source.size()) throw std::invalid_argument("size mismatch");
    std::vector<Elem> out(word.size());
    for (std::size_t p = 0; p < source.size(); ++p) out[p] = word[source[p]];
    return out;
}

Matrix CoordinatePermutation::apply_rows(const Matrix& m) const {
    Matrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto permuted = apply(m.row(r));
        std::copy(permuted.begin(), permuted.end(), out.row(r).begin());
    }
    return out;
}

CoordinatePermutation interleave_permutation(std::uint64_t n) {
    if (n % 2 == 0) throw std::invalid_argument("interleaving needs an odd length");
    CoordinatePermutation perm;
    perm.source.resize(2 * n);
    for (std::uint64_t p = 0; p < 2 * n; ++p) {
        perm.source[p] = static_cast<std::size_t>(p % 2 == 0 ? p % n : n + p % n);
    }
    return perm;
}

CoordinatePermutation cyclic_shift(std::size_t length, std::size_t by) {
    CoordinatePermutation perm;
    perm.source.resize(length);
    for (std::size_t p = 0; p < length; ++p) perm.source[p] = (p + length - by % length) % length;
    return perm;
}

Matrix uuv_basis(const Field& field, std::uint64_t n, const Poly& inner_generator, const Poly& dual_generator) {
    const auto len = static_cast<std::size_t>(n);
    Matrix basis(0, 2 * len);
    std::vector<Elem> row(2 * len);
    auto add_shifts = [&](const Poly& g, bool repeat_left) {
        if (g.field() != field) throw std::invalid_argument("field mismatch");
        if (g.is_zero() || g.degree() > static_cast<int>(len)) return;
        const auto& c = g.coeffs();
        for (std::size_t i = 0; i + c.size() <= len; ++i) {
            std::fill(row.begin(), row.end(), 0);
            for (std::size_t j = 0; j < c.size(); ++j) {
                row[len + i + j] = c[j];
                if (repeat_left) row[i + j] = c[j];
            }
            basis.append_row(row);
        }
    };
    add_shifts(inner_generator, true);
    add_shifts(dual_generator, false);
    return basis;
}

UUVCode uuv_construct(const CyclicCode& inner, DualKind kind) {
    if (!is_dual_containing(inner, kind))
        throw std::invalid_argument("precondition violated: code is not dual-containing");
    CyclicCode d = dual(inner, kind);
    Matrix basis = uuv_basis(inner.field(), inner.length(), inner.generator(), d.generator());
    const std::uint64_t bch_inner = bch_bound(inner.defining_set());
    const std::uint64_t bch_dual = bch_bound(d.defining_set());
    UUVCode out{inner, std::move(d), kind, std::move(basis), bch_inner, bch_dual, std::min(bch_dual, 2 * bch_inner)};
    if (!verify_self_dual(inner.field(), out.basis, kind))
        throw std::logic_error("[u|u+v] code failed the self-duality identity");
    return out;
}

Poly repeated_root_generator(const CyclicCode& inner, DualKind kind) {
    const Poly& g1 = inner.generator();
    const CyclicCode d = dual(inner, kind);
    auto [g2, r] = d.generator().divrem(g1);
    if (!r.is_zero()) throw std::invalid_argument("containment violated");
    return g1 * g1 * g2;
}

VanLintReport verify_van_lint_equivalence(const UUVCode& code) {
    VanLintReport report;
    const Poly outer = repeated_root_generator(code.inner, code.kind);
    const std::uint64_t n = code.inner.length();
    const auto perm = interleave_permutation(n);
    for (std::size_t r = 0; r < code.basis.rows(); ++r) {
        const auto w = perm.apply(code.basis.row(r));
        if (!Poly(code.inner.field(), w).divisible_by(outer)) {
            report.failing_row = r;
            break;
        }
    }
    const std::size_t outer_dim = static_cast<std::size_t>(2 * n) - static_cast<std::size_t>(outer.degree());
    report.dimension_match = rank(code.inner.field(), code.basis) == outer_dim;
    report.passed = !report.failing_row && report.dimension_match;
    return report;
}

bool verify_self_dual(const Field& field, const Matrix& basis, DualKind kind) {
    const unsigned conj_k =
        kind == DualKind::hermitian ? static_cast<unsigned>(std::countr_zero(conjugation_power(field))) : 0;
    if (rank(field, basis) != basis.rows()) throw std::invalid_argument("not a basis");
    if (2 * basis.rows() != basis.cols()) return false;
    return rows_pairwise_orthogonal(field, basis, conj_k);
}

bool check_code_automorphism(const Field& field, const Matrix& basis, const CoordinatePermutation& perm) {
    if (perm.size() != basis.cols()) throw std::invalid_argument("size mismatch");
    const RowSpace space(field, basis);
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        if (!space.contains(perm.apply(basis.row(r)))) return false;
    }
    return true;
}

std::string Rational::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

Rational reduced(std::int64_t num, std::int64_t den) {
    const std::int64_t g = std::gcd(num, den);
    return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

std::uint64_t pow2(unsigned e) {
    return std::uint64_t{1} << e;
}

// ceil(num / den) - 1 for num >= 0, den > 0, floored at zero.
std::uint64_t cosets_below(const Rational& delta) {
    if (delta.num <= 0) return 0;
    const auto c = static_cast<std::uint64_t>((delta.num + delta.den - 1) / delta.den);
    return c - 1;
}

// z >= sqrt(radicand) - offset, decided exactly when the products fit.
bool at_least_floor(std::int64_t z, const Rational& radicand, const Rational& offset) {
    using i128 = __int128;
    const i128 t = static_cast<i128>(z) * offset.den + offset.num;  // (z + offset) * offset.den
    if (t < 0) return false;
    const i128 lhs_scale = static_cast<i128>(radicand.den);
    const i128 rhs = static_cast<i128>(radicand.num) * offset.den * offset.den;
    i128 lhs;
    if (__builtin_mul_overflow(t, t, &lhs) || __builtin_mul_overflow(lhs, lhs_scale, &lhs)) {
        const long double lv = static_cast<long double>(z) + static_cast<long double>(offset.num) / offset.den;
        return lv >= std::sqrt(static_cast<long double>(radicand.num) / radicand.den);
    }
    return lhs >= rhs;
}

}  // namespace

std::string PaperFloor::expression() const {
    std::string out = "sqrt(" + radicand.to_string() + ")";
    if (offset.num != 0) out += " - " + offset.to_string();
    return out;
}

FamilyPlan plan_family(const FamilyParams& params) {
    if (params.s < 1) throw std::invalid_argument("s must be at least 1");
    if (params.m < 1 || params.m % 2 == 0) throw std::invalid_argument("m must be odd");
    const unsigned alphabet_degree = params.kind == DualKind::euclidean ? params.s : 2 * params.s;
    const std::uint64_t bits = static_cast<std::uint64_t>(alphabet_degree) * params.m;
    if (bits > Field::kMaxDegree) throw std::invalid_argument("parameters need an extension field beyond 2^32");
    const std::uint64_t order = pow2(static_cast<unsigned>(bits)) - 1;
    if (params.mu == 0 || order % params.mu != 0) {
        throw std::invalid_argument(params.kind == DualKind::euclidean ? "mu must divide 2^(s*m) - 1"
                                                                       : "mu must divide 2^(2*s*m) - 1");
    }

    const std::uint64_t q = pow2(params.s);
    const std::uint64_t n_inner = order / params.mu;
    std::int64_t num;
    if (params.kind == DualKind::euclidean) {
        num = static_cast<std::int64_t>(pow2(params.s * (params.m + 1) / 2) - q);
    } else {
        num = static_cast<std::int64_t>(pow2(params.s * params.m) - 1);
    }
    const Rational delta = reduced(num, static_cast<std::int64_t>(params.mu));

    std::uint64_t b = cosets_below(delta);
    if (params.b_override) {
        b = *params.b_override;
    } else if (b < 1) {
        throw std::invalid_argument("design distance too small: no cosets to take (b = 0)");
    }
    if (b != 0 && b >= n_inner) throw std::invalid_argument("coset count must be below the inner length");

    const std::uint64_t coset_base = pow2(alphabet_degree);
    return FamilyPlan{params,  alphabet_degree, q, coset_base,
                      n_inner, delta,           b, bch_defining_set(n_inner, coset_base, b)};
}

PaperFloor paper_floor(DualKind kind, unsigned s, unsigned m, std::uint64_t mu) {
    FamilyParams probe{kind, s, m, mu, std::uint64_t{0}};
    (void)plan_family(probe);

    const auto imu = static_cast<std::int64_t>(mu);
    PaperFloor out{};
    if (kind == DualKind::euclidean) {
        // sqrt(2^{s-1} n / mu) - 2^s / mu with n = 2 (2^{sm} - 1) / mu.
        const auto order = static_cast<std::int64_t>(pow2(s * m) - 1);
        const auto g = std::gcd(order, imu);
        const std::int64_t num_part = order / g;
        const std::int64_t den_part = imu / g;
        // 2^s * order / mu^2, reduced in two steps to stay within 64 bits.
        Rational r = reduced(num_part, den_part * imu);
        const auto g2 = std::gcd(static_cast<std::int64_t>(pow2(s)), r.den);
        r = Rational{r.num * (static_cast<std::int64_t>(pow2(s)) / g2), r.den / g2};
        out.radicand = r;
        out.offset = reduced(static_cast<std::int64_t>(pow2(s)), imu);
    } else {
        // sqrt(n / (2 mu)) with n = 2 (2^{2sm} - 1) / mu.
        const auto order = static_cast<std::int64_t>(pow2(2 * s * m) - 1);
        const auto g = std::gcd(order, imu);
        out.radicand = reduced(order / g, (imu / g) * imu);
        out.offset = Rational{0, 1};
    }
    const long double root = std::sqrt(static_cast<long double>(out.radicand.num) / out.radicand.den);
    const long double value = root - static_cast<long double>(out.offset.num) / out.offset.den;
    out.value = static_cast<double>(value);

    auto z = static_cast<std::int64_t>(std::floor(value)) - 1;
    while (!at_least_floor(z, out.radicand, out.offset)) ++z;
    out.clamped = std::max<std::int64_t>(1, z);
    return out;
}

SelfDualCertificate build_family(const FamilyParams& params) {
    FamilyPlan plan = plan_family(params);
    const DualKind kind = params.kind;
    const Field alphabet = Field::create(plan.alphabet_degree);

    const CyclicCode inner = code_from_defining_set(alphabet, plan.n_inner, plan.defining_set);
    if (!is_dual_containing(inner, kind))
        throw std::invalid_argument("precondition violated: defining set is not dual-containing");

    const UUVCode uuv = uuv_construct(inner, kind);
    const Poly outer = repeated_root_generator(inner, kind);
    Poly g2 = uuv.inner_dual.generator().divrem(inner.generator()).first;

    CertificateChecks checks;
    checks.dual_containing = true;
    checks.self_dual = verify_self_dual(alphabet, uuv.basis, kind);
    checks.van_lint_equivalence = verify_van_lint_equivalence(uuv).passed;
    const Matrix interleaved = interleave_permutation(plan.n_inner).apply_rows(uuv.basis);
    checks.cyclic_invariance =
        check_code_automorphism(alphabet, interleaved, cyclic_shift(static_cast<std::size_t>(2 * plan.n_inner), 1));

    const RootContext& roots = inner.roots();
    return SelfDualCertificate{std::move(plan),
                               2 * inner.length(),
                               inner.length(),
                               alphabet,
                               roots.ext_degree,
                               roots.ext.modulus(),
                               roots.ext.primitive_element(),
                               roots.beta_exponent,
                               inner.generator(),
                               uuv.inner_dual.generator(),
                               std::move(g2),
                               outer,
                               uuv.inner_dual.defining_set(),
                               uuv.bch_inner,
                               uuv.bch_dual,
                               uuv.floor_min,
                               paper_floor(kind, params.s, params.m, params.mu),
                               checks,
                               std::nullopt};
}

}  // namespace cycledual
