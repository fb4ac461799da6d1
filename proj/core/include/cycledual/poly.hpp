#ifndef CYCLEDUAL_POLY_HPP
#define CYCLEDUAL_POLY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cycledual/gf.hpp"

namespace cycledual {

/**
 * @brief Dense univariate polynomial over a binary field.
 *
 * Coefficients are stored low degree first with trailing zeros trimmed, so
 * the zero polynomial has no coefficients and degree -1.
 */
class Poly {
public:
    explicit Poly(Field field) : field_(std::move(field)) {}
    Poly(Field field, std::vector<Elem> coeffs);

    static Poly constant(const Field& field, Elem c);
    static Poly monomial(const Field& field, std::size_t degree, Elem c = 1);
    /// x^n - 1, which is x^n + 1 in characteristic 2.
    static Poly x_n_minus_1(const Field& field, std::size_t n);

    const Field& field() const noexcept { return field_; }
    const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
    Elem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    Elem leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const { return *this + other; }
    Poly operator*(const Poly& other) const;
    Poly scaled(Elem c) const;
    Poly monic() const;

    /// Quotient and remainder; throws std::domain_error for a zero divisor.
    std::pair<Poly, Poly> divrem(const Poly& divisor) const;
    Poly operator%(const Poly& divisor) const { return divrem(divisor).second; }
    bool divisible_by(const Poly& divisor) const { return divrem(divisor).second.is_zero(); }

    /// Horner evaluation at a point of the coefficient field.
    Elem eval(Elem x) const;

    std::string to_string() const;

    friend bool operator==(const Poly& a, const Poly& b) noexcept {
        return a.coeffs_ == b.coeffs_ && a.field_ == b.field_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) noexcept { return !(a == b); }

private:
    void trim() noexcept;
    void require_same_field(const Poly& other) const;

    Field field_;
    std::vector<Elem> coeffs_;
};

/// Monic gcd; throws std::domain_error when b is zero.
Poly gcd(const Poly& a, const Poly& b);

/// Evaluates p at x. Without an embedding x must lie in p's field; with one,
/// x lies in the extension and the coefficients are mapped first.
FieldElement poly_eval(const Poly& p, const FieldElement& x, const Embedding* emb = nullptr);

/// Generator of the Euclidean dual of the cyclic code generated by g:
/// x^k h(1/x) / h(0) with h = (x^n - 1) / g and k = deg h.
/// Throws std::invalid_argument("not a generator") when g does not divide x^n - 1.
Poly dual_generator(const Poly& g, std::size_t n);

/// Raises every coefficient to the q-th power (q a power of two).
Poly conjugate_poly(const Poly& p, std::uint64_t q);

/// Comma-separated lowercase hex coefficients, low degree first. Zero is "0".
std::string format_poly(const Poly& p);
/// Strict inverse of format_poly; rejects trailing zero coefficients and
/// values outside the field.
std::optional<Poly> parse_poly(const Field& field, const std::string& text);

}  // namespace cycledual

#endif  // CYCLEDUAL_POLY_HPP
