#ifndef CYCLEDUAL_GF_HPP
#define CYCLEDUAL_GF_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cycledual {

/// Raw element of a binary field in the polynomial basis: bit i is the
/// coefficient of x^i. Hot loops work on these directly through Field.
using Elem = std::uint32_t;

class FieldElement;

/**
 * @brief The finite field GF(2^s), 1 <= s <= 32, in the polynomial basis.
 *
 * A Field is a cheap handle onto immutable shared tables; copies compare
 * equal iff they have the same degree and modulus. Fields up to degree 16
 * carry log/antilog tables built from the canonical primitive element,
 * larger fields use shift-and-add multiplication. Both routes give the
 * same results.
 */
class Field {
public:
    static constexpr unsigned kMaxDegree = 32;
    static constexpr unsigned kMaxTableDegree = 16;

    /// GF(2^s) with the given modulus, or the built-in default when omitted.
    /// Throws std::invalid_argument on a degree mismatch or a reducible modulus.
    static Field create(unsigned s, std::optional<std::uint64_t> modulus = std::nullopt);

    unsigned degree() const noexcept;
    std::uint64_t modulus() const noexcept;
    /// Number of elements, 2^s.
    std::uint64_t size() const noexcept;
    /// Order of the multiplicative group, 2^s - 1.
    std::uint64_t group_order() const noexcept;

    /// Smallest element (by integer value) generating the multiplicative group.
    Elem primitive_element() const noexcept;

    bool contains(Elem a) const noexcept { return static_cast<std::uint64_t>(a) < size(); }

    static Elem add(Elem a, Elem b) noexcept { return a ^ b; }
    Elem mul(Elem a, Elem b) const noexcept;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const;
    Elem pow(Elem a, std::uint64_t e) const noexcept;
    /// a^(2^k).
    Elem frobenius(Elem a, unsigned k) const noexcept;
    /// Multiplicative order of a nonzero element.
    std::uint64_t order(Elem a) const;

    FieldElement element(Elem value) const;
    FieldElement zero() const;
    FieldElement one() const;

    /// Lowercase hexadecimal of the modulus bit string ("7" for x^2+x+1).
    std::string modulus_hex() const;

    friend bool operator==(const Field& a, const Field& b) noexcept;
    friend bool operator!=(const Field& a, const Field& b) noexcept { return !(a == b); }

    struct Data;

private:
    explicit Field(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
    std::shared_ptr<const Data> data_;
};

/// An element together with the field it belongs to. Mixed-field
/// arithmetic throws std::invalid_argument.
class FieldElement {
public:
    FieldElement(Field field, Elem value);

    const Field& field() const noexcept { return field_; }
    Elem value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_ == 0; }

    FieldElement operator+(const FieldElement& other) const;
    FieldElement operator-(const FieldElement& other) const { return *this + other; }
    FieldElement operator*(const FieldElement& other) const;
    FieldElement operator/(const FieldElement& other) const;
    FieldElement pow(std::uint64_t e) const;
    FieldElement inverse() const;
    FieldElement frobenius(unsigned k) const;

    std::string to_hex() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
        return a.value_ == b.value_ && a.field_ == b.field_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) noexcept { return !(a == b); }

private:
    Field field_;
    Elem value_;
};

/**
 * @brief Ring embedding GF(2^s) -> GF(2^{s m}).
 *
 * The base generator x is sent to the smallest (by integer value) root of
 * the base modulus inside the extension.
 */
class Embedding {
public:
    Embedding(Field base, Field ext);

    const Field& base() const noexcept { return base_; }
    const Field& ext() const noexcept { return ext_; }

    Elem map(Elem a) const { return image_.at(a); }
    /// Inverse image, or nullopt when e lies outside the embedded subfield.
    std::optional<Elem> preimage(Elem e) const;
    const std::vector<Elem>& image_table() const noexcept { return image_; }

private:
    Field base_;
    Field ext_;
    std::vector<Elem> image_;
    std::vector<std::pair<Elem, Elem>> inverse_;  // sorted by image
};

/// GF(2^{s m}) with the default modulus, plus the canonical embedding of base.
std::pair<Field, Embedding> extension_with_embedding(const Field& base, unsigned m);

/// gamma^((2^s - 1) / n) for the canonical primitive gamma of ext; throws
/// std::invalid_argument("no primitive n-th root") when n does not divide 2^s - 1.
FieldElement nth_root_of_unity(const Field& ext, std::uint64_t n);

// Binary polynomials packed into machine words, bit i = coefficient of x^i.
namespace gf2 {

int degree(std::uint64_t p) noexcept;
std::uint64_t mod(std::uint64_t a, std::uint64_t m) noexcept;
/// Irreducibility over GF(2) by trial division against every polynomial of
/// degree 1..deg/2.
bool is_irreducible(std::uint64_t p) noexcept;
/// Built-in default modulus for GF(2^s).
std::uint64_t default_modulus(unsigned s);

}  // namespace gf2

/// Distinct prime factors of n, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::string to_hex(std::uint64_t value);
/// Strict lowercase hexadecimal without leading zeros ("0" for zero).
std::optional<std::uint64_t> parse_hex(const std::string& text);

}  // namespace cycledual

#endif  // CYCLEDUAL_GF_HPP
