#ifndef CYCLEDUAL_CYCLIC_HPP
#define CYCLEDUAL_CYCLIC_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cycledual/cyclo.hpp"
#include "cycledual/gf.hpp"
#include "cycledual/matrix.hpp"
#include "cycledual/poly.hpp"

namespace cycledual {

/**
 * @brief Where the n-th roots of unity for codes of length n over a given
 * alphabet live.
 *
 * The extension degree is the multiplicative order of |alphabet| modulo n,
 * the extension uses the default modulus, and beta = gamma^exponent with
 * gamma the canonical primitive element. All of it is a pure function of
 * (alphabet, n), so defining sets are reproducible.
 */
struct RootContext {
    Field alphabet;
    std::uint64_t n;
    unsigned ext_degree;
    Field ext;
    Embedding embedding;
    FieldElement beta;
    std::uint64_t beta_exponent;
};

/// Throws std::invalid_argument when n is even or the extension would exceed 32 bits.
std::shared_ptr<const RootContext> make_root_context(const Field& alphabet, std::uint64_t n);

/// The q with |field| = q^2; throws for fields of odd degree.
std::uint64_t conjugation_power(const Field& field);

/// A simple-root cyclic code: an ideal of GF(q)[x]/(x^n - 1), n odd.
class CyclicCode {
public:
    const Field& field() const noexcept { return roots_->alphabet; }
    std::uint64_t length() const noexcept { return roots_->n; }
    std::size_t dimension() const noexcept { return static_cast<std::size_t>(length()) - defining_set_.size(); }
    /// Monic generator g dividing x^n - 1.
    const Poly& generator() const noexcept { return generator_; }
    /// (x^n - 1) / g.
    const Poly& check_poly() const noexcept { return check_; }
    const DefiningSet& defining_set() const noexcept { return defining_set_; }
    const RootContext& roots() const noexcept { return *roots_; }

private:
    CyclicCode(std::shared_ptr<const RootContext> roots, Poly g, DefiningSet t);

    friend CyclicCode code_from_defining_set(const Field&, std::uint64_t, const DefiningSet&);
    friend CyclicCode code_from_generator(const Field&, std::uint64_t, const Poly&);

    std::shared_ptr<const RootContext> roots_;
    Poly generator_;
    Poly check_;
    DefiningSet defining_set_;
};

/// g = product of the minimal polynomials of the cosets in T.
CyclicCode code_from_defining_set(const Field& field, std::uint64_t n, const DefiningSet& t);

/// Defining set recovered from the roots of g among the powers of beta.
/// Throws std::invalid_argument("not a divisor") unless g | x^n - 1.
CyclicCode code_from_generator(const Field& field, std::uint64_t n, const Poly& g);

/// Euclidean or Hermitian dual. The generator route and the defining-set
/// route are both computed and must agree.
CyclicCode dual(const CyclicCode& code, DualKind kind);

/// Dual-containment by the defining-set predicate, cross-checked by testing
/// every basis word of the dual for membership.
bool is_dual_containing(const CyclicCode& code, DualKind kind);

/// k x n matrix whose rows are x^i g(x), i = 0..k-1.
Matrix generator_matrix(const CyclicCode& code);

/// Non-systematic encoding m(x) g(x).
std::vector<Elem> encode(const CyclicCode& code, std::span<const Elem> message);

/// word(x) mod g(x) == 0.
bool contains(const CyclicCode& code, std::span<const Elem> word);

/// Comma-separated lowercase hex symbols.
std::string format_word(std::span<const Elem> word);

}  // namespace cycledual

#endif  // CYCLEDUAL_CYCLIC_HPP
