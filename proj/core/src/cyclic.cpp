#include "cycledual/cyclic.hpp"

#include <bit>
#include <stdexcept>

namespace cycledual {

std::shared_ptr<const RootContext> make_root_context(const Field& alphabet, std::uint64_t n) {
    if (n == 0 || n % 2 == 0) throw std::invalid_argument("use construct module for repeated-root codes");
    const auto m = multiplicative_order(alphabet.size(), n);
    if (!m || static_cast<std::uint64_t>(*m) * alphabet.degree() > Field::kMaxDegree)
        throw std::invalid_argument("length needs an extension beyond 32 bits");
    auto [ext, emb] = extension_with_embedding(alphabet, *m);
    const std::uint64_t exponent = ext.group_order() / n;
    FieldElement beta = nth_root_of_unity(ext, n);
    return std::make_shared<const RootContext>(
        RootContext{alphabet, n, *m, std::move(ext), std::move(emb), std::move(beta), exponent});
}

std::uint64_t conjugation_power(const Field& field) {
    if (field.degree() % 2 != 0) throw std::invalid_argument("hermitian dual needs a field of square order");
    return std::uint64_t{1} << (field.degree() / 2);
}

CyclicCode::CyclicCode(std::shared_ptr<const RootContext> roots, Poly g, DefiningSet t)
    : roots_(std::move(roots)), generator_(std::move(g)), check_(roots_->alphabet), defining_set_(std::move(t)) {
    auto [h, r] = Poly::x_n_minus_1(roots_->alphabet, roots_->n).divrem(generator_);
    if (!r.is_zero()) throw std::invalid_argument("not a divisor");
    check_ = std::move(h);
}

namespace {

void require_alphabet_set(const Field& field, std::uint64_t n, const DefiningSet& t) {
    if (t.n() != n) throw std::invalid_argument("defining set modulus differs from the length");
    if (t.base() != field.size()) throw std::invalid_argument("defining set base differs from the alphabet size");
    if (!t.is_coset_closed()) throw std::invalid_argument("defining set not coset-closed");
}

DefiningSet roots_of(const RootContext& ctx, const Poly& g) {
    std::vector<Residue> members;
    const Field& ext = ctx.ext;
    for (const auto& c : all_cosets(ctx.n, ctx.alphabet.size())) {
        const FieldElement x = ext.element(ext.pow(ctx.beta.value(), c.front()));
        if (poly_eval(g, x, &ctx.embedding).is_zero()) members.insert(members.end(), c.begin(), c.end());
    }
    return DefiningSet(ctx.n, ctx.alphabet.size(), std::move(members));
}

}  // namespace

CyclicCode code_from_defining_set(const Field& field, std::uint64_t n, const DefiningSet& t) {
    auto ctx = make_root_context(field, n);
    require_alphabet_set(field, n, t);
    Poly g = Poly::constant(field, 1);
    const auto bits = t.bitmap();
    for (const auto& c : all_cosets(n, field.size())) {
        if (bits[c.front()]) g = g * minimal_polynomial(c, ctx->beta, ctx->embedding);
    }
    return CyclicCode(std::move(ctx), std::move(g), t);
}

CyclicCode code_from_generator(const Field& field, std::uint64_t n, const Poly& g) {
    if (g.field() != field) throw std::invalid_argument("field mismatch");
    auto ctx = make_root_context(field, n);
    if (g.is_zero() || !Poly::x_n_minus_1(field, n).divisible_by(g)) throw std::invalid_argument("not a divisor");
    Poly monic = g.monic();
    DefiningSet t = roots_of(*ctx, monic);
    if (static_cast<int>(t.size()) != monic.degree()) throw std::logic_error("generator root count differs from its degree");
    return CyclicCode(std::move(ctx), std::move(monic), std::move(t));
}

CyclicCode dual(const CyclicCode& code, DualKind kind) {
    const Field& field = code.field();
    const std::uint64_t n = code.length();
    Poly g = dual_generator(code.generator(), n);
    std::int64_t multiplier = -1;
    if (kind == DualKind::hermitian) {
        const std::uint64_t q = conjugation_power(field);
        g = conjugate_poly(g, q);
        multiplier = -static_cast<std::int64_t>(q);
    }
    const DefiningSet expected = set_map(complement(code.defining_set()), multiplier);
    CyclicCode out = code_from_generator(field, n, g);
    if (out.defining_set() != expected) throw std::logic_error("dual generator and dual defining set disagree");
    return out;
}

bool is_dual_containing(const CyclicCode& code, DualKind kind) {
    const std::uint64_t q = kind == DualKind::hermitian ? conjugation_power(code.field()) : 0;
    const bool by_set = is_dual_containing_set(code.defining_set(), kind, q);

    const CyclicCode d = dual(code, kind);
    bool by_members = true;
    if (d.dimension() > 0) {
        const Matrix basis = generator_matrix(d);
        for (std::size_t r = 0; r < basis.rows() && by_members; ++r) by_members = contains(code, basis.row(r));
    }
    if (by_set != by_members) throw std::logic_error("dual-containment predicate and membership test disagree");
    return by_set;
}

Matrix generator_matrix(const CyclicCode& code) {
    const std::size_t k = code.dimension();
    if (k == 0) throw std::invalid_argument("no basis");
    const auto n = static_cast<std::size_t>(code.length());
    Matrix g(k, n);
    const auto& coeffs = code.generator().coeffs();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < coeffs.size(); ++j) g.at(i, i + j) = coeffs[j];
    }
    return g;
}

std::vector<Elem> encode(const CyclicCode& code, std::span<const Elem> message) {
    if (message.size() != code.dimension()) throw std::invalid_argument("message length must equal the dimension");
    const Poly m(code.field(), std::vector<Elem>(message.begin(), message.end()));
    const Poly c = m * code.generator();
    std::vector<Elem> word(static_cast<std::size_t>(code.length()), 0);
    for (std::size_t i = 0; i < c.coeffs().size(); ++i) word[i] = c.coeffs()[i];
    return word;
}

bool contains(const CyclicCode& code, std::span<const Elem> word) {
    if (word.size() != code.length()) throw std::invalid_argument("word length must equal the code length");
    const Poly w(code.field(), std::vector<Elem>(word.begin(), word.end()));
    return w.divisible_by(code.generator());
}

std::string format_word(std::span<const Elem> word) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i != 0) out.push_back(',');
        out += to_hex(word[i]);
    }
    return out;
}

}  // namespace cycledual
