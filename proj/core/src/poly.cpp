#include "cycledual/poly.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace cycledual {

Poly::Poly(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (Elem c : coeffs_) {
        if (!field_.contains(c)) throw std::invalid_argument("coefficient outside field");
    }
    trim();
}

Poly Poly::constant(const Field& field, Elem c) { return Poly(field, {c}); }

Poly Poly::monomial(const Field& field, std::size_t degree, Elem c) {
    std::vector<Elem> coeffs(degree + 1, 0);
    coeffs[degree] = c;
    return Poly(field, std::move(coeffs));
}

Poly Poly::x_n_minus_1(const Field& field, std::size_t n) {
    std::vector<Elem> coeffs(n + 1, 0);
    coeffs[0] ^= 1;
    coeffs[n] ^= 1;
    return Poly(field, std::move(coeffs));
}

void Poly::trim() noexcept {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Poly::require_same_field(const Poly& other) const {
    if (field_ != other.field_) throw std::invalid_argument("field mismatch");
}

Poly Poly::operator+(const Poly& other) const {
    require_same_field(other);
    Poly out(field_);
    out.coeffs_ = coeffs_.size() >= other.coeffs_.size() ? coeffs_ : other.coeffs_;
    const auto& shorter = coeffs_.size() >= other.coeffs_.size() ? other.coeffs_ : coeffs_;
    for (std::size_t i = 0; i < shorter.size(); ++i) out.coeffs_[i] ^= shorter[i];
    out.trim();
    return out;
}

Poly Poly::operator*(const Poly& other) const {
    require_same_field(other);
    Poly out(field_);
    if (is_zero() || other.is_zero()) return out;
    out.coeffs_.assign(coeffs_.size() + other.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Elem a = coeffs_[i];
        if (a == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            out.coeffs_[i + j] ^= field_.mul(a, other.coeffs_[j]);
        }
    }
    out.trim();
    return out;
}

Poly Poly::scaled(Elem c) const {
    Poly out(field_);
    out.coeffs_.reserve(coeffs_.size());
    for (Elem a : coeffs_) out.coeffs_.push_back(field_.mul(a, c));
    out.trim();
    return out;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(leading()));
}

std::pair<Poly, Poly> Poly::divrem(const Poly& divisor) const {
    require_same_field(divisor);
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly quotient(field_);
    Poly remainder = *this;
    const int db = divisor.degree();
    if (degree() < db) return {quotient, remainder};

    quotient.coeffs_.assign(static_cast<std::size_t>(degree() - db + 1), 0);
    const Elem lead_inv = field_.inv(divisor.leading());
    auto& r = remainder.coeffs_;
    for (int i = degree(); i >= db; --i) {
        const Elem top = r[static_cast<std::size_t>(i)];
        if (top == 0) continue;
        const Elem factor = field_.mul(top, lead_inv);
        const auto shift = static_cast<std::size_t>(i - db);
        quotient.coeffs_[shift] = factor;
        for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j) {
            r[shift + j] ^= field_.mul(factor, divisor.coeffs_[j]);
        }
    }
    quotient.trim();
    remainder.trim();
    return {quotient, remainder};
}

Elem Poly::eval(Elem x) const {
    Elem acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.mul(acc, x) ^ *it;
    return acc;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Elem c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (c != 1 || i == 0) os << (c == 1 ? "1" : to_hex(c));
        if (c != 1 && i != 0) os << '*';
        if (i >= 1) os << 'x';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("gcd with zero polynomial");
    Poly x = a;
    Poly y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

FieldElement poly_eval(const Poly& p, const FieldElement& x, const Embedding* emb) {
    if (emb == nullptr) {
        if (p.field() != x.field()) throw std::invalid_argument("field mismatch");
        return x.field().element(p.eval(x.value()));
    }
    if (emb->base() != p.field() || emb->ext() != x.field()) throw std::invalid_argument("field mismatch");
    const Field& ext = emb->ext();
    Elem acc = 0;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = ext.mul(acc, x.value()) ^ emb->map(*it);
    return ext.element(acc);
}

Poly dual_generator(const Poly& g, std::size_t n) {
    const Poly xn = Poly::x_n_minus_1(g.field(), n);
    if (g.is_zero()) throw std::invalid_argument("not a generator");
    auto [h, r] = xn.divrem(g);
    if (!r.is_zero()) throw std::invalid_argument("not a generator");
    std::vector<Elem> reversed(h.coeffs().rbegin(), h.coeffs().rend());
    const Elem h0 = h.coeff(0);
    return Poly(g.field(), std::move(reversed)).scaled(g.field().inv(h0));
}

Poly conjugate_poly(const Poly& p, std::uint64_t q) {
    if (q == 0 || !std::has_single_bit(q) || q > p.field().size())
        throw std::invalid_argument("conjugation power must be a power of two within the field");
    const auto k = static_cast<unsigned>(std::countr_zero(q));
    std::vector<Elem> out;
    out.reserve(p.coeffs().size());
    for (Elem c : p.coeffs()) out.push_back(p.field().frobenius(c, k));
    return Poly(p.field(), std::move(out));
}

std::string format_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i != 0) out.push_back(',');
        out += to_hex(p.coeffs()[i]);
    }
    return out;
}

std::optional<Poly> parse_poly(const Field& field, const std::string& text) {
    if (text == "0") return Poly(field);
    std::vector<Elem> coeffs;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string token = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        const auto value = parse_hex(token);
        if (!value || *value >= field.size()) return std::nullopt;
        coeffs.push_back(static_cast<Elem>(*value));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (coeffs.empty() || coeffs.back() == 0) return std::nullopt;
    return Poly(field, std::move(coeffs));
}

}  // namespace cycledual
