#include "cycledual/gf.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>

namespace cycledual {

namespace gf2 {

int degree(std::uint64_t p) noexcept { return p == 0 ? -1 : 63 - std::countl_zero(p); }

std::uint64_t mod(std::uint64_t a, std::uint64_t m) noexcept {
    const int dm = degree(m);
    for (int da = degree(a); da >= dm; da = degree(a)) a ^= m << (da - dm);
    return a;
}

bool is_irreducible(std::uint64_t p) noexcept {
    const int d = degree(p);
    if (d < 1) return false;
    if (d == 1) return true;
    if ((p & 1) == 0) return false;  // divisible by x
    const std::uint64_t limit = std::uint64_t{1} << (d / 2 + 1);
    for (std::uint64_t t = 3; t < limit; t += 2) {
        if (mod(p, t) == 0) return false;
    }
    return true;
}

std::uint64_t default_modulus(unsigned s) {
    switch (s) {
        case 1: return 0x3;    // x + 1
        case 2: return 0x7;    // x^2 + x + 1
        case 3: return 0xb;    // x^3 + x + 1
        case 4: return 0x13;   // x^4 + x + 1
        case 5: return 0x25;   // x^5 + x^2 + 1
        case 6: return 0x43;   // x^6 + x + 1
        case 8: return 0x11d;  // x^8 + x^4 + x^3 + x^2 + 1
        default: break;
    }
    if (s == 0 || s > Field::kMaxDegree) throw std::invalid_argument("field degree out of range");
    const std::uint64_t top = std::uint64_t{1} << s;
    for (std::uint64_t p = top | 1; p < (top << 1); p += 2) {
        if (is_irreducible(p)) return p;
    }
    throw std::logic_error("no irreducible polynomial found");
}

}  // namespace gf2

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::string to_hex(std::uint64_t value) {
    static constexpr char digits[] = "0123456789abcdef";
    if (value == 0) return "0";
    std::string out;
    while (value != 0) {
        out.push_back(digits[value & 0xf]);
        value >>= 4;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::optional<std::uint64_t> parse_hex(const std::string& text) {
    if (text.empty() || text.size() > 16) return std::nullopt;
    if (text.size() > 1 && text.front() == '0') return std::nullopt;
    std::uint64_t value = 0;
    for (char c : text) {
        unsigned digit;
        if (c >= '0' && c <= '9')
            digit = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f')
            digit = static_cast<unsigned>(c - 'a' + 10);
        else
            return std::nullopt;
        value = (value << 4) | digit;
    }
    return value;
}

struct Field::Data {
    unsigned s = 0;
    std::uint64_t modulus = 0;
    std::uint64_t size = 0;
    Elem primitive = 1;
    bool tabled = false;
    std::vector<Elem> exp;           // length 2 * (size - 1)
    std::vector<std::uint32_t> log;  // length size

    Elem slow_mul(Elem a, Elem b) const noexcept {
        std::uint64_t x = a;
        std::uint64_t r = 0;
        const std::uint64_t top = std::uint64_t{1} << s;
        while (b != 0) {
            if (b & 1) r ^= x;
            b >>= 1;
            x <<= 1;
            if (x & top) x ^= modulus;
        }
        return static_cast<Elem>(r);
    }

    Elem slow_pow(Elem a, std::uint64_t e) const noexcept {
        Elem result = 1;
        while (e != 0) {
            if (e & 1) result = slow_mul(result, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return result;
    }
};

namespace {

std::shared_ptr<const Field::Data> build_field_data(unsigned s, std::uint64_t modulus) {
    auto data = std::make_shared<Field::Data>();
    data->s = s;
    data->modulus = modulus;
    data->size = std::uint64_t{1} << s;

    const std::uint64_t group = data->size - 1;
    const auto primes = prime_factors(group);
    for (std::uint64_t g = 1; g < data->size; ++g) {
        const auto candidate = static_cast<Elem>(g);
        bool generates = true;
        for (auto p : primes) {
            if (data->slow_pow(candidate, group / p) == 1) {
                generates = false;
                break;
            }
        }
        if (generates) {
            data->primitive = candidate;
            break;
        }
    }

    if (s <= Field::kMaxTableDegree) {
        data->tabled = true;
        data->exp.resize(2 * group);
        data->log.assign(data->size, 0);
        Elem x = 1;
        for (std::uint64_t i = 0; i < group; ++i) {
            data->exp[i] = x;
            data->exp[i + group] = x;
            data->log[x] = static_cast<std::uint32_t>(i);
            x = data->slow_mul(x, data->primitive);
        }
    }
    return data;
}

std::shared_ptr<const Field::Data> lookup_field_data(unsigned s, std::uint64_t modulus) {
    static std::mutex mutex;
    static std::map<std::pair<unsigned, std::uint64_t>, std::shared_ptr<const Field::Data>> registry;
    const std::lock_guard<std::mutex> lock(mutex);
    auto& slot = registry[{s, modulus}];
    if (!slot) slot = build_field_data(s, modulus);
    return slot;
}

}  // namespace

Field Field::create(unsigned s, std::optional<std::uint64_t> modulus) {
    if (s < 1 || s > kMaxDegree) throw std::invalid_argument("field degree must be in 1..32");
    const std::uint64_t m = modulus ? *modulus : gf2::default_modulus(s);
    if (gf2::degree(m) != static_cast<int>(s))
        throw std::invalid_argument("modulus degree does not match field degree");
    if (modulus && !gf2::is_irreducible(m)) throw std::invalid_argument("modulus not irreducible");
    return Field(lookup_field_data(s, m));
}

unsigned Field::degree() const noexcept { return data_->s; }
std::uint64_t Field::modulus() const noexcept { return data_->modulus; }
std::uint64_t Field::size() const noexcept { return data_->size; }
std::uint64_t Field::group_order() const noexcept { return data_->size - 1; }
Elem Field::primitive_element() const noexcept { return data_->primitive; }

Elem Field::mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    if (data_->tabled) return data_->exp[data_->log[a] + data_->log[b]];
    return data_->slow_mul(a, b);
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::domain_error("division by zero");
    if (data_->tabled) {
        const std::uint32_t l = data_->log[a];
        return data_->exp[l == 0 ? 0 : group_order() - l];
    }
    return data_->slow_pow(a, group_order() - 1);
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (data_->tabled) {
        const std::uint64_t l = (static_cast<std::uint64_t>(data_->log[a]) * (e % group_order())) % group_order();
        return data_->exp[l];
    }
    return data_->slow_pow(a, e);
}

Elem Field::frobenius(Elem a, unsigned k) const noexcept {
    for (unsigned i = 0; i < k % data_->s; ++i) a = mul(a, a);
    return a;
}

std::uint64_t Field::order(Elem a) const {
    if (a == 0) throw std::domain_error("zero has no multiplicative order");
    std::uint64_t n = group_order();
    for (auto p : prime_factors(n)) {
        while (n % p == 0 && pow(a, n / p) == 1) n /= p;
    }
    return n;
}

FieldElement Field::element(Elem value) const { return FieldElement(*this, value); }
FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }
std::string Field::modulus_hex() const { return to_hex(data_->modulus); }

bool operator==(const Field& a, const Field& b) noexcept {
    return a.data_ == b.data_ || (a.data_->s == b.data_->s && a.data_->modulus == b.data_->modulus);
}

FieldElement::FieldElement(Field field, Elem value) : field_(std::move(field)), value_(value) {
    if (!field_.contains(value)) throw std::invalid_argument("element value outside field");
}

namespace {
void require_same_field(const Field& a, const Field& b) {
    if (a != b) throw std::invalid_argument("field mismatch");
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& other) const {
    require_same_field(field_, other.field_);
    return {field_, value_ ^ other.value_};
}

FieldElement FieldElement::operator*(const FieldElement& other) const {
    require_same_field(field_, other.field_);
    return {field_, field_.mul(value_, other.value_)};
}

FieldElement FieldElement::operator/(const FieldElement& other) const {
    require_same_field(field_, other.field_);
    return {field_, field_.div(value_, other.value_)};
}

FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_.pow(value_, e)}; }
FieldElement FieldElement::inverse() const { return {field_, field_.inv(value_)}; }
FieldElement FieldElement::frobenius(unsigned k) const { return {field_, field_.frobenius(value_, k)}; }
std::string FieldElement::to_hex() const { return cycledual::to_hex(value_); }

Embedding::Embedding(Field base, Field ext) : base_(std::move(base)), ext_(std::move(ext)) {
    const unsigned s = base_.degree();
    const unsigned t = ext_.degree();
    if (t % s != 0) throw std::invalid_argument("extension degree is not a multiple of the base degree");

    // The copy of GF(2^s) inside the extension is {0} together with the
    // powers of gamma^((2^t - 1) / (2^s - 1)).
    const Elem sub_gen = ext_.pow(ext_.primitive_element(), ext_.group_order() / base_.group_order());
    const std::uint64_t modulus = base_.modulus();
    auto eval_modulus = [&](Elem r) {
        Elem acc = 0;
        for (int i = gf2::degree(modulus); i >= 0; --i) {
            acc = ext_.mul(acc, r) ^ static_cast<Elem>((modulus >> i) & 1);
        }
        return acc;
    };
    std::optional<Elem> root;
    if (eval_modulus(0) == 0) root = 0;
    Elem r = 1;
    for (std::uint64_t j = 0; j < base_.group_order(); ++j, r = ext_.mul(r, sub_gen)) {
        if (eval_modulus(r) == 0 && (!root || r < *root)) root = r;
    }
    if (!root) throw std::logic_error("base modulus has no root in the extension");

    std::vector<Elem> powers(s);
    powers[0] = 1;
    for (unsigned i = 1; i < s; ++i) powers[i] = ext_.mul(powers[i - 1], *root);
    image_.resize(base_.size());
    for (std::uint64_t a = 0; a < base_.size(); ++a) {
        Elem e = 0;
        for (unsigned i = 0; i < s; ++i) {
            if ((a >> i) & 1) e ^= powers[i];
        }
        image_[a] = e;
    }
    inverse_.reserve(image_.size());
    for (std::uint64_t a = 0; a < image_.size(); ++a) inverse_.emplace_back(image_[a], static_cast<Elem>(a));
    std::sort(inverse_.begin(), inverse_.end());
}

std::optional<Elem> Embedding::preimage(Elem e) const {
    auto it = std::lower_bound(inverse_.begin(), inverse_.end(), std::pair<Elem, Elem>{e, 0});
    if (it == inverse_.end() || it->first != e) return std::nullopt;
    return it->second;
}

std::pair<Field, Embedding> extension_with_embedding(const Field& base, unsigned m) {
    if (m == 0 || static_cast<std::uint64_t>(base.degree()) * m > Field::kMaxDegree)
        throw std::invalid_argument("extension degree exceeds 32 bits");
    Field ext = Field::create(base.degree() * m);
    Embedding emb(base, ext);
    return {std::move(ext), std::move(emb)};
}

FieldElement nth_root_of_unity(const Field& ext, std::uint64_t n) {
    if (n == 0 || ext.group_order() % n != 0) throw std::invalid_argument("no primitive n-th root");
    return ext.element(ext.pow(ext.primitive_element(), ext.group_order() / n));
}

}  // namespace cycledual
