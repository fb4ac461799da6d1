#include "cycledual/cyclo.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cycledual {

std::string_view to_string(DualKind kind) noexcept {
    return kind == DualKind::euclidean ? "euclidean" : "hermitian";
}

std::optional<DualKind> parse_dual_kind(std::string_view text) noexcept {
    if (text == "euclidean") return DualKind::euclidean;
    if (text == "hermitian") return DualKind::hermitian;
    return std::nullopt;
}

DefiningSet::DefiningSet(std::uint64_t n, std::uint64_t base, std::vector<Residue> members)
    : n_(n), base_(base), members_(std::move(members)) {
    if (n_ == 0) throw std::invalid_argument("modulus must be positive");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && members_.back() >= n_) throw std::invalid_argument("residue outside Z_n");
}

bool DefiningSet::contains(Residue i) const noexcept {
    return std::binary_search(members_.begin(), members_.end(), i);
}

bool DefiningSet::is_coset_closed() const {
    const auto bits = bitmap();
    const std::uint64_t q = base_ % n_;
    for (Residue i : members_) {
        if (!bits[(i * q) % n_]) return false;
    }
    return true;
}

std::vector<bool> DefiningSet::bitmap() const {
    std::vector<bool> bits(n_, false);
    for (Residue i : members_) bits[i] = true;
    return bits;
}

namespace {

DefiningSet from_bitmap(std::uint64_t n, std::uint64_t base, const std::vector<bool>& bits) {
    std::vector<Residue> members;
    for (std::uint64_t i = 0; i < n; ++i) {
        if (bits[i]) members.push_back(i);
    }
    return DefiningSet(n, base, std::move(members));
}

}  // namespace

std::vector<Residue> coset(std::uint64_t n, std::uint64_t q, Residue i) {
    if (n == 0) throw std::invalid_argument("modulus must be positive");
    i %= n;
    q %= n;
    std::vector<Residue> out{i};
    for (Residue j = (i * q) % n; j != i; j = (j * q) % n) {
        out.push_back(j);
        if (out.size() > n) throw std::invalid_argument("q is not invertible modulo n");
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Residue>> all_cosets(std::uint64_t n, std::uint64_t q) {
    std::vector<bool> seen(n, false);
    std::vector<std::vector<Residue>> out;
    for (Residue i = 0; i < n; ++i) {
        if (seen[i]) continue;
        auto c = coset(n, q, i);
        for (Residue j : c) seen[j] = true;
        out.push_back(std::move(c));
    }
    return out;
}

DefiningSet set_map(const DefiningSet& t, std::int64_t c) {
    const auto n = static_cast<std::int64_t>(t.n());
    const auto cm = static_cast<std::uint64_t>(((c % n) + n) % n);
    std::vector<Residue> out;
    out.reserve(t.size());
    for (Residue i : t.members()) out.push_back((cm * i) % t.n());
    return DefiningSet(t.n(), t.base(), std::move(out));
}

DefiningSet complement(const DefiningSet& t) {
    auto bits = t.bitmap();
    bits.flip();
    return from_bitmap(t.n(), t.base(), bits);
}

DefiningSet set_union(const DefiningSet& a, const DefiningSet& b) {
    if (a.n() != b.n()) throw std::invalid_argument("modulus mismatch");
    std::vector<Residue> out;
    std::set_union(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                   std::back_inserter(out));
    return DefiningSet(a.n(), a.base(), std::move(out));
}

bool disjoint(const DefiningSet& a, const DefiningSet& b) {
    auto ia = a.members().begin();
    auto ib = b.members().begin();
    while (ia != a.members().end() && ib != b.members().end()) {
        if (*ia == *ib) return false;
        if (*ia < *ib)
            ++ia;
        else
            ++ib;
    }
    return true;
}

DefiningSet bch_defining_set(std::uint64_t n, std::uint64_t q, std::uint64_t b) {
    if (b >= n && b != 0) throw std::invalid_argument("coset count exceeds the length");
    std::vector<bool> bits(n, false);
    for (Residue i = 1; i <= b; ++i) {
        if (bits[i]) continue;
        for (Residue j : coset(n, q, i)) bits[j] = true;
    }
    return from_bitmap(n, q, bits);
}

std::uint64_t bch_bound(const DefiningSet& t) {
    const std::uint64_t n = t.n();
    if (t.size() == n) return n + 1;
    if (t.empty()) return 1;
    const auto bits = t.bitmap();
    std::uint64_t gap = 0;
    while (bits[gap]) ++gap;
    std::uint64_t best = 0;
    std::uint64_t run = 0;
    for (std::uint64_t step = 1; step <= n; ++step) {
        if (bits[(gap + step) % n]) {
            best = std::max(best, ++run);
        } else {
            run = 0;
        }
    }
    return best + 1;
}

bool is_dual_containing_set(const DefiningSet& t, DualKind kind, std::uint64_t q) {
    if (!t.is_coset_closed()) throw std::invalid_argument("defining set not coset-closed");
    const std::int64_t c = kind == DualKind::euclidean ? -1 : -static_cast<std::int64_t>(q);
    return disjoint(t, set_map(t, c));
}

std::optional<std::uint64_t> checked_pow(std::uint64_t q, std::uint64_t e) noexcept {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (q != 0 && r > UINT64_MAX / q) return std::nullopt;
        r *= q;
    }
    return r;
}

std::uint64_t gcd_lemma(std::uint64_t q, std::uint64_t a, std::uint64_t b, GcdForm form) {
    if (q < 2 || a == 0 || b == 0) throw std::invalid_argument("gcd lemma needs q > 1 and positive exponents");
    const std::uint64_t g = std::gcd(a, b);
    const auto qg = checked_pow(q, g);
    if (!qg) throw std::overflow_error("q^gcd(a,b) overflows");
    if (form == GcdForm::minus_minus) return *qg - 1;
    if ((b / g) % 2 == 1) return q % 2 == 0 ? 1 : 2;
    return *qg + 1;
}

std::optional<unsigned> multiplicative_order(std::uint64_t q, std::uint64_t n) {
    if (n == 0 || std::gcd(q, n) != 1) return std::nullopt;
    if (n == 1) return 1;
    std::uint64_t x = q % n;
    for (unsigned m = 1; m <= n; ++m) {
        if (x == 1) return m;
        x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * q) % n);
    }
    return std::nullopt;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> small;
    std::vector<std::uint64_t> large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Poly minimal_polynomial(const std::vector<Residue>& coset_members, const FieldElement& beta, const Embedding& emb) {
    const Field& ext = emb.ext();
    if (beta.field() != ext) throw std::invalid_argument("field mismatch");
    std::vector<Elem> acc{1};
    for (Residue j : coset_members) {
        const Elem root = ext.pow(beta.value(), j);
        std::vector<Elem> next(acc.size() + 1, 0);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] ^= acc[i];
            next[i] ^= ext.mul(acc[i], root);
        }
        acc = std::move(next);
    }
    std::vector<Elem> pulled;
    pulled.reserve(acc.size());
    for (Elem c : acc) {
        const auto pre = emb.preimage(c);
        if (!pre) throw std::invalid_argument("coset/base mismatch");
        pulled.push_back(*pre);
    }
    return Poly(emb.base(), std::move(pulled));
}

std::string format_residues(const std::vector<Residue>& members) {
    std::string out;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i != 0) out.push_back(',');
        out += std::to_string(members[i]);
    }
    return out;
}

std::optional<std::vector<Residue>> parse_residues(const std::string& text) {
    std::vector<Residue> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string token = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (token.empty() || token.size() > 19 || (token.size() > 1 && token.front() == '0')) return std::nullopt;
        Residue value = 0;
        for (char c : token) {
            if (c < '0' || c > '9') return std::nullopt;
            value = value * 10 + static_cast<Residue>(c - '0');
        }
        if (!out.empty() && value <= out.back()) return std::nullopt;
        out.push_back(value);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace cycledual
