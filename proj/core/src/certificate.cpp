#include "cycledual/certificate.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace cycledual {

namespace {

constexpr const char* kVersionLine = "format_version = 1";

bool valid_key(const std::string& key) {
    if (key.empty()) return false;
    return std::all_of(key.begin(), key.end(),
                       [](char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_'; });
}

std::string format_fixed2(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", value);
    return buf;
}

std::string verdict(bool pass) { return pass ? "pass" : "fail"; }

std::uint64_t parse_decimal(const std::string& section, const std::string& key, const std::string& text) {
    const bool canonical = !text.empty() && text.size() <= 19 && (text.size() == 1 || text.front() != '0') &&
                           std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; });
    if (!canonical) throw CertificateFormatError("[" + section + "] " + key + ": expected a decimal integer");
    return std::stoull(text);
}

}  // namespace

const std::vector<std::string>& CertificateFile::required_sections() {
    static const std::vector<std::string> names{"params", "field", "inner_code", "outer_code", "bounds", "checks"};
    return names;
}

CertificateFile CertificateFile::parse(const std::string& text) {
    CertificateFile file;
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty() || lines.back() != kVersionLine) {
        throw CertificateFormatError("missing or unsupported trailer, expected \"" + std::string(kVersionLine) + "\"");
    }
    lines.pop_back();

    Section* current = nullptr;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string& l = lines[i];
        const std::string where = "line " + std::to_string(i + 1) + ": ";
        if (l.empty()) continue;
        if (l.front() == '[') {
            if (l.size() < 3 || l.back() != ']') throw CertificateFormatError(where + "malformed section header");
            const std::string name = l.substr(1, l.size() - 2);
            if (!valid_key(name)) throw CertificateFormatError(where + "malformed section name");
            if (file.has_section(name)) throw CertificateFormatError(where + "duplicate section [" + name + "]");
            file.sections_.push_back(Section{name, {}});
            current = &file.sections_.back();
            continue;
        }
        if (current == nullptr) throw CertificateFormatError(where + "entry outside any section");
        std::string key;
        std::string value;
        const auto sep = l.find(" = ");
        if (sep != std::string::npos) {
            key = l.substr(0, sep);
            value = l.substr(sep + 3);
        } else if (l.size() > 2 && l.compare(l.size() - 2, 2, " =") == 0) {
            key = l.substr(0, l.size() - 2);
        } else {
            throw CertificateFormatError(where + "expected \"key = value\"");
        }
        if (!valid_key(key)) throw CertificateFormatError(where + "malformed key");
        for (const auto& [k, v] : current->entries) {
            if (k == key) throw CertificateFormatError(where + "duplicate key " + key);
        }
        current->entries.emplace_back(std::move(key), std::move(value));
    }

    for (const auto& name : required_sections()) {
        if (!file.has_section(name)) throw CertificateFormatError("missing section [" + name + "]");
    }
    return file;
}

std::string CertificateFile::to_text() const {
    std::string out;
    for (const auto& s : sections_) {
        out += "[" + s.name + "]\n";
        for (const auto& [key, value] : s.entries) {
            out += key;
            out += value.empty() ? " =" : " = " + value;
            out += '\n';
        }
        out += '\n';
    }
    out += kVersionLine;
    out += '\n';
    return out;
}

bool CertificateFile::has_section(const std::string& name) const noexcept {
    return std::any_of(sections_.begin(), sections_.end(), [&](const Section& s) { return s.name == name; });
}

CertificateFile::Section* CertificateFile::section(const std::string& name) noexcept {
    for (auto& s : sections_) {
        if (s.name == name) return &s;
    }
    return nullptr;
}

const std::string* CertificateFile::find(const std::string& section_name, const std::string& key) const noexcept {
    for (const auto& s : sections_) {
        if (s.name != section_name) continue;
        for (const auto& [k, v] : s.entries) {
            if (k == key) return &v;
        }
    }
    return nullptr;
}

const std::string& CertificateFile::require(const std::string& section_name, const std::string& key) const {
    const std::string* v = find(section_name, key);
    if (v == nullptr) throw CertificateFormatError("missing key " + key + " in [" + section_name + "]");
    return *v;
}

void CertificateFile::set(const std::string& section_name, const std::string& key, std::string value) {
    Section* s = section(section_name);
    if (s == nullptr) {
        sections_.push_back(Section{section_name, {}});
        s = &sections_.back();
    }
    for (auto& [k, v] : s->entries) {
        if (k == key) {
            v = std::move(value);
            return;
        }
    }
    s->entries.emplace_back(key, std::move(value));
}

CertificateFile to_certificate_file(const SelfDualCertificate& cert) {
    const FamilyPlan& plan = cert.plan;
    CertificateFile f;
    f.set("params", "kind", std::string(to_string(plan.params.kind)));
    f.set("params", "s", std::to_string(plan.params.s));
    f.set("params", "m", std::to_string(plan.params.m));
    f.set("params", "mu", std::to_string(plan.params.mu));
    f.set("params", "b", std::to_string(plan.b));

    f.set("field", "alphabet_degree", std::to_string(cert.alphabet.degree()));
    f.set("field", "alphabet_modulus", cert.alphabet.modulus_hex());
    f.set("field", "extension_degree", std::to_string(cert.ext_degree));
    f.set("field", "extension_modulus", to_hex(cert.ext_modulus));
    f.set("field", "primitive_element", to_hex(cert.primitive_element));
    f.set("field", "beta_exponent", std::to_string(cert.beta_exponent));

    f.set("inner_code", "n_inner", std::to_string(plan.n_inner));
    f.set("inner_code", "k", std::to_string(plan.n_inner - plan.defining_set.size()));
    f.set("inner_code", "defining_set", format_residues(plan.defining_set.members()));
    f.set("inner_code", "inner_generator", format_poly(cert.inner_generator));
    f.set("inner_code", "dual_defining_set", format_residues(cert.dual_defining_set.members()));
    f.set("inner_code", "dual_generator", format_poly(cert.dual_generator));
    f.set("inner_code", "g2", format_poly(cert.g2));

    f.set("outer_code", "n", std::to_string(cert.n));
    f.set("outer_code", "k", std::to_string(cert.k));
    f.set("outer_code", "permutation", "interleave");
    f.set("outer_code", "outer_generator", format_poly(cert.outer_generator));

    f.set("bounds", "delta", plan.delta.to_string());
    f.set("bounds", "bch_inner", std::to_string(cert.bch_inner));
    f.set("bounds", "bch_dual", std::to_string(cert.bch_dual));
    f.set("bounds", "floor_min", std::to_string(cert.floor_min));
    f.set("bounds", "paper_floor", format_fixed2(cert.paper.value));
    f.set("bounds", "paper_floor_exact", cert.paper.expression());
    f.set("bounds", "paper_floor_clamped", std::to_string(cert.paper.clamped));
    if (cert.distance) record_distance(f, *cert.distance);

    f.set("checks", "dual_containing", verdict(cert.checks.dual_containing));
    f.set("checks", "self_dual", verdict(cert.checks.self_dual));
    f.set("checks", "van_lint_equivalence", verdict(cert.checks.van_lint_equivalence));
    f.set("checks", "cyclic_invariance", verdict(cert.checks.cyclic_invariance));
    f.set("checks", "automorphism_product_subgroup", "not verified");
    return f;
}

std::string serialize(const SelfDualCertificate& cert) { return to_certificate_file(cert).to_text(); }

void record_distance(CertificateFile& file, const DistanceReport& report) {
    file.set("bounds", "distance_method", std::string(to_string(report.method)));
    file.set("bounds", "distance_value", std::to_string(report.value));
    file.set("bounds", "distance_exact", report.exact ? "true" : "false");
    if (report.seed) file.set("bounds", "distance_seed", std::to_string(*report.seed));
}

bool VerifyReport::ok() const noexcept {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.ok(); });
}

namespace {

struct Recorded {
    FamilyPlan plan;
    Field alphabet;
    std::uint64_t n_inner;
    Poly g;
    Poly gd;
    Poly g2;
    Poly outer;
    DefiningSet t;
    DefiningSet t_dual;
};

Poly require_poly(const CertificateFile& f, const Field& field, const std::string& section, const std::string& key) {
    auto p = parse_poly(field, f.require(section, key));
    if (!p) throw CertificateFormatError("[" + section + "] " + key + ": malformed polynomial");
    return *p;
}

DefiningSet require_set(const CertificateFile& f, std::uint64_t n, std::uint64_t base, const std::string& key) {
    auto members = parse_residues(f.require("inner_code", key));
    if (!members || (!members->empty() && members->back() >= n))
        throw CertificateFormatError("[inner_code] " + key + ": malformed residue list");
    return DefiningSet(n, base, std::move(*members));
}

Recorded read_recorded(const CertificateFile& f) {
    const auto kind = parse_dual_kind(f.require("params", "kind"));
    if (!kind) throw CertificateFormatError("[params] kind: expected euclidean or hermitian");
    FamilyParams params;
    params.kind = *kind;
    params.s = static_cast<unsigned>(parse_decimal("params", "s", f.require("params", "s")));
    params.m = static_cast<unsigned>(parse_decimal("params", "m", f.require("params", "m")));
    params.mu = parse_decimal("params", "mu", f.require("params", "mu"));
    params.b_override = parse_decimal("params", "b", f.require("params", "b"));

    FamilyPlan plan = [&] {
        try {
            return plan_family(params);
        } catch (const std::exception& e) {
            throw CertificateFormatError(std::string("[params] ") + e.what());
        }
    }();

    const auto degree = parse_decimal("field", "alphabet_degree", f.require("field", "alphabet_degree"));
    const auto modulus = parse_hex(f.require("field", "alphabet_modulus"));
    if (degree != plan.alphabet_degree || !modulus)
        throw CertificateFormatError("[field] alphabet does not match the parameters");
    Field alphabet = [&] {
        try {
            return Field::create(static_cast<unsigned>(degree), *modulus);
        } catch (const std::exception& e) {
            throw CertificateFormatError(std::string("[field] ") + e.what());
        }
    }();

    const std::uint64_t n = plan.n_inner;
    const std::uint64_t base = alphabet.size();
    Recorded r{plan,
               alphabet,
               n,
               require_poly(f, alphabet, "inner_code", "inner_generator"),
               require_poly(f, alphabet, "inner_code", "dual_generator"),
               require_poly(f, alphabet, "inner_code", "g2"),
               require_poly(f, alphabet, "outer_code", "outer_generator"),
               require_set(f, n, base, "defining_set"),
               require_set(f, n, base, "dual_defining_set")};
    return r;
}

template <typename Fn>
bool guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::exception&) {
        return false;
    }
}

std::optional<bool> recorded_verdict(const CertificateFile& f, const std::string& key) {
    const std::string& v = f.require("checks", key);
    if (v == "pass") return true;
    if (v == "fail") return false;
    throw CertificateFormatError("[checks] " + key + ": expected pass or fail");
}

}  // namespace

VerifyReport verify_certificate(const CertificateFile& f) {
    const Recorded r = read_recorded(f);
    const DualKind kind = r.plan.params.kind;
    const std::uint64_t n = r.n_inner;
    VerifyReport report;
    auto add = [&](const std::string& name, std::optional<bool> recorded, bool recomputed) {
        report.checks.push_back(CheckOutcome{name, recorded, recomputed});
    };
    auto equals = [&](const std::string& section, const std::string& key, const std::string& expected) {
        const std::string* v = f.find(section, key);
        return v != nullptr && *v == expected;
    };

    add("parameters", std::nullopt, guarded([&] {
            return equals("inner_code", "n_inner", std::to_string(n)) &&
                   equals("inner_code", "k", std::to_string(n - r.plan.defining_set.size())) &&
                   equals("outer_code", "n", std::to_string(2 * n)) &&
                   equals("outer_code", "k", std::to_string(n)) && equals("outer_code", "permutation", "interleave") &&
                   r.t == r.plan.defining_set;
        }));

    add("field", std::nullopt, guarded([&] {
            const auto ctx = make_root_context(r.alphabet, n);
            return equals("field", "extension_degree", std::to_string(ctx->ext_degree)) &&
                   equals("field", "extension_modulus", to_hex(ctx->ext.modulus())) &&
                   equals("field", "primitive_element", to_hex(ctx->ext.primitive_element())) &&
                   equals("field", "beta_exponent", std::to_string(ctx->beta_exponent));
        }));

    std::optional<CyclicCode> inner;
    try {
        inner = code_from_generator(r.alphabet, n, r.g);
    } catch (const std::exception&) {
    }

    add("defining_set", std::nullopt, inner && r.g.is_monic() && inner->defining_set() == r.t);

    add("dual_containing", recorded_verdict(f, "dual_containing"),
        inner && guarded([&] { return is_dual_containing(*inner, kind); }));

    add("dual_generator", std::nullopt, inner && guarded([&] {
                                            const CyclicCode d = dual(*inner, kind);
                                            return d.generator() == r.gd && d.defining_set() == r.t_dual &&
                                                   r.g * r.g2 == r.gd;
                                        }));

    const Matrix basis = uuv_basis(r.alphabet, n, r.g, r.gd);
    add("self_dual", recorded_verdict(f, "self_dual"),
        guarded([&] { return verify_self_dual(r.alphabet, basis, kind); }));

    const Matrix interleaved = interleave_permutation(n).apply_rows(basis);
    add("van_lint_equivalence", recorded_verdict(f, "van_lint_equivalence"), guarded([&] {
            if (r.outer != r.g * r.g * r.g2 || r.outer.degree() != static_cast<int>(n)) return false;
            if (basis.rows() != n || rank(r.alphabet, basis) != n) return false;
            for (std::size_t i = 0; i < interleaved.rows(); ++i) {
                const auto row = interleaved.row(i);
                if (!Poly(r.alphabet, std::vector<Elem>(row.begin(), row.end())).divisible_by(r.outer)) return false;
            }
            return true;
        }));

    add("cyclic_invariance", recorded_verdict(f, "cyclic_invariance"), guarded([&] {
            return basis.rows() > 0 &&
                   check_code_automorphism(r.alphabet, interleaved, cyclic_shift(static_cast<std::size_t>(2 * n), 1));
        }));

    add("bounds", std::nullopt, guarded([&] {
            const std::uint64_t bi = bch_bound(r.t);
            const std::uint64_t bd = bch_bound(r.t_dual);
            const PaperFloor pf = paper_floor(kind, r.plan.params.s, r.plan.params.m, r.plan.params.mu);
            return equals("bounds", "delta", r.plan.delta.to_string()) &&
                   equals("bounds", "bch_inner", std::to_string(bi)) &&
                   equals("bounds", "bch_dual", std::to_string(bd)) &&
                   equals("bounds", "floor_min", std::to_string(std::min(bd, 2 * bi))) &&
                   equals("bounds", "paper_floor", format_fixed2(pf.value)) &&
                   equals("bounds", "paper_floor_exact", pf.expression()) &&
                   equals("bounds", "paper_floor_clamped", std::to_string(pf.clamped));
        }));

    return report;
}

CertificateCodes load_codes(const CertificateFile& f) {
    const Recorded r = read_recorded(f);
    const auto floor_min = parse_decimal("bounds", "floor_min", f.require("bounds", "floor_min"));
    Matrix basis = uuv_basis(r.alphabet, r.n_inner, r.g, r.gd);
    return CertificateCodes{r.alphabet, r.plan.params.kind, r.n_inner, std::move(basis), floor_min};
}

}  // namespace cycledual
