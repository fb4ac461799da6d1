#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "cycledual/certificate.hpp"
#include "cycledual/construct.hpp"
#include "cycledual/cyclic.hpp"
#include "cycledual/poly.hpp"

namespace cycledual::cli {
namespace {

std::string fixed2(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", value);
    return buf;
}

const char* verdict(bool ok) { return ok ? "pass" : "fail"; }

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << text;
    return static_cast<bool>(out.flush());
}

// ceil(delta) - 1, zero for delta <= 1.
std::uint64_t default_cosets(const Rational& delta) {
    if (delta.num <= delta.den) return 0;
    return static_cast<std::uint64_t>((delta.num + delta.den - 1) / delta.den - 1);
}

struct LoadedCertificate {
    CertificateFile file;
    int status = kSuccess;
};

LoadedCertificate load_certificate(const std::string& path, std::ostream& err) {
    LoadedCertificate loaded;
    const auto text = read_file(path);
    if (!text) {
        err << "error: cannot read " << path << "\n";
        loaded.status = kUsageError;
        return loaded;
    }
    try {
        loaded.file = CertificateFile::parse(*text);
    } catch (const CertificateFormatError& e) {
        err << "error: " << path << ": " << e.what() << "\n";
        loaded.status = kUsageError;
    }
    return loaded;
}

std::string table_row(const TableOptions& options, unsigned m, std::uint64_t mu, bool& failed) {
    std::ostringstream row;
    row << options.s << ' ' << m << ' ' << mu << ' ';
    FamilyParams params{options.kind, options.s, m, mu, std::nullopt};
    try {
        FamilyParams probe = params;
        probe.b_override = 0;
        const FamilyPlan plan = plan_family(probe);
        if (default_cosets(plan.delta) < 1) {
            row << "- - - - skipped (b = 0)";
            return row.str();
        }
        const SelfDualCertificate cert = build_family(params);
        row << cert.n << ' ' << cert.k << ' ' << cert.floor_min << ' ' << fixed2(cert.paper.value);
        if (!cert.checks.all()) {
            row << " ! checks failed";
            failed = true;
        }
    } catch (const std::exception& e) {
        row << "- - - - ! error: " << e.what();
        failed = true;
    }
    return row.str();
}

// Maps library exceptions onto the exit-code contract.
template <class F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kCheckFailure;
    }
}

}  // namespace

std::uint64_t default_budget() {
    if (const char* env = std::getenv("CYCLEDUAL_BUDGET")) {
        const std::string text(env);
        if (!text.empty() && std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            try {
                return std::stoull(text);
            } catch (const std::out_of_range&) {
            }
        }
        throw std::invalid_argument("CYCLEDUAL_BUDGET must be a non-negative integer");
    }
    return kDefaultBudget;
}

int cmd_construct(const ConstructOptions& options, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        const SelfDualCertificate cert =
            build_family(FamilyParams{options.kind, options.s, options.m, options.mu, options.b});

        out << "[" << cert.n << ", " << cert.k << ", ≥" << cert.floor_min << "]\n";
        out << "kind " << to_string(options.kind) << ", alphabet GF(" << cert.alphabet.size() << "), n_inner "
            << cert.plan.n_inner << ", b " << cert.plan.b << "\n";
        out << "defining set: {" << format_residues(cert.plan.defining_set.members()) << "}\n";
        out << "bch bounds: inner " << cert.bch_inner << ", dual " << cert.bch_dual << ", floor_min " << cert.floor_min
            << "\n";
        out << "paper_floor: " << fixed2(cert.paper.value) << " (" << cert.paper.expression() << ")\n";
        out << "dual_containing: " << verdict(cert.checks.dual_containing) << "\n";
        out << "self_dual: " << verdict(cert.checks.self_dual) << "\n";
        out << "van_lint_equivalence: " << verdict(cert.checks.van_lint_equivalence) << "\n";
        out << "cyclic_invariance: " << verdict(cert.checks.cyclic_invariance) << "\n";

        if (options.out_path) {
            if (!write_file(*options.out_path, serialize(cert))) {
                err << "error: cannot write " << *options.out_path << "\n";
                return kUsageError;
            }
            out << "certificate: " << *options.out_path << "\n";
        }
        return cert.checks.all() ? kSuccess : kCheckFailure;
    });
}

int cmd_verify(const std::string& cert_path, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        const LoadedCertificate loaded = load_certificate(cert_path, err);
        if (loaded.status != kSuccess) return loaded.status;

        VerifyReport report;
        try {
            report = verify_certificate(loaded.file);
        } catch (const CertificateFormatError& e) {
            err << "error: " << cert_path << ": " << e.what() << "\n";
            return kUsageError;
        }
        for (const CheckOutcome& c : report.checks) {
            out << c.name << ": ";
            if (c.recorded) out << "recorded " << verdict(*c.recorded) << ", ";
            out << "recomputed " << verdict(c.recomputed) << "\n";
        }
        out << (report.ok() ? "verified" : "verification failed") << "\n";
        return report.ok() ? kSuccess : kCheckFailure;
    });
}

int cmd_distance(const DistanceOptions& options, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        LoadedCertificate loaded = load_certificate(options.cert_path, err);
        if (loaded.status != kSuccess) return loaded.status;

        CertificateCodes codes = [&] {
            try {
                return load_codes(loaded.file);
            } catch (const CertificateFormatError& e) {
                throw std::invalid_argument(options.cert_path + ": " + e.what());
            }
        }();

        DistanceReport report{};
        switch (options.method) {
            case DistanceMethod::exhaustive: {
                ExhaustiveOptions ex;
                ex.budget = options.budget ? *options.budget : default_budget();
                ex.workers = std::max(1u, options.workers);
                try {
                    report = exact_min_distance(codes.alphabet, codes.basis, ex);
                } catch (const std::length_error& e) {
                    err << "error: " << e.what() << "\n";
                    return kUsageError;
                }
                out << "d = " << report.value << " (exact)\n";
                break;
            }
            case DistanceMethod::sampled:
                report = sampled_weight_upper_bound(codes.alphabet, codes.basis, options.trials, options.seed);
                out << "d ≤ " << report.value << " (sampled)\n";
                break;
            case DistanceMethod::bch:
                report = DistanceReport{DistanceMethod::bch, codes.floor_min, false, 0, std::nullopt};
                out << "d ≥ " << report.value << " (bch)\n";
                break;
        }
        out << "codewords examined: " << report.enumerated << "\n";

        record_distance(loaded.file, report);
        if (!write_file(options.cert_path, loaded.file.to_text())) {
            err << "warning: certificate not writable, report not recorded\n";
        }

        if (report.value < codes.floor_min) {
            out << "FAIL: distance " << report.value << " below floor_min " << codes.floor_min << "\n";
            return kCheckFailure;
        }
        return kSuccess;
    });
}

int cmd_table(const TableOptions& options, std::ostream& out, std::ostream& err) {
    if (options.s < 1) {
        err << "error: s must be at least 1\n";
        return kUsageError;
    }
    const unsigned alphabet_degree = options.kind == DualKind::euclidean ? options.s : 2 * options.s;

    struct Cell {
        unsigned m;
        std::uint64_t mu;
        std::string row;
        bool failed = false;
    };
    std::vector<Cell> cells;
    std::vector<std::string> oversized;
    for (unsigned m = 1; m <= options.m_max; m += 2) {
        const std::uint64_t bits = std::uint64_t{alphabet_degree} * m;
        if (bits > Field::kMaxDegree) {
            oversized.push_back(std::to_string(options.s) + ' ' + std::to_string(m) +
                                " - - - - - - ! error: extension field beyond 2^32");
            continue;
        }
        const std::uint64_t order = (std::uint64_t{1} << bits) - 1;
        for (std::uint64_t mu : divisors(order)) {
            if (!options.mu_filter.empty() &&
                std::find(options.mu_filter.begin(), options.mu_filter.end(), mu) == options.mu_filter.end()) {
                continue;
            }
            cells.push_back(Cell{m, mu, {}, false});
        }
    }

    // Cells are independent; workers pull indices and results keep their slots.
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            cells[i].row = table_row(options, cells[i].m, cells[i].mu, cells[i].failed);
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(cells.size())));
    std::vector<std::future<void>> pool;
    for (unsigned w = 1; w < workers; ++w) pool.push_back(std::async(std::launch::async, work));
    work();
    for (auto& f : pool) f.get();

    out << "# kind " << to_string(options.kind) << "\n";
    out << "# s m mu n k floor_min paper_floor\n";
    std::size_t built = 0, skipped = 0, failed = 0;
    for (const Cell& c : cells) {
        out << c.row << "\n";
        if (c.failed) {
            ++failed;
        } else if (c.row.find("skipped") != std::string::npos) {
            ++skipped;
        } else {
            ++built;
        }
    }
    for (const std::string& row : oversized) out << row << "\n";
    failed += oversized.size();
    out << "# " << built << " built, " << skipped << " skipped, " << failed << " failed\n";
    return failed == 0 ? kSuccess : kCheckFailure;
}

int cmd_factor(std::uint64_t q, std::uint64_t n, std::ostream& out, std::ostream& err) {
    if (q < 2 || !std::has_single_bit(q)) {
        err << "error: q must be a power of two\n";
        return kUsageError;
    }
    const auto s = static_cast<unsigned>(std::countr_zero(q));
    if (s > 16) {
        err << "error: q must be at most 2^16\n";
        return kUsageError;
    }
    if (n == 0 || n % 2 == 0) {
        err << "error: n must be odd\n";
        return kUsageError;
    }
    return guarded(err, [&]() -> int {
        const Field alphabet = Field::create(s);
        const auto ctx = make_root_context(alphabet, n);

        Poly product = Poly::constant(alphabet, 1);
        for (const auto& c : all_cosets(n, q)) {
            const Poly mp = minimal_polynomial(c, ctx->beta, ctx->embedding);
            out << "{" << format_residues(c) << "}: " << format_poly(mp) << "\n";
            product = product * mp;
        }
        if (product != Poly::x_n_minus_1(alphabet, n)) {
            err << "error: product of minimal polynomials is not x^" << n << " - 1\n";
            return kCheckFailure;
        }
        return kSuccess;
    });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Self-dual repeated-root cyclic codes over GF(2^s)", "cycledual"};
    app.require_subcommand(1);

    const auto kinds = CLI::IsMember({"euclidean", "hermitian"});
    const auto methods = CLI::IsMember({"exhaustive", "sampled", "bch"});
    std::string construct_kind, table_kind, distance_method;

    ConstructOptions construct;
    std::uint64_t construct_b = 0;
    std::string construct_out;
    auto* c = app.add_subcommand("construct", "build a family member and check it");
    c->add_option("--kind", construct_kind, "euclidean or hermitian")->required()->check(kinds);
    c->add_option("--s", construct.s, "base field degree")->required();
    c->add_option("--m", construct.m, "odd extension parameter")->required();
    c->add_option("--mu", construct.mu, "divisor of the multiplicative group order")->required();
    auto* b_opt = c->add_option("--b", construct_b, "number of cosets C_1..C_b (default ceil(delta) - 1)");
    auto* out_opt = c->add_option("--out", construct_out, "certificate path");

    std::string verify_path;
    auto* v = app.add_subcommand("verify", "re-derive every check in a certificate");
    v->add_option("cert", verify_path, "certificate path")->required();

    DistanceOptions distance;
    std::uint64_t budget = 0;
    auto* d = app.add_subcommand("distance", "minimum distance of a certified code");
    d->add_option("cert", distance.cert_path, "certificate path")->required();
    d->add_option("--method", distance_method, "exhaustive, sampled or bch")->required()->check(methods);
    auto* budget_opt = d->add_option("--budget", budget, "maximum number of codewords to enumerate");
    d->add_option("--trials", distance.trials, "sampled codewords")->capture_default_str();
    d->add_option("--seed", distance.seed, "sampling seed")->capture_default_str();
    d->add_option("--workers", distance.workers, "enumeration threads")->capture_default_str();

    TableOptions table;
    auto* t = app.add_subcommand("table", "sweep m and mu for one kind and s");
    t->add_option("--kind", table_kind, "euclidean or hermitian")->required()->check(kinds);
    t->add_option("--s", table.s, "base field degree")->required();
    t->add_option("--m-max", table.m_max, "largest odd m")->required();
    t->add_option("--mu", table.mu_filter, "restrict to these mu values");
    t->add_option("--workers", table.workers, "cells built in parallel")->capture_default_str();

    std::uint64_t factor_q = 0, factor_n = 0;
    auto* f = app.add_subcommand("factor", "cyclotomic cosets and minimal polynomials of x^n - 1");
    f->add_option("--q", factor_q, "field order")->required();
    f->add_option("--n", factor_n, "odd length")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    if (c->parsed()) {
        construct.kind = *parse_dual_kind(construct_kind);
        if (*b_opt) construct.b = construct_b;
        if (*out_opt) construct.out_path = construct_out;
        return cmd_construct(construct, out, err);
    }
    if (v->parsed()) return cmd_verify(verify_path, out, err);
    if (d->parsed()) {
        distance.method = *parse_distance_method(distance_method);
        if (*budget_opt) distance.budget = budget;
        return cmd_distance(distance, out, err);
    }
    if (t->parsed()) {
        table.kind = *parse_dual_kind(table_kind);
        return cmd_table(table, out, err);
    }
    if (f->parsed()) return cmd_factor(factor_q, factor_n, out, err);
    return kUsageError;
}

}  // namespace cycledual::cli
