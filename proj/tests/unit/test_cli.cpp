#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/commands.hpp"
#include "cycledual/certificate.hpp"

using namespace cycledual;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        path_ = fs::temp_directory_path() /
                ("cycledual_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                 ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

bool has_line(const std::string& text, const std::string& line) {
    std::istringstream in(text);
    std::string l;
    while (std::getline(in, l)) {
        if (l == line) return true;
    }
    return false;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string l;
    while (std::getline(in, l)) out.push_back(l);
    return out;
}

std::vector<std::string> construct_args(const char* kind, unsigned s, unsigned m, unsigned mu) {
    return {"construct", "--kind",          kind, "--s", std::to_string(s), "--m", std::to_string(m),
            "--mu",      std::to_string(mu)};
}

TEST(Construct, BinaryInstance) {
    const Result r = run(construct_args("euclidean", 1, 3, 1));
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has_line(r.out, "[14, 7, ≥4]")) << r.out;
    EXPECT_TRUE(has_line(r.out, "self_dual: pass"));
    EXPECT_TRUE(has_line(r.out, "van_lint_equivalence: pass"));
    EXPECT_NE(r.out.find("paper_floor: 1.74"), std::string::npos);
}

TEST(Construct, HermitianInstance) {
    const Result r = run(construct_args("hermitian", 1, 3, 3));
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has_line(r.out, "[42, 21, ≥6]")) << r.out;
}

TEST(Construct, UsageErrors) {
    Result r = run(construct_args("euclidean", 1, 4, 1));
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("m must be odd"), std::string::npos) << r.err;
    EXPECT_EQ(run(construct_args("euclidean", 1, 3, 2)).code, 2);
    EXPECT_EQ(run(construct_args("lee", 1, 3, 1)).code, 2);
    EXPECT_EQ(run({"construct", "--kind", "euclidean", "--s", "1"}).code, 2);
    EXPECT_EQ(run({"construct", "--kind", "euclidean", "--s", "x", "--m", "3", "--mu", "1"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Construct, ExplicitCosetCount) {
    std::vector<std::string> args = construct_args("euclidean", 1, 3, 1);
    args.insert(args.end(), {"--b", "0"});
    const Result r = run(args);
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(has_line(r.out, "[14, 7, ≥2]")) << r.out;
}

TEST(Verify, FreshTamperedAndMalformed) {
    TempDir dir;
    const std::string path = dir.file("c14.cert");
    auto args = construct_args("euclidean", 1, 3, 1);
    args.insert(args.end(), {"--out", path});
    ASSERT_EQ(run(args).code, 0);

    Result r = run({"verify", path});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_TRUE(has_line(r.out, "verified"));

    const std::string text = slurp(path);
    std::string tampered = text;
    const auto at = tampered.find("inner_generator = 1,1,0,1");
    ASSERT_NE(at, std::string::npos);
    tampered[at + std::string("inner_generator = 1,").size()] = '0';
    spit(path, tampered);
    r = run({"verify", path});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(has_line(r.out, "self_dual: recorded pass, recomputed fail")) << r.out;

    const auto checks = text.find("[checks]");
    spit(path, text.substr(0, checks) + "format_version = 1\n");
    EXPECT_EQ(run({"verify", path}).code, 2);

    EXPECT_EQ(run({"verify", dir.file("missing.cert")}).code, 2);
}

TEST(Distance, ExhaustiveSampledAndBudget) {
    TempDir dir;
    const std::string small = dir.file("c14.cert");
    const std::string big = dir.file("c42.cert");
    auto a = construct_args("euclidean", 1, 3, 1);
    a.insert(a.end(), {"--out", small});
    ASSERT_EQ(run(a).code, 0);
    auto b = construct_args("euclidean", 2, 3, 3);
    b.insert(b.end(), {"--out", big});
    ASSERT_EQ(run(b).code, 0);

    Result r = run({"distance", small, "--method", "exhaustive"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has_line(r.out, "d = 4 (exact)")) << r.out;
    EXPECT_TRUE(has_line(r.out, "codewords examined: 127"));
    const CertificateFile f = CertificateFile::parse(slurp(small));
    EXPECT_EQ(*f.find("bounds", "distance_value"), "4");
    EXPECT_EQ(*f.find("bounds", "distance_exact"), "true");
    EXPECT_EQ(run({"verify", small}).code, 0);

    r = run({"distance", big, "--method", "sampled", "--trials", "100000", "--seed", "7"});
    EXPECT_EQ(r.code, 0);
    const auto lead = std::string("d ≤ ");
    ASSERT_EQ(r.out.rfind(lead, 0), 0u) << r.out;
    const auto value = std::stoull(r.out.substr(lead.size()));
    EXPECT_GE(value, 6u);
    EXPECT_NE(r.out.find(" (sampled)\n"), std::string::npos);
    EXPECT_EQ(*CertificateFile::parse(slurp(big)).find("bounds", "distance_seed"), "7");

    r = run({"distance", big, "--method", "exhaustive"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("4398046511103"), std::string::npos) << r.err;

    r = run({"distance", small, "--method", "exhaustive", "--budget", "126"});
    EXPECT_EQ(r.code, 2);
    r = run({"distance", small, "--method", "bch"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has_line(r.out, "d ≥ 4 (bch)")) << r.out;
    EXPECT_EQ(run({"distance", small, "--method", "exact"}).code, 2);
}

TEST(Distance, BudgetFromEnvironment) {
    TempDir dir;
    const std::string path = dir.file("c14.cert");
    auto a = construct_args("euclidean", 1, 3, 1);
    a.insert(a.end(), {"--out", path});
    ASSERT_EQ(run(a).code, 0);

    ::setenv("CYCLEDUAL_BUDGET", "100", 1);
    EXPECT_EQ(cli::default_budget(), 100u);
    EXPECT_EQ(run({"distance", path, "--method", "exhaustive"}).code, 2);
    ::setenv("CYCLEDUAL_BUDGET", "127", 1);
    EXPECT_EQ(run({"distance", path, "--method", "exhaustive"}).code, 0);
    ::unsetenv("CYCLEDUAL_BUDGET");
    EXPECT_EQ(cli::default_budget(), kDefaultBudget);
}

TEST(Table, Examples) {
    Result r = run({"table", "--kind", "euclidean", "--s", "1", "--m-max", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has_line(r.out, "1 3 1 14 7 4 1.74")) << r.out;

    r = run({"table", "--kind", "hermitian", "--s", "1", "--m-max", "3", "--mu", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has_line(r.out, "1 3 1 126 63 14 7.94")) << r.out;

    r = run({"table", "--kind", "euclidean", "--s", "2", "--m-max", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has_line(r.out, "# 0 built, 2 skipped, 0 failed")) << r.out;
    for (const auto& l : lines_of(r.out)) {
        if (l.front() != '#') EXPECT_NE(l.find("skipped"), std::string::npos) << l;
    }
}

TEST(Table, DeterministicSortedAndWorkerInvariant) {
    const std::vector<std::string> base{"table", "--kind", "euclidean", "--s", "1", "--m-max", "7"};
    const Result one = run(base);
    ASSERT_EQ(one.code, 0);
    auto with_workers = base;
    with_workers.insert(with_workers.end(), {"--workers", "4"});
    EXPECT_EQ(run(with_workers).out, one.out);
    EXPECT_EQ(run(base).out, one.out);

    std::pair<unsigned, unsigned long long> prev{0, 0};
    for (const auto& l : lines_of(one.out)) {
        if (l.front() == '#') continue;
        std::istringstream in(l);
        unsigned s = 0, m = 0;
        unsigned long long mu = 0;
        in >> s >> m >> mu;
        const std::pair<unsigned, unsigned long long> key{m, mu};
        EXPECT_LT(prev, key) << l;
        prev = key;
    }
}

TEST(Factor, Examples) {
    Result r = run({"factor", "--q", "2", "--n", "7"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{0}: 1,1\n{1,2,4}: 1,1,0,1\n{3,5,6}: 1,0,1,1\n");

    r = run({"factor", "--q", "4", "--n", "21"});
    EXPECT_EQ(r.code, 0);
    std::vector<std::size_t> degrees;
    for (const auto& l : lines_of(r.out)) {
        const auto coeffs = l.substr(l.find(": ") + 2);
        degrees.push_back(static_cast<std::size_t>(std::count(coeffs.begin(), coeffs.end(), ',')));
    }
    EXPECT_EQ(degrees, (std::vector<std::size_t>{1, 3, 3, 3, 3, 1, 3, 3, 1}));

    r = run({"factor", "--q", "2", "--n", "1"});
    EXPECT_EQ(r.out, "{0}: 1,1\n");

    EXPECT_EQ(run({"factor", "--q", "3", "--n", "7"}).code, 2);
    EXPECT_EQ(run({"factor", "--q", "2", "--n", "8"}).code, 2);
}

// construct then verify exits 0 across the grid used by the acceptance runs.
TEST(RoundTrip, ConstructThenVerify) {
    TempDir dir;
    const std::vector<std::tuple<const char*, unsigned, unsigned, unsigned>> grid{
        {"euclidean", 1, 3, 1}, {"euclidean", 2, 3, 9}, {"euclidean", 2, 3, 3},  {"hermitian", 1, 3, 3},
        {"hermitian", 1, 3, 1}, {"euclidean", 1, 5, 1}, {"hermitian", 1, 5, 11}, {"euclidean", 2, 5, 11}};
    for (const auto& [kind, s, m, mu] : grid) {
        const std::string path = dir.file("grid.cert");
        auto a = construct_args(kind, s, m, mu);
        a.insert(a.end(), {"--out", path});
        ASSERT_EQ(run(a).code, 0) << kind << " " << s << " " << m << " " << mu;
        const Result r = run({"verify", path});
        EXPECT_EQ(r.code, 0) << kind << " " << s << " " << m << " " << mu << "\n" << r.out;
    }
}

}  // namespace
