#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "cycledual/cyclic.hpp"
#include "cycledual/cyclo.hpp"
#include "expect.hpp"
#include "oracles.hpp"

using namespace cycledual;

namespace {

using R = std::vector<Residue>;

DefiningSet T(std::uint64_t n, std::uint64_t base, R m) { return DefiningSet(n, base, std::move(m)); }

// Longest cyclic run by walking twice around Z_n.
std::uint64_t run_oracle(const DefiningSet& t) {
    const std::uint64_t n = t.n();
    if (t.size() == n) return n + 1;
    std::uint64_t best = 0, cur = 0;
    for (std::uint64_t i = 0; i < 2 * n; ++i) {
        cur = t.contains(i % n) ? cur + 1 : 0;
        best = std::max(best, std::min(cur, n));
    }
    return best + 1;
}

TEST(Coset, Examples) {
    EXPECT_EQ(coset(7, 2, 1), (R{1, 2, 4}));
    EXPECT_EQ(coset(21, 4, 7), (R{7}));
    EXPECT_EQ(coset(21, 4, 0), (R{0}));
    EXPECT_EQ(coset(15, 2, 0), (R{0}));
}

TEST(Coset, AllCosetsExamples) {
    EXPECT_EQ(all_cosets(7, 2), (std::vector<R>{{0}, {1, 2, 4}, {3, 5, 6}}));
    EXPECT_EQ(
        all_cosets(21, 4),
        (std::vector<R>{{0}, {1, 4, 16}, {2, 8, 11}, {3, 6, 12}, {5, 17, 20}, {7}, {9, 15, 18}, {10, 13, 19}, {14}}));
    EXPECT_EQ(all_cosets(1, 2), (std::vector<R>{{0}}));
    EXPECT_EQ(all_cosets(1, 4), (std::vector<R>{{0}}));
}

TEST(Coset, PartitionPropertyForAllSmallLengths) {
    for (std::uint64_t q : {2u, 4u, 8u}) {
        for (std::uint64_t n = 1; n <= 127; n += 2) {
            const auto blocks = all_cosets(n, q);
            std::vector<int> hits(n, 0);
            for (const R& b : blocks) {
                std::set<Residue> block(b.begin(), b.end());
                for (Residue i : b) {
                    ++hits[i];
                    ASSERT_TRUE(block.count(i * q % n)) << "q=" << q << " n=" << n;
                }
                // Oracle orbit of the first member.
                std::set<Residue> orbit;
                Residue x = b.front();
                do {
                    orbit.insert(x);
                    x = x * q % n;
                } while (x != b.front());
                ASSERT_EQ(orbit, block);
            }
            for (int h : hits) ASSERT_EQ(h, 1) << "q=" << q << " n=" << n;
        }
    }
}

TEST(SetAlgebra, SetMapExamples) {
    EXPECT_EQ(set_map(T(7, 2, {1, 2, 4}), -1), T(7, 2, {3, 5, 6}));
    EXPECT_EQ(set_map(T(21, 4, {1, 2, 4, 8, 11, 16}), -2), T(21, 4, {5, 10, 13, 17, 19, 20}));
    EXPECT_TRUE(set_map(T(9, 2, {}), -5).empty());
}

TEST(SetAlgebra, SetMapMinusOneIsAnInvolution) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const std::uint64_t n = 1 + rng() % 60;
        R m;
        for (Residue i = 0; i < n; ++i) {
            if (rng() % 3 == 0) m.push_back(i);
        }
        const DefiningSet t(n, 2, m);
        EXPECT_EQ(set_map(set_map(t, -1), -1), t);
    }
}

TEST(SetAlgebra, Complement) {
    EXPECT_EQ(complement(T(7, 2, {1, 2, 4})), T(7, 2, {0, 3, 5, 6}));
    EXPECT_TRUE(complement(T(7, 2, {0, 1, 2, 3, 4, 5, 6})).empty());
    EXPECT_EQ(complement(T(21, 4, {1, 2, 3, 4, 6, 8, 11, 12, 16})),
              T(21, 4, {0, 5, 7, 9, 10, 13, 14, 15, 17, 18, 19, 20}));
}

TEST(SetAlgebra, UnionDisjointAndValidation) {
    EXPECT_EQ(set_union(T(7, 2, {1, 2, 4}), T(7, 2, {0})), T(7, 2, {0, 1, 2, 4}));
    EXPECT_TRUE(disjoint(T(7, 2, {1, 2, 4}), T(7, 2, {3, 5, 6})));
    EXPECT_FALSE(disjoint(T(7, 2, {1, 2, 4}), T(7, 2, {4})));
    EXPECT_THROW(T(7, 2, {7}), std::invalid_argument);
    EXPECT_EQ(T(7, 2, {4, 1, 2, 1}).members(), (R{1, 2, 4}));
}

TEST(BchDefiningSet, Examples) {
    EXPECT_EQ(bch_defining_set(7, 2, 1), T(7, 2, {1, 2, 4}));
    EXPECT_EQ(bch_defining_set(21, 4, 3), T(21, 4, {1, 2, 3, 4, 6, 8, 11, 12, 16}));
    EXPECT_TRUE(bch_defining_set(21, 4, 0).empty());
}

TEST(BchBound, Examples) {
    EXPECT_EQ(bch_bound(T(7, 2, {1, 2, 4})), 3u);
    EXPECT_EQ(bch_bound(T(21, 4, {1, 2, 3, 4, 6, 8, 11, 12, 16})), 5u);
    EXPECT_EQ(bch_bound(T(7, 2, {})), 1u);
    EXPECT_EQ(bch_bound(T(7, 2, {0, 5, 6})), 4u);  // wraps 5, 6, 0
    EXPECT_EQ(bch_bound(T(3, 2, {0, 1, 2})), 4u);
}

TEST(BchBound, MatchesRunOracleAndIsMonotone) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::uint64_t n = 1 + rng() % 40;
        R small, big;
        for (Residue i = 0; i < n; ++i) {
            const auto roll = rng() % 4;
            if (roll == 0) small.push_back(i);
            if (roll <= 1) big.push_back(i);
        }
        const DefiningSet a(n, 2, small), b(n, 2, big);
        ASSERT_EQ(bch_bound(a), run_oracle(a));
        ASSERT_LE(bch_bound(a), bch_bound(b));
    }
}

TEST(DualContaining, Examples) {
    EXPECT_TRUE(is_dual_containing_set(T(7, 2, {1, 2, 4}), DualKind::euclidean, 2));
    EXPECT_FALSE(is_dual_containing_set(T(7, 2, {0}), DualKind::euclidean, 2));
    EXPECT_FALSE(is_dual_containing_set(T(21, 4, {7}), DualKind::hermitian, 2));
    EXPECT_TRUE(is_dual_containing_set(bch_defining_set(21, 4, 2), DualKind::hermitian, 2));
    EXPECT_THROW_MSG(is_dual_containing_set(T(7, 2, {1}), DualKind::euclidean, 2), std::invalid_argument,
                     "defining set not coset-closed");
}

TEST(DualContaining, PredicateMatchesDirectIntersection) {
    for (std::uint64_t n : {7u, 9u, 15u, 21u, 31u}) {
        const auto blocks = all_cosets(n, 4);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << blocks.size()); ++mask) {
            R m;
            for (std::size_t i = 0; i < blocks.size(); ++i) {
                if ((mask >> i) & 1u) m.insert(m.end(), blocks[i].begin(), blocks[i].end());
            }
            const DefiningSet t(n, 4, m);
            bool eu = true, he = true;
            for (Residue i : t.members()) {
                eu &= !t.contains((n - i) % n);
                he &= !t.contains((n - (2 * i) % n) % n);
            }
            ASSERT_EQ(is_dual_containing_set(t, DualKind::euclidean, 2), eu);
            ASSERT_EQ(is_dual_containing_set(t, DualKind::hermitian, 2), he);
        }
    }
}

TEST(GcdLemma, Examples) {
    EXPECT_EQ(gcd_lemma(2, 3, 6, GcdForm::minus_minus), 7u);
    EXPECT_EQ(gcd_lemma(2, 2, 3, GcdForm::plus_minus), 1u);
    EXPECT_EQ(gcd_lemma(3, 1, 3, GcdForm::plus_minus), 2u);
    EXPECT_THROW(gcd_lemma(1, 1, 1, GcdForm::minus_minus), std::invalid_argument);
    EXPECT_THROW(gcd_lemma(2, 0, 1, GcdForm::minus_minus), std::invalid_argument);
}

TEST(GcdLemma, AgreesWithIntegerGcd) {
    for (std::uint64_t q : {2u, 3u, 4u, 8u}) {
        for (unsigned a = 1; a <= 12; ++a) {
            for (unsigned b = 1; b <= 12; ++b) {
                const std::uint64_t qa = oracle::ipow(q, a), qb = oracle::ipow(q, b);
                EXPECT_EQ(gcd_lemma(q, a, b, GcdForm::minus_minus), std::gcd(qa - 1, qb - 1));
                EXPECT_EQ(gcd_lemma(q, a, b, GcdForm::plus_minus), std::gcd(qa + 1, qb - 1))
                    << q << " " << a << " " << b;
            }
        }
    }
}

TEST(NumberTheory, MultiplicativeOrderDivisorsPow) {
    EXPECT_EQ(multiplicative_order(2, 7), 3u);
    EXPECT_EQ(multiplicative_order(4, 21), 3u);
    EXPECT_EQ(multiplicative_order(2, 1), 1u);
    EXPECT_FALSE(multiplicative_order(2, 6));
    for (std::uint64_t n = 1; n < 200; n += 2) {
        const auto m = multiplicative_order(2, n);
        ASSERT_TRUE(m);
        std::uint64_t x = 1;
        for (unsigned i = 1; i <= *m; ++i) {
            x = x * 2 % n;
            if (i < *m) ASSERT_NE(x, 1 % n);
        }
        ASSERT_EQ(x, 1 % n);
    }
    EXPECT_EQ(divisors(63), (std::vector<std::uint64_t>{1, 3, 7, 9, 21, 63}));
    EXPECT_EQ(divisors(1), (std::vector<std::uint64_t>{1}));
    EXPECT_EQ(checked_pow(2, 63), std::uint64_t{1} << 63);
    EXPECT_FALSE(checked_pow(2, 64));
    EXPECT_EQ(checked_pow(7, 0), 1u);
}

TEST(MinimalPolynomial, Examples) {
    const Field f2 = Field::create(1);
    const auto ctx = make_root_context(f2, 7);
    EXPECT_EQ(minimal_polynomial({1, 2, 4}, ctx->beta, ctx->embedding), Poly(f2, {1, 1, 0, 1}));
    EXPECT_EQ(minimal_polynomial({0}, ctx->beta, ctx->embedding), Poly(f2, {1, 1}));
    EXPECT_EQ(minimal_polynomial({3, 5, 6}, ctx->beta, ctx->embedding), Poly(f2, {1, 0, 1, 1}));
    EXPECT_THROW_MSG(minimal_polynomial({1}, ctx->beta, ctx->embedding), std::invalid_argument, "coset/base mismatch");
}

TEST(MinimalPolynomial, ProductOverCosetsIsXnMinus1) {
    for (unsigned s : {1u, 2u}) {
        const Field f = Field::create(s);
        const oracle::Gf o{f.degree(), f.modulus()};
        for (std::uint64_t n : {7u, 9u, 15u, 21u, 63u}) {
            const auto ctx = make_root_context(f, n);
            oracle::Word product{1};
            for (const R& c : all_cosets(n, f.size())) {
                const Poly mp = minimal_polynomial(c, ctx->beta, ctx->embedding);
                EXPECT_EQ(mp.degree(), static_cast<int>(c.size()));
                EXPECT_TRUE(mp.is_monic());
                product = oracle::poly_mul(o, product, mp.coeffs());
            }
            EXPECT_EQ(product, oracle::x_n_plus_1(n)) << "s=" << s << " n=" << n;
        }
    }
}

TEST(Residues, StrictFormat) {
    EXPECT_EQ(format_residues({1, 2, 4}), "1,2,4");
    EXPECT_EQ(format_residues({}), "");
    EXPECT_EQ(parse_residues("1,2,4"), (R{1, 2, 4}));
    EXPECT_EQ(parse_residues(""), R{});
    EXPECT_FALSE(parse_residues("2,1"));
    EXPECT_FALSE(parse_residues("1,1"));
    EXPECT_FALSE(parse_residues("01"));
    EXPECT_FALSE(parse_residues("1,"));
    EXPECT_FALSE(parse_residues("a"));
}

TEST(DualKindNames, RoundTrip) {
    EXPECT_EQ(parse_dual_kind(to_string(DualKind::euclidean)), DualKind::euclidean);
    EXPECT_EQ(parse_dual_kind(to_string(DualKind::hermitian)), DualKind::hermitian);
    EXPECT_FALSE(parse_dual_kind("Hermitian"));
}

}  // namespace
