#ifndef CYCLEDUAL_TESTS_EXPECT_HPP
#define CYCLEDUAL_TESTS_EXPECT_HPP

#include <gtest/gtest.h>

#include <ostream>
#include <string>

#include "cycledual/cyclo.hpp"
#include "cycledual/poly.hpp"

namespace cycledual {
inline void PrintTo(const Poly& p, std::ostream* os) { *os << "[" << format_poly(p) << "]"; }
inline void PrintTo(const DefiningSet& t, std::ostream* os) {
    *os << "{" << format_residues(t.members()) << "} mod " << t.n();
}
}  // namespace cycledual

// Asserts that `stmt` throws exactly `type` (or a subclass) with `text` in what().
#define EXPECT_THROW_MSG(stmt, type, text)                                                         \
    do {                                                                                           \
        try {                                                                                      \
            stmt;                                                                                  \
            ADD_FAILURE() << "expected " #type " from " #stmt;                                     \
        } catch (const type& e) {                                                                  \
            EXPECT_NE(std::string(e.what()).find(text), std::string::npos) << "got: " << e.what(); \
        }                                                                                          \
    } while (0)

#endif  // CYCLEDUAL_TESTS_EXPECT_HPP
