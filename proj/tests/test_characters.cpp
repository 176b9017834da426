#include "doctest.h"
#include "symfock/characters.hpp"

#include "symfock/inner.hpp"

using namespace symfock;

TEST_SUITE("characters") {
TEST_CASE("examples") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& lam : enumerate_partitions(n)) CHECK(char_value({n}, lam) == 1);
    CHECK(char_value({1, 1}, {2}) == -1);
    CHECK(char_value({2, 1}, {1, 1, 1}) == 2);
    CHECK(mn_oracle({1, 1}, {1, 1}) == 1);
    CHECK(mn_oracle({3}, {3}) == 1);
    CHECK(mn_oracle({2, 1}, {3}) == -1);
    CHECK_THROWS_AS(char_value({2}, {1}), std::invalid_argument);
    CHECK(char_table(1).value == std::vector<std::vector<long>>{{1}});
    CHECK(char_table(2).value == std::vector<std::vector<long>>{{1, 1}, {-1, 1}});
}

TEST_CASE("table agrees with the border-strip recursion") {
    for (int n = 1; n <= 7; ++n) {
        CharacterTable t = char_table(n);
        for (size_t i = 0; i < t.partitions.size(); ++i)
            for (size_t j = 0; j < t.partitions.size(); ++j) {
                CHECK(t.value[i][j] == mn_oracle(t.partitions[i], t.partitions[j]));
                if (n <= 5) CHECK(t.value[i][j] == char_value(t.partitions[i], t.partitions[j]));
            }
        // column orthogonality
        for (size_t a = 0; a < t.partitions.size(); ++a)
            for (size_t b = 0; b < t.partitions.size(); ++b) {
                long s = 0;
                for (size_t mu = 0; mu < t.partitions.size(); ++mu) s += t.value[mu][a] * t.value[mu][b];
                Scalar expect = a == b ? gram_p(t.partitions[a], KerovWeight::classical()) : Scalar(0);
                CHECK(Scalar(s) == expect);
            }
    }
    CharacterTable t4 = char_table(4);
    CHECK(t4.partitions.size() == 5);
    CHECK(t4.csv().find("\"(4)\",1,1,1,1,1") != std::string::npos);
}

TEST_CASE("generating functions") {
    CHECK(genfunc_R({1}, 3) == ZPoly::variable(1));
    CHECK(genfunc_Q({1}, 3) == ZPoly::variable(1));
    for (int n = 1; n <= 6; ++n) {
        for (const auto& mu : enumerate_partitions(n)) {
            ZPoly R = genfunc_R(mu, n), Q = genfunc_Q(mu, n);
            CHECK(R == Q);
            for (const auto& lam : enumerate_partitions(n))
                CHECK(genfunc_character(R, lam) == Rational(mn_oracle(mu, lam)));
            for (const auto& [mono, c] : R.terms) CHECK(weight(mono) == n);
        }
    }
    // exp{sum a_j p_j} in the Schur basis carries the characters
    for (int n = 0; n <= 6; ++n)
        for (const auto& lam : enumerate_partitions(n)) {
            SymFun s = convert(SymFun::basis_element(Basis::p, lam, n), Basis::s);
            for (const auto& mu : enumerate_partitions(n))
                if (n > 0) CHECK(s.coeff(mu) == Scalar(mn_oracle(mu, lam)));
        }
}
}
