#include "doctest.h"
#include "symfock/symring.hpp"

using namespace symfock;

namespace {
SymFun el(Basis b, Partition p, int D = 6) { return SymFun::basis_element(b, p, D); }
}

TEST_SUITE("symring") {
TEST_CASE("multiplication") {
    CHECK(multiply(el(Basis::p, {1}), el(Basis::p, {1})) == el(Basis::p, {1, 1}));
    CHECK(multiply(el(Basis::p, {2}), el(Basis::p, {1})) == el(Basis::p, {2, 1}));
    SymFun ss = multiply(el(Basis::s, {1}), el(Basis::s, {1}));
    CHECK(ss.basis() == Basis::s);
    CHECK(ss == el(Basis::s, {2}) + el(Basis::s, {1, 1}));
    // truncation to the smaller degree
    CHECK(multiply(el(Basis::p, {3}, 3), el(Basis::p, {1}, 5)).is_zero());
}

TEST_CASE("conversions") {
    CHECK(convert(el(Basis::s, {1}), Basis::p) == el(Basis::p, {1}));
    SymFun s2 = convert(el(Basis::s, {2}), Basis::p);
    CHECK(s2.coeff({1, 1}) == Scalar(Rational(1, 2)));
    CHECK(s2.coeff({2}) == Scalar(Rational(1, 2)));
    CHECK(convert(el(Basis::p, {2}), Basis::m) == el(Basis::m, {2}));
    CHECK(convert(el(Basis::p, {1, 1}), Basis::m) == el(Basis::m, {2}) + el(Basis::m, {1, 1}).scaled(2));
    CHECK(convert(el(Basis::s, {2, 1}), Basis::m).coeff({1, 1, 1}) == Scalar(2));
}

TEST_CASE("round trips up to degree 10") {
    const Basis all[] = {Basis::p, Basis::m, Basis::s};
    for (int d = 0; d <= 10; ++d)
        for (Basis a : all)
            for (Basis b : all) {
                CHECK(transition(d, a, b) * transition(d, b, a) == Matrix<Rational>::identity(
                                                                      static_cast<int>(enumerate_partitions(d).size())));
            }
    SymFun f = el(Basis::s, {3, 1}, 8).scaled(Scalar::q()) + el(Basis::m, {2, 2}, 8) + el(Basis::p, {5, 1, 1}, 8);
    CHECK(convert(convert(f, Basis::m), Basis::s) == f);
}

TEST_CASE("power sums expand in Schur functions with integer coefficients") {
    for (int d = 0; d <= 8; ++d) {
        const auto& T = transition(d, Basis::p, Basis::s);
        for (int i = 0; i < T.rows(); ++i)
            for (int j = 0; j < T.cols(); ++j) CHECK(T(i, j).get_den() == 1);
    }
}

TEST_CASE("finite evaluation") {
    FinitePolynomial p2 = evaluate_finite(el(Basis::p, {2}), 2);
    FinitePolynomial want;
    want.nvars = 2;
    want.add({2, 0}, 1);
    want.add({0, 2}, 1);
    CHECK(p2 == want);
    FinitePolynomial e2 = evaluate_finite(el(Basis::m, {1, 1}), 2);
    CHECK(e2.terms.size() == 1);
    CHECK(e2.terms.begin()->first == std::vector<int>{1, 1});
    CHECK(evaluate_finite(el(Basis::s, {2, 1}), 1).terms.empty());
    CHECK(evaluate_finite(el(Basis::s, {2, 1}) + el(Basis::p, {4}), 3).is_symmetric());
}

TEST_CASE("bialternant examples") {
    FinitePolynomial h2 = schur_from_bialternant({2}, 2);
    CHECK(h2.str() == "x1^2 + x1*x2 + x2^2");
    CHECK(schur_from_bialternant({1}, 2).str() == "x1 + x2");
    CHECK(schur_from_bialternant({1, 1}, 2).str() == "x1*x2");
    CHECK_THROWS(schur_from_bialternant({1, 1, 1}, 2));
}

TEST_CASE("bialternant agrees with the Schur table through degree 8") {
    for (int d = 0; d <= 8; ++d)
        for (const auto& lam : enumerate_partitions(d)) {
            const int N = std::max(d, 1);
            CHECK(evaluate_finite(el(Basis::s, lam, 8), N) == schur_from_bialternant(lam, N));
        }
}
}
