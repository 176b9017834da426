#include "doctest.h"
#include "symfock/json_io.hpp"

#include <random>

using namespace symfock;

namespace {

Scalar small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 4);
    return Scalar(Rational(num(rng), den(rng)));
}

Matrix<Scalar> random_matrix(std::mt19937_64& rng, int r, int c) {
    Matrix<Scalar> m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = small_rational(rng);
    return m;
}

Matrix<Scalar> random_symmetric(std::mt19937_64& rng, int n) {
    Matrix<Scalar> m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m(i, j) = m(j, i) = small_rational(rng);
    return m;
}

// Reparse after a text round trip so the check also covers serialization.
Json through_text(const Json& j) { return Json::parse(j.dump()); }

std::string error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const JsonFormatError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_SUITE("json_io") {

TEST_CASE("scalars, including rational functions") {
    for (const char* s : {"0", "-7/3", "(1 - q^2)/(1 - t)", "q*t"}) {
        const Scalar x = Scalar::parse(s);
        CHECK(scalar_from_json(through_text(scalar_to_json(x)), "x") == x);
    }
    CHECK(scalar_from_json(Json(5), "x") == Scalar(5));
    CHECK(error_of([] { scalar_from_json(Json::array(), "A[0][1]"); }).find("A[0][1]") != std::string::npos);
}

TEST_CASE("symmetric functions and kernels round trip") {
    std::mt19937_64 rng(11);
    for (Basis b : {Basis::p, Basis::m, Basis::s}) {
        SymFun f(b, 4);
        for (int d = 0; d <= 4; ++d)
            for (const auto& l : enumerate_partitions(d)) f.add_term(l, small_rational(rng));
        CHECK(symfun_from_json(through_text(symfun_to_json(f))) == f);
    }
    const BisymKernel K = identity_kernel(KerovWeight::macdonald(), 3);
    CHECK(kernel_from_json(through_text(kernel_to_json(K))) == K);
}

TEST_CASE("Gauss parameters, relations and GL elements round trip") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 10; ++trial) {
        const int W = 1 + trial % 3;
        GaussParams S = make_gauss(W);
        S.A = random_symmetric(rng, W);
        S.B = random_matrix(rng, W, W);
        S.C = random_symmetric(rng, W);
        for (int i = 0; i < W; ++i) S.alpha[i] = small_rational(rng), S.beta[i] = small_rational(rng);
        S.detSquare = Scalar(Rational(trial + 1, 3));
        S.expArg = small_rational(rng);
        CHECK(gauss_from_json(through_text(gauss_to_json(S))) == S);

        const LinearRelation P = relation_from_S(S);
        CHECK(relation_from_json(through_text(relation_to_json(P))) == P);

        GLElement H{-trial, Matrix<Scalar>::identity(W)};
        H.h(0, W - 1) = small_rational(rng) + Scalar(W == 1 ? 1 : 0);
        if (det(H.h).is_zero()) continue;
        const GLElement H2 = gl_from_json(through_text(gl_to_json(H)));
        CHECK(H2.offset == H.offset);
        CHECK(H2.h == H.h);
    }
}

TEST_CASE("wedge vectors and decomposable parameters round trip") {
    std::mt19937_64 rng(13);
    DecomposableParams p;
    p.entries[{1, 2}] = Scalar(Rational(2, 3));
    p.entries[{2, -4}] = Scalar(-1);
    p.band = {Scalar(1), Scalar(Rational(1, 2))};
    const DecomposableParams p2 = decomposable_from_json(through_text(decomposable_to_json(p)));
    CHECK(p2.entries == p.entries);
    CHECK(p2.band == p.band);

    const WedgeVector v = expand_decomposable(DecomposableParams::from_blocks(random_matrix(rng, 2, 2), random_matrix(rng, 2, 2)), 5);
    CHECK(wedge_from_json(through_text(wedge_to_json(v))) == v);
    // a bare term list takes the caller's cutoff
    const WedgeVector w = wedge_from_json(through_text(wedge_to_json(v)["terms"]), 5);
    CHECK(w == v);
}

TEST_CASE("errors name the offending field") {
    CHECK(error_of([] { gauss_from_json(Json::parse(R"({"B": [[1]]})")); }).find("'A'") != std::string::npos);
    CHECK(error_of([] { gauss_from_json(Json::parse(R"({"A": [[1, 2], [3, 4]]})")); }).find("Gauss") != std::string::npos);
    CHECK(error_of([] { gauss_from_json(Json::parse(R"({"A": [[1, 2], [2]]})")); }).find("A") != std::string::npos);
    CHECK(error_of([] { symfun_from_json(Json::parse(R"({"basis": "z", "degree": 2, "terms": []})")); })
              .find("basis") != std::string::npos);
    CHECK(error_of([] {
              symfun_from_json(Json::parse(R"({"basis": "s", "degree": 2, "terms": [{"partition": [1, 2], "coeff": 1}]})"));
          }).find("terms[0].partition") != std::string::npos);
    CHECK(error_of([] { decomposable_from_json(Json::parse(R"({"entries": [{"row": 0, "col": 1, "value": 1}]})")); })
              .find("entries[0].row") != std::string::npos);
    CHECK(error_of([] { gl_from_json(Json::parse(R"({"offset": 0, "matrix": [[0]]})")); }).find("matrix") !=
          std::string::npos);
}

}  // TEST_SUITE
