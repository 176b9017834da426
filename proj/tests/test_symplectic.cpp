#include "doctest.h"
#include "symfock/symplectic.hpp"

#include <random>

using namespace symfock;

namespace {

Scalar small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-3, 3), den(1, 4);
    return Scalar(Rational(num(rng), den(rng)));
}

Matrix<Scalar> random_matrix(std::mt19937_64& rng, int r, int c) {
    Matrix<Scalar> m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = small_rational(rng);
    return m;
}

Matrix<Scalar> random_symmetric(std::mt19937_64& rng, int W) {
    Matrix<Scalar> m(W, W);
    for (int i = 0; i < W; ++i)
        for (int j = i; j < W; ++j) m(i, j) = m(j, i) = small_rational(rng);
    return m;
}

GaussParams random_blocks(std::mt19937_64& rng, int W) {
    GaussParams S = make_gauss(W);
    S.A = random_symmetric(rng, W);
    S.B = random_matrix(rng, W, W);
    S.C = random_symmetric(rng, W);
    return S;
}

// Brute-force product: all pairs of spanning vectors whose middle parts agree,
// found by solving for each P-vector a matching Q-combination.
bool in_product(const LinearRelation& Q, const LinearRelation& P, const std::vector<Scalar>& vy) {
    // v (+) y in QP iff the system has a solution; check via the defining
    // equations directly with unknown middle vector w.
    const int nv = P.dim_v(), nw = P.dim_w(), ny = Q.dim_w();
    // unknowns: coefficients x (rows of P), z (rows of Q)
    const int a = P.dim(), b = Q.dim();
    Matrix<Scalar> M(nv + nw + ny, a + b + 1);
    for (int i = 0; i < a; ++i) {
        for (int k = 0; k < nv; ++k) M(k, i) = P.basis()(i, k);
        for (int k = 0; k < nw; ++k) M(nv + k, i) = P.basis()(i, nv + k);
    }
    for (int j = 0; j < b; ++j) {
        for (int k = 0; k < nw; ++k) M(nv + k, a + j) = -Q.basis()(j, k);
        for (int k = 0; k < ny; ++k) M(nv + nw + k, a + j) = Q.basis()(j, nw + k);
    }
    for (int k = 0; k < nv; ++k) M(k, a + b) = vy[k];
    for (int k = 0; k < ny; ++k) M(nv + nw + k, a + b) = vy[nv + k];
    Matrix<Scalar> coeffs = submatrix(M, 0, 0, M.rows(), a + b);
    return rank(coeffs) == rank(M);
}

}  // namespace

TEST_SUITE("symplectic") {
TEST_CASE("graphs compose like operators") {
    std::mt19937_64 rng(4);
    auto I = LinearRelation::graph(Matrix<Scalar>::identity(3));
    CHECK(compose_relations(I, I) == I);
    for (int trial = 0; trial < 10; ++trial) {
        auto M1 = random_matrix(rng, 3, 3), M2 = random_matrix(rng, 3, 3);
        CHECK(compose_relations(LinearRelation::graph(M2), LinearRelation::graph(M1)) ==
              LinearRelation::graph(M2 * M1));
    }
    auto M = random_matrix(rng, 2, 3);
    CHECK(compose_relations(LinearRelation::graph(random_matrix(rng, 4, 2)), LinearRelation::graph(M)).dim_w() == 4);
    CHECK_THROWS_AS(compose_relations(LinearRelation::graph(M), LinearRelation::graph(M)), std::invalid_argument);
}

TEST_CASE("product against brute force membership") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        LinearRelation P(2, 3, random_matrix(rng, 2, 5)), Q(3, 2, random_matrix(rng, 3, 5));
        if (trial == 0) P = LinearRelation(2, 3, block2x2(Matrix<Scalar>::identity(2), Matrix<Scalar>(2, 3),
                                                          Matrix<Scalar>(0, 2), Matrix<Scalar>(0, 3)));
        LinearRelation QP = compose_relations(Q, P);
        for (int i = 0; i < QP.dim(); ++i) {
            std::vector<Scalar> x(4);
            for (int k = 0; k < 4; ++k) x[k] = QP.basis()(i, k);
            CHECK(in_product(Q, P, x));
        }
        // and nothing else: random vectors are members exactly when the brute force says so
        for (int s = 0; s < 20; ++s) {
            std::vector<Scalar> x(4);
            Matrix<Scalar> r = random_matrix(rng, 1, 4);
            if (s % 2 && QP.dim()) {
                for (int k = 0; k < 4; ++k) x[k] = QP.basis()(0, k) * r(0, 0);
                x[0] += r(0, 1) * (QP.dim() > 1 ? QP.basis()(1, 0) : Scalar(0));
                for (int k = 1; k < 4; ++k)
                    if (QP.dim() > 1) x[k] += r(0, 1) * QP.basis()(1, k);
            } else {
                for (int k = 0; k < 4; ++k) x[k] = r(0, k);
            }
            CHECK(QP.contains(x) == in_product(Q, P, x));
        }
    }
}

TEST_CASE("kernel and indefiniteness") {
    std::mt19937_64 rng(8);
    Matrix<Scalar> M = Matrix<Scalar>::from_rows({{1, 2}, {3, 4}});
    auto ki = kernel_indef(LinearRelation::graph(M));
    CHECK(ki.ker.rows() == 0);
    CHECK(ki.indef.rows() == 0);
    LinearRelation full(2, 2, Matrix<Scalar>::identity(4));
    ki = kernel_indef(full);
    CHECK(ki.ker.rows() == 2);
    CHECK(ki.indef.rows() == 2);
    for (int trial = 0; trial < 10; ++trial) {
        LinearRelation P(2, 2, random_matrix(rng, 3, 4));
        ki = kernel_indef(P);
        // P / (Ker + Indef) embeds into V / Ker and W / Indef
        const int dim_ker = ki.ker.rows(), dim_indef = ki.indef.rows();
        CHECK(P.dim() - dim_ker - dim_indef <= 2 - dim_ker);
        // dim P = dim Ker + dim(image in W) and the image contains Indef
        Matrix<Scalar> wpart = submatrix(P.basis(), 0, 2, P.dim(), 2);
        CHECK(P.dim() == dim_ker + rank(wpart));
        CHECK(rank(wpart) >= dim_indef);
    }
}

TEST_CASE("relations of Gauss blocks") {
    auto zero = Matrix<Scalar>(2, 2), one = Matrix<Scalar>::identity(2);
    CHECK(relation_from_S(zero, one, zero) == LinearRelation::graph(Matrix<Scalar>::identity(4)));
    LinearRelation P0 = relation_from_S(zero, zero, zero);
    CHECK(P0.dim() == 4);
    // columns (w+, w-, v+, v-)
    CHECK(P0.contains({0, 0, 0, 0, 0, 0, 1, 0}));  // v- free
    CHECK(P0.contains({1, 0, 0, 0, 0, 0, 0, 0}));  // w+ free
    CHECK_FALSE(P0.contains({0, 0, 0, 0, 1, 0, 0, 0}));
    CHECK_FALSE(P0.contains({0, 0, 1, 0, 0, 0, 0, 0}));

    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 10; ++trial) {
        GaussParams S = random_blocks(rng, 2);
        GeometryReport rep = check_geometry(relation_from_S(S));
        CHECK(rep.lagrangian);
        CHECK(rep.hilbert_schmidt);
        Matrix<Scalar> A = random_matrix(rng, 2, 2);
        A(0, 1) = A(1, 0) + 1;
        CHECK_FALSE(check_geometry(relation_from_S(A, S.B, S.C)).lagrangian);
    }
    // distinct symmetric blocks give distinct relations
    for (int trial = 0; trial < 10; ++trial) {
        GaussParams S = random_blocks(rng, 3), T = random_blocks(rng, 3);
        CHECK((relation_from_S(S) == relation_from_S(T)) == (S.A == T.A && S.B == T.B && S.C == T.C));
    }
}

TEST_CASE("inertia") {
    CHECK(inertia(Matrix<Rational>::from_rows({{0, 1}, {1, 0}})) == Inertia{1, 0, 1});
    CHECK(inertia(Matrix<Rational>::from_rows({{1, 0}, {0, 0}})) == Inertia{1, 1, 0});
    CHECK(inertia(Matrix<Rational>::from_rows({{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}})) == Inertia{0, 0, 3});
    CHECK(inertia(Matrix<Rational>::from_rows({{0, 0, 1}, {0, 0, 0}, {1, 0, 0}})) == Inertia{1, 1, 1});
}

TEST_CASE("contraction and definiteness conditions") {
    auto zero = Matrix<Scalar>(1, 1);
    auto m = [](Rational x) { return Matrix<Scalar>::from_rows({{Scalar(x)}}); };
    // identity graph: the form vanishes on P
    GeometryReport id = check_geometry(relation_from_S(zero, m(1), zero));
    CHECK(id.form_on_p == std::optional<Inertia>(Inertia{0, 2, 0}));
    CHECK(*id.contractive);
    // ||S|| < 1
    GeometryReport small = check_geometry(relation_from_S(m(Rational(1, 3)), m(Rational(1, 4)), m(Rational(1, 5))));
    CHECK(*small.contractive);
    CHECK(small.form_on_p->positive == 2);
    // ||S|| > 1
    GeometryReport big = check_geometry(relation_from_S(m(2), m(0), m(0)));
    CHECK_FALSE(*big.contractive);
    // with B = 0, Ker is governed by C and Indef by A
    GeometryReport k = check_geometry(relation_from_S(m(Rational(1, 2)), m(0), m(3)));
    CHECK(k.form_on_ker->negative == 1);
    CHECK_FALSE(*k.ker_definite);
    CHECK(*k.indef_definite);
    GeometryReport k2 = check_geometry(relation_from_S(m(2), m(0), m(Rational(1, 2))));
    CHECK(*k2.ker_definite);
    CHECK_FALSE(*k2.indef_definite);
    // parametric data: no signature claims
    GeometryReport f = check_geometry(relation_from_S(Matrix<Scalar>::from_rows({{Scalar::q()}}), m(1), zero));
    CHECK(f.lagrangian);
    CHECK_FALSE(f.contractive.has_value());
}

TEST_CASE("relations compose like Gauss parameters") {
    std::mt19937_64 rng(31);
    int done = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const int W = 1 + trial % 3;
        GaussParams S1 = random_blocks(rng, W), S2 = random_blocks(rng, W);
        GaussParams S3;
        try {
            S3 = gauss_compose_fock(S1, S2);
        } catch (const SingularMatrix&) {
            continue;
        }
        CHECK(compose_relations(relation_from_S(S1), relation_from_S(S2)) == relation_from_S(S3));
        ++done;
    }
    CHECK(done >= 15);
}

TEST_CASE("associativity") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 10; ++trial) {
        LinearRelation P(2, 3, random_matrix(rng, 1 + trial % 4, 5)), Q(3, 2, random_matrix(rng, 2, 5)),
            R(2, 2, random_matrix(rng, 1 + trial % 3, 4));
        CHECK(compose_relations(R, compose_relations(Q, P)) == compose_relations(compose_relations(R, Q), P));
    }
}
}
