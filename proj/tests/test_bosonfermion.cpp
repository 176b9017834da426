#include "doctest.h"
#include "symfock/bosonfermion.hpp"

#include <random>

using namespace symfock;

namespace {

Scalar small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
    return Scalar(Rational(num(rng), den(rng)));
}

SymFun random_symfun(std::mt19937_64& rng, int D) {
    SymFun f(Basis::s, D);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int d = 0; d <= D; ++d)
        for (const auto& lam : enumerate_partitions(d))
            if (pick(rng) == 0) f.add_term(lam, small_rational(rng));
    return f;
}

DecomposableParams random_params(std::mt19937_64& rng, int window) {
    std::uniform_int_distribution<int> m(1, window), a(0, window - 1), b(1, window), pick(0, 1);
    DecomposableParams p;
    for (int i = 0; i < 4; ++i) {
        Scalar c = small_rational(rng);
        if (c.is_zero()) continue;
        if (pick(rng)) p.entries[{m(rng), a(rng)}] = c;
        else p.entries[{m(rng), -b(rng)}] = c;
    }
    return p;
}

GLElement random_gl(std::mt19937_64& rng, int lo, int hi) {
    for (;;) {
        GLElement g{lo, Matrix<Scalar>::identity(hi - lo)};
        std::uniform_int_distribution<int> pick(0, 2);
        for (int i = 0; i < hi - lo; ++i)
            for (int j = 0; j < hi - lo; ++j)
                if (pick(rng) == 0) g.h(i, j) = small_rational(rng);
        if (!det(g.h).is_zero()) return g;
    }
}

std::vector<Scalar> random_r(std::mt19937_64& rng, int degree) {
    std::vector<Scalar> r{Scalar(1)};
    for (int i = 0; i < degree; ++i) r.push_back(small_rational(rng));
    return r;
}

}  // namespace

TEST_SUITE("bosonfermion") {
TEST_CASE("R and Q polynomials") {
    CHECK(r_poly(0) == ZPoly::constant(1));
    CHECK(r_poly(-1).is_zero());
    ZPoly r2 = multiply(ZPoly::variable(1), ZPoly::variable(1, Rational(1, 2)), 2) + ZPoly::variable(2);
    CHECK(r_poly(2) == r2);
    // n R_n = sum_j j z_j R_{n-j}
    for (int n = 1; n <= 7; ++n) {
        ZPoly acc;
        for (int j = 1; j <= n; ++j) acc = acc + multiply(ZPoly::variable(j, Rational(j, n)), r_poly(n - j), n);
        CHECK(acc == r_poly(n));
    }
    const int D = 6;
    auto Q = q_poly_table(D);
    CHECK(Q[0][0] == ZPoly::variable(1));
    // (x - y) Q(x, y) = exp{sum z_j (x^j - y^j)} - 1, coefficientwise
    for (int a = 0; a <= D; ++a)
        for (int b = 0; a + b <= D; ++b) {
            ZPoly lhs;
            if (a >= 1 && b < D - (a - 1)) lhs = lhs + Q[a - 1][b];
            if (b >= 1 && a < D - (b - 1)) lhs = lhs - Q[a][b - 1];
            ZPoly rhs = multiply(r_poly(a), negate_variables(r_poly(b)), D);
            if (a == 0 && b == 0) rhs = rhs - ZPoly::constant(1);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("Delta times Schur functions") {
    CHECK(delta_times(SymFun::constant(1, Basis::s, 3), 3) == WedgeVector::basis(MayaIndex{}, 3));
    WedgeVector xi0 = WedgeVector::basis(normalize_maya({0}), 3);
    CHECK(delta_times(SymFun::basis_element(Basis::s, {1}, 3), 3) == xi0);
    CHECK(delta_times(SymFun::basis_element(Basis::p, {1}, 3), 3) == xi0);

    const KerovWeight cl = KerovWeight::classical();
    for (int d1 = 0; d1 <= 6; ++d1)
        for (const auto& a : enumerate_partitions(d1))
            for (int d2 = 0; d2 <= 6; ++d2)
                for (const auto& b : enumerate_partitions(d2)) {
                    SymFun f = SymFun::basis_element(Basis::p, a, 6), g = SymFun::basis_element(Basis::s, b, 6);
                    CHECK(wedge_pairing(delta_times(f, 6), delta_times(g, 6)) == inner_product(f, g, cl));
                }
    std::mt19937_64 rng(3);
    for (int i = 0; i < 10; ++i) {
        SymFun f = random_symfun(rng, 5);
        CHECK(wedge_to_sym(delta_times(f, 5), 5) == f);
    }
}

TEST_CASE("preimages of decomposable vectors") {
    CHECK(pi_vector(DecomposableParams::vacuum(), 4) == SymFun::constant(1, Basis::s, 4));
    DecomposableParams p;
    p.entries[{1, 0}] = Rational(3, 4);
    CHECK(pi_vector(p, 4) == SymFun::constant(1, Basis::s, 4) + SymFun::basis_element(Basis::s, {1}, 4, Rational(3, 4)));

    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        DecomposableParams q = random_params(rng, 3);
        const int D = 6;
        SymFun pi = pi_vector(q, D);
        CHECK(delta_times(pi, D) == expand_decomposable(q, D));
        const int M = pi_window(q, D);
        CHECK(pi_vector_at(q, D, M + 2) == pi);
        if (trial < 8) {
            const int D3 = 2;
            SymFun small = pi_vector(q, D3);
            const int M3 = pi_window(q, D3);
            CHECK(pi_restriction_holds(small, q, M3 + 1));
            CHECK(pi_restriction_holds(small, q, M3 + 2));
        }
    }
    // banded rows: the preimage is the multiplicative vector
    std::vector<Scalar> r{Scalar(1), Scalar(2), Scalar(Rational(-1, 3))};
    DecomposableParams band;
    band.band = {r[1], r[2]};
    CHECK(pi_vector(band, 5) == multiplicative_vector(r, 5));
    CHECK(pi_restriction_holds(pi_vector(band, 2), band, 3));
    // a wrong candidate fails the restriction identity
    SymFun wrong = pi_vector(p, 2) + SymFun::basis_element(Basis::s, {2}, 2);
    CHECK_FALSE(pi_restriction_holds(wrong, p, 3));
}

TEST_CASE("GL action on symmetric functions") {
    const int D = 4;
    SymFun f = SymFun::basis_element(Basis::s, {2, 1}, 3, Rational(2));
    CHECK(glinf_apply(GLElement::identity(), f, 3) == f);
    GLElement swap{-1, Matrix<Scalar>::from_rows({{0, 1}, {1, 0}})};
    CHECK(glinf_apply(swap, SymFun::constant(1, Basis::s, 0), 2) == SymFun::basis_element(Basis::s, {1}, 2));
    GLElement scale{0, Matrix<Scalar>::from_rows({{5}})};
    SymFun img = glinf_apply(scale, SymFun::basis_element(Basis::s, {2, 1}, 3), 3);
    CHECK(img == SymFun::basis_element(Basis::s, {2, 1}, 3));  // Maya (1, -1): slot 0 empty
    CHECK(glinf_apply(scale, SymFun::basis_element(Basis::s, {1, 1}, 3), 3) == SymFun::basis_element(Basis::s, {1, 1}, 3, 5));
    CHECK(glinf_apply(scale, SymFun::basis_element(Basis::s, {1}, 3), 3) == SymFun::basis_element(Basis::s, {1}, 3, 5));
    CHECK(glinf_apply(scale, SymFun::basis_element(Basis::s, {2}, 3), 3) == SymFun::basis_element(Basis::s, {2}, 3));

    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 5; ++trial) {
        GLElement H = random_gl(rng, -2, 2), G = random_gl(rng, -2, 2);
        const int mid = D + gl_energy_shift(G);
        // kernel minors agree with the wedge matrix elements
        const BisymKernel K = glinf_kernel(H, D);
        for (int d = 0; d <= D; ++d)
            for (const auto& lam : enumerate_partitions(d))
                for (int e = 0; e <= D; ++e)
                    for (const auto& mu : enumerate_partitions(e))
                        CHECK(matrix_element_s(K, lam, mu, KerovWeight::classical()) ==
                              gl_matrix_element(H, partition_to_maya(lam), partition_to_maya(mu)));
        // representation property
        for (int d = 0; d <= 3; ++d)
            for (const auto& mu : enumerate_partitions(d)) {
                SymFun s = SymFun::basis_element(Basis::s, mu, d);
                CHECK(glinf_apply(H, glinf_apply(G, s, mid), D) == glinf_apply(H * G, s, D));
            }
        // stabilization of the minors
        const int M = glinf_window(H, D, D);
        CHECK(glinf_minors(H, D, D, M + 1) == glinf_minors(H, D, D, M + 2));
    }
}

TEST_CASE("multiplicative vectors") {
    CHECK(mult_vector_image({Scalar(1)}, 4) == WedgeVector::basis(MayaIndex{}, 4));
    WedgeVector one_plus_x = mult_vector_image({Scalar(1), Scalar(1)}, 1);
    CHECK(one_plus_x == WedgeVector::basis(MayaIndex{}, 1) + WedgeVector::basis(normalize_maya({0}), 1));

    ZetaArray z1 = zeta_coeffs({Scalar(1)}, 4);
    for (const auto& row : z1)
        for (const auto& c : row) CHECK(c.is_zero());
    ZetaArray z = zeta_coeffs({Scalar(1), Scalar(1)}, 5);
    for (size_t b = 0; b < z[0].size(); ++b) CHECK(z[0][b] == Scalar(b % 2 ? -1 : 1));
    for (size_t a = 1; a < z.size(); ++a)
        for (const auto& c : z[a]) CHECK(c.is_zero());
    CHECK_THROWS_AS(zeta_coeffs({Scalar(2)}, 3), std::invalid_argument);

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const std::vector<Scalar> r = random_r(rng, 1 + trial % 3);
        const int E = 6;
        // (x - u) zeta(x, u) = r(x)/r(u) - 1, checked through r(u) (x - u) zeta = r(x) - r(u)
        ZetaArray zz = zeta_coeffs(r, E);
        auto rc = [&](int n) { return n < static_cast<int>(r.size()) ? r[n] : Scalar(0); };
        auto zc = [&](int a, int b) {
            return a >= 0 && b >= 0 && a + b + 1 <= E ? zz[a][b] : Scalar(0);
        };
        for (int a = 0; a <= E - 1; ++a)
            for (int b = 0; a + b <= E - 1; ++b) {
                Scalar lhs(0);
                for (int i = 0; i <= b; ++i) lhs += rc(i) * (zc(a - 1, b - i) - zc(a, b - i - 1));
                Scalar rhs = (b == 0 ? rc(a) : Scalar(0)) - (a == 0 ? rc(b) : Scalar(0));
                CHECK(lhs == rhs);
            }
        WedgeVector band = mult_vector_image(r, E);
        CHECK(zeta_image(r, E) == band);
        CHECK(delta_times(multiplicative_vector(r, E), E) == band);
    }
}

TEST_CASE("inversion formulas") {
    CHECK(bf_inverse(WedgeVector::basis(MayaIndex{}, 3), 3) == SymFun::constant(1, Basis::p, 3));
    CHECK(bf_inverse_q(WedgeVector::basis(MayaIndex{}, 3), 3) == SymFun::constant(1, Basis::p, 3));
    CHECK(bf_inverse(WedgeVector::basis(normalize_maya({0}), 3), 3) == SymFun::basis_element(Basis::p, {1}, 3));

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const int D = 3 + trial % 3;
        SymFun f = random_symfun(rng, D);
        WedgeVector g = delta_times(f, D);
        SymFun a = bf_inverse(g, D), b = bf_inverse_q(g, D);
        CHECK(a == f);
        CHECK(b == f);
    }
}
}
