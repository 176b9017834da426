#include "doctest.h"
#include "symfock/kernelop.hpp"

#include <random>

using namespace symfock;

namespace {

std::vector<KerovWeight> all_weights() {
    return {KerovWeight::classical(), KerovWeight::jack(Rational(2)), KerovWeight::hall_littlewood(),
            KerovWeight::macdonald()};
}

BisymKernel random_kernel(std::mt19937_64& rng, int dx, int dy, int density = 3) {
    std::uniform_int_distribution<int> c(-3, 3), deg_x(0, dx), deg_y(0, dy);
    BisymKernel K(dx, dy);
    for (int i = 0; i < density * 3; ++i) {
        const auto& px = enumerate_partitions(deg_x(rng));
        const auto& py = enumerate_partitions(deg_y(rng));
        std::uniform_int_distribution<size_t> ix(0, px.size() - 1), iy(0, py.size() - 1);
        K.add_term(px[ix(rng)], py[iy(rng)], Scalar(Rational(c(rng), 1 + (c(rng) + 3) % 3)));
    }
    return K;
}

SymFun random_symfun(std::mt19937_64& rng, int D) {
    std::uniform_int_distribution<int> c(-4, 4), deg(0, D);
    SymFun f(Basis::s, D);
    for (int i = 0; i < 4; ++i) {
        const auto& ps = enumerate_partitions(deg(rng));
        std::uniform_int_distribution<size_t> ix(0, ps.size() - 1);
        f.add_term(ps[ix(rng)], Scalar(c(rng)));
    }
    return f;
}

// Oracle: expand K in m (x) m and pair the y-side with f directly.
SymFun apply_via_monomials(const BisymKernel& K, const SymFun& f, const KerovWeight& w) {
    SymFun out(Basis::m, K.dx());
    for (const auto& [mn, c] : K.expansion(Basis::m, Basis::m)) {
        Scalar pair = inner_product(SymFun::basis_element(Basis::m, mn.second, K.dy()), f, w);
        out.add_term(mn.first, c * pair);
    }
    return out;
}

}  // namespace

TEST_SUITE("kernelop") {
TEST_CASE("identity kernel acts as identity") {
    auto c = KerovWeight::classical();
    SymFun s21 = SymFun::basis_element(Basis::s, {2, 1}, 3);
    CHECK(apply(identity_kernel(c, 3), s21, c) == s21);
    CHECK(apply(BisymKernel(3, 3), s21, c).is_zero());
    BisymKernel r1 = BisymKernel::rank_one(SymFun::basis_element(Basis::s, {1}, 3), SymFun::basis_element(Basis::s, {1}, 3));
    CHECK(apply(r1, SymFun::basis_element(Basis::s, {1}, 3), c) == SymFun::basis_element(Basis::s, {1}, 3));
    CHECK(identity_kernel(c, 0).terms().size() == 1);
    CHECK(identity_kernel(c, 1).coeff({1}, {1}) == Scalar(1));
    CHECK(identity_kernel(KerovWeight::macdonald(), 1).coeff({1}, {1}) == (1 - Scalar::t()) / (1 - Scalar::q()));
    CHECK_THROWS(apply(identity_kernel(c, 2), s21, c));
}

TEST_CASE("matrix elements") {
    auto c = KerovWeight::classical();
    BisymKernel K(2, 2);
    K.add_term({1}, {1}, 1);
    K.add_term({2}, {2}, 1);
    CHECK(matrix_element_p(K, {1}, {1}, c) == Scalar(1));
    CHECK(matrix_element_p(K, {2}, {2}, c) == Scalar(4));
    CHECK(matrix_element_p(K, {1, 1}, {2}, c) == Scalar(0));
    BisymKernel I = identity_kernel(c, 3);
    CHECK(matrix_element_s(I, {1}, {1}, c) == Scalar(1));
    CHECK(matrix_element_s(I, {2}, {1, 1}, c) == Scalar(0));
    BisymKernel r = BisymKernel::rank_one(SymFun::basis_element(Basis::s, {2}, 3), SymFun::basis_element(Basis::s, {3}, 3));
    CHECK(matrix_element_s(r, {2}, {3}, c) == Scalar(1));
    CHECK_THROWS(matrix_element_s(r, {2}, {3}, KerovWeight::macdonald()));
}

TEST_CASE("composition of rank-one Schur kernels") {
    auto c = KerovWeight::classical();
    auto s = [](Partition p) { return SymFun::basis_element(Basis::s, p, 4); };
    BisymKernel a = BisymKernel::rank_one(s({2, 1}), s({3}));
    BisymKernel b = BisymKernel::rank_one(s({3}), s({1, 1}));
    CHECK(compose(a, b, c) == BisymKernel::rank_one(s({2, 1}), s({1, 1})));
    CHECK(compose(a, BisymKernel(4, 4), c).is_zero());
    CHECK(compose(identity_kernel(c, 4), identity_kernel(c, 4), c) == identity_kernel(c, 4));
    CHECK_THROWS(compose(BisymKernel(2, 3), BisymKernel(2, 2), c));
}

TEST_CASE("bijection between kernels and matrix elements") {
    std::mt19937_64 rng(11);
    for (auto w : all_weights()) {
        BisymKernel K = random_kernel(rng, 6, 6, 5);
        std::map<PartitionPair, Scalar> el;
        for (const auto& [mn, c] : K.terms()) el[mn] = matrix_element_p(K, mn.first, mn.second, w);
        CHECK(kernel_from_matrix_elements(el, 6, 6, w) == K);
    }
}

TEST_CASE("homomorphism, identity law and basis independence") {
    std::mt19937_64 rng(5);
    int n = 0;
    for (int trial = 0; trial < 25; ++trial) {
        auto w = all_weights()[trial % 4];
        const int D = 3 + trial % 3;
        BisymKernel K = random_kernel(rng, D, D), L = random_kernel(rng, D, D);
        SymFun f = random_symfun(rng, D);
        CHECK(apply(compose(K, L, w), f, w) == apply(K, apply(L, f, w), w));
        CHECK(compose(identity_kernel(w, D), K, w) == K);
        CHECK(compose(K, identity_kernel(w, D), w) == K);
        CHECK(apply(K, f, w) == apply_via_monomials(K, f, w));
        ++n;
    }
    CHECK(n == 25);
}

TEST_CASE("kernel from operator") {
    std::mt19937_64 rng(3);
    for (auto w : all_weights()) {
        CHECK(kernel_from_operator([](const SymFun& f) { return f; }, w, 4) == identity_kernel(w, 4));
        CHECK(kernel_from_operator([](const SymFun& f) { return SymFun(f.basis(), f.degree()); }, w, 4).is_zero());
        BisymKernel K = random_kernel(rng, 4, 4);
        CHECK(kernel_from_operator([&](const SymFun& f) { return apply(K, f, w); }, w, 4) == K);
    }
}

TEST_CASE("closed product forms of the identity kernel") {
    for (auto w : all_weights()) {
        const int D = 4;
        FinitePolynomial lhs = evaluate_kernel_finite(identity_kernel(w, D), 2, 2);
        auto c = product_form_series(w, D);
        // prod over the four products x_k y_l, truncated at x-degree D
        FinitePolynomial rhs;
        rhs.nvars = 4;
        rhs.add({0, 0, 0, 0}, 1);
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l) {
                FinitePolynomial next;
                next.nvars = 4;
                for (const auto& [e, v] : rhs.terms)
                    for (int r = 0; e[0] + e[1] + r <= D; ++r) {
                        auto f = e;
                        f[k] += r;
                        f[2 + l] += r;
                        next.add(f, v * c[r]);
                    }
                rhs = next;
            }
        CHECK(lhs == rhs);
    }
}
}
