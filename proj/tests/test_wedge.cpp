#include "doctest.h"
#include "symfock/wedge.hpp"

#include <random>

using namespace symfock;

namespace {

Scalar small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
    return Scalar(Rational(num(rng), den(rng)));
}

DecomposableParams random_params(std::mt19937_64& rng, int rows, int acols, int bcols, int density = 4) {
    std::uniform_int_distribution<int> m(1, rows), a(0, acols - 1), b(1, bcols), pick(0, 1);
    DecomposableParams p;
    for (int i = 0; i < density; ++i) {
        if (pick(rng)) p.entries[{m(rng), a(rng)}] = small_rational(rng);
        else p.entries[{m(rng), -b(rng)}] = small_rational(rng);
    }
    for (auto it = p.entries.begin(); it != p.entries.end();)
        it = it->second.is_zero() ? p.entries.erase(it) : std::next(it);
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

// Oracle: multiply the rows prod_m (sum_l r_ml xi_l) as linear forms in a
// finite exterior algebra, then attach the tail.
WedgeVector exterior_product(const DecomposableParams& p, int E) {
    const int N = p.support();
    std::map<std::vector<int>, Scalar> acc{{{}, Scalar(1)}};
    for (int m = 1; m <= N; ++m) {
        std::map<std::vector<int>, Scalar> next;
        for (const auto& [seq, c] : acc)
            for (int l = -N; l <= std::max(p.max_column(), 0); ++l) {
                const Scalar r = p.r(m, l);
                if (r.is_zero()) continue;
                std::vector<int> s = seq;
                s.push_back(l);
                next[s] += c * r;
            }
        acc = std::move(next);
    }
    WedgeVector v(E);
    for (const auto& [seq, c] : acc) {
        SignedMaya sm = xi_normalize(seq);
        if (sm.sign == 0) continue;
        v.add_term(sm.index, sm.sign > 0 ? c : -c);
    }
    return v;
}

}  // namespace

TEST_SUITE("wedge") {
TEST_CASE("normalizing semi-infinite monomials") {
    SignedMaya a = xi_normalize({-2, -1});
    CHECK(a.sign == -1);
    CHECK(a.index.head.empty());
    CHECK(xi_normalize({0, 0}).sign == 0);
    CHECK(xi_normalize({-3, 1}).sign == 0);  // the tail supplies xi_{-3} again
    SignedMaya b = xi_normalize({1, -1});
    CHECK(b.sign == 1);
    CHECK(b.index == normalize_maya({1, -1}));
    SignedMaya c = xi_normalize({-1, 0});
    CHECK(c.sign == -1);
    CHECK(maya_to_partition(c.index) == Partition{1, 1});
    SignedMaya d = xi_normalize({-3, 2, 0});
    CHECK(d.sign == 1);  // (2, 0, -4) is one cyclic shift of three: even
    CHECK(d.index == normalize_maya({2, 0, -3}));

    // parity agrees with permutations of a normalized head
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        const auto& ps = enumerate_partitions(1 + trial % 6);
        MayaIndex k = partition_to_maya(ps[trial % ps.size()]);
        std::vector<int> head = k.head;
        head.push_back(-static_cast<int>(head.size()) - 1);
        std::vector<int> perm(head.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<int> shuffled;
        for (int i : perm) shuffled.push_back(head[i]);
        int inversions = 0;
        for (size_t i = 0; i < perm.size(); ++i)
            for (size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
        SignedMaya s = xi_normalize(shuffled);
        CHECK(s.index == k);
        CHECK(s.sign == (inversions % 2 ? -1 : 1));
    }
}

TEST_CASE("expansion of decomposable vectors") {
    WedgeVector vac = expand_decomposable(DecomposableParams::vacuum(), 4);
    CHECK(vac == WedgeVector::basis(MayaIndex{}, 4));
    DecomposableParams p;
    p.entries[{1, 0}] = Rational(5, 2);
    WedgeVector v = expand_decomposable(p, 4);
    WedgeVector expect = WedgeVector::basis(MayaIndex{}, 4) + WedgeVector::basis(normalize_maya({0}), 4, Rational(5, 2));
    CHECK(v == expect);

    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 25; ++trial) {
        DecomposableParams q = random_params(rng, 3, 3, 3);
        const int E = max_energy(q);
        CHECK(expand_decomposable(q, E) == exterior_product(q, E));
        CHECK(expand_decomposable(q, E + 2) == expand_decomposable(q, E + 2).truncated(E).truncated(E + 2));
    }
}

TEST_CASE("inner product of decomposable vectors") {
    auto vac = DecomposableParams::vacuum();
    CHECK(wedge_inner(vac, vac) == Scalar(1));
    DecomposableParams p;
    p.entries[{1, 0}] = Rational(2, 3);
    CHECK(wedge_inner(p, p) == Scalar(Rational(13, 9)));
    CHECK(wedge_inner(vac, p) == Scalar(1));

    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        DecomposableParams p1 = random_params(rng, 3, 3, 3), p2 = random_params(rng, 3, 2, 3);
        const int E = std::max(max_energy(p1), max_energy(p2));
        CHECK(wedge_inner(p1, p2) == wedge_pairing(expand_decomposable(p1, E), expand_decomposable(p2, E)));
    }
}

TEST_CASE("scaling and canonical form") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 15; ++trial) {
        DecomposableParams p = random_params(rng, 3, 3, 3);
        Matrix<Scalar> D(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) D(i, j) = small_rational(rng);
        const Scalar d = det(Matrix<Scalar>::identity(3) + D);
        DecomposableParams pd = premultiply(D, p);
        const int E = std::max(max_energy(p), max_energy(pd));
        CHECK(expand_decomposable(pd, E) == expand_decomposable(p, E).scaled(d));

        try {
            CanonicalForm cf = canonical_form(p);
            CHECK(cf.params.max_column() <= p.max_column());
            for (const auto& [ml, c] : cf.params.entries) CHECK(ml.second >= 0);
            const int E2 = std::max(E, max_energy(cf.params));
            CHECK(expand_decomposable(p, E2) == expand_decomposable(cf.params, E2).scaled(cf.det));
        } catch (const SingularMatrix&) {
        }
    }
    DecomposableParams s;
    s.entries[{1, -1}] = -1;  // 1 + B has a zero row
    CHECK_THROWS_AS(canonical_form(s), SingularMatrix);
}

TEST_CASE("GL action") {
    const int E = 5;
    WedgeVector vac = WedgeVector::basis(MayaIndex{}, E);
    CHECK(gl_action(GLElement::identity(), vac, E) == vac);
    GLElement swap{-1, Matrix<Scalar>::from_rows({{0, 1}, {1, 0}})};
    CHECK(gl_action(swap, vac, E) == WedgeVector::basis(normalize_maya({0}), E));

    std::mt19937_64 rng(40);
    for (int trial = 0; trial < 8; ++trial) {
        GLElement H1 = random_gl(rng, -3, 3), H2 = random_gl(rng, -2, 4);
        for (int n = 0; n <= 3; ++n)
            for (const auto& lam : enumerate_partitions(n)) {
                MayaIndex k = partition_to_maya(lam);
                WedgeVector lhs = gl_image(H1 * H2, k, E);
                WedgeVector mid = gl_image(H2, k, 1000);
                CHECK(lhs == gl_action(H1, mid, 1000).truncated(E));
            }
    }
    for (int trial = 0; trial < 8; ++trial) {
        GLElement H = random_gl(rng, -2, 2);
        DecomposableParams p = random_params(rng, 3, 2, 3);
        DecomposableParams q = gl_transform(H, p);
        const int E2 = std::max(max_energy(p), max_energy(q));
        CHECK(gl_action(H, expand_decomposable(p, E2), E2) == expand_decomposable(q, E2));
    }
    GLElement bad{0, Matrix<Scalar>(2, 2)};
    CHECK_THROWS_AS(gl_action(bad, vac, E), SingularMatrix);
}

TEST_CASE("long-monomial determinants") {
    SkewSeries vac = omega_expand(DecomposableParams::vacuum(), 3);
    CHECK(vac.terms.size() == 6);
    CHECK(vac.is_antisymmetric());
    CHECK(skew_to_wedge(vac, 3) == WedgeVector::basis(MayaIndex{}, 3));

    DecomposableParams p;
    p.entries[{1, 0}] = 7;
    CHECK(skew_to_wedge(omega_expand(p, 4), 4) ==
          WedgeVector::basis(MayaIndex{}, 4) + WedgeVector::basis(normalize_maya({0}), 4, 7));

    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 10; ++trial) {
        DecomposableParams q = random_params(rng, 3, 3, 3);
        const int E = 4;
        const int N = std::max(q.support(), E);
        SkewSeries s = omega_expand(q, N), s1 = omega_expand(q, N + 1);
        CHECK(s.is_antisymmetric());
        CHECK(skew_to_wedge(s, E) == expand_decomposable(q, E));
        CHECK(skew_to_wedge(s1, E) == skew_to_wedge(s, E));
    }
    // banded rows xi_{-m} + c_1 xi_{-m+1} + c_2 xi_{-m+2}
    DecomposableParams band;
    band.band = {Scalar(2), Scalar(Rational(-1, 2))};
    for (int N = 4; N <= 6; ++N) CHECK(skew_to_wedge(omega_expand(band, N), 4) == expand_decomposable(band, 4));
    CHECK(expand_decomposable(band, 4).coeff(normalize_maya({0})) == Scalar(2));
}
}
