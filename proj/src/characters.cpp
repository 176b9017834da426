#include "symfock/characters.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "symfock/inner.hpp"

namespace symfock {

namespace {

void check_same_weight(const Partition& mu, const Partition& lambda) {
    validate_partition(mu);
    validate_partition(lambda);
    if (weight(mu) != weight(lambda)) throw std::invalid_argument("character needs |mu| = |lambda|");
}

long to_long(const Scalar& s) {
    const Rational& r = s.rational();
    if (r.get_den() != 1 || !r.get_num().fits_slong_p()) throw std::runtime_error("character is not a small integer");
    return r.get_num().get_si();
}

// Beta-numbers mu_i + (len - i); removing a border strip of length r moves one
// bead from b to b - r, with sign (-1)^(beads strictly between).
long mn_beads(std::vector<int>& beads, const Partition& lambda, size_t pos) {
    if (pos == lambda.size()) return 1;
    const int r = lambda[pos];
    long total = 0;
    for (size_t i = 0; i < beads.size(); ++i) {
        const int b = beads[i], t = b - r;
        if (t < 0 || std::find(beads.begin(), beads.end(), t) != beads.end()) continue;
        int between = 0;
        for (int x : beads) between += x > t && x < b;
        beads[i] = t;
        const long sub = mn_beads(beads, lambda, pos + 1);
        beads[i] = b;
        total += between % 2 ? -sub : sub;
    }
    return total;
}

}  // namespace

long char_value(const Partition& mu, const Partition& lambda) {
    check_same_weight(mu, lambda);
    const int n = weight(mu);
    return to_long(inner_product(SymFun::basis_element(Basis::p, lambda, n),
                                 SymFun::basis_element(Basis::s, mu, n), KerovWeight::classical()));
}

long mn_oracle(const Partition& mu, const Partition& lambda) {
    check_same_weight(mu, lambda);
    std::vector<int> beads;
    const int len = static_cast<int>(mu.size());
    for (int i = 0; i < len; ++i) beads.push_back(mu[i] + len - 1 - i);
    return mn_beads(beads, lambda, 0);
}

std::string CharacterTable::csv() const {
    std::ostringstream os;
    os << "mu\\lambda";
    for (const auto& l : partitions) os << ",\"" << partition_str(l) << "\"";
    os << "\n";
    for (size_t i = 0; i < partitions.size(); ++i) {
        os << "\"" << partition_str(partitions[i]) << "\"";
        for (long v : value[i]) os << "," << v;
        os << "\n";
    }
    return os.str();
}

CharacterTable char_table(int n) {
    if (n < 0) throw std::invalid_argument("negative size");
    CharacterTable t;
    t.n = n;
    t.partitions = enumerate_partitions(n);
    const size_t P = t.partitions.size();
    // one conversion p -> s per degree gives the whole table
    const Matrix<Rational>& T = transition(n, Basis::p, Basis::s);
    t.value.assign(P, std::vector<long>(P));
    for (size_t mu = 0; mu < P; ++mu)
        for (size_t lam = 0; lam < P; ++lam) {
            const Rational& v = T(static_cast<int>(lam), static_cast<int>(mu));
            if (v.get_den() != 1) throw std::runtime_error("non-integral character value");
            t.value[mu][lam] = v.get_num().get_si();
        }
    return t;
}

ZPoly genfunc_R(const Partition& mu, int cutoff) {
    validate_partition(mu);
    const int h = static_cast<int>(mu.size());
    std::vector<ZPoly> R;
    for (int n = 0; n <= cutoff; ++n) R.push_back(r_poly(n));
    std::vector<std::vector<ZPoly>> M(h, std::vector<ZPoly>(h));
    for (int i = 1; i <= h; ++i)
        for (int j = 1; j <= h; ++j) {
            const int n = mu[i - 1] - i + j;
            if (n >= 0 && n <= cutoff) M[i - 1][j - 1] = R[n];
        }
    return zpoly_det(M, cutoff);
}

ZPoly genfunc_Q(const Partition& mu, int cutoff) {
    validate_partition(mu);
    FrobeniusCoords f = maya_to_frobenius(partition_to_maya(mu));
    std::vector<int> u = f.u, v = f.v;
    std::sort(u.begin(), u.end(), std::greater<int>());
    std::sort(v.begin(), v.end());
    const int n = static_cast<int>(u.size());
    const auto Q = q_poly_table(cutoff);
    std::vector<std::vector<ZPoly>> M(n, std::vector<ZPoly>(n));
    int parity = 0;
    for (int i = 0; i < n; ++i) {
        parity += v[i] - (i + 1);
        for (int j = 0; j < n; ++j)
            if (v[i] + u[j] <= cutoff) M[i][j] = Q[u[j]][v[i] - 1];
    }
    ZPoly d = zpoly_det(M, cutoff);
    return parity % 2 ? ZPoly() - d : d;
}

Rational genfunc_character(const ZPoly& g, const Partition& lambda) {
    Rational c = g.coeff(lambda);
    for (int mult : partition_to_multiplicities(lambda))
        if (mult) c *= factorial(mult);
    return c;
}

}  // namespace symfock
