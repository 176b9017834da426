// Scalar products on symmetric functions that are diagonal in the
// power-sum basis: <p_m, p_n> = delta_mn * prod_j m_j! omega_j^m_j.
#pragma once

#include <string>
#include <vector>

#include "symfock/matrix.hpp"
#include "symfock/symring.hpp"

namespace symfock {

enum class WeightFamily { classical, jack, hall_littlewood, macdonald, custom };

class KerovWeight {
public:
    static KerovWeight classical();
    static KerovWeight jack(const Rational& alpha);
    static KerovWeight hall_littlewood();
    static KerovWeight macdonald();
    static KerovWeight custom(std::vector<Scalar> omegas);  // omega(1..n)
    // "classical", "jack:3/2", "hl", "macdonald", "custom:1,2,q"
    static KerovWeight parse(const std::string& spec);

    WeightFamily family() const { return family_; }
    bool is_classical() const { return family_ == WeightFamily::classical; }
    Scalar omega(int j) const;
    Matrix<Scalar> omega_matrix(int window) const;  // diag(omega_1..omega_W)
    std::string name() const;  // round-trips through parse

    bool operator==(const KerovWeight& o) const { return name() == o.name(); }

private:
    WeightFamily family_ = WeightFamily::classical;
    Rational alpha_{1};
    std::vector<Scalar> custom_;
};

Scalar gram_p_multiplicities(const Multiplicities& m, const KerovWeight& w);
Scalar gram_p(const Partition& lambda, const KerovWeight& w);

Scalar inner_product(const SymFun& f, const SymFun& g, const KerovWeight& w);

// Gram matrix of the chosen basis of the degree-d component, indexed by
// enumerate_partitions(d).
Matrix<Scalar> gram_matrix(int d, Basis b, const KerovWeight& w);

// The element f with <f, b_mu> = delta(lambda, mu) for all mu of weight |lambda|.
SymFun dual_element(Basis b, const Partition& lambda, const KerovWeight& w, int degree);

}  // namespace symfock
