// Symmetric-group characters chi^mu_lambda = <p_lambda, s_mu>, their
// determinant generating functions and a border-strip recursion.
#pragma once

#include <string>
#include <vector>

#include "symfock/bosonfermion.hpp"

namespace symfock {

long char_value(const Partition& mu, const Partition& lambda);
// Murnaghan-Nakayama recursion on beta-numbers.
long mn_oracle(const Partition& mu, const Partition& lambda);

struct CharacterTable {
    int n = 0;
    std::vector<Partition> partitions;     // enumerate_partitions(n), rows mu and columns lambda
    std::vector<std::vector<long>> value;  // value[mu][lambda]

    std::string csv() const;
};
CharacterTable char_table(int n);

// sum_l chi^mu_l prod_j a_j^{l_j} / l_j! as a polynomial in a (a_j <-> z_j):
// det{R_{m_i + j}(a)} over the rows of mu, with m_i = mu_i - i.
ZPoly genfunc_R(const Partition& mu, int cutoff);
// (-1)^{sum (v_i - i)} det{Q_{u_j, v_i - 1}(a)} from the Frobenius data.
ZPoly genfunc_Q(const Partition& mu, int cutoff);
// chi^mu_lambda read off a generating function: coefficient times prod l_j!.
Rational genfunc_character(const ZPoly& g, const Partition& lambda);

}  // namespace symfock
