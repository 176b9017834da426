// Exact checks of the Gauss composition and pairing laws against truncated
// expansions. Composition is not degree-closed once both inner quadratic
// blocks are nonzero, so the inner degree is tracked by a grading variable s
// and compared coefficient by coefficient.
#pragma once

#include <string>

#include "symfock/gauss.hpp"

namespace symfock {

struct CheckResult {
    bool ok = true;
    std::string detail;
};

// Compares K[S1] o K[S2] restricted to inner degree <= D, outer degrees <= D,
// with the kernel of gauss_compose(S1, S2) times its normalizing constant.
CheckResult check_gauss_compose(const GaussParams& S1, const GaussParams& S2, const KerovWeight& w, int D);

// Compares sum_{d<=D} s^d <Psi_d[A|alpha], Psi_d[B|beta]> with psi_inner.
CheckResult check_psi_inner(const Matrix<Scalar>& A, const std::vector<Scalar>& alpha, const Matrix<Scalar>& B,
                            const std::vector<Scalar>& beta, const KerovWeight& w, int D);

}  // namespace symfock
