#pragma once

#include "qybe/rep.hpp"

namespace qybe {

// xi_k = (-1)^k q^{rho(2s-k) - 2 rho(s)}
QScalar xi(Spin s, int k);
// theta_n = (-1)^n q^{rho(3s-n) - 3 rho(s)}
QScalar theta(Spin s, int n);

QMatrix permutation_matrix(std::size_t d);

// pi_s^{ot 2}(R^{sign}), series truncated at n = 2s
QMatrix universal_r(Spin s, int sign);

struct BraidOperator {
    Spin spin;
    QMatrix matrix;                                 // on V_s^{ot 2}
    std::vector<std::pair<int, QScalar>> spectral;  // (k, r_k)
};

struct ProjectorFamily {
    Spin spin;
    std::vector<QMatrix> p;  // p[k] = P^{2s-k}, k = 0..2s
};

BraidOperator braid(Spin s);
BraidOperator braid_inverse(Spin s);
ProjectorFamily projectors(Spin s);

// process-wide caches (spins are tiny; all outputs immutable)
const ProjectorFamily& projectors_cached(Spin s);
const BraidOperator& braid_cached(Spin s);
const Rep& rep_cached(Spin s);
const HWBasis& wn_basis_cached(Spin s, int n, int pair);

// rebuild an operator from spectral coefficients: sum_k r_k P^{2s-k}
QMatrix from_spectral(Spin s, const std::vector<QScalar>& r);

// numeric-mode construction at arbitrary q (works above the exact spin ceiling)
RMatrix braid_numeric(Spin s, const Real& q, int sign = +1);
RMatrix permutation_numeric(std::size_t d);

}  // namespace qybe
