#pragma once

#include "qybe/rmatrix.hpp"

#include <array>

namespace qybe {

struct SixJArgs {
    std::array<Half, 6> j;  // {j1 j2 j3; j4 j5 j6}
};

// triangle + integer-perimeter admissibility of a coupled triad
bool triad_ok(Half a, Half b, Half c);

// q-deformed 6-j symbol, single-sum q-Racah form; 0 on violated triads.
// Triads: (j1,j2,j3), (j1,j5,j6), (j4,j2,j6), (j4,j5,j3). Memoized.
QScalar qsixj(const SixJArgs& args);
inline QScalar qsixj(Half j1, Half j2, Half j3, Half j4, Half j5, Half j6) {
    return qsixj(SixJArgs{{j1, j2, j3, j4, j5, j6}});
}

// the paper's 2x3 array {a b c; d e f} (columns pair (a,b),(c,d),(e,f))
inline QScalar frw(Half a, Half b, Half c, Half d, Half e, Half f) {
    return qsixj(a, c, e, b, d, f);
}

struct AMatrix {
    Spin spin;
    int n = 0;
    std::vector<int> ks;
    QMatrix entries;
};

// A^{(s,n)} from the 6-j formula
AMatrix a_matrix(Spin s, int n);
// A^{(s,n)} as the Gram overlap of the 12- and 23-coupled W_n bases
AMatrix a_matrix_from_basis(Spin s, int n);
const AMatrix& a_matrix_cached(Spin s, int n);

// LHS - RHS of the Racah identity; rho_sign selects rho(t) = +-t(t+1).
// pre: racah_admissible(...)
QScalar racah_identity_check(Half r1, Half r2, Half r3, Half r4, Half l, Half lp, int rho_sign = +1);
bool racah_admissible(Half r1, Half r2, Half r3, Half r4, Half l, Half lp);

// entrywise Lemma-1 residual at entry (k,k') of A^{(s,n)}
QScalar entrywise_lemma1(Spin s, int n, int k, int kp);

}  // namespace qybe
