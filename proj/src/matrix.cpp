#include "qybe/matrix.hpp"

namespace qybe {

std::vector<std::vector<QScalar>> kernel_basis(const QMatrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    QMatrix a = m;
    std::vector<long long> pivot_col_of_row(nr, -1);
    std::vector<bool> col_is_pivot(nc, false);
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        // pivot = first nonzero entry in this column at/below `row`
        std::size_t pr = row;
        while (pr < nr && a(pr, col).is_zero()) ++pr;
        if (pr == nr) continue;
        if (pr != row)
            for (std::size_t j = 0; j < nc; ++j) std::swap(a(row, j), a(pr, j));
        QScalar inv = a(row, col).inverse();
        for (std::size_t j = col; j < nc; ++j) a(row, j) = inv * a(row, j);
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == row || a(i, col).is_zero()) continue;
            QScalar f = a(i, col);
            for (std::size_t j = col; j < nc; ++j) a(i, j) = a(i, j) - f * a(row, j);
        }
        pivot_col_of_row[row] = static_cast<long long>(col);
        col_is_pivot[col] = true;
        ++row;
    }
    std::vector<std::vector<QScalar>> basis;
    for (std::size_t fc = 0; fc < nc; ++fc) {
        if (col_is_pivot[fc]) continue;
        std::vector<QScalar> v(nc);
        v[fc] = QScalar::one();
        for (std::size_t r = 0; r < row; ++r) {
            long long pc = pivot_col_of_row[r];
            if (pc >= 0) v[static_cast<std::size_t>(pc)] = -a(r, fc);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Complex> solve_complex(CMatrix a, std::vector<Complex> b) {
    const std::size_t n = a.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = col;
        Real bestmag = abs(a(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            Real mag = abs(a(r, col));
            if (mag > bestmag) {
                best = r;
                bestmag = mag;
            }
        }
        if (bestmag == 0) throw Error("singular system");
        if (best != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(best, j));
            std::swap(b[col], b[best]);
        }
        Complex inv = Complex(1) / a(col, col);
        for (std::size_t j = col; j < n; ++j) a(col, j) *= inv;
        b[col] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            Complex f = a(r, col);
            if (f == Complex(0)) continue;
            for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
            b[r] -= f * b[col];
        }
    }
    return b;
}

}  // namespace qybe
