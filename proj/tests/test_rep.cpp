#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qybe/rep.hpp"
#include "qybe/rmatrix.hpp"

using namespace qybe;

namespace {

QScalar qq(long long ue) { return qpow(QuarterExp(ue)); }

// defining relations of the algebra
void check_uq_relations(const QMatrix& xp, const QMatrix& xm, const QMatrix& qh, const QMatrix& qhi) {
    std::size_t d = xp.rows();
    QMatrix comm = xp * xm - xm * xp;
    QScalar denom_inv = (qq(4) - qq(-4)).inverse();
    QMatrix rhs = denom_inv * (qh * qh - qhi * qhi);
    CHECK((comm - rhs).all_zero());
    CHECK((qh * xp - qq(4) * (xp * qh)).all_zero());
    CHECK((qh * xm - qq(-4) * (xm * qh)).all_zero());
    CHECK((qh * qhi - qidentity(d)).all_zero());
    CHECK((qhi * qh - qidentity(d)).all_zero());
}

// independent multiplicity oracle: weight counting
int weight_count(Spin s, int fold, Half w) { return static_cast<int>(weight_indices(s, fold, w).size()); }
int cg_multiplicity(Spin s, int fold, Half w) {
    return weight_count(s, fold, w) - weight_count(s, fold, w + Half::of_int(1));
}

}  // namespace

TEST_CASE("make_rep matches the defining matrix elements at s=1/2") {
    Rep r = make_rep(Spin(1));
    CHECK(r.xplus(1, 0) == QScalar::one());
    CHECK(r.xplus(0, 1).is_zero());
    CHECK(r.qh(0, 0) == qq(-2));  // q^{-1/2}
    CHECK(r.qh(1, 1) == qq(2));
}

TEST_CASE("algebra relations hold for rep, coproduct, triple") {
    for (int tw = 1; tw <= 3; ++tw) {
        Rep r = make_rep(Spin(tw));
        check_uq_relations(r.xplus, r.xminus, r.qh, r.qh_inv);
        check_uq_relations(coproduct(r, Gen::XPlus), coproduct(r, Gen::XMinus), coproduct(r, Gen::QH),
                           coproduct(r, Gen::QHInv));
        if (tw <= 2)
            check_uq_relations(triple_action(r, Gen::XPlus), triple_action(r, Gen::XMinus),
                               triple_action(r, Gen::QH), triple_action(r, Gen::QHInv));
    }
}

TEST_CASE("coproduct structure at s=1/2") {
    Rep r = make_rep(Spin(1));
    CHECK(coproduct(r, Gen::QH) == kronecker(r.qh, r.qh));
    QMatrix dxp = coproduct(r, Gen::XPlus);
    int nonzero = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (!dxp(i, j).is_zero()) ++nonzero;
    // X+ ot q^{-H} contributes two entries q^{+-1/2}, q^H ot X+ another two
    CHECK(nonzero == 4);
    CHECK(dxp(2, 0) == qq(2));
    CHECK(dxp(3, 1) == qq(-2));
    CHECK(dxp(1, 0) == qq(-2));
    CHECK(dxp(3, 2) == qq(2));
}

TEST_CASE("coassociativity") {
    for (int tw = 1; tw <= 2; ++tw) {
        Rep r = make_rep(Spin(tw));
        for (Gen g : {Gen::XPlus, Gen::XMinus, Gen::QH}) {
            QMatrix lhs = triple_action(r, g);
            QMatrix rhs;
            const QMatrix& qh = r.qh;
            const QMatrix& qhi = r.qh_inv;
            switch (g) {
                case Gen::XPlus:
                    rhs = kronecker(r.xplus, kronecker(qhi, qhi)) + kronecker(qh, kronecker(r.xplus, qhi)) +
                          kronecker(qh, kronecker(qh, r.xplus));
                    break;
                case Gen::XMinus:
                    rhs = kronecker(r.xminus, kronecker(qhi, qhi)) + kronecker(qh, kronecker(r.xminus, qhi)) +
                          kronecker(qh, kronecker(qh, r.xminus));
                    break;
                default: rhs = kronecker(qh, kronecker(qh, qh)); break;
            }
            CHECK((lhs - rhs).all_zero());
        }
    }
}

TEST_CASE("hw_space dimensions match the counting oracle") {
    for (int tw : {1, 2, 3}) {
        Spin s(tw);
        Rep r = make_rep(s);
        for (int fold : {2, 3}) {
            for (int wtw = fold * tw; wtw >= 0; wtw -= 2) {
                Half w(wtw);
                int expect = cg_multiplicity(s, fold, w);
                if (expect < 0) expect = 0;
                auto basis = hw_space(r, fold, w);
                CHECK(static_cast<int>(basis.size()) == expect);
            }
        }
    }
}

TEST_CASE("s=1 fold=3 multiplicities are 1,2,3,1 for n=0..3") {
    Spin s(2);
    Rep r = make_rep(s);
    std::vector<int> dims;
    for (int n = 0; n <= 3; ++n)
        dims.push_back(static_cast<int>(hw_space(r, 3, Half(3 * 2 - 2 * n)).size()));
    CHECK(dims == std::vector<int>{1, 2, 3, 1});
    for (int n = 0; n <= 3; ++n) CHECK(static_cast<int>(k_range(s, n).size()) == dims[n]);
}

TEST_CASE("hw vector at s=1/2 fold=2 weight=0") {
    Spin s(1);
    Rep r = make_rep(s);
    auto basis = hw_space(r, 2, Half(0));
    REQUIRE(basis.size() == 1);
    auto v = basis[0];
    CHECK(v[0].is_zero());
    CHECK(v[3].is_zero());
    CHECK_FALSE(v[1].is_zero());
    // proportional to q^{1/2} w_{+}w_{-} - q^{-1/2} w_{-}w_{+}
    QScalar ratio = v[1] * v[2].inverse();
    CHECK(ratio == -qq(4));
}

TEST_CASE("top-weight hw vector for fold=2") {
    Spin s(1);
    Rep r = make_rep(s);
    auto basis = hw_space(r, 2, Half(2));
    REQUIRE(basis.size() == 1);
    CHECK_FALSE(basis[0][3].is_zero());  // w_{1/2} ot w_{1/2}
}

TEST_CASE("k_range branches") {
    CHECK(k_range(Spin(2), 2) == std::vector<int>{0, 1, 2});
    CHECK(k_range(Spin(2), 3) == std::vector<int>{1});
    CHECK(k_range(Spin(3), 4) == std::vector<int>{1, 2});
    CHECK(k_range(Spin(4), 6) == std::vector<int>{2});
    CHECK_THROWS_AS(k_range(Spin(2), 4), InvalidN);
    for (int tw = 1; tw <= 4; ++tw)
        for (int n = 0; n <= tw; ++n) CHECK(static_cast<int>(k_range(Spin(tw), n).size()) == n + 1);
}

TEST_CASE("wn_basis: orthonormal, diagonalizes R12") {
    for (int tw : {1, 2}) {
        Spin s(tw);
        const Rep& r = rep_cached(s);
        const BraidOperator& rb = braid_cached(s);
        QMatrix r12 = kronecker(rb.matrix, qidentity(s.dim()));
        for (int n = 0; n <= floor_3s(s); ++n) {
            HWBasis b = wn_basis(r, n);
            std::size_t m = b.vectors.size();
            REQUIRE(m == k_range(s, n).size());
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) {
                    QScalar dot;
                    for (std::size_t c = 0; c < b.vectors[i].size(); ++c)
                        dot = dot + b.vectors[i][c] * b.vectors[j][c];
                    if (i == j)
                        CHECK(dot == QScalar::one());
                    else
                        CHECK(dot.is_zero());
                }
            for (std::size_t a = 0; a < m; ++a) {
                int k = b.ks[a];
                for (std::size_t i = 0; i < b.vectors[a].size(); ++i) {
                    QScalar acc;
                    for (std::size_t j = 0; j < b.vectors[a].size(); ++j) {
                        if (r12(i, j).is_zero() || b.vectors[a][j].is_zero()) continue;
                        acc = acc + r12(i, j) * b.vectors[a][j];
                    }
                    CHECK((acc - xi(s, k) * b.vectors[a][i]).is_zero());
                }
            }
        }
    }
}

TEST_CASE("spin parsing") {
    CHECK(parse_spin("1/2").twice == 1);
    CHECK(parse_spin("3/2").twice == 3);
    CHECK(parse_spin("2").twice == 4);
    CHECK(spin_str(Spin(3)) == "3/2");
    CHECK(spin_str(Spin(4)) == "2");
    CHECK_THROWS_AS(parse_spin("x"), ConfigError);
    CHECK_THROWS_AS(Spin(0), ConfigError);
}
