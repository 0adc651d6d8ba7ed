#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qybe/sixj.hpp"

#include <vector>

using namespace qybe;

namespace {

Half h(int twice) { return Half(twice); }

std::vector<Half> halves_up_to(int max_tw) {
    std::vector<Half> v;
    for (int t = 0; t <= max_tw; ++t) v.push_back(Half(t));
    return v;
}

}  // namespace

TEST_CASE("tetrahedral symmetries") {
    // {1, 1/2, 1/2; 1/2, 1, 1/2}, asymmetric arguments
    std::array<Half, 6> a{h(2), h(1), h(1), h(1), h(2), h(1)};
    QScalar base = qsixj({a});
    REQUIRE_FALSE(base.is_zero());
    // column permutations
    auto perm = [&](int c0, int c1, int c2, bool f0, bool f1, bool f2) {
        std::array<std::pair<Half, Half>, 3> cols{
            std::make_pair(a[0], a[3]), std::make_pair(a[1], a[4]), std::make_pair(a[2], a[5])};
        std::array<std::pair<Half, Half>, 3> pc{cols[c0], cols[c1], cols[c2]};
        if (f0) std::swap(pc[0].first, pc[0].second);
        if (f1) std::swap(pc[1].first, pc[1].second);
        if (f2) std::swap(pc[2].first, pc[2].second);
        return qsixj(pc[0].first, pc[1].first, pc[2].first, pc[0].second, pc[1].second, pc[2].second);
    };
    int count = 0;
    int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (auto& pm : perms)
        for (auto [f0, f1, f2] : {std::tuple{false, false, false}, {true, true, false},
                                  {true, false, true}, {false, true, true}}) {
            CHECK(perm(pm[0], pm[1], pm[2], f0, f1, f2) == base);
            ++count;
        }
    CHECK(count == 24);
}

TEST_CASE("j6 = 0 degenerate closed form") {
    // {j1 j2 j3; j4 j5 0} nonzero iff j5 = j1, j4 = j2, triad(j1,j2,j3);
    // value (-1)^{j1+j2+j3}/sqrt([2j1+1][2j2+1])
    for (int tj1 = 1; tj1 <= 4; ++tj1)
        for (int tj2 = 1; tj2 <= 4; ++tj2)
            for (int tj3 = 0; tj3 <= 8; ++tj3) {
                Half j1(tj1), j2(tj2), j3(tj3);
                if (!triad_ok(j1, j2, j3)) continue;
                QScalar v = qsixj(j1, j2, j3, j2, j1, Half(0));
                QScalar w = sqrt_rational(qint(tj1 + 1) * qint(tj2 + 1)).inverse();
                if (parity_sign(j1 + j2 + j3) < 0) w = -w;
                CHECK(v == w);
                // mismatched corners vanish
                QScalar z = qsixj(j1, j2, j3, j2 + Half::of_int(1), j1, Half(0));
                CHECK(z.is_zero());
            }
}

TEST_CASE("triangle violations give zero") {
    CHECK(qsixj(h(1), h(1), h(6), h(1), h(1), h(2)).is_zero());
    CHECK(qsixj(h(1), h(2), h(2), h(1), h(2), h(2)).is_zero());  // perimeter not integral
}

TEST_CASE("self-duality under q -> q^{-1}") {
    std::array<Half, 6> tuples[] = {
        {h(2), h(2), h(2), h(2), h(2), h(2)}, {h(1), h(2), h(3), h(2), h(3), h(2)},
        {h(2), h(1), h(1), h(1), h(2), h(1)}, {h(4), h(2), h(2), h(2), h(4), h(2)},
        {h(3), h(3), h(2), h(3), h(3), h(2)}};
    for (const auto& t : tuples) {
        QScalar v = qsixj({t});
        CHECK(v.dual() == v);
    }
}

TEST_CASE("A-matrix: symmetric, involutive, self-dual; eta11") {
    for (int tw : {1, 2, 3}) {
        Spin s(tw);
        for (int n = 0; n <= floor_3s(s); ++n) {
            const AMatrix& a = a_matrix_cached(s, n);
            std::size_t m = a.entries.rows();
            CHECK((a.entries - a.entries.transpose()).all_zero());
            CHECK((a.entries * a.entries - qidentity(m)).all_zero());
            QMatrix d = a.entries.map<QScalar>([](const QScalar& v) { return v.dual(); });
            CHECK((d - a.entries).all_zero());
            if (n == 1) {
                // eta_{1,1} = -(q^{2s} + q^{-2s})^{-1}
                QScalar pred = -((qpow(QuarterExp(4LL * tw)) + qpow(QuarterExp(-4LL * tw))).inverse());
                CHECK(a.entries(1, 1) == pred);
            }
        }
    }
}

TEST_CASE("convention lock: a_matrix == a_matrix_from_basis") {
    for (int tw : {1, 2}) {
        Spin s(tw);
        for (int n = 0; n <= floor_3s(s); ++n) {
            const AMatrix& a6 = a_matrix_cached(s, n);
            AMatrix ab = a_matrix_from_basis(s, n);
            CHECK(a6.ks == ab.ks);
            CHECK((a6.entries - ab.entries).all_zero());
        }
    }
}

TEST_CASE("A_{nk} nonzero for all k (first branch)") {
    for (int tw : {1, 2, 3}) {
        Spin s(tw);
        for (int n = 1; n <= tw; ++n) {
            const AMatrix& a = a_matrix_cached(s, n);
            std::size_t row_n = a.ks.size() - 1;  // k = n is last on the first branch
            CHECK(a.ks[row_n] == n);
            for (std::size_t j = 0; j < a.ks.size(); ++j) CHECK_FALSE(a.entries(row_n, j).is_zero());
        }
    }
}

TEST_CASE("Racah identity: Lemma-1 specialization") {
    for (int tw : {1, 2}) {
        Spin s(tw);
        Half sh = s.half();
        for (int n = 0; n <= floor_3s(s); ++n) {
            Half r4 = Half(3 * tw - 2 * n);
            for (int k : k_range(s, n))
                for (int kp : k_range(s, n)) {
                    Half l = Half(2 * (tw - k)), lp = Half(2 * (tw - kp));
                    REQUIRE(racah_admissible(sh, sh, sh, r4, l, lp));
                    CHECK(racah_identity_check(sh, sh, sh, r4, l, lp, +1).is_zero());
                    CHECK(racah_identity_check(sh, sh, sh, r4, l, lp, -1).is_zero());
                }
        }
    }
}

TEST_CASE("Racah identity: grid with parameters <= 3/2") {
    auto vals = halves_up_to(3);
    int checked = 0;
    for (Half r1 : vals)
        for (Half r2 : vals)
            for (Half r3 : vals)
                for (Half r4 : vals)
                    for (Half l : vals)
                        for (Half lp : vals) {
                            if (!racah_admissible(r1, r2, r3, r4, l, lp)) continue;
                            ++checked;
                            CHECK(racah_identity_check(r1, r2, r3, r4, l, lp, +1).is_zero());
                            CHECK(racah_identity_check(r1, r2, r3, r4, l, lp, -1).is_zero());
                        }
    CHECK(checked > 100);
}

TEST_CASE("entrywise Lemma 1") {
    // s=1/2, n=1, all (k,k')
    for (int k : {0, 1})
        for (int kp : {0, 1}) CHECK(entrywise_lemma1(Spin(1), 1, k, kp).is_zero());
    // s=1, n=2, (0,2) and the diagonal (n,n)
    CHECK(entrywise_lemma1(Spin(2), 2, 0, 2).is_zero());
    CHECK(entrywise_lemma1(Spin(2), 2, 2, 2).is_zero());
    // full sweep s <= 3/2
    for (int tw : {1, 2, 3}) {
        Spin s(tw);
        for (int n = 0; n <= floor_3s(s); ++n)
            for (int k : k_range(s, n))
                for (int kp : k_range(s, n)) CHECK(entrywise_lemma1(s, n, k, kp).is_zero());
    }
}

TEST_CASE("qsixj second-branch A matrices") {
    // s=1: n=3 has k_range {1}, 1x1 involution
    const AMatrix& a = a_matrix_cached(Spin(2), 3);
    CHECK(a.ks == std::vector<int>{1});
    CHECK((a.entries * a.entries - qidentity(1)).all_zero());
}
