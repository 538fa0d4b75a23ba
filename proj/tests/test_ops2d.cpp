#include "diskpoly/ops2d.hpp"

#include <doctest.h>

#include <vector>

using namespace diskpoly;

namespace {

const Mode R = Mode::rational;

Scalar rat(long long num, long long den = 1) { return Scalar(Rational(num, den)); }

const std::vector<Rational> kMuGrid = {Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1),
                                       Rational(2)};

BiPoly mono(long long num, long long den, int a, int b) {
    return BiPoly::monomial(CScalar(Scalar(Rational(num, den))), a, b);
}

bool mu_ok(DiskLadderKind kind, const Rational& mu) {
    return ladder_requires_positive_mu(kind) ? mu > Rational(0) : mu > Rational(-1);
}

}  // namespace

TEST_CASE("2d operator construction") {
    const DiffOp2D dz = make_op_2d(DiskLadderKind::k_down_mu_up, rat(1, 2), 3, 1);
    CHECK(dz.c_dz == mono(1, 1, 0, 0));
    CHECK(dz.c_dzbar.is_zero());
    CHECK(dz.c_id.is_zero());
    CHECK(dz.c_mixed.is_zero());

    const DiffOp2D lower_k = make_op_2d(DiskLadderKind::k_down, rat(0), 2, 0);
    CHECK(lower_k.c_dz == (mono(1, 1, 0, 0) - mono(1, 1, 1, 1)));
    CHECK(lower_k.c_id == mono(2, 1, 0, 1));

    const DiffOp2D z7 = make_op_2d(DiskLadderKind::kj_down_mu_up_z, rat(1), 0, 4);
    CHECK(z7.c_dz == mono(1, 1, 1, 0));
    CHECK(z7.c_id.is_zero());
}

TEST_CASE("spot checks from hand expansion") {
    // d/dz z = 1 = (1*(0+0+1)/(0+1)) Q^1_{0,0}
    CHECK(verify_ladder_2d(DiskLadderKind::k_down_mu_up, Rational(0), 1, 0).pass);

    // ((1-zw) d/dw - z) 1 = -z = -(0+0+1) Q^0_{1,0}
    CHECK(verify_ladder_2d(DiskLadderKind::k_up, Rational(0), 0, 0).pass);
    const BiPoly lhs = make_op_2d(DiskLadderKind::k_up, rat(0), 0, 0)
                           .apply(BiPoly::constant(CScalar(Scalar::one(R))));
    CHECK(lhs == mono(-1, 1, 1, 0));

    // (z d/dz + 2)(2zw - 1) = 6zw - 2 = 4 Q^1_{1,1}
    const BiPoly q11 = zernike_q(1, 1, rat(0));
    const BiPoly raised = make_op_2d(DiskLadderKind::mu_up_z, rat(0), 1, 1).apply(q11);
    CHECK(raised == (mono(6, 1, 1, 1) - mono(2, 1, 0, 0)));
    CHECK(raised == zernike_q(1, 1, rat(1)).scaled(rat(4)));
    CHECK(verify_ladder_2d(DiskLadderKind::mu_up_z, Rational(0), 1, 1).pass);
}

TEST_CASE("all sixteen ladder identities on a reduced grid") {
    for (DiskLadderKind kind : kAllDiskLadders) {
        for (const Rational& mu : kMuGrid) {
            if (!mu_ok(kind, mu)) continue;
            for (int k = 0; k <= 4; ++k) {
                for (int j = 0; j <= 4; ++j) {
                    const VerificationReport report = verify_ladder_2d(kind, mu, k, j);
                    CAPTURE(ladder_name_2d(kind));
                    CAPTURE(mu.str());
                    CAPTURE(k);
                    CAPTURE(j);
                    CHECK(report.pass);
                }
            }
        }
    }
}

TEST_CASE("the printed j_up_mu_down reading fails everywhere the readings differ") {
    for (const Rational& mu : kMuGrid) {
        if (!(mu > Rational(0))) continue;
        for (int k = 0; k <= 4; ++k) {
            for (int j = 0; j <= 4; ++j) {
                const Scalar smu(mu);
                const BiPoly q = zernike_q(k, j, smu);
                const BiPoly lhs_corrected = make_op_2d(DiskLadderKind::j_up_mu_down, smu, k, j).apply(q);
                const BiPoly lhs_printed = j_up_mu_down_printed_variant(smu).apply(q);
                const bool readings_coincide = lhs_corrected == lhs_printed;
                CHECK(readings_coincide == (k == 0 && j == 0));
                CHECK(verify_j_up_mu_down_printed(mu, k, j).pass == readings_coincide);
                CHECK(verify_ladder_2d(DiskLadderKind::j_up_mu_down, mu, k, j).pass);
            }
        }
    }
}

TEST_CASE("swap_conj carries each identity onto its partner") {
    const Rational mu(1, 2);
    for (DiskLadderKind kind : kAllDiskLadders) {
        if (!mu_ok(kind, mu)) continue;
        const DiskLadderKind partner = ladder_partner_2d(kind);
        for (int k = 0; k <= 3; ++k) {
            for (int j = 0; j <= 3; ++j) {
                const Scalar smu(mu);
                const BiPoly lhs = make_op_2d(kind, smu, k, j).apply(zernike_q(k, j, smu));
                const BiPoly partner_lhs =
                    make_op_2d(partner, smu, j, k).apply(zernike_q(j, k, smu));
                CHECK(swap_conj(lhs) == partner_lhs);

                const LadderTarget2D t = ladder_target_2d(kind, smu, k, j);
                const LadderTarget2D pt = ladder_target_2d(partner, smu, j, k);
                CHECK(t.factor == pt.factor);
                CHECK(t.k == pt.j);
                CHECK(t.j == pt.k);
            }
        }
    }
}

TEST_CASE("disk operator eigen-relation") {
    CHECK(apply_disk_operator(rat(3, 4), BiPoly::constant(CScalar(Scalar::one(R)))).is_zero());

    const BiPoly q11 = zernike_q(1, 1, rat(0));
    CHECK(apply_disk_operator(rat(0), q11) == q11.scaled(rat(-4)));

    for (const Rational& mu : kMuGrid) {
        for (int k = 0; k <= 5; ++k) {
            for (int j = 0; j <= 5; ++j) {
                CHECK(verify_disk_eigen(mu, k, j).pass);
            }
        }
    }
}

TEST_CASE("the mu = -1 system") {
    // L_{-1} (1 - zw) = -2 (1 - zw), i.e. the (1,1) member with eigenvalue -2
    const BiPoly q11 = zernike_q_minus_one(1, 1);
    CHECK(q11 == (mono(1, 1, 0, 0) - mono(1, 1, 1, 1)));
    CHECK(apply_disk_operator(rat(-1), q11) == q11.scaled(rat(-2)));

    CHECK(verify_mu_minus_one(0, 0).pass);
    CHECK(verify_mu_minus_one(1, 1).pass);
    CHECK(verify_mu_minus_one(2, 3).pass);
    for (int k = 1; k <= 5; ++k) {
        for (int j = 1; j <= 5; ++j) {
            CHECK(verify_mu_minus_one(k, j).pass);
        }
    }

    const VerificationReport mixed = verify_mu_minus_one(0, 2);
    CHECK(mixed.skipped);
    CHECK_THROWS_AS(zernike_q_minus_one(0, 2), std::invalid_argument);
}

TEST_CASE("three-term relations") {
    CHECK(verify_three_term(Rational(1, 2), 0, 0).pass);
    CHECK(verify_three_term(Rational(0), 1, 1).pass);
    // hand expansion: 3 z (2zw - 1) = 2 Q^0_{2,1} + Q^0_{1,0}
    const BiPoly lhs = mono(3, 1, 1, 0) * zernike_q(1, 1, rat(0));
    const BiPoly rhs = zernike_q(2, 1, rat(0)).scaled(rat(2)) + zernike_q(1, 0, rat(0));
    CHECK(lhs == rhs);
    for (const Rational& mu : kMuGrid) {
        for (int k = 0; k <= 5; ++k) {
            for (int j = 0; j <= 5; ++j) {
                CHECK(verify_three_term(mu, k, j).pass);
            }
        }
    }
}

TEST_CASE("mu to mu+1 connection") {
    // reduces to equality of monomials when j = 0
    CHECK(verify_connection(Rational(3, 2), 4, 0).pass);
    // 3 (2zw - 1) = 4 Q^1_{1,1} - 1
    const BiPoly lhs = zernike_q(1, 1, rat(0)).scaled(rat(3));
    const BiPoly rhs = zernike_q(1, 1, rat(1)).scaled(rat(4)) - mono(1, 1, 0, 0);
    CHECK(lhs == rhs);
    for (const Rational& mu : kMuGrid) {
        for (int k = 0; k <= 5; ++k) {
            for (int j = 0; j <= 5; ++j) {
                CHECK(verify_connection(mu, k, j).pass);
            }
        }
    }
}

TEST_CASE("structure relations and corollary") {
    CHECK(verify_structure(Rational(1, 2), 0, 0).pass);
    CHECK(verify_structure(Rational(0), 1, 0).pass);
    CHECK(verify_structure(Rational(0), 0, 0).pass);
    for (const Rational& mu : kMuGrid) {
        for (int k = 0; k <= 5; ++k) {
            for (int j = 0; j <= 5; ++j) {
                CHECK(verify_structure(mu, k, j).pass);
            }
        }
    }
}

TEST_CASE("angular relation") {
    for (const Rational& mu : kMuGrid) {
        CHECK(verify_angular(mu, 2, 2).pass);
        CHECK(verify_angular(mu, 3, 1).pass);
        CHECK(verify_angular(mu, 0, 2).pass);
        for (int k = 0; k <= 5; ++k) {
            for (int j = 0; j <= 5; ++j) {
                CHECK(verify_angular(mu, k, j).pass);
            }
        }
    }
}

TEST_CASE("disk operator factorization on the monomial basis") {
    for (const Rational& mu : kMuGrid) {
        CHECK(verify_disk_factorization(mu, 10).pass);
    }
    CHECK(verify_disk_factorization(Rational(-1), 10).pass);
}

TEST_CASE("raise after lower returns a computed multiple of the start") {
    for (const Rational& mu : kMuGrid) {
        for (int k = 1; k <= 4; ++k) {
            for (int j = 0; j <= 4; ++j) {
                const Scalar smu(mu);
                const BiPoly q = zernike_q(k, j, smu);
                const BiPoly lowered = make_op_2d(DiskLadderKind::k_down, smu, k, j).apply(q);
                const BiPoly round_trip = make_op_2d(DiskLadderKind::k_up, smu, k - 1, j).apply(lowered);
                // constant computed from the two verified single-step factors
                const Scalar step1 = ladder_target_2d(DiskLadderKind::k_down, smu, k, j).factor;
                const Scalar step2 = ladder_target_2d(DiskLadderKind::k_up, smu, k - 1, j).factor;
                CHECK(round_trip == q.scaled(step1 * step2));
            }
        }
    }
}
