#include "diskpoly/ops2d.hpp"

#include <stdexcept>

namespace diskpoly {

BiPoly DiffOp2D::apply(const BiPoly& p) const {
    const BiPoly dz = d_z(p);
    return c_mixed * d_zbar(dz) + c_dz * dz + c_dzbar * d_zbar(p) + c_id * p;
}

const char* ladder_name_2d(DiskLadderKind kind) {
    switch (kind) {
        case DiskLadderKind::k_down_mu_up: return "k_down_mu_up";
        case DiskLadderKind::k_up_mu_down: return "k_up_mu_down";
        case DiskLadderKind::j_down_mu_up: return "j_down_mu_up";
        case DiskLadderKind::j_up_mu_down: return "j_up_mu_down";
        case DiskLadderKind::mu_up_z: return "mu_up_z";
        case DiskLadderKind::mu_down_z: return "mu_down_z";
        case DiskLadderKind::mu_up_zbar: return "mu_up_zbar";
        case DiskLadderKind::mu_down_zbar: return "mu_down_zbar";
        case DiskLadderKind::k_down: return "k_down";
        case DiskLadderKind::k_up: return "k_up";
        case DiskLadderKind::j_down: return "j_down";
        case DiskLadderKind::j_up: return "j_up";
        case DiskLadderKind::kj_down_mu_up_z: return "kj_down_mu_up_z";
        case DiskLadderKind::kj_up_mu_down_z: return "kj_up_mu_down_z";
        case DiskLadderKind::kj_down_mu_up_zbar: return "kj_down_mu_up_zbar";
        case DiskLadderKind::kj_up_mu_down_zbar: return "kj_up_mu_down_zbar";
    }
    return "?";
}

const char* ladder_family_2d(DiskLadderKind kind) {
    switch (kind) {
        case DiskLadderKind::k_down_mu_up:
        case DiskLadderKind::k_up_mu_down: return "Z1";
        case DiskLadderKind::j_down_mu_up:
        case DiskLadderKind::j_up_mu_down: return "Z2";
        case DiskLadderKind::mu_up_z:
        case DiskLadderKind::mu_down_z: return "Z3";
        case DiskLadderKind::mu_up_zbar:
        case DiskLadderKind::mu_down_zbar: return "Z4";
        case DiskLadderKind::k_down:
        case DiskLadderKind::k_up: return "Z5";
        case DiskLadderKind::j_down:
        case DiskLadderKind::j_up: return "Z6";
        case DiskLadderKind::kj_down_mu_up_z:
        case DiskLadderKind::kj_up_mu_down_z: return "Z7";
        case DiskLadderKind::kj_down_mu_up_zbar:
        case DiskLadderKind::kj_up_mu_down_zbar: return "Z8";
    }
    return "?";
}

bool ladder_requires_positive_mu(DiskLadderKind kind) {
    switch (kind) {
        case DiskLadderKind::k_up_mu_down:
        case DiskLadderKind::j_up_mu_down:
        case DiskLadderKind::mu_down_z:
        case DiskLadderKind::mu_down_zbar:
        case DiskLadderKind::kj_up_mu_down_z:
        case DiskLadderKind::kj_up_mu_down_zbar:
            return true;
        default:
            return false;
    }
}

DiskLadderKind ladder_partner_2d(DiskLadderKind kind) {
    switch (kind) {
        case DiskLadderKind::k_down_mu_up: return DiskLadderKind::j_down_mu_up;
        case DiskLadderKind::k_up_mu_down: return DiskLadderKind::j_up_mu_down;
        case DiskLadderKind::j_down_mu_up: return DiskLadderKind::k_down_mu_up;
        case DiskLadderKind::j_up_mu_down: return DiskLadderKind::k_up_mu_down;
        case DiskLadderKind::mu_up_z: return DiskLadderKind::mu_up_zbar;
        case DiskLadderKind::mu_down_z: return DiskLadderKind::mu_down_zbar;
        case DiskLadderKind::mu_up_zbar: return DiskLadderKind::mu_up_z;
        case DiskLadderKind::mu_down_zbar: return DiskLadderKind::mu_down_z;
        case DiskLadderKind::k_down: return DiskLadderKind::j_down;
        case DiskLadderKind::k_up: return DiskLadderKind::j_up;
        case DiskLadderKind::j_down: return DiskLadderKind::k_down;
        case DiskLadderKind::j_up: return DiskLadderKind::k_up;
        case DiskLadderKind::kj_down_mu_up_z: return DiskLadderKind::kj_down_mu_up_zbar;
        case DiskLadderKind::kj_up_mu_down_z: return DiskLadderKind::kj_up_mu_down_zbar;
        case DiskLadderKind::kj_down_mu_up_zbar: return DiskLadderKind::kj_down_mu_up_z;
        case DiskLadderKind::kj_up_mu_down_zbar: return DiskLadderKind::kj_up_mu_down_z;
    }
    throw std::logic_error("ladder_partner_2d: bad kind");
}

namespace {

BiPoly one_poly(Mode m) { return BiPoly::constant(CScalar(Scalar::one(m))); }
BiPoly zw(Mode m) { return BiPoly::monomial(CScalar(Scalar::one(m)), 1, 1); }
BiPoly one_minus_zw(Mode m) { return one_poly(m) - zw(m); }
BiPoly z_poly(Mode m) { return BiPoly::variable_z(m); }
BiPoly w_poly(Mode m) { return BiPoly::variable_zbar(m); }
BiPoly const_poly(const Scalar& s) { return BiPoly::constant(CScalar(s)); }

}  // namespace

DiffOp2D make_op_2d(DiskLadderKind kind, const Scalar& mu, int k, int j) {
    const Mode m = mu.mode();
    const Scalar one = Scalar::one(m);
    const Scalar sk = Scalar::from_int(k, m);
    const Scalar sj = Scalar::from_int(j, m);
    DiffOp2D op(m);
    switch (kind) {
        case DiskLadderKind::k_down_mu_up:
            op.c_dz = one_poly(m);
            break;
        case DiskLadderKind::k_up_mu_down:
            op.c_dzbar = one_minus_zw(m);
            op.c_id = z_poly(m).scaled(-mu);
            break;
        case DiskLadderKind::j_down_mu_up:
            op.c_dzbar = one_poly(m);
            break;
        case DiskLadderKind::j_up_mu_down:
            op.c_dz = one_minus_zw(m);
            op.c_id = w_poly(m).scaled(-mu);
            break;
        case DiskLadderKind::mu_up_z:
            op.c_dz = z_poly(m);
            op.c_id = const_poly(sj + mu + one);
            break;
        case DiskLadderKind::mu_down_z:
            op.c_dz = one_minus_zw(m) * z_poly(m);
            op.c_id = one_minus_zw(m).scaled(-sk) - const_poly(mu);
            break;
        case DiskLadderKind::mu_up_zbar:
            op.c_dzbar = w_poly(m);
            op.c_id = const_poly(sk + mu + one);
            break;
        case DiskLadderKind::mu_down_zbar:
            op.c_dzbar = one_minus_zw(m) * w_poly(m);
            op.c_id = one_minus_zw(m).scaled(-sj) - const_poly(mu);
            break;
        case DiskLadderKind::k_down:
            op.c_dz = one_minus_zw(m);
            op.c_id = w_poly(m).scaled(sk);
            break;
        case DiskLadderKind::k_up:
            op.c_dzbar = one_minus_zw(m);
            op.c_id = z_poly(m).scaled(-(sk + mu + one));
            break;
        case DiskLadderKind::j_down:
            op.c_dzbar = one_minus_zw(m);
            op.c_id = z_poly(m).scaled(sj);
            break;
        case DiskLadderKind::j_up:
            op.c_dz = one_minus_zw(m);
            op.c_id = w_poly(m).scaled(-(sj + mu + one));
            break;
        case DiskLadderKind::kj_down_mu_up_z:
            op.c_dz = z_poly(m);
            op.c_id = const_poly(-sk);
            break;
        case DiskLadderKind::kj_up_mu_down_z:
            op.c_dz = one_minus_zw(m) * z_poly(m);
            op.c_id = one_minus_zw(m).scaled(sj + one) - zw(m).scaled(mu);
            break;
        case DiskLadderKind::kj_down_mu_up_zbar:
            op.c_dzbar = w_poly(m);
            op.c_id = const_poly(-sj);
            break;
        case DiskLadderKind::kj_up_mu_down_zbar:
            op.c_dzbar = one_minus_zw(m) * w_poly(m);
            op.c_id = one_minus_zw(m).scaled(sk + one) - zw(m).scaled(mu);
            break;
    }
    return op;
}

DiffOp2D j_up_mu_down_printed_variant(const Scalar& mu) {
    const Mode m = mu.mode();
    DiffOp2D op(m);
    op.c_dzbar = one_minus_zw(m);
    op.c_id = w_poly(m).scaled(-mu);
    return op;
}

LadderTarget2D ladder_target_2d(DiskLadderKind kind, const Scalar& mu, int k, int j) {
    const Mode m = mu.mode();
    const Scalar one = Scalar::one(m);
    const Scalar sk = Scalar::from_int(k, m);
    const Scalar sj = Scalar::from_int(j, m);
    switch (kind) {
        case DiskLadderKind::k_down_mu_up:
            return {mu + one, k - 1, j, sk * (sj + mu + one) / (mu + one)};
        case DiskLadderKind::k_up_mu_down:
            return {mu - one, k + 1, j, -mu};
        case DiskLadderKind::j_down_mu_up:
            return {mu + one, k, j - 1, sj * (sk + mu + one) / (mu + one)};
        case DiskLadderKind::j_up_mu_down:
            return {mu - one, k, j + 1, -mu};
        case DiskLadderKind::mu_up_z:
        case DiskLadderKind::mu_up_zbar:
            return {mu + one, k, j, (sk + mu + one) * (sj + mu + one) / (mu + one)};
        case DiskLadderKind::mu_down_z:
        case DiskLadderKind::mu_down_zbar:
            return {mu - one, k, j, -mu};
        case DiskLadderKind::k_down:
            return {mu, k - 1, j, sk};
        case DiskLadderKind::k_up:
            return {mu, k + 1, j, -(sk + mu + one)};
        case DiskLadderKind::j_down:
            return {mu, k, j - 1, sj};
        case DiskLadderKind::j_up:
            return {mu, k, j + 1, -(sj + mu + one)};
        case DiskLadderKind::kj_down_mu_up_z:
        case DiskLadderKind::kj_down_mu_up_zbar:
            return {mu + one, k - 1, j - 1, sk * sj / (mu + one)};
        case DiskLadderKind::kj_up_mu_down_z:
        case DiskLadderKind::kj_up_mu_down_zbar:
            return {mu - one, k + 1, j + 1, -mu};
    }
    throw std::logic_error("ladder_target_2d: bad kind");
}

namespace {

BiPoly scaled_target(const LadderTarget2D& target) {
    if (target.factor.is_zero()) return BiPoly::zero(target.mu.mode());
    return zernike_q(target.k, target.j, target.mu).scaled(target.factor);
}

VerificationReport with_index_params(VerificationReport report, const Rational& mu, int k, int j) {
    report.with_param("mu", mu.str()).with_param("k", std::to_string(k)).with_param("j", std::to_string(j));
    return report;
}

}  // namespace

VerificationReport verify_ladder_2d(DiskLadderKind kind, const Rational& mu, int k, int j) {
    const Scalar smu(mu);
    const BiPoly q = zernike_q(k, j, smu);
    const BiPoly lhs = make_op_2d(kind, smu, k, j).apply(q);
    const BiPoly rhs = scaled_target(ladder_target_2d(kind, smu, k, j));
    std::string identity = std::string(ladder_family_2d(kind)) + "." + ladder_name_2d(kind);
    return with_index_params(compare_polys(std::move(identity), lhs, rhs), mu, k, j);
}

VerificationReport verify_j_up_mu_down_printed(const Rational& mu, int k, int j) {
    const Scalar smu(mu);
    const BiPoly q = zernike_q(k, j, smu);
    const BiPoly lhs = j_up_mu_down_printed_variant(smu).apply(q);
    const BiPoly rhs = scaled_target(ladder_target_2d(DiskLadderKind::j_up_mu_down, smu, k, j));
    return with_index_params(compare_polys("Z2.j_up_mu_down.printed", lhs, rhs), mu, k, j);
}

DiffOp2D disk_operator(const Scalar& mu) {
    const Mode m = mu.mode();
    const Scalar one = Scalar::one(m);
    DiffOp2D op(m);
    op.c_mixed = one_minus_zw(m).scaled(Scalar::from_int(2, m));
    op.c_dz = z_poly(m).scaled(-(mu + one));
    op.c_dzbar = w_poly(m).scaled(-(mu + one));
    return op;
}

BiPoly apply_disk_operator(const Scalar& mu, const BiPoly& p) { return disk_operator(mu).apply(p); }

VerificationReport verify_disk_eigen(const Rational& mu, int k, int j) {
    const Scalar smu(mu);
    const BiPoly q = zernike_q(k, j, smu);
    const Rational eigen = Rational(-2 * k * j) - (mu + Rational(1)) * Rational(k + j);
    const BiPoly lhs = apply_disk_operator(smu, q);
    return with_index_params(compare_polys("eigen", lhs, q.scaled(Scalar(eigen))), mu, k, j);
}

VerificationReport verify_mu_minus_one(int k, int j) {
    VerificationReport report;
    if ((k == 0) != (j == 0)) {
        report.identity = "eigen_mu_minus_one";
        report.skipped = true;
        report.pass = true;
        report.with_param("k", std::to_string(k)).with_param("j", std::to_string(j));
        report.with_param("note", "index outside the mu=-1 system");
        return report;
    }
    const BiPoly q = zernike_q_minus_one(k, j);
    const BiPoly lhs = apply_disk_operator(Scalar(Rational(-1)), q);
    const BiPoly rhs = q.scaled(Scalar(Rational(-2 * k * j)));
    report = compare_polys("eigen_mu_minus_one", lhs, rhs);
    report.with_param("k", std::to_string(k)).with_param("j", std::to_string(j));
    return report;
}

namespace {

// factor * Q^mu_{k,j} with out-of-range indices only legal when the factor
// vanishes.
BiPoly term_or_zero(const Scalar& mu, int k, int j, const Scalar& factor) {
    if (factor.is_zero()) return BiPoly::zero(mu.mode());
    return zernike_q(k, j, mu).scaled(factor);
}

}  // namespace

VerificationReport verify_three_term(const Rational& mu, int k, int j) {
    const Scalar smu(mu);
    const Mode m = Mode::rational;
    const Scalar one = Scalar::one(m);
    const Scalar sk = Scalar::from_int(k, m);
    const Scalar sj = Scalar::from_int(j, m);
    const Scalar total = sk + sj + smu + one;
    const BiPoly q = zernike_q(k, j, smu);

    const BiPoly lhs_z = (z_poly(m) * q).scaled(total);
    const BiPoly rhs_z = term_or_zero(smu, k + 1, j, sk + smu + one) + term_or_zero(smu, k, j - 1, sj);
    VerificationReport part_z = compare_polys("three_term", lhs_z, rhs_z);

    const BiPoly lhs_w = (w_poly(m) * q).scaled(total);
    const BiPoly rhs_w = term_or_zero(smu, k, j + 1, sj + smu + one) + term_or_zero(smu, k - 1, j, sk);
    VerificationReport part_w = compare_polys("three_term", lhs_w, rhs_w);

    VerificationReport report = part_z.pass ? std::move(part_w) : std::move(part_z);
    report.pass = part_z.pass && part_w.pass;
    if (!report.pass) report.with_param("failed_part", part_z.pass ? "zbar" : "z");
    return with_index_params(std::move(report), mu, k, j);
}

VerificationReport verify_connection(const Rational& mu, int k, int j) {
    const Scalar smu(mu);
    const Mode m = Mode::rational;
    const Scalar one = Scalar::one(m);
    const Scalar sk = Scalar::from_int(k, m);
    const Scalar sj = Scalar::from_int(j, m);
    const BiPoly lhs = zernike_q(k, j, smu).scaled(sk + sj + smu + one);
    const BiPoly rhs = term_or_zero(smu + one, k, j, (sk + smu + one) * (sj + smu + one) / (smu + one)) -
                       term_or_zero(smu + one, k - 1, j - 1, sk * sj / (smu + one));
    return with_index_params(compare_polys("connection", lhs, rhs), mu, k, j);
}

VerificationReport verify_structure(const Rational& mu, int k, int j) {
    const Scalar smu(mu);
    const Mode m = Mode::rational;
    const Scalar one = Scalar::one(m);
    const Scalar sk = Scalar::from_int(k, m);
    const Scalar sj = Scalar::from_int(j, m);
    const Scalar total = sk + sj + smu + one;
    const BiPoly q = zernike_q(k, j, smu);
    const BiPoly envelope = one_minus_zw(m);

    const BiPoly lhs_z = (envelope * d_z(q)).scaled(total);
    const Scalar fz = sk * (sj + smu + one);
    const BiPoly rhs_z = fz.is_zero() ? BiPoly::zero(m)
                                      : (zernike_q(k - 1, j, smu) - zernike_q(k, j + 1, smu)).scaled(fz);
    VerificationReport part_z = compare_polys("structure", lhs_z, rhs_z);

    const BiPoly lhs_w = (envelope * d_zbar(q)).scaled(total);
    const Scalar fw = sj * (sk + smu + one);
    const BiPoly rhs_w = fw.is_zero() ? BiPoly::zero(m)
                                      : (zernike_q(k, j - 1, smu) - zernike_q(k + 1, j, smu)).scaled(fw);
    VerificationReport part_w = compare_polys("structure", lhs_w, rhs_w);

    const BiPoly lhs_c = (envelope * zernike_q(k, j, smu + one)).scaled(total + one);
    const BiPoly rhs_c = (q - zernike_q(k + 1, j + 1, smu)).scaled(smu + one);
    VerificationReport part_c = compare_polys("structure", lhs_c, rhs_c);

    VerificationReport report = !part_z.pass ? std::move(part_z)
                                : !part_w.pass ? std::move(part_w)
                                               : std::move(part_c);
    report.pass = part_z.pass && part_w.pass && part_c.pass;
    if (!report.pass) {
        report.with_param("failed_part", !part_z.pass ? "z" : !part_w.pass ? "zbar" : "corollary");
    }
    return with_index_params(std::move(report), mu, k, j);
}

VerificationReport verify_angular(const Rational& mu, int k, int j) {
    const Scalar smu(mu);
    const Mode m = Mode::rational;
    const BiPoly q = zernike_q(k, j, smu);
    const BiPoly lhs = z_poly(m) * d_z(q) - w_poly(m) * d_zbar(q);
    const BiPoly rhs = q.scaled(Scalar::from_int(k - j, m));
    return with_index_params(compare_polys("angular", lhs, rhs), mu, k, j);
}

VerificationReport verify_disk_factorization(const Rational& mu, int max_degree) {
    const Scalar smu(mu);
    const Mode m = Mode::rational;
    const Scalar one = Scalar::one(m);
    // {(1-zw) d/dw - (mu+1) z} d/dz + {(1-zw) d/dz - (mu+1) w} d/dw
    DiffOp2D left(m);
    left.c_dzbar = one_minus_zw(m);
    left.c_id = z_poly(m).scaled(-(smu + one));
    DiffOp2D right(m);
    right.c_dz = one_minus_zw(m);
    right.c_id = w_poly(m).scaled(-(smu + one));

    VerificationReport report;
    report.identity = "disk_operator_factorization";
    report.with_param("mu", mu.str()).with_param("max_degree", std::to_string(max_degree));
    for (int a = 0; a <= max_degree; ++a) {
        for (int b = 0; a + b <= max_degree; ++b) {
            const BiPoly mono = BiPoly::monomial(CScalar(Scalar::one(m)), a, b);
            const BiPoly lhs = apply_disk_operator(smu, mono);
            const BiPoly rhs = left.apply(d_z(mono)) + right.apply(d_zbar(mono));
            VerificationReport part = compare_polys(report.identity, lhs, rhs);
            if (!part.pass) {
                part.with_param("mu", mu.str());
                part.with_param("monomial_a", std::to_string(a)).with_param("monomial_b", std::to_string(b));
                return part;
            }
        }
    }
    return report;
}

}  // namespace diskpoly
