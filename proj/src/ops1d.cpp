#include "diskpoly/ops1d.hpp"

#include <stdexcept>
#include <vector>

namespace diskpoly {

UniPoly DiffOp1D::apply(const UniPoly& u) const {
    const UniPoly du = u.derivative();
    return p2 * du.derivative() + p1 * du + p0 * u;
}

const char* ladder_name_1d(JacobiLadderKind kind) {
    switch (kind) {
        case JacobiLadderKind::both_up_deg_down: return "both_up_deg_down";
        case JacobiLadderKind::both_down_deg_up: return "both_down_deg_up";
        case JacobiLadderKind::alpha_up: return "alpha_up";
        case JacobiLadderKind::alpha_down: return "alpha_down";
        case JacobiLadderKind::beta_up: return "beta_up";
        case JacobiLadderKind::beta_down: return "beta_down";
        case JacobiLadderKind::alpha_up_deg_down: return "alpha_up_deg_down";
        case JacobiLadderKind::alpha_down_deg_up: return "alpha_down_deg_up";
        case JacobiLadderKind::beta_up_deg_down: return "beta_up_deg_down";
        case JacobiLadderKind::beta_down_deg_up: return "beta_down_deg_up";
        case JacobiLadderKind::alpha_up_beta_down: return "alpha_up_beta_down";
        case JacobiLadderKind::alpha_down_beta_up: return "alpha_down_beta_up";
    }
    return "?";
}

bool ladder_needs_n(JacobiLadderKind kind) {
    switch (kind) {
        case JacobiLadderKind::alpha_up:
        case JacobiLadderKind::alpha_down:
        case JacobiLadderKind::beta_up:
        case JacobiLadderKind::beta_down:
        case JacobiLadderKind::alpha_up_deg_down:
        case JacobiLadderKind::alpha_down_deg_up:
        case JacobiLadderKind::beta_up_deg_down:
        case JacobiLadderKind::beta_down_deg_up:
            return true;
        default:
            return false;
    }
}

int ladder_family_1d(JacobiLadderKind kind) {
    switch (kind) {
        case JacobiLadderKind::both_up_deg_down:
        case JacobiLadderKind::both_down_deg_up: return 1;
        case JacobiLadderKind::alpha_up:
        case JacobiLadderKind::alpha_down: return 2;
        case JacobiLadderKind::beta_up:
        case JacobiLadderKind::beta_down: return 3;
        case JacobiLadderKind::alpha_up_deg_down:
        case JacobiLadderKind::alpha_down_deg_up: return 4;
        case JacobiLadderKind::beta_up_deg_down:
        case JacobiLadderKind::beta_down_deg_up: return 5;
        case JacobiLadderKind::alpha_up_beta_down:
        case JacobiLadderKind::alpha_down_beta_up: return 6;
    }
    return 0;
}

namespace {

// Shared coefficient pieces.
UniPoly one_minus_t2(Mode m) {
    const Scalar one = Scalar::one(m);
    return UniPoly(m, {one, Scalar::zero(m), -one});
}
UniPoly one_plus_t(Mode m) { return UniPoly(m, {Scalar::one(m), Scalar::one(m)}); }
UniPoly one_minus_t(Mode m) { return UniPoly(m, {Scalar::one(m), -Scalar::one(m)}); }

}  // namespace

DiffOp1D make_op_1d(JacobiLadderKind kind, const Scalar& alpha, const Scalar& beta,
                    std::optional<int> n_opt) {
    require_same_mode(alpha, beta, "make_op_1d");
    if (ladder_needs_n(kind) != n_opt.has_value()) {
        throw std::invalid_argument(std::string("make_op_1d: ") +
                                    (n_opt ? "n supplied for an n-free operator"
                                           : "n required for this operator"));
    }
    const Mode m = alpha.mode();
    const Scalar one = Scalar::one(m);
    const Scalar zero = Scalar::zero(m);
    const Scalar n = n_opt ? Scalar::from_int(*n_opt, m) : zero;
    DiffOp1D op(m);
    switch (kind) {
        case JacobiLadderKind::both_up_deg_down:
            op.p1 = UniPoly::constant(one);
            break;
        case JacobiLadderKind::both_down_deg_up:
            op.p1 = one_minus_t2(m);
            op.p0 = UniPoly(m, {beta - alpha, -(alpha + beta)});
            break;
        case JacobiLadderKind::alpha_up:
            op.p1 = one_plus_t(m);
            op.p0 = UniPoly::constant(n + alpha + beta + one);
            break;
        case JacobiLadderKind::alpha_down:
            op.p1 = one_minus_t2(m);
            op.p0 = UniPoly(m, {-(alpha + alpha + n), n});
            break;
        case JacobiLadderKind::beta_up:
            op.p1 = one_minus_t(m);
            op.p0 = UniPoly::constant(-(n + alpha + beta + one));
            break;
        case JacobiLadderKind::beta_down:
            op.p1 = one_minus_t2(m);
            op.p0 = UniPoly(m, {beta + beta + n, n});
            break;
        case JacobiLadderKind::alpha_up_deg_down:
            op.p1 = one_plus_t(m);
            op.p0 = UniPoly::constant(-n);
            break;
        case JacobiLadderKind::alpha_down_deg_up:
            op.p1 = one_minus_t2(m);
            op.p0 = UniPoly(m, {n + beta + one - alpha, -(n + beta + one + alpha)});
            break;
        case JacobiLadderKind::beta_up_deg_down:
            op.p1 = one_minus_t(m);
            op.p0 = UniPoly::constant(n);
            break;
        case JacobiLadderKind::beta_down_deg_up:
            // Mirror of alpha_down_deg_up under t -> -t; the variant with the
            // opposite sign on this coefficient satisfies no ladder identity,
            // see beta_down_deg_up_printed_variant.
            op.p1 = one_minus_t2(m);
            op.p0 = UniPoly(m, {beta - (n + alpha + one), -(n + alpha + one + beta)});
            break;
        case JacobiLadderKind::alpha_up_beta_down:
            op.p1 = one_plus_t(m);
            op.p0 = UniPoly::constant(beta);
            break;
        case JacobiLadderKind::alpha_down_beta_up:
            op.p1 = one_minus_t(m);
            op.p0 = UniPoly::constant(-alpha);
            break;
    }
    return op;
}

DiffOp1D beta_down_deg_up_printed_variant(const Scalar& alpha, const Scalar& beta, int n) {
    require_same_mode(alpha, beta, "beta_down_deg_up_printed_variant");
    const Mode m = alpha.mode();
    const Scalar one = Scalar::one(m);
    const Scalar sn = Scalar::from_int(n, m);
    DiffOp1D op(m);
    op.p1 = one_minus_t2(m);
    op.p0 = UniPoly(m, {sn + alpha + one - beta, sn + alpha + one + beta});
    return op;
}

DiffOp1D jacobi_diff_op(const Scalar& alpha, const Scalar& beta) {
    require_same_mode(alpha, beta, "jacobi_diff_op");
    const Mode m = alpha.mode();
    DiffOp1D op(m);
    op.p2 = one_minus_t2(m);
    op.p1 = UniPoly(m, {beta - alpha, -(alpha + beta + Scalar::from_int(2, m))});
    return op;
}

namespace {

// Composition needs room for transient orders above two; the public type
// converts back and rejects whatever survives.
using ExtOp = std::vector<UniPoly>;  // index = derivative order

ExtOp to_ext(const DiffOp1D& op) { return {op.p0, op.p1, op.p2}; }

ExtOp compose_ext(const ExtOp& outer, const ExtOp& inner) {
    const Mode m = outer.at(1).mode();
    ExtOp result(outer.size() + inner.size(), UniPoly::zero(m));
    for (std::size_t k = 0; k < outer.size(); ++k) {
        if (outer[k].is_zero()) continue;
        for (std::size_t j = 0; j < inner.size(); ++j) {
            if (inner[j].is_zero()) continue;
            // D^k (q_j u^(j)) = sum_i C(k,i) q_j^(i) u^(j+k-i)
            UniPoly q = inner[j];
            for (std::size_t i = 0; i <= k; ++i) {
                const Scalar binom = to_mode(binomial(static_cast<int>(k), static_cast<int>(i)), m);
                result[j + k - i] = result[j + k - i] + (outer[k] * q).scaled(binom);
                q = q.derivative();
            }
        }
    }
    return result;
}

DiffOp1D from_ext(ExtOp ext, const char* where) {
    const Mode m = ext.at(1).mode();
    ext.resize(std::max<std::size_t>(ext.size(), 3), UniPoly::zero(m));
    for (std::size_t k = 3; k < ext.size(); ++k) {
        if (!ext[k].is_zero()) {
            throw std::invalid_argument(std::string(where) + ": composite order exceeds two");
        }
    }
    return DiffOp1D(ext[2], ext[1], ext[0]);
}

ExtOp sub_ext(const ExtOp& a, const ExtOp& b) {
    const Mode m = a.at(1).mode();
    ExtOp out(std::max(a.size(), b.size()), UniPoly::zero(m));
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (k < a.size()) out[k] = out[k] + a[k];
        if (k < b.size()) out[k] = out[k] - b[k];
    }
    return out;
}

}  // namespace

DiffOp1D compose(const DiffOp1D& outer, const DiffOp1D& inner) {
    return from_ext(compose_ext(to_ext(outer), to_ext(inner)), "compose");
}

DiffOp1D commutator(const DiffOp1D& a, const DiffOp1D& b) {
    const ExtOp ab = compose_ext(to_ext(a), to_ext(b));
    const ExtOp ba = compose_ext(to_ext(b), to_ext(a));
    return from_ext(sub_ext(ab, ba), "commutator");
}

LadderTarget1D ladder_target_1d(JacobiLadderKind kind, const Scalar& alpha, const Scalar& beta, int n) {
    const Mode m = alpha.mode();
    const Scalar one = Scalar::one(m);
    const Scalar two = Scalar::from_int(2, m);
    const Scalar sn = Scalar::from_int(n, m);
    switch (kind) {
        case JacobiLadderKind::both_up_deg_down:
            return {n - 1, alpha + one, beta + one, (sn + alpha + beta + one) / two};
        case JacobiLadderKind::both_down_deg_up:
            return {n + 1, alpha - one, beta - one, -two * (sn + one)};
        case JacobiLadderKind::alpha_up:
            return {n, alpha + one, beta, sn + alpha + beta + one};
        case JacobiLadderKind::alpha_down:
            return {n, alpha - one, beta, -two * (sn + alpha)};
        case JacobiLadderKind::beta_up:
            return {n, alpha, beta + one, -(sn + alpha + beta + one)};
        case JacobiLadderKind::beta_down:
            return {n, alpha, beta - one, two * (sn + beta)};
        case JacobiLadderKind::alpha_up_deg_down:
            return {n - 1, alpha + one, beta, sn + beta};
        case JacobiLadderKind::alpha_down_deg_up:
            return {n + 1, alpha - one, beta, -two * (sn + one)};
        case JacobiLadderKind::beta_up_deg_down:
            return {n - 1, alpha, beta + one, sn + alpha};
        case JacobiLadderKind::beta_down_deg_up:
            return {n + 1, alpha, beta - one, -two * (sn + one)};
        case JacobiLadderKind::alpha_up_beta_down:
            return {n, alpha + one, beta - one, sn + beta};
        case JacobiLadderKind::alpha_down_beta_up:
            return {n, alpha - one, beta + one, -(sn + alpha)};
    }
    throw std::logic_error("ladder_target_1d: bad kind");
}

bool ladder_range_ok_1d(JacobiLadderKind kind, const Scalar& alpha, const Scalar& beta) {
    const Mode m = alpha.mode();
    const Scalar zero = Scalar::zero(m);
    const Scalar minus_one = Scalar::from_int(-1, m);
    const bool a1 = alpha > minus_one;
    const bool b1 = beta > minus_one;
    const bool a0 = alpha > zero;
    const bool b0 = beta > zero;
    switch (kind) {
        case JacobiLadderKind::both_up_deg_down: return a1 && b1;
        case JacobiLadderKind::both_down_deg_up: return a0 && b0;
        case JacobiLadderKind::alpha_up: return a1 && b1;
        case JacobiLadderKind::alpha_down: return a0 && b1;
        case JacobiLadderKind::beta_up: return a1 && b1;
        case JacobiLadderKind::beta_down: return a1 && b0;
        case JacobiLadderKind::alpha_up_deg_down: return a1 && b1;
        case JacobiLadderKind::alpha_down_deg_up: return a0 && b1;
        case JacobiLadderKind::beta_up_deg_down: return a1 && b1;
        case JacobiLadderKind::beta_down_deg_up: return a1 && b0;
        case JacobiLadderKind::alpha_up_beta_down: return a1 && b0;
        case JacobiLadderKind::alpha_down_beta_up: return a0 && b1;
    }
    return false;
}

VerificationReport verify_ladder_1d(JacobiLadderKind kind, const Rational& alpha, const Rational& beta,
                                    int n) {
    const Scalar a(alpha);
    const Scalar b(beta);
    const UniPoly p = jacobi_explicit(a, b, n);
    const DiffOp1D op =
        make_op_1d(kind, a, b, ladder_needs_n(kind) ? std::optional<int>(n) : std::nullopt);
    const UniPoly lhs = op.apply(p);
    const LadderTarget1D target = ladder_target_1d(kind, a, b, n);
    const UniPoly rhs = target.n < 0
                            ? UniPoly::zero(Mode::rational)
                            : jacobi_explicit(target.alpha, target.beta, target.n).scaled(target.factor);
    std::string identity = "ladder" + std::to_string(ladder_family_1d(kind)) + "." + ladder_name_1d(kind);
    VerificationReport report = compare_polys(std::move(identity), lhs, rhs);
    report.with_param("alpha", alpha.str()).with_param("beta", beta.str()).with_param("n", std::to_string(n));
    return report;
}

}  // namespace diskpoly
