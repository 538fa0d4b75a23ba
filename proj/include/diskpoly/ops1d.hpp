#pragma once

#include "diskpoly/jacobi.hpp"
#include "diskpoly/report.hpp"
#include "diskpoly/unipoly.hpp"

#include <array>
#include <optional>

namespace diskpoly {

/// Second-order linear differential operator with polynomial coefficients:
/// u -> p2 u'' + p1 u' + p0 u.
struct DiffOp1D {
    UniPoly p2;
    UniPoly p1;
    UniPoly p0;

    explicit DiffOp1D(Mode mode) : p2(mode), p1(mode), p0(mode) {}
    DiffOp1D(UniPoly p2_, UniPoly p1_, UniPoly p0_)
        : p2(std::move(p2_)), p1(std::move(p1_)), p0(std::move(p0_)) {}

    Mode mode() const { return p1.mode(); }
    UniPoly apply(const UniPoly& u) const;

    friend bool operator==(const DiffOp1D& a, const DiffOp1D& b) {
        return a.p2 == b.p2 && a.p1 == b.p1 && a.p0 == b.p0;
    }
};

/// The twelve Jacobi ladder operators, named by how they move (n, alpha, beta).
enum class JacobiLadderKind {
    both_up_deg_down,    // d/dt                                   : n-1, a+1, b+1
    both_down_deg_up,    // (1-t^2) d/dt + [b(1-t) - a(1+t)]       : n+1, a-1, b-1
    alpha_up,            // (1+t) d/dt + (n+a+b+1)                 : a+1
    alpha_down,          // (1-t^2) d/dt - [2a + (1-t)n]           : a-1
    beta_up,             // (1-t) d/dt - (n+a+b+1)                 : b+1
    beta_down,           // (1-t^2) d/dt + [2b + (1+t)n]           : b-1
    alpha_up_deg_down,   // (1+t) d/dt - n                         : n-1, a+1
    alpha_down_deg_up,   // (1-t^2) d/dt + [(n+b+1)(1-t) - a(1+t)] : n+1, a-1
    beta_up_deg_down,    // (1-t) d/dt + n                         : n-1, b+1
    beta_down_deg_up,    // (1-t^2) d/dt + [(n+a+1)(1+t) - b(1-t)] : n+1, b-1
    alpha_up_beta_down,  // (1+t) d/dt + b                         : a+1, b-1
    alpha_down_beta_up,  // (1-t) d/dt - a                         : a-1, b+1
};

inline constexpr std::array<JacobiLadderKind, 12> kAllJacobiLadders = {
    JacobiLadderKind::both_up_deg_down,  JacobiLadderKind::both_down_deg_up,
    JacobiLadderKind::alpha_up,          JacobiLadderKind::alpha_down,
    JacobiLadderKind::beta_up,           JacobiLadderKind::beta_down,
    JacobiLadderKind::alpha_up_deg_down, JacobiLadderKind::alpha_down_deg_up,
    JacobiLadderKind::beta_up_deg_down,  JacobiLadderKind::beta_down_deg_up,
    JacobiLadderKind::alpha_up_beta_down, JacobiLadderKind::alpha_down_beta_up,
};

const char* ladder_name_1d(JacobiLadderKind kind);

/// Kinds whose operator coefficients contain the target degree n.
bool ladder_needs_n(JacobiLadderKind kind);

/// Equation family 1..6 the kind belongs to (each family is a raise/lower pair).
int ladder_family_1d(JacobiLadderKind kind);

/// Builds the ladder operator. n must be supplied exactly for the n-dependent
/// kinds and must match the degree of the polynomial it will be applied to.
DiffOp1D make_op_1d(JacobiLadderKind kind, const Scalar& alpha, const Scalar& beta,
                    std::optional<int> n = std::nullopt);

/// A commonly quoted variant of beta_down_deg_up with the opposite sign on the
/// zeroth-order coefficient. Satisfies no ladder identity; kept so the
/// discrepancy with the exported (reflection-consistent) form stays checkable.
DiffOp1D beta_down_deg_up_printed_variant(const Scalar& alpha, const Scalar& beta, int n);

/// The second-order Jacobi operator (1-t^2) d^2/dt^2 + (b - a - (a+b+2) t) d/dt.
DiffOp1D jacobi_diff_op(const Scalar& alpha, const Scalar& beta);

/// Operator composition outer(inner(u)), expanded symbolically. Throws if a
/// genuine third- or fourth-order term survives.
DiffOp1D compose(const DiffOp1D& outer, const DiffOp1D& inner);

/// a b - b a. Third-order terms of the two compositions cancel for the
/// operator pairs used here; throws if they do not.
DiffOp1D commutator(const DiffOp1D& a, const DiffOp1D& b);

/// Where a ladder kind sends P_n^{(alpha,beta)} and with which constant.
struct LadderTarget1D {
    int n;
    Scalar alpha;
    Scalar beta;
    Scalar factor;
};
LadderTarget1D ladder_target_1d(JacobiLadderKind kind, const Scalar& alpha, const Scalar& beta, int n);

/// The parameter range under which the identity is stated.
bool ladder_range_ok_1d(JacobiLadderKind kind, const Scalar& alpha, const Scalar& beta);

/// Exact check of one ladder identity: op[P_n] == factor * P_target, with
/// P_{-1} read as the zero polynomial. Failure comes back as a report.
VerificationReport verify_ladder_1d(JacobiLadderKind kind, const Rational& alpha, const Rational& beta,
                                    int n);

}  // namespace diskpoly
