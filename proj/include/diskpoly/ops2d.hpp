#pragma once

#include "diskpoly/report.hpp"
#include "diskpoly/zernike.hpp"

#include <array>

namespace diskpoly {

/// Linear differential operator on bivariate polynomials:
/// p -> c_mixed d2p/dzdzbar + c_dz dp/dz + c_dzbar dp/dzbar + c_id p.
/// The ladder operators are first order; the disk operator fills c_mixed.
struct DiffOp2D {
    BiPoly c_mixed;
    BiPoly c_dz;
    BiPoly c_dzbar;
    BiPoly c_id;

    explicit DiffOp2D(Mode mode) : c_mixed(mode), c_dz(mode), c_dzbar(mode), c_id(mode) {}

    Mode mode() const { return c_dz.mode(); }
    BiPoly apply(const BiPoly& p) const;

    friend bool operator==(const DiffOp2D& a, const DiffOp2D& b) {
        return a.c_mixed == b.c_mixed && a.c_dz == b.c_dz && a.c_dzbar == b.c_dzbar && a.c_id == b.c_id;
    }
};

/// The sixteen disk-polynomial ladder operators, named by how they move
/// (k, j, mu); _z / _zbar marks which variable carries the derivative where
/// both variants exist.
enum class DiskLadderKind {
    k_down_mu_up,        // d/dz
    k_up_mu_down,        // (1-zw) d/dw - mu z            (w = zbar)
    j_down_mu_up,        // d/dw
    j_up_mu_down,        // (1-zw) d/dz - mu w
    mu_up_z,             // z d/dz + (j+mu+1)
    mu_down_z,           // (1-zw) z d/dz - k(1-zw) - mu
    mu_up_zbar,          // w d/dw + (k+mu+1)
    mu_down_zbar,        // (1-zw) w d/dw - j(1-zw) - mu
    k_down,              // (1-zw) d/dz + k w
    k_up,                // (1-zw) d/dw - (k+mu+1) z
    j_down,              // (1-zw) d/dw + j z
    j_up,                // (1-zw) d/dz - (j+mu+1) w
    kj_down_mu_up_z,     // z d/dz - k
    kj_up_mu_down_z,     // (1-zw) z d/dz + (j+1)(1-zw) - mu zw
    kj_down_mu_up_zbar,  // w d/dw - j
    kj_up_mu_down_zbar,  // (1-zw) w d/dw + (k+1)(1-zw) - mu zw
};

inline constexpr std::array<DiskLadderKind, 16> kAllDiskLadders = {
    DiskLadderKind::k_down_mu_up,       DiskLadderKind::k_up_mu_down,
    DiskLadderKind::j_down_mu_up,       DiskLadderKind::j_up_mu_down,
    DiskLadderKind::mu_up_z,            DiskLadderKind::mu_down_z,
    DiskLadderKind::mu_up_zbar,         DiskLadderKind::mu_down_zbar,
    DiskLadderKind::k_down,             DiskLadderKind::k_up,
    DiskLadderKind::j_down,             DiskLadderKind::j_up,
    DiskLadderKind::kj_down_mu_up_z,    DiskLadderKind::kj_up_mu_down_z,
    DiskLadderKind::kj_down_mu_up_zbar, DiskLadderKind::kj_up_mu_down_zbar,
};

const char* ladder_name_2d(DiskLadderKind kind);
/// Equation family label Z1..Z8 used by the CLI and the reports.
const char* ladder_family_2d(DiskLadderKind kind);
/// The mu-lowering identities are stated for mu > 0, everything else for mu > -1.
bool ladder_requires_positive_mu(DiskLadderKind kind);
/// Partner under the z <-> zbar, k <-> j symmetry (Z1<->Z2 etc.).
DiskLadderKind ladder_partner_2d(DiskLadderKind kind);

/// Builds the operator; k and j are the indices of the polynomial the operator
/// is meant for (kinds that do not reference them ignore the values).
DiffOp2D make_op_2d(DiskLadderKind kind, const Scalar& mu, int k, int j);

/// A commonly quoted variant of j_up_mu_down carrying d/dzbar instead of d/dz.
/// Inconsistent with the invariance symmetry; the verifier runs both readings
/// and the reports record which one holds.
DiffOp2D j_up_mu_down_printed_variant(const Scalar& mu);

struct LadderTarget2D {
    Scalar mu;
    int k;
    int j;
    Scalar factor;
};
LadderTarget2D ladder_target_2d(DiskLadderKind kind, const Scalar& mu, int k, int j);

/// Exact check of op[Q^mu_{k,j}] == factor * Q^target; indices pushed below
/// zero only ever occur with factor zero and read as the zero polynomial.
VerificationReport verify_ladder_2d(DiskLadderKind kind, const Rational& mu, int k, int j);

/// Same check for the printed j_up_mu_down reading.
VerificationReport verify_j_up_mu_down_printed(const Rational& mu, int k, int j);

/// Second-order disk operator 2(1-zw) d2/dzdw - (mu+1)(z d/dz + w d/dw); its
/// eigenvalue on Q^mu_{k,j} is -2kj - (mu+1)(k+j). Meaningful for mu = -1 too.
DiffOp2D disk_operator(const Scalar& mu);
BiPoly apply_disk_operator(const Scalar& mu, const BiPoly& p);

VerificationReport verify_disk_eigen(const Rational& mu, int k, int j);

/// L_{-1} on the mu = -1 system with eigenvalue -2kj. Index pairs with exactly
/// one zero are outside the system and come back marked skipped.
VerificationReport verify_mu_minus_one(int k, int j);

/// (k+j+mu+1) z Q = (k+mu+1) Q_{k+1,j} + j Q_{k,j-1} and the zbar companion.
VerificationReport verify_three_term(const Rational& mu, int k, int j);

/// (k+j+mu+1) Q^mu = (k+mu+1)(j+mu+1)/(mu+1) Q^{mu+1} - kj/(mu+1) Q^{mu+1}_{k-1,j-1}.
VerificationReport verify_connection(const Rational& mu, int k, int j);

/// Both structure relations plus the (1-zw) Q^{mu+1} corollary.
VerificationReport verify_structure(const Rational& mu, int k, int j);

/// (z d/dz - w d/dw) Q = (k-j) Q.
VerificationReport verify_angular(const Rational& mu, int k, int j);

/// Operator identity between the disk operator and its first-order
/// factorization, checked on every monomial of total degree <= max_degree.
VerificationReport verify_disk_factorization(const Rational& mu, int max_degree);

}  // namespace diskpoly
