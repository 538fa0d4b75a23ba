#include "diskpoly/sobolev.hpp"

#include <numbers>
#include <stdexcept>

namespace diskpoly {

namespace {

const Mode R = Mode::rational;

BiPoly one_minus_zw() {
    return BiPoly::constant(CScalar(Scalar::one(R))) - BiPoly::monomial(CScalar(Scalar::one(R)), 1, 1);
}

BiPoly envelope_second_derivative(const BiPoly& f) { return d_z(d_zbar(one_minus_zw() * f)); }

std::vector<std::complex<double>> values_at_disk(const BiPoly& p, const DiskRule& rule) {
    std::vector<std::complex<double>> out;
    out.reserve(rule.nodes.size());
    for (const DiskNode& node : rule.nodes) out.push_back(eval(p, {node.x, node.y}));
    return out;
}

std::complex<double> weighted_dot(const DiskRule& rule, const std::vector<std::complex<double>>& f,
                                  const std::vector<std::complex<double>>& g) {
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.nodes[i].weight * f[i] * std::conj(g[i]);
    return acc;
}

}  // namespace

BiPoly sobolev_basis_1(int k, int j) { return zernike_q_minus_one(k, j); }

BiPoly sobolev_basis_2(int k, int j) {
    if (k == 0 && j == 0) return BiPoly::constant(CScalar(Scalar::one(R)));
    if (k < 1 || j < 1) {
        throw std::invalid_argument("sobolev_basis_2: defined only for (0,0) or k,j >= 1");
    }
    return one_minus_zw() * zernike_q(k - 1, j - 1, Scalar(Rational(2)));
}

std::complex<double> inner_product_1(const BiPoly& f, const BiPoly& g, double lambda) {
    if (lambda <= 0.0) throw std::domain_error("inner_product_1: requires lambda > 0");
    const BiPoly df = d_z(f);
    const BiPoly dg = d_z(g);
    const int disk_degree = std::max(0, df.total_degree()) + std::max(0, dg.total_degree());
    const DiskRule rule = disk_rule(0.0, disk_degree / 2 + 2, disk_degree + 3);
    std::complex<double> disk_part = 0.0;
    for (const DiskNode& node : rule.nodes) {
        const std::complex<double> z{node.x, node.y};
        disk_part += node.weight * eval(df, z) * std::conj(eval(dg, z));
    }
    const int boundary_order = std::max(0, f.total_degree()) + std::max(0, g.total_degree());
    const CircleRule boundary = circle_rule(2 * boundary_order + 3);
    const std::complex<double> boundary_part =
        integrate_boundary(boundary, [&](std::complex<double> z) { return eval(f, z) * std::conj(eval(g, z)); });
    return lambda / std::numbers::pi * disk_part + boundary_part;
}

std::complex<double> inner_product_2(const BiPoly& f, const BiPoly& g) {
    const BiPoly pf = envelope_second_derivative(f);
    const BiPoly pg = envelope_second_derivative(g);
    const int disk_degree = std::max(0, pf.total_degree()) + std::max(0, pg.total_degree());
    const DiskRule rule = disk_rule(0.0, disk_degree / 2 + 2, disk_degree + 3);
    std::complex<double> acc = 0.0;
    for (const DiskNode& node : rule.nodes) {
        const std::complex<double> z{node.x, node.y};
        acc += node.weight * eval(pf, z) * std::conj(eval(pg, z));
    }
    return acc / std::numbers::pi;
}

VerificationReport verify_sobolev_dz_lemma(int k, int j) {
    if (k < 1 || j < 1) throw std::invalid_argument("verify_sobolev_dz_lemma: needs k,j >= 1");
    const BiPoly lhs = d_z(sobolev_basis_1(k, j));
    const BiPoly rhs = -zernike_q(k - 1, j, Scalar(Rational(0)));
    VerificationReport report = compare_polys("sobolev.dz_lemma", lhs, rhs);
    report.with_param("k", std::to_string(k)).with_param("j", std::to_string(j));
    return report;
}

VerificationReport verify_sobolev_projection_lemma(int k, int j) {
    const BiPoly u = sobolev_basis_2(k, j);
    const Rational c = (k == 0 && j == 0) ? Rational(-1) : Rational(2);
    const BiPoly lhs = envelope_second_derivative(u);
    const BiPoly rhs = zernike_q(k, j, Scalar(Rational(0))).scaled(Scalar(c));
    VerificationReport report = compare_polys("sobolev.projection_lemma", lhs, rhs);
    report.with_param("k", std::to_string(k)).with_param("j", std::to_string(j));
    return report;
}

VerificationReport verify_sobolev_inverse_lemma(int k, int j) {
    const BiPoly q0 = zernike_q(k, j, Scalar(Rational(0)));
    const BiPoly lhs = one_minus_zw() * d_z(d_zbar(q0));
    const Rational d = (k == 0 && j == 0)
                           ? Rational(0)
                           : Rational(k) * Rational(j) * Rational(k + 1) * Rational(j + 1) / Rational(2);
    const BiPoly rhs = sobolev_basis_2(k, j).scaled(Scalar(d));
    VerificationReport report = compare_polys("sobolev.inverse_lemma", lhs, rhs);
    report.with_param("k", std::to_string(k)).with_param("j", std::to_string(j));
    return report;
}

VerificationReport verify_sobolev_lemmas(int kmax, int jmax) {
    VerificationReport report;
    report.identity = "sobolev.lemmas";
    report.with_param("kmax", std::to_string(kmax)).with_param("jmax", std::to_string(jmax));
    auto absorb = [&report](VerificationReport part) {
        if (!part.pass && report.pass) {
            report.pass = false;
            report.witness = part.witness;
            report.params.insert(report.params.end(), part.params.begin(), part.params.end());
            report.with_param("failed_identity", part.identity);
        }
    };
    absorb(verify_sobolev_projection_lemma(0, 0));
    absorb(verify_sobolev_inverse_lemma(0, 0));
    for (int k = 1; k <= kmax; ++k) {
        for (int j = 1; j <= jmax; ++j) {
            absorb(verify_sobolev_dz_lemma(k, j));
            absorb(verify_sobolev_projection_lemma(k, j));
            absorb(verify_sobolev_inverse_lemma(k, j));
        }
    }
    return report;
}

Rational sobolev1_expected_diag(int k, int j, const Rational& lambda) {
    if ((k == 0) != (j == 0)) throw std::invalid_argument("sobolev1_expected_diag: undefined index");
    if (k == 0) return Rational(2);
    return lambda * zernike_norm(Rational(0), k - 1, j);
}

Rational sobolev2_expected_diag(int k, int j) {
    if ((k == 0) != (j == 0)) throw std::invalid_argument("sobolev2_expected_diag: undefined index");
    if (k == 0) return Rational(1);
    return Rational(4, k + j + 1);
}

std::vector<std::vector<std::complex<double>>> weighted_gram(const std::vector<BiPoly>& basis,
                                                             double mu, int max_degree) {
    int degree = max_degree;
    for (const BiPoly& p : basis) degree = std::max(degree, p.total_degree());
    const DiskRule rule = disk_rule(mu, degree + 2, 2 * degree + 3);
    const double b_mu = (mu + 1.0) / std::numbers::pi;

    std::vector<std::vector<std::complex<double>>> values(basis.size());
    std::vector<std::vector<std::complex<double>>> node_values;
    node_values.reserve(basis.size());
    for (const BiPoly& p : basis) node_values.push_back(values_at_disk(p, rule));
    for (std::size_t row = 0; row < basis.size(); ++row) {
        values[row].resize(basis.size());
        for (std::size_t col = 0; col < basis.size(); ++col) {
            values[row][col] = b_mu * weighted_dot(rule, node_values[row], node_values[col]);
        }
    }
    return values;
}

namespace {

std::vector<std::pair<int, int>> complex_indices(int degree_cap) {
    std::vector<std::pair<int, int>> out;
    for (int total = 0; total <= degree_cap; ++total) {
        for (int k = total; k >= 0; --k) out.emplace_back(k, total - k);
    }
    return out;
}

std::vector<std::pair<int, int>> sobolev_indices(int degree_cap) {
    std::vector<std::pair<int, int>> out{{0, 0}};
    for (int total = 2; total <= degree_cap; ++total) {
        for (int k = total - 1; k >= 1; --k) out.emplace_back(k, total - k);
    }
    return out;
}

void check_cap(int degree_cap) {
    if (degree_cap < 0 || degree_cap > kGramDegreeCapLimit) {
        throw std::invalid_argument("gram: degree cap out of range");
    }
}

}  // namespace

GramMatrix gram_weight(double mu, int degree_cap) {
    check_cap(degree_cap);
    GramMatrix gram;
    gram.indices = complex_indices(degree_cap);
    std::vector<BiPoly> basis;
    basis.reserve(gram.indices.size());
    for (const auto& [k, j] : gram.indices) basis.push_back(zernike_q(k, j, Scalar(mu)));
    gram.values = weighted_gram(basis, mu);
    return gram;
}

GramMatrix gram_sobolev1(int degree_cap, double lambda) {
    check_cap(degree_cap);
    GramMatrix gram;
    gram.indices = sobolev_indices(degree_cap);
    std::vector<BiPoly> basis;
    basis.reserve(gram.indices.size());
    for (const auto& [k, j] : gram.indices) basis.push_back(sobolev_basis_1(k, j));
    gram.values.resize(basis.size());
    for (std::size_t row = 0; row < basis.size(); ++row) {
        gram.values[row].resize(basis.size());
        for (std::size_t col = 0; col < basis.size(); ++col) {
            gram.values[row][col] = inner_product_1(basis[row], basis[col], lambda);
        }
    }
    return gram;
}

GramMatrix gram_sobolev2(int degree_cap) {
    check_cap(degree_cap);
    GramMatrix gram;
    gram.indices = sobolev_indices(degree_cap);
    std::vector<BiPoly> basis;
    basis.reserve(gram.indices.size());
    for (const auto& [k, j] : gram.indices) basis.push_back(sobolev_basis_2(k, j));
    gram.values.resize(basis.size());
    for (std::size_t row = 0; row < basis.size(); ++row) {
        gram.values[row].resize(basis.size());
        for (std::size_t col = 0; col < basis.size(); ++col) {
            gram.values[row][col] = inner_product_2(basis[row], basis[col]);
        }
    }
    return gram;
}

}  // namespace diskpoly
