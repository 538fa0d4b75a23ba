#include "diskpoly/cli.hpp"

#include "diskpoly/fit.hpp"
#include "diskpoly/ops1d.hpp"
#include "diskpoly/ops2d.hpp"
#include "diskpoly/poly_io.hpp"
#include "diskpoly/quadrature.hpp"
#include "diskpoly/sobolev.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace diskpoly {

namespace {

using nlohmann::json;

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

/// "p/q" and bare integers parse exactly; anything else falls back to float.
Scalar parse_scalar(const std::string& text) {
    if (auto rational = Rational::parse(text)) return Scalar(*rational);
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse number '" + text + "'");
    }
    if (used != text.size()) throw std::invalid_argument("cannot parse number '" + text + "'");
    return Scalar(value);
}

Rational parse_rational(const std::string& text) {
    if (auto rational = Rational::parse(text)) return *rational;
    throw std::invalid_argument("expected a rational 'p/q', got '" + text + "'");
}

void write_text(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty()) {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::ios_base::failure("cannot open output file '" + path + "'");
    file << content;
    if (!file) throw std::ios_base::failure("failed writing output file '" + path + "'");
}

// ---------------------------------------------------------------- eval

int cmd_eval(int k, int j, const std::string& mu_text, const std::string& at_text, int grid_n,
             const std::string& out_path, std::ostream& out) {
    const Scalar mu = parse_scalar(mu_text);
    if (!at_text.empty()) {
        const auto comma = at_text.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("--at expects 'x,y'");
        const std::string x_text = at_text.substr(0, comma);
        const std::string y_text = at_text.substr(comma + 1);
        const auto x_rational = Rational::parse(x_text);
        const auto y_rational = Rational::parse(y_text);
        if (mu.mode() == Mode::rational && x_rational && y_rational) {
            const BiPoly q = zernike_q(k, j, mu);
            const CScalar value = eval_exact(q, CScalar{Scalar(*x_rational), Scalar(*y_rational)});
            if (value.im().is_zero()) {
                out << value.re().str() << "\n";
            } else {
                out << value.re().str() << " " << value.im().str() << "\n";
            }
            return kExitOk;
        }
        const Scalar mu_f = mu.mode() == Mode::f64 ? mu : Scalar(mu.to_double());
        const BiPoly q = zernike_q(k, j, mu_f);
        const std::complex<double> value =
            eval(q, {parse_scalar(x_text).to_double(), parse_scalar(y_text).to_double()});
        if (value.imag() == 0.0) {
            out << format_double(value.real()) << "\n";
        } else {
            out << format_double(value.real()) << " " << format_double(value.imag()) << "\n";
        }
        return kExitOk;
    }

    // grid mode
    if (grid_n < 2) throw std::invalid_argument("--grid needs at least 2 points per axis");
    const Scalar mu_f = mu.mode() == Mode::f64 ? mu : Scalar(mu.to_double());
    const BiPoly q = zernike_q(k, j, mu_f);
    std::ostringstream csv;
    csv << "x,y,re,im\n";
    for (int iy = 0; iy < grid_n; ++iy) {
        for (int ix = 0; ix < grid_n; ++ix) {
            const double x = -1.0 + 2.0 * ix / (grid_n - 1);
            const double y = -1.0 + 2.0 * iy / (grid_n - 1);
            if (x * x + y * y > 1.0 + 1e-12) continue;
            const std::complex<double> value = eval(q, {x, y});
            csv << format_double(x) << "," << format_double(y) << "," << format_double(value.real())
                << "," << format_double(value.imag()) << "\n";
        }
    }
    write_text(out_path, csv.str(), out);
    return kExitOk;
}

// ---------------------------------------------------------------- table

int cmd_table(int k, int j, const std::string& mu_text, const std::string& out_path,
              std::ostream& out) {
    const BiPoly q = zernike_q(k, j, parse_scalar(mu_text));
    write_text(out_path, to_json(q).dump() + "\n", out);
    return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifySelection {
    std::set<int> jacobi_families;     // 1..6
    std::set<std::string> disk_families;  // "Z1".."Z8"
    bool relations = false;
    bool sobolev = false;
};

VerifySelection parse_families(const std::vector<std::string>& tokens) {
    VerifySelection sel;
    for (const std::string& raw : tokens) {
        if (raw == "all") {
            for (int f = 1; f <= 6; ++f) sel.jacobi_families.insert(f);
            for (int f = 1; f <= 8; ++f) sel.disk_families.insert("Z" + std::to_string(f));
            sel.relations = true;
            sel.sobolev = true;
        } else if (raw.rfind("ladder", 0) == 0 && raw.size() == 7 && raw[6] >= '1' && raw[6] <= '6') {
            sel.jacobi_families.insert(raw[6] - '0');
        } else if (raw.size() == 2 && raw[0] == 'Z' && raw[1] >= '1' && raw[1] <= '8') {
            sel.disk_families.insert(raw);
        } else if (raw == "relations") {
            sel.relations = true;
        } else if (raw == "sobolev") {
            sel.sobolev = true;
        } else {
            throw std::invalid_argument("unknown family '" + raw +
                                        "' (expected ladder1..ladder6, Z1..Z8, relations, sobolev, all)");
        }
    }
    return sel;
}

VerificationReport verify_ladder_1d_with_defect(JacobiLadderKind kind, const Rational& alpha,
                                                const Rational& beta, int n, bool inject_defect) {
    if (!inject_defect) return verify_ladder_1d(kind, alpha, beta, n);
    const Scalar a(alpha);
    const Scalar b(beta);
    DiffOp1D op = make_op_1d(kind, a, b, ladder_needs_n(kind) ? std::optional<int>(n) : std::nullopt);
    op.p0 = op.p0 + UniPoly::constant(Scalar(Rational(1, 7)));
    const UniPoly lhs = op.apply(jacobi_explicit(a, b, n));
    const LadderTarget1D target = ladder_target_1d(kind, a, b, n);
    const UniPoly rhs = target.n < 0
                            ? UniPoly::zero(Mode::rational)
                            : jacobi_explicit(target.alpha, target.beta, target.n).scaled(target.factor);
    std::string identity =
        "ladder" + std::to_string(ladder_family_1d(kind)) + "." + ladder_name_1d(kind);
    VerificationReport report = compare_polys(std::move(identity), lhs, rhs);
    report.with_param("alpha", alpha.str()).with_param("beta", beta.str());
    report.with_param("n", std::to_string(n)).with_param("injected_defect", "true");
    return report;
}

VerificationReport verify_ladder_2d_with_defect(DiskLadderKind kind, const Rational& mu, int k, int j,
                                                bool inject_defect) {
    if (!inject_defect) return verify_ladder_2d(kind, mu, k, j);
    const Scalar smu(mu);
    DiffOp2D op = make_op_2d(kind, smu, k, j);
    op.c_id = op.c_id + BiPoly::constant(CScalar(Scalar(Rational(1, 7))));
    const BiPoly lhs = op.apply(zernike_q(k, j, smu));
    const LadderTarget2D target = ladder_target_2d(kind, smu, k, j);
    const BiPoly rhs = target.factor.is_zero()
                           ? BiPoly::zero(Mode::rational)
                           : zernike_q(target.k, target.j, target.mu).scaled(target.factor);
    std::string identity = std::string(ladder_family_2d(kind)) + "." + ladder_name_2d(kind);
    VerificationReport report = compare_polys(std::move(identity), lhs, rhs);
    report.with_param("mu", mu.str()).with_param("k", std::to_string(k));
    report.with_param("j", std::to_string(j)).with_param("injected_defect", "true");
    return report;
}

int cmd_verify(const std::vector<std::string>& families, int kmax, int jmax, int nmax,
               std::vector<std::string> mu_texts, std::vector<std::string> alpha_texts,
               std::vector<std::string> beta_texts, const std::string& json_path, bool inject_defect,
               std::ostream& out) {
    const VerifySelection sel = parse_families(families.empty()
                                                   ? std::vector<std::string>{"all"}
                                                   : families);
    if (mu_texts.empty()) mu_texts = {"-1/2", "0", "1/2", "1", "2"};
    if (alpha_texts.empty()) alpha_texts = {"-1/2", "0", "1/2", "1", "2", "7/3"};
    if (beta_texts.empty()) beta_texts = alpha_texts;

    std::vector<Rational> mus, alphas, betas;
    for (const auto& text : mu_texts) mus.push_back(parse_rational(text));
    for (const auto& text : alpha_texts) alphas.push_back(parse_rational(text));
    for (const auto& text : beta_texts) betas.push_back(parse_rational(text));

    std::vector<VerificationReport> results;

    for (JacobiLadderKind kind : kAllJacobiLadders) {
        if (!sel.jacobi_families.count(ladder_family_1d(kind))) continue;
        for (const Rational& alpha : alphas) {
            for (const Rational& beta : betas) {
                if (!ladder_range_ok_1d(kind, Scalar(alpha), Scalar(beta))) continue;
                for (int n = 0; n <= nmax; ++n) {
                    results.push_back(verify_ladder_1d_with_defect(kind, alpha, beta, n, inject_defect));
                }
            }
        }
    }

    json z2_variant{{"evaluated", false}};
    json ladder5_variant{{"evaluated", false}};

    bool z2_selected = sel.disk_families.count("Z2") > 0;
    for (DiskLadderKind kind : kAllDiskLadders) {
        if (!sel.disk_families.count(ladder_family_2d(kind))) continue;
        for (const Rational& mu : mus) {
            const bool allowed = ladder_requires_positive_mu(kind) ? mu > Rational(0) : mu > Rational(-1);
            if (!allowed) continue;
            for (int k = 0; k <= kmax; ++k) {
                for (int j = 0; j <= jmax; ++j) {
                    results.push_back(verify_ladder_2d_with_defect(kind, mu, k, j, inject_defect));
                }
            }
        }
    }

    if (z2_selected) {
        int printed_passes = 0;
        int distinguishable = 0;
        int corrected_failures = 0;
        int tuples = 0;
        for (const Rational& mu : mus) {
            if (!(mu > Rational(0))) continue;
            for (int k = 0; k <= kmax; ++k) {
                for (int j = 0; j <= jmax; ++j) {
                    ++tuples;
                    const Scalar smu(mu);
                    const BiPoly q = zernike_q(k, j, smu);
                    const BiPoly corrected_lhs =
                        make_op_2d(DiskLadderKind::j_up_mu_down, smu, k, j).apply(q);
                    const BiPoly printed_lhs = j_up_mu_down_printed_variant(smu).apply(q);
                    if (corrected_lhs != printed_lhs) ++distinguishable;
                    if (verify_j_up_mu_down_printed(mu, k, j).pass) ++printed_passes;
                    if (!verify_ladder_2d(DiskLadderKind::j_up_mu_down, mu, k, j).pass) {
                        ++corrected_failures;
                    }
                }
            }
        }
        z2_variant = json{{"evaluated", true},
                          {"corrected_reading", "(1-z zbar) d/dz - mu zbar"},
                          {"printed_reading", "(1-z zbar) d/dzbar - mu zbar"},
                          {"tuples", tuples},
                          {"distinguishable_tuples", distinguishable},
                          {"corrected_passes_all", corrected_failures == 0},
                          {"printed_passes", printed_passes},
                          {"printed_passes_only_degenerate", printed_passes == tuples - distinguishable},
                          {"adopted", "corrected"}};
    }

    if (sel.jacobi_families.count(5)) {
        int printed_passes = 0;
        int tuples = 0;
        bool corrected_all = true;
        for (const Rational& alpha : alphas) {
            for (const Rational& beta : betas) {
                if (!ladder_range_ok_1d(JacobiLadderKind::beta_down_deg_up, Scalar(alpha), Scalar(beta))) {
                    continue;
                }
                for (int n = 0; n <= std::min(nmax, 6); ++n) {
                    ++tuples;
                    const Scalar a(alpha);
                    const Scalar b(beta);
                    const UniPoly p = jacobi_explicit(a, b, n);
                    const LadderTarget1D target =
                        ladder_target_1d(JacobiLadderKind::beta_down_deg_up, a, b, n);
                    const UniPoly rhs =
                        jacobi_explicit(target.alpha, target.beta, target.n).scaled(target.factor);
                    if (beta_down_deg_up_printed_variant(a, b, n).apply(p) == rhs) ++printed_passes;
                    if (make_op_1d(JacobiLadderKind::beta_down_deg_up, a, b, n).apply(p) != rhs) {
                        corrected_all = false;
                    }
                }
            }
        }
        ladder5_variant = json{{"evaluated", true},
                               {"corrected_reading", "(1-t^2) d/dt + [beta(1-t) - (n+alpha+1)(1+t)]"},
                               {"printed_reading", "(1-t^2) d/dt + [(n+alpha+1)(1+t) - beta(1-t)]"},
                               {"tuples", tuples},
                               {"printed_passes", printed_passes},
                               {"corrected_passes_all", corrected_all},
                               {"adopted", "corrected"}};
    }

    if (sel.relations) {
        for (const Rational& mu : mus) {
            if (!(mu > Rational(-1))) continue;
            for (int k = 0; k <= kmax; ++k) {
                for (int j = 0; j <= jmax; ++j) {
                    results.push_back(verify_disk_eigen(mu, k, j));
                    results.push_back(verify_three_term(mu, k, j));
                    results.push_back(verify_connection(mu, k, j));
                    results.push_back(verify_structure(mu, k, j));
                    results.push_back(verify_angular(mu, k, j));
                }
            }
            results.push_back(verify_disk_factorization(mu, 10));
        }
        for (int k = 0; k <= kmax; ++k) {
            for (int j = 0; j <= jmax; ++j) {
                results.push_back(verify_mu_minus_one(k, j));
            }
        }
    }

    if (sel.sobolev) {
        results.push_back(verify_sobolev_projection_lemma(0, 0));
        results.push_back(verify_sobolev_inverse_lemma(0, 0));
        for (int k = 1; k <= std::min(kmax, 6); ++k) {
            for (int j = 1; j <= std::min(jmax, 6); ++j) {
                results.push_back(verify_sobolev_dz_lemma(k, j));
                results.push_back(verify_sobolev_projection_lemma(k, j));
                results.push_back(verify_sobolev_inverse_lemma(k, j));
            }
        }
    }

    int passed = 0;
    int failed = 0;
    int skipped = 0;
    json result_array = json::array();
    for (const VerificationReport& report : results) {
        if (report.skipped) {
            ++skipped;
        } else if (report.pass) {
            ++passed;
        } else {
            ++failed;
        }
        result_array.push_back(to_json(report));
    }

    const json report_json{{"summary",
                            json{{"total", results.size()},
                                 {"passed", passed},
                                 {"failed", failed},
                                 {"skipped", skipped}}},
                           {"ladderZ2_variant", z2_variant},
                           {"ladder5_variant", ladder5_variant},
                           {"results", result_array}};

    if (!json_path.empty()) {
        std::ofstream file(json_path, std::ios::binary);
        if (!file) throw std::ios_base::failure("cannot open report file '" + json_path + "'");
        file << report_json.dump(2) << "\n";
        if (!file) throw std::ios_base::failure("failed writing report file '" + json_path + "'");
    }

    out << "verified " << results.size() << " identities: " << passed << " passed, " << failed
        << " failed, " << skipped << " skipped\n";
    if (failed > 0) {
        for (const VerificationReport& report : results) {
            if (report.pass || report.skipped) continue;
            out << "FAILED " << report.identity;
            for (const auto& [key, value] : report.params) out << " " << key << "=" << value;
            if (report.witness) {
                out << "  first difference at (" << report.witness->a << "," << report.witness->b
                    << "): " << report.witness->lhs << " vs " << report.witness->rhs;
            }
            out << "\n";
        }
    }
    return failed == 0 ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------- gram

int cmd_gram(const std::string& which, int cap, const std::string& lambda_text,
             const std::string& mu_text, const std::string& format, const std::string& out_path,
             std::ostream& out) {
    GramMatrix gram;
    if (which == "weight") {
        gram = gram_weight(parse_scalar(mu_text).to_double(), cap);
    } else if (which == "sobolev1") {
        gram = gram_sobolev1(cap, parse_rational(lambda_text).to_double());
    } else if (which == "sobolev2") {
        gram = gram_sobolev2(cap);
    } else {
        throw std::invalid_argument("--which must be weight, sobolev1 or sobolev2");
    }

    if (format == "csv") {
        std::ostringstream csv;
        csv << "k_row,j_row,k_col,j_col,re,im\n";
        for (std::size_t row = 0; row < gram.indices.size(); ++row) {
            for (std::size_t col = 0; col < gram.indices.size(); ++col) {
                csv << gram.indices[row].first << "," << gram.indices[row].second << ","
                    << gram.indices[col].first << "," << gram.indices[col].second << ","
                    << format_double(gram.values[row][col].real()) << ","
                    << format_double(gram.values[row][col].imag()) << "\n";
            }
        }
        write_text(out_path, csv.str(), out);
    } else if (format == "json") {
        json indices = json::array();
        for (const auto& [k, j] : gram.indices) indices.push_back(json::array({k, j}));
        json matrix = json::array();
        for (const auto& row : gram.values) {
            json row_json = json::array();
            for (const std::complex<double>& value : row) {
                row_json.push_back(json::array({value.real(), value.imag()}));
            }
            matrix.push_back(std::move(row_json));
        }
        json doc{{"which", which}, {"cap", cap}, {"indices", std::move(indices)}, {"matrix", std::move(matrix)}};
        if (which == "sobolev1") doc["lambda"] = lambda_text;
        if (which == "weight") doc["mu"] = mu_text;
        write_text(out_path, doc.dump() + "\n", out);
    } else {
        throw std::invalid_argument("--format must be csv or json");
    }
    return kExitOk;
}

// ---------------------------------------------------------------- quad

int cmd_quad(const std::string& mu_text, int n_radial, int n_angular, const std::string& format,
             const std::string& out_path, std::ostream& out) {
    const DiskRule rule = disk_rule(parse_scalar(mu_text).to_double(), n_radial, n_angular);
    if (format == "csv") {
        std::ostringstream csv;
        csv << "node_x,node_y,weight\n";
        for (const DiskNode& node : rule.nodes) {
            csv << format_double(node.x) << "," << format_double(node.y) << ","
                << format_double(node.weight) << "\n";
        }
        write_text(out_path, csv.str(), out);
    } else if (format == "json") {
        json nodes = json::array();
        for (const DiskNode& node : rule.nodes) {
            nodes.push_back(json{{"x", node.x}, {"y", node.y}, {"weight", node.weight}});
        }
        json doc{{"mu", mu_text}, {"radial", n_radial}, {"angular", n_angular}, {"nodes", std::move(nodes)}};
        write_text(out_path, doc.dump() + "\n", out);
    } else {
        throw std::invalid_argument("--format must be csv or json");
    }
    return kExitOk;
}

// ---------------------------------------------------------------- fit

int cmd_fit(const std::string& input_path, int degree, const std::string& mu_text,
            const std::string& method, int n_radial, int n_angular, const std::string& out_path,
            std::ostream& out) {
    const SampleSet samples = read_samples_csv_file(input_path);
    if (!samples.inside_disk()) {
        throw std::domain_error("samples CSV contains points outside the unit disk");
    }
    const double mu = parse_scalar(mu_text).to_double();
    FitResult result;
    if (method == "projection") {
        result = fit_projection(samples, degree, mu, n_radial, n_angular);
    } else if (method == "least-squares") {
        result = fit_least_squares(samples, degree, mu);
    } else {
        throw std::invalid_argument("--method must be projection or least-squares");
    }

    json coefficients = json::array();
    for (const FitCoefficient& c : result.coefficients) {
        coefficients.push_back(
            json{{"k", c.k}, {"j", c.j}, {"re", c.value.real()}, {"im", c.value.imag()}});
    }
    const json doc{{"method", method},
                   {"degree", degree},
                   {"mu", mu_text},
                   {"samples", samples.samples.size()},
                   {"coefficients", std::move(coefficients)},
                   {"residual_rms", result.residual_rms},
                   {"condition", result.condition}};
    write_text(out_path, doc.dump(2) + "\n", out);
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"generalized Zernike (disk) polynomials: evaluation, exact ladder-identity "
                 "verification, quadrature, Sobolev Gram matrices and fitting"};
    app.require_subcommand(1);

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate Q^mu_{k,j} at a point or on a grid");
    int k = 0, j = 0;
    std::string mu_text = "0";
    std::string at_text;
    int grid_n = 0;
    std::string out_path;
    eval_cmd->add_option("--k", k, "first index")->required();
    eval_cmd->add_option("--j", j, "second index")->required();
    eval_cmd->add_option("--mu", mu_text, "weight exponent, 'p/q' or float")->required();
    auto* at_opt = eval_cmd->add_option("--at", at_text, "point 'x,y'");
    auto* grid_opt = eval_cmd->add_option("--grid", grid_n, "emit CSV over an NxN grid");
    eval_cmd->add_option("--out", out_path, "write to file instead of stdout");
    at_opt->excludes(grid_opt);

    // table
    auto* table_cmd = app.add_subcommand("table", "emit Q^mu_{k,j} coefficients as JSON");
    int tk = 0, tj = 0;
    std::string tmu = "0";
    std::string table_out;
    table_cmd->add_option("--k", tk, "first index")->required();
    table_cmd->add_option("--j", tj, "second index")->required();
    table_cmd->add_option("--mu", tmu, "weight exponent, 'p/q' or float")->required();
    table_cmd->add_option("--out", table_out, "write to file instead of stdout");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check ladder and differential identities exactly");
    std::vector<std::string> families;
    int kmax = 8, jmax = 8, nmax = 12;
    std::vector<std::string> mu_list, alpha_list, beta_list;
    std::string json_path;
    bool inject_defect = false;
    verify_cmd->add_option("--family", families,
                           "ladder1..ladder6, Z1..Z8, relations, sobolev, all (repeatable)");
    verify_cmd->add_option("--kmax", kmax, "max k index");
    verify_cmd->add_option("--jmax", jmax, "max j index");
    verify_cmd->add_option("--nmax", nmax, "max univariate degree");
    verify_cmd->add_option("--mu", mu_list, "rational mu value 'p/q' (repeatable)");
    verify_cmd->add_option("--alpha", alpha_list, "rational alpha value 'p/q' (repeatable)");
    verify_cmd->add_option("--beta", beta_list, "rational beta value 'p/q' (repeatable)");
    verify_cmd->add_option("--json", json_path, "write the full JSON report here");
    verify_cmd->add_flag("--inject-defect", inject_defect, "corrupt the operator tables (test fixture)")
        ->group("");

    // gram
    auto* gram_cmd = app.add_subcommand("gram", "numerical Gram matrix of a basis");
    std::string which;
    int cap = 6;
    std::string lambda_text = "1";
    std::string gram_mu = "0";
    std::string gram_format = "csv";
    std::string gram_out;
    gram_cmd->add_option("--which", which, "weight, sobolev1 or sobolev2")->required();
    gram_cmd->add_option("--cap", cap, "total-degree cap on indices");
    gram_cmd->add_option("--lambda", lambda_text, "rational 'p/q', sobolev1 only");
    gram_cmd->add_option("--mu", gram_mu, "weight exponent for --which weight");
    gram_cmd->add_option("--format", gram_format, "csv or json");
    gram_cmd->add_option("--out", gram_out, "write to file instead of stdout");

    // quad
    auto* quad_cmd = app.add_subcommand("quad", "emit a disk quadrature rule");
    std::string quad_mu = "0";
    int n_radial = 1, n_angular = 1;
    std::string quad_format = "csv";
    std::string quad_out;
    quad_cmd->add_option("--mu", quad_mu, "weight exponent")->required();
    quad_cmd->add_option("--radial", n_radial, "radial points")->required();
    quad_cmd->add_option("--angular", n_angular, "angular points")->required();
    quad_cmd->add_option("--format", quad_format, "csv or json");
    quad_cmd->add_option("--out", quad_out, "write to file instead of stdout");

    // fit
    auto* fit_cmd = app.add_subcommand("fit", "fit disk-polynomial coefficients to samples");
    std::string fit_input;
    int fit_degree = 0;
    std::string fit_mu = "0";
    std::string fit_method = "projection";
    int fit_radial = 0, fit_angular = 0;
    std::string fit_out;
    fit_cmd->add_option("--input", fit_input, "samples CSV (header x,y,re[,im])")->required();
    fit_cmd->add_option("--degree", fit_degree, "total-degree cap")->required();
    fit_cmd->add_option("--mu", fit_mu, "weight exponent");
    fit_cmd->add_option("--method", fit_method, "projection or least-squares");
    fit_cmd->add_option("--radial", fit_radial, "projection grid radial points");
    fit_cmd->add_option("--angular", fit_angular, "projection grid angular points");
    fit_cmd->add_option("--out", fit_out, "write to file instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitBadArguments;
    }

    try {
        if (eval_cmd->parsed()) {
            if (at_text.empty() && grid_n == 0) {
                throw std::invalid_argument("eval: one of --at or --grid is required");
            }
            return cmd_eval(k, j, mu_text, at_text, grid_n, out_path, out);
        }
        if (table_cmd->parsed()) return cmd_table(tk, tj, tmu, table_out, out);
        if (verify_cmd->parsed()) {
            return cmd_verify(families, kmax, jmax, nmax, mu_list, alpha_list, beta_list, json_path,
                              inject_defect, out);
        }
        if (gram_cmd->parsed()) {
            return cmd_gram(which, cap, lambda_text, gram_mu, gram_format, gram_out, out);
        }
        if (quad_cmd->parsed()) {
            return cmd_quad(quad_mu, n_radial, n_angular, quad_format, quad_out, out);
        }
        if (fit_cmd->parsed()) {
            return cmd_fit(fit_input, fit_degree, fit_mu, fit_method, fit_radial, fit_angular, fit_out,
                           out);
        }
        err << "no subcommand selected\n";
        return kExitBadArguments;
    } catch (const NodeCoverageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUnderdetermined;
    } catch (const UnderdeterminedError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUnderdetermined;
    } catch (const std::ios_base::failure& e) {
        err << "error: " << e.what() << "\n";
        return kExitIoError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const ModeError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadArguments;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadArguments;
    }
}

}  // namespace diskpoly
