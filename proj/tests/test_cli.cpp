#include "diskpoly/cli.hpp"

#include "diskpoly/fit.hpp"
#include "diskpoly/poly_io.hpp"
#include "diskpoly/quadrature.hpp"
#include "diskpoly/zernike.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

using namespace diskpoly;
using nlohmann::json;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("diskpoly_test_" + name);
}

}  // namespace

TEST_CASE("eval at a point") {
    CHECK(run({"eval", "--k", "1", "--j", "0", "--mu", "0", "--at", "1,0"}).out == "1\n");
    CHECK(run({"eval", "--k", "1", "--j", "1", "--mu", "0", "--at", "0,0"}).out == "-1\n");
    CHECK(run({"eval", "--k", "0", "--j", "0", "--mu", "5", "--at", "0.3,0.4"}).out == "1\n");
    // exact rational point on an exact polynomial
    CHECK(run({"eval", "--k", "1", "--j", "1", "--mu", "0", "--at", "1/2,0"}).out == "-1/2\n");
}

TEST_CASE("eval error paths") {
    CHECK(run({"eval", "--k", "1", "--j", "0", "--mu", "0"}).exit_code == kExitBadArguments);
    CHECK(run({"eval", "--k", "1", "--j", "0", "--mu", "abc", "--at", "0,0"}).exit_code ==
          kExitBadArguments);
    CHECK(run({"eval", "--k", "1", "--j", "1", "--mu", "-1", "--at", "0,0"}).exit_code ==
          kExitDomainError);
    CHECK(run({"nonsense"}).exit_code == kExitBadArguments);
}

TEST_CASE("eval grid output is deterministic") {
    const CliResult first = run({"eval", "--k", "2", "--j", "1", "--mu", "1/2", "--grid", "9"});
    const CliResult second = run({"eval", "--k", "2", "--j", "1", "--mu", "1/2", "--grid", "9"});
    CHECK(first.exit_code == kExitOk);
    CHECK(first.out == second.out);
    CHECK(first.out.rfind("x,y,re,im\n", 0) == 0);
}

TEST_CASE("table emits the exact JSON schema and round-trips") {
    const CliResult result = run({"table", "--k", "1", "--j", "1", "--mu", "0"});
    CHECK(result.exit_code == kExitOk);
    CHECK(result.out ==
          "{\"mode\":\"rational\",\"terms\":[{\"a\":0,\"b\":0,\"re\":\"-1\"},{\"a\":1,\"b\":1,\"re\":\"2\"}]}\n");
    const BiPoly parsed = bipoly_from_json(json::parse(result.out));
    CHECK(parsed == zernike_q(1, 1, Scalar(Rational(0))));
}

TEST_CASE("verify families pass and write reports") {
    const auto report_path = temp_file("verify.json");
    const CliResult result = run({"verify", "--family", "Z7", "--family", "ladder1", "--kmax", "4",
                                  "--jmax", "4", "--nmax", "6", "--mu", "1/2", "--json",
                                  report_path.string()});
    CHECK(result.exit_code == kExitOk);
    std::ifstream in(report_path);
    REQUIRE(in.good());
    const json report = json::parse(in);
    CHECK(report.at("summary").at("failed").get<int>() == 0);
    CHECK(report.at("summary").at("total").get<int>() > 0);
    CHECK(report.contains("ladderZ2_variant"));
    CHECK(!report.at("ladderZ2_variant").at("evaluated").get<bool>());
    std::filesystem::remove(report_path);
}

TEST_CASE("verify records the Z2 reading resolution") {
    const auto report_path = temp_file("verify_z2.json");
    const CliResult result = run({"verify", "--family", "Z2", "--kmax", "3", "--jmax", "3", "--mu",
                                  "1/2", "--mu", "2", "--json", report_path.string()});
    CHECK(result.exit_code == kExitOk);
    std::ifstream in(report_path);
    const json report = json::parse(in);
    const json& variant = report.at("ladderZ2_variant");
    CHECK(variant.at("evaluated").get<bool>());
    CHECK(variant.at("corrected_passes_all").get<bool>());
    CHECK(variant.at("printed_passes_only_degenerate").get<bool>());
    CHECK(variant.at("adopted").get<std::string>() == "corrected");
    std::filesystem::remove(report_path);
}

TEST_CASE("negative control: corrupted operators must fail with a witness") {
    const auto report_path = temp_file("verify_defect.json");
    const CliResult result = run({"verify", "--family", "ladder2", "--family", "Z5", "--kmax", "2",
                                  "--jmax", "2", "--nmax", "3", "--mu", "-1/4", "--inject-defect",
                                  "--json", report_path.string()});
    CHECK(result.exit_code == kExitVerifyFailed);
    std::ifstream in(report_path);
    const json report = json::parse(in);
    CHECK(report.at("summary").at("failed").get<int>() > 0);
    bool witness_seen = false;
    for (const auto& entry : report.at("results")) {
        if (!entry.at("pass").get<bool>() && entry.contains("witness")) witness_seen = true;
    }
    CHECK(witness_seen);
    std::filesystem::remove(report_path);
}

TEST_CASE("quad emits the single-node rule with weight pi") {
    const CliResult result = run({"quad", "--mu", "0", "--radial", "1", "--angular", "1"});
    CHECK(result.exit_code == kExitOk);
    std::istringstream lines(result.out);
    std::string header, row, extra;
    std::getline(lines, header);
    std::getline(lines, row);
    CHECK(!std::getline(lines, extra));
    CHECK(header == "node_x,node_y,weight");
    const auto last_comma = row.rfind(',');
    CHECK(std::abs(std::stod(row.substr(last_comma + 1)) - std::numbers::pi) <= 1e-14);
}

TEST_CASE("gram diagonal pattern for the second Sobolev basis") {
    const CliResult result = run({"gram", "--which", "sobolev2", "--cap", "4", "--format", "json"});
    CHECK(result.exit_code == kExitOk);
    const json doc = json::parse(result.out);
    const auto& indices = doc.at("indices");
    const auto& matrix = doc.at("matrix");
    for (std::size_t i = 0; i < indices.size(); ++i) {
        const int k = indices[i][0].get<int>();
        const int j = indices[i][1].get<int>();
        const double expected = (k == 0 && j == 0) ? 1.0 : 4.0 / (k + j + 1);
        CHECK(std::abs(matrix[i][i][0].get<double>() - expected) <= 1e-10);
        CHECK(std::abs(matrix[i][i][1].get<double>()) <= 1e-10);
    }
}

TEST_CASE("fit round-trip through the command line") {
    const auto samples_path = temp_file("fit_samples.csv");
    {
        const BiPoly f = zernike_q(2, 1, Scalar(0.0));
        const DiskRule rule = disk_rule(0.0, 3 + 2, 4 * 3 + 5);
        std::ofstream csv(samples_path);
        csv << "x,y,re,im\n";
        csv.precision(17);
        for (const DiskNode& node : rule.nodes) {
            const std::complex<double> value = eval(f, {node.x, node.y});
            csv << node.x << "," << node.y << "," << value.real() << "," << value.imag() << "\n";
        }
    }
    const CliResult result = run({"fit", "--input", samples_path.string(), "--degree", "3", "--mu",
                                  "0", "--method", "projection"});
    CHECK(result.exit_code == kExitOk);
    const json doc = json::parse(result.out);
    CHECK(doc.at("residual_rms").get<double>() <= 1e-9);
    for (const auto& c : doc.at("coefficients")) {
        const double expected = (c.at("k").get<int>() == 2 && c.at("j").get<int>() == 1) ? 1.0 : 0.0;
        CHECK(std::abs(c.at("re").get<double>() - expected) <= 1e-9);
        CHECK(std::abs(c.at("im").get<double>()) <= 1e-9);
    }

    // the same samples through least squares agree
    const CliResult ls = run({"fit", "--input", samples_path.string(), "--degree", "3", "--mu", "0",
                              "--method", "least-squares"});
    CHECK(ls.exit_code == kExitOk);
    const json ls_doc = json::parse(ls.out);
    for (std::size_t i = 0; i < doc.at("coefficients").size(); ++i) {
        CHECK(std::abs(doc.at("coefficients")[i].at("re").get<double>() -
                       ls_doc.at("coefficients")[i].at("re").get<double>()) <= 1e-9);
    }
    std::filesystem::remove(samples_path);
}

TEST_CASE("fit error exit codes") {
    CHECK(run({"fit", "--input", "/nonexistent/samples.csv", "--degree", "2"}).exit_code ==
          kExitIoError);

    const auto outside_path = temp_file("fit_outside.csv");
    {
        std::ofstream csv(outside_path);
        csv << "x,y,re\n2,0,1\n";
    }
    CHECK(run({"fit", "--input", outside_path.string(), "--degree", "1"}).exit_code ==
          kExitDomainError);
    std::filesystem::remove(outside_path);

    const auto sparse_path = temp_file("fit_sparse.csv");
    {
        std::ofstream csv(sparse_path);
        csv << "x,y,re\n0.1,0.1,1\n0.2,0,1\n";
    }
    CHECK(run({"fit", "--input", sparse_path.string(), "--degree", "2", "--method",
               "least-squares"}).exit_code == kExitUnderdetermined);
    // projection on scattered points cannot cover the grid either
    CHECK(run({"fit", "--input", sparse_path.string(), "--degree", "2", "--method",
               "projection"}).exit_code == kExitUnderdetermined);
    std::filesystem::remove(sparse_path);
}

TEST_CASE("help exits cleanly") {
    CHECK(run({"--help"}).exit_code == kExitOk);
}
