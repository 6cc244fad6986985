// sidon — command-line front door: generate, verify, profile, and construct
// Sidon sets over Z2^n.
//
// Exit codes: 0 success/verified, 1 verification failed, 2 usage or format
// error, 3 construction failure.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sidon/bch.hpp"
#include "sidon/io.hpp"
#include "sidon/oracle.hpp"
#include "sidon/ruzsa.hpp"
#include "sidon/set.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitConstructFailed = 3;

int write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open '" << path << "' for writing\n";
        return kExitUsage;
    }
    out << contents;
    return out ? kExitOk : kExitUsage;
}

std::optional<sidon::SidonSet> load_set(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return std::nullopt;
    }
    try {
        return sidon::io::read_set(in);
    } catch (const sidon::io::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return std::nullopt;
    }
}

void print_sidon_witness(const sidon::SidonWitness& w) {
    std::cout << "witness: " << sidon::io::point_hex(w.a1) << " ^ "
              << sidon::io::point_hex(w.b1) << " == "
              << sidon::io::point_hex(w.a2) << " ^ "
              << sidon::io::point_hex(w.b2) << " == "
              << sidon::io::point_hex(w.value) << '\n';
}

int run_bch(int m, const std::string& out_path) {
    if (m % 2 != 0) {
        std::cerr << "error: m must be even\n";
        return kExitUsage;
    }
    sidon::SidonSet s;
    try {
        s = sidon::build_bch(m);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    std::ostream& meta = out_path.empty() ? std::cerr : std::cout;
    meta << "m: " << m << '\n'
         << "t: " << m / 2 << '\n'
         << "modulus: 0x" << std::hex << sidon::gf2::field_new(m / 2).modulus
         << std::dec << '\n'
         << "size: " << s.size() << '\n'
         << "sidon: " << (s.certified ? "true" : "false") << '\n';
    if (out_path.empty()) {
        sidon::io::write_set(std::cout, s);
        return kExitOk;
    }
    return write_file(out_path, sidon::io::set_to_string(s));
}

int run_verify(const std::string& in_path, bool check_maximal, int workers) {
    auto loaded = load_set(in_path);
    if (!loaded) {
        return kExitUsage;
    }
    sidon::SidonSet s = std::move(*loaded);
    if (const auto w = sidon::sidon_violation(s)) {
        std::cout << "sidon: false\n";
        print_sidon_witness(*w);
        return kExitVerifyFailed;
    }
    s.certified = true;
    std::cout << "sidon: true\n";
    if (check_maximal) {
        if (const auto x = sidon::first_uncovered(s, workers)) {
            std::cout << "maximal: false\n"
                      << "uncovered: " << sidon::io::point_hex(*x) << '\n';
            return kExitVerifyFailed;
        }
        std::cout << "maximal: true\n";
    }
    return kExitOk;
}

int run_cover(const std::string& in_path, const std::string& profile_path,
              const std::string& histogram_path, int workers) {
    auto loaded = load_set(in_path);
    if (!loaded) {
        return kExitUsage;
    }
    sidon::SidonSet s = std::move(*loaded);
    if (const auto w = sidon::sidon_violation(s)) {
        std::cout << "sidon: false\n";
        print_sidon_witness(*w);
        return kExitVerifyFailed;
    }
    s.certified = true;
    const sidon::CoverProfile prof = sidon::cover_profile(s, workers);
    if (!profile_path.empty()) {
        std::ostringstream csv;
        sidon::io::write_profile_csv(csv, prof);
        if (const int rc = write_file(profile_path, csv.str()); rc != kExitOk) {
            return rc;
        }
    }
    if (!histogram_path.empty()) {
        std::ostringstream csv;
        sidon::io::write_histogram_csv(csv, prof);
        if (const int rc = write_file(histogram_path, csv.str()); rc != kExitOk) {
            return rc;
        }
    }
    std::cout << "n: " << prof.n << '\n'
              << "size: " << s.size() << '\n'
              << "triples: " << prof.triple_total << '\n'
              << "min_cover: " << prof.min_nonmember_cover << '\n'
              << "max_cover: " << prof.max_nonmember_cover << '\n';
    return kExitOk;
}

int run_construct(const sidon::RuzsaParams& params, const std::string& out_path,
                  std::string report_path, int workers) {
    sidon::RuzsaReport report;
    try {
        report = sidon::construct_small_maximal(params, workers);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const sidon::ConstructionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConstructFailed;
    }
    if (report_path.empty()) {
        report_path = out_path + ".report.json";
    }
    const std::string report_text = sidon::io::report_to_json(report).dump(2) + "\n";
    if (const int rc = write_file(out_path, sidon::io::set_to_string(report.set));
        rc != kExitOk) {
        return rc;
    }
    if (const int rc = write_file(report_path, report_text); rc != kExitOk) {
        return rc;
    }
    std::cout << report_text;
    return report.maximal ? kExitOk : kExitConstructFailed;
}

int run_oracle_min_maximal(int n, const std::string& out_path, bool long_run) {
    const int cap = long_run ? 6 : 5;
    if (n < 1 || n > cap) {
        std::cerr << "error: min-maximal supports n in [1, " << cap
                  << "] (n=6 needs --long)\n";
        return kExitUsage;
    }
    const auto result = sidon::oracle::min_maximal_size(n);
    std::cout << "min_maximal_size: " << result.size << '\n';
    const sidon::SidonSet witness = sidon::set_from_points(n, result.witness);
    if (out_path.empty()) {
        sidon::io::write_set(std::cout, witness);
        return kExitOk;
    }
    return write_file(out_path, sidon::io::set_to_string(witness));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sidon set toolkit over Z2^n"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads,
                   "worker threads for coverage runs (default: all cores)");

    auto* bch = app.add_subcommand("bch", "build the dense {(x, x^3)} Sidon set");
    int bch_m = 0;
    std::string bch_out;
    bch->add_option("--m", bch_m, "ambient dimension (even, 2..30)")->required();
    bch->add_option("--out", bch_out, "output set file (default: stdout)");

    auto* verify = app.add_subcommand("verify", "check the Sidon property of a set file");
    std::string verify_in;
    bool verify_maximal = false;
    verify->add_option("--in", verify_in, "input set file")->required();
    verify->add_flag("--maximal", verify_maximal, "also require maximality");

    auto* cover = app.add_subcommand("cover", "exact triple-coverage profile of a set file");
    std::string cover_in, cover_profile_path, cover_histogram_path;
    cover->add_option("--in", cover_in, "input set file")->required();
    cover->add_option("--profile", cover_profile_path, "write per-point CSV here");
    cover->add_option("--histogram", cover_histogram_path, "write histogram CSV here");

    auto* construct = app.add_subcommand(
        "construct", "randomized small maximal Sidon set construction");
    sidon::RuzsaParams params;
    int construct_m = 0;
    std::string construct_out, construct_report;
    construct->add_option("--n", params.n, "ambient dimension")->required();
    construct->add_option("--T", params.T, "coverage-slack constant (default 7)");
    construct->add_option("--m", construct_m, "override the quotient dimension");
    construct->add_option("--seed", params.seed, "64-bit seed (default 0)");
    construct->add_option("--retries", params.max_attempts,
                          "max lift attempts (default 32)");
    construct->add_option("--out", construct_out, "output set file")->required();
    construct->add_option("--report", construct_report,
                          "report path (default: <out>.report.json)");

    auto* oracle = app.add_subcommand("oracle", "brute-force references");
    oracle->require_subcommand(1);
    auto* minmax = oracle->add_subcommand(
        "min-maximal", "minimum size of a maximal Sidon set, exhaustively");
    int oracle_n = 0;
    std::string oracle_out;
    bool oracle_long = false;
    minmax->add_option("--n", oracle_n, "dimension (1..5, or 6 with --long)")
        ->required();
    minmax->add_option("--out", oracle_out, "witness set file (default: stdout)");
    minmax->add_flag("--long", oracle_long, "allow the slow n=6 search");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (bch->parsed()) {
        return run_bch(bch_m, bch_out);
    }
    if (verify->parsed()) {
        return run_verify(verify_in, verify_maximal, threads);
    }
    if (cover->parsed()) {
        return run_cover(cover_in, cover_profile_path, cover_histogram_path, threads);
    }
    if (construct->parsed()) {
        if (construct->count("--m") != 0) {
            params.m_override = construct_m;
        }
        return run_construct(params, construct_out, construct_report, threads);
    }
    if (minmax->parsed()) {
        return run_oracle_min_maximal(oracle_n, oracle_out, oracle_long);
    }
    return kExitUsage;
}
