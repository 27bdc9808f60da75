// Command-line front end: norm profiles, counting censuses, verification
// scenarios, and partition queries with reproducible machine-readable output.
//
// Exit codes: 0 success with all assertions passing, 1 assertion failure or
// computational error, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tensorshift/budget.hpp"
#include "tensorshift/io.hpp"
#include "tensorshift/verify.hpp"

namespace ts = tensorshift;
using ts::io::json;

namespace {

struct CommonOpts {
    std::string weights = "const:1";
    std::string exponents = "1,-1";
    std::string symmetry = "sym";
    int k_max = 40;
    double epsilon = 0.1;
    double tol = 1e-10;
    int max_iter = 10000;
    std::uint64_t seed = 12345;
    std::string format;  // per-command default
    std::string output;  // empty = stdout
    std::string golden;  // empty = no baseline handling
};

ts::Symmetry parse_symmetry(const std::string& s) {
    if (s == "sym") return ts::Symmetry::Symmetric;
    if (s == "antisym") return ts::Symmetry::Antisymmetric;
    throw ts::SpecParseError("symmetry must be 'sym' or 'antisym', got '" + s + "'", s);
}

void emit(const CommonOpts& opts, const std::string& text) {
    if (opts.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + opts.output);
    out << text;
}

json config_echo(const CommonOpts& opts, const std::string& subcommand) {
    json cfg;
    cfg["subcommand"] = subcommand;
    cfg["weights"] = opts.weights;
    cfg["exponents"] = opts.exponents;
    cfg["symmetry"] = opts.symmetry;
    cfg["k_max"] = opts.k_max;
    cfg["epsilon"] = opts.epsilon;
    cfg["tol"] = opts.tol;
    cfg["max_iter"] = opts.max_iter;
    cfg["seed"] = opts.seed;
    return cfg;
}

int finish_report(const CommonOpts& opts, const std::string& subcommand,
                  ts::VerificationReport report) {
    if (!opts.golden.empty()) {
        const auto result = ts::io::golden_check(opts.golden, subcommand, report.quantities);
        report.add_assertion("golden_baseline", result.matched, result.matched ? 1.0 : 0.0, 1.0,
                             result.detail);
    }
    json doc;
    doc["config"] = config_echo(opts, subcommand);
    doc["report"] = ts::io::to_json(report);
    emit(opts, ts::io::to_string(doc));
    return report.all_passed() ? 0 : 1;
}

void add_common_flags(CLI::App* cmd, CommonOpts& opts, const std::string& default_format) {
    opts.format = default_format;
    cmd->add_option("--weights", opts.weights, "weightspec: const:R | prefix:R,..;tail:R | bergman | file:PATH");
    cmd->add_option("--tol", opts.tol, "singular value tolerance");
    cmd->add_option("--max-iter", opts.max_iter, "power iteration cap");
    cmd->add_option("--format", opts.format, "output format: text (JSON) or csv")
        ->check(CLI::IsMember({"text", "csv"}));
    cmd->add_option("--output", opts.output, "write output to this file instead of stdout");
    cmd->add_option("--golden", opts.golden, "directory for regression baselines");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetric/antisymmetric tensor products of weighted shifts"};
    app.require_subcommand(1);

    if (const char* budget = std::getenv("TENSORSHIFT_BUDGET")) {
        try {
            ts::set_enumeration_budget(std::stoll(budget));
        } catch (const std::exception&) {
            std::cerr << "error: TENSORSHIFT_BUDGET must be a positive integer, got '" << budget
                      << "'\n";
            return 2;
        }
    }

    CommonOpts opts;
    int k_min = 0;
    bool antisym_census = false;
    int offset_d = 1;
    double margin = 0.01;
    double slack = 0.05;
    std::string candidates = "1,-1;1,1;2,-2;1,-2";
    std::string mode;
    std::string probes = "0,5,9";
    int trials = 1000;
    int random_probes = 10;
    int part_k = 0, part_n = 1;

    CLI::App* profile = app.add_subcommand("profile", "per-degree block norms");
    add_common_flags(profile, opts, "csv");
    profile->add_option("--exponents", opts.exponents, "comma-separated signed powers");
    profile->add_option("--symmetry", opts.symmetry, "sym | antisym");
    profile->add_option("--kmax", opts.k_max, "largest source degree");

    CLI::App* census_cmd = app.add_subcommand("census", "per-degree counting report");
    add_common_flags(census_cmd, opts, "csv");
    census_cmd->add_option("--exponents", opts.exponents);
    census_cmd->add_option("--kmin", k_min, "first source degree");
    census_cmd->add_option("--kmax", opts.k_max, "last source degree");
    census_cmd->add_option("--epsilon", opts.epsilon, "window-min threshold, in (0,1)");
    census_cmd->add_flag("--antisym", antisym_census, "strictly increasing family");
    census_cmd->add_option("--d", offset_d, "offset of the strictly increasing family");

    CLI::App* verify_cmd = app.add_subcommand("verify", "norm identity experiment");
    add_common_flags(verify_cmd, opts, "text");
    verify_cmd->add_option("--exponents", opts.exponents);
    verify_cmd->add_option("--symmetry", opts.symmetry);
    verify_cmd->add_option("--kmax", opts.k_max);
    verify_cmd->add_option("--slack", slack, "fraction of the prediction the profile may miss");

    CLI::App* gap_cmd = app.add_subcommand("gap", "converse witness search for non-regular weights");
    add_common_flags(gap_cmd, opts, "text");
    gap_cmd->add_option("--candidates", candidates,
                        "semicolon-separated exponent lists, e.g. '1,-1;2,-2'");
    gap_cmd->add_option("--symmetry", opts.symmetry);
    gap_cmd->add_option("--kmax", opts.k_max);
    gap_cmd->add_option("--margin", margin, "required relative gap");

    CLI::App* lower = app.add_subcommand("lower-bound", "1/sqrt(n!) lower bounds");
    add_common_flags(lower, opts, "text");
    lower->add_option("mode", mode, "vectors | operators")
        ->required()
        ->check(CLI::IsMember({"vectors", "operators"}));
    lower->add_option("--exponents", opts.exponents);
    lower->add_option("--trials", trials, "random vector instances");
    lower->add_option("--probes", probes, "comma-separated basis probe degrees");
    lower->add_option("--random-probes", random_probes);
    lower->add_option("--seed", opts.seed);

    CLI::App* lemmas = app.add_subcommand("lemmas", "combinatorial counting checks");
    add_common_flags(lemmas, opts, "text");
    lemmas->add_option("--kmax", opts.k_max);
    lemmas->add_option("--epsilon", opts.epsilon);

    CLI::App* partition = app.add_subcommand("partition", "partition counts P and Q");
    add_common_flags(partition, opts, "text");
    partition->add_option("--k", part_k, "total")->required();
    partition->add_option("--n", part_n, "number of parts")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (profile->parsed()) {
            const auto w = ts::parse_weightspec(opts.weights);
            const ts::ExponentTuple l(ts::parse_exponent_list(opts.exponents));
            ts::SvOptions sv;
            sv.tol = opts.tol;
            sv.max_iter = opts.max_iter;
            const auto p = ts::norm_profile(w, l, parse_symmetry(opts.symmetry), opts.k_max, sv);
            if (opts.format == "csv") {
                emit(opts, ts::io::to_csv(p));
            } else {
                json doc;
                doc["config"] = config_echo(opts, "profile");
                doc["profile"] = ts::io::to_json(p);
                emit(opts, ts::io::to_string(doc));
            }
            if (!opts.golden.empty()) {
                std::vector<std::pair<std::string, double>> q{{"max_norm", p.max_norm}};
                const auto result = ts::io::golden_check(opts.golden, "profile", q);
                if (!result.matched) {
                    std::cerr << "golden mismatch: " << result.detail << "\n";
                    return 1;
                }
            }
            return 0;
        }
        if (census_cmd->parsed()) {
            const auto w = ts::parse_weightspec(opts.weights);
            const ts::ExponentTuple l(ts::parse_exponent_list(opts.exponents));
            const auto report =
                antisym_census
                    ? ts::census_antisym(l.size(), l, offset_d, k_min, opts.k_max, opts.epsilon, w)
                    : ts::census(l.size(), l, k_min, opts.k_max, opts.epsilon, w);
            if (opts.format == "csv") {
                emit(opts, ts::io::to_csv(report));
            } else {
                json doc;
                doc["config"] = config_echo(opts, "census");
                doc["census"] = ts::io::to_json(report);
                emit(opts, ts::io::to_string(doc));
            }
            return 0;
        }
        if (verify_cmd->parsed()) {
            const auto w = ts::parse_weightspec(opts.weights);
            const ts::ExponentTuple l(ts::parse_exponent_list(opts.exponents));
            ts::VerifyOptions vo;
            vo.tol = opts.tol;
            vo.max_iter = opts.max_iter;
            vo.lower_slack = slack;
            auto report =
                ts::verify_norm_identity(w, l, parse_symmetry(opts.symmetry), opts.k_max, vo);
            return finish_report(opts, "verify", std::move(report));
        }
        if (gap_cmd->parsed()) {
            const auto w = ts::parse_weightspec(opts.weights);
            std::vector<ts::ExponentTuple> cand;
            std::stringstream ss(candidates);
            std::string item;
            while (std::getline(ss, item, ';')) {
                cand.emplace_back(ts::parse_exponent_list(item));
            }
            ts::VerifyOptions vo;
            vo.tol = opts.tol;
            vo.max_iter = opts.max_iter;
            auto report =
                ts::find_gap(w, cand, parse_symmetry(opts.symmetry), opts.k_max, margin, vo);
            return finish_report(opts, "gap", std::move(report));
        }
        if (lower->parsed()) {
            if (mode == "vectors") {
                // Fixed instances: the orthogonal pair and the repeated vector.
                const std::vector<std::vector<std::vector<double>>> fixed = {
                    {{1.0}, {0.0, 1.0}},
                    {{1.0}, {1.0}},
                };
                auto report = ts::lower_bound_vectors(fixed, trials, opts.seed);
                return finish_report(opts, "lower-bound-vectors", std::move(report));
            }
            const auto w = ts::parse_weightspec(opts.weights);
            const ts::ExponentTuple l(ts::parse_exponent_list(opts.exponents));
            std::vector<int> degrees;
            for (int v : ts::parse_exponent_list(probes)) degrees.push_back(v);
            auto report = ts::lower_bound_operators(w, l, degrees, opts.seed, random_probes);
            return finish_report(opts, "lower-bound-operators", std::move(report));
        }
        if (lemmas->parsed()) {
            const std::vector<ts::ExponentTuple> l_list = {
                ts::ExponentTuple({1, -1}),
                ts::ExponentTuple({1, 1}),
                ts::ExponentTuple({1, 1, -1}),
            };
            const std::vector<ts::WeightSequence> w_list = {
                ts::parse_weightspec(opts.weights),
                ts::WeightSequence::eventually_constant({0.5}, 1.0),
            };
            auto report = ts::run_lemma_suite(3, opts.k_max, l_list, w_list, {opts.epsilon});
            return finish_report(opts, "lemmas", std::move(report));
        }
        if (partition->parsed()) {
            const long long p = ts::partition_count(part_k, part_n);
            const long long q = ts::composition_count(part_k, part_n);
            if (opts.format == "csv") {
                emit(opts, "k,n,P,Q\n" + std::to_string(part_k) + ',' + std::to_string(part_n) +
                               ',' + std::to_string(p) + ',' + std::to_string(q) + '\n');
            } else {
                json doc;
                doc["type"] = "partition";
                doc["k"] = part_k;
                doc["n"] = part_n;
                doc["P"] = p;
                doc["Q"] = q;
                emit(opts, ts::io::to_string(doc));
            }
            return 0;
        }
    } catch (const ts::SpecParseError& e) {
        std::cerr << "error: " << e.what() << " (offending token: '" << e.token() << "')\n";
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
