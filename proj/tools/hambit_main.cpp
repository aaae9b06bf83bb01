// Command-line front end: construct codes and bitrades, verify pair files
// against each defining condition, project pairs, search for bitrades, and
// report parameter feasibility.
//
// Exit codes: 0 success/pass/found/feasible; 1 fail/none-found/infeasible;
// 2 usage error; 3 parse error; 4 degenerate input; 5 incomplete search.

#include <CLI11.hpp>

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hambit/io.hpp"
#include "hambit/search.hpp"

namespace {

using namespace hambit;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitDegenerate = 4;
constexpr int kExitIncomplete = 5;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        io::write_file(out_path, text);
}

int run_check(const std::string& file, const std::string& definition, const std::string& report_path) {
    const io::BitradeDoc doc = io::parse_bitrade_file(file);

    std::vector<Verdict> verdicts;
    std::optional<bool> agreement;
    if (definition == "all") {
        CheckReport report = check_all(doc.params, doc.pair);
        verdicts = std::move(report.verdicts);
        agreement = report.agreement;
        if (!report.agreement)
            std::cerr << "internal error: the five checkers disagree; this contradicts their "
                         "equivalence and indicates an implementation bug\n";
    } else {
        const auto def = definition_from_name(definition);
        if (!def) throw param_error("unknown definition: " + definition);
        switch (*def) {
            case Definition::perfect: verdicts.push_back(check_perfect(doc.params, doc.pair)); break;
            case Definition::matrix: verdicts.push_back(check_matrix(doc.params, doc.pair)); break;
            case Definition::projection: verdicts.push_back(check_projection(doc.params, doc.pair)); break;
            case Definition::weight: verdicts.push_back(check_weight(doc.params, doc.pair)); break;
            case Definition::spectral: verdicts.push_back(check_spectral(doc.params, doc.pair)); break;
            case Definition::cylinder: verdicts.push_back(check_cylinder(doc.params, doc.pair)); break;
        }
    }

    const std::string report = io::render_report(doc.params, doc.pair, verdicts, agreement);
    std::cout << report;
    if (!report_path.empty()) io::write_file(report_path, report);

    bool any_fail = false, any_degenerate = false;
    for (const Verdict& v : verdicts) {
        any_fail |= v.status == Status::fail;
        any_degenerate |= v.status == Status::degenerate;
    }
    if (any_fail) return kExitFail;
    if (any_degenerate) return kExitDegenerate;
    return kExitPass;
}

int run_construct_code(int q, const std::string& out_path) {
    const LinearCode code = extended_perfect_code(q);
    emit(io::serialize_code(code.params, code.words), out_path);
    return kExitPass;
}

int run_construct_bitrade(int q, const std::string& shift, const std::string& out_path) {
    const auto at = shift.find('@');
    if (at == std::string::npos) throw param_error("--shift expects <a>@<i>");
    int a = 0, i = 0;
    try {
        a = std::stoi(shift.substr(0, at));
        i = std::stoi(shift.substr(at + 1));
    } catch (const std::exception&) {
        throw param_error("--shift expects <a>@<i> with integer a and i");
    }

    const LinearCode code = extended_perfect_code(q);
    const Field field(q);
    const Vertex v = Vertex::unit(code.params, i, a);
    const SignedPair pair = difference_pair(code.words, translate(code.words, v, field));
    if (pair.empty())
        std::cerr << "warning: shift 0@" << i << " yields the empty difference pair\n";
    emit(io::serialize_bitrade(code.params, pair), out_path);
    return kExitPass;
}

int run_project(const std::string& file, int coord, const std::string& out_path) {
    const io::BitradeDoc doc = io::parse_bitrade_file(file);
    const SignedPair projected = project_pair(doc.params, doc.pair, coord);
    const Params below(doc.params.n - 1, doc.params.q);
    emit(io::serialize_bitrade(below, projected), out_path);
    return kExitPass;
}

int run_search(int n, int q, const std::string& mode, unsigned max_support, double budget_sec,
               bool fix_seed, const std::string& restrict_file, const std::string& out_dir) {
    SearchConfig cfg{Params(n, q)};
    cfg.mode = (mode == "brute") ? SearchConfig::Mode::brute : SearchConfig::Mode::backtrack;
    if (max_support > 0) cfg.max_support = max_support;
    if (budget_sec > 0) cfg.budget_seconds = budget_sec;
    cfg.fix_seed_vertex = fix_seed;
    if (!restrict_file.empty()) {
        const io::BitradeDoc doc = io::parse_bitrade_file(restrict_file);
        if (doc.params != cfg.params) throw param_error("restriction file parameters do not match");
        VertexSet region = doc.pair.plus;
        for (const Vertex& v : doc.pair.minus) region.insert(v);
        cfg.restrict_support = std::move(region);
    }

    SearchResult result;
    if (cfg.mode == SearchConfig::Mode::brute) {
        result.pairs = brute_force_enumerate(cfg.params);
        result.complete = true;
    } else {
        result = backtrack_search(cfg);
    }

    std::cout << "n: " << n << "\nq: " << q << "\nmode: " << mode << "\nfound: " << result.pairs.size()
              << "\ncomplete: " << (result.complete ? "true" : "false") << "\n";
    if (!result.note.empty()) std::cout << "note: " << result.note << "\n";

    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (size_t k = 0; k < result.pairs.size(); ++k) {
            std::ostringstream name;
            name << "bitrade_" << std::setw(4) << std::setfill('0') << k << ".bitrade";
            io::write_file((std::filesystem::path(out_dir) / name.str()).string(),
                           io::serialize_bitrade(cfg.params, result.pairs[k]));
        }
    } else {
        for (size_t k = 0; k < result.pairs.size(); ++k) {
            std::cout << "# bitrade " << k << "\n"
                      << io::serialize_bitrade(cfg.params, result.pairs[k]);
        }
    }

    if (!result.complete) return kExitIncomplete;
    return result.pairs.empty() ? kExitFail : kExitPass;
}

int run_params(int n, int q) {
    const Feasibility feas = feasible_params(n, q);
    std::cout << "n: " << n << "\nq: " << q << "\nfeasible: " << (feas.ok ? "true" : "false") << "\n";
    if (!feas.ok) std::cout << "reason: " << feas.reason << "\n";
    const auto idx = eigen_index_for(Params(n, q), q - 2);
    if (idx) std::cout << "l: " << idx->i << "\n";
    return feas.ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction, verification, and search for extended 1-perfect "
                 "bitrades in Hamming graphs H(n,q)"};
    app.require_subcommand(1);

    // check
    std::string check_file, check_definition = "all", check_report;
    auto* check = app.add_subcommand("check", "verify a bitrade file against the defining conditions");
    check->add_option("file", check_file, "bitrade file")->required();
    check->add_option("--definition", check_definition, "matrix|projection|weight|spectral|cylinder|perfect|all")
        ->check(CLI::IsMember({"matrix", "projection", "weight", "spectral", "cylinder", "perfect", "all"}));
    check->add_option("--report", check_report, "also write the report to this path");

    // construct
    auto* construct = app.add_subcommand("construct", "emit code / difference-pair files");
    construct->require_subcommand(1);
    int cc_q = 0;
    std::string cc_out;
    auto* code_cmd = construct->add_subcommand("extended-code", "the [q+2, q-1, 4] code, q = 2^k");
    code_cmd->add_option("--q", cc_q, "field order 2^k")->required();
    code_cmd->add_option("-o,--output", cc_out, "output path (default stdout)");
    int cb_q = 0;
    std::string cb_shift, cb_out;
    auto* bitrade_cmd = construct->add_subcommand("bitrade", "difference pair of the code and a translate");
    bitrade_cmd->add_option("--q", cb_q, "field order 2^k")->required();
    bitrade_cmd->add_option("--shift", cb_shift, "translate by e^a_i, written <a>@<i>")->required();
    bitrade_cmd->add_option("-o,--output", cb_out, "output path (default stdout)");

    // project
    std::string pj_file, pj_out;
    int pj_coord = 0;
    auto* project = app.add_subcommand("project", "write the i-projection of a pair");
    project->add_option("file", pj_file, "bitrade file")->required();
    project->add_option("--coord", pj_coord, "coordinate to delete (1-based)")->required();
    project->add_option("-o,--output", pj_out, "output path (default stdout)");

    // search
    int se_n = 0, se_q = 0;
    std::string se_mode = "backtrack", se_out, se_restrict;
    unsigned se_max_support = 0;
    double se_budget = 0;
    bool se_fix_seed = false;
    auto* search = app.add_subcommand("search", "enumerate bitrades in H(n,q)");
    search->add_option("--n", se_n, "word length")->required();
    search->add_option("--q", se_q, "alphabet size")->required();
    search->add_option("--mode", se_mode, "brute|backtrack")->check(CLI::IsMember({"brute", "backtrack"}));
    search->add_option("--max-support", se_max_support, "cap on |T+| + |T-|");
    search->add_option("--budget-sec", se_budget, "wall-clock budget in seconds");
    search->add_flag("--fix-seed", se_fix_seed, "emit only pairs with the zero word in T+");
    search->add_option("--restrict", se_restrict, "bitrade file whose words bound the search region");
    search->add_option("-o,--output", se_out, "directory for found pairs (default stdout)");

    // params
    int pa_n = 0, pa_q = 0;
    auto* params_cmd = app.add_subcommand("params", "feasibility and the q-2 eigen index");
    params_cmd->add_option("--n", pa_n, "word length")->required();
    params_cmd->add_option("--q", pa_q, "alphabet size")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*check) return run_check(check_file, check_definition, check_report);
        if (*code_cmd) return run_construct_code(cc_q, cc_out);
        if (*bitrade_cmd) return run_construct_bitrade(cb_q, cb_shift, cb_out);
        if (*project) return run_project(pj_file, pj_coord, pj_out);
        if (*search)
            return run_search(se_n, se_q, se_mode, se_max_support, se_budget, se_fix_seed,
                              se_restrict, se_out);
        if (*params_cmd) return run_params(pa_n, pa_q);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const param_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
