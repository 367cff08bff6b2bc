// Command-line front end: inclusion checks, membership tests, bounded
// enumeration, grammar simplification and the differential fuzzer.
//
// Exit status: 0 inclusion holds / operation succeeded, 1 inclusion refuted
// or property false, 2 usage or input error, 3 fuel exhausted.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rtg/dartzobel.hpp"
#include "rtg/grammar.hpp"
#include "rtg/harness.hpp"
#include "rtg/semantics.hpp"
#include "rtg/tdsubset.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;
constexpr int kFuel = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

rtg::Grammar load_grammar(const std::string& path) {
    return rtg::simplify(rtg::parse_grammar(read_file(path)));
}

struct CheckArgs {
    std::string algo = "dz";
    std::string file;
    std::string tau1;
    std::string tau2;
    rtg::Depth depth = 6;
    long long fuel = 1'000'000;
    std::string trace_path;
    bool json = false;
    bool strict = false;
};

void print_check_json(const std::string& algo, const nlohmann::json& result,
        const std::optional<std::string>& witness) {
    nlohmann::ordered_json j;
    j["result"] = result;
    j["witness"] = witness ? nlohmann::ordered_json(*witness) : nlohmann::ordered_json(nullptr);
    j["algo"] = algo;
    std::cout << j.dump() << '\n';
}

int run_check(const CheckArgs& args) {
    rtg::Grammar g = load_grammar(args.file);
    rtg::Term tau1 = rtg::parse_term(g, args.tau1);
    rtg::Term tau2 = rtg::parse_term(g, args.tau2);

    if (args.algo == "dz" || args.algo == "td") {
        std::ofstream trace_file;
        rtg::SubsetOptions options;
        options.fuel = args.fuel;
        if (!args.trace_path.empty()) {
            trace_file.open(args.trace_path);
            if (!trace_file) throw std::runtime_error("cannot open '" + args.trace_path + "'");
            options.trace = &trace_file;
        }
        bool holds = args.algo == "dz" ? rtg::dz_subset(g, tau1, tau2, options)
                                       : rtg::td_subset(g, tau1, tau2, options);
        if (args.json) {
            print_check_json(args.algo, holds, std::nullopt);
        } else {
            std::cout << (holds ? "true" : "false") << '\n';
        }
        return holds ? kOk : kRefuted;
    }

    // bounded refutation search: a witness refutes, no witness is inconclusive
    std::optional<rtg::GroundTerm> witness = args.algo == "oracle"
            ? rtg::find_regular_counterexample(g, tau1, tau2, args.depth)
            : rtg::find_td_counterexample(g, tau1, tau2, args.depth);
    if (witness) {
        if (args.json) {
            print_check_json(args.algo, false, witness->str());
        } else {
            std::cout << "false\nwitness: " << witness->str() << '\n';
        }
        return kRefuted;
    }
    if (args.json) {
        print_check_json(args.algo, "inconclusive", std::nullopt);
    } else {
        std::cout << "inconclusive\n";
    }
    return args.strict ? kUsage : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"regular term grammar toolkit"};
    app.require_subcommand(1);

    CheckArgs check_args;
    CLI::App* check = app.add_subcommand("check", "decide inclusion of two type terms");
    check->add_option("--algo", check_args.algo, "dz, td, oracle or td-oracle")
            ->check(CLI::IsMember({"dz", "td", "oracle", "td-oracle"}))
            ->capture_default_str();
    check->add_option("--depth", check_args.depth, "oracle search depth")->capture_default_str();
    check->add_option("--fuel", check_args.fuel, "checker step budget")->capture_default_str();
    check->add_option("--trace", check_args.trace_path, "write a dispatch trace to this file");
    check->add_flag("--json", check_args.json, "machine-readable output");
    check->add_flag("--strict", check_args.strict, "treat an inconclusive oracle as an error");
    check->add_option("file", check_args.file, "grammar file")->required();
    check->add_option("tau1", check_args.tau1, "candidate subtype")->required();
    check->add_option("tau2", check_args.tau2, "candidate supertype")->required();

    std::string member_file, member_term, member_tau;
    bool member_td_flag = false;
    CLI::App* member_cmd = app.add_subcommand("member", "test ground-term membership");
    member_cmd->add_flag("--td", member_td_flag, "against the tuple-distributive closure");
    member_cmd->add_option("file", member_file, "grammar file")->required();
    member_cmd->add_option("term", member_term, "ground term")->required();
    member_cmd->add_option("tau", member_tau, "type term")->required();

    std::string enum_file, enum_tau;
    rtg::Depth enum_depth = 6;
    CLI::App* enum_cmd = app.add_subcommand("enum", "list language members up to a depth");
    enum_cmd->add_option("--depth", enum_depth, "depth bound")->capture_default_str();
    enum_cmd->add_option("file", enum_file, "grammar file")->required();
    enum_cmd->add_option("tau", enum_tau, "type term")->required();

    std::string simplify_file, simplify_root;
    CLI::App* simplify_cmd = app.add_subcommand("simplify", "print the canonical simplified grammar");
    simplify_cmd->add_option("--root", simplify_root, "fail if this symbol becomes empty");
    simplify_cmd->add_option("file", simplify_file, "grammar file")->required();

    rtg::GenConfig fuzz_cfg;
    int fuzz_trials = 100;
    rtg::Depth fuzz_depth = 6;
    std::string fuzz_out;
    CLI::App* fuzz = app.add_subcommand("fuzz", "run differential trials, one JSON line each");
    fuzz->add_option("--seed", fuzz_cfg.seed, "base seed")->capture_default_str();
    fuzz->add_option("--trials", fuzz_trials, "number of trials")->capture_default_str();
    fuzz->add_option("--depth", fuzz_depth, "oracle search depth")->capture_default_str();
    fuzz->add_option("--out", fuzz_out, "report file (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return run_check(check_args);

        if (member_cmd->parsed()) {
            rtg::Grammar g = load_grammar(member_file);
            rtg::Term term = rtg::parse_term(g, member_term);
            auto ground = rtg::to_ground(term);
            if (!ground) throw rtg::ParseError(0, "'" + member_term + "' is not a ground term");
            rtg::Term tau = rtg::parse_term(g, member_tau);
            bool holds = member_td_flag ? rtg::member_td(g, *ground, {tau})
                                        : rtg::member(g, *ground, tau);
            std::cout << (holds ? "true" : "false") << '\n';
            return holds ? kOk : kRefuted;
        }

        if (enum_cmd->parsed()) {
            rtg::Grammar g = load_grammar(enum_file);
            rtg::Term tau = rtg::parse_term(g, enum_tau);
            for (const rtg::GroundTerm& t : rtg::enumerate(g, tau, enum_depth))
                std::cout << t.str() << '\n';
            return kOk;
        }

        if (simplify_cmd->parsed()) {
            rtg::Grammar g = rtg::parse_grammar(read_file(simplify_file));
            std::cout << rtg::render(simplify_root.empty() ? rtg::simplify(g)
                                                           : rtg::simplify(g, simplify_root));
            return kOk;
        }

        if (fuzz->parsed()) {
            std::vector<rtg::TrialReport> reports =
                    rtg::run_trials(fuzz_cfg, fuzz_trials, fuzz_depth);
            std::ofstream out_file;
            std::ostream* out = &std::cout;
            if (!fuzz_out.empty()) {
                out_file.open(fuzz_out);
                if (!out_file) throw std::runtime_error("cannot open '" + fuzz_out + "'");
                out = &out_file;
            }
            int mismatches = 0;
            int fuel_exhausted = 0;
            for (const rtg::TrialReport& r : reports) {
                *out << rtg::to_jsonl(r) << '\n';
                mismatches += r.label == rtg::TrialLabel::DzTdMismatch;
                fuel_exhausted += r.label == rtg::TrialLabel::FuelExhausted;
            }
            std::cerr << "trials=" << reports.size() << " mismatches=" << mismatches
                      << " fuel-exhausted=" << fuel_exhausted << '\n';
            if (fuel_exhausted > 0) return kFuel;
            return mismatches > 0 ? kRefuted : kOk;
        }
    } catch (const rtg::FuelExhaustedError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFuel;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
