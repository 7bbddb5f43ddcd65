// vertexlab command line: evaluate vertex-operator expressions, print OPEs,
// and run the verification suites.
//
//   vertexlab eval "C(v_h, 1, v_h)" --algebra sl2-adjoint
//   vertexlab ope theta_x theta_y
//   vertexlab verify all --json
//
// Exit codes: 0 pass, 1 fail/error, 2 usage error.

#include <CLI11.hpp>

#include <iostream>

#include "vertexlab/context.hpp"
#include "vertexlab/suites.hpp"

namespace {

struct CommonOpts {
    std::string algebra = "sl2-adjoint";
    bool json = false;
};

int cmd_eval(const std::string& text, const CommonOpts& o) {
    vtx::EvalContext ctx = vtx::EvalContext::make(o.algebra);
    vtx::State s = ctx.eval(text);
    if (o.json) {
        std::cout << "{\"algebra\": \"" << o.algebra << "\", \"value\": \"" << ctx.render(s)
                  << "\"}\n";
    } else {
        std::cout << ctx.render(s) << "\n";
    }
    return 0;
}

int cmd_ope(const std::string& a_text, const std::string& b_text, const CommonOpts& o) {
    vtx::EvalContext ctx = vtx::EvalContext::make(o.algebra);
    vtx::State a = ctx.eval(a_text);
    vtx::State b = ctx.eval(b_text);
    vtx::OpeTable t = ctx.engine().ope(a, b);
    if (o.json) {
        std::cout << "{\"entries\": [";
        bool first = true;
        for (auto& [n, s] : t.entries) {
            if (!first) std::cout << ", ";
            first = false;
            std::cout << "{\"n\": " << n << ", \"value\": \"" << ctx.render(s) << "\"}";
        }
        std::cout << "]}\n";
    } else {
        std::cout << t.str() << "\n";
        for (auto& [n, s] : t.entries)
            std::cout << "  o_" << n << ": " << ctx.render(s) << "\n";
        if (t.empty()) std::cout << "  (regular OPE)\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, const vtx::SuiteParams& params, bool json) {
    vtx::VerificationReport rep = vtx::run_suite(suite, params);
    std::cout << (json ? rep.json() : rep.text());
    if (!json) std::cout.flush();
    return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact vertex-algebra calculator and verifier"};
    app.require_subcommand(1);

    CommonOpts common;
    vtx::SuiteParams params;

    std::string eval_text;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression to a state");
    eval_cmd->add_option("expr", eval_text, "expression")->required();
    eval_cmd->add_option("--algebra", common.algebra, "algebra context");
    eval_cmd->add_flag("--json", common.json, "JSON output");

    std::string ope_a, ope_b;
    auto* ope_cmd = app.add_subcommand("ope", "print the singular OPE of two states");
    ope_cmd->add_option("a", ope_a, "left operand")->required();
    ope_cmd->add_option("b", ope_b, "right operand")->required();
    ope_cmd->add_option("--algebra", common.algebra, "algebra context");
    ope_cmd->add_flag("--json", common.json, "JSON output");

    std::string suite;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", suite, "suite name or 'all'")->required();
    verify_cmd->add_option("--algebra", params.algebra, "algebra context");
    verify_cmd->add_option("--max-weight", params.max_weight, "weight bound W");
    verify_cmd->add_option("--max-degree", params.max_degree, "degree bound");
    verify_cmd->add_option("--level", params.level, "variable-level truncation N");
    verify_cmd->add_option("--max-level", params.max_level, "component level bound");
    verify_cmd->add_option("--seed", params.seed, "seed for randomized suites");
    verify_cmd->add_flag("--extended", params.extended, "larger truncations");
    verify_cmd->add_option("--cache-dir", params.cache_dir, "Grobner basis cache directory");
    verify_cmd->add_flag("--json", common.json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(eval_cmd)) return cmd_eval(eval_text, common);
        if (app.got_subcommand(ope_cmd)) return cmd_ope(ope_a, ope_b, common);
        if (app.got_subcommand(verify_cmd)) {
            bool known = false;
            for (auto& n : vtx::suite_names()) known = known || n == suite;
            if (!known) {
                std::cerr << "unknown suite '" << suite << "'; available:";
                for (auto& n : vtx::suite_names()) std::cerr << " " << n;
                std::cerr << "\n";
                return 2;
            }
            return cmd_verify(suite, params, common.json);
        }
    } catch (const vtx::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
