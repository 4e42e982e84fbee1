// vecrec — decouple systems of two coupled linear recurrences into a single
// scalar recurrence, generate and verify sequences, and explore the
// black/white piece tiling model.
//
// Exit status: 0 success, 1 a requested check failed, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "vecrec/cli.hpp"
#include "vecrec/system_json.hpp"
#include "vecrec/tiling.hpp"

namespace {

struct InputSpec {
    std::string path;      // file path or "-" for stdin
    unsigned tiling_k = 0; // when nonzero, use the built-in tiling system
};

vecrec::ParsedDocument load_document(const InputSpec& input) {
    if (input.tiling_k > 0) {
        return vecrec::ParsedDocument{vecrec::tiling_system(input.tiling_k), std::nullopt};
    }
    if (input.path.empty()) {
        throw std::invalid_argument("no input: pass a system document or --tiling K");
    }
    std::string text;
    if (input.path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream file(input.path);
        if (!file) {
            throw std::invalid_argument("cannot open input file: " + input.path);
        }
        std::ostringstream buf;
        buf << file.rdbuf();
        text = buf.str();
    }
    return vecrec::parse_system_text(text);
}

void add_input_options(CLI::App& cmd, InputSpec& input) {
    auto* file = cmd.add_option("input", input.path, "system document (JSON file, or - for stdin)");
    auto* tiling =
        cmd.add_option("--tiling", input.tiling_k, "use the built-in tiling system of size K")
            ->check(CLI::PositiveNumber);
    file->excludes(tiling);
    tiling->excludes(file);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact decoupling of two coupled higher-order linear recurrences"};
    app.require_subcommand(1);

    std::string format_name = "plain";
    const auto add_format = [&format_name](CLI::App& cmd, bool with_bfile = false) {
        std::string choices = with_bfile ? "plain, csv, json, bfile" : "plain, csv, json";
        cmd.add_option("--format", format_name, "output format: " + choices);
    };

    // decouple
    InputSpec dec_input;
    vecrec::DecoupleOptions dec_opt;
    auto* dec = app.add_subcommand("decouple", "compute the scalar recurrence coefficients");
    add_input_options(*dec, dec_input);
    dec->add_flag("--check", dec_opt.check, "also run the closed form and compare");
    dec->add_flag("--trim", dec_opt.trim, "also report the vector with trailing zeros removed");
    dec->add_flag("--emit-system", dec_opt.emit_system,
                  "embed the canonical system document (json format)");
    add_format(*dec);

    // verify
    InputSpec ver_input;
    vecrec::VerifyOptions ver_opt;
    auto* ver = app.add_subcommand("verify", "run the decoupling cross-checks");
    add_input_options(*ver, ver_input);
    ver->add_option("--horizon", ver_opt.horizon, "last sequence index to check (default: auto)");

    // gen
    InputSpec gen_input;
    vecrec::GenOptions gen_opt;
    std::string component_name = "t";
    auto* gen = app.add_subcommand("gen", "generate sequence terms from a system");
    add_input_options(*gen, gen_input);
    gen->add_option("--terms,-n", gen_opt.last_index, "last index n; emits n+1 terms");
    gen->add_option("--component", component_name, "which sequence: a, b, or t (= a + b)");
    gen->add_option("--max-terms", gen_opt.max_terms, "safety cap on generated terms");
    add_format(*gen, /*with_bfile=*/true);

    // tiling
    vecrec::TilingCmdOptions til_opt;
    auto* til = app.add_subcommand("tiling", "black/white piece tiling counts");
    til->add_option("k", til_opt.k, "maximal piece size (k >= 1)")->required();
    til->add_option("n", til_opt.n, "largest board length")->required();
    til->add_flag("--enumerate", til_opt.enumerate,
                  "cross-check against brute-force enumeration");
    add_format(*til);

    // triangle
    vecrec::TriangleOptions tri_opt;
    auto* tri = app.add_subcommand("triangle", "coefficient triangle rows k = 1..maxK");
    tri->add_option("maxK", tri_opt.max_k, "number of rows")->required();
    add_format(*tri);

    // system
    InputSpec sys_input;
    auto* sysc = app.add_subcommand("system", "emit a system document (canonical JSON)");
    add_input_options(*sysc, sys_input);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    }

    try {
        const vecrec::OutputFormat format = vecrec::parse_format(format_name);
        if (dec->parsed()) {
            dec_opt.format = format;
            return vecrec::run_decouple(load_document(dec_input).system, dec_opt, std::cout,
                                        std::cerr);
        }
        if (ver->parsed()) {
            return vecrec::run_verify(load_document(ver_input), ver_opt, std::cout, std::cerr);
        }
        if (gen->parsed()) {
            gen_opt.component = vecrec::parse_component(component_name);
            gen_opt.format = format;
            return vecrec::run_gen(load_document(gen_input).system, gen_opt, std::cout, std::cerr);
        }
        if (til->parsed()) {
            if (til_opt.k < 1) throw std::invalid_argument("k must be at least 1");
            til_opt.format = format;
            return vecrec::run_tiling(til_opt, std::cout, std::cerr);
        }
        if (tri->parsed()) {
            tri_opt.format = format;
            return vecrec::run_triangle(tri_opt, std::cout, std::cerr);
        }
        if (sysc->parsed()) {
            const vecrec::ParsedDocument doc = load_document(sys_input);
            std::cout << vecrec::system_to_json(doc.system, doc.coefficients).dump(2) << '\n';
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
