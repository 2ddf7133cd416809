// qecc-lab: command-line front end for the error-correction laboratory.
//
//   simulate  run one encode -> error -> [correct] -> decode pipeline
//   tables    emit every syndrome/correction/residual table as CSV or JSON
//   doubles   sweep a code's double-error universe and report the tally
//   curves    emit the average-fidelity curves over a probability grid
//   verify    run the cross-oracle verification suite

#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qecc/codes.hpp"
#include "qecc/tables.hpp"
#include "qecc/verify.hpp"

namespace {

using namespace qecc;

constexpr int kExitBadErrorSpec = 2;
constexpr int kExitInternal = 3;
constexpr int kExitIo = 4;

struct ErrorSpecText {
    std::string text = "none";
    int qubit = 1;
    std::string y_convention = "paper";
};

YConvention parse_convention(const std::string& text) {
    if (text == "paper") return YConvention::paper_minus_iY;
    if (text == "standard") return YConvention::standard_Y;
    throw std::invalid_argument("y-convention must be 'paper' or 'standard'");
}

ErrorSpec parse_error_spec(const CodeSpec& code, const ErrorSpecText& spec) {
    if (spec.text == "none" || spec.text.empty()) return ErrorSpec::none(code.n);
    YConvention conv = parse_convention(spec.y_convention);
    if (spec.text.rfind("c:", 0) == 0) {
        std::vector<double> coeff;
        std::string body = spec.text.substr(2);
        std::size_t pos = 0;
        while (pos != std::string::npos) {
            std::size_t comma = body.find(',', pos);
            std::string tok = body.substr(pos, comma == std::string::npos
                                                   ? std::string::npos
                                                   : comma - pos);
            coeff.push_back(std::stod(tok));
            pos = comma == std::string::npos ? comma : comma + 1;
        }
        if (coeff.size() != 4)
            throw std::invalid_argument("c: spec needs four coefficients co,cx,cy,cz");
        ArbitraryError arb{cplx{coeff[0], 0}, cplx{coeff[1], 0}, cplx{coeff[2], 0},
                           cplx{coeff[3], 0}, spec.qubit, conv};
        arb.validate();
        return ErrorSpec::from_arbitrary(arb);
    }
    PauliString p = parse_pauli(code.n, spec.text);
    if (conv == YConvention::paper_minus_iY) {
        int y_letters = 0;
        for (char c : spec.text)
            if (c == 'Y' || c == 'y') ++y_letters;
        p.phase_exp = (p.phase_exp + 2 * y_letters) & 3;
    }
    return ErrorSpec::from_pauli(p);
}

Policy parse_policy(const std::string& text) {
    if (text == "correct" || text == "correct-then-decode")
        return Policy::correct_then_decode;
    if (text == "decode-only") return Policy::decode_only;
    throw std::invalid_argument("policy must be 'correct' or 'decode-only'");
}

QuadratureGrid parse_grid(const std::string& text) {
    std::size_t x = text.find('x');
    if (x == std::string::npos) throw std::invalid_argument("grid must look like 64x128");
    return {std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
}

std::vector<double> parse_pgrid_text(const std::string& text) {
    std::size_t c1 = text.find(':');
    std::size_t c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::invalid_argument("pgrid must look like START:STOP:STEPS");
    return parse_p_grid(std::stod(text.substr(0, c1)),
                        std::stod(text.substr(c1 + 1, c2 - c1 - 1)),
                        std::stoi(text.substr(c2 + 1)));
}

int cmd_simulate(const std::string& code_name, const ErrorSpecText& spec,
                 const std::string& policy_text, std::uint64_t seed) {
    CodeSpec code;
    ErrorSpec err;
    Policy policy;
    try {
        code = build_code(code_name);
        err = parse_error_spec(code, spec);
        policy = parse_policy(policy_text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadErrorSpec;
    }
    try {
        PipelineResult r = run_pipeline(code, err, policy, seed);
        SymbolTable symbols{{"a", probe_alpha()}, {"b", probe_beta()}};
        std::cout << "code: " << code.name << "\n";
        std::cout << "error: " << spec.text << "   policy: " << policy_text
                  << "   seed: " << seed << "\n";
        std::cout << "t1 encoded:     " << dirac_format(r.encoded, 1e-9, symbols) << "\n";
        std::cout << "t2 after error: " << dirac_format(r.after_error, 1e-9, symbols)
                  << "\n";
        std::cout << "t3 decoded:     " << dirac_format(r.decoded, 1e-9, symbols) << "\n";
        std::cout << "syndrome: "
                  << (r.syndrome.bits.empty() ? "n/a" : r.syndrome.to_string()) << "\n";
        std::cout << "correction: "
                  << (policy == Policy::correct_then_decode ? pauli_label(r.correction)
                                                            : "none")
                  << "\n";
        std::cout << "residual: " << logical_char(r.residual.logical) << "  phase: "
                  << phase_label(r.residual.global_phase) << "\n";
        std::cout << "output-error: "
                  << (r.physical_output_error ? pauli_label(*r.physical_output_error)
                                              : "n/a (superposed ancilla record)")
                  << "\n";
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.12g", r.overlap_fidelity);
        std::cout << "useful-qubit fidelity: " << buf << "\n";
        if (std::abs(r.renorm_factor - 1.0) > kTol)
            std::cout << "renormalization factor: " << r.renorm_factor << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return kExitInternal;
    }
}

std::string extension(OutputFormat f) { return f == OutputFormat::csv ? ".csv" : ".json"; }

void write_rows(const std::string& path, const std::vector<TableRow>& rows,
                OutputFormat format) {
    if (format == OutputFormat::csv) write_text_file(path, rows_to_csv(rows));
    else write_text_file(path, rows_to_json(rows).dump(2) + "\n");
}

int cmd_tables(const std::string& code_name, const std::string& out_dir,
               OutputFormat format) {
    std::vector<std::string> names =
        code_name.empty() ? known_code_names() : std::vector<std::string>{code_name};
    try {
        std::filesystem::create_directories(out_dir);
        for (const std::string& name : names) {
            CodeSpec code = build_code(name);
            for (const TableGroup& g : table_groups(code)) {
                std::string path = out_dir + "/" + g.name + extension(format);
                write_rows(path, g.rows, format);
                std::cout << "wrote " << path << " (" << g.rows.size() << " rows)\n";
            }
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadErrorSpec;
    } catch (const std::exception& e) {
        std::cerr << "output failed: " << e.what() << "\n";
        return kExitIo;
    }
}

int cmd_doubles(const std::string& code_name, const std::string& universe,
                const std::string& out_dir, OutputFormat format) {
    try {
        CodeSpec code = build_code(code_name);
        bool paper = universe == "paper";
        if (!paper && universe != "full")
            throw std::invalid_argument("universe must be 'full' or 'paper'");
        DoublesSweep sweep = doubles_sweep(code, paper);
        std::filesystem::create_directories(out_dir);
        std::string path =
            out_dir + "/" + code.name + "_doubles_" + universe + extension(format);
        write_rows(path, sweep.rows, format);
        const FNReport& rep = sweep.report;
        std::cout << "wrote " << path << " (" << sweep.rows.size() << " rows)\n";
        std::cout << "code: " << rep.code << "  universe: " << rep.universe_label
                  << "\n";
        std::cout << "N: " << rep.total << "  identity residuals x: "
                  << rep.identity_count << "\n";
        std::cout << "histogram: I:" << rep.residual_histogram.at('I')
                  << " X:" << rep.residual_histogram.at('X')
                  << " Y:" << rep.residual_histogram.at('Y')
                  << " Z:" << rep.residual_histogram.at('Z') << "\n";
        std::cout << "f = " << rep.f.to_string() << "\n";
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadErrorSpec;
    } catch (const std::exception& e) {
        std::cerr << "output failed: " << e.what() << "\n";
        return kExitIo;
    }
}

int cmd_curves(const std::string& pgrid_text, const std::string& out_dir,
               OutputFormat format) {
    try {
        std::vector<double> grid = parse_pgrid_text(pgrid_text);
        CurveSet cs = CurveSet::standard();
        std::filesystem::create_directories(out_dir);
        std::string path = out_dir + "/fidelity_curves" + extension(format);
        if (format == OutputFormat::csv) write_text_file(path, curves_to_csv(cs, grid));
        else write_text_file(path, curves_to_json(cs, grid).dump(2) + "\n");
        std::cout << "wrote " << path << " (" << grid.size() << " samples)\n";
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadErrorSpec;
    } catch (const std::exception& e) {
        std::cerr << "output failed: " << e.what() << "\n";
        return kExitIo;
    }
}

int cmd_verify(const std::string& inject_fault, const std::string& grid_text,
               const std::string& out_path) {
    VerifyOptions opt;
    opt.grid = parse_grid(grid_text);
    if (!inject_fault.empty()) {
        std::size_t colon = inject_fault.find(':');
        if (colon == std::string::npos) {
            std::cerr << "error: --inject-fault expects CODE:SYNDROME\n";
            return kExitBadErrorSpec;
        }
        opt.corrupt_code = inject_fault.substr(0, colon);
        opt.corrupt_syndrome = inject_fault.substr(colon + 1);
    }
    std::vector<CheckResult> results;
    try {
        results = run_verification(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadErrorSpec;
    }
    for (const CheckResult& r : results)
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " - " << r.detail << "\n";
    if (!out_path.empty()) {
        nlohmann::json j = nlohmann::json::array();
        for (const CheckResult& r : results)
            j.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        try {
            write_text_file(out_path, j.dump(2) + "\n");
        } catch (const std::exception& e) {
            std::cerr << "output failed: " << e.what() << "\n";
            return kExitIo;
        }
    }
    return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum error-correction laboratory"};
    app.require_subcommand(1);

    std::string code_name, policy_text = "correct", format_text = "csv";
    std::string out_path = ".", pgrid_text = "0:1:101", grid_text = "64x128";
    std::string universe = "full", inject_fault, verify_out;
    std::uint64_t seed = 0;
    ErrorSpecText spec;

    CLI::App* simulate = app.add_subcommand("simulate", "run one pipeline");
    simulate->add_option("--code", code_name, "code name")->required();
    simulate->add_option("--error", spec.text, "none, Pauli tokens, or c:co,cx,cy,cz");
    simulate->add_option("--qubit", spec.qubit, "target qubit for c: errors");
    simulate->add_option("--y-convention", spec.y_convention, "paper or standard");
    simulate->add_option("--policy", policy_text, "correct or decode-only");
    simulate->add_option("--seed", seed, "rng seed for projective measurements");

    CLI::App* tables = app.add_subcommand("tables", "emit all syndrome tables");
    tables->add_option("--code", code_name, "one code (default: all)");
    tables->add_option("--format", format_text, "csv or json");
    tables->add_option("--out", out_path, "output directory");

    CLI::App* doubles = app.add_subcommand("doubles", "double-error sweep");
    doubles->add_option("--code", code_name, "shor9, steane7 or five5")->required();
    doubles->add_option("--universe", universe, "full or paper");
    doubles->add_option("--format", format_text, "csv or json");
    doubles->add_option("--out", out_path, "output directory");

    CLI::App* curves = app.add_subcommand("curves", "average-fidelity curves");
    curves->add_option("--pgrid", pgrid_text, "START:STOP:STEPS");
    curves->add_option("--format", format_text, "csv or json");
    curves->add_option("--out", out_path, "output directory");

    CLI::App* verify = app.add_subcommand("verify", "cross-oracle verification");
    verify->add_option("--grid", grid_text, "quadrature grid, e.g. 64x128");
    verify->add_option("--inject-fault", inject_fault,
                       "test hook: corrupt CODE:SYNDROME before checking");
    verify->add_option("--out", verify_out, "write a JSON report here");

    CLI11_PARSE(app, argc, argv);

    OutputFormat format;
    if (format_text == "csv") format = OutputFormat::csv;
    else if (format_text == "json") format = OutputFormat::json;
    else {
        std::cerr << "error: format must be csv or json\n";
        return kExitBadErrorSpec;
    }

    if (simulate->parsed()) return cmd_simulate(code_name, spec, policy_text, seed);
    if (tables->parsed()) return cmd_tables(code_name, out_path, format);
    if (doubles->parsed()) return cmd_doubles(code_name, universe, out_path, format);
    if (curves->parsed()) return cmd_curves(pgrid_text, out_path, format);
    if (verify->parsed()) return cmd_verify(inject_fault, grid_text, verify_out);
    return 0;
}
