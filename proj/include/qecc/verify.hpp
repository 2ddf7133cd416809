// Cross-oracle verification suite behind the `verify` command: syndrome
// oracle agreement, single-error recovery, decode-only output reproduction,
// quadrature constants, and the double-error fidelity fractions.

#pragma once

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "qecc/codes.hpp"
#include "qecc/errors.hpp"
#include "qecc/fidelity.hpp"
#include "qecc/reference_data.hpp"

namespace qecc {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;  // first failing case, or a summary when passing
};

struct VerifyOptions {
    // Test hook: corrupt one correction-table entry before running the
    // checks, to prove the suite catches a broken table.
    std::string corrupt_code;      // empty = no corruption
    std::string corrupt_syndrome;  // 0/1 string
    QuadratureGrid grid;
};

namespace detail {

inline void fail(CheckResult& c, const std::string& msg) {
    if (c.pass) {
        c.pass = false;
        c.detail = msg;
    }
}

}  // namespace detail

inline std::vector<CheckResult> run_verification(const VerifyOptions& opt = {}) {
    std::vector<CheckResult> results;
    std::map<std::string, CodeSpec> codes;
    for (const std::string& name : known_code_names()) codes[name] = build_code(name);

    if (!opt.corrupt_code.empty()) {
        CodeSpec& c = codes.at(opt.corrupt_code);
        Syndrome syn = Syndrome::from_string(opt.corrupt_syndrome);
        if (syn.bits.size() != c.generator_count())
            throw std::invalid_argument("corrupt syndrome has wrong length");
        PauliString& entry = c.correction_table[syn.to_index()];
        entry = multiply(entry, PauliString::single(c.n, 'X', 1));
    }

    // Correction tables: every entry's recomputed syndrome equals its key.
    {
        CheckResult c{"correction-table-consistency"};
        long long entries = 0;
        for (auto& [name, code] : codes) {
            for (std::size_t s = 0; s < code.correction_table.size(); ++s, ++entries) {
                Syndrome expect = Syndrome::from_index(s, code.generator_count());
                Syndrome got =
                    syndrome_against(code.correction_table[s], code.generators);
                if (!(got == expect))
                    detail::fail(c, name + " syndrome " + expect.to_string() +
                                        ": correction " +
                                        pauli_label(code.correction_table[s]) +
                                        " has syndrome " + got.to_string());
            }
        }
        if (c.pass) c.detail = std::to_string(entries) + " entries checked";
        results.push_back(c);
    }

    // Statevector eigenvalue syndromes agree with the commutation oracle on
    // every single error and every double error.
    {
        CheckResult c{"syndrome-oracle-agreement"};
        long long cases = 0;
        for (auto& [name, code] : codes) {
            std::vector<PauliString> errors;
            for (char kind : correctable_single_kinds(code))
                for (int q = 1; q <= code.n; ++q)
                    errors.push_back(PauliString::single(code.n, kind, q));
            if (code.n >= 5)
                for (const DoubleError& d : double_error_universe(code.n))
                    errors.push_back(d.to_pauli(code.n));
            StateVector psi = encode(code, probe_alpha(), probe_beta());
            for (const PauliString& e : errors) {
                ++cases;
                Syndrome oracle = syndrome_against(e, code.generators);
                Syndrome eigen = eigen_syndrome(code, apply_pauli(psi, e));
                if (!(oracle == eigen))
                    detail::fail(c, name + " " + pauli_label(e) + ": eigen " +
                                        eigen.to_string() + " vs oracle " +
                                        oracle.to_string());
            }
        }
        if (c.pass) c.detail = std::to_string(cases) + " errors checked";
        results.push_back(c);
    }

    // Every correctable single error is fully recovered.
    {
        CheckResult c{"single-error-recovery"};
        long long cases = 0;
        for (auto& [name, code] : codes) {
            for (char kind : correctable_single_kinds(code)) {
                for (int q = 1; q <= code.n; ++q) {
                    ++cases;
                    PipelineResult r = run_pipeline(
                        code, ErrorSpec::from_pauli(pauli_error_op(kind, q, code.n)),
                        Policy::correct_then_decode);
                    if (r.residual.logical != LogicalError::I ||
                        std::abs(r.overlap_fidelity - 1.0) > 1e-9)
                        detail::fail(c, name + " " + std::string(1, kind) +
                                            std::to_string(q) + ": residual " +
                                            std::string(1, logical_char(r.residual.logical)));
                }
            }
        }
        if (c.pass) c.detail = std::to_string(cases) + " single errors recovered";
        results.push_back(c);
    }

    // Decode-without-correction outputs of the nine-qubit code.
    {
        CheckResult c{"shor9-decode-only-outputs"};
        const CodeSpec& shor = codes.at("shor9");
        for (const auto& row : reference::shor9_decode_only_outputs()) {
            char kind = row.input[0];
            int q = row.input[1] - '0';
            PipelineResult r = run_pipeline(
                shor, ErrorSpec::from_pauli(pauli_error_op(kind, q, 9)),
                Policy::decode_only);
            std::string got =
                r.physical_output_error ? pauli_label(*r.physical_output_error) : "?";
            if (got != row.output)
                detail::fail(c, row.input + ": got " + got + ", expected " + row.output);
        }
        if (c.pass) c.detail = "27 decode-only outputs matched";
        results.push_back(c);
    }

    // Bloch-sphere quadrature reproduces the analytic averages.
    {
        CheckResult c{"quadrature-averages"};
        for (LogicalError e :
             {LogicalError::I, LogicalError::X, LogicalError::Y, LogicalError::Z}) {
            ResidualClass res{e, cplx{1, 0}};
            double expect = e == LogicalError::I ? 1.0 : 1.0 / 3.0;
            double got =
                average_residual_fidelity(res, AverageMethod::quadrature, opt.grid);
            if (std::abs(got - expect) > 1e-9)
                detail::fail(c, std::string(1, logical_char(e)) + ": quadrature " +
                                    std::to_string(got));
        }
        if (c.pass) c.detail = "I,X,Y,Z averaged on the configured grid";
        results.push_back(c);
    }

    // Double-error fidelity fractions.
    {
        CheckResult c{"double-error-fractions"};
        FNReport f9 = compute_f(codes.at("shor9"), double_error_universe(9),
                                "full-XZ-universe");
        if (f9.f != Rational(5, 6) || f9.total != 144 ||
            f9.residual_histogram.at('I') != 108 ||
            f9.residual_histogram.at('X') != 27 || f9.residual_histogram.at('Z') != 9)
            detail::fail(c, "shor9 full universe: f=" + f9.f.to_string() + " N=" +
                                std::to_string(f9.total) + " hist I:" +
                                std::to_string(f9.residual_histogram.at('I')) + " X:" +
                                std::to_string(f9.residual_histogram.at('X')) + " Z:" +
                                std::to_string(f9.residual_histogram.at('Z')));
        FNReport f7p = compute_f(codes.at("steane7"),
                                 reference::steane7_paper_doubles(), "paper-tables");
        if (f7p.f != Rational(53, 81) || f7p.total != 81)
            detail::fail(c, "steane7 paper set: f=" + f7p.f.to_string());
        FNReport f7f = compute_f(codes.at("steane7"), double_error_universe(7),
                                 "full-XZ-universe");
        if (f7f.f != Rational(2, 3) || f7f.total != 84 || f7f.identity_count != 42)
            detail::fail(c, "steane7 full universe: f=" + f7f.f.to_string());
        FNReport f5 = compute_f(codes.at("five5"), double_error_universe(5),
                                "full-XZ-universe");
        if (f5.f != Rational(1, 3) || f5.total != 40 || f5.identity_count != 0)
            detail::fail(c, "five5 full universe: f=" + f5.f.to_string());
        auto missing = reference::steane7_unlisted_doubles();
        std::string names;
        for (const DoubleError& d : missing) names += d.label() + ";";
        if (names != "X7 Z4;X7 Z5;X7 Z6;" && names != "Z4 X7;Z5 X7;Z6 X7;")
            detail::fail(c, "unexpected unlisted steane7 pairs: " + names);
        if (c.pass)
            c.detail = "f9=5/6 f7(paper)=53/81 f7(full)=2/3 f5=1/3; unlisted: " + names;
        results.push_back(c);
    }

    return results;
}

inline bool all_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace qecc
