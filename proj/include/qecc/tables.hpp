// Table-row generation and file emission for the report CLI.
//
// Row schema (CSV header): code,error,syndrome,correction,residual,phase,notes
// Syndromes are 0/1 strings in the code's pinned generator order; error and
// correction labels use indexed Pauli tokens with qubits ascending.

#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qecc/codes.hpp"
#include "qecc/errors.hpp"
#include "qecc/fidelity.hpp"
#include "qecc/reference_data.hpp"

namespace qecc {

struct TableRow {
    std::string code;
    std::string error;
    std::string syndrome;
    std::string correction;
    std::string residual;
    std::string phase;
    std::string notes;
};

inline TableRow row_from_pipeline(const CodeSpec& code, const std::string& error_label,
                                  const ErrorSpec& err, Policy policy,
                                  const std::string& notes = "") {
    PipelineResult r = run_pipeline(code, err, policy);
    TableRow row;
    row.code = code.name;
    row.error = error_label;
    row.syndrome = r.syndrome.to_string();
    row.correction =
        policy == Policy::correct_then_decode ? pauli_label(r.correction) : "none";
    row.residual = std::string(1, logical_char(r.residual.logical));
    row.phase = phase_label(r.residual.global_phase);
    row.notes = notes;
    if (policy == Policy::decode_only && r.physical_output_error)
        row.notes = (notes.empty() ? "" : notes + ";") +
                    ("output=" + pauli_label(*r.physical_output_error));
    return row;
}

inline TableRow row_for_single(const CodeSpec& code, char kind, int qubit, Policy policy,
                               YConvention conv = YConvention::paper_minus_iY) {
    PauliString e = pauli_error_op(kind, qubit, code.n, conv);
    std::string label = std::string(1, kind) + std::to_string(qubit);
    return row_from_pipeline(code, label, ErrorSpec::from_pauli(e), policy);
}

inline TableRow row_for_double(const CodeSpec& code, const DoubleError& d,
                               const std::string& notes = "") {
    return row_from_pipeline(code, d.label(), ErrorSpec::from_double(d, code.n),
                             Policy::correct_then_decode, notes);
}

// One named group of rows, emitted as one output file.
struct TableGroup {
    std::string name;
    std::vector<TableRow> rows;
};

namespace detail {

inline int shor_block(int q) { return (q - 1) / 3; }

}  // namespace detail

// Every single and double error of a code, split into groups that mirror the
// published tables.
inline std::vector<TableGroup> table_groups(const CodeSpec& code) {
    std::vector<TableGroup> groups;
    auto singles_group = [&](const std::string& name, char kind) {
        TableGroup g{name, {}};
        for (int q = 1; q <= code.n; ++q)
            g.rows.push_back(row_for_single(code, kind, q, Policy::correct_then_decode));
        return g;
    };

    if (code.name == "bitflip3") {
        groups.push_back(singles_group("bitflip3_singles", 'X'));
    } else if (code.name == "phaseflip3") {
        groups.push_back(singles_group("phaseflip3_singles", 'Z'));
    } else if (code.name == "shor9") {
        groups.push_back(singles_group("shor9_bitflip_detection", 'X'));
        groups.push_back(singles_group("shor9_phaseflip_detection", 'Z'));

        TableGroup t3{"shor9_decode_only_outputs", {}};
        for (char kind : {'X', 'Z', 'Y'})
            for (int q = 1; q <= 9; ++q)
                t3.rows.push_back(row_for_single(code, kind, q, Policy::decode_only));
        groups.push_back(t3);

        TableGroup t4a{"shor9_xy_syndromes", {}};
        TableGroup t4b{"shor9_z_syndromes", {}};
        TableGroup t4c{"shor9_xx_cross_doubles", {}};
        TableGroup t4d{"shor9_xz_cross_doubles", {}};
        for (int q = 1; q <= 9; ++q)
            t4a.rows.push_back(row_for_single(code, 'X', q, Policy::correct_then_decode));
        for (int q = 1; q <= 9; ++q)
            t4a.rows.push_back(row_for_single(code, 'Y', q, Policy::correct_then_decode));
        for (int q = 1; q <= 9; ++q)
            t4b.rows.push_back(row_for_single(code, 'Z', q, Policy::correct_then_decode));
        for (const DoubleError& d : double_error_universe(9)) {
            bool same_block = detail::shor_block(d.qubit1) == detail::shor_block(d.qubit2);
            if (d.kind1 == 'X' && d.kind2 == 'X') {
                (same_block ? t4a : t4c).rows.push_back(row_for_double(code, d));
            } else if (d.kind1 == 'Z' && d.kind2 == 'Z') {
                t4b.rows.push_back(row_for_double(code, d));
            } else {
                (same_block ? t4a : t4d).rows.push_back(row_for_double(code, d));
            }
        }
        groups.push_back(t4a);
        groups.push_back(t4b);
        groups.push_back(t4c);
        groups.push_back(t4d);
    } else if (code.name == "steane7") {
        TableGroup t5a{"steane7_xy_syndromes", {}};
        TableGroup t5b{"steane7_z_syndromes", {}};
        TableGroup t5c{"steane7_xz_doubles", {}};
        for (int q = 1; q <= 7; ++q)
            t5a.rows.push_back(row_for_single(code, 'X', q, Policy::correct_then_decode));
        for (int q = 1; q <= 7; ++q)
            t5a.rows.push_back(row_for_single(code, 'Y', q, Policy::correct_then_decode));
        for (int q = 1; q <= 7; ++q)
            t5b.rows.push_back(row_for_single(code, 'Z', q, Policy::correct_then_decode));
        for (const DoubleError& d : double_error_universe(7)) {
            if (d.kind1 == 'X' && d.kind2 == 'X') t5a.rows.push_back(row_for_double(code, d));
            else if (d.kind1 == 'Z' && d.kind2 == 'Z')
                t5b.rows.push_back(row_for_double(code, d));
            else
                t5c.rows.push_back(row_for_double(
                    code, d, reference::steane7_is_listed(d) ? "" : "not-listed-in-paper"));
        }
        groups.push_back(t5a);
        groups.push_back(t5b);
        groups.push_back(t5c);
    } else if (code.name == "five5") {
        TableGroup t6a{"five5_xz_corrected", {}};
        TableGroup t6b{"five5_y_corrected", {}};
        for (int q = 1; q <= 5; ++q)
            t6a.rows.push_back(row_for_single(code, 'X', q, Policy::correct_then_decode));
        for (int q = 1; q <= 5; ++q)
            t6a.rows.push_back(row_for_single(code, 'Z', q, Policy::correct_then_decode));
        for (int q = 1; q <= 5; ++q)
            t6b.rows.push_back(row_for_single(code, 'Y', q, Policy::correct_then_decode));
        for (const DoubleError& d : double_error_universe(5)) {
            Syndrome syn = syndrome_against(d.to_pauli(5), code.generators);
            const PauliString& corr = lookup_correction(code, syn);
            bool y_corrected = (corr.x_mask & corr.z_mask) != 0;
            (y_corrected ? t6b : t6a).rows.push_back(row_for_double(code, d));
        }
        groups.push_back(t6a);
        groups.push_back(t6b);
    } else {
        throw std::invalid_argument("table_groups: unknown code " + code.name);
    }
    return groups;
}

// Full double-error sweep with the residual tally, for the `doubles` command.
struct DoublesSweep {
    std::vector<TableRow> rows;
    FNReport report;
};

inline DoublesSweep doubles_sweep(const CodeSpec& code, bool paper_universe) {
    std::vector<DoubleError> universe;
    std::string label;
    if (paper_universe && code.name == "steane7") {
        universe = reference::steane7_paper_doubles();
        label = "paper-tables";
    } else {
        universe = double_error_universe(code.n);
        label = paper_universe ? "paper-tables" : "full-XZ-universe";
    }
    DoublesSweep sweep;
    for (const DoubleError& d : universe) {
        std::string note;
        if (code.name == "steane7" && !reference::steane7_is_listed(d))
            note = "not-listed-in-paper";
        sweep.rows.push_back(row_for_double(code, d, note));
    }
    sweep.report = compute_f(code, universe, label);
    return sweep;
}

enum class OutputFormat { csv, json };

inline std::string rows_to_csv(const std::vector<TableRow>& rows) {
    std::string out = "code,error,syndrome,correction,residual,phase,notes\n";
    for (const TableRow& r : rows) {
        out += r.code + "," + r.error + "," + r.syndrome + "," + r.correction + "," +
               r.residual + "," + r.phase + "," + r.notes + "\n";
    }
    return out;
}

inline nlohmann::json rows_to_json(const std::vector<TableRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const TableRow& r : rows)
        arr.push_back({{"code", r.code},
                       {"error", r.error},
                       {"syndrome", r.syndrome},
                       {"correction", r.correction},
                       {"residual", r.residual},
                       {"phase", r.phase},
                       {"notes", r.notes}});
    return arr;
}

// Fidelity-curve sampling: C0, C5, C7 (paper and full universes), C9.
struct CurveSet {
    FidelityCurve c0, c5, c7_paper, c7_full, c9;

    static CurveSet standard() {
        CurveSet s;
        s.c0 = curve_unprotected();
        s.c5 = curve_for_code("C5", Rational(1, 3));
        s.c7_paper = curve_for_code("C7_paper", Rational(53, 81));
        s.c7_full = curve_for_code("C7_full", Rational(2, 3));
        s.c9 = curve_for_code("C9", Rational(5, 6));
        return s;
    }
};

inline std::string curves_to_csv(const CurveSet& cs, const std::vector<double>& p_grid) {
    std::string out;
    out += "# F_C0=" + cs.c0.exact_text() + " F_C5=" + cs.c5.exact_text() +
           " F_C7_paper=" + cs.c7_paper.exact_text() +
           " F_C7_full=" + cs.c7_full.exact_text() + " F_C9=" + cs.c9.exact_text() + "\n";
    out += "P,F_C0,F_C5,F_C7_paper,F_C7_full,F_C9\n";
    for (double p : p_grid) {
        out += detail::format_double(p);
        for (const FidelityCurve* c : {&cs.c0, &cs.c5, &cs.c7_paper, &cs.c7_full, &cs.c9})
            out += "," + detail::format_double(c->value(p));
        out += "\n";
    }
    return out;
}

inline nlohmann::json curves_to_json(const CurveSet& cs, const std::vector<double>& p_grid) {
    nlohmann::json j;
    j["coefficients"] = {{"C0", cs.c0.exact_text()},
                         {"C5", cs.c5.exact_text()},
                         {"C7_paper", cs.c7_paper.exact_text()},
                         {"C7_full", cs.c7_full.exact_text()},
                         {"C9", cs.c9.exact_text()}};
    nlohmann::json samples = nlohmann::json::array();
    for (double p : p_grid)
        samples.push_back({{"P", p},
                           {"C0", cs.c0.value(p)},
                           {"C5", cs.c5.value(p)},
                           {"C7_paper", cs.c7_paper.value(p)},
                           {"C7_full", cs.c7_full.value(p)},
                           {"C9", cs.c9.value(p)}});
    j["samples"] = samples;
    return j;
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace qecc
