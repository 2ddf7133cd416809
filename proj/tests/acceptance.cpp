// Acceptance suite: reproduces every published table and curve at its stated
// tolerance and prints one PASS/FAIL line per criterion.

#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "qecc/codes.hpp"
#include "qecc/errors.hpp"
#include "qecc/fidelity.hpp"
#include "qecc/reference_data.hpp"
#include "qecc/tables.hpp"

using namespace qecc;

namespace {

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw CheckFailure(msg);
}

// Labels with an optional phase prefix: "-i X2 X3", "-Z1", "i Y4".
PauliString parse_phased(int n, std::string label) {
    int phase = 0;
    if (label.rfind("-i ", 0) == 0) {
        phase = 3;
        label = label.substr(3);
    } else if (label.rfind("i ", 0) == 0) {
        phase = 1;
        label = label.substr(2);
    } else if (label.rfind('-', 0) == 0) {
        phase = 2;
        label = label.substr(1);
    }
    PauliString p = parse_pauli(n, label);
    p.phase_exp = (p.phase_exp + phase) & 3;
    return p;
}

PipelineResult run_error(const CodeSpec& code, const std::string& label, Policy policy) {
    return run_pipeline(code, ErrorSpec::from_pauli(parse_pauli(code.n, label)), policy);
}

char residual_of(const CodeSpec& code, const std::string& label) {
    return logical_char(run_error(code, label, Policy::correct_then_decode)
                            .residual.logical);
}

std::string syndrome_of_label(const CodeSpec& code, const std::string& label) {
    return syndrome_against(parse_pauli(code.n, label), code.generators).to_string();
}

// ---------------------------------------------------------------------------

// Shor bit-flip and phase-flip detection rows: eigenvalue pattern plus the
// correction operator, by the statevector path and the commutation oracle.
void criterion_1() {
    CodeSpec shor = build_code("shor9");
    StateVector psi = encode(shor, probe_alpha(), probe_beta());

    const char* bitflip[9][2] = {
        {"X1", "100000"}, {"X2", "110000"}, {"X3", "010000"},
        {"X4", "001000"}, {"X5", "001100"}, {"X6", "000100"},
        {"X7", "000010"}, {"X8", "000011"}, {"X9", "000001"}};
    for (const auto& row : bitflip) {
        std::string expect = std::string(row[1]) + "00";
        PauliString e = parse_pauli(9, row[0]);
        require(syndrome_against(e, shor.generators).to_string() == expect,
                std::string(row[0]) + ": commutation syndrome mismatch");
        require(eigen_syndrome(shor, apply_pauli(psi, e)).to_string() == expect,
                std::string(row[0]) + ": eigenvalue syndrome mismatch");
        require(pauli_label(lookup_correction(shor, Syndrome::from_string(expect))) ==
                    row[0],
                std::string(row[0]) + ": correction mismatch");
    }

    struct PhaseRow {
        int first_qubit;
        const char* bits;  // (g7, g8)
        const char* correction;
    };
    const PhaseRow phaseflip[3] = {{1, "10", "Z1 Z2 Z3"},
                                   {4, "11", "Z4 Z5 Z6"},
                                   {7, "01", "Z7 Z8 Z9"}};
    for (const PhaseRow& row : phaseflip) {
        for (int q = row.first_qubit; q < row.first_qubit + 3; ++q) {
            std::string expect = "000000" + std::string(row.bits);
            PauliString e = PauliString::single(9, 'Z', q);
            require(syndrome_against(e, shor.generators).to_string() == expect,
                    "Z" + std::to_string(q) + ": commutation syndrome mismatch");
            require(eigen_syndrome(shor, apply_pauli(psi, e)).to_string() == expect,
                    "Z" + std::to_string(q) + ": eigenvalue syndrome mismatch");
            require(pauli_label(lookup_correction(shor, Syndrome::from_string(expect))) ==
                        row.correction,
                    "Z" + std::to_string(q) + ": correction mismatch");
        }
    }
}

// Decode without correction: all 27 single-error outputs, with the -i global
// phase on every Y row, within amplitude tolerance 1e-9.
void criterion_2() {
    CodeSpec shor = build_code("shor9");
    StateVector ref = kron(make_state(1, {{1, {probe_alpha(), probe_beta()}}}),
                           basis_state(8, 0));
    for (const auto& row : reference::shor9_decode_only_outputs()) {
        char kind = row.input[0];
        int q = row.input[1] - '0';
        PipelineResult r = run_pipeline(
            shor, ErrorSpec::from_pauli(pauli_error_op(kind, q, 9)), Policy::decode_only);
        require(r.physical_output_error.has_value(), row.input + ": no output error");
        require(pauli_label(*r.physical_output_error) == row.output,
                row.input + ": output " + pauli_label(*r.physical_output_error) +
                    " != " + row.output);
        StateVector expect = apply_pauli(ref, parse_phased(9, row.output));
        require(distance_inf(r.decoded, expect) <= 1e-9,
                row.input + ": decoded state deviates from " + row.output);
    }
}

// Shor double errors: listed syndromes and residual classes of tables
// 4a-4d, then the full-universe tally {I:108, X:27, Z:9} and f9 = 5/6.
void criterion_3() {
    CodeSpec shor = build_code("shor9");

    const char* xx[9][3] = {
        {"X1", "X2 X3", "10000000"}, {"X2", "X1 X3", "11000000"},
        {"X3", "X1 X2", "01000000"}, {"X4", "X5 X6", "00100000"},
        {"X5", "X4 X6", "00110000"}, {"X6", "X4 X5", "00010000"},
        {"X7", "X8 X9", "00001000"}, {"X8", "X7 X9", "00001100"},
        {"X9", "X7 X8", "00000100"}};
    for (const auto& row : xx) {
        require(syndrome_of_label(shor, row[0]) == row[2],
                std::string(row[0]) + ": syndrome");
        require(syndrome_of_label(shor, row[1]) == row[2],
                std::string(row[1]) + ": syndrome");
        require(residual_of(shor, row[0]) == 'I', std::string(row[0]) + ": residual");
        require(residual_of(shor, row[1]) == 'Z', std::string(row[1]) + ": residual");
    }

    struct YRow {
        const char* y;
        const char* d1;
        const char* d2;
        const char* syn;
    };
    const YRow yrows[9] = {
        {"Y1", "X1 Z2", "X1 Z3", "10000010"}, {"Y2", "X2 Z1", "X2 Z3", "11000010"},
        {"Y3", "X3 Z1", "X3 Z2", "01000010"}, {"Y4", "X4 Z5", "X4 Z6", "00100011"},
        {"Y5", "X5 Z4", "X5 Z6", "00110011"}, {"Y6", "X6 Z4", "X6 Z5", "00010011"},
        {"Y7", "X7 Z8", "X7 Z9", "00001001"}, {"Y8", "X8 Z7", "X8 Z9", "00001101"},
        {"Y9", "X9 Z7", "X9 Z8", "00000101"}};
    for (const YRow& row : yrows) {
        for (const char* label : {row.y, row.d1, row.d2}) {
            require(syndrome_of_label(shor, label) == row.syn,
                    std::string(label) + ": syndrome");
            require(residual_of(shor, label) == 'I', std::string(label) + ": residual");
        }
    }

    auto block = [](int first) {
        return std::vector<int>{first, first + 1, first + 2};
    };
    struct ZRow {
        std::vector<std::string> singles;
        int double_block1;
        int double_block2;
        const char* syn;
    };
    const ZRow zrows[3] = {{{"Z1", "Z2", "Z3"}, 4, 7, "00000010"},
                           {{"Z4", "Z5", "Z6"}, 1, 7, "00000011"},
                           {{"Z7", "Z8", "Z9"}, 1, 4, "00000001"}};
    for (const ZRow& row : zrows) {
        for (const std::string& s : row.singles) {
            require(syndrome_of_label(shor, s) == row.syn, s + ": syndrome");
            require(residual_of(shor, s) == 'I', s + ": residual");
        }
        for (int k : block(row.double_block1))
            for (int l : block(row.double_block2)) {
                std::string label = "Z" + std::to_string(k) + " Z" + std::to_string(l);
                require(syndrome_of_label(shor, label) == row.syn, label + ": syndrome");
                require(residual_of(shor, label) == 'X', label + ": residual");
            }
    }
    for (int b : {1, 4, 7})
        for (int k : block(b))
            for (int l : block(b))
                if (k < l) {
                    std::string label = "Z" + std::to_string(k) + " Z" + std::to_string(l);
                    require(syndrome_of_label(shor, label) == "00000000",
                            label + ": syndrome");
                    require(residual_of(shor, label) == 'I', label + ": residual");
                }

    const char* xx_cross[27][2] = {
        {"X1 X4", "10100000"}, {"X1 X5", "10110000"}, {"X1 X6", "10010000"},
        {"X1 X7", "10001000"}, {"X1 X8", "10001100"}, {"X1 X9", "10000100"},
        {"X2 X4", "11100000"}, {"X2 X5", "11110000"}, {"X2 X6", "11010000"},
        {"X2 X7", "11001000"}, {"X2 X8", "11001100"}, {"X2 X9", "11000100"},
        {"X3 X4", "01100000"}, {"X3 X5", "01110000"}, {"X3 X6", "01010000"},
        {"X3 X7", "01001000"}, {"X3 X8", "01001100"}, {"X3 X9", "01000100"},
        {"X4 X7", "00101000"}, {"X4 X8", "00101100"}, {"X4 X9", "00100100"},
        {"X5 X7", "00111000"}, {"X5 X8", "00111100"}, {"X5 X9", "00110100"},
        {"X6 X7", "00011000"}, {"X6 X8", "00011100"}, {"X6 X9", "00010100"}};
    for (const auto& row : xx_cross) {
        require(syndrome_of_label(shor, row[0]) == row[1],
                std::string(row[0]) + ": syndrome");
        require(residual_of(shor, row[0]) == 'I', std::string(row[0]) + ": residual");
    }

    struct XZRow {
        int x_qubit;
        int z_first;
        const char* syn;
    };
    const XZRow xz[18] = {{1, 4, "10000011"}, {1, 7, "10000001"}, {2, 7, "11000001"},
                          {2, 4, "11000011"}, {3, 4, "01000011"}, {3, 7, "01000001"},
                          {4, 7, "00100001"}, {5, 7, "00110001"}, {6, 7, "00010001"},
                          {4, 1, "00100010"}, {5, 1, "00110010"}, {6, 1, "00010010"},
                          {7, 1, "00001010"}, {8, 1, "00001110"}, {9, 1, "00000110"},
                          {7, 4, "00001011"}, {8, 4, "00001111"}, {9, 4, "00000111"}};
    for (const XZRow& row : xz) {
        for (int l : block(row.z_first)) {
            std::string label =
                "X" + std::to_string(row.x_qubit) + " Z" + std::to_string(l);
            require(syndrome_of_label(shor, label) == row.syn, label + ": syndrome");
            require(residual_of(shor, label) == 'I', label + ": residual");
        }
    }

    FNReport rep = compute_f(shor, double_error_universe(9), "full-XZ-universe");
    require(rep.total == 144, "N != 144");
    require(rep.residual_histogram.at('I') == 108, "histogram I != 108");
    require(rep.residual_histogram.at('X') == 27, "histogram X != 27");
    require(rep.residual_histogram.at('Z') == 9, "histogram Z != 9");
    require(rep.f == Rational(5, 6), "f9 != 5/6");
}

// Steane tables: listed syndromes, the exact fractions for both universes,
// and the three pairs missing from the mixed-pair tabulation.
void criterion_4() {
    CodeSpec steane = build_code("steane7");

    struct SinglesRow {
        const char* single;
        const char* syn;
        std::vector<const char*> partners;
        char partner_residual;
    };
    const std::vector<SinglesRow> rows5a = {
        {"X1", "000001", {"X2 X3", "X4 X5", "X6 X7"}, 'X'},
        {"X2", "000010", {"X1 X3", "X4 X6", "X5 X7"}, 'X'},
        {"X3", "000011", {"X1 X2", "X5 X6", "X4 X7"}, 'X'},
        {"X4", "000100", {"X1 X5", "X2 X6", "X3 X7"}, 'X'},
        {"X5", "000101", {"X1 X4", "X2 X7", "X3 X6"}, 'X'},
        {"X6", "000110", {"X1 X7", "X2 X4", "X3 X5"}, 'X'},
        {"X7", "000111", {"X1 X6", "X2 X5", "X3 X4"}, 'X'},
        {"Y1", "001001", {}, ' '},
        {"Y2", "010010", {}, ' '},
        {"Y3", "011011", {}, ' '},
        {"Y4", "100100", {}, ' '},
        {"Y5", "101101", {}, ' '},
        {"Y6", "110110", {}, ' '},
        {"Y7", "111111", {}, ' '}};
    const std::vector<SinglesRow> rows5b = {
        {"Z1", "001000", {"Z6 Z7", "Z2 Z3", "Z4 Z5"}, 'Z'},
        {"Z2", "010000", {"Z1 Z3", "Z4 Z6", "Z5 Z7"}, 'Z'},
        {"Z3", "011000", {"Z4 Z7", "Z1 Z2", "Z5 Z6"}, 'Z'},
        {"Z4", "100000", {"Z3 Z7", "Z1 Z5", "Z2 Z6"}, 'Z'},
        {"Z5", "101000", {"Z2 Z7", "Z1 Z4", "Z3 Z6"}, 'Z'},
        {"Z6", "110000", {"Z1 Z7", "Z2 Z4", "Z3 Z5"}, 'Z'},
        {"Z7", "111000", {"Z1 Z6", "Z2 Z5", "Z3 Z4"}, 'Z'}};
    for (const auto& table : {rows5a, rows5b}) {
        for (const SinglesRow& row : table) {
            require(syndrome_of_label(steane, row.single) == row.syn,
                    std::string(row.single) + ": syndrome");
            require(residual_of(steane, row.single) == 'I',
                    std::string(row.single) + ": residual");
            for (const char* partner : row.partners) {
                require(syndrome_of_label(steane, partner) == row.syn,
                        std::string(partner) + ": syndrome");
                require(residual_of(steane, partner) == row.partner_residual,
                        std::string(partner) + ": residual");
            }
        }
    }

    const char* mixed[39][2] = {
        {"X1 Z4", "100001"}, {"X1 Z5", "101001"}, {"X1 Z6", "110001"},
        {"X1 Z7", "111001"}, {"X2 Z7", "111010"}, {"X3 Z4", "100011"},
        {"X3 Z6", "110011"}, {"X3 Z7", "111011"}, {"X4 Z7", "111100"},
        {"X5 Z7", "111101"}, {"X6 Z5", "101110"}, {"X6 Z7", "111110"},
        {"X5 Z6", "110101"}, {"Z1 X4", "001100"}, {"Z2 X4", "010100"},
        {"Z3 X4", "011100"}, {"Z1 X5", "001101"}, {"Z2 X5", "010101"},
        {"Z1 X6", "001110"}, {"Z2 X6", "010110"}, {"Z3 X6", "011110"},
        {"Z1 X7", "001111"}, {"Z2 X7", "010111"}, {"Z3 X7", "011111"},
        {"Z4 X5", "100101"}, {"Z3 X5", "011101"}, {"Z1 X3", "001011"},
        {"X1 Z2", "010001"}, {"X1 Z3", "011001"}, {"X2 Z1", "001010"},
        {"X2 Z3", "011010"}, {"X2 Z4", "100010"}, {"X2 Z5", "101010"},
        {"X2 Z6", "110010"}, {"Z2 X3", "010011"}, {"X4 Z5", "101100"},
        {"X4 Z6", "110100"}, {"Z4 X6", "100110"}, {"X3 Z5", "101011"}};
    for (const auto& row : mixed) {
        require(syndrome_of_label(steane, row[0]) == row[1],
                std::string(row[0]) + ": syndrome");
        require(residual_of(steane, row[0]) == 'I', std::string(row[0]) + ": residual");
    }

    FNReport paper = compute_f(steane, reference::steane7_paper_doubles(), "paper-tables");
    require(paper.total == 81, "paper universe != 81");
    require(paper.f == Rational(53, 81), "f7 paper != 53/81");

    FNReport full = compute_f(steane, double_error_universe(7), "full-XZ-universe");
    require(full.total == 84, "full universe != 84");
    require(full.identity_count == 42, "full identity count != 42");
    require(full.f == Rational(2, 3), "f7 full != 2/3");

    auto missing = reference::steane7_unlisted_doubles();
    require(missing == std::vector<DoubleError>{{'Z', 4, 'X', 7},
                                                {'Z', 5, 'X', 7},
                                                {'Z', 6, 'X', 7}},
            "unlisted pairs are not {X7 Z4, X7 Z5, X7 Z6}");
}

// Five-qubit tables: listed syndromes, residual class structure, x = 0 and
// f5 = 1/3 over the 40-pair universe.
void criterion_5() {
    CodeSpec five = build_code("five5");

    struct Row {
        const char* single;
        const char* syn;
        const char* same_type;
        const char* mixed1;
        const char* mixed2;
    };
    const Row rows6a[10] = {
        {"X1", "0101", "Z3 Z4", "X4 Z5", "Z2 X3"},
        {"X2", "0010", "Z4 Z5", "Z1 X5", "Z3 X4"},
        {"X3", "1001", "Z1 Z5", "X1 Z2", "Z4 X5"},
        {"X4", "0100", "Z1 Z2", "X1 Z5", "X2 Z3"},
        {"X5", "1010", "Z2 Z3", "X3 Z4", "Z1 X2"},
        {"Z1", "1000", "X2 X5", "X3 Z5", "Z2 X4"},
        {"Z2", "1100", "X1 X3", "Z1 X4", "Z3 X5"},
        {"Z3", "0110", "X2 X4", "X1 Z4", "Z2 X5"},
        {"Z4", "0011", "X3 X5", "X1 Z3", "X2 Z5"},
        {"Z5", "0001", "X1 X4", "X2 Z4", "Z1 X3"}};
    for (const Row& row : rows6a) {
        require(syndrome_of_label(five, row.single) == row.syn,
                std::string(row.single) + ": syndrome");
        require(residual_of(five, row.single) == 'I',
                std::string(row.single) + ": residual");
        // A same-type alias flips the opposite logical component, a mixed
        // alias the same one: X-corrected rows give (X), (Z, Z); Z-corrected
        // rows give (Z), (X, X).
        char same_class = row.single[0] == 'X' ? 'X' : 'Z';
        char mixed_class = row.single[0] == 'X' ? 'Z' : 'X';
        require(syndrome_of_label(five, row.same_type) == row.syn,
                std::string(row.same_type) + ": syndrome");
        require(residual_of(five, row.same_type) == same_class,
                std::string(row.same_type) + ": residual");
        for (const char* m : {row.mixed1, row.mixed2}) {
            require(syndrome_of_label(five, m) == row.syn, std::string(m) + ": syndrome");
            require(residual_of(five, m) == mixed_class, std::string(m) + ": residual");
        }
    }

    struct YRow {
        const char* y;
        const char* syn;
        const char* xx;
        const char* zz;
    };
    const YRow rows6b[5] = {{"Y1", "1101", "X3 X4", "Z2 Z5"},
                            {"Y2", "1110", "X4 X5", "Z1 Z3"},
                            {"Y3", "1111", "X1 X5", "Z2 Z4"},
                            {"Y4", "0111", "X1 X2", "Z3 Z5"},
                            {"Y5", "1011", "X2 X3", "Z1 Z4"}};
    for (const YRow& row : rows6b) {
        require(syndrome_of_label(five, row.y) == row.syn,
                std::string(row.y) + ": syndrome");
        require(residual_of(five, row.y) == 'I', std::string(row.y) + ": residual");
        for (const char* d : {row.xx, row.zz}) {
            require(syndrome_of_label(five, d) == row.syn, std::string(d) + ": syndrome");
            require(residual_of(five, d) == 'Y', std::string(d) + ": residual");
        }
    }

    FNReport rep = compute_f(five, double_error_universe(5), "full-XZ-universe");
    require(rep.total == 40, "N != 40");
    require(rep.identity_count == 0, "x != 0");
    require(rep.f == Rational(1, 3), "f5 != 1/3");
}

// Average fidelity of each residual class: quadrature within 1e-9 of 1/3 on
// the 64x128 grid, closed forms within 1e-10 of the direct overlap at 1000
// random Bloch points.
void criterion_6() {
    for (LogicalError e : {LogicalError::X, LogicalError::Y, LogicalError::Z}) {
        ResidualClass res{e, cplx{1, 0}};
        double quad = average_residual_fidelity(res, AverageMethod::quadrature,
                                                QuadratureGrid{64, 128});
        require(std::abs(quad - 1.0 / 3.0) <= 1e-9,
                std::string(1, logical_char(e)) + ": quadrature deviates from 1/3");
    }
    ResidualClass id{LogicalError::I, cplx{1, 0}};
    require(std::abs(average_residual_fidelity(id, AverageMethod::quadrature,
                                               QuadratureGrid{64, 128}) -
                     1.0) <= 1e-9,
            "I: quadrature deviates from 1");

    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        BlochAngles a{std::acos(1.0 - 2.0 * unif(rng)),
                      2.0 * std::numbers::pi * unif(rng)};
        auto [c0, c1] = bloch_state(a);
        StateVector psi;
        psi.n = 1;
        psi.amps = {c0, c1};
        for (LogicalError e :
             {LogicalError::I, LogicalError::X, LogicalError::Y, LogicalError::Z}) {
            StateVector flipped = psi;
            switch (e) {
                case LogicalError::X: flipped = apply_gate(psi, GateOp::x(1)); break;
                case LogicalError::Y: flipped = apply_gate(psi, GateOp::y(1)); break;
                case LogicalError::Z: flipped = apply_gate(psi, GateOp::z(1)); break;
                default: break;
            }
            DensityMatrix2 rho = DensityMatrix2::pure(flipped.amps[0], flipped.amps[1]);
            double direct = fidelity_pure(psi, rho);
            double closed = residual_fidelity(a, {e, cplx{1, 0}});
            require(std::abs(direct - closed) <= 1e-10,
                    "closed form deviates from the direct overlap");
        }
    }
}

// Curve coefficients are the exact fractions, and the curves stay ordered
// C9 > C7 > C5 > C0 across the probability grid. The five-qubit and
// unprotected curves touch exactly at P = 1, where both equal 1/3.
void criterion_7() {
    CurveSet cs = CurveSet::standard();
    require(cs.c0.form == FidelityCurve::Form::linear &&
                cs.c0.coefficient == Rational(2, 3),
            "C0 != 1-(2/3)P");
    require(cs.c5.coefficient == Rational(2, 3), "C5 != 1-(2/3)P^2");
    require(cs.c7_paper.coefficient == Rational(28, 81), "C7 != 1-(28/81)P^2");
    require(cs.c7_full.coefficient == Rational(1, 3), "C7 full != 1-(1/3)P^2");
    require(cs.c9.coefficient == Rational(1, 6), "C9 != 1-(1/6)P^2");

    for (int k = 1; k <= 101; ++k) {
        double p = static_cast<double>(k) / 101.0;
        require(cs.c9.value(p) > cs.c7_paper.value(p), "C9 <= C7 on the grid");
        require(cs.c9.value(p) > cs.c7_full.value(p), "C9 <= C7(full) on the grid");
        require(cs.c7_full.value(p) > cs.c7_paper.value(p), "C7(full) <= C7(paper)");
        require(cs.c7_paper.value(p) > cs.c5.value(p), "C7 <= C5 on the grid");
        if (k < 101)
            require(cs.c5.value(p) > cs.c0.value(p), "C5 <= C0 inside (0,1)");
    }
    require(cs.c5.value_rational(Rational(1)) == Rational(1, 3) &&
                cs.c0.value_rational(Rational(1)) == Rational(1, 3),
            "C5 and C0 must both equal 1/3 at P=1");
}

// The intermediate states of the three reference pipelines, evaluated at the
// generic probe amplitudes.
void criterion_8() {
    cplx a = probe_alpha(), b = probe_beta();
    double tol = 1e-9;

    auto expect_state = [](int n, std::vector<std::pair<std::uint32_t, cplx>> amps) {
        StateVector s;
        s.n = n;
        s.amps.assign(1ull << n, cplx{});
        for (auto& [idx, v] : amps) s.amps[idx] = v;
        return s;
    };

    // Bit flip code.
    CodeSpec bf = build_code("bitflip3");
    StateVector psi0 = make_state(3, {{1, {a, b}}});
    require(distance_inf(psi0, expect_state(3, {{0b000, a}, {0b100, b}})) <= tol,
            "initial three-qubit state");

    PipelineResult x1 = run_error(bf, "X1", Policy::decode_only);
    require(distance_inf(x1.decoded, expect_state(3, {{0b011, a}, {0b111, b}})) <= tol,
            "bit flip on qubit 1: decoded state");

    PipelineResult x2 = run_error(bf, "X2", Policy::decode_only);
    require(distance_inf(x2.after_error, expect_state(3, {{0b010, a}, {0b101, b}})) <= tol,
            "bit flip on qubit 2: errored state");
    StateVector x2_mid = apply_gate(apply_gate(x2.after_error, GateOp::cnot(1, 3)),
                                    GateOp::cnot(1, 2));
    require(distance_inf(x2_mid, expect_state(3, {{0b010, a}, {0b110, b}})) <= tol,
            "bit flip on qubit 2: after the decode CNOTs");
    require(distance_inf(x2.decoded, expect_state(3, {{0b010, a}, {0b110, b}})) <= tol,
            "bit flip on qubit 2: decoded state");

    PipelineResult x3 = run_error(bf, "X3", Policy::decode_only);
    require(distance_inf(x3.after_error, expect_state(3, {{0b001, a}, {0b110, b}})) <= tol,
            "bit flip on qubit 3: errored state");
    StateVector x3_mid = apply_gate(apply_gate(x3.after_error, GateOp::cnot(1, 3)),
                                    GateOp::cnot(1, 2));
    require(distance_inf(x3_mid, expect_state(3, {{0b001, a}, {0b101, b}})) <= tol,
            "bit flip on qubit 3: after the decode CNOTs");
    require(distance_inf(x3.decoded, expect_state(3, {{0b001, a}, {0b101, b}})) <= tol,
            "bit flip on qubit 3: decoded state");

    // Phase flip code.
    CodeSpec pf = build_code("phaseflip3");
    PipelineResult z1 = run_error(pf, "Z1", Policy::decode_only);
    require(distance_inf(z1.decoded, expect_state(3, {{0b011, a}, {0b111, b}})) <= tol,
            "phase flip on qubit 1: decoded state");

    // Nine-qubit code.
    CodeSpec shor = build_code("shor9");
    double r = 1.0 / std::sqrt(2.0);
    StateVector ghz_p = expect_state(3, {{0b000, r}, {0b111, r}});
    StateVector ghz_m = expect_state(3, {{0b000, r}, {0b111, -r}});
    StateVector plus_l = kron(kron(ghz_p, ghz_p), ghz_p);
    StateVector minus_l = kron(kron(ghz_m, ghz_m), ghz_m);
    StateVector coded;
    coded.n = 9;
    coded.amps.resize(512);
    for (std::size_t i = 0; i < 512; ++i)
        coded.amps[i] = a * plus_l.amps[i] + b * minus_l.amps[i];
    require(distance_inf(encode(shor, a, b), coded) <= tol, "nine-qubit coded state");

    StateVector ref9 = kron(make_state(1, {{1, {a, b}}}), basis_state(8, 0));
    PipelineResult sx1 = run_error(shor, "X1", Policy::decode_only);
    require(distance_inf(sx1.decoded, apply_pauli(ref9, parse_pauli(9, "X4 X5"))) <= tol,
            "nine-qubit X1 decoded state");
    PipelineResult sz1 = run_error(shor, "Z1", Policy::decode_only);
    require(distance_inf(sz1.decoded, apply_pauli(ref9, parse_pauli(9, "X2 X3"))) <= tol,
            "nine-qubit Z1 decoded state");

    // With the standard Y matrix the decoded register carries a +i phase.
    PipelineResult sy1 = run_pipeline(
        shor,
        ErrorSpec::from_pauli(pauli_error_op('Y', 1, 9, YConvention::standard_Y)),
        Policy::decode_only);
    require(distance_inf(sy1.decoded,
                         apply_pauli(ref9, parse_phased(9, "i X2 X3 X4 X5"))) <= tol,
            "nine-qubit Y1 decoded state (standard Y)");

    // Arbitrary error: the ancilla register combines the four branch
    // patterns with amplitudes c_o, c_x, i c_y, c_z.
    cplx co{0.5, 0.0}, cx{0.5, 0.0}, cy{0.5, 0.0}, cz{0.5, 0.0};
    PipelineResult arb = run_pipeline(
        shor,
        ErrorSpec::from_arbitrary(ArbitraryError{co, cx, cy, cz, 1,
                                                 YConvention::standard_Y}),
        Policy::decode_only);
    StateVector anc;
    anc.n = 8;
    anc.amps.assign(256, cplx{});
    anc.amps[0b00000000] = co;
    anc.amps[0b00110000] = cx;
    anc.amps[0b11110000] = cplx{0, 1} * cy;
    anc.amps[0b11000000] = cz;
    StateVector expected12 = kron(make_state(1, {{1, {a, b}}}), anc);
    require(distance_inf(arb.decoded, expected12) <= tol,
            "arbitrary-error decoded state");
    require(std::abs(arb.renorm_factor - 1.0) <= tol,
            "arbitrary error on a codeword should not need renormalization");
}

// Property suites: recovery, stabilizer invariance, oracle agreement,
// unitarity/involution/purity, and the two fidelity routes.
void criterion_9() {
    int recovered = 0;
    for (const std::string& name : known_code_names()) {
        CodeSpec code = build_code(name);
        for (char kind : correctable_single_kinds(code)) {
            for (int q = 1; q <= code.n; ++q) {
                PipelineResult r = run_pipeline(
                    code, ErrorSpec::from_pauli(pauli_error_op(kind, q, code.n)),
                    Policy::correct_then_decode);
                require(r.residual.logical == LogicalError::I &&
                            std::abs(r.overlap_fidelity - 1.0) <= 1e-9,
                        name + " " + std::string(1, kind) + std::to_string(q) +
                            ": not recovered");
                ++recovered;
            }
        }
    }
    require(recovered == 69, "expected 69 single-error cases");

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (const std::string& name : known_code_names()) {
        CodeSpec code = build_code(name);
        for (int rep = 0; rep < 5; ++rep) {
            double theta = std::acos(1.0 - 2.0 * unif(rng));
            double phi = 2.0 * std::numbers::pi * unif(rng);
            StateVector psi = encode(code, std::cos(theta / 2),
                                     std::polar(std::sin(theta / 2), phi));
            for (const PauliString& g : code.generators)
                require(distance_inf(apply_pauli(psi, g), psi) <= 1e-12,
                        name + ": generator does not stabilize the coded state");
        }
    }

    int doubles_checked = 0;
    for (const std::string& name : {"shor9", "steane7", "five5"}) {
        CodeSpec code = build_code(name);
        StateVector psi = encode(code, probe_alpha(), probe_beta());
        std::vector<PauliString> errors;
        for (char kind : {'X', 'Y', 'Z'})
            for (int q = 1; q <= code.n; ++q)
                errors.push_back(PauliString::single(code.n, kind, q));
        std::size_t singles = errors.size();
        for (const DoubleError& d : double_error_universe(code.n))
            errors.push_back(d.to_pauli(code.n));
        doubles_checked += static_cast<int>(errors.size() - singles);
        for (const PauliString& e : errors) {
            require(eigen_syndrome(code, apply_pauli(psi, e)) ==
                        syndrome_against(e, code.generators),
                    name + ": eigen and commutation syndromes disagree for " +
                        pauli_label(e));
            PipelineResult r = run_pipeline(code, ErrorSpec::from_pauli(e),
                                            Policy::correct_then_decode);
            require(purity(reduced_density(r.decoded, 1)) >= 1.0 - 1e-9,
                    name + ": decoded register not separable for " + pauli_label(e));
        }
    }
    require(doubles_checked == 268, "expected 268 doubles across the large codes");

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        std::mt19937_64 srng(100 + seed);
        std::normal_distribution<double> gauss;
        StateVector s;
        s.n = 4;
        s.amps.resize(16);
        for (cplx& amp : s.amps) amp = {gauss(srng), gauss(srng)};
        double norm = std::sqrt(s.norm_sq());
        for (cplx& amp : s.amps) amp /= norm;
        for (const GateOp& op : {GateOp::h(1), GateOp::x(2), GateOp::y(3), GateOp::z(4),
                                 GateOp::cnot(2, 4), GateOp::toffoli(1, 3, 2)}) {
            StateVector once = apply_gate(s, op);
            require(std::abs(once.norm_sq() - 1.0) <= 1e-12, "gate broke the norm");
            require(distance_inf(apply_gate(once, op), s) <= 1e-12, "involution failed");
        }
    }

    std::mt19937_64 frng(42);
    std::uniform_real_distribution<double> funif(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        auto random_pure = [&] {
            double theta = std::acos(1.0 - 2.0 * funif(frng));
            double phi = 2.0 * std::numbers::pi * funif(frng);
            return std::pair{cplx{std::cos(theta / 2), 0},
                             std::polar(std::sin(theta / 2), phi)};
        };
        auto [s0, s1] = random_pure();
        auto [t0, t1] = random_pure();
        auto [u0, u1] = random_pure();
        double w = funif(frng);
        DensityMatrix2 sigma = DensityMatrix2::pure(s0, s1);
        DensityMatrix2 rho;
        DensityMatrix2 r1 = DensityMatrix2::pure(t0, t1);
        DensityMatrix2 r2 = DensityMatrix2::pure(u0, u1);
        for (int k = 0; k < 4; ++k) rho.m[k] = w * r1.m[k] + (1.0 - w) * r2.m[k];
        StateVector psi;
        psi.n = 1;
        psi.amps = {s0, s1};
        require(std::abs(fidelity_general(sigma, rho) - fidelity_pure(psi, rho)) <= 1e-10,
                "general and pure fidelity routes disagree");
    }
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void()> fn;
    };
    const std::vector<Criterion> criteria = {
        {"criterion 1: nine-qubit bit/phase flip detection rows", criterion_1},
        {"criterion 2: decode-without-correction outputs (27 rows)", criterion_2},
        {"criterion 3: nine-qubit double-error tables and f9 = 5/6", criterion_3},
        {"criterion 4: seven-qubit tables, f7 = 53/81 and 2/3", criterion_4},
        {"criterion 5: five-qubit tables, x = 0 and f5 = 1/3", criterion_5},
        {"criterion 6: residual fidelity averages and closed forms", criterion_6},
        {"criterion 7: curve coefficients and ordering", criterion_7},
        {"criterion 8: reference pipeline states at the probe", criterion_8},
        {"criterion 9: property suites", criterion_9},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        try {
            c.fn();
            std::printf("PASS %s\n", c.name);
        } catch (const std::exception& e) {
            ++failures;
            std::printf("FAIL %s - %s\n", c.name, e.what());
        }
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all %zu criteria passed\n", criteria.size());
    return failures ? 1 : 0;
}
