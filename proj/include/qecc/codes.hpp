// The five concrete codes: bitflip3, phaseflip3, shor9, steane7, five5.
// Each CodeSpec bundles stabilizer generators (in the pinned syndrome order),
// an encoder, a decoder, and a total syndrome -> correction lookup table.
//
// bitflip3 / phaseflip3 / shor9 use the reference encode/decode circuits.
// steane7 / five5 have no published circuit here: their codewords are built
// by projecting |0..0> onto the stabilizer subspace, |1_L> = X^(x)n |0_L>,
// and decoding applies the adjoint of the encoding isometry extended to a
// full unitary: the corrected representative E_s|c_L> of each syndrome s
// maps to |c> on qubit 1 with the syndrome bits s on the ancilla qubits.

#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qecc/errors.hpp"
#include "qecc/pauli.hpp"
#include "qecc/state.hpp"

namespace qecc {

struct not_pauli_diagnosable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct entangled_residual : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct unclassifiable_residual : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CodeSpec {
    std::string name;
    int n = 0;
    std::vector<PauliString> generators;
    std::vector<GateOp> encoder;  // empty -> encode from the codeword pair
    std::vector<GateOp> decoder;  // empty -> isometry-adjoint decode
    StateVector zero_logical;
    StateVector one_logical;
    std::vector<PauliString> correction_table;  // indexed by syndrome value
    int useful_qubit = 1;

    std::size_t generator_count() const { return generators.size(); }
};

enum class Policy { correct_then_decode, decode_only };

enum class LogicalError { I, X, Y, Z };

inline char logical_char(LogicalError e) {
    switch (e) {
        case LogicalError::I: return 'I';
        case LogicalError::X: return 'X';
        case LogicalError::Y: return 'Y';
        default: return 'Z';
    }
}

struct ResidualClass {
    LogicalError logical = LogicalError::I;
    cplx global_phase{1.0, 0.0};
};

inline std::string phase_label(const cplx& p) {
    if (std::abs(p - cplx{1, 0}) < 1e-6) return "+1";
    if (std::abs(p - cplx{-1, 0}) < 1e-6) return "-1";
    if (std::abs(p - cplx{0, 1}) < 1e-6) return "+i";
    if (std::abs(p - cplx{0, -1}) < 1e-6) return "-i";
    return "?";
}

// Generic probe amplitudes: overlaps with I,X,Y,Z residuals are pairwise
// distinct in magnitude, so the residual argmax is unambiguous.
inline cplx probe_alpha() { return {std::cos(std::numbers::pi / 8.0), 0.0}; }
inline cplx probe_beta() {
    return std::polar(std::sin(std::numbers::pi / 8.0), std::numbers::pi / 5.0);
}

namespace detail {

inline PauliString canonical_phase(PauliString p) {
    // Corrections are defined up to global phase; pin i^\#Y so labels carry
    // no stray prefix.
    p.phase_exp = std::popcount(p.x_mask & p.z_mask) & 3;
    return p;
}

inline StateVector projector_codeword(int n, const std::vector<PauliString>& gens) {
    StateVector s = basis_state(n, 0);
    for (const PauliString& g : gens) {
        StateVector gs = apply_pauli(s, g);
        for (std::size_t i = 0; i < s.dim(); ++i)
            s.amps[i] = 0.5 * (s.amps[i] + gs.amps[i]);
    }
    double norm = std::sqrt(s.norm_sq());
    if (norm < kTol) throw std::logic_error("stabilizer projector annihilated |0..0>");
    for (cplx& a : s.amps) a /= norm;
    return s;
}

inline void validate_code(const CodeSpec& code) {
    for (std::size_t i = 0; i < code.generators.size(); ++i)
        for (std::size_t j = i + 1; j < code.generators.size(); ++j)
            if (!commutes(code.generators[i], code.generators[j]))
                throw std::logic_error(code.name + ": generators do not commute");
    for (const PauliString& g : code.generators) {
        if (distance_inf(apply_pauli(code.zero_logical, g), code.zero_logical) > kTol ||
            distance_inf(apply_pauli(code.one_logical, g), code.one_logical) > kTol)
            throw std::logic_error(code.name + ": generator does not stabilize codewords");
    }
    if (std::abs(overlap(code.zero_logical, code.one_logical)) > kTol)
        throw std::logic_error(code.name + ": codewords not orthogonal");
    if (code.correction_table.size() != (1ull << code.generator_count()))
        throw std::logic_error(code.name + ": correction table not total");
    if (!code.correction_table[0].is_identity())
        throw std::logic_error(code.name + ": zero syndrome must map to identity");
    for (std::size_t s = 0; s < code.correction_table.size(); ++s) {
        Syndrome expect = Syndrome::from_index(s, code.generator_count());
        if (!(syndrome_against(code.correction_table[s], code.generators) == expect))
            throw std::logic_error(code.name + ": correction table inconsistent");
    }
}

inline std::vector<PauliString> parse_generators(int n,
                                                 const std::vector<std::string>& labels) {
    std::vector<PauliString> gens;
    gens.reserve(labels.size());
    for (const std::string& l : labels) gens.push_back(parse_pauli(n, l));
    return gens;
}

inline CodeSpec build_bitflip3() {
    CodeSpec c;
    c.name = "bitflip3";
    c.n = 3;
    c.generators = parse_generators(3, {"Z1 Z2", "Z2 Z3"});
    c.encoder = {GateOp::cnot(1, 2), GateOp::cnot(1, 3)};
    c.decoder = {GateOp::cnot(1, 3), GateOp::cnot(1, 2), GateOp::toffoli(3, 2, 1)};
    c.zero_logical = apply_circuit(basis_state(3, 0b000), c.encoder);
    c.one_logical = apply_circuit(basis_state(3, 0b100), c.encoder);
    c.correction_table.assign(4, PauliString::identity(3));
    c.correction_table[0b10] = PauliString::single(3, 'X', 1);
    c.correction_table[0b11] = PauliString::single(3, 'X', 2);
    c.correction_table[0b01] = PauliString::single(3, 'X', 3);
    return c;
}

inline CodeSpec build_phaseflip3() {
    CodeSpec c;
    c.name = "phaseflip3";
    c.n = 3;
    c.generators = parse_generators(3, {"X1 X2", "X2 X3"});
    c.encoder = {GateOp::cnot(1, 2), GateOp::cnot(1, 3), GateOp::h(1), GateOp::h(2),
                 GateOp::h(3)};
    c.decoder = {GateOp::h(1), GateOp::h(2), GateOp::h(3), GateOp::cnot(1, 3),
                 GateOp::cnot(1, 2), GateOp::toffoli(3, 2, 1)};
    c.zero_logical = apply_circuit(basis_state(3, 0b000), c.encoder);
    c.one_logical = apply_circuit(basis_state(3, 0b100), c.encoder);
    c.correction_table.assign(4, PauliString::identity(3));
    c.correction_table[0b10] = PauliString::single(3, 'Z', 1);
    c.correction_table[0b11] = PauliString::single(3, 'Z', 2);
    c.correction_table[0b01] = PauliString::single(3, 'Z', 3);
    return c;
}

inline CodeSpec build_shor9() {
    CodeSpec c;
    c.name = "shor9";
    c.n = 9;
    c.generators = parse_generators(
        9, {"Z1 Z2", "Z2 Z3", "Z4 Z5", "Z5 Z6", "Z7 Z8", "Z8 Z9",
            "X1 X2 X3 X4 X5 X6", "X4 X5 X6 X7 X8 X9"});
    c.encoder = {GateOp::cnot(1, 2), GateOp::cnot(1, 3),
                 GateOp::h(1), GateOp::h(2), GateOp::h(3),
                 GateOp::permute({1, 4, 5, 2, 6, 7, 3, 8, 9}),
                 GateOp::cnot(7, 8), GateOp::cnot(4, 5), GateOp::cnot(1, 2),
                 GateOp::cnot(7, 9), GateOp::cnot(4, 6), GateOp::cnot(1, 3)};
    c.decoder = {GateOp::cnot(7, 8), GateOp::cnot(4, 5), GateOp::cnot(1, 2),
                 GateOp::cnot(7, 9), GateOp::cnot(4, 6), GateOp::cnot(1, 3),
                 GateOp::toffoli(8, 9, 7), GateOp::toffoli(5, 6, 4),
                 GateOp::toffoli(2, 3, 1),
                 GateOp::permute({1, 4, 7, 2, 3, 5, 6, 8, 9}),
                 GateOp::h(1), GateOp::h(2), GateOp::h(3),
                 GateOp::cnot(1, 3), GateOp::cnot(1, 2), GateOp::toffoli(2, 3, 1)};
    c.zero_logical = apply_circuit(basis_state(9, 0), c.encoder);
    c.one_logical = apply_circuit(basis_state(9, 1u << 8), c.encoder);

    // Bit-flip half decodes per block from two Z-pair bits, phase-flip half
    // from the (g7,g8) bits; the full table is their product.
    auto block_x = [](int field, int base) -> std::optional<int> {
        switch (field) {
            case 0b00: return std::nullopt;
            case 0b10: return base + 1;
            case 0b11: return base + 2;
            default: return base + 3;  // 0b01
        }
    };
    c.correction_table.assign(256, PauliString::identity(9));
    for (std::size_t s = 0; s < 256; ++s) {
        PauliString corr = PauliString::identity(9);
        for (int block = 0; block < 3; ++block) {
            int field = static_cast<int>((s >> (6 - 2 * block)) & 3u);
            if (auto q = block_x(field, 3 * block))
                corr = multiply(corr, PauliString::single(9, 'X', *q));
        }
        int phase_field = static_cast<int>(s & 3u);
        int zbase = phase_field == 0b10 ? 0 : phase_field == 0b11 ? 3
                    : phase_field == 0b01 ? 6 : -1;
        if (zbase >= 0)
            for (int q = zbase + 1; q <= zbase + 3; ++q)
                corr = multiply(corr, PauliString::single(9, 'Z', q));
        c.correction_table[s] = canonical_phase(corr);
    }
    return c;
}

inline CodeSpec build_steane7() {
    CodeSpec c;
    c.name = "steane7";
    c.n = 7;
    c.generators = parse_generators(
        7, {"X4 X5 X6 X7", "X2 X3 X6 X7", "X1 X3 X5 X7",
            "Z4 Z5 Z6 Z7", "Z2 Z3 Z6 Z7", "Z1 Z3 Z5 Z7"});
    c.zero_logical = projector_codeword(7, c.generators);
    PauliString x_logical{7, 0x7f, 0, 0};
    c.one_logical = apply_pauli(c.zero_logical, x_logical);

    // CSS split: bits (g1,g2,g3) give the phase-flipped qubit in binary,
    // bits (g4,g5,g6) the bit-flipped qubit.
    c.correction_table.assign(64, PauliString::identity(7));
    for (std::size_t s = 0; s < 64; ++s) {
        int zq = static_cast<int>((s >> 3) & 7u);
        int xq = static_cast<int>(s & 7u);
        PauliString corr = PauliString::identity(7);
        if (xq) corr = multiply(corr, PauliString::single(7, 'X', xq));
        if (zq) corr = multiply(corr, PauliString::single(7, 'Z', zq));
        c.correction_table[s] = canonical_phase(corr);
    }
    return c;
}

inline CodeSpec build_five5() {
    CodeSpec c;
    c.name = "five5";
    c.n = 5;
    c.generators = parse_generators(5, {"XXZIZ", "ZXXZI", "IZXXZ", "ZIZXX"});
    c.zero_logical = projector_codeword(5, c.generators);
    PauliString x_logical{5, 0x1f, 0, 0};
    c.one_logical = apply_pauli(c.zero_logical, x_logical);

    // Perfect code: the 15 nonzero syndromes map one-to-one onto the 15
    // single-qubit errors.
    c.correction_table.assign(16, PauliString::identity(5));
    std::vector<bool> filled(16, false);
    filled[0] = true;
    for (char kind : {'X', 'Y', 'Z'}) {
        for (int q = 1; q <= 5; ++q) {
            PauliString e = PauliString::single(5, kind, q);
            std::size_t idx = syndrome_against(e, c.generators).to_index();
            if (filled[idx]) throw std::logic_error("five5 syndrome map is not a bijection");
            c.correction_table[idx] = e;
            filled[idx] = true;
        }
    }
    return c;
}

}  // namespace detail

inline CodeSpec build_code(const std::string& name) {
    CodeSpec c;
    if (name == "bitflip3") c = detail::build_bitflip3();
    else if (name == "phaseflip3") c = detail::build_phaseflip3();
    else if (name == "shor9") c = detail::build_shor9();
    else if (name == "steane7") c = detail::build_steane7();
    else if (name == "five5") c = detail::build_five5();
    else throw std::invalid_argument("unknown code name: " + name);
    detail::validate_code(c);
    return c;
}

inline std::vector<std::string> known_code_names() {
    return {"bitflip3", "phaseflip3", "shor9", "steane7", "five5"};
}

// Which single-error kinds the code is built to correct.
inline std::vector<char> correctable_single_kinds(const CodeSpec& code) {
    if (code.name == "bitflip3") return {'X'};
    if (code.name == "phaseflip3") return {'Z'};
    return {'X', 'Y', 'Z'};
}

inline StateVector encode(const CodeSpec& code, const cplx& alpha, const cplx& beta) {
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > kTol)
        throw std::invalid_argument("encode: (alpha, beta) not normalized");
    StateVector out;
    out.n = code.n;
    out.amps.resize(code.zero_logical.dim());
    for (std::size_t i = 0; i < out.dim(); ++i)
        out.amps[i] = alpha * code.zero_logical.amps[i] + beta * code.one_logical.amps[i];
    return out;
}

// Commutation-oracle syndrome of a Pauli error against a code's generators.
inline Syndrome syndrome_of(const PauliString& error, const CodeSpec& code) {
    if (error.n != code.n) throw std::invalid_argument("syndrome_of: size mismatch");
    return syndrome_against(error, code.generators);
}

inline Syndrome eigen_syndrome(const CodeSpec& code, const StateVector& state,
                               double tol = 1e-9) {
    if (state.n != code.n) throw std::invalid_argument("eigen_syndrome: size mismatch");
    Syndrome syn;
    syn.bits.reserve(code.generator_count());
    for (const PauliString& g : code.generators) {
        StateVector gs = apply_pauli(state, g);
        double plus = 0.0, minus = 0.0;
        for (std::size_t i = 0; i < state.dim(); ++i) {
            plus = std::max(plus, std::abs(gs.amps[i] - state.amps[i]));
            minus = std::max(minus, std::abs(gs.amps[i] + state.amps[i]));
        }
        if (plus <= tol) syn.bits.push_back(0);
        else if (minus <= tol) syn.bits.push_back(1);
        else
            throw not_pauli_diagnosable(
                code.name + ": state is not an eigenstate of " + pauli_label(g) +
                "; use projective_syndrome");
    }
    return syn;
}

// Sequential Born-rule measurement of every generator; deterministic for a
// given seed. Pauli-error states reproduce eigen_syndrome and are unchanged.
inline std::pair<Syndrome, StateVector> projective_syndrome(const CodeSpec& code,
                                                            const StateVector& state,
                                                            std::uint64_t rng_seed) {
    if (state.n != code.n)
        throw std::invalid_argument("projective_syndrome: size mismatch");
    std::mt19937_64 rng(rng_seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    StateVector cur = state;
    Syndrome syn;
    for (const PauliString& g : code.generators) {
        StateVector gs = apply_pauli(cur, g);
        StateVector proj;
        proj.n = cur.n;
        proj.amps.resize(cur.dim());
        for (std::size_t i = 0; i < cur.dim(); ++i)
            proj.amps[i] = 0.5 * (cur.amps[i] + gs.amps[i]);
        double p_plus = proj.norm_sq();
        if (unif(rng) < p_plus) {
            syn.bits.push_back(0);
        } else {
            for (std::size_t i = 0; i < cur.dim(); ++i)
                proj.amps[i] = 0.5 * (cur.amps[i] - gs.amps[i]);
            syn.bits.push_back(1);
        }
        double norm = std::sqrt(proj.norm_sq());
        for (cplx& a : proj.amps) a /= norm;
        cur = std::move(proj);
    }
    return {syn, cur};
}

inline const PauliString& lookup_correction(const CodeSpec& code, const Syndrome& syn) {
    if (syn.bits.size() != code.generator_count())
        throw std::invalid_argument("lookup_correction: syndrome length mismatch");
    return code.correction_table[syn.to_index()];
}

inline StateVector decode(const CodeSpec& code, const StateVector& state) {
    if (state.n != code.n) throw std::invalid_argument("decode: size mismatch");
    if (!code.decoder.empty()) return apply_circuit(state, code.decoder);

    // Isometry-adjoint decode: amplitude of |c>|s> is <E_s c_L | state>.
    int anc = code.n - 1;
    StateVector out;
    out.n = code.n;
    out.amps.assign(1ull << code.n, cplx{});
    for (std::size_t s = 0; s < code.correction_table.size(); ++s) {
        const PauliString& rep = code.correction_table[s];
        StateVector e0 = apply_pauli(code.zero_logical, rep);
        StateVector e1 = apply_pauli(code.one_logical, rep);
        out.amps[s] = overlap(e0, state);
        out.amps[(1ull << anc) | s] = overlap(e1, state);
    }
    return out;
}

namespace detail {

inline std::array<cplx, 2> logical_candidate(LogicalError e, const cplx& alpha,
                                             const cplx& beta) {
    const cplx im{0.0, 1.0};
    switch (e) {
        case LogicalError::I: return {alpha, beta};
        case LogicalError::X: return {beta, alpha};
        case LogicalError::Y: return {-im * beta, im * alpha};
        default: return {alpha, -beta};  // Z
    }
}

inline std::optional<cplx> snap_phase(const cplx& c, double tol) {
    static const cplx phases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (const cplx& p : phases)
        if (std::abs(c - p) <= tol) return p;
    return std::nullopt;
}

}  // namespace detail

// Finds the logical Pauli E and global phase with decoded qubit 1 equal to
// phase * E|psi(alpha,beta)>. Requires the qubit-1 factor to be pure.
inline ResidualClass classify_residual(const CodeSpec& code, const StateVector& decoded,
                                       const cplx& alpha, const cplx& beta,
                                       std::optional<PauliString>* physical_out = nullptr,
                                       double tol = 1e-9) {
    if (physical_out) physical_out->reset();
    DensityMatrix2 rho = reduced_density(decoded, code.useful_qubit);
    if (purity(rho) < 1.0 - tol)
        throw entangled_residual(code.name + ": decoded useful qubit is not pure");

    std::size_t anc_dim = decoded.dim() >> 1;
    // Locate the dominant ancilla pattern; a Pauli-error pipeline leaves the
    // ancillas in a single basis state.
    std::size_t best_anc = 0;
    double best_mass = -1.0;
    for (std::size_t a = 0; a < anc_dim; ++a) {
        double mass = std::norm(decoded.amps[a]) + std::norm(decoded.amps[anc_dim | a]);
        if (mass > best_mass) {
            best_mass = mass;
            best_anc = a;
        }
    }
    bool basis_ancillas = best_mass > 1.0 - tol;

    cplx f0, f1;
    if (basis_ancillas) {
        f0 = decoded.amps[best_anc];
        f1 = decoded.amps[anc_dim | best_anc];
    } else {
        // Ancillas superposed (arbitrary-error pipelines): classify from the
        // dominant eigenvector of the reduced matrix, phase undefined.
        auto eig = rho.eigenvalues();
        double lam = eig[1];
        // (rho - lam I) has rank 1; pick the larger column of the adjugate.
        cplx v0 = rho.m[1], v1 = lam - rho.m[0];
        if (std::abs(v0) + std::abs(v1) < 1e-9) {
            v0 = lam - rho.m[3];
            v1 = rho.m[2];
        }
        double norm = std::sqrt(std::norm(v0) + std::norm(v1));
        f0 = v0 / norm;
        f1 = v1 / norm;
    }

    LogicalError best = LogicalError::I;
    cplx best_c{};
    for (LogicalError e : {LogicalError::I, LogicalError::X, LogicalError::Y,
                           LogicalError::Z}) {
        auto cand = detail::logical_candidate(e, alpha, beta);
        cplx c = std::conj(cand[0]) * f0 + std::conj(cand[1]) * f1;
        if (std::abs(c) > std::abs(best_c)) {
            best_c = c;
            best = e;
        }
    }
    if (std::abs(best_c) < 1.0 - tol)
        throw unclassifiable_residual(code.name +
                                      ": decoded qubit 1 matches no Pauli residual");

    ResidualClass res;
    res.logical = best;
    if (!basis_ancillas) {
        res.global_phase = cplx{1.0, 0.0};
        return res;
    }
    auto snapped = detail::snap_phase(best_c, 1e-6);
    if (!snapped)
        throw unclassifiable_residual(code.name + ": residual phase not in {1,-1,i,-i}");
    res.global_phase = *snapped;

    if (physical_out) {
        // Express the decoded register as phase * P (|psi> (x) |0...0>).
        PauliString p = PauliString::identity(code.n);
        std::uint32_t bit1 = 1u;  // mask bit for qubit 1
        if (best == LogicalError::X || best == LogicalError::Y) p.x_mask |= bit1;
        if (best == LogicalError::Z || best == LogicalError::Y) p.z_mask |= bit1;
        for (int q = 2; q <= code.n; ++q)
            if ((best_anc >> (code.n - q)) & 1u) p.x_mask |= 1u << (q - 1);
        StateVector ref = kron(make_state(1, {{1, {alpha, beta}}}),
                               basis_state(code.n - 1, 0));
        cplx d = overlap(apply_pauli(ref, p), decoded);
        auto dphase = detail::snap_phase(d, 1e-6);
        if (!dphase)
            throw unclassifiable_residual(code.name + ": output error phase not Pauli");
        if (*dphase == cplx{0, 1}) p.phase_exp = (p.phase_exp + 1) & 3;
        else if (*dphase == cplx{-1, 0}) p.phase_exp = (p.phase_exp + 2) & 3;
        else if (*dphase == cplx{0, -1}) p.phase_exp = (p.phase_exp + 3) & 3;
        *physical_out = p;
    }
    return res;
}

struct PipelineResult {
    StateVector encoded;
    StateVector after_error;
    Syndrome syndrome;       // empty when not determined (arbitrary decode-only)
    PauliString correction;  // identity when no correction was applied
    StateVector decoded;
    ResidualClass residual;
    std::optional<PauliString> physical_output_error;
    double overlap_fidelity = 0.0;
    double renorm_factor = 1.0;
};

struct ErrorSpec {
    enum class Form { pauli, arbitrary };
    Form form = Form::pauli;
    PauliString pauli;
    std::optional<ArbitraryError> arbitrary;

    static ErrorSpec none(int n) { return {Form::pauli, PauliString::identity(n), {}}; }
    static ErrorSpec from_pauli(PauliString p) { return {Form::pauli, std::move(p), {}}; }
    static ErrorSpec from_double(const DoubleError& d, int n) {
        return {Form::pauli, d.to_pauli(n), {}};
    }
    static ErrorSpec from_arbitrary(const ArbitraryError& a) {
        return {Form::arbitrary, {}, a};
    }
};

inline PipelineResult run_pipeline(const CodeSpec& code, const ErrorSpec& error,
                                   Policy policy, const cplx& alpha, const cplx& beta,
                                   std::uint64_t seed = 0) {
    PipelineResult r;
    r.encoded = encode(code, alpha, beta);

    if (error.form == ErrorSpec::Form::pauli) {
        if (error.pauli.n != code.n)
            throw std::invalid_argument("error size does not match code");
        r.after_error = apply_pauli(r.encoded, error.pauli);
        r.syndrome = syndrome_against(error.pauli, code.generators);
    } else {
        AppliedError applied = arbitrary_error_op(*error.arbitrary, r.encoded);
        r.after_error = std::move(applied.state);
        r.renorm_factor = applied.renorm_factor;
    }

    StateVector corrected = r.after_error;
    r.correction = PauliString::identity(code.n);
    if (policy == Policy::correct_then_decode) {
        Syndrome syn;
        if (error.form == ErrorSpec::Form::pauli) {
            syn = eigen_syndrome(code, r.after_error);
        } else {
            auto [msyn, mstate] = projective_syndrome(code, r.after_error, seed);
            syn = msyn;
            corrected = std::move(mstate);
        }
        r.syndrome = syn;
        r.correction = lookup_correction(code, syn);
        corrected = apply_pauli(corrected, r.correction);
    }

    r.decoded = decode(code, corrected);
    r.residual = classify_residual(code, r.decoded, alpha, beta,
                                   &r.physical_output_error);

    DensityMatrix2 rho = reduced_density(r.decoded, code.useful_qubit);
    // <psi| rho |psi> for the probe state.
    cplx bra[2] = {std::conj(alpha), std::conj(beta)};
    cplx acc = bra[0] * (rho.m[0] * alpha + rho.m[1] * beta) +
               bra[1] * (rho.m[2] * alpha + rho.m[3] * beta);
    r.overlap_fidelity = acc.real();
    return r;
}

inline PipelineResult run_pipeline(const CodeSpec& code, const ErrorSpec& error,
                                   Policy policy, std::uint64_t seed = 0) {
    return run_pipeline(code, error, policy, probe_alpha(), probe_beta(), seed);
}

}  // namespace qecc
