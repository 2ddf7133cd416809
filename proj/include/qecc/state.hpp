// Dense statevector simulation of small n-qubit registers.
//
// Conventions used throughout the library:
//   * qubits are numbered 1..n, qubit 1 is the most significant index bit,
//     so basis index b corresponds to the ket |q1 q2 ... qn> read off the
//     binary digits of b from high to low;
//   * gates return new states, inputs are never mutated;
//   * amplitudes are double-precision complex, equality tolerance 1e-12.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qecc {

using cplx = std::complex<double>;

inline constexpr double kTol = 1e-12;
inline constexpr int kMaxQubits = 12;

struct StateVector {
    int n = 0;
    std::vector<cplx> amps;

    std::size_t dim() const { return amps.size(); }

    // Index-space bit for 1-based qubit q (qubit 1 = MSB).
    std::uint32_t qubit_bit(int q) const { return 1u << (n - q); }

    double norm_sq() const {
        double s = 0.0;
        for (const cplx& a : amps) s += std::norm(a);
        return s;
    }
};

enum class GateKind { H, X, Y, Z, CNOT, TOFFOLI, PERMUTE };

struct GateOp {
    GateKind kind;
    std::vector<int> targets;      // 1-based qubit indices
    std::vector<int> permutation;  // PERMUTE only, gather semantics

    static GateOp h(int q) { return {GateKind::H, {q}, {}}; }
    static GateOp x(int q) { return {GateKind::X, {q}, {}}; }
    static GateOp y(int q) { return {GateKind::Y, {q}, {}}; }
    static GateOp z(int q) { return {GateKind::Z, {q}, {}}; }
    static GateOp cnot(int control, int target) {
        return {GateKind::CNOT, {control, target}, {}};
    }
    static GateOp toffoli(int control1, int control2, int target) {
        return {GateKind::TOFFOLI, {control1, control2, target}, {}};
    }
    static GateOp permute(std::vector<int> gather) {
        return {GateKind::PERMUTE, {}, std::move(gather)};
    }
};

namespace detail {

inline void check_qubit(const StateVector& s, int q) {
    if (q < 1 || q > s.n)
        throw std::out_of_range("qubit index " + std::to_string(q) +
                                " out of range 1.." + std::to_string(s.n));
}

inline void check_distinct(const std::vector<int>& qs) {
    for (std::size_t i = 0; i < qs.size(); ++i)
        for (std::size_t j = i + 1; j < qs.size(); ++j)
            if (qs[i] == qs[j])
                throw std::invalid_argument("gate targets must be distinct");
}

inline bool is_permutation_of_1_to_n(const std::vector<int>& p, int n) {
    if (static_cast<int>(p.size()) != n) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : p) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

}  // namespace detail

// Tensor-product state from per-qubit amplitude pairs. Qubits not mentioned
// in `assignments` start in |0>. Each pair must be normalized within 1e-12.
inline StateVector make_state(
    int n, const std::vector<std::pair<int, std::array<cplx, 2>>>& assignments) {
    if (n < 1 || n > kMaxQubits)
        throw std::invalid_argument("qubit count must be in 1.." +
                                    std::to_string(kMaxQubits));
    std::vector<std::array<cplx, 2>> pairs(static_cast<std::size_t>(n),
                                           {cplx{1.0, 0.0}, cplx{0.0, 0.0}});
    for (const auto& [q, pair] : assignments) {
        if (q < 1 || q > n) throw std::out_of_range("assignment qubit out of range");
        double norm = std::norm(pair[0]) + std::norm(pair[1]);
        if (std::abs(norm - 1.0) > kTol)
            throw std::invalid_argument("single-qubit amplitude pair is not normalized");
        pairs[static_cast<std::size_t>(q - 1)] = pair;
    }
    StateVector s;
    s.n = n;
    s.amps.assign(1ull << n, cplx{});
    for (std::size_t idx = 0; idx < s.dim(); ++idx) {
        cplx a{1.0, 0.0};
        for (int q = 1; q <= n; ++q) {
            int bit = (idx >> (n - q)) & 1u;
            a *= pairs[static_cast<std::size_t>(q - 1)][static_cast<std::size_t>(bit)];
        }
        s.amps[idx] = a;
    }
    return s;
}

inline StateVector basis_state(int n, std::uint32_t index) {
    if (n < 1 || n > kMaxQubits) throw std::invalid_argument("bad qubit count");
    StateVector s;
    s.n = n;
    s.amps.assign(1ull << n, cplx{});
    s.amps.at(index) = cplx{1.0, 0.0};
    return s;
}

inline StateVector kron(const StateVector& a, const StateVector& b) {
    if (a.n + b.n > kMaxQubits)
        throw std::invalid_argument("kron result exceeds " +
                                    std::to_string(kMaxQubits) + " qubits");
    StateVector out;
    out.n = a.n + b.n;
    out.amps.assign(1ull << out.n, cplx{});
    for (std::size_t x = 0; x < a.dim(); ++x) {
        if (a.amps[x] == cplx{}) continue;
        for (std::size_t y = 0; y < b.dim(); ++y)
            out.amps[(x << b.n) | y] = a.amps[x] * b.amps[y];
    }
    return out;
}

// GATHER semantics: new qubit position i holds old qubit gather[i].
inline StateVector permute_qubits(const StateVector& s, const std::vector<int>& gather) {
    if (!detail::is_permutation_of_1_to_n(gather, s.n))
        throw std::invalid_argument("gather list is not a permutation of 1..n");
    StateVector out;
    out.n = s.n;
    out.amps.assign(s.dim(), cplx{});
    for (std::size_t idx = 0; idx < s.dim(); ++idx) {
        std::size_t nidx = 0;
        for (int i = 1; i <= s.n; ++i) {
            std::size_t bit = (idx >> (s.n - gather[static_cast<std::size_t>(i - 1)])) & 1u;
            nidx |= bit << (s.n - i);
        }
        out.amps[nidx] = s.amps[idx];
    }
    return out;
}

inline std::vector<int> inverse_permutation(const std::vector<int>& gather) {
    std::vector<int> inv(gather.size());
    for (std::size_t i = 0; i < gather.size(); ++i)
        inv[static_cast<std::size_t>(gather[i] - 1)] = static_cast<int>(i) + 1;
    return inv;
}

inline StateVector apply_gate(const StateVector& s, const GateOp& op) {
    if (op.kind == GateKind::PERMUTE) return permute_qubits(s, op.permutation);

    detail::check_distinct(op.targets);
    for (int q : op.targets) detail::check_qubit(s, q);

    StateVector out = s;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    switch (op.kind) {
        case GateKind::H: {
            if (op.targets.size() != 1) throw std::invalid_argument("H takes 1 target");
            std::uint32_t bit = s.qubit_bit(op.targets[0]);
            for (std::size_t i = 0; i < s.dim(); ++i) {
                if (i & bit) continue;
                cplx a0 = out.amps[i], a1 = out.amps[i | bit];
                out.amps[i] = (a0 + a1) * inv_sqrt2;
                out.amps[i | bit] = (a0 - a1) * inv_sqrt2;
            }
            break;
        }
        case GateKind::X: {
            if (op.targets.size() != 1) throw std::invalid_argument("X takes 1 target");
            std::uint32_t bit = s.qubit_bit(op.targets[0]);
            for (std::size_t i = 0; i < s.dim(); ++i)
                if (!(i & bit)) std::swap(out.amps[i], out.amps[i | bit]);
            break;
        }
        case GateKind::Y: {
            if (op.targets.size() != 1) throw std::invalid_argument("Y takes 1 target");
            std::uint32_t bit = s.qubit_bit(op.targets[0]);
            const cplx im{0.0, 1.0};
            for (std::size_t i = 0; i < s.dim(); ++i) {
                if (i & bit) continue;
                cplx a0 = out.amps[i], a1 = out.amps[i | bit];
                out.amps[i] = -im * a1;
                out.amps[i | bit] = im * a0;
            }
            break;
        }
        case GateKind::Z: {
            if (op.targets.size() != 1) throw std::invalid_argument("Z takes 1 target");
            std::uint32_t bit = s.qubit_bit(op.targets[0]);
            for (std::size_t i = 0; i < s.dim(); ++i)
                if (i & bit) out.amps[i] = -out.amps[i];
            break;
        }
        case GateKind::CNOT: {
            if (op.targets.size() != 2) throw std::invalid_argument("CNOT takes 2 targets");
            std::uint32_t cbit = s.qubit_bit(op.targets[0]);
            std::uint32_t tbit = s.qubit_bit(op.targets[1]);
            for (std::size_t i = 0; i < s.dim(); ++i)
                if ((i & cbit) && !(i & tbit)) std::swap(out.amps[i], out.amps[i | tbit]);
            break;
        }
        case GateKind::TOFFOLI: {
            if (op.targets.size() != 3)
                throw std::invalid_argument("TOFFOLI takes 3 targets");
            std::uint32_t c1 = s.qubit_bit(op.targets[0]);
            std::uint32_t c2 = s.qubit_bit(op.targets[1]);
            std::uint32_t tbit = s.qubit_bit(op.targets[2]);
            for (std::size_t i = 0; i < s.dim(); ++i)
                if ((i & c1) && (i & c2) && !(i & tbit))
                    std::swap(out.amps[i], out.amps[i | tbit]);
            break;
        }
        default:
            throw std::logic_error("unhandled gate kind");
    }
    return out;
}

inline StateVector apply_circuit(StateVector s, const std::vector<GateOp>& ops) {
    for (const GateOp& op : ops) s = apply_gate(s, op);
    return s;
}

inline cplx overlap(const StateVector& a, const StateVector& b) {
    if (a.n != b.n) throw std::invalid_argument("overlap: dimension mismatch");
    cplx acc{};
    for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a.amps[i]) * b.amps[i];
    return acc;
}

inline double distance_inf(const StateVector& a, const StateVector& b) {
    if (a.n != b.n) throw std::invalid_argument("distance: dimension mismatch");
    double d = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        d = std::max(d, std::abs(a.amps[i] - b.amps[i]));
    return d;
}

// 2x2 density matrix, row major: m[0]=rho00, m[1]=rho01, m[2]=rho10, m[3]=rho11.
struct DensityMatrix2 {
    std::array<cplx, 4> m{};

    cplx trace() const { return m[0] + m[3]; }
    cplx det() const { return m[0] * m[3] - m[1] * m[2]; }

    bool is_hermitian(double tol = kTol) const {
        return std::abs(m[0].imag()) <= tol && std::abs(m[3].imag()) <= tol &&
               std::abs(m[1] - std::conj(m[2])) <= tol;
    }

    // Eigenvalues of the Hermitian part, ascending.
    std::array<double, 2> eigenvalues() const {
        double t = trace().real();
        double d = det().real();
        double disc = std::sqrt(std::max(0.0, t * t / 4.0 - d));
        return {t / 2.0 - disc, t / 2.0 + disc};
    }

    void validate(double tol = kTol) const {
        if (!is_hermitian(tol)) throw std::invalid_argument("density matrix not Hermitian");
        if (std::abs(trace().real() - 1.0) > tol)
            throw std::invalid_argument("density matrix trace != 1");
        if (eigenvalues()[0] < -tol)
            throw std::invalid_argument("density matrix not positive semidefinite");
    }

    static DensityMatrix2 pure(const cplx& a0, const cplx& a1) {
        DensityMatrix2 r;
        r.m = {a0 * std::conj(a0), a0 * std::conj(a1), a1 * std::conj(a0),
               a1 * std::conj(a1)};
        return r;
    }
};

// Partial trace over every qubit except q.
inline DensityMatrix2 reduced_density(const StateVector& s, int q) {
    detail::check_qubit(s, q);
    std::uint32_t bit = s.qubit_bit(q);
    DensityMatrix2 rho;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        if (i & bit) continue;
        cplx a0 = s.amps[i];
        cplx a1 = s.amps[i | bit];
        rho.m[0] += a0 * std::conj(a0);
        rho.m[1] += a0 * std::conj(a1);
        rho.m[2] += a1 * std::conj(a0);
        rho.m[3] += a1 * std::conj(a1);
    }
    return rho;
}

inline double purity(const DensityMatrix2& rho) {
    // Tr(rho^2), real for Hermitian input.
    cplx t = rho.m[0] * rho.m[0] + rho.m[1] * rho.m[2] + rho.m[2] * rho.m[1] +
             rho.m[3] * rho.m[3];
    return t.real();
}

namespace detail {

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    std::string s(buf);
    if (s == "-0") s = "0";
    return s;
}

inline std::string format_amplitude(const cplx& a, double tol) {
    double re = a.real(), im = a.imag();
    if (std::abs(im) <= tol) return format_double(re);
    if (std::abs(re) <= tol) return format_double(im) + "i";
    std::string s = format_double(re);
    s += (im >= 0 ? "+" : "");
    s += format_double(im) + "i";
    return s;
}

}  // namespace detail

// Named amplitudes for symbolic printing: an amplitude equal to value, -value,
// i*value or -i*value (within tol) prints as "name", "-name", "i name", "-i name".
using SymbolTable = std::vector<std::pair<std::string, cplx>>;

inline std::string dirac_format(const StateVector& s, double tolerance,
                                const SymbolTable& symbols = {}) {
    static const std::array<std::pair<cplx, const char*>, 4> factors{{
        {cplx{1, 0}, ""}, {cplx{-1, 0}, "-"}, {cplx{0, 1}, "i "}, {cplx{0, -1}, "-i "}}};
    std::string out;
    for (std::size_t idx = 0; idx < s.dim(); ++idx) {
        const cplx& a = s.amps[idx];
        if (std::abs(a) < tolerance) continue;
        std::string coef;
        for (const auto& [name, value] : symbols) {
            for (const auto& [f, prefix] : factors) {
                if (std::abs(a - f * value) <= tolerance) {
                    coef = std::string(prefix) + name;
                    break;
                }
            }
            if (!coef.empty()) break;
        }
        if (coef.empty()) coef = detail::format_amplitude(a, tolerance);
        std::string bits;
        for (int q = 1; q <= s.n; ++q)
            bits += ((idx >> (s.n - q)) & 1u) ? '1' : '0';
        if (!out.empty()) out += " + ";
        out += "(" + coef + ")|" + bits + ">";
    }
    if (out.empty()) out = "0";
    return out;
}

}  // namespace qecc
