// Channel error constructors: single Pauli errors, the arbitrary
// coefficient error c_o*I + c_x*X + c_y*Y + c_z*Z on one qubit, and the
// exhaustive universe of X/Z-typed double errors on distinct qubits.

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "qecc/pauli.hpp"
#include "qecc/state.hpp"

namespace qecc {

// Two conventions for an injected "Y error". standard_Y is the textbook
// matrix [[0,-i],[i,0]] = i*X*Z. paper_minus_iY injects -i*X*Z (the negated
// standard matrix), which is what the reference simulation applies and what
// produces the -i global phases in its decode-without-correction outputs.
enum class YConvention { standard_Y, paper_minus_iY };

inline PauliString pauli_error_op(char kind, int qubit, int n,
                                  YConvention conv = YConvention::paper_minus_iY) {
    if (qubit < 1 || qubit > n) throw std::out_of_range("error qubit out of range");
    if (kind == 'Y') {
        PauliString p = PauliString::single(n, 'Y', qubit);
        if (conv == YConvention::paper_minus_iY) p.phase_exp = (p.phase_exp + 2) & 3;
        return p;
    }
    return PauliString::single(n, kind, qubit);
}

struct ArbitraryError {
    cplx co{}, cx{}, cy{}, cz{};
    int qubit = 1;
    YConvention y_convention = YConvention::standard_Y;

    double coeff_norm_sq() const {
        return std::norm(co) + std::norm(cx) + std::norm(cy) + std::norm(cz);
    }

    void validate() const {
        if (coeff_norm_sq() == 0.0)
            throw std::invalid_argument("arbitrary error has all-zero coefficients");
        if (std::abs(coeff_norm_sq() - 1.0) > kTol)
            throw std::invalid_argument("arbitrary error coefficients not normalized");
    }
};

struct AppliedError {
    StateVector state;
    double renorm_factor = 1.0;  // norm of the raw output before renormalizing
};

// Applies c_o*I + c_x*X + c_y*Y + c_z*Z to the chosen qubit. The combination
// need not be unitary; the output is renormalized and the factor reported.
inline AppliedError arbitrary_error_op(const ArbitraryError& e, const StateVector& s) {
    e.validate();
    if (e.qubit < 1 || e.qubit > s.n) throw std::out_of_range("error qubit out of range");

    StateVector acc;
    acc.n = s.n;
    acc.amps.assign(s.dim(), cplx{});
    const struct {
        cplx c;
        char kind;
    } terms[] = {{e.co, 'I'}, {e.cx, 'X'}, {e.cy, 'Y'}, {e.cz, 'Z'}};
    for (const auto& t : terms) {
        if (t.c == cplx{}) continue;
        PauliString op = t.kind == 'I' ? PauliString::identity(s.n)
                                       : pauli_error_op(t.kind, e.qubit, s.n, e.y_convention);
        StateVector part = apply_pauli(s, op);
        for (std::size_t i = 0; i < s.dim(); ++i) acc.amps[i] += t.c * part.amps[i];
    }
    double norm = std::sqrt(acc.norm_sq());
    if (norm < kTol) throw std::runtime_error("arbitrary error annihilated the state");
    if (std::abs(norm - 1.0) > kTol)
        for (cplx& a : acc.amps) a /= norm;
    return {std::move(acc), norm};
}

// An unordered pair of single-qubit X/Z errors on distinct qubits,
// canonically stored with qubit1 < qubit2.
struct DoubleError {
    char kind1;  // 'X' or 'Z'
    int qubit1;
    char kind2;
    int qubit2;

    PauliString to_pauli(int n) const {
        return multiply(PauliString::single(n, kind1, qubit1),
                        PauliString::single(n, kind2, qubit2));
    }

    std::string label() const {
        return std::string(1, kind1) + std::to_string(qubit1) + " " +
               std::string(1, kind2) + std::to_string(qubit2);
    }

    bool operator==(const DoubleError& o) const {
        return kind1 == o.kind1 && qubit1 == o.qubit1 && kind2 == o.kind2 &&
               qubit2 == o.qubit2;
    }
};

// All C(n,2)*4 pairs, ordered by (qubit1, qubit2, kind1, kind2) with X < Z.
inline std::vector<DoubleError> double_error_universe(int n) {
    if (n != 5 && n != 7 && n != 9)
        throw std::invalid_argument("double error universe defined for n in {5,7,9}");
    std::vector<DoubleError> out;
    out.reserve(static_cast<std::size_t>(2 * n * (n - 1)));
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
            for (char t1 : {'X', 'Z'})
                for (char t2 : {'X', 'Z'})
                    out.push_back({t1, k, t2, l});
    return out;
}

}  // namespace qecc
