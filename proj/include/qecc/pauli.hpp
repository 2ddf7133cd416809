// Symplectic representation of n-qubit Pauli operators.
//
// A PauliString stores the operator  i^phase_exp * X(x_mask) * Z(z_mask),
// with the Z factor applied first. Mask bit (q-1) corresponds to qubit q.
// Under this convention the standard Y matrix at one qubit is i*X*Z, i.e.
// x=1, z=1, phase_exp=1.

#pragma once

#include <bit>
#include <cctype>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qecc/state.hpp"

namespace qecc {

struct PauliString {
    int n = 0;
    std::uint32_t x_mask = 0;
    std::uint32_t z_mask = 0;
    int phase_exp = 0;  // mod 4

    static PauliString identity(int n) { return {n, 0, 0, 0}; }

    static PauliString single(int n, char kind, int qubit) {
        if (qubit < 1 || qubit > n) throw std::out_of_range("pauli qubit out of range");
        std::uint32_t bit = 1u << (qubit - 1);
        switch (kind) {
            case 'I': return {n, 0, 0, 0};
            case 'X': return {n, bit, 0, 0};
            case 'Z': return {n, 0, bit, 0};
            case 'Y': return {n, bit, bit, 1};
            default: throw std::invalid_argument("unknown Pauli kind");
        }
    }

    bool is_identity() const { return x_mask == 0 && z_mask == 0 && phase_exp == 0; }

    bool operator==(const PauliString& o) const {
        return n == o.n && x_mask == o.x_mask && z_mask == o.z_mask &&
               phase_exp == o.phase_exp;
    }
};

inline PauliString multiply(const PauliString& p, const PauliString& q) {
    if (p.n != q.n) throw std::invalid_argument("pauli size mismatch");
    // Move q's X part across p's Z part: Z(zp) X(xq) = (-1)^{|zp & xq|} X(xq) Z(zp).
    int phase = p.phase_exp + q.phase_exp +
                2 * std::popcount(p.z_mask & q.x_mask);
    return {p.n, p.x_mask ^ q.x_mask, p.z_mask ^ q.z_mask, phase & 3};
}

inline PauliString inverse(const PauliString& p) {
    // (i^k X Z)^dag = i^{-k} Z X = i^{-k} (-1)^{|x & z|} X Z.
    int phase = (-p.phase_exp + 2 * std::popcount(p.x_mask & p.z_mask)) & 3;
    return {p.n, p.x_mask, p.z_mask, phase};
}

inline bool commutes(const PauliString& p, const PauliString& q) {
    if (p.n != q.n) throw std::invalid_argument("pauli size mismatch");
    return ((std::popcount(p.x_mask & q.z_mask) +
             std::popcount(p.z_mask & q.x_mask)) & 1) == 0;
}

inline cplx phase_value(int phase_exp) {
    switch (phase_exp & 3) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

// Label grammar: either positional ("IXZIY", one letter per qubit) or indexed
// tokens ("X1 Z4 Y7") separated by whitespace. Case-insensitive. Indexed
// tokens compose left to right as an operator product.
inline PauliString parse_pauli(int n, const std::string& label) {
    std::string trimmed;
    for (char c : label)
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    bool indexed = trimmed.find_first_of("0123456789") != std::string::npos;

    if (!indexed) {
        if (static_cast<int>(trimmed.size()) != n)
            throw std::invalid_argument("positional Pauli label must have length n");
        PauliString acc = PauliString::identity(n);
        for (int q = 1; q <= n; ++q) {
            char c = static_cast<char>(
                std::toupper(static_cast<unsigned char>(trimmed[static_cast<std::size_t>(q - 1)])));
            if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
                throw std::invalid_argument("bad Pauli letter in label");
            acc = multiply(acc, PauliString::single(n, c, q));
        }
        return acc;
    }

    PauliString acc = PauliString::identity(n);
    std::istringstream in(label);
    std::string tok;
    while (in >> tok) {
        char c = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
        if ((c != 'I' && c != 'X' && c != 'Y' && c != 'Z') || tok.size() < 2)
            throw std::invalid_argument("bad Pauli token '" + tok + "'");
        int q = 0;
        for (std::size_t i = 1; i < tok.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(tok[i])))
                throw std::invalid_argument("bad Pauli token '" + tok + "'");
            q = q * 10 + (tok[i] - '0');
        }
        if (q < 1 || q > n)
            throw std::invalid_argument("Pauli token qubit out of range: " + tok);
        acc = multiply(acc, PauliString::single(n, c, q));
    }
    return acc;
}

// Canonical text: per-qubit letters ascending ("X1 Z4", "Y4"), a position with
// both masks prints as Y, any leftover i^k prefix as "", "i", "-", "-i".
inline std::string pauli_label(const PauliString& p) {
    std::string body;
    int y_count = 0;
    for (int q = 1; q <= p.n; ++q) {
        std::uint32_t bit = 1u << (q - 1);
        bool x = p.x_mask & bit, z = p.z_mask & bit;
        if (!x && !z) continue;
        if (!body.empty()) body += ' ';
        if (x && z) {
            body += 'Y';
            ++y_count;
        } else {
            body += x ? 'X' : 'Z';
        }
        body += std::to_string(q);
    }
    int residual = (p.phase_exp - y_count) & 3;
    static const char* prefix[4] = {"", "i ", "-", "-i "};
    if (body.empty()) return std::string(prefix[residual]) + "I";
    return std::string(prefix[residual]) + body;
}

inline StateVector apply_pauli(const StateVector& s, const PauliString& p) {
    if (p.n != s.n) throw std::invalid_argument("pauli/state size mismatch");
    // Translate qubit-indexed masks (bit q-1) to statevector index bits (n-q).
    std::uint32_t xbits = 0, zbits = 0;
    for (int q = 1; q <= s.n; ++q) {
        std::uint32_t mbit = 1u << (q - 1);
        if (p.x_mask & mbit) xbits |= s.qubit_bit(q);
        if (p.z_mask & mbit) zbits |= s.qubit_bit(q);
    }
    cplx global = phase_value(p.phase_exp);
    StateVector out;
    out.n = s.n;
    out.amps.assign(s.dim(), cplx{});
    for (std::size_t i = 0; i < s.dim(); ++i) {
        double sign = (std::popcount(static_cast<std::uint32_t>(i) & zbits) & 1) ? -1.0 : 1.0;
        out.amps[i ^ xbits] = global * sign * s.amps[i];
    }
    return out;
}

// Dense 2^n x 2^n matrix (row major). Guarded to n <= 6.
inline std::vector<cplx> to_dense(const PauliString& p) {
    if (p.n > 6) throw std::invalid_argument("to_dense limited to n <= 6");
    std::size_t dim = 1ull << p.n;
    std::uint32_t xbits = 0, zbits = 0;
    for (int q = 1; q <= p.n; ++q) {
        std::uint32_t mbit = 1u << (q - 1);
        if (p.x_mask & mbit) xbits |= 1u << (p.n - q);
        if (p.z_mask & mbit) zbits |= 1u << (p.n - q);
    }
    cplx global = phase_value(p.phase_exp);
    std::vector<cplx> m(dim * dim, cplx{});
    for (std::size_t col = 0; col < dim; ++col) {
        double sign = (std::popcount(static_cast<std::uint32_t>(col) & zbits) & 1) ? -1.0 : 1.0;
        m[(col ^ xbits) * dim + col] = global * sign;
    }
    return m;
}

// Syndrome bit vector, one bit per generator in the code's declared order.
// 0 means eigenvalue +1, 1 means eigenvalue -1.
struct Syndrome {
    std::vector<std::uint8_t> bits;

    bool operator==(const Syndrome& o) const { return bits == o.bits; }

    std::string to_string() const {
        std::string s;
        for (std::uint8_t b : bits) s += b ? '1' : '0';
        return s;
    }

    static Syndrome from_string(const std::string& s) {
        Syndrome syn;
        for (char c : s) {
            if (c != '0' && c != '1') throw std::invalid_argument("bad syndrome string");
            syn.bits.push_back(c == '1');
        }
        return syn;
    }

    std::size_t to_index() const {
        std::size_t v = 0;
        for (std::uint8_t b : bits) v = (v << 1) | b;
        return v;
    }

    static Syndrome from_index(std::size_t v, std::size_t width) {
        Syndrome syn;
        syn.bits.resize(width);
        for (std::size_t i = 0; i < width; ++i)
            syn.bits[i] = (v >> (width - 1 - i)) & 1u;
        return syn;
    }

    Syndrome operator^(const Syndrome& o) const {
        if (bits.size() != o.bits.size())
            throw std::invalid_argument("syndrome length mismatch");
        Syndrome r = *this;
        for (std::size_t i = 0; i < bits.size(); ++i) r.bits[i] ^= o.bits[i];
        return r;
    }
};

inline Syndrome syndrome_against(const PauliString& error,
                                 const std::vector<PauliString>& generators) {
    Syndrome syn;
    syn.bits.reserve(generators.size());
    for (const PauliString& g : generators)
        syn.bits.push_back(commutes(error, g) ? 0 : 1);
    return syn;
}

}  // namespace qecc
