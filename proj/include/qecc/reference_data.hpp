// Published reference tabulations used by the verification suite and by the
// table emitter: the expected decode-without-correction outputs of the
// nine-qubit code, and the mixed double-error pairs the seven-qubit
// tabulation actually lists (three X/Z pairs are absent from it).

#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "qecc/errors.hpp"

namespace qecc::reference {

struct DecodeOnlyExpectation {
    std::string input;   // injected error, e.g. "Y1"
    std::string output;  // decoded-register error, e.g. "-i X2 X3 X4 X5"
};

// Expected outputs of the nine-qubit pipeline with no correction applied,
// for every single-qubit error (Y injected as -i*X*Z).
inline const std::vector<DecodeOnlyExpectation>& shor9_decode_only_outputs() {
    static const std::vector<DecodeOnlyExpectation> rows = {
        {"X1", "X4 X5"},  {"X2", "X4"},    {"X3", "X5"},
        {"X4", "X6 X7"},  {"X5", "X6"},    {"X6", "X7"},
        {"X7", "X8 X9"},  {"X8", "X8"},    {"X9", "X9"},
        {"Z1", "X2 X3"},  {"Z2", "X2 X3"}, {"Z3", "X2 X3"},
        {"Z4", "X2"},     {"Z5", "X2"},    {"Z6", "X2"},
        {"Z7", "X3"},     {"Z8", "X3"},    {"Z9", "X3"},
        {"Y1", "-i X2 X3 X4 X5"}, {"Y2", "-i X2 X3 X4"}, {"Y3", "-i X2 X3 X5"},
        {"Y4", "-i X2 X6 X7"},    {"Y5", "-i X2 X6"},    {"Y6", "-i X2 X7"},
        {"Y7", "-i X3 X8 X9"},    {"Y8", "-i X3 X8"},    {"Y9", "-i X3 X9"},
    };
    return rows;
}

// The 39 mixed X/Z double errors listed for the seven-qubit code.
inline const std::vector<DoubleError>& steane7_listed_mixed_doubles() {
    static const std::vector<DoubleError> rows = [] {
        auto mk = [](char k1, int q1, char k2, int q2) -> DoubleError {
            if (q1 > q2) return {k2, q2, k1, q1};
            return {k1, q1, k2, q2};
        };
        std::vector<DoubleError> v = {
            mk('X', 1, 'Z', 4), mk('X', 1, 'Z', 5), mk('X', 1, 'Z', 6),
            mk('X', 1, 'Z', 7), mk('X', 2, 'Z', 7), mk('X', 3, 'Z', 4),
            mk('X', 3, 'Z', 6), mk('X', 3, 'Z', 7), mk('X', 4, 'Z', 7),
            mk('X', 5, 'Z', 7), mk('X', 6, 'Z', 5), mk('X', 6, 'Z', 7),
            mk('X', 5, 'Z', 6),
            mk('Z', 1, 'X', 4), mk('Z', 2, 'X', 4), mk('Z', 3, 'X', 4),
            mk('Z', 1, 'X', 5), mk('Z', 2, 'X', 5), mk('Z', 1, 'X', 6),
            mk('Z', 2, 'X', 6), mk('Z', 3, 'X', 6), mk('Z', 1, 'X', 7),
            mk('Z', 2, 'X', 7), mk('Z', 3, 'X', 7), mk('Z', 4, 'X', 5),
            mk('Z', 3, 'X', 5),
            mk('Z', 1, 'X', 3), mk('X', 1, 'Z', 2), mk('X', 1, 'Z', 3),
            mk('X', 2, 'Z', 1), mk('X', 2, 'Z', 3), mk('X', 2, 'Z', 4),
            mk('X', 2, 'Z', 5), mk('X', 2, 'Z', 6), mk('Z', 2, 'X', 3),
            mk('X', 4, 'Z', 5), mk('X', 4, 'Z', 6), mk('Z', 4, 'X', 6),
            mk('X', 3, 'Z', 5),
        };
        return v;
    }();
    return rows;
}

// The 81-element double-error set the seven-qubit tabulation covers: every
// X/X and Z/Z pair plus the 39 listed mixed pairs.
inline std::vector<DoubleError> steane7_paper_doubles() {
    std::vector<DoubleError> out;
    for (const DoubleError& d : double_error_universe(7))
        if (d.kind1 == d.kind2) out.push_back(d);
    const auto& mixed = steane7_listed_mixed_doubles();
    out.insert(out.end(), mixed.begin(), mixed.end());
    return out;
}

// Mixed pairs of the full universe that the tabulation does not list.
inline std::vector<DoubleError> steane7_unlisted_doubles() {
    std::vector<DoubleError> out;
    const auto& listed = steane7_listed_mixed_doubles();
    for (const DoubleError& d : double_error_universe(7)) {
        if (d.kind1 == d.kind2) continue;
        if (std::find(listed.begin(), listed.end(), d) == listed.end()) out.push_back(d);
    }
    return out;
}

inline bool steane7_is_listed(const DoubleError& d) {
    if (d.kind1 == d.kind2) return true;
    const auto& listed = steane7_listed_mixed_doubles();
    return std::find(listed.begin(), listed.end(), d) != listed.end();
}

}  // namespace qecc::reference
