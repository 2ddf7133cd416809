// Fidelity of the recovered qubit and the depolarizing-channel code
// comparison. Counts and curve coefficients are exact rationals; floating
// point only enters through statevectors and quadrature.

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "qecc/codes.hpp"
#include "qecc/errors.hpp"
#include "qecc/state.hpp"

namespace qecc {

struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        normalize();
    }

    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    Rational operator+(const Rational& o) const {
        return {num * o.den + o.num * den, den * o.den};
    }
    Rational operator-(const Rational& o) const {
        return {num * o.den - o.num * den, den * o.den};
    }
    Rational operator*(const Rational& o) const { return {num * o.num, den * o.den}; }
    Rational operator/(const Rational& o) const {
        if (o.num == 0) throw std::invalid_argument("rational division by zero");
        return {num * o.den, den * o.num};
    }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string to_string() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

struct BlochAngles {
    double theta = 0.0;  // [0, pi]
    double phi = 0.0;    // [0, 2 pi)

    void validate() const {
        if (theta < 0.0 || theta > std::numbers::pi + 1e-12)
            throw std::invalid_argument("theta out of [0, pi]");
        if (phi < 0.0 || phi >= 2.0 * std::numbers::pi + 1e-12)
            throw std::invalid_argument("phi out of [0, 2 pi)");
    }
};

inline std::pair<cplx, cplx> bloch_state(const BlochAngles& a) {
    a.validate();
    return {cplx{std::cos(a.theta / 2.0), 0.0},
            std::polar(std::sin(a.theta / 2.0), a.phi)};
}

inline double fidelity_pure(const StateVector& psi, const DensityMatrix2& rho) {
    if (psi.n != 1) throw std::invalid_argument("fidelity_pure expects a 1-qubit state");
    cplx a = psi.amps[0], b = psi.amps[1];
    cplx acc = std::conj(a) * (rho.m[0] * a + rho.m[1] * b) +
               std::conj(b) * (rho.m[2] * a + rho.m[3] * b);
    return acc.real();
}

inline double fidelity_pure(const std::pair<cplx, cplx>& psi, const DensityMatrix2& rho) {
    StateVector s;
    s.n = 1;
    s.amps = {psi.first, psi.second};
    return fidelity_pure(s, rho);
}

namespace detail {

// Square root of a 2x2 PSD Hermitian matrix via eigendecomposition. Tiny
// eigenvalues clamp to zero: sqrt amplifies rounding noise at rank 1.
inline DensityMatrix2 sqrt_psd(const DensityMatrix2& a) {
    auto eig = a.eigenvalues();
    double lo = eig[0] < 1e-14 ? 0.0 : eig[0];
    double hi = std::max(0.0, eig[1]);
    DensityMatrix2 r;
    if (std::abs(a.m[1]) < 1e-15 && std::abs(a.m[2]) < 1e-15) {
        auto clamped_sqrt = [](double v) { return v < 1e-14 ? 0.0 : std::sqrt(v); };
        r.m = {cplx{clamped_sqrt(a.m[0].real()), 0}, {},
               {}, cplx{clamped_sqrt(a.m[3].real()), 0}};
        return r;
    }
    // Eigenvector for hi: (m01, hi - m00), normalized.
    cplx v0 = a.m[1], v1 = cplx{hi, 0} - a.m[0];
    double nrm = std::sqrt(std::norm(v0) + std::norm(v1));
    v0 /= nrm;
    v1 /= nrm;
    double shi = std::sqrt(hi), slo = std::sqrt(lo);
    // sqrt = slo * I + (shi - slo) * |v><v|   (valid since eigenvalues differ).
    r.m[0] = slo + (shi - slo) * v0 * std::conj(v0);
    r.m[1] = (shi - slo) * v0 * std::conj(v1);
    r.m[2] = (shi - slo) * v1 * std::conj(v0);
    r.m[3] = slo + (shi - slo) * v1 * std::conj(v1);
    return r;
}

inline DensityMatrix2 matmul(const DensityMatrix2& a, const DensityMatrix2& b) {
    DensityMatrix2 r;
    r.m[0] = a.m[0] * b.m[0] + a.m[1] * b.m[2];
    r.m[1] = a.m[0] * b.m[1] + a.m[1] * b.m[3];
    r.m[2] = a.m[2] * b.m[0] + a.m[3] * b.m[2];
    r.m[3] = a.m[2] * b.m[1] + a.m[3] * b.m[3];
    return r;
}

}  // namespace detail

// F(sigma, rho) = |Tr sqrt(sqrt(sigma) rho sqrt(sigma))|^2 for 2x2 density
// matrices, evaluated through the eigenvalues of the inner product matrix.
inline double fidelity_general(const DensityMatrix2& sigma, const DensityMatrix2& rho) {
    sigma.validate(1e-9);
    rho.validate(1e-9);
    DensityMatrix2 s = detail::sqrt_psd(sigma);
    DensityMatrix2 m = detail::matmul(detail::matmul(s, rho), s);
    double tr = m.trace().real();
    // det m factors as det(sigma) det(rho); evaluating it that way keeps
    // rank-1 inputs from leaking rounding noise through the square root.
    auto clamp_det = [](double v) { return v < 1e-14 ? 0.0 : v; };
    double dt = clamp_det(sigma.det().real()) * clamp_det(rho.det().real());
    double f = tr + 2.0 * std::sqrt(dt);
    return std::min(std::max(f, 0.0), 1.0 + 1e-12);
}

// Closed forms of Table-7 type; the residual's global phase cannot matter.
inline double residual_fidelity(const BlochAngles& a, const ResidualClass& residual) {
    a.validate();
    switch (residual.logical) {
        case LogicalError::I: return 1.0;
        case LogicalError::X: {
            double v = std::sin(a.theta) * std::cos(a.phi);
            return v * v;
        }
        case LogicalError::Y: {
            double v = std::sin(a.theta) * std::sin(a.phi);
            return v * v;
        }
        default: {
            double v = std::cos(a.theta);
            return v * v;
        }
    }
}

struct QuadratureGrid {
    int n_theta = 64;
    int n_phi = 128;
};

namespace detail {

// Gauss-Legendre nodes/weights on [-1, 1].
inline void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.resize(static_cast<std::size_t>(n));
    weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[static_cast<std::size_t>(i)] = -x;
        nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        weights[static_cast<std::size_t>(i)] = w;
        weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
}

}  // namespace detail

// (1/4pi) * \int f(theta, phi) sin(theta) dtheta dphi. Gauss-Legendre in
// cos(theta) (the sin-weight substitution), midpoint in phi; both are exact
// for the trigonometric-polynomial integrands this module averages.
inline double bloch_average(const std::function<double(const BlochAngles&)>& f,
                            const QuadratureGrid& grid = {}) {
    if (grid.n_theta < 32 || grid.n_phi < 64)
        throw std::invalid_argument("quadrature grid must be at least 32x64");
    std::vector<double> u, w;
    detail::gauss_legendre(grid.n_theta, u, w);
    double acc = 0.0;
    for (int i = 0; i < grid.n_theta; ++i) {
        double theta = std::acos(u[static_cast<std::size_t>(i)]);
        double inner = 0.0;
        for (int j = 0; j < grid.n_phi; ++j) {
            double phi = (j + 0.5) * 2.0 * std::numbers::pi / grid.n_phi;
            inner += f(BlochAngles{theta, phi});
        }
        acc += w[static_cast<std::size_t>(i)] * inner * (2.0 * std::numbers::pi / grid.n_phi);
    }
    return acc / (4.0 * std::numbers::pi);
}

enum class AverageMethod { analytic, quadrature };

inline double average_residual_fidelity(const ResidualClass& residual,
                                        AverageMethod method = AverageMethod::analytic,
                                        const QuadratureGrid& grid = {}) {
    if (method == AverageMethod::analytic)
        return residual.logical == LogicalError::I ? 1.0 : 1.0 / 3.0;
    return bloch_average(
        [&](const BlochAngles& a) { return residual_fidelity(a, residual); }, grid);
}

struct FNReport {
    std::string code;
    std::string universe_label;  // "paper-tables" or "full-XZ-universe"
    long long total = 0;         // N
    long long identity_count = 0;  // x
    std::map<char, long long> residual_histogram;  // over {I,X,Y,Z}
    Rational f;
};

inline FNReport compute_f(const CodeSpec& code, const std::vector<DoubleError>& universe,
                          const std::string& universe_label) {
    if (universe.empty()) throw std::invalid_argument("compute_f: empty universe");
    FNReport rep;
    rep.code = code.name;
    rep.universe_label = universe_label;
    rep.total = static_cast<long long>(universe.size());
    rep.residual_histogram = {{'I', 0}, {'X', 0}, {'Y', 0}, {'Z', 0}};
    for (const DoubleError& d : universe) {
        PipelineResult r = run_pipeline(code, ErrorSpec::from_double(d, code.n),
                                        Policy::correct_then_decode);
        ++rep.residual_histogram[logical_char(r.residual.logical)];
    }
    rep.identity_count = rep.residual_histogram['I'];
    long long n = rep.total, x = rep.identity_count;
    rep.f = (Rational(x) + Rational(n - x, 3)) / Rational(n);
    return rep;
}

struct FidelityCurve {
    std::string label;
    enum class Form { linear, quadratic } form = Form::quadratic;
    Rational coefficient;  // F = 1 - c P (linear) or F = 1 - c P^2 (quadratic)

    double value(double p) const {
        double c = coefficient.to_double();
        return form == Form::linear ? 1.0 - c * p : 1.0 - c * p * p;
    }

    Rational value_rational(const Rational& p) const {
        return form == Form::linear ? Rational(1) - coefficient * p
                                    : Rational(1) - coefficient * p * p;
    }

    std::string exact_text() const {
        const char* pow = form == Form::linear ? "P" : "P^2";
        return "1-(" + coefficient.to_string() + ")" + pow;
    }
};

// The unprotected-qubit curve F = 1 - (2/3) P.
inline FidelityCurve curve_unprotected() {
    return {"C0", FidelityCurve::Form::linear, Rational(2, 3)};
}

// F = 1 + (f - 1) P^2 for a code with double-error average f.
inline FidelityCurve curve_for_code(const std::string& label, const Rational& f) {
    return {label, FidelityCurve::Form::quadratic, Rational(1) - f};
}

inline std::vector<double> parse_p_grid(double start, double stop, int steps) {
    if (steps < 1) throw std::invalid_argument("P grid needs at least one step");
    if (start < 0.0 || stop > 1.0 || stop < start)
        throw std::invalid_argument("P grid must lie in [0, 1]");
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        double t = steps == 1 ? 0.0 : static_cast<double>(i) / (steps - 1);
        grid.push_back(start + t * (stop - start));
    }
    return grid;
}

}  // namespace qecc
