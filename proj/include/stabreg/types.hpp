#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace stabreg {

using Complex = std::complex<double>;

enum class Verdict { stable, unstable, marginal };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::stable: return "stable";
        case Verdict::unstable: return "unstable";
        case Verdict::marginal: return "marginal";
    }
    return "?";
}

/// Numerical tolerances shared across the toolkit. All strictly positive.
struct Tolerances {
    double tau_e = 1e-8;      ///< degeneracy radius around exceptional points
    double tau_circ = 1e-9;   ///< unit-circle band for the root condition
    double tau_mult = 1e-7;   ///< root clustering radius (multiplicity detection)
    double tau_drop = 1e-9;   ///< relative threshold for a vanished leading coefficient
    double tau_res = 1e-10;   ///< relative root residual acceptance
    double tau_sep = 1e-8;    ///< distinct-root separation in the exceptional set
    double tau_locus = 1e-9;  ///< relative residual bound for locus samples

    void validate() const {
        for (double t : {tau_e, tau_circ, tau_mult, tau_drop, tau_res, tau_sep, tau_locus})
            if (!(t > 0.0))
                throw std::invalid_argument("tolerances must be positive");
    }
};

/// Rectangular viewport of the complex plane, sampled at nx*ny lattice nodes.
///
/// Node coordinates are integer-weighted interpolants so that endpoints are
/// exact and grids symmetric about an axis have exactly mirrored nodes.
struct GridSpec {
    double re_min = -3.0, re_max = 3.0;
    double im_min = -3.0, im_max = 3.0;
    int nx = 2, ny = 2;

    void validate() const {
        if (!(re_min < re_max) || !(im_min < im_max))
            throw std::invalid_argument("grid spec: empty span");
        if (nx < 2 || ny < 2)
            throw std::invalid_argument("grid spec: nx, ny must be >= 2");
    }

    double re_at(int ix) const {
        return (re_min * double(nx - 1 - ix) + re_max * double(ix)) / double(nx - 1);
    }
    double im_at(int iy) const {
        return (im_min * double(ny - 1 - iy) + im_max * double(iy)) / double(ny - 1);
    }
    Complex node(int ix, int iy) const { return {re_at(ix), im_at(iy)}; }
};

}  // namespace stabreg
