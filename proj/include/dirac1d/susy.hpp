#ifndef DIRAC1D_SUSY_HPP
#define DIRAC1D_SUSY_HPP

#include <functional>
#include <vector>

#include "dirac1d/core.hpp"
#include "dirac1d/potentials.hpp"

// Pseudo-supersymmetric partner construction from a superpotential (a
// pseudoscalar P or a scalar effective mass m + S), the partner T/R maps,
// and numerical factorization checks.
//
// Sign conventions: for a pseudoscalar superpotential U1 = (P^2 + P')/2m
// and U2 = (P^2 - P')/2m (these are exchanged in part of the literature);
// for the scalar case U1 = ((m+S)^2 - m^2 - S')/2m and U2 with +S'.

namespace dirac1d {

enum class SusyKind { Pseudoscalar, ScalarMass };

// (sign * d/dx + W)/sqrt(2m) applied to sampled (f, f') pairs.
struct FirstOrderOp {
    int sign = 1;
    std::function<Complex(double)> W;
    double m = 1.0;

    Complex apply(double x, Complex f, Complex fprime) const {
        return (double(sign) * fprime + W(x) * f) / std::sqrt(2.0 * m);
    }
};

struct SusyPair {
    SusyKind kind = SusyKind::Pseudoscalar;
    double m = 1.0;
    std::function<Complex(double)> W, dW;
    std::function<Complex(double)> U1, U2;
    Complex U1_minus{}, U1_plus{};
    Complex U2_minus{}, U2_plus{};
    Complex W_minus{}, W_plus{};
    FirstOrderOp L_op, M_op; // H1 = L M + shift, H2 = M L + shift
    double factorization_shift = 0.0;
};

// Throws WrongPotentialClass unless the model is pure-P (Pseudoscalar)
// or pure-S (ScalarMass).
SusyPair build_pair(const PotentialModel& model, SusyKind kind);

// Partner T/R relations in terms of the superpotential limits and the
// asymptotic momenta; maps a U2 result onto the U1 one.  Throws
// SingularMap at threshold momenta where a denominator vanishes.
ScatteringResult map_partner_scattering(const ScatteringResult& result2,
                                        Complex P_minus, Complex P_plus,
                                        Complex k_minus, Complex k_plus);

// Applies L then M (and M then L) with 4th-order central differences on a
// uniform grid and compares against -f''/2m + U f; returns the max
// residual relative to the global scale of the right-hand side.  Throws
// GridTooCoarse when halving h shows the residual is still
// discretization-dominated above 1e-4.
double verify_factorization(const SusyPair& pair,
                            const std::function<Complex(double)>& test_fn, double m,
                            double x_lo = -5.0, double x_hi = 5.0, double h = 1e-4);

// psi1 = i sqrt(2m)/(m - E) L psi2 on a uniform grid (throws
// ThresholdEnergy at E = m).
std::vector<Complex> intertwine_bound_state(const SusyPair& pair,
                                            const std::vector<double>& x,
                                            const std::vector<Complex>& psi2, double m,
                                            double E);

// Same, with callables for psi2 and its derivative.
std::function<Complex(double)> intertwine_bound_state(
    const SusyPair& pair, const std::function<Complex(double)>& psi2,
    const std::function<Complex(double)>& dpsi2, double m, double E);

} // namespace dirac1d

#endif
