#ifndef DIRAC1D_INTEGRATOR_HPP
#define DIRAC1D_INTEGRATOR_HPP

#include <functional>
#include <utility>

#include "dirac1d/core.hpp"
#include "dirac1d/potentials.hpp"

// Direct numerical integration of the coupled first-order Dirac system
// across a finite box, solution-coefficient extraction by asymptotic
// matching, and reduction of special potential classes to
// Schroedinger-like equations.

namespace dirac1d {

struct IntegratorConfig {
    double L = 0.0; // box half-width; 0 picks the model default per tail
    double rtol = 1e-10;
    double atol = 1e-12;
    std::size_t max_steps = 2'000'000;
    bool richardson = true; // 1/L extrapolation for algebraic tails
};

// Right-hand side of the first-order system
//   psi1' =  P psi1 + i (E - V + m + S) psi2
//   psi2' = -P psi2 + i (E - V - m - S) psi1
std::pair<Complex, Complex> rhs(const PotentialModel& model,
                                const PhysicalParams& params,
                                const SpinorState& state);

struct TwoSolutionResult {
    SolutionCoefficients coeffs;
    AsymptoticChannel channel;
    double wronskian_drift = 0.0;
    double error_estimate = 0.0;
    std::size_t steps = 0;
    double box = 0.0;
};

// Integrates the channel-pure solutions (1,C-)e^{ik-x} and (1,D-)e^{-ik-x}
// from -L to +L and decomposes them in the + side channel basis.
TwoSolutionResult integrate_two_solutions(const PotentialModel& model,
                                          const PhysicalParams& params,
                                          const IntegratorConfig& cfg = {});

struct ScatterOutput {
    ScatteringResult result;
    AsymptoticChannel channel;
    double wronskian_drift = 0.0;
    double error_estimate = 0.0;
    double box = 0.0;
};

ScatterOutput scatter(const PotentialModel& model, const PhysicalParams& params,
                      const IntegratorConfig& cfg = {});

// Growing-wave coefficient (normalized) at +L of the solution that decays
// toward -infinity; vanishes exactly at a transmission pole.  Used by the
// bound-state search at k = i kappa.
Complex bound_matching_determinant(const PotentialModel& model,
                                   const PhysicalParams& params,
                                   const IntegratorConfig& cfg = {});

// --------------------------------------------------- reduced problems --

enum class Reduction {
    SpinSym,       // V = S:    -psi1''/2m + (E+m)/m V psi1 = eps psi1
    PseudoSpinSym, // V = -S:   -psi2''/2m + (E-m)/m V psi2 = eps psi2
    PseudoScalar1, // pure P:   U1 = (P^2 + P')/2m
    PseudoScalar2, // pure P:   U2 = (P^2 - P')/2m
    Scalar1,       // pure S:   U1 = ((m+S)^2 - m^2 - S')/2m
    Scalar2,       // pure S:   U2 = ((m+S)^2 - m^2 + S')/2m
};

struct ReducedProblem {
    std::function<Complex(double)> U;
    double eps_eff = 0.0; // (E^2 - m^2) / 2m
    Complex U_minus{}, U_plus{};
    double m = 1.0;
};

// Throws WrongPotentialClass when the model does not match the requested
// reduction pattern.
ReducedProblem reduce_schrodinger(const PotentialModel& model,
                                  const PhysicalParams& params, Reduction which);

struct SchrodingerScatterOutput {
    ScatteringResult result;
    Complex k_minus{}, k_plus{};
    double wronskian_drift = 0.0;
    double error_estimate = 0.0;
};

// Scattering for -phi''/2m + U phi = eps phi with constant limits, unit
// incident amplitude conventions.
SchrodingerScatterOutput scatter_schrodinger(const std::function<Complex(double)>& U,
                                             Complex U_minus, Complex U_plus, double m,
                                             double eps_eff, double L,
                                             const IntegratorConfig& cfg = {});

inline SchrodingerScatterOutput scatter_schrodinger(const ReducedProblem& p, double L,
                                                    const IntegratorConfig& cfg = {}) {
    return scatter_schrodinger(p.U, p.U_minus, p.U_plus, p.m, p.eps_eff, L, cfg);
}

} // namespace dirac1d

#endif
