#ifndef DIRAC1D_CORE_HPP
#define DIRAC1D_CORE_HPP

#include <complex>
#include <string>
#include <vector>

#include "dirac1d/errors.hpp"

// Shared domain model for 1D Dirac scattering: asymptotic plane-wave
// channels, transmission/reflection containers, Wronskian and the
// PT-exactness diagnostics.

namespace dirac1d {

using Complex = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

// Mixed absolute/relative tolerance: tol(x) = atol + rtol*|x|.
struct Tolerance {
    double atol = 1e-10;
    double rtol = 1e-8;

    double at(double scale) const { return atol + rtol * std::abs(scale); }
    bool close(Complex a, Complex b) const {
        return std::abs(a - b) <= at(std::max(std::abs(a), std::abs(b)));
    }
};

// Mass and real energy in units hbar = c = 1.
struct PhysicalParams {
    double m = 1.0;
    double E = 0.0;
};

// Constant limits of the potential triple at x -> -inf / +inf.
// PT symmetry requires V+ = conj(V-), S+ = conj(S-), P+ = -conj(P-).
struct AsymptoticLimits {
    Complex V_minus{}, V_plus{};
    Complex S_minus{}, S_plus{};
    Complex P_minus{}, P_plus{};

    bool pt_symmetric(const Tolerance& tol = {}) const;
    double pt_residual() const;
};

enum class Side { Minus, Plus };

// Plane-wave channel data {k, C, D} on both sides.  C and D are the
// lower/upper spinor component ratios of the e^{+ikx} and e^{-ikx} waves.
struct AsymptoticChannel {
    Complex k_minus{}, k_plus{};
    Complex C_minus{}, C_plus{};
    Complex D_minus{}, D_plus{};
};

enum class PtBranch { ConjugatePair, AntiConjugatePair, NotPT };

// How well the asymptotic wave functions can be PT eigenstates: for
// scattering boundary data this reduces to unimodular transmission and
// vanishing reflection, with phi the common PT eigenphase.
struct PtExactnessReport {
    bool holds = false;
    double phi = 0.0;
    double residual = 0.0;
};

struct ScatteringResult {
    Complex T_LR{}, R_LR{};
    Complex T_RL{}, R_RL{};
    double nu_phase = 0.0;         // phase of T_LR / T_RL, in (-pi, pi]
    double unitarity_defect = 0.0; // max over directions of ||T| - 1|
    PtExactnessReport pt_exact;
};

// Asymptotic expansion coefficients of two independent solutions:
// Psi^(i) -> a_i (1, C) e^{ikx} + b_i (1, D) e^{-ikx} on each side.
struct SolutionCoefficients {
    Complex a1_minus{}, a1_plus{};
    Complex b1_minus{}, b1_plus{};
    Complex a2_minus{}, a2_plus{};
    Complex b2_minus{}, b2_plus{};
};

// Two-component spinor sampled at a point.
struct SpinorState {
    double x = 0.0;
    Complex psi1{};
    Complex psi2{};
};

enum class BoundKind { Bound, ZeroMode, HalfBound };

// One discrete level.  kappa is the channel decay momentum (k = i kappa,
// limits included); eps_eff = (E^2 - m^2) / 2m.
struct BoundStateRecord {
    double E = 0.0;
    double kappa = 0.0;
    double eps_eff = 0.0;
    std::vector<SpinorState> spinor;
    double norm = 0.0;
    bool norm_available = true;
    std::string node_info;
    BoundKind kind = BoundKind::Bound;
    double imag_eps = 0.0; // |Im| residual of the located eigenvalue
    std::string method;
};

// Principal-like square root with the branch fixed as Re >= 0,
// and Im >= 0 on the Re = 0 line.
Complex branch_sqrt(Complex z);

// k with k^2 = (E - V)^2 - (m + S)^2 - P^2 on the requested side.
Complex asymptotic_momentum(const PhysicalParams& params,
                            const AsymptoticLimits& limits, Side side);

// C = (k + iP)/(m + S + E - V), D = (-k + iP)/(m + S + E - V) on both
// sides.  Throws DegenerateChannel when a denominator vanishes.
AsymptoticChannel channel_ratios(const PhysicalParams& params,
                                 const AsymptoticLimits& limits,
                                 Complex k_minus, Complex k_plus);

// Convenience: momenta on both sides plus channel ratios.
AsymptoticChannel make_channel(const PhysicalParams& params,
                               const AsymptoticLimits& limits);

PtBranch classify_pt_branch(const AsymptoticChannel& channel,
                            const Tolerance& tol = {});

// Raw T/R values from the matching determinants; shared between the Dirac
// and the reduced Schroedinger paths.
struct TRPair {
    Complex T_LR{}, R_LR{};
    Complex T_RL{}, R_RL{};
};
TRPair tr_from_coefficients(const SolutionCoefficients& c);

ScatteringResult assemble_scattering(const TRPair& tr, double nu_phase,
                                     double pt_tol = 1e-8);

// T/R of progressive and regressive waves from the coefficients of two
// independent solutions, plus the transmission phase ratio and the
// PT-exactness report.  pt_tol decides how strictly the exactness
// constraints are enforced.
ScatteringResult coefficients_to_scattering(const SolutionCoefficients& c,
                                            const AsymptoticChannel& channel,
                                            double pt_tol = 1e-8);

// Antisymmetric 2x2 determinant psi1^(a) psi2^(b) - psi1^(b) psi2^(a);
// x-independent for solutions of the same Dirac equation.
Complex wronskian(const SpinorState& a, const SpinorState& b);

// Reduce an angle to (-pi, pi].
double wrap_phase(double phi);

} // namespace dirac1d

#endif
