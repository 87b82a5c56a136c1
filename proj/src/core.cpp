#include "dirac1d/core.hpp"

#include <algorithm>
#include <cmath>

namespace dirac1d {

double wrap_phase(double phi) {
    while (phi > kPi) phi -= 2.0 * kPi;
    while (phi <= -kPi) phi += 2.0 * kPi;
    return phi;
}

bool AsymptoticLimits::pt_symmetric(const Tolerance& tol) const {
    double scale = std::max({std::abs(V_minus), std::abs(S_minus),
                             std::abs(P_minus), 1.0});
    return pt_residual() <= tol.at(scale);
}

double AsymptoticLimits::pt_residual() const {
    return std::max({std::abs(V_plus - std::conj(V_minus)),
                     std::abs(S_plus - std::conj(S_minus)),
                     std::abs(P_plus + std::conj(P_minus))});
}

Complex branch_sqrt(Complex z) {
    // Normalize -0.0 imaginary parts so the cut on the negative real axis
    // lands on the Im >= 0 side.
    if (z.imag() == 0.0) z = Complex(z.real(), 0.0);
    Complex w = std::sqrt(z);
    if (w.real() < 0.0 || (w.real() == 0.0 && w.imag() < 0.0)) w = -w;
    return w;
}

Complex asymptotic_momentum(const PhysicalParams& params,
                            const AsymptoticLimits& limits, Side side) {
    const Complex V = side == Side::Minus ? limits.V_minus : limits.V_plus;
    const Complex S = side == Side::Minus ? limits.S_minus : limits.S_plus;
    const Complex P = side == Side::Minus ? limits.P_minus : limits.P_plus;
    const Complex EV = params.E - V;
    const Complex mS = params.m + S;
    return branch_sqrt(EV * EV - mS * mS - P * P);
}

static Complex side_ratio(const PhysicalParams& params,
                          const AsymptoticLimits& limits, Side side,
                          Complex k, int sign) {
    const Complex V = side == Side::Minus ? limits.V_minus : limits.V_plus;
    const Complex S = side == Side::Minus ? limits.S_minus : limits.S_plus;
    const Complex P = side == Side::Minus ? limits.P_minus : limits.P_plus;
    const Complex den = params.m + S + params.E - V;
    if (std::abs(den) < 1e-14 * (std::abs(params.m) + std::abs(params.E) + 1.0))
        throw DegenerateChannel("channel denominator m+S+E-V vanishes");
    return (double(sign) * k + Complex(0, 1) * P) / den;
}

AsymptoticChannel channel_ratios(const PhysicalParams& params,
                                 const AsymptoticLimits& limits,
                                 Complex k_minus, Complex k_plus) {
    AsymptoticChannel ch;
    ch.k_minus = k_minus;
    ch.k_plus = k_plus;
    ch.C_minus = side_ratio(params, limits, Side::Minus, k_minus, +1);
    ch.D_minus = side_ratio(params, limits, Side::Minus, k_minus, -1);
    ch.C_plus = side_ratio(params, limits, Side::Plus, k_plus, +1);
    ch.D_plus = side_ratio(params, limits, Side::Plus, k_plus, -1);
    return ch;
}

AsymptoticChannel make_channel(const PhysicalParams& params,
                               const AsymptoticLimits& limits) {
    const Complex km = asymptotic_momentum(params, limits, Side::Minus);
    const Complex kp = asymptotic_momentum(params, limits, Side::Plus);
    return channel_ratios(params, limits, km, kp);
}

PtBranch classify_pt_branch(const AsymptoticChannel& channel,
                            const Tolerance& tol) {
    const Complex kc = std::conj(channel.k_minus);
    const double scale = std::max(std::abs(channel.k_minus), std::abs(channel.k_plus));
    if (std::abs(kc - channel.k_plus) <= tol.at(scale)) return PtBranch::ConjugatePair;
    if (std::abs(kc + channel.k_plus) <= tol.at(scale)) return PtBranch::AntiConjugatePair;
    return PtBranch::NotPT;
}

// Exactness constraints A_pm^* = e^{i phi} A_mp, B_pm^* = e^{i phi} B_mp
// applied to progressive (A-=1, B+=0) and regressive (A-=0, B+=1) data
// collapse to |T| = 1 and R = 0 in both directions.
static PtExactnessReport pt_exactness(const ScatteringResult& r, double pt_tol) {
    PtExactnessReport rep;
    rep.phi = -std::arg(r.T_LR);
    rep.residual = std::max({std::abs(std::abs(r.T_LR) - 1.0),
                             std::abs(std::abs(r.T_RL) - 1.0),
                             std::abs(r.R_LR), std::abs(r.R_RL)});
    rep.holds = rep.residual <= pt_tol;
    return rep;
}

TRPair tr_from_coefficients(const SolutionCoefficients& c) {
    const Complex den = c.b1_plus * c.a2_minus - c.a1_minus * c.b2_plus;
    const double scale =
        std::max({std::abs(c.b1_plus * c.a2_minus), std::abs(c.a1_minus * c.b2_plus), 1e-300});
    if (std::abs(den) <= 1e-12 * scale)
        throw SingularMatching("independence determinant b1+ a2- - a1- b2+ vanishes");

    TRPair r;
    r.T_LR = (c.b1_plus * c.a2_plus - c.a1_plus * c.b2_plus) / den;
    r.R_LR = (c.b1_plus * c.b2_minus - c.b1_minus * c.b2_plus) / den;
    r.T_RL = (c.a2_minus * c.b1_minus - c.a1_minus * c.b2_minus) / den;
    r.R_RL = (c.a1_plus * c.a2_minus - c.a1_minus * c.a2_plus) / den;
    return r;
}

ScatteringResult assemble_scattering(const TRPair& tr, double nu_phase, double pt_tol) {
    ScatteringResult r;
    r.T_LR = tr.T_LR;
    r.R_LR = tr.R_LR;
    r.T_RL = tr.T_RL;
    r.R_RL = tr.R_RL;
    r.nu_phase = nu_phase;
    r.unitarity_defect = std::max(std::abs(std::abs(r.T_LR) - 1.0),
                                  std::abs(std::abs(r.T_RL) - 1.0));
    r.pt_exact = pt_exactness(r, pt_tol);
    return r;
}

ScatteringResult coefficients_to_scattering(const SolutionCoefficients& c,
                                            const AsymptoticChannel& channel,
                                            double pt_tol) {
    const double nu = wrap_phase(2.0 * std::arg(channel.D_minus - channel.C_minus));
    return assemble_scattering(tr_from_coefficients(c), nu, pt_tol);
}

Complex wronskian(const SpinorState& a, const SpinorState& b) {
    return a.psi1 * b.psi2 - b.psi1 * a.psi2;
}

} // namespace dirac1d
