#ifndef DIRAC1D_ANALYTIC_HPP
#define DIRAC1D_ANALYTIC_HPP

#include <functional>
#include <optional>
#include <vector>

#include "dirac1d/core.hpp"
#include "dirac1d/potentials.hpp"

// Closed-form layer: every exact scattering/bound-state result of the
// implemented potential families, used as fast paths and as oracles for
// the numerical integrator.

namespace dirac1d {

// Euler gamma function for real arguments (Lanczos, g = 7, 9 coefficients).
double gamma_fn(double x);

// ------------------------------------------------------ centrifugal case --

struct CentrifugalScattering {
    ScatteringResult result;     // T = 1, R = 0 identically
    Complex bessel_index_sq{};   // 2 c' (m + E) + 1/4
    bool imaginary_index = false;
};

// Throws NotScattering when E^2 <= m^2.
CentrifugalScattering centrifugal_scattering(double c_prime, double m, double E);

// k = 0 analysis at E = m: characteristic roots of the power ansatz and
// the closed-form normalization when it applies.
struct ZeroModeReport {
    Complex gamma1{}, gamma2{};      // roots of g^2 - g - 4 c' m = 0
    std::optional<double> beta;      // sqrt(1 + 16 c' m) when real
    bool bound_exists = false;       // decaying branch exists (c' > 0)
    bool double_root = false;        // c' = -1/(16 m): log solution, not normalizable
    bool norm_ambiguous = false;     // beta in (1, 2]: decays but the norm
                                     // integral diverges; flagged, not decided
    std::optional<double> alpha2_norm_sq; // closed form, present for beta > 2
};

ZeroModeReport centrifugal_zero_mode(double c_prime, double m, double eps);

// Normalized zero-mode component psi1 = alpha2 (x + i eps)^{(1-beta)/2} and
// the full-spinor norm integrand used by the quadrature cross check.
std::function<Complex(double)> centrifugal_zero_mode_psi1(double beta, double eps,
                                                          double alpha2_abs);

// ----------------------------------------------------- pseudoscalar case --

struct PartnerScattering {
    ScatteringResult partner1; // U1 = (P^2 + P')/2m
    ScatteringResult partner2; // U2 = (P^2 - P')/2m
    double k = 0.0;
};

// Poeschl-Teller partner pair of the Nogami-Toyama superpotential.
// Throws NotScattering when E^2 <= m^2 + lambda^2.
PartnerScattering poeschl_teller_scattering(double lambda, double m, double E);

// Product formula for the super-Scarf transmission of the requested
// partner.  The stated domains are n > 1 (partner 2) and n > 2 (partner 1).
Complex super_scarf_transmission(int n, int l, double m, double E, int partner);

struct AnalyticBoundState {
    BoundStateRecord record;
    std::function<Complex(double)> psi1; // normalized closed form, empty when
    std::function<Complex(double)> psi2; // no closed form is implemented
    bool in_u1 = false;                  // eps belongs to the U1 spectrum
    bool in_u2 = false;
};

// Discrete spectra of the pseudoscalar families: closed-form doublet and
// ground zero mode for Nogami-Toyama, level counts and shared energies for
// super-Scarf.  Throws UnsupportedModel for other kinds.
std::vector<AnalyticBoundState> pseudoscalar_bound_states(const PotentialModel& model,
                                                          double m);

// ----------------------------------------------------------- scalar case --

// T_LR = T_RL = (ik - kappa_B)/(ik + kappa_B), R = 0.
ScatteringResult scalar_exact_scattering(double c_S, double m, double E);

struct ScalarBoundState {
    BoundStateRecord record;
    std::function<Complex(double)> psi1;
    std::function<Complex(double)> psi2;
    double N1_sq = 0.0; // closed-form |N1|^2 = sin(kB e) cos(kB e) / (4 e)
    double kappa_B = 0.0;
    double E_B = 0.0;
    double lambda_B = 0.0;
};

// Throws ShiftDomain when kappa_B * eps_shift is 0 or pi/2 (mod pi).
ScalarBoundState scalar_exact_bound(double c_S, double m, double eps_shift);

// ------------------------------------------------ centrifugal asymptotics --

// Leading large-|kx| form of the two Hankel-type Dirac solutions,
// sqrt(2/pi) (1, +-k/(E+m)) exp(+-(ikx - k eps - i pi nu/2 - i pi/4)).
SpinorState hankel_asymptotic_spinor(Complex nu, int kind, double k, double eps,
                                     double E, double m, double x);

// ------------------------------------------- constant-partner via Riccati --

enum class RiccatiClass { Trigonometric, Hyperbolic, Limiting };

struct RiccatiPartner {
    RiccatiClass classification;
    std::function<Complex(double)> W;  // superpotential m + S(x)
    std::function<Complex(double)> U2; // partner potential
};

// Superpotential solving U1 = c for a scalar effective mass, classified by
// the sign of m + 2c.
RiccatiPartner riccati_constant_partner(double c, double m, Complex d);

} // namespace dirac1d

#endif
