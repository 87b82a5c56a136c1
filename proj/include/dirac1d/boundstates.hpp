#ifndef DIRAC1D_BOUNDSTATES_HPP
#define DIRAC1D_BOUNDSTATES_HPP

#include <functional>
#include <optional>
#include <vector>

#include "dirac1d/analytic.hpp"
#include "dirac1d/core.hpp"
#include "dirac1d/potentials.hpp"

// Discrete spectra: two-sided shooting on the reduced Schroedinger-like
// equations, pole search of the transmission coefficient on the positive
// imaginary momentum axis, and k = 0 threshold classification.

namespace dirac1d {

struct ShootOptions {
    double L = 0.0; // 0: caller supplies via default_box of the model
    int grid_points = 4001;
    int scan_points = 64;
    double rtol = 1e-11;
    double atol = 1e-13;
    double eps_tol = 1e-10;     // eigenvalue bisection tolerance
    double im_reject = 1e-6;    // |Im| of the matching determinant => spurious
    std::size_t max_iter = 200;
};

// Shooting on -phi''/2m + U phi = eps phi with decaying conditions from
// both sides and log-derivative matching at x = 0.  Returns one
// single-component record per level (component stored in the psi1 slot,
// normalized to unit L2 norm; E reported as +sqrt(m^2 + 2 m eps)).
// Throws NoBracket when the bracket lies above the continuum threshold.
std::vector<BoundStateRecord> shoot(const std::function<Complex(double)>& U,
                                    double U_minus, double U_plus, double m,
                                    double eps_lo, double eps_hi, double L,
                                    const ShootOptions& opt = {});

// Bound states as poles of T at k = i kappa, via the vanishing of the
// growing-wave coefficient of the left-decaying spinor solution.
std::vector<BoundStateRecord> transmission_poles(const PotentialModel& model, double m,
                                                 double kappa_lo, double kappa_hi,
                                                 const ShootOptions& opt = {});

struct ZeroEnergyClassification {
    enum class Kind { ZeroModePlus, ZeroModeMinus, HalfBound, None } kind = Kind::None;
    bool normalizable = false;
    std::optional<ZeroModeReport> centrifugal; // present when delegated to the
                                               // closed-form analysis
    std::string note;
};

// k = 0 threshold analysis: closed form for the centrifugal families,
// direct integration with a tail test otherwise.
ZeroEnergyClassification zero_energy_classify(const PotentialModel& model, double m);

// Full-spinor spectrum of a catalog model: shoots on both partner
// potentials, merges the levels, reconstructs the second component through
// the first-order relations and normalizes the complete spinor.
std::vector<BoundStateRecord> find_bound_states(const PotentialModel& model, double m,
                                                double eps_lo, double eps_hi,
                                                const ShootOptions& opt = {});

} // namespace dirac1d

#endif
