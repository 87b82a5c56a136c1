#include "dirac1d/integrator.hpp"

#include <cmath>

#include "dirac1d/rk45.hpp"

namespace dirac1d {

namespace {

const Complex kI(0.0, 1.0);

constexpr double kRenormThreshold = 1e100;

struct DiracRhs {
    const PotentialModel& model;
    const PhysicalParams& params;

    void operator()(double x, const std::array<Complex, 4>& y,
                    std::array<Complex, 4>& dydx) const {
        const PotentialTriple p = model.eval(x);
        const Complex up = kI * (params.E - p.V + params.m + p.S);
        const Complex dn = kI * (params.E - p.V - params.m - p.S);
        dydx[0] = p.P * y[0] + up * y[1];
        dydx[1] = -p.P * y[1] + dn * y[0];
        dydx[2] = p.P * y[2] + up * y[3];
        dydx[3] = -p.P * y[3] + dn * y[2];
    }
};

double max_abs(const std::array<Complex, 4>& y, int offset) {
    return std::max(std::abs(y[offset]), std::abs(y[offset + 1]));
}

// Decompose a two-component value in the {(1,C),(1,D)} basis.
std::pair<Complex, Complex> channel_decompose(Complex v1, Complex v2, Complex C,
                                              Complex D) {
    const Complex den = C - D;
    if (std::abs(den) < 1e-12 * std::max(std::abs(C), std::abs(D)) + 1e-300)
        throw SingularBasis("channel basis degenerate: C = D (k = 0?)");
    Complex alpha = (v2 - D * v1) / den;
    Complex beta = (C * v1 - v2) / den;
    return {alpha, beta};
}

struct RawTwoSolutions {
    // stored-basis decompositions at +L and per-solution log scales
    Complex alpha1, beta1, alpha2, beta2;
    Complex logscale1, logscale2;
    AsymptoticChannel channel;
    double wronskian_drift = 0.0;
    double error_estimate = 0.0;
    std::size_t steps = 0;
};

RawTwoSolutions propagate_two(const PotentialModel& model, const PhysicalParams& params,
                              double L, const IntegratorConfig& cfg) {
    RawTwoSolutions out;
    out.channel = make_channel(params, model.limits());
    const AsymptoticChannel& ch = out.channel;

    std::array<Complex, 4> y = {1.0, ch.C_minus, 1.0, ch.D_minus};
    // true solution = stored * exp(logscale); position phases absorbed here
    Complex ls1 = -kI * ch.k_minus * L;
    Complex ls2 = kI * ch.k_minus * L;
    double extra_log1 = 0.0, extra_log2 = 0.0; // renormalization factors

    const Complex W0 = wronskian({-L, y[0], y[1]}, {-L, y[2], y[3]});
    double drift = 0.0;

    auto on_accept = [&](double, std::array<Complex, 4>& state) {
        double n1 = max_abs(state, 0);
        if (n1 > kRenormThreshold) {
            state[0] /= n1;
            state[1] /= n1;
            extra_log1 += std::log(n1);
        }
        double n2 = max_abs(state, 2);
        if (n2 > kRenormThreshold) {
            state[2] /= n2;
            state[3] /= n2;
            extra_log2 += std::log(n2);
        }
        Complex w = state[0] * state[3] - state[2] * state[1];
        double tlr = extra_log1 + extra_log2;
        Complex w_true = tlr == 0.0 ? w : std::exp(std::log(w) + tlr);
        drift = std::max(drift, std::abs(w_true - W0) / std::abs(W0));
    };

    RkOptions opt{cfg.rtol, cfg.atol, cfg.max_steps};
    RkStats stats = rk45_integrate<4>(DiracRhs{model, params}, y, -L, L, opt, on_accept);

    auto [a1, b1] = channel_decompose(y[0], y[1], ch.C_plus, ch.D_plus);
    auto [a2, b2] = channel_decompose(y[2], y[3], ch.C_plus, ch.D_plus);
    out.alpha1 = a1;
    out.beta1 = b1;
    out.alpha2 = a2;
    out.beta2 = b2;
    out.logscale1 = ls1 + extra_log1;
    out.logscale2 = ls2 + extra_log2;
    out.wronskian_drift = drift;
    out.error_estimate = stats.error_accum;
    out.steps = stats.accepted;
    return out;
}

SolutionCoefficients raw_to_coefficients(const RawTwoSolutions& raw, double L) {
    const Complex phase_a = -kI * raw.channel.k_plus * L; // e^{ik+ x} weight at +L
    const Complex phase_b = kI * raw.channel.k_plus * L;
    SolutionCoefficients c;
    c.a1_minus = 1.0;
    c.b1_minus = 0.0;
    c.a2_minus = 0.0;
    c.b2_minus = 1.0;
    c.a1_plus = raw.alpha1 * std::exp(raw.logscale1 + phase_a);
    c.b1_plus = raw.beta1 * std::exp(raw.logscale1 + phase_b);
    c.a2_plus = raw.alpha2 * std::exp(raw.logscale2 + phase_a);
    c.b2_plus = raw.beta2 * std::exp(raw.logscale2 + phase_b);
    return c;
}

double resolve_box(const PotentialModel& model, const IntegratorConfig& cfg) {
    return cfg.L > 0.0 ? cfg.L : model.default_box();
}

} // namespace

std::pair<Complex, Complex> rhs(const PotentialModel& model,
                                const PhysicalParams& params,
                                const SpinorState& state) {
    const PotentialTriple p = model.eval(state.x);
    const Complex d1 = p.P * state.psi1 + kI * (params.E - p.V + params.m + p.S) * state.psi2;
    const Complex d2 = -p.P * state.psi2 + kI * (params.E - p.V - params.m - p.S) * state.psi1;
    return {d1, d2};
}

TwoSolutionResult integrate_two_solutions(const PotentialModel& model,
                                          const PhysicalParams& params,
                                          const IntegratorConfig& cfg) {
    const double L = resolve_box(model, cfg);
    RawTwoSolutions raw = propagate_two(model, params, L, cfg);
    TwoSolutionResult out;
    out.coeffs = raw_to_coefficients(raw, L);
    out.channel = raw.channel;
    out.wronskian_drift = raw.wronskian_drift;
    out.error_estimate = raw.error_estimate;
    out.steps = raw.steps;
    out.box = L;
    return out;
}

ScatterOutput scatter(const PotentialModel& model, const PhysicalParams& params,
                      const IntegratorConfig& cfg) {
    const double L = resolve_box(model, cfg);
    ScatterOutput out;

    if (model.tail().kind == Tail::Kind::Algebraic && cfg.richardson) {
        IntegratorConfig base = cfg;
        base.L = L;
        TwoSolutionResult rL = integrate_two_solutions(model, params, base);
        base.L = 2.0 * L;
        TwoSolutionResult r2L = integrate_two_solutions(model, params, base);

        // leading truncation error is linear in 1/L
        SolutionCoefficients c;
        auto extrap = [](Complex cl, Complex c2l) { return 2.0 * c2l - cl; };
        c.a1_minus = 1.0;
        c.b1_minus = 0.0;
        c.a2_minus = 0.0;
        c.b2_minus = 1.0;
        c.a1_plus = extrap(rL.coeffs.a1_plus, r2L.coeffs.a1_plus);
        c.b1_plus = extrap(rL.coeffs.b1_plus, r2L.coeffs.b1_plus);
        c.a2_plus = extrap(rL.coeffs.a2_plus, r2L.coeffs.a2_plus);
        c.b2_plus = extrap(rL.coeffs.b2_plus, r2L.coeffs.b2_plus);

        out.result = coefficients_to_scattering(c, r2L.channel);
        out.channel = r2L.channel;
        out.wronskian_drift = std::max(rL.wronskian_drift, r2L.wronskian_drift);
        out.error_estimate = rL.error_estimate + r2L.error_estimate;
        out.box = 2.0 * L;
        return out;
    }

    TwoSolutionResult r = integrate_two_solutions(model, params, cfg);
    out.result = coefficients_to_scattering(r.coeffs, r.channel);
    out.channel = r.channel;
    out.wronskian_drift = r.wronskian_drift;
    out.error_estimate = r.error_estimate;
    out.box = r.box;
    return out;
}

Complex bound_matching_determinant(const PotentialModel& model,
                                   const PhysicalParams& params,
                                   const IntegratorConfig& cfg) {
    const double L = resolve_box(model, cfg);
    const AsymptoticChannel ch = make_channel(params, model.limits());

    // single solution, decaying toward -infinity: (1, D-) e^{-ik- x}
    std::array<Complex, 2> y = {1.0, ch.D_minus};
    auto f = [&model, &params](double x, const std::array<Complex, 2>& s,
                               std::array<Complex, 2>& d) {
        const PotentialTriple p = model.eval(x);
        d[0] = p.P * s[0] + kI * (params.E - p.V + params.m + p.S) * s[1];
        d[1] = -p.P * s[1] + kI * (params.E - p.V - params.m - p.S) * s[0];
    };
    auto on_accept = [](double, std::array<Complex, 2>& s) {
        double n = std::max(std::abs(s[0]), std::abs(s[1]));
        if (n > kRenormThreshold) {
            s[0] /= n;
            s[1] /= n;
        }
    };
    RkOptions opt{cfg.rtol, cfg.atol, cfg.max_steps};
    rk45_integrate<2>(f, y, -L, L, opt, on_accept);

    auto [alpha, beta] = channel_decompose(y[0], y[1], ch.C_plus, ch.D_plus);
    return beta / (std::abs(alpha) + std::abs(beta) + 1e-300);
}

// ----------------------------------------------------- reduced problems --

namespace {

void require_class(bool ok, const char* what) {
    if (!ok) throw WrongPotentialClass(what);
}

bool matches_on_samples(const PotentialModel& model,
                        const std::function<double(const PotentialTriple&)>& mismatch) {
    const double xs[] = {-7.3, -2.1, -0.4, 0.0, 0.6, 1.9, 5.2};
    double scale = 1.0;
    double worst = 0.0;
    for (double x : xs) {
        PotentialTriple t = model.eval(x);
        scale = std::max({scale, std::abs(t.V), std::abs(t.S), std::abs(t.P)});
        worst = std::max(worst, mismatch(t));
    }
    return worst <= 1e-10 * scale;
}

} // namespace

ReducedProblem reduce_schrodinger(const PotentialModel& model,
                                  const PhysicalParams& params, Reduction which) {
    const double m = params.m;
    const double E = params.E;
    ReducedProblem out;
    out.eps_eff = (E * E - m * m) / (2.0 * m);
    out.m = m;
    const AsymptoticLimits& lim = model.limits();

    switch (which) {
        case Reduction::SpinSym: {
            require_class(matches_on_samples(model,
                                             [](const PotentialTriple& t) {
                                                 return std::max(std::abs(t.V - t.S),
                                                                 std::abs(t.P));
                                             }),
                          "SpinSym reduction needs V = S, P = 0");
            const double w = (E + m) / m;
            out.U = [&model, w](double x) { return w * model.eval(x).V; };
            out.U_minus = w * lim.V_minus;
            out.U_plus = w * lim.V_plus;
            return out;
        }
        case Reduction::PseudoSpinSym: {
            require_class(matches_on_samples(model,
                                             [](const PotentialTriple& t) {
                                                 return std::max(std::abs(t.V + t.S),
                                                                 std::abs(t.P));
                                             }),
                          "PseudoSpinSym reduction needs V = -S, P = 0");
            const double w = (E - m) / m;
            out.U = [&model, w](double x) { return w * model.eval(x).V; };
            out.U_minus = w * lim.V_minus;
            out.U_plus = w * lim.V_plus;
            return out;
        }
        case Reduction::PseudoScalar1:
        case Reduction::PseudoScalar2: {
            require_class(matches_on_samples(model,
                                             [](const PotentialTriple& t) {
                                 return std::max(std::abs(t.V), std::abs(t.S));
                                             }),
                          "PseudoScalar reduction needs V = S = 0");
            const double sign = which == Reduction::PseudoScalar1 ? 1.0 : -1.0;
            out.U = [&model, m, sign](double x) {
                Complex P = model.eval(x).P;
                return (P * P + sign * model.dP(x)) / (2.0 * m);
            };
            out.U_minus = lim.P_minus * lim.P_minus / (2.0 * m);
            out.U_plus = lim.P_plus * lim.P_plus / (2.0 * m);
            return out;
        }
        case Reduction::Scalar1:
        case Reduction::Scalar2: {
            require_class(matches_on_samples(model,
                                             [](const PotentialTriple& t) {
                                 return std::max(std::abs(t.V), std::abs(t.P));
                                             }),
                          "Scalar reduction needs V = P = 0");
            const double sign = which == Reduction::Scalar1 ? -1.0 : 1.0;
            out.U = [&model, m, sign](double x) {
                Complex W = m + model.eval(x).S;
                return (W * W - m * m + sign * model.dS(x)) / (2.0 * m);
            };
            auto ulimit = [m](Complex S) { return ((m + S) * (m + S) - m * m) / (2.0 * m); };
            out.U_minus = ulimit(lim.S_minus);
            out.U_plus = ulimit(lim.S_plus);
            return out;
        }
    }
    throw WrongPotentialClass("unknown reduction");
}

SchrodingerScatterOutput scatter_schrodinger(const std::function<Complex(double)>& U,
                                             Complex U_minus, Complex U_plus, double m,
                                             double eps_eff, double L,
                                             const IntegratorConfig& cfg) {
    SchrodingerScatterOutput out;
    out.k_minus = branch_sqrt(2.0 * m * (eps_eff - U_minus));
    out.k_plus = branch_sqrt(2.0 * m * (eps_eff - U_plus));
    const Complex km = out.k_minus, kp = out.k_plus;

    // state = (phi, phi'); phi'' = 2m (U - eps) phi
    auto f = [&U, m, eps_eff](double x, const std::array<Complex, 2>& s,
                              std::array<Complex, 2>& d) {
        d[0] = s[1];
        d[1] = 2.0 * m * (U(x) - eps_eff) * s[0];
    };
    double extra_log1 = 0.0, extra_log2 = 0.0;
    auto renorm = [](std::array<Complex, 2>& s, double& extra_log) {
        double n = std::max(std::abs(s[0]), std::abs(s[1]));
        if (n > kRenormThreshold) {
            s[0] /= n;
            s[1] /= n;
            extra_log += std::log(n);
        }
    };
    RkOptions opt{cfg.rtol, cfg.atol, cfg.max_steps};

    // solution 1: e^{ik-x}; solution 2: e^{-ik-x}; amplitudes at -L absorbed
    std::array<Complex, 2> y1 = {1.0, kI * km};
    std::array<Complex, 2> y2 = {1.0, -kI * km};
    RkStats s1 = rk45_integrate<2>(
        f, y1, -L, L, opt,
        [&](double, std::array<Complex, 2>& s) { renorm(s, extra_log1); });
    RkStats s2 = rk45_integrate<2>(
        f, y2, -L, L, opt,
        [&](double, std::array<Complex, 2>& s) { renorm(s, extra_log2); });

    auto [a1, b1] = channel_decompose(y1[0], y1[1], kI * kp, -kI * kp);
    auto [a2, b2] = channel_decompose(y2[0], y2[1], kI * kp, -kI * kp);

    SolutionCoefficients c;
    c.a1_minus = 1.0;
    c.b1_minus = 0.0;
    c.a2_minus = 0.0;
    c.b2_minus = 1.0;
    c.a1_plus = a1 * std::exp(-kI * (km + kp) * L + extra_log1);
    c.b1_plus = b1 * std::exp(kI * (kp - km) * L + extra_log1);
    c.a2_plus = a2 * std::exp(kI * (km - kp) * L + extra_log2);
    c.b2_plus = b2 * std::exp(kI * (km + kp) * L + extra_log2);

    TRPair tr = tr_from_coefficients(c);
    double nu = 0.0;
    if (std::abs(tr.T_LR) > 1e-12 && std::abs(tr.T_RL) > 1e-12)
        nu = wrap_phase(std::arg(tr.T_LR / tr.T_RL));
    out.result = assemble_scattering(tr, nu);
    out.error_estimate = s1.error_accum + s2.error_accum;

    // Wronskian phi1 phi2' - phi2 phi1' of the two solutions at +L vs -L
    const Complex W0 = -2.0 * kI * km;
    Complex WL = y1[0] * y2[1] - y2[0] * y1[1];
    const double tlr = extra_log1 + extra_log2;
    if (tlr != 0.0) WL = std::exp(std::log(WL) + tlr);
    out.wronskian_drift = std::abs(WL - W0) / std::abs(W0);
    return out;
}

} // namespace dirac1d
