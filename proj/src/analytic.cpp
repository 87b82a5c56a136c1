#include "dirac1d/analytic.hpp"

#include <cmath>

#include "dirac1d/quadrature.hpp"

namespace dirac1d {

namespace {
const Complex kI(0.0, 1.0);

ScatteringResult transparent_result(Complex T) {
    TRPair tr;
    tr.T_LR = tr.T_RL = T;
    tr.R_LR = tr.R_RL = 0.0;
    return assemble_scattering(tr, 0.0);
}

} // namespace

// Lanczos approximation, g = 7, 9 coefficients; real arguments only.
double gamma_fn(double x) {
    static const double g = 7.0;
    static const double coeff[9] = {
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

    if (x < 0.5) {
        // reflection through sin(pi x) Gamma(x) Gamma(1-x) = pi
        return kPi / (std::sin(kPi * x) * gamma_fn(1.0 - x));
    }
    x -= 1.0;
    double a = coeff[0];
    for (int i = 1; i < 9; ++i) a += coeff[i] / (x + i);
    double t = x + g + 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

// ------------------------------------------------------ centrifugal case --

CentrifugalScattering centrifugal_scattering(double c_prime, double m, double E) {
    if (E * E <= m * m)
        throw NotScattering("centrifugal scattering needs E^2 > m^2");
    CentrifugalScattering out;
    out.result = transparent_result(Complex(1.0, 0.0));
    const double idx = 2.0 * c_prime * (m + E) + 0.25;
    out.bessel_index_sq = Complex(idx, 0.0);
    out.imaginary_index = idx < 0.0;
    return out;
}

ZeroModeReport centrifugal_zero_mode(double c_prime, double m, double eps) {
    if (eps == 0.0) throw ZeroShift("zero-mode analysis needs a non-zero shift");
    ZeroModeReport rep;
    const double disc = 1.0 + 16.0 * c_prime * m;
    const Complex root = branch_sqrt(Complex(disc, 0.0));
    rep.gamma1 = (1.0 + root) / 2.0;
    rep.gamma2 = (1.0 - root) / 2.0;
    rep.double_root = std::abs(disc) < 1e-14;
    if (disc >= 0.0) rep.beta = std::sqrt(disc);
    rep.bound_exists = disc > 1.0 && !rep.double_root; // c' > 0
    if (rep.beta && *rep.beta > 1.0 && *rep.beta <= 2.0) rep.norm_ambiguous = true;

    if (rep.beta && *rep.beta > 2.0) {
        const double beta = *rep.beta;
        const double term1 = eps * eps * gamma_fn(beta / 2.0 - 1.0) /
                             gamma_fn((beta - 1.0) / 2.0);
        const double term2 = std::pow((1.0 - beta) / 2.0, 2) / (4.0 * m * m) *
                             gamma_fn(beta / 2.0) / gamma_fn((beta + 1.0) / 2.0);
        rep.alpha2_norm_sq =
            std::pow(eps, beta) / (std::sqrt(kPi) * (term1 + term2));
    }
    return rep;
}

std::function<Complex(double)> centrifugal_zero_mode_psi1(double beta, double eps,
                                                          double alpha2_abs) {
    return [beta, eps, alpha2_abs](double x) {
        return alpha2_abs * std::pow(Complex(x, eps), (1.0 - beta) / 2.0);
    };
}

// ----------------------------------------------------- pseudoscalar case --

PartnerScattering poeschl_teller_scattering(double lambda, double m, double E) {
    const double k2 = E * E - m * m - lambda * lambda;
    if (k2 <= 0.0)
        throw NotScattering("poeschl_teller scattering needs E^2 > m^2 + lambda^2");
    PartnerScattering out;
    out.k = std::sqrt(k2);
    const Complex ik = kI * out.k;
    const Complex T2 = -(1.0 - ik) / (1.0 + ik);
    const Complex T1 = (lambda - ik) / (lambda + ik) * (1.0 - ik) / (1.0 + ik);
    out.partner2 = transparent_result(T2);
    out.partner1 = transparent_result(T1);
    return out;
}

Complex super_scarf_transmission(int n, int l, double m, double E, int partner) {
    if (partner != 1 && partner != 2)
        throw Error("partner must be 1 or 2");
    if (partner == 2 && n <= 1)
        throw OutOfStatedDomain("partner 2 product is stated for n > 1");
    if (partner == 1 && n <= 2)
        throw OutOfStatedDomain("partner 1 product is stated for n > 2");
    const double k2 = E * E - m * m - double(n) * double(n);
    if (k2 <= 0.0)
        throw NotScattering("super_scarf scattering needs E^2 > m^2 + n^2");
    const Complex ik = kI * std::sqrt(k2);

    const int n_top = partner == 2 ? n : n - 1;
    Complex T = (n + l - (partner == 2 ? 0 : 1)) % 2 == 0 ? 1.0 : -1.0;
    for (int j = 1; j <= n_top; ++j) T *= (double(j) - ik) / (double(j) + ik);
    for (int j = 1; j <= l; ++j) T *= (j - 0.5 - ik) / (j - 0.5 + ik);
    return T;
}

namespace {

std::vector<SpinorState> sample_closures(const std::function<Complex(double)>& psi1,
                                         const std::function<Complex(double)>& psi2,
                                         double L, int points = 4001) {
    std::vector<SpinorState> out;
    out.reserve(points);
    for (int i = 0; i < points; ++i) {
        double x = -L + 2.0 * L * i / (points - 1);
        out.push_back({x, psi1 ? psi1(x) : Complex{}, psi2 ? psi2(x) : Complex{}});
    }
    return out;
}

std::vector<AnalyticBoundState> nogami_toyama_states(double lambda, double eps,
                                                     double m) {
    std::vector<AnalyticBoundState> out;
    const double L = std::max(12.0, 30.0 / lambda);

    if (lambda == 1.0) {
        // pure tanh superpotential: single zero mode psi2 = sech at E = -m
        auto psi2_raw = [eps](double x) { return 1.0 / std::cosh(Complex(x, eps)); };
        double q = integrate_gk(
                       [&](double x) { return Complex(std::norm(psi2_raw(x)), 0.0); },
                       -L, L, 1e-11)
                       .real();
        const double N = 1.0 / std::sqrt(q);
        auto psi2 = [psi2_raw, N](double x) { return N * psi2_raw(x); };
        AnalyticBoundState zm;
        zm.record.E = -m;
        zm.record.eps_eff = 0.0;
        zm.record.kappa = 1.0;
        zm.record.kind = BoundKind::ZeroMode;
        zm.record.norm = 1.0;
        zm.record.method = "closed-form";
        zm.psi2 = psi2;
        zm.record.spinor = sample_closures(nullptr, psi2, L);
        zm.in_u2 = true;
        out.push_back(std::move(zm));
        return out;
    }

    // ground zero mode: M psibar1 = 0, eps_eff = 0, E = +m
    auto psi1_gs_raw = [lambda, eps](double x) {
        Complex u(x, eps);
        return 1.0 / (lambda * std::cosh(lambda * u) -
                      std::tanh(u) * std::sinh(lambda * u));
    };
    double gs_norm = integrate_gk(
                         [&](double x) {
                             Complex v = psi1_gs_raw(x);
                             return Complex(std::norm(v), 0.0);
                         },
                         -L, L, 1e-11)
                         .real();
    const double Nbar = 1.0 / std::sqrt(gs_norm);
    auto psi1_gs = [psi1_gs_raw, Nbar](double x) { return Nbar * psi1_gs_raw(x); };

    AnalyticBoundState gs;
    gs.record.E = m;
    gs.record.eps_eff = 0.0;
    gs.record.kappa = lambda;
    gs.record.kind = BoundKind::ZeroMode;
    gs.record.norm = 1.0;
    gs.record.method = "closed-form";
    gs.record.node_info = "nodeless ground state of the first partner";
    gs.psi1 = psi1_gs;
    gs.psi2 = nullptr;
    gs.record.spinor = sample_closures(psi1_gs, nullptr, L);
    gs.in_u1 = true;
    out.push_back(std::move(gs));

    // excited doublet at eps = (lambda^2 - 1) / 2m
    const double eps_eff = (lambda * lambda - 1.0) / (2.0 * m);
    const double E = std::sqrt(m * m + lambda * lambda - 1.0);
    auto psi2_raw = [eps](double x) { return 1.0 / std::cosh(Complex(x, eps)); };
    auto psi1_raw = [lambda, eps, m, E](double x) {
        Complex u(x, eps);
        Complex den = std::sinh(u) - lambda * std::cosh(u) *
                                         std::cosh(lambda * u) / std::sinh(lambda * u);
        return kI / (m - E) * (lambda * lambda - 1.0) / den;
    };
    double q = integrate_gk(
                   [&](double x) {
                       return Complex(std::norm(psi1_raw(x)) + std::norm(psi2_raw(x)), 0.0);
                   },
                   -L, L, 1e-11)
                   .real();
    const double N = 1.0 / std::sqrt(q);
    auto psi1 = [psi1_raw, N](double x) { return N * psi1_raw(x); };
    auto psi2 = [psi2_raw, N](double x) { return N * psi2_raw(x); };

    AnalyticBoundState ex;
    ex.record.E = E;
    ex.record.eps_eff = eps_eff;
    ex.record.kappa = 1.0;
    ex.record.kind = BoundKind::Bound;
    ex.record.norm = 1.0;
    ex.record.method = "closed-form";
    ex.record.node_info = "node of psi1 at x = -i eps (off the real axis)";
    ex.psi1 = psi1;
    ex.psi2 = psi2;
    ex.record.spinor = sample_closures(psi1, psi2, L);
    ex.in_u1 = true;
    ex.in_u2 = true;
    out.push_back(std::move(ex));
    return out;
}

std::vector<AnalyticBoundState> super_scarf_states(int n, int l, double m) {
    std::vector<AnalyticBoundState> out;
    for (int j = 0; j < n; ++j) {
        const double kappa = double(n - j);
        const double eps_eff = (double(n) * n - kappa * kappa) / (2.0 * m);
        AnalyticBoundState s;
        s.record.eps_eff = eps_eff;
        s.record.kappa = kappa;
        s.record.norm = 1.0;
        s.record.method = "closed-form";
        s.record.kind = j == 0 ? BoundKind::ZeroMode : BoundKind::Bound;
        s.record.E = j == 0 ? -m : std::sqrt(m * m + 2.0 * m * eps_eff);
        s.in_u2 = true;
        s.in_u1 = j >= 1;
        (void)l;
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace

std::vector<AnalyticBoundState> pseudoscalar_bound_states(const PotentialModel& model,
                                                          double m) {
    switch (model.kind()) {
        case ModelKind::NogamiToyama:
            return nogami_toyama_states(model.param("lambda"), model.param("eps"), m);
        case ModelKind::SuperScarf:
            return super_scarf_states(int(model.param("n")), int(model.param("l")), m);
        default:
            throw UnsupportedModel("pseudoscalar_bound_states supports "
                                   "nogami_toyama and super_scarf models");
    }
}

// ----------------------------------------------------------- scalar case --

ScatteringResult scalar_exact_scattering(double c_S, double m, double E) {
    const double k2 = E * E - m * m;
    if (k2 <= 0.0) throw NotScattering("scalar scattering needs E^2 > m^2");
    const double root = std::sqrt(c_S * c_S + 4.0);
    const double kappa_B = c_S * m / root;
    const Complex ik = kI * std::sqrt(k2);
    return transparent_result((ik - kappa_B) / (ik + kappa_B));
}

ScalarBoundState scalar_exact_bound(double c_S, double m, double eps_shift) {
    ScalarBoundState out;
    const double root = std::sqrt(c_S * c_S + 4.0);
    out.E_B = 2.0 * m / root;
    out.kappa_B = c_S * m / root;
    out.lambda_B = 0.5 * std::acosh(m / out.E_B);

    const double phase = out.kappa_B * eps_shift;
    if (std::abs(std::sin(phase)) < 1e-12 || std::abs(std::cos(phase)) < 1e-12)
        throw ShiftDomain("kappa_B * eps_shift at a degenerate value (0 or pi/2 mod pi)");
    out.N1_sq = std::sin(phase) * std::cos(phase) / (4.0 * eps_shift);
    if (out.N1_sq <= 0.0)
        throw ShiftDomain("closed-form |N1|^2 is not positive for this shift");

    const double N1 = std::sqrt(out.N1_sq);
    const double kB = out.kappa_B, lB = out.lambda_B;
    out.psi1 = [N1, kB, lB, eps_shift](double x) {
        return N1 / std::cosh(kB * Complex(x, eps_shift) - lB);
    };
    out.psi2 = [N1, kB, lB, eps_shift](double x) {
        return N1 / std::cosh(kB * Complex(x, eps_shift) + lB);
    };

    out.record.E = out.E_B;
    out.record.kappa = out.kappa_B;
    out.record.eps_eff = -out.kappa_B * out.kappa_B / (2.0 * m);
    out.record.kind = BoundKind::Bound;
    out.record.norm = 1.0;
    out.record.method = "closed-form";
    out.record.node_info = "nodeless on the real axis";
    const double L = std::max(12.0, 30.0 / (2.0 * kB));
    out.record.spinor = sample_closures(out.psi1, out.psi2, L);
    return out;
}

// ------------------------------------------------ centrifugal asymptotics --

SpinorState hankel_asymptotic_spinor(Complex nu, int kind, double k, double eps,
                                     double E, double m, double x) {
    const double lam = k / (E + m);
    const Complex expo = kI * k * x - k * eps - kI * kPi / 2.0 * nu - kI * kPi / 4.0;
    const double amp = std::sqrt(2.0 / kPi);
    SpinorState s;
    s.x = x;
    if (kind == 1) {
        s.psi1 = amp * std::exp(expo);
        s.psi2 = lam * s.psi1;
    } else if (kind == 2) {
        s.psi1 = amp * std::exp(-expo);
        s.psi2 = -lam * s.psi1;
    } else {
        throw Error("hankel kind must be 1 or 2");
    }
    return s;
}

// ------------------------------------------- constant-partner via Riccati --

RiccatiPartner riccati_constant_partner(double c, double m, Complex d) {
    RiccatiPartner out;
    const double mu = m * (m + 2.0 * c); // W^2 - W' = mu
    if (std::abs(m + 2.0 * c) < 1e-12) {
        out.classification = RiccatiClass::Limiting;
        out.W = [d](double x) { return -1.0 / (x + d); };
        out.U2 = [d, m](double x) {
            Complex u = x + d;
            return 1.0 / (m * u * u) - m / 2.0;
        };
        return out;
    }
    if (m + 2.0 * c > 0.0) {
        out.classification = RiccatiClass::Hyperbolic;
        const double r = std::sqrt(mu);
        out.W = [r, d](double x) { return -r * std::tanh(r * (x + d)); };
        out.U2 = [r, d, m, mu](double x) {
            Complex ch = std::cosh(r * (x + d));
            return (mu - 2.0 * mu / (ch * ch) - m * m) / (2.0 * m);
        };
        return out;
    }
    out.classification = RiccatiClass::Trigonometric;
    const double w = std::sqrt(-mu);
    out.W = [w, d](double x) { return w * std::tan(w * (x + d)); };
    out.U2 = [w, d, m, mu](double x) {
        Complex cs = std::cos(w * (x + d));
        return (-2.0 * mu / (cs * cs) + mu - m * m) / (2.0 * m);
    };
    return out;
}

} // namespace dirac1d
