#include "dirac1d/susy.hpp"

#include <cmath>

namespace dirac1d {

namespace {

const Complex kI(0.0, 1.0);

void check_pure(const PotentialModel& model, SusyKind kind) {
    const double xs[] = {-6.1, -1.7, 0.0, 0.9, 3.3};
    double scale = 1.0, worst = 0.0;
    for (double x : xs) {
        PotentialTriple t = model.eval(x);
        scale = std::max({scale, std::abs(t.V), std::abs(t.S), std::abs(t.P)});
        if (kind == SusyKind::Pseudoscalar)
            worst = std::max({worst, std::abs(t.V), std::abs(t.S)});
        else
            worst = std::max({worst, std::abs(t.V), std::abs(t.P)});
    }
    if (worst > 1e-10 * scale)
        throw WrongPotentialClass(kind == SusyKind::Pseudoscalar
                                      ? "pseudoscalar pair needs V = S = 0"
                                      : "scalar pair needs V = P = 0");
}

} // namespace

SusyPair build_pair(const PotentialModel& model, SusyKind kind) {
    check_pure(model, kind);
    SusyPair pair;
    pair.kind = kind;
    pair.m = model.param("m");
    const double m = pair.m;

    if (kind == SusyKind::Pseudoscalar) {
        pair.W = [model](double x) { return model.eval(x).P; };
        pair.dW = [model](double x) { return model.dP(x); };
        pair.U1 = [model, m](double x) {
            Complex P = model.eval(x).P;
            return (P * P + model.dP(x)) / (2.0 * m);
        };
        pair.U2 = [model, m](double x) {
            Complex P = model.eval(x).P;
            return (P * P - model.dP(x)) / (2.0 * m);
        };
        pair.W_minus = model.limits().P_minus;
        pair.W_plus = model.limits().P_plus;
        pair.U1_minus = pair.U2_minus = pair.W_minus * pair.W_minus / (2.0 * m);
        pair.U1_plus = pair.U2_plus = pair.W_plus * pair.W_plus / (2.0 * m);
        pair.L_op = {+1, pair.W, m};
        pair.M_op = {-1, pair.W, m};
        pair.factorization_shift = 0.0;
        return pair;
    }

    pair.W = [model, m](double x) { return m + model.eval(x).S; };
    pair.dW = [model](double x) { return model.dS(x); };
    pair.U1 = [model, m](double x) {
        Complex W = m + model.eval(x).S;
        return (W * W - m * m - model.dS(x)) / (2.0 * m);
    };
    pair.U2 = [model, m](double x) {
        Complex W = m + model.eval(x).S;
        return (W * W - m * m + model.dS(x)) / (2.0 * m);
    };
    pair.W_minus = m + model.limits().S_minus;
    pair.W_plus = m + model.limits().S_plus;
    pair.U1_minus = pair.U2_minus = (pair.W_minus * pair.W_minus - m * m) / (2.0 * m);
    pair.U1_plus = pair.U2_plus = (pair.W_plus * pair.W_plus - m * m) / (2.0 * m);
    pair.L_op = {-1, pair.W, m};
    pair.M_op = {+1, pair.W, m};
    pair.factorization_shift = m / 2.0; // L M = -d^2/2m + U1 + m/2
    return pair;
}

ScatteringResult map_partner_scattering(const ScatteringResult& result2,
                                        Complex P_minus, Complex P_plus,
                                        Complex k_minus, Complex k_plus) {
    const Complex dm = kI * k_minus + P_minus;  // ik- + P-
    const Complex dp = -kI * k_plus + P_plus;   // -ik+ + P+
    const double scale = std::max({std::abs(k_minus), std::abs(k_plus),
                                   std::abs(P_minus), std::abs(P_plus), 1.0});
    if (std::abs(dm) < 1e-12 * scale || std::abs(dp) < 1e-12 * scale)
        throw SingularMap("partner map denominator vanishes at this momentum");

    TRPair tr;
    tr.R_LR = (-kI * k_minus + P_minus) / dm * result2.R_LR;
    tr.T_LR = (kI * k_plus + P_plus) / dm * result2.T_LR;
    tr.R_RL = (kI * k_plus + P_plus) / dp * result2.R_RL;
    tr.T_RL = (-kI * k_minus + P_minus) / dp * result2.T_RL;

    double nu = result2.nu_phase;
    if (std::abs(tr.T_LR) > 1e-12 && std::abs(tr.T_RL) > 1e-12)
        nu = wrap_phase(std::arg(tr.T_LR / tr.T_RL));
    return assemble_scattering(tr, nu);
}

namespace {

// 4th-order first derivative of uniformly sampled values; one-sided at the
// edges.
std::vector<Complex> derivative4(const std::vector<Complex>& f, double h) {
    const std::size_t n = f.size();
    std::vector<Complex> d(n);
    if (n < 5) throw GridTooCoarse("need at least 5 samples for 4th-order stencils");
    for (std::size_t i = 2; i + 2 < n; ++i)
        d[i] = (-f[i + 2] + 8.0 * f[i + 1] - 8.0 * f[i - 1] + f[i - 2]) / (12.0 * h);
    d[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) /
           (12.0 * h);
    d[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) / (12.0 * h);
    d[n - 2] = -(-3.0 * f[n - 1] - 10.0 * f[n - 2] + 18.0 * f[n - 3] - 6.0 * f[n - 4] +
                 f[n - 5]) /
               (12.0 * h);
    d[n - 1] = -(-25.0 * f[n - 1] + 48.0 * f[n - 2] - 36.0 * f[n - 3] +
                 16.0 * f[n - 4] - 3.0 * f[n - 5]) /
               (12.0 * h);
    return d;
}

double factorization_residual(const SusyPair& pair,
                              const std::function<Complex(double)>& fn, double m,
                              double x_lo, double x_hi, double h) {
    const std::size_t n = std::size_t((x_hi - x_lo) / h) + 1;
    std::vector<double> x(n);
    std::vector<Complex> f(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = x_lo + double(i) * h;
        f[i] = fn(x[i]);
    }
    std::vector<Complex> df = derivative4(f, h);

    std::vector<Complex> Lf(n), Mf(n);
    for (std::size_t i = 0; i < n; ++i) {
        Lf[i] = pair.L_op.apply(x[i], f[i], df[i]);
        Mf[i] = pair.M_op.apply(x[i], f[i], df[i]);
    }
    std::vector<Complex> dLf = derivative4(Lf, h);
    std::vector<Complex> dMf = derivative4(Mf, h);

    double worst = 0.0, scale = 0.0;
    for (std::size_t i = 4; i + 4 < n; ++i) {
        const Complex d2f =
            (-f[i + 2] + 16.0 * f[i + 1] - 30.0 * f[i] + 16.0 * f[i - 1] - f[i - 2]) /
            (12.0 * h * h);
        const Complex kin = -d2f / (2.0 * m);
        const Complex h1 = kin + (pair.U1(x[i]) + pair.factorization_shift) * f[i];
        const Complex h2 = kin + (pair.U2(x[i]) + pair.factorization_shift) * f[i];
        const Complex lm = pair.L_op.apply(x[i], Mf[i], dMf[i]); // (L M) f
        const Complex ml = pair.M_op.apply(x[i], Lf[i], dLf[i]); // (M L) f
        worst = std::max(worst, std::abs(lm - h1));
        worst = std::max(worst, std::abs(ml - h2));
        scale = std::max({scale, std::abs(h1), std::abs(h2)});
    }
    return worst / std::max(scale, 1e-300);
}

} // namespace

double verify_factorization(const SusyPair& pair,
                            const std::function<Complex(double)>& test_fn, double m,
                            double x_lo, double x_hi, double h) {
    const double r1 = factorization_residual(pair, test_fn, m, x_lo, x_hi, h);
    const double r2 = factorization_residual(pair, test_fn, m, x_lo, x_hi, h / 2.0);
    if (r1 > 1e-4 && r2 <= 0.75 * r1)
        throw GridTooCoarse("factorization residual is discretization-dominated; "
                            "refine h");
    return r1;
}

std::vector<Complex> intertwine_bound_state(const SusyPair& pair,
                                            const std::vector<double>& x,
                                            const std::vector<Complex>& psi2, double m,
                                            double E) {
    if (std::abs(m - E) < 1e-12 * std::max(1.0, std::abs(m)))
        throw ThresholdEnergy("intertwining constant diverges at E = m");
    if (x.size() != psi2.size() || x.size() < 5)
        throw Error("intertwine_bound_state: bad sample arrays");
    const double h = x[1] - x[0];
    std::vector<Complex> dpsi2 = derivative4(psi2, h);
    const Complex c0 = kI * std::sqrt(2.0 * m) / (m - E);
    std::vector<Complex> psi1(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        psi1[i] = c0 * pair.L_op.apply(x[i], psi2[i], dpsi2[i]);
    return psi1;
}

std::function<Complex(double)> intertwine_bound_state(
    const SusyPair& pair, const std::function<Complex(double)>& psi2,
    const std::function<Complex(double)>& dpsi2, double m, double E) {
    if (std::abs(m - E) < 1e-12 * std::max(1.0, std::abs(m)))
        throw ThresholdEnergy("intertwining constant diverges at E = m");
    const Complex c0 = kI * std::sqrt(2.0 * m) / (m - E);
    FirstOrderOp L = pair.L_op;
    return [c0, L, psi2, dpsi2](double x) {
        return c0 * L.apply(x, psi2(x), dpsi2(x));
    };
}

} // namespace dirac1d
