#ifndef DIRAC1D_RK45_HPP
#define DIRAC1D_RK45_HPP

#include <array>
#include <cmath>
#include <cstddef>

#include "dirac1d/core.hpp"

// Embedded Dormand-Prince 5(4) pair with PI step-size control, on small
// fixed-size complex state vectors.

namespace dirac1d {

struct RkOptions {
    double rtol = 1e-10;
    double atol = 1e-12;
    std::size_t max_steps = 2'000'000;
};

struct RkStats {
    std::size_t accepted = 0;
    std::size_t rejected = 0;
    double error_accum = 0.0; // sum of accepted local error estimates
};

// F          : void(double x, const State& y, State& dydx)
// OnAccepted : void(double x, State& y)  -- may rescale y in place
//              (valid for linear systems; derivatives are recomputed).
template <std::size_t N, class F, class OnAccepted>
RkStats rk45_integrate(F&& f, std::array<Complex, N>& y, double x0, double x1,
                       const RkOptions& opt, OnAccepted&& on_accepted) {
    using State = std::array<Complex, N>;

    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                            a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    // difference between 5th and embedded 4th order weights
    static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600,
                            e3 = 500.0 / 1113 - 7571.0 / 16695,
                            e4 = 125.0 / 192 - 393.0 / 640,
                            e5 = -2187.0 / 6784 + 92097.0 / 339200,
                            e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

    const double dir = x1 >= x0 ? 1.0 : -1.0;
    const double span = std::abs(x1 - x0);
    double x = x0;
    double h = dir * std::min(1e-3 * span + 1e-12, 0.1);

    State k1, k2, k3, k4, k5, k6, k7, ytmp, y5;
    RkStats stats;

    constexpr double safe = 0.9, beta = 0.04, expo1 = 0.2 - beta * 0.75;
    double facold = 1e-4;
    bool last_rejected = false;

    while (dir * (x1 - x) > 1e-14 * span) {
        if (stats.accepted + stats.rejected >= opt.max_steps)
            throw StepLimitExceeded("rk45: step limit exceeded");
        if (dir * (x + h - x1) > 0.0) h = x1 - x;

        f(x, y, k1);
        for (std::size_t i = 0; i < N; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
        f(x + c2 * h, ytmp, k2);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        f(x + c3 * h, ytmp, k3);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        f(x + c4 * h, ytmp, k4);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        f(x + c5 * h, ytmp, k5);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                                  a64 * k4[i] + a65 * k5[i]);
        f(x + h, ytmp, k6);
        for (std::size_t i = 0; i < N; ++i)
            y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                                b6 * k6[i]);
        f(x + h, y5, k7);

        double err = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            Complex e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                             e6 * k6[i] + e7 * k7[i]);
            double sc = opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
            double q = std::abs(e) / sc;
            err += q * q;
        }
        err = std::sqrt(err / N);

        const double fac11 = std::pow(std::max(err, 1e-30), expo1);
        if (err <= 1.0) {
            x += h;
            y = y5;
            stats.accepted++;
            double scmax = 0.0;
            for (std::size_t i = 0; i < N; ++i)
                scmax = std::max(scmax, opt.atol + opt.rtol * std::abs(y5[i]));
            stats.error_accum += err * scmax;
            on_accepted(x, y);
            facold = std::max(err, 1e-4);
            double fac = fac11 / std::pow(facold, beta);
            fac = std::max(0.1, std::min(5.0, fac / safe));
            double hnew = h / fac;
            if (last_rejected) hnew = dir * std::min(std::abs(hnew), std::abs(h));
            h = hnew;
            last_rejected = false;
        } else {
            h = h / std::min(5.0, fac11 / safe);
            stats.rejected++;
            last_rejected = true;
        }
    }
    return stats;
}

} // namespace dirac1d

#endif
