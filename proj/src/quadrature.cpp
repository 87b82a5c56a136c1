#include "dirac1d/quadrature.hpp"

#include <cmath>
#include <vector>

namespace dirac1d {

namespace {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct GkEstimate {
    Complex value;
    double error;
};

GkEstimate gk15(const std::function<Complex(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    Complex fc = f(c);
    Complex resg = kWg[3] * fc;
    Complex resk = kWgk[7] * fc;
    for (int j = 0; j < 7; ++j) {
        Complex f1 = f(c - h * kXgk[j]);
        Complex f2 = f(c + h * kXgk[j]);
        resk += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    GkEstimate e;
    e.value = resk * h;
    e.error = std::abs(resk - resg) * std::abs(h);
    return e;
}

void adapt(const std::function<Complex(double)>& f, double a, double b,
           double rel_tol, double abs_tol, int depth, int max_depth,
           Complex& acc, double& err_acc, double whole_scale) {
    GkEstimate e = gk15(f, a, b);
    double tol = std::max(abs_tol, rel_tol * whole_scale);
    if (e.error <= tol * std::abs(b - a) || depth >= max_depth) {
        acc += e.value;
        err_acc += e.error;
        return;
    }
    double c = 0.5 * (a + b);
    adapt(f, a, c, rel_tol, abs_tol, depth + 1, max_depth, acc, err_acc, whole_scale);
    adapt(f, c, b, rel_tol, abs_tol, depth + 1, max_depth, acc, err_acc, whole_scale);
}

} // namespace

Complex integrate_gk(const std::function<Complex(double)>& f, double a, double b,
                     double rel_tol, double abs_tol, int max_depth) {
    GkEstimate first = gk15(f, a, b);
    double scale = std::max(std::abs(first.value) / std::max(std::abs(b - a), 1e-100), 1e-100);
    Complex acc{};
    double err = 0.0;
    adapt(f, a, b, rel_tol, abs_tol, 0, max_depth, acc, err, scale);
    return acc;
}

Complex integrate_real_line(const std::function<Complex(double)>& f,
                            double rel_tol, double abs_tol) {
    auto g = [&f](double t) {
        double c = std::cos(t);
        double s = 1.0 / (c * c);
        return f(std::tan(t)) * s;
    };
    const double edge = 1e-8; // keep tan() finite at the endpoints
    return integrate_gk(g, -kPi / 2 + edge, kPi / 2 - edge, rel_tol, abs_tol);
}

Complex simpson(const std::vector<Complex>& samples, double h) {
    const std::size_t n = samples.size();
    if (n < 3 || n % 2 == 0)
        throw Error("simpson: need an odd number of samples >= 3");
    Complex acc = samples.front() + samples.back();
    for (std::size_t i = 1; i + 1 < n; ++i)
        acc += samples[i] * (i % 2 == 1 ? 4.0 : 2.0);
    return acc * (h / 3.0);
}

} // namespace dirac1d
