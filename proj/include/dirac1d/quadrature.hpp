#ifndef DIRAC1D_QUADRATURE_HPP
#define DIRAC1D_QUADRATURE_HPP

#include <functional>

#include "dirac1d/core.hpp"

namespace dirac1d {

// Adaptive Gauss-Kronrod 7-15 on a finite interval.
Complex integrate_gk(const std::function<Complex(double)>& f, double a, double b,
                     double rel_tol = 1e-10, double abs_tol = 1e-14,
                     int max_depth = 40);

// Integral over the whole real line via the x = tan(theta) substitution.
Complex integrate_real_line(const std::function<Complex(double)>& f,
                            double rel_tol = 1e-10, double abs_tol = 1e-14);

// Composite Simpson on an odd-length uniform grid of samples.
Complex simpson(const std::vector<Complex>& samples, double h);

} // namespace dirac1d

#endif
