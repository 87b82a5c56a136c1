#ifndef DIRAC1D_POTENTIALS_HPP
#define DIRAC1D_POTENTIALS_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "dirac1d/core.hpp"
#include "dirac1d/expr.hpp"

// Catalog of potential families plus DSL-defined models.  Every model
// exposes the complex triple (V, S, P)(x), its asymptotic limits, a tail
// class used for box sizing, and a PT-symmetry self check.

namespace dirac1d {

struct PotentialTriple {
    Complex V{}, S{}, P{};
};

struct Tail {
    enum class Kind { Exponential, Algebraic, Constant };
    Kind kind = Kind::Constant;
    double rate_or_power = 0.0;

    static Tail exponential(double rate) { return {Kind::Exponential, rate}; }
    static Tail algebraic(double power) { return {Kind::Algebraic, power}; }
    static Tail constant() { return {Kind::Constant, 0.0}; }
};

enum class ModelKind {
    Free,
    ScarfVectorScalar,
    Centrifugal,
    NogamiToyama,
    SuperScarf,
    ScalarOneBound,
    Expression,
};

enum class SymmetryMode { SpinSym, PseudoSpinSym }; // c_V = c_S vs c_V = -c_S

class PotentialModel {
  public:
    using EvalFn = std::function<PotentialTriple(double)>;
    using DerivFn = std::function<Complex(double)>;

    PotentialModel() = default;
    PotentialModel(std::string label, ModelKind kind, EvalFn eval,
                   AsymptoticLimits limits, Tail tail, double eps,
                   std::map<std::string, double> params);

    PotentialTriple eval(double x) const { return eval_(x); }
    const AsymptoticLimits& limits() const { return limits_; }
    const Tail& tail() const { return tail_; }
    double eps() const { return eps_; }
    ModelKind kind() const { return kind_; }
    const std::string& label() const { return label_; }
    const std::map<std::string, double>& params() const { return params_; }
    double param(const std::string& name) const;
    bool pt_declared() const { return pt_declared_; }

    // dP/dx and dS/dx: analytic closure when the catalog provides one,
    // central differences with h = 1e-6 max(1,|x|) otherwise.
    Complex dP(double x) const;
    Complex dS(double x) const;

    void set_dP(DerivFn f) { dP_ = std::move(f); }
    void set_dS(DerivFn f) { dS_ = std::move(f); }
    void set_pt_declared(bool v) { pt_declared_ = v; }

    // Expression models keep their sources and bindings for serialization.
    const std::map<std::string, std::string>& sources() const { return sources_; }
    const expr::Bindings& expr_bindings() const { return expr_bindings_; }
    void set_sources(std::map<std::string, std::string> s, expr::Bindings b) {
        sources_ = std::move(s);
        expr_bindings_ = std::move(b);
    }

    // Max deviation from V,S even-conjugate / P odd-conjugate symmetry on
    // a 101-point grid in [-10, 10].
    double pt_self_check(double half_width = 10.0, int points = 101) const;

    // Suggested half-width of the integration box for this tail class.
    double default_box() const;

    // |eval(+-L) - limits| against the declared tail bound; throws
    // LimitMismatch on disagreement.
    void check_declared_limits(double L) const;

  private:
    std::string label_;
    ModelKind kind_ = ModelKind::Free;
    EvalFn eval_;
    AsymptoticLimits limits_;
    Tail tail_;
    double eps_ = 0.0;
    std::map<std::string, double> params_;
    DerivFn dP_, dS_;
    bool pt_declared_ = false;
    std::map<std::string, std::string> sources_;
    expr::Bindings expr_bindings_;
};

inline constexpr double kDefaultShift = 0.1;

PotentialModel make_free(double m);

// Hyperbolic Scarf shape as a vector-plus-scalar pair V = c f, S = +-c f.
PotentialModel make_scarf_vector_scalar(int l, int n, double c, SymmetryMode mode,
                                        double m);

// V = S = c'/(x + i eps)^2 (SpinSym) or V = -c' f, S = c' f (PseudoSpinSym).
PotentialModel make_centrifugal(double eps, double c_prime, double m,
                                SymmetryMode mode = SymmetryMode::SpinSym);

// Pseudoscalar superpotential with limits P(+-inf) = -+lambda.
PotentialModel make_nogami_toyama(double lambda, double eps, double m);

// Pseudoscalar P = n tanh x + i l / cosh x with limits +-n.
PotentialModel make_super_scarf(int n, int l, double m);

// Scalar well supporting exactly one bound state; stores the derived
// kappa_B, E_B, lambda_B in params().
PotentialModel make_scalar_one_bound(double c_S, double eps, double m);

PotentialModel make_from_expressions(const std::string& V_src,
                                     const std::string& S_src,
                                     const std::string& P_src,
                                     const AsymptoticLimits& limits, Tail tail,
                                     const expr::Bindings& bindings,
                                     double eps = 0.0,
                                     const std::string& label = "expression");

// JSON round trip per the dirac1d-pt/1 model schema
// {label, kind, params, limits, tail, eps}.
std::string model_to_json(const PotentialModel& model);
PotentialModel model_from_json(const std::string& text);

std::string to_string(ModelKind kind);

} // namespace dirac1d

#endif
