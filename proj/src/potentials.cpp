#include "dirac1d/potentials.hpp"

#include <cmath>

#include <json.hpp>

namespace dirac1d {

using std::cosh;
using std::sinh;
using std::tanh;

static const Complex kI(0.0, 1.0);

PotentialModel::PotentialModel(std::string label, ModelKind kind, EvalFn eval,
                               AsymptoticLimits limits, Tail tail, double eps,
                               std::map<std::string, double> params)
    : label_(std::move(label)),
      kind_(kind),
      eval_(std::move(eval)),
      limits_(limits),
      tail_(tail),
      eps_(eps),
      params_(std::move(params)) {}

double PotentialModel::param(const std::string& name) const {
    auto it = params_.find(name);
    if (it == params_.end())
        throw Error("model '" + label_ + "' has no parameter '" + name + "'");
    return it->second;
}

Complex PotentialModel::dP(double x) const {
    if (dP_) return dP_(x);
    const double h = 1e-6 * std::max(1.0, std::abs(x));
    return (eval_(x + h).P - eval_(x - h).P) / (2.0 * h);
}

Complex PotentialModel::dS(double x) const {
    if (dS_) return dS_(x);
    const double h = 1e-6 * std::max(1.0, std::abs(x));
    return (eval_(x + h).S - eval_(x - h).S) / (2.0 * h);
}

double PotentialModel::pt_self_check(double half_width, int points) const {
    double worst = 0.0;
    for (int i = 0; i < points; ++i) {
        double x = -half_width + 2.0 * half_width * i / (points - 1);
        PotentialTriple plus = eval_(x);
        PotentialTriple minus = eval_(-x);
        worst = std::max(worst, std::abs(std::conj(minus.V) - plus.V));
        worst = std::max(worst, std::abs(std::conj(minus.S) - plus.S));
        worst = std::max(worst, std::abs(std::conj(minus.P) + plus.P));
    }
    return worst;
}

double PotentialModel::default_box() const {
    switch (tail_.kind) {
        case Tail::Kind::Exponential:
            return std::max(12.0, 30.0 / tail_.rate_or_power);
        case Tail::Kind::Algebraic: return 200.0;
        case Tail::Kind::Constant: return 12.0;
    }
    return 12.0;
}

void PotentialModel::check_declared_limits(double L) const {
    PotentialTriple at0 = eval_(0.0);
    PotentialTriple left = eval_(-L);
    PotentialTriple right = eval_(L);

    auto bound = [&](double scale0) {
        switch (tail_.kind) {
            case Tail::Kind::Exponential:
                return scale0 * std::exp(-tail_.rate_or_power * L);
            case Tail::Kind::Algebraic:
                return scale0 / std::pow(L, tail_.rate_or_power);
            case Tail::Kind::Constant: return 0.0;
        }
        return 0.0;
    };
    auto check = [&](Complex v0, Complex vL, Complex lim, const char* name) {
        double dev = std::abs(vL - lim);
        double b = bound(std::abs(v0 - lim));
        if (dev > 10.0 * b + 1e-9)
            throw LimitMismatch(std::string("declared limit for ") + name +
                                " disagrees with sampled tail of '" + label_ + "'");
    };
    check(at0.V, left.V, limits_.V_minus, "V-");
    check(at0.V, right.V, limits_.V_plus, "V+");
    check(at0.S, left.S, limits_.S_minus, "S-");
    check(at0.S, right.S, limits_.S_plus, "S+");
    check(at0.P, left.P, limits_.P_minus, "P-");
    check(at0.P, right.P, limits_.P_plus, "P+");
}

PotentialModel make_free(double m) {
    return PotentialModel("free", ModelKind::Free,
                          [](double) { return PotentialTriple{}; }, AsymptoticLimits{},
                          Tail::constant(), 0.0, {{"m", m}});
}

// ------------------------------------------------------ hyperbolic Scarf --

namespace {

// Shared shape of Scarf-type profiles: -A sech^2 x + i B sinh x sech^2 x.
Complex scarf_shape(double A, double B, double x) {
    double sech = 1.0 / cosh(x);
    return Complex(-A * sech * sech, B * tanh(x) * sech);
}

Complex scarf_shape_deriv(double A, double B, double x) {
    double sech = 1.0 / cosh(x);
    double th = tanh(x);
    return Complex(2.0 * A * sech * sech * th, B * sech * (1.0 - 2.0 * th * th));
}

} // namespace

PotentialModel make_scarf_vector_scalar(int l, int n, double c, SymmetryMode mode,
                                        double m) {
    const double A = (l * l + n * (n + 1)) / (2.0 * m);
    const double B = l * (2 * n + 1) / (2.0 * m);
    const double s = mode == SymmetryMode::SpinSym ? 1.0 : -1.0;
    auto eval = [A, B, c, s](double x) {
        Complex f = scarf_shape(A, B, x);
        PotentialTriple t;
        t.V = c * f;
        t.S = s * c * f;
        return t;
    };
    PotentialModel model("scarf_vector_scalar", ModelKind::ScarfVectorScalar, eval,
                         AsymptoticLimits{}, Tail::exponential(l != 0 ? 1.0 : 2.0), 0.0,
                         {{"l", double(l)},
                          {"n", double(n)},
                          {"c", c},
                          {"mode", mode == SymmetryMode::SpinSym ? 0.0 : 1.0},
                          {"m", m}});
    model.set_dS([A, B, c, s](double x) { return s * c * scarf_shape_deriv(A, B, x); });
    model.set_pt_declared(true);
    return model;
}

PotentialModel make_centrifugal(double eps, double c_prime, double m,
                                SymmetryMode mode) {
    if (eps == 0.0) throw ZeroShift("centrifugal model needs a non-zero shift");
    const double sv = mode == SymmetryMode::SpinSym ? 1.0 : -1.0;
    auto eval = [eps, c_prime, sv](double x) {
        Complex u(x, eps);
        Complex f = c_prime / (u * u);
        PotentialTriple t;
        t.V = sv * f;
        t.S = f;
        return t;
    };
    PotentialModel model("centrifugal", ModelKind::Centrifugal, eval, AsymptoticLimits{},
                         Tail::algebraic(2.0), eps,
                         {{"eps", eps},
                          {"c_prime", c_prime},
                          {"mode", mode == SymmetryMode::SpinSym ? 0.0 : 1.0},
                          {"m", m}});
    model.set_dS([eps, c_prime](double x) {
        Complex u(x, eps);
        return -2.0 * c_prime / (u * u * u);
    });
    model.set_pt_declared(true);
    return model;
}

// ------------------------------------------------------- pseudoscalar NT --

namespace {

Complex nt_superpotential(double lambda, Complex u) {
    Complex th = std::tanh(u);
    if (lambda == 1.0) return th;
    Complex den = std::sinh(lambda * u);
    Complex g = th - lambda * std::cosh(lambda * u) / den;
    return th + (lambda * lambda - 1.0) / g;
}

Complex nt_superpotential_deriv(double lambda, Complex u) {
    Complex ch = std::cosh(u);
    Complex sech2 = 1.0 / (ch * ch);
    if (lambda == 1.0) return sech2;
    Complex sl = std::sinh(lambda * u);
    Complex g = std::tanh(u) - lambda * std::cosh(lambda * u) / sl;
    Complex gp = sech2 + lambda * lambda / (sl * sl);
    return sech2 - (lambda * lambda - 1.0) * gp / (g * g);
}

} // namespace

PotentialModel make_nogami_toyama(double lambda, double eps, double m) {
    if (lambda < 1.0)
        throw Error("nogami_toyama requires lambda >= 1");
    auto eval = [lambda, eps](double x) {
        PotentialTriple t;
        t.P = nt_superpotential(lambda, Complex(x, eps));
        return t;
    };
    AsymptoticLimits limits;
    if (lambda == 1.0) {
        // the correction term vanishes identically and P = tanh(x + i eps)
        limits.P_minus = Complex(-1.0, 0.0);
        limits.P_plus = Complex(1.0, 0.0);
    } else {
        limits.P_minus = Complex(lambda, 0.0);
        limits.P_plus = Complex(-lambda, 0.0);
    }
    PotentialModel model("nogami_toyama", ModelKind::NogamiToyama, eval, limits,
                         Tail::exponential(2.0), eps,
                         {{"lambda", lambda}, {"eps", eps}, {"m", m}});
    model.set_dP([lambda, eps](double x) {
        return nt_superpotential_deriv(lambda, Complex(x, eps));
    });
    model.set_pt_declared(true);

    // Screen for real-axis poles of the superpotential; the admissible
    // (lambda, eps) region is not known in closed form.
    const double L = model.default_box();
    for (double x = -L; x <= L; x += 1e-3) {
        Complex u(x, eps);
        if (std::abs(std::cosh(u)) < 1e-8)
            throw PoleOnAxis("cosh(x + i eps) vanishes on the scan grid");
        if (lambda != 1.0) {
            Complex sl = std::sinh(lambda * u);
            if (std::abs(sl) < 1e-8)
                throw PoleOnAxis("sinh(lambda (x + i eps)) vanishes on the scan grid");
            Complex g = std::tanh(u) - lambda * std::cosh(lambda * u) / sl;
            if (std::abs(g) < 1e-8)
                throw PoleOnAxis("nogami_toyama denominator vanishes on the scan grid");
        }
    }
    return model;
}

PotentialModel make_super_scarf(int n, int l, double m) {
    auto eval = [n, l](double x) {
        PotentialTriple t;
        t.P = Complex(n * tanh(x), l / cosh(x));
        return t;
    };
    AsymptoticLimits limits;
    limits.P_minus = Complex(-double(n), 0.0);
    limits.P_plus = Complex(double(n), 0.0);
    PotentialModel model("super_scarf", ModelKind::SuperScarf, eval, limits,
                         Tail::exponential(l != 0 ? 1.0 : 2.0), 0.0,
                         {{"n", double(n)}, {"l", double(l)}, {"m", m}});
    model.set_dP([n, l](double x) {
        double sech = 1.0 / cosh(x);
        return Complex(n * sech * sech, -l * sech * tanh(x));
    });
    model.set_pt_declared(true);
    return model;
}

PotentialModel make_scalar_one_bound(double c_S, double eps, double m) {
    if (c_S <= 0.0) throw Error("scalar_one_bound requires c_S > 0");
    const double root = std::sqrt(c_S * c_S + 4.0);
    const double E_B = 2.0 * m / root;
    const double kappa_B = c_S * m / root;
    const double lambda_B = 0.5 * std::acosh(m / E_B);
    auto eval = [kappa_B, E_B, eps, m](double x) {
        Complex u(x, eps);
        PotentialTriple t;
        t.S = -2.0 * kappa_B * kappa_B / (m + E_B * std::cosh(2.0 * kappa_B * u));
        return t;
    };
    PotentialModel model("scalar_one_bound", ModelKind::ScalarOneBound, eval,
                         AsymptoticLimits{}, Tail::exponential(2.0 * kappa_B), eps,
                         {{"c_S", c_S},
                          {"eps", eps},
                          {"m", m},
                          {"kappa_B", kappa_B},
                          {"E_B", E_B},
                          {"lambda_B", lambda_B}});
    model.set_dS([kappa_B, E_B, eps, m](double x) {
        Complex u(x, eps);
        Complex den = m + E_B * std::cosh(2.0 * kappa_B * u);
        return 4.0 * kappa_B * kappa_B * kappa_B * E_B * std::sinh(2.0 * kappa_B * u) /
               (den * den);
    });
    model.set_pt_declared(true);

    const double L = model.default_box();
    for (double x = -L; x <= L; x += 1e-3) {
        Complex u(x, eps);
        if (std::abs(m + E_B * std::cosh(2.0 * kappa_B * u)) < 1e-8)
            throw PoleOnAxis("scalar_one_bound denominator vanishes on the scan grid");
    }
    return model;
}

PotentialModel make_from_expressions(const std::string& V_src, const std::string& S_src,
                                     const std::string& P_src,
                                     const AsymptoticLimits& limits, Tail tail,
                                     const expr::Bindings& bindings, double eps,
                                     const std::string& label) {
    expr::Ast V_ast = expr::parse(V_src);
    expr::Ast S_ast = expr::parse(S_src);
    expr::Ast P_ast = expr::parse(P_src);
    expr::validate_bindings(V_ast, bindings);
    expr::validate_bindings(S_ast, bindings);
    expr::validate_bindings(P_ast, bindings);

    auto eval = [V_ast, S_ast, P_ast, bindings](double x) {
        PotentialTriple t;
        t.V = expr::evaluate(V_ast, x, bindings);
        t.S = expr::evaluate(S_ast, x, bindings);
        t.P = expr::evaluate(P_ast, x, bindings);
        return t;
    };

    PotentialModel model(label, ModelKind::Expression, eval, limits, tail, eps, {});
    model.set_sources({{"V", V_src}, {"S", S_src}, {"P", P_src}}, bindings);
    model.check_declared_limits(model.default_box());
    model.set_pt_declared(model.pt_self_check() <= 1e-10);
    return model;
}

// ------------------------------------------------------------------- JSON --

namespace {

using nlohmann::json;

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
    return Complex(j.at(0).get<double>(), j.at(1).get<double>());
}

json limits_to_json(const AsymptoticLimits& l) {
    return json{{"V_minus", complex_to_json(l.V_minus)},
                {"V_plus", complex_to_json(l.V_plus)},
                {"S_minus", complex_to_json(l.S_minus)},
                {"S_plus", complex_to_json(l.S_plus)},
                {"P_minus", complex_to_json(l.P_minus)},
                {"P_plus", complex_to_json(l.P_plus)}};
}

AsymptoticLimits limits_from_json(const json& j) {
    AsymptoticLimits l;
    l.V_minus = complex_from_json(j.at("V_minus"));
    l.V_plus = complex_from_json(j.at("V_plus"));
    l.S_minus = complex_from_json(j.at("S_minus"));
    l.S_plus = complex_from_json(j.at("S_plus"));
    l.P_minus = complex_from_json(j.at("P_minus"));
    l.P_plus = complex_from_json(j.at("P_plus"));
    return l;
}

json tail_to_json(const Tail& t) {
    const char* kind = t.kind == Tail::Kind::Exponential ? "exponential"
                       : t.kind == Tail::Kind::Algebraic ? "algebraic"
                                                         : "constant";
    return json{{"kind", kind}, {"value", t.rate_or_power}};
}

Tail tail_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    double v = j.at("value").get<double>();
    if (kind == "exponential") return Tail::exponential(v);
    if (kind == "algebraic") return Tail::algebraic(v);
    if (kind == "constant") return Tail::constant();
    throw Error("unknown tail kind '" + kind + "'");
}

} // namespace

std::string to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::Free: return "free";
        case ModelKind::ScarfVectorScalar: return "scarf_vector_scalar";
        case ModelKind::Centrifugal: return "centrifugal";
        case ModelKind::NogamiToyama: return "nogami_toyama";
        case ModelKind::SuperScarf: return "super_scarf";
        case ModelKind::ScalarOneBound: return "scalar_one_bound";
        case ModelKind::Expression: return "expression";
    }
    return "unknown";
}

std::string model_to_json(const PotentialModel& model) {
    json j;
    j["label"] = model.label();
    j["kind"] = to_string(model.kind());
    j["params"] = json(model.params());
    j["limits"] = limits_to_json(model.limits());
    j["tail"] = tail_to_json(model.tail());
    j["eps"] = model.eps();
    if (model.kind() == ModelKind::Expression) {
        j["sources"] = json(model.sources());
        json b = json::object();
        for (const auto& [name, value] : model.expr_bindings())
            b[name] = complex_to_json(value);
        j["bindings"] = b;
    }
    return j.dump(2);
}

PotentialModel model_from_json(const std::string& text) {
    json j = json::parse(text);
    const std::string kind = j.at("kind").get<std::string>();
    auto param = [&j](const char* name) { return j.at("params").at(name).get<double>(); };

    if (kind == "free") return make_free(param("m"));
    if (kind == "scarf_vector_scalar")
        return make_scarf_vector_scalar(
            int(param("l")), int(param("n")), param("c"),
            param("mode") == 0.0 ? SymmetryMode::SpinSym : SymmetryMode::PseudoSpinSym,
            param("m"));
    if (kind == "centrifugal")
        return make_centrifugal(
            param("eps"), param("c_prime"), param("m"),
            param("mode") == 0.0 ? SymmetryMode::SpinSym : SymmetryMode::PseudoSpinSym);
    if (kind == "nogami_toyama")
        return make_nogami_toyama(param("lambda"), param("eps"), param("m"));
    if (kind == "super_scarf")
        return make_super_scarf(int(param("n")), int(param("l")), param("m"));
    if (kind == "scalar_one_bound")
        return make_scalar_one_bound(param("c_S"), param("eps"), param("m"));
    if (kind == "expression") {
        expr::Bindings bindings;
        if (j.contains("bindings"))
            for (auto it = j["bindings"].begin(); it != j["bindings"].end(); ++it)
                bindings[it.key()] = complex_from_json(it.value());
        const auto& src = j.at("sources");
        return make_from_expressions(src.at("V").get<std::string>(),
                                     src.at("S").get<std::string>(),
                                     src.at("P").get<std::string>(),
                                     limits_from_json(j.at("limits")),
                                     tail_from_json(j.at("tail")), bindings,
                                     j.value("eps", 0.0),
                                     j.value("label", std::string("expression")));
    }
    throw Error("unknown model kind '" + kind + "'");
}

} // namespace dirac1d
