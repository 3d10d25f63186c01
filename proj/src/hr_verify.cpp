#include "gelfand/hr_verify.hpp"

#include <cmath>

#include "gelfand/constants.hpp"
#include "gelfand/errors.hpp"

namespace gelfand {

double iterated_laplacian(const RadialTestFunction& phi, double r, int n, int k, bool gradient) {
    if (phi.is_zero()) return 0.0;
    const auto order = static_cast<std::size_t>(2 * k + (gradient ? 1 : 0));
    Jet v = phi.jet(r, order);
    for (int i = 0; i < k; ++i) v = radial_laplacian(v, r, n);
    return gradient ? v.derivative(1) : v.value();
}

QuadratureRule support_rule(const RadialTestFunction& phi, std::size_t panels) {
    if (phi.is_zero()) return {};
    if (phi.lo > 0.0) return composite_log_rule(phi.lo, phi.hi, panels);
    return composite_rule_from_origin(phi.hi, panels, 32, 1e-4);
}

std::string to_string(HRInequality v) {
    switch (v) {
        case HRInequality::Rellich: return "rellich";
        case HRInequality::RellichGradient: return "rellich-gradient";
        case HRInequality::LogSecondOrder: return "log-second-order";
        case HRInequality::LogRellich: return "log-rellich";
        case HRInequality::LogRellichGradient: return "log-rellich-gradient";
        case HRInequality::OneDimensional: return "one-dimensional";
    }
    return "rellich";
}

HRInequality hr_inequality_from_string(const std::string& s) {
    for (auto v : {HRInequality::Rellich, HRInequality::RellichGradient, HRInequality::LogSecondOrder,
                   HRInequality::LogRellich, HRInequality::LogRellichGradient, HRInequality::OneDimensional})
        if (to_string(v) == s) return v;
    throw DomainError("unknown inequality '" + s + "'");
}

HRCheck verify_hr_inequality(HRInequality variant, const HRQuery& q, const RadialTestFunction& phi, double R,
                             std::size_t panels) {
    HRCheck out;
    out.R = R;
    const bool log_form = variant == HRInequality::LogSecondOrder || variant == HRInequality::LogRellich ||
                          variant == HRInequality::LogRellichGradient;
    const int n = variant == HRInequality::OneDimensional ? 1 : q.n;
    const int k = q.k;
    if (variant != HRInequality::LogSecondOrder &&
        (k < 0 || (k == 0 && variant != HRInequality::RellichGradient && variant != HRInequality::OneDimensional &&
                   variant != HRInequality::LogRellichGradient)))
        throw DomainError("verify_hr_inequality: k out of range");
    if (n < 1 || (variant != HRInequality::OneDimensional && n < 2))
        throw DomainError("verify_hr_inequality: n must be >= 2");

    switch (variant) {
        case HRInequality::Rellich: {
            double p = 1.0;
            for (int i = 1; i <= k; ++i) p *= hr_mu(n, -4.0 * k + 4.0 * i).value;
            out.constant = p;
            break;
        }
        case HRInequality::RellichGradient: {
            double p = std::pow((n - 2) / 2.0, 2);
            for (int i = 1; i <= k; ++i) p *= hr_mu(n, -4.0 * k + 4.0 * i).value;
            out.constant = p;
            break;
        }
        case HRInequality::LogSecondOrder:
            if (!(q.alpha <= 0.0) || !(q.beta >= 0.0)) throw DomainError("log-second-order needs alpha <= 0, beta >= 0");
            if (hr_mu(n, q.alpha).value != 0.0) throw DomainError("log-second-order needs mu_{n,alpha} = 0");
            out.constant = 2.0 * hr_gamma_bar(n, q.alpha) * std::pow((q.beta + 1.0) / 2.0, 2);
            break;
        case HRInequality::LogRellich: out.constant = hr_log_laplacian_constant(n, k); break;
        case HRInequality::LogRellichGradient: out.constant = hr_log_gradient_constant(n, k); break;
        case HRInequality::OneDimensional: out.constant = oned_constant(k); break;
    }

    if (phi.is_zero()) return out;
    if (log_form && !(phi.lo > std::max(R, 1.0)))
        throw DomainError("log-weighted forms need the support inside |x| > max(R, 1)");
    if (!(phi.lo > 0.0)) throw DomainError("test function support must avoid the origin");

    const auto rule = support_rule(phi, panels);
    const double omega = unit_sphere_area(n);
    double lhs = 0.0;
    double rhs = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double r = rule.nodes[i];
        const double vol = rule.weights[i] * std::pow(r, n - 1);
        const double f = phi.value(r);
        double d = 0.0;
        double wl = 0.0;
        double wr = 1.0;
        switch (variant) {
            case HRInequality::Rellich:
                d = iterated_laplacian(phi, r, n, k, false);
                wl = std::pow(r, -4.0 * k);
                break;
            case HRInequality::RellichGradient:
                d = iterated_laplacian(phi, r, n, k, true);
                wl = std::pow(r, -4.0 * k - 2.0);
                break;
            case HRInequality::LogSecondOrder: {
                const double L = std::log(r);
                d = iterated_laplacian(phi, r, n, 1, false);
                wl = std::pow(r, q.alpha - 4.0) * std::pow(L, -q.beta - 2.0);
                wr = std::pow(r, q.alpha) * std::pow(L, -q.beta);
                break;
            }
            case HRInequality::LogRellich:
                d = iterated_laplacian(phi, r, n, k, false);
                wl = std::pow(r, -4.0 * k) * std::pow(std::log(r), -2.0 * k);
                break;
            case HRInequality::LogRellichGradient:
                d = iterated_laplacian(phi, r, n, k, true);
                wl = std::pow(r, -4.0 * k - 2.0) * std::pow(std::log(r), -2.0 * k - 2.0);
                break;
            case HRInequality::OneDimensional:
                d = phi.jet(r, static_cast<std::size_t>(2 * k + 1)).derivative(static_cast<std::size_t>(2 * k + 1));
                wl = std::pow(r, -4.0 * k - 2.0);
                break;
        }
        lhs += vol * wl * f * f;
        rhs += vol * wr * d * d;
    }
    out.lhs = omega * lhs;
    out.rhs = omega * rhs;
    out.margin = out.rhs - out.constant * out.lhs;
    return out;
}

}  // namespace gelfand
