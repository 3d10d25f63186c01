#include "gelfand/stability.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

#include "gelfand/asymptotics.hpp"
#include "gelfand/constants.hpp"
#include "gelfand/hr_verify.hpp"
#include "gelfand/quadrature.hpp"

namespace gelfand {

RadialProfile::RadialProfile(std::function<double(double)> u, double r_data, std::function<double(double)> tail,
                             std::string tail_description)
    : u_(std::move(u)), r_data_(r_data), tail_(std::move(tail)), tail_description_(std::move(tail_description)) {}

RadialProfile RadialProfile::constant(double value) {
    return RadialProfile([value](double) { return value; }, INFINITY);
}

RadialProfile RadialProfile::from_trajectory(const Trajectory& t) {
    auto data = std::make_shared<const Trajectory>(t);
    const double r_d = t.samples.back().r;
    const double u_d = t.samples.back().w[0];
    auto u = [data](double r) { return interpolate_u(*data, r); };

    std::function<double(double)> tail;
    std::string desc;
    if (t.terminal_event == TerminalEvent::ReachedHorizon && t.samples.front().r * 100.0 <= r_d) {
        const int m = t.problem.m;
        const auto rep = analyze(t);
        if (rep.regime == Regime::PowerGrowthDown) {
            const double c = rep.fitted_leading_coeff;
            const double p = 2.0 * m - 2.0;
            tail = [u_d, r_d, c, p](double r) { return u_d + c * (std::pow(r, p) - std::pow(r_d, p)); };
            desc = "fitted c r^" + std::to_string(2 * m - 2);
        } else {
            // power law when -u grows like a power, logarithmic slope otherwise;
            // both matched to w_0 and w_0' at the last sample
            const double slope = r_d * t.samples.back().dw[0];
            const double k = u_d < 0.0 ? slope / u_d : 0.0;
            if (k > 0.5) {
                tail = [u_d, r_d, k](double r) { return u_d * std::pow(r / r_d, k); };
                desc = "power law";
            } else {
                tail = [u_d, r_d, slope](double r) { return u_d + slope * std::log(r / r_d); };
                desc = "log slope";
            }
        }
    }
    return RadialProfile(std::move(u), r_d, std::move(tail), std::move(desc));
}

double RadialProfile::operator()(double r, bool& extended) const {
    if (r <= r_data_) return u_(r);
    if (!tail_) throw DomainError("test function support exceeds the data range and no extension is available");
    extended = true;
    return tail_(r);
}

FormValue rayleigh_form(const RadialProfile& u, const RadialTestFunction& phi, const ProblemSpec& problem,
                        std::size_t panels) {
    FormValue out;
    if (phi.is_zero()) return out;
    const int m = problem.m;
    const int n = problem.n;
    const int k = m / 2;
    const bool gradient = m % 2 != 0;
    const auto rule = support_rule(phi, panels);
    double d_sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double r = rule.nodes[i];
        Jet v = phi.jet(r, static_cast<std::size_t>(2 * k + (gradient ? 1 : 0)));
        for (int j = 0; j < k; ++j) v = radial_laplacian(v, r, n);
        const double d = gradient ? v.derivative(1) : v.value();
        d_sum += rule.weights[i] * std::pow(r, n - 1) * d * d;
    }

    // e^u varies on its own scale, so the potential term gets a finer rule
    // reaching down to r = 1e-3 with 16 panels per decade
    const double lo = phi.lo > 0.0 ? phi.lo : std::min(1e-4 * phi.hi, 1e-3);
    const auto fine_panels = std::max(panels, static_cast<std::size_t>(std::ceil(16.0 * std::log10(phi.hi / lo))));
    const auto fine = phi.lo > 0.0 ? composite_log_rule(lo, phi.hi, fine_panels)
                                   : composite_rule_from_origin(phi.hi, fine_panels, 32, lo / phi.hi);
    double p_sum = 0.0;
    for (std::size_t i = 0; i < fine.nodes.size(); ++i) {
        const double r = fine.nodes[i];
        const double f = phi.value(r);
        if (f != 0.0) p_sum += fine.weights[i] * std::pow(r, n - 1) * std::exp(u(r, out.extended)) * f * f;
    }
    const double omega = unit_sphere_area(n);
    out.derivative_term = omega * d_sum;
    out.potential_term = omega * p_sum;
    out.value = out.derivative_term - out.potential_term;
    return out;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::InstabilityWitnessFound: return "InstabilityWitnessFound";
        case Verdict::NoWitnessInFamily: return "NoWitnessInFamily";
        case Verdict::CertifiedOutsideCompact: return "CertifiedOutsideCompact";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

std::string to_string(Family f) { return f == Family::ScaledCutoff ? "scaled" : "dyadic"; }

Family family_from_string(const std::string& s) {
    if (s == "scaled") return Family::ScaledCutoff;
    if (s == "dyadic") return Family::DyadicSum;
    throw DomainError("unknown family '" + s + "' (expected scaled or dyadic)");
}

StabilityReport instability_search(const RadialProfile& u, const ProblemSpec& problem, Family family,
                                   const FamilyRange& range) {
    StabilityReport rep;
    std::vector<std::pair<double, RadialTestFunction>> members;
    if (family == Family::ScaledCutoff) {
        if (range.R_count < 1 || !(range.R_lo > 0.0) || !(range.R_hi >= range.R_lo))
            throw DomainError("instability_search: bad R range");
        for (int i = 0; i < range.R_count; ++i) {
            const double R = range.R_count == 1
                                 ? range.R_lo
                                 : range.R_lo * std::pow(range.R_hi / range.R_lo, static_cast<double>(i) / (range.R_count - 1));
            members.emplace_back(R, RadialTestFunction::cutoff(R));
        }
    } else {
        if (range.K < 1) throw DomainError("instability_search: K must be >= 1");
        for (int k = 1; k <= range.K; ++k) members.emplace_back(k, RadialTestFunction::dyadic(k));
    }
    for (const auto& [param, phi] : members) {
        const FormValue f = rayleigh_form(u, phi, problem);
        rep.extended = rep.extended || f.extended;
        rep.form_values.emplace_back(param, f);
        if (f.value < 0.0 && !rep.witness) rep.witness = param;
    }
    rep.verdict = rep.witness ? Verdict::InstabilityWitnessFound : Verdict::NoWitnessInFamily;
    if (rep.extended) rep.notes.push_back("u extended beyond the data by " + u.tail_description());
    return rep;
}

double SocsWeight::operator()(double r) const {
    double v = constant / std::pow(r, power);
    if (log_power != 0) v /= std::pow(std::log(r), log_power);
    return v;
}

SocsWeight socs_weight(const ProblemSpec& problem) {
    const int m = problem.m;
    const int n = problem.n;
    SocsWeight w;
    w.power = 2 * m;
    std::ostringstream os;
    if (m % 2 == 0 && n >= 3 && n <= 2 * m && n % 2 == 0) {
        w.table_case = 1;
        w.constant = hr_log_laplacian_constant(n, m / 2);
        w.log_power = m;
        w.r_min = 1.0;
        os << "log-weighted, |x|^{-" << 2 * m << "} (log|x|)^{-" << m << "}";
    } else if (m % 2 != 0 && m >= 3 && n >= 2 && n <= 2 * m && n % 2 == 0) {
        w.table_case = 2;
        w.constant = hr_log_gradient_constant(n, (m - 1) / 2);
        w.log_power = m + 1;
        w.r_min = 1.0;
        os << "log-weighted, |x|^{-" << 2 * m << "} (log|x|)^{-" << m + 1 << "}";
    } else if (m % 2 != 0 && n == 1) {
        w.table_case = 3;
        w.constant = oned_constant((m - 1) / 2);
        os << "one-dimensional, |x|^{-" << 2 * m << "}";
        if (w.constant == 0.0) os << " (zero constant for m = 1; the certificate degenerates)";
    } else if (m % 2 == 0 && ((n >= 3 && n <= 2 * m && n % 2 != 0) || n > 2 * m)) {
        w.table_case = 4;
        w.constant = hr_product(n, m / 2, HRVariant::Laplacian).value;
        os << "mu-product, |x|^{-" << 2 * m << "}";
    } else if (m % 2 != 0 && ((n >= 3 && n <= 2 * m && n % 2 != 0) || n > 2 * m)) {
        w.table_case = 5;
        w.constant = hr_product(n, (m - 1) / 2, HRVariant::Gradient).value;
        os << "mu-product with gradient, |x|^{-" << 2 * m << "}";
    } else {
        throw DomainError("no weight is defined for m = " + std::to_string(m) + ", n = " + std::to_string(n));
    }
    w.description = os.str();
    return w;
}

StabilityReport socs_certificate(const Trajectory& trajectory) {
    StabilityReport rep;
    const SocsWeight V = socs_weight(trajectory.problem);
    rep.notes.push_back("weight: " + V.description);
    if (V.constant <= 0.0) {
        rep.verdict = Verdict::Inconclusive;
        rep.notes.push_back("weight constant is zero");
        return rep;
    }
    if (trajectory.terminal_event != TerminalEvent::ReachedHorizon) {
        rep.verdict = Verdict::Inconclusive;
        rep.notes.push_back("trajectory is not global up to the horizon");
        return rep;
    }
    // last admissible sample where e^u > V; R is the next sample radius
    const auto& s = trajectory.samples;
    std::optional<std::size_t> first_ok;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i].r <= V.r_min) continue;
        const double lhs = s[i].w[0];
        const double rhs = std::log(V(s[i].r));
        if (lhs > rhs) first_ok.reset();
        else if (!first_ok) first_ok = i;
    }
    const double r_last = s.back().r;
    if (first_ok && s[*first_ok].r * 10.0 <= r_last) {
        rep.verdict = Verdict::CertifiedOutsideCompact;
        rep.certificate_radius = s[*first_ok].r;
    } else {
        rep.verdict = Verdict::Inconclusive;
        rep.notes.push_back("e^u does not stay below V over the last decade of data");
    }
    return rep;
}

}  // namespace gelfand
