#include "gelfand/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <span>

// Boost 1.74's pchip calls isnan unqualified
#include <math.h>
#include <boost/math/interpolators/pchip.hpp>

#include "gelfand/constants.hpp"
#include "gelfand/quadrature.hpp"
#include "gelfand/spectrum.hpp"

namespace gelfand {

namespace {

// Samples with r in [r_last / 10^decades, r_last].
std::span<const RadialState> tail(const Trajectory& t, double decades = 1.0) {
    if (t.samples.size() < 3) throw DomainError("trajectory too short for a tail fit");
    const double r_last = t.samples.back().r;
    const double r_first = t.samples.front().r;
    if (r_last < 100.0 * r_first) throw DomainError("trajectory spans fewer than two decades");
    const double lo = r_last * std::pow(10.0, -decades) * (1.0 - 1e-12);
    const auto it = std::lower_bound(t.samples.begin(), t.samples.end(), lo,
                                     [](const RadialState& s, double x) { return s.r < x; });
    return {it, t.samples.end()};
}

}  // namespace

EllEstimate estimate_ell(const Trajectory& trajectory) {
    const auto win = tail(trajectory);
    const auto k = static_cast<std::size_t>(trajectory.problem.m - 1);
    double sum = 0.0;
    double lo = win.front().w[k];
    double hi = lo;
    for (const auto& s : win) {
        sum += s.w[k];
        lo = std::min(lo, s.w[k]);
        hi = std::max(hi, s.w[k]);
    }
    return {sum / static_cast<double>(win.size()), hi - lo};
}

double fit_leading_coefficient(const Trajectory& trajectory, double p) {
    const auto win = tail(trajectory);
    // minimise sum (w_0 - c r^p)^2 / r^{2p}: the mean of w_0 / r^p
    double sum = 0.0;
    for (const auto& s : win) sum += s.w[0] / std::pow(s.r, p);
    return sum / static_cast<double>(win.size());
}

double predicted_leading_coefficient(int m, int n, double ell) {
    double d = std::ldexp(1.0, m - 1);
    for (int l = 1; l <= m - 1; ++l) d *= l * static_cast<double>(n + 2 * l - 2);
    return ell / d;
}

double tail_log_slope(const Trajectory& trajectory) {
    const auto win = tail(trajectory);
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& s : win) {
        const double x = std::log(s.r);
        sx += x;
        sy += s.w[0];
        sxx += x * x;
        sxy += x * s.w[0];
    }
    const auto cnt = static_cast<double>(win.size());
    return -(cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
}

PowerBound power_bound_check(const Trajectory& trajectory, int K, double decades) {
    if (K < 1) throw DomainError("power_bound_check: K must be >= 1");
    const auto win = tail(trajectory, decades);
    double c = INFINITY;
    for (const auto& s : win) c = std::min(c, -s.w[0] / std::pow(s.r, K));
    c = std::max(c, 0.0);
    return {c, c > 0.0};
}

EmdenSamples emden_transform(const ProblemSpec& problem, const std::vector<double>& r, const std::vector<double>& u) {
    if (problem.n <= 2 * problem.m) throw DomainError("Emden transform needs n > 2m");
    if (r.size() != u.size()) throw DomainError("Emden transform: size mismatch");
    EmdenSamples e;
    e.m = problem.m;
    e.lambda_S = lambda_S(problem.m, problem.n);
    const double log_l = std::log(e.lambda_S);
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (!(r[i] > 0.0)) throw DomainError("Emden transform: radii must be positive");
        const double s = std::log(r[i]);
        if (!e.s.empty() && !(s > e.s.back())) throw DomainError("Emden transform: radii must increase");
        e.s.push_back(s);
        e.w.push_back(u[i] + 2.0 * problem.m * s - log_l);
    }
    return e;
}

EmdenSamples emden_transform(const Trajectory& trajectory) {
    std::vector<double> r, u;
    for (const auto& s : trajectory.samples) {
        r.push_back(s.r);
        u.push_back(s.w[0]);
    }
    return emden_transform(trajectory.problem, r, u);
}

EmdenResidual emden_residual(const EmdenSamples& samples, const ProblemSpec& problem, double h) {
    const int m = problem.m;
    const auto& s = samples.s;
    if (s.size() < static_cast<std::size_t>(4 * m + 1)) throw DomainError("emden_residual: need at least 4m+1 samples");

    std::vector<double> w;
    double step = h;
    if (h <= 0.0) {
        step = (s.back() - s.front()) / static_cast<double>(s.size() - 1);
        for (std::size_t i = 1; i < s.size(); ++i)
            if (std::abs(s[i] - s[i - 1] - step) > 1e-9 * std::max(1.0, std::abs(step)))
                throw DomainError("emden_residual: samples are not uniform; pass a resampling step");
        w = samples.w;
    } else {
        const auto count = static_cast<std::size_t>(std::floor((s.back() - s.front()) / h + 1e-9)) + 1;
        if (count < static_cast<std::size_t>(4 * m + 1)) throw DomainError("emden_residual: grid too coarse");
        boost::math::interpolators::pchip<std::vector<double>> spline(std::vector<double>(s), std::vector<double>(samples.w));
        w.reserve(count);
        for (std::size_t i = 0; i < count; ++i) w.push_back(spline(std::min(s.front() + h * static_cast<double>(i), s.back())));
    }

    const auto q = Qm_coefficients(m, problem.n);
    const double lam = lambda_S(m, problem.n);
    const int reach = m + 1;  // half-width of the widest stencil
    // stencils with offsets -p..p, p = floor((j+1)/2) + 1: fourth order for every j
    std::vector<std::vector<double>> stencils(static_cast<std::size_t>(2 * m + 1));
    for (int j = 1; j <= 2 * m; ++j) {
        const int p = (j + 1) / 2 + 1;
        std::vector<double> offs;
        for (int o = -p; o <= p; ++o) offs.push_back(o * step);
        stencils[static_cast<std::size_t>(j)] = fd_weights(j, 0.0, offs);
    }

    EmdenResidual res;
    res.h = step;
    res.points = w.size();
    if (w.size() < static_cast<std::size_t>(2 * reach + 1)) throw DomainError("emden_residual: grid too coarse");
    for (std::size_t i = static_cast<std::size_t>(reach); i + static_cast<std::size_t>(reach) < w.size(); ++i) {
        double lhs = q[0] * w[i];
        for (int j = 1; j <= 2 * m; ++j) {
            const auto& st = stencils[static_cast<std::size_t>(j)];
            const int p = static_cast<int>(st.size() / 2);
            double d = 0.0;
            for (int o = -p; o <= p; ++o) d += st[static_cast<std::size_t>(o + p)] * w[static_cast<std::size_t>(static_cast<int>(i) + o)];
            lhs += q[static_cast<std::size_t>(j)] * d;
        }
        const double r = std::abs(lhs - lam * std::expm1(w[i]));
        res.max_residual = std::max(res.max_residual, r);
    }
    return res;
}

std::string to_string(Regime r) {
    switch (r) {
        case Regime::PowerGrowthDown: return "PowerGrowthDown";
        case Regime::LogDecay: return "LogDecay";
        case Regime::PowerBound: return "PowerBound";
        case Regime::Undetermined: return "Undetermined";
    }
    return "Undetermined";
}

AsymptoticReport analyze(const Trajectory& trajectory) {
    AsymptoticReport rep;
    const auto& p = trajectory.problem;
    const int m = p.m;
    rep.log_slope = tail_log_slope(trajectory);
    if (trajectory.terminal_event != TerminalEvent::ReachedHorizon) {
        rep.notes.push_back("trajectory did not reach the horizon (" + to_string(trajectory.terminal_event) + ")");
        return rep;
    }
    if (p.m_even()) {
        rep.ell = estimate_ell(trajectory);
        rep.has_ell = true;
        rep.fitted_leading_coeff = fit_leading_coefficient(trajectory, 2.0 * m - 2.0);
        rep.predicted_coeff = predicted_leading_coefficient(m, p.n, rep.ell.ell);
        if (rep.ell.ell < -rep.ell.uncertainty &&
            std::abs(rep.fitted_leading_coeff - rep.predicted_coeff) <= 0.02 * std::abs(rep.predicted_coeff)) {
            rep.regime = Regime::PowerGrowthDown;
            rep.regime_order = 2 * m - 2;
        } else if (std::abs(rep.ell.ell) <= std::max(rep.ell.uncertainty, 1e-8) && rep.log_slope > 0.0) {
            rep.regime = Regime::LogDecay;
            rep.regime_order = 2 * m;
            rep.notes.push_back("tail consistent with logarithmic decay; the exact rate is not determined");
        }
    } else {
        // m odd: read K from the log-log slope of -u
        const auto win = tail(trajectory);
        if (win.front().w[0] < 0.0 && win.back().w[0] < 0.0) {
            const double k = std::log(win.back().w[0] / win.front().w[0]) / std::log(win.back().r / win.front().r);
            const int K = std::max(1, static_cast<int>(std::floor(k + 1e-9)));
            const auto pb = power_bound_check(trajectory, K);
            rep.fitted_leading_coeff = -pb.C;
            if (pb.holds) {
                rep.regime = Regime::PowerBound;
                rep.regime_order = K;
            }
        }
    }
    return rep;
}

}  // namespace gelfand
