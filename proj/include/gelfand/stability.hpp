#pragma once

// Second-variation forms of (-Delta)^m u = e^u on radial test functions:
//   m even: int |Delta^{m/2} phi|^2 - int e^u phi^2
//   m odd:  int |grad Delta^{(m-1)/2} phi|^2 - int e^u phi^2

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gelfand/radial_ode.hpp"
#include "gelfand/test_functions.hpp"

namespace gelfand {

/// u(r) on [0, inf): data up to r_data, an optional extension beyond.
class RadialProfile {
public:
    RadialProfile(std::function<double(double)> u, double r_data, std::function<double(double)> tail = {},
                  std::string tail_description = {});

    /// Interpolated trajectory; extended past the last sample by its tail regime
    /// (fitted r^{2m-2} growth for m-even interior data, power or log slope otherwise).
    static RadialProfile from_trajectory(const Trajectory& t);
    static RadialProfile constant(double value);

    /// u(r); sets `extended` when r lies beyond the data.
    double operator()(double r, bool& extended) const;
    [[nodiscard]] double r_data() const noexcept { return r_data_; }
    [[nodiscard]] bool can_extend() const noexcept { return static_cast<bool>(tail_); }
    [[nodiscard]] const std::string& tail_description() const noexcept { return tail_description_; }

private:
    std::function<double(double)> u_;
    double r_data_;
    std::function<double(double)> tail_;
    std::string tail_description_;
};

struct FormValue {
    double value = 0.0;
    double derivative_term = 0.0;
    double potential_term = 0.0;
    bool extended = false;  // u was extrapolated somewhere on the support
};

/// Both terms carry the factor omega_{n-1}.
FormValue rayleigh_form(const RadialProfile& u, const RadialTestFunction& phi, const ProblemSpec& problem,
                        std::size_t panels = 64);

enum class Verdict { InstabilityWitnessFound, NoWitnessInFamily, CertifiedOutsideCompact, Inconclusive };
std::string to_string(Verdict v);

enum class Family { ScaledCutoff, DyadicSum };
std::string to_string(Family f);
Family family_from_string(const std::string& s);

struct StabilityReport {
    std::vector<std::pair<double, FormValue>> form_values;  // (R or k, form)
    std::optional<double> witness;
    Verdict verdict = Verdict::NoWitnessInFamily;
    double certificate_radius = 0.0;
    bool extended = false;
    std::vector<std::string> notes;
};

struct FamilyRange {
    double R_lo = 1.0;
    double R_hi = 1e3;
    int R_count = 20;
    int K = 12;
};

/// Evaluates the form along eta(x/R) (R log-spaced) or the dyadic averages
/// (k = 1..K); the first negative value is the witness.
StabilityReport instability_search(const RadialProfile& u, const ProblemSpec& problem, Family family,
                                   const FamilyRange& range = {});

/// V(r) = constant / (r^{2m} (log r)^{log_power}); log weights need r > 1.
struct SocsWeight {
    int table_case = 0;  // 1..5
    double constant = 0.0;
    int power = 0;
    int log_power = 0;
    double r_min = 0.0;
    std::string description;

    [[nodiscard]] double operator()(double r) const;
};

SocsWeight socs_weight(const ProblemSpec& problem);

/// Smallest sampled R with e^{w_0(r)} <= V(r) for every later sample; the
/// certificate needs at least a decade of samples beyond R.
StabilityReport socs_certificate(const Trajectory& trajectory);

}  // namespace gelfand
