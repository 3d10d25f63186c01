#pragma once

// Grid runs over (m, n, random initial data) on a worker pool.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gelfand/radial_ode.hpp"
#include "gelfand/shooting.hpp"

namespace gelfand {

struct SweepSpec {
    std::vector<int> m_values;
    std::vector<int> n_values;
    int samples = 4;           // random initial data per (m, n)
    double alpha_range = 2.0;  // alpha_k uniform in [-range, range]
    bool shoot = false;        // also run phi_alpha on alpha_0 (m even, n >= 3)
    double tol = 1e-6;
    std::uint64_t seed = 1;
    IntegratorConfig config;
};

struct SweepRecord {
    int m = 0;
    int n = 0;
    int index = 0;
    std::vector<double> alpha;
    OutcomeTag outcome = OutcomeTag::Inconclusive;
    TerminalEvent terminal_event = TerminalEvent::Failure;
    double r_event = 0.0;
    std::optional<double> phi;
    std::string error;  // non-empty when the point failed
};

/// Initial data of one grid point; depends only on (seed, m, n, index).
std::vector<double> sweep_initial_values(const SweepSpec& spec, int m, int n, int index);

/// Worker count from GELFAND_WORKERS, else the hardware concurrency (at least 1).
unsigned default_workers();

/// Records sorted by (m, n, index); identical for every worker count.
std::vector<SweepRecord> run_sweep(const SweepSpec& spec, unsigned workers);

}  // namespace gelfand
