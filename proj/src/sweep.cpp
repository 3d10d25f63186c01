#include "gelfand/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <random>
#include <thread>
#include <tuple>

namespace gelfand {

std::vector<double> sweep_initial_values(const SweepSpec& spec, int m, int n, int index) {
    std::seed_seq seq{static_cast<std::uint32_t>(spec.seed), static_cast<std::uint32_t>(spec.seed >> 32),
                      static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(n),
                      static_cast<std::uint32_t>(index)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> U(-spec.alpha_range, spec.alpha_range);
    std::vector<double> alpha(static_cast<std::size_t>(m));
    for (auto& a : alpha) a = U(rng);
    return alpha;
}

unsigned default_workers() {
    if (const char* env = std::getenv("GELFAND_WORKERS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

SweepRecord run_point(const SweepSpec& spec, int m, int n, int index) {
    SweepRecord rec;
    rec.m = m;
    rec.n = n;
    rec.index = index;
    rec.alpha = sweep_initial_values(spec, m, n, index);
    try {
        const auto problem = ProblemSpec::make(m, n);
        const auto out = classify_ic(problem, InitialConditions{rec.alpha}, spec.config);
        rec.outcome = out.tag;
        rec.terminal_event = out.source;
        rec.r_event = out.r_event;
        if (spec.shoot && problem.flux_event_armed()) {
            const std::vector<double> beta_prime(rec.alpha.begin() + 1, rec.alpha.end() - 1);
            rec.phi = phi_alpha(problem, rec.alpha[0], beta_prime, spec.tol, spec.config).phi_estimate;
        }
    } catch (const std::exception& e) {
        rec.error = e.what();
    }
    return rec;
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SweepSpec& spec, unsigned workers) {
    if (spec.m_values.empty() || spec.n_values.empty()) throw DomainError("sweep: empty m or n list");
    if (spec.samples < 1) throw DomainError("sweep: samples must be >= 1");
    if (!(spec.alpha_range >= 0.0)) throw DomainError("sweep: alpha range must be >= 0");
    spec.config.validate();
    for (int m : spec.m_values)
        if (m < 1) throw DomainError("sweep: m must be >= 1");
    for (int n : spec.n_values)
        if (n < 1) throw DomainError("sweep: n must be >= 1");

    std::vector<std::tuple<int, int, int>> tasks;
    for (int m : spec.m_values)
        for (int n : spec.n_values)
            for (int i = 0; i < spec.samples; ++i) tasks.emplace_back(m, n, i);

    std::vector<SweepRecord> out(tasks.size());
    std::atomic<std::size_t> next{0};
    const auto work = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            const auto [m, n, idx] = tasks[i];
            out[i] = run_point(spec, m, n, idx);
        }
    };
    std::vector<std::thread> pool;
    const unsigned w = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(tasks.size())));
    for (unsigned i = 1; i < w; ++i) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    std::sort(out.begin(), out.end(), [](const SweepRecord& a, const SweepRecord& b) {
        return std::tie(a.m, a.n, a.index) < std::tie(b.m, b.n, b.index);
    });
    return out;
}

}  // namespace gelfand
