#include "ndsolve/bench.hpp"

#include "ndsolve/generators.hpp"
#include "ndsolve/motif.hpp"
#include "ndsolve/nd.hpp"
#include "ndsolve/paths.hpp"
#include "ndsolve/precolor.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <mutex>
#include <thread>

namespace ndsolve {

namespace {

struct Sample {
    double ms = 0.0;
    int nd = 0;
    std::optional<int> ilp_vars;
    bool yes = false;
};

/// Sparse template for decomposition timing: large independent types hang
/// off small ones, so m stays linear in n.
TypeTemplate sparse_template(int k, int n, std::mt19937_64& rng)
{
    if (k < 2 || n < 2 * k)
        throw std::invalid_argument("nd bench needs k >= 2 and n >= 2k");
    const int hubs = k / 2;
    const int leaves = k - hubs;
    TypeTemplate blueprint;
    int remaining = n;
    for (int t = 0; t < hubs; ++t) {
        blueprint.sizes.push_back(static_cast<int>(uniform_int(rng, 1, 3)));
        blueprint.clique_flags.push_back(t % 2 == 0);
        remaining -= blueprint.sizes.back();
    }
    for (int t = 0; t < leaves; ++t) {
        const int size = t + 1 == leaves ? remaining : remaining / (leaves - t);
        blueprint.sizes.push_back(size);
        blueprint.clique_flags.push_back(false);
        remaining -= size;
    }
    for (int hub = 0; hub < hubs; ++hub) {
        if (hub + 1 < hubs)
            blueprint.h_edges.emplace_back(hub, hub + 1);
        for (int leaf = 0; leaf < leaves; ++leaf)
            if ((leaf + hub) % 2 == 0 || leaf == hub)
                blueprint.h_edges.emplace_back(hub, hubs + leaf);
    }
    return blueprint;
}

Sample run_one(const BenchCell& cell, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    Sample sample;
    auto time = [&](auto&& solve) {
        const auto start = std::chrono::steady_clock::now();
        solve();
        sample.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    };
    AnnotationParams params;
    params.colors = cell.colors;
    params.num_colors = cell.colors;
    params.motif_size = cell.motif_size;
    params.pairs = cell.pairs;
    if (cell.problem == "nd") {
        const auto g = generate_from_template(sparse_template(cell.k, cell.n, rng), seed);
        time([&] {
            auto partition = compute_type_partition(g);
            sample.nd = partition.k();
        });
        return sample;
    }
    const auto blueprint = random_template_with_total(cell.k, cell.n, rng, 0.5, 0.5);
    if (cell.problem == "motif") {
        const auto instance = random_motif_instance(blueprint, params, seed);
        time([&] {
            auto report = solve_motif(instance);
            sample.nd = report.stats.nd;
            sample.yes = report.answer;
        });
    } else if (cell.problem == "paths") {
        const auto instance = random_paths_instance(blueprint, params, seed);
        time([&] {
            auto report = solve_paths(instance);
            sample.nd = report.stats.nd;
            sample.ilp_vars = report.stats.ilp_vars;
            sample.yes = report.answer;
        });
    } else if (cell.problem == "precolor") {
        const auto instance = random_precolor_instance(blueprint, params, seed);
        time([&] {
            auto report = solve_precolor(instance);
            sample.nd = report.stats.nd;
            sample.ilp_vars = report.stats.ilp_vars;
            sample.yes = report.answer;
        });
    } else {
        throw std::invalid_argument("unknown bench problem '" + cell.problem + "'");
    }
    return sample;
}

}  // namespace

std::vector<BenchRow> run_bench(const std::vector<BenchCell>& cells, unsigned threads)
{
    std::vector<std::pair<std::size_t, std::uint64_t>> jobs;
    for (std::size_t c = 0; c < cells.size(); ++c)
        for (int s = 0; s < cells[c].seeds; ++s)
            jobs.emplace_back(c, cells[c].first_seed + static_cast<std::uint64_t>(s));

    std::vector<Sample> samples(jobs.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    auto worker = [&] {
        for (std::size_t i; (i = next++) < jobs.size();) {
            try {
                samples[i] = run_one(cells[jobs[i].first], jobs[i].second);
            } catch (...) {
                std::lock_guard lock(failure_lock);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < std::max(1u, threads) && t < jobs.size(); ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& thread : pool)
        thread.join();
    if (failure)
        std::rethrow_exception(failure);

    std::vector<BenchRow> rows;
    std::size_t i = 0;
    for (const auto& cell : cells) {
        BenchRow row{cell, 0.0, 0.0, 0, std::nullopt, 0};
        std::vector<double> times;
        for (int s = 0; s < cell.seeds; ++s, ++i) {
            const auto& sample = samples[i];
            times.push_back(sample.ms);
            row.max_nd = std::max(row.max_nd, sample.nd);
            if (sample.ilp_vars)
                row.max_ilp_vars = std::max(row.max_ilp_vars.value_or(0), *sample.ilp_vars);
            row.yes += sample.yes ? 1 : 0;
        }
        if (!times.empty()) {
            std::sort(times.begin(), times.end());
            const auto mid = times.size() / 2;
            row.median_ms = times.size() % 2 ? times[mid] : (times[mid - 1] + times[mid]) / 2;
            row.max_ms = times.back();
        }
        rows.push_back(row);
    }
    return rows;
}

unsigned bench_threads_from_env()
{
    if (const char* value = std::getenv("ND_SOLVE_THREADS")) {
        try {
            const long parsed = std::stol(value);
            if (parsed >= 1)
                return static_cast<unsigned>(parsed);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void write_bench_table(std::ostream& out, const std::vector<BenchRow>& rows)
{
    out << "problem\tk\tn\tseeds\tmedian_ms\tmax_ms\tnd\tq\tyes\n";
    for (const auto& row : rows) {
        out << row.cell.problem << '\t' << row.cell.k << '\t' << row.cell.n << '\t' << row.cell.seeds << '\t'
            << std::fixed << std::setprecision(3) << row.median_ms << '\t' << row.max_ms << '\t' << row.max_nd
            << '\t';
        if (row.max_ilp_vars)
            out << *row.max_ilp_vars;
        else
            out << '-';
        out << '\t' << row.yes << '\n';
    }
}

}  // namespace ndsolve
