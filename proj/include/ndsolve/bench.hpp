#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ndsolve {

/// One benchmark cell: `seeds` generated instances of one problem at fixed
/// (k, n). `problem` is one of nd, motif, paths, precolor.
struct BenchCell {
    std::string problem;
    int k = 4;
    int n = 1000;
    int seeds = 1;
    std::uint64_t first_seed = 1;
    int pairs = 20;        // paths
    int colors = 4;        // motif palette / precolor budget
    int motif_size = 5;
};

struct BenchRow {
    BenchCell cell;
    double median_ms = 0.0;
    double max_ms = 0.0;
    int max_nd = 0;
    std::optional<int> max_ilp_vars;
    int yes = 0;
};

/// Runs each cell's seeds, up to `threads` solves at a time. Instances are
/// generated outside the timed region.
std::vector<BenchRow> run_bench(const std::vector<BenchCell>& cells, unsigned threads = 1);

/// Thread cap from ND_SOLVE_THREADS, defaulting to hardware concurrency.
unsigned bench_threads_from_env();

void write_bench_table(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace ndsolve
