#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ndsolve {

enum class Relation { equal, less_equal };

struct LinearConstraint {
    std::vector<std::int64_t> coefficients;   // one per variable
    Relation relation = Relation::less_equal;
    std::int64_t rhs = 0;
};

/// Bounded nonnegative integer feasibility system.
struct IlpProblem {
    std::vector<std::int64_t> lower;
    std::vector<std::int64_t> upper;
    std::vector<LinearConstraint> constraints;

    [[nodiscard]] int num_vars() const noexcept { return static_cast<int>(lower.size()); }

    /// Appends a variable with bounds [lo, hi]; returns its index. Existing
    /// constraints are padded with a zero coefficient.
    int add_variable(std::int64_t lo, std::int64_t hi);
    void add_constraint(std::vector<std::int64_t> coefficients, Relation relation, std::int64_t rhs);
};

struct IlpSolution {
    std::vector<std::int64_t> values;
};

struct Bounds {
    std::vector<std::int64_t> lower;
    std::vector<std::int64_t> upper;
};

/// Raised when magnitudes leave the supported range (coefficients, bounds and
/// right-hand sides within 32 bits; activities must fit 64 bits).
class IlpRangeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Throws std::invalid_argument for malformed problems and IlpRangeError for
/// out-of-range magnitudes.
void check_problem(const IlpProblem& problem);

bool satisfies(const IlpProblem& problem, const std::vector<std::int64_t>& values);

/// Interval propagation to a fixpoint. nullopt signals a contradiction
/// (the system has no integer solution). Never removes a solution.
std::optional<Bounds> propagate_bounds(const IlpProblem& problem);

/// Depth-first branch and bound with propagation at every node. Branches on
/// the unfixed variable with the smallest domain (lowest index on ties),
/// values ascending. Deterministic.
std::optional<IlpSolution> solve_feasibility(const IlpProblem& problem);

/// One line per variable bound and per constraint.
void write_ilp(std::ostream& out, const IlpProblem& problem);
std::string to_string(const IlpProblem& problem);

}  // namespace ndsolve
