#include "ndsolve/ilp.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <limits>
#include <ostream>
#include <sstream>

namespace ndsolve {

namespace {

constexpr std::int64_t magnitude_limit = std::numeric_limits<std::int32_t>::max();

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b)
{
    return -floor_div(-a, b);
}

/// Sparse `sum a_j x_j <= rhs` rows; equalities become two rows.
class Propagator {
public:
    explicit Propagator(const IlpProblem& problem) : rows_of_var_(static_cast<std::size_t>(problem.num_vars()))
    {
        for (const auto& c : problem.constraints) {
            add_row(c.coefficients, c.rhs, 1);
            if (c.relation == Relation::equal)
                add_row(c.coefficients, c.rhs, -1);
        }
    }

    /// Tightens in place; false on contradiction.
    bool run(Bounds& b) const
    {
        for (std::size_t j = 0; j < b.lower.size(); ++j)
            if (b.lower[j] > b.upper[j])
                return false;
        std::deque<std::size_t> queue(rows_.size());
        std::vector<char> queued(rows_.size(), 1);
        for (std::size_t r = 0; r < rows_.size(); ++r)
            queue[r] = r;
        while (!queue.empty()) {
            const auto r = queue.front();
            queue.pop_front();
            queued[r] = 0;
            const auto& row = rows_[r];
            std::int64_t min_activity = 0;
            for (const auto& [j, a] : row.terms)
                min_activity += a > 0 ? a * b.lower[j] : a * b.upper[j];
            if (min_activity > row.rhs)
                return false;
            for (const auto& [j, a] : row.terms) {
                const std::int64_t own = a > 0 ? a * b.lower[j] : a * b.upper[j];
                const std::int64_t slack = row.rhs - (min_activity - own);
                bool changed = false;
                if (a > 0) {
                    const auto hi = floor_div(slack, a);
                    if (hi < b.upper[j]) {
                        b.upper[j] = hi;
                        changed = true;
                    }
                } else {
                    const auto lo = ceil_div(slack, a);
                    if (lo > b.lower[j]) {
                        b.lower[j] = lo;
                        changed = true;
                    }
                }
                if (!changed)
                    continue;
                if (b.lower[j] > b.upper[j])
                    return false;
                // The activity of this row moved too; finish the pass with a fresh sum.
                min_activity = 0;
                for (const auto& [i, c] : row.terms)
                    min_activity += c > 0 ? c * b.lower[i] : c * b.upper[i];
                for (auto other : rows_of_var_[j])
                    if (!queued[other] && other != r) {
                        queued[other] = 1;
                        queue.push_back(other);
                    }
            }
        }
        return true;
    }

private:
    struct Row {
        std::vector<std::pair<std::size_t, std::int64_t>> terms;
        std::int64_t rhs;
    };

    void add_row(const std::vector<std::int64_t>& coefficients, std::int64_t rhs, std::int64_t sign)
    {
        Row row{{}, sign * rhs};
        for (std::size_t j = 0; j < coefficients.size(); ++j)
            if (coefficients[j] != 0) {
                row.terms.emplace_back(j, sign * coefficients[j]);
                rows_of_var_[j].push_back(rows_.size());
            }
        rows_.push_back(std::move(row));
    }

    std::vector<Row> rows_;
    std::vector<std::vector<std::size_t>> rows_of_var_;
};

class BranchAndBound {
public:
    explicit BranchAndBound(const IlpProblem& problem) : propagator_(problem) {}

    std::optional<IlpSolution> run(Bounds root)
    {
        if (search(std::move(root)))
            return IlpSolution{std::move(found_)};
        return std::nullopt;
    }

private:
    bool search(Bounds b)
    {
        if (!propagator_.run(b))
            return false;
        std::size_t pick = b.lower.size();
        for (std::size_t j = 0; j < b.lower.size(); ++j)
            if (b.lower[j] < b.upper[j] &&
                (pick == b.lower.size() || b.upper[j] - b.lower[j] < b.upper[pick] - b.lower[pick]))
                pick = j;
        if (pick == b.lower.size()) {
            found_ = std::move(b.lower);
            return true;
        }
        for (std::int64_t value = b.lower[pick]; value <= b.upper[pick]; ++value) {
            Bounds child = b;
            child.lower[pick] = child.upper[pick] = value;
            if (search(std::move(child)))
                return true;
        }
        return false;
    }

    Propagator propagator_;
    std::vector<std::int64_t> found_;
};

}  // namespace

int IlpProblem::add_variable(std::int64_t lo, std::int64_t hi)
{
    lower.push_back(lo);
    upper.push_back(hi);
    for (auto& c : constraints)
        c.coefficients.push_back(0);
    return num_vars() - 1;
}

void IlpProblem::add_constraint(std::vector<std::int64_t> coefficients, Relation relation, std::int64_t rhs)
{
    coefficients.resize(static_cast<std::size_t>(num_vars()), 0);
    constraints.push_back({std::move(coefficients), relation, rhs});
}

void check_problem(const IlpProblem& problem)
{
    const auto n = problem.lower.size();
    if (problem.upper.size() != n)
        throw std::invalid_argument("ilp: bound vectors differ in length");
    for (std::size_t j = 0; j < n; ++j) {
        if (problem.lower[j] < 0 || problem.lower[j] > problem.upper[j])
            throw std::invalid_argument("ilp: bounds must satisfy 0 <= lower <= upper");
        if (problem.upper[j] > magnitude_limit)
            throw IlpRangeError("ilp: bound exceeds 32-bit range");
    }
    for (const auto& c : problem.constraints) {
        if (c.coefficients.size() != n)
            throw std::invalid_argument("ilp: coefficient vector length differs from variable count");
        if (c.rhs > magnitude_limit || c.rhs < -magnitude_limit)
            throw IlpRangeError("ilp: right-hand side exceeds 32-bit range");
        __int128 activity = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const auto a = c.coefficients[j];
            if (a > magnitude_limit || a < -magnitude_limit)
                throw IlpRangeError("ilp: coefficient exceeds 32-bit range");
            activity += static_cast<__int128>(a < 0 ? -a : a) * problem.upper[j];
        }
        if (activity > std::numeric_limits<std::int64_t>::max() / 4)
            throw IlpRangeError("ilp: constraint activity may overflow 64 bits");
    }
}

bool satisfies(const IlpProblem& problem, const std::vector<std::int64_t>& values)
{
    if (values.size() != problem.lower.size())
        return false;
    for (std::size_t j = 0; j < values.size(); ++j)
        if (values[j] < problem.lower[j] || values[j] > problem.upper[j])
            return false;
    for (const auto& c : problem.constraints) {
        std::int64_t activity = 0;
        for (std::size_t j = 0; j < values.size(); ++j)
            activity += c.coefficients[j] * values[j];
        if (c.relation == Relation::equal ? activity != c.rhs : activity > c.rhs)
            return false;
    }
    return true;
}

std::optional<Bounds> propagate_bounds(const IlpProblem& problem)
{
    check_problem(problem);
    Bounds bounds{problem.lower, problem.upper};
    if (!Propagator(problem).run(bounds))
        return std::nullopt;
    return bounds;
}

std::optional<IlpSolution> solve_feasibility(const IlpProblem& problem)
{
    check_problem(problem);
    auto solution = BranchAndBound(problem).run(Bounds{problem.lower, problem.upper});
    if (solution && !satisfies(problem, solution->values))
        throw std::logic_error("ilp: branch and bound returned a violating assignment");
    return solution;
}

void write_ilp(std::ostream& out, const IlpProblem& problem)
{
    out << "vars " << problem.num_vars() << '\n';
    for (int j = 0; j < problem.num_vars(); ++j)
        out << "bound x" << j << ' ' << problem.lower[j] << ' ' << problem.upper[j] << '\n';
    for (const auto& c : problem.constraints) {
        out << "row";
        bool any = false;
        for (std::size_t j = 0; j < c.coefficients.size(); ++j)
            if (c.coefficients[j] != 0) {
                out << ' ' << (c.coefficients[j] > 0 ? "+" : "") << c.coefficients[j] << "*x" << j;
                any = true;
            }
        if (!any)
            out << " 0";
        out << (c.relation == Relation::equal ? " = " : " <= ") << c.rhs << '\n';
    }
}

std::string to_string(const IlpProblem& problem)
{
    std::ostringstream out;
    write_ilp(out, problem);
    return out.str();
}

}  // namespace ndsolve
