#pragma once

#include "ndsolve/graph.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace ndsolve {

using Instance = std::variant<Graph, MotifInstance, PathsInstance, PrecolorInstance>;

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message);
    /// 1-based line of the offending input; 0 when the error concerns the file as a whole.
    [[nodiscard]] int line() const noexcept { return line_; }

private:
    int line_;
};

/// Parses the line-oriented instance format:
///
///     p graph <n>        header, first non-comment line
///     e <u> <v>          edge (1-based ids)
///     vcolor <v> <c>     motif vertex color
///     motif <c> <count>  motif multiset entry
///     pair <s> <t>       terminal pair
///     precolor <v> <c>   precolored vertex
///     colors <r>         color budget
///
/// `#` starts a comment. At most one annotation family may appear.
Instance parse_instance(std::string_view text);

std::string serialize_instance(const Instance& instance);
std::string serialize_instance(const Graph& graph);
std::string serialize_instance(const MotifInstance& instance);
std::string serialize_instance(const PathsInstance& instance);
std::string serialize_instance(const PrecolorInstance& instance);

}  // namespace ndsolve
