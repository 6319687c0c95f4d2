#include "ndsolve/instance_io.hpp"

#include <charconv>
#include <sstream>
#include <unordered_set>

namespace ndsolve {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line)
{
}

namespace {

enum class Family { none, motif, paths, precolor };

const char* family_name(Family f)
{
    switch (f) {
    case Family::motif: return "motif";
    case Family::paths: return "paths";
    case Family::precolor: return "precolor";
    case Family::none: break;
    }
    return "graph";
}

std::vector<std::string_view> tokenize(std::string_view line)
{
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

class Parser {
public:
    Instance run(std::string_view text)
    {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto end = text.find('\n', pos);
            if (end == std::string_view::npos)
                end = text.size();
            ++line_;
            auto line = text.substr(pos, end - pos);
            if (auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            handle(tokenize(line));
            pos = end + 1;
        }
        if (n_ < 0)
            throw ParseError(0, "missing 'p graph <n>' header");
        return finish();
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, message); }

    long long number(std::string_view token) const
    {
        long long value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            fail("expected an integer, got '" + std::string(token) + "'");
        return value;
    }

    Vertex vertex(std::string_view token) const
    {
        const auto v = number(token);
        if (v < 1 || v > n_)
            fail("vertex id " + std::string(token) + " out of range 1.." + std::to_string(n_));
        return static_cast<Vertex>(v - 1);
    }

    Color color(std::string_view token) const
    {
        const auto c = number(token);
        if (c < 1 || c > (1LL << 30))
            fail("color must be a positive integer");
        return static_cast<Color>(c);
    }

    void enter(Family f)
    {
        if (family_ != Family::none && family_ != f)
            fail(std::string("annotation of kind '") + family_name(f) + "' mixed with '" +
                 family_name(family_) + "'");
        family_ = f;
    }

    void expect_args(const std::vector<std::string_view>& tokens, std::size_t count) const
    {
        if (tokens.size() != count + 1)
            fail("'" + std::string(tokens[0]) + "' expects " + std::to_string(count) + " argument(s)");
    }

    void handle(const std::vector<std::string_view>& tokens)
    {
        if (tokens.empty())
            return;
        const auto keyword = tokens[0];
        if (n_ < 0) {
            if (keyword != "p" || tokens.size() != 3 || tokens[1] != "graph")
                fail("expected header 'p graph <n>'");
            const auto n = number(tokens[2]);
            if (n < 0 || n > (1LL << 30))
                fail("vertex count out of range");
            n_ = static_cast<Vertex>(n);
            vertex_color_.assign(static_cast<std::size_t>(n_), 0);
            precolor_.assign(static_cast<std::size_t>(n_), std::nullopt);
            precolor_line_.assign(static_cast<std::size_t>(n_), 0);
            terminal_.assign(static_cast<std::size_t>(n_), 0);
            return;
        }
        if (keyword == "p") {
            fail("duplicate header");
        } else if (keyword == "e") {
            expect_args(tokens, 2);
            auto u = vertex(tokens[1]);
            auto v = vertex(tokens[2]);
            if (u == v)
                fail("self-loop on vertex " + std::string(tokens[1]));
            const auto key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) |
                             static_cast<std::uint32_t>(std::max(u, v));
            if (!edge_keys_.insert(key).second)
                fail("duplicate edge " + std::string(tokens[1]) + " " + std::string(tokens[2]));
            edges_.emplace_back(u, v);
        } else if (keyword == "vcolor") {
            enter(Family::motif);
            expect_args(tokens, 2);
            auto v = vertex(tokens[1]);
            if (vertex_color_[v] != 0)
                fail("vertex " + std::string(tokens[1]) + " colored twice");
            vertex_color_[v] = color(tokens[2]);
        } else if (keyword == "motif") {
            enter(Family::motif);
            expect_args(tokens, 2);
            auto c = color(tokens[1]);
            auto count = number(tokens[2]);
            if (count < 1 || count > (1LL << 30))
                fail("motif multiplicity must be positive");
            if (!motif_.emplace(c, static_cast<int>(count)).second)
                fail("motif color " + std::string(tokens[1]) + " listed twice");
        } else if (keyword == "pair") {
            enter(Family::paths);
            expect_args(tokens, 2);
            auto s = vertex(tokens[1]);
            auto t = vertex(tokens[2]);
            if (s == t)
                fail("pair endpoints must differ");
            if (terminal_[s] || terminal_[t])
                fail("terminal vertex already used by another pair");
            terminal_[s] = terminal_[t] = 1;
            pairs_.emplace_back(s, t);
        } else if (keyword == "precolor") {
            enter(Family::precolor);
            expect_args(tokens, 2);
            auto v = vertex(tokens[1]);
            if (precolor_[v])
                fail("vertex " + std::string(tokens[1]) + " precolored twice");
            precolor_[v] = color(tokens[2]);
            precolor_line_[v] = line_;
        } else if (keyword == "colors") {
            enter(Family::precolor);
            expect_args(tokens, 1);
            if (num_colors_ > 0)
                fail("duplicate 'colors' line");
            const auto r = number(tokens[1]);
            if (r < 1 || r > (1LL << 30))
                fail("color budget must be positive");
            num_colors_ = static_cast<Color>(r);
        } else {
            fail("unknown keyword '" + std::string(keyword) + "'");
        }
    }

    Instance finish()
    {
        Graph graph;
        try {
            graph = Graph::from_edges(n_, edges_);
        } catch (const InvalidInstance& e) {
            throw ParseError(0, e.what());
        }
        switch (family_) {
        case Family::none:
            return graph;
        case Family::motif: {
            for (Vertex v = 0; v < n_; ++v)
                if (vertex_color_[v] == 0)
                    throw ParseError(0, "vertex " + std::to_string(v + 1) + " has no color");
            if (motif_.empty())
                throw ParseError(0, "motif is empty");
            return MotifInstance{std::move(graph), std::move(vertex_color_), std::move(motif_)};
        }
        case Family::paths:
            return PathsInstance{std::move(graph), std::move(pairs_)};
        case Family::precolor: {
            if (num_colors_ < 1)
                throw ParseError(0, "missing 'colors <r>' line");
            for (Vertex v = 0; v < n_; ++v) {
                if (!precolor_[v])
                    continue;
                if (*precolor_[v] > num_colors_)
                    throw ParseError(precolor_line_[v], "precolor outside 1.." + std::to_string(num_colors_));
                for (Vertex u : graph.neighbors(v))
                    if (precolor_[u] == precolor_[v])
                        throw ParseError(std::max(precolor_line_[u], precolor_line_[v]),
                                         "improper precoloring: adjacent vertices " + std::to_string(u + 1) +
                                             " and " + std::to_string(v + 1) + " share a color");
            }
            return PrecolorInstance{std::move(graph), std::move(precolor_), num_colors_};
        }
        }
        return graph;
    }

    int line_ = 0;
    Vertex n_ = -1;
    Family family_ = Family::none;
    std::vector<Edge> edges_;
    std::unordered_set<std::uint64_t> edge_keys_;
    std::vector<Color> vertex_color_;
    std::map<Color, int> motif_;
    std::vector<Edge> pairs_;
    std::vector<char> terminal_;
    std::vector<std::optional<Color>> precolor_;
    std::vector<int> precolor_line_;
    Color num_colors_ = 0;
};

void write_graph(std::ostringstream& out, const Graph& g)
{
    out << "p graph " << g.num_vertices() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

}  // namespace

Instance parse_instance(std::string_view text)
{
    return Parser{}.run(text);
}

std::string serialize_instance(const Graph& graph)
{
    std::ostringstream out;
    write_graph(out, graph);
    return out.str();
}

std::string serialize_instance(const MotifInstance& instance)
{
    std::ostringstream out;
    write_graph(out, instance.graph);
    for (std::size_t v = 0; v < instance.vertex_color.size(); ++v)
        out << "vcolor " << v + 1 << ' ' << instance.vertex_color[v] << '\n';
    for (const auto& [color, count] : instance.motif)
        out << "motif " << color << ' ' << count << '\n';
    return out.str();
}

std::string serialize_instance(const PathsInstance& instance)
{
    std::ostringstream out;
    write_graph(out, instance.graph);
    for (auto [s, t] : instance.pairs)
        out << "pair " << s + 1 << ' ' << t + 1 << '\n';
    return out.str();
}

std::string serialize_instance(const PrecolorInstance& instance)
{
    std::ostringstream out;
    write_graph(out, instance.graph);
    out << "colors " << instance.num_colors << '\n';
    for (std::size_t v = 0; v < instance.precolor.size(); ++v)
        if (instance.precolor[v])
            out << "precolor " << v + 1 << ' ' << *instance.precolor[v] << '\n';
    return out.str();
}

std::string serialize_instance(const Instance& instance)
{
    return std::visit([](const auto& x) { return serialize_instance(x); }, instance);
}

}  // namespace ndsolve
