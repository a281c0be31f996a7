#include <berge/io.hh>

#include <charconv>
#include <limits>
#include <optional>
#include <fstream>
#include <sstream>
#include <vector>

using std::string;
using std::uint64_t;
using std::vector;

namespace berge {


namespace {
    auto split_lines(const string & text) -> vector<string>
    {
        vector<string> lines;
        std::size_t start = 0;
        while (start < text.size()) {
            auto end = text.find('\n', start);
            if (end == string::npos)
                end = text.size();
            lines.push_back(text.substr(start, end - start));
            start = end + 1;
        }
        while (! lines.empty() && lines.back().find_first_not_of(" \t\r") == string::npos)
            lines.pop_back();
        return lines;
    }

    auto numbers(const string & line, const char * what) -> vector<uint64_t>
    {
        vector<uint64_t> out;
        std::size_t at = 0;
        while (true) {
            at = line.find_first_not_of(" \t\r", at);
            if (at == string::npos)
                break;
            auto stop = line.find_first_of(" \t\r", at);
            if (stop == string::npos)
                stop = line.size();
            uint64_t value = 0;
            auto [ptr, ec] = std::from_chars(line.data() + at, line.data() + stop, value);
            if (ec != std::errc{} || ptr != line.data() + stop)
                throw ParseError(string(what) + ": bad token '" + line.substr(at, stop - at) + "'");
            out.push_back(value);
            at = stop;
        }
        return out;
    }

    template <typename T>
    auto join(const vector<T> & values) -> string
    {
        string out;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i)
                out += ' ';
            out += std::to_string(values[i]);
        }
        return out;
    }
}

auto format_coloring(const Coloring & coloring) -> string
{
    const auto & p = coloring.params();
    string out = std::to_string(p.n()) + " " + std::to_string(p.r()) + " " + std::to_string(p.k()) + "\n";
    auto raw = coloring.raw();
    out.reserve(out.size() + raw.size() * 4);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(raw[i]);
    }
    out += '\n';
    return out;
}

auto parse_coloring(const string & text) -> Coloring
{
    auto lines = split_lines(text);
    if (lines.size() != 2)
        throw ParseError("coloring: expected 2 lines, found " + std::to_string(lines.size()));
    auto header = numbers(lines[0], "coloring header");
    if (header.size() != 3)
        throw ParseError("coloring header: expected \"n r k\"");
    for (auto h : header)
        if (h > 100000)
            throw ParseError("coloring header: value out of range");

    std::optional<HyperParams> params;
    try {
        params.emplace(static_cast<unsigned>(header[0]), static_cast<unsigned>(header[1]), static_cast<unsigned>(header[2]));
    }
    catch (const std::exception & e) {
        throw ParseError(string("coloring header: ") + e.what());
    }

    auto values = numbers(lines[1], "coloring colors");
    if (values.size() != params->edge_count())
        throw ParseError("coloring: expected " + std::to_string(params->edge_count()) + " colors, found " + std::to_string(values.size()));
    vector<Color> colors(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 1 || values[i] > params->k())
            throw ParseError("coloring: color " + std::to_string(values[i]) + " at edge " + std::to_string(i) + " outside [1, k]");
        colors[i] = static_cast<Color>(values[i]);
    }
    return Coloring(*params, colors);
}

auto format_cycle(const BergeCycle & cycle) -> string
{
    string out = join(cycle.core) + "\n" + join(cycle.edges) + "\n";
    if (cycle.color)
        out += std::to_string(*cycle.color) + "\n";
    return out;
}

auto parse_cycle(const string & text) -> BergeCycle
{
    auto lines = split_lines(text);
    if (lines.size() < 2 || lines.size() > 3)
        throw ParseError("cycle: expected 2 or 3 lines");
    BergeCycle cycle;
    for (auto v : numbers(lines[0], "cycle core")) {
        if (v > std::numeric_limits<Vertex>::max())
            throw ParseError("cycle core: vertex out of range");
        cycle.core.push_back(static_cast<Vertex>(v));
    }
    cycle.edges = numbers(lines[1], "cycle edges");
    if (cycle.core.size() != cycle.edges.size())
        throw ParseError("cycle: core and edge lists differ in length");
    if (lines.size() == 3) {
        auto c = numbers(lines[2], "cycle color");
        if (c.size() > 1 || (c.size() == 1 && (c[0] < 1 || c[0] > max_colors)))
            throw ParseError("cycle color: expected one color id");
        if (c.size() == 1)
            cycle.color = static_cast<Color>(c[0]);
    }
    return cycle;
}

auto format_graph(const Graph & g) -> string
{
    std::ostringstream out;
    out << g.size() << ' ' << g.edge_count() << '\n';
    for (auto & [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

auto parse_graph(const string & text) -> Graph
{
    auto lines = split_lines(text);
    if (lines.empty())
        throw ParseError("graph: empty input");
    auto header = numbers(lines[0], "graph header");
    if (header.size() != 2)
        throw ParseError("graph header: expected \"n m\"");
    if (header[0] > 1u << 20)
        throw ParseError("graph header: too many vertices");
    if (lines.size() != header[1] + 1)
        throw ParseError("graph: expected " + std::to_string(header[1]) + " edge lines");
    Graph g(static_cast<unsigned>(header[0]));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto e = numbers(lines[i], "graph edge");
        if (e.size() != 2 || e[0] >= header[0] || e[1] >= header[0] || e[0] == e[1])
            throw ParseError("graph: bad edge on line " + std::to_string(i + 1));
        if (! g.add_edge(static_cast<Vertex>(e[0]), static_cast<Vertex>(e[1])))
            throw ParseError("graph: repeated edge on line " + std::to_string(i + 1));
    }
    return g;
}

auto read_file(const std::filesystem::path & path) -> string
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

auto write_file(const std::filesystem::path & path, const string & text) -> void
{
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw std::runtime_error("cannot write " + path.string());
    out << text;
}

}
