#pragma once

// Text formats.
//
// Coloring:  "n r k\n" then the C(n, r) colors in colex edge order separated
//            by single spaces, then "\n".
// Cycle:     core vertices on line 1, edge indices on line 2, and an optional
//            color on line 3.
// Graph:     "n m\n" then one "u v" line per edge.

#include <berge/graph.hh>
#include <berge/hypercore.hh>

#include <filesystem>
#include <stdexcept>
#include <string>

namespace berge {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

auto format_coloring(const Coloring & coloring) -> std::string;
/// Throws ParseError on malformed headers, wrong color counts, colors outside
/// [1, k], or trailing content.
auto parse_coloring(const std::string & text) -> Coloring;

auto format_cycle(const BergeCycle & cycle) -> std::string;
/// Throws ParseError when the two lists differ in length or a token is not a
/// nonnegative integer.
auto parse_cycle(const std::string & text) -> BergeCycle;

auto format_graph(const Graph & g) -> std::string;
auto parse_graph(const std::string & text) -> Graph;

auto read_file(const std::filesystem::path & path) -> std::string;
auto write_file(const std::filesystem::path & path, const std::string & text) -> void;

}
