#ifndef SGF_IO_HPP
#define SGF_IO_HPP

#include <stdexcept>
#include <string>

#include "sgf/flow.hpp"
#include "sgf/signed_graph.hpp"

namespace sgf::io {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// Graph files: header "sgf 1", then "v <n>", then "e <id> <u> <w> <+|->"
// per edge.  "#" starts a comment; blank lines are skipped.  Canonical
// serialization lists edges by ascending id; parse of a canonical file
// followed by serialize is byte-identical.
SignedGraph parse_graph(const std::string& text);
std::string serialize_graph(const SignedGraph& g);

// Flow files: header "flw 1", then "o <edge-id> <+|-> <+|->" (tau at the
// first and second endpoint) and "f <edge-id> <int>" lines.  Every edge of
// the companion graph needs both an o and an f line; tau pairs must satisfy
// tau1*tau2 = -sign.
FlowAssignment parse_flow(const std::string& text, const SignedGraph& g);
std::string serialize_flow(const SignedGraph& g, const FlowAssignment& fa);

// Orientation files are flow files without (ignored) f lines.
Orientation parse_orientation(const std::string& text, const SignedGraph& g);
std::string serialize_orientation(const SignedGraph& g, const Orientation& tau);

}  // namespace sgf::io

#endif
