#ifndef SGF_SIGNED_GRAPH_HPP
#define SGF_SIGNED_GRAPH_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

namespace sgf {

// A half-edge is one end of an edge: end 0 sits at the edge's first
// endpoint, end 1 at the second.  A loop has both ends at one vertex.
struct HalfEdge {
    int edge = 0;
    int end = 0;

    auto operator<=>(const HalfEdge&) const = default;
};

struct EdgeData {
    int u = 0;
    int w = 0;
    int sign = 1;  // +1 or -1

    bool is_loop() const { return u == w; }
    int endpoint(int end) const { return end == 0 ? u : w; }
    // The endpoint opposite to the given end.
    int other(int end) const { return end == 0 ? w : u; }
    bool operator==(const EdgeData&) const = default;
};

// Rewrite records.  Each stores enough to invert the rewrite.
struct SwitchRec {
    int vertex = 0;
};
struct SplitOffRec {
    int vertex = 0;
    std::vector<HalfEdge> moved;
    int new_vertex = 0;
};
struct SuppressRec {
    int vertex = 0;   // the suppressed degree-2 vertex
    int edge1 = 0;    // half at vertex belongs to edge1 ...
    int edge2 = 0;    // ... and edge2; merged runs other(e1) -> other(e2)
    EdgeData data1;
    EdgeData data2;
    int merged = 0;
    EdgeData merged_data;
};
struct ContractRec {
    int edge = 0;
    EdgeData data;
    int kept = 0;
    int removed = 0;
    std::vector<HalfEdge> moved;  // half-edges re-anchored from removed to kept
};
struct AddEdgeRec {
    int edge = 0;
    EdgeData data;
};
struct StripLoopRec {
    int edge = 0;
    EdgeData data;
};

using TraceRecord = std::variant<SwitchRec, SplitOffRec, SuppressRec,
                                 ContractRec, AddEdgeRec, StripLoopRec>;
using RewriteTrace = std::vector<TraceRecord>;

struct BlockDecomposition {
    std::vector<int> bridges;             // ascending edge ids
    std::vector<std::vector<int>> blocks; // each ascending, sorted by first id
    std::vector<int> cut_vertices;        // ascending vertex ids
};

// Signed multigraph with loops.  Values are immutable once built: every
// rewrite returns a new graph plus a trace record.  Edge ids are stable
// and never reused; rewrites allocate fresh ids.
class SignedGraph {
  public:
    SignedGraph() = default;

    // Vertices 0..vertex_count-1, edges numbered 1..m in list order.
    static SignedGraph build(int vertex_count,
                             const std::vector<std::tuple<int, int, int>>& edges);

    // Assembles a graph from explicit vertex ids and edge records.
    static SignedGraph from_parts(const std::set<int>& vertices,
                                  const std::map<int, EdgeData>& edges);

    // Subgraph induced by a vertex set; edge ids are preserved.
    SignedGraph induced(const std::set<int>& verts) const;

    const std::set<int>& vertices() const { return vertices_; }
    const std::map<int, EdgeData>& edges() const { return edges_; }
    bool has_vertex(int v) const { return vertices_.count(v) != 0; }
    bool has_edge(int e) const { return edges_.count(e) != 0; }
    const EdgeData& edge(int e) const;
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int negative_edge_count() const;

    // Count of half-edges at v; a loop contributes 2.
    int degree(int v) const;
    // Half-edges at v, edges ascending, loop ends in order.
    std::vector<HalfEdge> half_edges_at(int v) const;
    // Incident edge ids, ascending, each loop listed once.
    std::vector<int> incident_edges(int v) const;

    int max_vertex_id() const;
    int max_edge_id() const;

    bool connected() const;
    int component_count() const;
    // Vertex sets of connected components, each ascending, sorted by smallest vertex.
    std::vector<std::vector<int>> components() const;

    // Negates the sign of every non-loop edge at v.
    std::pair<SignedGraph, TraceRecord> switched(int v) const;

    // Minimum number of negative edges over the switching class.
    // Exhaustive over vertex subsets; |V| must be <= limit.
    int negativeness(int limit = 20) const;

    BlockDecomposition bridges_and_blocks() const;

    // Size of a minimum odd edge cut of the underlying graph (cuts taken
    // over vertex bipartitions; loops belong to no cut), nullopt if every
    // cut is even.  |V| must be <= limit.
    std::optional<int> odd_edge_connectivity(int limit = 16) const;

    // Re-anchors the given half-edges from v to a fresh vertex v*.
    // Both halves of a loop may be selected only together.
    std::pair<SignedGraph, TraceRecord> split_off(int v,
                                                  const std::vector<HalfEdge>& f) const;

    // Removes a degree-2 vertex whose halves lie on distinct edges; the two
    // edges are replaced by a fresh edge with the product sign.
    std::pair<SignedGraph, TraceRecord> suppressed(int w) const;

    // Identifies the endpoints of a positive non-loop edge and removes it.
    // The smaller endpoint id survives.
    std::pair<SignedGraph, TraceRecord> contracted(int e) const;

    std::pair<SignedGraph, TraceRecord> with_edge(int u, int w, int sign) const;
    std::pair<SignedGraph, TraceRecord> without_loop(int e) const;

    // Deletes an edge without recording a trace (plain subgraph operation).
    SignedGraph without_edge(int e) const;
    SignedGraph without_vertex(int v) const;  // v must be isolated
    SignedGraph with_vertex(int v) const;

    // Inverse of the rewrite that produced the record.
    SignedGraph undo(const TraceRecord& rec) const;

    bool operator==(const SignedGraph&) const = default;

  private:
    std::set<int> vertices_;
    std::map<int, EdgeData> edges_;

    void check_vertex(int v) const;
};

}  // namespace sgf

#endif
