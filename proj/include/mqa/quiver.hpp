#ifndef MQA_QUIVER_HPP
#define MQA_QUIVER_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace mqa {

// Finite quiver with parallel edges and loops. Vertex order is the input
// order and is the tie-breaking order used everywhere downstream.
class Quiver {
public:
    struct Edge {
        std::string id;
        int src;
        int dst;
    };

    Quiver(std::vector<std::string> vertex_ids,
           std::vector<std::tuple<std::string, std::string, std::string>> edges);

    static std::shared_ptr<const Quiver> from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    int num_vertices() const { return static_cast<int>(vertex_ids_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
    const std::string& vertex_id(int v) const { return vertex_ids_.at(v); }
    const Edge& edge(int e) const { return edges_.at(e); }
    int vertex_index(const std::string& id) const;  // throws ValidationError
    int edge_index(const std::string& id) const;
    std::optional<int> find_vertex(const std::string& id) const;
    std::optional<int> find_edge(const std::string& id) const;
    const std::vector<int>& out_edges(int v) const { return out_edges_.at(v); }
    bool is_sink(int v) const { return out_edges_.at(v).empty(); }
    bool is_acyclic() const;

    bool operator==(const Quiver& o) const;

private:
    std::vector<std::string> vertex_ids_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> out_edges_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

// A path: either trivial at a vertex or a composable edge sequence.
class Path {
public:
    static Path trivial(QuiverPtr q, int vertex);
    static Path of_edges(QuiverPtr q, std::vector<int> edges);  // throws on non-composable

    const QuiverPtr& quiver() const { return quiver_; }
    bool is_trivial() const { return edges_.empty(); }
    unsigned length() const { return static_cast<unsigned>(edges_.size()); }
    int src() const;
    int dst() const;
    const std::vector<int>& edges() const { return edges_; }
    int base_vertex() const { return base_vertex_; }  // trivial paths only

    // Concatenation; nullopt when dst != o.src.
    std::optional<Path> concat(const Path& o) const;
    std::optional<Path> prefix_quotient(const Path& prefix) const;  // *this = prefix . rest

    // Value identity: same shape by ids (usable across quiver objects).
    bool same_as(const Path& o) const;
    bool operator==(const Path& o) const { return same_as(o); }
    std::string str() const;

private:
    QuiverPtr quiver_;
    int base_vertex_ = -1;
    std::vector<int> edges_;
};

// (length, edge-id sequence lexicographic); trivial paths by vertex order.
struct PathLess {
    bool operator()(const Path& a, const Path& b) const;
};

class VertexSet {
public:
    VertexSet(QuiverPtr q, std::vector<bool> mask);
    static VertexSet of_ids(QuiverPtr q, const std::vector<std::string>& ids);
    static VertexSet empty(QuiverPtr q);
    static VertexSet full(QuiverPtr q);

    const QuiverPtr& quiver() const { return quiver_; }
    const std::vector<bool>& mask() const { return mask_; }
    bool contains(int v) const { return mask_.at(v); }
    unsigned size() const;
    bool is_empty() const { return size() == 0; }
    bool is_full() const { return size() == mask_.size(); }
    bool subset_of(const VertexSet& o) const;
    VertexSet set_union(const VertexSet& o) const;
    VertexSet set_intersection(const VertexSet& o) const;
    VertexSet set_difference(const VertexSet& o) const;
    std::vector<std::string> ids() const;
    std::vector<int> indices() const;

    bool operator==(const VertexSet& o) const { return mask_ == o.mask_; }

private:
    QuiverPtr quiver_;
    std::vector<bool> mask_;
};

bool is_hereditary(const VertexSet& h);
bool is_saturated(const VertexSet& h);
VertexSet hereditary_saturated_closure(const VertexSet& s);

// All hereditary saturated subsets, sorted by (size, mask), with meet/join
// tables (meet = intersection, join = closure of union).
struct HsLattice {
    std::vector<VertexSet> sets;
    std::vector<std::vector<int>> meet;
    std::vector<std::vector<int>> join;
    int index_of(const VertexSet& h) const;  // -1 when absent
};
HsLattice enumerate_lattice(const QuiverPtr& q);

QuiverPtr quotient_graph(const VertexSet& h);     // requires hereditary saturated
QuiverPtr restriction_graph(const VertexSet& h);  // requires hereditary
std::vector<int> crossing_edges(const VertexSet& h);  // edges from outside H into H

class HereditaryChain {
public:
    HereditaryChain(QuiverPtr q, std::vector<VertexSet> sets);  // validates

    const QuiverPtr& quiver() const { return quiver_; }
    unsigned r() const { return static_cast<unsigned>(sets_.size()) - 1; }
    const VertexSet& set(unsigned i) const { return sets_.at(i); }
    const std::vector<VertexSet>& sets() const { return sets_; }
    // min { i : v in H_i }
    unsigned entry_index(int v) const { return entry_index_.at(v); }
    // lev(v) = r - entry_index(v)
    unsigned level(int v) const { return r() - entry_index_.at(v); }

    bool operator==(const HereditaryChain& o) const;

private:
    QuiverPtr quiver_;
    std::vector<VertexSet> sets_;
    std::vector<unsigned> entry_index_;
};

// All paths of length <= maxlen in canonical order.
std::vector<Path> all_paths(const QuiverPtr& q, unsigned maxlen);

}  // namespace mqa

#endif  // MQA_QUIVER_HPP
