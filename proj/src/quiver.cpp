#include "mqa/quiver.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "mqa/errors.hpp"

namespace mqa {

namespace {

bool valid_id(const std::string& id) {
    if (id.empty()) return false;
    return std::all_of(id.begin(), id.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
               (c >= '0' && c <= '9') || c == '_';
    });
}

}  // namespace

Quiver::Quiver(std::vector<std::string> vertex_ids,
               std::vector<std::tuple<std::string, std::string, std::string>> edges)
    : vertex_ids_(std::move(vertex_ids)) {
    std::map<std::string, int> vidx;
    for (int i = 0; i < static_cast<int>(vertex_ids_.size()); ++i) {
        const std::string& id = vertex_ids_[i];
        if (!valid_id(id))
            throw ValidationError("vertex id \"" + id + "\" must match [A-Za-z0-9_]+");
        if (!vidx.emplace(id, i).second)
            throw ValidationError("duplicate vertex id \"" + id + "\"");
    }
    std::set<std::string> eids;
    out_edges_.resize(vertex_ids_.size());
    for (const auto& [id, src, dst] : edges) {
        if (!valid_id(id))
            throw ValidationError("edge id \"" + id + "\" must match [A-Za-z0-9_]+");
        if (!eids.insert(id).second)
            throw ValidationError("duplicate edge id \"" + id + "\"");
        auto si = vidx.find(src);
        auto di = vidx.find(dst);
        if (si == vidx.end())
            throw ValidationError("edge \"" + id + "\" has undeclared source \"" + src + "\"");
        if (di == vidx.end())
            throw ValidationError("edge \"" + id + "\" has undeclared range \"" + dst + "\"");
        int e = static_cast<int>(edges_.size());
        edges_.push_back(Edge{id, si->second, di->second});
        out_edges_[si->second].push_back(e);
    }
}

QuiverPtr Quiver::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw ParseError("quiver document needs \"vertices\" and \"edges\"");
    std::vector<std::string> vertices;
    for (const auto& v : j.at("vertices")) {
        if (!v.is_string()) throw ParseError("vertex ids must be strings");
        vertices.push_back(v.get<std::string>());
    }
    std::vector<std::tuple<std::string, std::string, std::string>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_object() || !e.contains("id") || !e.contains("src") || !e.contains("dst"))
            throw ParseError("each edge needs \"id\", \"src\", \"dst\"");
        edges.emplace_back(e.at("id").get<std::string>(), e.at("src").get<std::string>(),
                           e.at("dst").get<std::string>());
    }
    return std::make_shared<const Quiver>(std::move(vertices), std::move(edges));
}

nlohmann::json Quiver::to_json() const {
    nlohmann::json j;
    j["vertices"] = vertex_ids_;
    nlohmann::json es = nlohmann::json::array();
    for (const auto& e : edges_) {
        es.push_back({{"id", e.id}, {"src", vertex_ids_[e.src]}, {"dst", vertex_ids_[e.dst]}});
    }
    j["edges"] = es;
    return j;
}

int Quiver::vertex_index(const std::string& id) const {
    auto v = find_vertex(id);
    if (!v) throw ValidationError("unknown vertex \"" + id + "\"");
    return *v;
}

int Quiver::edge_index(const std::string& id) const {
    auto e = find_edge(id);
    if (!e) throw ValidationError("unknown edge \"" + id + "\"");
    return *e;
}

std::optional<int> Quiver::find_vertex(const std::string& id) const {
    for (int i = 0; i < num_vertices(); ++i)
        if (vertex_ids_[i] == id) return i;
    return std::nullopt;
}

std::optional<int> Quiver::find_edge(const std::string& id) const {
    for (int i = 0; i < num_edges(); ++i)
        if (edges_[i].id == id) return i;
    return std::nullopt;
}

bool Quiver::is_acyclic() const {
    // DFS with colors
    std::vector<int> color(num_vertices(), 0);
    std::vector<std::pair<int, size_t>> stack;
    for (int s = 0; s < num_vertices(); ++s) {
        if (color[s] != 0) continue;
        stack.push_back({s, 0});
        color[s] = 1;
        while (!stack.empty()) {
            auto& [v, i] = stack.back();
            if (i < out_edges_[v].size()) {
                int w = edges_[out_edges_[v][i]].dst;
                ++i;
                if (color[w] == 1) return false;
                if (color[w] == 0) {
                    color[w] = 1;
                    stack.push_back({w, 0});
                }
            } else {
                color[v] = 2;
                stack.pop_back();
            }
        }
    }
    return true;
}

bool Quiver::operator==(const Quiver& o) const {
    if (vertex_ids_ != o.vertex_ids_) return false;
    if (edges_.size() != o.edges_.size()) return false;
    for (size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].id != o.edges_[i].id || edges_[i].src != o.edges_[i].src ||
            edges_[i].dst != o.edges_[i].dst)
            return false;
    }
    return true;
}

Path Path::trivial(QuiverPtr q, int vertex) {
    if (vertex < 0 || vertex >= q->num_vertices())
        throw ValidationError("trivial path at unknown vertex");
    Path p;
    p.quiver_ = std::move(q);
    p.base_vertex_ = vertex;
    return p;
}

Path Path::of_edges(QuiverPtr q, std::vector<int> edges) {
    if (edges.empty()) throw ValidationError("edge path needs at least one edge");
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        if (q->edge(edges[i]).dst != q->edge(edges[i + 1]).src)
            throw ValidationError("path edges are not composable");
    }
    Path p;
    p.quiver_ = std::move(q);
    p.edges_ = std::move(edges);
    return p;
}

int Path::src() const {
    return is_trivial() ? base_vertex_ : quiver_->edge(edges_.front()).src;
}

int Path::dst() const {
    return is_trivial() ? base_vertex_ : quiver_->edge(edges_.back()).dst;
}

std::optional<Path> Path::concat(const Path& o) const {
    if (dst() != o.src()) return std::nullopt;
    if (is_trivial()) return o;
    if (o.is_trivial()) return *this;
    std::vector<int> es = edges_;
    es.insert(es.end(), o.edges_.begin(), o.edges_.end());
    return Path::of_edges(quiver_, std::move(es));
}

std::optional<Path> Path::prefix_quotient(const Path& prefix) const {
    if (prefix.is_trivial()) {
        if (prefix.base_vertex_ != src()) return std::nullopt;
        return *this;
    }
    if (prefix.length() > length()) return std::nullopt;
    for (size_t i = 0; i < prefix.edges_.size(); ++i)
        if (prefix.edges_[i] != edges_[i]) return std::nullopt;
    if (prefix.length() == length()) return Path::trivial(quiver_, dst());
    return Path::of_edges(quiver_,
                          std::vector<int>(edges_.begin() + prefix.length(), edges_.end()));
}

bool Path::same_as(const Path& o) const {
    if (length() != o.length()) return false;
    if (is_trivial())
        return quiver_->vertex_id(base_vertex_) == o.quiver_->vertex_id(o.base_vertex_);
    for (size_t i = 0; i < edges_.size(); ++i)
        if (quiver_->edge(edges_[i]).id != o.quiver_->edge(o.edges_[i]).id) return false;
    return true;
}

std::string Path::str() const {
    if (is_trivial()) return "@" + quiver_->vertex_id(base_vertex_);
    std::string out;
    for (size_t i = 0; i < edges_.size(); ++i) {
        if (i) out += ".";
        out += quiver_->edge(edges_[i]).id;
    }
    return out;
}

bool PathLess::operator()(const Path& a, const Path& b) const {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.is_trivial()) return a.base_vertex() < b.base_vertex();
    const auto& qa = *a.quiver();
    const auto& qb = *b.quiver();
    for (size_t i = 0; i < a.edges().size(); ++i) {
        const std::string& ia = qa.edge(a.edges()[i]).id;
        const std::string& ib = qb.edge(b.edges()[i]).id;
        if (ia != ib) return ia < ib;
    }
    return false;
}

VertexSet::VertexSet(QuiverPtr q, std::vector<bool> mask)
    : quiver_(std::move(q)), mask_(std::move(mask)) {
    if (static_cast<int>(mask_.size()) != quiver_->num_vertices())
        throw ValidationError("vertex set mask size mismatch");
}

VertexSet VertexSet::of_ids(QuiverPtr q, const std::vector<std::string>& ids) {
    std::vector<bool> mask(q->num_vertices(), false);
    for (const auto& id : ids) mask[q->vertex_index(id)] = true;
    return VertexSet(std::move(q), std::move(mask));
}

VertexSet VertexSet::empty(QuiverPtr q) {
    std::vector<bool> mask(q->num_vertices(), false);
    return VertexSet(std::move(q), std::move(mask));
}

VertexSet VertexSet::full(QuiverPtr q) {
    std::vector<bool> mask(q->num_vertices(), true);
    return VertexSet(std::move(q), std::move(mask));
}

unsigned VertexSet::size() const {
    return static_cast<unsigned>(std::count(mask_.begin(), mask_.end(), true));
}

bool VertexSet::subset_of(const VertexSet& o) const {
    for (size_t i = 0; i < mask_.size(); ++i)
        if (mask_[i] && !o.mask_[i]) return false;
    return true;
}

VertexSet VertexSet::set_union(const VertexSet& o) const {
    std::vector<bool> m = mask_;
    for (size_t i = 0; i < m.size(); ++i) m[i] = m[i] || o.mask_[i];
    return VertexSet(quiver_, std::move(m));
}

VertexSet VertexSet::set_intersection(const VertexSet& o) const {
    std::vector<bool> m = mask_;
    for (size_t i = 0; i < m.size(); ++i) m[i] = m[i] && o.mask_[i];
    return VertexSet(quiver_, std::move(m));
}

VertexSet VertexSet::set_difference(const VertexSet& o) const {
    std::vector<bool> m = mask_;
    for (size_t i = 0; i < m.size(); ++i) m[i] = m[i] && !o.mask_[i];
    return VertexSet(quiver_, std::move(m));
}

std::vector<std::string> VertexSet::ids() const {
    std::vector<std::string> out;
    for (size_t i = 0; i < mask_.size(); ++i)
        if (mask_[i]) out.push_back(quiver_->vertex_id(static_cast<int>(i)));
    return out;
}

std::vector<int> VertexSet::indices() const {
    std::vector<int> out;
    for (size_t i = 0; i < mask_.size(); ++i)
        if (mask_[i]) out.push_back(static_cast<int>(i));
    return out;
}

bool is_hereditary(const VertexSet& h) {
    const Quiver& q = *h.quiver();
    for (int e = 0; e < q.num_edges(); ++e)
        if (h.contains(q.edge(e).src) && !h.contains(q.edge(e).dst)) return false;
    return true;
}

bool is_saturated(const VertexSet& h) {
    const Quiver& q = *h.quiver();
    for (int v = 0; v < q.num_vertices(); ++v) {
        if (h.contains(v) || q.is_sink(v)) continue;
        bool all_in = true;
        for (int e : q.out_edges(v))
            if (!h.contains(q.edge(e).dst)) {
                all_in = false;
                break;
            }
        if (all_in) return false;
    }
    return true;
}

VertexSet hereditary_saturated_closure(const VertexSet& s) {
    const Quiver& q = *s.quiver();
    std::vector<bool> m = s.mask();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int e = 0; e < q.num_edges(); ++e) {
            if (m[q.edge(e).src] && !m[q.edge(e).dst]) {
                m[q.edge(e).dst] = true;
                changed = true;
            }
        }
        for (int v = 0; v < q.num_vertices(); ++v) {
            if (m[v] || q.is_sink(v)) continue;
            bool all_in = true;
            for (int e : q.out_edges(v))
                if (!m[q.edge(e).dst]) {
                    all_in = false;
                    break;
                }
            if (all_in) {
                m[v] = true;
                changed = true;
            }
        }
    }
    return VertexSet(s.quiver(), std::move(m));
}

int HsLattice::index_of(const VertexSet& h) const {
    for (size_t i = 0; i < sets.size(); ++i)
        if (sets[i] == h) return static_cast<int>(i);
    return -1;
}

HsLattice enumerate_lattice(const QuiverPtr& q) {
    int d = q->num_vertices();
    std::vector<VertexSet> found;
    auto add_unique = [&](const VertexSet& h) {
        for (const auto& g : found)
            if (g == h) return;
        found.push_back(h);
    };
    if (d <= 20) {
        for (std::uint64_t mask = 0; mask < (1ull << d); ++mask) {
            std::vector<bool> m(d);
            for (int i = 0; i < d; ++i) m[i] = (mask >> i) & 1;
            VertexSet h(q, std::move(m));
            if (is_hereditary(h) && is_saturated(h)) found.push_back(h);
        }
    } else {
        add_unique(hereditary_saturated_closure(VertexSet::empty(q)));
        for (int v = 0; v < d; ++v) {
            std::vector<bool> m(d, false);
            m[v] = true;
            add_unique(hereditary_saturated_closure(VertexSet(q, std::move(m))));
        }
        bool grew = true;
        while (grew) {
            grew = false;
            size_t n = found.size();
            for (size_t i = 0; i < n; ++i) {
                for (size_t j = i + 1; j < n; ++j) {
                    size_t before = found.size();
                    add_unique(found[i].set_intersection(found[j]));
                    add_unique(hereditary_saturated_closure(found[i].set_union(found[j])));
                    if (found.size() != before) grew = true;
                }
            }
        }
    }
    std::sort(found.begin(), found.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.mask() < b.mask();
    });
    HsLattice lat;
    lat.sets = std::move(found);
    int n = static_cast<int>(lat.sets.size());
    lat.meet.assign(n, std::vector<int>(n, -1));
    lat.join.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            lat.meet[i][j] = lat.index_of(lat.sets[i].set_intersection(lat.sets[j]));
            lat.join[i][j] =
                lat.index_of(hereditary_saturated_closure(lat.sets[i].set_union(lat.sets[j])));
            if (lat.meet[i][j] < 0 || lat.join[i][j] < 0)
                throw InternalInvariantViolation("lattice not closed under meet/join");
        }
    }
    return lat;
}

QuiverPtr quotient_graph(const VertexSet& h) {
    if (!is_hereditary(h) || !is_saturated(h))
        throw ValidationError("quotient graph needs a hereditary saturated subset");
    const Quiver& q = *h.quiver();
    std::vector<std::string> vs;
    for (int v = 0; v < q.num_vertices(); ++v)
        if (!h.contains(v)) vs.push_back(q.vertex_id(v));
    std::vector<std::tuple<std::string, std::string, std::string>> es;
    for (int e = 0; e < q.num_edges(); ++e) {
        const auto& ed = q.edge(e);
        if (!h.contains(ed.dst))
            es.emplace_back(ed.id, q.vertex_id(ed.src), q.vertex_id(ed.dst));
    }
    return std::make_shared<const Quiver>(std::move(vs), std::move(es));
}

QuiverPtr restriction_graph(const VertexSet& h) {
    if (!is_hereditary(h))
        throw ValidationError("restriction graph needs a hereditary subset");
    const Quiver& q = *h.quiver();
    std::vector<std::string> vs;
    for (int v = 0; v < q.num_vertices(); ++v)
        if (h.contains(v)) vs.push_back(q.vertex_id(v));
    std::vector<std::tuple<std::string, std::string, std::string>> es;
    for (int e = 0; e < q.num_edges(); ++e) {
        const auto& ed = q.edge(e);
        if (h.contains(ed.src))
            es.emplace_back(ed.id, q.vertex_id(ed.src), q.vertex_id(ed.dst));
    }
    return std::make_shared<const Quiver>(std::move(vs), std::move(es));
}

std::vector<int> crossing_edges(const VertexSet& h) {
    const Quiver& q = *h.quiver();
    std::vector<int> out;
    for (int e = 0; e < q.num_edges(); ++e)
        if (!h.contains(q.edge(e).src) && h.contains(q.edge(e).dst)) out.push_back(e);
    return out;
}

HereditaryChain::HereditaryChain(QuiverPtr q, std::vector<VertexSet> sets)
    : quiver_(std::move(q)), sets_(std::move(sets)) {
    if (sets_.empty()) throw ValidationError("chain needs at least one subset");
    for (size_t i = 0; i < sets_.size(); ++i) {
        if (sets_[i].quiver().get() != quiver_.get() && !(*sets_[i].quiver() == *quiver_))
            throw ValidationError("chain subset belongs to a different quiver");
        if (!is_hereditary(sets_[i]) || !is_saturated(sets_[i]))
            throw ValidationError("chain member " + std::to_string(i) +
                                  " is not hereditary saturated");
        if (i > 0) {
            if (!sets_[i - 1].subset_of(sets_[i]) || sets_[i - 1] == sets_[i])
                throw ValidationError("chain must be strictly increasing");
        }
    }
    if (!sets_.back().is_full())
        throw ValidationError("chain must end at the full vertex set");
    entry_index_.assign(quiver_->num_vertices(), 0);
    for (int v = 0; v < quiver_->num_vertices(); ++v) {
        unsigned i = 0;
        while (!sets_[i].contains(v)) ++i;
        entry_index_[v] = i;
    }
}

bool HereditaryChain::operator==(const HereditaryChain& o) const {
    if (!(*quiver_ == *o.quiver_)) return false;
    if (sets_.size() != o.sets_.size()) return false;
    for (size_t i = 0; i < sets_.size(); ++i)
        if (!(sets_[i] == o.sets_[i])) return false;
    return true;
}

std::vector<Path> all_paths(const QuiverPtr& q, unsigned maxlen) {
    std::vector<Path> out;
    for (int v = 0; v < q->num_vertices(); ++v) out.push_back(Path::trivial(q, v));
    std::vector<Path> frontier = out;
    for (unsigned len = 1; len <= maxlen; ++len) {
        std::vector<Path> next;
        for (const auto& p : frontier) {
            for (int e : q->out_edges(p.dst())) {
                std::vector<int> es = p.edges();
                es.push_back(e);
                next.push_back(Path::of_edges(q, std::move(es)));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    std::sort(out.begin(), out.end(), PathLess{});
    return out;
}

}  // namespace mqa
