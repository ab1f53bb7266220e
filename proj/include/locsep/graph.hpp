#ifndef LOCSEP_GRAPH_HPP
#define LOCSEP_GRAPH_HPP

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "sets.hpp"

namespace locsep {

struct Edge {
    int u;
    int v;  // u < v
    int other(int x) const { return x == u ? v : u; }
};

// Finite simple undirected graph. Vertex ids follow the lexicographic order of
// the identifier strings, edge ids the lexicographic order of (u, v) pairs.
class Graph {
public:
    Graph() = default;

    Graph(const std::vector<std::pair<std::string, std::string>>& edge_list,
          const std::vector<std::string>& extra_vertices = {}) {
        std::vector<std::string> names(extra_vertices);
        for (auto& [a, b] : edge_list) {
            names.push_back(a);
            names.push_back(b);
        }
        std::sort(names.begin(), names.end());
        names.erase(std::unique(names.begin(), names.end()), names.end());
        names_ = names;
        for (int i = 0; i < static_cast<int>(names_.size()); ++i) index_[names_[i]] = i;
        std::vector<std::pair<int, int>> pairs;
        for (auto& [a, b] : edge_list) {
            int u = index_.at(a), v = index_.at(b);
            if (u == v) throw PreconditionError("loop at vertex " + a);
            pairs.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(pairs.begin(), pairs.end());
        pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
        adj_.assign(names_.size(), {});
        for (auto [u, v] : pairs) {
            int e = static_cast<int>(edges_.size());
            edges_.push_back({u, v});
            adj_[u].push_back({v, e});
            adj_[v].push_back({u, e});
        }
        for (auto& list : adj_) std::sort(list.begin(), list.end());
    }

    int num_vertices() const { return static_cast<int>(names_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::string& name(int v) const { return names_.at(v); }
    const std::vector<std::string>& names() const { return names_; }

    int vertex(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw PreconditionError("unknown vertex " + id);
        return it->second;
    }
    bool has_vertex(const std::string& id) const { return index_.count(id) > 0; }

    const Edge& edge(int e) const { return edges_.at(e); }
    const std::vector<Edge>& edges() const { return edges_; }

    // (neighbour, edge id) pairs sorted by neighbour.
    const std::vector<std::pair<int, int>>& incident(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

    int edge_between(int u, int v) const {
        const auto& list = adj_.at(u);
        auto it = std::lower_bound(list.begin(), list.end(), std::make_pair(v, -1));
        if (it != list.end() && it->first == v) return it->second;
        return -1;
    }
    bool adjacent(int u, int v) const { return edge_between(u, v) >= 0; }

    std::string edge_name(int e) const { return name(edges_[e].u) + "-" + name(edges_[e].v); }

    VertexSet vertex_set(const std::vector<std::string>& ids) const {
        VertexSet out;
        for (auto& s : ids) out.push_back(vertex(s));
        return normalized(out);
    }
    VertexSet all_vertices() const {
        VertexSet out(num_vertices());
        for (int i = 0; i < num_vertices(); ++i) out[i] = i;
        return out;
    }
    EdgeSet all_edges() const {
        EdgeSet out(num_edges());
        for (int i = 0; i < num_edges(); ++i) out[i] = i;
        return out;
    }

    // Edges with precisely one end in x.
    EdgeSet boundary(const VertexSet& x) const {
        std::vector<char> in(num_vertices(), 0);
        for (int v : x) in[v] = 1;
        EdgeSet out;
        for (int e = 0; e < num_edges(); ++e)
            if (in[edges_[e].u] != in[edges_[e].v]) out.push_back(e);
        return out;
    }

    // Edges between a and b (a, b disjoint).
    EdgeSet edges_between(const VertexSet& a, const VertexSet& b) const {
        std::vector<char> mark(num_vertices(), 0);
        for (int v : a) mark[v] |= 1;
        for (int v : b) mark[v] |= 2;
        EdgeSet out;
        for (int e = 0; e < num_edges(); ++e) {
            int mu = mark[edges_[e].u], mv = mark[edges_[e].v];
            if (((mu & 1) && (mv & 2)) || ((mu & 2) && (mv & 1))) out.push_back(e);
        }
        return out;
    }

    EdgeSet induced_edges(const VertexSet& x) const {
        std::vector<char> in(num_vertices(), 0);
        for (int v : x) in[v] = 1;
        EdgeSet out;
        for (int e = 0; e < num_edges(); ++e)
            if (in[edges_[e].u] && in[edges_[e].v]) out.push_back(e);
        return out;
    }

    VertexSet neighbourhood(const VertexSet& x) const {
        std::vector<char> in(num_vertices(), 0);
        for (int v : x) in[v] = 1;
        VertexSet out;
        for (int v : x)
            for (auto [w, e] : adj_[v])
                if (!in[w]) out.push_back(w);
        return normalized(out);
    }

    // Components of G - removed, each sorted; ordered by smallest vertex.
    std::vector<VertexSet> components(const VertexSet& removed = {}) const {
        std::vector<int> comp(num_vertices(), -1);
        for (int v : removed) comp[v] = -2;
        std::vector<VertexSet> out;
        for (int s = 0; s < num_vertices(); ++s) {
            if (comp[s] != -1) continue;
            int id = static_cast<int>(out.size());
            out.push_back({});
            std::vector<int> stack{s};
            comp[s] = id;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                out[id].push_back(v);
                for (auto [w, e] : adj_[v])
                    if (comp[w] == -1) {
                        comp[w] = id;
                        stack.push_back(w);
                    }
            }
            std::sort(out[id].begin(), out[id].end());
        }
        return out;
    }

    bool connected() const { return num_vertices() > 0 && components().size() == 1; }

    // BFS distances from a source set; -1 when unreachable.
    std::vector<int> distances(const VertexSet& sources) const {
        std::vector<int> dist(num_vertices(), -1);
        std::vector<int> queue;
        for (int s : sources) {
            dist[s] = 0;
            queue.push_back(s);
        }
        for (std::size_t i = 0; i < queue.size(); ++i) {
            int v = queue[i];
            for (auto [w, e] : adj_[v])
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
        }
        return dist;
    }

    std::string describe(const VertexSet& x) const {
        std::string out = "{";
        for (std::size_t i = 0; i < x.size(); ++i) out += (i ? "," : "") + name(x[i]);
        return out + "}";
    }
    std::string describe_edges(const EdgeSet& f) const {
        std::string out = "{";
        for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + edge_name(f[i]);
        return out + "}";
    }

private:
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

// Parses "u v" lines; '#' starts a comment; blank lines are ignored.
inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::vector<std::pair<std::string, std::string>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a)) continue;
        if (!(fields >> b)) throw ParseError("expected two vertex identifiers", line_no);
        if (fields >> extra) throw ParseError("trailing token '" + extra + "'", line_no);
        if (a == b) throw ParseError("loop edge at vertex " + a, line_no);
        edges.emplace_back(a, b);
    }
    if (edges.empty()) throw ParseError("empty graph", 0);
    return Graph(edges);
}

// A walk v0 e0 v1 ... ek-1 vk.
struct Walk {
    std::vector<int> vertices;
    std::vector<int> edges;

    int length() const { return static_cast<int>(edges.size()); }
    bool closed() const { return !vertices.empty() && vertices.front() == vertices.back(); }

    Walk reversed() const {
        Walk w{vertices, edges};
        std::reverse(w.vertices.begin(), w.vertices.end());
        std::reverse(w.edges.begin(), w.edges.end());
        return w;
    }

    bool valid_in(const Graph& g) const {
        if (vertices.size() != edges.size() + 1) return false;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (g.edge_between(vertices[i], vertices[i + 1]) != edges[i]) return false;
        return true;
    }

    // Removes every backtrack u e v e u until none is left.
    Walk reduced() const {
        Walk w;
        if (vertices.empty()) return w;
        w.vertices.push_back(vertices[0]);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (!w.edges.empty() && w.edges.back() == edges[i]) {
                w.edges.pop_back();
                w.vertices.pop_back();
            } else {
                w.edges.push_back(edges[i]);
                w.vertices.push_back(vertices[i + 1]);
            }
        }
        return w;
    }

    static Walk from_vertices(const Graph& g, const std::vector<int>& vs) {
        Walk w;
        w.vertices = vs;
        for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
            int e = g.edge_between(vs[i], vs[i + 1]);
            if (e < 0) throw PreconditionError("walk uses a non-edge");
            w.edges.push_back(e);
        }
        return w;
    }

    bool operator==(const Walk&) const = default;
};

struct ComponentalCut {
    VertexSet component;
    EdgeSet cut;
};

inline std::vector<ComponentalCut> componental_cuts(const Graph& g, const VertexSet& x) {
    std::vector<ComponentalCut> out;
    for (auto& c : g.components(x)) out.push_back({c, g.edges_between(c, x)});
    return out;
}

}  // namespace locsep

#endif
