#ifndef LOCSEP_FIXTURES_HPP
#define LOCSEP_FIXTURES_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "graph.hpp"

namespace locsep {

using EdgeList = std::vector<std::pair<std::string, std::string>>;

namespace fixtures {

inline Graph p3() { return Graph(EdgeList{{"a", "b"}, {"b", "c"}}); }

inline Graph bowtie() {
    return Graph(EdgeList{{"v", "a1"}, {"v", "a2"}, {"a1", "a2"}, {"v", "b1"}, {"v", "b2"}, {"b1", "b2"}});
}

inline Graph cycle(int n) {
    EdgeList e;
    for (int i = 0; i < n; ++i) e.emplace_back(std::to_string(i), std::to_string((i + 1) % n));
    return Graph(e);
}

inline Graph c6() { return cycle(6); }

inline Graph k4() {
    std::vector<std::string> v{"u", "v", "w1", "w2"};
    EdgeList e;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) e.emplace_back(v[i], v[j]);
    return Graph(e);
}

inline Graph k23() {
    return Graph(EdgeList{{"u", "x"}, {"u", "y"}, {"u", "z"}, {"w", "x"}, {"w", "y"}, {"w", "z"}});
}

// n copies of a clique on {a_i, a_{i+1}} plus `privates` private vertices.
inline Graph clique_ring(int n, int privates) {
    EdgeList e;
    for (int i = 0; i < n; ++i) {
        std::vector<std::string> q{"a" + std::to_string(i), "a" + std::to_string((i + 1) % n)};
        for (int p = 0; p < privates; ++p) q.push_back("p" + std::to_string(i) + std::string(1, char('a' + p)));
        for (std::size_t x = 0; x < q.size(); ++x)
            for (std::size_t y = x + 1; y < q.size(); ++y) e.emplace_back(q[x], q[y]);
    }
    return Graph(e);
}

inline Graph ring6() { return clique_ring(6, 2); }
inline Graph triangle_ring(int n = 6) { return clique_ring(n, 1); }

inline Graph cube() {
    EdgeList e;
    for (int v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b) {
            int w = v ^ (1 << b);
            if (v < w) {
                auto label = [](int x) {
                    std::string s;
                    for (int i = 2; i >= 0; --i) s += ((x >> i) & 1) ? '1' : '0';
                    return s;
                };
                e.emplace_back(label(v), label(w));
            }
        }
    return Graph(e);
}

inline std::vector<std::string> names() {
    return {"P3", "BOWTIE", "C6", "K4", "K23", "RING6", "Q3", "TRIRING6"};
}

inline Graph by_name(const std::string& name) {
    if (name == "P3") return p3();
    if (name == "BOWTIE") return bowtie();
    if (name == "C6") return c6();
    if (name == "K4") return k4();
    if (name == "K23") return k23();
    if (name == "RING6") return ring6();
    if (name == "Q3") return cube();
    if (name == "TRIRING6") return triangle_ring(6);
    throw PreconditionError("unknown fixture " + name);
}

// Vertex set of the clique Q_i of a clique ring.
inline VertexSet ring_clique(const Graph& g, int n, int privates, int i) {
    std::vector<std::string> q{"a" + std::to_string(i), "a" + std::to_string((i + 1) % n)};
    for (int p = 0; p < privates; ++p) q.push_back("p" + std::to_string(i) + std::string(1, char('a' + p)));
    return g.vertex_set(q);
}

}  // namespace fixtures

// Reads an edge-list file, or a shipped fixture given as "fixture:NAME".
inline Graph load_graph(const std::string& source) {
    const std::string prefix = "fixture:";
    if (source.rfind(prefix, 0) == 0) return fixtures::by_name(source.substr(prefix.size()));
    std::ifstream in(source);
    if (!in) throw InputError("cannot open " + source);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

}  // namespace locsep

#endif
