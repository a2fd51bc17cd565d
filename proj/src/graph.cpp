#include "copnum/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>

namespace copnum {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        edge_count_ += nbrs.size();
    }
    edge_count_ /= 2;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adj_.size(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::size_t parse_count(std::string_view tok, std::size_t line_no) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(tok) + "'");
    return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t n = 0, m = 0;
    bool have_header = false;
    std::vector<Edge> edges;
    std::vector<std::vector<Vertex>> seen;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto toks = split_ws(line);
        if (toks.empty() || toks.front().front() == '#') {
            if (end == text.size()) break;
            continue;
        }
        if (!have_header) {
            if (toks.size() != 2) throw ParseError(line_no, "header must be \"n m\"");
            n = parse_count(toks[0], line_no);
            m = parse_count(toks[1], line_no);
            have_header = true;
            seen.resize(n);
            edges.reserve(m);
        } else {
            if (toks.size() != 2) throw ParseError(line_no, "edge line must be \"u v\"");
            if (edges.size() == m) throw ParseError(line_no, "more edge lines than the header declares");
            std::size_t u = parse_count(toks[0], line_no);
            std::size_t v = parse_count(toks[1], line_no);
            if (u >= n || v >= n)
                throw ParseError(line_no, "vertex index out of range for n=" + std::to_string(n));
            if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
            auto& s = seen[u];
            if (std::find(s.begin(), s.end(), static_cast<Vertex>(v)) != s.end())
                throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
            s.push_back(static_cast<Vertex>(v));
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
        if (end == text.size()) break;
    }
    if (!have_header) throw ParseError(line_no, "missing header");
    if (edges.size() != m)
        throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
    return Graph(n, edges);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
    std::vector<std::size_t> dist(g.order(), kUnreachable);
    std::vector<Vertex> queue{source};
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()), d_(n_ * n_) {
    for (Vertex s = 0; s < n_; ++s) {
        auto row = bfs_distances(g, s);
        std::copy(row.begin(), row.end(), d_.begin() + static_cast<std::ptrdiff_t>(s * n_));
    }
}

std::size_t girth(const Graph& g) {
    // A BFS from every root sees each shortest cycle through that root as a
    // non-tree edge closing two branches.
    std::size_t best = kInfinite;
    const std::size_t n = g.order();
    std::vector<std::size_t> dist(n);
    std::vector<Vertex> parent(n);
    std::vector<Vertex> queue;
    for (Vertex root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), kUnreachable);
        queue.assign(1, root);
        dist[root] = 0;
        parent[root] = root;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            if (best != kInfinite && 2 * dist[u] + 1 >= best) break;
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] == kUnreachable) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (parent[u] != w) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    auto d = bfs_distances(g, 0);
    return std::none_of(d.begin(), d.end(), [](std::size_t x) { return x == kUnreachable; });
}

GraphMetrics metrics(const Graph& g) {
    GraphMetrics m;
    const std::size_t n = g.order();
    if (n == 0) return m;
    m.min_degree = kInfinite;
    for (Vertex v = 0; v < n; ++v) {
        m.min_degree = std::min(m.min_degree, g.degree(v));
        m.max_degree = std::max(m.max_degree, g.degree(v));
    }
    for (Vertex s = 0; s < n; ++s) {
        auto d = bfs_distances(g, s);
        for (auto x : d) {
            if (x == kUnreachable) m.is_connected = false;
            else m.diameter = std::max(m.diameter, x);
        }
    }
    if (!m.is_connected) m.diameter = kInfinite;

    std::vector<int> color(n, -1);
    for (Vertex s = 0; s < n && m.is_bipartite; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<Vertex> queue{s};
        for (std::size_t head = 0; head < queue.size() && m.is_bipartite; ++head) {
            Vertex u = queue[head];
            for (Vertex w : g.neighbors(u)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    m.is_bipartite = false;
                    break;
                }
            }
        }
    }
    m.girth = girth(g);
    return m;
}

std::vector<Vertex> isometric_path(const Graph& g, Vertex u, Vertex v) {
    if (u >= g.order() || v >= g.order()) throw std::invalid_argument("vertex out of range");
    auto to_v = bfs_distances(g, v);
    if (to_v[u] == kUnreachable)
        throw std::invalid_argument("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                    " are in different components");
    std::vector<Vertex> path{u};
    Vertex cur = u;
    while (cur != v) {
        for (Vertex w : g.neighbors(cur)) {
            if (to_v[w] + 1 == to_v[cur]) {
                cur = w;
                break;
            }
        }
        path.push_back(cur);
    }
    return path;
}

bool is_isometric_path(const Graph& g, std::span<const Vertex> path) {
    if (path.empty()) return false;
    for (Vertex v : path)
        if (v >= g.order()) return false;
    for (std::size_t i = 0; i < path.size(); ++i) {
        auto d = bfs_distances(g, path[i]);
        for (std::size_t j = 0; j < path.size(); ++j) {
            std::size_t along = i > j ? i - j : j - i;
            if (d[path[j]] != along) return false;
        }
    }
    return true;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
    std::vector<std::vector<Vertex>> out;
    std::vector<bool> seen(g.order(), false);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> block{s};
        seen[s] = true;
        for (std::size_t head = 0; head < block.size(); ++head)
            for (Vertex w : g.neighbors(block[head]))
                if (!seen[w]) {
                    seen[w] = true;
                    block.push_back(w);
                }
        std::sort(block.begin(), block.end());
        out.push_back(std::move(block));
    }
    return out;
}

bool check_retraction(const Graph& g, std::span<const Vertex> h, std::span<const Vertex> f) {
    const std::size_t n = g.order();
    if (f.size() != n)
        throw std::invalid_argument("retraction map must assign every vertex (got " +
                                    std::to_string(f.size()) + " of " + std::to_string(n) + ")");
    std::vector<bool> in_h(n, false);
    for (Vertex v : h) {
        if (v >= n) throw std::invalid_argument("subgraph vertex out of range");
        in_h[v] = true;
    }
    for (Vertex v = 0; v < n; ++v)
        if (f[v] >= n || !in_h[f[v]])
            throw std::invalid_argument("vertex " + std::to_string(v) + " maps outside the subgraph");

    for (Vertex v : h)
        if (f[v] != v) return false;
    for (auto [u, v] : g.edges())
        if (f[u] != f[v] && !g.has_edge(f[u], f[v])) return false;
    return true;
}

Graph attach_pendant_path(const Graph& g, std::size_t extra) {
    auto edges = g.edges();
    const std::size_t n = g.order();
    if (n == 0 && extra > 0) throw std::invalid_argument("cannot attach a path to the empty graph");
    Vertex prev = 0;
    for (std::size_t i = 0; i < extra; ++i) {
        auto next = static_cast<Vertex>(n + i);
        edges.emplace_back(prev, next);
        prev = next;
    }
    return Graph(n + extra, edges);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<Vertex> index(g.order(), static_cast<Vertex>(-1));
    for (Vertex i = 0; i < vertices.size(); ++i) index[vertices[i]] = i;
    std::vector<Edge> edges;
    for (Vertex i = 0; i < vertices.size(); ++i)
        for (Vertex w : g.neighbors(vertices[i]))
            if (index[w] != static_cast<Vertex>(-1) && i < index[w]) edges.emplace_back(i, index[w]);
    return Graph(vertices.size(), edges);
}

std::size_t domination_number(const Graph& g) {
    const std::size_t n = g.order();
    if (n == 0) return 0;
    std::vector<std::vector<bool>> closed(n, std::vector<bool>(n, false));
    for (Vertex v = 0; v < n; ++v) {
        closed[v][v] = true;
        for (Vertex w : g.neighbors(v)) closed[v][w] = true;
    }
    std::vector<Vertex> pick;
    std::vector<int> covered(n, 0);
    // Depth-first over combinations of size `size`, smallest size first.
    std::function<bool(std::size_t, Vertex)> extend = [&](std::size_t left, Vertex from) -> bool {
        if (left == 0)
            return std::all_of(covered.begin(), covered.end(), [](int c) { return c > 0; });
        for (Vertex v = from; v + left <= n; ++v) {
            for (Vertex w = 0; w < n; ++w) covered[w] += closed[v][w];
            bool ok = extend(left - 1, v + 1);
            for (Vertex w = 0; w < n; ++w) covered[w] -= closed[v][w];
            if (ok) return true;
        }
        return false;
    };
    for (std::size_t size = 1; size <= n; ++size)
        if (extend(size, 0)) return size;
    return n;
}

bool is_isomorphism(const Graph& a, const Graph& b, std::span<const Vertex> map) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count() || map.size() != a.order())
        return false;
    std::vector<bool> hit(b.order(), false);
    for (Vertex x : map) {
        if (x >= b.order() || hit[x]) return false;
        hit[x] = true;
    }
    for (auto [u, v] : a.edges())
        if (!b.has_edge(map[u], map[v])) return false;
    return true;
}

std::vector<Vertex> find_isomorphism(const Graph& a, const Graph& b) {
    const std::size_t n = a.order();
    if (n != b.order() || a.edge_count() != b.edge_count()) return {};
    auto degs = [](const Graph& g) {
        std::vector<std::size_t> d;
        for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(a) != degs(b)) return {};

    // Map a's vertices in BFS order so each new vertex has mapped neighbors.
    std::vector<Vertex> order;
    std::vector<bool> queued(n, false);
    for (Vertex s = 0; s < n; ++s) {
        if (queued[s]) continue;
        queued[s] = true;
        order.push_back(s);
        for (std::size_t head = order.size() - 1; head < order.size(); ++head)
            for (Vertex w : a.neighbors(order[head]))
                if (!queued[w]) {
                    queued[w] = true;
                    order.push_back(w);
                }
    }

    constexpr Vertex kNone = static_cast<Vertex>(-1);
    std::vector<Vertex> map(n, kNone);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
        if (i == n) return true;
        Vertex x = order[i];
        for (Vertex y = 0; y < n; ++y) {
            if (used[y] || a.degree(x) != b.degree(y)) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) {
                Vertex z = order[j];
                ok = a.has_edge(x, z) == b.has_edge(y, map[z]);
            }
            if (!ok) continue;
            map[x] = y;
            used[y] = true;
            if (place(i + 1)) return true;
            used[y] = false;
            map[x] = kNone;
        }
        return false;
    };
    if (!place(0)) return {};
    return map;
}

namespace named {

Graph path(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    return Graph(n, e);
}

Graph complete(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph star(std::size_t leaves) {
    std::vector<Edge> e;
    for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, e);
}

Graph grid(std::size_t rows, std::size_t cols) {
    std::vector<Edge> e;
    auto id = [cols](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
        }
    return Graph(rows * cols, e);
}

Graph petersen() {
    std::vector<Edge> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
        e.emplace_back(i, i + 5);                // spokes
        e.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return Graph(10, e);
}

Graph heawood() {
    std::vector<Edge> e;
    for (Vertex i = 0; i < 14; ++i) {
        e.emplace_back(i, (i + 1) % 14);
        if (i % 2 == 0) e.emplace_back(i, (i + 5) % 14);
    }
    return Graph(14, e);
}

}  // namespace named

}  // namespace copnum
