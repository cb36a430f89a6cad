#include "strongcut/graph.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <set>
#include <sstream>
#include <utility>

namespace strongcut {

namespace {

std::string describe_edge(int u, int v) {
    return std::to_string(u) + " " + std::to_string(v);
}

// A line counts as skippable if it is blank or its first non-space character
// is '#'.
bool skippable(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

bool parse_two_ints(const std::string& line, long long& a, long long& b) {
    std::istringstream ss(line);
    std::string extra;
    if (!(ss >> a >> b)) return false;
    if (ss >> extra) return false;
    return true;
}

}  // namespace

Graph::Graph(int order, std::vector<Edge> edges) : order_(order) {
    if (order < 0) throw std::invalid_argument("graph order must be nonnegative");
    for (Edge& e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u == e.v) throw std::invalid_argument("self-loop " + describe_edge(e.u, e.v));
        if (e.u < 0 || e.v >= order)
            throw std::invalid_argument("edge " + describe_edge(e.u, e.v) +
                                        " out of range for order " + std::to_string(order));
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1])
            throw std::invalid_argument("duplicate edge " + describe_edge(edges[i].u, edges[i].v));
    edges_ = std::move(edges);
    adj_.assign(order_, {});
    for (const Edge& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= order_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range (order " +
                                    std::to_string(order_) + ")");
}

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long order = -1, size = -1;
    int header_line = 0;

    auto next_content_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (skippable(line)) continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string content;
    if (!next_content_line(content)) throw ParseError("missing header line");
    header_line = line_no;
    if (!parse_two_ints(content, order, size) || order < 0 || size < 0)
        throw ParseError("line " + std::to_string(header_line) + ": expected header 'order size', got '" +
                         content + "'");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(size));
    std::set<std::pair<int, int>> seen;
    for (long long i = 0; i < size; ++i) {
        if (!next_content_line(content))
            throw ParseError("expected " + std::to_string(size) + " edge lines, found " +
                             std::to_string(i));
        long long u, v;
        if (!parse_two_ints(content, u, v))
            throw ParseError("line " + std::to_string(line_no) + ": malformed edge line '" + content +
                             "'");
        if (u == v)
            throw ParseError("line " + std::to_string(line_no) + ": self-loop " + content);
        if (u < 0 || v < 0 || u >= order || v >= order)
            throw ParseError("line " + std::to_string(line_no) + ": endpoint out of range (order " +
                             std::to_string(order) + ") in '" + content + "'");
        int a = static_cast<int>(std::min(u, v));
        int b = static_cast<int>(std::max(u, v));
        if (!seen.insert({a, b}).second)
            throw ParseError("line " + std::to_string(line_no) + ": duplicate edge " +
                             describe_edge(a, b));
        edges.push_back({a, b});
    }
    if (next_content_line(content))
        throw ParseError("line " + std::to_string(line_no) + ": trailing content '" + content + "'");
    return Graph(static_cast<int>(order), std::move(edges));
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (const Edge& e : g.edges()) out += describe_edge(e.u, e.v) + "\n";
    return out;
}

std::string to_canonical_id(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size());
    for (const Edge& e : g.edges())
        out += " " + std::to_string(e.u) + "-" + std::to_string(e.v);
    return out;
}

Graph from_canonical_id(const std::string& id) {
    std::istringstream ss(id);
    long long order, size;
    if (!(ss >> order >> size) || order < 0 || size < 0)
        throw ParseError("malformed canonical id '" + id + "'");
    std::vector<Edge> edges;
    std::string token;
    while (ss >> token) {
        auto dash = token.find('-');
        if (dash == std::string::npos)
            throw ParseError("malformed edge token '" + token + "' in canonical id");
        try {
            edges.push_back({std::stoi(token.substr(0, dash)), std::stoi(token.substr(dash + 1))});
        } catch (const std::exception&) {
            throw ParseError("malformed edge token '" + token + "' in canonical id");
        }
    }
    if (static_cast<long long>(edges.size()) != size)
        throw ParseError("canonical id announces " + std::to_string(size) + " edges, carries " +
                         std::to_string(edges.size()));
    return Graph(static_cast<int>(order), std::move(edges));
}

bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    std::vector<char> seen(g.order(), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == g.order();
}

bool has_isolated_vertex(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) return true;
    return false;
}

int min_degree(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("min_degree of empty graph");
    int best = g.degree(0);
    for (int v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

int edge_degree(const Graph& g, Edge e) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!g.adjacent(e.u, e.v))
        throw std::invalid_argument("edge_degree: " + describe_edge(e.u, e.v) + " is not an edge");
    return g.degree(e.u) + g.degree(e.v) - 2;
}

int min_edge_degree(const Graph& g) {
    if (g.size() == 0) throw std::domain_error("min_edge_degree undefined for edgeless graph");
    int best = -1;
    for (const Edge& e : g.edges()) {
        int d = g.degree(e.u) + g.degree(e.v) - 2;
        if (best < 0 || d < best) best = d;
    }
    return best;
}

bool is_star(const Graph& g) {
    if (g.order() == 0) return false;
    if (g.order() == 1) return g.size() == 0;
    if (g.size() != g.order() - 1) return false;
    // Every edge must share one common center.
    int c1 = g.edges().front().u;
    int c2 = g.edges().front().v;
    for (const Edge& e : g.edges()) {
        if (e.u != c1 && e.v != c1) c1 = -1;
        if (e.u != c2 && e.v != c2) c2 = -1;
        if (c1 < 0 && c2 < 0) return false;
    }
    return true;
}

Bipartition cut_of(const Graph& g, const std::vector<int>& side_x) {
    if (side_x.empty()) throw std::invalid_argument("cut_of: side must be nonempty");
    std::vector<char> in_x(g.order(), 0);
    int count = 0;
    for (int v : side_x) {
        if (v < 0 || v >= g.order())
            throw std::invalid_argument("cut_of: vertex " + std::to_string(v) + " out of range");
        if (!in_x[v]) {
            in_x[v] = 1;
            ++count;
        }
    }
    if (count == g.order()) throw std::invalid_argument("cut_of: side must be a proper subset");
    Bipartition b;
    b.side_x.reserve(count);
    for (int v = 0; v < g.order(); ++v)
        if (in_x[v]) b.side_x.push_back(v);
    for (const Edge& e : g.edges())
        if (in_x[e.u] != in_x[e.v]) b.cut_edges.push_back(e);
    return b;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> sorted(vertices);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> index(g.order(), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        int v = sorted[i];
        if (v < 0 || v >= g.order())
            throw std::invalid_argument("induced_subgraph: vertex " + std::to_string(v) +
                                        " out of range");
        index[v] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (index[e.u] >= 0 && index[e.v] >= 0) edges.push_back({index[e.u], index[e.v]});
    return Graph(static_cast<int>(sorted.size()), std::move(edges));
}

}  // namespace strongcut
