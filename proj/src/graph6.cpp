#include "atlab/graph6.hpp"

#include <sstream>

namespace atlab {

namespace {

int g6_byte(const std::string& s, size_t at) {
    unsigned char c = s[at];
    if (c < 63 || c > 126)
        throw parse_error("graph6: byte " + std::to_string(at) + " out of range");
    return c - 63;
}

}  // namespace

Graph parse_graph6(const std::string& line) {
    if (line.empty()) throw parse_error("graph6: empty input");
    size_t at = 0;
    long n;
    if (line[0] == '~') {
        if (line.size() < 4) throw parse_error("graph6: truncated order field");
        if (line[1] == '~') throw parse_error("graph6: order beyond supported range");
        n = 0;
        for (at = 1; at <= 3; ++at) n = (n << 6) | g6_byte(line, at);
    } else {
        n = g6_byte(line, at++);
    }
    if (n > 64) throw parse_error("graph6: order " + std::to_string(n) + " exceeds cap 64");
    Graph g(static_cast<int>(n));
    size_t need = (static_cast<size_t>(n) * (n - 1) / 2 + 5) / 6;
    if (line.size() - at != need)
        throw parse_error("graph6: expected " + std::to_string(need) + " data bytes, got " +
                          std::to_string(line.size() - at));
    int buf = 0, have = 0;
    size_t pos = at;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (have == 0) {
                buf = g6_byte(line, pos++);
                have = 6;
            }
            if ((buf >> --have) & 1) g.add_edge(i, j);
        }
    if (have > 0 && (buf & ((1 << have) - 1)) != 0)
        throw parse_error("graph6: nonzero padding in byte " + std::to_string(pos - 1));
    return g;
}

std::string to_graph6(const Graph& g) {
    std::string out;
    if (g.n <= 62) {
        out.push_back(static_cast<char>(g.n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((g.n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((g.n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((g.n & 63) + 63));
    }
    int buf = 0, have = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) {
            buf = (buf << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++have == 6) {
                out.push_back(static_cast<char>(buf + 63));
                buf = have = 0;
            }
        }
    if (have > 0) out.push_back(static_cast<char>((buf << (6 - have)) + 63));
    return out;
}

Graph parse_adjacency_text(const std::string& text) {
    std::istringstream in(text);
    long n, m;
    if (!(in >> n >> m)) throw parse_error("adjacency text: missing 'n m' header");
    if (n < 0 || n > 64) throw parse_error("adjacency text: order out of range");
    Graph g(static_cast<int>(n));
    for (long i = 0; i < m; ++i) {
        long u, v;
        if (!(in >> u >> v)) throw parse_error("adjacency text: expected " + std::to_string(m) +
                                               " edges, got " + std::to_string(i));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("adjacency text: endpoint out of range in edge " + std::to_string(i));
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    std::string extra;
    if (in >> extra) throw parse_error("adjacency text: trailing content '" + extra + "'");
    return g;
}

std::string to_adjacency_text(const Graph& g) {
    std::ostringstream out;
    auto es = g.edges();
    out << g.n << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace atlab
