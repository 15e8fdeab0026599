#pragma once

/// Text format for web diagrams.
///
///   # comments and blank lines are ignored
///   circles: 1                  (optional: count of vertex-free loops)
///   boundary: p0:+ p1:- ...     (optional: cyclic CCW; '+' means the strand
///                                is directed away from the point, into the web)
///   bottom: 2                   (optional: the first K boundary points form
///                                the bottom side of an open tangle)
///   vertices:
///     v0 sink
///     v1 source
///     x0 crossing over=0        (over=0: strand at rotation slots {0,2} on top)
///     c0 clasp 2 0 [reversed]   (color (a,b); input side = first a+b slots)
///   edges:
///     e0 v0 v1                  (directed from the first endpoint to the second)
///   rotation:
///     v0: e0 e1 e2              (CCW cyclic order; required for every vertex,
///                                boundary points are implicit)
///
/// An edge may connect a node to itself (a clasp output looping back to an
/// input, or the free ends of a crossing).  Such an edge contributes two
/// slots to the rotation and must be named with an explicit end: e0.t for
/// the tail (outgoing) end, e0.h for the head.
///
/// The parser rejects anything ambiguous: unknown or duplicate names, missing
/// or incomplete rotations, arity or direction violations, and non-planar
/// rotation data.

#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "web.hpp"

namespace a2skein {

namespace webio_detail {

inline std::vector<std::string> tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string t;
    while (is >> t) {
        if (t[0] == '#') break;
        out.push_back(t);
    }
    return out;
}

} // namespace webio_detail

inline WebDiagram parse_web(const std::string& text) {
    using webio_detail::tokens;
    WebDiagram w;
    std::unordered_map<std::string, int> node_of;
    struct EdgeDecl {
        std::string name, from, to;
    };
    std::vector<EdgeDecl> edges;
    std::unordered_map<std::string, int> edge_index;
    std::vector<std::pair<std::string, std::vector<std::string>>> rotations;
    std::vector<std::string> boundary_names;
    std::vector<char> boundary_signs;
    long long circles = 0;
    int bottom = -1;

    enum class Section { None, Vertices, Edges, Rotation } section = Section::None;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) -> void {
        throw parse_error("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(is, line)) {
        ++lineno;
        auto tk = tokens(line);
        if (tk.empty()) continue;
        std::string head = tk[0];
        if (head == "circles:") {
            if (tk.size() != 2) fail("circles: expects one count");
            circles = std::atoll(tk[1].c_str());
            if (circles < 0) fail("negative circle count");
            continue;
        }
        if (head == "bottom:") {
            if (tk.size() != 2) fail("bottom: expects one count");
            bottom = std::atoi(tk[1].c_str());
            continue;
        }
        if (head == "boundary:") {
            for (size_t i = 1; i < tk.size(); ++i) {
                auto pos = tk[i].rfind(':');
                if (pos == std::string::npos || pos + 2 != tk[i].size() ||
                    (tk[i][pos + 1] != '+' && tk[i][pos + 1] != '-'))
                    fail("boundary point must look like name:+ or name:-");
                boundary_names.push_back(tk[i].substr(0, pos));
                boundary_signs.push_back(tk[i][pos + 1]);
            }
            continue;
        }
        if (head == "vertices:") {
            section = Section::Vertices;
            continue;
        }
        if (head == "edges:") {
            section = Section::Edges;
            continue;
        }
        if (head == "rotation:") {
            section = Section::Rotation;
            continue;
        }
        switch (section) {
            case Section::Vertices: {
                if (tk.size() < 2) fail("vertex declaration needs a name and a kind");
                const std::string& name = tk[0];
                if (node_of.count(name)) fail("duplicate vertex name " + name);
                NodeKind kind;
                if (tk[1] == "sink")
                    kind = NodeKind::Sink;
                else if (tk[1] == "source")
                    kind = NodeKind::Source;
                else if (tk[1] == "crossing")
                    kind = NodeKind::Crossing;
                else if (tk[1] == "clasp")
                    kind = NodeKind::Clasp;
                else {
                    fail("unknown vertex kind " + tk[1]);
                    return w;
                }
                int id = w.new_node(kind);
                node_of[name] = id;
                if (kind == NodeKind::Crossing) {
                    if (tk.size() != 3 || (tk[2] != "over=0" && tk[2] != "over=1"))
                        fail("crossing needs over=0 or over=1");
                    w.over_parity[static_cast<size_t>(id)] = tk[2] == "over=1" ? 1 : 0;
                } else if (kind == NodeKind::Clasp) {
                    if (tk.size() != 4 && !(tk.size() == 5 && tk[4] == "reversed"))
                        fail("clasp needs two colors and an optional 'reversed'");
                    int a = std::atoi(tk[2].c_str()), b = std::atoi(tk[3].c_str());
                    if (a < 0 || b < 0 || a + b == 0) fail("clasp colors must be non-negative, not both zero");
                    w.clasp_ab[static_cast<size_t>(id)] = {a, b};
                    if (tk.size() == 5) w.clasp_reversed[static_cast<size_t>(id)] = 1;
                } else if (tk.size() != 2) {
                    fail("unexpected tokens after vertex kind");
                }
                break;
            }
            case Section::Edges: {
                if (tk.size() != 3) fail("edge declaration needs a name and two endpoints");
                if (edge_index.count(tk[0])) fail("duplicate edge name " + tk[0]);
                edge_index[tk[0]] = static_cast<int>(edges.size());
                edges.push_back({tk[0], tk[1], tk[2]});
                break;
            }
            case Section::Rotation: {
                if (tk.size() < 2 || tk[0].back() != ':') fail("rotation line needs 'vertex:' then edges");
                rotations.emplace_back(tk[0].substr(0, tk[0].size() - 1),
                                       std::vector<std::string>(tk.begin() + 1, tk.end()));
                break;
            }
            case Section::None:
                fail("statement outside any section: " + head);
        }
    }

    // boundary nodes
    for (const auto& b : boundary_names) {
        if (node_of.count(b)) throw parse_error("boundary name collides with a vertex: " + b);
        node_of[b] = w.new_node(NodeKind::Boundary);
        w.boundary.push_back(node_of[b]);
    }
    // edges
    std::vector<std::pair<int, int>> edge_darts;
    for (const auto& e : edges) {
        auto f = node_of.find(e.from);
        auto t = node_of.find(e.to);
        if (f == node_of.end()) throw parse_error("edge " + e.name + " references unknown endpoint " + e.from);
        if (t == node_of.end()) throw parse_error("edge " + e.name + " references unknown endpoint " + e.to);
        edge_darts.push_back(w.add_edge(f->second, t->second));
    }
    // boundary signs vs edge directions
    for (size_t i = 0; i < boundary_names.size(); ++i) {
        int node = node_of[boundary_names[i]];
        const auto& r = w.rot[static_cast<size_t>(node)];
        if (r.size() != 1)
            throw validation_error("boundary point " + boundary_names[i] + " must meet exactly one edge");
        bool outgoing = w.dtail[static_cast<size_t>(r[0])];
        if (outgoing != (boundary_signs[i] == '+'))
            throw validation_error("boundary sign of " + boundary_names[i] + " does not match its edge direction");
    }
    // rotations
    std::vector<char> has_rot(w.kind.size(), 0);
    for (auto& [vname, edge_names] : rotations) {
        auto v = node_of.find(vname);
        if (v == node_of.end()) throw parse_error("rotation for unknown vertex " + vname);
        int node = v->second;
        if (w.kind[static_cast<size_t>(node)] == NodeKind::Boundary)
            throw parse_error("boundary points carry no rotation line");
        if (has_rot[static_cast<size_t>(node)]) throw parse_error("duplicate rotation for " + vname);
        has_rot[static_cast<size_t>(node)] = 1;
        std::vector<int> new_rot;
        std::vector<char> used(w.rot[static_cast<size_t>(node)].size(), 0);
        for (auto& en_full : edge_names) {
            std::string en = en_full;
            int want_end = 0; // 0 = unspecified, 1 = tail, 2 = head
            if (en.size() > 2 && en.substr(en.size() - 2) == ".t") {
                want_end = 1;
                en = en.substr(0, en.size() - 2);
            } else if (en.size() > 2 && en.substr(en.size() - 2) == ".h") {
                want_end = 2;
                en = en.substr(0, en.size() - 2);
            }
            auto ei = edge_index.find(en);
            if (ei == edge_index.end()) throw parse_error("rotation references unknown edge " + en);
            auto [dt, dh] = edge_darts[static_cast<size_t>(ei->second)];
            bool tail_here = w.dnode[static_cast<size_t>(dt)] == node;
            bool head_here = w.dnode[static_cast<size_t>(dh)] == node;
            int dart = -1;
            if (tail_here && head_here) {
                if (want_end == 0)
                    throw parse_error("edge " + en + " joins " + vname +
                                      " to itself; name its ends " + en + ".t and " + en + ".h");
                dart = want_end == 1 ? dt : dh;
            } else {
                if (want_end == 1 && !tail_here)
                    throw parse_error("edge " + en + " has no tail at " + vname);
                if (want_end == 2 && !head_here)
                    throw parse_error("edge " + en + " has no head at " + vname);
                dart = tail_here ? dt : dh;
            }
            if (dart < 0) throw parse_error("edge " + en + " is not incident to " + vname);
            for (int d : new_rot)
                if (d == dart) throw parse_error("edge end " + en_full + " repeated in rotation of " + vname);
            new_rot.push_back(dart);
        }
        if (new_rot.size() != w.rot[static_cast<size_t>(node)].size())
            throw parse_error("rotation of " + vname + " must list all incident edges");
        w.rot[static_cast<size_t>(node)] = std::move(new_rot);
    }
    for (size_t n = 0; n < w.kind.size(); ++n)
        if (w.kind[n] != NodeKind::Boundary && w.kind[n] != NodeKind::Dead && !has_rot[n])
            throw parse_error("missing rotation for a vertex");

    w.circles = circles;
    w.bottom_count = bottom < 0 ? static_cast<int>(w.boundary.size()) : bottom;
    if (bottom > static_cast<int>(w.boundary.size())) throw parse_error("bottom count exceeds boundary size");
    validate(w);
    return w;
}

/// Renders a diagram back into the text format.
inline std::string write_web(const WebDiagram& w_in) {
    WebDiagram w = w_in;
    w.compact();
    std::ostringstream os;
    if (w.circles > 0) os << "circles: " << w.circles << "\n";
    std::vector<std::string> node_name(w.kind.size());
    int np = 0, nv = 0;
    for (size_t n = 0; n < w.kind.size(); ++n)
        node_name[n] = w.kind[n] == NodeKind::Boundary ? "p" + std::to_string(np++) : "v" + std::to_string(nv++);
    if (!w.boundary.empty()) {
        os << "boundary:";
        for (int b : w.boundary) {
            bool outgoing = w.dtail[static_cast<size_t>(w.rot[static_cast<size_t>(b)][0])];
            os << " " << node_name[static_cast<size_t>(b)] << (outgoing ? ":+" : ":-");
        }
        os << "\n";
        os << "bottom: " << w.bottom_count << "\n";
    }
    bool any_vertex = false;
    for (size_t n = 0; n < w.kind.size(); ++n)
        if (w.kind[n] != NodeKind::Boundary && w.kind[n] != NodeKind::Dead) any_vertex = true;
    if (any_vertex) {
        os << "vertices:\n";
        for (size_t n = 0; n < w.kind.size(); ++n) {
            switch (w.kind[n]) {
                case NodeKind::Sink: os << "  " << node_name[n] << " sink\n"; break;
                case NodeKind::Source: os << "  " << node_name[n] << " source\n"; break;
                case NodeKind::Crossing:
                    os << "  " << node_name[n] << " crossing over=" << int(w.over_parity[n]) << "\n";
                    break;
                case NodeKind::Clasp:
                    os << "  " << node_name[n] << " clasp " << w.clasp_ab[n][0] << " " << w.clasp_ab[n][1];
                    if (w.clasp_reversed[n]) os << " reversed";
                    os << "\n";
                    break;
                default: break;
            }
        }
    }
    // edges named by their tail dart order
    std::vector<int> edge_name_of_dart(w.dnode.size(), -1);
    int ne = 0;
    std::ostringstream es;
    for (int d = 0; d < static_cast<int>(w.dnode.size()); ++d) {
        if (!w.dart_alive(d) || !w.dtail[static_cast<size_t>(d)]) continue;
        int t = w.dtwin[static_cast<size_t>(d)];
        edge_name_of_dart[static_cast<size_t>(d)] = ne;
        edge_name_of_dart[static_cast<size_t>(t)] = ne;
        es << "  e" << ne << " " << node_name[static_cast<size_t>(w.dnode[static_cast<size_t>(d)])] << " "
           << node_name[static_cast<size_t>(w.dnode[static_cast<size_t>(t)])] << "\n";
        ++ne;
    }
    if (ne > 0) os << "edges:\n" << es.str();
    bool any_rot = false;
    std::ostringstream rs;
    for (size_t n = 0; n < w.kind.size(); ++n) {
        if (w.kind[n] == NodeKind::Boundary || w.kind[n] == NodeKind::Dead) continue;
        any_rot = true;
        rs << "  " << node_name[n] << ":";
        for (int d : w.rot[n]) {
            int t = w.dtwin[static_cast<size_t>(d)];
            bool self_edge = w.dnode[static_cast<size_t>(d)] == w.dnode[static_cast<size_t>(t)];
            rs << " e" << edge_name_of_dart[static_cast<size_t>(d)];
            if (self_edge) rs << (w.dtail[static_cast<size_t>(d)] ? ".t" : ".h");
        }
        rs << "\n";
    }
    if (any_rot) os << "rotation:\n" << rs.str();
    return os.str();
}

} // namespace a2skein
