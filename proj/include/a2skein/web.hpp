#pragma once

/// Directed planar trivalent webs in a disk, encoded by a rotation system.
///
/// A diagram is a set of nodes (boundary points, sinks, sources, crossings,
/// clasp boxes) and darts.  Each edge consists of two darts twinned to each
/// other; `dtail[d]` says whether the edge is directed away from d's node.
/// `rot[n]` lists the darts at node n in counterclockwise order, which is a
/// combinatorial embedding of the diagram in the disk.  Vertex-free closed
/// loops are tracked by a counter, since they carry no combinatorial data.
///
/// Open diagrams carry their boundary points in the cyclic order
/// [bottom left-to-right, top right-to-left]; `bottom_count` marks the split,
/// so a diagram doubles as a morphism from its bottom word to its top word.

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace a2skein {

enum class NodeKind : std::uint8_t { Boundary, Sink, Source, Crossing, Clasp, Dead };

struct WebDiagram {
    std::vector<NodeKind> kind;
    std::vector<std::vector<int>> rot;          // node -> darts, CCW
    std::vector<std::array<int, 2>> clasp_ab;   // clasp color (a, b)
    std::vector<std::int8_t> over_parity;       // crossing: 0 -> strand at slots {0,2} over, 1 -> {1,3}
    std::vector<std::int8_t> clasp_reversed;    // clasp: 1 if strand directions are reversed

    std::vector<int> dnode;       // dart -> node, -1 when dead
    std::vector<int> dtwin;       // dart -> twin dart
    std::vector<std::int8_t> dtail; // dart -> edge directed away from dnode[dart]

    std::vector<int> boundary;    // boundary node ids, cyclic CCW
    int bottom_count = 0;         // first bottom_count boundary entries form the bottom side
    long long circles = 0;        // vertex-free closed loops

    int new_node(NodeKind k) {
        kind.push_back(k);
        rot.emplace_back();
        clasp_ab.push_back({0, 0});
        over_parity.push_back(0);
        clasp_reversed.push_back(0);
        return static_cast<int>(kind.size()) - 1;
    }

    // Creates a dart at node n (appended to its rotation) and returns its id.
    int new_dart(int n, bool tail) {
        dnode.push_back(n);
        dtwin.push_back(-1);
        dtail.push_back(tail ? 1 : 0);
        int d = static_cast<int>(dnode.size()) - 1;
        rot[static_cast<size_t>(n)].push_back(d);
        return d;
    }

    // Adds an edge directed from `from` to `to`, appending a dart to each
    // node's rotation.  Returns the pair (dart at from, dart at to).
    std::pair<int, int> add_edge(int from, int to) {
        int a = new_dart(from, true);
        int b = new_dart(to, false);
        dtwin[static_cast<size_t>(a)] = b;
        dtwin[static_cast<size_t>(b)] = a;
        return {a, b};
    }

    bool dart_alive(int d) const { return dnode[static_cast<size_t>(d)] >= 0; }
    bool node_alive(int n) const { return kind[static_cast<size_t>(n)] != NodeKind::Dead; }

    int slot_of(int d) const {
        const auto& r = rot[static_cast<size_t>(dnode[static_cast<size_t>(d)])];
        for (size_t i = 0; i < r.size(); ++i)
            if (r[i] == d) return static_cast<int>(i);
        throw error("internal: dart missing from its rotation");
    }

    int rot_next(int d) const {
        const auto& r = rot[static_cast<size_t>(dnode[static_cast<size_t>(d)])];
        int s = slot_of(d);
        return r[static_cast<size_t>((s + 1) % r.size())];
    }
    int rot_prev(int d) const {
        const auto& r = rot[static_cast<size_t>(dnode[static_cast<size_t>(d)])];
        int s = slot_of(d);
        return r[static_cast<size_t>((s + static_cast<int>(r.size()) - 1) % r.size())];
    }

    // Face-walk successor: the next dart on the same face orbit.
    int face_next(int d) const { return rot_next(dtwin[static_cast<size_t>(d)]); }

    void kill_dart(int d) { dnode[static_cast<size_t>(d)] = -1; }

    void kill_node(int n) {
        for (int d : rot[static_cast<size_t>(n)])
            if (dart_alive(d) && dnode[static_cast<size_t>(d)] == n) kill_dart(d);
        rot[static_cast<size_t>(n)].clear();
        kind[static_cast<size_t>(n)] = NodeKind::Dead;
    }

    // Joins the two edges that end in darts a and b, deleting both darts.
    // a and b must sit at nodes that are being removed.  If the two darts
    // bound the same edge the splice closes a vertex-free loop.
    void splice(int a, int b) {
        int fa = dtwin[static_cast<size_t>(a)];
        int fb = dtwin[static_cast<size_t>(b)];
        if (fa == b) {
            ++circles;
            kill_dart(a);
            kill_dart(b);
            return;
        }
        dtwin[static_cast<size_t>(fa)] = fb;
        dtwin[static_cast<size_t>(fb)] = fa;
        kill_dart(a);
        kill_dart(b);
    }

    std::size_t live_node_count() const {
        std::size_t n = 0;
        for (auto k : kind)
            if (k != NodeKind::Dead) ++n;
        return n;
    }

    std::size_t live_dart_count() const {
        std::size_t n = 0;
        for (int d = 0; d < static_cast<int>(dnode.size()); ++d)
            if (dart_alive(d)) ++n;
        return n;
    }

    bool has_kind(NodeKind k) const {
        for (auto x : kind)
            if (x == k) return true;
        return false;
    }

    bool empty_diagram() const { return live_node_count() == 0 && circles == 0; }

    /// Flips every edge direction; sinks become sources and conversely.
    /// Clasp nodes toggle their reversed flag.  Crossings keep over/under.
    void reverse_directions() {
        for (auto& t : dtail) t = t ? 0 : 1;
        for (size_t n = 0; n < kind.size(); ++n) {
            if (kind[n] == NodeKind::Sink)
                kind[n] = NodeKind::Source;
            else if (kind[n] == NodeKind::Source)
                kind[n] = NodeKind::Sink;
            else if (kind[n] == NodeKind::Clasp)
                clasp_reversed[n] = clasp_reversed[n] ? 0 : 1;
        }
    }

    /// Drops dead nodes/darts and renumbers everything contiguously.
    void compact() {
        std::vector<int> nmap(kind.size(), -1), dmap(dnode.size(), -1);
        WebDiagram out;
        for (size_t n = 0; n < kind.size(); ++n) {
            if (kind[n] == NodeKind::Dead) continue;
            nmap[n] = out.new_node(kind[n]);
            out.clasp_ab[static_cast<size_t>(nmap[n])] = clasp_ab[n];
            out.over_parity[static_cast<size_t>(nmap[n])] = over_parity[n];
            out.clasp_reversed[static_cast<size_t>(nmap[n])] = clasp_reversed[n];
        }
        for (size_t d = 0; d < dnode.size(); ++d) {
            if (dnode[d] < 0) continue;
            dmap[d] = static_cast<int>(out.dnode.size());
            out.dnode.push_back(nmap[static_cast<size_t>(dnode[d])]);
            out.dtwin.push_back(-1);
            out.dtail.push_back(dtail[d]);
        }
        for (size_t d = 0; d < dnode.size(); ++d)
            if (dnode[d] >= 0) out.dtwin[static_cast<size_t>(dmap[d])] = dmap[static_cast<size_t>(dtwin[d])];
        for (size_t n = 0; n < kind.size(); ++n) {
            if (kind[n] == NodeKind::Dead) continue;
            auto& r = out.rot[static_cast<size_t>(nmap[n])];
            for (int d : rot[n])
                if (dnode[static_cast<size_t>(d)] == static_cast<int>(n)) r.push_back(dmap[static_cast<size_t>(d)]);
        }
        for (int b : boundary) out.boundary.push_back(nmap[static_cast<size_t>(b)]);
        out.bottom_count = bottom_count;
        out.circles = circles;
        *this = std::move(out);
    }

    /// Imports all nodes and darts of `o` into this diagram.
    /// Returns (node id offset, dart id offset) for relocating references.
    std::pair<int, int> absorb(const WebDiagram& o) {
        const int noff = static_cast<int>(kind.size());
        const int doff = static_cast<int>(dnode.size());
        for (size_t n = 0; n < o.kind.size(); ++n) {
            kind.push_back(o.kind[n]);
            clasp_ab.push_back(o.clasp_ab[n]);
            over_parity.push_back(o.over_parity[n]);
            clasp_reversed.push_back(o.clasp_reversed[n]);
            std::vector<int> r = o.rot[n];
            for (auto& d : r) d += doff;
            rot.push_back(std::move(r));
        }
        for (size_t d = 0; d < o.dnode.size(); ++d) {
            dnode.push_back(o.dnode[d] < 0 ? -1 : o.dnode[d] + noff);
            dtwin.push_back(o.dtwin[d] + doff);
            dtail.push_back(o.dtail[d]);
        }
        circles += o.circles;
        return {noff, doff};
    }
};

/// Arity expected for each node kind; clasps are checked separately.
inline void validate_arities(const WebDiagram& w) {
    for (size_t n = 0; n < w.kind.size(); ++n) {
        const size_t deg = w.rot[n].size();
        switch (w.kind[n]) {
            case NodeKind::Boundary:
                if (deg != 1) throw validation_error("boundary point with degree " + std::to_string(deg));
                break;
            case NodeKind::Sink:
            case NodeKind::Source:
                if (deg != 3) throw validation_error("trivalent vertex with degree " + std::to_string(deg));
                break;
            case NodeKind::Crossing:
                if (deg != 4) throw validation_error("crossing with degree " + std::to_string(deg));
                break;
            case NodeKind::Clasp: {
                const auto [a, b] = w.clasp_ab[n];
                if (deg != 2 * static_cast<size_t>(a + b))
                    throw validation_error("clasp box of color (" + std::to_string(a) + "," + std::to_string(b) +
                                           ") with degree " + std::to_string(deg));
                break;
            }
            case NodeKind::Dead:
                break;
        }
    }
}

inline bool dart_points_in(const WebDiagram& w, int d) { return !w.dtail[static_cast<size_t>(d)]; }

/// Checks direction constraints at every node.
inline void validate_directions(const WebDiagram& w) {
    for (size_t n = 0; n < w.kind.size(); ++n) {
        switch (w.kind[n]) {
            case NodeKind::Sink:
                for (int d : w.rot[n])
                    if (!dart_points_in(w, d)) throw validation_error("sink with an outgoing edge");
                break;
            case NodeKind::Source:
                for (int d : w.rot[n])
                    if (dart_points_in(w, d)) throw validation_error("source with an incoming edge");
                break;
            case NodeKind::Crossing: {
                const auto& r = w.rot[n];
                for (int s = 0; s < 2; ++s) {
                    bool in0 = dart_points_in(w, r[static_cast<size_t>(s)]);
                    bool in2 = dart_points_in(w, r[static_cast<size_t>(s + 2)]);
                    if (in0 == in2) throw validation_error("crossing strand does not pass through");
                }
                break;
            }
            case NodeKind::Clasp: {
                const auto [a, b] = w.clasp_ab[n];
                const int m = a + b;
                const bool rev = w.clasp_reversed[n];
                const auto& r = w.rot[n];
                for (int j = 0; j < 2 * m; ++j) {
                    const bool input_side = j < m;
                    const int idx = input_side ? j : (2 * m - 1 - j); // strand index left-to-right
                    const bool plus = idx < a;
                    // + strands flow input -> output; reversal flips everything
                    bool expect_in = input_side ? plus : !plus;
                    if (rev) expect_in = !expect_in;
                    if (dart_points_in(w, r[static_cast<size_t>(j)]) != expect_in)
                        throw validation_error("clasp slot direction mismatch at slot " + std::to_string(j));
                }
                break;
            }
            default:
                break;
        }
        for (int d : w.rot[n]) {
            if (!w.dart_alive(d) || w.dnode[static_cast<size_t>(d)] != static_cast<int>(n))
                throw validation_error("rotation references a foreign or dead dart");
            int t = w.dtwin[static_cast<size_t>(d)];
            if (t < 0 || !w.dart_alive(t) || w.dtwin[static_cast<size_t>(t)] != d)
                throw validation_error("broken twin involution");
            if (w.dtail[static_cast<size_t>(d)] == w.dtail[static_cast<size_t>(t)])
                throw validation_error("edge with two tails or two heads");
        }
    }
}

/// Planarity check: every connected component, with the disk boundary closed
/// up by virtual arcs between consecutive boundary points, must satisfy the
/// sphere Euler relation V - E + F = 2.
inline void validate_planarity(const WebDiagram& w) {
    // Build an augmented copy: boundary points joined in a cycle.
    WebDiagram g = w;
    const auto& bd = w.boundary;
    const int m = static_cast<int>(bd.size());
    if (m >= 2) {
        for (int i = 0; i < m; ++i) {
            int u = bd[static_cast<size_t>(i)];
            int v = bd[static_cast<size_t>((i + 1) % m)];
            g.add_edge(u, v); // virtual arc; its direction never enters the check
        }
        // rotation at each boundary node: [arc_to_next, real, arc_to_prev] (CCW);
        // the arc toward the next point is the one whose dart here is a tail
        for (int i = 0; i < m; ++i) {
            int u = bd[static_cast<size_t>(i)];
            auto& r = g.rot[static_cast<size_t>(u)];
            if (r.size() != 3) throw validation_error("boundary point with extra incident edges");
            int to_next = g.dtail[static_cast<size_t>(r[1])] ? r[1] : r[2];
            int from_prev = g.dtail[static_cast<size_t>(r[1])] ? r[2] : r[1];
            std::vector<int> fixed = {to_next, r[0], from_prev};
            r = fixed;
        }
    }
    // Component decomposition over live darts.
    const int D = static_cast<int>(g.dnode.size());
    std::vector<int> comp(D, -1);
    int ncomp = 0;
    for (int d0 = 0; d0 < D; ++d0) {
        if (!g.dart_alive(d0) || comp[static_cast<size_t>(d0)] >= 0) continue;
        std::vector<int> stack = {d0};
        comp[static_cast<size_t>(d0)] = ncomp;
        while (!stack.empty()) {
            int d = stack.back();
            stack.pop_back();
            int t = g.dtwin[static_cast<size_t>(d)];
            int r = g.rot_next(d);
            for (int x : {t, r})
                if (comp[static_cast<size_t>(x)] < 0) {
                    comp[static_cast<size_t>(x)] = ncomp;
                    stack.push_back(x);
                }
        }
        ++ncomp;
    }
    // V, E, F per component.
    std::vector<long long> V(static_cast<size_t>(ncomp), 0), E(static_cast<size_t>(ncomp), 0),
        F(static_cast<size_t>(ncomp), 0);
    for (size_t n = 0; n < g.kind.size(); ++n) {
        if (g.kind[n] == NodeKind::Dead) continue;
        if (g.rot[n].empty()) {
            if (w.kind[n] != NodeKind::Dead) throw validation_error("isolated node");
            continue;
        }
        ++V[static_cast<size_t>(comp[static_cast<size_t>(g.rot[n][0])])];
    }
    for (int d = 0; d < D; ++d)
        if (g.dart_alive(d) && d < g.dtwin[static_cast<size_t>(d)]) ++E[static_cast<size_t>(comp[static_cast<size_t>(d)])];
    std::vector<char> seen(static_cast<size_t>(D), 0);
    for (int d0 = 0; d0 < D; ++d0) {
        if (!g.dart_alive(d0) || seen[static_cast<size_t>(d0)]) continue;
        int d = d0;
        do {
            seen[static_cast<size_t>(d)] = 1;
            d = g.face_next(d);
        } while (d != d0);
        ++F[static_cast<size_t>(comp[static_cast<size_t>(d0)])];
    }
    for (int c = 0; c < ncomp; ++c) {
        if (V[static_cast<size_t>(c)] - E[static_cast<size_t>(c)] + F[static_cast<size_t>(c)] != 2)
            throw validation_error("rotation system is not planar (component Euler characteristic " +
                                   std::to_string(V[static_cast<size_t>(c)] - E[static_cast<size_t>(c)] +
                                                  F[static_cast<size_t>(c)]) +
                                   ")");
    }
}

/// Full structural validation of a diagram.
inline void validate(const WebDiagram& w) {
    for (int b : w.boundary)
        if (w.kind[static_cast<size_t>(b)] != NodeKind::Boundary)
            throw validation_error("boundary list names a non-boundary node");
    std::size_t nb = 0;
    for (auto k : w.kind)
        if (k == NodeKind::Boundary) ++nb;
    if (nb != w.boundary.size()) throw validation_error("boundary list does not cover all boundary points");
    if (w.bottom_count < 0 || w.bottom_count > static_cast<int>(w.boundary.size()))
        throw validation_error("invalid bottom count");
    validate_arities(w);
    validate_directions(w);
    validate_planarity(w);
}

/// Canonical key of a diagram: equal keys iff the diagrams are isomorphic as
/// boundary-labeled embedded directed graphs (including circle counts).
/// Open diagrams are anchored at their boundary sequence; closed diagrams
/// minimize over all root darts, per connected component.
inline std::string canonical_key(const WebDiagram& w) {
    // Encodes one component from a root dart; node ids and entry darts may be
    // shared across calls so that several anchors of one component agree.
    auto encode_from = [&](int root_dart, std::vector<char>& used, std::vector<int>& node_id,
                           std::vector<int>& entry, int& next_id) {
        std::string out;
        std::vector<int> order;
        auto visit = [&](int dart) {
            int n = w.dnode[static_cast<size_t>(dart)];
            node_id[static_cast<size_t>(n)] = next_id++;
            entry[static_cast<size_t>(n)] = dart;
            order.push_back(n);
        };
        visit(root_dart);
        size_t qi = 0;
        while (qi < order.size()) {
            int n = order[qi++];
            const auto& r = w.rot[static_cast<size_t>(n)];
            const int deg = static_cast<int>(r.size());
            int e = w.slot_of(entry[static_cast<size_t>(n)]);
            out += 'N';
            switch (w.kind[static_cast<size_t>(n)]) {
                case NodeKind::Boundary: out += 'B'; break;
                case NodeKind::Sink: out += 'K'; break;
                case NodeKind::Source: out += 'S'; break;
                case NodeKind::Crossing: {
                    out += 'X';
                    // over flag relative to the entry slot's strand
                    bool entry_over = (e % 2) == w.over_parity[static_cast<size_t>(n)];
                    out += entry_over ? 'o' : 'u';
                    break;
                }
                case NodeKind::Clasp: {
                    out += 'C';
                    auto [a, b] = w.clasp_ab[static_cast<size_t>(n)];
                    out += std::to_string(a) + "," + std::to_string(b) + ",";
                    out += w.clasp_reversed[static_cast<size_t>(n)] ? 'r' : 'f';
                    out += std::to_string(e); // clasp slots are not interchangeable
                    break;
                }
                case NodeKind::Dead: throw error("internal: dead node in canonical key");
            }
            for (int i = 0; i < deg; ++i) {
                int d = r[static_cast<size_t>((e + i) % deg)];
                used[static_cast<size_t>(d)] = 1;
                out += w.dtail[static_cast<size_t>(d)] ? '>' : '<';
                int t = w.dtwin[static_cast<size_t>(d)];
                int tn = w.dnode[static_cast<size_t>(t)];
                if (node_id[static_cast<size_t>(tn)] < 0) {
                    out += '*';
                    visit(t);
                } else {
                    const auto& rt = w.rot[static_cast<size_t>(tn)];
                    int toff = (w.slot_of(t) - w.slot_of(entry[static_cast<size_t>(tn)]) +
                                static_cast<int>(rt.size())) %
                               static_cast<int>(rt.size());
                    out += '(' + std::to_string(node_id[static_cast<size_t>(tn)]) + ':' + std::to_string(toff) + ')';
                }
            }
        }
        return out;
    };

    std::vector<char> used(w.dnode.size(), 0);
    std::string key;
    // boundary-anchored part: shared ids so repeat anchors locate themselves
    {
        std::vector<int> node_id(w.kind.size(), -1), entry(w.kind.size(), -1);
        int next_id = 0;
        for (int i = 0; i < static_cast<int>(w.boundary.size()); ++i) {
            int b = w.boundary[static_cast<size_t>(i)];
            const auto& r = w.rot[static_cast<size_t>(b)];
            if (r.empty()) throw error("internal: boundary point without dart");
            key += "|b" + std::to_string(i);
            if (node_id[static_cast<size_t>(b)] >= 0) {
                key += "=" + std::to_string(node_id[static_cast<size_t>(b)]);
            } else {
                key += encode_from(r[0], used, node_id, entry, next_id);
            }
        }
    }
    // remaining closed components: canonical minimum over root darts, sorted
    std::vector<std::string> comps;
    std::vector<char> claimed(w.dnode.size(), 0);
    for (int d0 = 0; d0 < static_cast<int>(w.dnode.size()); ++d0) {
        if (!w.dart_alive(d0) || used[static_cast<size_t>(d0)] || claimed[static_cast<size_t>(d0)]) continue;
        // gather the component's darts
        std::vector<int> darts;
        {
            std::vector<int> stack = {d0};
            claimed[static_cast<size_t>(d0)] = 1;
            while (!stack.empty()) {
                int d = stack.back();
                stack.pop_back();
                darts.push_back(d);
                for (int x : {w.dtwin[static_cast<size_t>(d)], w.rot_next(d)})
                    if (!claimed[static_cast<size_t>(x)]) {
                        claimed[static_cast<size_t>(x)] = 1;
                        stack.push_back(x);
                    }
            }
        }
        std::string best;
        for (int d : darts) {
            std::vector<char> tmp(w.dnode.size(), 0);
            std::vector<int> node_id(w.kind.size(), -1), entry(w.kind.size(), -1);
            int next_id = 0;
            std::string s = encode_from(d, tmp, node_id, entry, next_id);
            if (best.empty() || s < best) best = s;
        }
        for (int d : darts) used[static_cast<size_t>(d)] = 1;
        comps.push_back(std::move(best));
    }
    std::sort(comps.begin(), comps.end());
    for (auto& c : comps) key += "|c" + c;
    key += "|O" + std::to_string(w.circles);
    return key;
}

} // namespace a2skein
