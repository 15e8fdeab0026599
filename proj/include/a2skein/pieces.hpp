#pragma once

/// Elementary open webs and the gluing machinery that assembles them.
///
/// An open diagram doubles as a morphism: its boundary list is
/// [bottom left-to-right, top right-to-left] and `bottom_count` marks the
/// split.  A wire in a bottom word is '+' (true) when the strand is directed
/// up into the diagram, and in a top word when it is directed up out of it;
/// with that convention compose(A, B) stacks B on top of A.

#include <cmath>
#include <vector>

#include "web.hpp"

namespace a2skein {

inline std::vector<int> bottom_nodes(const WebDiagram& w) {
    return {w.boundary.begin(), w.boundary.begin() + w.bottom_count};
}

/// Top boundary nodes in left-to-right order.
inline std::vector<int> top_nodes(const WebDiagram& w) {
    std::vector<int> t(w.boundary.begin() + w.bottom_count, w.boundary.end());
    std::reverse(t.begin(), t.end());
    return t;
}

inline int boundary_dart(const WebDiagram& w, int node) {
    const auto& r = w.rot[static_cast<size_t>(node)];
    if (r.size() != 1) throw validation_error("boundary node without a unique dart");
    return r[0];
}

/// True when the strand at this boundary node is directed away from it
/// (into the diagram).
inline bool boundary_outgoing(const WebDiagram& w, int node) {
    return w.dtail[static_cast<size_t>(boundary_dart(w, node))];
}

/// Wire direction of bottom wire i: true = up (into the diagram).
inline bool bottom_dir(const WebDiagram& w, int i) { return boundary_outgoing(w, bottom_nodes(w)[static_cast<size_t>(i)]); }
/// Wire direction of top wire i: true = up (out of the diagram).
inline bool top_dir(const WebDiagram& w, int i) { return !boundary_outgoing(w, top_nodes(w)[static_cast<size_t>(i)]); }

/// Side-by-side juxtaposition.
inline WebDiagram tensor(const WebDiagram& A, const WebDiagram& B) {
    WebDiagram r = A;
    auto [noff, doff] = r.absorb(B);
    (void)doff;
    std::vector<int> bd;
    for (int i = 0; i < A.bottom_count; ++i) bd.push_back(A.boundary[static_cast<size_t>(i)]);
    for (int i = 0; i < B.bottom_count; ++i) bd.push_back(B.boundary[static_cast<size_t>(i)] + noff);
    for (int i = B.bottom_count; i < static_cast<int>(B.boundary.size()); ++i)
        bd.push_back(B.boundary[static_cast<size_t>(i)] + noff);
    for (int i = A.bottom_count; i < static_cast<int>(A.boundary.size()); ++i)
        bd.push_back(A.boundary[static_cast<size_t>(i)]);
    r.boundary = std::move(bd);
    r.bottom_count = A.bottom_count + B.bottom_count;
    return r;
}

/// Stacks B on top of A, gluing A's top word to B's bottom word.
inline WebDiagram compose(const WebDiagram& A, const WebDiagram& B) {
    auto atop = top_nodes(A);
    auto bbot = bottom_nodes(B);
    if (atop.size() != bbot.size()) throw validation_error("composition arity mismatch");
    WebDiagram r = A;
    auto [noff, doff] = r.absorb(B);
    (void)doff;
    for (size_t i = 0; i < atop.size(); ++i) {
        int na = atop[i];
        int nb = bbot[i] + noff;
        int da = boundary_dart(r, na);
        int db = boundary_dart(r, nb);
        if (r.dtail[static_cast<size_t>(da)] == r.dtail[static_cast<size_t>(db)])
            throw validation_error("composition direction mismatch at wire " + std::to_string(i));
        r.splice(da, db);
        r.kill_node(na);
        r.kill_node(nb);
    }
    std::vector<int> bd;
    for (int i = 0; i < A.bottom_count; ++i) bd.push_back(A.boundary[static_cast<size_t>(i)]);
    for (int i = B.bottom_count; i < static_cast<int>(B.boundary.size()); ++i)
        bd.push_back(B.boundary[static_cast<size_t>(i)] + noff);
    r.boundary = std::move(bd);
    r.bottom_count = A.bottom_count;
    return r;
}

inline WebDiagram compose_all(const std::vector<WebDiagram>& layers) {
    if (layers.empty()) throw error("compose_all of nothing");
    WebDiagram r = layers[0];
    for (size_t i = 1; i < layers.size(); ++i) r = compose(r, layers[i]);
    return r;
}

inline WebDiagram tensor_all(const std::vector<WebDiagram>& ps) {
    if (ps.empty()) {
        WebDiagram e;
        return e;
    }
    WebDiagram r = ps[0];
    for (size_t i = 1; i < ps.size(); ++i) r = tensor(r, ps[i]);
    return r;
}

/// Annular (trace) closure: joins top wire i to bottom wire i around the
/// side of the diagram for every i.  The result is a closed diagram.
inline WebDiagram trace_close(const WebDiagram& X) {
    auto tops = top_nodes(X);
    auto bots = bottom_nodes(X);
    if (tops.size() != bots.size()) throw validation_error("trace closure arity mismatch");
    WebDiagram r = X;
    for (size_t i = 0; i < tops.size(); ++i) {
        int dt = boundary_dart(r, tops[i]);
        int db = boundary_dart(r, bots[i]);
        if (r.dtail[static_cast<size_t>(dt)] == r.dtail[static_cast<size_t>(db)])
            throw validation_error("trace closure direction mismatch at wire " + std::to_string(i));
        r.splice(dt, db);
        r.kill_node(tops[i]);
        r.kill_node(bots[i]);
    }
    r.boundary.clear();
    r.bottom_count = 0;
    return r;
}

/// n parallel wires with the given directions (true = up).
inline WebDiagram wires(const std::vector<bool>& dirs) {
    WebDiagram w;
    std::vector<int> bots, tops;
    for (bool up : dirs) {
        int b = w.new_node(NodeKind::Boundary);
        int t = w.new_node(NodeKind::Boundary);
        if (up)
            w.add_edge(b, t);
        else
            w.add_edge(t, b);
        bots.push_back(b);
        tops.push_back(t);
    }
    for (int b : bots) w.boundary.push_back(b);
    for (auto it = tops.rbegin(); it != tops.rend(); ++it) w.boundary.push_back(*it);
    w.bottom_count = static_cast<int>(dirs.size());
    return w;
}

inline WebDiagram id_wires(int n, bool up = true) { return wires(std::vector<bool>(static_cast<size_t>(n), up)); }

inline WebDiagram empty_piece() { return WebDiagram{}; }

/// A single crossing.  Strand X runs bottom-left to top-right, strand Y
/// bottom-right to top-left; x_up / y_up give their directions along that
/// path and x_over says X is the over strand.
inline WebDiagram crossing_piece(bool x_up, bool y_up, bool x_over) {
    WebDiagram w;
    int b0 = w.new_node(NodeKind::Boundary);
    int b1 = w.new_node(NodeKind::Boundary);
    int t0 = w.new_node(NodeKind::Boundary);
    int t1 = w.new_node(NodeKind::Boundary);
    int x = w.new_node(NodeKind::Crossing);
    // dart creation order fixes rot[x] = [SW, SE, NE, NW] (CCW)
    if (x_up)
        w.add_edge(b0, x);
    else
        w.add_edge(x, b0);
    if (y_up)
        w.add_edge(b1, x);
    else
        w.add_edge(x, b1);
    if (x_up)
        w.add_edge(x, t1);
    else
        w.add_edge(t1, x);
    if (y_up)
        w.add_edge(x, t0);
    else
        w.add_edge(t0, x);
    // reorder: slots so far are [SW, SE, NE, NW] by construction
    w.over_parity[static_cast<size_t>(x)] = x_over ? 0 : 1;
    w.boundary = {b0, b1, t1, t0};
    w.bottom_count = 2;
    return w;
}

/// The double-trivalent gadget: a sink fed by both bottom wires with a bar
/// from a source that feeds both top wires.  up=false reverses everything.
inline WebDiagram e_piece(bool up = true) {
    WebDiagram w;
    int b0 = w.new_node(NodeKind::Boundary);
    int b1 = w.new_node(NodeKind::Boundary);
    int t0 = w.new_node(NodeKind::Boundary);
    int t1 = w.new_node(NodeKind::Boundary);
    int u = w.new_node(NodeKind::Sink);
    int s = w.new_node(NodeKind::Source);
    auto [e0u, e0d] = w.add_edge(b0, u);
    (void)e0u;
    auto [e1u, e1d] = w.add_edge(b1, u);
    (void)e1u;
    auto [bart, barh] = w.add_edge(s, u);
    auto [e2t, e2h] = w.add_edge(s, t0);
    (void)e2h;
    auto [e3t, e3h] = w.add_edge(s, t1);
    (void)e3h;
    w.rot[static_cast<size_t>(u)] = {barh, e0d, e1d};
    w.rot[static_cast<size_t>(s)] = {bart, e3t, e2t};
    w.boundary = {b0, b1, t1, t0};
    w.bottom_count = 2;
    if (!up) w.reverse_directions();
    return w;
}

/// H-web: swaps an adjacent (up, down) wire pair to (down, up).
/// Bottom word [+,-], top word [-,+]; the sink sits on the left.
inline WebDiagram h_piece() {
    WebDiagram w;
    int b0 = w.new_node(NodeKind::Boundary);
    int b1 = w.new_node(NodeKind::Boundary);
    int t0 = w.new_node(NodeKind::Boundary);
    int t1 = w.new_node(NodeKind::Boundary);
    int u = w.new_node(NodeKind::Sink);   // left
    int s = w.new_node(NodeKind::Source); // right
    auto [a0, a0h] = w.add_edge(b0, u);
    (void)a0;
    auto [a1, a1h] = w.add_edge(t0, u);
    (void)a1;
    auto [bart, barh] = w.add_edge(s, u);
    auto [c0t, c0h] = w.add_edge(s, t1);
    (void)c0h;
    auto [c1t, c1h] = w.add_edge(s, b1);
    (void)c1h;
    w.rot[static_cast<size_t>(u)] = {barh, a1h, a0h};
    w.rot[static_cast<size_t>(s)] = {c0t, bart, c1t};
    w.boundary = {b0, b1, t1, t0};
    w.bottom_count = 2;
    return w;
}

/// Mirror H-web: bottom word [-,+], top word [+,-]; the sink on the right.
inline WebDiagram h_piece_mirror() {
    WebDiagram w;
    int b0 = w.new_node(NodeKind::Boundary);
    int b1 = w.new_node(NodeKind::Boundary);
    int t0 = w.new_node(NodeKind::Boundary);
    int t1 = w.new_node(NodeKind::Boundary);
    int u = w.new_node(NodeKind::Sink);   // right
    int s = w.new_node(NodeKind::Source); // left
    auto [a0, a0h] = w.add_edge(b1, u);
    (void)a0;
    auto [a1, a1h] = w.add_edge(t1, u);
    (void)a1;
    auto [bart, barh] = w.add_edge(s, u);
    auto [c0t, c0h] = w.add_edge(s, t0);
    (void)c0h;
    auto [c1t, c1h] = w.add_edge(s, b0);
    (void)c1h;
    w.rot[static_cast<size_t>(u)] = {a1h, barh, a0h};
    w.rot[static_cast<size_t>(s)] = {bart, c0t, c1t};
    w.boundary = {b0, b1, t1, t0};
    w.bottom_count = 2;
    return w;
}

/// Trivalent merge: a sink absorbing two up-wires from below and one
/// down-wire from above (bottom [+,+], top [-]); sink=false gives the
/// source emitting two up-wires and one down-wire (bottom [-], top [+,+]).
inline WebDiagram y_piece(bool sink = true) {
    WebDiagram w;
    int v = w.new_node(NodeKind::Sink);
    int b0 = w.new_node(NodeKind::Boundary);
    int b1 = w.new_node(NodeKind::Boundary);
    int t0 = w.new_node(NodeKind::Boundary);
    auto [e0t, e0h] = w.add_edge(b0, v);
    (void)e0t;
    auto [e1t, e1h] = w.add_edge(b1, v);
    (void)e1t;
    auto [e2t, e2h] = w.add_edge(t0, v);
    (void)e2t;
    // CCW at the vertex: top (90), lower-left (225), lower-right (315)
    w.rot[static_cast<size_t>(v)] = {e2h, e0h, e1h};
    w.boundary = {b0, b1, t0};
    w.bottom_count = 2;
    if (!sink) w.reverse_directions();
    return w;
}

/// Trivalent split: a source emitting two up-wires above and one down-wire
/// below (bottom [-], top [+,+]); sink=true reverses every strand.
inline WebDiagram y_split_piece(bool source = true) {
    WebDiagram w;
    int v = w.new_node(NodeKind::Source);
    int b0 = w.new_node(NodeKind::Boundary);
    int t0 = w.new_node(NodeKind::Boundary);
    int t1 = w.new_node(NodeKind::Boundary);
    auto [e0t, e0h] = w.add_edge(v, b0);
    (void)e0h;
    auto [e1t, e1h] = w.add_edge(v, t0);
    (void)e1h;
    auto [e2t, e2h] = w.add_edge(v, t1);
    (void)e2h;
    // CCW at the vertex: upper-right (45), upper-left (135), bottom (270)
    w.rot[static_cast<size_t>(v)] = {e2t, e1t, e0t};
    w.boundary = {b0, t1, t0};
    w.bottom_count = 1;
    if (!source) w.reverse_directions();
    return w;
}

/// Cap: bottom [+,-] joined by an arc (no top wires).
inline WebDiagram cap_piece(bool plus_left = true) {
    WebDiagram w;
    int b0 = w.new_node(NodeKind::Boundary);
    int b1 = w.new_node(NodeKind::Boundary);
    if (plus_left)
        w.add_edge(b0, b1);
    else
        w.add_edge(b1, b0);
    w.boundary = {b0, b1};
    w.bottom_count = 2;
    return w;
}

/// Cup: top [-,+] created by an arc (no bottom wires).
inline WebDiagram cup_piece(bool minus_left = true) {
    WebDiagram w;
    int t0 = w.new_node(NodeKind::Boundary);
    int t1 = w.new_node(NodeKind::Boundary);
    if (minus_left)
        w.add_edge(t0, t1);
    else
        w.add_edge(t1, t0);
    w.boundary = {t1, t0};
    w.bottom_count = 0;
    return w;
}

/// Clasp box of color (a, b) as an open piece on a+b wires; standard
/// orientation has the input side at the bottom with the a '+' wires on
/// the left.  reversed=true flips every strand.
inline WebDiagram clasp_piece(int a, int b, bool reversed = false) {
    if (a < 0 || b < 0) throw negative_argument("clasp color must be non-negative");
    WebDiagram w;
    const int n = a + b;
    int c = w.new_node(NodeKind::Clasp);
    w.clasp_ab[static_cast<size_t>(c)] = {a, b};
    std::vector<int> bots, tops;
    for (int j = 0; j < n; ++j) {
        int bnode = w.new_node(NodeKind::Boundary);
        bots.push_back(bnode);
        if (j < a)
            w.add_edge(bnode, c); // + strands flow up into the input side
        else
            w.add_edge(c, bnode);
    }
    for (int j = n - 1; j >= 0; --j) {
        int tnode = w.new_node(NodeKind::Boundary);
        tops.push_back(tnode); // created right-to-left
        if (j < a)
            w.add_edge(c, tnode);
        else
            w.add_edge(tnode, c);
    }
    w.boundary = bots;
    for (int t : tops) w.boundary.push_back(t); // already right-to-left
    w.bottom_count = n;
    if (reversed) w.reverse_directions();
    return w;
}

namespace pieces_detail {

struct Pt {
    double x, y;
};

} // namespace pieces_detail

/// The triangle web with three n-strand legs (the honeycomb pattern: the
/// unique basis web joining three one-row colored bundles).  all_in chooses
/// between legs all directed in and all directed out.
///
/// point_down=false wraps it with the single bundle at the bottom and the
/// two others on top; point_down=true puts the two bundles at the bottom.
/// Both arrangements are the same embedded web, rotated half a turn.
inline WebDiagram triangle_piece(int n, bool all_in, bool point_down) {
    if (n < 1) throw negative_argument("triangle requires n >= 1");
    using pieces_detail::Pt;
    WebDiagram w;
    const double s3 = std::sqrt(3.0) / 2.0;

    // sinks S(i,j) for i+j <= n-1 on a triangular lattice, point up
    std::vector<std::vector<int>> sk(static_cast<size_t>(n));
    auto spos = [&](int i, int j) { return Pt{i + j / 2.0, j * s3}; };
    for (int j = 0; j < n; ++j)
        for (int i = 0; i + j <= n - 1; ++i) sk[static_cast<size_t>(j)].push_back(w.new_node(NodeKind::Sink));

    struct Incident {
        int dart;
        double angle;
    };
    std::vector<std::vector<Incident>> inc;
    auto connect = [&](int from, Pt pf, int to, Pt pt) {
        auto [dt, dh] = w.add_edge(from, to);
        inc.resize(w.kind.size());
        double ang = std::atan2(pt.y - pf.y, pt.x - pf.x);
        inc[static_cast<size_t>(from)].push_back({dt, ang});
        inc[static_cast<size_t>(to)].push_back({dh, ang > 0 ? ang - 3.141592653589793 : ang + 3.141592653589793});
    };

    // sources R(i,j) for i+j <= n-2, feeding the three neighbouring sinks
    for (int j = 0; j + 1 <= n - 1; ++j)
        for (int i = 0; i + j <= n - 2; ++i) {
            int r = w.new_node(NodeKind::Source);
            Pt pr{(spos(i, j).x + spos(i + 1, j).x + spos(i, j + 1).x) / 3.0,
                  (spos(i, j).y + spos(i + 1, j).y + spos(i, j + 1).y) / 3.0};
            connect(r, pr, sk[static_cast<size_t>(j)][static_cast<size_t>(i)], spos(i, j));
            connect(r, pr, sk[static_cast<size_t>(j)][static_cast<size_t>(i + 1)], spos(i + 1, j));
            connect(r, pr, sk[static_cast<size_t>(j + 1)][static_cast<size_t>(i)], spos(i, j + 1));
        }

    // legs at the boundary sinks, one per missing source
    struct Leg {
        int bnode;
        int order;
    };
    std::vector<Leg> bottomL, leftL, rightL;
    auto add_leg = [&](int i, int j, Pt toward, std::vector<Leg>& side, int order) {
        int b = w.new_node(NodeKind::Boundary);
        connect(b, toward, sk[static_cast<size_t>(j)][static_cast<size_t>(i)], spos(i, j));
        side.push_back({b, order});
    };
    for (int j = 0; j < n; ++j)
        for (int i = 0; i + j <= n - 1; ++i) {
            Pt p = spos(i, j);
            if (j == 0) add_leg(i, 0, Pt{p.x, p.y - 1.0}, bottomL, i);
            if (i == 0) add_leg(0, j, Pt{p.x - 1.0, p.y + 0.6}, leftL, j);
            if (i + j == n - 1) add_leg(i, j, Pt{p.x + 1.0, p.y + 0.6}, rightL, j);
        }
    auto by_order = [](const Leg& a, const Leg& b) { return a.order < b.order; };
    std::sort(bottomL.begin(), bottomL.end(), by_order);
    std::sort(leftL.begin(), leftL.end(), by_order);
    std::sort(rightL.begin(), rightL.end(), by_order);

    // counterclockwise rotations from the geometric angles
    for (size_t v = 0; v < w.kind.size(); ++v) {
        if (w.kind[v] == NodeKind::Boundary) continue;
        auto& list = inc[v];
        std::sort(list.begin(), list.end(), [](const Incident& a, const Incident& b) { return a.angle < b.angle; });
        std::vector<int> r;
        for (auto& e : list) r.push_back(e.dart);
        w.rot[v] = r;
    }

    // Cyclic boundary, CCW: bottom legs by ascending i, right side by
    // ascending j, left side by descending j.  The two wrappings read this
    // cycle from different starting points.
    std::vector<int> bd;
    if (!point_down) {
        // bottom = single bundle (asc i); top stored R->L = [right asc j, left desc j]
        for (auto& l : bottomL) bd.push_back(l.bnode);
        for (auto& l : rightL) bd.push_back(l.bnode);
        for (auto it = leftL.rbegin(); it != leftL.rend(); ++it) bd.push_back(it->bnode);
        w.bottom_count = n;
    } else {
        // half-turn view: bottom = [right-side asc j, left-side desc j], top stored = bottom side asc i
        for (auto& l : rightL) bd.push_back(l.bnode);
        for (auto it = leftL.rbegin(); it != leftL.rend(); ++it) bd.push_back(it->bnode);
        for (auto& l : bottomL) bd.push_back(l.bnode);
        w.bottom_count = 2 * n;
    }
    w.boundary = std::move(bd);
    if (!all_in) w.reverse_directions();
    return w;
}

} // namespace a2skein
