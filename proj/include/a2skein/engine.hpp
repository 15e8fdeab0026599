#pragma once

/// The rewriting engine: crossing resolution by the A2 skein relation and
/// face reduction to basis webs (circle, bigon, square), plus exact scalar
/// evaluation of closed diagrams.
///
/// Crossing relation, for a crossing whose two incoming strands sit at
/// cyclically adjacent ports P0, P1 (P2 opposite P0, P3 opposite P1):
///   positive (over strand enters at P0):  q^{1/3} A - q^{-1/6} B
///   negative (over strand enters at P1):  q^{-1/3} A - q^{1/6} B
/// where A joins P1->P2 and P0->P3, and B is a source feeding P2, P3 whose
/// bar runs into a sink fed by P0, P1.
///
/// Face relations: circle -> [3], bigon -> [2], square -> two reconnections.

#include <functional>
#include <utility>
#include <vector>

#include "qcomb.hpp"
#include "websum.hpp"

namespace a2skein {

namespace engine_detail {

inline int find_first_node(const WebDiagram& w, NodeKind k) {
    for (int n = 0; n < static_cast<int>(w.kind.size()); ++n)
        if (w.kind[static_cast<size_t>(n)] == k) return n;
    return -1;
}

// Replaces crossing node x by one of its two smoothings, in place.
// Returns the coefficient monomial (exponent in sixths, with sign).
inline QLaurent apply_smoothing(WebDiagram& w, int x, bool trivalent) {
    const auto r = w.rot[static_cast<size_t>(x)]; // copy: we mutate below
    // locate the incoming pair; the two in-ports are cyclically adjacent
    int i0 = -1;
    for (int i = 0; i < 4; ++i) {
        bool in_i = dart_points_in(w, r[static_cast<size_t>(i)]);
        bool in_n = dart_points_in(w, r[static_cast<size_t>((i + 1) % 4)]);
        if (in_i && in_n) {
            i0 = i;
            break;
        }
    }
    if (i0 < 0) throw validation_error("crossing without an adjacent incoming pair");
    const int p0 = r[static_cast<size_t>(i0)];
    const int p1 = r[static_cast<size_t>((i0 + 1) % 4)];
    const int p2 = r[static_cast<size_t>((i0 + 2) % 4)];
    const int p3 = r[static_cast<size_t>((i0 + 3) % 4)];
    const bool positive = (i0 % 2) == w.over_parity[static_cast<size_t>(x)];

    QLaurent coeff;
    if (!trivalent) {
        coeff = qpow(positive ? 2 : -2); // q^{+-1/3}
        w.splice(p1, p2);
        w.splice(p0, p3);
        w.rot[static_cast<size_t>(x)].clear();
        w.kind[static_cast<size_t>(x)] = NodeKind::Dead;
    } else {
        coeff = -qpow(positive ? -1 : 1); // -q^{-+1/6}
        int u = w.new_node(NodeKind::Sink);
        int ww = w.new_node(NodeKind::Source);
        // re-home the four darts; bar runs from the source into the sink
        w.dnode[static_cast<size_t>(p0)] = u;
        w.dnode[static_cast<size_t>(p1)] = u;
        w.dnode[static_cast<size_t>(p2)] = ww;
        w.dnode[static_cast<size_t>(p3)] = ww;
        int bu = w.new_dart(u, false);
        int bw = w.new_dart(ww, true);
        w.dtwin[static_cast<size_t>(bu)] = bw;
        w.dtwin[static_cast<size_t>(bw)] = bu;
        w.rot[static_cast<size_t>(u)] = {bu, p0, p1};
        w.rot[static_cast<size_t>(ww)] = {bw, p2, p3};
        w.rot[static_cast<size_t>(x)].clear();
        w.kind[static_cast<size_t>(x)] = NodeKind::Dead;
    }
    return coeff;
}

struct Face {
    std::vector<int> darts; // face orbit
    bool internal = true;
};

// All faces of a crossingless, claspless diagram.
inline std::vector<Face> enumerate_faces(const WebDiagram& w) {
    std::vector<Face> out;
    std::vector<char> seen(w.dnode.size(), 0);
    for (int d0 = 0; d0 < static_cast<int>(w.dnode.size()); ++d0) {
        if (!w.dart_alive(d0) || seen[static_cast<size_t>(d0)]) continue;
        Face f;
        int d = d0;
        do {
            seen[static_cast<size_t>(d)] = 1;
            f.darts.push_back(d);
            if (w.kind[static_cast<size_t>(w.dnode[static_cast<size_t>(d)])] == NodeKind::Boundary)
                f.internal = false;
            d = w.face_next(d);
        } while (d != d0);
        out.push_back(std::move(f));
    }
    return out;
}

// Reduces one bigon in place (coefficient [2] is applied by the caller).
// The face uses darts {d, rot_prev(d)} at each corner; the third dart is the
// external leg.  A theta configuration ends up splicing a pair of twins,
// which closes a free loop.
inline void reduce_bigon(WebDiagram& w, const Face& f) {
    int d1 = f.darts[0];
    int d2 = f.darts[1];
    int u = w.dnode[static_cast<size_t>(d1)];
    int v = w.dnode[static_cast<size_t>(d2)];
    if (u == v) throw stuck_diagram{};
    auto third = [&](int d) -> int {
        int arrive = w.rot_prev(d);
        int n = w.dnode[static_cast<size_t>(d)];
        for (int x : w.rot[static_cast<size_t>(n)])
            if (x != d && x != arrive) return x;
        throw stuck_diagram{};
    };
    int xu = third(d1);
    int xv = third(d2);
    w.splice(xu, xv);
    w.kill_node(u);
    w.kill_node(v);
}

// The two face edges at a square corner: the orbit dart d departs the corner
// and rot_prev(d) arrives; the external dart is the remaining one.
inline int square_external(const WebDiagram& w, int d) {
    int arrive = w.rot_prev(d);
    int n = w.dnode[static_cast<size_t>(d)];
    for (int x : w.rot[static_cast<size_t>(n)])
        if (x != d && x != arrive) return x;
    throw stuck_diagram{};
}

} // namespace engine_detail

/// Chooses which reducible face to rewrite next; the default picks the first
/// smallest face.  Randomized choosers are used by the confluence tests.
using FaceChooser = std::function<std::size_t(std::size_t n_candidates)>;

inline std::size_t first_face(std::size_t) { return 0; }

namespace engine_detail {

// Fully reduces a crossingless, claspless diagram, accumulating scalar
// coefficients; square relations fork the state.  Results are added to out.
inline void reduce_rec(WebDiagram w, QRational coeff, WebSum& out, const FaceChooser& choose) {
    for (;;) {
        if (w.circles > 0) {
            const QLaurent three = quantum_int(3);
            for (long long i = 0; i < w.circles; ++i) coeff *= QRational(three);
            w.circles = 0;
        }
        auto faces = enumerate_faces(w);
        std::vector<const Face*> bigons, squares;
        for (auto& f : faces) {
            if (!f.internal) continue;
            if (f.darts.size() == 2) bigons.push_back(&f);
            if (f.darts.size() == 4) {
                // skip degenerate 4-walks that revisit a vertex
                int a = w.dnode[static_cast<size_t>(f.darts[0])], b = w.dnode[static_cast<size_t>(f.darts[1])],
                    c = w.dnode[static_cast<size_t>(f.darts[2])], d = w.dnode[static_cast<size_t>(f.darts[3])];
                if (a != b && a != c && a != d && b != c && b != d && c != d) squares.push_back(&f);
            }
        }
        if (!bigons.empty()) {
            const Face* f = bigons[choose(bigons.size()) % bigons.size()];
            reduce_bigon(w, *f);
            coeff *= QRational(quantum_int(2));
            continue;
        }
        if (!squares.empty()) {
            const Face* f = squares[choose(squares.size()) % squares.size()];
            // corners in orbit order; externals before surgery
            std::array<int, 4> ext{};
            for (int i = 0; i < 4; ++i) ext[static_cast<size_t>(i)] = square_external(w, f->darts[static_cast<size_t>(i)]);
            std::array<int, 4> corner{};
            for (int i = 0; i < 4; ++i) corner[static_cast<size_t>(i)] = w.dnode[static_cast<size_t>(f->darts[static_cast<size_t>(i)])];
            WebDiagram w2 = w;
            // smoothing A: pair externals (0,1) and (2,3)
            {
                w.splice(ext[0], ext[1]);
                w.splice(ext[2], ext[3]);
                for (int n : corner) w.kill_node(n);
            }
            // smoothing B: pair externals (1,2) and (3,0)
            {
                w2.splice(ext[1], ext[2]);
                w2.splice(ext[3], ext[0]);
                for (int n : corner) w2.kill_node(n);
            }
            reduce_rec(std::move(w2), coeff, out, choose);
            continue;
        }
        // no reducible face left
        bool closed = w.boundary.empty();
        if (closed && w.live_node_count() != 0) throw stuck_diagram{};
        out.add(std::move(w), std::move(coeff));
        return;
    }
}

// Depth-first crossing resolution; each fully resolved branch is handed on.
template <typename Leaf>
inline void resolve_rec(WebDiagram w, QRational coeff, const Leaf& leaf) {
    int x = find_first_node(w, NodeKind::Crossing);
    if (x < 0) {
        leaf(std::move(w), std::move(coeff));
        return;
    }
    WebDiagram w2 = w;
    QLaurent cA = apply_smoothing(w, x, false);
    QLaurent cB = apply_smoothing(w2, x, true);
    resolve_rec(std::move(w), coeff * QRational(cA), leaf);
    resolve_rec(std::move(w2), coeff * QRational(cB), leaf);
}

} // namespace engine_detail

/// Resolves every crossing by the skein relation.  The result has
/// 2^{#crossings} terms before canonical merging and no crossings.
/// Diagrams containing clasp boxes are rejected.
inline WebSum resolve_crossings(const WebDiagram& w) {
    if (w.has_kind(NodeKind::Clasp)) throw clasp_present{};
    WebSum out;
    engine_detail::resolve_rec(w, QRational(1),
                               [&](WebDiagram d, QRational c) { out.add(std::move(d), std::move(c)); });
    return out;
}

/// Reduces every term of s to basis webs (no internal 0-, 2-, 4-gons),
/// merging like terms.  Terms must be crossing- and clasp-free.
inline WebSum reduce_to_basis(const WebSum& s, const FaceChooser& choose = first_face) {
    WebSum out;
    for (auto& [k, t] : s.terms()) {
        if (t.diagram.has_kind(NodeKind::Clasp)) throw clasp_present{};
        if (t.diagram.has_kind(NodeKind::Crossing))
            throw validation_error("reduce_to_basis requires crossing-free terms");
        engine_detail::reduce_rec(t.diagram, t.coeff, out, choose);
    }
    return out;
}

inline WebSum reduce_to_basis(const WebDiagram& w, const FaceChooser& choose = first_face) {
    return reduce_to_basis(WebSum::single(w), choose);
}

} // namespace a2skein
