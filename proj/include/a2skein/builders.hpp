#pragma once

/// Constructions used by the twist and invariant layers: clasped cable
/// tangles with full twists, the basis webs the twist expansions land in,
/// spanning families of test closures, torus-link diagrams, stair-step and
/// triangle webs, and the lattice-path interpolating webs for the
/// recurrence check.
///
/// Cable layout is always [t-cable on the left, s-cable on the right].
/// Parallel orientation directs both cables up; antiparallel directs the
/// t-cable down.  Half twists cross the left cable over the right one.

#include "clasp.hpp"
#include "engine.hpp"
#include "engine_fast.hpp"
#include "pieces.hpp"

namespace a2skein {

enum class LinkOrientation { parallel, antiparallel };

namespace build_detail {

inline std::vector<bool> word_concat(const std::vector<bool>& a, const std::vector<bool>& b) {
    std::vector<bool> r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

inline std::vector<bool> uniform_word(int n, bool up) { return std::vector<bool>(static_cast<size_t>(n), up); }

// One cable crossing: the left block of `a` wires (direction left_up) moves
// right past the right block of `b` wires, crossing over when left_over.
inline WebDiagram cable_crossing(int a, int b, bool left_up, bool right_up, bool left_over) {
    std::vector<bool> word = word_concat(uniform_word(a, left_up), uniform_word(b, right_up));
    std::vector<int> owner(word.size()); // 0 = left cable, 1 = right cable
    for (size_t i = 0; i < word.size(); ++i) owner[i] = i < static_cast<size_t>(a) ? 0 : 1;
    WebDiagram acc = wires(word);
    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (size_t i = 0; i + 1 < word.size(); ++i) {
            if (owner[i] == 0 && owner[i + 1] == 1) {
                std::vector<WebDiagram> layer;
                if (i > 0) layer.push_back(wires(std::vector<bool>(word.begin(), word.begin() + static_cast<long>(i))));
                layer.push_back(crossing_piece(word[i], word[i + 1], left_over));
                if (i + 2 < word.size())
                    layer.push_back(wires(std::vector<bool>(word.begin() + static_cast<long>(i) + 2, word.end())));
                acc = compose(acc, tensor_all(layer));
                std::swap(word[i], word[i + 1]);
                std::swap(owner[i], owner[i + 1]);
                progressed = true;
                break;
            }
        }
    }
    return acc;
}

// Moves a block of `l` down-wires through `w` up-wires using H-webs.
// to_right=true: word [-^l, +^w] -> [+^w, -^l]; otherwise the reverse.
inline WebDiagram h_block_swap(int l, int w, bool to_right) {
    std::vector<bool> word = to_right ? word_concat(uniform_word(l, false), uniform_word(w, true))
                                      : word_concat(uniform_word(w, true), uniform_word(l, false));
    WebDiagram acc = wires(word);
    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (size_t i = 0; i + 1 < word.size(); ++i) {
            bool want = to_right ? (!word[i] && word[i + 1]) : (word[i] && !word[i + 1]);
            if (!want) continue;
            std::vector<WebDiagram> layer;
            if (i > 0) layer.push_back(wires(std::vector<bool>(word.begin(), word.begin() + static_cast<long>(i))));
            layer.push_back(to_right ? h_piece_mirror() : h_piece());
            if (i + 2 < word.size())
                layer.push_back(wires(std::vector<bool>(word.begin() + static_cast<long>(i) + 2, word.end())));
            acc = compose(acc, tensor_all(layer));
            std::swap(word[i], word[i + 1]);
            progressed = true;
            break;
        }
    }
    return acc;
}

// Nested arcs closing the word [-^u, +^u] from below.
inline WebDiagram arc_caps(int u) {
    WebDiagram w;
    std::vector<int> bots;
    for (int j = 0; j < 2 * u; ++j) bots.push_back(w.new_node(NodeKind::Boundary));
    for (int j = 0; j < u; ++j) w.add_edge(bots[static_cast<size_t>(2 * u - 1 - j)], bots[static_cast<size_t>(j)]);
    w.boundary = bots;
    w.bottom_count = 2 * u;
    return w;
}

// Nested arcs creating the word [-^u, +^u] from above.
inline WebDiagram arc_cups(int u) {
    WebDiagram w;
    std::vector<int> tops;
    for (int j = 0; j < 2 * u; ++j) tops.push_back(w.new_node(NodeKind::Boundary));
    for (int j = 0; j < u; ++j) w.add_edge(tops[static_cast<size_t>(j)], tops[static_cast<size_t>(2 * u - 1 - j)]);
    w.boundary.assign(tops.rbegin(), tops.rend());
    w.bottom_count = 0;
    return w;
}

} // namespace build_detail

/// The diamond: two triangle webs joined along an n-strand bundle.  As a
/// piece it maps 2n up-wires to 2n up-wires.
inline WebDiagram diamond_piece(int n) {
    if (n == 0) return empty_piece();
    return compose(triangle_piece(n, true, true), triangle_piece(n, false, false));
}

/// Basis web structure (claspless) of the parallel twist expansion:
/// index k with u = d-k strands of each cable routed through the diamond.
inline WebDiagram parallel_basis_structure(int s, int t, int k) {
    const int d = std::min(s, t);
    if (k < 0 || k > d) throw index_out_of_range("basis index out of range");
    const int u = d - k;
    if (u == 0) return wires(build_detail::uniform_word(t + s, true));
    return tensor(tensor(id_wires(t - u), diamond_piece(u)), id_wires(s - u));
}

/// Basis web structure of the anti-parallel twist expansion: u = d-k
/// turnback pairs between the down t-cable and the up s-cable.
inline WebDiagram antiparallel_basis_structure(int s, int t, int k) {
    const int d = std::min(s, t);
    if (k < 0 || k > d) throw index_out_of_range("basis index out of range");
    const int u = d - k;
    std::vector<bool> word = build_detail::word_concat(build_detail::uniform_word(t, false),
                                                       build_detail::uniform_word(s, true));
    if (u == 0) return wires(word);
    WebDiagram low = tensor(tensor(id_wires(t - u, false), build_detail::arc_caps(u)), id_wires(s - u, true));
    WebDiagram high = tensor(tensor(id_wires(t - u, false), build_detail::arc_cups(u)), id_wires(s - u, true));
    return compose(low, high);
}

inline WebDiagram basis_structure(LinkOrientation o, int s, int t, int k) {
    return o == LinkOrientation::parallel ? parallel_basis_structure(s, t, k)
                                          : antiparallel_basis_structure(s, t, k);
}

/// Clasp layer for the two cables: JW(t) on the left cable, JW(s) on the
/// right, with the t-cable reversed in the anti-parallel orientation.
inline WebDiagram cable_clasps(LinkOrientation o, int s, int t) {
    WebDiagram ct = clasp_piece(t, 0, o == LinkOrientation::antiparallel);
    WebDiagram cs = clasp_piece(s, 0, false);
    return tensor(ct, cs);
}

/// Clasped basis web: clasp layer below the k-th basis structure.
inline WebDiagram basis_web(LinkOrientation o, int s, int t, int k) {
    return compose(cable_clasps(o, s, t), basis_structure(o, s, t, k));
}

/// The bare m-full-twist tangle on the two cables (2m cable crossings, no
/// clasps); the word is [t-cable, s-cable] at both ends.
inline WebDiagram twist_tangle_bare(int s, int t, int m, LinkOrientation o) {
    const bool t_up = o == LinkOrientation::parallel;
    std::vector<bool> word = build_detail::word_concat(build_detail::uniform_word(t, t_up),
                                                       build_detail::uniform_word(s, true));
    WebDiagram acc = wires(word);
    int left_w = t, right_w = s;
    bool left_up = t_up, right_up = true;
    for (int half = 0; half < 2 * m; ++half) {
        acc = compose(acc, build_detail::cable_crossing(left_w, right_w, left_up, right_up, true));
        std::swap(left_w, right_w);
        std::swap(left_up, right_up);
    }
    return acc;
}

/// The literal twisted clasped tangle the expansions describe.
inline WebDiagram twist_tangle(int s, int t, int m, LinkOrientation o) {
    return compose(cable_clasps(o, s, t), twist_tangle_bare(s, t, m, o));
}

/// Closure family over bare structures: the twist identities hold between
/// webs clasped at both ends, so the closed diagram is
///   trace( clasps o X o clasps o insert_j )
/// with insert_j the basis structure carrying j turnback pairs.  j = 0 is
/// the plain double closure whose value closure_eval computes.
inline WebDiagram close_with_insert(const WebDiagram& bare, LinkOrientation o, int s, int t, int j) {
    const int d = std::min(s, t);
    if (j < 0 || j > d) throw index_out_of_range("closure index out of range");
    WebDiagram x = compose(cable_clasps(o, s, t), bare);
    x = compose(x, cable_clasps(o, s, t));
    if (j > 0) x = compose(x, basis_structure(o, s, t, d - j));
    return trace_close(x);
}

/// Pairing of a bare two-cable web with the full closure family; entry j is
/// the exact evaluation against the j-turnback clasped closure.
inline std::vector<QRational> closure_pairings(const WebDiagram& bare, LinkOrientation o, int s, int t) {
    const int d = std::min(s, t);
    std::vector<QRational> out;
    for (int j = 0; j <= d; ++j) out.push_back(evaluate_closed(close_with_insert(bare, o, s, t, j)));
    return out;
}

/// The (2,2m) torus link diagram with one-row colored clasped components.
/// Each cable carries one clasp; the tangle closes around the annulus.
inline WebDiagram make_torus_link(LinkOrientation o, int m, int s, int t) {
    if (m < 1) throw negative_argument("torus link requires m >= 1");
    return trace_close(twist_tangle(s, t, m, o));
}

/// Stair-step web: n horizontal strands crossed by an m-strand staircase.
/// Boundary cyclic order: [bottom m, right n, top m (right-to-left),
/// left n (top-to-bottom)].  One boundary edge direction (root_in) fixes
/// every direction.
inline WebDiagram make_stairstep(int n, int m, bool root_in = true) {
    if (n < 1 || m < 1) throw negative_argument("stair-step requires n, m >= 1");
    // single column: vertices a_i (sink), b_i (source) on line i
    auto column = [&]() {
        WebDiagram w;
        std::vector<int> a(static_cast<size_t>(n)), b(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            a[static_cast<size_t>(i)] = w.new_node(NodeKind::Sink);
            b[static_cast<size_t>(i)] = w.new_node(NodeKind::Source);
        }
        std::vector<int> lefts, rights;
        int bottom = w.new_node(NodeKind::Boundary);
        int top = w.new_node(NodeKind::Boundary);
        std::vector<std::pair<int, int>> a_edges(static_cast<size_t>(n)), b_edges(static_cast<size_t>(n));
        // per line: left -> a_i <- M <- b_i -> right; vertical chain upward
        for (int i = 0; i < n; ++i) {
            int lb = w.new_node(NodeKind::Boundary);
            int rb = w.new_node(NodeKind::Boundary);
            lefts.push_back(lb);
            rights.push_back(rb);
            auto eL = w.add_edge(lb, a[static_cast<size_t>(i)]);
            auto eM = w.add_edge(b[static_cast<size_t>(i)], a[static_cast<size_t>(i)]);
            auto eR = w.add_edge(b[static_cast<size_t>(i)], rb);
            a_edges[static_cast<size_t>(i)] = {eL.second, eM.second}; // darts at a_i
            b_edges[static_cast<size_t>(i)] = {eM.first, eR.first};   // darts at b_i
        }
        std::vector<int> va(static_cast<size_t>(n)), vb(static_cast<size_t>(n));
        {
            auto e0 = w.add_edge(bottom, a[0]);
            va[0] = e0.second;
            for (int i = 0; i + 1 < n; ++i) {
                auto e = w.add_edge(b[static_cast<size_t>(i)], a[static_cast<size_t>(i + 1)]);
                vb[static_cast<size_t>(i)] = e.first;
                va[static_cast<size_t>(i + 1)] = e.second;
            }
            auto etop = w.add_edge(b[static_cast<size_t>(n - 1)], top);
            vb[static_cast<size_t>(n - 1)] = etop.first;
        }
        for (int i = 0; i < n; ++i) {
            // a_i: M east (0), L west (180), V south (270) -> CCW [M, L, V]
            w.rot[static_cast<size_t>(a[static_cast<size_t>(i)])] = {a_edges[static_cast<size_t>(i)].second,
                                                                     a_edges[static_cast<size_t>(i)].first,
                                                                     va[static_cast<size_t>(i)]};
            // b_i: R east (0), V north (90), M west (180) -> CCW [R, V, M]
            w.rot[static_cast<size_t>(b[static_cast<size_t>(i)])] = {b_edges[static_cast<size_t>(i)].second,
                                                                     vb[static_cast<size_t>(i)],
                                                                     b_edges[static_cast<size_t>(i)].first};
        }
        std::vector<int> bd;
        bd.push_back(bottom);
        for (int r : rights) bd.push_back(r);
        bd.push_back(top);
        for (auto it = lefts.rbegin(); it != lefts.rend(); ++it) bd.push_back(*it);
        w.boundary = std::move(bd);
        w.bottom_count = 1;
        return w;
    };
    // chain m columns left-to-right by splicing right boundary to left boundary
    WebDiagram acc = column();
    for (int c = 1; c < m; ++c) {
        WebDiagram next = column();
        WebDiagram merged = acc;
        auto [noff, doff] = merged.absorb(next);
        (void)doff;
        // acc boundary: [bottoms(c), rights(n), tops(c, R->L), lefts(n, T->B)]
        const int bc = c; // columns so far
        std::vector<int> acc_rights(merged.boundary.begin() + bc, merged.boundary.begin() + bc + n);
        std::vector<int> next_lefts;
        for (int i = 0; i < n; ++i)
            next_lefts.push_back(next.boundary[static_cast<size_t>(1 + n + 1 + (n - 1 - i))] + noff);
        for (int i = 0; i < n; ++i) {
            int da = boundary_dart(merged, acc_rights[static_cast<size_t>(i)]);
            int db = boundary_dart(merged, next_lefts[static_cast<size_t>(i)]);
            merged.splice(da, db);
            merged.kill_node(acc_rights[static_cast<size_t>(i)]);
            merged.kill_node(next_lefts[static_cast<size_t>(i)]);
        }
        std::vector<int> bd;
        for (int i = 0; i < bc; ++i) bd.push_back(merged.boundary[static_cast<size_t>(i)]); // bottoms
        bd.push_back(next.boundary[0] + noff);                                              // new bottom
        for (int i = 0; i < n; ++i) bd.push_back(next.boundary[static_cast<size_t>(1 + i)] + noff); // rights
        bd.push_back(next.boundary[static_cast<size_t>(1 + n)] + noff);                     // new top
        for (int i = 0; i < bc; ++i)
            bd.push_back(merged.boundary[static_cast<size_t>(bc + n + i)]); // old tops (R->L)
        for (int i = 0; i < n; ++i)
            bd.push_back(merged.boundary[static_cast<size_t>(bc + n + bc + i)]); // lefts (T->B)
        merged.boundary = std::move(bd);
        merged.bottom_count = bc + 1;
        acc = std::move(merged);
    }
    if (!root_in) acc.reverse_directions();
    return acc;
}

/// Triangle web with three n-strand legs (sink form when root_in).
inline WebDiagram make_triangle(int n, bool root_in = true) { return triangle_piece(n, root_in, false); }

/// Lattice-path interpolating webs of the parallel twist recurrence:
/// sigma(k, l) has l strands of each cable absorbed into a pair of triangle
/// webs, k strands bypassing, and a full twist on the remaining bundles.
/// Returned bare (clasps are supplied by the closure machinery).
inline WebDiagram sigma_web(int s, int t, int k, int l) {
    const int d = std::min(s, t);
    const bool d_is_s = s <= t;
    if (l < 0 || k < 0 || k + l > d) throw index_out_of_range("sigma index out of range");
    using namespace build_detail;

    std::vector<bool> word = word_concat(uniform_word(t, true), uniform_word(s, true));
    WebDiagram acc = wires(word);
    if (l > 0) {
        // split l from the inner side of each cable into the sink triangle
        acc = compose(acc, tensor(tensor(id_wires(t - l), triangle_piece(l, true, true)), id_wires(s - l)));
    }
    // wires now: [t-l up, (l down if l>0), s-l up]
    if (d_is_s) {
        const int rest = s - k - l;
        if (l > 0) acc = compose(acc, tensor(id_wires(t - l), h_block_swap(l, s - l, true)));
        // wires: [t-l, s-l, l down]; split s-l = [rest, k]
        if (rest > 0 || t - l > 0) {
            WebDiagram tw = wires(word_concat(uniform_word(t - l, true), uniform_word(rest, true)));
            for (int half = 0; half < 2; ++half) {
                int a = half % 2 == 0 ? t - l : rest;
                int b = half % 2 == 0 ? rest : t - l;
                tw = compose(tw, cable_crossing(a, b, true, true, true));
            }
            acc = compose(acc, tensor(tensor(tw, id_wires(k)), id_wires(l, false)));
        }
        if (l > 0) acc = compose(acc, tensor(id_wires(t - l), h_block_swap(l, s - l, false)));
    } else {
        const int rest = t - k - l;
        if (l > 0) acc = compose(acc, tensor(h_block_swap(l, t - l, false), id_wires(s - l)));
        // wires: [l down, t-l, s-l]; split t-l = [k, rest]
        if (rest > 0 || s - l > 0) {
            WebDiagram tw = wires(word_concat(uniform_word(rest, true), uniform_word(s - l, true)));
            for (int half = 0; half < 2; ++half) {
                int a = half % 2 == 0 ? rest : s - l;
                int b = half % 2 == 0 ? s - l : rest;
                tw = compose(tw, cable_crossing(a, b, true, true, true));
            }
            acc = compose(acc, tensor(tensor(id_wires(l, false), id_wires(k)), tw));
        }
        if (l > 0) acc = compose(acc, tensor(h_block_swap(l, t - l, true), id_wires(s - l)));
    }
    if (l > 0) {
        // wires: [t-l, l down, s-l]; source triangle re-emits the bundles
        acc = compose(acc, tensor(tensor(id_wires(t - l), triangle_piece(l, false, false)), id_wires(s - l)));
    }
    return acc;
}

} // namespace a2skein
