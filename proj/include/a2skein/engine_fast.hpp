#pragma once

/// Flat-storage evaluation path for closed, clasp-free diagrams.  Identical
/// results to the generic engine (the confluence and cross-check tests pin
/// this down); the difference is representation only: degree <= 4 nodes in
/// contiguous arrays, branch coefficients tracked as a signed monomial with
/// [2]/[3] exponents, and one Laurent accumulator per clasp combination.

#include <array>

#include "clasp.hpp"

namespace a2skein {

namespace engine_detail {

struct FastDiagram {
    // kind: -1 dead, 0 sink, 1 source, 2 crossing
    std::vector<std::int8_t> kind;
    std::vector<std::int8_t> over;
    std::vector<std::int8_t> deg;
    std::vector<std::array<int, 4>> rot;
    std::vector<int> dnode, dtwin;
    std::vector<std::int8_t> dtail;
    long long circles = 0;

    int slot_of(int d) const {
        const auto& r = rot[static_cast<size_t>(dnode[static_cast<size_t>(d)])];
        for (int i = 0; i < 4; ++i)
            if (r[static_cast<size_t>(i)] == d) return i;
        throw error("internal: dart missing from fast rotation");
    }
    int rot_next(int d) const {
        int n = dnode[static_cast<size_t>(d)];
        int s = slot_of(d);
        return rot[static_cast<size_t>(n)][static_cast<size_t>((s + 1) % deg[static_cast<size_t>(n)])];
    }
    int rot_prev(int d) const {
        int n = dnode[static_cast<size_t>(d)];
        int s = slot_of(d);
        int dg = deg[static_cast<size_t>(n)];
        return rot[static_cast<size_t>(n)][static_cast<size_t>((s + dg - 1) % dg)];
    }
    int face_next(int d) const { return rot_next(dtwin[static_cast<size_t>(d)]); }

    // Returns the surviving edge's darts, or {-1, -1} when a loop closed.
    std::pair<int, int> splice(int a, int b) {
        int fa = dtwin[static_cast<size_t>(a)];
        int fb = dtwin[static_cast<size_t>(b)];
        if (fa == b) {
            ++circles;
            dnode[static_cast<size_t>(a)] = -1;
            dnode[static_cast<size_t>(b)] = -1;
            return {-1, -1};
        }
        dtwin[static_cast<size_t>(fa)] = fb;
        dtwin[static_cast<size_t>(fb)] = fa;
        dnode[static_cast<size_t>(a)] = -1;
        dnode[static_cast<size_t>(b)] = -1;
        return {fa, fb};
    }
    void kill_node(int n) {
        for (int i = 0; i < deg[static_cast<size_t>(n)]; ++i) {
            int d = rot[static_cast<size_t>(n)][static_cast<size_t>(i)];
            if (d >= 0 && dnode[static_cast<size_t>(d)] == n) dnode[static_cast<size_t>(d)] = -1;
        }
        kind[static_cast<size_t>(n)] = -1;
        deg[static_cast<size_t>(n)] = 0;
    }
};

inline FastDiagram to_fast(const WebDiagram& w) {
    FastDiagram f;
    const size_t N = w.kind.size();
    f.kind.assign(N, -1);
    f.over.assign(N, 0);
    f.deg.assign(N, 0);
    f.rot.assign(N, {-1, -1, -1, -1});
    for (size_t n = 0; n < N; ++n) {
        switch (w.kind[n]) {
            case NodeKind::Dead: continue;
            case NodeKind::Sink: f.kind[n] = 0; break;
            case NodeKind::Source: f.kind[n] = 1; break;
            case NodeKind::Crossing:
                f.kind[n] = 2;
                f.over[n] = w.over_parity[n];
                break;
            default: throw validation_error("fast evaluation requires a closed, clasp-free diagram");
        }
        const auto& r = w.rot[n];
        if (r.size() > 4) throw validation_error("fast evaluation node degree exceeds 4");
        f.deg[n] = static_cast<std::int8_t>(r.size());
        for (size_t i = 0; i < r.size(); ++i) f.rot[n][i] = r[i];
    }
    f.dnode = w.dnode;
    f.dtwin = w.dtwin;
    f.dtail = w.dtail;
    f.circles = w.circles;
    return f;
}

// Branch coefficient: sign * v^{exp6} * [2]^n2 * [3]^n3.
struct FastCoeff {
    int exp6 = 0;
    int sign = 1;
    int n2 = 0;
    int n3 = 0;
};

struct FastWorkspace {
    std::vector<char> seen;
    std::vector<int> cand; // starting darts of reducible faces
    std::vector<QLaurent> pow2{QLaurent(1)}, pow3{QLaurent(1)};
    std::map<std::pair<int, int>, QLaurent> prod23;

    const QLaurent& p2(int k) {
        while (static_cast<int>(pow2.size()) <= k) pow2.push_back(pow2.back() * quantum_int(2));
        return pow2[static_cast<size_t>(k)];
    }
    const QLaurent& p3(int k) {
        while (static_cast<int>(pow3.size()) <= k) pow3.push_back(pow3.back() * quantum_int(3));
        return pow3[static_cast<size_t>(k)];
    }
    const QLaurent& bracket_product(int a, int b) {
        auto it = prod23.find({a, b});
        if (it != prod23.end()) return it->second;
        QLaurent v = p2(a) * p3(b);
        return prod23.emplace(std::make_pair(a, b), std::move(v)).first->second;
    }
};

inline void fast_smooth(FastDiagram& f, int x, bool trivalent, FastCoeff& c) {
    const auto r = f.rot[static_cast<size_t>(x)];
    int i0 = -1;
    for (int i = 0; i < 4; ++i) {
        bool in_i = !f.dtail[static_cast<size_t>(r[static_cast<size_t>(i)])];
        bool in_n = !f.dtail[static_cast<size_t>(r[static_cast<size_t>((i + 1) % 4)])];
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
    const bool positive = (i0 % 2) == f.over[static_cast<size_t>(x)];
    if (!trivalent) {
        c.exp6 += positive ? 2 : -2;
        f.splice(p1, p2);
        f.splice(p0, p3);
        f.kind[static_cast<size_t>(x)] = -1;
        f.deg[static_cast<size_t>(x)] = 0;
    } else {
        c.exp6 += positive ? -1 : 1;
        c.sign = -c.sign;
        int u = static_cast<int>(f.kind.size());
        f.kind.push_back(0);
        f.over.push_back(0);
        f.deg.push_back(3);
        f.rot.push_back({-1, -1, -1, -1});
        int s = static_cast<int>(f.kind.size());
        f.kind.push_back(1);
        f.over.push_back(0);
        f.deg.push_back(3);
        f.rot.push_back({-1, -1, -1, -1});
        int bu = static_cast<int>(f.dnode.size());
        f.dnode.push_back(u);
        f.dtwin.push_back(bu + 1);
        f.dtail.push_back(0);
        int bs = static_cast<int>(f.dnode.size());
        f.dnode.push_back(s);
        f.dtwin.push_back(bu);
        f.dtail.push_back(1);
        f.dnode[static_cast<size_t>(p0)] = u;
        f.dnode[static_cast<size_t>(p1)] = u;
        f.dnode[static_cast<size_t>(p2)] = s;
        f.dnode[static_cast<size_t>(p3)] = s;
        f.rot[static_cast<size_t>(u)] = {bu, p0, p1, -1};
        f.rot[static_cast<size_t>(s)] = {bs, p2, p3, -1};
        f.kind[static_cast<size_t>(x)] = -1;
        f.deg[static_cast<size_t>(x)] = 0;
    }
}

// Reduces faces to nothing and accumulates the scalar into out.
inline void fast_reduce(FastDiagram& f, FastCoeff c, FastWorkspace& ws, QLaurent& out, const FaceChooser& choose);

inline void fast_eval_rec(FastDiagram f, FastCoeff c, FastWorkspace& ws, QLaurent& out, const FaceChooser& choose) {
    int x = -1;
    for (int n = 0; n < static_cast<int>(f.kind.size()); ++n)
        if (f.kind[static_cast<size_t>(n)] == 2) {
            x = n;
            break;
        }
    if (x < 0) {
        fast_reduce(f, c, ws, out, choose);
        return;
    }
    FastDiagram f2 = f;
    FastCoeff c2 = c;
    fast_smooth(f, x, false, c);
    fast_smooth(f2, x, true, c2);
    fast_eval_rec(std::move(f), c, ws, out, choose);
    fast_eval_rec(std::move(f2), c2, ws, out, choose);
}

// Classification of the face through a dart: 0 = gone/large/degenerate,
// 2 = clean bigon, 4 = clean square.
inline int face_class(const FastDiagram& f, int d0) {
    if (f.dnode[static_cast<size_t>(d0)] < 0) return 0;
    int d = d0, len = 0;
    std::array<int, 4> nodes{-1, -1, -1, -1};
    do {
        if (len >= 4) return 0;
        int nd = f.dnode[static_cast<size_t>(d)];
        for (int i = 0; i < len; ++i)
            if (nodes[static_cast<size_t>(i)] == nd) return 0;
        nodes[static_cast<size_t>(len)] = nd;
        ++len;
        d = f.face_next(d);
    } while (d != d0);
    return (len == 2 || len == 4) ? len : 0;
}

// Reduces one bigon starting at dart d1, pushing the spliced edge onto the
// dirty worklist.
inline void reduce_one_bigon(FastDiagram& f, int d1, FastCoeff& c, std::vector<int>& dirty) {
    int d2 = f.face_next(d1);
    int u = f.dnode[static_cast<size_t>(d1)];
    int v = f.dnode[static_cast<size_t>(d2)];
    auto third = [&](int d) -> int {
        int arrive = f.rot_prev(d);
        int n = f.dnode[static_cast<size_t>(d)];
        for (int i = 0; i < f.deg[static_cast<size_t>(n)]; ++i) {
            int x = f.rot[static_cast<size_t>(n)][static_cast<size_t>(i)];
            if (x != d && x != arrive) return x;
        }
        throw stuck_diagram{};
    };
    int xu = third(d1), xv = third(d2);
    auto [na, nb] = f.splice(xu, xv);
    f.kill_node(u);
    f.kill_node(v);
    if (na >= 0) {
        dirty.push_back(na);
        dirty.push_back(nb);
    }
    ++c.n2;
}

// Worklist-driven reduction.  New 2- or 4-gons can only appear on faces
// through a freshly spliced edge, so after the initial scan only dirty
// darts need inspection; a final scan certifies nothing was missed.
inline void fast_reduce(FastDiagram& f, FastCoeff c, FastWorkspace& ws, QLaurent& out, const FaceChooser& choose,
                        std::vector<int> bigons, std::vector<int> squares, bool scanned) {
    std::vector<int> dirty;
    for (;;) {
        if (f.circles > 0) {
            c.n3 += static_cast<int>(f.circles);
            f.circles = 0;
        }
        // classify dirty darts
        for (int d : dirty) {
            int cls = face_class(f, d);
            if (cls == 2)
                bigons.push_back(d);
            else if (cls == 4)
                squares.push_back(d);
        }
        dirty.clear();
        // bigons first
        bool reduced_one = false;
        while (!bigons.empty()) {
            std::size_t pick = choose(bigons.size()) % bigons.size();
            int d0 = bigons[pick];
            bigons.erase(bigons.begin() + static_cast<long>(pick));
            if (face_class(f, d0) != 2) continue;
            reduce_one_bigon(f, d0, c, dirty);
            reduced_one = true;
            break; // reclassify dirty darts (and circles) before the next pick
        }
        if (reduced_one) continue;
        // then squares
        int sq = -1;
        while (!squares.empty()) {
            std::size_t pick = choose(squares.size()) % squares.size();
            int d0 = squares[pick];
            squares.erase(squares.begin() + static_cast<long>(pick));
            if (face_class(f, d0) != 4) continue;
            sq = d0;
            break;
        }
        if (sq < 0) {
            if (!scanned) {
                // full scan: initial entry or the final certification pass
                ws.seen.assign(f.dnode.size(), 0);
                bool found = false;
                for (int d0 = 0; d0 < static_cast<int>(f.dnode.size()); ++d0) {
                    if (f.dnode[static_cast<size_t>(d0)] < 0 || ws.seen[static_cast<size_t>(d0)]) continue;
                    int d = d0, len = 0;
                    do {
                        ws.seen[static_cast<size_t>(d)] = 1;
                        ++len;
                        d = f.face_next(d);
                    } while (d != d0 && len <= 5);
                    if (d != d0) continue;
                    int cls = face_class(f, d0);
                    if (cls == 2) {
                        bigons.push_back(d0);
                        found = true;
                    } else if (cls == 4) {
                        squares.push_back(d0);
                        found = true;
                    }
                }
                scanned = true;
                if (found) continue;
            }
            // fully reduced: must be empty
            for (auto k : f.kind)
                if (k >= 0) throw stuck_diagram{};
            const QLaurent& v = ws.bracket_product(c.n2, c.n3);
            for (auto& [e, coef] : v.terms()) out.add_term(e + c.exp6, c.sign * coef);
            return;
        }
        scanned = false; // surgery follows; the final pass must rerun
        // square reduction forks the diagram
        std::array<int, 4> fd{}, ext{}, corner{};
        {
            int d = sq;
            for (int i = 0; i < 4; ++i) {
                fd[static_cast<size_t>(i)] = d;
                corner[static_cast<size_t>(i)] = f.dnode[static_cast<size_t>(d)];
                d = f.face_next(d);
            }
        }
        for (int i = 0; i < 4; ++i) {
            int d = fd[static_cast<size_t>(i)];
            int arrive = f.rot_prev(d);
            int n = corner[static_cast<size_t>(i)];
            int e = -1;
            for (int j = 0; j < f.deg[static_cast<size_t>(n)]; ++j) {
                int x = f.rot[static_cast<size_t>(n)][static_cast<size_t>(j)];
                if (x != d && x != arrive) e = x;
            }
            if (e < 0) throw stuck_diagram{};
            ext[static_cast<size_t>(i)] = e;
        }
        FastDiagram f2 = f;
        std::vector<int> dirty2;
        {
            auto [a1, b1] = f.splice(ext[0], ext[1]);
            auto [a2, b2] = f.splice(ext[2], ext[3]);
            for (int n : corner) f.kill_node(n);
            if (a1 >= 0) {
                dirty.push_back(a1);
                dirty.push_back(b1);
            }
            if (a2 >= 0) {
                dirty.push_back(a2);
                dirty.push_back(b2);
            }
        }
        {
            auto [a1, b1] = f2.splice(ext[1], ext[2]);
            auto [a2, b2] = f2.splice(ext[3], ext[0]);
            for (int n : corner) f2.kill_node(n);
            if (a1 >= 0) {
                dirty2.push_back(a1);
                dirty2.push_back(b1);
            }
            if (a2 >= 0) {
                dirty2.push_back(a2);
                dirty2.push_back(b2);
            }
        }
        std::vector<int> b2list, s2list;
        for (int d : dirty2) {
            int cls = face_class(f2, d);
            if (cls == 2)
                b2list.push_back(d);
            else if (cls == 4)
                s2list.push_back(d);
        }
        fast_reduce(f2, c, ws, out, choose, std::move(b2list), std::move(s2list), false);
        // continue with f in this frame; dirty darts queued above
    }
}

inline void fast_reduce(FastDiagram& f, FastCoeff c, FastWorkspace& ws, QLaurent& out, const FaceChooser& choose) {
    fast_reduce(f, c, ws, out, choose, {}, {}, false);
}

} // namespace engine_detail

/// Exact scalar value of a closed diagram via the flat evaluation path;
/// identical values to evaluate_closed_generic.
inline QRational evaluate_closed(const WebDiagram& w, const FaceChooser& choose = first_face) {
    if (!w.boundary.empty()) throw validation_error("evaluate_closed requires an empty boundary");
    clasp_detail::ScalarAccumulator acc;
    engine_detail::FastWorkspace ws;
    expand_all_clasps(w, QRational(1), [&](const WebDiagram& d0, const QRational& c0) {
        QLaurent sum;
        engine_detail::fast_eval_rec(engine_detail::to_fast(d0), engine_detail::FastCoeff{}, ws, sum, choose);
        if (!sum.is_zero()) acc.add(c0 * QRational(sum));
    });
    return acc.total();
}

} // namespace a2skein
