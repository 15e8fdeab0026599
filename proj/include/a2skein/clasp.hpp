#pragma once

/// A2 clasp expansion.  The one-row clasp on m strands follows the white-box
/// recursion (coefficient -[m]/[m+1]); the two-row clasp of color (a,b) is
/// the closed sum over i of
///   (-1)^i ([a;i][b;i]/[a+b+1;i]) (JW_a x JW_b-bar) (id x cupcap_i x id) (JW_a x JW_b-bar)
/// with quantum binomials [n;k].  Expansions are reduced to basis webs and
/// memoized by color.

#include <map>
#include <mutex>

#include "engine.hpp"
#include "pieces.hpp"
#include "qcomb.hpp"
#include "websum.hpp"

namespace a2skein {

inline WebSum ws_tensor(const WebSum& A, const WebSum& B) {
    WebSum out;
    for (auto& [ka, ta] : A.terms())
        for (auto& [kb, tb] : B.terms()) out.add(tensor(ta.diagram, tb.diagram), ta.coeff * tb.coeff);
    return out;
}

inline WebSum ws_compose(const WebSum& A, const WebSum& B) {
    WebSum out;
    for (auto& [ka, ta] : A.terms())
        for (auto& [kb, tb] : B.terms()) out.add(compose(ta.diagram, tb.diagram), ta.coeff * tb.coeff);
    return out;
}

namespace clasp_detail {

// i nested turnback arcs capping the word +^i -^i (no top wires).
inline WebDiagram caps_only(int i) {
    WebDiagram w;
    std::vector<int> bots;
    for (int j = 0; j < 2 * i; ++j) bots.push_back(w.new_node(NodeKind::Boundary));
    for (int j = 0; j < i; ++j) w.add_edge(bots[static_cast<size_t>(j)], bots[static_cast<size_t>(2 * i - 1 - j)]);
    w.boundary = bots;
    w.bottom_count = 2 * i;
    return w;
}

// i nested arcs creating the word +^i -^i above (no bottom wires).
inline WebDiagram cups_only(int i) {
    WebDiagram w;
    std::vector<int> tops;
    for (int j = 0; j < 2 * i; ++j) tops.push_back(w.new_node(NodeKind::Boundary));
    for (int j = 0; j < i; ++j) w.add_edge(tops[static_cast<size_t>(2 * i - 1 - j)], tops[static_cast<size_t>(j)]);
    w.boundary.assign(tops.rbegin(), tops.rend());
    w.bottom_count = 0;
    return w;
}

inline WebSum reduced(const WebSum& s) { return reduce_to_basis(s); }

} // namespace clasp_detail

namespace clasp_detail {

using Memo = std::map<std::pair<int, int>, WebSum>;

inline WebSum reverse_sum(const WebSum& s) {
    WebSum out;
    for (auto& [k, t] : s.terms()) {
        WebDiagram d = t.diagram;
        d.reverse_directions();
        out.add(std::move(d), t.coeff);
    }
    return out;
}

inline const WebSum& memoize(Memo& memo, std::pair<int, int> key, WebSum value) {
    const std::size_t cap = cache_max_entries();
    if (cap != 0 && memo.size() >= cap) memo.clear();
    return memo.emplace(std::move(key), std::move(value)).first->second;
}

// White-box recursion for the clasp on m parallel '+' strands.
inline const WebSum& one_row(int m, Memo& memo) {
    auto it = memo.find({m, 0});
    if (it != memo.end()) return it->second;
    WebSum result;
    if (m == 0) {
        result = WebSum::single(empty_piece());
    } else if (m == 1) {
        result = WebSum::single(id_wires(1));
    } else {
        WebSum prev_wide = ws_tensor(one_row(m - 1, memo), WebSum::single(id_wires(1)));
        WebDiagram em = tensor(id_wires(m - 2), e_piece(true)); // E acts on the last two strands
        WebSum mid = ws_compose(ws_compose(prev_wide, WebSum::single(em)), prev_wide);
        QRational c = QRational(quantum_int(m - 1)) / QRational(quantum_int(m));
        mid.scale(-c);
        result = prev_wide;
        result.add(mid);
        result = reduced(result);
    }
    return memoize(memo, {m, 0}, std::move(result));
}

} // namespace clasp_detail

/// Expansion of the clasp of color (a, b) into a sum of basis webs with
/// 2(a+b) boundary points in clasp slot order.  Memoized by (a, b).
inline WebSum expand_clasp(int a, int b) {
    if (a < 0 || b < 0) throw negative_argument("clasp color must be non-negative");
    static clasp_detail::Memo memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find({a, b});
    if (it != memo.end()) return it->second;

    WebSum result;
    if (b == 0) {
        result = clasp_detail::one_row(a, memo);
    } else if (a == 0) {
        result = clasp_detail::reverse_sum(clasp_detail::one_row(b, memo));
    } else {
        // copy before the second one_row call; memoize may evict entries
        WebSum rows_a = clasp_detail::one_row(a, memo);
        WebSum rows_b = clasp_detail::reverse_sum(clasp_detail::one_row(b, memo));
        WebSum boxes = ws_tensor(rows_a, rows_b);
        for (int i = 0; i <= std::min(a, b); ++i) {
            WebDiagram mid = tensor(tensor(id_wires(a - i, true),
                                           compose(clasp_detail::caps_only(i), clasp_detail::cups_only(i))),
                                    id_wires(b - i, false));
            WebSum term = ws_compose(ws_compose(boxes, WebSum::single(mid)), boxes);
            QRational c = QRational(quantum_binom(a, i)) * QRational(quantum_binom(b, i)) /
                          QRational(quantum_binom(a + b + 1, i));
            if (i % 2 == 1) c = -c;
            term.scale(c);
            result.add(term);
        }
        result = clasp_detail::reduced(result);
    }
    return clasp_detail::memoize(memo, {a, b}, std::move(result));
}

/// Replaces clasp node c of the host by one expansion term.
inline WebDiagram substitute_clasp_term(const WebDiagram& host, int c, const WebDiagram& term_in) {
    const auto [a, b] = host.clasp_ab[static_cast<size_t>(c)];
    const int n2 = 2 * (a + b);
    WebDiagram term = term_in;
    if (host.clasp_reversed[static_cast<size_t>(c)]) term.reverse_directions();
    WebDiagram r = host;
    auto [noff, doff] = r.absorb(term);
    (void)doff;
    const auto slots = r.rot[static_cast<size_t>(c)]; // copy before surgery
    if (static_cast<int>(slots.size()) != n2) throw validation_error("clasp arity mismatch in substitution");
    for (int j = 0; j < n2; ++j) {
        int h = slots[static_cast<size_t>(j)];
        int bnode = term.boundary[static_cast<size_t>(j)] + noff;
        int bd = boundary_dart(r, bnode);
        if (r.dtail[static_cast<size_t>(h)] == r.dtail[static_cast<size_t>(bd)])
            throw validation_error("clasp substitution direction mismatch");
        r.splice(h, bd);
        r.kill_node(bnode);
    }
    r.rot[static_cast<size_t>(c)].clear();
    r.kind[static_cast<size_t>(c)] = NodeKind::Dead;
    return r;
}

/// Streams over all clasp-free diagrams obtained by expanding every clasp
/// box, invoking leaf(diagram, coefficient) for each combination.
template <typename Leaf>
inline void expand_all_clasps(const WebDiagram& w, const QRational& coeff, const Leaf& leaf) {
    int c = -1;
    for (int n = 0; n < static_cast<int>(w.kind.size()); ++n)
        if (w.kind[static_cast<size_t>(n)] == NodeKind::Clasp) {
            c = n;
            break;
        }
    if (c < 0) {
        leaf(w, coeff);
        return;
    }
    const auto [a, b] = w.clasp_ab[static_cast<size_t>(c)];
    const WebSum exp = expand_clasp(a, b);
    for (auto& [k, t] : exp.terms()) {
        WebDiagram next = substitute_clasp_term(w, c, t.diagram);
        expand_all_clasps(next, coeff * t.coeff, leaf);
    }
}

namespace clasp_detail {

/// Accumulates rational scalars grouped by denominator, so that the long
/// streams of leaf contributions stay in cheap polynomial additions.
class ScalarAccumulator {
public:
    void add(const QRational& c) {
        if (c.is_zero()) return;
        acc_[c.den()] += c.num();
    }
    QRational total() const {
        QRational t;
        for (auto& [den, num] : acc_) t += QRational(num, den);
        return t;
    }

private:
    std::map<QLaurent, QLaurent> acc_;
};

} // namespace clasp_detail

/// Exact scalar value of a closed diagram: expands clasps, resolves all
/// crossings, reduces faces, and returns the coefficient of the empty
/// diagram.  Generic-representation path; evaluate_closed (the flat path)
/// computes the same value and is what callers normally use.
inline QRational evaluate_closed_generic(const WebDiagram& w, const FaceChooser& choose = first_face) {
    if (!w.boundary.empty()) throw validation_error("evaluate_closed requires an empty boundary");
    clasp_detail::ScalarAccumulator acc;
    expand_all_clasps(w, QRational(1), [&](const WebDiagram& d0, const QRational& c0) {
        engine_detail::resolve_rec(d0, c0, [&](WebDiagram d1, QRational c1) {
            WebSum basis;
            engine_detail::reduce_rec(std::move(d1), std::move(c1), basis, choose);
            for (auto& [k, t] : basis.terms()) {
                if (!t.diagram.empty_diagram()) throw stuck_diagram{};
                acc.add(t.coeff);
            }
        });
    });
    return acc.total();
}

} // namespace a2skein
