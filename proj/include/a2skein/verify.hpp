#pragma once

/// Verification suites: every closed formula in the library against the
/// brute-force web-reduction engine, plus the engine's own ground truths.
/// The CLI `verify` subcommand and the acceptance harness both run these.

#include <random>

#include "tails.hpp"
#include "twist.hpp"

namespace a2skein {

struct VerifyCase {
    std::string label;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyCase> cases;

    bool all_pass() const {
        for (auto& c : cases)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string label, bool pass, std::string detail = "") {
        cases.push_back({std::move(label), pass, std::move(detail)});
    }
    std::string to_string() const {
        std::ostringstream os;
        for (auto& c : cases) {
            os << (c.pass ? "pass" : "FAIL") << "  " << c.label;
            if (!c.detail.empty()) os << "  (" << c.detail << ")";
            os << "\n";
        }
        return os.str();
    }
};

struct VerifyOptions {
    int max_color = 2;
    int max_twists = 2;
};

/// q-combinatorics identities: Pascal, symmetry, balancing, multinomial
/// chaining; all exact.
inline VerifyReport verify_qcomb() {
    VerifyReport rep{"qcomb", {}};
    bool pascal = true, sym = true, bal = true, chain = true;
    for (int n = 1; n <= 12 && pascal; ++n)
        for (int k = 0; k <= n; ++k)
            if (q_binom(n, k) != q_binom(n - 1, k - 1) + QLaurent::q_int_power(k) * q_binom(n - 1, k))
                pascal = false;
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k) {
            if (q_binom(n, k) != q_binom(n, n - k)) sym = false;
            if (quantum_binom(n, k) != quantum_binom(n, n - k)) sym = false;
            if (quantum_binom(n, k) != QLaurent::q_power(-3 * k * (n - k)) * q_binom(n, k)) bal = false;
        }
    for (int n = 0; n <= 8; ++n)
        for (int a = 0; a <= n; ++a)
            for (int b = 0; a + b <= n; ++b)
                if (q_multinom(n, {a, b, n - a - b}) != q_binom(n, a) * q_binom(n - a, b)) chain = false;
    rep.add("Pascal recurrence (n <= 12)", pascal);
    rep.add("binomial symmetry (n <= 12)", sym);
    rep.add("balancing identity (n <= 12)", bal);
    rep.add("chained multinomials (n <= 8)", chain);
    return rep;
}

namespace verify_detail {

// Word-preserving random ambient layers for closing gadget pairs.
inline WebDiagram random_ambient(const std::vector<bool>& word, int max_crossings, std::mt19937& rng) {
    WebDiagram acc = wires(word);
    int budget = max_crossings;
    std::uniform_int_distribution<int> layers(1, 3);
    int n_layers = layers(rng);
    for (int layer = 0; layer < n_layers; ++layer) {
        if (word.size() < 2) break;
        std::uniform_int_distribution<int> posd(0, static_cast<int>(word.size()) - 2);
        int p = posd(rng);
        bool d0 = word[static_cast<size_t>(p)], d1 = word[static_cast<size_t>(p + 1)];
        WebDiagram piece;
        std::uniform_int_distribution<int> kindd(0, 2);
        int kind = kindd(rng);
        if (kind == 0 && budget >= 2) {
            bool over = kindd(rng) != 0;
            // a double crossing preserves the word
            WebDiagram x1 = crossing_piece(d0, d1, over);
            WebDiagram x2 = crossing_piece(d1, d0, !over);
            piece = compose(x1, x2);
            budget -= 2;
        } else if (d0 && d1) {
            piece = e_piece(true);
        } else if (!d0 && !d1) {
            piece = e_piece(false);
        } else if (d0 && !d1) {
            piece = compose(cap_piece(true), cup_piece(false)); // turnback pair
        } else {
            piece = compose(cap_piece(false), cup_piece(true));
        }
        std::vector<WebDiagram> row;
        if (p > 0) row.push_back(wires(std::vector<bool>(word.begin(), word.begin() + p)));
        row.push_back(piece);
        if (p + 2 < static_cast<int>(word.size()))
            row.push_back(wires(std::vector<bool>(word.begin() + p + 2, word.end())));
        acc = compose(acc, tensor_all(row));
    }
    return acc;
}

inline bool closed_pair_equal(const WebDiagram& g1, const WebDiagram& g2, const WebDiagram& ambient) {
    QRational a = evaluate_closed(trace_close(compose(g1, ambient)));
    QRational b = evaluate_closed(trace_close(compose(g2, ambient)));
    return a == b;
}

inline WebDiagram kink_gadget(bool positive) {
    WebDiagram w;
    int b = w.new_node(NodeKind::Boundary);
    int t = w.new_node(NodeKind::Boundary);
    int x = w.new_node(NodeKind::Crossing);
    auto [din_t, din_h] = w.add_edge(b, x);
    (void)din_t;
    int loop_h = w.new_dart(x, false);
    int loop_t = w.new_dart(x, true);
    w.dtwin[static_cast<size_t>(loop_h)] = loop_t;
    w.dtwin[static_cast<size_t>(loop_t)] = loop_h;
    auto [dout_t, dout_h] = w.add_edge(x, t);
    (void)dout_h;
    w.rot[static_cast<size_t>(x)] = {din_h, loop_h, loop_t, dout_t};
    w.over_parity[static_cast<size_t>(x)] = positive ? 0 : 1;
    w.boundary = {b, t};
    w.bottom_count = 1;
    return w;
}

} // namespace verify_detail

/// Skein ground truth (circle, bigon, square) and the Reidemeister corpus.
inline VerifyReport verify_skein() {
    using namespace verify_detail;
    VerifyReport rep{"skein", {}};
    // ground truths
    {
        WebDiagram circle;
        circle.circles = 1;
        rep.add("closed circle = [3]", evaluate_closed(circle) == QRational(quantum_int(3)));
        WebDiagram theta = trace_close(e_piece(true));
        rep.add("bigon inserts [2] (theta = [2][3])",
                evaluate_closed(theta) == QRational(quantum_int(2) * quantum_int(3)));
        bool ok = true;
        // the two-term square relation on the open square web
        {
            WebDiagram sq;
            int b0 = sq.new_node(NodeKind::Boundary);
            int b1 = sq.new_node(NodeKind::Boundary);
            int b2 = sq.new_node(NodeKind::Boundary);
            int b3 = sq.new_node(NodeKind::Boundary);
            int v0 = sq.new_node(NodeKind::Sink);
            int v1 = sq.new_node(NodeKind::Source);
            int v2 = sq.new_node(NodeKind::Sink);
            int v3 = sq.new_node(NodeKind::Source);
            auto [x0t, x0] = sq.add_edge(b0, v0);
            (void)x0t;
            auto [x1, x1h] = sq.add_edge(v1, b1);
            (void)x1h;
            auto [x2t, x2] = sq.add_edge(b2, v2);
            (void)x2t;
            auto [x3, x3h] = sq.add_edge(v3, b3);
            (void)x3h;
            auto [e01t, e01h] = sq.add_edge(v1, v0);
            auto [e12t, e12h] = sq.add_edge(v1, v2);
            auto [e32t, e32h] = sq.add_edge(v3, v2);
            auto [e30t, e30h] = sq.add_edge(v3, v0);
            sq.rot[static_cast<size_t>(v0)] = {e01h, e30h, x0};
            sq.rot[static_cast<size_t>(v1)] = {x1, e12t, e01t};
            sq.rot[static_cast<size_t>(v2)] = {x2, e32h, e12h};
            sq.rot[static_cast<size_t>(v3)] = {e32t, x3, e30t};
            sq.boundary = {b0, b1, b2, b3};
            sq.bottom_count = 2;
            WebSum r = reduce_to_basis(sq);
            ok = r.size() == 2;
            for (auto& [k, t] : r.terms())
                if (!(t.coeff == QRational(1))) ok = false;
        }
        rep.add("square face = two reconnections, coefficients 1", ok);
    }
    // Reidemeister corpus
    std::mt19937 rng(20260808);
    int corpus = 0;
    auto run_pair = [&](const char* name, const WebDiagram& g1, const WebDiagram& g2,
                        const std::vector<bool>& word, int gadget_crossings, int reps) {
        bool pass = true;
        for (int i = 0; i < reps; ++i) {
            WebDiagram ambient = random_ambient(word, 6 - gadget_crossings, rng);
            if (!closed_pair_equal(g1, g2, ambient)) pass = false;
            ++corpus;
        }
        rep.add(std::string(name) + " on " + std::to_string(reps) + " random closures", pass);
    };
    // R1 (two-crossing curl figure)
    run_pair("R1 double curl", compose(kink_gadget(true), kink_gadget(false)), id_wires(1), {true}, 2, 13);
    // R2 parallel and anti-parallel
    run_pair("R2 parallel", compose(crossing_piece(true, true, true), crossing_piece(true, true, false)),
             id_wires(2), {true, true}, 2, 13);
    run_pair("R2 anti-parallel",
             compose(crossing_piece(true, false, true), crossing_piece(false, true, false)),
             wires({true, false}), {true, false}, 2, 13);
    // R3
    {
        auto s1 = [&](bool over) { return tensor(crossing_piece(true, true, over), id_wires(1)); };
        auto s2 = [&](bool over) { return tensor(id_wires(1), crossing_piece(true, true, over)); };
        WebDiagram lhs = compose(compose(s1(true), s2(true)), s1(true));
        WebDiagram rhs = compose(compose(s2(true), s1(true)), s2(true));
        run_pair("R3", lhs, rhs, {true, true, true}, 3, 13);
    }
    // R4: strand sliding across a trivalent vertex, both over and under
    for (bool over : {true, false}) {
        WebDiagram sideA = compose(tensor(id_wires(1), y_piece(true)), crossing_piece(true, false, over));
        WebDiagram sideB = compose(compose(tensor(crossing_piece(true, true, over), id_wires(1)),
                                           tensor(id_wires(1), crossing_piece(true, true, over))),
                                   tensor(y_piece(true), id_wires(1)));
        // adapter to make the word closable: one fixed crossing back
        WebDiagram adapter = crossing_piece(false, true, true);
        WebDiagram g1 = compose(compose(tensor(id_wires(1), y_split_piece(true)), sideA), adapter);
        WebDiagram g2 = compose(compose(tensor(id_wires(1), y_split_piece(true)), sideB), adapter);
        run_pair(over ? "R4 over" : "R4 under", g1, g2, {true, false}, over ? 2 : 4, 6);
    }
    rep.add("corpus size >= 50", corpus >= 50, std::to_string(corpus) + " closed diagrams");
    return rep;
}

/// Clasp suite: absorption, annihilation, braiding eigenvalues.
inline VerifyReport verify_clasp(const VerifyOptions& opt = {}) {
    using namespace build_detail;
    VerifyReport rep{"clasp", {}};
    // absorption under spanning closures, colors <= 3
    for (int a = 1; a <= 3; ++a) {
        WebDiagram one = clasp_piece(a, 0);
        WebDiagram two = compose(one, clasp_piece(a, 0));
        std::vector<WebDiagram> inserts;
        inserts.push_back(id_wires(a));
        for (int p = 0; p + 2 <= a; ++p)
            inserts.push_back(tensor(tensor(id_wires(p), e_piece(true)), id_wires(a - p - 2)));
        if (a >= 3) {
            inserts.push_back(compose(tensor(e_piece(true), id_wires(1)), tensor(id_wires(1), e_piece(true))));
            inserts.push_back(compose(tensor(id_wires(1), e_piece(true)), tensor(e_piece(true), id_wires(1))));
        }
        bool pass = true;
        for (auto& b : inserts)
            if (evaluate_closed(trace_close(compose(two, b))) != evaluate_closed(trace_close(compose(one, b))))
                pass = false;
        rep.add("absorption for color (" + std::to_string(a) + ",0)", pass);
    }
    // annihilation: trivalent merges and cups
    for (int a = 2; a <= 3; ++a) {
        WebDiagram split = tensor(y_split_piece(true), id_wires(a - 2));
        WebDiagram merge = tensor(y_piece(true), id_wires(a - 2));
        WebDiagram closed = trace_close(compose(compose(split, clasp_piece(a, 0)), merge));
        rep.add("annihilation by trivalent merge, color (" + std::to_string(a) + ",0)",
                evaluate_closed(closed).is_zero());
    }
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
        WebDiagram cup_layer = tensor(tensor(id_wires(a - 1, true), cup_piece(false)), id_wires(b - 1, false));
        WebDiagram cap_layer = tensor(tensor(id_wires(a - 1, true), cap_piece(true)), id_wires(b - 1, false));
        WebDiagram closed = trace_close(compose(compose(cup_layer, clasp_piece(a, b)), cap_layer));
        rep.add("annihilation by cup, color (" + std::to_string(a) + "," + std::to_string(b) + ")",
                evaluate_closed(closed).is_zero());
    }
    // braiding eigenvalues
    const int mc = std::min(opt.max_color, 2);
    for (int m = 1; m <= mc; ++m)
        for (int n = 1; n <= mc; ++n) {
            {
                WebDiagram box = clasp_piece(m + n, 0);
                QRational base = evaluate_closed(trace_close(box));
                bool pass = !base.is_zero();
                for (bool left_over : {true, false}) {
                    WebDiagram chi = cable_crossing(m, n, true, true, left_over);
                    QRational v = evaluate_closed(trace_close(compose(box, chi)));
                    if (v != QRational(qpow(left_over ? 2 * m * n : -2 * m * n)) * base) pass = false;
                }
                rep.add("parallel braiding q^{+-mn/3}, m=" + std::to_string(m) + " n=" + std::to_string(n), pass);
            }
            {
                WebDiagram box = clasp_piece(m, n);
                WebDiagram swap = h_block_swap(n, m, false);
                WebDiagram swap_back = h_block_swap(n, m, true);
                QRational base = evaluate_closed(trace_close(compose(compose(box, swap), swap_back)));
                bool pass = !base.is_zero();
                for (bool up_over : {true, false}) {
                    WebDiagram chi = cable_crossing(m, n, true, false, up_over);
                    QRational v = evaluate_closed(trace_close(compose(compose(box, chi), swap_back)));
                    QLaurent lambda = qpow(up_over ? m * n : -m * n);
                    if ((m * n) % 2 == 1) lambda = -lambda;
                    if (v != QRational(lambda) * base) pass = false;
                }
                rep.add("anti-parallel braiding (-q^{+-1/6})^{mn}, m=" + std::to_string(m) + " n=" +
                            std::to_string(n),
                        pass);
            }
        }
    return rep;
}

/// Twist-form equivalence (turnback vs bypass indexing, m = 1 specialization).
inline VerifyReport verify_twist_forms() {
    VerifyReport rep{"twist-forms", {}};
    bool forms = true, spec1 = true;
    for (int s = 0; s <= 5; ++s)
        for (int t = 0; t <= 5; ++t) {
            TwistForms anti = antiparallel_full(s, t);
            if (anti.l_form.reindexed().entries != anti.k_form.entries) forms = false;
            TwistForms par = parallel_full(s, t);
            if (par.l_form.reindexed().entries != par.k_form.entries) forms = false;
            if (antiparallel_multi(s, t, 1).entries != anti.k_form.entries) spec1 = false;
            if (parallel_multi(s, t, 1).entries != par.k_form.entries) spec1 = false;
        }
    rep.add("turnback and bypass forms agree for s,t <= 5", forms);
    rep.add("m=1 chain sums equal the single-twist forms for s,t <= 5", spec1);
    return rep;
}

/// Twist-vs-oracle: formula-side expansions against brute-force evaluation
/// of the literal twisted clasped tangles under the full closure family.
inline VerifyReport verify_twist_oracle(const VerifyOptions& opt = {}) {
    VerifyReport rep{"twist-oracle", {}};
    for (LinkOrientation o : {LinkOrientation::parallel, LinkOrientation::antiparallel})
        for (int s = 1; s <= opt.max_color; ++s)
            for (int t = 1; t <= opt.max_color; ++t)
                for (int m = 1; m <= opt.max_twists; ++m) {
                    WebDiagram tangle = twist_tangle_bare(s, t, m, o);
                    auto engine = closure_pairings(tangle, o, s, t);
                    TwistExpansion e = twist_expansion(o, s, t, m);
                    bool pass = true;
                    for (int j = 0; j <= std::min(s, t); ++j) {
                        QRational formula;
                        for (auto& [k, c] : e.entries) {
                            WebDiagram closed = close_with_insert(basis_structure(o, s, t, k), o, s, t, j);
                            formula += QRational(c) * evaluate_closed(closed);
                        }
                        if (engine[static_cast<size_t>(j)] != formula) pass = false;
                    }
                    rep.add(std::string(o == LinkOrientation::parallel ? "parallel" : "antiparallel") + " s=" +
                                std::to_string(s) + " t=" + std::to_string(t) + " m=" + std::to_string(m),
                            pass);
                }
    return rep;
}

/// Closure values: closed basis webs against the closed-form scalar.
inline VerifyReport verify_closure(const VerifyOptions& opt = {}) {
    VerifyReport rep{"closure", {}};
    for (int s = 1; s <= opt.max_color; ++s)
        for (int t = 1; t <= opt.max_color; ++t) {
            bool pass = true;
            for (int k = 0; k <= std::min(s, t); ++k) {
                WebDiagram closed = close_with_insert(basis_structure(LinkOrientation::parallel, s, t, k),
                                                      LinkOrientation::parallel, s, t, 0);
                if (evaluate_closed(closed) != closure_eval(s, t, k)) pass = false;
            }
            rep.add("closure values s=" + std::to_string(s) + " t=" + std::to_string(t) + ", all k", pass);
        }
    return rep;
}

/// Torus-link oracle: closed-formula invariant against the evaluated diagram.
inline VerifyReport verify_torus(const VerifyOptions& opt = {}) {
    VerifyReport rep{"torus", {}};
    for (LinkOrientation o : {LinkOrientation::parallel, LinkOrientation::antiparallel})
        for (auto [s, t] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}})
            for (int m = 1; m <= opt.max_twists; ++m) {
                if (std::max(s, t) > opt.max_color) continue;
                ColoredLinkSpec sp{o, m, s, t};
                QRational formula = jones_torus(sp);
                QRational engine = evaluate_closed(build_torus_diagram(sp));
                std::string label = std::string(o == LinkOrientation::parallel ? "parallel" : "antiparallel") +
                                    " (s,t)=(" + std::to_string(s) + "," + std::to_string(t) + ") m=" +
                                    std::to_string(m);
                if (formula == engine) {
                    rep.add(label, true);
                } else {
                    rep.add(label, false,
                            "formula " + formula.to_string() + " vs engine " + engine.to_string());
                }
            }
    return rep;
}

/// Tail stabilization: normalized invariants against the truncated tails.
inline VerifyReport verify_tails(int n_max = 8, int m_max = 2) {
    VerifyReport rep{"tails", {}};
    for (LinkOrientation o : {LinkOrientation::parallel, LinkOrientation::antiparallel})
        for (int m = 1; m <= m_max; ++m) {
            StabilizationReport sr = stabilization_report(o, m, n_max);
            rep.add(std::string(o == LinkOrientation::parallel ? "parallel" : "antiparallel") + " m=" +
                        std::to_string(m) + ", n <= " + std::to_string(n_max),
                    sr.all_pass());
        }
    return rep;
}

/// Lattice commutation condition and the recurrence behind the parallel
/// twist formula, engine-checked.
inline VerifyReport verify_recurrences() {
    VerifyReport rep{"recurrence", {}};
    // qYX condition symbolically for d+delta <= 6
    bool qyx = true;
    for (int s = 0; s <= 3; ++s)
        for (int t = s; t <= 6 - s && qyx; ++t) {
            try {
                lattice_expand(std::min(s, t), parallel_recurrence_fns(s, t));
            } catch (const commutation_violated&) {
                qyx = false;
            }
        }
    rep.add("qYX commutation for d+delta <= 6", qyx);
    for (auto [s, t] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
        RecurrenceReport rr = verify_recurrence(s, t);
        rep.add("recurrence s=" + std::to_string(s) + " t=" + std::to_string(t), rr.all_pass(), rr.note);
    }
    return rep;
}

inline std::vector<VerifyReport> verify_suites(const std::string& suite, const VerifyOptions& opt) {
    std::vector<VerifyReport> out;
    auto want = [&](const char* name) { return suite == "all" || suite == name; };
    if (want("qcomb")) out.push_back(verify_qcomb());
    if (want("skein")) out.push_back(verify_skein());
    if (want("clasp")) out.push_back(verify_clasp(opt));
    if (want("twist")) {
        out.push_back(verify_twist_forms());
        out.push_back(verify_twist_oracle(opt));
        out.push_back(verify_recurrences());
    }
    if (want("torus")) {
        out.push_back(verify_closure(opt));
        out.push_back(verify_torus(opt));
    }
    if (want("tails")) out.push_back(verify_tails());
    return out;
}

} // namespace a2skein
