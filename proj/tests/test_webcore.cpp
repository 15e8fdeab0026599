#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <a2skein/engine_fast.hpp>
#include <a2skein/pieces.hpp>
#include <a2skein/webio.hpp>

#include <random>

using namespace a2skein;

namespace {

WebDiagram circle_diagram(long long n = 1) {
    WebDiagram w;
    w.circles = n;
    return w;
}

QLaurent bracket(int n) { return quantum_int(n); }

QRational evalq(const WebDiagram& w) { return evaluate_closed(w); }

// A curl on a single strand: the strand passes through one crossing whose
// other two ends are joined around the right side.
WebDiagram kink_piece(bool positive) {
    WebDiagram w;
    int b = w.new_node(NodeKind::Boundary);
    int t = w.new_node(NodeKind::Boundary);
    int x = w.new_node(NodeKind::Crossing);
    auto [din_t, din_h] = w.add_edge(b, x); // slot 0 (SW): strand in
    (void)din_t;
    int loop_h = w.new_dart(x, false); // slot 1 (SE): loop returns
    int loop_t = w.new_dart(x, true);  // slot 2 (NE): loop leaves
    w.dtwin[static_cast<size_t>(loop_h)] = loop_t;
    w.dtwin[static_cast<size_t>(loop_t)] = loop_h;
    auto [dout_t, dout_h] = w.add_edge(x, t); // slot 3 (NW): strand out
    (void)dout_h;
    w.rot[static_cast<size_t>(x)] = {din_h, loop_h, loop_t, dout_t};
    w.over_parity[static_cast<size_t>(x)] = positive ? 0 : 1;
    w.boundary = {b, t};
    w.bottom_count = 1;
    return w;
}

// An open square face with four external legs, for the square relation.
WebDiagram open_square() {
    WebDiagram w;
    int b0 = w.new_node(NodeKind::Boundary); // south
    int b1 = w.new_node(NodeKind::Boundary); // east
    int b2 = w.new_node(NodeKind::Boundary); // north
    int b3 = w.new_node(NodeKind::Boundary); // west
    int v0 = w.new_node(NodeKind::Sink);     // S corner
    int v1 = w.new_node(NodeKind::Source);   // E corner
    int v2 = w.new_node(NodeKind::Sink);     // N corner
    int v3 = w.new_node(NodeKind::Source);   // W corner
    auto [x0t, x0] = w.add_edge(b0, v0);
    (void)x0t;
    auto [x1, x1h] = w.add_edge(v1, b1);
    (void)x1h;
    auto [x2t, x2] = w.add_edge(b2, v2);
    (void)x2t;
    auto [x3, x3h] = w.add_edge(v3, b3);
    (void)x3h;
    auto [e01t, e01h] = w.add_edge(v1, v0);
    auto [e12t, e12h] = w.add_edge(v1, v2);
    auto [e32t, e32h] = w.add_edge(v3, v2);
    auto [e30t, e30h] = w.add_edge(v3, v0);
    w.rot[static_cast<size_t>(v0)] = {e01h, e30h, x0};
    w.rot[static_cast<size_t>(v1)] = {x1, e12t, e01t};
    w.rot[static_cast<size_t>(v2)] = {x2, e32h, e12h};
    w.rot[static_cast<size_t>(v3)] = {e32t, x3, e30t};
    w.boundary = {b0, b1, b2, b3};
    w.bottom_count = 2;
    return w;
}

std::string key_of(WebDiagram d) {
    d.compact();
    return canonical_key(d);
}

} // namespace

TEST_CASE("closed circle evaluates to [3]") {
    CHECK(evalq(circle_diagram()) == QRational(bracket(3)));
    CHECK(evalq(circle_diagram(2)) == QRational(bracket(3) * bracket(3)));
}

TEST_CASE("theta web evaluates to [2][3]") {
    WebDiagram theta = trace_close(e_piece(true));
    validate(theta);
    CHECK(evalq(theta) == QRational(bracket(2) * bracket(3)));
}

TEST_CASE("bigon relation: stacked gadgets") {
    WebDiagram ee = trace_close(compose(e_piece(true), e_piece(true)));
    CHECK(evalq(ee) == QRational(bracket(2) * bracket(2) * bracket(3)));
}

TEST_CASE("square relation produces the two reconnections") {
    WebDiagram sq = open_square();
    validate(sq);
    WebSum red = reduce_to_basis(sq);
    REQUIRE(red.size() == 2);
    // expected: the two arc pairings, coefficient 1 each
    WebDiagram armsA; // b0-b1 and b2-b3
    {
        int b0 = armsA.new_node(NodeKind::Boundary);
        int b1 = armsA.new_node(NodeKind::Boundary);
        int b2 = armsA.new_node(NodeKind::Boundary);
        int b3 = armsA.new_node(NodeKind::Boundary);
        armsA.add_edge(b0, b1);
        armsA.add_edge(b2, b3);
        armsA.boundary = {b0, b1, b2, b3};
        armsA.bottom_count = 2;
    }
    WebDiagram armsB; // b1-b2 and b3-b0
    {
        int b0 = armsB.new_node(NodeKind::Boundary);
        int b1 = armsB.new_node(NodeKind::Boundary);
        int b2 = armsB.new_node(NodeKind::Boundary);
        int b3 = armsB.new_node(NodeKind::Boundary);
        armsB.add_edge(b0, b3);
        armsB.add_edge(b2, b1);
        armsB.boundary = {b0, b1, b2, b3};
        armsB.bottom_count = 2;
    }
    const auto& terms = red.terms();
    REQUIRE(terms.count(key_of(armsA)) == 1);
    REQUIRE(terms.count(key_of(armsB)) == 1);
    CHECK(terms.at(key_of(armsA)).coeff == QRational(1));
    CHECK(terms.at(key_of(armsB)).coeff == QRational(1));
}

TEST_CASE("positive kink gives q^{4/3} on a circle") {
    WebDiagram k = trace_close(kink_piece(true));
    validate(k);
    CHECK(evalq(k) == QRational(qpow(8) * bracket(3)));
    WebDiagram kn = trace_close(kink_piece(false));
    CHECK(evalq(kn) == QRational(qpow(-8) * bracket(3)));
}

TEST_CASE("double kink of opposite signs cancels") {
    WebDiagram two = trace_close(compose(kink_piece(true), kink_piece(false)));
    CHECK(evalq(two) == QRational(bracket(3)));
}

TEST_CASE("crossing resolution structure") {
    WebDiagram x = crossing_piece(true, true, true);
    validate(x);
    WebSum s = resolve_crossings(x);
    REQUIRE(s.size() == 2);
    QRational cpar, cgad;
    for (auto& [k, t] : s.terms()) {
        if (t.diagram.has_kind(NodeKind::Sink))
            cgad = t.coeff;
        else
            cpar = t.coeff;
    }
    CHECK(cpar == QRational(qpow(2)));
    CHECK(cgad == QRational(-qpow(-1)));

    WebDiagram plain = id_wires(2);
    WebSum s2 = resolve_crossings(plain);
    REQUIRE(s2.size() == 1);
    CHECK(s2.terms().begin()->second.coeff == QRational(1));
}

TEST_CASE("resolve rejects clasps") {
    WebDiagram c = clasp_piece(2, 0);
    CHECK_THROWS_AS(resolve_crossings(c), clasp_present);
}

TEST_CASE("full twist of two parallel strands") {
    // chi^2 = q^{2/3} id + q^{-5/6}(1-q) E
    WebDiagram chi = crossing_piece(true, true, true);
    WebDiagram twist = compose(chi, chi);
    WebSum red = reduce_to_basis(resolve_crossings(twist));
    REQUIRE(red.size() == 2);
    const auto& terms = red.terms();
    REQUIRE(terms.count(key_of(id_wires(2))) == 1);
    REQUIRE(terms.count(key_of(e_piece(true))) == 1);
    CHECK(terms.at(key_of(id_wires(2))).coeff == QRational(qpow(4)));
    CHECK(terms.at(key_of(e_piece(true))).coeff ==
          QRational(qpow(-5) * (QLaurent(1) - QLaurent::q_int_power(1))));
}

TEST_CASE("Reidemeister 2 on closed diagrams") {
    WebDiagram chip = crossing_piece(true, true, true);
    WebDiagram chim = crossing_piece(true, true, false);
    WebDiagram r2 = compose(chip, chim);
    WebDiagram ambient = e_piece(true);
    CHECK(evalq(trace_close(compose(r2, ambient))) == evalq(trace_close(ambient)));
    CHECK(evalq(trace_close(r2)) == evalq(trace_close(id_wires(2))));
}

TEST_CASE("clasp expansions match the white-box recursion") {
    WebSum jw0 = expand_clasp(0, 0);
    REQUIRE(jw0.size() == 1);
    CHECK(jw0.terms().begin()->second.diagram.empty_diagram());

    WebSum jw1 = expand_clasp(1, 0);
    REQUIRE(jw1.size() == 1);
    CHECK(jw1.terms().count(key_of(id_wires(1))) == 1);

    WebSum jw2 = expand_clasp(2, 0);
    REQUIRE(jw2.size() == 2);
    const auto& terms = jw2.terms();
    REQUIRE(terms.count(key_of(id_wires(2))) == 1);
    REQUIRE(terms.count(key_of(e_piece(true))) == 1);
    CHECK(terms.at(key_of(id_wires(2))).coeff == QRational(1));
    CHECK(terms.at(key_of(e_piece(true))).coeff == -(QRational(quantum_int(1)) / QRational(quantum_int(2))));
}

TEST_CASE("clasped circles give quantum dimensions") {
    for (int n = 0; n <= 3; ++n) {
        WebDiagram c = trace_close(clasp_piece(n, 0));
        QRational v = evalq(c);
        QRational expect = QRational(quantum_int(n + 1) * quantum_int(n + 2)) / QRational(quantum_int(2));
        CHECK(v == expect);
    }
    WebDiagram c11 = trace_close(clasp_piece(1, 1));
    CHECK(evalq(c11).is_laurent());
}

TEST_CASE("reversed clasp circles match") {
    for (int n = 1; n <= 2; ++n) {
        WebDiagram c = trace_close(clasp_piece(n, 0, true));
        QRational expect = QRational(quantum_int(n + 1) * quantum_int(n + 2)) / QRational(quantum_int(2));
        CHECK(evalq(c) == expect);
    }
}

TEST_CASE("confluence under randomized face selection") {
    std::mt19937 seed_rng(2024);
    for (int iter = 0; iter < 100; ++iter) {
        std::mt19937 rng(seed_rng());
        std::uniform_int_distribution<int> nx(1, 6), pos(0, 1), sgn(0, 1);
        WebDiagram tangle = id_wires(3);
        int n = nx(rng);
        for (int i = 0; i < n; ++i) {
            WebDiagram x = crossing_piece(true, true, sgn(rng) == 0);
            WebDiagram layer = pos(rng) == 0 ? tensor(x, id_wires(1)) : tensor(id_wires(1), x);
            tangle = compose(tangle, layer);
        }
        WebDiagram closed = trace_close(tangle);
        QRational base = evaluate_closed(closed);
        CHECK(evaluate_closed_generic(closed) == base);
        std::mt19937 face_rng(seed_rng());
        FaceChooser random_choice = [&face_rng](std::size_t m) {
            return std::uniform_int_distribution<std::size_t>(0, m - 1)(face_rng);
        };
        CHECK(evaluate_closed(closed, random_choice) == base);
        CHECK(evaluate_closed_generic(closed, random_choice) == base);
    }
}

TEST_CASE("validation catches broken diagrams") {
    WebDiagram w;
    int b = w.new_node(NodeKind::Boundary);
    w.boundary = {b};
    CHECK_THROWS_AS(validate(w), validation_error);

    WebDiagram s;
    int u = s.new_node(NodeKind::Sink);
    int b1 = s.new_node(NodeKind::Boundary);
    int b2 = s.new_node(NodeKind::Boundary);
    int b3 = s.new_node(NodeKind::Boundary);
    s.add_edge(b1, u);
    s.add_edge(b2, u);
    s.add_edge(u, b3);
    s.boundary = {b1, b2, b3};
    CHECK_THROWS_AS(validate(s), validation_error);
}

TEST_CASE("pieces validate") {
    validate(id_wires(3));
    validate(e_piece(true));
    validate(e_piece(false));
    validate(h_piece());
    validate(h_piece_mirror());
    validate(crossing_piece(true, true, true));
    validate(crossing_piece(true, false, false));
    validate(clasp_piece(2, 1));
    validate(clasp_piece(2, 1, true));
    for (int n = 1; n <= 3; ++n) {
        validate(triangle_piece(n, true, true));
        validate(triangle_piece(n, true, false));
        validate(triangle_piece(n, false, true));
        validate(triangle_piece(n, false, false));
    }
    validate(trace_close(compose(crossing_piece(true, true, true), crossing_piece(true, true, true))));
}

TEST_CASE("web format round trip and examples") {
    // single closed circle
    WebDiagram circle = parse_web("circles: 1\n");
    CHECK(evaluate_closed(circle) == QRational(quantum_int(3)));

    // the H-web: one source, one sink, connecting bar
    std::string hweb =
        "boundary: p0:+ p1:- p2:- p3:+\n"
        "bottom: 2\n"
        "vertices:\n"
        "  u sink\n"
        "  w source\n"
        "edges:\n"
        "  e0 p0 u\n"
        "  e1 p3 u\n"
        "  e2 w u\n"
        "  e3 w p2\n"
        "  e4 w p1\n"
        "rotation:\n"
        "  u: e2 e1 e0\n"
        "  w: e3 e2 e4\n";
    WebDiagram h = parse_web(hweb);
    validate(h);
    CHECK(h.live_node_count() == 6);
    CHECK(canonical_key(h) == canonical_key([] {
              WebDiagram d = h_piece();
              d.compact();
              return d;
          }()));

    // dangling boundary point: degree mismatch
    CHECK_THROWS_AS(parse_web("boundary: p0:+\n"), validation_error);
    // wrong sign annotation
    CHECK_THROWS_AS(parse_web("boundary: p0:+ p1:+\nedges:\n  e0 p1 p0\n"), validation_error);
    // unknown endpoint
    CHECK_THROWS_AS(parse_web("edges:\n  e0 a b\n"), parse_error);
    // missing rotation
    CHECK_THROWS_AS(
        parse_web("boundary: p0:+ p1:+ p2:+\nvertices:\n  u sink\nedges:\n  e0 p0 u\n  e1 p1 u\n  e2 p2 u\n"),
        parse_error);
    // non-planar rotation data: the theta graph with one rotation flipped
    std::string theta_good =
        "vertices:\n  u sink\n  w source\nedges:\n  e0 w u\n  e1 w u\n  e2 w u\n"
        "rotation:\n  u: e0 e1 e2\n  w: e2 e1 e0\n";
    std::string theta_bad =
        "vertices:\n  u sink\n  w source\nedges:\n  e0 w u\n  e1 w u\n  e2 w u\n"
        "rotation:\n  u: e0 e1 e2\n  w: e0 e1 e2\n";
    WebDiagram tg = parse_web(theta_good);
    CHECK(evaluate_closed(tg) == QRational(quantum_int(2) * quantum_int(3)));
    CHECK_THROWS_AS(parse_web(theta_bad), validation_error);

    // round trip through the writer
    for (WebDiagram d : {h_piece(), e_piece(true), trace_close(clasp_piece(2, 0)),
                         crossing_piece(true, false, true)}) {
        WebDiagram back = parse_web(write_web(d));
        WebDiagram dc = d;
        dc.compact();
        CHECK(canonical_key(back) == canonical_key(dc));
    }
}
