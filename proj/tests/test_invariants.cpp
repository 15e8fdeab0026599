#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <a2skein/invariants.hpp>

using namespace a2skein;

namespace {

// Long-division oracle for exact quotients, ascending coefficients.
bool long_divide(const QLaurent& a, const QLaurent& b, QLaurent& q) {
    if (b.is_zero() || a.is_zero()) return false;
    const int shift = a.min_exp() - b.min_exp();
    std::vector<long long> da(static_cast<size_t>(a.max_exp() - a.min_exp()) + 1, 0);
    std::vector<long long> db(static_cast<size_t>(b.max_exp() - b.min_exp()) + 1, 0);
    for (auto& [e, c] : a.terms()) da[static_cast<size_t>(e - a.min_exp())] = c;
    for (auto& [e, c] : b.terms()) db[static_cast<size_t>(e - b.min_exp())] = c;
    if (da.size() < db.size()) return false;
    std::vector<long long> quo(da.size() - db.size() + 1, 0);
    for (size_t i = 0; i + db.size() <= da.size(); ++i) {
        if (da[i] % db[0] != 0) return false;
        long long c = da[i] / db[0];
        quo[i] = c;
        for (size_t j = 0; j < db.size(); ++j) da[i + j] -= c * db[j];
    }
    for (auto c : da)
        if (c != 0) return false;
    q = QLaurent{};
    for (size_t i = 0; i < quo.size(); ++i)
        if (quo[i] != 0) q.add_term(static_cast<int>(i) + shift, quo[i]);
    return true;
}

} // namespace

TEST_CASE("quantum dimensions") {
    CHECK(delta(0) == QLaurent(1));
    CHECK(delta(1) == quantum_int(3));
    // frozen: delta(2) = q^2 + q + 2 + q^{-1} + q^{-2}, cross-checked by the
    // long-division oracle on [3][4]/[2]
    QLaurent expect;
    expect.add_term(12, 1);
    expect.add_term(6, 1);
    expect.add_term(0, 2);
    expect.add_term(-6, 1);
    expect.add_term(-12, 1);
    CHECK(delta(2) == expect);
    QLaurent oracle;
    REQUIRE(long_divide(quantum_int(3) * quantum_int(4), quantum_int(2), oracle));
    CHECK(oracle == expect);
    CHECK_THROWS_AS(delta(-1), negative_argument);
}

TEST_CASE("both displayed quantum dimension forms agree") {
    for (int n = 0; n <= 8; ++n) {
        QRational qf = delta_q_form(n);
        CHECK(qf.is_laurent());
        CHECK(qf.as_laurent() == delta(n));
    }
}

TEST_CASE("quantum dimension equals the clasped circle") {
    for (int n = 0; n <= 3; ++n) {
        WebDiagram c = trace_close(clasp_piece(n, 0));
        CHECK(evaluate_closed(c) == QRational(delta(n)));
    }
}

TEST_CASE("closure value specializations") {
    // k = d: [1] Delta(s) Delta(t) / Delta(0) = Delta(s) Delta(t)
    for (int s = 0; s <= 3; ++s)
        for (int t = 0; t <= 3; ++t)
            CHECK(closure_eval(s, t, std::min(s, t)) == QRational(delta(s) * delta(t)));
    // s = t = 1, k = 0: [2][3]
    CHECK(closure_eval(1, 1, 0) == QRational(quantum_int(2) * quantum_int(3)));
    CHECK_THROWS_AS(closure_eval(1, 1, 2), index_out_of_range);
}

TEST_CASE("closure values against the engine") {
    // engine evaluation of the closed basis webs for s,t <= 2, all k
    for (int s = 1; s <= 2; ++s)
        for (int t = 1; t <= 2; ++t)
            for (int k = 0; k <= std::min(s, t); ++k) {
                WebDiagram closed =
                    close_with_insert(basis_structure(LinkOrientation::parallel, s, t, k),
                                      LinkOrientation::parallel, s, t, 0);
                CHECK(evaluate_closed(closed) == closure_eval(s, t, k));
                WebDiagram closed_anti =
                    close_with_insert(basis_structure(LinkOrientation::antiparallel, s, t, k),
                                      LinkOrientation::antiparallel, s, t, 0);
                CHECK(evaluate_closed(closed_anti) == closure_eval_antiparallel(s, t, k));
            }
}

TEST_CASE("unknot component splits off") {
    for (int t = 0; t <= 4; ++t)
        for (int m = 1; m <= 2; ++m) {
            ColoredLinkSpec par{LinkOrientation::parallel, m, 0, t};
            CHECK(jones_torus(par).as_laurent() == delta(t));
            ColoredLinkSpec anti{LinkOrientation::antiparallel, m, 0, t};
            CHECK(jones_torus(anti).as_laurent() == delta(t));
        }
}

TEST_CASE("color symmetry") {
    for (auto o : {LinkOrientation::parallel, LinkOrientation::antiparallel})
        for (int s = 0; s <= 4; ++s)
            for (int t = 0; t <= 4; ++t)
                for (int m = 1; m <= 2; ++m) {
                    ColoredLinkSpec a{o, m, s, t}, b{o, m, t, s};
                    CHECK(jones_torus(a) == jones_torus(b));
                }
}

TEST_CASE("invariants are Laurent") {
    for (auto o : {LinkOrientation::parallel, LinkOrientation::antiparallel})
        for (int s = 1; s <= 3; ++s)
            for (int m = 1; m <= 2; ++m) {
                ColoredLinkSpec sp{o, m, s, s};
                CHECK(jones_torus(sp).is_laurent());
            }
}

TEST_CASE("torus diagram structure") {
    // the closed diagram carries 2m * s * t elementary crossings and two clasps
    for (auto o : {LinkOrientation::parallel, LinkOrientation::antiparallel})
        for (int m = 1; m <= 2; ++m)
            for (int s = 1; s <= 2; ++s)
                for (int t = 1; t <= 2; ++t) {
                    ColoredLinkSpec sp{o, m, s, t};
                    WebDiagram d = build_torus_diagram(sp);
                    validate(d);
                    int crossings = 0, clasps = 0;
                    for (auto k : d.kind) {
                        if (k == NodeKind::Crossing) ++crossings;
                        if (k == NodeKind::Clasp) ++clasps;
                    }
                    CHECK(crossings == 2 * m * s * t);
                    CHECK(clasps == 2);
                    CHECK(d.boundary.empty());
                }
    CHECK_THROWS_AS(build_torus_diagram(ColoredLinkSpec{LinkOrientation::parallel, 0, 1, 1}),
                    negative_argument);
}

TEST_CASE("torus oracle: Hopf links") {
    for (auto o : {LinkOrientation::parallel, LinkOrientation::antiparallel}) {
        ColoredLinkSpec sp{o, 1, 1, 1};
        CHECK(jones_torus(sp) == evaluate_closed(build_torus_diagram(sp)));
    }
}

TEST_CASE("torus oracle: higher colors at one full twist") {
    for (auto o : {LinkOrientation::parallel, LinkOrientation::antiparallel})
        for (auto [s, t] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}}) {
            ColoredLinkSpec sp{o, 1, s, t};
            CHECK(jones_torus(sp) == evaluate_closed(build_torus_diagram(sp)));
        }
}
