#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <a2skein/qlaurent.hpp>

#include <random>

using namespace a2skein;

namespace {

// Independent long-division oracle working in ascending order on dense
// coefficient arrays; returns false when the division is not exact.
bool long_divide(const QLaurent& a, const QLaurent& b, QLaurent& q) {
    if (b.is_zero()) return false;
    if (a.is_zero()) {
        q = QLaurent{};
        return true;
    }
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

QLaurent random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), expd(-9, 9), coeffd(-5, 5);
    QLaurent p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) p.add_term(expd(rng), coeffd(rng));
    return p;
}

QLaurent bracket2() {
    QLaurent p;
    p.add_term(3, 1);
    p.add_term(-3, 1);
    return p; // [2] = q^{1/2} + q^{-1/2}
}

QLaurent bracket(int n) {
    QLaurent p;
    for (int i = 0; i < n; ++i) p.add_term(3 * (n - 1) - 6 * i, 1);
    return p;
}

} // namespace

TEST_CASE("monomials and cancellation") {
    CHECK(qpow(6) == QLaurent::q_int_power(1));
    CHECK(qpow(0) == QLaurent(1));
    CHECK(qpow(-3).to_string() == "q^(-1/2)");
    CHECK((qpow(1) + (-qpow(1))).is_zero());
    CHECK((qpow(1) - qpow(1)).is_zero());
}

TEST_CASE("bracket square expands") {
    // [2]^2 = q + 2 + q^{-1}
    QLaurent sq = bracket2() * bracket2();
    QLaurent expect;
    expect.add_term(6, 1);
    expect.add_term(0, 2);
    expect.add_term(-6, 1);
    CHECK(sq == expect);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(12345);
    for (int iter = 0; iter < 300; ++iter) {
        QLaurent a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a * QLaurent(1) == a);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("exact division agrees with the long-division oracle") {
    std::mt19937 rng(777);
    for (int iter = 0; iter < 200; ++iter) {
        QLaurent a = random_poly(rng), b = random_poly(rng);
        if (b.is_zero()) continue;
        QLaurent prod = a * b, q1, q2;
        CHECK(QLaurent::div_exact(prod, b, q1));
        CHECK(long_divide(prod, b, q2));
        CHECK(q1 == a);
        CHECK(q2 == a);
    }
}

TEST_CASE("rational canonical form") {
    // [4]/[2] reduces to q + q^{-1} with denominator 1
    QRational r(bracket(4), bracket(2));
    CHECK(r.is_laurent());
    QLaurent expect;
    expect.add_term(6, 1);
    expect.add_term(-6, 1);
    CHECK(r.as_laurent() == expect);
    // the oracle agrees
    QLaurent q;
    CHECK(long_divide(bracket(4), bracket(2), q));
    CHECK(q == expect);
    CHECK(q * bracket(2) == bracket(4));

    // [3]/[2] does not reduce; cross-multiplied identity must hold
    QRational s(bracket(3), bracket(2));
    CHECK_FALSE(s.is_laurent());
    CHECK(s.num() * bracket(2) == s.den() * bracket(3));
    CHECK(s.den().min_exp() == 0);
    CHECK(s.den().terms().begin()->second > 0);
    CHECK_THROWS_AS(s.as_laurent(), denominator_not_cleared);
}

TEST_CASE("rational field axioms") {
    std::mt19937 rng(999);
    for (int iter = 0; iter < 80; ++iter) {
        QLaurent a = random_poly(rng), b = random_poly(rng);
        if (a.is_zero() || b.is_zero()) continue;
        QRational x(a, b);
        CHECK((x + (-x)).is_zero());
        if (!x.is_zero()) {
            QRational inv = QRational(1) / x;
            CHECK(x * inv == QRational(1));
        }
    }
    CHECK_THROWS_AS(QRational(1) / QRational(0), division_by_zero);
    CHECK_THROWS_AS(QRational(QLaurent(1), QLaurent(0)), division_by_zero);
}

TEST_CASE("canonicalization is idempotent") {
    std::mt19937 rng(4242);
    for (int iter = 0; iter < 80; ++iter) {
        QLaurent a = random_poly(rng), b = random_poly(rng);
        if (b.is_zero()) continue;
        QRational x(a, b);
        QRational y(x.num(), x.den());
        CHECK(x == y);
    }
}

TEST_CASE("series truncation of geometric series") {
    QLaurent one_minus_q = QLaurent(1) - QLaurent::q_int_power(1);
    QRational g(QLaurent(1), one_minus_q);
    QLaurent s = series_truncate(g, 3);
    QLaurent expect;
    for (int k = 0; k <= 3; ++k) expect.add_term(6 * k, 1);
    CHECK(s == expect);
}

TEST_CASE("series truncation of a polynomial is itself") {
    QLaurent p;
    p.add_term(-6, 2);
    p.add_term(12, 5);
    CHECK(series_truncate(QRational(p), 2) == p);
    CHECK(series_truncate(QRational(p), 1) == QLaurent::q_int_power(-1, 2));
}

TEST_CASE("series truncation of 1/((1-q)(1-q^2))") {
    // oracle: multiply two truncated geometric series
    const int N = 4;
    QLaurent g1, g2;
    for (int k = 0; k * 1 <= N; ++k) g1.add_term(6 * k, 1);
    for (int k = 0; 2 * k <= N; ++k) g2.add_term(12 * k, 1);
    QLaurent prod = g1 * g2, oracle;
    for (auto& [e, c] : prod.terms())
        if (e <= 6 * N) oracle.add_term(e, c);

    QLaurent den = (QLaurent(1) - QLaurent::q_int_power(1)) * (QLaurent(1) - QLaurent::q_int_power(2));
    QLaurent s = series_truncate(QRational(QLaurent(1), den), N);
    CHECK(s == oracle);

    // frozen expected value: 1 + q + 2q^2 + 2q^3 + 3q^4
    QLaurent expect;
    expect.add_term(0, 1);
    expect.add_term(6, 1);
    expect.add_term(12, 2);
    expect.add_term(18, 2);
    expect.add_term(24, 3);
    CHECK(s == expect);
}

TEST_CASE("series truncation refuses non-unit denominators") {
    QLaurent den = QLaurent(2) - QLaurent::q_int_power(1);
    CHECK_THROWS_AS(series_truncate(QRational(QLaurent(1), den), 3), non_unit_denominator);
}

TEST_CASE("truncated multiplicativity") {
    std::mt19937 rng(31337);
    for (int iter = 0; iter < 60; ++iter) {
        // polynomials with non-negative valuation
        QLaurent a, b;
        std::uniform_int_distribution<int> expd(0, 5), coeffd(-3, 3), nd(1, 4);
        for (int i = nd(rng); i > 0; --i) a.add_term(6 * expd(rng), coeffd(rng));
        for (int i = nd(rng); i > 0; --i) b.add_term(6 * expd(rng), coeffd(rng));
        const int N = 4;
        QLaurent lhs = series_truncate(QRational(a * b), N);
        QLaurent prod = series_truncate(QRational(a), N) * series_truncate(QRational(b), N);
        QLaurent rhs;
        for (auto& [e, c] : prod.terms())
            if (e <= 6 * N) rhs.add_term(e, c);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("text rendering") {
    QLaurent p;
    p.add_term(2, 1); // q^(1/3)
    CHECK(p.to_string() == "q^(1/3)");
    QLaurent m;
    m.add_term(-3, -2);
    CHECK(m.to_string() == "-2*q^(-1/2)");
    QLaurent z;
    CHECK(z.to_string() == "0");
    QLaurent mix;
    mix.add_term(-6, 1);
    mix.add_term(0, 1);
    mix.add_term(6, 1);
    CHECK(mix.to_string() == "q^(-1) + 1 + q");
    CHECK(QLaurent::q_int_power(2).to_string() == "q^2");
    QLaurent pairs_p;
    pairs_p.add_term(3, -1);
    pairs_p.add_term(-1, 4);
    auto pr = pairs_p.pairs();
    REQUIRE(pr.size() == 2);
    CHECK(pr[0] == std::pair<int, std::int64_t>(-1, 4));
    CHECK(pr[1] == std::pair<int, std::int64_t>(3, -1));
}
