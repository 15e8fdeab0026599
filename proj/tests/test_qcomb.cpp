#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <a2skein/qcomb.hpp>

#include <thread>

using namespace a2skein;

namespace {

// Independent oracle for the Gaussian binomial: sum of q^{|lambda|} over
// partitions lambda fitting in a k x (n-k) box.
QLaurent gauss_binom_by_partitions(int n, int k) {
    if (k < 0 || k > n) return QLaurent{};
    const int rows = k, cols = n - k;
    QLaurent total;
    std::vector<int> part(static_cast<size_t>(rows), 0);
    // iterate weakly decreasing sequences 0 <= part[i] <= cols
    auto rec = [&](auto&& self, int row, int maxv, int size) -> void {
        if (row == rows) {
            total.add_term(6 * size, 1);
            return;
        }
        for (int v = 0; v <= maxv; ++v) self(self, row + 1, v, size + v);
    };
    rec(rec, 0, cols, 0);
    return total;
}

} // namespace

TEST_CASE("quantum integers") {
    CHECK(quantum_int(0).is_zero());
    QLaurent two;
    two.add_term(3, 1);
    two.add_term(-3, 1);
    CHECK(quantum_int(2) == two);
    QLaurent three;
    three.add_term(6, 1);
    three.add_term(0, 1);
    three.add_term(-6, 1);
    CHECK(quantum_int(3) == three);
    CHECK_THROWS_AS(quantum_int(-1), negative_argument);
}

TEST_CASE("quantum binomials") {
    for (int n = 0; n <= 8; ++n) CHECK(quantum_binom(n, 0) == QLaurent(1));
    CHECK(quantum_binom(2, 1) == quantum_int(2));
    CHECK(quantum_binom(3, 5).is_zero());
    CHECK(quantum_binom(3, -1).is_zero());
    CHECK_THROWS_AS(quantum_binom(-2, 1), negative_argument);

    // [4]!/([2]![2]!) verified by multiplying back
    QLaurent b = quantum_binom(4, 2);
    CHECK(b * quantum_factorial(2) * quantum_factorial(2) == quantum_factorial(4));
}

TEST_CASE("q-Pochhammer") {
    CHECK(q_pochhammer(0) == QLaurent(1));
    CHECK(q_pochhammer(1) == QLaurent(1) - QLaurent::q_int_power(1));
    QLaurent expect; // 1 - q - q^2 + q^3
    expect.add_term(0, 1);
    expect.add_term(6, -1);
    expect.add_term(12, -1);
    expect.add_term(18, 1);
    CHECK(q_pochhammer(2) == expect);
    CHECK_THROWS_AS(q_pochhammer(-3), negative_argument);
    for (int n = 0; n <= 7; ++n) {
        if (n == 0) continue;
        CHECK(q_pochhammer(n).max_exp() == 6 * (n * (n + 1) / 2));
    }
}

TEST_CASE("Gaussian binomials") {
    CHECK(q_binom(3, 5).is_zero());
    QLaurent e21;
    e21.add_term(0, 1);
    e21.add_term(6, 1);
    CHECK(q_binom(2, 1) == e21);

    // frozen: (4 choose 2)_q = 1 + q + 2q^2 + q^3 + q^4, cross-checked by
    // the partitions-in-a-box oracle
    QLaurent e42;
    e42.add_term(0, 1);
    e42.add_term(6, 1);
    e42.add_term(12, 2);
    e42.add_term(18, 1);
    e42.add_term(24, 1);
    CHECK(q_binom(4, 2) == e42);
    for (int n = 0; n <= 9; ++n)
        for (int k = 0; k <= n; ++k) CHECK(q_binom(n, k) == gauss_binom_by_partitions(n, k));
}

TEST_CASE("Pascal recurrence and symmetry") {
    for (int n = 1; n <= 12; ++n)
        for (int k = 0; k <= n; ++k) {
            QLaurent lhs = q_binom(n, k);
            QLaurent rhs = q_binom(n - 1, k - 1) + QLaurent::q_int_power(k) * q_binom(n - 1, k);
            CHECK(lhs == rhs);
            CHECK(q_binom(n, k) == q_binom(n, n - k));
            CHECK(quantum_binom(n, k) == quantum_binom(n, n - k));
        }
}

TEST_CASE("balancing identity") {
    // [n;k] = q^{-k(n-k)/2} (n choose k)_q
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k) {
            QLaurent lhs = quantum_binom(n, k);
            QLaurent rhs = QLaurent::q_power(-3 * k * (n - k)) * q_binom(n, k);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("multinomials") {
    for (int n = 0; n <= 6; ++n) CHECK(q_multinom(n, {n}) == QLaurent(1));
    CHECK(q_multinom(2, {1, 1}) == q_binom(2, 1));
    QLaurent f = (QLaurent(1) + QLaurent::q_int_power(1)) *
                 (QLaurent(1) + QLaurent::q_int_power(1) + QLaurent::q_int_power(2));
    CHECK(q_multinom(3, {1, 1, 1}) == f);
    CHECK_THROWS_AS(q_multinom(3, {1, 1}), parts_sum_mismatch);
    CHECK_THROWS_AS(q_multinom(3, {4, -1}), negative_argument);
    // chained multinomial
    for (int n = 0; n <= 8; ++n)
        for (int a = 0; a <= n; ++a)
            for (int b = 0; a + b <= n; ++b) {
                int c = n - a - b;
                CHECK(q_multinom(n, {a, b, c}) == q_binom(n, a) * q_binom(n - a, b));
            }
}

TEST_CASE("cache equals fresh computation and tolerates threads") {
    QCombCache fresh;
    for (int n = 0; n <= 9; ++n) {
        CHECK(fresh.quantum_factorial(n) == quantum_factorial(n));
        CHECK(fresh.pochhammer(n) == q_pochhammer(n));
    }
    std::vector<std::thread> ts;
    std::vector<QLaurent> results(4);
    for (int i = 0; i < 4; ++i)
        ts.emplace_back([i, &results] { results[static_cast<size_t>(i)] = q_pochhammer(10 + i); });
    for (auto& t : ts) t.join();
    for (int i = 0; i < 4; ++i) CHECK(results[static_cast<size_t>(i)] == q_pochhammer(10 + i));
}
