#pragma once

/// Truncated tail q-series of the (2,2m) torus links and the stabilization
/// check against framing-normalized invariants.  Everything is exact
/// integer arithmetic in truncated power series; comparisons are made
/// modulo q^{n+1}, never with a tolerance.

#include <cmath>
#include <sstream>

#include "invariants.hpp"

namespace a2skein {

struct TailSeries {
    LinkOrientation orientation = LinkOrientation::antiparallel;
    int m = 1;
    int order = 0;
    QLaurent series; // supported on integer q-exponents in [0, order]
};

namespace tails_detail {

// Truncates a Laurent polynomial to q-exponent <= N.
inline QLaurent truncate(const QLaurent& p, int N) {
    QLaurent out;
    for (auto& [e, c] : p.terms())
        if (e <= 6 * N) out.add_term(e, c);
    return out;
}

} // namespace tails_detail

/// Tail series, truncated at q^{order}.  With c = 2 for the anti-parallel
/// orientation and c = 1 for the parallel one,
///
///   F(q) = P(q) (q)_oo sum_{k_1>=...>=k_m>=0}
///              q^{sum_i k_i^2 + c k_i - c k_m}
///              / ( (q)_{k_1-k_2} ... (q)_{k_{m-1}-k_m} (q)_{k_m}^2 )
///
/// with P = 1/((1-q)(1-q^2)) anti-parallel and 1/((1-q)^2(1-q^2)) parallel.
/// This is the stable limit of the normalized invariants under the framing
/// normalization below; the squared final Pochhammer and the Euler-function
/// factor come out of the same Durfee-square rearrangement that collapses
/// the m = 1 sums to 1.  A chain's lowest exponent is at least k_1^2, so
/// the enumeration stops at k_1 <= ceil(sqrt(order)) + 2.
inline TailSeries tail_series(LinkOrientation orientation, int m, int order) {
    if (m < 1) throw negative_argument("tail requires m >= 1");
    if (order < 0) throw negative_argument("tail order must be non-negative");
    const int c = orientation == LinkOrientation::antiparallel ? 2 : 1;
    const int kmax = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(order)))) + 2;

    QLaurent sum;
    std::vector<int> chain(static_cast<size_t>(m), 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == m) {
            long long ex = 0;
            for (int j = 0; j < m; ++j)
                ex += static_cast<long long>(chain[static_cast<size_t>(j)]) * chain[static_cast<size_t>(j)] +
                      static_cast<long long>(c) * chain[static_cast<size_t>(j)];
            ex -= static_cast<long long>(c) * chain[static_cast<size_t>(m - 1)];
            if (ex > order) return;
            QLaurent den(1);
            for (int j = 0; j + 1 < m; ++j)
                den = den * q_pochhammer(chain[static_cast<size_t>(j)] - chain[static_cast<size_t>(j + 1)]);
            const QLaurent& last = q_pochhammer(chain[static_cast<size_t>(m - 1)]);
            den = den * last * last;
            sum += series_truncate(QRational(QLaurent::q_int_power(static_cast<int>(ex)), den), order);
            return;
        }
        const int hi = i == 0 ? kmax : chain[static_cast<size_t>(i - 1)];
        for (int v = 0; v <= hi; ++v) {
            chain[static_cast<size_t>(i)] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);

    QLaurent pre_den = (QLaurent(1) - QLaurent::q_int_power(1)) * (QLaurent(1) - QLaurent::q_int_power(2));
    if (orientation == LinkOrientation::parallel) pre_den = pre_den * (QLaurent(1) - QLaurent::q_int_power(1));
    QLaurent pre = series_truncate(QRational(QLaurent(1), pre_den), order);
    QLaurent euler = tails_detail::truncate(q_pochhammer(order + 1), order); // (q)_oo mod q^{order+1}
    TailSeries out;
    out.orientation = orientation;
    out.m = m;
    out.order = order;
    out.series = tails_detail::truncate(pre * euler * sum, order);
    return out;
}

/// Framing-normalized invariant with the equal coloring s = t = n:
///   anti-parallel: q^{2m n^2/3 + 2mn} J
///   parallel:      q^{m n^2/3 + mn + n} J
/// The fractional prefactor must cancel the invariant's fractional grading
/// exactly, leaving a polynomial in q with non-negative exponents.
inline QLaurent normalized_jones(LinkOrientation orientation, int m, int n) {
    if (n < 0) throw negative_argument("coloring must be non-negative");
    ColoredLinkSpec spec{orientation, m, n, n};
    QRational j = jones_torus(spec);
    const int pre6 = orientation == LinkOrientation::antiparallel ? 4 * m * n * n + 12 * m * n
                                                                  : 2 * m * n * n + 6 * m * n + 6 * n;
    QLaurent v = qpow(pre6) * j.as_laurent();
    for (auto& [e, coef] : v.terms()) {
        (void)coef;
        if (e < 0 || e % 6 != 0)
            throw fractional_residue("normalized invariant has exponent " + std::to_string(e) +
                                     "/6; the framing prefactor did not cancel");
    }
    return v;
}

struct StabilizationReport {
    LinkOrientation orientation = LinkOrientation::antiparallel;
    int m = 1;
    struct Entry {
        int n = 0;
        bool pass = false;
        int first_mismatch_exponent = -1; // q-exponent, -1 when passing
    };
    std::vector<Entry> entries;

    bool all_pass() const {
        for (auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
    std::string to_string() const {
        std::ostringstream os;
        os << "stabilization " << (orientation == LinkOrientation::parallel ? "parallel" : "antiparallel")
           << " m=" << m << "\n";
        os << "  n   status\n";
        for (auto& e : entries) {
            os << "  " << e.n << "   " << (e.pass ? "pass" : "FAIL");
            if (!e.pass) os << "  first differing q-exponent " << e.first_mismatch_exponent;
            os << "\n";
        }
        return os.str();
    }
};

/// Checks normalized_jones(orientation, m, n) == tail_series(orientation,
/// m, n) modulo q^{n+1} for every n <= n_max.
inline StabilizationReport stabilization_report(LinkOrientation orientation, int m, int n_max) {
    if (n_max < 1) throw negative_argument("stabilization requires n_max >= 1");
    StabilizationReport rep;
    rep.orientation = orientation;
    rep.m = m;
    for (int n = 0; n <= n_max; ++n) {
        QLaurent lhs = tails_detail::truncate(normalized_jones(orientation, m, n), n);
        QLaurent rhs = tail_series(orientation, m, n).series;
        StabilizationReport::Entry e;
        e.n = n;
        e.pass = lhs == rhs;
        if (!e.pass) {
            QLaurent diff = lhs - rhs;
            e.first_mismatch_exponent = diff.min_exp() / 6;
        }
        rep.entries.push_back(e);
    }
    return rep;
}

} // namespace a2skein
