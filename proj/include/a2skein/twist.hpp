#pragma once

/// Closed twist-expansion formulas: the single full twist of two one-row
/// colored strands in both orientations, in both the turnback (l) and
/// bypass (k) indexings, and the m-full-twist sums over decreasing chains,
/// aggregated by the final chain index.  Also the generic lattice-path
/// expansion with its commutation condition, and the engine-backed check
/// of the recurrence behind the parallel formula.
///
/// Coefficients carry the global fractional prefactor, so every entry is an
/// exact Laurent polynomial in v = q^{1/6}.

#include <functional>
#include <map>
#include <sstream>

#include "builders.hpp"
#include "qcomb.hpp"

namespace a2skein {

enum class BasisForm { k_form, l_form };

struct TwistExpansion {
    LinkOrientation kind = LinkOrientation::parallel;
    int s = 0, t = 0, m = 1;
    BasisForm basis = BasisForm::k_form;
    std::map<int, QLaurent> entries; // basis index -> full coefficient

    int d() const { return std::min(s, t); }

    /// Reindexes between the two conventions (l = d - k).
    TwistExpansion reindexed() const {
        TwistExpansion r = *this;
        r.basis = basis == BasisForm::k_form ? BasisForm::l_form : BasisForm::k_form;
        r.entries.clear();
        for (auto& [i, c] : entries) r.entries.emplace(d() - i, c);
        return r;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << (kind == LinkOrientation::parallel ? "parallel" : "antiparallel") << " s=" << s << " t=" << t
           << " m=" << m << " basis=" << (basis == BasisForm::k_form ? "k" : "l") << "\n";
        for (auto& [i, c] : entries) os << "  " << i << ": " << c.to_string() << "\n";
        return os.str();
    }
};

namespace twist_detail {

inline void put(TwistExpansion& e, int idx, QLaurent c) {
    if (!c.is_zero()) e.entries.emplace(idx, std::move(c));
}

} // namespace twist_detail

/// Anti-parallel full twist, turnback form: coefficient of the l-th basis
/// web is q^{st/3} q^{l^2-l} q^{-(s+t)l} (q)_l (s;l)_q (t;l)_q.  The formal
/// upper limit truncates at l = d because the Gaussian binomial vanishes.
inline TwistExpansion antiparallel_full_l(int s, int t) {
    TwistExpansion e{LinkOrientation::antiparallel, s, t, 1, BasisForm::l_form, {}};
    const int d = std::min(s, t);
    for (int l = 0; l <= d; ++l) {
        QLaurent c = qpow(2 * s * t + 6 * (l * l - l) - 6 * (s + t) * l) * q_pochhammer(l) * q_binom(s, l) *
                     q_binom(t, l);
        twist_detail::put(e, l, std::move(c));
    }
    return e;
}

/// Anti-parallel full twist, bypass form: prefactor q^{-2d(d+delta)/3-d}
/// against q^{k(k+delta)+k} (q)_{d+delta}/(q)_{k+delta} (d;k)_q.
inline TwistExpansion antiparallel_full_k(int s, int t) {
    TwistExpansion e{LinkOrientation::antiparallel, s, t, 1, BasisForm::k_form, {}};
    const int d = std::min(s, t), delta = std::abs(s - t);
    const QLaurent pre = qpow(-4 * d * (d + delta) - 6 * d);
    for (int k = 0; k <= d; ++k) {
        QLaurent c = pre * qpow(6 * (k * (k + delta) + k)) * q_pochhammer_ratio(d + delta, k + delta) *
                     q_binom(d, k);
        twist_detail::put(e, k, std::move(c));
    }
    return e;
}

/// Parallel full twist, turnback form: q^{2st/3} q^{l^2-l/2} q^{-(s+t)l}
/// (q)_l (s;l)_q (t;l)_q.
inline TwistExpansion parallel_full_l(int s, int t) {
    TwistExpansion e{LinkOrientation::parallel, s, t, 1, BasisForm::l_form, {}};
    const int d = std::min(s, t);
    for (int l = 0; l <= d; ++l) {
        QLaurent c = qpow(4 * s * t + 6 * l * l - 3 * l - 6 * (s + t) * l) * q_pochhammer(l) * q_binom(s, l) *
                     q_binom(t, l);
        twist_detail::put(e, l, std::move(c));
    }
    return e;
}

/// Parallel full twist, bypass form: prefactor q^{-d(d+delta)/3-d/2}
/// against q^{k(k+delta)+k/2} (q)_{d+delta}/(q)_{k+delta} (d;k)_q.
inline TwistExpansion parallel_full_k(int s, int t) {
    TwistExpansion e{LinkOrientation::parallel, s, t, 1, BasisForm::k_form, {}};
    const int d = std::min(s, t), delta = std::abs(s - t);
    const QLaurent pre = qpow(-2 * d * (d + delta) - 3 * d);
    for (int k = 0; k <= d; ++k) {
        QLaurent c = pre * qpow(6 * k * (k + delta) + 3 * k) * q_pochhammer_ratio(d + delta, k + delta) *
                     q_binom(d, k);
        twist_detail::put(e, k, std::move(c));
    }
    return e;
}

struct TwistForms {
    TwistExpansion l_form, k_form;
};

inline TwistForms antiparallel_full(int s, int t) { return {antiparallel_full_l(s, t), antiparallel_full_k(s, t)}; }
inline TwistForms parallel_full(int s, int t) { return {parallel_full_l(s, t), parallel_full_k(s, t)}; }

namespace twist_detail {

// Enumerates decreasing chains d = k_0 >= k_1 >= ... >= k_m >= 0 and folds
// each chain's coefficient into the bucket of its final index.
template <typename Coeff>
inline std::map<int, QLaurent> chain_sum(int d, int m, const Coeff& coeff_of_chain) {
    std::map<int, QLaurent> agg;
    std::vector<int> chain(static_cast<size_t>(m + 1));
    chain[0] = d;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == m + 1) {
            agg[chain[static_cast<size_t>(m)]] += coeff_of_chain(chain);
            return;
        }
        for (int v = chain[static_cast<size_t>(i - 1)]; v >= 0; --v) {
            chain[static_cast<size_t>(i)] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 1);
    return agg;
}

} // namespace twist_detail

/// Anti-parallel m-full-twist expansion, aggregated by the final chain
/// index k_m.  Chain weight:
///   C = q^{sum_i k_i(k_i+delta)+2k_i} q^{k_0-k_m}
///       (q)_{k_0+delta}/(q)_{k_m+delta} (k_0; k_1',...,k_m',k_m)_q
/// with k_{i+1}' = k_i - k_{i+1}; global prefactor
/// q^{-2m k_0(k_0+delta)/3 - 2m k_0}.
inline TwistExpansion antiparallel_multi(int s, int t, int m) {
    if (m < 1) throw negative_argument("twist count must be at least 1");
    TwistExpansion e{LinkOrientation::antiparallel, s, t, m, BasisForm::k_form, {}};
    const int d = std::min(s, t), delta = std::abs(s - t);
    const QLaurent pre = qpow(-4 * m * d * (d + delta) - 12 * m * d);
    auto agg = twist_detail::chain_sum(d, m, [&](const std::vector<int>& k) {
        long long ex = 0;
        for (int i = 1; i <= m; ++i)
            ex += 6LL * (static_cast<long long>(k[static_cast<size_t>(i)]) * (k[static_cast<size_t>(i)] + delta) +
                         2LL * k[static_cast<size_t>(i)]);
        ex += 6LL * (k[0] - k[static_cast<size_t>(m)]);
        std::vector<int> parts;
        for (int i = 1; i <= m; ++i) parts.push_back(k[static_cast<size_t>(i - 1)] - k[static_cast<size_t>(i)]);
        parts.push_back(k[static_cast<size_t>(m)]);
        return qpow(static_cast<int>(ex)) * q_pochhammer_ratio(k[0] + delta, k[static_cast<size_t>(m)] + delta) *
               q_multinom(k[0], parts);
    });
    for (auto& [km, c] : agg) twist_detail::put(e, km, pre * c);
    return e;
}

/// Parallel m-full-twist expansion, aggregated by k_m.  Chain weight:
///   D = q^{sum_i k_i(k_i+delta)+k_i} q^{(k_0-k_m)/2}
///       (q)_{k_0+delta}/(q)_{k_m+delta} (d; k_1',...,k_m',k_m)_q
/// with global prefactor q^{-m k_0(k_0+delta)/3 - m k_0}.
inline TwistExpansion parallel_multi(int s, int t, int m) {
    if (m < 1) throw negative_argument("twist count must be at least 1");
    TwistExpansion e{LinkOrientation::parallel, s, t, m, BasisForm::k_form, {}};
    const int d = std::min(s, t), delta = std::abs(s - t);
    const QLaurent pre = qpow(-2 * m * d * (d + delta) - 6 * m * d);
    auto agg = twist_detail::chain_sum(d, m, [&](const std::vector<int>& k) {
        long long ex = 0;
        for (int i = 1; i <= m; ++i)
            ex += 6LL * (static_cast<long long>(k[static_cast<size_t>(i)]) * (k[static_cast<size_t>(i)] + delta) +
                         k[static_cast<size_t>(i)]);
        ex += 3LL * (k[0] - k[static_cast<size_t>(m)]);
        std::vector<int> parts;
        for (int i = 1; i <= m; ++i) parts.push_back(k[static_cast<size_t>(i - 1)] - k[static_cast<size_t>(i)]);
        parts.push_back(k[static_cast<size_t>(m)]);
        return qpow(static_cast<int>(ex)) * q_pochhammer_ratio(k[0] + delta, k[static_cast<size_t>(m)] + delta) *
               q_multinom(k[0], parts);
    });
    for (auto& [km, c] : agg) twist_detail::put(e, km, pre * c);
    return e;
}

inline TwistExpansion twist_expansion(LinkOrientation o, int s, int t, int m) {
    return o == LinkOrientation::parallel ? parallel_multi(s, t, m) : antiparallel_multi(s, t, m);
}

/// Coefficient functions of a lattice-path family.
struct LatticeCoeffFns {
    std::function<QLaurent(int, int)> X, Y;
};

/// Lattice-path expansion: for a family satisfying
/// s(k,l) = X(k,l) s(k+1,l) + Y(k,l) s(k,l+1), the coefficient of the
/// terminal point (k, l), k + l = n, in the expansion of s(0,0) is
///   prod_{j<l} Y(0, j) * prod_{i<k} X(i, l) * (n; k)_q.
/// The commutation condition X(k,l) Y(k+1,l) = q Y(k,l) X(k,l+1) is checked
/// on the used range first.
inline std::map<std::pair<int, int>, QLaurent> lattice_expand(int n, const LatticeCoeffFns& fns) {
    if (n < 0) throw negative_argument("lattice expansion of negative level");
    for (int k = 0; k + 2 <= n; ++k)
        for (int l = 0; k + l + 2 <= n; ++l) {
            QLaurent lhs = fns.X(k, l) * fns.Y(k + 1, l);
            QLaurent rhs = QLaurent::q_int_power(1) * fns.Y(k, l) * fns.X(k, l + 1);
            if (lhs != rhs)
                throw commutation_violated("qYX condition fails at lattice point (" + std::to_string(k) + "," +
                                           std::to_string(l) + ")");
        }
    std::map<std::pair<int, int>, QLaurent> out;
    for (int k = 0; k <= n; ++k) {
        const int l = n - k;
        QLaurent c(1);
        for (int j = 0; j < l; ++j) c = c * fns.Y(0, j);
        for (int i = 0; i < k; ++i) c = c * fns.X(i, l);
        c = c * q_binom(n, k);
        out.emplace(std::make_pair(k, l), std::move(c));
    }
    return out;
}

/// Coefficient functions of the parallel twist recurrence, for colors
/// (s, t) with D = d + delta:
///   X(k,l) = q^{2(D-l)/3}
///   Y(k,l) = q^{-1/6} q^{(k+delta)/3} q^{-2(D-l)/3} (1 - q^{D-l})
inline LatticeCoeffFns parallel_recurrence_fns(int s, int t) {
    const int d = std::min(s, t), delta = std::abs(s - t);
    const int D = d + delta;
    LatticeCoeffFns fns;
    fns.X = [D](int, int l) { return qpow(4 * (D - l)); };
    fns.Y = [D, delta](int k, int l) {
        return qpow(-1 + 2 * (k + delta) - 4 * (D - l)) * (QLaurent(1) - QLaurent::q_int_power(D - l));
    };
    return fns;
}

/// An alternative coefficient pair with exponents k/3 and d - l in place
/// of (k+delta)/3 and d + delta - l.  It satisfies the same commutation
/// condition, but reproduces the closed formula only when s = t; the
/// recurrence report records which pair the expansion supports.
inline LatticeCoeffFns parallel_recurrence_fns_variant(int s, int t) {
    const int d = std::min(s, t), delta = std::abs(s - t);
    const int D = d + delta;
    LatticeCoeffFns fns;
    fns.X = [D](int, int l) { return qpow(4 * (D - l)); };
    fns.Y = [d](int k, int l) {
        return qpow(-1 + 2 * k - 4 * (d - l)) * (QLaurent(1) - QLaurent::q_int_power(d - l));
    };
    return fns;
}

struct RecurrenceReport {
    struct Entry {
        std::string label;
        bool pass = false;
    };
    std::vector<Entry> entries;
    std::string note;

    bool all_pass() const {
        for (auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
    std::string to_string() const {
        std::ostringstream os;
        for (auto& e : entries) os << (e.pass ? "pass" : "FAIL") << "  " << e.label << "\n";
        if (!note.empty()) os << "note: " << note << "\n";
        return os.str();
    }
};

/// Checks the commutation condition symbolically, the lattice expansion
/// against the closed parallel formula, and the recurrence itself by
/// closing the interpolating webs with the full closure family.
inline RecurrenceReport verify_recurrence(int s, int t) {
    RecurrenceReport rep;
    const int d = std::min(s, t), delta = std::abs(s - t);
    const int D = d + delta;

    // the commutation condition, symbolically
    bool qyx = true;
    try {
        lattice_expand(d, parallel_recurrence_fns(s, t));
    } catch (const commutation_violated&) {
        qyx = false;
    }
    rep.entries.push_back(
        {"qYX commutation for X,Y (s=" + std::to_string(s) + ",t=" + std::to_string(t) + ")", qyx});

    // lattice expansion reproduces the closed k-form coefficients
    {
        auto latt = lattice_expand(d, parallel_recurrence_fns(s, t));
        TwistExpansion kform = parallel_full_k(s, t);
        bool match = true;
        for (int k = 0; k <= d; ++k) {
            QLaurent closed;
            auto it = kform.entries.find(k);
            if (it != kform.entries.end()) closed = it->second;
            if (latt.at({k, d - k}) != closed) match = false;
        }
        rep.entries.push_back({"lattice expansion matches the closed parallel formula", match});
    }

    // the alternative Y-variant: record whether it also reproduces the formula
    {
        bool variant_match = true;
        try {
            auto latt = lattice_expand(d, parallel_recurrence_fns_variant(s, t));
            TwistExpansion kform = parallel_full_k(s, t);
            for (int k = 0; k <= d; ++k) {
                QLaurent closed;
                auto it = kform.entries.find(k);
                if (it != kform.entries.end()) closed = it->second;
                if (latt.at({k, d - k}) != closed) variant_match = false;
            }
        } catch (const commutation_violated&) {
            variant_match = false;
        }
        if (delta == 0) {
            rep.note = "the Y-variant (exponents k/3, d-l) coincides with the primary pair when s = t";
        } else {
            rep.note = std::string("Y-variant (exponents k/3, d-l) ") +
                       (variant_match ? "also reproduces" : "does not reproduce") +
                       " the closed formula; the primary pair ((k+delta)/3, d+delta-l) is the one used";
        }
    }

    // degenerate turnback level: Y vanishes at l = D
    {
        QLaurent y = parallel_recurrence_fns(s, t).Y(0, D);
        rep.entries.push_back({"Y vanishes at the degenerate level l = d+delta", y.is_zero()});
    }

    // engine recurrence on the interpolating webs
    auto fns = parallel_recurrence_fns(s, t);
    for (int k = 0; k + 1 <= d; ++k)
        for (int l = 0; k + l + 1 <= d; ++l) {
            auto v0 = closure_pairings(sigma_web(s, t, k, l), LinkOrientation::parallel, s, t);
            auto v1 = closure_pairings(sigma_web(s, t, k + 1, l), LinkOrientation::parallel, s, t);
            auto v2 = closure_pairings(sigma_web(s, t, k, l + 1), LinkOrientation::parallel, s, t);
            QRational X(fns.X(k, l)), Y(fns.Y(k, l));
            bool pass = true;
            for (size_t j = 0; j < v0.size(); ++j)
                if (v0[j] != X * v1[j] + Y * v2[j]) pass = false;
            rep.entries.push_back({"engine recurrence at (k,l)=(" + std::to_string(k) + "," + std::to_string(l) +
                                       ") for (s,t)=(" + std::to_string(s) + "," + std::to_string(t) + ")",
                                   pass});
        }
    return rep;
}

} // namespace a2skein
