#pragma once

/// Exact Laurent-polynomial arithmetic in v = q^{1/6} over the integers,
/// and its fraction field.  Every quantum coefficient in this library is
/// carried exactly; there is no floating point anywhere.

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace a2skein {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error{};
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error{};
    return r;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace detail

/// A Laurent polynomial in v = q^{1/6} with integer coefficients.
/// Exponents are stored in sixths of a q-power, so q^{a/6} has v-exponent a.
/// The term map never stores a zero coefficient, which makes equality of
/// values equality of maps.
class QLaurent {
public:
    using Terms = std::map<int, std::int64_t>; // v-exponent -> coefficient

    QLaurent() = default;
    QLaurent(std::int64_t c) {
        if (c != 0) terms_[0] = c;
    }

    /// The monomial c * q^{sixths/6}.
    static QLaurent q_power(int sixths, std::int64_t c = 1) {
        QLaurent r;
        if (c != 0) r.terms_[sixths] = c;
        return r;
    }

    /// The monomial q^k for an integer power k of q itself.
    static QLaurent q_int_power(int k, std::int64_t c = 1) { return q_power(6 * k, c); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1; }

    const Terms& terms() const { return terms_; }

    std::int64_t coeff(int sixths) const {
        auto it = terms_.find(sixths);
        return it == terms_.end() ? 0 : it->second;
    }

    int min_exp() const {
        if (is_zero()) throw error("min_exp of zero polynomial");
        return terms_.begin()->first;
    }
    int max_exp() const {
        if (is_zero()) throw error("max_exp of zero polynomial");
        return terms_.rbegin()->first;
    }

    void add_term(int sixths, std::int64_t c) {
        if (c == 0) return;
        auto it = terms_.find(sixths);
        if (it == terms_.end()) {
            terms_[sixths] = c;
        } else {
            it->second = detail::checked_add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    QLaurent& operator+=(const QLaurent& o) {
        for (auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    QLaurent& operator-=(const QLaurent& o) {
        for (auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
    friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }

    QLaurent operator-() const {
        QLaurent r;
        for (auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend QLaurent operator*(const QLaurent& a, const QLaurent& b) {
        QLaurent r;
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_)
                r.add_term(ea + eb, detail::checked_mul(ca, cb));
        return r;
    }
    QLaurent& operator*=(const QLaurent& o) { return *this = *this * o; }

    /// Multiply by the monomial v^{sixths}.
    QLaurent shifted(int sixths) const {
        QLaurent r;
        for (auto& [e, c] : terms_) r.terms_[e + sixths] = c;
        return r;
    }

    friend bool operator==(const QLaurent& a, const QLaurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const QLaurent& a, const QLaurent& b) { return !(a == b); }
    friend bool operator<(const QLaurent& a, const QLaurent& b) { return a.terms_ < b.terms_; }

    /// Exact division: if b divides a over Z[v^{+-1}], set q = a/b and
    /// return true; otherwise return false (q is then unspecified).
    static bool div_exact(const QLaurent& a, const QLaurent& b, QLaurent& q) {
        if (b.is_zero()) throw division_by_zero{};
        q = QLaurent{};
        if (a.is_zero()) return true;
        QLaurent r = a;
        const int eb = b.max_exp();
        const std::int64_t lb = b.terms_.rbegin()->second;
        while (!r.is_zero() && r.max_exp() - r.min_exp() >= eb - b.min_exp()) {
            const int er = r.max_exp();
            const std::int64_t lr = r.terms_.rbegin()->second;
            if (lr % lb != 0) return false;
            const std::int64_t c = lr / lb;
            const int shift = er - eb;
            q.add_term(shift, c);
            for (auto& [e, cb] : b.terms_) r.add_term(e + shift, detail::checked_mul(-c, cb));
        }
        return r.is_zero();
    }

    /// gcd of all integer coefficients (0 for the zero polynomial).
    std::int64_t content() const {
        std::int64_t g = 0;
        for (auto& [e, c] : terms_) g = detail::gcd64(g, c);
        return g;
    }

    QLaurent divided_by_int(std::int64_t d) const {
        QLaurent r;
        for (auto& [e, c] : terms_) {
            if (c % d != 0) throw error("inexact integer division of polynomial");
            r.terms_[e] = c / d;
        }
        return r;
    }

    /// Human-readable rendering: terms by ascending v-exponent, exponents
    /// printed as reduced fractions of a q-power, e.g. "q^(1/3) - 2*q^(-1/2)".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [e, c] : terms_) {
            std::int64_t a = c;
            if (first) {
                if (a < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            if (e == 0) {
                os << a;
                continue;
            }
            if (a != 1) os << a << "*";
            os << "q";
            int num = e, den = 6;
            int g = static_cast<int>(detail::gcd64(num, den));
            num /= g;
            den /= g;
            if (den == 1) {
                if (num != 1) {
                    if (num < 0)
                        os << "^(" << num << ")";
                    else
                        os << "^" << num;
                }
            } else {
                os << "^(" << num << "/" << den << ")";
            }
        }
        return os.str();
    }

    /// Machine rendering: list of (v-exponent, coefficient) pairs in
    /// ascending exponent order.
    std::vector<std::pair<int, std::int64_t>> pairs() const {
        std::vector<std::pair<int, std::int64_t>> out;
        out.reserve(terms_.size());
        for (auto& [e, c] : terms_) out.emplace_back(e, c);
        return out;
    }

private:
    Terms terms_;
};

namespace detail {

// Dense non-negative-exponent view used by gcd and series expansion.
// poly[i] is the coefficient of v^i; the vector carries no trailing zeros.
using Dense = std::vector<std::int64_t>;

inline Dense to_dense(const QLaurent& p, int base_exp) {
    Dense d;
    if (p.is_zero()) return d;
    d.assign(static_cast<size_t>(p.max_exp() - base_exp) + 1, 0);
    for (auto& [e, c] : p.terms()) d[static_cast<size_t>(e - base_exp)] = c;
    return d;
}

inline QLaurent from_dense(const Dense& d, int base_exp) {
    QLaurent p;
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0) p.add_term(base_exp + static_cast<int>(i), d[i]);
    return p;
}

inline void trim(Dense& d) {
    while (!d.empty() && d.back() == 0) d.pop_back();
}

// gcd internals run over 128-bit coefficients; primitive reduction after
// every pseudo-division step keeps growth within range for the small
// denominators that occur in practice.
using Wide = std::vector<__int128>;

inline __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline void wide_trim(Wide& d) {
    while (!d.empty() && d.back() == 0) d.pop_back();
}

inline void wide_make_primitive(Wide& d) {
    __int128 g = 0;
    for (auto c : d) g = gcd128(g, c);
    if (g > 1)
        for (auto& c : d) c /= g;
}

inline void wide_mul_check(__int128 a, __int128 b, __int128& out) {
    if (a == 0 || b == 0) {
        out = 0;
        return;
    }
    static const __int128 LIM = (static_cast<__int128>(1) << 126);
    __int128 aa = a < 0 ? -a : a, bb = b < 0 ? -b : b;
    if (aa > LIM / bb) throw overflow_error{};
    out = a * b;
}

// Pseudo-remainder of a by b (deg a >= deg b >= 0), primitive-PRS style.
inline Wide wide_prem(Wide a, const Wide& b) {
    const __int128 lb = b.back();
    const size_t db = b.size() - 1;
    while (!a.empty() && a.size() - 1 >= db) {
        const __int128 la = a.back();
        const size_t shift = a.size() - 1 - db;
        // a = lb*a - la * v^shift * b
        for (auto& c : a) wide_mul_check(c, lb, c);
        for (size_t i = 0; i < b.size(); ++i) {
            __int128 t;
            wide_mul_check(la, b[i], t);
            a[shift + i] -= t;
        }
        wide_trim(a);
        wide_make_primitive(a);
    }
    return a;
}

// Certifies coprimality by a gcd computation modulo a prime p that does not
// divide gcd(lc(a), lc(b)).  The leading coefficient of any common divisor
// divides both leading coefficients, so a constant gcd mod such a p proves
// the integer gcd is constant.
inline bool certainly_coprime(const Dense& a, const Dense& b) {
    static const std::int64_t primes[3] = {2147483659LL, 2147483693LL, 2147483713LL};
    const std::int64_t lcg = gcd64(a.back(), b.back());
    for (std::int64_t p : primes) {
        if (lcg % p == 0) continue;
        auto red = [&](const Dense& x) {
            std::vector<std::int64_t> r(x.size());
            for (size_t i = 0; i < x.size(); ++i) {
                std::int64_t v = x[i] % p;
                r[i] = v < 0 ? v + p : v;
            }
            while (!r.empty() && r.back() == 0) r.pop_back();
            return r;
        };
        auto mulmod = [&](std::int64_t x, std::int64_t y) {
            return static_cast<std::int64_t>(static_cast<__int128>(x) * y % p);
        };
        auto powmod = [&](std::int64_t x, std::int64_t e) {
            std::int64_t r = 1;
            while (e) {
                if (e & 1) r = mulmod(r, x);
                x = mulmod(x, x);
                e >>= 1;
            }
            return r;
        };
        std::vector<std::int64_t> u = red(a), v = red(b);
        if (u.empty() || v.empty()) continue;
        if (u.size() < v.size()) std::swap(u, v);
        while (!v.empty()) {
            // u = u mod v over Z_p
            std::int64_t inv = powmod(v.back(), p - 2);
            while (u.size() >= v.size()) {
                std::int64_t c = mulmod(u.back(), inv);
                size_t shift = u.size() - v.size();
                for (size_t i = 0; i < v.size(); ++i) {
                    std::int64_t t = u[shift + i] - mulmod(c, v[i]);
                    u[shift + i] = t < 0 ? t + p : t;
                }
                while (!u.empty() && u.back() == 0) u.pop_back();
                if (u.empty()) break;
            }
            std::swap(u, v);
        }
        return u.size() <= 1; // constant gcd mod p certifies coprimality
    }
    return false;
}

// gcd of two dense polynomials, returned primitive with a positive leading
// coefficient.
inline Dense dense_gcd(Dense a64, Dense b64) {
    trim(a64);
    trim(b64);
    if (!a64.empty() && !b64.empty() && certainly_coprime(a64, b64)) return Dense{1};
    Wide a(a64.begin(), a64.end()), b(b64.begin(), b64.end());
    if (a.empty()) std::swap(a, b);
    if (b.size() > a.size()) std::swap(a, b);
    while (!b.empty()) {
        Wide r = wide_prem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    wide_make_primitive(a);
    if (!a.empty() && a.back() < 0)
        for (auto& c : a) c = -c;
    Dense out;
    out.reserve(a.size());
    for (auto c : a) {
        if (c > INT64_MAX || c < INT64_MIN) throw overflow_error{};
        out.push_back(static_cast<std::int64_t>(c));
    }
    return out;
}

} // namespace detail

/// gcd of two Laurent polynomials taken as ordinary polynomials in v after
/// factoring out the monomial content; primitive, positive leading term.
inline QLaurent laurent_gcd(const QLaurent& a, const QLaurent& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    detail::Dense da = detail::to_dense(a, a.min_exp());
    detail::Dense db = detail::to_dense(b, b.min_exp());
    detail::Dense g = detail::dense_gcd(std::move(da), std::move(db));
    return detail::from_dense(g, 0);
}

/// A reduced quotient of two QLaurent values.  Canonical form: gcd of
/// numerator and denominator is 1 (after factoring out monomial content),
/// the denominator has lowest exponent 0 and a positive lowest coefficient,
/// and a denominator equal to 1 round-trips losslessly to QLaurent.
class QRational {
public:
    QRational() : num_(0), den_(1) {}
    QRational(std::int64_t c) : num_(c), den_(1) {}
    QRational(QLaurent n) : num_(std::move(n)), den_(1) {}
    QRational(QLaurent n, QLaurent d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw division_by_zero{};
        canonicalize();
    }

    const QLaurent& num() const { return num_; }
    const QLaurent& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.is_one(); }

    /// The exact QLaurent value; throws if the denominator did not clear.
    const QLaurent& as_laurent() const {
        if (!is_laurent()) throw denominator_not_cleared("value has a non-trivial denominator: (" +
                                                          num_.to_string() + ") / (" + den_.to_string() + ")");
        return num_;
    }

    friend QRational operator+(const QRational& a, const QRational& b) {
        return QRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend QRational operator-(const QRational& a, const QRational& b) {
        return QRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend QRational operator*(const QRational& a, const QRational& b) {
        return QRational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend QRational operator/(const QRational& a, const QRational& b) {
        if (b.is_zero()) throw division_by_zero{};
        return QRational(a.num_ * b.den_, a.den_ * b.num_);
    }
    QRational operator-() const {
        QRational r = *this;
        r.num_ = -r.num_;
        return r;
    }
    QRational& operator+=(const QRational& o) { return *this = *this + o; }
    QRational& operator-=(const QRational& o) { return *this = *this - o; }
    QRational& operator*=(const QRational& o) { return *this = *this * o; }
    QRational& operator/=(const QRational& o) { return *this = *this / o; }

    friend bool operator==(const QRational& a, const QRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QRational& a, const QRational& b) { return !(a == b); }

    std::string to_string() const {
        if (is_laurent()) return num_.to_string();
        return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
    }

private:
    void canonicalize() {
        if (num_.is_zero()) {
            den_ = QLaurent(1);
            return;
        }
        // monomial content of the denominator moves into the numerator
        const int e = den_.min_exp();
        if (e != 0) {
            den_ = den_.shifted(-e);
            num_ = num_.shifted(-e);
        }
        // integer content
        std::int64_t g = detail::gcd64(num_.content(), den_.content());
        if (g > 1) {
            num_ = num_.divided_by_int(g);
            den_ = den_.divided_by_int(g);
        }
        // polynomial gcd
        QLaurent gp = laurent_gcd(num_, den_);
        if (!gp.is_one() && !(gp.terms().size() == 1 && gp.min_exp() == 0)) {
            QLaurent qn, qd;
            if (!QLaurent::div_exact(num_, gp, qn) || !QLaurent::div_exact(den_, gp, qd))
                throw error("internal: gcd does not divide exactly");
            num_ = std::move(qn);
            den_ = std::move(qd);
            const int e2 = den_.min_exp();
            if (e2 != 0) {
                den_ = den_.shifted(-e2);
                num_ = num_.shifted(-e2);
            }
        }
        // positive lowest denominator coefficient
        if (den_.terms().begin()->second < 0) {
            den_ = -den_;
            num_ = -num_;
        }
    }

    QLaurent num_, den_;
};

/// The monomial q^{sixths/6} as an exact Laurent polynomial.
inline QLaurent qpow(int sixths) { return QLaurent::q_power(sixths); }

/// Laurent-series expansion of r in v, truncated to drop all terms with
/// q-exponent strictly greater than `order` (v-exponent > 6*order).
/// The denominator's lowest coefficient must be a unit over the integers.
inline QLaurent series_truncate(const QRational& r, int order) {
    if (r.is_zero()) return QLaurent{};
    const QLaurent& den = r.den();
    const QLaurent& num = r.num();
    const std::int64_t d0 = den.terms().begin()->second; // lowest exponent is 0 in canonical form
    if (d0 != 1 && d0 != -1) throw non_unit_denominator{};
    const int cut = 6 * order;
    if (den.is_one()) {
        QLaurent out;
        for (auto& [e, c] : num.terms())
            if (e <= cut) out.add_term(e, c);
        return out;
    }
    // invert den as a power series in v up to exponent cut - num.min_exp()
    const int klim = cut - num.min_exp();
    if (klim < 0) return QLaurent{};
    std::vector<std::int64_t> dd(static_cast<size_t>(std::min(den.max_exp(), klim)) + 1, 0);
    for (auto& [e, c] : den.terms())
        if (e <= klim) dd[static_cast<size_t>(e)] = c;
    std::vector<std::int64_t> s(static_cast<size_t>(klim) + 1, 0);
    s[0] = d0; // 1/d0 == d0 for units
    for (int k = 1; k <= klim; ++k) {
        __int128 acc = 0;
        const int jmax = std::min<int>(k, static_cast<int>(dd.size()) - 1);
        for (int j = 1; j <= jmax; ++j) acc -= static_cast<__int128>(dd[static_cast<size_t>(j)]) * s[static_cast<size_t>(k - j)];
        acc *= d0;
        if (acc > INT64_MAX || acc < INT64_MIN) throw overflow_error{};
        s[static_cast<size_t>(k)] = static_cast<std::int64_t>(acc);
    }
    QLaurent out;
    for (auto& [e, c] : num.terms()) {
        for (int k = 0; k <= cut - e; ++k) {
            if (k >= static_cast<int>(s.size())) break;
            if (s[static_cast<size_t>(k)] != 0)
                out.add_term(e + k, detail::checked_mul(c, s[static_cast<size_t>(k)]));
        }
    }
    return out;
}

} // namespace a2skein
