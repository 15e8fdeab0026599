#pragma once

/// Colored invariants of the (2,2m) torus links with one-row colorings:
/// quantum dimensions, the closure evaluation of the basis webs, and the
/// closed-form invariant assembled from the m-full-twist expansion.

#include "builders.hpp"
#include "twist.hpp"

namespace a2skein {

/// Quantum dimension of the (n,0)-colored unknot: [n+1][n+2]/[2].
inline QLaurent delta(int n) {
    if (n < 0) throw negative_argument("quantum dimension of negative color");
    QLaurent q;
    if (!QLaurent::div_exact(quantum_int(n + 1) * quantum_int(n + 2), quantum_int(2), q))
        throw error("quantum dimension division left a remainder");
    return q;
}

/// Quantum dimension in its q-series form q^{-n}(1-q^{n+1})(1-q^{n+2}) /
/// ((1-q)(1-q^2)); agrees with delta(n) exactly.
inline QRational delta_q_form(int n) {
    if (n < 0) throw negative_argument("quantum dimension of negative color");
    QLaurent num = QLaurent::q_int_power(-n) * (QLaurent(1) - QLaurent::q_int_power(n + 1)) *
                   (QLaurent(1) - QLaurent::q_int_power(n + 2));
    QLaurent den = (QLaurent(1) - QLaurent::q_int_power(1)) * (QLaurent(1) - QLaurent::q_int_power(2));
    return QRational(num, den);
}

/// Double closure of the k-indexed parallel basis web:
/// [d-k+1] Delta(s,0) Delta(t,0) / Delta(d-k,0).
inline QRational closure_eval(int s, int t, int k) {
    const int d = std::min(s, t);
    if (k < 0 || k > d) throw index_out_of_range("closure index must lie in [0, min(s,t)]");
    return QRational(quantum_int(d - k + 1)) * QRational(delta(s)) * QRational(delta(t)) /
           QRational(delta(d - k));
}

/// Closure value of the k-indexed anti-parallel basis web:
/// Delta(s,0) Delta(t,0) / Delta(d-k,0).
inline QRational closure_eval_antiparallel(int s, int t, int k) {
    const int d = std::min(s, t);
    if (k < 0 || k > d) throw index_out_of_range("closure index must lie in [0, min(s,t)]");
    return QRational(delta(s)) * QRational(delta(t)) / QRational(delta(d - k));
}

struct ColoredLinkSpec {
    LinkOrientation orientation = LinkOrientation::parallel;
    int m = 1; // half the crossing count
    int s = 0, t = 0;

    void check() const {
        if (m < 1) throw negative_argument("torus link requires m >= 1");
        if (s < 0 || t < 0) throw negative_argument("colors must be non-negative");
    }
};

/// The closed clasped diagram of the colored torus link (the strands are
/// cabled, so the diagram carries 2m * s * t elementary crossings).
inline WebDiagram build_torus_diagram(const ColoredLinkSpec& spec) {
    spec.check();
    return make_torus_link(spec.orientation, spec.m, spec.s, spec.t);
}

/// The exact sl3 colored invariant of the (2,2m) torus link with one-row
/// colorings (s,0), (t,0): the m-full-twist expansion paired with the
/// closure values of the basis webs.  The individual summands have
/// denominators; the total must clear them.
inline QRational jones_torus(const ColoredLinkSpec& spec) {
    spec.check();
    TwistExpansion e = twist_expansion(spec.orientation, spec.s, spec.t, spec.m);
    QRational total;
    for (auto& [k, c] : e.entries) {
        QRational closure = spec.orientation == LinkOrientation::parallel
                                ? closure_eval(spec.s, spec.t, k)
                                : closure_eval_antiparallel(spec.s, spec.t, k);
        total += QRational(c) * closure;
    }
    if (!total.is_laurent())
        throw denominator_not_cleared("torus invariant did not reduce to a Laurent polynomial");
    return total;
}

} // namespace a2skein
