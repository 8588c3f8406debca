#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nsfusion/polynomial.hpp"
#include "nsfusion/singvec.hpp"

namespace nsf::zhu {

/// Class of a vector of M(3/2, h_{1,q}) in the Zhu bimodule tensored with the
/// top level of L(3/2, h_{1,r}):  P0(x) [v]  +  P1(x) [G(-1/2)v].
/// y has already been specialized to the L(0) eigenvalue of the right factor.
struct BimoduleElement {
    long q_label;
    Rational y_value;
    Polynomial even_part;  // coefficient of [v]
    Polynomial odd_part;   // coefficient of [G(-1/2)v]

    BimoduleElement(long q, Rational y)
        : q_label(q), y_value(std::move(y)), even_part(Var::x), odd_part(Var::x) {}
};

namespace detail {

/// Reduction of one PBW word with a polynomial prefactor, leftmost mode first:
///   [L(-n) u]              = (n y - x + wt(u)) [u]
///   [G(-r) u]              = [G(-1/2) u]                 (r >= 3/2)
///   [G(-1/2) G(-m-1/2) u]  = ((2m+1) y - x + wt(u)) [u]
///   [G(-1/2) L(-n) u]      = [L(-n) G(-1/2) u] + ((n-1)/2) [G(-n-1/2) u]
/// with wt(u) = h_{1,q} + level(u).  Every intermediate word stays normal
/// ordered, so the four cases are exhaustive.
inline void reduce_word(const ns::PBWWord& w, const Polynomial& factor, const Rational& hq,
                        const Rational& y, BimoduleElement& out) {
    auto weight_factor = [&](const Rational& n_times_y, HalfInt rest_level) {
        // (n y - x + h_q + level)
        Rational c0 = n_times_y + hq + rest_level.to_rational();
        return Polynomial::linear(Var::x, RadicalNumber(c0), RadicalNumber(-1));
    };

    if (w.empty()) {
        out.even_part += factor;
        return;
    }
    if (w.g.size() == 1 && w.l.empty() && w.g[0] == HalfInt(1)) {
        out.odd_part += factor;
        return;
    }
    if (w.g.empty()) {
        long n = w.l.front();
        ns::PBWWord rest = w;
        rest.l.erase(rest.l.begin());
        reduce_word(rest, factor * weight_factor(Rational(n) * y, rest.level()), hq, y, out);
        return;
    }
    if (w.g.size() >= 2) {
        // leading G replaced by G(-1/2), then the pair rule eats both
        HalfInt r2 = w.g[1];
        ns::PBWWord rest = w;
        rest.g.erase(rest.g.begin(), rest.g.begin() + 2);
        Rational two_m_plus_1(r2.tw);  // r2 = m + 1/2, so 2m+1 = 2*r2
        reduce_word(rest, factor * weight_factor(two_m_plus_1 * y, rest.level()), hq, y, out);
        return;
    }
    // single G: either replace a deep mode or commute G(-1/2) through the L block
    HalfInt r = w.g[0];
    if (r != HalfInt(1)) {
        ns::PBWWord repl = w;
        repl.g[0] = HalfInt(1);
        reduce_word(repl, factor, hq, y, out);
        return;
    }
    long n = w.l.front();
    ns::PBWWord tail = w;  // G(-1/2) with the first L removed
    tail.l.erase(tail.l.begin());
    reduce_word(tail, factor * weight_factor(Rational(n) * y, tail.level()), hq, y, out);
    Rational bracket(n - 1, 2);
    if (!bracket.is_zero()) {
        ns::PBWWord swapped = tail;
        swapped.g[0] = HalfInt(2 * n + 1);  // G(-n-1/2)
        reduce_word(swapped, factor * Polynomial::constant(Var::x, RadicalNumber(bracket)), hq, y, out);
    }
}

}  // namespace detail

/// Reduces an element of M(3/2, h_{1,q}) to its bimodule class, with y
/// specialized to y_value (the weight h_{1,r} of the right tensor factor).
inline BimoduleElement zhu_reduce(const ns::VermaElement& v, long q_label, const Rational& y_value) {
    BimoduleElement out(q_label, y_value);
    const Rational hq = ns::h_label(q_label);
    for (const auto& [w, coeff] : v.terms) {
        Polynomial f = Polynomial::constant(Var::x, coeff);
        detail::reduce_word(w, f, hq, y_value, out);
    }
    return out;
}

inline BimoduleElement zhu_reduce(const ns::PBWWord& w, long q_label, const Rational& y_value) {
    return zhu_reduce(ns::word_element(RadicalNumber(Rational(3, 2)), RadicalNumber(ns::h_label(q_label)), w),
                      q_label, y_value);
}

/// The two fusion polynomials of the pair (q, r):
///   [P_sing v]          = Q1(x) [G(-1/2)v]   (odd class)
///   [G(-1/2) P_sing v]  = Q2(x) [v]          (even class)
/// computed from the kernel singular vector.  A reduction that leaks into the
/// opposite parity class raises ImpurityError.
struct QPolynomials {
    Polynomial q1, q2;
};

inline QPolynomials q_polynomials_from(const ns::VermaElement& sv, long q, long r) {
    if (q < 1 || q % 2 == 0 || r < 1 || r % 2 == 0) throw CalcError("q and r must be odd and positive");
    const Rational y = ns::h_label(r);

    BimoduleElement odd_red = zhu_reduce(sv, q, y);
    if (!odd_red.even_part.is_zero())
        throw ImpurityError("[P_sing v] at (q,r)=(" + std::to_string(q) + "," + std::to_string(r) + ")");

    ns::VermaElement gsv = ns::apply_mode(ns::Mode::Gmode(HalfInt(-1)), sv);
    BimoduleElement even_red = zhu_reduce(gsv, q, y);
    if (!even_red.odd_part.is_zero())
        throw ImpurityError("[G(-1/2) P_sing v] at (q,r)=(" + std::to_string(q) + "," + std::to_string(r) + ")");

    return {odd_red.odd_part, even_red.even_part};
}

inline QPolynomials q_polynomials(long q, long r) {
    return q_polynomials_from(singvec::singular_vector(q), q, r);
}

/// dim I(L(h_{1,s}) ; L(h_{1,q}), M(h_{1,r})) from the bimodule picture:
/// nonzero exactly when one of the cyclic quotients vanishes at h_{1,s}.
inline int verma_fusion_dim(const QPolynomials& qp, long s) {
    RadicalNumber h(ns::h_label(s));
    return (qp.q1.eval(h).is_zero() || qp.q2.eval(h).is_zero()) ? 1 : 0;
}

inline int verma_fusion_dim(long q, long r, long s) { return verma_fusion_dim(q_polynomials(q, r), s); }

/// Irreducible fusion dimension: the q <-> r symmetrization of the Verma rule.
inline int irreducible_fusion_dim(long q, long r, long s) {
    return verma_fusion_dim(q, r, s) && verma_fusion_dim(r, q, s) ? 1 : 0;
}

enum class Parity { even, odd, zero };

inline const char* parity_name(Parity p) {
    switch (p) {
        case Parity::even: return "even";
        case Parity::odd: return "odd";
        default: return "zero";
    }
}

/// Which parity class carries the (q,r,s) intertwiner, for q >= r: the even
/// class when Q2 vanishes at h_{1,s}, the odd class when Q1 does.  Both at
/// once would make the parity ill-defined and is surfaced as AmbiguousParity.
inline Parity fusion_parity(long q, long r, long s) {
    if (q < r) throw CalcError("fusion_parity requires q >= r");
    if (irreducible_fusion_dim(q, r, s) == 0) return Parity::zero;
    QPolynomials qp = q_polynomials(q, r);
    RadicalNumber h(ns::h_label(s));
    bool even_hit = qp.q2.eval(h).is_zero();
    bool odd_hit = qp.q1.eval(h).is_zero();
    if (even_hit && odd_hit)
        throw AmbiguousParity("(q,r,s)=(" + std::to_string(q) + "," + std::to_string(r) + "," +
                              std::to_string(s) + ")");
    return even_hit ? Parity::even : Parity::odd;
}

/// Expected root labels of Q2 and Q1: arithmetic sequences of step -4 from
/// q+r-1 (length (q+1)/2) and q+r-3 (length (q-1)/2).  Labels below the
/// reflection axis fold back through h_{1,s} = h_{1,2-s}, so the h-value sets
/// are what the theorems state for the sorted pair.
inline std::vector<long> expected_labels(long q, long r, bool even_class) {
    std::vector<long> out;
    long start = even_class ? q + r - 1 : q + r - 3;
    long count = even_class ? (q + 1) / 2 : (q - 1) / 2;
    for (long m = 0; m < count; ++m) out.push_back(start - 4 * m);
    return out;
}

}  // namespace nsf::zhu
