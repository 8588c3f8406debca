#pragma once

#include <string>
#include <utility>

#include "nsfusion/polynomial.hpp"
#include "nsfusion/singvec.hpp"
#include "nsfusion/zhu.hpp"

namespace nsf::density {

/// Matrix coefficient A(h) x^{s-d} + B(h) phi x^{s-d-1/2} of the two-point
/// function, with s = h - h_{1,q} - h_{1,r} kept symbolic in h.  phi^2 = 0 is
/// structural: there is exactly one soul slot.
struct Coefficient {
    HalfInt depth;
    Polynomial body;  // multiplies x^{s-d}
    Polynomial soul;  // multiplies phi x^{s-d-1/2}
    Rational h1;      // weight of the left input, h_{1,r}
    Rational hq;      // weight of the module whose singular vector acts, h_{1,q}

    Coefficient(Rational h1_, Rational hq_)
        : depth(0), body(Var::h), soul(Var::h), h1(std::move(h1_)), hq(std::move(hq_)) {}

    /// The symbolic body exponent s - d as a polynomial in h.
    Polynomial sigma() const {
        Rational shift = hq + h1 + depth.to_rational();
        return Polynomial::linear(Var::h, RadicalNumber(-shift), RadicalNumber(1));
    }
};

/// One negative mode acting as a super-differential operator on the matrix
/// coefficient.  L(-m) follows the replacement rule
///   L(-m) -> -(x^{1-m} d_x + (1-m) x^{-m} (h1 + 1/2 phi d_phi))
/// and G(-n-1/2) acts by
///   G(-n-1/2) -> x^{-n}(d_phi - phi d_x) + 2n h1 x^{-n-1} phi,
/// the sign of the h1 term fixed by the commutators of modes with the two
/// component operators (the zhu cross-check pins it).
inline Coefficient apply_generator(const ns::Mode& m, const Coefficient& e) {
    if (!m.creation()) throw CalcError("density operators are defined for negative modes only");
    Coefficient out(e.h1, e.hq);
    const Polynomial sig = e.sigma();
    if (m.kind == ns::Kind::L) {
        long mm = -m.idx.as_integer();
        Rational one_minus_m(1 - mm);
        // body: -(sigma + (1-m) h1) A ; soul: -(sigma - 1/2 + (1-m)(h1 + 1/2)) B
        Polynomial body_f = -(sig + Polynomial::constant(Var::h, RadicalNumber(one_minus_m * e.h1)));
        Polynomial soul_f = -(sig + Polynomial::constant(
                                        Var::h, RadicalNumber(one_minus_m * (e.h1 + Rational(1, 2)) -
                                                              Rational(1, 2))));
        out.body = body_f * e.body;
        out.soul = soul_f * e.soul;
        out.depth = e.depth + HalfInt::whole(mm);
    } else {
        HalfInt r = -m.idx;              // G(-r), r = n + 1/2
        long two_n = r.tw - 1;           // 2n
        out.body = e.soul;               // d_phi picks the soul into the body
        Polynomial soul_f = -(sig - Polynomial::constant(Var::h, RadicalNumber(Rational(two_n) * e.h1)));
        out.soul = soul_f * e.body;
        out.depth = e.depth + r;
    }
    return out;
}

/// Projection polynomials of the pair (q, r): the singular word of
/// M(3/2,h_{1,q}) acts as a composed super-differential operator (leftmost
/// generator outermost) on the two seeds; C1 is read off the soul of the body
/// seed, C2 off the body of the soul seed.  Total depth must come out q/2.
struct Projection {
    Polynomial c1, c2;
};

inline Projection project(long q, long r) {
    if (q < 1 || q % 2 == 0 || r < 1 || r % 2 == 0) throw CalcError("q and r must be odd and positive");
    const Rational h1 = ns::h_label(r);
    const Rational hq = ns::h_label(q);
    const ns::VermaElement sv = singvec::singular_vector(q);

    Polynomial c1(Var::h), c2(Var::h);
    for (const auto& [w, coeff] : sv.terms) {
        auto modes = w.modes();
        Coefficient run1(h1, hq), run2(h1, hq);
        run1.body = Polynomial::constant(Var::h, RadicalNumber(1));
        run2.soul = Polynomial::constant(Var::h, RadicalNumber(1));
        for (auto it = modes.rbegin(); it != modes.rend(); ++it) {
            run1 = apply_generator(*it, run1);
            run2 = apply_generator(*it, run2);
        }
        if (run1.depth != HalfInt(q) || run2.depth != HalfInt(q))
            throw DepthMismatch("word " + w.to_string() + " reached depth " + run1.depth.to_string() +
                                ", expected " + HalfInt(q).to_string());
        if (!run1.body.is_zero() || !run2.soul.is_zero())
            throw ImpurityError("density projection of " + w.to_string());
        c1 += run1.soul * coeff;
        c2 += run2.body * coeff;
    }
    return {c1, c2};
}

/// The closed product formulas, transcribed literally in both argument
/// orientations.  Diagnostic only: project() is authoritative, these are
/// returned for comparison.
struct ClosedForm {
    Polynomial c1_printed, c2_printed;  // j = (r-1)/4, labels q+4k
    Polynomial c1_swapped, c2_swapped;  // j = (q-1)/4, labels r+4k
};

namespace detail {

inline Polynomial product_c1(long anchor, long other) {
    // prod over k in {-j..j}, j = (other-1)/4: labels anchor - (other-1) + 4i
    Polynomial out = Polynomial::constant(Var::h, RadicalNumber(1));
    long count = (other - 1) / 2 + 1;
    for (long i = 0; i < count; ++i) {
        long s = anchor - (other - 1) + 4 * i;
        out *= Polynomial::linear(Var::h, RadicalNumber(-ns::h_label(s)), RadicalNumber(1));
    }
    return out;
}

inline Polynomial product_c2(long anchor, long other) {
    // prod over k in {-j+1/2..j-1/2}: labels anchor - (other-3) + 4i, with +1/2 shift
    Polynomial out = Polynomial::constant(Var::h, RadicalNumber(1));
    long count = (other - 1) / 2;
    for (long i = 0; i < count; ++i) {
        long s = anchor - (other - 3) + 4 * i;
        out *= Polynomial::linear(Var::h, RadicalNumber(Rational(1, 2) - ns::h_label(s)), RadicalNumber(1));
    }
    return out;
}

}  // namespace detail

inline ClosedForm closed_form_C(long q, long r) {
    return {detail::product_c1(q, r), detail::product_c2(q, r), detail::product_c1(r, q),
            detail::product_c2(r, q)};
}

/// Orientation of the closed form that matches the computed projection, if any.
inline std::string closed_form_orientation(const Projection& proj, const ClosedForm& cf) {
    if (proj.c1.proportional_to(cf.c1_printed) && proj.c2.proportional_to(cf.c2_printed)) return "printed";
    if (proj.c1.proportional_to(cf.c1_swapped) && proj.c2.proportional_to(cf.c2_swapped)) return "swapped";
    return "neither";
}

}  // namespace nsf::density
