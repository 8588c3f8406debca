#pragma once

#include <string>
#include <vector>

#include "nsfusion/ns.hpp"

namespace nsf::singvec {

/// Ordered sequence of odd positive integers summing to q.
using OddComposition = std::vector<long>;

/// Every composition of q into odd parts, lexicographic order.
inline std::vector<OddComposition> odd_compositions(long q) {
    if (q < 1 || q % 2 == 0) throw CalcError("q must be odd and positive");
    std::vector<OddComposition> out;
    OddComposition cur;
    auto rec = [&](auto&& self, long remaining) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (long k = 1; k <= remaining; k += 2) {
            cur.push_back(k);
            self(self, remaining - k);
            cur.pop_back();
        }
    };
    rec(rec, q);
    return out;
}

/// Signed Benoit--Saint-Aubin coefficient of one composition:
///   (-1)^{(q-N)/2} prod_i C(k_i-1, (k_i-1)/2) prod_j 4/(sigma_{2j} rho_{2j})
/// with partial sums taken in the composition's own order.
inline Rational bsa_coefficient(const OddComposition& comp) {
    long q = 0;
    for (long k : comp) q += k;
    const long N = static_cast<long>(comp.size());
    Rational out(((q - N) / 2) % 2 ? -1 : 1);
    for (long k : comp) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k - 1),
                     static_cast<unsigned long>((k - 1) / 2));
        out *= Rational(binom);
    }
    std::vector<long> sigma(N + 1, 0), rho(N + 2, 0);
    for (long j = 1; j <= N; ++j) sigma[j] = sigma[j - 1] + comp[j - 1];
    for (long j = N; j >= 1; --j) rho[j] = rho[j + 1] + comp[j - 1];
    for (long j = 1; j <= (N - 1) / 2; ++j) out *= Rational(4, sigma[2 * j] * rho[2 * j]);
    return out;
}

/// The classical Benoit--Saint-Aubin expression for the singular vector: the
/// partition sum with its S_N symmetrization, realized as a sum over
/// compositions weighted by the stabilizer size (product of part-multiplicity
/// factorials), each G-monomial normal ordered in composition order.
/// Lives in M(3/2, h_{1,q}).
inline ns::VermaElement bsa_vector(long q) {
    const RadicalNumber c(Rational(3, 2));
    const RadicalNumber h(ns::h_label(q));
    ns::VermaElement acc(c, h);
    for (const OddComposition& comp : odd_compositions(q)) {
        std::map<long, long> mult;
        for (long k : comp) ++mult[k];
        Rational stab(1);
        for (const auto& [part, m] : mult) {
            (void)part;
            for (long i = 2; i <= m; ++i) stab *= Rational(i);
        }
        std::vector<ns::Mode> modes;
        for (long k : comp) modes.push_back(ns::Mode::Gmode(HalfInt(-k)));
        ns::VermaElement word = ns::apply_word(modes, ns::vacuum(c, h));
        acc = acc + word * RadicalNumber(stab * bsa_coefficient(comp));
    }
    return acc;
}

/// The authoritative singular vector of M(3/2, h_{1,q}) at level q/2: the
/// one-dimensional Gram kernel, normalized so the lexicographically largest
/// word carries coefficient 1.  Throws KernelDimensionUnexpected otherwise.
inline ns::VermaElement singular_vector(long q) {
    if (q < 1 || q % 2 == 0) throw CalcError("q must be odd and positive");
    const RadicalNumber c(Rational(3, 2));
    const RadicalNumber h(ns::h_label(q));
    if (q == 1) {
        ns::PBWWord w;
        w.g.push_back(HalfInt(1));
        return ns::word_element(c, h, w);
    }
    auto kernel = ns::gram_kernel(c, h, HalfInt(q));
    if (kernel.size() != 1 || !kernel[0].singular)
        throw KernelDimensionUnexpected("level " + HalfInt(q).to_string() + " kernel of M(3/2,h_{1," +
                                        std::to_string(q) + "}) has dimension " +
                                        std::to_string(kernel.size()));
    ns::VermaElement v = kernel[0].element;
    RadicalNumber lead = v.terms.rbegin()->second;
    return v * lead.inverse();
}

/// Permanent transcription record comparing the classical expression against
/// the kernel vector; the verdict is reported, never assumed.
struct ValidationReport {
    long q = 0;
    bool proportional = false;
    RadicalNumber ratio;            // bsa = ratio * kernel when proportional
    ns::VermaElement bsa, kernel;   // both vectors, for the record
    ns::VermaElement residual_g12;  // G(1/2) bsa and G(3/2) bsa otherwise
    ns::VermaElement residual_g32;

    ValidationReport(ns::VermaElement b, ns::VermaElement k)
        : bsa(std::move(b)), kernel(std::move(k)), residual_g12(bsa.c, bsa.h), residual_g32(bsa.c, bsa.h) {}
};

inline ValidationReport bsa_validate(long q) {
    ValidationReport rep(bsa_vector(q), singular_vector(q));
    rep.q = q;
    bool prop = !rep.bsa.is_zero();
    RadicalNumber ratio;
    if (prop) {
        const ns::PBWWord& lead = rep.kernel.terms.rbegin()->first;
        auto it = rep.bsa.terms.find(lead);
        if (it == rep.bsa.terms.end()) {
            prop = false;
        } else {
            ratio = it->second;  // kernel is normalized to lead coefficient 1
            prop = rep.bsa == rep.kernel * ratio;
        }
    }
    rep.proportional = prop;
    if (prop) {
        rep.ratio = ratio;
    } else {
        rep.residual_g12 = ns::apply_mode(ns::Mode::Gmode(HalfInt(1)), rep.bsa);
        rep.residual_g32 = ns::apply_mode(ns::Mode::Gmode(HalfInt(3)), rep.bsa);
    }
    return rep;
}

}  // namespace nsf::singvec
