#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nsfusion/osp.hpp"
#include "nsfusion/zhu.hpp"

namespace nsf::fusion {

/// Formal nonnegative sum of generators b(m), m odd; b(1) is the identity.
struct FusionElement {
    std::map<long, unsigned long> mult;

    static FusionElement generator(long m) {
        if (m < 1 || m % 2 == 0) throw CalcError("fusion generators are b(m) with m odd");
        FusionElement e;
        e.mult[m] = 1;
        return e;
    }
    void add(long m, unsigned long k) {
        if (k == 0) return;
        mult[m] += k;
    }
    bool operator==(const FusionElement& o) const { return mult == o.mult; }
};

/// The mapping b(m) -> V((m-1)/4) into the osp(1|2) Grothendieck ring.
inline HalfInt to_osp(long m) {
    if (m < 1 || m % 2 == 0) throw CalcError("b(m) requires odd positive m");
    return HalfInt((m - 1) / 2);  // twice (m-1)/4
}

/// Fusion ring calculator.  Structure constants are always recomputed from
/// the Zhu polynomials of kernel singular vectors; the theorems about the
/// resulting window serve as oracles in the tests, never as shortcuts here.
class Ring {
  public:
    /// dim I(L(h_{1,s}); L(h_{1,q}), L(h_{1,r})), symmetrized Verma rule.
    int structure_constant(long q, long r, long s) {
        const zhu::QPolynomials& a = qpoly(q, r);
        const zhu::QPolynomials& b = qpoly(r, q);
        return zhu::verma_fusion_dim(a, s) && zhu::verma_fusion_dim(b, s) ? 1 : 0;
    }

    FusionElement generator_product(long q, long r) {
        FusionElement out;
        for (long s = 1; s <= q + r - 1; s += 2) out.add(s, structure_constant(q, r, s));
        return out;
    }

    FusionElement multiply(const FusionElement& a, const FusionElement& b) {
        FusionElement out;
        for (const auto& [q, cq] : a.mult)
            for (const auto& [r, cr] : b.mult) {
                FusionElement prod = generator_product(q, r);
                for (const auto& [s, cs] : prod.mult) out.add(s, cq * cr * cs);
            }
        return out;
    }

    zhu::Parity parity(long q, long r, long s) {
        long hi = std::max(q, r), lo = std::min(q, r);
        if (structure_constant(q, r, s) == 0) return zhu::Parity::zero;
        const zhu::QPolynomials& qp = qpoly(hi, lo);
        RadicalNumber h(ns::h_label(s));
        bool even_hit = qp.q2.eval(h).is_zero();
        bool odd_hit = qp.q1.eval(h).is_zero();
        if (even_hit && odd_hit)
            throw AmbiguousParity("(q,r,s)=(" + std::to_string(q) + "," + std::to_string(r) + "," +
                                  std::to_string(s) + ")");
        return even_hit ? zhu::Parity::even : zhu::Parity::odd;
    }

    /// b(q) x b(r) maps to the osp tensor ladder for all odd q, r <= bound,
    /// with the osp side independently validated through highest-weight
    /// extraction wherever 2j <= 5.
    bool verify_isomorphism(long bound) {
        for (long q = 1; q <= bound; q += 2) {
            for (long r = 1; r <= bound; r += 2) {
                FusionElement prod = generator_product(q, r);
                std::vector<HalfInt> image;
                for (const auto& [s, k] : prod.mult)
                    for (unsigned long i = 0; i < k; ++i) image.push_back(to_osp(s));
                std::sort(image.begin(), image.end());
                HalfInt j1 = to_osp(q), j2 = to_osp(r);
                if (image != osp::grothendieck_product(j1, j2)) return false;
                if (j1.tw <= 5 && j2.tw <= 5) {
                    if (osp::tensor_decompose(j1, j2) != osp::grothendieck_product(j1, j2)) return false;
                }
            }
        }
        return true;
    }

    /// Identity, commutativity and associativity on generators up to bound.
    bool verify_ring_axioms(long bound) {
        for (long m = 1; m <= bound; m += 2) {
            FusionElement e = generator_product(1, m);
            if (!(e == FusionElement::generator(m))) return false;
        }
        for (long q = 1; q <= bound; q += 2)
            for (long r = q; r <= bound; r += 2)
                if (!(generator_product(q, r) == generator_product(r, q))) return false;
        for (long q = 1; q <= bound; q += 2)
            for (long r = 1; r <= bound; r += 2)
                for (long s = 1; s <= bound; s += 2) {
                    FusionElement left = multiply(multiply(FusionElement::generator(q), FusionElement::generator(r)),
                                                  FusionElement::generator(s));
                    FusionElement right = multiply(FusionElement::generator(q),
                                                   multiply(FusionElement::generator(r), FusionElement::generator(s)));
                    if (!(left == right)) return false;
                }
        return true;
    }

    const zhu::QPolynomials& qpoly(long q, long r) {
        auto key = std::make_pair(q, r);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, zhu::q_polynomials_from(sing(q), q, r)).first;
        return it->second;
    }

    const ns::VermaElement& sing(long q) {
        auto it = sv_cache_.find(q);
        if (it == sv_cache_.end()) it = sv_cache_.emplace(q, singvec::singular_vector(q)).first;
        return it->second;
    }

  private:
    std::map<std::pair<long, long>, zhu::QPolynomials> cache_;
    std::map<long, ns::VermaElement> sv_cache_;
};

}  // namespace nsf::fusion
