#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "nsfusion/halfint.hpp"
#include "nsfusion/linalg.hpp"
#include "nsfusion/radical.hpp"

namespace nsf::osp {

/// The irreducible osp(1|2)-module V(j), dimension 4j+1, basis v_i with
/// i = j, j-1/2, ..., -j.  Under the even sl(2) it splits into the spin-j
/// chain (i - j integral, even vectors) and the spin-(j-1/2) chain (odd).
struct Irrep {
    HalfInt j;

    explicit Irrep(HalfInt jj) : j(jj) {
        if (j.tw < 0) throw CalcError("negative highest weight j");
    }
    long dim() const { return 2 * j.tw + 1; }
    bool in_range(HalfInt i) const { return -j <= i && i <= j; }
    std::vector<HalfInt> basis() const {
        std::vector<HalfInt> out;
        for (long t = j.tw; t >= -j.tw; --t) out.push_back(HalfInt(t));
        return out;
    }
    /// Parity of v_i: even exactly when i - j is an integer.
    static int parity(HalfInt j, HalfInt i) { return (i - j).is_integer() ? 0 : 1; }
};

enum class Gen { x, y, h, phi, chi };

inline bool is_odd_gen(Gen g) { return g == Gen::phi || g == Gen::chi; }

inline const char* gen_name(Gen g) {
    switch (g) {
        case Gen::x: return "x";
        case Gen::y: return "y";
        case Gen::h: return "h";
        case Gen::phi: return "phi";
        default: return "chi";
    }
}

/// Vector in V(j): sparse map i -> coefficient, no zeros stored.
struct Vector {
    Irrep irrep;
    std::map<HalfInt, RadicalNumber> entries;

    explicit Vector(Irrep ir) : irrep(ir) {}
    static Vector basis_vector(Irrep ir, HalfInt i) {
        Vector v(ir);
        if (!ir.in_range(i)) throw CalcError("basis index out of range");
        v.entries[i] = RadicalNumber(1);
        return v;
    }
    bool is_zero() const { return entries.empty(); }
    void add(HalfInt i, const RadicalNumber& c) {
        if (c.is_zero() || !irrep.in_range(i)) return;
        auto it = entries.find(i);
        if (it == entries.end()) {
            entries[i] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) entries.erase(it);
        }
    }
    Vector operator-(const Vector& o) const {
        Vector out = *this;
        for (const auto& [i, c] : o.entries) out.add(i, -c);
        return out;
    }
    bool operator==(const Vector& o) const { return irrep.j == o.irrep.j && entries == o.entries; }
};

/// Which leg of the two-branch action formulas gets the integral chain.
/// `standard` assigns the integral-chain coefficients to i - j integral;
/// `inverted` exists for the mutation check in the relation suite.
enum class Branch { standard, inverted };

namespace detail {

/// Raw action on a single basis vector: returns (target index, coefficient).
/// The bracket [z] in the x/y coefficients is the floor; on the integral chain
/// it is the identity and on the half chain it produces the spin-(j-1/2)
/// sl(2) coefficients, which is what the anticommutators with chi and phi force.
inline std::pair<HalfInt, RadicalNumber> act_basis(Gen g, HalfInt j, HalfInt i, Branch branch) {
    const bool integral = (i - j).is_integer() == (branch == Branch::standard);
    switch (g) {
        case Gen::h:
            return {i, RadicalNumber(Rational(i.tw))};  // h.v_i = 2i v_i
        case Gen::x: {
            long a = (j - i).floor(), b = (j + i + HalfInt::whole(1)).floor();
            return {i + HalfInt::whole(1), RadicalNumber::sqrt_of(a * b)};
        }
        case Gen::y: {
            long a = (j + i).floor(), b = (j - i + HalfInt::whole(1)).floor();
            return {i - HalfInt::whole(1), RadicalNumber::sqrt_of(a * b)};
        }
        case Gen::phi: {
            // radicands are integers on the standard branch assignment; the
            // rational sqrt keeps the inverted (mutation) assignment total
            Rational a = integral ? (j + i).to_rational() : (j - i + HalfInt::half(1)).to_rational();
            RadicalNumber c = RadicalNumber::sqrt_of(a);
            return {i - HalfInt::half(1), integral ? -c : c};
        }
        default: {  // chi
            Rational a = integral ? (j - i).to_rational() : (j + i + HalfInt::half(1)).to_rational();
            return {i + HalfInt::half(1), -RadicalNumber::sqrt_of(a)};
        }
    }
}

}  // namespace detail

/// Linear extension of the generator action; out-of-range targets vanish.
inline Vector act(Gen g, const Vector& v, Branch branch = Branch::standard) {
    Vector out(v.irrep);
    for (const auto& [i, c] : v.entries) {
        auto [tgt, coeff] = detail::act_basis(g, v.irrep.j, i, branch);
        out.add(tgt, c * coeff);
    }
    return out;
}

/// One defining relation, lhs = [a,b] or {a,b}, rhs = scalar * generator (or zero).
struct Relation {
    Gen a, b;
    bool anti;          // anticommutator when both odd
    Rational scalar;    // coefficient of rhs generator
    Gen rhs;            // meaningful iff scalar != 0
    std::string label;
};

/// The defining relations of osp(1|2) in the normalization the module
/// actions satisfy.  (The weight relations fix everything else: chi raises
/// h by 1, phi lowers by 1, chi^2 = x, phi^2 = -y, {chi,phi} = h.)
inline std::vector<Relation> relation_table() {
    return {
        {Gen::h, Gen::x, false, Rational(2), Gen::x, "[h,x]=2x"},
        {Gen::h, Gen::y, false, Rational(-2), Gen::y, "[h,y]=-2y"},
        {Gen::x, Gen::y, false, Rational(1), Gen::h, "[x,y]=h"},
        {Gen::h, Gen::chi, false, Rational(1), Gen::chi, "[h,chi]=chi"},
        {Gen::h, Gen::phi, false, Rational(-1), Gen::phi, "[h,phi]=-phi"},
        {Gen::x, Gen::chi, false, Rational(0), Gen::x, "[x,chi]=0"},
        {Gen::x, Gen::phi, false, Rational(-1), Gen::chi, "[x,phi]=-chi"},
        {Gen::y, Gen::chi, false, Rational(-1), Gen::phi, "[y,chi]=-phi"},
        {Gen::y, Gen::phi, false, Rational(0), Gen::y, "[y,phi]=0"},
        {Gen::chi, Gen::phi, true, Rational(1), Gen::h, "{chi,phi}=h"},
        {Gen::chi, Gen::chi, true, Rational(2), Gen::x, "{chi,chi}=2x"},
        {Gen::phi, Gen::phi, true, Rational(-2), Gen::y, "{phi,phi}=-2y"},
    };
}

/// Checks every defining relation on every basis vector of V(j).
/// Returns human-readable violation descriptions; empty means the module
/// actions represent the superalgebra exactly.
inline std::vector<std::string> verify_relations(HalfInt j, Branch branch = Branch::standard) {
    std::vector<std::string> violations;
    Irrep ir(j);
    for (const Relation& rel : relation_table()) {
        for (HalfInt i : ir.basis()) {
            Vector v = Vector::basis_vector(ir, i);
            Vector ab = act(rel.a, act(rel.b, v, branch), branch);
            Vector ba = act(rel.b, act(rel.a, v, branch), branch);
            Vector lhs(ir);
            for (const auto& [k, c] : ab.entries) lhs.add(k, c);
            for (const auto& [k, c] : ba.entries) lhs.add(k, rel.anti ? c : -c);
            Vector rhs(ir);
            if (!rel.scalar.is_zero()) {
                Vector gv = act(rel.rhs, v, branch);
                for (const auto& [k, c] : gv.entries) rhs.add(k, c * RadicalNumber(rel.scalar));
            }
            if (!(lhs == rhs))
                violations.push_back(rel.label + " fails on v_" + i.to_string() + " in V(" + j.to_string() + ")");
        }
    }
    return violations;
}

/// Vector in V(j1) (x) V(j2); the parity of v_{i1} (x) v_{i2} is the sum of
/// the factor parities mod 2.
struct TensorVector {
    HalfInt j1, j2;
    std::map<std::pair<HalfInt, HalfInt>, RadicalNumber> entries;

    TensorVector(HalfInt a, HalfInt b) : j1(a), j2(b) {}
    static TensorVector basis_vector(HalfInt j1, HalfInt j2, HalfInt i1, HalfInt i2) {
        TensorVector v(j1, j2);
        v.entries[{i1, i2}] = RadicalNumber(1);
        return v;
    }
    bool is_zero() const { return entries.empty(); }
    void add(HalfInt i1, HalfInt i2, const RadicalNumber& c) {
        if (c.is_zero()) return;
        if (!Irrep(j1).in_range(i1) || !Irrep(j2).in_range(i2)) return;
        auto key = std::make_pair(i1, i2);
        auto it = entries.find(key);
        if (it == entries.end()) {
            entries[key] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) entries.erase(it);
        }
    }
};

/// g(u (x) w) = g(u) (x) w + (-1)^{|g||u|} u (x) g(w)  (Koszul rule).
inline TensorVector tensor_act(Gen g, const TensorVector& v) {
    TensorVector out(v.j1, v.j2);
    const bool g_odd = is_odd_gen(g);
    for (const auto& [idx, c] : v.entries) {
        const auto& [i1, i2] = idx;
        auto [t1, c1] = detail::act_basis(g, v.j1, i1, Branch::standard);
        out.add(t1, i2, c * c1);
        auto [t2, c2] = detail::act_basis(g, v.j2, i2, Branch::standard);
        RadicalNumber signed_c = c;
        if (g_odd && Irrep::parity(v.j1, i1) == 1) signed_c = -signed_c;
        out.add(i1, t2, signed_c * c2);
    }
    return out;
}

/// Closed-form Clebsch-Gordan ladder: {|j1-j2|, |j1-j2|+1/2, ..., j1+j2}.
inline std::vector<HalfInt> grothendieck_product(HalfInt j1, HalfInt j2) {
    std::vector<HalfInt> out;
    long lo = std::abs(j1.tw - j2.tw), hi = j1.tw + j2.tw;
    for (long t = lo; t <= hi; ++t) out.push_back(HalfInt(t));
    return out;
}

/// Decomposes V(j1) (x) V(j2) from first principles: for every h-eigenvalue,
/// the joint kernel of x and chi on the weight space counts highest-weight
/// vectors.  The kernel rank is computed division-free over the radical ring.
/// Throws DecompositionMismatch when dimensions fail to add up.
inline std::vector<HalfInt> tensor_decompose(HalfInt j1, HalfInt j2) {
    Irrep a(j1), b(j2);
    // group the product basis by weight (2k = i1.tw + i2.tw)
    std::map<long, std::vector<std::pair<HalfInt, HalfInt>>> weight_spaces;
    for (HalfInt i1 : a.basis())
        for (HalfInt i2 : b.basis()) weight_spaces[i1.tw + i2.tw].push_back({i1, i2});

    std::vector<HalfInt> summands;
    for (const auto& [twok, space] : weight_spaces) {
        // index maps for the two target weight spaces
        auto idx_of = [&](long tw) {
            std::map<std::pair<HalfInt, HalfInt>, size_t> m;
            auto it = weight_spaces.find(tw);
            if (it != weight_spaces.end())
                for (size_t k = 0; k < it->second.size(); ++k) m[it->second[k]] = k;
            return m;
        };
        auto chi_rows = idx_of(twok + 1), x_rows = idx_of(twok + 2);
        linalg::Matrix m(chi_rows.size() + x_rows.size(), space.size());
        for (size_t col = 0; col < space.size(); ++col) {
            TensorVector v = TensorVector::basis_vector(j1, j2, space[col].first, space[col].second);
            TensorVector cv = tensor_act(Gen::chi, v);
            for (const auto& [key, c] : cv.entries) m.at(chi_rows.at(key), col) = c;
            TensorVector xv = tensor_act(Gen::x, v);
            for (const auto& [key, c] : xv.entries) m.at(chi_rows.size() + x_rows.at(key), col) = c;
        }
        size_t null_dim = space.size() - linalg::rank_division_free(m);
        for (size_t k = 0; k < null_dim; ++k) summands.push_back(HalfInt(twok));
    }
    std::sort(summands.begin(), summands.end());

    long total = 0;
    for (HalfInt k : summands) {
        if (k.tw < 0)
            throw DecompositionMismatch("highest-weight vector at negative weight " + k.to_string());
        total += 2 * k.tw + 1;
    }
    if (total != a.dim() * b.dim())
        throw DecompositionMismatch("dimension count " + std::to_string(total) + " != " +
                                    std::to_string(a.dim() * b.dim()));
    return summands;
}

}  // namespace nsf::osp
