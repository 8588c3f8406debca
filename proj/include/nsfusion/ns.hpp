#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nsfusion/halfint.hpp"
#include "nsfusion/linalg.hpp"
#include "nsfusion/radical.hpp"

namespace nsf::ns {

// ---------------------------------------------------------------------------
// Modes and PBW words
// ---------------------------------------------------------------------------

enum class Kind { L, G };

/// A single Neveu-Schwarz mode L(idx) (idx integral) or G(idx) (idx half-odd).
struct Mode {
    Kind kind;
    HalfInt idx;

    static Mode Lmode(long n) { return {Kind::L, HalfInt::whole(n)}; }
    static Mode Gmode(HalfInt r) {
        if (r.is_integer()) throw CalcError("G index must be half-odd");
        return {Kind::G, r};
    }

    bool creation() const { return idx.tw < 0; }
    Mode adjoint() const { return {kind, -idx}; }
    auto operator<=>(const Mode&) const = default;

    std::string to_string() const {
        return std::string(kind == Kind::L ? "L(" : "G(") + idx.to_string() + ")";
    }
};

/// Normal-ordered monomial G(-r1)...G(-rk) L(-n1)...L(-nl) acting on the
/// highest-weight vector; r strictly decreasing, n weakly decreasing.
struct PBWWord {
    std::vector<HalfInt> g;  // positive half-odd r, strictly decreasing
    std::vector<long> l;     // positive n, weakly decreasing

    HalfInt level() const {
        HalfInt total;
        for (HalfInt r : g) total += r;
        for (long n : l) total += HalfInt::whole(n);
        return total;
    }
    int parity() const { return static_cast<int>(g.size() % 2); }
    bool empty() const { return g.empty() && l.empty(); }

    std::vector<Mode> modes() const {
        std::vector<Mode> out;
        out.reserve(g.size() + l.size());
        for (HalfInt r : g) out.push_back(Mode::Gmode(-r));
        for (long n : l) out.push_back(Mode::Lmode(-n));
        return out;
    }

    /// Canonical word order: lexicographic over per-mode keys (G before L,
    /// deeper modes first).  This is the fixed order of bases and renderings.
    std::vector<std::pair<int, long>> sort_key() const {
        std::vector<std::pair<int, long>> k;
        k.reserve(g.size() + l.size());
        for (HalfInt r : g) k.push_back({0, -r.tw});
        for (long n : l) k.push_back({1, -2 * n});
        return k;
    }
    bool operator<(const PBWWord& o) const { return sort_key() < o.sort_key(); }
    bool operator==(const PBWWord& o) const { return g == o.g && l == o.l; }

    std::string to_string() const {
        if (empty()) return "1";
        std::string out;
        for (HalfInt r : g) out += "G(" + (-r).to_string() + ")";
        for (long n : l) out += "L(" + std::to_string(-n) + ")";
        return out;
    }
};

/// All PBW words of the given level, in canonical order.
inline std::vector<PBWWord> pbw_basis(HalfInt level) {
    if (level.tw < 0) throw CalcError("negative level");
    std::vector<PBWWord> out;
    // enumerate strictly decreasing half-odd G parts, then partitions of the rest
    std::vector<HalfInt> gpart;
    auto rec_l = [&](auto&& self, long remaining, long max_part, std::vector<long>& lpart) -> void {
        if (remaining == 0) {
            out.push_back(PBWWord{gpart, lpart});
            return;
        }
        for (long n = std::min(max_part, remaining); n >= 1; --n) {
            lpart.push_back(n);
            self(self, remaining - n, n, lpart);
            lpart.pop_back();
        }
    };
    auto rec_g = [&](auto&& self, HalfInt remaining, long max_tw) -> void {
        if (remaining.is_integer() && remaining.tw >= 0) {
            std::vector<long> lpart;
            rec_l(rec_l, remaining.as_integer(), remaining.tw / 2 + 1, lpart);
        }
        long start = std::min(max_tw, remaining.tw);
        if (start % 2 == 0) --start;  // G indices are half-odd
        for (long tw = start; tw >= 1; tw -= 2) {
            gpart.push_back(HalfInt(tw));
            self(self, remaining - HalfInt(tw), tw - 2);
            gpart.pop_back();
        }
    };
    rec_g(rec_g, level, level.tw % 2 ? level.tw : level.tw - 1);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Verma module elements and the normal-ordering engine
// ---------------------------------------------------------------------------

/// Finite linear combination of PBW words in M(c,h).
struct VermaElement {
    RadicalNumber c, h;
    std::map<PBWWord, RadicalNumber> terms;

    VermaElement(RadicalNumber cc, RadicalNumber hh) : c(std::move(cc)), h(std::move(hh)) {}

    bool is_zero() const { return terms.empty(); }
    void add_term(const PBWWord& w, const RadicalNumber& coeff) {
        if (coeff.is_zero()) return;
        auto it = terms.find(w);
        if (it == terms.end()) {
            terms[w] = coeff;
        } else {
            it->second += coeff;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    VermaElement operator+(const VermaElement& o) const {
        VermaElement out = *this;
        for (const auto& [w, co] : o.terms) out.add_term(w, co);
        return out;
    }
    VermaElement operator-(const VermaElement& o) const {
        VermaElement out = *this;
        for (const auto& [w, co] : o.terms) out.add_term(w, -co);
        return out;
    }
    VermaElement operator*(const RadicalNumber& s) const {
        VermaElement out(c, h);
        if (s.is_zero()) return out;
        for (const auto& [w, co] : terms) out.terms[w] = co * s;
        return out;
    }
    bool operator==(const VermaElement& o) const { return terms == o.terms; }

    /// Common level of all words; NonHomogeneous when levels mix, 0 for zero.
    HalfInt homogeneous_level() const {
        std::optional<HalfInt> lvl;
        for (const auto& [w, co] : terms) {
            HalfInt wl = w.level();
            if (lvl && *lvl != wl) throw NonHomogeneous();
            lvl = wl;
        }
        return lvl.value_or(HalfInt(0));
    }
};

inline VermaElement vacuum(const RadicalNumber& c, const RadicalNumber& h) {
    VermaElement v(c, h);
    v.terms[PBWWord{}] = RadicalNumber(1);
    return v;
}

inline VermaElement word_element(const RadicalNumber& c, const RadicalNumber& h, const PBWWord& w,
                                 const RadicalNumber& coeff = RadicalNumber(1)) {
    VermaElement v(c, h);
    v.add_term(w, coeff);
    return v;
}

namespace detail {

// position class inside a word: creation G < creation L < everything else
inline int mode_rank(const Mode& m) {
    if (m.creation()) return m.kind == Kind::G ? 0 : 1;
    return 2;
}

/// May `a` sit immediately left of `b` in a reduced string?
inline bool pair_ok(const Mode& a, const Mode& b) {
    int ra = mode_rank(a), rb = mode_rank(b);
    if (ra != rb) return ra < rb;
    if (ra == 0) return a.idx < b.idx;  // equal G indices must contract
    if (ra == 1) return a.idx <= b.idx;
    return true;  // annihilators sort themselves out at the vacuum
}

struct Term {
    RadicalNumber coeff;
    std::vector<Mode> modes;
};

/// Worklist normal ordering.  Repeatedly rewrites the first out-of-order
/// adjacent pair using the superalgebra relations
///   [L_m, L_n] = (m-n) L_{m+n} + (C/12)(m^3-m) delta,
///   [L_m, G_r] = (m/2 - r) G_{m+r},
///   {G_r, G_s} = 2 L_{r+s} + (C/3)(r^2 - 1/4) delta,
/// contracts equal G pairs through G_r G_r = L_{2r}, and resolves trailing
/// annihilators, L(0) and C against the highest-weight vector.  Each rewrite
/// replaces a string by deg-lex smaller ones, so the loop terminates.
inline void normalize_into(const RadicalNumber& c, const RadicalNumber& h, Term seed,
                           std::map<PBWWord, RadicalNumber>& out) {
    std::vector<Term> work;
    work.push_back(std::move(seed));
    while (!work.empty()) {
        Term t = std::move(work.back());
        work.pop_back();
        if (t.coeff.is_zero()) continue;

        size_t defect = t.modes.size();
        for (size_t i = 0; i + 1 < t.modes.size(); ++i) {
            if (!pair_ok(t.modes[i], t.modes[i + 1])) {
                defect = i;
                break;
            }
        }

        if (defect + 1 < t.modes.size()) {
            const Mode a = t.modes[defect], b = t.modes[defect + 1];
            auto rest_with = [&](std::vector<Mode> replacement) {
                Term nt;
                nt.modes.reserve(t.modes.size() - 2 + replacement.size());
                nt.modes.insert(nt.modes.end(), t.modes.begin(), t.modes.begin() + defect);
                nt.modes.insert(nt.modes.end(), replacement.begin(), replacement.end());
                nt.modes.insert(nt.modes.end(), t.modes.begin() + defect + 2, t.modes.end());
                return nt;
            };
            if (a.kind == Kind::G && b.kind == Kind::G && a.idx == b.idx) {
                // G_r G_r = L_{2r}; the central term cannot fire at half-odd r
                Term nt = rest_with({Mode{Kind::L, a.idx + b.idx}});
                nt.coeff = t.coeff;
                work.push_back(std::move(nt));
                continue;
            }
            const bool both_odd = a.kind == Kind::G && b.kind == Kind::G;
            {  // swapped term
                Term nt = rest_with({b, a});
                nt.coeff = both_odd ? -t.coeff : t.coeff;
                work.push_back(std::move(nt));
            }
            if (a.kind == Kind::L && b.kind == Kind::L) {
                long m = a.idx.as_integer(), n = b.idx.as_integer();
                if (m != n) {
                    Term nt = rest_with({Mode{Kind::L, a.idx + b.idx}});
                    nt.coeff = t.coeff * Rational(m - n);
                    work.push_back(std::move(nt));
                }
                if (m + n == 0) {
                    Term nt = rest_with({});
                    nt.coeff = t.coeff * c * Rational(m * m * m - m, 12);
                    work.push_back(std::move(nt));
                }
            } else if (both_odd) {
                {
                    Term nt = rest_with({Mode{Kind::L, a.idx + b.idx}});
                    nt.coeff = t.coeff * Rational(2);
                    work.push_back(std::move(nt));
                }
                if ((a.idx + b.idx).tw == 0) {
                    Term nt = rest_with({});
                    nt.coeff = t.coeff * c * Rational(a.idx.tw * a.idx.tw - 1, 12);
                    work.push_back(std::move(nt));
                }
            } else {
                // [L_m, G_r] = (m/2 - r) G_{m+r}, negated when G comes first
                const Mode& lm = a.kind == Kind::L ? a : b;
                const Mode& gr = a.kind == Kind::L ? b : a;
                Rational f = Rational(lm.idx.tw, 4) - Rational(gr.idx.tw, 2);
                if (a.kind == Kind::G) f = -f;
                if (!f.is_zero()) {
                    Term nt = rest_with({Mode{Kind::G, lm.idx + gr.idx}});
                    nt.coeff = t.coeff * f;
                    work.push_back(std::move(nt));
                }
            }
            continue;
        }

        // no adjacent defects: resolve the boundary against the vacuum
        if (!t.modes.empty() && mode_rank(t.modes.back()) == 2) {
            const Mode back = t.modes.back();
            if (back.idx.tw > 0) continue;  // annihilates the highest-weight vector
            t.modes.pop_back();             // L(0) acts by the weight
            t.coeff *= h;
            work.push_back(std::move(t));
            continue;
        }

        // fully reduced: modes are creation modes in canonical order
        PBWWord w;
        for (const Mode& m : t.modes) {
            if (m.kind == Kind::G)
                w.g.push_back(-m.idx);
            else
                w.l.push_back(-m.idx.as_integer());
        }
        auto it = out.find(w);
        if (it == out.end()) {
            out[w] = t.coeff;
        } else {
            it->second += t.coeff;
            if (it->second.is_zero()) out.erase(it);
        }
    }
}

}  // namespace detail

/// Applies a single mode to an element, returning the PBW normal form.
inline VermaElement apply_mode(const Mode& m, const VermaElement& v) {
    VermaElement out(v.c, v.h);
    for (const auto& [w, coeff] : v.terms) {
        detail::Term t;
        t.coeff = coeff;
        t.modes.push_back(m);
        auto rest = w.modes();
        t.modes.insert(t.modes.end(), rest.begin(), rest.end());
        detail::normalize_into(v.c, v.h, std::move(t), out.terms);
    }
    return out;
}

/// Applies a mode string (rightmost mode acts first).
inline VermaElement apply_word(const std::vector<Mode>& modes, VermaElement v) {
    for (auto it = modes.rbegin(); it != modes.rend(); ++it) v = apply_mode(*it, v);
    return v;
}

// ---------------------------------------------------------------------------
// Shapovalov form, Gram kernels, singular vectors
// ---------------------------------------------------------------------------

/// Direct form entry <u, w> = vacuum coefficient of adjoint(u) applied to w.
inline RadicalNumber shapovalov_entry(const RadicalNumber& c, const RadicalNumber& h, const PBWWord& u,
                                      const PBWWord& w) {
    std::vector<Mode> adj = u.modes();
    std::reverse(adj.begin(), adj.end());
    for (Mode& m : adj) m = m.adjoint();
    VermaElement r = apply_word(adj, word_element(c, h, w));
    auto it = r.terms.find(PBWWord{});
    return it == r.terms.end() ? RadicalNumber() : it->second;
}

/// Gram matrix of the contravariant form on a weight level, indexed by
/// pbw_basis(level).  Computed level-by-level: peeling the first mode m off a
/// row word u reduces <m u', w> to <u', adjoint(m) w>, an inner product at a
/// lower level, so earlier Gram matrices feed later ones.
inline linalg::Matrix shapovalov_matrix(const RadicalNumber& c, const RadicalNumber& h, HalfInt level) {
    std::map<long, std::vector<PBWWord>> bases;
    std::map<long, std::map<std::string, size_t>> index;
    std::map<long, linalg::Matrix> grams;
    for (long tw = 0; tw <= level.tw; ++tw) {
        bases[tw] = pbw_basis(HalfInt(tw));
        auto& idx = index[tw];
        for (size_t k = 0; k < bases[tw].size(); ++k) idx[bases[tw][k].to_string()] = k;
    }
    for (long tw = 0; tw <= level.tw; ++tw) {
        const auto& basis = bases[tw];
        linalg::Matrix m(basis.size(), basis.size());
        if (tw == 0) {
            if (!basis.empty()) m.at(0, 0) = RadicalNumber(1);
            grams.emplace(tw, std::move(m));
            continue;
        }
        for (size_t col = 0; col < basis.size(); ++col) {
            // cache adjoint(first-mode) applied to the column word
            std::map<std::string, VermaElement> applied;
            for (size_t row = 0; row < basis.size(); ++row) {
                const PBWWord& u = basis[row];
                Mode first = u.modes().front();
                PBWWord rest = u;
                if (!rest.g.empty())
                    rest.g.erase(rest.g.begin());
                else
                    rest.l.erase(rest.l.begin());
                const long rest_tw = tw + first.idx.tw;  // first.idx is negative
                auto key = first.to_string();
                auto ait = applied.find(key);
                if (ait == applied.end())
                    ait = applied.emplace(key, apply_mode(first.adjoint(), word_element(c, h, basis[col]))).first;
                const VermaElement& f = ait->second;
                RadicalNumber acc;
                const auto& sub_gram = grams.at(rest_tw);
                const auto& sub_index = index.at(rest_tw);
                size_t urow = sub_index.at(rest.to_string());
                for (const auto& [v, coeff] : f.terms)
                    acc += coeff * sub_gram.at(urow, sub_index.at(v.to_string()));
                m.at(row, col) = acc;
            }
        }
        grams.emplace(tw, std::move(m));
    }
    return grams.at(level.tw);
}

struct KernelVector {
    VermaElement element;
    bool singular;  // false when the null vector lies in the submodule from below
};

/// True iff the homogeneous element is annihilated by G(1/2) and G(3/2),
/// which generate the raising half of the algebra.
inline bool singular_verify(const VermaElement& v) {
    v.homogeneous_level();  // throws NonHomogeneous on mixed levels
    if (v.is_zero()) return true;
    return apply_mode(Mode::Gmode(HalfInt(1)), v).is_zero() &&
           apply_mode(Mode::Gmode(HalfInt(3)), v).is_zero();
}

/// Null space of the level Gram matrix, as Verma elements.
inline std::vector<KernelVector> gram_kernel(const RadicalNumber& c, const RadicalNumber& h, HalfInt level) {
    auto basis = pbw_basis(level);
    auto kernel = linalg::kernel_basis(shapovalov_matrix(c, h, level));
    std::vector<KernelVector> out;
    for (const auto& coords : kernel) {
        VermaElement e(c, h);
        for (size_t k = 0; k < basis.size(); ++k) e.add_term(basis[k], coords[k]);
        bool sing = singular_verify(e);
        out.push_back({std::move(e), sing});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Reducibility locus
// ---------------------------------------------------------------------------

/// Point on a reducibility curve: h = h_{p,q}(t) at central charge c(t).
struct CurvePoint {
    long p, q;
    RadicalNumber t, h;
};

inline Rational h_label(long s) { return Rational((s - 1) * (s - 1), 8); }  // h_{1,s} at t = -1

/// Solves c(t) = c for t and lists all (p,q,t,h_{p,q}(t)) with pq/2 <= max_level,
/// deduplicated by (h, pq).  Throws UnrepresentableRoot when t falls outside
/// the scalar ring.
inline std::vector<CurvePoint> reducibility_locus(const RadicalNumber& c, HalfInt max_level) {
    const RadicalNumber b = RadicalNumber(Rational(15, 2)) - c;  // 3t^2 + b t + 3 = 0
    const RadicalNumber disc = b * b - RadicalNumber(36);
    const RadicalNumber sq = radical_sqrt(disc);
    const Rational sixth(1, 6);
    std::vector<RadicalNumber> roots{(-b + sq) * sixth};
    if (!sq.is_zero()) roots.push_back((-b - sq) * sixth);

    std::vector<CurvePoint> points;
    std::map<std::pair<std::string, long>, bool> seen;
    const long pq_max = max_level.tw;  // pq <= 2 * max_level
    for (long p = 1; p <= pq_max; ++p) {
        for (long q = 1; p * q <= pq_max; ++q) {
            if ((p - q) % 2 != 0) continue;
            for (const RadicalNumber& t : roots) {
                RadicalNumber h = RadicalNumber(Rational(1 - p * p, 8)) * t.inverse() +
                                  RadicalNumber(Rational(1 - p * q, 4)) +
                                  RadicalNumber(Rational(1 - q * q, 8)) * t;
                auto key = std::make_pair(h.to_string(), p * q);
                if (seen.emplace(key, true).second) points.push_back({p, q, t, h});
            }
        }
    }
    std::sort(points.begin(), points.end(), [](const CurvePoint& a, const CurvePoint& b) {
        auto ka = std::make_tuple(a.p * a.q, a.p, a.q, a.t.to_string());
        auto kb = std::make_tuple(b.p * b.q, b.p, b.q, b.t.to_string());
        return ka < kb;
    });
    return points;
}

// ---------------------------------------------------------------------------
// Canonical text rendering of elements (the golden-file format)
// ---------------------------------------------------------------------------

/// One line per term, "coeff * word ;", largest word first.
inline std::string render_element(const VermaElement& v) {
    std::string out;
    for (auto it = v.terms.rbegin(); it != v.terms.rend(); ++it) {
        std::string cs = it->second.to_string();
        if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
        out += cs + " * " + it->first.to_string() + " ;\n";
    }
    return out;
}

}  // namespace nsf::ns
