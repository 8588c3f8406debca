#pragma once

#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "nsfusion/rational.hpp"

namespace nsf {

/// Element of the ring Q[sqrt(n) : n square-free], stored as a map from the
/// square-free radicand n to its rational coefficient.  Key 1 is the rational
/// part.  Zero coefficients are never stored, so equality is structural.
///
/// The ring is closed under +, -, *.  Inversion is only defined on elements
/// supported inside one quadratic field Q(sqrt(n)); everything in scope needs
/// no more (Gram kernels run over Q, the irrational locus lives in Q(sqrt 5)).
class RadicalNumber {
  public:
    RadicalNumber() = default;
    RadicalNumber(long n) : RadicalNumber(Rational(n)) {}  // NOLINT: implicit by design
    RadicalNumber(const Rational& r) {                     // NOLINT: implicit by design
        if (!r.is_zero()) terms_[1] = r;
    }

    /// sqrt of a nonnegative integer, reduced to c*sqrt(d) with d square-free.
    static RadicalNumber sqrt_of(long n) {
        if (n < 0) throw CalcError("sqrt of negative integer");
        if (n == 0) return RadicalNumber();
        auto [square, free] = split_square(n);
        RadicalNumber out;
        out.terms_[free] = Rational(square);
        return out;
    }

    /// sqrt of a nonnegative rational: sqrt(p/q) = sqrt(p*q)/q.
    static RadicalNumber sqrt_of(const Rational& r) {
        if (r.sign() < 0) throw CalcError("sqrt of negative rational");
        if (r.is_zero()) return RadicalNumber();
        mpz_class pq = r.numerator() * r.denominator();
        if (!pq.fits_slong_p()) throw CalcError("sqrt radicand too large");
        return sqrt_of(pq.get_si()) * Rational(r.denominator()).inverse();
    }

    static RadicalNumber term(const Rational& coeff, long radicand) {
        RadicalNumber out = sqrt_of(radicand);
        return out * coeff;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1); }

    Rational rational_part() const {
        auto it = terms_.find(1);
        return it == terms_.end() ? Rational() : it->second;
    }

    /// The value as a Rational; throws if irrational.
    Rational as_rational() const {
        if (!is_rational()) throw CalcError("value is not rational: " + to_string());
        return rational_part();
    }

    const std::map<long, Rational>& terms() const { return terms_; }

    RadicalNumber operator-() const {
        RadicalNumber out;
        for (const auto& [n, c] : terms_) out.terms_[n] = -c;
        return out;
    }

    RadicalNumber operator+(const RadicalNumber& o) const {
        RadicalNumber out = *this;
        out += o;
        return out;
    }
    RadicalNumber& operator+=(const RadicalNumber& o) {
        for (const auto& [n, c] : o.terms_) add_term(n, c);
        return *this;
    }
    RadicalNumber operator-(const RadicalNumber& o) const { return *this + (-o); }
    RadicalNumber& operator-=(const RadicalNumber& o) { return *this += -o; }

    RadicalNumber operator*(const RadicalNumber& o) const {
        RadicalNumber out;
        for (const auto& [n, c] : terms_) {
            for (const auto& [m, d] : o.terms_) {
                // sqrt(n)*sqrt(m) = g*sqrt(nm/g^2) with g = gcd(n,m); n, m square-free.
                long g = std::gcd(n, m);
                out.add_term((n / g) * (m / g), c * d * Rational(g));
            }
        }
        return out;
    }
    RadicalNumber& operator*=(const RadicalNumber& o) { return *this = *this * o; }
    RadicalNumber operator*(const Rational& r) const {
        RadicalNumber out;
        if (r.is_zero()) return out;
        for (const auto& [n, c] : terms_) out.terms_[n] = c * r;
        return out;
    }

    /// Exact inverse via conjugation, defined on Q and on Q(sqrt n) elements.
    RadicalNumber inverse() const {
        if (is_zero()) throw DivisionByZero();
        if (is_rational()) return RadicalNumber(rational_part().inverse());
        long n = 0;
        Rational a, b;
        for (const auto& [k, c] : terms_) {
            if (k == 1) {
                a = c;
            } else if (n == 0) {
                n = k;
                b = c;
            } else {
                throw UnsupportedInversion(to_string());
            }
        }
        // (a + b sqrt n)^-1 = (a - b sqrt n) / (a^2 - b^2 n); the norm cannot
        // vanish since n is square-free and > 1.
        Rational norm = a * a - b * b * Rational(n);
        RadicalNumber conj;
        if (!a.is_zero()) conj.terms_[1] = a;
        conj.terms_[n] = -b;
        return conj * norm.inverse();
    }

    bool operator==(const RadicalNumber& o) const { return terms_ == o.terms_; }
    bool operator!=(const RadicalNumber& o) const { return terms_ != o.terms_; }
    /// Structural (not numeric) order; used only for canonical containers.
    bool operator<(const RadicalNumber& o) const {
        auto key = [](const RadicalNumber& v) {
            std::map<long, std::pair<std::string, std::string>> k;
            for (const auto& [n, c] : v.terms_) k[n] = {c.numerator().get_str(), c.denominator().get_str()};
            return k;
        };
        return key(*this) < key(o);
    }

    /// Canonical rendering, e.g. "-1 + 1/2*sqrt(5)"; "0" for zero.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [n, c] : terms_) {
            std::string piece;
            if (first) {
                piece = c.to_string();
            } else {
                out += c.sign() < 0 ? " - " : " + ";
                piece = (c.sign() < 0 ? -c : c).to_string();
            }
            if (n != 1) piece += "*sqrt(" + std::to_string(n) + ")";
            out += piece;
            first = false;
        }
        return out;
    }

  private:
    void add_term(long n, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(n);
        if (it == terms_.end()) {
            terms_[n] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// n = square^2 * free with free square-free (trial division; radicands stay small).
    static std::pair<long, long> split_square(long n) {
        long square = 1, free = 1;
        for (long p = 2; p * p <= n; ++p) {
            long e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            for (long i = 0; i < e / 2; ++i) square *= p;
            if (e % 2) free *= p;
        }
        free *= n;
        return {square, free};
    }

    std::map<long, Rational> terms_;
};

inline RadicalNumber operator*(const Rational& r, const RadicalNumber& v) { return v * r; }

/// Exact square root inside the ring where one exists: any nonnegative
/// rational, and quadratic-field elements a + b*sqrt(n) whose root is again
/// of that shape.  Everything else raises UnrepresentableRoot.
inline RadicalNumber radical_sqrt(const RadicalNumber& v) {
    if (v.is_zero()) return RadicalNumber();
    if (v.is_rational()) {
        Rational r = v.rational_part();
        if (r.sign() < 0) throw UnrepresentableRoot(v.to_string());
        return RadicalNumber::sqrt_of(r);
    }
    long n = 0;
    Rational a, b;
    for (const auto& [k, c] : v.terms()) {
        if (k == 1) {
            a = c;
        } else if (n == 0) {
            n = k;
            b = c;
        } else {
            throw UnrepresentableRoot(v.to_string());
        }
    }
    // want (u + w sqrt n)^2 = v: u^2 + n w^2 = a, 2 u w = b
    Rational d2 = a * a - Rational(n) * b * b;
    if (d2.sign() < 0) throw UnrepresentableRoot(v.to_string());
    RadicalNumber sd2 = RadicalNumber::sqrt_of(d2);
    if (!sd2.is_rational()) throw UnrepresentableRoot(v.to_string());
    for (int pick = 0; pick < 2; ++pick) {
        Rational z = (a + (pick ? -sd2.rational_part() : sd2.rational_part())) * Rational(1, 2);
        if (z.sign() <= 0) continue;
        RadicalNumber u = RadicalNumber::sqrt_of(z);
        if (!u.is_rational()) continue;
        Rational ur = u.rational_part();
        Rational w = b / (ur * Rational(2));
        RadicalNumber cand = RadicalNumber(ur) + RadicalNumber::term(w, n);
        if (cand * cand == v) return cand;
    }
    throw UnrepresentableRoot(v.to_string());
}

}  // namespace nsf
