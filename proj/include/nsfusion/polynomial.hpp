#pragma once

#include <string>
#include <vector>

#include "nsfusion/radical.hpp"

namespace nsf {

/// Variable tags.  x lives in the Zhu bimodule, y is the central A(V)
/// parameter, h the conformal-weight parameter of the density calculus.
/// Mixing tags in arithmetic throws VariableMismatch.
enum class Var { x, y, h };

inline const char* var_name(Var v) {
    switch (v) {
        case Var::x: return "x";
        case Var::y: return "y";
        default: return "h";
    }
}

/// Dense univariate polynomial over RadicalNumber, coefficients ascending.
class Polynomial {
  public:
    explicit Polynomial(Var var) : var_(var) {}
    Polynomial(Var var, std::vector<RadicalNumber> coeffs) : var_(var), c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(Var var, const RadicalNumber& a0) { return Polynomial(var, {a0}); }
    /// a0 + a1*v
    static Polynomial linear(Var var, const RadicalNumber& a0, const RadicalNumber& a1) {
        return Polynomial(var, {a0, a1});
    }
    static Polynomial variable(Var var) { return Polynomial(var, {RadicalNumber(0), RadicalNumber(1)}); }

    Var var() const { return var_; }
    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<RadicalNumber>& coeffs() const { return c_; }
    RadicalNumber coeff(size_t k) const { return k < c_.size() ? c_[k] : RadicalNumber(); }
    RadicalNumber lead() const { return c_.empty() ? RadicalNumber() : c_.back(); }

    Polynomial operator-() const {
        Polynomial out(var_);
        out.c_.reserve(c_.size());
        for (const auto& a : c_) out.c_.push_back(-a);
        return out;
    }

    Polynomial operator+(const Polynomial& o) const {
        check_var(o);
        Polynomial out(var_);
        out.c_.resize(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = coeff(i) + o.coeff(i);
        out.trim();
        return out;
    }
    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

    Polynomial operator*(const Polynomial& o) const {
        check_var(o);
        if (is_zero() || o.is_zero()) return Polynomial(var_);
        Polynomial out(var_);
        out.c_.assign(c_.size() + o.c_.size() - 1, RadicalNumber());
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) out.c_[i + j] += c_[i] * o.c_[j];
        out.trim();
        return out;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial operator*(const RadicalNumber& s) const {
        if (s.is_zero()) return Polynomial(var_);
        Polynomial out(var_);
        out.c_.reserve(c_.size());
        for (const auto& a : c_) out.c_.push_back(a * s);
        return out;
    }

    bool operator==(const Polynomial& o) const { return var_ == o.var_ && c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Exact Horner evaluation.
    RadicalNumber eval(const RadicalNumber& v) const {
        RadicalNumber acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
        return acc;
    }

    /// True iff one polynomial is a nonzero scalar multiple of the other
    /// (projective equality, tested by cross-multiplication).
    bool proportional_to(const Polynomial& o) const {
        if (var_ != o.var_) return false;
        if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
        if (degree() != o.degree()) return false;
        for (size_t i = 0; i < c_.size(); ++i)
            if (coeff(i) * o.lead() != o.coeff(i) * lead()) return false;
        return true;
    }

    /// Divides out (v - root) as often as it is an exact factor.
    long root_multiplicity(const RadicalNumber& root) const {
        Polynomial p = *this;
        long mult = 0;
        while (!p.is_zero() && p.eval(root).is_zero()) {
            // synthetic division by (v - root)
            std::vector<RadicalNumber> q(p.c_.size() > 0 ? p.c_.size() - 1 : 0);
            RadicalNumber carry;
            for (size_t i = p.c_.size(); i-- > 1;) {
                carry = p.c_[i] + carry * root;
                q[i - 1] = carry;
            }
            p = Polynomial(var_, q);
            ++mult;
        }
        return mult;
    }

    /// Same polynomial rescaled to leading coefficient 1.
    Polynomial monic() const {
        if (is_zero()) return *this;
        return *this * lead().inverse();
    }

    /// Dense ascending rendering, e.g. "-1/4 + 0*x + 1*x^2".
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string out;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) out += " + ";
            std::string cs = c_[i].to_string();
            if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
            out += cs;
            if (i == 1) out += std::string("*") + var_name(var_);
            if (i > 1) out += std::string("*") + var_name(var_) + "^" + std::to_string(i);
        }
        return out;
    }

  private:
    void check_var(const Polynomial& o) const {
        if (var_ != o.var_)
            throw VariableMismatch(std::string(var_name(var_)) + " vs " + var_name(o.var_));
    }
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    Var var_;
    std::vector<RadicalNumber> c_;
};

inline Polynomial operator*(const RadicalNumber& s, const Polynomial& p) { return p * s; }

}  // namespace nsf
