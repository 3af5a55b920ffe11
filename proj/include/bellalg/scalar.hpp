#pragma once

#include "bellalg/error.hpp"
#include "bellalg/rational.hpp"

#include <map>
#include <string>

namespace bellalg {

/// Element of the number field K0 = Q(i, s | s^2 = 2) on the basis (1, i, s, i*s),
/// where s stands for sqrt(2). K0 is a field: every nonzero element is invertible.
struct Quad {
    Rational a; ///< coefficient of 1
    Rational b; ///< coefficient of i
    Rational c; ///< coefficient of s
    Rational d; ///< coefficient of i*s

    Quad() : a(0), b(0), c(0), d(0) {}
    Quad(Rational a_, Rational b_, Rational c_, Rational d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }

    Quad operator-() const { return {-a, -b, -c, -d}; }
    Quad operator+(const Quad& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Quad operator-(const Quad& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Quad operator*(const Quad& o) const;
    /// Field inverse; throws DivisionByZero on zero.
    Quad inverse() const;
    /// i -> -i (fixes s).
    Quad conj() const { return {a, -b, c, -d}; }
    /// Multiplication by i.
    Quad times_i() const { return {-b, a, -d, c}; }

    bool operator==(const Quad& o) const = default;
};

enum class ThetaCase { Zero, Pi };

/// Element of the coefficient ring K = K0[xi, xi^-1]: a Laurent polynomial in the
/// formal unimodular phase xi with coefficients in K0. Canonical form stores no
/// zero coefficients. Units of K are exactly the monomials c*xi^k with c != 0;
/// division is exact division (see divide()).
class Scalar {
public:
    Scalar() = default;
    Scalar(int n) : Scalar(Rational(n)) {}
    explicit Scalar(const Rational& q);
    /// c * xi^k
    Scalar(int xi_exp, Quad coeff);

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    static Scalar i() { return Scalar(0, Quad(0, 1, 0, 0)); }
    static Scalar sqrt2() { return Scalar(0, Quad(0, 0, 1, 0)); }
    static Scalar xi(int k = 1) { return Scalar(k, Quad(1, 0, 0, 0)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// No xi dependence (element of K0).
    bool is_xi_free() const;
    /// Invertible in K: a single xi-monomial.
    bool is_unit() const { return terms_.size() == 1; }
    /// xi-free with zero i-parts, i.e. of the form u + v*s with u, v rational.
    bool is_real() const;
    /// A plain rational (xi-free, i-free, s-free).
    bool is_rational() const;
    /// Value as a Rational; precondition is_rational().
    Rational rational_value() const;

    /// Sign of the real embedding u + v*sqrt(2) of a real element (-1, 0, +1).
    /// Exact: decided by comparing u^2 against 2 v^2. Throws DomainError if !is_real().
    int real_sign() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    /// Exact division. Throws DivisionByZero when o == 0 and NotDivisible when o
    /// does not divide *this in K.
    Scalar divide(const Scalar& o) const;
    /// Inverse of a unit; throws DivisionByZero on zero, NotDivisible otherwise.
    Scalar inverse() const;

    /// The involution fixing Q and s, sending i -> -i and xi -> xi^-1.
    Scalar conj() const;

    /// Substitutes xi = i (theta = 0) or xi = -1 (theta = pi); the result is xi-free.
    Scalar specialize_theta(ThetaCase theta) const;

    bool operator==(const Scalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Term map, keyed by xi-exponent. Exposed for printing and structural walks.
    const std::map<int, Quad>& terms() const { return terms_; }

    /// Canonical text form (see textio for the grammar).
    std::string to_string() const;

private:
    std::map<int, Quad> terms_;

    void prune();
};

inline Scalar operator/(const Scalar& a, const Scalar& b) { return a.divide(b); }

/// e^{i theta} as the paper's substitution -xi^2.
Scalar exp_i_theta();

} // namespace bellalg
