#pragma once

#include "bellalg/varset.hpp"

#include <map>
#include <string>
#include <vector>

namespace bellalg {

/// Exponent vector; length matches the VarSet.
using Mono = std::vector<int>;

int total_degree(const Mono& m);

/// Monomial orders on exponent vectors of equal length.
///  - Grevlex: graded reverse lexicographic over the VarSet order.
///  - ElimFirstVar: block order eliminating variable 0 (compare its exponent
///    first, then grevlex on the rest). Used internally for intersections.
enum class MonoOrder { Grevlex, ElimFirstVar };

/// true iff a > b in the given order.
bool mono_greater(const Mono& a, const Mono& b, MonoOrder order);

/// Comparator putting the grevlex-largest monomial first in a std::map.
struct GrevlexFirst {
    bool operator()(const Mono& a, const Mono& b) const {
        return mono_greater(a, b, MonoOrder::Grevlex);
    }
};

/// Multivariate polynomial over the Scalar ring, canonical form: no zero
/// coefficients, terms keyed by exponent vector in grevlex order.
class Poly {
public:
    using TermMap = std::map<Mono, Scalar, GrevlexFirst>;

    explicit Poly(VarSetPtr vars);
    /// Constant polynomial.
    Poly(VarSetPtr vars, const Scalar& c);

    static Poly variable(const VarSetPtr& vars, std::size_t idx);
    static Poly variable(const VarSetPtr& vars, const std::string& name);
    static Poly monomial(const VarSetPtr& vars, Mono exps, const Scalar& c);

    const VarSetPtr& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (zero scalar if absent).
    Scalar constant_term() const;
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    /// true iff every coefficient is xi-free.
    bool coeffs_xi_free() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Scalar& c) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Leading term under the given order (scan; the map is grevlex-sorted).
    std::pair<Mono, Scalar> leading_term(MonoOrder order = MonoOrder::Grevlex) const;

    /// Ring-homomorphic evaluation at a point of the same VarSet.
    Scalar eval_at(const Point& p) const;

    /// Adds c * x^exps in place (used by parsers and arithmetic).
    void add_term(const Mono& exps, const Scalar& c);

    /// Canonical text form (see textio).
    std::string to_string() const;

private:
    VarSetPtr vars_;
    TermMap terms_;
};

inline Poly operator*(const Scalar& c, const Poly& p) { return p * c; }

/// Injects a polynomial into the extension of its VarSet by one fresh leading
/// variable (exponent 0 on the fresh variable).
Poly inject_front(const Poly& p, const VarSetPtr& extended);
/// Drops the leading variable; requires the polynomial not to involve it.
Poly project_front(const Poly& p, const VarSetPtr& base);
/// true iff the polynomial does not involve variable 0.
bool free_of_front(const Poly& p);

} // namespace bellalg
