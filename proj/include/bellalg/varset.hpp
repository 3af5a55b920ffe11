#pragma once

#include "bellalg/error.hpp"
#include "bellalg/scalar.hpp"

#include <memory>
#include <string>
#include <vector>

namespace bellalg {

enum class VarDomain { Spacetime, Spin, Extended, Custom };

/// Ordered list of variable names. The order is fixed at construction and
/// determines the monomial order of every polynomial over the set.
class VarSet {
public:
    VarSet(std::vector<std::string> names, VarDomain domain);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t idx) const { return names_.at(idx); }
    VarDomain domain() const { return domain_; }

    /// Index of a name, or npos.
    std::size_t index_of(const std::string& name) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bool operator==(const VarSet& o) const {
        return names_ == o.names_ && domain_ == o.domain_;
    }

private:
    std::vector<std::string> names_;
    VarDomain domain_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

/// Spacetime coordinate ring variables (x, y, z, t).
VarSetPtr spacetime_vars();
/// Spin variables (ua, da, ub, db), the ASCII forms of
/// (up_a, down_a, up_b, down_b).
VarSetPtr spin_vars();
/// Copy of `base` with one fresh variable prepended (used for elimination).
VarSetPtr extend_front(const VarSetPtr& base, const std::string& fresh);

/// Structural equality of the referenced sets.
bool same_vars(const VarSetPtr& a, const VarSetPtr& b);
/// Throws VarSetMismatch unless same_vars.
void require_same_vars(const VarSetPtr& a, const VarSetPtr& b, const char* where);

/// A point of the affine space attached to a VarSet: one xi-free Scalar
/// coordinate per variable.
class Point {
public:
    Point(VarSetPtr vars, std::vector<Scalar> coords);

    const VarSetPtr& vars() const { return vars_; }
    const std::vector<Scalar>& coords() const { return coords_; }
    const Scalar& coord(std::size_t idx) const { return coords_.at(idx); }

    bool operator==(const Point& o) const;

    std::string to_string() const;

private:
    VarSetPtr vars_;
    std::vector<Scalar> coords_;
};

/// Convenience: rational spacetime point (x, y, z, t).
Point spacetime_point(const Rational& x, const Rational& y, const Rational& z, const Rational& t);

} // namespace bellalg
