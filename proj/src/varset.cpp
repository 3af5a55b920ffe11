#include "bellalg/varset.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bellalg {

VarSet::VarSet(std::vector<std::string> names, VarDomain domain)
    : names_(std::move(names)), domain_(domain) {
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty())
            throw DomainError("empty variable name");
        if (!seen.insert(n).second)
            throw DomainError("duplicate variable name: " + n);
    }
}

std::size_t VarSet::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    return it == names_.end() ? npos : static_cast<std::size_t>(it - names_.begin());
}

VarSetPtr spacetime_vars() {
    static const VarSetPtr vs =
        std::make_shared<VarSet>(std::vector<std::string>{"x", "y", "z", "t"}, VarDomain::Spacetime);
    return vs;
}

VarSetPtr spin_vars() {
    static const VarSetPtr vs =
        std::make_shared<VarSet>(std::vector<std::string>{"ua", "da", "ub", "db"}, VarDomain::Spin);
    return vs;
}

VarSetPtr extend_front(const VarSetPtr& base, const std::string& fresh) {
    if (base->index_of(fresh) != VarSet::npos)
        throw DomainError("fresh variable clashes with existing name: " + fresh);
    std::vector<std::string> names;
    names.reserve(base->size() + 1);
    names.push_back(fresh);
    for (const auto& n : base->names())
        names.push_back(n);
    return std::make_shared<VarSet>(std::move(names), VarDomain::Extended);
}

bool same_vars(const VarSetPtr& a, const VarSetPtr& b) {
    return a == b || (a && b && *a == *b);
}

void require_same_vars(const VarSetPtr& a, const VarSetPtr& b, const char* where) {
    if (!same_vars(a, b))
        throw VarSetMismatch(where);
}

Point::Point(VarSetPtr vars, std::vector<Scalar> coords)
    : vars_(std::move(vars)), coords_(std::move(coords)) {
    if (coords_.size() != vars_->size())
        throw DomainError("point arity does not match variable set");
    for (const auto& c : coords_)
        if (!c.is_xi_free())
            throw DomainError("point coordinates must be xi-free");
}

bool Point::operator==(const Point& o) const {
    return same_vars(vars_, o.vars_) && coords_ == o.coords_;
}

std::string Point::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i)
            os << ", ";
        os << coords_[i].to_string();
    }
    os << ")";
    return os.str();
}

Point spacetime_point(const Rational& x, const Rational& y, const Rational& z, const Rational& t) {
    return Point(spacetime_vars(), {Scalar(x), Scalar(y), Scalar(z), Scalar(t)});
}

} // namespace bellalg
