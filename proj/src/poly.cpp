#include "bellalg/poly.hpp"

#include <sstream>

namespace bellalg {

int total_degree(const Mono& m) {
    int d = 0;
    for (int e : m)
        d += e;
    return d;
}

bool mono_greater(const Mono& a, const Mono& b, MonoOrder order) {
    std::size_t from = 0;
    if (order == MonoOrder::ElimFirstVar) {
        if (a[0] != b[0])
            return a[0] > b[0];
        from = 1;
    }
    int da = 0, db = 0;
    for (std::size_t i = from; i < a.size(); ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db)
        return da > db;
    // Reverse lexicographic: the last nonzero difference decides, negatively.
    for (std::size_t i = a.size(); i-- > from;) {
        if (a[i] != b[i])
            return a[i] < b[i];
    }
    return false;
}

Poly::Poly(VarSetPtr vars) : vars_(std::move(vars)) {}

Poly::Poly(VarSetPtr vars, const Scalar& c) : vars_(std::move(vars)) {
    if (!c.is_zero())
        terms_[Mono(vars_->size(), 0)] = c;
}

Poly Poly::variable(const VarSetPtr& vars, std::size_t idx) {
    if (idx >= vars->size())
        throw DomainError("variable index out of range");
    Mono m(vars->size(), 0);
    m[idx] = 1;
    return monomial(vars, std::move(m), Scalar::one());
}

Poly Poly::variable(const VarSetPtr& vars, const std::string& name) {
    std::size_t idx = vars->index_of(name);
    if (idx == VarSet::npos)
        throw DomainError("unknown variable: " + name);
    return variable(vars, idx);
}

Poly Poly::monomial(const VarSetPtr& vars, Mono exps, const Scalar& c) {
    if (exps.size() != vars->size())
        throw DomainError("monomial arity does not match variable set");
    for (int e : exps)
        if (e < 0)
            throw DomainError("negative exponent in monomial");
    Poly p(vars);
    if (!c.is_zero())
        p.terms_[std::move(exps)] = c;
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Scalar Poly::constant_term() const {
    Mono zero(vars_->size(), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? Scalar() : it->second;
}

int Poly::degree() const {
    if (terms_.empty())
        return -1;
    // grevlex is degree-graded, so the map's first key has maximal degree
    return total_degree(terms_.begin()->first);
}

bool Poly::coeffs_xi_free() const {
    for (const auto& [m, c] : terms_)
        if (!c.is_xi_free())
            return false;
    return true;
}

void Poly::add_term(const Mono& exps, const Scalar& c) {
    if (c.is_zero())
        return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_[exps] = c;
    } else {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(vars_);
    for (const auto& [m, c] : terms_)
        r.terms_[m] = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    require_same_vars(vars_, o.vars_, "poly addition");
    Poly r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    require_same_vars(vars_, o.vars_, "poly multiplication");
    Poly r(vars_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            Mono m(m1.size());
            for (std::size_t i = 0; i < m.size(); ++i)
                m[i] = m1[i] + m2[i];
            r.add_term(m, c1 * c2);
        }
    return r;
}

Poly Poly::operator*(const Scalar& c) const {
    Poly r(vars_);
    if (c.is_zero())
        return r;
    for (const auto& [m, coeff] : terms_)
        r.add_term(m, coeff * c);
    return r;
}

bool Poly::operator==(const Poly& o) const {
    return same_vars(vars_, o.vars_) && terms_ == o.terms_;
}

std::pair<Mono, Scalar> Poly::leading_term(MonoOrder order) const {
    if (terms_.empty())
        throw DomainError("leading term of the zero polynomial");
    if (order == MonoOrder::Grevlex)
        return *terms_.begin();
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (mono_greater(it->first, best->first, order))
            best = it;
    return *best;
}

Scalar Poly::eval_at(const Point& p) const {
    require_same_vars(vars_, p.vars(), "evaluation");
    Scalar acc;
    for (const auto& [m, c] : terms_) {
        Scalar term = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (int e = 0; e < m[i]; ++e)
                term *= p.coord(i);
        acc += term;
    }
    return acc;
}

std::string Poly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        // Split the coefficient into sign and magnitude when it is a single
        // product piece; multi-piece scalars are parenthesized.
        std::string cs = c.to_string();
        bool negative = false;
        bool composite = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
        if (!composite && !cs.empty() && cs[0] == '-') {
            negative = true;
            cs = cs.substr(1);
        }
        std::string mon;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0)
                continue;
            if (!mon.empty())
                mon += "*";
            mon += vars_->name(i);
            if (m[i] > 1)
                mon += "^" + std::to_string(m[i]);
        }
        std::string body;
        if (mon.empty())
            body = composite ? "(" + cs + ")" : cs;
        else if (composite)
            body = "(" + cs + ")*" + mon;
        else if (cs == "1")
            body = mon;
        else
            body = cs + "*" + mon;
        if (first) {
            if (negative)
                os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        os << body;
    }
    return os.str();
}

Poly inject_front(const Poly& p, const VarSetPtr& extended) {
    if (extended->size() != p.vars()->size() + 1)
        throw DomainError("extended variable set has wrong arity");
    Poly r(extended);
    for (const auto& [m, c] : p.terms()) {
        Mono e(m.size() + 1, 0);
        for (std::size_t i = 0; i < m.size(); ++i)
            e[i + 1] = m[i];
        r.add_term(e, c);
    }
    return r;
}

bool free_of_front(const Poly& p) {
    for (const auto& [m, c] : p.terms())
        if (m[0] != 0)
            return false;
    return true;
}

Poly project_front(const Poly& p, const VarSetPtr& base) {
    if (base->size() + 1 != p.vars()->size())
        throw DomainError("base variable set has wrong arity");
    Poly r(base);
    for (const auto& [m, c] : p.terms()) {
        if (m[0] != 0)
            throw DomainError("polynomial involves the eliminated variable");
        Mono e(m.begin() + 1, m.end());
        r.add_term(e, c);
    }
    return r;
}

} // namespace bellalg
