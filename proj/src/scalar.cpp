#include "bellalg/scalar.hpp"

#include <sstream>
#include <vector>

namespace bellalg {

std::string rational_to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

Rational rational_from_string(const std::string& text) {
    if (text.empty())
        throw DomainError("empty rational literal");
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw DomainError("malformed rational literal: " + text);
    if (q.get_den() == 0)
        throw DomainError("zero denominator in rational literal: " + text);
    q.canonicalize();
    return q;
}

Quad Quad::operator*(const Quad& o) const {
    // (a + b i + c s + d i s)(a' + b' i + c' s + d' i s) with i^2 = -1, s^2 = 2.
    return {a * o.a - b * o.b + 2 * (c * o.c - d * o.d),
            a * o.b + b * o.a + 2 * (c * o.d + d * o.c),
            a * o.c + c * o.a - b * o.d - d * o.b,
            a * o.d + d * o.a + b * o.c + c * o.b};
}

Quad Quad::inverse() const {
    if (is_zero())
        throw DivisionByZero();
    // Tower Q(i)(s): write this = u + v s with u = a + b i, v = c + d i.
    // Then 1/(u + v s) = (u - v s) / (u^2 - 2 v^2), and u^2 - 2 v^2 lies in Q(i);
    // it is nonzero because sqrt(2) is not in Q(i).
    Rational na = a * a - b * b - 2 * (c * c - d * d); // Re(u^2 - 2 v^2)
    Rational nb = 2 * (a * b - 2 * c * d);             // Im(u^2 - 2 v^2)
    Rational n2 = na * na + nb * nb;                   // |u^2 - 2 v^2|^2
    // (u - v s) * conj(u^2 - 2 v^2) / n2
    Quad num = Quad(a, b, -c, -d) * Quad(na, -nb, 0, 0);
    return {num.a / n2, num.b / n2, num.c / n2, num.d / n2};
}

Scalar::Scalar(const Rational& q) {
    if (q != 0)
        terms_[0] = Quad(q, 0, 0, 0);
}

Scalar::Scalar(int xi_exp, Quad coeff) {
    if (!coeff.is_zero())
        terms_[xi_exp] = std::move(coeff);
}

void Scalar::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

bool Scalar::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 &&
           terms_.begin()->second == Quad(1, 0, 0, 0);
}

bool Scalar::is_xi_free() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

bool Scalar::is_real() const {
    if (!is_xi_free())
        return false;
    if (terms_.empty())
        return true;
    const Quad& q = terms_.begin()->second;
    return q.b == 0 && q.d == 0;
}

bool Scalar::is_rational() const {
    if (!is_xi_free())
        return false;
    if (terms_.empty())
        return true;
    const Quad& q = terms_.begin()->second;
    return q.b == 0 && q.c == 0 && q.d == 0;
}

Rational Scalar::rational_value() const {
    if (!is_rational())
        throw DomainError("scalar is not rational");
    return terms_.empty() ? Rational(0) : terms_.begin()->second.a;
}

int Scalar::real_sign() const {
    if (!is_real())
        throw DomainError("real_sign on a non-real scalar");
    if (terms_.empty())
        return 0;
    const Quad& q = terms_.begin()->second;
    const Rational& u = q.a;
    const Rational& v = q.c;
    int su = sgn(u), sv = sgn(v);
    if (su == 0)
        return sv;
    if (sv == 0 || su == sv)
        return su;
    // Opposite signs: u + v sqrt(2) has the sign of the dominant square.
    // u^2 == 2 v^2 is impossible for nonzero rationals (sqrt(2) irrational).
    return u * u > 2 * v * v ? su : sv;
}

Scalar Scalar::operator-() const {
    Scalar r;
    for (const auto& [k, q] : terms_)
        r.terms_[k] = -q;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar r = *this;
    for (const auto& [k, q] : o.terms_) {
        auto it = r.terms_.find(k);
        if (it == r.terms_.end())
            r.terms_[k] = q;
        else
            it->second = it->second + q;
    }
    r.prune();
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar r;
    for (const auto& [k1, q1] : terms_)
        for (const auto& [k2, q2] : o.terms_) {
            Quad p = q1 * q2;
            auto it = r.terms_.find(k1 + k2);
            if (it == r.terms_.end())
                r.terms_[k1 + k2] = p;
            else
                it->second = it->second + p;
        }
    r.prune();
    return r;
}

Scalar Scalar::divide(const Scalar& o) const {
    if (o.is_zero())
        throw DivisionByZero();
    if (is_zero())
        return Scalar();
    if (o.is_unit()) {
        auto [k, c] = *o.terms_.begin();
        Scalar r;
        Quad cinv = c.inverse();
        for (const auto& [ka, qa] : terms_)
            r.terms_[ka - k] = qa * cinv;
        r.prune();
        return r;
    }
    // Shift both operands to ordinary polynomials with nonzero constant term;
    // a Laurent quotient exists iff the shifted polynomial division is exact.
    int low_a = terms_.begin()->first;
    int low_o = o.terms_.begin()->first;
    int lead_o = o.terms_.rbegin()->first;
    Quad lead_o_inv = o.terms_.rbegin()->second.inverse();
    Scalar rem = *this, quot;
    while (!rem.is_zero()) {
        int lead_r = rem.terms_.rbegin()->first;
        if (lead_r - low_a < lead_o - low_o)
            throw NotDivisible(); // degree of shifted remainder fell below divisor's
        Scalar term(lead_r - lead_o, rem.terms_.rbegin()->second * lead_o_inv);
        quot += term;
        rem -= term * o;
    }
    return quot;
}

Scalar Scalar::inverse() const { return Scalar::one().divide(*this); }

Scalar Scalar::conj() const {
    Scalar r;
    for (const auto& [k, q] : terms_)
        r.terms_[-k] = q.conj();
    return r;
}

Scalar Scalar::specialize_theta(ThetaCase theta) const {
    Scalar r;
    Quad acc;
    for (const auto& [k, q] : terms_) {
        Quad sub = q;
        if (theta == ThetaCase::Zero) {
            // xi = i: xi^k = i^k, with i^-1 = -i.
            int m = ((k % 4) + 4) % 4;
            for (int j = 0; j < m; ++j)
                sub = sub.times_i();
        } else {
            // xi = -1
            if (k % 2 != 0)
                sub = -sub;
        }
        acc = acc + sub;
    }
    return Scalar(0, acc);
}

namespace {

// Appends "num" or "num*sym" style pieces of one Quad times xi^k.
struct PrintTerm {
    Rational coeff;
    const char* unit; // "", "i", "s2", "i*s2"
    int xi_exp;
};

void collect_terms(const Scalar& s, std::vector<PrintTerm>& out) {
    // Highest xi power first; within a power: 1, i, s2, i*s2.
    for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it) {
        const Quad& q = it->second;
        if (q.a != 0)
            out.push_back({q.a, "", it->first});
        if (q.b != 0)
            out.push_back({q.b, "i", it->first});
        if (q.c != 0)
            out.push_back({q.c, "s2", it->first});
        if (q.d != 0)
            out.push_back({q.d, "i*s2", it->first});
    }
}

} // namespace

std::string Scalar::to_string() const {
    if (is_zero())
        return "0";
    std::vector<PrintTerm> ts;
    collect_terms(*this, ts);
    std::ostringstream os;
    bool first = true;
    for (const auto& t : ts) {
        Rational mag = abs(t.coeff);
        if (first) {
            if (t.coeff < 0)
                os << "-";
            first = false;
        } else {
            os << (t.coeff < 0 ? " - " : " + ");
        }
        std::string pieces;
        bool unit_only = (mag == 1) && (t.unit[0] != '\0' || t.xi_exp != 0);
        if (!unit_only)
            pieces = rational_to_string(mag);
        if (t.unit[0] != '\0') {
            if (!pieces.empty())
                pieces += "*";
            pieces += t.unit;
        }
        if (t.xi_exp != 0) {
            if (!pieces.empty())
                pieces += "*";
            pieces += "xi";
            if (t.xi_exp != 1)
                pieces += "^" + std::to_string(t.xi_exp);
        }
        os << pieces;
    }
    return os.str();
}

Scalar exp_i_theta() { return -(Scalar::xi() * Scalar::xi()); }

} // namespace bellalg
