#include "germlab/polynomial.hpp"

#include <algorithm>

namespace germlab {

Polynomial Polynomial::constant(const Ring& ring, const Rational& c) {
    Polynomial p(ring);
    p.add_term(Monomial(ring.size()), c);
    return p;
}

Polynomial Polynomial::variable(const Ring& ring, const std::string& name) {
    Monomial m(ring.size());
    m.exp[ring.index_checked(name)] = 1;
    Polynomial p(ring);
    p.add_term(m, Rational(1));
    return p;
}

Polynomial Polynomial::term(const Ring& ring, const Monomial& m, const Rational& c) {
    require(m.nvars() == ring.size(), "algebra.ArityMismatch",
            "monomial arity does not match ring");
    Polynomial p(ring);
    p.add_term(m, c);
    return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

long Polynomial::total_degree() const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

long Polynomial::degree_in(std::size_t var) const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m.exp[var]));
    return is_zero() ? -1 : d;
}

long Polynomial::degree_in(const std::string& var) const {
    return degree_in(ring_.index_checked(var));
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
    long d = degree_in(var);
    std::vector<Polynomial> coeffs(static_cast<std::size_t>(std::max(d, 0L)) + 1,
                                   Polynomial(ring_));
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        int e = rest.exp[var];
        rest.exp[var] = 0;
        coeffs[static_cast<std::size_t>(e)].add_term(rest, c);
    }
    return coeffs;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    Polynomial r(a.ring_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial r(p.ring_);
    if (c == 0) return r;
    for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
    return r;
}

Polynomial Polynomial::pow(unsigned long e) const {
    Polynomial r = Polynomial::constant(ring_, Rational(1));
    Polynomial base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::pair<Monomial, Rational> Polynomial::leading_term(const MonomialOrder& o) const {
    require(!is_zero(), "algebra.ZeroPolynomial", "leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (o.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
}

std::pair<Monomial, Rational> Polynomial::trailing_term(const MonomialOrder& o) const {
    require(!is_zero(), "algebra.ZeroPolynomial", "trailing term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (o.less(it->first, best->first)) best = it;
    return {best->first, best->second};
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const TermMap::value_type*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    MonomialOrder grevlex = MonomialOrder::grevlex();
    std::sort(order.begin(), order.end(),
              [&](const auto* a, const auto* b) { return grevlex.less(a->first, b->first); });

    std::string out;
    bool first = true;
    for (const auto* t : order) {
        const Monomial& m = t->first;
        Rational c = t->second;
        bool negative = c < 0;
        if (first) {
            if (negative) out += "-";  // sign folded into the literal below
        } else {
            out += negative ? " - " : " + ";
        }
        Rational mag = negative ? Rational(-c) : c;

        std::string vars;
        for (std::size_t i = 0; i < m.exp.size(); ++i) {
            if (m.exp[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += ring_.name(i);
            if (m.exp[i] > 1) vars += "^" + std::to_string(m.exp[i]);
        }

        if (vars.empty()) {
            out += rational_to_string(mag);
        } else if (mag == 1) {
            // A leading "-x" is not in the grammar; keep the explicit 1.
            if (first && negative) out += "1*" + vars;
            else out += vars;
        } else {
            out += rational_to_string(mag) + "*" + vars;
        }
        first = false;
    }
    return out;
}

Polynomial derivative(const Polynomial& p, const std::string& var) {
    std::size_t v = p.ring().index_checked(var);
    Polynomial r(p.ring());
    for (const auto& [m, c] : p.terms()) {
        if (m.exp[v] == 0) continue;
        Monomial d = m;
        d.exp[v] -= 1;
        r.add_term(d, c * Rational(m.exp[v]));
    }
    return r;
}

Polynomial substitute(const Polynomial& p,
                      const std::map<std::string, Polynomial>& bindings,
                      const Ring& target) {
    // Resolve every source variable to a target polynomial once.
    std::vector<Polynomial> images;
    images.reserve(p.ring().size());
    for (const auto& name : p.ring().names()) {
        auto it = bindings.find(name);
        if (it != bindings.end()) {
            require_same_ring(it->second.ring(), target);
            images.push_back(it->second);
        } else {
            require(target.contains(name), "algebra.RingMismatch",
                    "unbound variable '" + name + "' missing from target ring");
            images.push_back(Polynomial::variable(target, name));
        }
    }
    Polynomial result(target);
    for (const auto& [m, c] : p.terms()) {
        Polynomial t = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < images.size(); ++i)
            if (m.exp[i]) t = t * images[i].pow(static_cast<unsigned long>(m.exp[i]));
        result += t;
    }
    return result;
}

Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& bindings) {
    return substitute(p, bindings, bindings.empty() ? p.ring() : bindings.begin()->second.ring());
}

Polynomial embed(const Polynomial& p, const Ring& superring) {
    std::vector<std::size_t> where;
    for (const auto& name : p.ring().names()) where.push_back(superring.index_checked(name));
    Polynomial r(superring);
    for (const auto& [m, c] : p.terms()) {
        Monomial big(superring.size());
        for (std::size_t i = 0; i < where.size(); ++i) big.exp[where[i]] = m.exp[i];
        r.add_term(big, c);
    }
    return r;
}

Polynomial restrict_to(const Polynomial& p, const Ring& subring) {
    std::vector<long> where(p.ring().size(), -1);
    for (std::size_t i = 0; i < p.ring().size(); ++i) {
        auto j = subring.index(p.ring().name(i));
        if (j) where[i] = static_cast<long>(*j);
    }
    Polynomial r(subring);
    for (const auto& [m, c] : p.terms()) {
        Monomial small(subring.size());
        for (std::size_t i = 0; i < where.size(); ++i) {
            if (m.exp[i] == 0) continue;
            require(where[i] >= 0, "algebra.RingMismatch",
                    "polynomial involves '" + p.ring().name(i) + "' absent from target ring");
            small.exp[static_cast<std::size_t>(where[i])] = m.exp[i];
        }
        r.add_term(small, c);
    }
    return r;
}

Rational evaluate(const Polynomial& p, const std::vector<Rational>& point) {
    require(point.size() == p.ring().size(), "algebra.ArityMismatch",
            "evaluation point arity mismatch");
    Rational total(0);
    for (const auto& [m, c] : p.terms()) {
        Rational v = c;
        for (std::size_t i = 0; i < point.size(); ++i)
            if (m.exp[i]) v *= pow_rational(point[i], static_cast<unsigned long>(m.exp[i]));
        total += v;
    }
    return total;
}

WeightedDegree weighted_degree(const Polynomial& p, const WeightVector& w) {
    require(!p.is_zero(), "algebra.ZeroPolynomial", "weighted degree of zero polynomial");
    WeightedDegree d;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        long deg = w.degree(m);
        if (first) {
            d.min = d.max = deg;
            first = false;
        } else {
            d.min = std::min(d.min, deg);
            d.max = std::max(d.max, deg);
        }
    }
    d.quasihomogeneous = (d.min == d.max);
    return d;
}

Polynomial divide_exact(const Polynomial& num, const Polynomial& den) {
    require_same_ring(num.ring(), den.ring());
    require(!den.is_zero(), "algebra.ZeroPolynomial", "division by zero polynomial");
    MonomialOrder o = MonomialOrder::grevlex();
    Polynomial rem = num;
    Polynomial quot(num.ring());
    auto [dm, dc] = den.leading_term(o);
    while (!rem.is_zero()) {
        auto [rm, rc] = rem.leading_term(o);
        require(dm.divides(rm), "algebra.NotDivisible",
                "exact division failed: " + den.to_string() + " does not divide " +
                    num.to_string());
        Polynomial t = Polynomial::term(num.ring(), rm / dm, rc / dc);
        quot += t;
        rem -= t * den;
    }
    return quot;
}

Polynomial normalize_trailing(const Polynomial& p) {
    if (p.is_zero()) return p;
    auto [m, c] = p.trailing_term(MonomialOrder::grevlex());
    return Rational(1 / c) * p;
}

}  // namespace germlab
