#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "germlab/monomial.hpp"
#include "germlab/monomial_order.hpp"
#include "germlab/rational.hpp"
#include "germlab/ring.hpp"

namespace germlab {

/// Sparse multivariate polynomial over Q. Canonical form: no zero
/// coefficients stored, terms keyed by exponent vector, so equal values
/// compare equal structurally. Immutable in spirit: all operations return
/// fresh values.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

    static Polynomial zero(const Ring& ring) { return Polynomial(ring); }
    static Polynomial constant(const Ring& ring, const Rational& c);
    static Polynomial variable(const Ring& ring, const std::string& name);
    static Polynomial term(const Ring& ring, const Monomial& m, const Rational& c);

    const Ring& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational constant_term() const { return coefficient(Monomial(ring_.size())); }

    long total_degree() const;  // -1 for zero
    long degree_in(const std::string& var) const;
    long degree_in(std::size_t var) const;
    bool involves(std::size_t var) const { return degree_in(var) > 0; }

    /// Coefficients of the polynomial viewed as univariate in `var`;
    /// result[i] has `var`-exponent zero. Size = degree_in(var) + 1.
    std::vector<Polynomial> coefficients_in(std::size_t var) const;

    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial pow(unsigned long e) const;

    /// Extremal terms w.r.t. a term order. Polynomial must be nonzero.
    std::pair<Monomial, Rational> leading_term(const MonomialOrder& o) const;
    std::pair<Monomial, Rational> trailing_term(const MonomialOrder& o) const;

    /// Canonical text form: terms in ascending grevlex, grammar-compatible
    /// (round-trips through parse_polynomial).
    std::string to_string() const;

private:
    Ring ring_;
    TermMap terms_;
};

Polynomial derivative(const Polynomial& p, const std::string& var);

/// Composite: each ring variable is either bound to a polynomial in
/// `target` or must itself be a variable of `target` (identity binding).
Polynomial substitute(const Polynomial& p,
                      const std::map<std::string, Polynomial>& bindings,
                      const Ring& target);

/// Same-ring convenience: bind a subset of variables to same-ring values.
Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& bindings);

/// Re-express in a superring containing every variable of p.
Polynomial embed(const Polynomial& p, const Ring& superring);

/// Re-express in a subring; errors if p involves a removed variable.
Polynomial restrict_to(const Polynomial& p, const Ring& subring);

Rational evaluate(const Polynomial& p, const std::vector<Rational>& point);

struct WeightedDegree {
    long min = 0;
    long max = 0;
    bool quasihomogeneous = false;
};

/// Min/max of w-degree over terms; errors on the zero polynomial.
WeightedDegree weighted_degree(const Polynomial& p, const WeightVector& w);

/// Exact quotient; errors with algebra.NotDivisible when den does not
/// divide num in the polynomial ring.
Polynomial divide_exact(const Polynomial& num, const Polynomial& den);

/// Divide by a scalar so the grevlex-trailing coefficient becomes +1.
/// This is the canonical unit normalization for double-point equations:
/// it reproduces the monic product forms x^e * prod(y - a_i x^b).
Polynomial normalize_trailing(const Polynomial& p);

}  // namespace germlab
