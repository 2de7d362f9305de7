#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "germlab/errors.hpp"

namespace germlab {

/// Exponent vector; length always equals the ambient ring's variable count.
struct Monomial {
    std::vector<int> exp;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exp(nvars, 0) {}
    explicit Monomial(std::vector<int> e) : exp(std::move(e)) {
        for (int x : exp) require(x >= 0, "algebra.NegativeExponent", "negative exponent");
    }

    std::size_t nvars() const { return exp.size(); }
    bool is_one() const {
        for (int x : exp)
            if (x) return false;
        return true;
    }

    long total_degree() const {
        long d = 0;
        for (int x : exp) d += x;
        return d;
    }

    long degree_in(std::size_t var) const { return exp[var]; }

    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < exp.size(); ++i)
            if (exp[i] > other.exp[i]) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r(a.exp.size());
        for (std::size_t i = 0; i < a.exp.size(); ++i) r.exp[i] = a.exp[i] + b.exp[i];
        return r;
    }

    /// Quotient a / b; caller guarantees b | a.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r(a.exp.size());
        for (std::size_t i = 0; i < a.exp.size(); ++i) {
            r.exp[i] = a.exp[i] - b.exp[i];
            require(r.exp[i] >= 0, "algebra.NegativeExponent", "monomial quotient not exact");
        }
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.exp.size());
        for (std::size_t i = 0; i < a.exp.size(); ++i)
            r.exp[i] = a.exp[i] > b.exp[i] ? a.exp[i] : b.exp[i];
        return r;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.exp.size(); ++i)
            if (a.exp[i] > 0 && b.exp[i] > 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    /// Storage order only (map keys); term orders live in MonomialOrder.
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.exp < b.exp; }
};

/// Positive per-variable weights with gcd 1.
struct WeightVector {
    std::vector<long> w;

    explicit WeightVector(std::vector<long> weights) : w(std::move(weights)) {
        require(!w.empty(), "algebra.EmptyWeights", "empty weight vector");
        long g = 0;
        for (long x : w) {
            require(x > 0, "algebra.NonPositiveWeight", "weights must be positive");
            g = std::gcd(g, x);
        }
        require(g == 1, "algebra.WeightsNotCoprime", "weights must have gcd 1");
    }

    long degree(const Monomial& m) const {
        long d = 0;
        for (std::size_t i = 0; i < w.size(); ++i) d += w[i] * m.exp[i];
        return d;
    }
};

}  // namespace germlab
