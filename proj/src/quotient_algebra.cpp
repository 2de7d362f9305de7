#include "germlab/quotient_algebra.hpp"

#include <map>
#include <random>
#include <set>

namespace germlab {
namespace {

using QMat = std::vector<std::vector<Rational>>;

QMat multiply(const QMat& a, const QMat& b) {
    const std::size_t n = a.size(), m = b.front().size(), k = b.size();
    QMat r(n, std::vector<Rational>(m, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (b[l][j] != 0) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

QMat matrix_power(QMat base, unsigned long e) {
    const std::size_t n = base.size();
    QMat r(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
    while (e) {
        if (e & 1) r = multiply(r, base);
        base = multiply(base, base);
        e >>= 1;
    }
    return r;
}

std::size_t rank(QMat m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

}  // namespace

bool is_zero_dimensional(const GroebnerBasis& gb) {
    if (gb.is_unit()) return true;
    if (gb.basis.empty()) return gb.ring.size() == 0;
    MonomialOrder o = gb.order;
    for (std::size_t v = 0; v < gb.ring.size(); ++v) {
        bool pure_power = false;
        for (const auto& g : gb.basis) {
            Monomial lt = g.leading_term(o).first;
            if (lt.exp[v] > 0) {
                bool pure = true;
                for (std::size_t u = 0; u < lt.exp.size(); ++u)
                    if (u != v && lt.exp[u] > 0) pure = false;
                if (pure) pure_power = true;
            }
        }
        if (!pure_power) return false;
    }
    return true;
}

QuotientBasis quotient_dimension(const GroebnerBasis& gb) {
    require(is_zero_dimensional(gb), "ideal.NotZeroDimensional",
            "quotient ring is not finite-dimensional");
    QuotientBasis qb;
    if (gb.is_unit()) return qb;

    std::vector<Monomial> leads;
    for (const auto& g : gb.basis) leads.push_back(g.leading_term(gb.order).first);

    std::set<Monomial> seen;
    std::vector<Monomial> queue{Monomial(gb.ring.size())};
    seen.insert(queue.front());
    while (!queue.empty()) {
        Monomial m = queue.back();
        queue.pop_back();
        bool standard = true;
        for (const auto& lt : leads)
            if (lt.divides(m)) {
                standard = false;
                break;
            }
        if (!standard) continue;
        qb.standard_monomials.push_back(m);
        for (std::size_t v = 0; v < gb.ring.size(); ++v) {
            Monomial next = m;
            next.exp[v] += 1;
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    std::sort(qb.standard_monomials.begin(), qb.standard_monomials.end());
    qb.dimension = static_cast<long>(qb.standard_monomials.size());
    return qb;
}

QuotientBasis quotient_dimension(const Ideal& ideal, const MonomialOrder& order) {
    return quotient_dimension(groebner(ideal, order));
}

bool supported_only_at_origin(const Ideal& ideal) {
    auto gb = groebner(ideal, MonomialOrder::grevlex());
    auto qb = quotient_dimension(gb);
    if (qb.dimension == 0) return true;
    for (const auto& name : ideal.ring.names()) {
        Polynomial power =
            Polynomial::variable(ideal.ring, name).pow(static_cast<unsigned long>(qb.dimension));
        if (!normal_form(power, gb).is_zero()) return false;
    }
    return true;
}

long local_dimension_at_origin(const Ideal& ideal) {
    auto gb = groebner(ideal, MonomialOrder::grevlex());
    auto qb = quotient_dimension(gb);
    const long D = qb.dimension;
    if (D == 0) return 0;

    bool origin_only = true;
    for (const auto& name : ideal.ring.names()) {
        Polynomial power =
            Polynomial::variable(ideal.ring, name).pow(static_cast<unsigned long>(D));
        if (!normal_form(power, gb).is_zero()) {
            origin_only = false;
            break;
        }
    }
    if (origin_only) return D;

    // Joint generalized 0-eigenspace of the multiplication operators: the
    // intersection of ker(M_v^D) over all variables v.
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < qb.standard_monomials.size(); ++i)
        index[qb.standard_monomials[i]] = i;

    const std::size_t n = static_cast<std::size_t>(D);
    QMat stacked;
    for (std::size_t v = 0; v < ideal.ring.size(); ++v) {
        QMat mult(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t j = 0; j < n; ++j) {
            Monomial shifted = qb.standard_monomials[j];
            shifted.exp[v] += 1;
            Polynomial nf = normal_form(Polynomial::term(ideal.ring, shifted, Rational(1)), gb);
            for (const auto& [m, c] : nf.terms()) mult[index.at(m)][j] = c;
        }
        QMat powered = matrix_power(std::move(mult), static_cast<unsigned long>(D));
        for (auto& row : powered) stacked.push_back(std::move(row));
    }
    return D - static_cast<long>(rank(std::move(stacked)));
}

bool is_reduced_curve(const Polynomial& lambda) {
    require(!lambda.is_zero(), "algebra.ZeroPolynomial", "curve equation is zero");
    require(!lambda.is_constant(), "algebra.UnitPolynomial", "curve equation is a unit");
    std::vector<Polynomial> gens{lambda};
    for (const auto& v : lambda.ring().names()) gens.push_back(derivative(lambda, v));
    return is_zero_dimensional(groebner(Ideal(lambda.ring(), std::move(gens)),
                                        MonomialOrder::grevlex()));
}

long multiplicity_at_origin_2var(const Ideal& ideal) {
    require(ideal.ring.size() == 2, "ideal.ArityMismatch",
            "multiplicity reduction implemented for 2-variable rings");
    require(!ideal.generators.empty(), "ideal.EmptyGenerators", "zero ideal has no multiplicity");
    if (ideal.generators.size() <= 2) {
        // Two generators already form a parameter ideal: length = multiplicity.
        return local_dimension_at_origin(ideal);
    }

    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<int> coeff(1, 19);
    long best = -1;
    int agreement = 0;
    for (int trial = 0; trial < 8 && agreement < 2; ++trial) {
        Polynomial g1(ideal.ring), g2(ideal.ring);
        for (const auto& f : ideal.generators) {
            g1 += Rational(coeff(rng)) * f;
            g2 += Rational(coeff(rng)) * f;
        }
        try {
            long len = local_dimension_at_origin(Ideal(ideal.ring, {g1, g2}));
            if (best < 0 || len < best) {
                best = len;
                agreement = 1;
            } else if (len == best) {
                ++agreement;
            }
        } catch (const Error&) {
            continue;  // degenerate combination, retry
        }
    }
    require(best >= 0 && agreement >= 2, "ideal.ReductionFailed",
            "no stable generic reduction found for multiplicity");
    return best;
}

}  // namespace germlab
