#include "germlab/groebner.hpp"

#include <algorithm>
#include <list>

namespace germlab {
namespace {

// Internal term-list representation, sorted descending under the active
// order. Division and S-polynomial arithmetic are linear merges on it.
using Term = std::pair<Monomial, Rational>;
using TermVec = std::vector<Term>;

TermVec to_sorted(const Polynomial& p, const MonomialOrder& o) {
    TermVec v(p.terms().begin(), p.terms().end());
    std::sort(v.begin(), v.end(),
              [&](const Term& a, const Term& b) { return o.greater(a.first, b.first); });
    return v;
}

Polynomial to_polynomial(const TermVec& v, const Ring& ring) {
    Polynomial p(ring);
    for (const auto& [m, c] : v) p.add_term(m, c);
    return p;
}

// a - c * shift * b, both inputs sorted descending; result stays sorted.
TermVec subtract_multiple(const TermVec& a, const Rational& c, const Monomial& shift,
                          const TermVec& b, const MonomialOrder& o) {
    TermVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size()) {
            out.push_back(a[i++]);
            continue;
        }
        Monomial bm = b[j].first * shift;
        if (i == a.size()) {
            out.emplace_back(bm, -c * b[j].second);
            ++j;
            continue;
        }
        int cmp = o.compare(a[i].first, bm);
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            out.emplace_back(bm, -c * b[j].second);
            ++j;
        } else {
            Rational coeff = a[i].second - c * b[j].second;
            if (coeff != 0) out.emplace_back(a[i].first, coeff);
            ++i;
            ++j;
        }
    }
    return out;
}

void make_monic(TermVec& v) {
    if (v.empty()) return;
    Rational lead = v.front().second;
    if (lead == 1) return;
    for (auto& [m, c] : v) c /= lead;
}

// Full reduction: every remainder term is free of basis leading terms.
TermVec reduce_full(TermVec p, const std::vector<TermVec>& basis, const MonomialOrder& o) {
    TermVec rem;
    while (!p.empty()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.empty()) continue;
            if (g.front().first.divides(p.front().first)) {
                Monomial shift = p.front().first / g.front().first;
                Rational c = p.front().second / g.front().second;
                p = subtract_multiple(p, c, shift, g, o);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.push_back(p.front());
            p.erase(p.begin());
        }
    }
    return rem;
}

struct Pair {
    std::size_t i, j;
    Monomial lcm_m;
};

// Gebauer-Moller pair update for a freshly added element t.
void update_pairs(std::list<Pair>& pairs, const std::vector<TermVec>& basis, std::size_t t,
                  const MonomialOrder& o) {
    const Monomial& lt_t = basis[t].front().first;
    std::vector<Pair> fresh;
    for (std::size_t i = 0; i < t; ++i) {
        if (basis[i].empty()) continue;
        fresh.push_back({i, t, lcm(basis[i].front().first, lt_t)});
    }

    // Keep only lcm-minimal new pairs; coprime pairs may still discard
    // others before being dropped themselves.
    std::vector<Pair> survivors;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
        bool dominated = false;
        if (!coprime(basis[fresh[a].i].front().first, lt_t)) {
            for (std::size_t b = 0; b < fresh.size() && !dominated; ++b) {
                if (a == b) continue;
                if (fresh[b].lcm_m.divides(fresh[a].lcm_m) && fresh[b].lcm_m != fresh[a].lcm_m)
                    dominated = true;
                if (fresh[b].lcm_m == fresh[a].lcm_m && b < a) dominated = true;
            }
        }
        if (!dominated) survivors.push_back(fresh[a]);
    }

    // Buchberger's first criterion.
    std::vector<Pair> kept;
    for (auto& pr : survivors)
        if (!coprime(basis[pr.i].front().first, lt_t)) kept.push_back(pr);

    // Chain criterion against the old pair set.
    for (auto it = pairs.begin(); it != pairs.end();) {
        const Monomial& l = it->lcm_m;
        bool discard = lt_t.divides(l) && lcm(basis[it->i].front().first, lt_t) != l &&
                       lcm(basis[it->j].front().first, lt_t) != l;
        it = discard ? pairs.erase(it) : std::next(it);
    }
    for (auto& pr : kept) pairs.push_back(pr);
}

std::vector<TermVec> buchberger(std::vector<TermVec> basis, const MonomialOrder& o,
                                long pair_budget) {
    std::list<Pair> pairs;
    for (std::size_t t = 0; t < basis.size(); ++t) update_pairs(pairs, basis, t, o);

    long processed = 0;
    while (!pairs.empty()) {
        // Normal selection: smallest lcm first.
        auto best = pairs.begin();
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it)
            if (o.less(it->lcm_m, best->lcm_m)) best = it;
        Pair pr = *best;
        pairs.erase(best);

        if (++processed > pair_budget)
            fail("ideal.ResourceExceeded",
                 "Buchberger pair budget exceeded (" + std::to_string(pair_budget) + ")");

        const TermVec& f = basis[pr.i];
        const TermVec& g = basis[pr.j];
        Monomial mf = pr.lcm_m / f.front().first;
        Monomial mg = pr.lcm_m / g.front().first;
        // S-polynomial: (lcm/LTf)*f - (LCf/LCg)*(lcm/LTg)*g with monic inputs.
        TermVec s;
        s.reserve(f.size());
        for (const auto& [m, c] : f) s.emplace_back(m * mf, c / f.front().second);
        s = subtract_multiple(s, Rational(1) / g.front().second, mg, g, o);

        TermVec r = reduce_full(std::move(s), basis, o);
        if (r.empty()) continue;
        make_monic(r);
        basis.push_back(std::move(r));
        update_pairs(pairs, basis, basis.size() - 1, o);
    }
    return basis;
}

std::vector<TermVec> reduce_basis(std::vector<TermVec> basis, const MonomialOrder& o) {
    // Minimalize: drop elements whose leading term another element divides.
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!keep[i] || basis[i].empty()) {
            keep[i] = false;
            continue;
        }
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !keep[j] || basis[j].empty()) continue;
            const Monomial& li = basis[i].front().first;
            const Monomial& lj = basis[j].front().first;
            if (lj.divides(li) && (li != lj || j < i)) {
                keep[i] = false;
                break;
            }
        }
    }
    std::vector<TermVec> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) minimal.push_back(std::move(basis[i]));

    // Tail-reduce each element against the others.
    std::vector<TermVec> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<TermVec> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        TermVec r = reduce_full(minimal[i], others, o);
        if (!r.empty()) {
            make_monic(r);
            reduced.push_back(std::move(r));
        }
    }
    std::sort(reduced.begin(), reduced.end(), [&](const TermVec& a, const TermVec& b) {
        return o.greater(a.front().first, b.front().first);
    });
    return reduced;
}

}  // namespace

GroebnerBasis groebner(const Ideal& ideal, const MonomialOrder& order,
                       const GroebnerOptions& opts) {
    std::vector<TermVec> basis;
    for (const auto& g : ideal.generators) {
        TermVec v = to_sorted(g, order);
        make_monic(v);
        basis.push_back(std::move(v));
    }
    basis = buchberger(std::move(basis), order, opts.pair_budget);
    basis = reduce_basis(std::move(basis), order);

    GroebnerBasis gb{ideal.ring, order, {}};
    for (const auto& v : basis) gb.basis.push_back(to_polynomial(v, ideal.ring));
    return gb;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    require_same_ring(p.ring(), gb.ring);
    std::vector<TermVec> basis;
    for (const auto& g : gb.basis) basis.push_back(to_sorted(g, gb.order));
    return to_polynomial(reduce_full(to_sorted(p, gb.order), basis, gb.order), gb.ring);
}

bool membership(const Polynomial& p, const Ideal& ideal) {
    require_same_ring(p.ring(), ideal.ring);
    if (p.is_zero()) return true;
    return normal_form(p, groebner(ideal, MonomialOrder::grevlex())).is_zero();
}

bool is_unit_ideal(const Ideal& ideal) {
    return groebner(ideal, MonomialOrder::grevlex()).is_unit();
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring, b.ring);
    auto ga = groebner(a, MonomialOrder::grevlex());
    auto gb = groebner(b, MonomialOrder::grevlex());
    return ga.basis == gb.basis;
}

Ideal ideal_sum(const Ideal& a, const std::vector<Polynomial>& extra) {
    auto gens = a.generators;
    for (const auto& p : extra) gens.push_back(p);
    return Ideal(a.ring, std::move(gens));
}

Ideal elimination_ideal(const Ideal& ideal, const std::vector<std::string>& drop) {
    if (drop.empty()) return ideal;
    for (const auto& d : drop) ideal.ring.index_checked(d);

    // Permute the ring so dropped variables form the leading block.
    std::vector<std::string> order_vars = drop;
    Ring kept_ring = ideal.ring.without(drop);
    for (const auto& v : kept_ring.names()) order_vars.push_back(v);
    Ring work(order_vars);

    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators) gens.push_back(embed(g, work));
    auto gb = groebner(Ideal(work, std::move(gens)), MonomialOrder::elimination_block(drop.size()));

    std::vector<Polynomial> kept;
    for (const auto& g : gb.basis) {
        bool clean = true;
        for (std::size_t i = 0; i < drop.size() && clean; ++i)
            if (g.degree_in(i) > 0) clean = false;
        if (clean) kept.push_back(restrict_to(g, kept_ring));
    }
    return Ideal(kept_ring, std::move(kept));
}

namespace {

std::string fresh_var_name(const Ring& ring, const std::string& base) {
    std::string name = base;
    while (ring.contains(name)) name += "_";
    return name;
}

}  // namespace

bool radical_membership(const Polynomial& p, const Ideal& ideal) {
    require_same_ring(p.ring(), ideal.ring);
    if (p.is_zero()) return true;
    std::string wname = fresh_var_name(ideal.ring, "_w");
    Ring ext = ideal.ring.extended(wname);
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators) gens.push_back(embed(g, ext));
    Polynomial w = Polynomial::variable(ext, wname);
    gens.push_back(Polynomial::constant(ext, Rational(1)) - w * embed(p, ext));
    return is_unit_ideal(Ideal(ext, std::move(gens)));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring, b.ring);
    std::string wname = fresh_var_name(a.ring, "_w");
    std::vector<std::string> vars = {wname};
    for (const auto& v : a.ring.names()) vars.push_back(v);
    Ring work(vars);
    Polynomial w = Polynomial::variable(work, wname);
    Polynomial one_minus_w = Polynomial::constant(work, Rational(1)) - w;
    std::vector<Polynomial> gens;
    for (const auto& g : a.generators) gens.push_back(w * embed(g, work));
    for (const auto& g : b.generators) gens.push_back(one_minus_w * embed(g, work));
    auto gb = groebner(Ideal(work, std::move(gens)), MonomialOrder::elimination_block(1));
    std::vector<Polynomial> kept;
    for (const auto& g : gb.basis)
        if (g.degree_in(std::size_t{0}) <= 0) kept.push_back(restrict_to(g, a.ring));
    return Ideal(a.ring, std::move(kept));
}

Ideal ideal_quotient(const Ideal& ideal, const Polynomial& g) {
    require_same_ring(g.ring(), ideal.ring);
    require(!g.is_zero(), "ideal.ZeroDivisorArgument", "ideal quotient by zero");
    if (g.is_constant()) return ideal;
    Ideal gi(ideal.ring, {g});
    Ideal inter = intersect(ideal, gi);
    std::vector<Polynomial> quots;
    for (const auto& h : inter.generators) quots.push_back(divide_exact(h, g));
    if (quots.empty()) quots.push_back(Polynomial::zero(ideal.ring));
    return Ideal(ideal.ring, std::move(quots));
}

Ideal ideal_quotient(const Ideal& ideal, const Ideal& j) {
    require_same_ring(ideal.ring, j.ring);
    require(!j.generators.empty(), "ideal.ZeroDivisorArgument", "ideal quotient by zero ideal");
    Ideal acc = ideal_quotient(ideal, j.generators.front());
    for (std::size_t i = 1; i < j.generators.size(); ++i)
        acc = intersect(acc, ideal_quotient(ideal, j.generators[i]));
    return acc;
}

Ideal saturation(const Ideal& ideal, const Ideal& j) {
    Ideal current = ideal;
    for (int round = 0; round < 64; ++round) {
        Ideal next = ideal_quotient(current, j);
        if (ideal_equal(next, current)) return current;
        current = next;
    }
    fail("ideal.ResourceExceeded", "saturation did not stabilize");
}

}  // namespace germlab
