#include "germlab/monomial_order.hpp"

namespace germlab {
namespace {

int cmp_long(long a, long b) { return a < b ? -1 : (a > b ? 1 : 0); }

int cmp_lex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
        if (int c = cmp_long(a.exp[i], b.exp[i])) return c;
    return 0;
}

// Graded reverse lexicographic on the variable slice [lo, hi).
int cmp_grevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    long da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a.exp[i];
        db += b.exp[i];
    }
    if (int c = cmp_long(da, db)) return c;
    // Tie: the monomial with the larger exponent in the last differing
    // variable is the smaller one.
    for (std::size_t i = hi; i > lo; --i) {
        if (int c = cmp_long(a.exp[i - 1], b.exp[i - 1])) return -c;
    }
    return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    const std::size_t n = a.exp.size();
    switch (kind_) {
        case Kind::Lex:
            return cmp_lex(a, b, 0, n);
        case Kind::Grevlex:
            return cmp_grevlex(a, b, 0, n);
        case Kind::WeightedGrevlex: {
            long da = 0, db = 0;
            for (std::size_t i = 0; i < n; ++i) {
                da += weights_[i] * a.exp[i];
                db += weights_[i] * b.exp[i];
            }
            if (int c = cmp_long(da, db)) return c;
            return cmp_grevlex(a, b, 0, n);
        }
        case Kind::Block: {
            if (int c = cmp_grevlex(a, b, 0, split_)) return c;
            return cmp_grevlex(a, b, split_, n);
        }
    }
    return 0;
}

std::string MonomialOrder::describe() const {
    switch (kind_) {
        case Kind::Lex:
            return "lex";
        case Kind::Grevlex:
            return "grevlex";
        case Kind::WeightedGrevlex: {
            std::string s = "wgrevlex(";
            for (std::size_t i = 0; i < weights_.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(weights_[i]);
            }
            return s + ")";
        }
        case Kind::Block:
            return "block(" + std::to_string(split_) + ")";
    }
    return "?";
}

}  // namespace germlab
