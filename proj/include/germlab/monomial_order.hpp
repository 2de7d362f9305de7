#pragma once

#include <string>
#include <vector>

#include "germlab/monomial.hpp"

namespace germlab {

/// Term orders used by the basis engine. All are total, multiplicative
/// well-orders. Block orders eliminate the first `split` ring variables.
class MonomialOrder {
public:
    enum class Kind { Lex, Grevlex, WeightedGrevlex, Block };

    static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
    static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex); }
    static MonomialOrder weighted_grevlex(WeightVector w) {
        MonomialOrder o(Kind::WeightedGrevlex);
        o.weights_ = std::move(w.w);
        return o;
    }
    /// Eliminates variables 0..split-1: any monomial touching the first
    /// block sorts above every block-free monomial. Grevlex inside blocks.
    static MonomialOrder elimination_block(std::size_t split) {
        MonomialOrder o(Kind::Block);
        o.split_ = split;
        return o;
    }

    Kind kind() const { return kind_; }
    std::size_t block_split() const { return split_; }

    /// <0, 0, >0 as a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const;

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    std::string describe() const;

private:
    explicit MonomialOrder(Kind k) : kind_(k) {}

    Kind kind_;
    std::vector<long> weights_;
    std::size_t split_ = 0;
};

}  // namespace germlab
