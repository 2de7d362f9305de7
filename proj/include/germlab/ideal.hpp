#pragma once

#include <vector>

#include "germlab/polynomial.hpp"

namespace germlab {

/// Finitely generated ideal. Zero generators are dropped at construction;
/// all generators must share one ring.
struct Ideal {
    Ring ring;
    std::vector<Polynomial> generators;

    Ideal(Ring r, std::vector<Polynomial> gens) : ring(std::move(r)) {
        for (auto& g : gens) {
            if (g.is_zero()) continue;
            require_same_ring(g.ring(), ring);
            generators.push_back(std::move(g));
        }
    }

    static Ideal of(const std::vector<Polynomial>& gens) {
        require(!gens.empty(), "ideal.EmptyGenerators", "ideal needs at least one generator");
        return Ideal(gens.front().ring(), gens);
    }
};

}  // namespace germlab
