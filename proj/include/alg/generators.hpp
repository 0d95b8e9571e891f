#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "alg/graph.hpp"

namespace alg::gen {

// Labeling conventions: cycles and paths run 0-1-...-(k-1); stars use 0 as
// the center; multipartite parts take consecutive vertex blocks in input
// order; prism(k) joins outer cycle 0..k-1 to inner cycle k..2k-1 by spokes
// i -- i+k; the Petersen graph is outer 5-cycle 0..4, spokes i -- i+5, and
// inner pentagram 5+i -- 5+(i+2)%5.

SimpleGraph cycle(int k);
SimpleGraph path(int k);
/// K_{1,k}: center 0 with k leaves.
SimpleGraph star(int k);
SimpleGraph complete(int k);
SimpleGraph complete_bipartite(int a, int b);
SimpleGraph complete_multipartite(std::span<const int> parts);
SimpleGraph petersen();
SimpleGraph prism(int k);
SimpleGraph mobius_ladder(int k);
SimpleGraph hypercube(int dim);
/// Hamiltonian cubic graph from LCF notation, pattern repeated `repeats` times.
SimpleGraph lcf(std::span<const int> pattern, int repeats);
/// Disjoint union, second graph's vertices shifted past the first.
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);

/// G(n, p) Erdos-Renyi sample.
SimpleGraph random_gnp(int n, double p, std::mt19937_64& rng);
/// G(n, p) resampled until connected.
SimpleGraph random_connected(int n, double p, std::mt19937_64& rng);
/// Random graph with exactly m edges chosen uniformly.
SimpleGraph random_gnm(int n, int m, std::mt19937_64& rng);
/// Random simple cubic graph via the pairing model with rejection; n even.
SimpleGraph random_cubic(int n, std::mt19937_64& rng);

}  // namespace alg::gen
