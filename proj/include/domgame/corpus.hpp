#pragma once

#include <cstdint>
#include <vector>

#include "domgame/graph.hpp"
#include "domgame/reductions.hpp"

namespace domgame::corpus {

/// Adjacency code minimized over vertex orderings; equal iff isomorphic.
/// Only for graphs with at most 11 vertices.
std::uint64_t canonical_code(const Graph& g);

/// One representative per isomorphism class of graphs on exactly n
/// vertices (n <= 8), built by vertex augmentation.
std::vector<Graph> all_graphs(int n);

/// Connected members of all_graphs(n).
std::vector<Graph> connected_graphs(int n);

/// Random uncolored graph with edge probability p, deterministic in seed.
Graph random_graph(int n, double p, std::uint64_t seed);

/// `count` distinct random formulas that already satisfy the normalization
/// properties, each with at most max_vars variables and between 3 and
/// max_conj conjunctions. Deterministic in seed.
std::vector<DnfFormula> random_normalized_formulas(int count, int max_vars, int max_conj, std::uint64_t seed);

/// (x1 & x4) | (x2 & x4) | (x3 & x4) | (x5 & x6), renumbered 0..5.
DnfFormula four_clause_example();

} // namespace domgame::corpus
