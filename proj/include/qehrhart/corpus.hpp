#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qehrhart/polytope.hpp"
#include "qehrhart/poset.hpp"

namespace qe::corpus {

struct NamedPair {
    std::string name;
    LatticePolytope polytope;
    LinearForm lambda;
};

/// The four running examples: the unit segment, the unimodular triangle,
/// the parallelogram with a negative numerator coefficient, and the
/// quadrilateral with vertices (0,0),(1,0),(1,1),(0,3); all with the
/// all-ones form.
NamedPair example_a();
NamedPair example_b();
NamedPair example_c();
NamedPair example_d();
std::vector<NamedPair> golden_examples();

struct NamedPoset {
    std::string name;
    Poset poset;
};

/// a below b, c, d.
Poset claw();

/// Chains and antichains up to size 4, the claw and its opposite, and
/// chain products up to 3 x 3.
std::vector<NamedPoset> poset_corpus();

/// All rooted trees with at most `max_nodes` nodes, as posets with the
/// root as unique maximal element, deduplicated up to isomorphism.
std::vector<NamedPoset> rooted_trees(int max_nodes);

/// Deterministic random lattice polytopes with dimension <= 3 and vertex
/// coordinates in [0, 4], retried until Positivity and Genericity hold.
std::vector<NamedPair> random_valid_pairs(unsigned seed, int count);

}  // namespace qe::corpus
