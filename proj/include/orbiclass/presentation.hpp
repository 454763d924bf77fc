#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "orbiclass/complex.hpp"

namespace orbiclass {

inline constexpr std::size_t kDefaultCosetBound = 50000;

/// Word letters are +(g+1) for generator g and -(g+1) for its inverse.
using Word = std::vector<int>;

struct Presentation {
    std::size_t generators = 0;
    std::vector<Word> relators;

    std::size_t total_length() const;
    std::string to_string() const;
};

/// Freely and cyclically reduced form of a word.
Word cyclically_reduce(const Word& w);

/**
 * Edge-path presentation of pi_1(K) based at the smallest vertex: one
 * generator per edge outside a breadth-first spanning tree, one relator per
 * triangle. Throws InvalidComplex when K is empty or disconnected.
 */
Presentation pi1_presentation(const SimplicialComplex& k);

/**
 * Tietze simplification: drops trivial and duplicate relators, removes
 * generators killed by length-1 relators, and eliminates a generator that
 * occurs once in some relator whenever this does not increase the total
 * relator length. The group is unchanged up to isomorphism.
 */
Presentation simplify(const Presentation& p);

struct CosetResult {
    bool closed = false;
    /// Group order when the coset table closed.
    std::size_t order = 0;
    /// Rows defined before closing or giving up.
    std::size_t rows_used = 0;
};

/// Todd-Coxeter enumeration of the cosets of the trivial subgroup.
/// Gives up (closed = false) once more than `bound` rows would be defined.
CosetResult coset_enumeration(const Presentation& p, std::size_t bound = kDefaultCosetBound);

/// Abelianization as a list of invariant factors (0 for a Z summand),
/// in divisibility order; units are omitted.
std::vector<std::string> abelian_invariants(const Presentation& p);

}  // namespace orbiclass
