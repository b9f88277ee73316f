#pragma once

#include <span>
#include <vector>

#include "narayana/lattice_word.hpp"
#include "narayana/partition.hpp"
#include "narayana/tableau.hpp"

namespace narayana {

/// Lattice word of weight (m^n) -> SYT of shape (n^m): cell (i, j) receives k
/// when w_k is the j-th occurrence of i. asc(w) = des(phi(w)).
StandardTableau phi(const LatticeWord& w);

/// Inverse of phi: w_k = row of k. Throws ShapeError for non-rectangular shapes.
LatticeWord phi_inverse(const StandardTableau& t);

/// Replaces symbol s by step X_{m-s+1}. Swaps the statistics:
/// asc(path) = des(word), des(path) = asc(word).
BallotPath word_to_path(const LatticeWord& w);
/// Replaces step X_j by symbol m-j+1.
LatticeWord path_to_word(const BallotPath& p);

/// Jordan-Holder permutation -> SYT for a labeled Ferrers poset: cell
/// omega^{-1}(pi_k) receives k.
///
/// `labeling` lists omega for the cells of `shape` in row-major order.
/// Throws ValidationError unless pi is a permutation of 1..p whose preimage
/// sequence is a linear extension of the Ferrers poset.
StandardTableau perm_to_tableau(std::span<const int> pi, std::span<const int> labeling,
                                const Partition& shape);

}  // namespace narayana
