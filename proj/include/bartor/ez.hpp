#pragma once

#include "bartor/chains.hpp"

namespace bartor {

/* number of inversions between the two blocks of a partition (the sign of
 * the associated shuffle permutation is (-1)^this) */
long shuffle_inversions(const std::vector<int>& alpha, const std::vector<int>& beta);

/* all (p,q)-partitions of {0,…,p+q-1}, each as (alpha, beta) with |alpha|=p */
std::vector<std::pair<std::vector<int>, std::vector<int>>> shuffles(int p, int q);

/* The normalized Eilenberg–Zilber contraction for a product of two
 * simplicial sets:
 *
 *   aw ∘ sh = 1,   d h + h d = sh ∘ aw − 1,
 *   h ∘ sh = 0,    aw ∘ h = 0,    h ∘ h = 0.
 *
 * aw splits a product cell into front and back faces, sh spreads a tensor
 * over all shuffles of degeneracies, h is the one-sided homotopy built from
 * back faces of the first factor and front faces of the second. */
struct EZ {
    Ring ring;
    std::shared_ptr<const SimplicialSet> X, Y;
    std::shared_ptr<const ProductSS> P;
    std::shared_ptr<const Tensor2> T; /* N(X) ⊗ N(Y), flattened */

    Complex product_cx; /* N(X×Y) */
    Complex tensor_cx;  /* N(X) ⊗ N(Y) */

    LinOp aw; /* N(X×Y) → N(X)⊗N(Y) */
    LinOp sh; /* N(X)⊗N(Y) → N(X×Y) */
    LinOp h;  /* degree +1 on N(X×Y) */
};

EZ make_ez(const SimplicialSet& X, const SimplicialSet& Y, const Ring& r);

}  // namespace bartor
