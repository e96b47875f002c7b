#pragma once

#include "bartor/chains.hpp"

namespace bartor {

/* Non-degenerate surjection u: {1..len} → {1..r} (no two adjacent values
 * equal), the indexing scheme of an interval-cut operation of degree len−r. */
struct Surjection {
    std::vector<int> u;

    int len() const { return static_cast<int>(u.size()); }
    int r() const;
    int degree() const { return len() - r(); }
    void check() const;
    std::string str() const;

    /* (1,2,1,3,1,…,1,k+1,1), the k-th cooperation */
    static Surjection e_k(int k);
    /* the surjection attached to a decomposition (j_1,…,j_n) of n−1:
     * blocks v_t w_· v_t … interleaving odd a-slots and even b-slots */
    static Surjection from_decomposition(const std::vector<int>& j);
};

/* decompositions of n−1 into n parts with all prefix sums j_1+…+j_s < s */
std::vector<std::vector<int>> admissible_decompositions(int n);

/* Interval cut: split [0,m] into len() intervals in all ways, restrict x to
 * the concatenation of the intervals carrying each label, and sum the
 * label-ordered tensors with the permutation/position sign.  Terms with a
 * degenerate factor vanish in normalized chains. */
TLin interval_cut(const SimplicialSet& X, const Ring& ring, const Surjection& u,
                  const Simplex& x);

/* the same, applied to a vector in normalized chains */
TLin interval_cut(const SimplicialSet& X, const Surjection& u, const Vec& v);

}  // namespace bartor
