#pragma once

#include "bartor/chains.hpp"
#include "bartor/dga.hpp"
#include "bartor/surjection.hpp"

namespace bartor {

/* Homotopy Gerstenhaber algebra: an augmented dga together with operations
 * E_k: A ⊗ A^{⊗k} → A of degree −k for k ≥ 1 (E_0 is the identity).  A
 * graded-commutative dga is an hga with all E_k = 0. */
struct Hga {
    Dga alg;
    std::function<Vec(const BasisElement&, const std::vector<BasisElement>&)> ek;

    Vec ek_vec(const Vec& a, const std::vector<Vec>& bs) const;
};

/* The normalized cochain algebra of a simplicial set, with the augmentation
 * given by the basepoint vertex, the cup product as the transpose of the
 * front/back coproduct, and E_k transposed from the interval-cut cooperation
 * E^k = AW_{(1,2,1,3,…,1,k+1,1)} on normalized chains. */
struct CochainAlgebra {
    std::shared_ptr<SimplicialSet> space;
    std::string basept;
    Complex chains;
    Hga hga;
};

CochainAlgebra cochain_algebra(const SimplicialSet& X, const Ring& ring,
                               const std::string& basept);

/* sign of evaluating a functional tuple on a chain tuple under the canonical
 * map (A^∨)^{⊗n} → (A^{⊗n})^∨: Σ_{i<j} deg f_j · deg u_i */
int functional_tuple_sign(const std::vector<int>& fdegs);

/* cochain map induced by a simplicial map (contravariant), as a dga morphism
 * between cochain algebras */
DgaMap pullback_map(const SimplicialMap& f, const CochainAlgebra& of_src,
                    const CochainAlgebra& of_tgt);

}  // namespace bartor
