#pragma once

#include "bartor/linop.hpp"
#include "bartor/simplicial.hpp"

namespace bartor {

inline BasisElement cell_elem(const SimplexKey& k) { return BasisElement{k.dim, k.id}; }

/* normalized chain complex: basis = nondegenerate simplices,
 * d = Σ (−1)^i ∂_i with degenerate faces dropped */
Complex normalized_chains(const SimplicialSet& X, const Ring& r);

/* chain-level map induced by a simplicial map; degenerate images vanish */
LinOp induced_chain_map(const SimplicialMap& f, const Ring& r);

/* normalized cochains: the dual complex (coboundary = −transpose) */
Complex normalized_cochains(const SimplicialSet& X, const Ring& r);

/* cochain-level map induced by a simplicial map: transpose of the chain map */
LinOp induced_cochain_map(const SimplicialMap& f, const Ring& r);

}  // namespace bartor
