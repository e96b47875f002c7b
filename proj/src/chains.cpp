#include "bartor/chains.hpp"

#include <memory>

namespace bartor {

Complex normalized_chains(const SimplicialSet& X, const Ring& r) {
    auto S = std::make_shared<SimplicialSet>(X);
    Complex c;
    c.ring = r;
    c.d_deg = -1;
    for (int d = 0; d <= S->top_dim(); ++d)
        for (const auto& k : S->nondeg(d)) c.basis.add(cell_elem(k));
    c.d = [S, r](const BasisElement& b) {
        Vec out(r);
        if (b.degree == 0) return out;
        Simplex x = nd(S->key(b.id));
        for (int i = 0; i <= b.degree; ++i) {
            Simplex f = S->face(x, i);
            if (f.nondeg()) out.add(cell_elem(f.base), Scalar::of(r, pow_sign(i)));
        }
        return out;
    };
    return c;
}

LinOp induced_chain_map(const SimplicialMap& f, const Ring& r) {
    auto fp = std::make_shared<SimplicialMap>(f);
    return LinOp{0, [fp, r](const BasisElement& b) {
                     Vec out(r);
                     Simplex img = fp->apply(nd(fp->src->key(b.id)));
                     if (img.nondeg()) out.add(cell_elem(img.base), Scalar::one(r));
                     return out;
                 }};
}

Complex normalized_cochains(const SimplicialSet& X, const Ring& r) {
    return dual_complex(normalized_chains(X, r));
}

LinOp induced_cochain_map(const SimplicialMap& f, const Ring& r) {
    Complex src = normalized_chains(*f.src, r);
    return transpose_map(materialize(induced_chain_map(f, r), src.basis), r);
}

}  // namespace bartor
