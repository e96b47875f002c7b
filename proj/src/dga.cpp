#include "bartor/dga.hpp"

namespace bartor {

Scalar Dga::aug_vec(const Vec& v) const {
    Scalar s = Scalar::zero(ring);
    for (const auto& [b, c] : v.terms()) s = s + c * aug(b);
    return s;
}

Vec Dga::reduce(const Vec& v) const {
    Vec out = v;
    out.add_scaled(unit, -aug_vec(v));
    for (const auto& [b, c] : out.terms())
        require(red.contains(b), "reduce: component outside the augmentation ideal basis: " + b.id);
    return out;
}

Vec Dga::mul_vec(const Vec& a, const Vec& b) const {
    Vec out(ring);
    for (const auto& [x, cx_] : a.terms())
        for (const auto& [y, cy] : b.terms()) {
            Vec p = mul(x, y);
            out.add_scaled(p, cx_ * cy);
        }
    return out;
}

std::optional<std::string> DgaMap::validate() const {
    require(src && tgt, "DgaMap: unbound endpoints");
    require(op.degree == 0, "DgaMap: morphisms have degree 0");
    LinOp df = diff_of_map(op, src->cx, tgt->cx);
    for (int d = src->cx.basis.min_degree(); d <= src->cx.basis.max_degree(); ++d)
        for (const BasisElement& b : src->cx.basis.at(d)) {
            Vec v = df(b);
            if (!v.is_zero()) return "not a chain map at " + b.id + ": " + vec_str(v);
        }
    Vec u = apply_vec(src->unit);
    if (!(u == tgt->unit)) return "unit not preserved: " + vec_str(u);
    for (int d = src->cx.basis.min_degree(); d <= src->cx.basis.max_degree(); ++d)
        for (const BasisElement& b : src->cx.basis.at(d)) {
            if (!(tgt->aug_vec(apply(b)) == src->aug(b)))
                return "augmentation not preserved at " + b.id;
            for (int e = src->cx.basis.min_degree(); e <= src->cx.basis.max_degree(); ++e)
                for (const BasisElement& c : src->cx.basis.at(e)) {
                    Vec lhs = apply_vec(src->mul(b, c));
                    Vec rhs = tgt->mul_vec(apply(b), apply(c));
                    if (!(lhs == rhs))
                        return "not multiplicative at (" + b.id + ", " + c.id + ")";
                }
        }
    return std::nullopt;
}

DgaMap identity_dga_map(const Dga& a) {
    return DgaMap{"id_" + a.name, &a, &a, lin_identity(a.ring)};
}

DgaMap compose_dga_maps(const DgaMap& g, const DgaMap& f) {
    require(f.tgt == g.src, "compose_dga_maps: endpoint mismatch");
    return DgaMap{g.name + "∘" + f.name, f.src, g.tgt, lin_compose(g.op, f.op)};
}

}  // namespace bartor
