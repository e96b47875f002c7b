#include "bartor/linop.hpp"

namespace bartor {

LinOp lin_identity(const Ring& r) {
    return LinOp{0, [r](const BasisElement& b) { return Vec::basis(r, b); }};
}

LinOp lin_zero(const Ring& r, int degree) {
    return LinOp{degree, [r](const BasisElement&) { return Vec(r); }};
}

LinOp lin_compose(const LinOp& g, const LinOp& f) {
    auto gf = g;
    return LinOp{g.degree + f.degree,
                 [g, f](const BasisElement& b) { return g.apply(f.f(b)); }};
}

LinOp lin_add(const LinOp& a, const LinOp& b) {
    require(a.degree == b.degree, "lin_add: degree mismatch");
    return LinOp{a.degree, [a, b](const BasisElement& x) { return a.f(x) + b.f(x); }};
}

LinOp lin_sub(const LinOp& a, const LinOp& b) {
    require(a.degree == b.degree, "lin_sub: degree mismatch");
    return LinOp{a.degree, [a, b](const BasisElement& x) { return a.f(x) - b.f(x); }};
}

LinOp lin_scale(const Scalar& c, const LinOp& a) {
    return LinOp{a.degree, [c, a](const BasisElement& x) { return a.f(x).scaled(c); }};
}

LinOp diff_of_map(const LinOp& f, const Complex& A, const Complex& B) {
    auto dA = A.d;
    auto dB = B.d;
    Ring ring = A.ring;
    int fdeg = f.degree;
    return LinOp{f.degree + B.d_deg, [f, dA, dB, ring, fdeg](const BasisElement& x) {
                     Vec out(ring);
                     Vec fx = f.f(x);
                     for (const auto& [k, c] : fx.terms()) out.add_scaled(dB(k), c);
                     Vec fd(ring);
                     Vec dx = dA(x);
                     for (const auto& [k, c] : dx.terms()) fd.add_scaled(f.f(k), c);
                     out.add_scaled(fd, Scalar::of(ring, -pow_sign(fdeg)));
                     return out;
                 }};
}

LinOp tensor_maps(const LinOp& f, const LinOp& g, std::shared_ptr<const Tensor2> reg,
                  std::function<BasisElement(const BasisElement&, const BasisElement&)> flat_out) {
    Ring ring = reg->cx.ring;
    return LinOp{f.degree + g.degree,
                 [f, g, reg, flat_out, ring](const BasisElement& x) {
                     const auto& [a, b] = reg->split(x);
                     Vec out(ring);
                     Scalar s = Scalar::of(ring, koszul_sign(g.degree, a.degree));
                     Vec fa = f.f(a);
                     Vec gb = g.f(b);
                     for (const auto& [ka, ca] : fa.terms())
                         for (const auto& [kb, cb] : gb.terms())
                             out.add(flat_out(ka, kb), ca * cb * s);
                     return out;
                 }};
}

MatMap materialize(const LinOp& op, const GradedBasis& src) {
    MatMap m;
    m.degree = op.degree;
    for (const auto& [deg, elems] : src.by_deg)
        for (const auto& b : elems) m.col.emplace(b, op.f(b));
    return m;
}

LinOp transpose_map(const MatMap& m, const Ring& ring) {
    /* rows of m, keyed by the dual of each target element */
    auto rows = std::make_shared<std::map<BasisElement, Vec>>();
    for (const auto& [src, img] : m.col)
        for (const auto& [tgt, c] : img.terms()) {
            auto it = rows->find(dual_elem(tgt));
            if (it == rows->end()) it = rows->emplace(dual_elem(tgt), Vec(ring)).first;
            it->second.add(dual_elem(src), c);
        }
    int fdeg = m.degree;
    return LinOp{-m.degree, [rows, ring, fdeg](const BasisElement& beta) {
                     Vec out(ring);
                     auto it = rows->find(beta);
                     if (it == rows->end()) return out;
                     Scalar s = Scalar::of(ring, koszul_sign(fdeg, beta.degree));
                     out.add_scaled(it->second, s);
                     return out;
                 }};
}

Complex dual_complex(const Complex& C) {
    Complex D;
    D.ring = C.ring;
    D.d_deg = -C.d_deg;
    for (const auto& [deg, elems] : C.basis.by_deg)
        for (const auto& b : elems) D.basis.add(dual_elem(b));
    MatMap dmat = materialize(LinOp{C.d_deg, C.d}, C.basis);
    LinOp dt = transpose_map(dmat, C.ring);
    Ring ring = C.ring;
    D.d = [dt, ring](const BasisElement& beta) {
        Vec v = dt.f(beta);
        v.negate();
        return v;
    };
    return D;
}

int dual_tensor_sign(const TupleKey& primal) {
    long e = 0;
    for (std::size_t i = 0; i < primal.size(); ++i)
        for (std::size_t j = i + 1; j < primal.size(); ++j)
            e += static_cast<long>(primal[i].degree) * primal[j].degree;
    return pow_sign(e);
}

std::optional<std::string> ops_equal(const LinOp& a, const LinOp& b, const GradedBasis& on) {
    for (const auto& [deg, elems] : on.by_deg)
        for (const auto& x : elems) {
            Vec va = a.f(x);
            Vec vb = b.f(x);
            if (va != vb)
                return "at " + x.id + ": lhs = " + vec_str(va) + ", rhs = " + vec_str(vb);
        }
    return std::nullopt;
}

}  // namespace bartor
