#pragma once

#include <functional>
#include <memory>

#include "bartor/complex.hpp"
#include "bartor/koszul.hpp"

namespace bartor {

/* Graded linear map given by its action on basis elements. */
struct LinOp {
    int degree = 0;
    std::function<Vec(const BasisElement&)> f;

    Vec operator()(const BasisElement& b) const { return f(b); }
    Vec apply(const Vec& v) const {
        Vec out(v.ring());
        for (const auto& [k, c] : v.terms()) out.add_scaled(f(k), c);
        return out;
    }
};

LinOp lin_identity(const Ring& r);
LinOp lin_zero(const Ring& r, int degree);
LinOp lin_compose(const LinOp& g, const LinOp& f); /* g after f */
LinOp lin_add(const LinOp& a, const LinOp& b);
LinOp lin_sub(const LinOp& a, const LinOp& b);
LinOp lin_scale(const Scalar& c, const LinOp& a);

/* differential of a map: d(f) = d_B ∘ f − (−1)^{deg f} f ∘ d_A */
LinOp diff_of_map(const LinOp& f, const Complex& A, const Complex& B);

/* tensor product of maps: (f⊗g)(a⊗b) = (−1)^{deg g · deg a} f(a)⊗g(b),
 * acting on flattened two-factor ids via the supplied registry */
LinOp tensor_maps(const LinOp& f, const LinOp& g, std::shared_ptr<const Tensor2> reg,
                  std::function<BasisElement(const BasisElement&, const BasisElement&)> flat_out);

/* materialized columns of a map over an explicit source basis */
struct MatMap {
    int degree = 0;
    std::map<BasisElement, Vec> col;
};

MatMap materialize(const LinOp& op, const GradedBasis& src);

/* transpose: f*(β) = (−1)^{deg f · deg β} β ∘ f on dual basis elements.
 * Columns of the result are indexed by duals of the target basis; the source
 * basis is taken from the materialized columns. */
LinOp transpose_map(const MatMap& m, const Ring& ring);

/* dual complex: same ranks, differential −(d)* */
Complex dual_complex(const Complex& C);

/* pairing map for tensor factors of duals:
 * j(b₁^⊗…⊗b_k^) = (−1)^{Σ_{i<j} deg bᵢ deg bⱼ} (b₁⊗…⊗b_k)^ — returned as
 * the sign alone, callers assemble ids */
int dual_tensor_sign(const TupleKey& primal);

/* entrywise equality of two operators over a basis window; returns witness */
std::optional<std::string> ops_equal(const LinOp& a, const LinOp& b, const GradedBasis& on);

}  // namespace bartor
