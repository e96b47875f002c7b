#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bartor/bar.hpp"

/* A∞-algebra structure on a two-sided bar construction B(A′, A, A″).
 *
 * The construction proceeds through a homotopy family on bars whose left
 * slot carries the identity structure map:
 *
 *   shift     S : B(A, A, A″) → B(𝕜, A, A″),  a′⊗𝐚⊗a″ ↦ [ā′|𝐚]⊗a″ (deg −1)
 *   collapse  f₁: B(A, A, A″) → A″,           a′⊗𝐚⊗a″ ↦ ε(𝐚)·g″(a′)a″
 *   h-pair    h : B⊗B → B,   h(x, y) = (−1)^{|x|} a′ₓ ⊗ (x⃗ · S(y)) (deg −1)
 *   hₙ        right-nested iteration of h (deg 1−n), h₁ = id
 *   fₙ        f₁ ∘ hₙ: the components of an A∞-morphism B(A,A,A″) ⇒ A″
 *
 * where x⃗ = 𝐚ₓ⊗a″ₓ and · is the one-sided bar product.  The higher
 * products mₙ on a general B(A′, A, A″) combine, over all word
 * deconcatenations of the n arguments, the operation 𝐄 on bar words over
 * A′ (fed through the homotopy family of B(A′, A′, 𝕜)) with the one-sided
 * product chain on B(𝕜, A, A″). */

namespace bartor {

/* common degree of the terms of v (empty vector → nullopt); a vector with
 * terms in several degrees is rejected */
std::optional<int> homogeneous_degree(const Vec& v);

/* letter-wise image of a word under a degree-0 map between augmented
 * algebras (no Koszul signs); multilinear over the letter images */
WLin push_word(const LinOp& g, const Ring& r, const Word& w);

/* word deconcatenation of an element of src = B(A′, A, A″) into legs of
 * lb = B(A′, A, 𝕜) and rb = B(𝕜, A, A″); carries no signs */
using BarSplitLin = Lin<std::pair<BasisElement, BasisElement>>;
BarSplitLin bar_coproduct(const Bar& src, const Bar& lb, const Bar& rb,
                          const BasisElement& x);

/* The homotopy family attached to a pair full = B(A, A, A″) (left slot
 * equal to the middle algebra, identity structure map) and
 * right = B(𝕜, A, A″) (same middle and right data). */
class BarHomotopy {
  public:
    BarHomotopy(Bar full, Bar right);

    const Bar& full() const { return full_; }
    const Bar& rb() const { return right_; }

    /* S: prepend the reduced left slot to the word; degree −1, no sign */
    Vec shift(const BasisElement& x) const;
    Vec shift_vec(const Vec& v) const;

    /* f₁: kills positive word length; a chain map onto A″ */
    Vec collapse(const BasisElement& x) const;
    Vec collapse_vec(const Vec& v) const;

    /* h(x, y) = (−1)^{|x|} a′ₓ ⊗ ((𝐚ₓ⊗a″ₓ) · S(y)) */
    Vec h2(const BasisElement& x, const BasisElement& y) const;
    Vec h2_vec(const Vec& x, const Vec& y) const;

    /* hₙ(x₁,…,xₙ) = (−1)^{|x₁|+…+|xₙ₋₂|} hₙ₋₁(x₁,…,xₙ₋₂, h(xₙ₋₁, xₙ)),
     * h₁ = id; arguments must be homogeneous */
    Vec hn(const std::vector<Vec>& xs) const;

    /* fₙ = f₁ ∘ hₙ */
    Vec fn(const std::vector<Vec>& xs) const;

  private:
    Bar full_, right_;
};

/* The A∞-operations mₙ (n ≥ 2, degree 2−n) on bb = B(A′, A, A″). */
class BarAinfty {
  public:
    explicit BarAinfty(Bar bb);

    const Bar& bar() const { return bb_; }
    /* B(𝕜, A, A″), carrier of the one-sided product chain */
    const Bar& right_bar() const { return rb_; }
    /* B(A′, A, 𝕜), carrier of the left coproduct legs */
    const Bar& left_bar() const { return lb_; }
    /* B(A′, A′, 𝕜) with its homotopy family, and its shift target */
    const BarHomotopy& left_homotopy() const { return hf_; }

    /* mₙ for n ≥ 2; m(1, {x}) is the bar differential */
    Vec m(int n, const std::vector<Vec>& xs) const;
    Vec m_basis(const std::vector<BasisElement>& xs) const;

    /* strict two-sided unit 1⊗𝟏⊗1 */
    Vec unit() const;
    /* augmentation ε(a′)ε(𝐚)ε(a″); multiplicative for m₂, kills mₙ, n ≥ 3 */
    Scalar aug(const BasisElement& x) const;
    Scalar aug_vec(const Vec& v) const;

  private:
    Bar bb_;    // B(A′, A, A″)
    Bar rb_;    // B(𝕜, A, A″)
    Bar lb_;    // B(A′, A, 𝕜)
    Bar lbp_;   // B(A′, A′, 𝕜)
    Bar rbp_;   // B(𝕜, A′, 𝕜)
    BarHomotopy hf_;
};

/* A multilinear operation family: op(n, xs) with xs.size() == n.  For an
 * A∞-algebra the family starts at n = 2 and the differential is passed
 * separately; for a morphism to a dga the family starts at n = 1. */
using OpFamily = std::function<Vec(int, const std::vector<Vec>&)>;

/* packaged A∞-algebra data on a complex */
struct AinfStructure {
    std::string name;
    Ring ring{Ring::Q()};
    std::function<Vec(const BasisElement&)> d;
    OpFamily m;
    Vec unit{Ring::Q()};
    std::function<Scalar(const BasisElement&)> aug;
};

/* packaged A∞-morphism data from an AinfStructure to a dga */
struct AinfMorphism {
    std::string name;
    Dga tgt;
    OpFamily f;
};

/* a dga, viewed with m₂ its product and mₙ = 0 for n ≥ 3 */
AinfStructure dga_as_ainf(const Dga& a);

/* the A∞ data of the operations mₙ on bb (d = bar differential) */
AinfStructure bar_ainf_structure(const BarAinfty& ba);

/* the morphism (fₙ): B(A, A, A″) ⇒ A″ given by the homotopy family */
AinfMorphism bar_collapse_morphism(const BarHomotopy& hf);

/* residual of the structure identity at a basis tuple:
 *
 *   d∘mₙ − (−1)ⁿ mₙ∘d_⊗ + Σ_{l=2}^{n−1} Σ_{i=0}^{n−l}
 *       (−1)^{i+l(n−i−l)+l(|x₁|+…+|xᵢ|)} m_{n−l+1}(x₁,…,m_l(x_{i+1},…),…,xₙ)
 *
 * which vanishes identically iff (mₙ) is an A∞-structure */
Vec ainf_structure_residual(const AinfStructure& s,
                            const std::vector<BasisElement>& xs);

/* residual of the morphism identity at a basis tuple:
 *
 *   d∘fₙ − (−1)^{1−n} fₙ∘d_⊗
 *     − Σ_{l=1}^{n−1} (−1)^{l+(n−l+1)(|x₁|+…+|x_l|)} f_l(x₁,…)·f_{n−l}(…,xₙ)
 *     − Σ_{l=2}^{n} Σ_{i=0}^{n−l}
 *       (−1)^{i+l(n−i−l)+l(|x₁|+…+|xᵢ|)} f_{n−l+1}(x₁,…,m_l(…),…,xₙ) */
Vec ainf_morphism_residual(const AinfStructure& s, const AinfMorphism& mo,
                           const std::vector<BasisElement>& xs);

/* outcome of checking an identity on every tuple drawn from a window */
struct CheckReport {
    std::string name;
    long checks = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
    void count(bool ok, const std::string& witness);
    std::string summary() const;
};

/* evaluate the structure residual on every n-tuple from the window for
 * 2 ≤ n ≤ n_max; exact-zero residuals pass, anything else is recorded
 * with a witness tuple */
CheckReport verify_ainf_algebra(const AinfStructure& s,
                                const std::vector<BasisElement>& window,
                                int n_max);

/* evaluate the morphism residual on every n-tuple for 1 ≤ n ≤ n_max */
CheckReport verify_ainf_morphism(const AinfStructure& s,
                                 const AinfMorphism& mo,
                                 const std::vector<BasisElement>& window,
                                 int n_max);

/* check that op(n, ·) vanishes on every n-tuple from the window */
CheckReport verify_op_vanishes(const std::string& name, const Ring& r,
                               const OpFamily& op,
                               const std::vector<BasisElement>& window, int n);

}  // namespace bartor
