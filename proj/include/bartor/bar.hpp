#pragma once

#include <utility>

#include "bartor/hga.hpp"

namespace bartor {

/* ------------------------------------------------------------------------
 * One-sided bar words.
 *
 * A word [a₁|…|a_k] lists letters from the reduced basis of an augmented
 * algebra; the letter aᵢ contributes deg aᵢ − 1, so the word degree is
 * Σ(deg aᵢ − 1).  The empty word is the coalgebra unit 𝟏.
 * ---------------------------------------------------------------------- */

using Word = std::vector<BasisElement>;
using WLin = Lin<Word>;

int word_degree(const Word& w);
std::string word_id(const Word& w);

/* bar differential of the one-sided bar: internal differentials and merges
 * of adjacent letters, d[a₁|…] = −Σ(−1)^{εᵢ}[…|daᵢ₊₁|…] + Σ(−1)^{εᵢ}[…|aᵢaᵢ₊₁|…]
 * with εᵢ = Σ_{l≤i} deg a_l − i */
WLin word_d(const Hga& H, const Word& w);
WLin word_d_w(const Hga& H, const WLin& v);

/* deconcatenation: all prefix/suffix splits, every sign +1 */
std::vector<std::pair<Word, Word>> word_splits(const Word& w);

/* The universal operation 𝐄: BA⊗BA → A: zero when the first word has two or
 * more letters, the counit-type values 𝐄(𝐚,𝟏) = 𝐄(𝟏,𝐚) = t(𝐚) on unit
 * words, and on single letters the frozen corestriction
 *   𝐄([a],[b₁|…|b_k]) = (−1)^{k·deg a + Σᵢ (k−i)·deg bᵢ} E_k(a; b₁,…,b_k). */
Vec word_ee(const Hga& H, const Word& a, const Word& b);
/* multilinear wrapper: both arguments given letterwise as vectors */
Vec word_ee_vv(const Hga& H, const std::vector<Vec>& a, const std::vector<Vec>& b);

/* bar product: the coalgebra map BA⊗BA → BA whose corestriction is 𝐄,
 * μ(𝐚,𝐛) = Σ ± [𝐄(𝐚₁,𝐛₁)|…|𝐄(𝐚ₙ,𝐛ₙ)] over block decompositions, with the
 * Koszul sign of interleaving the blocks */
WLin word_mul(const Hga& H, const Word& a, const Word& b);
WLin word_mul_w(const Hga& H, const WLin& a, const WLin& b);

/* ------------------------------------------------------------------------
 * Coefficient-algebra helpers.
 * ---------------------------------------------------------------------- */

/* the one-dimensional algebra (cochains of a point) */
Hga unit_hga(const Ring& r);
/* the basis element of a one-dimensional algebra */
BasisElement unit_elt(const Hga& k);
/* wrap a dga as an hga with vanishing operations in positive arity; only
 * valid as an outer bar coefficient — bar products need genuine operations */
Hga hga_with_zero_ops(Dga a);
/* augmentation onto a one-dimensional algebra, as a linear map */
LinOp augmentation_op(const Dga& a, const Hga& k);

/* tensor product of augmented dgas, with flattened pair ids */
struct TensorDga {
    Dga alg;
    std::shared_ptr<const Tensor2> reg;

    BasisElement flat(const BasisElement& a, const BasisElement& b) const {
        return reg->flat(a, b);
    }
    const std::pair<BasisElement, BasisElement>& split(const BasisElement& f) const {
        return reg->split(f);
    }
    /* bilinear tensor of two vectors (no sign; signs live in the product) */
    Vec elem(const Vec& a, const Vec& b) const;
};

/* the base point of the tensor algebra is detected from the augmentations,
 * which must be coordinate functionals on single degree-0 basis elements */
TensorDga tensor_dga(const std::string& name, const Dga& A, const Dga& B);

/* ------------------------------------------------------------------------
 * Two-sided bar construction B(A′, A, A″) for an augmented middle algebra A
 * acting on the outer algebras through algebra maps A → A′ and A → A″.
 * Elements a′ ⊗ [a₁|…|a_k] ⊗ a″ are encoded as flat basis elements so that
 * linear algebra over them reuses Vec; a registry decodes ids back to the
 * structured form.
 * ---------------------------------------------------------------------- */

struct BarElt {
    BasisElement left;
    Word letters;
    BasisElement right;
    auto operator<=>(const BarElt&) const = default;
};

int bar_elt_degree(const BarElt& t);

class Bar {
  public:
    Bar(std::string name, Hga left, Hga mid, Hga right, LinOp to_left, LinOp to_right);

    const std::string& name() const { return name_; }
    const Ring& ring() const { return mid_.alg.ring; }
    const Hga& left() const { return left_; }
    const Hga& mid() const { return mid_; }
    const Hga& right() const { return right_; }
    const LinOp& to_left() const { return to_left_; }
    const LinOp& to_right() const { return to_right_; }

    /* encode a structured tuple (letters must be reduced basis elements) */
    BasisElement enc(const BarElt& t) const;
    const BarElt& dec(const BasisElement& b) const;
    Vec vec(const BarElt& t) const { return Vec::basis(ring(), enc(t)); }

    /* multilinear embedding of (left, letters…, right) */
    Vec elem(const Vec& l, const std::vector<Vec>& letters, const Vec& r) const;

    /* the two-sided bar differential */
    Vec d(const BasisElement& b) const;
    Vec d_vec(const Vec& v) const;
    LinOp d_op() const;

    /* all encoded tuples with total degree in [lo, hi] and word length at
     * most max_len; the enumeration is degree-complete iff the reduced part
     * of the middle algebra is concentrated in degrees ≥ 2 or the length cap
     * is not binding */
    std::vector<BasisElement> window(int lo, int hi, int max_len) const;
    Complex window_complex(int lo, int hi, int max_len) const;

  private:
    std::string name_;
    Hga left_, mid_, right_;
    LinOp to_left_, to_right_;
    std::shared_ptr<std::map<std::string, BarElt>> reg_;
};

/* product on the right one-sided bar B(𝕜,A,A″):
 * (𝐚⊗a″)·(𝐛⊗b″) = Σ (−1)^{deg a″·|𝐛₍₁₎|} μ(𝐚,𝐛₍₁₎) ⊗ 𝐄([ā″], 𝐛₍₂₎)b″
 *                + ε(a″) μ(𝐚,𝐛) ⊗ b″,
 * the 𝐄 taken in A″ with the letters of 𝐛₍₂₎ pushed forward along A → A″ */
Vec ks_mul(const Bar& rb, const BasisElement& x, const BasisElement& y);
Vec ks_mul_vec(const Bar& rb, const Vec& x, const Vec& y);

/* strict functoriality: apply algebra morphisms slotwise (no signs) */
LinOp bar_map(const Bar& src, const Bar& tgt, const LinOp& fl, const LinOp& fm,
              const LinOp& fr);

/* shuffle of bar constructions into the bar of the tensor algebras:
 * x⊗y ↦ ± (x′⊗y′) ⊗ (letters of x and y interleaved in all orders) ⊗ (x″⊗y″),
 * with Koszul signs on word degrees and on moving y′, y-letters, y″ left
 * past the x-parts they cross */
Vec bar_shuffle(const Bar& xb, const Bar& yb, const Bar& tb, const TensorDga& lten,
                const TensorDga& mten, const TensorDga& rten, const BasisElement& x,
                const BasisElement& y);

}  // namespace bartor
