#include "bartor/ainf.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <utility>

#include "bartor/common.hpp"
#include "bartor/koszul.hpp"

namespace bartor {

std::optional<int> homogeneous_degree(const Vec& v) {
    if (v.is_zero()) return std::nullopt;
    int deg = v.terms().begin()->first.degree;
    for (const auto& [e, c] : v.terms()) {
        (void)c;
        require(e.degree == deg,
                "homogeneous_degree: mixed degrees at " + e.id);
    }
    return deg;
}

WLin push_word(const LinOp& g, const Ring& r, const Word& w) {
    require(g.degree == 0, "push_word: structure map must have degree 0");
    WLin out(r);
    Word cur(w.size(), BasisElement{});
    std::function<void(std::size_t, const Scalar&)> rec =
        [&](std::size_t i, const Scalar& c) {
            if (i == w.size()) {
                out.add(cur, c);
                return;
            }
            Vec img = g(w[i]);
            for (const auto& [e, ce] : img.terms()) {
                cur[i] = e;
                rec(i + 1, c * ce);
            }
        };
    rec(0, Scalar::one(r));
    return out;
}

BarSplitLin bar_coproduct(const Bar& src, const Bar& lb, const Bar& rb,
                          const BasisElement& x) {
    require(lb.right().alg.is_trivial(),
            "bar_coproduct: left legs must end in the trivial algebra");
    require(rb.left().alg.is_trivial(),
            "bar_coproduct: right legs must start in the trivial algebra");
    const BarElt& t = src.dec(x);
    BasisElement lu = unit_elt(lb.right());
    BasisElement ru = unit_elt(rb.left());
    BarSplitLin out(src.ring());
    for (const auto& [u, v] : word_splits(t.letters))
        out.add({lb.enc(BarElt{t.left, u, lu}), rb.enc(BarElt{ru, v, t.right})},
                Scalar::one(src.ring()));
    return out;
}

BarHomotopy::BarHomotopy(Bar full, Bar right)
    : full_(std::move(full)), right_(std::move(right)) {
    require(full_.ring() == right_.ring(), "BarHomotopy: mixed rings");
    require(full_.left().alg.name == full_.mid().alg.name,
            "BarHomotopy: left slot must be the middle algebra itself");
    require(right_.left().alg.is_trivial(),
            "BarHomotopy: companion bar must have trivial left slot");
    require(right_.mid().alg.name == full_.mid().alg.name &&
                right_.right().alg.name == full_.right().alg.name,
            "BarHomotopy: companion bar must share middle and right data");
}

Vec BarHomotopy::shift(const BasisElement& x) const {
    const Ring& R = full_.ring();
    const BarElt& t = full_.dec(x);
    Vec red = full_.mid().alg.reduce(Vec::basis(R, t.left));
    BasisElement ku = unit_elt(right_.left());
    Vec out(R);
    for (const auto& [b, c] : red.terms()) {
        Word w;
        w.reserve(t.letters.size() + 1);
        w.push_back(b);
        w.insert(w.end(), t.letters.begin(), t.letters.end());
        out.add(right_.enc(BarElt{ku, w, t.right}), c);
    }
    return out;
}

Vec BarHomotopy::shift_vec(const Vec& v) const {
    Vec out(full_.ring());
    for (const auto& [e, c] : v.terms()) out.add_scaled(shift(e), c);
    return out;
}

Vec BarHomotopy::collapse(const BasisElement& x) const {
    const Ring& R = full_.ring();
    const BarElt& t = full_.dec(x);
    if (!t.letters.empty()) return Vec(R);
    Vec ga = full_.to_right()(t.left);
    return full_.right().alg.mul_vec(ga, Vec::basis(R, t.right));
}

Vec BarHomotopy::collapse_vec(const Vec& v) const {
    Vec out(full_.ring());
    for (const auto& [e, c] : v.terms()) out.add_scaled(collapse(e), c);
    return out;
}

Vec BarHomotopy::h2(const BasisElement& x, const BasisElement& y) const {
    const Ring& R = full_.ring();
    const BarElt& t = full_.dec(x);
    BasisElement ku = unit_elt(right_.left());
    Vec xr = right_.vec(BarElt{ku, t.letters, t.right});
    Vec prod = ks_mul_vec(right_, xr, shift(y));
    Scalar sg = Scalar::of(R, pow_sign(bar_elt_degree(t)));
    Vec out(R);
    for (const auto& [e, c] : prod.terms()) {
        const BarElt& p = right_.dec(e);
        out.add(full_.enc(BarElt{t.left, p.letters, p.right}), c * sg);
    }
    return out;
}

Vec BarHomotopy::h2_vec(const Vec& x, const Vec& y) const {
    Vec out(full_.ring());
    for (const auto& [ex, cx] : x.terms())
        for (const auto& [ey, cy] : y.terms())
            out.add_scaled(h2(ex, ey), cx * cy);
    return out;
}

Vec BarHomotopy::hn(const std::vector<Vec>& xs) const {
    const Ring& R = full_.ring();
    require(!xs.empty(), "hn: needs at least one argument");
    if (xs.size() == 1) return xs[0];
    long pre = 0;
    for (std::size_t i = 0; i + 2 < xs.size(); ++i) {
        auto d = homogeneous_degree(xs[i]);
        if (!d) return Vec(R);
        pre += *d;
    }
    std::vector<Vec> rest(xs.begin(), xs.end() - 2);
    rest.push_back(h2_vec(xs[xs.size() - 2], xs[xs.size() - 1]));
    return hn(rest).scaled(Scalar::of(R, pow_sign(pre)));
}

Vec BarHomotopy::fn(const std::vector<Vec>& xs) const {
    return collapse_vec(hn(xs));
}

BarAinfty::BarAinfty(Bar bb)
    : bb_(std::move(bb)),
      rb_([this] {
          Hga k = unit_hga(bb_.ring());
          return Bar(bb_.name() + "|r", k, bb_.mid(), bb_.right(),
                     augmentation_op(bb_.mid().alg, k), bb_.to_right());
      }()),
      lb_([this] {
          Hga k = unit_hga(bb_.ring());
          return Bar(bb_.name() + "|l", bb_.left(), bb_.mid(), k, bb_.to_left(),
                     augmentation_op(bb_.mid().alg, k));
      }()),
      lbp_([this] {
          Hga k = unit_hga(bb_.ring());
          return Bar(bb_.name() + "|ll", bb_.left(), bb_.left(), k,
                     lin_identity(bb_.ring()),
                     augmentation_op(bb_.left().alg, k));
      }()),
      rbp_([this] {
          Hga k = unit_hga(bb_.ring());
          return Bar(bb_.name() + "|lr", k, bb_.left(), k,
                     augmentation_op(bb_.left().alg, k),
                     augmentation_op(bb_.left().alg, k));
      }()),
      hf_(lbp_, rbp_) {}

Vec BarAinfty::m_basis(const std::vector<BasisElement>& xs) const {
    const int n = static_cast<int>(xs.size());
    require(n >= 2, "m_basis: the operations start at two arguments");
    const Ring& R = bb_.ring();
    const Dga& Ap = bb_.left().alg;
    Vec out(R);

    std::vector<const BarElt*> ts(n);
    std::vector<std::vector<std::pair<Word, Word>>> sp(n);
    for (int i = 0; i < n; ++i) {
        ts[i] = &bb_.dec(xs[i]);
        sp[i] = word_splits(ts[i]->letters);
    }
    BasisElement ku = unit_elt(rb_.left());
    BasisElement pu = unit_elt(lbp_.right());

    std::vector<std::size_t> idx(n, 0);
    for (;;) {
        const auto& [u1, v1] = sp[0][idx[0]];
        /* leading word pushed into A′, feeding the 𝐄 operation */
        WLin a1p = push_word(bb_.to_left(), R, u1);
        if (!a1p.is_zero()) {
            /* legs x⃖ᵢ⁽¹⁾ ∈ B(A′, A′, 𝕜) for i ≥ 2, with the permutation
             * sign that moves them past the right parts x⃗ⱼ⁽²⁾, j < i */
            std::vector<Vec> legs;
            legs.reserve(n - 1);
            long perm = 0;
            long rsum = word_degree(v1) + ts[0]->right.degree;
            bool dead = false;
            for (int i = 1; i < n && !dead; ++i) {
                const auto& [ui, vi] = sp[i][idx[i]];
                long ldeg = ts[i]->left.degree + word_degree(ui);
                perm += ldeg * rsum;
                rsum += word_degree(vi) + ts[i]->right.degree;
                std::vector<Vec> lv;
                lv.reserve(ui.size());
                for (const BasisElement& a : ui) lv.push_back(bb_.to_left()(a));
                Vec leg = lbp_.elem(Vec::basis(R, ts[i]->left), lv,
                                    Vec::basis(R, pu));
                if (leg.is_zero()) dead = true;
                legs.push_back(std::move(leg));
            }
            Vec sh = dead ? Vec(R) : hf_.shift_vec(hf_.hn(legs));
            if (!sh.is_zero()) {
                /* 𝐄(g′𝐚₁₍₁₎, S hₙ₋₁(…)) over A′, then multiply by a′₁ */
                Vec ee(R);
                for (const auto& [se, sc] : sh.terms()) {
                    const BarElt& st = rbp_.dec(se);
                    std::vector<Vec> av, bv;
                    for (const auto& [w, cw] : a1p.terms()) {
                        av.clear();
                        for (const BasisElement& a : w)
                            av.push_back(Vec::basis(R, a));
                        bv.clear();
                        for (const BasisElement& b : st.letters)
                            bv.push_back(Vec::basis(R, b));
                        ee.add_scaled(word_ee_vv(bb_.left(), av, bv), cw * sc);
                    }
                }
                if (!ee.is_zero()) {
                    Vec lpart =
                        Ap.mul_vec(Vec::basis(R, ts[0]->left), ee);
                    if (!lpart.is_zero()) {
                        /* product chain of the right parts in B(𝕜, A, A″) */
                        Vec rprod = rb_.vec(BarElt{ku, v1, ts[0]->right});
                        for (int i = 1; i < n && !rprod.is_zero(); ++i)
                            rprod = ks_mul_vec(
                                rb_, rprod,
                                rb_.vec(BarElt{ku, sp[i][idx[i]].second,
                                               ts[i]->right}));
                        long e = word_degree(u1) +
                                 static_cast<long>(n) *
                                     (ts[0]->left.degree + word_degree(u1)) +
                                 perm;
                        Scalar sg = Scalar::of(R, pow_sign(e));
                        for (const auto& [le, lc] : lpart.terms())
                            for (const auto& [re, rc] : rprod.terms()) {
                                const BarElt& rt = rb_.dec(re);
                                out.add(bb_.enc(BarElt{le, rt.letters,
                                                       rt.right}),
                                        lc * rc * sg);
                            }
                    }
                }
            }
        }
        int j = n - 1;
        while (j >= 0 && ++idx[j] == sp[j].size()) idx[j--] = 0;
        if (j < 0) break;
    }

    if (n == 2) {
        /* ε(a′₂)·a′₁ ⊗ (x₁⃗ · x₂⃗) with the full words on both sides */
        Scalar e2 = Ap.aug(ts[1]->left);
        if (!e2.is_zero()) {
            Vec prod =
                ks_mul_vec(rb_, rb_.vec(BarElt{ku, ts[0]->letters,
                                               ts[0]->right}),
                           rb_.vec(BarElt{ku, ts[1]->letters, ts[1]->right}));
            for (const auto& [re, rc] : prod.terms()) {
                const BarElt& rt = rb_.dec(re);
                out.add(bb_.enc(BarElt{ts[0]->left, rt.letters, rt.right}),
                        rc * e2);
            }
        }
    }
    return out;
}

Vec BarAinfty::m(int n, const std::vector<Vec>& xs) const {
    const Ring& R = bb_.ring();
    require(static_cast<int>(xs.size()) == n, "m: argument count mismatch");
    if (n == 1) return bb_.d_vec(xs[0]);
    Vec out(R);
    std::vector<BasisElement> pick(n);
    std::function<void(int, const Scalar&)> rec = [&](int i, const Scalar& c) {
        if (i == n) {
            out.add_scaled(m_basis(pick), c);
            return;
        }
        for (const auto& [e, ce] : xs[i].terms()) {
            pick[i] = e;
            rec(i + 1, c * ce);
        }
    };
    rec(0, Scalar::one(R));
    return out;
}

Vec BarAinfty::unit() const {
    return bb_.elem(bb_.left().alg.unit, {}, bb_.right().alg.unit);
}

Scalar BarAinfty::aug(const BasisElement& x) const {
    const BarElt& t = bb_.dec(x);
    if (!t.letters.empty()) return Scalar::zero(bb_.ring());
    return bb_.left().alg.aug(t.left) * bb_.right().alg.aug(t.right);
}

Scalar BarAinfty::aug_vec(const Vec& v) const {
    Scalar s = Scalar::zero(bb_.ring());
    for (const auto& [e, c] : v.terms()) s += aug(e) * c;
    return s;
}

AinfStructure dga_as_ainf(const Dga& a) {
    auto p = std::make_shared<Dga>(a);
    AinfStructure s;
    s.name = "ainf(" + a.name + ")";
    s.ring = a.ring;
    s.d = [p](const BasisElement& x) { return p->cx.d(x); };
    s.m = [p](int n, const std::vector<Vec>& xs) {
        require(static_cast<int>(xs.size()) == n, "m: argument count mismatch");
        if (n == 2) return p->mul_vec(xs[0], xs[1]);
        return Vec(p->ring);
    };
    s.unit = a.unit;
    s.aug = [p](const BasisElement& x) { return p->aug(x); };
    return s;
}

AinfStructure bar_ainf_structure(const BarAinfty& ba) {
    auto p = std::make_shared<BarAinfty>(ba);
    AinfStructure s;
    s.name = "ainf(" + ba.bar().name() + ")";
    s.ring = ba.bar().ring();
    s.d = [p](const BasisElement& x) { return p->bar().d(x); };
    s.m = [p](int n, const std::vector<Vec>& xs) { return p->m(n, xs); };
    s.unit = ba.unit();
    s.aug = [p](const BasisElement& x) { return p->aug(x); };
    return s;
}

AinfMorphism bar_collapse_morphism(const BarHomotopy& hf) {
    auto p = std::make_shared<BarHomotopy>(hf);
    AinfMorphism mo;
    mo.name = "collapse(" + hf.full().name() + ")";
    mo.tgt = hf.full().right().alg;
    mo.f = [p](int n, const std::vector<Vec>& xs) {
        require(static_cast<int>(xs.size()) == n, "f: argument count mismatch");
        return p->fn(xs);
    };
    return mo;
}

namespace {

/* d(op_n)(xs) = d∘opₙ − (−1)^{deg opₙ} opₙ∘d_⊗ for a family member of the
 * given degree, with d_⊗ carrying the usual prefix Koszul signs */
Vec family_differential(const Ring& R,
                        const std::function<Vec(const BasisElement&)>& d_src,
                        const std::function<Vec(const Vec&)>& d_tgt,
                        const OpFamily& op, int op_degree,
                        const std::vector<BasisElement>& xs) {
    const int n = static_cast<int>(xs.size());
    std::vector<Vec> base;
    base.reserve(n);
    for (const BasisElement& x : xs) base.push_back(Vec::basis(R, x));
    Vec res = d_tgt(op(n, base));
    long pre = 0;
    for (int j = 0; j < n; ++j) {
        std::vector<Vec> args = base;
        args[j] = d_src(xs[j]);
        res.add_scaled(op(n, args),
                       Scalar::of(R, -pow_sign(op_degree + pre)));
        pre += xs[j].degree;
    }
    return res;
}

std::string witness_tuple(const std::vector<BasisElement>& xs) {
    std::string s = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ", ";
        s += xs[i].id;
    }
    return s + ")";
}

}  // namespace

Vec ainf_structure_residual(const AinfStructure& s,
                            const std::vector<BasisElement>& xs) {
    const int n = static_cast<int>(xs.size());
    require(n >= 2, "ainf_structure_residual: needs n >= 2");
    const Ring& R = s.ring;
    auto d_tgt = [&](const Vec& v) {
        Vec out(R);
        for (const auto& [e, c] : v.terms()) out.add_scaled(s.d(e), c);
        return out;
    };
    Vec res = family_differential(R, s.d, d_tgt, s.m, 2 - n, xs);
    /* inner products m_l for 2 ≤ l ≤ n−1 composed back into m_{n−l+1} */
    std::vector<Vec> base;
    base.reserve(n);
    for (const BasisElement& x : xs) base.push_back(Vec::basis(R, x));
    for (int l = 2; l <= n - 1; ++l) {
        long pre = 0;
        for (int i = 0; i + l <= n; ++i) {
            std::vector<Vec> inner(base.begin() + i, base.begin() + i + l);
            Vec ml = s.m(l, inner);
            if (!ml.is_zero()) {
                std::vector<Vec> args(base.begin(), base.begin() + i);
                args.push_back(std::move(ml));
                args.insert(args.end(), base.begin() + i + l, base.end());
                long e = i + static_cast<long>(l) * (n - i - l) + l * pre;
                res.add_scaled(s.m(n - l + 1, args),
                               Scalar::of(R, pow_sign(e)));
            }
            pre += xs[i].degree;
        }
    }
    return res;
}

Vec ainf_morphism_residual(const AinfStructure& s, const AinfMorphism& mo,
                           const std::vector<BasisElement>& xs) {
    const int n = static_cast<int>(xs.size());
    require(n >= 1, "ainf_morphism_residual: needs n >= 1");
    const Ring& R = s.ring;
    auto d_tgt = [&](const Vec& v) { return mo.tgt.cx.diff(v); };
    Vec res = family_differential(R, s.d, d_tgt, mo.f, 1 - n, xs);
    std::vector<Vec> base;
    base.reserve(n);
    for (const BasisElement& x : xs) base.push_back(Vec::basis(R, x));
    /* products of two morphism components in the target */
    long pre = 0;
    for (int l = 1; l <= n - 1; ++l) {
        pre += xs[l - 1].degree;
        std::vector<Vec> lhs(base.begin(), base.begin() + l);
        std::vector<Vec> rhs(base.begin() + l, base.end());
        Vec prod = mo.tgt.mul_vec(mo.f(l, lhs), mo.f(n - l, rhs));
        long e = l + static_cast<long>(n - l + 1) * pre;
        res.add_scaled(prod, Scalar::of(R, -pow_sign(e)));
    }
    /* inner products m_l for 2 ≤ l ≤ n composed into f_{n−l+1} */
    for (int l = 2; l <= n; ++l) {
        long pre2 = 0;
        for (int i = 0; i + l <= n; ++i) {
            std::vector<Vec> inner(base.begin() + i, base.begin() + i + l);
            Vec ml = s.m(l, inner);
            if (!ml.is_zero()) {
                std::vector<Vec> args(base.begin(), base.begin() + i);
                args.push_back(std::move(ml));
                args.insert(args.end(), base.begin() + i + l, base.end());
                long e = i + static_cast<long>(l) * (n - i - l) + l * pre2;
                res.add_scaled(mo.f(n - l + 1, args),
                               Scalar::of(R, -pow_sign(e)));
            }
            pre2 += xs[i].degree;
        }
    }
    return res;
}

void CheckReport::count(bool ok, const std::string& witness) {
    ++checks;
    if (!ok) {
        if (failures.size() < 8) failures.push_back(witness);
        else if (failures.size() == 8) failures.push_back("...");
    }
}

std::string CheckReport::summary() const {
    std::string s = name + ": " + (passed() ? "ok" : "FAIL") + " (" +
                    std::to_string(checks) + " checks";
    if (!passed()) {
        long shown = 0;
        for (const auto& f : failures)
            if (f != "...") ++shown;
        s += ", first failure " + failures.front() + ", " +
             std::to_string(shown) + "+ recorded";
    }
    s += ")";
    return s;
}

namespace {

void for_each_tuple(const std::vector<BasisElement>& window, int n,
                    const std::function<void(const std::vector<BasisElement>&)>& fn) {
    std::vector<BasisElement> t(n);
    std::vector<std::size_t> idx(n, 0);
    if (window.empty()) return;
    for (;;) {
        for (int i = 0; i < n; ++i) t[i] = window[idx[i]];
        fn(t);
        int j = n - 1;
        while (j >= 0 && ++idx[j] == window.size()) idx[j--] = 0;
        if (j < 0) return;
    }
}

}  // namespace

CheckReport verify_ainf_algebra(const AinfStructure& s,
                                const std::vector<BasisElement>& window,
                                int n_max) {
    CheckReport rep;
    rep.name = s.name + " structure identity";
    require(n_max >= 2, "verify_ainf_algebra: n_max must be at least 2");
    for (int n = 2; n <= n_max; ++n)
        for_each_tuple(window, n, [&](const std::vector<BasisElement>& t) {
            Vec r = ainf_structure_residual(s, t);
            rep.count(r.is_zero(),
                      "n=" + std::to_string(n) + " at " + witness_tuple(t) +
                          " residual " + r.str([](const BasisElement& e) {
                              return e.id;
                          }));
        });
    return rep;
}

CheckReport verify_ainf_morphism(const AinfStructure& s,
                                 const AinfMorphism& mo,
                                 const std::vector<BasisElement>& window,
                                 int n_max) {
    CheckReport rep;
    rep.name = mo.name + " morphism identity";
    require(n_max >= 1, "verify_ainf_morphism: n_max must be at least 1");
    for (int n = 1; n <= n_max; ++n)
        for_each_tuple(window, n, [&](const std::vector<BasisElement>& t) {
            Vec r = ainf_morphism_residual(s, mo, t);
            rep.count(r.is_zero(),
                      "n=" + std::to_string(n) + " at " + witness_tuple(t) +
                          " residual " + r.str([](const BasisElement& e) {
                              return e.id;
                          }));
        });
    return rep;
}

CheckReport verify_op_vanishes(const std::string& name, const Ring& r,
                               const OpFamily& op,
                               const std::vector<BasisElement>& window,
                               int n) {
    CheckReport rep;
    rep.name = name;
    for_each_tuple(window, n, [&](const std::vector<BasisElement>& t) {
        std::vector<Vec> args;
        args.reserve(t.size());
        for (const BasisElement& x : t) args.push_back(Vec::basis(r, x));
        Vec v = op(n, args);
        rep.count(v.is_zero(), "at " + witness_tuple(t) + " value " +
                                   v.str([](const BasisElement& e) {
                                       return e.id;
                                   }));
    });
    return rep;
}

}  // namespace bartor
