#include "bartor/bar.hpp"

#include <algorithm>
#include <climits>

namespace bartor {

/* ------------------------------------------------------------------ words */

int word_degree(const Word& w) {
    int d = 0;
    for (const BasisElement& a : w) d += a.degree - 1;
    return d;
}

std::string word_id(const Word& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += "|";
        s += w[i].id;
    }
    return s + "]";
}

WLin word_d(const Hga& H, const Word& w) {
    const Dga& A = H.alg;
    WLin out(A.ring);
    int k = static_cast<int>(w.size());
    /* eps[i] = Σ_{l ≤ i} (deg a_l) − i */
    std::vector<int> eps(k + 1, 0);
    for (int i = 1; i <= k; ++i) eps[i] = eps[i - 1] + w[i - 1].degree - 1;

    for (int i = 0; i < k; ++i) {
        Vec da = A.cx.d(w[i]);
        Scalar s = Scalar::of(A.ring, -pow_sign(eps[i]));
        for (const auto& [b, c] : da.terms()) {
            require(A.red.contains(b), "word_d: differential left the augmentation ideal at " +
                                           w[i].id + " -> " + b.id);
            Word nw = w;
            nw[i] = b;
            out.add(nw, c * s);
        }
    }
    for (int i = 1; i < k; ++i) {
        Vec m = A.mul(w[i - 1], w[i]);
        Scalar s = Scalar::of(A.ring, pow_sign(eps[i]));
        for (const auto& [b, c] : m.terms()) {
            require(A.red.contains(b), "word_d: product left the augmentation ideal at " +
                                           w[i - 1].id + "*" + w[i].id);
            Word nw;
            nw.reserve(k - 1);
            nw.insert(nw.end(), w.begin(), w.begin() + (i - 1));
            nw.push_back(b);
            nw.insert(nw.end(), w.begin() + (i + 1), w.end());
            out.add(nw, c * s);
        }
    }
    return out;
}

WLin word_d_w(const Hga& H, const WLin& v) {
    WLin out(H.alg.ring);
    for (const auto& [w, c] : v.terms()) out.add_scaled(word_d(H, w), c);
    return out;
}

std::vector<std::pair<Word, Word>> word_splits(const Word& w) {
    std::vector<std::pair<Word, Word>> out;
    for (std::size_t i = 0; i <= w.size(); ++i)
        out.emplace_back(Word(w.begin(), w.begin() + i), Word(w.begin() + i, w.end()));
    return out;
}

namespace {

/* frozen corestriction sign: (−1)^{k·deg a + Σᵢ (k−i)·deg bᵢ}; it is the
 * unique extension of the unit values compatible with the twisting-cochain
 * identity for the simplicial operations (pinned by a brute-force search in
 * the unit tests) */
int ee_sign(int deg_a, const Word& b) {
    int k = static_cast<int>(b.size());
    long e = static_cast<long>(k) * deg_a;
    for (int i = 0; i < k; ++i) e += static_cast<long>(k - 1 - i) * b[i].degree;
    return pow_sign(e);
}

}  // namespace

Vec word_ee(const Hga& H, const Word& a, const Word& b) {
    const Ring& R = H.alg.ring;
    if (a.size() >= 2) return Vec(R);
    if (a.empty()) {
        if (b.size() == 1) return Vec::basis(R, b[0]);
        return Vec(R);
    }
    Vec v = H.ek(a[0], b);
    v.scale(Scalar::of(R, ee_sign(a[0].degree, b)));
    return v;
}

Vec word_ee_vv(const Hga& H, const std::vector<Vec>& a, const std::vector<Vec>& b) {
    const Ring& R = H.alg.ring;
    Vec out(R);
    Word wa(a.size(), BasisElement{}), wb(b.size(), BasisElement{});
    std::function<void(std::size_t, const Scalar&)> pick_b = [&](std::size_t j, const Scalar& c) {
        if (j == b.size()) {
            Vec v = word_ee(H, wa, wb);
            out.add_scaled(v, c);
            return;
        }
        for (const auto& [e, ce] : b[j].terms()) {
            wb[j] = e;
            pick_b(j + 1, c * ce);
        }
    };
    std::function<void(std::size_t, const Scalar&)> pick_a = [&](std::size_t i, const Scalar& c) {
        if (i == a.size()) {
            pick_b(0, c);
            return;
        }
        for (const auto& [e, ce] : a[i].terms()) {
            wa[i] = e;
            pick_a(i + 1, c * ce);
        }
    };
    pick_a(0, Scalar::one(R));
    return out;
}

WLin word_mul(const Hga& H, const Word& a, const Word& b) {
    const Ring& R = H.alg.ring;
    WLin out(R);
    if (a.empty() && b.empty()) {
        out.add(Word{}, Scalar::one(R));
        return out;
    }
    int la = static_cast<int>(a.size()), lb = static_cast<int>(b.size());
    for (int i = 0; i <= std::min(la, 1); ++i) {
        for (int j = 0; j <= lb; ++j) {
            if (i == 0 && j != 1) continue; /* 𝐄(𝟏,𝐛) needs a single letter */
            Word a1(a.begin(), a.begin() + i), b1(b.begin(), b.begin() + j);
            Vec head = word_ee(H, a1, b1);
            if (head.is_zero()) continue;
            Word arest(a.begin() + i, a.end()), brest(b.begin() + j, b.end());
            /* the first b-block moves left past the remaining a-letters */
            Scalar s = Scalar::of(R, koszul_sign(word_degree(b1), word_degree(arest)));
            WLin tail = word_mul(H, arest, brest);
            for (const auto& [e, ce] : head.terms()) {
                require(H.alg.red.contains(e),
                        "word_mul: operation value left the augmentation ideal at " + e.id);
                for (const auto& [wt, ct] : tail.terms()) {
                    Word nw;
                    nw.reserve(wt.size() + 1);
                    nw.push_back(e);
                    nw.insert(nw.end(), wt.begin(), wt.end());
                    out.add(nw, ce * ct * s);
                }
            }
        }
    }
    return out;
}

WLin word_mul_w(const Hga& H, const WLin& a, const WLin& b) {
    WLin out(H.alg.ring);
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            WLin p = word_mul(H, wa, wb);
            out.add_scaled(p, ca * cb);
        }
    return out;
}

/* -------------------------------------------------- coefficient helpers */

Hga unit_hga(const Ring& r) { return cochain_algebra(point_ss(), r, "*").hga; }

BasisElement unit_elt(const Hga& k) {
    require(k.alg.cx.basis.total() == 1, "unit_elt: algebra is not one-dimensional");
    return k.alg.cx.basis.all().front();
}

Hga hga_with_zero_ops(Dga a) {
    Hga H;
    Ring ring = a.ring;
    H.alg = std::move(a);
    H.ek = [ring](const BasisElement& x, const std::vector<BasisElement>& bs) {
        if (bs.empty()) return Vec::basis(ring, x);
        return Vec(ring);
    };
    return H;
}

LinOp augmentation_op(const Dga& a, const Hga& k) {
    BasisElement u = unit_elt(k);
    auto aug = a.aug;
    Ring ring = a.ring;
    return LinOp{0, [u, aug, ring](const BasisElement& b) {
                     Vec v(ring);
                     v.add(u, aug(b));
                     return v;
                 }};
}

Vec TensorDga::elem(const Vec& a, const Vec& b) const {
    Vec out(alg.ring);
    for (const auto& [x, cx] : a.terms())
        for (const auto& [y, cy] : b.terms()) out.add(flat(x, y), cx * cy);
    return out;
}

namespace {

/* the unique degree-0 basis element carrying the augmentation */
BasisElement find_base_dual(const Dga& A) {
    std::vector<BasisElement> hits;
    for (const BasisElement& b : A.cx.basis.all()) {
        Scalar s = A.aug(b);
        if (s.is_zero()) continue;
        require(b.degree == 0 && s.is_one(),
                "tensor_dga: augmentation is not a coordinate functional at " + b.id);
        hits.push_back(b);
    }
    require(hits.size() == 1, "tensor_dga: augmentation is not a coordinate functional");
    return hits.front();
}

}  // namespace

TensorDga tensor_dga(const std::string& name, const Dga& A, const Dga& B) {
    require(A.ring == B.ring, "tensor_dga: mixed rings");
    TensorDga T;
    auto pa = std::make_shared<const Dga>(A);
    auto pb = std::make_shared<const Dga>(B);
    auto t2 = std::make_shared<Tensor2>(tensor2(pa->cx, pb->cx));
    T.reg = t2;

    Dga& D = T.alg;
    D.name = name;
    D.ring = A.ring;
    D.cx = t2->cx;
    D.unit = T.elem(pa->unit, pb->unit);

    BasisElement bpa = find_base_dual(*pa), bpb = find_base_dual(*pb);
    BasisElement bp = t2->flat(bpa, bpb);
    Ring ring = D.ring;
    auto reg = T.reg;
    D.aug = [bp, ring](const BasisElement& f) {
        return f == bp ? Scalar::one(ring) : Scalar::zero(ring);
    };
    for (const BasisElement& f : D.cx.basis.all())
        if (!(f == bp)) D.red.add(f);

    D.mul = [pa, pb, reg, ring](const BasisElement& f, const BasisElement& g) {
        const auto& [x, y] = reg->split(f);
        const auto& [z, w] = reg->split(g);
        Vec xz = pa->mul(x, z);
        Vec yw = pb->mul(y, w);
        Vec out(ring);
        Scalar s = Scalar::of(ring, koszul_sign(y.degree, z.degree));
        for (const auto& [p, cp] : xz.terms())
            for (const auto& [q, cq] : yw.terms()) out.add(reg->flat(p, q), cp * cq * s);
        return out;
    };
    return T;
}

/* ------------------------------------------------------- two-sided bar */

int bar_elt_degree(const BarElt& t) {
    return t.left.degree + word_degree(t.letters) + t.right.degree;
}

Bar::Bar(std::string name, Hga left, Hga mid, Hga right, LinOp to_left, LinOp to_right)
    : name_(std::move(name)),
      left_(std::move(left)),
      mid_(std::move(mid)),
      right_(std::move(right)),
      to_left_(std::move(to_left)),
      to_right_(std::move(to_right)),
      reg_(std::make_shared<std::map<std::string, BarElt>>()) {
    require(left_.alg.ring == mid_.alg.ring && mid_.alg.ring == right_.alg.ring,
            "Bar: mixed rings");
    require(to_left_.degree == 0 && to_right_.degree == 0,
            "Bar: structure maps must have degree 0");
}

BasisElement Bar::enc(const BarElt& t) const {
    require(left_.alg.cx.basis.contains(t.left), "Bar::enc: unknown left slot " + t.left.id);
    require(right_.alg.cx.basis.contains(t.right), "Bar::enc: unknown right slot " + t.right.id);
    for (const BasisElement& a : t.letters)
        require(mid_.alg.red.contains(a), "Bar::enc: letter not in the augmentation ideal: " + a.id);
    std::string id = t.left.id + word_id(t.letters) + t.right.id;
    BasisElement b{bar_elt_degree(t), id};
    reg_->emplace(id, t);
    return b;
}

const BarElt& Bar::dec(const BasisElement& b) const {
    auto it = reg_->find(b.id);
    require(it != reg_->end(), "Bar::dec: unknown element " + b.id);
    return it->second;
}

Vec Bar::elem(const Vec& l, const std::vector<Vec>& letters, const Vec& r) const {
    Vec out(ring());
    BarElt t;
    t.letters.resize(letters.size());
    std::function<void(std::size_t, const Scalar&)> pick = [&](std::size_t i, const Scalar& c) {
        if (i == letters.size()) {
            for (const auto& [rb, cr] : r.terms()) {
                t.right = rb;
                out.add(enc(t), c * cr);
            }
            return;
        }
        for (const auto& [e, ce] : letters[i].terms()) {
            t.letters[i] = e;
            pick(i + 1, c * ce);
        }
    };
    for (const auto& [lb, cl] : l.terms()) {
        t.left = lb;
        pick(0, cl);
    }
    return out;
}

Vec Bar::d(const BasisElement& b) const {
    const BarElt& t = dec(b);
    const Ring& R = ring();
    int k = static_cast<int>(t.letters.size());
    int al = t.left.degree;
    std::vector<int> eps(k + 1, 0);
    for (int i = 1; i <= k; ++i) eps[i] = eps[i - 1] + t.letters[i - 1].degree - 1;

    std::vector<Vec> lv;
    lv.reserve(k);
    for (const BasisElement& a : t.letters) lv.push_back(Vec::basis(R, a));
    Vec lslot = Vec::basis(R, t.left), rslot = Vec::basis(R, t.right);

    Vec out(R);
    /* outer differentials */
    out += elem(left_.alg.cx.d(t.left), lv, rslot);
    {
        Vec dr = right_.alg.cx.d(t.right);
        if (!dr.is_zero()) out.add_scaled(elem(lslot, lv, dr), Scalar::of(R, pow_sign(al + eps[k])));
    }
    /* letter differentials and merges */
    for (int i = 0; i < k; ++i) {
        Vec da = mid_.alg.cx.d(t.letters[i]);
        if (da.is_zero()) continue;
        std::vector<Vec> nl = lv;
        nl[i] = da;
        out.add_scaled(elem(lslot, nl, rslot), Scalar::of(R, -pow_sign(al + eps[i])));
    }
    for (int i = 1; i < k; ++i) {
        Vec m = mid_.alg.mul(t.letters[i - 1], t.letters[i]);
        if (m.is_zero()) continue;
        std::vector<Vec> nl;
        nl.reserve(k - 1);
        nl.insert(nl.end(), lv.begin(), lv.begin() + (i - 1));
        nl.push_back(m);
        nl.insert(nl.end(), lv.begin() + (i + 1), lv.end());
        out.add_scaled(elem(lslot, nl, rslot), Scalar::of(R, pow_sign(al + eps[i])));
    }
    /* absorb the first letter on the left, the last on the right */
    if (k >= 1) {
        Vec gl = to_left_(t.letters.front());
        Vec lmul = left_.alg.mul_vec(lslot, gl);
        std::vector<Vec> rest(lv.begin() + 1, lv.end());
        out.add_scaled(elem(lmul, rest, rslot), Scalar::of(R, pow_sign(al)));

        Vec gr = to_right_(t.letters.back());
        Vec rmul = right_.alg.mul_vec(gr, rslot);
        std::vector<Vec> head(lv.begin(), lv.end() - 1);
        out.add_scaled(elem(lslot, head, rmul), Scalar::of(R, -pow_sign(al + eps[k - 1])));
    }
    return out;
}

Vec Bar::d_vec(const Vec& v) const {
    Vec out(ring());
    for (const auto& [b, c] : v.terms()) out.add_scaled(d(b), c);
    return out;
}

LinOp Bar::d_op() const {
    Bar self = *this;
    return LinOp{1, [self](const BasisElement& b) { return self.d(b); }};
}

std::vector<BasisElement> Bar::window(int lo, int hi, int max_len) const {
    std::vector<BasisElement> out;
    std::vector<BasisElement> lbasis = left_.alg.cx.basis.all();
    std::vector<BasisElement> rbasis = right_.alg.cx.basis.all();
    std::vector<BasisElement> red = mid_.alg.red.all();

    int omin = INT_MAX, omax = INT_MIN;
    for (const BasisElement& l : lbasis)
        for (const BasisElement& r : rbasis) {
            omin = std::min(omin, l.degree + r.degree);
            omax = std::max(omax, l.degree + r.degree);
        }
    int mmin = 0, mmax = 0;
    for (const BasisElement& a : red) {
        mmin = std::min(mmin, a.degree - 1);
        mmax = std::max(mmax, a.degree - 1);
    }

    Word cur;
    std::function<void(int)> gen = [&](int remaining) {
        int w = word_degree(cur);
        for (const BasisElement& l : lbasis)
            for (const BasisElement& r : rbasis) {
                int D = l.degree + w + r.degree;
                if (lo <= D && D <= hi) out.push_back(enc(BarElt{l, cur, r}));
            }
        if (remaining == 0) return;
        /* prune: some completion with ≤ remaining−1 further letters must be
         * able to land in the window */
        for (const BasisElement& a : red) {
            cur.push_back(a);
            int w2 = word_degree(cur);
            bool feasible = false;
            for (int t = 0; t < remaining && !feasible; ++t)
                feasible = (w2 + t * mmin + omin <= hi) && (w2 + t * mmax + omax >= lo);
            if (feasible) gen(remaining - 1);
            cur.pop_back();
        }
    };
    gen(max_len);
    return out;
}

Complex Bar::window_complex(int lo, int hi, int max_len) const {
    Complex c;
    c.ring = ring();
    c.d_deg = 1;
    for (const BasisElement& b : window(lo, hi, max_len)) c.basis.add(b);
    Bar self = *this;
    c.d = [self](const BasisElement& b) { return self.d(b); };
    return c;
}

/* ------------------------------------------------- right one-sided bar */

Vec ks_mul(const Bar& rb, const BasisElement& x, const BasisElement& y) {
    const Ring& R = rb.ring();
    const BarElt& tx = rb.dec(x);
    const BarElt& ty = rb.dec(y);
    require(tx.left == ty.left && rb.left().alg.is_trivial(),
            "ks_mul: defined on the right one-sided bar only");

    Vec out(R);
    /* ε(a″) μ(𝐚,𝐛) ⊗ b″ */
    Scalar e = rb.right().alg.aug(tx.right);
    if (!e.is_zero()) {
        WLin prod = word_mul(rb.mid(), tx.letters, ty.letters);
        for (const auto& [w, c] : prod.terms())
            out.add(rb.enc(BarElt{tx.left, w, ty.right}), c * e);
    }
    /* Σ ± μ(𝐚,𝐛₍₁₎) ⊗ 𝐄([ā″], 𝐛₍₂₎)·b″ */
    Vec ared = rb.right().alg.reduce(Vec::basis(R, tx.right));
    if (!ared.is_zero()) {
        for (const auto& [b1, b2] : word_splits(ty.letters)) {
            std::vector<Vec> pushed;
            pushed.reserve(b2.size());
            for (const BasisElement& a : b2) pushed.push_back(rb.to_right()(a));
            Vec ee = word_ee_vv(rb.right(), {ared}, pushed);
            if (ee.is_zero()) continue;
            Vec tail = rb.right().alg.mul_vec(ee, Vec::basis(R, ty.right));
            if (tail.is_zero()) continue;
            Scalar s = Scalar::of(R, koszul_sign(tx.right.degree, word_degree(b1)));
            WLin prod = word_mul(rb.mid(), tx.letters, b1);
            for (const auto& [w, c] : prod.terms())
                for (const auto& [z, cz] : tail.terms())
                    out.add(rb.enc(BarElt{tx.left, w, z}), c * cz * s);
        }
    }
    return out;
}

Vec ks_mul_vec(const Bar& rb, const Vec& x, const Vec& y) {
    Vec out(rb.ring());
    for (const auto& [bx, cx] : x.terms())
        for (const auto& [by, cy] : y.terms()) out.add_scaled(ks_mul(rb, bx, by), cx * cy);
    return out;
}

/* ------------------------------------------------------------ functors */

LinOp bar_map(const Bar& src, const Bar& tgt, const LinOp& fl, const LinOp& fm,
              const LinOp& fr) {
    require(fl.degree == 0 && fm.degree == 0 && fr.degree == 0,
            "bar_map: strict functoriality needs degree-0 morphisms");
    Bar s = src, t = tgt;
    return LinOp{0, [s, t, fl, fm, fr](const BasisElement& b) {
                     const BarElt& e = s.dec(b);
                     std::vector<Vec> letters;
                     letters.reserve(e.letters.size());
                     for (const BasisElement& a : e.letters) letters.push_back(fm(a));
                     return t.elem(fl(e.left), letters, fr(e.right));
                 }};
}

Vec bar_shuffle(const Bar& xb, const Bar& yb, const Bar& tb, const TensorDga& lten,
                const TensorDga& mten, const TensorDga& rten, const BasisElement& x,
                const BasisElement& y) {
    const Ring& R = tb.ring();
    const BarElt& tx = xb.dec(x);
    const BarElt& ty = yb.dec(y);

    Vec lslot = lten.elem(Vec::basis(R, tx.left), Vec::basis(R, ty.left));
    Vec rslot = rten.elem(Vec::basis(R, tx.right), Vec::basis(R, ty.right));

    /* letters of each factor pushed into the tensor algebra */
    std::vector<Vec> xl, yl;
    std::vector<int> xd, yd; /* word degrees of the letters */
    for (const BasisElement& a : tx.letters) {
        xl.push_back(mten.elem(Vec::basis(R, a), yb.mid().alg.unit));
        xd.push_back(a.degree - 1);
    }
    for (const BasisElement& a : ty.letters) {
        yl.push_back(mten.elem(xb.mid().alg.unit, Vec::basis(R, a)));
        yd.push_back(a.degree - 1);
    }
    int p = static_cast<int>(xl.size()), q = static_cast<int>(yl.size());

    /* suffix degrees of the x-letters for the interleaving signs */
    std::vector<int> xsuf(p + 1, 0);
    for (int i = p - 1; i >= 0; --i) xsuf[i] = xsuf[i + 1] + xd[i];

    int outer = koszul_sign(ty.left.degree, xsuf[0] + tx.right.degree) *
                koszul_sign(tx.right.degree, word_degree(ty.letters));

    Vec out(R);
    std::vector<Vec> acc;
    acc.reserve(p + q);
    std::function<void(int, int, long)> gen = [&](int i, int j, long exp) {
        if (i == p && j == q) {
            Vec v = tb.elem(lslot, acc, rslot);
            out.add_scaled(v, Scalar::of(R, outer * pow_sign(exp)));
            return;
        }
        if (i < p) {
            acc.push_back(xl[i]);
            gen(i + 1, j, exp);
            acc.pop_back();
        }
        if (j < q) {
            acc.push_back(yl[j]);
            gen(i, j + 1, exp + static_cast<long>(yd[j]) * xsuf[i]);
            acc.pop_back();
        }
    };
    gen(0, 0, 0);
    return out;
}

}  // namespace bartor
