#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bartor/bar.hpp"
#include "bartor/hga.hpp"

using namespace bartor;

namespace {

BasisElement dual_of(const CochainAlgebra& ca, const std::string& cell) {
    return dual_elem(cell_elem(ca.space->key(cell)));
}

Vec dv(const CochainAlgebra& ca, const std::string& cell) {
    return Vec::basis(ca.hga.alg.ring, dual_of(ca, cell));
}

/* the cup product as an operator on the flattened two-factor complex */
LinOp mul_op(const Dga& A, const Tensor2& T) {
    return LinOp{0, [&A, &T](const BasisElement& f) {
                     const auto& [x, y] = T.split(f);
                     return A.mul(x, y);
                 }};
}

std::vector<const SimplicialSet*> small_spaces() {
    static const SimplicialSet d1 = delta_ss(1);
    static const SimplicialSet d2 = delta_ss(2);
    static const SimplicialSet s1 = circle_ss();
    static const SimplicialSet s2 = sphere2_ss();
    return {&d1, &d2, &s1, &s2};
}

std::vector<Ring> small_rings() { return {Ring::Q(), Ring::Zmod(3), Ring::Zmod(2)}; }

}  // namespace

TEST_CASE("interval cochain algebra: frozen values") {
    CochainAlgebra ca = cochain_algebra(delta_ss(1), Ring::Q(), "0");
    const Dga& A = ca.hga.alg;

    CHECK(A.cx.d_deg == 1);
    CHECK(A.cx.basis.rank(0) == 2);
    CHECK(A.cx.basis.rank(1) == 1);
    CHECK(A.cx.check_d2() == std::nullopt);

    Vec v0 = dv(ca, "0"), v1 = dv(ca, "1"), e = dv(ca, "01");
    BasisElement b0 = dual_of(ca, "0"), b1 = dual_of(ca, "1"), be = dual_of(ca, "01");

    /* coboundaries */
    CHECK(A.cx.diff(v0) == e);
    CHECK(A.cx.diff(v1) == e.scaled(Scalar::of(A.ring, -1)));
    CHECK(A.cx.diff(e).is_zero());

    /* frozen cup values */
    CHECK(A.mul(b0, be) == e);
    CHECK(A.mul(be, b1) == e);
    CHECK(A.mul(b1, be).is_zero());
    CHECK(A.mul(be, b0).is_zero());
    CHECK(A.mul(b0, b0) == v0);
    CHECK(A.mul(b1, b1) == v1);
    CHECK(A.mul(b0, b1).is_zero());
    CHECK(A.mul(be, be).is_zero());

    /* unit and augmentation */
    CHECK(A.unit == v0 + v1);
    CHECK(A.aug(b0) == Scalar::one(A.ring));
    CHECK(A.aug(b1).is_zero());
    CHECK(A.aug(be).is_zero());
    CHECK(A.aug_vec(A.unit) == Scalar::one(A.ring));
    CHECK(A.reduce(A.unit).is_zero());
    CHECK(A.reduce(v0) == v1.scaled(Scalar::of(A.ring, -1)));
    CHECK(A.red.total() == 2);
    CHECK_FALSE(A.is_trivial());

    /* frozen 1-operation values */
    CHECK(ca.hga.ek(be, {be}) == e.scaled(Scalar::of(A.ring, -1)));
    CHECK(ca.hga.ek(b0, {be}).is_zero());
    CHECK(ca.hga.ek(be, {b0}).is_zero());
    CHECK(ca.hga.ek(be, {b1}).is_zero());
    CHECK(ca.hga.ek(b1, {be}).is_zero());
    CHECK(ca.hga.ek(b0, {b0}).is_zero());
    /* ek with no arguments is the identity */
    CHECK(ca.hga.ek(be, {}) == e);
    CHECK(ca.hga.ek_vec(v0 + v1, {e}).is_zero());
}

TEST_CASE("cochain algebra of a point is the trivial algebra") {
    CochainAlgebra ca = cochain_algebra(point_ss(), Ring::Zmod(5), "*");
    const Dga& A = ca.hga.alg;
    CHECK(A.is_trivial());
    CHECK(A.cx.basis.total() == 1);
    BasisElement p = dual_of(ca, "*");
    CHECK(A.mul(p, p) == Vec::basis(A.ring, p));
    CHECK(A.unit == Vec::basis(A.ring, p));
    CHECK(ca.hga.ek(p, {p}).is_zero());
    CHECK(A.reduce(A.unit).is_zero());
}

TEST_CASE("cup product is a unital associative chain map with multiplicative augmentation") {
    for (const SimplicialSet* X : small_spaces()) {
        for (const Ring& R : small_rings()) {
            CAPTURE(X->name);
            CAPTURE(R.name());
            CochainAlgebra ca = cochain_algebra(*X, R, X->nondeg(0).front().id);
            const Dga& A = ca.hga.alg;

            std::vector<BasisElement> basis = A.cx.basis.all();
            for (const BasisElement& a : basis) {
                /* unit acts as identity on both sides */
                CHECK(A.mul_vec(A.unit, Vec::basis(R, a)) == Vec::basis(R, a));
                CHECK(A.mul_vec(Vec::basis(R, a), A.unit) == Vec::basis(R, a));
                for (const BasisElement& b : basis) {
                    /* augmentation is an algebra map */
                    Vec ab = A.mul(a, b);
                    CHECK(A.aug_vec(ab) == A.aug(a) * A.aug(b));
                    for (const BasisElement& c : basis) {
                        Vec left = A.mul_vec(A.mul(a, b), Vec::basis(R, c));
                        Vec right = A.mul_vec(Vec::basis(R, a), A.mul(b, c));
                        CHECK(left == right);
                    }
                }
            }

            /* Leibniz: the product is a chain map from the tensor square */
            Tensor2 T = tensor2(A.cx, A.cx);
            LinOp mu = mul_op(A, T);
            LinOp leib = diff_of_map(mu, T.cx, A.cx);
            for (const BasisElement& f : T.cx.basis.all()) {
                Vec v = leib(f);
                CHECK(v.is_zero());
            }

            /* the unit is a cocycle and the augmentation a chain map */
            CHECK(A.cx.diff(A.unit).is_zero());
            for (const BasisElement& a : basis) {
                Vec da = A.cx.d(a);
                CHECK(A.aug_vec(da).is_zero());
            }
        }
    }
}

TEST_CASE("the 1-operation is a homotopy from the cup product to its twist") {
    for (const SimplicialSet* X : small_spaces()) {
        for (const Ring& R : small_rings()) {
            CAPTURE(X->name);
            CAPTURE(R.name());
            CochainAlgebra ca = cochain_algebra(*X, R, X->nondeg(0).front().id);
            const Dga& A = ca.hga.alg;
            const Hga& H = ca.hga;

            Tensor2 T = tensor2(A.cx, A.cx);
            LinOp e1{-1, [&H, &T](const BasisElement& f) {
                         const auto& [x, y] = T.split(f);
                         return H.ek(x, {y});
                     }};
            LinOp lhs = diff_of_map(e1, T.cx, A.cx);
            /* d(E_1)(a⊗b) = (−1)^{|a||b|} b·a − a·b */
            LinOp rhs{0, [&A, &T, &R](const BasisElement& f) {
                          const auto& [x, y] = T.split(f);
                          Vec out = A.mul(y, x);
                          out.scale(Scalar::of(R, koszul_sign(x.degree, y.degree)));
                          out -= A.mul(x, y);
                          return out;
                      }};
            CHECK(ops_equal(lhs, rhs, T.cx.basis) == std::nullopt);
        }
    }
}

TEST_CASE("higher cochain operations: degree bookkeeping and vanishing") {
    CochainAlgebra ca = cochain_algebra(delta_ss(3), Ring::Q(), "0");
    const Hga& H = ca.hga;
    std::vector<BasisElement> basis = H.alg.cx.basis.all();
    Rng rng(0x5eed5eedULL);
    for (int trial = 0; trial < 200; ++trial) {
        int k = 1 + static_cast<int>(rng.below(3));
        const BasisElement& a = basis[rng.below(basis.size())];
        std::vector<BasisElement> bs;
        int total = a.degree;
        for (int i = 0; i < k; ++i) {
            bs.push_back(basis[rng.below(basis.size())]);
            total += bs.back().degree;
        }
        Vec v = H.ek(a, bs);
        for (const auto& [b, c] : v.terms()) CHECK(b.degree == total - k);
        /* the k-operation pairs against chains of degree ≥ k only */
        if (total - k < k) CHECK(v.is_zero());
    }
}

TEST_CASE("pullbacks of simplicial maps are dga morphisms") {
    Ring R = Ring::Q();

    auto d1 = std::make_shared<const SimplicialSet>(delta_ss(1));
    auto d2 = std::make_shared<const SimplicialSet>(delta_ss(2));
    CochainAlgebra c1 = cochain_algebra(*d1, R, "0");
    CochainAlgebra c2 = cochain_algebra(*d2, R, "0");

    /* inclusion of the 01 edge */
    SimplicialMap incl{"edge01", d1, d2, {}};
    incl.image["0"] = nd(d2->key("0"));
    incl.image["1"] = nd(d2->key("1"));
    incl.image["01"] = nd(d2->key("01"));
    CHECK(incl.validate() == std::nullopt);

    DgaMap pb = pullback_map(incl, c1, c2);
    CHECK(pb.src == &c2.hga.alg);
    CHECK(pb.tgt == &c1.hga.alg);
    CHECK(pb.validate() == std::nullopt);

    /* frozen entries: restriction kills cells off the edge */
    CHECK(pb.apply(dual_of(c2, "01")) == dv(c1, "01"));
    CHECK(pb.apply(dual_of(c2, "12")).is_zero());
    CHECK(pb.apply(dual_of(c2, "012")).is_zero());
    CHECK(pb.apply(dual_of(c2, "2")).is_zero());
    CHECK(pb.apply(dual_of(c2, "0")) == dv(c1, "0"));

    /* naturality of the cochain operations under pullback */
    const Hga& H2 = c2.hga;
    const Hga& H1 = c1.hga;
    std::vector<BasisElement> basis2 = H2.alg.cx.basis.all();
    for (const BasisElement& a : basis2)
        for (const BasisElement& b : basis2) {
            Vec lhs = pb.apply_vec(H2.ek(a, {b}));
            Vec rhs = H1.ek_vec(pb.apply(a), {pb.apply(b)});
            CHECK(lhs == rhs);
            for (const BasisElement& c : basis2) {
                Vec l2 = pb.apply_vec(H2.ek(a, {b, c}));
                Vec r2 = H1.ek_vec(pb.apply(a), {pb.apply(b), pb.apply(c)});
                CHECK(l2 == r2);
            }
        }

    /* identity and composition */
    DgaMap id2 = identity_dga_map(c2.hga.alg);
    CHECK(id2.validate() == std::nullopt);
    auto s2 = std::make_shared<const SimplicialSet>(sphere2_ss());
    auto p = std::make_shared<const SimplicialSet>(point_ss());
    CochainAlgebra cs = cochain_algebra(*s2, R, s2->nondeg(0).front().id);
    CochainAlgebra cp = cochain_algebra(*p, R, "*");
    SimplicialMap collapse = constant_map(s2, p, "*");
    DgaMap pc = pullback_map(collapse, cs, cp);
    CHECK(pc.validate() == std::nullopt);
    CHECK(pc.apply_vec(cp.hga.alg.unit) == cs.hga.alg.unit);
}

/* ======================================================================
 * Bar construction
 * ====================================================================== */

namespace {

/* all words over the reduced basis with at most max_len letters */
std::vector<Word> red_words(const Dga& A, int max_len) {
    std::vector<Word> out{Word{}};
    std::size_t lo = 0;
    for (int l = 1; l <= max_len; ++l) {
        std::size_t hi = out.size();
        for (std::size_t i = lo; i < hi; ++i)
            for (const BasisElement& a : A.red.all()) {
                Word w = out[i];
                w.push_back(a);
                out.push_back(std::move(w));
            }
        lo = hi;
    }
    return out;
}

using PairLin = Lin<std::pair<Word, Word>>;

/* deconcatenation as a linear map into pairs */
PairLin deconcat(const Ring& r, const Word& w) {
    PairLin out(r);
    for (auto& [u, v] : word_splits(w)) out.add({u, v}, Scalar::one(r));
    return out;
}

}  // namespace

TEST_CASE("bar words: degrees, identifiers, splits and windows") {
    CochainAlgebra ca = cochain_algebra(delta_ss(1), Ring::Q(), "0");
    BasisElement v1 = dual_of(ca, "1"), e = dual_of(ca, "01");

    CHECK(word_degree(Word{}) == 0);
    CHECK(word_degree(Word{e}) == 0);
    CHECK(word_degree(Word{v1}) == -1);
    CHECK(word_degree(Word{e, v1, e}) == -1);
    CHECK(word_id(Word{}) == "[]");
    CHECK(word_id(Word{e, v1, e}) == "[01^|1^|01^]");

    auto sp = word_splits(Word{e, v1, e});
    REQUIRE(sp.size() == 4);
    CHECK(sp[0].first == Word{});
    CHECK(sp[0].second == Word{e, v1, e});
    CHECK(sp[2].first == Word{e, v1});
    CHECK(sp[2].second == Word{e});
    CHECK(sp[3].second == Word{});

    /* windows of the reduced bar construction of the minimal sphere have one
     * element per degree: the word on k copies of the top dual has degree k */
    CochainAlgebra s2 = cochain_algebra(sphere2_ss(), Ring::Q(), "v");
    Hga u = unit_hga(Ring::Q());
    Bar bb("B(S2)", u, s2.hga, u, augmentation_op(s2.hga.alg, u),
           augmentation_op(s2.hga.alg, u));
    std::vector<BasisElement> win = bb.window(0, 4, 6);
    CHECK(win.size() == 5);
    std::map<int, int> per_degree;
    for (const BasisElement& b : win) ++per_degree[b.degree];
    for (int d = 0; d <= 4; ++d) CHECK(per_degree[d] == 1);

    /* encode/decode round trip */
    for (const BasisElement& b : win) {
        const BarElt& t = bb.dec(b);
        CHECK(bb.enc(t) == b);
        CHECK(bar_elt_degree(t) == b.degree);
    }
}

TEST_CASE("one-sided bar differential squares to zero and respects deconcatenation") {
    for (const SimplicialSet* X : small_spaces())
        for (const Ring& R : small_rings()) {
            CAPTURE(X->name);
            CAPTURE(R.name());
            CochainAlgebra ca = cochain_algebra(*X, R, X->nondeg(0).front().id);
            const Hga& H = ca.hga;
            int cap = static_cast<int>(H.alg.red.total()) > 4 ? 2 : 3;
            for (const Word& w : red_words(H.alg, cap)) {
                /* d² = 0 */
                CHECK(word_d_w(H, word_d(H, w)).is_zero());

                /* deconcatenation is a chain map:
                 * Δ(dw) = (d⊗1)Δw + (1⊗d)Δw with the Koszul sign on the
                 * second summand */
                PairLin lhs(R);
                WLin dw = word_d(H, w);
                for (const auto& [x, c] : dw.terms()) lhs.add_scaled(deconcat(R, x), c);
                PairLin rhs(R);
                for (const auto& [u, v] : word_splits(w)) {
                    WLin du = word_d(H, u);
                    for (const auto& [x, c] : du.terms()) rhs.add({x, v}, c);
                    WLin dv = word_d(H, v);
                    Scalar s = Scalar::of(R, pow_sign(word_degree(u)));
                    for (const auto& [x, c] : dv.terms()) rhs.add({u, x}, c * s);
                }
                CHECK(lhs == rhs);
            }
        }
}

TEST_CASE("deconcatenation is coassociative and counital") {
    CochainAlgebra ca = cochain_algebra(delta_ss(2), Ring::Q(), "0");
    const Ring& R = Ring::Q();
    for (const Word& w : red_words(ca.hga.alg, 3)) {
        /* counit: the empty-word coefficient of each side recovers w */
        auto sp = word_splits(w);
        CHECK(sp.front().first == Word{});
        CHECK(sp.front().second == w);
        CHECK(sp.back().second == Word{});
        CHECK(sp.back().first == w);

        /* coassociativity via triple splits */
        using TripleLin = Lin<std::tuple<Word, Word, Word>>;
        TripleLin lhs(R), rhs(R);
        for (const auto& [u, v] : word_splits(w)) {
            for (const auto& [a, b] : word_splits(u)) lhs.add({a, b, v}, Scalar::one(R));
            for (const auto& [a, b] : word_splits(v)) rhs.add({u, a, b}, Scalar::one(R));
        }
        CHECK(lhs == rhs);
    }
}

/* ----------------------------------------------------------------------
 * Pin of the sign in 𝐄([a],[b₁|…|b_k]) = ± E_k(a; b₁,…,b_k).
 *
 * The twisting-cochain and bialgebra identities leave only the sign of the
 * corestriction to the operations E_k open.  We search the family
 * (−1)^{c₀+c₁k+c₂α+c₃w+c₄αw+c₅kα+c₆kw+c₇τ+c₈k(k−1)/2} with α = deg a,
 * w the word degree of the second argument and τ = Σᵢ(k−i)·deg bᵢ the
 * staircase weight, keeping the candidates that satisfy
 *   (unit)   𝐄(𝐚,𝟏) = 𝐄(𝟏,𝐚) = t(𝐚),
 *   (twist)  d(𝐄)(𝐚,𝐛) = Σ ± 𝐄(𝐚₍₁₎,𝐛₍₁₎)·𝐄(𝐚₍₂₎,𝐛₍₂₎),
 *   (assoc)  𝐄(𝐚,𝐛·𝐜) = 𝐄(𝐚·𝐛,𝐜)
 * on simplex cochain algebras.  Every survivor must agree with the
 * production sign (−1)^{kα+τ} wherever the operations are nonzero.
 * ---------------------------------------------------------------------- */

namespace {

int cand_sign(unsigned mask, int k, int dega, int wdeg, const Word& b) {
    long e = 0;
    if (mask & 1u) e += 1;
    if (mask & 2u) e += k;
    if (mask & 4u) e += dega;
    if (mask & 8u) e += wdeg;
    if (mask & 16u) e += static_cast<long>(dega) * wdeg;
    if (mask & 32u) e += static_cast<long>(k) * dega;
    if (mask & 64u) e += static_cast<long>(k) * wdeg;
    if (mask & 128u)
        for (int i = 0; i < k; ++i) e += static_cast<long>(k - 1 - i) * b[i].degree;
    if (mask & 256u) e += static_cast<long>(k) * (k - 1) / 2;
    return pow_sign(e);
}

constexpr unsigned kProductionMask = 32u | 128u; /* exponent k·deg a + staircase */

Vec ee_cand(const Hga& H, unsigned mask, const Word& a, const Word& b) {
    const Ring& R = H.alg.ring;
    if (a.size() >= 2) return Vec(R);
    if (a.empty()) {
        if (b.size() == 1) return Vec::basis(R, b[0]);
        return Vec(R);
    }
    Vec v = H.ek(a[0], b);
    v.scale(Scalar::of(
        R, cand_sign(mask, static_cast<int>(b.size()), a[0].degree, word_degree(b), b)));
    return v;
}

Vec ee_cand_w(const Hga& H, unsigned mask, const WLin& a, const WLin& b) {
    Vec out(H.alg.ring);
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) out.add_scaled(ee_cand(H, mask, wa, wb), ca * cb);
    return out;
}

WLin mul_cand(const Hga& H, unsigned mask, const Word& a, const Word& b) {
    const Ring& R = H.alg.ring;
    WLin out(R);
    if (a.empty() && b.empty()) {
        out.add(Word{}, Scalar::one(R));
        return out;
    }
    int la = static_cast<int>(a.size()), lb = static_cast<int>(b.size());
    for (int i = 0; i <= std::min(la, 1); ++i)
        for (int j = 0; j <= lb; ++j) {
            if (i == 0 && j != 1) continue;
            Word a1(a.begin(), a.begin() + i), b1(b.begin(), b.begin() + j);
            Vec head = ee_cand(H, mask, a1, b1);
            if (head.is_zero()) continue;
            Word arest(a.begin() + i, a.end()), brest(b.begin() + j, b.end());
            Scalar s = Scalar::of(R, koszul_sign(word_degree(b1), word_degree(arest)));
            WLin tail = mul_cand(H, mask, arest, brest);
            for (const auto& [e, ce] : head.terms())
                for (const auto& [wt, ct] : tail.terms()) {
                    Word nw;
                    nw.push_back(e);
                    nw.insert(nw.end(), wt.begin(), wt.end());
                    out.add(nw, ce * ct * s);
                }
        }
    return out;
}

/* d(𝐄)(𝐚,𝐛) = d_A 𝐄(𝐚,𝐛) + 𝐄(d𝐚,𝐛) + (−1)^{deg 𝐚} 𝐄(𝐚,d𝐛) */
Vec dee_lhs(const Hga& H, unsigned mask, const Word& a, const Word& b) {
    const Ring& R = H.alg.ring;
    Vec lhs = H.alg.cx.diff(ee_cand(H, mask, a, b));
    lhs += ee_cand_w(H, mask, word_d(H, a), WLin::basis(R, b));
    Vec third = ee_cand_w(H, mask, WLin::basis(R, a), word_d(H, b));
    lhs.add_scaled(third, Scalar::of(R, pow_sign(word_degree(a))));
    return lhs;
}

/* Σ (−1)^{deg 𝐚₍₂₎ deg 𝐛₍₁₎ + deg 𝐚₍₁₎ + deg 𝐛₍₁₎} 𝐄(𝐚₍₁₎,𝐛₍₁₎)·𝐄(𝐚₍₂₎,𝐛₍₂₎) */
Vec dee_rhs(const Hga& H, unsigned mask, const Word& a, const Word& b) {
    const Ring& R = H.alg.ring;
    Vec rhs(R);
    for (const auto& [a1, a2] : word_splits(a))
        for (const auto& [b1, b2] : word_splits(b)) {
            Vec x = ee_cand(H, mask, a1, b1);
            if (x.is_zero()) continue;
            Vec y = ee_cand(H, mask, a2, b2);
            if (y.is_zero()) continue;
            long e = static_cast<long>(word_degree(a2)) * word_degree(b1) + word_degree(a1) +
                     word_degree(b1);
            rhs.add_scaled(H.alg.mul_vec(x, y), Scalar::of(R, pow_sign(e)));
        }
    return rhs;
}

}  // namespace

TEST_CASE("the operation sign on the bar construction is pinned by the algebra axioms") {
    const Ring R = Ring::Q();
    CochainAlgebra d1 = cochain_algebra(delta_ss(1), R, "0");
    CochainAlgebra d2 = cochain_algebra(delta_ss(2), R, "0");

    std::vector<Word> w1 = red_words(d1.hga.alg, 3);
    std::vector<Word> w2 = red_words(d2.hga.alg, 2);

    std::vector<unsigned> alive;
    for (unsigned mask = 0; mask < 512; ++mask) alive.push_back(mask);

    /* (unit): 𝐄([a],𝟏) = a for every reduced letter */
    {
        std::vector<unsigned> next;
        for (unsigned mask : alive) {
            bool ok = true;
            for (const BasisElement& a : d1.hga.alg.red.all())
                ok = ok && (ee_cand(d1.hga, mask, {a}, {}) == Vec::basis(R, a));
            for (const BasisElement& a : d2.hga.alg.red.all())
                ok = ok && (ee_cand(d2.hga, mask, {a}, {}) == Vec::basis(R, a));
            if (ok) next.push_back(mask);
        }
        alive.swap(next);
        CHECK(alive.size() == 128); /* kills the constant and deg-a-only exponents */
    }

    /* (twist) on both simplices */
    {
        std::vector<unsigned> next;
        for (unsigned mask : alive) {
            bool ok = true;
            for (const Word& a : w1)
                for (const Word& b : w1) {
                    if (!ok) break;
                    ok = dee_lhs(d1.hga, mask, a, b) == dee_rhs(d1.hga, mask, a, b);
                }
            for (const Word& a : w2)
                for (const Word& b : w2) {
                    if (!ok) break;
                    ok = dee_lhs(d2.hga, mask, a, b) == dee_rhs(d2.hga, mask, a, b);
                }
            if (ok) next.push_back(mask);
        }
        alive.swap(next);
    }
    CAPTURE(alive);
    CHECK(!alive.empty());

    /* (assoc) for the surviving candidates */
    {
        std::vector<unsigned> next;
        std::vector<Word> t1 = red_words(d1.hga.alg, 2);
        for (unsigned mask : alive) {
            bool ok = true;
            for (const Word& a : t1)
                for (const Word& b : t1)
                    for (const Word& c : t1) {
                        if (!ok) break;
                        Vec lhs = ee_cand_w(d1.hga, mask, WLin::basis(R, a),
                                            mul_cand(d1.hga, mask, b, c));
                        Vec rhs = ee_cand_w(d1.hga, mask, mul_cand(d1.hga, mask, a, b),
                                            WLin::basis(R, c));
                        ok = lhs == rhs;
                    }
            for (const Word& a : w2)
                for (const Word& b : w2)
                    for (const BasisElement& c : d2.hga.alg.red.all()) {
                        if (!ok) break;
                        Vec lhs = ee_cand_w(d2.hga, mask, WLin::basis(R, a),
                                            mul_cand(d2.hga, mask, b, {c}));
                        Vec rhs = ee_cand_w(d2.hga, mask, mul_cand(d2.hga, mask, a, b),
                                            WLin::basis(R, {c}));
                        ok = lhs == rhs;
                    }
            if (ok) next.push_back(mask);
        }
        alive.swap(next);
    }
    CAPTURE(alive);
    REQUIRE(!alive.empty());

    /* the production formula survives … */
    CHECK(std::count(alive.begin(), alive.end(), kProductionMask) == 1);

    /* … and every survivor computes the same operation values: candidates may
     * differ only in signs attached to vanishing operations */
    for (unsigned mask : alive) {
        for (const Word& a : w2)
            for (const Word& b : w2) {
                Vec got = ee_cand(d2.hga, mask, a, b);
                Vec want = word_ee(d2.hga, a, b);
                CHECK(got == want);
            }
        for (const Word& a : w1)
            for (const Word& b : w1)
                CHECK(ee_cand(d1.hga, mask, a, b) == word_ee(d1.hga, a, b));
    }
}

TEST_CASE("the bar product is unital, associative, a chain map and a coalgebra map") {
    for (const Ring& R : small_rings()) {
        CAPTURE(R.name());
        CochainAlgebra d1 = cochain_algebra(delta_ss(1), R, "0");
        std::vector<Word> ws = red_words(d1.hga.alg, 3);

        for (const Word& a : ws) {
            /* unit */
            CHECK(word_mul(d1.hga, Word{}, a) == WLin::basis(R, a));
            CHECK(word_mul(d1.hga, a, Word{}) == WLin::basis(R, a));
            for (const Word& b : ws) {
                /* chain map: d μ(𝐚,𝐛) = μ(d𝐚,𝐛) + (−1)^{deg 𝐚} μ(𝐚,d𝐛) */
                WLin lhs = word_d_w(d1.hga, word_mul(d1.hga, a, b));
                WLin rhs = word_mul_w(d1.hga, word_d(d1.hga, a), WLin::basis(R, b));
                WLin mixed = word_mul_w(d1.hga, WLin::basis(R, a), word_d(d1.hga, b));
                rhs.add_scaled(mixed, Scalar::of(R, pow_sign(word_degree(a))));
                CHECK(lhs == rhs);

                /* coalgebra map: Δ μ(𝐚,𝐛) = Σ ± μ(𝐚₍₁₎,𝐛₍₁₎) ⊗ μ(𝐚₍₂₎,𝐛₍₂₎) */
                PairLin dl(R);
                WLin prod = word_mul(d1.hga, a, b);
                for (const auto& [w, c] : prod.terms()) dl.add_scaled(deconcat(R, w), c);
                PairLin dr(R);
                for (const auto& [a1, a2] : word_splits(a))
                    for (const auto& [b1, b2] : word_splits(b)) {
                        Scalar s = Scalar::of(
                            R, koszul_sign(word_degree(a2), word_degree(b1)));
                        WLin p1 = word_mul(d1.hga, a1, b1);
                        WLin p2 = word_mul(d1.hga, a2, b2);
                        for (const auto& [u, cu] : p1.terms())
                            for (const auto& [v, cv] : p2.terms())
                                dr.add({u, v}, s * cu * cv);
                    }
                CHECK(dl == dr);

                /* associativity over the cube of short words */
                for (const Word& c : ws) {
                    if (a.size() + b.size() + c.size() > 6) continue;
                    WLin l = word_mul_w(d1.hga, word_mul(d1.hga, a, b), WLin::basis(R, c));
                    WLin r = word_mul_w(d1.hga, WLin::basis(R, a), word_mul(d1.hga, b, c));
                    CHECK(l == r);
                }
            }
        }
    }

    /* a second, two-dimensional algebra: pairs plus single-letter thirds */
    const Ring Q = Ring::Q();
    CochainAlgebra d2 = cochain_algebra(delta_ss(2), Q, "0");
    std::vector<Word> w2 = red_words(d2.hga.alg, 2);
    for (const Word& a : w2)
        for (const Word& b : w2) {
            WLin lhs = word_d_w(d2.hga, word_mul(d2.hga, a, b));
            WLin rhs = word_mul_w(d2.hga, word_d(d2.hga, a), WLin::basis(Q, b));
            rhs.add_scaled(word_mul_w(d2.hga, WLin::basis(Q, a), word_d(d2.hga, b)),
                           Scalar::of(Q, pow_sign(word_degree(a))));
            CHECK(lhs == rhs);
            for (const BasisElement& c : d2.hga.alg.red.all()) {
                WLin l = word_mul_w(d2.hga, word_mul(d2.hga, a, b), WLin::basis(Q, {c}));
                WLin r = word_mul_w(d2.hga, WLin::basis(Q, a), word_mul(d2.hga, b, {c}));
                CHECK(l == r);
            }
        }
}

TEST_CASE("bar products of interval cochains have their classical values") {
    const Ring Q = Ring::Q();
    CochainAlgebra ca = cochain_algebra(delta_ss(1), Q, "0");
    BasisElement v = dual_of(ca, "1"), e = dual_of(ca, "01");

    /* [v]·[v] = 0: the interval operations E_k vanish on degree-0 pairs */
    CHECK(word_mul(ca.hga, {v}, {v}).is_zero());

    /* [v]·[e] = [v|e] + [e|v] = [e]·[v]: pure shuffle, no operation terms */
    WLin mixed(Q);
    mixed.add(Word{v, e}, Scalar::one(Q));
    mixed.add(Word{e, v}, Scalar::one(Q));
    CHECK(word_mul(ca.hga, {v}, {e}) == mixed);
    CHECK(word_mul(ca.hga, {e}, {v}) == mixed);

    /* [e]·[e] = 2[e|e] + [e]: the shuffle part doubles (both interleavings
     * agree up to the Koszul sign (−1)^{0·0} on bar degrees) and E_1(e;e)
     * contributes the square e∪e = e of the top dual */
    WLin square(Q);
    square.add(Word{e, e}, Scalar::of(Q, 2));
    square.add(Word{e}, Scalar::one(Q));
    CHECK(word_mul(ca.hga, {e}, {e}) == square);
}

namespace {

using RPairLin = Lin<std::pair<Word, BasisElement>>;

/* coproduct of the right bar: deconcatenate the word, keep the outer factor
 * with the tail (no signs) */
RPairLin right_coproduct(const Bar& rb, const BasisElement& x) {
    const BarElt& t = rb.dec(x);
    RPairLin out(rb.ring());
    for (const auto& [u, v] : word_splits(t.letters))
        out.add({u, rb.enc({t.left, v, t.right})}, Scalar::one(rb.ring()));
    return out;
}

}  // namespace

TEST_CASE("the product on the one-sided bar of an algebra pair") {
    const Ring Q = Ring::Q();

    /* associativity and unitality over the interval */
    {
        CochainAlgebra ca = cochain_algebra(delta_ss(1), Q, "0");
        Hga u = unit_hga(Q);
        Bar rb("B(k,A,A)", u, ca.hga, ca.hga, augmentation_op(ca.hga.alg, u),
               lin_identity(Q));
        std::vector<BasisElement> win = rb.window(-12, 12, 2);
        REQUIRE(win.size() == 21);

        Vec one = rb.elem(u.alg.unit, {}, ca.hga.alg.unit);
        for (const BasisElement& x : win) {
            CHECK(ks_mul_vec(rb, one, Vec::basis(Q, x)) == Vec::basis(Q, x));
            CHECK(ks_mul_vec(rb, Vec::basis(Q, x), one) == Vec::basis(Q, x));
        }
        for (const BasisElement& x : win)
            for (const BasisElement& y : win)
                for (const BasisElement& z : win) {
                    Vec l = ks_mul_vec(rb, ks_mul(rb, x, y), Vec::basis(Q, z));
                    Vec r = ks_mul_vec(rb, Vec::basis(Q, x), ks_mul(rb, y, z));
                    CHECK(l == r);
                }
    }

    /* chain map and coalgebra compatibility over the triangle */
    {
        CochainAlgebra ca = cochain_algebra(delta_ss(2), Q, "0");
        Hga u = unit_hga(Q);
        Bar rb("B(k,A,A)", u, ca.hga, ca.hga, augmentation_op(ca.hga.alg, u),
               lin_identity(Q));
        std::vector<BasisElement> win = rb.window(-12, 12, 1);
        REQUIRE(win.size() == 49);

        for (const BasisElement& x : win)
            for (const BasisElement& y : win) {
                Vec lhs = rb.d_vec(ks_mul(rb, x, y));
                Vec rhs = ks_mul_vec(rb, rb.d(x), Vec::basis(Q, y));
                rhs.add_scaled(ks_mul_vec(rb, Vec::basis(Q, x), rb.d(y)),
                               Scalar::of(Q, pow_sign(bar_elt_degree(rb.dec(x)))));
                CHECK(lhs == rhs);

                /* Δ(x·y) = Σ (−1)^{deg x₍₂₎ · deg 𝐛₍₁₎} 𝐚₍₁₎𝐛₍₁₎ ⊗ x₍₂₎y₍₂₎ */
                RPairLin dl(Q);
                Vec prod = ks_mul(rb, x, y);
                for (const auto& [px, pc] : prod.terms())
                    dl.add_scaled(right_coproduct(rb, px), pc);
                RPairLin dr(Q);
                RPairLin cx = right_coproduct(rb, x), cy = right_coproduct(rb, y);
                for (const auto& [tx, cxc] : cx.terms())
                    for (const auto& [ty, cyc] : cy.terms()) {
                        Scalar s = Scalar::of(
                            Q, koszul_sign(bar_elt_degree(rb.dec(tx.second)),
                                           word_degree(ty.first)));
                        WLin heads = word_mul(ca.hga, tx.first, ty.first);
                        Vec tails = ks_mul(rb, tx.second, ty.second);
                        for (const auto& [hw, hc] : heads.terms())
                            for (const auto& [tb, tc] : tails.terms())
                                dr.add({hw, tb}, s * hc * tc * cxc * cyc);
                    }
                CHECK(dl == dr);
            }
    }

    /* trivial right algebra: the product degenerates to the bar product */
    {
        CochainAlgebra ca = cochain_algebra(delta_ss(2), Q, "0");
        Hga u = unit_hga(Q);
        Bar rb("B(k,A,k)", u, ca.hga, u, augmentation_op(ca.hga.alg, u),
               augmentation_op(ca.hga.alg, u));
        BasisElement pt = unit_elt(u);
        std::vector<Word> ws = red_words(ca.hga.alg, 2);
        for (const Word& a : ws)
            for (const Word& b : ws) {
                Vec got = ks_mul(rb, rb.enc({pt, a, pt}), rb.enc({pt, b, pt}));
                Vec want(Q);
                WLin prod = word_mul(ca.hga, a, b);
                for (const auto& [w, c] : prod.terms())
                    want.add(rb.enc({pt, w, pt}), c);
                CHECK(got == want);
            }
    }
}

TEST_CASE("tensor products of augmented algebras") {
    for (const Ring& R : small_rings()) {
        CAPTURE(R.name());
        CochainAlgebra ca = cochain_algebra(delta_ss(1), R, "0");
        CochainAlgebra cb = cochain_algebra(delta_ss(2), R, "0");
        TensorDga t = tensor_dga("AxB", ca.hga.alg, cb.hga.alg);

        CHECK(t.alg.cx.basis.total() == 3 * 7);
        CHECK(t.alg.red.total() == 3 * 7 - 1);
        CHECK(t.alg.unit == t.elem(ca.hga.alg.unit, cb.hga.alg.unit));

        /* product with the Koszul sign, unit, augmentation, differential */
        std::vector<BasisElement> basis = t.alg.cx.basis.all();
        for (const BasisElement& x : basis) {
            auto [a, b] = t.split(x);
            CHECK(t.alg.mul_vec(t.alg.unit, Vec::basis(R, x)) == Vec::basis(R, x));
            CHECK(t.alg.mul_vec(Vec::basis(R, x), t.alg.unit) == Vec::basis(R, x));
            for (const BasisElement& y : basis) {
                auto [c, d] = t.split(y);
                Vec want = t.elem(ca.hga.alg.mul(a, c), cb.hga.alg.mul(b, d));
                want.scale(Scalar::of(R, koszul_sign(b.degree, c.degree)));
                Vec got = t.alg.mul(x, y);
                CHECK(got == want);
                CHECK(t.alg.aug(x) * t.alg.aug(y) == t.alg.aug_vec(got));
            }
            /* d(a⊗b) = da⊗b + (−1)^{deg a} a⊗db */
            Vec dx = t.elem(ca.hga.alg.cx.diff(Vec::basis(R, a)), Vec::basis(R, b));
            dx.add_scaled(t.elem(Vec::basis(R, a), cb.hga.alg.cx.diff(Vec::basis(R, b))),
                          Scalar::of(R, pow_sign(a.degree)));
            CHECK(t.alg.cx.d(x) == dx);
        }

        /* associativity on a degree-bounded sample */
        for (const BasisElement& x : basis)
            for (const BasisElement& y : basis)
                for (const BasisElement& z : basis) {
                    if (x.degree + y.degree + z.degree > 3) continue;
                    Vec l = t.alg.mul_vec(t.alg.mul(x, y), Vec::basis(R, z));
                    Vec r = t.alg.mul_vec(Vec::basis(R, x), t.alg.mul(y, z));
                    CHECK(l == r);
                }
    }
}

TEST_CASE("two-sided bar differentials square to zero") {
    struct Setup {
        std::string space;
        Ring ring;
        int cap;
    };
    const std::vector<Setup> setups = {
        {"d1", Ring::Q(), 3},      {"d1", Ring::Zmod(2), 3}, {"d2", Ring::Q(), 2},
        {"d2", Ring::Zmod(3), 2},  {"s1", Ring::Zmod(3), 3}, {"s2", Ring::Q(), 4},
        {"s2", Ring::Zmod(2), 3},
    };
    for (const Setup& s : setups) {
        CAPTURE(s.space);
        CAPTURE(s.ring.name());
        SimplicialSet X = s.space == "d1"   ? delta_ss(1)
                          : s.space == "d2" ? delta_ss(2)
                          : s.space == "s1" ? circle_ss()
                                            : sphere2_ss();
        std::string bp = s.space == "d1" || s.space == "d2" ? "0" : "v";
        CochainAlgebra ca = cochain_algebra(X, s.ring, bp);
        Hga u = unit_hga(s.ring);
        LinOp aug = augmentation_op(ca.hga.alg, u);
        LinOp id = lin_identity(s.ring);

        std::vector<Bar> bars;
        bars.emplace_back("B(A,A,A)", ca.hga, ca.hga, ca.hga, id, id);
        bars.emplace_back("B(k,A,k)", u, ca.hga, u, aug, aug);
        bars.emplace_back("B(A,A,k)", ca.hga, ca.hga, u, id, aug);
        for (const Bar& bb : bars) {
            CAPTURE(bb.name());
            for (const BasisElement& b : bb.window(-12, 12, s.cap))
                CHECK(bb.d_vec(bb.d(b)).is_zero());
        }
    }
}

TEST_CASE("bar constructions are functorial along algebra morphisms") {
    const Ring Q = Ring::Q();

    /* pullback along the edge inclusion of the interval into the triangle */
    auto d1 = std::make_shared<SimplicialSet>(delta_ss(1));
    auto d2 = std::make_shared<SimplicialSet>(delta_ss(2));
    SimplicialMap edge;
    edge.name = "edge01";
    edge.src = d1;
    edge.tgt = d2;
    edge.image.emplace("0", nd(d2->key("0")));
    edge.image.emplace("1", nd(d2->key("1")));
    edge.image.emplace("01", nd(d2->key("01")));
    REQUIRE(!edge.validate());

    CochainAlgebra a1 = cochain_algebra(*d1, Q, "0");
    CochainAlgebra a2 = cochain_algebra(*d2, Q, "0");
    DgaMap f = pullback_map(edge, a1, a2);
    REQUIRE(!f.validate());

    Hga u = unit_hga(Q);
    LinOp id = lin_identity(Q);

    /* B(φ,φ,φ) and B(1,φ,1) are chain maps */
    Bar src3("B(A,A,A)", a2.hga, a2.hga, a2.hga, id, id);
    Bar tgt3("B(B,B,B)", a1.hga, a1.hga, a1.hga, id, id);
    LinOp bf3 = bar_map(src3, tgt3, f.op, f.op, f.op);
    for (const BasisElement& b : src3.window(-12, 12, 2))
        CHECK(bf3.apply(src3.d(b)) == tgt3.d_vec(bf3(b)));

    Bar src1("B(k,A,k)", u, a2.hga, u, augmentation_op(a2.hga.alg, u),
             augmentation_op(a2.hga.alg, u));
    Bar tgt1("B(k,B,k)", u, a1.hga, u, augmentation_op(a1.hga.alg, u),
             augmentation_op(a1.hga.alg, u));
    LinOp bf1 = bar_map(src1, tgt1, id, f.op, id);
    for (const BasisElement& b : src1.window(-12, 12, 3))
        CHECK(bf1.apply(src1.d(b)) == tgt1.d_vec(bf1(b)));

    /* identity morphisms give the identity, compatibly with composition */
    LinOp bid = bar_map(src3, src3, id, id, id);
    for (const BasisElement& b : src3.window(-12, 12, 2))
        CHECK(bid(b) == Vec::basis(Q, b));
}

TEST_CASE("the shuffle map into the bar of a tensor algebra is a chain map") {
    const Ring Q = Ring::Q();
    CochainAlgebra ca = cochain_algebra(delta_ss(1), Q, "0");
    LinOp id = lin_identity(Q);

    Bar xb("B(A,A,A)", ca.hga, ca.hga, ca.hga, id, id);
    TensorDga t = tensor_dga("AxA", ca.hga.alg, ca.hga.alg);
    Bar tb("B(T,T,T)", hga_with_zero_ops(t.alg), hga_with_zero_ops(t.alg),
           hga_with_zero_ops(t.alg), id, id);

    /* the shuffle of the units is the unit */
    BasisElement v0 = dual_of(ca, "0");
    BasisElement one = xb.enc({v0, {}, v0});
    Vec sh_one = bar_shuffle(xb, xb, tb, t, t, t, one, one);
    CHECK(sh_one == Vec::basis(Q, tb.enc({t.flat(v0, v0), {}, t.flat(v0, v0)})));

    /* chain map on the window: d(sh(x,y)) = sh(dx,y) + (−1)^{deg x} sh(x,dy) */
    std::vector<BasisElement> win = xb.window(-12, 12, 2);
    REQUIRE(win.size() == 63);
    auto sh_vec = [&](const Vec& x, const Vec& y) {
        Vec out(Q);
        for (const auto& [bx, cx] : x.terms()) {
            Vec row(Q);
            for (const auto& [by, cy] : y.terms())
                row.add_scaled(bar_shuffle(xb, xb, tb, t, t, t, bx, by), cy);
            out.add_scaled(row, cx);
        }
        return out;
    };
    for (const BasisElement& x : win)
        for (const BasisElement& y : win) {
            Vec lhs = tb.d_vec(bar_shuffle(xb, xb, tb, t, t, t, x, y));
            Vec rhs = sh_vec(xb.d(x), Vec::basis(Q, y));
            rhs.add_scaled(sh_vec(Vec::basis(Q, x), xb.d(y)),
                           Scalar::of(Q, pow_sign(bar_elt_degree(xb.dec(x)))));
            CHECK(lhs == rhs);
        }
}
