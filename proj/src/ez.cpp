#include "bartor/ez.hpp"

#include <algorithm>

namespace bartor {

long shuffle_inversions(const std::vector<int>& alpha, const std::vector<int>& beta) {
    long inv = 0;
    for (int a : alpha)
        for (int b : beta)
            if (b < a) ++inv;
    return inv;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> shuffles(int p, int q) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    std::vector<int> alpha;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(alpha.size()) == p) {
            std::vector<int> beta;
            for (int v = 0; v < p + q; ++v)
                if (!std::binary_search(alpha.begin(), alpha.end(), v)) beta.push_back(v);
            out.emplace_back(alpha, beta);
            return;
        }
        for (int v = next; v < p + q; ++v) {
            alpha.push_back(v);
            self(self, v + 1);
            alpha.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/* vertices 0..p and p+q+1..n of x (drops the middle block) */
static Simplex drop_middle(const SimplicialSet& X, const Simplex& x, int p, int q) {
    std::vector<int> verts;
    for (int i = 0; i <= p; ++i) verts.push_back(i);
    for (int i = p + q + 1; i <= x.dim(); ++i) verts.push_back(i);
    return restrict_to(X, x, verts);
}

/* vertices p..n of y (drops the front block) */
static Simplex drop_front(const SimplicialSet& Y, const Simplex& y, int p) {
    std::vector<int> verts;
    for (int i = p; i <= y.dim(); ++i) verts.push_back(i);
    return restrict_to(Y, y, verts);
}

EZ make_ez(const SimplicialSet& X, const SimplicialSet& Y, const Ring& r) {
    EZ ez;
    ez.ring = r;
    ez.X = std::make_shared<SimplicialSet>(X);
    ez.Y = std::make_shared<SimplicialSet>(Y);
    ez.P = std::make_shared<ProductSS>(product_ss(X, Y));

    ez.product_cx = normalized_chains(ez.P->ss, r);
    Complex cX = normalized_chains(X, r);
    Complex cY = normalized_chains(Y, r);
    ez.T = std::make_shared<Tensor2>(tensor2(cX, cY));
    ez.tensor_cx = ez.T->cx;

    auto X_ = ez.X;
    auto Y_ = ez.Y;
    auto P_ = ez.P;
    auto T_ = ez.T;

    ez.aw = LinOp{0, [X_, Y_, P_, T_, r](const BasisElement& c) {
                      Vec out(r);
                      const auto& [a, b] = P_->split(c.id);
                      int n = c.degree;
                      for (int p = 0; p <= n; ++p) {
                          Simplex fa = front_face(*X_, a, p);
                          Simplex gb = back_face(*Y_, b, n - p);
                          if (!fa.nondeg() || !gb.nondeg()) continue;
                          out.add(T_->flat(cell_elem(fa.base), cell_elem(gb.base)),
                                  Scalar::one(r));
                      }
                      return out;
                  }};

    ez.sh = LinOp{0, [X_, Y_, P_, T_, r](const BasisElement& t) {
                      Vec out(r);
                      const auto& [ea, eb] = T_->split(t);
                      Simplex a = nd(X_->key(ea.id));
                      Simplex b = nd(Y_->key(eb.id));
                      int p = a.dim(), q = b.dim();
                      for (const auto& [alpha, beta] : shuffles(p, q)) {
                          Simplex sa = X_->apply_degens(
                              {beta.rbegin(), beta.rend()}, a);
                          Simplex sb = Y_->apply_degens(
                              {alpha.rbegin(), alpha.rend()}, b);
                          Simplex cell = P_->pair_simplex(sa, sb);
                          require(cell.nondeg(), "shuffle image must be nondegenerate");
                          out.add(cell_elem(cell.base),
                                  Scalar::of(r, pow_sign(shuffle_inversions(alpha, beta))));
                      }
                      return out;
                  }};

    ez.h = LinOp{1, [X_, Y_, P_, r](const BasisElement& c) {
                     Vec out(r);
                     const auto& [a, b] = P_->split(c.id);
                     int n = c.degree;
                     for (int p = 0; p < n; ++p)
                         for (int q = 0; p + q < n; ++q) {
                             Simplex xa = drop_middle(*X_, a, p, q);
                             Simplex yb = drop_front(*Y_, b, p);
                             for (const auto& [alpha, beta] : shuffles(p, q + 1)) {
                                 Simplex sa = X_->apply_degens({beta.rbegin(), beta.rend()}, xa);
                                 Simplex sb = Y_->apply_degens({alpha.rbegin(), alpha.rend()}, yb);
                                 sb = Y_->degeneracy(sb, p + q + 1);
                                 Simplex cell = P_->pair_simplex(sa, sb);
                                 if (!cell.nondeg()) continue;
                                 out.add(cell_elem(cell.base),
                                         Scalar::of(r, pow_sign(p + q +
                                                                shuffle_inversions(alpha, beta))));
                             }
                         }
                     return out;
                 }};

    return ez;
}

}  // namespace bartor
