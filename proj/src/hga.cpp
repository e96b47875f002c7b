#include "bartor/hga.hpp"

namespace bartor {

int functional_tuple_sign(const std::vector<int>& fdegs) {
    long e = 0;
    for (std::size_t i = 0; i + 1 < fdegs.size(); ++i)
        for (std::size_t j = i + 1; j < fdegs.size(); ++j)
            e += static_cast<long>(fdegs[i]) * fdegs[j];
    return pow_sign(e);
}

Vec Hga::ek_vec(const Vec& a, const std::vector<Vec>& bs) const {
    Vec out(alg.ring);
    std::vector<BasisElement> pick(bs.size(), BasisElement{0, ""});
    std::function<void(std::size_t, const BasisElement&, Scalar)> walk =
        [&](std::size_t i, const BasisElement& abase, Scalar coef) {
            if (i == bs.size()) {
                Vec v = ek(abase, pick);
                out.add_scaled(v, coef);
                return;
            }
            for (const auto& [b, c] : bs[i].terms()) {
                pick[i] = b;
                walk(i + 1, abase, coef * c);
            }
        };
    for (const auto& [ab, ac] : a.terms()) walk(0, ab, ac);
    return out;
}

namespace {

/* shared state for the cochain operations of one simplicial set */
struct CutCache {
    std::shared_ptr<SimplicialSet> X;
    Ring ring;
    /* (k, cell id) → interval cut E^k(cell); k = −1 encodes the front/back
     * coproduct AW_{(1,2)} */
    std::map<std::pair<int, std::string>, TLin> memo;

    const TLin& cut(int k, const SimplexKey& key) {
        auto it = memo.find({k, key.id});
        if (it != memo.end()) return it->second;
        Surjection u = k < 0 ? Surjection{{1, 2}} : Surjection::e_k(k);
        TLin t = interval_cut(*X, ring, u, nd(key));
        return memo.emplace(std::make_pair(k, key.id), std::move(t)).first->second;
    }
};

}  // namespace

CochainAlgebra cochain_algebra(const SimplicialSet& X, const Ring& ring,
                               const std::string& basept) {
    bool seen = false;
    for (const SimplexKey& v : X.nondeg(0)) seen = seen || v.id == basept;
    require(seen, "cochain_algebra: basepoint '" + basept + "' is not a vertex of " + X.name);

    CochainAlgebra ca;
    ca.space = std::make_shared<SimplicialSet>(X);
    ca.basept = basept;
    ca.chains = normalized_chains(*ca.space, ring);

    auto cache = std::make_shared<CutCache>();
    cache->X = ca.space;
    cache->ring = ring;

    /* dual basis id → underlying cell */
    auto primal = std::make_shared<std::map<std::string, SimplexKey>>();
    for (int d = 0; d <= ca.space->top_dim(); ++d)
        for (const SimplexKey& k : ca.space->nondeg(d)) primal->emplace(dual_id(k.id), k);

    Dga A;
    A.name = "C*(" + X.name + ")";
    A.ring = ring;
    A.cx = dual_complex(ca.chains);

    A.unit = Vec(ring);
    for (const SimplexKey& v : ca.space->nondeg(0))
        A.unit.add(dual_elem(cell_elem(v)), Scalar::one(ring));

    const std::string base_dual = dual_id(basept);
    A.aug = [base_dual, ring](const BasisElement& b) {
        return b.degree == 0 && b.id == base_dual ? Scalar::one(ring) : Scalar::zero(ring);
    };

    for (const BasisElement& b : A.cx.basis.all())
        if (!(b.degree == 0 && b.id == base_dual)) A.red.add(b);

    const GradedBasis cobasis = A.cx.basis;

    /* cup product: transpose of the front/back coproduct, with the pairing
     * sign (−1)^{deg a · deg b} from moving b past the front factor */
    A.mul = [cache, primal, ring, cobasis](const BasisElement& a, const BasisElement& b) {
        Vec out(ring);
        TupleKey want{cell_elem(primal->at(a.id)), cell_elem(primal->at(b.id))};
        Scalar sgn = Scalar::of(ring, koszul_sign(a.degree, b.degree));
        const std::vector<BasisElement>& xs = cobasis.at(a.degree + b.degree);
        for (const BasisElement& x : xs) {
            const TLin& t = cache->cut(-1, primal->at(x.id));
            Scalar c = t.coeff(want);
            if (!c.is_zero()) out.add(x, c * sgn);
        }
        return out;
    };

    Hga H;
    H.alg = std::move(A);
    H.ek = [cache, primal, ring, cobasis](const BasisElement& a,
                                          const std::vector<BasisElement>& bs) {
        int k = static_cast<int>(bs.size());
        if (k == 0) return Vec::basis(ring, a);
        TupleKey want{cell_elem(primal->at(a.id))};
        std::vector<int> fdegs{a.degree};
        int total = a.degree;
        for (const BasisElement& b : bs) {
            want.push_back(cell_elem(primal->at(b.id)));
            fdegs.push_back(b.degree);
            total += b.degree;
        }
        /* transpose sign (−1)^{deg E^k · deg functional} plus the evaluation
         * sign of the functional tuple */
        Scalar sgn =
            Scalar::of(ring, pow_sign(static_cast<long>(k) * total) * functional_tuple_sign(fdegs));
        Vec out(ring);
        const std::vector<BasisElement>& xs = cobasis.at(total - k);
        for (const BasisElement& x : xs) {
            const TLin& t = cache->cut(k, primal->at(x.id));
            Scalar c = t.coeff(want);
            if (!c.is_zero()) out.add(x, c * sgn);
        }
        return out;
    };
    ca.hga = std::move(H);
    return ca;
}

DgaMap pullback_map(const SimplicialMap& f, const CochainAlgebra& of_src,
                    const CochainAlgebra& of_tgt) {
    require(f.src->name == of_src.space->name && f.tgt->name == of_tgt.space->name,
            "pullback_map: simplicial map endpoints do not match the given algebras");
    LinOp op = induced_cochain_map(f, of_src.hga.alg.ring);
    return DgaMap{f.name + "*", &of_tgt.hga.alg, &of_src.hga.alg, op};
}

}  // namespace bartor
