#include "bartor/surjection.hpp"

#include <algorithm>

#include "bartor/koszul.hpp"

namespace bartor {

int Surjection::r() const {
    require(!u.empty(), "surjection: empty");
    return *std::max_element(u.begin(), u.end());
}

void Surjection::check() const {
    int rr = r();
    std::vector<bool> hit(static_cast<std::size_t>(rr) + 1, false);
    for (std::size_t t = 0; t < u.size(); ++t) {
        require(u[t] >= 1 && u[t] <= rr, "surjection: value out of range in " + str());
        require(t == 0 || u[t] != u[t - 1], "surjection: degenerate (repeated value) in " + str());
        hit[static_cast<std::size_t>(u[t])] = true;
    }
    for (int j = 1; j <= rr; ++j)
        require(hit[static_cast<std::size_t>(j)], "surjection: label " + std::to_string(j) +
                                                      " missing in " + str());
}

std::string Surjection::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(u[i]);
    }
    return s + ")";
}

Surjection Surjection::e_k(int k) {
    require(k >= 0, "e_k: negative k");
    Surjection s;
    s.u.push_back(1);
    for (int i = 2; i <= k + 1; ++i) {
        s.u.push_back(i);
        s.u.push_back(1);
    }
    return s;
}

Surjection Surjection::from_decomposition(const std::vector<int>& j) {
    int n = static_cast<int>(j.size());
    require(n >= 1, "from_decomposition: empty");
    int c = 0;
    Surjection s;
    for (int t = 1; t <= n; ++t) {
        require(j[static_cast<std::size_t>(t - 1)] >= 0, "from_decomposition: negative part");
        int v = 2 * t - 1;
        s.u.push_back(v);
        for (int i = 1; i <= j[static_cast<std::size_t>(t - 1)]; ++i) {
            s.u.push_back(2 * (c + i));
            s.u.push_back(v);
        }
        c += j[static_cast<std::size_t>(t - 1)];
        require(c < t, "from_decomposition: prefix sums must stay below position");
    }
    require(c == n - 1, "from_decomposition: parts must sum to n-1");
    s.u.push_back(2 * n);
    s.check();
    return s;
}

std::vector<std::vector<int>> admissible_decompositions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int s, int c) -> void {
        if (s == n) {
            if (c == n - 1) out.push_back(cur);
            return;
        }
        /* prefix condition: c + j < s+1, and never beyond the total n−1 */
        for (int j = 0; c + j <= s && c + j <= n - 1; ++j) {
            cur.push_back(j);
            self(self, s + 1, c + j);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

TLin interval_cut(const SimplicialSet& X, const Ring& ring, const Surjection& u,
                  const Simplex& x) {
    u.check();
    int m = x.dim();
    int len = u.len();
    int r = u.r();

    /* last interval of each label */
    std::vector<int> final_t(static_cast<std::size_t>(r) + 1, 0);
    for (int t = 1; t <= len; ++t) final_t[static_cast<std::size_t>(u.u[static_cast<std::size_t>(t - 1)])] = t;

    TLin out(ring);
    std::vector<int> cuts(static_cast<std::size_t>(len) + 1, 0);
    cuts[static_cast<std::size_t>(len)] = m;

    auto process = [&]() {
        /* factor for each label: restriction of x to the concatenated
           intervals (shared endpoints repeat and kill the term) */
        TupleKey key;
        key.reserve(static_cast<std::size_t>(r));
        for (int j = 1; j <= r; ++j) {
            std::vector<int> verts;
            for (int t = 1; t <= len; ++t) {
                if (u.u[static_cast<std::size_t>(t - 1)] != j) continue;
                for (int v = cuts[static_cast<std::size_t>(t - 1)];
                     v <= cuts[static_cast<std::size_t>(t)]; ++v)
                    verts.push_back(v);
            }
            Simplex f = restrict_to(X, x, verts);
            if (!f.nondeg()) return;
            key.push_back(cell_elem(f.base));
        }
        /* position sign: right endpoints of the non-final intervals;
           permutation sign: regroup the interval symbols by label, where a
           final interval has its length as degree and a non-final one has
           length + 1 */
        long pos = 0;
        KsWord word;
        for (int j = 1; j <= r; ++j)
            for (int t = 1; t <= len; ++t) {
                if (u.u[static_cast<std::size_t>(t - 1)] != j) continue;
                long length = cuts[static_cast<std::size_t>(t)] - cuts[static_cast<std::size_t>(t - 1)];
                bool last = (final_t[static_cast<std::size_t>(j)] == t);
                if (!last) pos += cuts[static_cast<std::size_t>(t)];
                word.var(last ? length : length + 1, t);
            }
        out.add(key, Scalar::of(ring, pow_sign(pos) * word.sign()));
    };

    auto rec = [&](auto&& self, int t) -> void {
        if (t == len) {
            process();
            return;
        }
        for (int v = cuts[static_cast<std::size_t>(t - 1)]; v <= m; ++v) {
            cuts[static_cast<std::size_t>(t)] = v;
            self(self, t + 1);
        }
    };
    if (len == 1) {
        process();
    } else {
        rec(rec, 1);
    }
    return out;
}

TLin interval_cut(const SimplicialSet& X, const Surjection& u, const Vec& v) {
    TLin out(v.ring());
    for (const auto& [k, c] : v.terms()) {
        require(k.degree >= 0, "interval_cut: chain element expected");
        TLin cut = interval_cut(X, v.ring(), u, nd(X.key(k.id)));
        out.add_scaled(cut, c);
    }
    return out;
}

}  // namespace bartor
