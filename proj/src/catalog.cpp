#include "repkit/catalog.hpp"

#include "repkit/homological.hpp"

namespace repkit {

namespace {

Mat random_vector(const Field& f, std::size_t n, Rng& rng) {
    Mat v(f, n, 1);
    for (std::size_t i = 0; i < n; ++i) v.set(i, 0, rng.scalar(f));
    return v;
}

}  // namespace

std::vector<ModuleRep> indecomposable_catalog(const AlgebraPtr& a, std::size_t max_dim, std::size_t max_count,
                                              std::uint64_t seed) {
    Rng rng(seed);
    std::vector<ModuleRep> known;  // every certified indecomposable met so far
    std::vector<ModuleRep> frontier;
    const std::size_t known_cap = 4 * max_count;
    auto offer = [&](const ModuleRep& m) {
        if (m.dim() == 0) return;
        const Decomposition d = decompose(m, seed);
        for (std::size_t k = 0; k < d.summands.size(); ++k) {
            const ModuleRep& s = d.summands[k];
            if (!d.local[k] || known.size() >= known_cap) continue;
            bool seen = false;
            for (const auto& c : known)
                if (c.dim() == s.dim() && iso_between_indecomposables(c, s)) seen = true;
            if (seen) continue;
            known.push_back(s);
            frontier.push_back(s);
        }
    };
    auto small_count = [&] {
        std::size_t c = 0;
        for (const auto& m : known) c += m.dim() <= max_dim;
        return c;
    };
    const ModuleRep reg = regular_module(a);
    offer(reg);
    ModuleRep inj = dual_module(regular_module(a->opposite()));
    inj = ModuleRep(a, inj.dim(), inj.action());
    offer(inj);
    for (const auto& s : simple_modules(a, seed)) offer(s);
    for (int round = 0; round < 3 && small_count() < max_count && !frontier.empty(); ++round) {
        std::vector<ModuleRep> current;
        current.swap(frontier);
        for (const auto& m : current) {
            for (int trial = 0; trial < 4; ++trial) {
                const Mat sub = generated_submodule(m, random_vector(m.field(), m.dim(), rng));
                if (sub.cols() == 0 || sub.cols() == m.dim()) continue;
                offer(submodule(m, sub));
                offer(quotient_module(m, sub).module);
            }
        }
    }
    std::vector<ModuleRep> out;
    for (const auto& m : known)
        if (m.dim() <= max_dim && out.size() < max_count) out.push_back(m);
    return out;
}

Mat random_radical_map(const ModuleRep& x, const ModuleRep& y, bool same, Rng& rng) {
    const Field& f = x.field();
    const auto basis = hom_basis(x, y);
    if (basis.empty()) return Mat(f, y.dim(), x.dim());
    std::vector<Scalar> coeffs;
    for (std::size_t k = 0; k < basis.size(); ++k) coeffs.push_back(rng.scalar(f));
    Mat h = combine(basis, coeffs);
    if (!same) {
        // a map between non-isomorphic indecomposables is radical; an
        // invertible one means the two are isomorphic after all
        if (h.is_square() && is_invertible(h)) return Mat(f, y.dim(), x.dim());
        return h;
    }
    // in a local ring q(e) is nilpotent for the irreducible q under e
    const Factorization fac = factor(minimal_polynomial(h), rng.next());
    return evaluate(fac.factors.front().factor, h);
}

RadicalChain random_radical_chain(const std::vector<ModuleRep>& catalog, std::size_t length, Rng& rng) {
    check_shape(!catalog.empty(), "empty catalog");
    RadicalChain chain;
    std::size_t cur = rng.below(catalog.size());
    chain.modules.push_back(catalog[cur]);
    for (std::size_t step = 0; step < length; ++step) {
        std::size_t next = rng.below(catalog.size());
        Mat map = random_radical_map(catalog[cur], catalog[next], cur == next, rng);
        for (int retry = 0; retry < 2 * static_cast<int>(catalog.size()) && map.is_zero(); ++retry) {
            next = rng.below(catalog.size());
            map = random_radical_map(catalog[cur], catalog[next], cur == next, rng);
        }
        chain.maps.push_back(std::move(map));
        chain.modules.push_back(catalog[next]);
        cur = next;
    }
    return chain;
}

}  // namespace repkit
