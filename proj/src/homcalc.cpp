#include "repkit/homcalc.hpp"
#include "repkit/random.hpp"

namespace repkit {

std::optional<Mat> iso_between_indecomposables(const ModuleRep& x, const ModuleRep& y) {
    if (x.dim() != y.dim()) return std::nullopt;
    if (x.dim() == 0) return Mat(x.field(), 0, 0);
    for (const auto& h : hom_basis(x, y))
        if (is_invertible(h)) return h;
    return std::nullopt;
}

namespace {

IsoResult match_summands(const ModuleRep& x, const ModuleRep& y, std::uint64_t seed) {
    const Field& f = x.field();
    const Decomposition dx = decompose(x, seed);
    const Decomposition dy = decompose(y, seed);
    const bool certified = dx.complete() && dy.complete();
    if (dx.summands.size() != dy.summands.size()) return {false, std::nullopt, certified};
    const std::size_t s = dx.summands.size();
    std::vector<bool> used(s, false);
    Mat blocks(f, x.dim(), x.dim());
    for (std::size_t i = 0; i < s; ++i) {
        bool found = false;
        for (std::size_t j = 0; j < s && !found; ++j) {
            if (used[j]) continue;
            auto t = iso_between_indecomposables(dx.summands[i], dy.summands[j]);
            if (!t) continue;
            used[j] = found = true;
            blocks.set_block(dy.offset(j), dx.offset(i), *t);
        }
        if (!found) return {false, std::nullopt, certified};
    }
    Mat witness = dy.change_of_basis * blocks * inverse(dx.change_of_basis);
    return {true, std::move(witness), true};
}

}  // namespace

IsoResult is_isomorphic(const ModuleRep& x, const ModuleRep& y, std::uint64_t seed) {
    check_same_algebra(x, y);
    const Field& f = x.field();
    if (x.dim() != y.dim()) return {false, std::nullopt, true};
    if (x.dim() == 0) return {true, Mat(f, 0, 0), true};
    for (std::size_t g = 0; g < x.action().size(); ++g)
        if (rank(x.act(g)) != rank(y.act(g))) return {false, std::nullopt, true};
    const auto hxy = hom_basis(x, y);
    if (hxy.empty()) return {false, std::nullopt, true};
    if (hom_basis(x, x).size() != hxy.size() || hom_basis(y, x).size() != hxy.size())
        return {false, std::nullopt, true};
    for (const auto& h : hxy)
        if (is_invertible(h)) return {true, h, true};
    Rng rng(seed);
    for (int attempt = 0; attempt < 16; ++attempt) {
        std::vector<Scalar> coeffs;
        for (std::size_t k = 0; k < hxy.size(); ++k) coeffs.push_back(rng.scalar(f));
        Mat h = combine(hxy, coeffs);
        if (is_invertible(h)) return {true, std::move(h), true};
    }
    return match_summands(x, y, seed);
}

bool is_radical_morphism(const Mat& f, const ModuleRep& x, const ModuleRep& y, std::uint64_t seed) {
    if (!is_intertwiner(f, x, y)) fail(ErrorCode::NotIntertwiner, "map does not commute with the action");
    if (f.is_zero()) return true;
    const Decomposition dx = decompose(x, seed);
    const Decomposition dy = decompose(y, seed);
    if (!dx.complete() || !dy.complete())
        fail(ErrorCode::IncompleteDecomposition, "summands could not be certified indecomposable");
    const Mat g = inverse(dy.change_of_basis) * f * dx.change_of_basis;
    for (std::size_t i = 0; i < dx.summands.size(); ++i)
        for (std::size_t j = 0; j < dy.summands.size(); ++j) {
            const std::size_t di = dx.summands[i].dim(), dj = dy.summands[j].dim();
            if (di != dj) continue;
            if (is_invertible(g.block(dy.offset(j), dx.offset(i), dj, di))) return false;
        }
    return true;
}

HaradaSaiReport harada_sai_chain_check(const std::vector<Mat>& chain, const std::vector<ModuleRep>& modules,
                                       std::size_t bound, std::uint64_t seed) {
    if (modules.size() != chain.size() + 1)
        fail(ErrorCode::InvalidArgument, "a chain of k maps needs k + 1 modules");
    if (bound == 0 || bound > 62) fail(ErrorCode::InvalidArgument, "bound must lie in [1, 62]");
    HaradaSaiReport report;
    report.bound = bound;
    report.vanishing_length = (std::size_t{1} << bound) - 1;
    for (std::size_t k = 0; k < modules.size(); ++k) {
        const ModuleRep& m = modules[k];
        if (m.dim() == 0 || m.dim() > bound)
            fail(ErrorCode::PreconditionViolated, "module dimension outside [1, bound]", {{"index", std::to_string(k)}});
        const Decomposition d = decompose(m, seed);
        if (!d.complete() || d.summands.size() != 1)
            fail(ErrorCode::PreconditionViolated, "module is not a certified indecomposable", {{"index", std::to_string(k)}});
    }
    for (std::size_t k = 0; k < chain.size(); ++k) {
        const Mat& f = chain[k];
        if (!is_intertwiner(f, modules[k], modules[k + 1]))
            fail(ErrorCode::PreconditionViolated, "map is not an intertwiner", {{"index", std::to_string(k)}});
        if (f.is_square() && is_invertible(f))
            fail(ErrorCode::PreconditionViolated, "map is an isomorphism, not a radical morphism",
                 {{"index", std::to_string(k)}});
        report.prefixes.push_back(k == 0 ? f : f * report.prefixes.back());
        if (!report.first_zero && report.prefixes.back().is_zero()) report.first_zero = k + 1;
    }
    report.checked = chain.size() >= report.vanishing_length;
    if (report.checked) {
        report.vanishes = report.prefixes[report.vanishing_length - 1].is_zero();
        if (!report.vanishes)
            fail(ErrorCode::HaradaSaiViolation, "composite of radical morphisms does not vanish at the Harada-Sai length",
                 {{"bound", std::to_string(bound)}});
    } else {
        report.vanishes = report.first_zero.has_value();
    }
    return report;
}

std::vector<Mat> primitive_idempotents(const AlgebraPtr& a, std::uint64_t seed) {
    const StructureAlgebra& s = a->structure();
    const Field& f = s.field();
    if (f.is_finite() && f.characteristic() <= s.dim())
        fail(ErrorCode::UnsupportedCharacteristic, "idempotent computation needs characteristic 0 or larger than the dimension",
             {{"characteristic", std::to_string(f.characteristic())}, {"dim", std::to_string(s.dim())}});
    // prefer basis elements when they already form a complete primitive set
    {
        std::vector<Mat> chosen;
        Mat sum(f, s.dim(), 1);
        for (std::size_t i = 0; i < s.dim(); ++i) {
            const Mat b = s.basis_vector(i);
            if (s.product(b, b) != b) continue;
            bool orthogonal = true;
            for (const auto& c : chosen)
                if (!s.product(b, c).is_zero() || !s.product(c, b).is_zero()) orthogonal = false;
            if (!orthogonal) continue;
            chosen.push_back(b);
            sum += b;
        }
        bool primitive = sum == s.unit();
        const ModuleRep reg = regular_module(a);
        for (std::size_t k = 0; k < chosen.size() && primitive; ++k) {
            const Mat right = column_basis(hstack([&] {
                std::vector<Mat> cols;
                for (std::size_t i = 0; i < s.dim(); ++i) cols.push_back(s.left_mult(i) * chosen[k]);
                return cols;
            }(), f, s.dim()));
            const Decomposition dk = decompose(submodule(reg, right), seed);
            primitive = dk.complete() && dk.summands.size() == 1;
        }
        if (primitive) return chosen;
    }
    const Decomposition d = decompose(regular_module(a), seed);
    if (!d.complete())
        fail(ErrorCode::IncompleteDecomposition, "regular module could not be decomposed with certificate");
    // projection onto summand k is right multiplication by e_k = pi_k(1)
    const Mat pinv = inverse(d.change_of_basis);
    std::vector<Mat> out;
    for (std::size_t k = 0; k < d.summands.size(); ++k) {
        const std::size_t off = d.offset(k), dim = d.summands[k].dim();
        const Mat proj = d.change_of_basis.block(0, off, s.dim(), dim) * pinv.block(off, 0, dim, s.dim());
        out.push_back(proj * s.unit());
    }
    return out;
}

}  // namespace repkit
