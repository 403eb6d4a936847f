#include "repkit/homological.hpp"

namespace repkit {

namespace {

Mat span_of_images(const std::vector<Mat>& maps, const Field& f, std::size_t rows) {
    if (maps.empty()) return Mat(f, rows, 0);
    return column_basis(hstack(maps, f, rows));
}

std::size_t rank_of_span(const std::vector<Mat>& mats, const Field& f) {
    if (mats.empty()) return 0;
    std::vector<Mat> cols;
    for (const auto& m : mats) cols.push_back(m.vectorize());
    return rank(hstack(cols, f, cols.front().rows()));
}

ModuleRep direct_sum_of_simples(const AlgebraPtr& a, std::uint64_t seed) {
    return direct_sum(simple_modules(a, seed), a);
}

}  // namespace

Mat radical_submodule(const ModuleRep& x) {
    const Field& f = x.field();
    const Mat rad = algebra_radical(x.algebra()->structure());
    std::vector<Mat> images;
    for (std::size_t c = 0; c < rad.cols(); ++c) images.push_back(x.act_element(rad.col(c)));
    return span_of_images(images, f, x.dim());
}

std::vector<Projective> indecomposable_projectives(const AlgebraPtr& a, std::uint64_t seed) {
    const StructureAlgebra& s = a->structure();
    const Field& f = s.field();
    const ModuleRep reg = regular_module(a);
    std::vector<Projective> out;
    for (auto& e : primitive_idempotents(a, seed)) {
        std::vector<Mat> cols;
        for (std::size_t i = 0; i < s.dim(); ++i) cols.push_back(s.left_mult(i) * e);
        Mat basis = span_of_images(cols, f, s.dim());
        ModuleRep p = submodule(reg, basis);
        out.push_back({std::move(e), std::move(p), std::move(basis)});
    }
    return out;
}

std::vector<ModuleRep> simple_modules(const AlgebraPtr& a, std::uint64_t seed) {
    std::vector<ModuleRep> reps;
    for (const auto& p : indecomposable_projectives(a, seed)) {
        bool seen = false;
        for (const auto& q : reps)
            if (iso_between_indecomposables(q, p.module)) seen = true;
        if (!seen) reps.push_back(p.module);
    }
    std::vector<ModuleRep> out;
    for (const auto& p : reps) out.push_back(quotient_module(p, radical_submodule(p)).module);
    return out;
}

ProjectiveCover projective_cover(const ModuleRep& x, std::uint64_t seed) {
    const AlgebraPtr& a = x.algebra();
    const Field& f = x.field();
    const std::size_t n = x.dim();
    const auto projectives = indecomposable_projectives(a, seed);
    ProjectiveCover pc;
    Mat covered = radical_submodule(x);
    std::vector<Mat> maps;
    std::vector<ModuleRep> parts;
    for (std::size_t k = 0; k < projectives.size(); ++k) {
        const Projective& p = projectives[k];
        const Mat ex = x.act_element(p.idempotent);
        for (std::size_t j = 0; j < n && covered.cols() < n; ++j) {
            const Mat v = ex.col(j);
            if (column_space_contains(covered, v)) continue;
            Mat map(f, n, p.module.dim());
            for (std::size_t t = 0; t < p.basis.cols(); ++t) map.set_block(0, t, x.act_element(p.basis.col(t)) * v);
            maps.push_back(std::move(map));
            parts.push_back(p.module);
            pc.pieces.push_back(k);
            covered = generated_submodule(x, hstack({covered, v}, f, n));
        }
    }
    pc.cover = direct_sum(parts, a);
    pc.surjection = maps.empty() ? Mat(f, n, 0) : hstack(maps, f, n);
    if (rank(pc.surjection) != n) fail(ErrorCode::PreconditionViolated, "projective cover is not surjective");
    if (!column_space_contains(radical_submodule(pc.cover), kernel_basis(pc.surjection)))
        fail(ErrorCode::PreconditionViolated, "projective cover is not minimal");
    return pc;
}

ModuleRep syzygy(const ModuleRep& x, std::size_t n, std::uint64_t seed) {
    ModuleRep cur = x;
    for (std::size_t step = 0; step < n && cur.dim() > 0; ++step) {
        const ProjectiveCover pc = projective_cover(cur, seed);
        cur = submodule(pc.cover, kernel_basis(pc.surjection));
    }
    return cur;
}

bool is_projective(const ModuleRep& x, std::uint64_t seed) {
    return projective_cover(x, seed).cover.dim() == x.dim();
}

PresentationMorphism make_presentation(ModuleRep p1, ModuleRep p0, Mat phi, std::uint64_t seed) {
    check_same_algebra(p1, p0);
    if (phi.rows() != p0.dim() || phi.cols() != p1.dim())
        fail(ErrorCode::ShapeMismatch, "presentation map has the wrong shape");
    if (!is_intertwiner(phi, p1, p0)) fail(ErrorCode::NotIntertwiner, "presentation map does not commute with the action");
    PresentationMorphism pm{std::move(p1), std::move(p0), std::move(phi)};
    pm.in_proj2 = is_projective(pm.p1, seed) && is_projective(pm.p0, seed);
    pm.in_p1 = pm.in_proj2 && column_space_contains(radical_submodule(pm.p0), pm.phi);
    pm.in_p2 = pm.in_p1 && column_space_contains(radical_submodule(pm.p1), kernel_basis(pm.phi));
    return pm;
}

PresentationMorphism minimal_presentation(const ModuleRep& x, std::uint64_t seed) {
    const ProjectiveCover top = projective_cover(x, seed);
    const Mat kernel = kernel_basis(top.surjection);
    const ModuleRep omega = submodule(top.cover, kernel);
    const ProjectiveCover next = projective_cover(omega, seed);
    return make_presentation(next.cover, top.cover, kernel * next.surjection, seed);
}

ModuleRep coker_of_presentation(const PresentationMorphism& pm) {
    const Mat image = pm.phi.cols() == 0 ? Mat(pm.p0.field(), pm.p0.dim(), 0) : column_basis(pm.phi);
    return quotient_module(pm.p0, image).module;
}

std::size_t ext_dim(std::size_t n, const ModuleRep& m, const ModuleRep& x, std::uint64_t seed) {
    check_same_algebra(m, x);
    if (n == 0) return hom_basis(m, x).size();
    const ModuleRep y = syzygy(m, n - 1, seed);
    if (y.dim() == 0) return 0;
    const ProjectiveCover pc = projective_cover(y, seed);
    const Mat inclusion = kernel_basis(pc.surjection);
    const ModuleRep omega = submodule(pc.cover, inclusion);
    const auto target = hom_basis(omega, x);
    if (target.empty()) return 0;
    std::vector<Mat> restricted;
    for (const auto& h : hom_basis(pc.cover, x)) restricted.push_back(h * inclusion);
    return target.size() - rank_of_span(restricted, x.field());
}

bool pdim_le(const ModuleRep& x, std::size_t n, std::uint64_t seed) {
    return ext_dim(n + 1, x, direct_sum_of_simples(x.algebra(), seed), seed) == 0;
}

bool idim_le(const ModuleRep& x, std::size_t n, std::uint64_t seed) {
    return ext_dim(n + 1, direct_sum_of_simples(x.algebra(), seed), x, seed) == 0;
}

bool gen_membership(const ModuleRep& m, const ModuleRep& x) {
    check_same_algebra(m, x);
    if (x.dim() == 0) return true;
    return span_of_images(hom_basis(m, x), x.field(), x.dim()).cols() == x.dim();
}

bool cogen_membership(const ModuleRep& m, const ModuleRep& x) {
    check_same_algebra(m, x);
    return gen_membership(dual_module(m), dual_module(x));
}

bool hom_ext_orthogonal(const ModuleRep& m, const ModuleRep& x, OrthoMode mode, std::size_t n, OrthoSide side,
                        std::uint64_t seed) {
    check_same_algebra(m, x);
    if (side == OrthoSide::Left) return hom_ext_orthogonal(dual_module(m), dual_module(x), mode, n, OrthoSide::Right, seed);
    if (mode == OrthoMode::Hom) return hom_basis(m, x).empty();
    return ext_dim(n, m, x, seed) == 0;
}

void check_exact(const SesData& s) {
    check_same_algebra(s.l, s.m);
    check_same_algebra(s.m, s.n);
    auto bad = [](const char* what) { fail(ErrorCode::NotExact, what); };
    if (!is_intertwiner(s.f, s.l, s.m)) bad("f is not an intertwiner L -> M");
    if (!is_intertwiner(s.g, s.m, s.n)) bad("g is not an intertwiner M -> N");
    const std::size_t rf = rank(s.f), rg = rank(s.g);
    if (rf != s.l.dim()) bad("f is not injective");
    if (rg != s.n.dim()) bad("g is not surjective");
    if (!(s.g * s.f).is_zero() || rf + rg != s.m.dim()) bad("image of f differs from kernel of g");
}

bool relative_injectivity(const SesData& s, const ModuleRep& x) {
    check_exact(s);
    check_same_algebra(s.l, x);
    const auto from_l = hom_basis(s.l, x);
    if (from_l.empty()) return true;
    std::vector<Mat> restricted;
    for (const auto& h : hom_basis(s.m, x)) restricted.push_back(h * s.f);
    return rank_of_span(restricted, x.field()) == from_l.size();
}

SesData split_sequence(const ModuleRep& l, const ModuleRep& n) {
    const Field& f = l.field();
    SesData s{l, direct_sum(l, n), n, Mat(f, l.dim() + n.dim(), l.dim()), Mat(f, n.dim(), l.dim() + n.dim())};
    s.f.set_block(0, 0, Mat::identity(f, l.dim()));
    s.g.set_block(0, l.dim(), Mat::identity(f, n.dim()));
    return s;
}

}  // namespace repkit
