#pragma once

#include <doctest.h>

#include <functional>
#include <string>
#include <vector>

#include "repkit/catalog.hpp"
#include "repkit/homological.hpp"
#include "repkit/random.hpp"
#include "repkit/scheme.hpp"
#include "repkit/tubes.hpp"

namespace rt {

using namespace repkit;

inline const Field& F2() { return Field::prime(2); }
inline const Field& F3() { return Field::prime(3); }
inline const Field& F5() { return Field::prime(5); }
inline const Field& F101() { return Field::prime(101); }
inline const Field& Q() { return Field::rational(); }
// F4 = F2[w]/(w^2 + w + 1); codes pack coefficients base 2, so w has code 2
inline const Field& F4() { return Field::get(FieldSpec::prime_power(2, {1, 1, 1})); }
inline const Field& F9() { return Field::get(FieldSpec::prime_power(3, {1, 0, 1})); }

inline Scalar S(const Field& f, long long v) { return Scalar::from_int(f, v); }

inline Mat M(const Field& f, const std::vector<std::vector<long long>>& rows) { return Mat::from_ints(f, rows); }

inline Mat random_mat(const Field& f, std::size_t r, std::size_t c, Rng& rng, long long range = 4) {
    Mat m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rng.scalar(f, range));
    return m;
}

// rank deficiency on purpose now and then
inline Mat random_low_rank(const Field& f, std::size_t r, std::size_t c, std::size_t k, Rng& rng) {
    return random_mat(f, r, k, rng) * random_mat(f, k, c, rng);
}

inline Mat random_invertible(const Field& f, std::size_t n, Rng& rng) {
    for (;;) {
        Mat m = random_mat(f, n, n, rng);
        if (is_invertible(m)) return m;
    }
}

inline AlgebraPtr free_algebra(const Field& f, std::size_t gens) {
    FreePresentation p;
    p.field = &f;
    p.num_generators = gens;
    return make_algebra(std::move(p));
}

inline NCPoly poly(const Field& f, const std::vector<std::pair<long long, std::vector<std::size_t>>>& terms) {
    std::vector<Term> t;
    for (const auto& [c, w] : terms) t.push_back({S(f, c), w});
    return NCPoly(std::move(t));
}

inline AlgebraPtr commuting_algebra(const Field& f) {
    FreePresentation p;
    p.field = &f;
    p.num_generators = 2;
    p.names = {"x", "y"};
    p.relations = {poly(f, {{1, {0, 1}}, {-1, {1, 0}}})};
    return make_algebra(std::move(p));
}

inline AlgebraPtr truncated_free(const Field& f) {
    FreePresentation p;
    p.field = &f;
    p.num_generators = 1;
    p.relations = {poly(f, {{1, {0, 0}}})};
    return make_algebra(std::move(p));
}

inline AlgebraPtr dual_numbers(const Field& f) {
    QuiverPresentation q;
    q.field = &f;
    q.vertices = 1;
    q.arrows = {{0, 0, "x"}};
    q.relations = {poly(f, {{1, {0, 0}}})};
    return make_algebra(quiver_to_structure(q));
}

inline AlgebraPtr product_kk(const Field& f) {
    // k x k with basis the two idempotents
    std::vector<Mat> lm{M(f, {{1, 0}, {0, 0}}), M(f, {{0, 0}, {0, 1}})};
    return make_algebra(StructureAlgebra(f, lm, M(f, {{1}, {1}})));
}

/// Module over k[x]/(x^2) in the basis (e, x) convention: action list is
/// [identity, N].
inline ModuleRep dual_module_of(const AlgebraPtr& a, const Mat& nilpotent) {
    return ModuleRep(a, nilpotent.rows(), {Mat::identity(a->field(), nilpotent.rows()), nilpotent});
}
inline ModuleRep dual_S(const AlgebraPtr& a) { return dual_module_of(a, Mat(a->field(), 1, 1)); }
inline ModuleRep dual_P(const AlgebraPtr& a) { return regular_module(a); }

/// Kronecker representation with blocks A_k : k^{d0} -> k^{d1}.
inline ModuleRep kronecker_rep(const AlgebraPtr& a, std::size_t d0, std::size_t d1, const std::vector<Mat>& arrows) {
    const Field& f = a->field();
    const std::size_t n = d0 + d1;
    Mat e0(f, n, n), e1(f, n, n);
    e0.set_block(0, 0, Mat::identity(f, d0));
    e1.set_block(d0, d0, Mat::identity(f, d1));
    std::vector<Mat> action{e0, e1};
    for (const auto& b : arrows) {
        Mat m(f, n, n);
        m.set_block(d0, 0, b);
        action.push_back(m);
    }
    return ModuleRep(a, n, action);
}

/// R_lambda of dimension vector (i, i): a1 -> 1, a2 -> J_i(lambda).
inline ModuleRep kronecker_regular(const AlgebraPtr& a, long long lambda, std::size_t i) {
    const Field& f = a->field();
    return kronecker_rep(a, i, i, {Mat::identity(f, i), jordan_block(S(f, lambda), i)});
}

inline ModuleRep kronecker_simple(const AlgebraPtr& a, std::size_t vertex) {
    const Field& f = a->field();
    return vertex == 0 ? kronecker_rep(a, 1, 0, {Mat(f, 0, 1), Mat(f, 0, 1)})
                       : kronecker_rep(a, 0, 1, {Mat(f, 1, 0), Mat(f, 1, 0)});
}

inline ModuleRep kronecker_random(const AlgebraPtr& a, std::size_t d0, std::size_t d1, Rng& rng) {
    const Field& f = a->field();
    return kronecker_rep(a, d0, d1, {random_mat(f, d1, d0, rng), random_mat(f, d1, d0, rng)});
}

inline ModuleRep random_conjugate(const ModuleRep& x, Rng& rng) {
    return conjugate(x, random_invertible(x.field(), x.dim(), rng));
}

inline ModuleRep free_module_random(const AlgebraPtr& a, std::size_t n, Rng& rng) {
    std::vector<Mat> act;
    for (std::size_t g = 0; g < a->action_count(); ++g) act.push_back(random_mat(a->field(), n, n, rng));
    return ModuleRep(a, n, act);
}

/// Random point of Mod(k<x,y>/(xy - yx), n): y is a polynomial in x.
inline ModuleRep commuting_random(const AlgebraPtr& a, std::size_t n, Rng& rng) {
    const Field& f = a->field();
    Mat x = random_mat(f, n, n, rng, 2);
    Mat y = Mat::identity(f, n) * rng.scalar(f, 2) + x * rng.scalar(f, 2) + x * x * rng.scalar(f, 2);
    return ModuleRep(a, n, {x, y});
}

/// Exhaustive count of intertwiners over a tiny field (q^{mn} candidates).
inline std::size_t brute_hom_count(const ModuleRep& x, const ModuleRep& y) {
    const Field& f = x.field();
    const std::size_t cells = x.dim() * y.dim();
    std::vector<std::uint64_t> code(cells, 0);
    std::size_t count = 0;
    for (;;) {
        Mat t(f, y.dim(), x.dim());
        for (std::size_t c = 0; c < cells; ++c) t.set(c / x.dim(), c % x.dim(), Scalar::from_code(f, code[c]));
        bool ok = true;
        for (std::size_t g = 0; g < x.action().size() && ok; ++g) ok = t * x.act(g) == y.act(g) * t;
        count += ok;
        std::size_t k = 0;
        while (k < cells && ++code[k] == f.order()) code[k++] = 0;
        if (k == cells) return count;
    }
}

/// Exhaustive isomorphism search over a tiny field.
inline bool brute_isomorphic(const ModuleRep& x, const ModuleRep& y) {
    if (x.dim() != y.dim()) return false;
    const Field& f = x.field();
    const std::size_t n = x.dim(), cells = n * n;
    std::vector<std::uint64_t> code(cells, 0);
    for (;;) {
        Mat t(f, n, n);
        for (std::size_t c = 0; c < cells; ++c) t.set(c / n, c % n, Scalar::from_code(f, code[c]));
        bool ok = true;
        for (std::size_t g = 0; g < x.action().size() && ok; ++g) ok = t * x.act(g) == y.act(g) * t;
        if (ok && is_invertible(t)) return true;
        std::size_t k = 0;
        while (k < cells && ++code[k] == f.order()) code[k++] = 0;
        if (k == cells) return false;
    }
}

/// Every element of a finite field.
inline std::vector<Scalar> elements(const Field& f) {
    std::vector<Scalar> out;
    for (std::uint64_t c = 0; c < f.order(); ++c) out.push_back(Scalar::from_code(f, c));
    return out;
}

}  // namespace rt
