#include <algorithm>
#include <set>

#include "support.hpp"

using namespace rt;

namespace {

UniPoly P(const Field& f, const std::vector<long long>& c) { return UniPoly::from_ints(f, c); }

PolyMat pm(const Field& f, std::size_t n, const std::vector<std::vector<long long>>& entries) {
    PolyMat m(f, n, n);
    for (std::size_t k = 0; k < entries.size(); ++k) m.entries[k] = P(f, entries[k]);
    return m;
}

// summands of y occur among the summands of x (with multiplicity)
bool is_summand_of(const ModuleRep& y, const ModuleRep& x) {
    auto have = decompose(x).summands;
    for (const auto& s : decompose(y).summands) {
        auto it = std::find_if(have.begin(), have.end(), [&](const ModuleRep& h) { return is_isomorphic(s, h).isomorphic; });
        if (it == have.end()) return false;
        have.erase(it);
    }
    return true;
}

}  // namespace

TEST_SUITE("tubes") {
    TEST_CASE("family validation") {
        CHECK(validate_family(kronecker_family(F101())).valid());
        const AlgebraPtr comm = commuting_algebra(Q());
        const BimoduleFamily ok(comm, 1, {pm(Q(), 1, {{0, 1}}), pm(Q(), 1, {{0, 1}})}, {0, 0}, P(Q(), {1}));
        CHECK(validate_family(ok).valid());
        const BimoduleFamily bad(comm, 2, {pm(Q(), 2, {{}, {1}, {}, {}}), pm(Q(), 2, {{}, {}, {0, 1}, {}})}, {0, 0},
                                 P(Q(), {1}));
        const FamilyReport r = validate_family(bad);
        REQUIRE(r.violations.size() == 1);
        CHECK_FALSE(r.violations[0].residual.is_zero());
    }

    TEST_CASE("specialization examples") {
        const BimoduleFamily fam = kronecker_family(F101());
        const AlgebraPtr kr = kronecker_algebra(F101(), 2);
        const ModuleRep r0 = specialize(fam, S(F101(), 0), 1);
        CHECK(r0.action() == kronecker_regular(kr, 0, 1).action());
        for (long long lambda : {0, 3, 100}) {
            const ModuleRep x = specialize(fam, S(F101(), lambda), 2);
            CHECK(x.dim() == 4);
            CHECK(x.action() == kronecker_regular(kr, lambda, 2).action());
            const Decomposition d = decompose(x);
            CHECK(d.complete());
            CHECK(d.summands.size() == 1);
        }
        // constant family: i = 1 gives the constant matrices themselves
        const AlgebraPtr kx = free_algebra(Q(), 1);
        const BimoduleFamily c(kx, 2, {pm(Q(), 2, {{1}, {2}, {3}, {4}})}, {0}, P(Q(), {1}));
        CHECK(specialize(c, S(Q(), 5), 1).act(0) == M(Q(), {{1, 2}, {3, 4}}));
    }

    TEST_CASE("specializations are valid of dimension rank times i") {
        const BimoduleFamily fam = kronecker_family(Q());
        Rng rng(3);
        for (int t = 0; t < 20; ++t) {
            const std::size_t i = 1 + rng.below(5);
            const ModuleRep x = specialize(fam, rng.scalar(Q(), 9), i);
            CHECK(x.dim() == 2 * i);
            CHECK(validate_module(x).valid());
        }
    }

    TEST_CASE("denominators") {
        const AlgebraPtr kx = free_algebra(Q(), 1);
        // x -> 1 / (x - 1)
        const BimoduleFamily fam(kx, 1, {pm(Q(), 1, {{1}})}, {1}, P(Q(), {-1, 1}));
        for (std::size_t i = 1; i <= 3; ++i) {
            const ModuleRep x = specialize(fam, S(Q(), 3), i);
            const Mat shifted = jordan_block(S(Q(), 3), i) - Mat::identity(Q(), i);
            CHECK(x.act(0) * shifted == Mat::identity(Q(), i));
        }
        try {
            (void)specialize(fam, S(Q(), 1), 2);
            FAIL("expected DenominatorVanishes");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::DenominatorVanishes);
        }
    }

    TEST_CASE("tube inclusions") {
        const BimoduleFamily fam = kronecker_family(F101());
        const Scalar lambda = S(F101(), 7);
        const Mat inc = tube_inclusion(fam, lambda, 1, 2);
        CHECK(rank(inc) == 2);
        CHECK(is_intertwiner(inc, specialize(fam, lambda, 1), specialize(fam, lambda, 2)));
        CHECK(tube_inclusion(fam, lambda, 2, 4) * tube_inclusion(fam, lambda, 1, 2) == tube_inclusion(fam, lambda, 1, 4));
        for (std::size_t i = 1; i <= 4; ++i)
            for (std::size_t j = i + 1; j <= 5; ++j) {
                const Mat m = tube_inclusion(fam, lambda, i, j);
                CHECK(is_intertwiner(m, specialize(fam, lambda, i), specialize(fam, lambda, j)));
                CHECK(m.rows() - rank(m) == 2 * (j - i));
            }
        try {
            (void)tube_inclusion(fam, lambda, 2, 2);
            FAIL("expected IndexOrder");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::IndexOrder);
        }
    }

    TEST_CASE("tube exact sequences") {
        const BimoduleFamily fam = kronecker_family(F101());
        const AlgebraPtr kr = kronecker_algebra(F101(), 2);
        const SesData s = tube_ses(fam, S(F101(), 0), 1, 2);
        CHECK(is_isomorphic(s.n, kronecker_regular(kr, 0, 1)).isomorphic);
        for (long long lambda : {0, 1, 42})
            for (std::size_t i = 1; i <= 4; ++i)
                for (std::size_t j = i + 1; j <= 5; ++j) {
                    const SesData e = tube_ses(fam, S(F101(), lambda), i, j);
                    CHECK_NOTHROW(check_exact(e));
                    CHECK(rank(e.f) == 2 * i);
                    CHECK(rank(e.g) == 2 * (j - i));
                    CHECK(rank(e.f) + rank(e.g) == e.m.dim());
                    CHECK((e.g * e.f).is_zero());
                    CHECK(is_intertwiner(e.g, e.m, e.n));
                }
    }

    TEST_CASE("distinct points give non-isomorphic modules") {
        for (const Field* f : {&F101(), &Q()}) {
            const BimoduleFamily fam = kronecker_family(*f);
            for (std::size_t i = 1; i <= 4; ++i) {
                std::vector<ModuleRep> xs;
                for (long long lambda : {0, 1, 2, -1}) xs.push_back(specialize(fam, S(*f, lambda), i));
                for (std::size_t a = 0; a < xs.size(); ++a)
                    for (std::size_t b = a + 1; b < xs.size(); ++b) CHECK_FALSE(is_isomorphic(xs[a], xs[b]).isomorphic);
            }
        }
    }

    TEST_CASE("Harada-Sai within a tube") {
        // X2 -> X1 -> X2 -> ... alternating quotient and inclusion maps; the
        // quotient kills the image of the inclusion, so three maps already vanish
        const BimoduleFamily fam = kronecker_family(F101());
        const Scalar lambda = S(F101(), 4);
        const ModuleRep x1 = specialize(fam, lambda, 1), x2 = specialize(fam, lambda, 2);
        const Mat down = tube_ses(fam, lambda, 1, 2).g, up = tube_inclusion(fam, lambda, 1, 2);
        std::vector<Mat> chain;
        std::vector<ModuleRep> modules{x2};
        for (std::size_t k = 0; k < 15; ++k) {
            chain.push_back(k % 2 ? up : down);
            modules.push_back(k % 2 ? x2 : x1);
        }
        const HaradaSaiReport r = harada_sai_chain_check(chain, modules, 4);
        CHECK(r.checked);
        CHECK(r.vanishes);
        CHECK(r.first_zero == std::optional<std::size_t>(3));
        CHECK(r.prefixes.size() == 15);
        CHECK_FALSE(r.prefixes[1].is_zero());
    }

    TEST_CASE("restriction of scalars") {
        const AlgebraPtr kx4 = free_algebra(F4(), 1);
        const ModuleRep y(kx4, 1, {Mat::from_rows(F4(), {{Scalar::from_code(F4(), 2)}})});
        const ModuleRep r = restrict_scalars(y);
        CHECK(&r.field() == &F2());
        CHECK(r.act(0) == M(F2(), {{0, 1}, {1, 1}}));

        // entries in the prime subfield: r(Y) = Y + Y
        const AlgebraPtr kr4 = kronecker_algebra(F4(), 2);
        const ModuleRep base = kronecker_regular(kr4, 1, 2);
        const ModuleRep rb = restrict_scalars(base);
        CHECK(rb.dim() == 2 * base.dim());
        const AlgebraPtr kr2 = kronecker_algebra(F2(), 2);
        const ModuleRep down = kronecker_regular(kr2, 1, 2);
        CHECK(is_isomorphic(rb, direct_sum(down, down)).isomorphic);

        CHECK_THROWS_AS(restrict_scalars(down), Error);
        CHECK_THROWS_AS(extend_scalars(down, F9()), Error);
    }

    TEST_CASE("extension of scalars") {
        Rng rng(13);
        const AlgebraPtr kr2 = kronecker_algebra(F2(), 2);
        for (int t = 0; t < 20; ++t) {
            const ModuleRep x = kronecker_random(kr2, 1 + rng.below(2), 1 + rng.below(2), rng);
            const ModuleRep e = extend_scalars(x, F4());
            CHECK(&e.field() == &F4());
            for (std::size_t g = 0; g < x.action().size(); ++g)
                for (std::size_t a = 0; a < x.dim(); ++a)
                    for (std::size_t b = 0; b < x.dim(); ++b) CHECK(e.act(g).at(a, b).code() == x.act(g).at(a, b).code());
            const ModuleRep y = rng.below(2) ? random_conjugate(x, rng) : kronecker_random(kr2, 1 + rng.below(2), 1 + rng.below(2), rng);
            CHECK(is_isomorphic(extend_scalars(x, F4()), extend_scalars(y, F4())).isomorphic == is_isomorphic(x, y).isomorphic);
        }
        const AlgebraPtr kr4 = kronecker_algebra(F4(), 2);
        for (int t = 0; t < 6; ++t) {
            const ModuleRep y = kronecker_random(kr4, 1 + rng.below(2), 1 + rng.below(2), rng);
            const ModuleRep er = extend_scalars(restrict_scalars(y), F4());
            CHECK(er.dim() == 2 * y.dim());
            CHECK(is_summand_of(y, er));
        }
    }

    TEST_CASE("bt1 experiment") {
        const BimoduleFamily fam = kronecker_family(F101());
        std::vector<Scalar> lambdas;
        for (long long l = 0; l < 4; ++l) lambdas.push_back(S(F101(), l));
        const Bt1Report r = bt1_experiment(fam, lambdas, 3);
        REQUIRE(r.rows.size() == 12);
        std::set<std::size_t> dims;
        for (const auto& row : r.rows) {
            dims.insert(row.dim);
            CHECK(row.dim == 2 * row.i);
            CHECK(row.summand_dims.size() == 1);
            CHECK(row.certified);
        }
        CHECK(dims == std::set<std::size_t>{2, 4, 6});
        CHECK(r.all_indecomposable);
        CHECK(r.unbounded);
        for (const auto& [d, m] : r.non_isomorphic)
            for (std::size_t a = 0; a < m.size(); ++a)
                for (std::size_t b = 0; b < m.size(); ++b) CHECK(m[a][b] == (a != b));
        for (std::size_t d : {2, 4, 6}) CHECK(r.classes_per_dim.at(d) == 4);

        const Bt1Report one = bt1_experiment(fam, lambdas, 1);
        CHECK(one.rows.size() == 4);
        for (const auto& row : one.rows) CHECK(row.dim == 2);
        CHECK(one.classes_per_dim.at(2) == 4);

        const Bt1Report none = bt1_experiment(fam, {}, 3);
        CHECK(none.rows.empty());
        CHECK(none.classes_per_dim.empty());
    }
}
