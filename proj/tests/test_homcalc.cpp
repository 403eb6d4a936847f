#include <algorithm>

#include "support.hpp"

using namespace rt;

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

void check_decomposition_shape(const ModuleRep& x, const Decomposition& d) {
    std::size_t total = 0;
    for (const auto& s : d.summands) total += s.dim();
    REQUIRE(total == x.dim());
    REQUIRE(is_invertible(d.change_of_basis));
    const Mat inv = inverse(d.change_of_basis);
    for (std::size_t g = 0; g < x.action().size(); ++g) {
        std::vector<Mat> blocks;
        for (const auto& s : d.summands) blocks.push_back(s.act(g));
        REQUIRE(inv * x.act(g) * d.change_of_basis == block_diag(blocks, x.field()));
    }
}

// isomorphism classes of `parts` matched against `summands` as multisets
bool same_multiset(std::vector<ModuleRep> parts, std::vector<ModuleRep> summands) {
    if (parts.size() != summands.size()) return false;
    for (const auto& p : parts) {
        auto it = std::find_if(summands.begin(), summands.end(),
                               [&](const ModuleRep& s) { return is_isomorphic(p, s).isomorphic; });
        if (it == summands.end()) return false;
        summands.erase(it);
    }
    return true;
}

}  // namespace

TEST_SUITE("homcalc") {
    TEST_CASE("hom_basis examples") {
        const AlgebraPtr kx = free_algebra(Q(), 1);
        const ModuleRep zero1(kx, 1, {M(Q(), {{0}})}), one1(kx, 1, {M(Q(), {{1}})});
        CHECK(hom_basis(zero1, one1).empty());

        const ModuleRep x(kx, 2, {M(Q(), {{0, 1}, {0, 0}})});
        const auto end = hom_basis(x, x);
        REQUIRE(end.size() == 2);
        const Mat span = hstack({end[0].vectorize(), end[1].vectorize()}, Q(), 4);
        CHECK(column_space_contains(span, Mat::identity(Q(), 2).vectorize()));
        CHECK(column_space_contains(span, x.act(0).vectorize()));
        CHECK(hom_basis(x, direct_sum(x, x)).size() == 4);
        for (const auto& t : end) CHECK(is_intertwiner(t, x, x));
    }

    TEST_CASE("hom dimension agrees with exhaustive counting") {
        Rng rng(17);
        const AlgebraPtr kx = free_algebra(F2(), 1), kxy = free_algebra(F3(), 2);
        const AlgebraPtr kr = kronecker_algebra(F2(), 2), dn = dual_numbers(F3());
        for (int t = 0; t < 40; ++t) {
            const ModuleRep a = free_module_random(kx, 1 + rng.below(2), rng), b = free_module_random(kx, 1 + rng.below(2), rng);
            CHECK(ipow(2, hom_basis(a, b).size()) == brute_hom_count(a, b));
            const ModuleRep c = free_module_random(kxy, 1 + rng.below(2), rng), d = free_module_random(kxy, 1 + rng.below(2), rng);
            CHECK(ipow(3, hom_basis(c, d).size()) == brute_hom_count(c, d));
            const ModuleRep e = kronecker_random(kr, rng.below(2), 1 + rng.below(2), rng);
            const ModuleRep g = kronecker_random(kr, 1, rng.below(3), rng);
            CHECK(ipow(2, hom_basis(e, g).size()) == brute_hom_count(e, g));
        }
        const ModuleRep p = dual_P(dn), s = dual_S(dn);
        CHECK(ipow(3, hom_basis(p, s).size()) == brute_hom_count(p, s));
        CHECK(ipow(3, hom_basis(s, p).size()) == brute_hom_count(s, p));
        CHECK(ipow(3, hom_basis(p, p).size()) == brute_hom_count(p, p));
    }

    TEST_CASE("is_isomorphic examples") {
        const AlgebraPtr kx = free_algebra(Q(), 1);
        const ModuleRep n(kx, 2, {M(Q(), {{0, 1}, {0, 0}})}), z(kx, 2, {Mat(Q(), 2, 2)});
        CHECK_FALSE(is_isomorphic(n, z).isomorphic);

        const Mat p = M(Q(), {{2, 1}, {1, 1}});
        const ModuleRep c = conjugate(n, p);
        const IsoResult r = is_isomorphic(n, c);
        REQUIRE(r.isomorphic);
        REQUIRE(r.witness);
        CHECK(is_intertwiner(*r.witness, n, c));
        CHECK(is_invertible(*r.witness));

        const AlgebraPtr kr = kronecker_algebra(F101(), 2);
        CHECK_FALSE(is_isomorphic(kronecker_regular(kr, 0, 1), kronecker_regular(kr, 1, 1)).isomorphic);
    }

    TEST_CASE("is_isomorphic agrees with exhaustive search") {
        Rng rng(19);
        const AlgebraPtr kx = free_algebra(F2(), 1), kr = kronecker_algebra(F2(), 2);
        for (int t = 0; t < 60; ++t) {
            ModuleRep a = free_module_random(kx, 2, rng);
            ModuleRep b = rng.below(2) ? random_conjugate(a, rng) : free_module_random(kx, 2, rng);
            CHECK(is_isomorphic(a, b).isomorphic == brute_isomorphic(a, b));
            a = kronecker_random(kr, 1, 1, rng);
            b = kronecker_random(kr, 1, 1, rng);
            CHECK(is_isomorphic(a, b).isomorphic == brute_isomorphic(a, b));
        }
    }

    TEST_CASE("is_isomorphic behaves as an equivalence relation") {
        Rng rng(23);
        const AlgebraPtr kr = kronecker_algebra(F101(), 2);
        std::vector<ModuleRep> sample;
        for (int t = 0; t < 6; ++t) {
            const ModuleRep base = kronecker_regular(kr, static_cast<long long>(rng.below(2)), 1 + rng.below(2));
            sample.push_back(base);
            sample.push_back(random_conjugate(base, rng));
        }
        for (const auto& a : sample) CHECK(is_isomorphic(a, a).isomorphic);
        for (const auto& a : sample)
            for (const auto& b : sample) {
                const bool ab = is_isomorphic(a, b).isomorphic;
                CHECK(ab == is_isomorphic(b, a).isomorphic);
                for (const auto& c : sample)
                    if (ab && is_isomorphic(b, c).isomorphic) CHECK(is_isomorphic(a, c).isomorphic);
            }
    }

    TEST_CASE("decompose examples") {
        const AlgebraPtr kx = free_algebra(F101(), 1);
        const ModuleRep diag(kx, 2, {M(F101(), {{0, 0}, {0, 1}})});
        Decomposition d = decompose(diag);
        CHECK(d.complete());
        CHECK(d.summands.size() == 2);
        check_decomposition_shape(diag, d);

        const ModuleRep n(kx, 2, {M(F101(), {{0, 1}, {0, 0}})});
        d = decompose(n);
        CHECK(d.complete());
        REQUIRE(d.summands.size() == 1);
        CHECK(d.local[0]);
        CHECK(d.endomorphisms[0].size() == 2);

        const ModuleRep nn = direct_sum(n, n);
        d = decompose(nn);
        REQUIRE(d.summands.size() == 2);
        for (const auto& s : d.summands) CHECK(is_isomorphic(s, n).isomorphic);
        check_decomposition_shape(nn, d);
    }

    TEST_CASE("decompose over Q splits rational eigenspaces") {
        const AlgebraPtr kx = free_algebra(Q(), 1);
        const ModuleRep x(kx, 3, {M(Q(), {{1, 0, 0}, {0, 2, 1}, {0, 0, 2}})});
        const Decomposition d = decompose(x);
        CHECK(d.complete());
        CHECK(d.summands.size() == 2);
        check_decomposition_shape(x, d);
        // x^2 + 1 has no rational root: one summand, End = Q(i)
        const ModuleRep rot(kx, 2, {M(Q(), {{0, -1}, {1, 0}})});
        const Decomposition r = decompose(rot);
        CHECK(r.complete());
        CHECK(r.summands.size() == 1);
    }

    TEST_CASE("Krull-Schmidt round trip on random sums") {
        Rng rng(29);
        const AlgebraPtr kr = kronecker_algebra(F101(), 2);
        std::vector<ModuleRep> pool{kronecker_simple(kr, 0), kronecker_simple(kr, 1), kronecker_regular(kr, 0, 1),
                                    kronecker_regular(kr, 5, 1), kronecker_regular(kr, 5, 2)};
        for (int t = 0; t < 25; ++t) {
            std::vector<ModuleRep> parts;
            for (std::size_t k = 0, n = 1 + rng.below(3); k < n; ++k) parts.push_back(pool[rng.below(pool.size())]);
            const ModuleRep x = random_conjugate(direct_sum(parts, kr), rng);
            const Decomposition d = decompose(x, rng.next());
            REQUIRE(d.complete());
            check_decomposition_shape(x, d);
            CHECK(same_multiset(parts, d.summands));
        }
    }

    TEST_CASE("decompose in small characteristic") {
        Rng rng(31);
        const AlgebraPtr kx = free_algebra(F2(), 1);
        for (int t = 0; t < 30; ++t) {
            const ModuleRep x = free_module_random(kx, 1 + rng.below(4), rng);
            const Decomposition d = decompose(x, rng.next());
            REQUIRE(d.complete());
            check_decomposition_shape(x, d);
            // one summand per primary component and Jordan block; count End
            // dims as an independent check: dim End(X) = sum over pairs
            std::size_t end = 0;
            for (const auto& a : d.summands)
                for (const auto& b : d.summands) end += hom_basis(a, b).size();
            CHECK(end == hom_basis(x, x).size());
        }
    }

    TEST_CASE("radical morphisms") {
        const AlgebraPtr dn = dual_numbers(F101());
        const ModuleRep p = dual_P(dn), s = dual_S(dn);
        CHECK(is_radical_morphism(Mat(F101(), 2, 2), p, p));
        CHECK_FALSE(is_radical_morphism(Mat::identity(F101(), 2), p, p));
        const Mat soc = M(F101(), {{0}, {1}});
        CHECK(is_radical_morphism(soc, s, p));
        CHECK_THROWS_AS(is_radical_morphism(M(F101(), {{1}, {0}}), s, p), Error);
        // on P + S the projection onto S composed with inclusion is radical
        const ModuleRep ps = direct_sum(p, s);
        Mat f(F101(), 3, 3);
        f.set(1, 2, Scalar::one(F101()));
        CHECK(is_radical_morphism(f, ps, ps));
        f.set(2, 2, Scalar::one(F101()));
        CHECK_FALSE(is_radical_morphism(f, ps, ps));
    }

    TEST_CASE("Harada-Sai examples") {
        const AlgebraPtr dn = dual_numbers(F101());
        const ModuleRep p = dual_P(dn), s = dual_S(dn);
        // S -> P -> S: socle inclusion then top projection
        const HaradaSaiReport r = harada_sai_chain_check({M(F101(), {{0}, {1}}), M(F101(), {{1, 0}})}, {s, p, s}, 2);
        CHECK(r.vanishing_length == 3);
        CHECK(r.first_zero == std::optional<std::size_t>(2));
        CHECK_FALSE(r.checked);

        const ModuleRep s1 = dual_S(dn);
        const HaradaSaiReport one = harada_sai_chain_check({Mat(F101(), 1, 1)}, {s, s1}, 1);
        CHECK(one.checked);
        CHECK(one.vanishes);

        try {
            (void)harada_sai_chain_check({Mat::identity(F101(), 2)}, {p, p}, 2);
            FAIL("expected PreconditionViolated");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::PreconditionViolated);
        }
        CHECK_THROWS_AS(harada_sai_chain_check({M(F101(), {{0}, {1}})}, {s, p}, 1), Error);
    }

    TEST_CASE("Harada-Sai bound on random radical chains") {
        Rng rng(37);
        for (const AlgebraPtr& a : {dual_numbers(F101()), kronecker_algebra(F101(), 2)})
            for (std::size_t b = 1; b <= 3; ++b) {
                const auto catalog = indecomposable_catalog(a, b, 16, 5);
                REQUIRE_FALSE(catalog.empty());
                for (int t = 0; t < 30; ++t) {
                    const RadicalChain ch = random_radical_chain(catalog, (std::size_t{1} << b) - 1, rng);
                    Mat comp = Mat::identity(a->field(), ch.modules.front().dim());
                    for (const auto& m : ch.maps) comp = m * comp;
                    CHECK(comp.is_zero());
                    CHECK(harada_sai_chain_check(ch.maps, ch.modules, b).vanishes);
                }
            }
    }

    TEST_CASE("duality") {
        const AlgebraPtr kx = free_algebra(Q(), 1);
        const ModuleRep x(kx, 2, {M(Q(), {{0, 1}, {0, 0}})});
        const ModuleRep dx = dual_module(x);
        CHECK(dx.act(0) == M(Q(), {{0, 0}, {1, 0}}));
        CHECK(dx.dim() == x.dim());
        Rng rng(41);
        const AlgebraPtr kr = kronecker_algebra(F101(), 2);
        for (int t = 0; t < 10; ++t) {
            const ModuleRep a = kronecker_random(kr, rng.below(3), rng.below(3), rng);
            const ModuleRep b = kronecker_random(kr, rng.below(2), 1 + rng.below(2), rng);
            CHECK(is_isomorphic(dual_module(dual_module(a)), a).isomorphic);
            CHECK(is_isomorphic(dual_module(direct_sum(a, b)), direct_sum(dual_module(a), dual_module(b))).isomorphic);
            CHECK(validate_module(dual_module(a)).valid());
        }
    }

    TEST_CASE("Kronecker embedding") {
        const AlgebraPtr k1 = free_algebra(F101(), 1);
        const ModuleRep x(k1, 1, {M(F101(), {{0}})});
        const ModuleRep fx = kronecker_embed(x);
        CHECK(fx.dim() == 2);
        CHECK(validate_module(fx).valid());
        CHECK(fx.act(2).block(1, 0, 1, 1) == M(F101(), {{0}}));
        CHECK(fx.act(3).block(1, 0, 1, 1) == M(F101(), {{1}}));

        Rng rng(43);
        const AlgebraPtr k2 = free_algebra(F101(), 2);
        for (int t = 0; t < 10; ++t) {
            const AlgebraPtr a = t % 2 ? k1 : k2;
            const ModuleRep u = free_module_random(a, 1 + rng.below(3), rng);
            const ModuleRep v = free_module_random(a, 1 + rng.below(3), rng);
            CHECK(kronecker_embed(u).dim() == 2 * u.dim());
            CHECK(hom_basis(u, v).size() == hom_basis(kronecker_embed(u), kronecker_embed(v)).size());
            CHECK(decompose(u).summands.size() == decompose(kronecker_embed(u)).summands.size());
        }
        CHECK_THROWS_AS(kronecker_embed(dual_P(dual_numbers(F101()))), Error);
    }
}
