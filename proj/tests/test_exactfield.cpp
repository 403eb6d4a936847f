#include <numeric>

#include "support.hpp"

using namespace rt;

namespace {

// plain integer model of F_{p^r}: coefficient vectors reduced by the modulus
std::vector<std::uint64_t> ext_mul(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                                   const std::vector<std::uint64_t>& modulus, std::uint64_t p) {
    const std::size_t r = modulus.size() - 1;
    std::vector<std::uint64_t> prod(2 * r, 0);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    for (std::size_t d = 2 * r - 1; d-- > r;) {
        const std::uint64_t c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (std::size_t k = 0; k < r; ++k) prod[d - r + k] = (prod[d - r + k] + (p - c) * modulus[k]) % p;
    }
    prod.resize(r);
    return prod;
}

struct Frac {
    long long n, d;
};

Frac norm(long long n, long long d) {
    if (d < 0) n = -n, d = -d;
    const long long g = std::gcd(n < 0 ? -n : n, d);
    return {n / g, d / g};
}

std::string frac_str(Frac f) { return f.d == 1 ? std::to_string(f.n) : std::to_string(f.n) + "/" + std::to_string(f.d); }

std::vector<std::uint64_t> roots_by_search(const UniPoly& f) {
    std::vector<std::uint64_t> out;
    for (const auto& a : elements(f.field()))
        if (f.evaluate(a).is_zero()) out.push_back(a.code());
    return out;
}

UniPoly random_poly(const Field& f, std::size_t max_deg, Rng& rng) {
    std::vector<Scalar> c;
    const std::size_t d = rng.below(max_deg + 1);
    for (std::size_t i = 0; i <= d; ++i) c.push_back(rng.scalar(f));
    c.back() = rng.nonzero_scalar(f);
    return UniPoly(f, c);
}

}  // namespace

TEST_SUITE("exactfield") {
    TEST_CASE("worked arithmetic examples") {
        CHECK((Scalar::parse(Q(), "2/3") + Scalar::parse(Q(), "1/6")).to_string() == "5/6");
        CHECK((S(F5(), 3) * S(F5(), 4)).to_string() == "2");
        const Scalar w = Scalar::from_code(F4(), 2);
        CHECK(w * w == w + Scalar::one(F4()));
        CHECK((w * w).to_string() == "[1,1]");
    }

    TEST_CASE("prime field inverses agree with exhaustive search") {
        for (std::uint64_t p : {2, 3, 5, 7, 101}) {
            const Field& f = Field::prime(p);
            for (std::uint64_t a = 1; a < p; ++a) {
                std::uint64_t b = 1;
                while ((a * b) % p != 1) ++b;
                CHECK(Scalar::from_code(f, a).inv() == Scalar::from_code(f, b));
            }
        }
    }

    TEST_CASE("extension multiplication agrees with a polynomial model") {
        for (const Field* f : {&F4(), &F9()}) {
            const auto& mod = f->spec().modulus;
            for (const auto& a : elements(*f))
                for (const auto& b : elements(*f)) {
                    const auto expect = ext_mul(f->digits(a.code()), f->digits(b.code()), mod, f->characteristic());
                    CHECK((a * b).code() == f->from_digits(expect));
                }
        }
    }

    TEST_CASE("rational arithmetic agrees with an integer model") {
        Rng rng(7);
        for (int t = 0; t < 500; ++t) {
            const long long a = static_cast<long long>(rng.below(41)) - 20, b = 1 + rng.below(12);
            const long long c = static_cast<long long>(rng.below(41)) - 20, d = 1 + rng.below(12);
            const Scalar x = Scalar::parse(Q(), std::to_string(a) + "/" + std::to_string(b));
            const Scalar y = Scalar::parse(Q(), std::to_string(c) + "/" + std::to_string(d));
            CHECK((x + y).to_string() == frac_str(norm(a * d + c * b, b * d)));
            CHECK((x * y).to_string() == frac_str(norm(a * c, b * d)));
            if (c != 0) CHECK((x / y).to_string() == frac_str(norm(a * d, b * c)));
        }
    }

    TEST_CASE("field axioms on random triples") {
        Rng rng(11);
        for (const Field* f : {&Q(), &F2(), &F5(), &F101(), &F4(), &F9()}) {
            for (int t = 0; t < 10000; ++t) {
                const Scalar a = rng.scalar(*f, 50), b = rng.scalar(*f, 50), c = rng.scalar(*f, 50);
                REQUIRE((a + b) + c == a + (b + c));
                REQUIRE(a * (b + c) == a * b + a * c);
                if (!a.is_zero()) REQUIRE(a * a.inv() == Scalar::one(*f));
            }
        }
    }

    TEST_CASE("division by zero and mixed fields are rejected") {
        CHECK_THROWS_AS(Scalar::zero(F5()).inv(), Error);
        CHECK_THROWS_AS(Scalar::one(F5()) + Scalar::one(F101()), Error);
        try {
            (void)(Scalar::one(Q()) / Scalar::zero(Q()));
            FAIL("expected DivisionByZero");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::DivisionByZero);
        }
    }

    TEST_CASE("serialization round trip") {
        Rng rng(3);
        for (const Field* f : {&Q(), &F5(), &F4(), &F9()})
            for (int t = 0; t < 200; ++t) {
                Scalar a = rng.scalar(*f, 1000);
                if (f == &Q()) a /= rng.nonzero_scalar(*f, 30);
                CHECK(Scalar::parse(*f, a.to_string()) == a);
            }
        CHECK(Scalar::parse(F5(), "-1") == S(F5(), 4));
        CHECK(Scalar::parse(F5(), "1/2") == S(F5(), 3));
        CHECK_THROWS_AS(Scalar::parse(Q(), "x"), Error);
    }

    TEST_CASE("reducible or bad moduli are rejected") {
        CHECK_THROWS_AS(Field::get(FieldSpec::prime_power(2, {1, 0, 1})), Error);
        CHECK_THROWS_AS(Field::prime(6), Error);
    }

    TEST_CASE("poly_factor examples") {
        auto fac = poly_factor(UniPoly::from_ints(F2(), {0, 1, 1}));
        REQUIRE(fac.size() == 2);
        CHECK(fac[0].factor == UniPoly::from_ints(F2(), {0, 1}));
        CHECK(fac[1].factor == UniPoly::from_ints(F2(), {1, 1}));

        fac = poly_factor(UniPoly::from_ints(F5(), {1, 0, 1}));
        REQUIRE(fac.size() == 2);
        std::vector<UniPoly> got{fac[0].factor, fac[1].factor};
        CHECK(std::count(got.begin(), got.end(), UniPoly::from_ints(F5(), {2, 1})) == 1);
        CHECK(std::count(got.begin(), got.end(), UniPoly::from_ints(F5(), {3, 1})) == 1);
        CHECK(roots_by_search(UniPoly::from_ints(F5(), {1, 0, 1})) == std::vector<std::uint64_t>{2, 3});

        fac = poly_factor(UniPoly::from_ints(F2(), {1, 1, 1}));
        REQUIRE(fac.size() == 1);
        CHECK(fac[0].multiplicity == 1);
        CHECK(roots_by_search(fac[0].factor).empty());
    }

    TEST_CASE("poly_factor re-multiplies and has root-free nonlinear factors") {
        Rng rng(2024);
        for (const Field* f : {&F2(), &F5(), &F4()}) {
            for (int t = 0; t < 1000; ++t) {
                const UniPoly p = random_poly(*f, 8, rng);
                const auto fac = poly_factor(p, rng.next());
                UniPoly prod = UniPoly::constant(p.leading());
                for (const auto& e : fac) {
                    REQUIRE(e.factor.leading().is_one());
                    prod *= pow(e.factor, e.multiplicity);
                    if (e.factor.degree() > 1) REQUIRE(roots_by_search(e.factor).empty());
                }
                REQUIRE(prod == p);
            }
        }
    }

    TEST_CASE("irreducible counts match the necklace formula") {
        // number of monic irreducibles of degree d over F_q
        auto necklace = [](std::uint64_t q, int d) {
            auto mu = [](int n) {
                int r = 1;
                for (int p = 2; p * p <= n; ++p)
                    if (n % p == 0) {
                        n /= p;
                        if (n % p == 0) return 0;
                        r = -r;
                    }
                return n > 1 ? -r : r;
            };
            long long s = 0;
            for (int k = 1; k <= d; ++k)
                if (d % k == 0) {
                    long long pw = 1;
                    for (int i = 0; i < k; ++i) pw *= static_cast<long long>(q);
                    s += mu(d / k) * pw;
                }
            return s / d;
        };
        for (const Field* f : {&F2(), &F3(), &F4()}) {
            for (int d = 1; d <= 4; ++d) {
                long long count = 0;
                std::vector<std::uint64_t> c(d, 0);
                for (;;) {
                    std::vector<Scalar> coeffs;
                    for (auto v : c) coeffs.push_back(Scalar::from_code(*f, v));
                    coeffs.push_back(Scalar::one(*f));
                    count += is_irreducible(UniPoly(*f, coeffs));
                    std::size_t k = 0;
                    while (k < c.size() && ++c[k] == f->order()) c[k++] = 0;
                    if (k == c.size()) break;
                }
                CHECK(count == necklace(f->order(), d));
            }
        }
    }

    TEST_CASE("rational roots") {
        auto roots = rational_roots(UniPoly::from_ints(Q(), {-1, 0, 1}));
        REQUIRE(roots.size() == 2);
        CHECK(roots[0] == S(Q(), -1));
        CHECK(roots[1] == S(Q(), 1));
        CHECK(rational_roots(UniPoly::from_ints(Q(), {-2, 0, 1})).empty());
        roots = rational_roots(UniPoly::from_ints(Q(), {1, -3, 2}));
        REQUIRE(roots.size() == 2);
        CHECK(roots[0] == Scalar::parse(Q(), "1/2"));
        CHECK(roots[1] == S(Q(), 1));
    }

    TEST_CASE("rational roots of products of linear factors") {
        Rng rng(5);
        for (int t = 0; t < 100; ++t) {
            UniPoly p = UniPoly::constant(rng.nonzero_scalar(Q(), 5));
            std::vector<Scalar> expect;
            for (std::size_t k = 0, n = 1 + rng.below(4); k < n; ++k) {
                const Scalar r = rng.scalar(Q(), 6) / rng.nonzero_scalar(Q(), 3);
                p *= UniPoly(Q(), {-r, Scalar::one(Q())});
                if (std::find(expect.begin(), expect.end(), r) == expect.end()) expect.push_back(r);
            }
            auto got = rational_roots(p);
            CHECK(got.size() == expect.size());
            for (const auto& r : expect) CHECK(std::find(got.begin(), got.end(), r) != got.end());
        }
    }
}
