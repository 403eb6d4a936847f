#include <algorithm>
#include <numeric>

#include "repkit/random.hpp"
#include "repkit/unipoly.hpp"

namespace repkit {

namespace {

void require_finite(const UniPoly& f) {
    if (!f.field().is_finite())
        fail(ErrorCode::UnsupportedField, "finite-field factorization requested over " + f.field().name());
}

mpz_class to_mpz(std::uint64_t v) { return mpz_class(static_cast<unsigned long>(v)); }

// c(x) = sum a_j x^{jp}  ->  sum a_j^{1/p} x^j
UniPoly pth_root(const UniPoly& c) {
    const Field& f = c.field();
    const std::uint64_t p = f.characteristic();
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, f.degree() - 1);
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < c.coeffs().size(); i += p) out.push_back(c.coeffs()[i].pow(e));
    return UniPoly(f, std::move(out));
}

std::vector<FactorEntry> squarefree_monic(const UniPoly& f) {
    std::vector<FactorEntry> out;
    if (f.degree() <= 0) return out;
    UniPoly c = gcd(f, f.derivative());
    UniPoly w = f / c;
    std::size_t i = 1;
    while (w.degree() > 0) {
        UniPoly y = gcd(w, c);
        UniPoly fac = w / y;
        if (fac.degree() > 0) out.push_back({fac.monic(), i});
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) {
        // only reachable in positive characteristic
        const std::size_t p = f.field().characteristic();
        for (auto& e : squarefree_monic(pth_root(c).monic())) out.push_back({std::move(e.factor), e.multiplicity * p});
    }
    return out;
}

std::vector<FactorEntry> distinct_degree(UniPoly f) {
    std::vector<FactorEntry> out;  // multiplicity slot holds the factor degree
    const Field& fld = f.field();
    const UniPoly x = UniPoly::x(fld);
    UniPoly h = x % f;
    const mpz_class q = to_mpz(fld.order());
    for (std::size_t i = 1; f.degree() >= static_cast<int>(2 * i); ++i) {
        h = powmod(h, q, f);
        UniPoly g = gcd(f, h - x);
        if (g.degree() > 0) {
            out.push_back({g, i});
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.push_back({f.monic(), static_cast<std::size_t>(f.degree())});
    return out;
}

void equal_degree(const UniPoly& f, std::size_t d, Rng& rng, std::vector<UniPoly>& out) {
    if (f.degree() <= static_cast<int>(d)) {
        out.push_back(f.monic());
        return;
    }
    const Field& fld = f.field();
    const std::size_t n = static_cast<std::size_t>(f.degree());
    mpz_class qd;
    mpz_ui_pow_ui(qd.get_mpz_t(), fld.order(), d);
    for (;;) {
        std::vector<Scalar> coeffs;
        for (std::size_t i = 0; i < n; ++i) coeffs.push_back(rng.scalar(fld));
        UniPoly a(fld, std::move(coeffs));
        if (a.degree() < 1) continue;
        UniPoly b(fld);
        if (fld.characteristic() == 2) {
            // absolute trace map F_{q^d} -> F_2
            const std::size_t steps = fld.degree() * d;
            UniPoly t = a % f;
            b = t;
            for (std::size_t j = 1; j < steps; ++j) {
                t = (t * t) % f;
                b += t;
            }
        } else {
            mpz_class e = (qd - 1) / 2;
            b = powmod(a, e, f) - UniPoly::constant(Scalar::one(fld));
        }
        UniPoly g = gcd(f, b);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

bool poly_less(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
        const auto& ca = a.coeffs()[i];
        const auto& cb = b.coeffs()[i];
        if (ca == cb) continue;
        if (ca.field().is_finite()) return ca.code() < cb.code();
        return ca.rational() < cb.rational();
    }
    return false;
}

// Primitive integer polynomial with the same roots as a rational polynomial.
std::vector<mpz_class> integer_form(const UniPoly& f) {
    mpz_class l = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational().get_den().get_mpz_t());
    std::vector<mpz_class> out;
    for (const auto& c : f.coeffs()) out.push_back(mpz_class(c.rational() * l));
    mpz_class g = 0;
    for (const auto& c : out) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g != 0)
        for (auto& c : out) c /= g;
    return out;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
    if (n < 0) n = -n;
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

std::vector<FactorEntry> squarefree_factorization(const UniPoly& f) {
    if (f.is_zero()) fail(ErrorCode::InvalidArgument, "squarefree factorization of the zero polynomial");
    return squarefree_monic(f.monic());
}

std::vector<FactorEntry> poly_factor(const UniPoly& f, std::uint64_t seed) {
    require_finite(f);
    if (f.is_zero()) fail(ErrorCode::InvalidArgument, "factorization of the zero polynomial");
    Rng rng(seed);
    std::vector<FactorEntry> out;
    for (const auto& [sqf, mult] : squarefree_monic(f.monic())) {
        for (const auto& [block, d] : distinct_degree(sqf)) {
            std::vector<UniPoly> pieces;
            equal_degree(block, d, rng, pieces);
            for (auto& piece : pieces) out.push_back({std::move(piece), mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const FactorEntry& a, const FactorEntry& b) {
        if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
        return poly_less(a.factor, b.factor);
    });
    return out;
}

bool is_irreducible(const UniPoly& f) {
    if (f.degree() < 1) return false;
    if (f.field().is_finite()) {
        const auto fac = poly_factor(f);
        return fac.size() == 1 && fac[0].multiplicity == 1;
    }
    if (f.degree() == 1) return true;
    if (f.degree() > 3)
        fail(ErrorCode::UnsupportedField, "irreducibility over Q is decided only up to degree 3");
    return rational_roots(f).empty();
}

std::vector<Scalar> rational_roots(const UniPoly& f) {
    const Field& fld = f.field();
    if (fld.is_finite()) fail(ErrorCode::UnsupportedField, "rational_roots expects a polynomial over Q");
    if (f.is_zero()) fail(ErrorCode::InvalidArgument, "rational_roots of the zero polynomial");
    std::vector<mpq_class> roots;
    auto ints = integer_form(f);
    std::size_t shift = 0;
    while (shift < ints.size() && ints[shift] == 0) ++shift;
    if (shift > 0) roots.emplace_back(0);
    ints.erase(ints.begin(), ints.begin() + static_cast<std::ptrdiff_t>(shift));
    if (ints.size() > 1) {
        const auto nums = positive_divisors(ints.front());
        const auto dens = positive_divisors(ints.back());
        auto eval = [&](const mpq_class& r) {
            mpq_class acc = 0;
            for (std::size_t i = ints.size(); i-- > 0;) acc = acc * r + mpq_class(ints[i]);
            return acc;
        };
        for (const auto& a : nums) {
            for (const auto& b : dens) {
                for (int sign : {1, -1}) {
                    mpq_class r(a * sign, b);
                    r.canonicalize();
                    if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
                    if (eval(r) == 0) roots.push_back(r);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    std::vector<Scalar> out;
    for (const auto& r : roots) out.push_back(Scalar::from_rational(fld, r));
    return out;
}

Factorization factor(const UniPoly& f, std::uint64_t seed) {
    if (f.is_zero()) fail(ErrorCode::InvalidArgument, "factorization of the zero polynomial");
    Factorization out{f.leading(), {}, {}, true};
    if (f.field().is_finite()) {
        out.factors = poly_factor(f, seed);
        out.irreducible.assign(out.factors.size(), true);
        return out;
    }
    const Field& fld = f.field();
    for (const auto& [sqf, mult] : squarefree_monic(f.monic())) {
        UniPoly rest = sqf;
        for (const auto& r : rational_roots(sqf)) {
            UniPoly lin(fld, {-r, Scalar::one(fld)});
            out.factors.push_back({lin, mult});
            out.irreducible.push_back(true);
            rest = rest / lin;
        }
        if (rest.degree() > 0) {
            const bool irr = rest.degree() <= 3;
            out.factors.push_back({rest.monic(), mult});
            out.irreducible.push_back(irr);
            if (!irr) out.complete = false;
        }
    }
    return out;
}

UniPoly find_irreducible(const Field& prime_field, std::size_t degree, std::uint64_t seed) {
    if (prime_field.kind() != FieldKind::Prime)
        fail(ErrorCode::UnsupportedField, "irreducible search expects a prime field");
    if (degree == 0) fail(ErrorCode::InvalidArgument, "irreducible polynomial of degree 0 requested");
    Rng rng(seed);
    for (;;) {
        std::vector<Scalar> coeffs;
        for (std::size_t i = 0; i < degree; ++i) coeffs.push_back(rng.scalar(prime_field));
        coeffs.push_back(Scalar::one(prime_field));
        UniPoly cand(prime_field, std::move(coeffs));
        if (is_irreducible(cand)) return cand;
    }
}

}  // namespace repkit
