#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "repkit/field.hpp"

namespace repkit {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

/// Univariate polynomial over an exact field, coefficients lowest degree first.
/// The zero polynomial has no coefficients.
class UniPoly {
   public:
    explicit UniPoly(const Field& f) : field_(&f) {}
    UniPoly(const Field& f, std::vector<Scalar> coeffs);
    static UniPoly from_ints(const Field& f, const std::vector<long long>& coeffs);
    static UniPoly constant(const Scalar& c);
    static UniPoly x(const Field& f);
    static UniPoly monomial(const Scalar& c, std::size_t degree);

    const Field& field() const noexcept { return *field_; }
    const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    Scalar coeff(std::size_t i) const;
    Scalar leading() const;

    Scalar evaluate(const Scalar& at) const;
    UniPoly monic() const;
    UniPoly derivative() const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Scalar& c);
    UniPoly operator-() const;
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
    friend UniPoly operator*(UniPoly a, const Scalar& c) { return a *= c; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }

    /// Serialized as a coefficient list, e.g. "x^2 + 3*x + 1" for display.
    std::string to_string(const std::string& var = "x") const;

   private:
    void trim();

    const Field* field_;
    std::vector<Scalar> coeffs_;
};

struct DivMod {
    UniPoly quotient;
    UniPoly remainder;
};

DivMod divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
UniPoly operator/(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly pow(const UniPoly& base, std::size_t e);
UniPoly powmod(const UniPoly& base, const mpz_class& e, const UniPoly& modulus);

struct FactorEntry {
    UniPoly factor;
    std::size_t multiplicity;
};

/// Squarefree decomposition: f = lc * prod s_i^i with pairwise coprime monic s_i.
std::vector<FactorEntry> squarefree_factorization(const UniPoly& f);

/// Complete factorization into monic irreducibles over a finite field:
/// squarefree, distinct-degree, then equal-degree splitting.
/// Throws UnsupportedField over Q.
std::vector<FactorEntry> poly_factor(const UniPoly& f, std::uint64_t seed = kDefaultSeed);

/// Irreducibility test over a finite field (via the factorizer); over Q it is
/// decided only up to degree 3 and throws UnsupportedField beyond that.
bool is_irreducible(const UniPoly& f);

/// Every rational root of f (deduplicated, sorted ascending).
std::vector<Scalar> rational_roots(const UniPoly& f);

/// Factorization into pairwise coprime monic pieces. Over finite fields every
/// piece is irreducible. Over Q, linear factors come from rational roots and
/// cofactors of degree 2 or 3 without roots are irreducible; anything larger
/// is returned unsplit and `complete` is false (IncompleteFactorization).
struct Factorization {
    Scalar leading;
    std::vector<FactorEntry> factors;
    std::vector<bool> irreducible;
    bool complete = true;
};

Factorization factor(const UniPoly& f, std::uint64_t seed = kDefaultSeed);

/// Random search for a monic irreducible polynomial of the given degree over F_p.
UniPoly find_irreducible(const Field& prime_field, std::size_t degree, std::uint64_t seed = kDefaultSeed);

}  // namespace repkit
