#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "repkit/error.hpp"

namespace repkit {

enum class FieldKind { Rational, Prime, PrimePower };

/// Names a ground field: Q, F_p, or F_p[t]/(modulus).
///
/// The modulus is stored lowest degree first, monic, with residues in [0, p).
struct FieldSpec {
    FieldKind kind = FieldKind::Rational;
    std::uint64_t p = 0;
    std::vector<std::uint64_t> modulus;

    static FieldSpec rational() { return {}; }
    static FieldSpec prime(std::uint64_t p) { return {FieldKind::Prime, p, {}}; }
    static FieldSpec prime_power(std::uint64_t p, std::vector<std::uint64_t> modulus) {
        return {FieldKind::PrimePower, p, std::move(modulus)};
    }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n) noexcept;

/// An interned field. Instances live for the whole process; compare by address.
///
/// Elements of finite fields are encoded as integers ("codes"): a residue for
/// F_p, and for F_{p^r} the base-p packing sum c_i p^i of the residue
/// polynomial's coefficients. The raw operations below act on codes.
class Field {
   public:
    /// Validates `spec` (primality, irreducible monic modulus) and returns the
    /// shared instance.
    static const Field& get(const FieldSpec& spec);
    static const Field& rational() { return get(FieldSpec::rational()); }
    static const Field& prime(std::uint64_t p) { return get(FieldSpec::prime(p)); }

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    const FieldSpec& spec() const noexcept { return spec_; }
    FieldKind kind() const noexcept { return spec_.kind; }
    bool is_finite() const noexcept { return spec_.kind != FieldKind::Rational; }
    std::uint64_t characteristic() const noexcept { return spec_.p; }
    /// Extension degree over the prime field; 1 for Q and F_p.
    std::size_t degree() const noexcept { return degree_; }
    /// Number of elements (finite fields only).
    std::uint64_t order() const noexcept { return order_; }
    /// The prime subfield (Q for Q).
    const Field& prime_subfield() const;
    std::string name() const;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept;
    std::uint64_t neg(std::uint64_t a) const noexcept;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept;
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t pow(std::uint64_t a, const mpz_class& e) const;

    /// Coefficients (length degree()) of a PrimePower code.
    std::vector<std::uint64_t> digits(std::uint64_t code) const;
    std::uint64_t from_digits(const std::vector<std::uint64_t>& digits) const;

   private:
    explicit Field(FieldSpec spec);
    friend struct FieldRegistry;

    std::uint64_t poly_mul(std::uint64_t a, std::uint64_t b) const;

    FieldSpec spec_;
    std::size_t degree_ = 1;
    std::uint64_t order_ = 0;
    std::vector<std::uint32_t> exp_table_;
    std::vector<std::uint32_t> log_table_;
};

/// Exact field element. Canonical form per field: reduced fraction with
/// positive denominator, residue in [0, p), or packed residue polynomial.
class Scalar {
   public:
    Scalar();
    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar from_int(const Field& f, long long v);
    static Scalar from_mpz(const Field& f, const mpz_class& v);
    static Scalar from_rational(const Field& f, const mpq_class& v);
    /// Finite fields only: wraps an already-canonical code.
    static Scalar from_code(const Field& f, std::uint64_t code);
    /// Parses the serialized form ("a/b", residue, or "[c0,c1,...]").
    static Scalar parse(const Field& f, std::string_view text);

    const Field& field() const noexcept { return *field_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    std::uint64_t code() const { return std::get<std::uint64_t>(value_); }
    const mpq_class& rational() const { return std::get<mpq_class>(value_); }

    Scalar inv() const;
    Scalar pow(const mpz_class& e) const;
    Scalar pow(long long e) const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar operator-() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Serialized form.
    std::string to_string() const;

   private:
    Scalar(const Field* f, std::uint64_t code) : field_(f), value_(code) {}
    Scalar(const Field* f, mpq_class q) : field_(f), value_(std::move(q)) {}
    void check_same(const Scalar& o) const;

    const Field* field_;
    std::variant<std::uint64_t, mpq_class> value_;
};

void check_same_field(const Field& a, const Field& b);

}  // namespace repkit
