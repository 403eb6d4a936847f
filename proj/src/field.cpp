#include "repkit/field.hpp"

#include <algorithm>
#include <charconv>
#include <memory>
#include <mutex>
#include <sstream>

#include "repkit/unipoly.hpp"

namespace repkit {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 62;
constexpr std::uint64_t kTableOrder = std::uint64_t{1} << 16;

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

struct FieldRegistry {
    std::mutex mutex;
    std::vector<std::unique_ptr<Field>> fields;

    static FieldRegistry& instance() {
        static FieldRegistry r;
        return r;
    }

    const Field* find(const FieldSpec& spec) {
        for (const auto& f : fields) {
            if (f->spec() == spec) return f.get();
        }
        return nullptr;
    }

    const Field& insert(FieldSpec spec) {
        fields.push_back(std::unique_ptr<Field>(new Field(std::move(spec))));
        return *fields.back();
    }
};

const Field& Field::get(const FieldSpec& spec) {
    auto& reg = FieldRegistry::instance();
    {
        std::lock_guard lock(reg.mutex);
        if (const Field* f = reg.find(spec)) return *f;
    }
    switch (spec.kind) {
        case FieldKind::Rational:
            if (spec.p != 0 || !spec.modulus.empty())
                fail(ErrorCode::InvalidArgument, "the rational field takes no parameters");
            break;
        case FieldKind::Prime:
            if (!is_prime(spec.p) || spec.p >= kMaxOrder)
                fail(ErrorCode::InvalidArgument, "field characteristic is not a supported prime",
                     {{"p", std::to_string(spec.p)}});
            if (!spec.modulus.empty()) fail(ErrorCode::InvalidArgument, "prime field takes no modulus");
            break;
        case FieldKind::PrimePower: {
            if (!is_prime(spec.p))
                fail(ErrorCode::InvalidArgument, "field characteristic is not prime", {{"p", std::to_string(spec.p)}});
            if (spec.modulus.size() < 3)
                fail(ErrorCode::InvalidArgument, "extension modulus must have degree at least 2");
            if (spec.modulus.back() != 1) fail(ErrorCode::InvalidArgument, "extension modulus must be monic");
            unsigned __int128 q = 1;
            for (std::size_t i = 1; i < spec.modulus.size(); ++i) {
                q *= spec.p;
                if (q >= kMaxOrder) fail(ErrorCode::UnsupportedField, "extension field is too large");
            }
            const Field& base = prime(spec.p);
            std::vector<Scalar> coeffs;
            for (auto c : spec.modulus) {
                if (c >= spec.p) fail(ErrorCode::InvalidArgument, "modulus coefficient out of range");
                coeffs.push_back(Scalar::from_code(base, c));
            }
            if (!is_irreducible(UniPoly(base, std::move(coeffs))))
                fail(ErrorCode::InvalidArgument, "extension modulus is reducible");
            break;
        }
    }
    std::lock_guard lock(reg.mutex);
    if (const Field* f = reg.find(spec)) return *f;
    return reg.insert(spec);
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
    if (spec_.kind == FieldKind::Prime) {
        order_ = spec_.p;
    } else if (spec_.kind == FieldKind::PrimePower) {
        degree_ = spec_.modulus.size() - 1;
        order_ = 1;
        for (std::size_t i = 0; i < degree_; ++i) order_ *= spec_.p;
        if (order_ <= kTableOrder) {
            // log/antilog tables over a primitive element
            const auto divisors = prime_divisors(order_ - 1);
            std::uint64_t g = 0;
            for (std::uint64_t cand = 1; cand < order_; ++cand) {
                bool ok = true;
                for (auto d : divisors) {
                    std::uint64_t e = (order_ - 1) / d;
                    std::uint64_t x = 1;
                    for (std::uint64_t b = cand; e; e >>= 1, b = poly_mul(b, b))
                        if (e & 1) x = poly_mul(x, b);
                    if (x == 1) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    g = cand;
                    break;
                }
            }
            exp_table_.resize(2 * (order_ - 1));
            log_table_.assign(order_, 0);
            std::uint64_t x = 1;
            for (std::uint64_t i = 0; i < order_ - 1; ++i) {
                exp_table_[i] = exp_table_[i + order_ - 1] = static_cast<std::uint32_t>(x);
                log_table_[x] = static_cast<std::uint32_t>(i);
                x = poly_mul(x, g);
            }
        }
    }
}

const Field& Field::prime_subfield() const {
    if (spec_.kind == FieldKind::PrimePower) return prime(spec_.p);
    return *this;
}

std::string Field::name() const {
    switch (spec_.kind) {
        case FieldKind::Rational: return "Q";
        case FieldKind::Prime: return "F" + std::to_string(spec_.p);
        case FieldKind::PrimePower: return "F" + std::to_string(order_);
    }
    return "?";
}

std::vector<std::uint64_t> Field::digits(std::uint64_t code) const {
    std::vector<std::uint64_t> d(degree_);
    for (std::size_t i = 0; i < degree_; ++i) {
        d[i] = code % spec_.p;
        code /= spec_.p;
    }
    return d;
}

std::uint64_t Field::from_digits(const std::vector<std::uint64_t>& digits) const {
    std::uint64_t code = 0;
    for (std::size_t i = digits.size(); i-- > 0;) code = code * spec_.p + digits[i];
    return code;
}

std::uint64_t Field::add(std::uint64_t a, std::uint64_t b) const noexcept {
    const std::uint64_t p = spec_.p;
    if (spec_.kind == FieldKind::Prime) {
        std::uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint64_t out = 0, scale = 1;
    for (std::size_t i = 0; i < degree_; ++i) {
        std::uint64_t s = a % p + b % p;
        if (s >= p) s -= p;
        out += s * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    return out;
}

std::uint64_t Field::neg(std::uint64_t a) const noexcept {
    const std::uint64_t p = spec_.p;
    if (spec_.kind == FieldKind::Prime) return a == 0 ? 0 : p - a;
    std::uint64_t out = 0, scale = 1;
    for (std::size_t i = 0; i < degree_; ++i) {
        std::uint64_t d = a % p;
        out += (d == 0 ? 0 : p - d) * scale;
        a /= p;
        scale *= p;
    }
    return out;
}

std::uint64_t Field::sub(std::uint64_t a, std::uint64_t b) const noexcept { return add(a, neg(b)); }

std::uint64_t Field::poly_mul(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t p = spec_.p;
    const auto da = digits(a), db = digits(b);
    std::vector<std::uint64_t> prod(2 * degree_, 0);
    for (std::size_t i = 0; i < degree_; ++i) {
        if (da[i] == 0) continue;
        for (std::size_t j = 0; j < degree_; ++j)
            prod[i + j] = (prod[i + j] + mulmod(da[i], db[j], p)) % p;
    }
    for (std::size_t k = prod.size(); k-- > degree_;) {
        const std::uint64_t c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (std::size_t t = 0; t < degree_; ++t) {
            const std::uint64_t sub = mulmod(c, spec_.modulus[t], p);
            auto& slot = prod[k - degree_ + t];
            slot = (slot + p - sub) % p;
        }
    }
    prod.resize(degree_);
    return from_digits(prod);
}

std::uint64_t Field::mul(std::uint64_t a, std::uint64_t b) const noexcept {
    if (spec_.kind == FieldKind::Prime) return mulmod(a, b, spec_.p);
    if (a == 0 || b == 0) return 0;
    if (!exp_table_.empty()) return exp_table_[log_table_[a] + log_table_[b]];
    return poly_mul(a, b);
}

std::uint64_t Field::pow(std::uint64_t a, const mpz_class& e) const {
    if (e < 0) return pow(inv(a), -e);
    std::uint64_t r = 1;
    const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = mul(r, r);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, a);
    }
    return r;
}

std::uint64_t Field::inv(std::uint64_t a) const {
    if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero in " + name());
    if (spec_.kind == FieldKind::Prime) return powmod(a, spec_.p - 2, spec_.p);
    if (!exp_table_.empty()) return exp_table_[(order_ - 1 - log_table_[a]) % (order_ - 1)];
    return pow(a, mpz_class(static_cast<unsigned long>(order_ - 2)));
}

void check_same_field(const Field& a, const Field& b) {
    if (&a != &b) fail(ErrorCode::FieldMismatch, "operands live in different fields: " + a.name() + " vs " + b.name());
}

// ---------------------------------------------------------------------------

Scalar::Scalar() : field_(&Field::rational()), value_(mpq_class(0)) {}

Scalar Scalar::zero(const Field& f) { return from_int(f, 0); }
Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, long long v) {
    if (!f.is_finite()) return Scalar(&f, mpq_class(static_cast<signed long>(v)));
    const auto p = static_cast<long long>(f.characteristic());
    long long r = v % p;
    if (r < 0) r += p;
    return Scalar(&f, static_cast<std::uint64_t>(r));
}

Scalar Scalar::from_mpz(const Field& f, const mpz_class& v) {
    if (!f.is_finite()) return Scalar(&f, mpq_class(v));
    return Scalar(&f, static_cast<std::uint64_t>(mpz_fdiv_ui(v.get_mpz_t(), f.characteristic())));
}

Scalar Scalar::from_rational(const Field& f, const mpq_class& v) {
    if (!f.is_finite()) {
        mpq_class q = v;
        q.canonicalize();
        return Scalar(&f, std::move(q));
    }
    Scalar num = from_mpz(f, v.get_num());
    Scalar den = from_mpz(f, v.get_den());
    return num / den;
}

Scalar Scalar::from_code(const Field& f, std::uint64_t code) {
    if (!f.is_finite()) fail(ErrorCode::UnsupportedField, "codes exist only for finite fields");
    if (code >= f.order()) fail(ErrorCode::InvalidArgument, "field element code out of range");
    return Scalar(&f, code);
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

mpz_class parse_integer(std::string_view s) {
    s = trim(s);
    std::string str(s);
    if (!str.empty() && str.front() == '+') str.erase(0, 1);
    if (str.empty() || str == "-") fail(ErrorCode::ParseError, "empty integer");
    for (std::size_t i = (str.front() == '-') ? 1 : 0; i < str.size(); ++i)
        if (str[i] < '0' || str[i] > '9') fail(ErrorCode::ParseError, "malformed integer: " + str);
    return mpz_class(str);
}

}  // namespace

Scalar Scalar::parse(const Field& f, std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '[') {
        if (text.back() != ']') fail(ErrorCode::ParseError, "unterminated coefficient list");
        std::string_view body = text.substr(1, text.size() - 2);
        std::vector<mpz_class> parts;
        while (!trim(body).empty()) {
            auto comma = body.find(',');
            parts.push_back(parse_integer(body.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            body.remove_prefix(comma + 1);
        }
        if (f.kind() != FieldKind::PrimePower) {
            if (parts.size() > 1) fail(ErrorCode::ParseError, "coefficient list given for a non-extension field");
            return parts.empty() ? zero(f) : from_mpz(f, parts[0]);
        }
        if (parts.size() > f.degree()) fail(ErrorCode::ParseError, "coefficient list longer than extension degree");
        std::vector<std::uint64_t> digits(f.degree(), 0);
        for (std::size_t i = 0; i < parts.size(); ++i) digits[i] = from_mpz(f.prime_subfield(), parts[i]).code();
        return Scalar(&f, f.from_digits(digits));
    }
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return from_mpz(f, parse_integer(text));
    mpz_class num = parse_integer(text.substr(0, slash));
    mpz_class den = parse_integer(text.substr(slash + 1));
    if (den == 0) fail(ErrorCode::DivisionByZero, "zero denominator in " + std::string(text));
    return from_rational(f, mpq_class(num, den));
}

bool Scalar::is_zero() const noexcept {
    if (auto c = std::get_if<std::uint64_t>(&value_)) return *c == 0;
    return std::get<mpq_class>(value_) == 0;
}

bool Scalar::is_one() const noexcept {
    if (auto c = std::get_if<std::uint64_t>(&value_)) return *c == 1;
    return std::get<mpq_class>(value_) == 1;
}

void Scalar::check_same(const Scalar& o) const { check_same_field(*field_, *o.field_); }

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same(o);
    if (field_->is_finite())
        value_ = field_->add(code(), o.code());
    else
        std::get<mpq_class>(value_) += o.rational();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same(o);
    if (field_->is_finite())
        value_ = field_->sub(code(), o.code());
    else
        std::get<mpq_class>(value_) -= o.rational();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same(o);
    if (field_->is_finite())
        value_ = field_->mul(code(), o.code());
    else
        std::get<mpq_class>(value_) *= o.rational();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_same(o);
    return *this *= o.inv();
}

Scalar Scalar::operator-() const {
    if (field_->is_finite()) return Scalar(field_, field_->neg(code()));
    return Scalar(field_, mpq_class(-rational()));
}

Scalar Scalar::inv() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "division by zero in " + field_->name());
    if (field_->is_finite()) return Scalar(field_, field_->inv(code()));
    return Scalar(field_, mpq_class(1 / rational()));
}

Scalar Scalar::pow(const mpz_class& e) const {
    if (field_->is_finite()) {
        if (e < 0 && is_zero()) fail(ErrorCode::DivisionByZero, "negative power of zero");
        return Scalar(field_, field_->pow(code(), e));
    }
    if (e < 0) return inv().pow(mpz_class(-e));
    mpq_class r = 1, b = rational();
    const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r *= r;
        if (mpz_tstbit(e.get_mpz_t(), i)) r *= b;
    }
    return Scalar(field_, std::move(r));
}

Scalar Scalar::pow(long long e) const { return pow(mpz_class(static_cast<signed long>(e))); }

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) return false;
    return a.value_ == b.value_;
}

std::string Scalar::to_string() const {
    switch (field_->kind()) {
        case FieldKind::Rational: {
            const auto& q = rational();
            if (q.get_den() == 1) return q.get_num().get_str();
            return q.get_num().get_str() + "/" + q.get_den().get_str();
        }
        case FieldKind::Prime: return std::to_string(code());
        case FieldKind::PrimePower: {
            std::ostringstream os;
            os << '[';
            const auto d = field_->digits(code());
            for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
            os << ']';
            return os.str();
        }
    }
    return {};
}

}  // namespace repkit
