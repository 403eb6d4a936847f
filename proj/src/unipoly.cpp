#include "repkit/unipoly.hpp"

#include <sstream>

namespace repkit {

UniPoly::UniPoly(const Field& f, std::vector<Scalar> coeffs) : field_(&f), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) check_same_field(f, c.field());
    trim();
}

UniPoly UniPoly::from_ints(const Field& f, const std::vector<long long>& coeffs) {
    std::vector<Scalar> c;
    c.reserve(coeffs.size());
    for (auto v : coeffs) c.push_back(Scalar::from_int(f, v));
    return UniPoly(f, std::move(c));
}

UniPoly UniPoly::constant(const Scalar& c) { return UniPoly(c.field(), {c}); }

UniPoly UniPoly::x(const Field& f) { return UniPoly(f, {Scalar::zero(f), Scalar::one(f)}); }

UniPoly UniPoly::monomial(const Scalar& c, std::size_t degree) {
    std::vector<Scalar> coeffs(degree + 1, Scalar::zero(c.field()));
    coeffs[degree] = c;
    return UniPoly(c.field(), std::move(coeffs));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar UniPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar::zero(*field_); }

Scalar UniPoly::leading() const { return coeffs_.empty() ? Scalar::zero(*field_) : coeffs_.back(); }

Scalar UniPoly::evaluate(const Scalar& at) const {
    check_same_field(*field_, at.field());
    Scalar acc = Scalar::zero(*field_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * at + coeffs_[i];
    return acc;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    UniPoly out = *this;
    out *= leading().inv();
    return out;
}

UniPoly UniPoly::derivative() const {
    std::vector<Scalar> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d.push_back(coeffs_[i] * Scalar::from_int(*field_, static_cast<long long>(i)));
    return UniPoly(*field_, std::move(d));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    check_same_field(*field_, *o.field_);
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar::zero(*field_));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    check_same_field(*field_, *o.field_);
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar::zero(*field_));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
    check_same_field(*field_, *o.field_);
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Scalar> prod(coeffs_.size() + o.coeffs_.size() - 1, Scalar::zero(*field_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(prod);
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Scalar& c) {
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
}

UniPoly UniPoly::operator-() const {
    UniPoly out = *this;
    for (auto& a : out.coeffs_) a = -a;
    return out;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const auto& c = coeffs_[i];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const bool show_coeff = !c.is_one() || i == 0;
        if (show_coeff) os << c.to_string();
        if (i > 0) {
            if (show_coeff) os << '*';
            os << var;
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
    check_same_field(a.field(), b.field());
    if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    const Field& f = a.field();
    if (a.degree() < b.degree()) return {UniPoly(f), a};
    std::vector<Scalar> rem = a.coeffs();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<Scalar> quot(rem.size() - db, Scalar::zero(f));
    const Scalar lead_inv = b.leading().inv();
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k].is_zero()) continue;
        const Scalar q = rem[k] * lead_inv;
        quot[k - db] = q;
        for (std::size_t t = 0; t <= db; ++t) rem[k - db + t] -= q * b.coeffs()[t];
    }
    rem.resize(db);
    return {UniPoly(f, std::move(quot)), UniPoly(f, std::move(rem))};
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).remainder; }
UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).quotient; }

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

UniPoly pow(const UniPoly& base, std::size_t e) {
    UniPoly r = UniPoly::constant(Scalar::one(base.field()));
    UniPoly b = base;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

UniPoly powmod(const UniPoly& base, const mpz_class& e, const UniPoly& modulus) {
    UniPoly r = UniPoly::constant(Scalar::one(base.field())) % modulus;
    const UniPoly b = base % modulus;
    const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = (r * r) % modulus;
        if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * b) % modulus;
    }
    return r;
}

}  // namespace repkit
