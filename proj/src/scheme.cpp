#include "repkit/scheme.hpp"

#include <algorithm>

#include "repkit/homcalc.hpp"

namespace repkit {

Monomial monomial_product(const Monomial& a, const Monomial& b) {
    Monomial out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

MultiPoly MultiPoly::constant(const Scalar& c) {
    MultiPoly p(c.field());
    p.add_term({}, c);
    return p;
}

MultiPoly MultiPoly::variable(const Field& f, std::uint32_t index) {
    MultiPoly p(f);
    p.add_term({{index, 1}}, Scalar::one(f));
    return p;
}

std::size_t MultiPoly::degree() const {
    std::size_t d = 0;
    for (const auto& [m, c] : terms_) {
        std::size_t k = 0;
        for (const auto& [v, e] : m) k += e;
        d = std::max(d, k);
    }
    return d;
}

void MultiPoly::add_term(const Monomial& m, const Scalar& c) {
    check_same_field(*field_, c.field());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Scalar MultiPoly::evaluate(const std::vector<Scalar>& point) const {
    Scalar sum = Scalar::zero(*field_);
    for (const auto& [m, c] : terms_) {
        Scalar term = c;
        for (const auto& [v, e] : m) term *= point.at(v).pow(static_cast<long long>(e));
        sum += term;
    }
    return sum;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    // highest degree first reads more naturally
    std::vector<std::pair<Monomial, Scalar>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        std::size_t da = 0, db = 0;
        for (const auto& [v, e] : a.first) da += e;
        for (const auto& [v, e] : b.first) db += e;
        return da > db;
    });
    for (const auto& [m, c] : ordered) {
        std::string coeff = c.to_string();
        bool negative = !coeff.empty() && coeff[0] == '-';
        if (negative) coeff.erase(0, 1);
        if (first) {
            if (negative) s += "-";
        } else {
            s += negative ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (const auto& [v, e] : m) {
            if (!mono.empty()) mono += "*";
            mono += names.at(v);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            s += coeff;
        } else if (coeff == "1") {
            s += mono;
        } else {
            s += (coeff.front() == '[' ? "(" + coeff + ")" : coeff) + "*" + mono;
        }
    }
    return s;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out(*a.field_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(monomial_product(ma, mb), ca * cb);
    return out;
}

MultiPoly operator*(MultiPoly a, const Scalar& c) {
    if (c.is_zero()) return MultiPoly(*a.field_);
    for (auto& [m, v] : a.terms_) v *= c;
    return a;
}

namespace {

using PolyMatrix = std::vector<MultiPoly>;  // row-major n x n

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b, std::size_t n, const Field& f) {
    PolyMatrix out(n * n, MultiPoly(f));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) {
            const MultiPoly& x = a[r * n + k];
            if (x.is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c)
                if (!b[k * n + c].is_zero()) out[r * n + c] += x * b[k * n + c];
        }
    return out;
}

}  // namespace

SchemeEquations module_scheme_equations(const AlgebraPtr& a, std::size_t n) {
    if (n == 0) fail(ErrorCode::InvalidArgument, "module dimension must be positive");
    const Field& f = a->field();
    const std::size_t m = a->action_count();
    SchemeEquations eqs;
    eqs.algebra = a;
    eqs.n = n;
    std::vector<PolyMatrix> generic;
    for (std::size_t g = 0; g < m; ++g) {
        PolyMatrix mat;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                const auto index = static_cast<std::uint32_t>(g * n * n + r * n + c);
                eqs.variables.push_back("t_" + std::to_string(g) + "_" + std::to_string(r) + "_" + std::to_string(c));
                mat.push_back(MultiPoly::variable(f, index));
            }
        generic.push_back(std::move(mat));
    }
    PolyMatrix identity(n * n, MultiPoly(f));
    for (std::size_t r = 0; r < n; ++r) identity[r * n + r] = MultiPoly::constant(Scalar::one(f));

    const auto labels = a->relation_labels();
    const auto& relations = a->defining_relations();
    for (std::size_t k = 0; k < relations.size(); ++k) {
        PolyMatrix sum(n * n, MultiPoly(f));
        for (const auto& t : relations[k].terms()) {
            PolyMatrix prod = identity;
            for (auto g : t.word) prod = multiply(prod, generic[g], n, f);
            for (std::size_t e = 0; e < n * n; ++e) sum[e] += prod[e] * t.coeff;
        }
        for (std::size_t e = 0; e < n * n; ++e) {
            eqs.equations.push_back(std::move(sum[e]));
            eqs.labels.push_back(labels[k] + " [" + std::to_string(e / n) + "," + std::to_string(e % n) + "]");
        }
    }
    return eqs;
}

std::string equations_text(const SchemeEquations& eqs) {
    std::string out;
    for (const auto& e : eqs.equations) out += e.to_string(eqs.variables) + "\n";
    return out;
}

std::vector<Scalar> evaluate_point(const SchemeEquations& eqs, const std::vector<Mat>& action) {
    const std::size_t n = eqs.n;
    if (action.size() != eqs.algebra->action_count()) fail(ErrorCode::ShapeMismatch, "wrong number of matrices");
    std::vector<Scalar> point;
    for (const auto& m : action) {
        if (m.rows() != n || m.cols() != n) fail(ErrorCode::ShapeMismatch, "point matrix is not n x n");
        check_same_field(eqs.algebra->field(), m.field());
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) point.push_back(m.at(r, c));
    }
    std::vector<Scalar> out;
    for (const auto& e : eqs.equations) out.push_back(e.evaluate(point));
    return out;
}

std::size_t stabilizer_dimension(const ModuleRep& x) { return hom_basis(x, x).size(); }

OrbitData orbit_data(const ModuleRep& x) {
    const std::size_t stab = stabilizer_dimension(x);
    return {stab, x.dim() * x.dim() - stab};
}

bool same_orbit(const ModuleRep& x, const ModuleRep& y, std::uint64_t seed) {
    check_same_algebra(x, y);
    if (x.dim() != y.dim()) fail(ErrorCode::DimensionMismatch, "points of different module schemes");
    return is_isomorphic(x, y, seed).isomorphic;
}

}  // namespace repkit
