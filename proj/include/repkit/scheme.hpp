#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "repkit/module.hpp"

namespace repkit {

/// Sparse monomial: (variable index, exponent) pairs sorted by variable.
using Monomial = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

Monomial monomial_product(const Monomial& a, const Monomial& b);

/// Polynomial in commuting variables with exact coefficients.
class MultiPoly {
   public:
    explicit MultiPoly(const Field& f) : field_(&f) {}
    static MultiPoly constant(const Scalar& c);
    static MultiPoly variable(const Field& f, std::uint32_t index);

    const Field& field() const noexcept { return *field_; }
    const std::map<Monomial, Scalar>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t degree() const;
    void add_term(const Monomial& m, const Scalar& c);

    Scalar evaluate(const std::vector<Scalar>& point) const;
    std::string to_string(const std::vector<std::string>& names) const;

    MultiPoly& operator+=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Scalar& c);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

   private:
    const Field* field_;
    std::map<Monomial, Scalar> terms_;
};

/// Entries of p(M_1, ..., M_m) for generic n x n matrices M_g whose entry
/// (r, c) is the variable t_g_r_c with index g n^2 + r n + c. Every defining
/// relation contributes its n^2 entries in row-major order, zero entries
/// included, so equations line up with relation_residuals.
struct SchemeEquations {
    AlgebraPtr algebra;
    std::size_t n = 0;
    std::vector<std::string> variables;
    std::vector<MultiPoly> equations;
    std::vector<std::string> labels;  // relation label and entry, e.g. "x*y - y*x [0,1]"
};

SchemeEquations module_scheme_equations(const AlgebraPtr& a, std::size_t n);
/// One polynomial per line.
std::string equations_text(const SchemeEquations& eqs);

/// Residual of every equation at the point given by the action matrices.
std::vector<Scalar> evaluate_point(const SchemeEquations& eqs, const std::vector<Mat>& action);

std::size_t stabilizer_dimension(const ModuleRep& x);

struct OrbitData {
    std::size_t stab_dim = 0;
    std::size_t orbit_dim = 0;
};
OrbitData orbit_data(const ModuleRep& x);
bool same_orbit(const ModuleRep& x, const ModuleRep& y, std::uint64_t seed = kDefaultSeed);

}  // namespace repkit
