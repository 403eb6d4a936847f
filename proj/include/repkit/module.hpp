#pragma once

#include <string>
#include <vector>

#include "repkit/algebra.hpp"

namespace repkit {

/// Finite-dimensional module: one n x n action matrix per generator (free
/// form) or per basis element (structure form). Shapes are checked on
/// construction; the relations are not (see validate_module).
class ModuleRep {
   public:
    ModuleRep() = default;
    ModuleRep(AlgebraPtr algebra, std::size_t dim, std::vector<Mat> action);

    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    const Field& field() const { return algebra_->field(); }
    std::size_t dim() const noexcept { return dim_; }
    const std::vector<Mat>& action() const noexcept { return action_; }
    const Mat& act(std::size_t i) const { return action_.at(i); }
    /// Action of an algebra element given in basis coordinates (structure form).
    Mat act_element(const Mat& coords) const;

    friend bool operator==(const ModuleRep& a, const ModuleRep& b);

   private:
    AlgebraPtr algebra_;
    std::size_t dim_ = 0;
    std::vector<Mat> action_;
};

/// p(M_1, ..., M_m) for n x n matrices; the word [a, b] evaluates to M_a M_b.
Mat evaluate_ncpoly(const NCPoly& p, const std::vector<Mat>& mats, const Field& f, std::size_t n);

struct Violation {
    std::size_t index = 0;
    std::string relation;
    Mat residual;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool valid() const noexcept { return violations.empty(); }
};

/// Residual matrix of every defining relation, in order.
std::vector<Mat> relation_residuals(const ModuleRep& x);
ValidationReport validate_module(const ModuleRep& x);
/// Throws InvalidArgument unless x satisfies all relations.
void require_valid(const ModuleRep& x, const char* what = "module");

void check_same_algebra(const ModuleRep& x, const ModuleRep& y);

ModuleRep zero_module(const AlgebraPtr& a);
/// Left regular module of a structure algebra.
ModuleRep regular_module(const AlgebraPtr& a);
ModuleRep direct_sum(const ModuleRep& x, const ModuleRep& y);
ModuleRep direct_sum(const std::vector<ModuleRep>& parts, const AlgebraPtr& a);
/// Module with action P^{-1} X_g P (P invertible, columns = new basis).
ModuleRep change_basis(const ModuleRep& x, const Mat& p);
/// Module with action P X_g P^{-1}; P is then an isomorphism x -> result.
ModuleRep conjugate(const ModuleRep& x, const Mat& p);

/// Submodule spanned by the (independent) columns of `basis`, in that basis.
/// Throws InvalidArgument when the span is not invariant.
ModuleRep submodule(const ModuleRep& x, const Mat& basis);

struct Quotient {
    ModuleRep module;
    Mat projection;                   // dim(quotient) x dim(x)
    std::vector<std::size_t> kept;    // coordinates of x forming the complement basis
};

/// X / U for the invariant subspace U spanned by the columns of `sub`. The
/// complement basis is the set of coordinates that are not pivots of U's
/// echelon form.
Quotient quotient_module(const ModuleRep& x, const Mat& sub);

/// Smallest submodule containing the columns of `vectors` (column basis).
Mat generated_submodule(const ModuleRep& x, const Mat& vectors);

}  // namespace repkit
