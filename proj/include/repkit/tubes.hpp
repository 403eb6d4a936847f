#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "repkit/homological.hpp"

namespace repkit {

/// Matrix with entries in k[x], row-major.
struct PolyMat {
    std::size_t rows = 0, cols = 0;
    std::vector<UniPoly> entries;

    PolyMat(const Field& f, std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, UniPoly(f)) {}
    static PolyMat identity(const Field& f, std::size_t n);
    static PolyMat constant(const Mat& m);

    UniPoly& at(std::size_t r, std::size_t c) { return entries.at(r * cols + c); }
    const UniPoly& at(std::size_t r, std::size_t c) const { return entries.at(r * cols + c); }
    bool is_zero() const;
    /// Substitutes the square matrix j for x; each entry becomes a block.
    Mat substitute(const Mat& j) const;

    friend PolyMat operator*(const PolyMat& a, const PolyMat& b);
    friend PolyMat operator*(const PolyMat& a, const UniPoly& p);
    friend PolyMat operator+(const PolyMat& a, const PolyMat& b);
    friend bool operator==(const PolyMat& a, const PolyMat& b) {
        return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
    }
};

/// A-module structure on B^rank, B = k[x, f^-1]: action g is
/// numerator[g] / f^{den_power[g]}.
class BimoduleFamily {
   public:
    BimoduleFamily(AlgebraPtr algebra, std::size_t rank, std::vector<PolyMat> numerator,
                   std::vector<std::size_t> den_power, UniPoly denominator);

    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    const Field& field() const { return algebra_->field(); }
    std::size_t rank() const noexcept { return rank_; }
    const std::vector<PolyMat>& numerator() const noexcept { return numerator_; }
    const std::vector<std::size_t>& den_power() const noexcept { return den_power_; }
    const UniPoly& denominator() const noexcept { return denominator_; }

    friend bool operator==(const BimoduleFamily& a, const BimoduleFamily& b);

   private:
    AlgebraPtr algebra_;
    std::size_t rank_;
    std::vector<PolyMat> numerator_;
    std::vector<std::size_t> den_power_;
    UniPoly denominator_;
};

/// Rank-2 family over the 2-Kronecker algebra: a1 -> 1, a2 -> x.
BimoduleFamily kronecker_family(const Field& f);

struct FamilyViolation {
    std::size_t index = 0;
    std::string relation;
    PolyMat residual;  // numerator after clearing powers of f
};

struct FamilyReport {
    std::vector<FamilyViolation> violations;
    bool valid() const noexcept { return violations.empty(); }
};

FamilyReport validate_family(const BimoduleFamily& fam);

/// Lower-triangular Jordan block lambda I + N, N the subdiagonal shift.
Mat jordan_block(const Scalar& lambda, std::size_t i);

/// x -> J_i(lambda) in every entry, f(J)^{-1} for the denominator. Basis
/// index of (row r of B^rank, Jordan coordinate t) is r i + t.
ModuleRep specialize(const BimoduleFamily& fam, const Scalar& lambda, std::size_t i);
/// Multiplication by (x - lambda)^{j-i}: X_{lambda,i} -> X_{lambda,j}.
Mat tube_inclusion(const BimoduleFamily& fam, const Scalar& lambda, std::size_t i, std::size_t j);
/// 0 -> X_i -> X_j -> X_{j-i} -> 0 with the quotient identified with
/// specialize(fam, lambda, j - i) by an explicit isomorphism.
SesData tube_ses(const BimoduleFamily& fam, const Scalar& lambda, std::size_t i, std::size_t j,
                 std::uint64_t seed = kDefaultSeed);

/// View a module over A (x) F_{p^r} as a module over A: every entry becomes
/// its r x r multiplication matrix over F_p, column t holding c w^t.
ModuleRep restrict_scalars(const ModuleRep& y);
/// Same matrices read over the extension field.
ModuleRep extend_scalars(const ModuleRep& x, const Field& target);

struct Bt1Row {
    Scalar lambda;
    std::size_t i = 0;
    std::size_t dim = 0;
    std::vector<std::size_t> summand_dims;
    std::vector<std::size_t> class_ids;
    bool certified = false;
    std::string error;  // non-empty when this point failed
};

struct Bt1Report {
    std::uint64_t seed = kDefaultSeed;
    std::vector<Bt1Row> rows;
    std::map<std::size_t, std::size_t> classes_per_dim;  // summand dimension -> isomorphism classes seen
    std::size_t max_dim = 0;
    std::map<std::size_t, std::size_t> max_summand_dim;  // i -> largest summand dimension
    /// module dimension -> rows of that dimension and their pairwise
    /// non-isomorphism (Krull-Schmidt comparison of class multisets)
    std::map<std::size_t, std::vector<std::size_t>> rows_by_dim;
    std::map<std::size_t, std::vector<std::vector<bool>>> non_isomorphic;
    bool unbounded = false;  // max_summand_dim strictly increasing in i
    bool all_indecomposable = false;
    bool all_certified = false;
};

Bt1Report bt1_experiment(const BimoduleFamily& fam, const std::vector<Scalar>& lambdas, std::size_t i_max,
                         std::uint64_t seed = kDefaultSeed);

}  // namespace repkit
