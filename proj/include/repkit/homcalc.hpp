#pragma once

#include <optional>
#include <vector>

#include "repkit/module.hpp"

namespace repkit {

/// Basis of Hom_A(X, Y) as dim(Y) x dim(X) matrices T with T X_g = Y_g T.
std::vector<Mat> hom_basis(const ModuleRep& x, const ModuleRep& y);
bool is_intertwiner(const Mat& t, const ModuleRep& x, const ModuleRep& y);
/// Linear combination sum c_k basis_k.
Mat combine(const std::vector<Mat>& basis, const std::vector<Scalar>& coeffs);

enum class DecompositionStatus { Complete, NotCertified };

/// X = summand_0 + ... + summand_{s-1}. The columns of change_of_basis are
/// the summand bases in order, so change_of_basis^{-1} X_g change_of_basis is
/// block diagonal with the summand actions as blocks.
struct Decomposition {
    std::vector<ModuleRep> summands;
    std::vector<std::vector<Mat>> endomorphisms;  // basis of End of each summand
    std::vector<bool> local;                      // End certified local
    Mat change_of_basis;
    DecompositionStatus status = DecompositionStatus::Complete;
    std::uint64_t seed = kDefaultSeed;

    bool complete() const noexcept { return status == DecompositionStatus::Complete; }
    /// Column offset of summand k inside change_of_basis.
    std::size_t offset(std::size_t k) const;
};

/// Krull-Schmidt decomposition by primary splitting along random
/// endomorphisms. Each final summand is certified indecomposable by exhibiting
/// a nilpotent ideal N of End with End/N a field; summands that resist both
/// splitting and certification are returned as NotCertified.
Decomposition decompose(const ModuleRep& x, std::uint64_t seed = kDefaultSeed);

struct IsoResult {
    bool isomorphic = false;
    std::optional<Mat> witness;  // T with T X_g T^{-1} = Y_g
    bool certified = true;       // false when a negative answer rests on an uncertified decomposition
};

IsoResult is_isomorphic(const ModuleRep& x, const ModuleRep& y, std::uint64_t seed = kDefaultSeed);

/// Isomorphism test between modules whose endomorphism rings are known to be
/// local: complete by testing a Hom basis for an invertible element.
std::optional<Mat> iso_between_indecomposables(const ModuleRep& x, const ModuleRep& y);

bool is_radical_morphism(const Mat& f, const ModuleRep& x, const ModuleRep& y, std::uint64_t seed = kDefaultSeed);

struct HaradaSaiReport {
    std::size_t bound = 0;           // b
    std::size_t vanishing_length;    // 2^b - 1
    std::vector<Mat> prefixes;       // f_k ... f_0 for each k
    std::optional<std::size_t> first_zero;  // number of maps after which the composite vanishes
    bool checked = false;            // chain long enough to test the bound
    bool vanishes = false;           // composite of the first 2^b - 1 maps is zero
};

/// chain[k]: modules[k] -> modules[k+1]. Every map must be a radical morphism
/// between indecomposables of dimension <= bound; PreconditionViolated names
/// the offending index. A nonzero composite of 2^b - 1 maps raises
/// HaradaSaiViolation.
HaradaSaiReport harada_sai_chain_check(const std::vector<Mat>& chain, const std::vector<ModuleRep>& modules,
                                       std::size_t bound, std::uint64_t seed = kDefaultSeed);

/// Standard duality: transposed action over the opposite algebra.
ModuleRep dual_module(const ModuleRep& x);

/// Embedding of modules over the free algebra k<x_1..x_n> into modules over
/// the (n+1)-Kronecker algebra: arrow i acts by X_i, arrow n+1 by 1_X.
ModuleRep kronecker_embed(const ModuleRep& x);

}  // namespace repkit
