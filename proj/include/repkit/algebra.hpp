#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "repkit/field.hpp"
#include "repkit/matrix.hpp"

namespace repkit {

/// One term c * x_{w0} x_{w1} ... of a noncommutative polynomial.
struct Term {
    Scalar coeff;
    std::vector<std::size_t> word;
};

/// Element of the free algebra k<x_0, ..., x_{m-1}>. Terms are kept sorted by
/// (length, lexicographic word), merged, and free of zero coefficients.
class NCPoly {
   public:
    NCPoly() = default;
    explicit NCPoly(std::vector<Term> terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Same polynomial with every word reversed (the opposite algebra).
    NCPoly reversed() const;
    std::string to_string(const std::vector<std::string>& names) const;

    friend bool operator==(const NCPoly& a, const NCPoly& b);

   private:
    std::vector<Term> terms_;
};

struct FreePresentation {
    const Field* field = &Field::rational();
    std::size_t num_generators = 0;
    std::vector<NCPoly> relations;
    std::vector<std::string> names;  // optional display names
};

/// Finite-dimensional algebra given by structure constants. left_mult(i) is
/// the matrix of left multiplication by basis element e_i: its column j holds
/// the coordinates of e_i e_j.
class StructureAlgebra {
   public:
    /// Validates associativity and the unit laws exhaustively.
    StructureAlgebra(const Field& f, std::vector<Mat> left_mult, Mat unit, std::vector<std::string> names = {});

    const Field& field() const noexcept { return *field_; }
    std::size_t dim() const noexcept { return left_mult_.size(); }
    const Mat& left_mult(std::size_t i) const { return left_mult_.at(i); }
    const std::vector<Mat>& left_mults() const noexcept { return left_mult_; }
    /// Coordinates of 1 as a column vector.
    const Mat& unit() const noexcept { return unit_; }
    const std::vector<std::string>& names() const noexcept { return names_; }
    /// Basis elements that generate the algebra together with 1.
    const std::vector<std::size_t>& generators() const noexcept { return generators_; }

    /// Left multiplication by an element given in coordinates.
    Mat left_mult_of(const Mat& a) const;
    Mat product(const Mat& a, const Mat& b) const;
    Mat basis_vector(std::size_t i) const;
    /// Structure constants with the factors swapped.
    StructureAlgebra opposite() const;

    friend bool operator==(const StructureAlgebra& a, const StructureAlgebra& b);

   private:
    const Field* field_;
    std::vector<Mat> left_mult_;
    Mat unit_;
    std::vector<std::string> names_;
    std::vector<std::size_t> generators_;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Either a free presentation k<x_1..x_m>/I or a structure-constant algebra.
class Algebra {
   public:
    explicit Algebra(FreePresentation p);
    explicit Algebra(StructureAlgebra s);

    const Field& field() const noexcept { return *field_; }
    bool is_free() const noexcept { return std::holds_alternative<FreePresentation>(form_); }
    bool is_structure() const noexcept { return !is_free(); }
    const FreePresentation& free() const;
    const StructureAlgebra& structure() const;

    /// Number of action matrices a module carries: generators (free form) or
    /// basis elements (structure form).
    std::size_t action_count() const noexcept;
    /// Indices of the action matrices that determine all others.
    const std::vector<std::size_t>& hom_generators() const noexcept { return hom_generators_; }
    /// Identities the action matrices must satisfy. For structure form these
    /// are e_i e_j - sum c_ij^k e_k for all pairs, then sum u_k e_k - 1.
    const std::vector<NCPoly>& defining_relations() const noexcept { return relations_; }
    std::vector<std::string> relation_labels() const;
    std::vector<std::string> action_names() const;

    AlgebraPtr opposite() const;
    /// Same presentation read over another field (F_p <-> F_{p^r} only).
    AlgebraPtr with_field(const Field& target) const;

    friend bool operator==(const Algebra& a, const Algebra& b);

   private:
    const Field* field_;
    std::variant<FreePresentation, StructureAlgebra> form_;
    std::vector<std::size_t> hom_generators_;
    std::vector<NCPoly> relations_;
};

AlgebraPtr make_algebra(FreePresentation p);
AlgebraPtr make_algebra(StructureAlgebra s);
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

/// Moves a scalar between F_p and F_{p^r} (down only from the prime subfield).
Scalar convert_scalar(const Scalar& s, const Field& target);

struct Arrow {
    std::size_t source = 0;
    std::size_t target = 0;
    std::string name;
};

/// Bound quiver. Relations are NCPolys over arrow indices, written in product
/// order: the word [a, b] is the path "first b, then a". All terms of a
/// relation share source, target and length.
struct QuiverPresentation {
    const Field* field = &Field::rational();
    std::size_t vertices = 0;
    std::vector<Arrow> arrows;
    std::vector<NCPoly> relations;
    std::size_t bound = 8;
};

/// Path algebra modulo relations. Basis: trivial paths, then surviving paths
/// by length; within a length the lexicographically larger paths survive
/// linear elimination. Throws BasisNotFinite when a path of length `bound`
/// survives.
StructureAlgebra quiver_to_structure(const QuiverPresentation& q);

/// n-Kronecker quiver 0 => 1 with arrows named a1..an, as a structure algebra
/// with basis e0, e1, a1, ..., an.
AlgebraPtr kronecker_algebra(const Field& f, std::size_t arrows);

/// Basis coordinates of the Jacobson radical, computed as the kernel of the
/// trace form (a, b) -> tr(L_a L_b). Requires characteristic 0 or > dim.
Mat algebra_radical(const StructureAlgebra& a);

/// Complete orthogonal primitive idempotents summing to 1, read off a
/// Krull-Schmidt decomposition of the regular module.
std::vector<Mat> primitive_idempotents(const AlgebraPtr& a, std::uint64_t seed = kDefaultSeed);

}  // namespace repkit
