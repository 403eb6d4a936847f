#pragma once

#include <vector>

#include "repkit/homcalc.hpp"

namespace repkit {

/// Column basis of J(A) X.
Mat radical_submodule(const ModuleRep& x);

/// Indecomposable projective A e for a primitive idempotent e.
struct Projective {
    Mat idempotent;  // coordinates in A
    ModuleRep module;
    Mat basis;       // columns: basis of A e inside A
};

/// One indecomposable projective per primitive idempotent, in the order of
/// primitive_idempotents.
std::vector<Projective> indecomposable_projectives(const AlgebraPtr& a, std::uint64_t seed = kDefaultSeed);
/// Tops P/JP of pairwise non-isomorphic indecomposable projectives.
std::vector<ModuleRep> simple_modules(const AlgebraPtr& a, std::uint64_t seed = kDefaultSeed);

struct ProjectiveCover {
    ModuleRep cover;                  // direct sum of the chosen projectives
    Mat surjection;                   // dim(X) x dim(cover)
    std::vector<std::size_t> pieces;  // indices into indecomposable_projectives
};

ProjectiveCover projective_cover(const ModuleRep& x, std::uint64_t seed = kDefaultSeed);

/// Omega^n X by successive minimal covers; zero once a projective is reached.
ModuleRep syzygy(const ModuleRep& x, std::size_t n, std::uint64_t seed = kDefaultSeed);

struct PresentationMorphism {
    ModuleRep p1, p0;
    Mat phi;               // dim(p0) x dim(p1)
    bool in_proj2 = false;  // phi is an intertwiner between projectives
    bool in_p1 = false;     // Im phi inside J P0
    bool in_p2 = false;     // additionally ker phi inside J P1
};

/// Recomputes all flags from the data.
PresentationMorphism make_presentation(ModuleRep p1, ModuleRep p0, Mat phi, std::uint64_t seed = kDefaultSeed);
PresentationMorphism minimal_presentation(const ModuleRep& x, std::uint64_t seed = kDefaultSeed);
ModuleRep coker_of_presentation(const PresentationMorphism& pm);

bool is_projective(const ModuleRep& x, std::uint64_t seed = kDefaultSeed);

std::size_t ext_dim(std::size_t n, const ModuleRep& m, const ModuleRep& x, std::uint64_t seed = kDefaultSeed);
/// pd X <= n, tested as Ext^{n+1}(X, S) = 0 for S the sum of the simples.
bool pdim_le(const ModuleRep& x, std::size_t n, std::uint64_t seed = kDefaultSeed);
/// id X <= n, tested as Ext^{n+1}(S, X) = 0.
bool idim_le(const ModuleRep& x, std::size_t n, std::uint64_t seed = kDefaultSeed);

/// X in gen(M): the images of all maps M -> X span X.
bool gen_membership(const ModuleRep& m, const ModuleRep& x);
/// X in cogen(M), computed as gen(D M, D X).
bool cogen_membership(const ModuleRep& m, const ModuleRep& x);

enum class OrthoMode { Hom, Ext };
enum class OrthoSide { Right, Left };

/// Right side: Hom(M, X) = 0 or Ext^n(M, X) = 0. Left side: the same with the
/// arguments exchanged, evaluated through the duality on A^op.
bool hom_ext_orthogonal(const ModuleRep& m, const ModuleRep& x, OrthoMode mode, std::size_t n = 1,
                        OrthoSide side = OrthoSide::Right, std::uint64_t seed = kDefaultSeed);

/// 0 -> L -f-> M -g-> N -> 0
struct SesData {
    ModuleRep l, m, n;
    Mat f, g;
};

/// Throws NotExact naming the failed condition.
void check_exact(const SesData& s);
/// Hom(M, X) -> Hom(L, X), h -> h f, is onto.
bool relative_injectivity(const SesData& s, const ModuleRep& x);

/// Split sequence L -> L + N -> N.
SesData split_sequence(const ModuleRep& l, const ModuleRep& n);

}  // namespace repkit
