#pragma once

#include "gha/core/complex.hpp"
#include "gha/dgla/gc_algebra.hpp"
#include "gha/dgla/lie.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gha {

// Finite DG Lie algebra. The bracket table holds every ordered pair with a
// nonzero bracket, so antisymmetry failures stay representable and checkable.
struct DGLieAlgebra {
    SpacePtr space;
    std::map<std::pair<int, int>, SVec> table;
    GradedMap d;

    int dim() const { return space->dim(); }
    SVec bracket_basis(int i, int j) const;
    SVec bracket(const SVec& x, const SVec& y) const;
    int degree_of(const SVec& x) const;  // throws InputError unless homogeneous and nonzero
};

struct DGLAReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Checks d^2, degrees, antisymmetry, Jacobi and Leibniz on all basis tuples.
DGLAReport verify_dgla(const DGLieAlgebra& L);

DGLieAlgebra lie_as_dgla(const LieAlgebra& g);

// Endomorphisms of V with the graded commutator and d f = dV f - (-1)^|f| f dV.
// Basis element index r * dim + c is the elementary map e_c -> e_r.
DGLieAlgebra end_dgla(const CochainComplex& V);
GradedMap end_element_to_map(const CochainComplex& V, const SVec& x, int degree);
SVec map_to_end_element(const GradedMap& f);

// A ⊗ L for a commutative DG algebra A; basis index a * dim L + x.
DGLieAlgebra tensor_dgla(const GDGAlgebra& A, const DGLieAlgebra& L);

// Tg = ↓g ⊕ g: indices 0..n-1 are i(e_a) (degree -1), n..2n-1 are L(e_a).
DGLieAlgebra tg(const LieAlgebra& g);

struct MCResult {
    bool ok = false;
    SVec residual;
};

// dx + ½[x,x]; x must be homogeneous of degree 1 (zero is accepted).
MCResult mc_check(const DGLieAlgebra& L, const SVec& x);

// e^{ad η} x - Σ_k (ad η)^k dη / (k+1)! for a degree-0 η with ad η nilpotent.
// Throws InputError if the series has not terminated after `max_terms` terms.
SVec gauge_action(const DGLieAlgebra& L, const SVec& eta, const SVec& x, int max_terms = 64);

}  // namespace gha
