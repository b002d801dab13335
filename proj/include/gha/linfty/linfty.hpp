#pragma once

#include "gha/dgla/dgla.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace gha {

// Sorted multiset of letter indices; a basis word of ⊙(↓L).
using SymWord = std::vector<int>;
using WordVec = std::map<SymWord, Q>;

void add_word(WordVec& v, const SymWord& w, const Q& c);

// ⊙^{≤W}(↓L). Letter i is ↓ of the i-th basis vector of L, of degree |x_i| - 1.
class SymCoalgebra {
public:
    SymCoalgebra() = default;
    SymCoalgebra(SpacePtr L, int max_length);

    int max_length() const { return W_; }
    int num_letters() const { return static_cast<int>(deg_.size()); }
    int letter_degree(int i) const { return deg_[i]; }
    int word_degree(const SymWord& w) const;
    const std::vector<SymWord>& basis() const { return basis_; }  // lengths 0..W
    std::string label(const SymWord& w) const;

    // Canonical form of a letter sequence: sorted word and Koszul sign, or sign 0
    // when an odd letter repeats.
    std::pair<SymWord, int> canonical(const std::vector<int>& seq) const;

    // Σ over (i,j)-shuffles, as a list of (front, back, coefficient).
    struct Split {
        SymWord front, back;
        Q coef;
    };
    std::vector<Split> coproduct(const SymWord& w) const;

    // Symmetric product of two elements (no truncation).
    WordVec product(const WordVec& x, const WordVec& y) const;

private:
    SpacePtr L_;
    int W_ = 0;
    std::vector<int> deg_;
    std::vector<SymWord> basis_;
};

// Coderivation encoding d and the bracket of L, on a single basis word.
WordVec coderivation(const DGLieAlgebra& L, const SymCoalgebra& C, const SymWord& w);
WordVec coderivation(const DGLieAlgebra& L, const SymCoalgebra& C, const WordVec& x);

// Components of a degree-0 map ⊙^{≥1}(↓L) → ↓L', keyed by canonical word.
using Components = std::map<SymWord, SVec>;

// Coalgebra map determined by φ, evaluated on one word of the source.
WordVec coalgebra_lift(const Components& phi, const SymCoalgebra& src, const SymCoalgebra& tgt, const SymWord& w);
WordVec coalgebra_lift(const Components& phi, const SymCoalgebra& src, const SymCoalgebra& tgt, const WordVec& x);

struct LInftyMorphism {
    DGLieAlgebra source, target;
    int max_length = 1;
    Components phi;
};

struct LInftyReport {
    bool ok = true;
    std::string failing_word;  // empty when ok
};

// Φ̄∘D = D'∘Φ̄ on every basis word of length 1..W; also checks Φ has degree 0.
LInftyReport linfty_check(const LInftyMorphism& f);

// Strict morphism from a degree-0 linear map L -> L' (columns in L' basis).
LInftyMorphism strict_morphism(const DGLieAlgebra& L, const DGLieAlgebra& Lp, const std::vector<SVec>& images,
                               int max_length);

// Dual of (⊙^{≤W}(↓L), D) as a graded commutative algebra truncated by word length.
// Generator g is the functional dual to letter g, of degree 1 - |x_g|, and
// δξ = (-1)^{|ξ|} ξ∘D.
struct CEOfDGLA {
    DGLieAlgebra L;
    SymCoalgebra C;
    GDGPtr A;
    std::vector<SymWord> word_of;      // per monomial index
    std::vector<Q> pairing;         // <monomial, its word>
    std::map<SymWord, int> monomial_of;
};

CEOfDGLA ce_of_dgla(const DGLieAlgebra& L, int max_length);

// Identification of [CE(L) ⊗ L']^1 (as tensor_dgla(*ce.A, L')) with degree-0
// maps ⊙^{≥1}(↓L) → ↓L'. Throws InputError on degree mismatch or a component
// on the empty word.
LInftyMorphism mc_to_linfty(const CEOfDGLA& ce, const DGLieAlgebra& Lp, const SVec& alpha);
SVec linfty_to_mc(const CEOfDGLA& ce, const LInftyMorphism& f);

}  // namespace gha
