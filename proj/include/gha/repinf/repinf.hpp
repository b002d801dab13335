#pragma once

#include "gha/core/complex.hpp"

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace gha {

// Finite simplicial set truncated at dimension pmax. face[p][x][i] = d_i(x) for
// x ∈ K_p (p >= 1); degen[p][x][i] = s_i(x) ∈ K_{p+1} for p < pmax.
struct SimplicialSet {
    std::string name;
    int pmax = 0;
    std::vector<int> count;                                  // |K_p|
    std::vector<std::vector<std::vector<int>>> face, degen;
    std::vector<std::vector<std::string>> labels;
    std::vector<std::vector<char>> degenerate_flag;
    // vertex sequence of each simplex when K is an ordered complex, else empty
    std::vector<std::vector<std::vector<int>>> sequences;

    int size(int p) const { return count[p]; }
    int d(int p, int i, int x) const { return face[p][x][i]; }
    int s(int p, int i, int x) const { return degen[p][x][i]; }
    bool degenerate(int p, int x) const { return degenerate_flag[p][x] != 0; }
    // Recomputes degenerate_flag from the degeneracy tables.
    void finalize();

    int front(int p, int x, int q) const;   // first q+1 vertices
    int back(int p, int x, int q) const;    // last q+1 vertices
    int vertex(int p, int x, int k) const;  // k-th vertex
};

// Violated identities (empty when simplicial).
std::vector<std::string> simplicial_failures(const SimplicialSet& K);

using SSetPtr = std::shared_ptr<const SimplicialSet>;

// Nondecreasing vertex sequences on {0..n}.
SSetPtr standard_simplex(int n, int pmax);
// Sequences whose vertex set is not all of {0,1,2}.
SSetPtr boundary_triangle(int pmax);
// Nerve of the group Z/m.
SSetPtr cyclic_nerve(int m, int pmax);
// Nondecreasing sequences on {0..n-1} whose vertex sets lie in one of the facets.
SSetPtr ordered_complex(int n, const std::vector<std::vector<int>>& facets, int pmax, std::string name = "");

struct SimplicialMap {
    SSetPtr source, target;
    std::vector<std::vector<int>> f;  // f[p][x]
};

std::vector<std::string> simplicial_map_failures(const SimplicialMap& f);
// Map determined by a vertex map on ordered complexes (sequences mapped entrywise).
SimplicialMap vertex_map(const SSetPtr& K, const SSetPtr& L, const std::vector<int>& on_vertices);
SimplicialMap identity_map(const SSetPtr& K);

// A degree-p cochain with values in linear maps: value[x] for x ∈ K_p.
struct Cochain {
    int p = 0;
    std::vector<GradedMap> value;
};

Cochain cup(const SimplicialSet& K, const Cochain& F, const Cochain& G);

struct RepUpToHomotopy {
    SSetPtr K;
    std::vector<SpacePtr> E;   // per vertex
    std::vector<Cochain> F;    // F[p] for p = 0..pmax, F_p(x): E_{v_p} -> E_{v_0}, degree 1-p
};

struct RuthResult {
    bool ok = true;
    int p = -1, x = -1;
};

// Typing of all values (sources, targets, degrees).
std::vector<std::string> rep_shape_failures(const RepUpToHomotopy& R);
RuthResult ruth_check(const RepUpToHomotopy& R);
// F_1 is the identity on degenerate edges and F_p vanishes on degenerate p-simplices for p >= 2.
bool is_normalized(const RepUpToHomotopy& R);

struct RepMorphism {
    int degree = 0;
    std::vector<Cochain> phi;  // phi[p](x): E_{v_p} -> E'_{v_0}, degree n-p
};

RepMorphism zero_rep_morphism(const RepUpToHomotopy& R, const RepUpToHomotopy& Rp, int n);
RepMorphism identity_rep_morphism(const RepUpToHomotopy& R);
RepMorphism rep_hom_differential(const RepUpToHomotopy& R, const RepUpToHomotopy& Rp, const RepMorphism& phi);
// Throws InputError if the middle representations differ.
RepMorphism compose_rep_morphisms(const RepUpToHomotopy& middle, const RepMorphism& psi, const RepMorphism& phi);
RepMorphism operator+(const RepMorphism& a, const RepMorphism& b);
RepMorphism operator-(const RepMorphism& a, const RepMorphism& b);
bool operator==(const RepMorphism& a, const RepMorphism& b);
bool is_zero(const RepMorphism& a);

// Throws InputError if f is not simplicial or the fibers do not match.
RepUpToHomotopy pullback(const SimplicialMap& f, const RepUpToHomotopy& R);
RepMorphism pullback(const SimplicialMap& f, const RepMorphism& phi);

// Random normalized representation on an ordered complex of dimension <= 2:
// random complexes at vertices, random chain maps on edges, random homotopies on
// triangles with the long edge solved from the p = 2 relation. Throws InputError
// when a long edge is shared or the complex has nondegenerate 3-simplices.
RepUpToHomotopy random_rep(const SSetPtr& K, std::mt19937_64& rng, int max_fiber = 2);
RepMorphism random_rep_morphism(const RepUpToHomotopy& R, const RepUpToHomotopy& Rp, int n, std::mt19937_64& rng);

}  // namespace gha
