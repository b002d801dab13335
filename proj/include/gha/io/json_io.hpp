#pragma once

#include "gha/core/complex.hpp"
#include "gha/dgcat/dgcat.hpp"
#include "gha/dgla/dgla.hpp"
#include "gha/repinf/repinf.hpp"
#include "gha/weil/weil.hpp"

#include "json.hpp"

#include <string>

namespace gha {

using Json = nlohmann::ordered_json;

// Throws InputError with the parser diagnostic.
Json load_json_file(const std::string& path);
Json parse_json_text(const std::string& text);

// Rationals are "num/den" strings; plain integers are also accepted on input.
Q rational_from_json(const Json& j);
Json rational_to_json(const Q& q);

Json space_to_json(const GradedSpace& V);
SpacePtr space_from_json(const Json& j);
// {"degree": k, "entries": [{"row", "col", "value"}]}
Json map_to_json(const GradedMap& f);
GradedMap map_from_json(const Json& j, const SpacePtr& source, const SpacePtr& target);
Json complex_to_json(const CochainComplex& c);
CochainComplex complex_from_json(const Json& j);
Json svec_to_json(const SVec& v, const GradedSpace& V);
SVec svec_from_json(const Json& j, const GradedSpace& V);

// Lie algebra files. Only one of [e_a,e_b], [e_b,e_a] needs to be listed; the
// other is filled in by antisymmetry. Validity is not enforced here.
LieAlgebra lie_from_json(const Json& j);
Json lie_to_json(const LieAlgebra& g);

// kind: simplex {n}, boundary_triangle, cyclic_nerve {m}, ordered_complex
// {vertices, facets}, or tables {count, faces, degeneracies[, labels]}; all take pmax.
SSetPtr sset_from_json(const Json& j, int pmax_override = -1);
Json sset_to_json(const SimplicialSet& K);

// Fibers per vertex and components {p, simplex (label or index), entries}.
// Unlisted F_1 on degenerate edges default to the identity, everything else to zero.
RepUpToHomotopy rep_from_json(const Json& j, const SSetPtr& K);
Json rep_to_json(const RepUpToHomotopy& R);

// Explicit tables {objects, homs, compositions, identities} or {complexes: [...]}.
DGCatPtr dgcat_from_json(const Json& j);
Json dgcat_to_json(const DGCategory& C);

FilteredComplex filtered_from_json(const Json& j);
Json filtered_to_json(const FilteredComplex& fc);

// {basis: [{label, degree}], bracket: [{a, b, c, value}], d: [...]}
DGLieAlgebra dgla_from_json(const Json& j);

// kind universal {s} or canonical, or explicit {target: weil|ce, s, theta: [{monomial: value}]}.
AlgebraicConnection connection_from_json(const Json& j, const LieAlgebra& g);

// {terms: {monomial: value}}, {invariant: [k, i]}, or {product: [spec, ...]}.
SVec polynomial_from_json(const Json& j, const SymmetricAlgebra& S);
int polynomial_degree(const Json& j, const LieAlgebra& g);

}  // namespace gha
