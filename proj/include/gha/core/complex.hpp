#pragma once

#include "gha/core/graded.hpp"

#include <map>
#include <utility>
#include <vector>

namespace gha {

struct CochainComplex {
    SpacePtr space;
    GradedMap d;

    CochainComplex() = default;
    CochainComplex(SpacePtr s, GradedMap diff);
    bool square_zero() const { return d.compose(d).is_zero(); }
};

struct Cohomology {
    std::map<int, int> dims;                      // degree -> dim H
    std::map<int, std::vector<SVec>> representatives;
    int dim(int k) const {
        auto it = dims.find(k);
        return it == dims.end() ? 0 : it->second;
    }
};

// Throws StructuralError when d∘d != 0.
Cohomology cohomology(const CochainComplex& c);

// Coordinates of the class of a cocycle in terms of the representatives
// returned by cohomology(); throws InputError if z is not a cocycle.
std::vector<Q> class_coordinates(const CochainComplex& c, const Cohomology& h, int degree,
                                 const SVec& z);

struct FilteredComplex {
    CochainComplex complex;
    std::vector<int> level;  // decreasing filtration index per basis element
};

struct SpectralPages {
    // pages[r][(p, q)] = dim E_r^{p,q}; ranks[r][(p, q)] = rank of d_r out of (p, q).
    std::vector<std::map<std::pair<int, int>, int>> pages;
    std::vector<std::map<std::pair<int, int>, int>> ranks;
    std::map<int, int> total;  // dim H^n of the underlying complex
};

// Throws StructuralError if the differential lowers the filtration level.
SpectralPages spectral_pages(const FilteredComplex& fc, int r_max);

// Restriction of a differential to the span of a linearly independent family;
// the new basis labels are "b<k>".
struct Subcomplex {
    CochainComplex complex;
    std::vector<SVec> basis;   // ambient vectors, one per new basis element
    bool closed = true;        // false if d left the span on some basis vector
    SpanCoordinates coords;
};

Subcomplex restrict_to_span(const GradedMap& d, const std::vector<SVec>& basis,
                            const std::vector<int>& degrees);

}  // namespace gha
