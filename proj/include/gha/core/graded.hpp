#pragma once

#include "gha/core/linalg.hpp"

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace gha {

class GradedSpace {
public:
    GradedSpace() = default;
    void add(const std::string& label, int degree);

    int dim() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_[i]; }
    int degree(int i) const { return degrees_[i]; }
    const std::vector<int>& degrees() const { return degrees_; }
    int index(const std::string& label) const;
    bool has(const std::string& label) const { return index_.count(label) > 0; }
    std::vector<int> indices_of_degree(int k) const;
    int min_degree() const;
    int max_degree() const;

    // Suspension shifts every degree by `shift`; labels are kept.
    GradedSpace shifted(int shift) const;

private:
    std::vector<std::string> labels_;
    std::vector<int> degrees_;
    std::unordered_map<std::string, int> index_;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;

// Linear map of fixed degree stored as sparse columns (one per source basis element).
class GradedMap {
public:
    GradedMap() = default;
    GradedMap(SpacePtr source, SpacePtr target, int degree);

    static GradedMap identity(SpacePtr space);

    const SpacePtr& source() const { return src_; }
    const SpacePtr& target() const { return tgt_; }
    int degree() const { return deg_; }

    const SVec& column(int j) const { return cols_[j]; }
    SVec& column(int j) { return cols_[j]; }
    Q at(int t, int s) const { return entry(cols_[s], t); }
    void set(int t, int s, const Q& v);
    void add_to(int t, int s, const Q& v);

    SVec apply(const SVec& x) const;
    GradedMap compose(const GradedMap& inner) const;  // this ∘ inner
    GradedMap operator+(const GradedMap& o) const;
    GradedMap operator-(const GradedMap& o) const;
    GradedMap scaled(const Q& s) const;
    bool is_zero() const;
    bool operator==(const GradedMap& o) const;

    // Checks that every nonzero entry respects the degree.
    bool degree_consistent() const;
    std::vector<SVec> rows() const;

private:
    SpacePtr src_, tgt_;
    int deg_ = 0;
    std::vector<SVec> cols_;
};

// Graded commutator [a, b] = ab - (-1)^{|a||b|} ba of endomorphisms.
GradedMap graded_commutator(const GradedMap& a, const GradedMap& b);

}  // namespace gha
