#include "gha/core/graded.hpp"

#include <algorithm>

namespace gha {

void GradedSpace::add(const std::string& label, int degree) {
    if (index_.count(label)) throw InputError("duplicate basis label: " + label);
    index_.emplace(label, dim());
    labels_.push_back(label);
    degrees_.push_back(degree);
}

int GradedSpace::index(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw InputError("unknown basis label: " + label);
    return it->second;
}

std::vector<int> GradedSpace::indices_of_degree(int k) const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
        if (degrees_[i] == k) out.push_back(i);
    return out;
}

int GradedSpace::min_degree() const {
    return degrees_.empty() ? 0 : *std::min_element(degrees_.begin(), degrees_.end());
}

int GradedSpace::max_degree() const {
    return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

GradedSpace GradedSpace::shifted(int shift) const {
    GradedSpace s;
    for (int i = 0; i < dim(); ++i) s.add(labels_[i], degrees_[i] + shift);
    return s;
}

GradedMap::GradedMap(SpacePtr source, SpacePtr target, int degree)
    : src_(std::move(source)), tgt_(std::move(target)), deg_(degree), cols_(src_->dim()) {}

GradedMap GradedMap::identity(SpacePtr space) {
    GradedMap m(space, space, 0);
    for (int i = 0; i < space->dim(); ++i) m.cols_[i].emplace(i, 1);
    return m;
}

void GradedMap::set(int t, int s, const Q& v) {
    if (v == 0)
        cols_[s].erase(t);
    else
        cols_[s][t] = v;
}

void GradedMap::add_to(int t, int s, const Q& v) { add_entry(cols_[s], t, v); }

SVec GradedMap::apply(const SVec& x) const {
    SVec r;
    for (const auto& [j, v] : x) axpy(r, v, cols_[j]);
    return r;
}

GradedMap GradedMap::compose(const GradedMap& inner) const {
    if (inner.tgt_->dim() != src_->dim()) throw InputError("composition shape mismatch");
    GradedMap m(inner.src_, tgt_, deg_ + inner.deg_);
    for (int j = 0; j < inner.src_->dim(); ++j) m.cols_[j] = apply(inner.cols_[j]);
    return m;
}

GradedMap GradedMap::operator+(const GradedMap& o) const {
    GradedMap m = *this;
    for (size_t j = 0; j < cols_.size(); ++j) axpy(m.cols_[j], 1, o.cols_[j]);
    return m;
}

GradedMap GradedMap::operator-(const GradedMap& o) const {
    GradedMap m = *this;
    for (size_t j = 0; j < cols_.size(); ++j) axpy(m.cols_[j], -1, o.cols_[j]);
    return m;
}

GradedMap GradedMap::scaled(const Q& s) const {
    GradedMap m = *this;
    for (auto& c : m.cols_) c = gha::scaled(c, s);
    return m;
}

bool GradedMap::is_zero() const {
    for (const auto& c : cols_)
        if (!c.empty()) return false;
    return true;
}

bool GradedMap::operator==(const GradedMap& o) const { return cols_ == o.cols_; }

bool GradedMap::degree_consistent() const {
    for (int s = 0; s < static_cast<int>(cols_.size()); ++s)
        for (const auto& [t, v] : cols_[s])
            if (tgt_->degree(t) != src_->degree(s) + deg_) return false;
    return true;
}

std::vector<SVec> GradedMap::rows() const { return transpose(cols_, tgt_->dim()); }

GradedMap graded_commutator(const GradedMap& a, const GradedMap& b) {
    GradedMap ab = a.compose(b), ba = b.compose(a);
    int s = sign_of_parity(static_cast<long>(a.degree()) * b.degree());
    return ab - ba.scaled(s);
}

}  // namespace gha
