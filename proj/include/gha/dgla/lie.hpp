#pragma once

#include "gha/core/rational.hpp"

#include <string>
#include <vector>

namespace gha {

// Finite-dimensional Lie algebra in degree 0, given by structure constants
// f^c_{ab} = <e^c, [e_a, e_b]>.
class LieAlgebra {
public:
    LieAlgebra() = default;
    LieAlgebra(std::string name, std::vector<std::string> labels);

    const std::string& name() const { return name_; }
    int dim() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }

    // f^c_{ab}
    const Q& f(int c, int a, int b) const { return f_[idx(a, b, c)]; }
    void set(int a, int b, int c, const Q& v) { f_[idx(a, b, c)] = v; }
    // sets [e_a,e_b] and [e_b,e_a] together
    void set_antisym(int a, int b, int c, const Q& v);

    std::vector<Q> bracket(const std::vector<Q>& x, const std::vector<Q>& y) const;

    // Human-readable list of antisymmetry and Jacobi failures; empty when valid.
    std::vector<std::string> violations() const;
    void validate() const;  // throws InputError listing the first violation

private:
    size_t idx(int a, int b, int c) const {
        size_t n = labels_.size();
        return (static_cast<size_t>(a) * n + b) * n + c;
    }
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<Q> f_;
};

// Built-in test algebras: abelian3, h3, su2, sl2, u2, su2_corrupt.
LieAlgebra builtin_lie(const std::string& name);
std::vector<std::string> builtin_lie_names();  // valid ones only

}  // namespace gha
