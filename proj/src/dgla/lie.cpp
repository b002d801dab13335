#include "gha/dgla/lie.hpp"

namespace gha {

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> labels)
    : name_(std::move(name)), labels_(std::move(labels)) {
    size_t n = labels_.size();
    f_.assign(n * n * n, Q(0));
}

void LieAlgebra::set_antisym(int a, int b, int c, const Q& v) {
    set(a, b, c, v);
    set(b, a, c, -v);
}

std::vector<Q> LieAlgebra::bracket(const std::vector<Q>& x, const std::vector<Q>& y) const {
    int n = dim();
    std::vector<Q> out(n);
    for (int a = 0; a < n; ++a) {
        if (x[a] == 0) continue;
        for (int b = 0; b < n; ++b) {
            if (y[b] == 0) continue;
            Q xy = x[a] * y[b];
            for (int c = 0; c < n; ++c)
                if (f(c, a, b) != 0) out[c] += xy * f(c, a, b);
        }
    }
    return out;
}

std::vector<std::string> LieAlgebra::violations() const {
    std::vector<std::string> out;
    int n = dim();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (f(c, a, b) + f(c, b, a) != 0)
                    out.push_back("antisymmetry(" + labels_[a] + "," + labels_[b] + ")");
    auto unit = [n](int i) {
        std::vector<Q> e(n);
        e[i] = 1;
        return e;
    };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                auto ea = unit(a), eb = unit(b), ec = unit(c);
                auto j1 = bracket(ea, bracket(eb, ec));
                auto j2 = bracket(eb, bracket(ec, ea));
                auto j3 = bracket(ec, bracket(ea, eb));
                for (int k = 0; k < n; ++k)
                    if (j1[k] + j2[k] + j3[k] != 0) {
                        out.push_back("jacobi(" + labels_[a] + "," + labels_[b] + "," + labels_[c] + ")");
                        break;
                    }
            }
    return out;
}

void LieAlgebra::validate() const {
    auto v = violations();
    if (!v.empty()) throw InputError("invalid Lie algebra " + name_ + ": " + v.front());
}

LieAlgebra builtin_lie(const std::string& name) {
    if (name == "abelian3") return LieAlgebra(name, {"e1", "e2", "e3"});
    if (name == "h3") {
        LieAlgebra g(name, {"e1", "e2", "e3"});
        g.set_antisym(0, 1, 2, 1);
        return g;
    }
    if (name == "su2" || name == "su2_corrupt" || name == "u2") {
        std::vector<std::string> labels{"e1", "e2", "e3"};
        if (name == "u2") labels.push_back("e4");
        LieAlgebra g(name, labels);
        g.set_antisym(0, 1, 2, 1);
        g.set_antisym(1, 2, 0, 1);
        g.set_antisym(2, 0, 1, 1);
        if (name == "su2_corrupt") g.set_antisym(0, 1, 0, 1);
        return g;
    }
    if (name == "sl2") {
        LieAlgebra g(name, {"h", "e", "f"});
        g.set_antisym(0, 1, 1, 2);
        g.set_antisym(0, 2, 2, -2);
        g.set_antisym(1, 2, 0, 1);
        return g;
    }
    throw InputError("unknown built-in Lie algebra: " + name);
}

std::vector<std::string> builtin_lie_names() { return {"abelian3", "h3", "su2", "sl2", "u2"}; }

}  // namespace gha
