#include "dessin/permutation.hpp"

#include <algorithm>

namespace dessin {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)])
            throw DomainError("not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
    return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int n,
                                     const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (const auto& cyc : cycles) {
        for (int v : cyc) {
            if (v < 0 || v >= n || used[static_cast<std::size_t>(v)])
                throw DomainError("bad cycle notation");
            used[static_cast<std::size_t>(v)] = true;
        }
        for (std::size_t k = 0; k < cyc.size(); ++k)
            img[static_cast<std::size_t>(cyc[k])] = cyc[(k + 1) % cyc.size()];
    }
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < size(); ++i)
        inv[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] = i;
    return Permutation(std::move(inv));
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(img_.size(), false);
    for (int start = 0; start < size(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> cyc;
        int x = start;
        do {
            cyc.push_back(x);
            seen[static_cast<std::size_t>(x)] = true;
            x = (*this)(x);
        } while (x != start);
        out.push_back(std::move(cyc));
    }
    return out;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> t;
    for (const auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
    std::sort(t.rbegin(), t.rend());
    return t;
}

int Permutation::cycle_count() const {
    return static_cast<int>(cycles().size());
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw DomainError("size mismatch in compose");
    std::vector<int> img(static_cast<std::size_t>(a.size()));
    for (int i = 0; i < a.size(); ++i)
        img[static_cast<std::size_t>(i)] = a(b(i));
    return Permutation(std::move(img));
}

}  // namespace dessin
