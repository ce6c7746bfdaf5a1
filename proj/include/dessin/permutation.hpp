#pragma once

#include <vector>

#include "dessin/errors.hpp"

namespace dessin {

// Permutation of {0, ..., n-1}, stored as the image vector.
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    // Unlisted points are fixed.  Throws on out-of-range or repeated entries.
    static Permutation from_cycles(int n,
                                   const std::vector<std::vector<int>>& cycles);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return img_; }

    Permutation inverse() const;

    // All cycles including singletons; each starts at its minimal element,
    // cycles ordered by first element.
    std::vector<std::vector<int>> cycles() const;
    std::vector<int> cycle_type() const;  // lengths, descending
    int cycle_count() const;
    bool is_identity() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

  private:
    std::vector<int> img_;
};

// compose(a, b): x -> a(b(x))
Permutation compose(const Permutation& a, const Permutation& b);

}  // namespace dessin
