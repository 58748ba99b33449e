#ifndef GRAYUD_PERMUTATION_HPP
#define GRAYUD_PERMUTATION_HPP

#include <vector>

#include "grayud/graph.hpp"

namespace grayud {

// Bijection on 0..n-1 stored as an image sequence.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> image);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int i) const { return image_[i]; }
    const std::vector<int>& image() const { return image_; }

    Permutation inverse() const;
    // this applied after other: (a.compose(b))(i) = a(b(i))
    Permutation compose(const Permutation& other) const;

    // Lengths of the disjoint cycles, sorted ascending.
    std::vector<int> cycle_lengths() const;
    int order() const;

    bool operator==(const Permutation& other) const { return image_ == other.image_; }

private:
    std::vector<int> image_;
};

// The paper's generator on 54 points: i -> (i+18) mod 54.
Permutation rho();

// True iff p maps the edge set of g onto itself.
bool is_automorphism(const Graph& g, const Permutation& p);

// True iff every cycle of p has length exactly m.
bool is_semiregular(const Permutation& p, int m);

}  // namespace grayud

#endif
