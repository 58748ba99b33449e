#include "grayud/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace grayud {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    const int n = size();
    std::vector<bool> hit(n, false);
    for (int v : image_) {
        if (v < 0 || v >= n || hit[v])
            throw std::invalid_argument("image sequence is not a bijection on 0..n-1");
        hit[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> image(n);
    std::iota(image.begin(), image.end(), 0);
    return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(image_.size());
    for (int i = 0; i < size(); ++i) inv[image_[i]] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (size() != other.size())
        throw std::invalid_argument("composing permutations of different sizes");
    std::vector<int> image(image_.size());
    for (int i = 0; i < size(); ++i) image[i] = image_[other.image_[i]];
    return Permutation(std::move(image));
}

std::vector<int> Permutation::cycle_lengths() const {
    std::vector<bool> seen(image_.size(), false);
    std::vector<int> lengths;
    for (int i = 0; i < size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = image_[j]) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

int Permutation::order() const {
    int lcm = 1;
    for (int len : cycle_lengths()) lcm = std::lcm(lcm, len);
    return lcm;
}

Permutation rho() {
    std::vector<int> image(54);
    for (int i = 0; i < 54; ++i) image[i] = (i + 18) % 54;
    return Permutation(std::move(image));
}

bool is_automorphism(const Graph& g, const Permutation& p) {
    if (p.size() != g.vertex_count()) return false;
    for (const auto& [a, b] : g.edges())
        if (!g.has_edge(p(a), p(b))) return false;
    return true;
}

bool is_semiregular(const Permutation& p, int m) {
    if (m <= 0) return false;
    for (int len : p.cycle_lengths())
        if (len != m) return false;
    return p.size() > 0;
}

}  // namespace grayud
