#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "vnr/forest.hpp"

namespace vnr {

// Permutation of {0..l-1} in one-line form: img[i] is the image of i.
struct Permutation {
    std::vector<int> img;

    static Permutation identity(int l) {
        Permutation p;
        p.img.resize(static_cast<size_t>(l));
        std::iota(p.img.begin(), p.img.end(), 0);
        return p;
    }

    int size() const { return static_cast<int>(img.size()); }
    int operator()(int i) const { return img[static_cast<size_t>(i)]; }

    bool is_identity() const {
        for (int i = 0; i < size(); ++i)
            if (img[static_cast<size_t>(i)] != i) return false;
        return true;
    }

    // Some power of the rotation i -> i+1 mod l (identity included).
    bool is_rotation_power() const {
        int l = size();
        if (l == 0) return true;
        int k = img[0];
        for (int i = 0; i < l; ++i)
            if (img[static_cast<size_t>(i)] != (i + k) % l) return false;
        return true;
    }

    Permutation inverse() const {
        Permutation p;
        p.img.resize(img.size());
        for (int i = 0; i < size(); ++i)
            p.img[static_cast<size_t>(img[static_cast<size_t>(i)])] = i;
        return p;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
};

inline bool is_valid_permutation(const std::vector<int>& img) {
    std::vector<char> seen(img.size(), 0);
    for (int v : img) {
        if (v < 0 || v >= static_cast<int>(img.size()) || seen[static_cast<size_t>(v)])
            return false;
        seen[static_cast<size_t>(v)] = 1;
    }
    return true;
}

inline Permutation make_permutation(std::vector<int> img) {
    require(is_valid_permutation(img), "not a permutation");
    return Permutation{std::move(img)};
}

// Apply b first, then a.
inline Permutation compose(const Permutation& a, const Permutation& b) {
    require(a.size() == b.size(), "permutation size mismatch");
    Permutation p;
    p.img.resize(a.img.size());
    for (int i = 0; i < a.size(); ++i) p.img[static_cast<size_t>(i)] = a(b(i));
    return p;
}

}  // namespace vnr
