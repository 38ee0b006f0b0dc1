#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "perimal/intmath.hpp"

namespace perimal {

// Permutation of {0, .., degree-1}, degree <= MAX_DEGREE.  Composition acts on
// the left: (a * b)(i) == a(b(i)), so word images multiply in reading order.
class Perm {
public:
    static constexpr int MAX_DEGREE = 9;

    Perm() = default;
    explicit Perm(int degree);                       // identity
    Perm(int degree, const std::vector<int>& images);

    static Perm cycle(int degree, const std::vector<int>& points);

    int degree() const { return degree_; }
    int apply(int i) const { return img_[i]; }

    Perm operator*(const Perm& other) const;
    Perm inverse() const;
    Perm pow(i64 n) const;

    bool is_identity() const;
    int order() const;

    // Sorted cycle lengths, fixed points included; equal for conjugate perms.
    std::array<uint8_t, MAX_DEGREE> cycle_type() const;

    // Injective key for hashing and ordering within one degree.
    uint64_t pack() const;

    // Cycle notation on 1-based points, e.g. "(1 2 3)(4 5)"; identity is "()".
    std::string to_cycles() const;

    friend bool operator==(const Perm& a, const Perm& b) {
        return a.degree_ == b.degree_ && a.img_ == b.img_;
    }
    friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
        if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
        for (int i = 0; i < a.degree_; ++i)
            if (a.img_[i] != b.img_[i]) return a.img_[i] <=> b.img_[i];
        return std::strong_ordering::equal;
    }

private:
    int degree_ = 0;
    std::array<uint8_t, MAX_DEGREE> img_{};
};

// All degree! permutations in lexicographic image order.  Cached per degree.
const std::vector<Perm>& all_perms(int degree);

// One representative per conjugacy class of S_degree, lexicographically least,
// in lexicographic order.
const std::vector<Perm>& class_representatives(int degree);

} // namespace perimal
