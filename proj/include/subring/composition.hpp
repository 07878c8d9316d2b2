#pragma once
#include <string>
#include <vector>

namespace subring {

// Ordered tuple of positive integers. Indexes the diagonals
// (p^a1, ..., p^a_{n-1}, 1) of irreducible subring matrices.
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    explicit Composition(std::vector<int> p);

    int length() const { return static_cast<int>(parts.size()); }
    int weight() const;
    std::string str() const; // "(3,2,2,1,1)"

    bool operator==(const Composition&) const = default;
    auto operator<=>(const Composition&) const = default;
};

// All compositions of e into exactly `parts` positive parts, lexicographic.
// Empty when parts > e or e <= 0; throws when parts < 1.
std::vector<Composition> compositions(int e, int parts);

// The subset with first part > 1 (written C' in the g_n recurrence).
std::vector<Composition> compositions_first_gt1(int e, int parts);

Composition parse_composition(const std::string& text); // "3,2,2,1,1"

} // namespace subring
