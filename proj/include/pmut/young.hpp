#pragma once

#include "pmut/polytope.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pmut {

// Sorted, 1-based.
using Subset = std::vector<int>;

struct YoungDiagram {
    std::vector<int> rows;  // weakly decreasing, no trailing zeros

    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<int> r);
    static YoungDiagram rectangle(int height, int width);

    bool empty() const { return rows.empty(); }
    int size() const;
    int height() const { return static_cast<int>(rows.size()); }
    int width() const { return rows.empty() ? 0 : rows[0]; }
    bool is_rectangle() const;
    bool fits(int k, int w) const { return height() <= k && width() <= w; }

    std::string str() const;  // "3,3,1", "e" for the empty diagram
    static YoungDiagram parse(const std::string& s);

    // Canonical order: lexicographic on zero-padded rows.
    friend bool operator<(const YoungDiagram& a, const YoungDiagram& b);
    friend bool operator==(const YoungDiagram& a, const YoungDiagram& b) { return a.rows == b.rows; }
    friend bool operator!=(const YoungDiagram& a, const YoungDiagram& b) { return a.rows != b.rows; }
};

YoungDiagram young_from_subset(const Subset& j, int k, int n);
Subset subset_from_young(const YoungDiagram& y, int k, int n);
bool young_leq(const YoungDiagram& a, const YoungDiagram& b);
// lambda_max minus an a x b block cut from the bottom-right corner.
YoungDiagram box_complement(int k, int n, int a, int b);

std::string subset_str(const Subset& s);  // "{1,3}"
Subset parse_subset(const std::string& s);
std::vector<Subset> all_subsets(int k, int n);  // lexicographic

struct GridPoset {
    int k = 0, n = 0;
    std::vector<YoungDiagram> elements;                      // canonical order
    std::vector<std::pair<std::size_t, std::size_t>> covers;  // (smaller, larger)

    std::size_t size() const { return elements.size(); }
    std::size_t index_of(const YoungDiagram& y) const;
    std::vector<std::size_t> lower_covers(std::size_t a) const;
    bool leq(std::size_t a, std::size_t b) const;
    std::vector<std::string> labels() const;
    std::string to_dot() const;
};

GridPoset grid_poset(int k, int n);

enum class SubsetKind { filter, antichain };
struct PosetSubset {
    std::vector<std::size_t> members;
    SubsetKind kind;
    RatVec indicator(std::size_t dim) const;
};

std::vector<PosetSubset> filters(const GridPoset& p);
std::vector<PosetSubset> antichains(const GridPoset& p);

QPolytope order_polytope(const GridPoset& p);
QPolytope chain_polytope(const GridPoset& p);

RatVec transfer_point(const GridPoset& p, const RatVec& x);

struct TransferStep {
    std::size_t element;
    PLMap map;
};
std::vector<TransferStep> transfer_sequence(const GridPoset& p);

// Pushes O(P) through the transfer sequence, certifying each image convex.
struct TransferChain {
    std::vector<QPolytope> images;  // images[0] = O(P); one more per certified step
    bool convex = true;             // false: stopped at step images.size() - 1
};
TransferChain transfer_chain(const GridPoset& p);

}  // namespace pmut
