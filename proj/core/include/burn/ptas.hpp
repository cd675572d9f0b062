#pragma once

#include "burn/forest.hpp"
#include "burn/graph.hpp"
#include "burn/greedy.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace burn {

/// Radii restricted to multiples of a granularity a: class j stands for
/// radius j*a, for j in 0..class_count-1.
struct RadiusClasses {
    int granularity = 1;  // a
    int class_count = 1;  // K

    int radius_of(int j) const { return j * granularity; }
    int max_radius() const { return (class_count - 1) * granularity; }
    bool operator==(const RadiusClasses&) const = default;
};

/// Multiset of class radii as per-class counts. counts[j] balls of radius j*a.
struct CoverVector {
    std::vector<int> counts;

    int total() const;
    bool operator==(const CoverVector&) const = default;
};

/// The multiset { a*ceil(i/a) : 0 <= i < b } as a CoverVector.
/// Throws std::invalid_argument if b is not representable in the classes.
CoverVector rounded_multiset(const RadiusClasses& classes, int b);

/// True iff the balls of c map injectively into the balls of `budget` with
/// non-decreasing radius (a larger ball can stand in for a smaller one).
/// Equivalent to every suffix sum of c being at most the one of budget.
bool fits(const CoverVector& c, const CoverVector& budget);

struct CoverSetOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CoverSetOptions {
    int sum_cap = 0;               // vectors with more balls than this are dropped
    bool prune = true;             // keep only fit-minimal vectors
    std::size_t max_size = 2'000'000;  // guard; exceeding throws CoverSetOverflow
};

/// A set of cover vectors over shared radius classes. With pruning on, only
/// vectors minimal under `fits` survive: whenever fits(a, b), b is redundant
/// because any budget admitting b admits a.
class CoverSet {
public:
    CoverSet(RadiusClasses classes, CoverSetOptions options);

    /// Returns true if v was retained.
    bool insert(CoverVector v);

    const std::vector<CoverVector>& items() const { return items_; }
    const RadiusClasses& classes() const { return classes_; }
    const CoverSetOptions& options() const { return options_; }

private:
    RadiusClasses classes_;
    CoverSetOptions options_;
    std::vector<CoverVector> items_;
};

/// {u + v : u in a, v in b}, capped and pruned per the options of `a`.
CoverSet sumset(const CoverSet& a, const CoverSet& b);
CoverSet set_union(const CoverSet& a, const CoverSet& b);

struct PtasOptions {
    std::optional<double> epsilon;  // a = max(1, floor(epsilon * greedy_r / 3))
    std::optional<int> a;           // explicit granularity, overrides epsilon
    bool prune = true;
    /// How far the part around the path may reach into a subtree hanging off
    /// it, relative to r - d(v0, vi): +1 allows distance <= r - d(v0, vi),
    /// -1 allows only <= r - d(v0, vi) - 2. The default is the sound reading;
    /// -1 exists for diagnostics.
    int reach_delta = +1;
    std::size_t max_set_size = 2'000'000;
    bool emit_witness = true;
    TieBreak greedy_tie_break = TieBreak::farthest;
};

struct PtasResult {
    int b_star = 0;
    int interval_lo = 0;  // b_star
    int interval_hi = 0;  // b_star + a - 1; b(G) lies in [lo, hi]
    int a = 1;
    int greedy_r = 0;
    std::optional<BurningSchedule> witness;  // horizon interval_hi
    std::size_t max_cover_set_size = 0;
};

/// Cover sets C0 at every root: all multisets of class radii that cover the
/// root's component by a partition into connected parts of bounded radius,
/// computed bottom-up over the rooted forest.
std::vector<CoverSet> cover_sets(const RootedForest& forest,
                                 const RadiusClasses& classes,
                                 const CoverSetOptions& options,
                                 int reach_delta = +1);

/// Approximates the burning number of a forest: the smallest b whose rounded
/// radius multiset admits a computed cover gives b_star <= b(G) <= b_star+a-1.
/// With a = 1 the value is exact. Throws NotAForestError on cyclic input.
PtasResult ptas_burning(const Graph& g, const PtasOptions& options = {});

}  // namespace burn
