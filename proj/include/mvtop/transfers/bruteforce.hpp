#pragma once

#include "mvtop/squares/msquare.hpp"
#include "mvtop/transfers/correspondence.hpp"

namespace mvtop {

struct EnumerationBounds {
    int bidegree = 2;        // degree in each coordinate
    long height = 2;         // |coefficient|
    long budget = 5'000'000; // coefficient tuples per corner
};

/// Admissible elementary correspondences from component 0 of m to component
/// `target` of n with F inside the bounds, sorted by (bidegree, height, F).
/// Throws BudgetExceeded.
std::vector<ElemCorr> enumerate_admissible(const ModulusPair& m, const ModulusPair& n, std::size_t target,
                                           const EnumerationBounds& b);

struct CompatiblePair {
    Corr alpha; // to T01
    Corr beta;  // to T10
    bool liftable = false;
    std::string kind; // "matched" or "resurgent"
};

struct BruteForceReport {
    bool cartesian = true;
    std::size_t e00 = 0;
    std::size_t e01 = 0;
    std::size_t e10 = 0;
    std::vector<CompatiblePair> pairs;
    std::string detail;
};

/// Generators of the compatible pairs (p alpha = u beta) among enumerated
/// correspondences; a pair lifts when every sheet of alpha is the image of
/// an enumerated admissible correspondence into T00.
BruteForceReport mv_cartesian_bruteforce(const ModulusPair& m, const MSquare& t, const EnumerationBounds& b);

} // namespace mvtop
