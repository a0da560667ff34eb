#pragma once

#include <string>
#include <vector>

#include "fibcat/arrowcat.hpp"

namespace fibcat {

struct NamedBundle {
    std::string name;
    Bundle bundle;
};

struct NamedSquare {
    std::string name;
    BundleSquare square;
};

struct NamedTwoCell {
    std::string name;
    BundleTwoCell cell;
};

/// The bundles, squares and 2-cells every verifier sweeps over.
struct Corpus {
    std::vector<NamedBundle> bundles;
    std::vector<NamedSquare> squares;
    std::vector<NamedTwoCell> cells;

    const Bundle& bundle(const std::string& name) const;
};

/// j: 1 → 2 picking object `at` ("0" or "1").
Bundle point_bundle(const std::string& at);
/// cod: Φ2 → 2 (d1) and dom: Φ2 → 2 (d0).
Bundle cod_bundle();
Bundle dom_bundle();

/// Built once; the categories involved have at most 6 objects.
const Corpus& standard_corpus();

/// Squares p → p' between two bundles: enumerates down functors, then up
/// functors over each, keeping at most `max` squares.
std::vector<BundleSquare> enumerate_squares(const Bundle& p, const Bundle& q, std::size_t max);
/// 2-cells between two parallel squares, at most `max`.
std::vector<BundleTwoCell> enumerate_2cells(const BundleSquare& f, const BundleSquare& g, std::size_t max);

}  // namespace fibcat
