#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "corput/interval_map.hpp"

namespace corput {

/// Lazily enumerates the van der Corput sequence of a map from base point x:
/// the points wx over admissible words w, in word order (length-major, then
/// the sign-twisted order on equal lengths).  Words whose wx does not exist
/// are skipped; duplicate points are emitted as often as their words occur.
class VdcStream {
public:
    VdcStream(PLMap map, double x, std::size_t level_budget = std::size_t{1} << 22);

    struct Item {
        Word word;
        double point;
    };

    Item next();

    /// Number of points emitted so far.
    std::size_t emitted() const { return emitted_; }

    /// Cumulative point counts at each completed level boundary.
    const std::vector<std::size_t>& level_boundaries() const { return boundaries_; }

    const PLMap& map() const { return map_; }
    double base() const { return x_; }

private:
    PLMap map_;
    double x_;
    std::size_t level_budget_;
    int level_ = 0;
    std::vector<Item> buffer_;
    std::size_t pos_ = 0;
    std::size_t emitted_ = 0;
    std::vector<std::size_t> boundaries_;

    void fill_next_level();
};

/// First n points of the stream.
std::vector<double> vdc_take(const PLMap& map, double x, std::size_t n);

} // namespace corput
