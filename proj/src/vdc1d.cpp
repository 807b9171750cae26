#include "corput/vdc1d.hpp"

#include "corput/errors.hpp"

namespace corput {

VdcStream::VdcStream(PLMap map, double x, std::size_t level_budget)
    : map_(std::move(map)), x_(x), level_budget_(level_budget) {
    if (!(x >= 0.0) || x >= 1.0)
        throw UsageError("base point must lie in [0,1)");
    buffer_.push_back({Word{}, x_});
}

void VdcStream::fill_next_level() {
    ++level_;
    buffer_.clear();
    pos_ = 0;
    for (const Word& w : words_of_length(map_, level_, level_budget_)) {
        auto p = point_of_wx(map_, w, x_);
        if (p)
            buffer_.push_back({w, *p});
    }
}

VdcStream::Item VdcStream::next() {
    while (pos_ >= buffer_.size()) {
        boundaries_.push_back(emitted_);
        fill_next_level();
    }
    ++emitted_;
    return buffer_[pos_++];
}

std::vector<double> vdc_take(const PLMap& map, double x, std::size_t n) {
    VdcStream stream(map, x);
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(stream.next().point);
    return out;
}

} // namespace corput
