#include "envsplit/series.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace envsplit {

namespace {

void validate_values(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw std::invalid_argument("SampleSeries: non-finite value at index " +
                                        std::to_string(i));
        }
    }
}

} // namespace

SampleSeries::SampleSeries(std::vector<double> values) : values_(std::move(values)) {
    validate_values(values_);
}

SampleSeries::SampleSeries(std::vector<double> values, std::vector<double> timestamps)
    : values_(std::move(values)), timestamps_(std::move(timestamps)) {
    validate_values(values_);
    if (timestamps_.size() != values_.size()) {
        throw std::invalid_argument("SampleSeries: timestamp count does not match value count");
    }
    for (std::size_t i = 0; i < timestamps_.size(); ++i) {
        if (!std::isfinite(timestamps_[i])) {
            throw std::invalid_argument("SampleSeries: non-finite timestamp at index " +
                                        std::to_string(i));
        }
        if (i > 0 && timestamps_[i] <= timestamps_[i - 1]) {
            throw std::invalid_argument("SampleSeries: timestamps not strictly increasing at index " +
                                        std::to_string(i));
        }
    }
}

std::vector<double> SampleSeries::grid() const {
    if (!timestamps_.empty()) {
        return timestamps_;
    }
    std::vector<double> g(values_.size());
    std::iota(g.begin(), g.end(), 1.0);
    return g;
}

LabelSequence::LabelSequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] > 1) {
            throw std::invalid_argument("LabelSequence: label at index " + std::to_string(i) +
                                        " is not binary");
        }
    }
}

LabelSequence LabelSequence::complement() const {
    std::vector<std::uint8_t> flipped(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        flipped[i] = static_cast<std::uint8_t>(1 - bits_[i]);
    }
    return LabelSequence(std::move(flipped));
}

LabelSequence LabelSequence::canonical() const {
    if (bits_.empty() || bits_.front() == 1) {
        return *this;
    }
    return complement();
}

double total_drift(const SampleSeries& series, const LabelSequence& labels) {
    if (labels.size() != series.size()) {
        throw std::invalid_argument("total_drift: label count does not match series length");
    }
    double last[2];
    bool seen[2] = {false, false};
    double drift = 0.0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const std::uint8_t s = labels[i];
        const double x = series.value(i);
        if (seen[s]) {
            drift += std::abs(x - last[s]);
        }
        last[s] = x;
        seen[s] = true;
    }
    return drift;
}

double series_drift(const SampleSeries& series) {
    double drift = 0.0;
    for (std::size_t i = 1; i < series.size(); ++i) {
        drift += std::abs(series.value(i) - series.value(i - 1));
    }
    return drift;
}

} // namespace envsplit
