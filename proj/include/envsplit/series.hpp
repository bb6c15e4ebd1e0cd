#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace envsplit {

/**
 * An ordered, finite, real-valued sample sequence x_1..x_T with an optional
 * strictly increasing time grid. Without explicit timestamps the grid is
 * 1, 2, ..., T.
 *
 * Construction validates that every value is finite and that timestamps,
 * when given, strictly increase and match the value count.
 */
class SampleSeries {
public:
    SampleSeries() = default;
    explicit SampleSeries(std::vector<double> values);
    SampleSeries(std::vector<double> values, std::vector<double> timestamps);

    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    double value(std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }

    bool has_timestamps() const { return !timestamps_.empty(); }
    double timestamp(std::size_t i) const {
        return timestamps_.empty() ? static_cast<double>(i + 1) : timestamps_[i];
    }
    /// Materialized time grid (explicit timestamps or the default 1..T).
    std::vector<double> grid() const;

private:
    std::vector<double> values_;
    std::vector<double> timestamps_; // empty means the default 1..T grid
};

/**
 * The per-sample binary split decision s_t. A sequence and its bitwise
 * complement describe the same split; canonical() fixes the first label
 * to 1.
 */
class LabelSequence {
public:
    LabelSequence() = default;
    explicit LabelSequence(std::vector<std::uint8_t> bits);

    std::size_t size() const { return bits_.size(); }
    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }

    LabelSequence complement() const;
    /// Complement-normalized form with the first label equal to 1.
    LabelSequence canonical() const;

    bool operator==(const LabelSequence&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Objective value of a labeling: the summed L1 drift of both subsequences,
/// each over its consecutive defined samples. Empty or singleton
/// subsequences contribute 0.
double total_drift(const SampleSeries& series, const LabelSequence& labels);

/// Running drift of the undivided series, C_T = sum |x_t - x_{t-1}|.
double series_drift(const SampleSeries& series);

} // namespace envsplit
