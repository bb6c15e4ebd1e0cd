#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "envsplit/series.hpp"

namespace envsplit {

/// 1-based sample index; tau = 0 denotes the base (never-switch) class.
using Index = std::uint32_t;

/// One surviving equivalence class: all labelings whose most recent switch
/// happened at sample tau, represented by the best of them. anchor is x_tau
/// and m_value its normalized loss M_tau.
struct ClassState {
    Index tau = 0;
    double m_value = 0.0;
    double anchor = 0.0;
};

/// Normalized cost of continuing the base class past the step (x_t, x_next).
inline double base_candidate(double x_next, double x_t) {
    return -std::abs(x_next - x_t);
}

/// Normalized cost of switching at the step (x_t, x_next) out of a class
/// anchored at `anchor` with normalized loss `m`.
inline double switch_candidate(double m, double x_next, double x_t, double anchor) {
    return m - std::abs(x_next - x_t) + std::abs(x_next - anchor);
}

/**
 * The surviving equivalence classes, ordered by anchor value. The base
 * (tau = 0) class is implicit and is never eliminated.
 *
 * Survivors split into two monotone groups: anchors below every later sample
 * and anchors above every later sample. Each group is kept as a stack with
 * the newest class at the back, so the closed-interval elimination of a step
 * is a pair of contiguous pops and insertion is a push.
 */
class ActiveClassSet {
public:
    std::size_t size() const { return below_.size() + above_.size(); }
    bool empty() const { return below_.empty() && above_.empty(); }

    /// Removes every class whose anchor lies in the closed interval
    /// [min(x_t, x_next), max(x_t, x_next)]. Returns the number removed;
    /// removed classes are appended to *removed when given.
    std::size_t eliminate(double x_t, double x_next, std::vector<ClassState>* removed = nullptr);

    /// Inserts the class created by the step (cls.anchor = x_t, next sample
    /// x_next). Must be called after eliminate() for the same step.
    void insert(const ClassState& cls, double x_next);

    /// Applies f to every class; iteration order is unspecified.
    template <typename F>
    void scan(F&& f) const {
        for (const ClassState& c : below_) f(c);
        for (const ClassState& c : above_) f(c);
    }

    /// Classes sorted by strictly increasing anchor.
    std::vector<ClassState> ordered_by_anchor() const;
    /// Surviving switch indices in increasing order.
    std::vector<Index> taus_ascending() const;

    void reserve(std::size_t n);
    void clear();

    /// Rebuilds a set from arbitrary classes, partitioned against the
    /// current sample value. Intended for tests and audits.
    static ActiveClassSet from_classes(std::vector<ClassState> classes, double current_sample);

private:
    std::vector<ClassState> below_; // ascending anchors, newest at the back
    std::vector<ClassState> above_; // descending anchors, newest at the back
};

/// The Theorem-1 interval rule as a value-level operation.
ActiveClassSet eliminate_by_step(ActiveClassSet active, double x_t, double x_next);

/// Minimizer indices tau_t recorded at each step; pointers[i] holds
/// tau_{i+1} with 0 <= tau_{i+1} <= i.
struct BackPointerTable {
    std::vector<Index> pointers;
};

/// Reconstructs the label sequence from the pointer table: samples in
/// (tau*, T] get label 1, then labels alternate per pointer hop down to 0.
LabelSequence backtrack_labels(const BackPointerTable& table, Index tau_star, std::size_t length);

struct SplitResult {
    LabelSequence labels;
    double total_drift = 0.0;          // recomputed from labels, not accumulated
    Index final_tau = 0;               // selected tau*
    double normalized_loss = 0.0;      // M_{tau*}; total_drift == series_drift + normalized_loss
    std::vector<Index> survivor_counts; // active-set size after each step, length T-1
    std::vector<Index> pointer_trace;   // backtrack chain tau*, tau_{tau*}, ..., 0
};

/// Everything observable about one streaming step; used by audits.
struct StepRecord {
    Index t = 0;        // step index: M_t was finalized by the arrival of x_{t+1}
    double x_t = 0.0;
    double x_next = 0.0;
    double m_t = 0.0;
    Index tau_t = 0;
    std::vector<ClassState> eliminated;
    std::vector<ClassState> active_after; // includes the class inserted this step
};

/**
 * Streaming optimal splitter.
 *
 * Upon the arrival of x_{t+1} the automaton finalizes
 *
 *     M_t = min over the base class and all active classes of the step
 *           candidates, recording the minimizer tau_t,
 *
 * then removes every active class whose anchor lies in the closed interval
 * [min(x_t, x_{t+1}), max(x_t, x_{t+1})] and inserts the new class
 * (t, M_t, x_t). Elimination never changes any later minimum: an eliminated
 * class is dominated by the class inserted in the same step.
 *
 * Memory is O(T): the back-pointer table dominates, the active set stays at
 * the survivor count. Per-step cost is a linear scan of the survivors.
 */
class TrimmedSplitter {
public:
    explicit TrimmedSplitter(std::size_t expected_samples = 0);

    /// Feeds the next sample. Throws std::invalid_argument on non-finite input.
    void push(double x);

    std::size_t samples_seen() const { return count_; }
    double running_drift() const { return drift_; } // C_t
    const ActiveClassSet& active() const { return active_; }
    const BackPointerTable& pointers() const { return pointers_; }
    const std::vector<Index>& survivor_counts() const { return counts_; }

    /// Final selection (tau*, M_{tau*}) over the base class and survivors.
    std::pair<Index, double> best_class() const;

    /// Backtracks and packages the result. `source` must be the series that
    /// was pushed (checked by length).
    SplitResult finish(const SampleSeries& source) const;

    /// Optional per-step observer; kept null on hot paths.
    std::function<void(const StepRecord&)> on_step;

private:
    ActiveClassSet active_;
    BackPointerTable pointers_;
    std::vector<Index> counts_;
    double prev_ = 0.0;
    double drift_ = 0.0;
    std::size_t count_ = 0;
};

/// Runs the streaming splitter over a whole series and returns the optimal
/// split. Throws std::invalid_argument on an empty series.
SplitResult trimmed_split(const SampleSeries& series);

/// Active-set indices after processing the full series (T >= 2). Equals the
/// strict right-to-left record set, except that index T-1 also survives when
/// x_{T-1} == x_T (it is inserted by the final step, after elimination).
std::vector<Index> survivor_set(const SampleSeries& series);

} // namespace envsplit
