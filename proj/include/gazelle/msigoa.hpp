#pragma once

#include <deque>
#include <utility>

#include "gazelle/goa.hpp"

namespace gazelle {

/// Thirds of the run under the iteration-based updating framework.
enum class IbufPhase { early, middle, late };

/// early iff t < T/3, middle iff T/3 <= t < 2T/3, late iff t >= 2T/3
/// (boundary points belong to the later phase).
IbufPhase ibuf_phase(int t, int T);

struct ArchiveEntry {
    Vec position;
    double fitness;
};

/// FIFO buffer of position snapshots from the better half of recent
/// populations. Eviction is strictly oldest-first; entries never alias
/// live agents.
class DominantArchive {
  public:
    explicit DominantArchive(std::size_t capacity);

    std::size_t capacity() const { return capacity_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::deque<ArchiveEntry>& members() const { return members_; }

    void push(ArchiveEntry entry);

  private:
    std::size_t capacity_;
    std::deque<ArchiveEntry> members_;
};

/// Phase-scheduled update sweep. Early phase: every agent grazes
/// (exploit_step). Middle phase: first half Levy exploration, second half
/// predator-following (explore_brownian_step). Late phase: first half Levy
/// exploration, second half local Levy moves around the elite
/// (exploit_levy_step). Greedy acceptance and elite handling as in
/// goa_update_sweep; no branch-selection draw is consumed. Returns the
/// number of objective evaluations.
long ibuf_update(Population& pop, RngStream& rng, const GoaParams& params, int t, int T,
                 const Problem& problem, const MotionScale& scale = {});

/// Appends snapshots of the best ceil(N/2) agents (fitness ascending, ties
/// by index) to the archive, evicting oldest entries beyond capacity.
void archive_update(DominantArchive& archive, const Population& pop);

/// Rank weights w_i = (ln(n + 0.5) - ln i) / sum_k (ln(n + 0.5) - ln k)
/// for i = 1..n (rank 1 = best). Positive, strictly decreasing, sum 1.
Vec dprm_weights(int n);

/// Weighted centre x_d of the archive (members re-ranked by fitness
/// ascending at sampling time) and one noise sample
///   g = sum_k eta_k (X_k - x_d) / sqrt(n),  eta_k ~ N(0,1) i.i.d.,
/// whose covariance is exactly the archive scatter matrix
/// (1/n) sum_k (X_k - x_d)(X_k - x_d)^T. Draws n normals in rank order.
/// Throws std::runtime_error on an empty archive.
std::pair<Vec, Vec> dprm_center_and_sample(const DominantArchive& archive, RngStream& rng);

/// Restart sweep: per agent, candidate = (x_i + x_d + elite)/3 + g with a
/// fresh noise sample g (n normals per agent, rank order); clamp, evaluate,
/// then adopt greedily (keep only if strictly better) or unconditionally,
/// per `acceptance`. x_d, the ranked weights and the elite attractor are
/// fixed at sweep entry; the elite is refreshed at the end. If `restart` is
/// given, agents with a zero entry are skipped entirely and consume no
/// draws. No-op on an empty archive. Returns the number of objective
/// evaluations.
long dprm_restart(Population& pop, const DominantArchive& archive, RngStream& rng,
                  const Problem& problem, const std::vector<char>* restart = nullptr,
                  DprmAcceptance acceptance = DprmAcceptance::greedy);

/// One full run of the configurable variant engine:
/// per iteration, (a) motion scales from the adaptive tuning strategy when
/// enabled, (b) ibuf_update when enabled else the baseline coin-flip sweep,
/// (c) escape sweep, (d) archive update + restart sweep when the restart
/// strategy is enabled. With every strategy off this is bit-identical to
/// run_goa (same draw sequence).
std::pair<RunRecord, ConvergenceTrace> run_variant(const Problem& problem,
                                                   const RunConfig& config);

}  // namespace gazelle
