#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gazelle/stochastics.hpp"

namespace gazelle {

/// Baseline gazelle-algorithm parameters.
struct GoaParams {
    double grazing_speed = 0.88;          // s
    double predator_success_rate = 0.34;  // PSR
    CfVariant cf_variant = CfVariant::rising;
    LevyParams levy = LevyParams::make();
};

/// Which agents the dominant-population restart touches.
enum class DprmScope { all, non_improved };

/// How a restart candidate is adopted: kept only when strictly better
/// (greedy) or written unconditionally like the escape sweep (replace).
enum class DprmAcceptance { greedy, replace };

/// Toggles and knobs of the three improvement strategies. The eight on/off
/// combinations are the ablation variant matrix (goa, goa-1 ... msigoa).
/// The restart writes its candidates unconditionally by default, which is
/// what gives it its diversity-injection role; greedy adoption is available
/// as a conservative alternative.
struct StrategyConfig {
    bool use_ibuf = false;  // phase-scheduled update framework
    bool use_apts = false;  // iteration-scaled motion vectors
    bool use_dprm = false;  // dominant-population restart
    int nd_multiplier = 25;  // archive capacity = nd_multiplier * dimension
    AptsBrownianExponent apts_brownian_exponent = AptsBrownianExponent::t_over_T;
    DprmScope dprm_scope = DprmScope::all;
    DprmAcceptance dprm_acceptance = DprmAcceptance::replace;

    static StrategyConfig variant(bool ibuf, bool apts, bool dprm) {
        StrategyConfig c;
        c.use_ibuf = ibuf;
        c.use_apts = apts;
        c.use_dprm = dprm;
        return c;
    }
    static StrategyConfig goa() { return variant(false, false, false); }
    static StrategyConfig msigoa() { return variant(true, true, true); }

    /// Resolves an ablation-variant name: "goa", "goa-1", "goa-2", "goa-3",
    /// "goa-12", "goa-13", "goa-23", "msigoa". Empty optional if unknown.
    static std::optional<StrategyConfig> by_name(std::string_view name);

    /// The eight variant names in canonical (ablation-table) order.
    static const std::vector<std::string>& variant_names();
};

/// Full configuration of a (multi-)run experiment.
struct RunConfig {
    int population_size = 30;
    int max_iterations = 500;
    int runs = 51;
    std::uint64_t seed = 0;
    GoaParams params;
    StrategyConfig strategy;
};

}  // namespace gazelle
