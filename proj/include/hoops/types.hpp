#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace hoops {

constexpr double kNA = std::numeric_limits<double>::quiet_NaN();

inline bool is_na(double x) { return std::isnan(x); }

/// One side of a match's box score. Possessions may be missing (NaN) in the
/// input, in which case they are estimated downstream.
struct BoxScore {
    int p2a = 0;   ///< 2-point field goals attempted
    int p3a = 0;   ///< 3-point field goals attempted
    int fta = 0;   ///< free throws attempted
    int p2m = 0;   ///< 2-point field goals made
    int p3m = 0;   ///< 3-point field goals made
    int ftm = 0;   ///< free throws made
    int oreb = 0;  ///< offensive rebounds
    int dreb = 0;  ///< defensive rebounds
    int tov = 0;   ///< turnovers
    double poss = kNA;  ///< possessions (NaN when not provided)

    /// Returns a description of the first violated invariant, if any.
    std::optional<std::string> invariant_violation() const {
        if (p2a < 0 || p3a < 0 || fta < 0 || p2m < 0 || p3m < 0 || ftm < 0 ||
            oreb < 0 || dreb < 0 || tov < 0)
            return "negative count";
        if (p2m > p2a) return "p2m > p2a";
        if (p3m > p3a) return "p3m > p3a";
        if (ftm > fta) return "ftm > fta";
        if (!is_na(poss) && poss < 0) return "negative possessions";
        return std::nullopt;
    }
};

struct MatchRecord {
    std::string season;      ///< season label, e.g. "2004-2005"
    long match_index = -1;   ///< global chronological index, assigned on load
    std::string date;        ///< ISO-8601 YYYY-MM-DD
    std::string home_team;
    std::string away_team;
    int result = 0;          ///< 1 = home victory
    BoxScore home_box;
    BoxScore away_box;
};

/// Chronologically ordered match collection.
struct Dataset {
    std::vector<MatchRecord> matches;
    std::vector<std::string> teams;    ///< canonical identifiers, sorted
    std::vector<std::string> seasons;  ///< season labels in chronological order

    std::size_t size() const { return matches.size(); }

    /// Recompute teams/seasons from the match list (chronological order assumed).
    void reindex();
};

}  // namespace hoops
