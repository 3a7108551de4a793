#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

namespace tbfloer {

enum class GradingKind { relative, ungraded };

// One infinite tower. Upward towers are Z[u^-1] with the generator 1 at
// `grading` (the bottom) and u^-1 raising the grading by 2; downward towers
// are Z[u] with `grading` the top. Gradings are absent in ungraded modules.
struct TowerSummand {
    bool downward = false;
    std::optional<long long> grading;

    bool operator==(const TowerSummand&) const = default;
};

// Z[u^-1]/u^-length, elements at bottom, bottom+2, ..., bottom+2(length-1).
struct TorsionSummand {
    long long length = 0;
    std::optional<long long> bottom;

    bool operator==(const TorsionSummand&) const = default;
};

// Z^rank with u acting as zero, concentrated in one grading.
struct FreeSummand {
    long long rank = 0;
    std::optional<long long> grading;

    bool operator==(const FreeSummand&) const = default;
};

// Graded module over the one-variable polynomial ring, as a direct sum of
// tower / torsion / u-trivial free summands. `twisted` marks the modules
// whose torsion+free part is tensored with Laurent polynomials in T.
// Gradings are relative: only differences are meaningful.
struct UModule {
    GradingKind grading_kind = GradingKind::relative;
    bool twisted = false;
    std::vector<FreeSummand> free_parts;
    std::vector<TorsionSummand> torsion_parts;
    std::vector<TowerSummand> towers;

    void add_free(long long rank, std::optional<long long> grading) {
        if (rank != 0) free_parts.push_back({rank, grading});
    }
    void add_torsion(long long length, std::optional<long long> bottom) {
        if (length != 0) torsion_parts.push_back({length, bottom});
    }
    void add_tower(std::optional<long long> bottom, bool downward = false) {
        towers.push_back({downward, bottom});
    }

    bool is_zero() const {
        return free_parts.empty() && torsion_parts.empty() && towers.empty();
    }

    // Deterministic form: free summands merged per grading, everything sorted.
    // In ungraded modules the free part collapses to a single total rank.
    UModule canonical() const {
        UModule m;
        m.grading_kind = grading_kind;
        m.twisted = twisted;
        if (grading_kind == GradingKind::ungraded) {
            long long total = 0;
            for (const auto& f : free_parts) total += f.rank;
            if (total != 0) m.free_parts.push_back({total, std::nullopt});
            for (const auto& t : torsion_parts) m.torsion_parts.push_back({t.length, std::nullopt});
            for (const auto& t : towers) m.towers.push_back({t.downward, std::nullopt});
        } else {
            std::map<long long, long long> by_grading;
            for (const auto& f : free_parts) by_grading[f.grading.value()] += f.rank;
            for (const auto& [g, r] : by_grading)
                if (r != 0) m.free_parts.push_back({r, g});
            m.torsion_parts = torsion_parts;
            m.towers = towers;
        }
        auto tkey = [](const TorsionSummand& t) {
            return std::make_tuple(t.bottom.value_or(0), t.length);
        };
        std::sort(m.torsion_parts.begin(), m.torsion_parts.end(),
                  [&](const auto& a, const auto& b) { return tkey(a) < tkey(b); });
        std::sort(m.towers.begin(), m.towers.end(), [](const auto& a, const auto& b) {
            return std::make_tuple(a.downward, a.grading.value_or(0)) <
                   std::make_tuple(b.downward, b.grading.value_or(0));
        });
        return m;
    }

    UModule forget_gradings() const {
        UModule m = *this;
        m.grading_kind = GradingKind::ungraded;
        for (auto& f : m.free_parts) f.grading.reset();
        for (auto& t : m.torsion_parts) t.bottom.reset();
        for (auto& t : m.towers) t.grading.reset();
        return m.canonical();
    }

    friend bool operator==(const UModule& a, const UModule& b) {
        UModule ca = a.canonical(), cb = b.canonical();
        return ca.grading_kind == cb.grading_kind && ca.twisted == cb.twisted &&
               ca.free_parts == cb.free_parts && ca.torsion_parts == cb.torsion_parts &&
               ca.towers == cb.towers;
    }
};

// Integer homology per grading; the hat-flavor output.
struct HatModule {
    std::map<long long, long long> rank_by_grading;

    void add(long long grading, long long rank) {
        if (rank == 0) return;
        auto it = rank_by_grading.find(grading);
        if (it == rank_by_grading.end())
            rank_by_grading[grading] = rank;
        else if ((it->second += rank) == 0)
            rank_by_grading.erase(it);
    }

    long long total_rank() const {
        long long t = 0;
        for (const auto& [g, r] : rank_by_grading) t += r;
        return t;
    }

    long long signed_euler() const {
        long long chi = 0;
        for (const auto& [g, r] : rank_by_grading) chi += (g % 2 == 0) ? r : -r;
        return chi;
    }

    bool operator==(const HatModule&) const = default;
};

}  // namespace tbfloer
