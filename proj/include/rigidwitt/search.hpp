#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rigidwitt/witt.hpp"

namespace rigidwitt {

/// phi = sum of the terms in the Witt ring; the number of terms is the claimed GP_n (or P_n).
struct PfisterCertificate {
    FieldDesc field;
    int n = 0;
    bool unscaled = false;
    std::vector<PfisterSpec> terms;
    WittClass target;

    int length() const noexcept { return static_cast<int>(terms.size()); }
    /// Checks the sum both in the group ring and with Springer anisotropic parts.
    bool verify() const;
    /// FNV-1a 64 of the printed canonical target class.
    std::uint64_t hash() const;
};

std::uint64_t fnv1a64(const std::string& text) noexcept;

/// JSON document with field, n, target, terms and hash (schema 1).
std::string certificate_json(const PfisterCertificate& cert, int indent = 2);

struct SearchOptions {
    bool unscaled = false;
    std::optional<int> depth_cap;
    /// 0 means RIGIDWITT_THREADS or the hardware concurrency.
    int threads = 0;
    /// Largest generator count for which the ball of all 2-sums is materialized.
    std::size_t ball_limit = 2500;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::size_t generators = 0;
    bool used_ball = false;
    int depth_cap = 0;
};

struct PfisterNumberResult {
    int value = 0;
    PfisterCertificate certificate;
    SearchStats stats;
};

/// Default depth cap: the applicable bound at d = dim an(phi), doubled when unscaled.
int default_depth_cap(int n, std::int64_t d, bool unscaled);

/// Worker count from RIGIDWITT_THREADS (positive integer) or the hardware.
int configured_threads();

/// Exact GP_n(phi) (P_n when unscaled) by iterative deepening over Witt classes with a
/// hash lookup in the generator set at the last level. Throws NotInIdeal, DepthCapExceeded.
PfisterNumberResult pfister_number(const DiagonalForm& phi, int n, const SearchOptions& opts = {});

/// Independent minimality oracle: enumerates every (scalar, slot multiset) directly,
/// reduces with Springer anisotropic parts and builds the classes reachable by exactly
/// 0..max_k terms. No group ring, no generator set, no search.
class BruteForcePfisterOracle {
public:
    BruteForcePfisterOracle(FieldDesc field, int n, int max_k, bool unscaled = false);

    /// Least k <= max_k with phi a sum of k terms, if any.
    std::optional<int> number(const DiagonalForm& phi) const;
    std::size_t class_count() const noexcept { return term_count_; }

private:
    FieldDesc field_;
    std::size_t term_count_ = 0;
    std::vector<std::set<std::vector<ClassBits>>> levels_;  // canonical reprs per k
};

}  // namespace rigidwitt
