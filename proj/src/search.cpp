#include "rigidwitt/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "rigidwitt/bounds.hpp"
#include "rigidwitt/errors.hpp"
#include "rigidwitt/generators.hpp"
#include "rigidwitt/ideals.hpp"

namespace rigidwitt {

int default_depth_cap(int n, std::int64_t d, bool unscaled) {
    const std::int64_t bound = pfister_number_bound(n, d);
    const std::int64_t cap = unscaled ? 2 * bound : bound;
    return static_cast<int>(std::min<std::int64_t>(cap, 1 << 20));
}

int configured_threads() {
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    if (const char* env = std::getenv("RIGIDWITT_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) threads = static_cast<int>(v);
    }
    return std::max(threads, 1);
}

namespace {

struct State {
    std::vector<std::int32_t> coeffs;
    int dim = 0;
};

class Searcher {
public:
    Searcher(const GeneratorSet& gens, const SearchOptions& opts, int cap)
        : gens_(gens), field_(gens.field()), modulus_(field_.witt_modulus()),
          term_dim_(1 << gens.fold()), failed_(static_cast<std::size_t>(cap) + 1) {
        if (cap > 3 && gens.size() <= opts.ball_limit) build_ball();
    }

    bool used_ball() const noexcept { return !ball_.empty(); }
    std::uint64_t nodes() const noexcept { return nodes_.load(); }

    /// Indices of the terms, or empty on failure (k > 0).
    bool solve(State& s, int k, std::vector<std::uint32_t>& out) {
        nodes_.fetch_add(1, std::memory_order_relaxed);
        if (k == 0) return s.dim == 0;
        if (s.dim > k * term_dim_) return false;
        if (k == 1) {
            if (s.dim != term_dim_) return false;
            const long idx = gens_.find(pack_coeffs(field_, s.coeffs));
            if (idx < 0) return false;
            out.push_back(static_cast<std::uint32_t>(idx));
            return true;
        }
        const std::string key = pack_coeffs(field_, s.coeffs);
        if (k == 2 && !ball_.empty()) {
            const auto it = ball_.find(key);
            if (it == ball_.end()) return false;
            out.push_back(it->second.first);
            out.push_back(it->second.second);
            return true;
        }
        if (known_failure(k, key)) return false;
        for (std::uint32_t i = 0; i < gens_.size(); ++i) {
            if (try_term(s, k, i, out)) return true;
        }
        record_failure(k, key);
        return false;
    }

    /// Subtracts generator i and recurses with k - 1 terms.
    bool try_term(State& s, int k, std::uint32_t i, std::vector<std::uint32_t>& out) {
        const Generator& g = gens_[i];
        apply(s, g, -1);
        bool ok = false;
        if (s.dim <= (k - 1) * term_dim_) ok = solve(s, k - 1, out);
        apply(s, g, +1);
        if (ok) out.push_back(i);
        return ok;
    }

private:
    std::int32_t reduce(std::int64_t v) const noexcept {
        if (modulus_ == 0) return static_cast<std::int32_t>(v);
        return static_cast<std::int32_t>(((v % modulus_) + modulus_) % modulus_);
    }

    void apply(State& s, const Generator& g, int sign) const noexcept {
        for (const auto& [idx, c] : g.support) {
            const std::int32_t before = s.coeffs[idx];
            const std::int32_t after = reduce(static_cast<std::int64_t>(before) + sign * c);
            s.dim += coefficient_dim(field_, after) - coefficient_dim(field_, before);
            s.coeffs[idx] = after;
        }
    }

    bool known_failure(int k, const std::string& key) {
        std::lock_guard lock(memo_mutex_);
        return failed_[k].count(key) != 0;
    }

    void record_failure(int k, const std::string& key) {
        std::lock_guard lock(memo_mutex_);
        failed_[k].insert(key);
    }

    void build_ball() {
        for (std::uint32_t i = 0; i < gens_.size(); ++i) {
            for (std::uint32_t j = i; j < gens_.size(); ++j) {
                GroupRingElt sum = gens_[i].elt + gens_[j].elt;
                ball_.emplace(pack_coeffs(field_, sum.coeffs()), std::make_pair(i, j));
            }
        }
    }

    const GeneratorSet& gens_;
    FieldDesc field_;
    int modulus_;
    int term_dim_;
    std::atomic<std::uint64_t> nodes_{0};
    std::mutex memo_mutex_;
    std::vector<std::unordered_set<std::string>> failed_;
    std::unordered_map<std::string, std::pair<std::uint32_t, std::uint32_t>> ball_;
};

/// Depth-k search with the top level split over workers; the smallest successful
/// top-level index wins so the certificate does not depend on the schedule.
bool solve_parallel(Searcher& searcher, const State& root, int k, std::size_t count, int threads,
                    std::vector<std::uint32_t>& out) {
    if (k <= 2 || threads <= 1) {
        State s = root;
        return searcher.solve(s, k, out);
    }
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{count};
    std::mutex result_mutex;
    std::map<std::size_t, std::vector<std::uint32_t>> found;
    auto worker = [&] {
        State s = root;
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count || i >= best.load()) return;
            std::vector<std::uint32_t> terms;
            if (!searcher.try_term(s, k, static_cast<std::uint32_t>(i), terms)) continue;
            std::lock_guard lock(result_mutex);
            found.emplace(i, std::move(terms));
            std::size_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (found.empty()) return false;
    out = found.begin()->second;
    return true;
}

}  // namespace

PfisterNumberResult pfister_number(const DiagonalForm& phi, int n, const SearchOptions& opts) {
    if (n < 1) throw PreconditionError("pfister_number: n must be positive");
    if (!in_In(phi, n)) throw NotInIdeal("pfister_number: form is not in I^" + std::to_string(n));
    const FieldDesc& field = phi.field();
    const DiagonalForm an = anisotropic_part(phi);

    PfisterNumberResult result;
    result.certificate = PfisterCertificate{field, n, opts.unscaled, {}, WittClass(an)};
    const int cap = opts.depth_cap.value_or(default_depth_cap(n, static_cast<std::int64_t>(an.dim()),
                                                              opts.unscaled));
    result.stats.depth_cap = cap;
    if (an.empty()) return result;

    const GeneratorSet& gens = generator_set(field, n, opts.unscaled);
    result.stats.generators = gens.size();
    Searcher searcher(gens, opts, std::max(cap, 1));
    result.stats.used_ball = searcher.used_ball();

    const GroupRingElt target = to_group_ring(an);
    const State root{target.coeffs(), target.anisotropic_dim()};
    const int threads = opts.threads > 0 ? opts.threads : configured_threads();

    for (int k = 1; k <= cap; ++k) {
        std::vector<std::uint32_t> terms;
        if (!solve_parallel(searcher, root, k, gens.size(), threads, terms)) continue;
        result.value = k;
        for (std::uint32_t idx : terms) result.certificate.terms.push_back(gens[idx].spec);
        result.stats.nodes = searcher.nodes();
        if (!result.certificate.verify()) {
            throw InternalContradiction("pfister_number: certificate failed verification");
        }
        return result;
    }
    throw DepthCapExceeded(cap, "pfister_number: no certificate with at most " + std::to_string(cap) +
                                    " terms");
}

// ---------------------------------------------------------------------------

BruteForcePfisterOracle::BruteForcePfisterOracle(FieldDesc field, int n, int max_k, bool unscaled)
    : field_(field) {
    if (n < 1 || max_k < 0) throw PreconditionError("brute-force oracle: bad parameters");
    const auto classes = all_classes(field);
    std::vector<SquareClass> scalars = classes;
    if (unscaled) {
        scalars = {SquareClass::one(field)};
        if (field.level() != Level::One) scalars.push_back(SquareClass::minus_one(field));
    }
    auto key_of = [](const DiagonalForm& f) { return std::vector<ClassBits>(f.bits().begin(), f.bits().end()); };

    std::set<std::vector<ClassBits>> terms;
    // Nondecreasing slot tuples enumerate slot multisets.
    std::vector<std::size_t> idx(n, 0);
    for (;;) {
        std::vector<SquareClass> slots;
        for (std::size_t i : idx) slots.push_back(classes[i]);
        for (const auto& c : scalars) {
            const DiagonalForm an = anisotropic_part(pfister(PfisterSpec{c, slots}));
            if (!an.empty()) terms.insert(key_of(an));
        }
        int pos = n - 1;
        while (pos >= 0 && idx[pos] + 1 == classes.size()) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int j = pos + 1; j < n; ++j) idx[j] = idx[pos];
    }

    term_count_ = terms.size();
    levels_.push_back({std::vector<ClassBits>{}});
    for (int k = 1; k <= max_k; ++k) {
        std::set<std::vector<ClassBits>> next;
        for (const auto& prev : levels_.back()) {
            const DiagonalForm base = DiagonalForm::from_bits(field, prev);
            for (const auto& t : terms) {
                next.insert(key_of(anisotropic_part(orth_sum(base, DiagonalForm::from_bits(field, t)))));
            }
        }
        levels_.push_back(std::move(next));
    }
}

std::optional<int> BruteForcePfisterOracle::number(const DiagonalForm& phi) const {
    require_same_field(field_, phi.field(), "BruteForcePfisterOracle::number");
    const DiagonalForm an = anisotropic_part(phi);
    const std::vector<ClassBits> key(an.bits().begin(), an.bits().end());
    for (std::size_t k = 0; k < levels_.size(); ++k) {
        if (levels_[k].count(key)) return static_cast<int>(k);
    }
    return std::nullopt;
}

}  // namespace rigidwitt
