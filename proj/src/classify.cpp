#include "finspace/classify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "finspace/collapse.hpp"
#include "finspace/fixtures.hpp"
#include "finspace/structure.hpp"

namespace finspace {

std::string type_name(TypeLabel t) {
    switch (t) {
        case TypeLabel::I: return "I";
        case TypeLabel::II: return "II";
        case TypeLabel::III: return "III";
        case TypeLabel::IV: return "IV";
        case TypeLabel::V: return "V";
        case TypeLabel::VI: return "VI";
        case TypeLabel::VII: return "VII";
        case TypeLabel::Iop: return "I^op";
        case TypeLabel::IIop: return "II^op";
        case TypeLabel::IIIop: return "III^op";
        case TypeLabel::Unmatched: return "Unmatched";
    }
    return "?";
}

namespace {

/** Estimated heap bytes per dedup entry (node, padding, bucket share). */
constexpr std::uint64_t kBytesPerEntry = 72;

/**
 * Canonical-form set sharded by hash so concurrent extension workers
 * contend only per shard.  Single-job runs skip the locks.
 */
class DedupSet {
  public:
    DedupSet(bool locked, std::uint64_t max_mem) : locked_(locked), max_mem_(max_mem) {}

    bool insert(const CanonicalForm& c) {
        std::size_t h = CanonicalFormHash{}(c);
        std::size_t s = (h >> 60) & (kShards - 1);
        bool added;
        if (locked_) {
            std::lock_guard<std::mutex> g(locks_[s]);
            added = shards_[s].insert(c).second;
        } else {
            added = shards_[s].insert(c).second;
        }
        if (added && max_mem_ > 0) {
            std::uint64_t entries = ++entries_;
            if (entries * kBytesPerEntry > max_mem_) {
                throw ResourceLimit("canonical-form set exceeds the configured memory cap");
            }
        }
        return added;
    }

    std::vector<CanonicalForm> drain() {
        std::vector<CanonicalForm> out;
        std::size_t total = 0;
        for (auto& s : shards_) total += s.size();
        out.reserve(total);
        for (auto& s : shards_) {
            out.insert(out.end(), s.begin(), s.end());
            s.clear();
        }
        return out;
    }

  private:
    static constexpr std::size_t kShards = 16;
    bool locked_;
    std::uint64_t max_mem_;
    std::atomic<std::uint64_t> entries_{0};
    std::unordered_set<CanonicalForm, CanonicalFormHash> shards_[kShards];
    std::mutex locks_[kShards];
};

/**
 * Call `f` on every down-closed subset of q.  Vertex i may join only
 * when all its strict predecessors are in, and canonical vertex order
 * is a linear extension, so predecessors always have smaller indices.
 */
template <typename F>
void for_each_ideal_rec(const Poset& q, int i, Mask s, const F& f) {
    if (i == q.n) {
        f(s);
        return;
    }
    for_each_ideal_rec(q, i + 1, s, f);
    if ((q.down[i] & ~s) == 0) {
        for_each_ideal_rec(q, i + 1, static_cast<Mask>(s | bit(i)), f);
    }
}

/** Extend q by one new maximal element whose strict down-set is s. */
Poset extend_by_max(const Poset& q, Mask s) {
    Poset p;
    p.n = q.n + 1;
    Mask top = bit(q.n);
    for (int i = 0; i < q.n; ++i) {
        p.up[i] = static_cast<Mask>(q.up[i] | (((s >> i) & 1u) ? top : 0));
        p.down[i] = q.down[i];
    }
    p.down[q.n] = s;
    return p;
}

void process_rep_range(const std::vector<CanonicalForm>& reps, std::size_t lo, std::size_t hi,
                       DedupSet& next) {
    for (std::size_t i = lo; i < hi; ++i) {
        Poset q = poset_from_canonical(reps[i]);
        for_each_ideal_rec(q, 0, 0, [&](Mask s) {
            next.insert(canonical_form(extend_by_max(q, s)));
        });
    }
}

}  // namespace

std::uint64_t enumerate_posets(int n, const std::function<void(const Poset&)>& sink,
                               const EnumOptions& opts) {
    if (n < 0 || n > kMaxElements) {
        throw IndexOutOfRange("element count must be between 0 and 16, got " + std::to_string(n));
    }
    int jobs = std::max(1, opts.jobs);
    std::vector<CanonicalForm> reps{canonical_form(Poset{})};  // the empty poset
    for (int k = 0; k < n; ++k) {
        DedupSet next(jobs > 1, opts.max_mem_bytes);
        if (jobs > 1 && reps.size() > 64) {
            std::vector<std::thread> pool;
            std::size_t chunk = (reps.size() + jobs - 1) / jobs;
            std::exception_ptr failure;
            std::mutex failure_mu;
            for (int w = 0; w < jobs; ++w) {
                std::size_t lo = std::min(reps.size(), w * chunk);
                std::size_t hi = std::min(reps.size(), lo + chunk);
                pool.emplace_back([&, lo, hi] {
                    try {
                        process_rep_range(reps, lo, hi, next);
                    } catch (...) {
                        std::lock_guard<std::mutex> g(failure_mu);
                        if (!failure) failure = std::current_exception();
                    }
                });
            }
            for (auto& t : pool) t.join();
            if (failure) std::rethrow_exception(failure);
        } else {
            process_rep_range(reps, 0, reps.size(), next);
        }
        reps = next.drain();
    }
    if (sink) {
        for (const CanonicalForm& c : reps) sink(poset_from_canonical(c));
    }
    return reps.size();
}

std::vector<Poset> enumerate_posets(int n, const EnumOptions& opts) {
    std::vector<CanonicalForm> forms;
    enumerate_posets(
        n, [&](const Poset& p) { forms.push_back(canonical_form(p)); }, opts);
    std::sort(forms.begin(), forms.end());
    std::vector<Poset> out;
    out.reserve(forms.size());
    for (const CanonicalForm& c : forms) out.push_back(poset_from_canonical(c));
    return out;
}

std::vector<Poset> filter_minimal(const std::vector<Poset>& posets) {
    std::vector<Poset> out;
    for (const Poset& p : posets) {
        if (is_minimal_space(p)) out.push_back(p);
    }
    return out;
}

void match_types(std::vector<ClassificationRecord>& records) {
    std::vector<std::pair<CanonicalForm, TypeLabel>> table;
    for (const Fixture& f : builtin_fixtures()) {
        table.emplace_back(canonical_form(f.poset), f.label);
    }
    for (ClassificationRecord& r : records) {
        r.matched_type = TypeLabel::Unmatched;
        for (auto& [canon, label] : table) {
            if (canon == r.canon) {
                r.matched_type = label;
                break;
            }
        }
        if (r.matched_type == TypeLabel::Unmatched && r.canon.n == 10) {
            throw UnmatchedSurvivor("ten-point survivor " + r.canon.hex() +
                                    " matches no built-in fixture");
        }
    }
}

std::pair<CensusStats, std::vector<ClassificationRecord>> classify(int n, const EnumOptions& opts) {
    if (n > 12) {
        throw SizeLimitExceeded("classification relies on the triviality test, sound only up to "
                                "12 points; got " +
                                std::to_string(n));
    }
    CensusStats stats;
    stats.n = n;
    std::vector<Poset> survivors_in;
    stats.total = enumerate_posets(
        n,
        [&](const Poset& p) {
            if (!is_minimal_space(p)) return;
            ++stats.minimal;
            // A minimal space on more than one point equals its core,
            // so it is never contractible; single points are.
            if (p.n > 1 && is_homotopically_trivial(p)) survivors_in.push_back(p);
        },
        opts);

    std::vector<ClassificationRecord> records;
    for (const Poset& p : survivors_in) {
        ClassificationRecord r;
        r.canon = canonical_form(p);
        LevelData d = levels(p);
        r.layer_vector = {d.m, d.r, d.n};
        r.height = height(p);
        r.antichain_B = d.E_B.empty();
        r.D = d.D;
        r.beta_multiset = d.beta;
        r.alpha_multiset = d.alpha;
        std::sort(r.beta_multiset.begin(), r.beta_multiset.end());
        std::sort(r.alpha_multiset.begin(), r.alpha_multiset.end());
        r.s_multiset = d.s;
        r.t_multiset = d.t;
        std::sort(r.s_multiset.begin(), r.s_multiset.end());
        std::sort(r.t_multiset.begin(), r.t_multiset.end());
        r.profile = homology(order_complex(p));
        r.dual_canon = canonical_form(dual(p));
        r.self_dual = r.dual_canon == r.canon;
        CollapseOutcome g = greedy_collapse(order_complex(p));
        r.greedy_collapsed = g.collapsed_to_point;
        r.collapse_steps = static_cast<int>(g.steps_taken.size());
        records.push_back(std::move(r));
    }
    std::sort(records.begin(), records.end(),
              [](const ClassificationRecord& a, const ClassificationRecord& b) {
                  return a.canon < b.canon;
              });
    match_types(records);
    stats.survivors = records.size();
    for (const ClassificationRecord& r : records) ++stats.by_middle[r.layer_vector[1]];
    return {stats, records};
}

}  // namespace finspace
