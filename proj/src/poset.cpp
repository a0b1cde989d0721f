#include "finspace/poset.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>

namespace finspace {

std::vector<int> mask_elements(Mask m) {
    std::vector<int> out;
    out.reserve(std::popcount(m));
    for (unsigned w = m; w;) {
        int i = std::countr_zero(w);
        out.push_back(i);
        w &= w - 1;
    }
    return out;
}

std::string Poset::name(int i) const {
    if (i >= 0 && i < static_cast<int>(labels.size()) && !labels[i].empty()) {
        return labels[i];
    }
    return std::to_string(i);
}

Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
    if (n < 0 || n > kMaxElements) {
        throw IndexOutOfRange("element count must be between 0 and 16, got " + std::to_string(n));
    }
    Poset p;
    p.n = n;
    for (auto [i, j] : covers) {
        if (i < 0 || i >= n || j < 0 || j >= n) {
            throw IndexOutOfRange("cover (" + std::to_string(i) + ", " + std::to_string(j) +
                                  ") references an element outside 0.." + std::to_string(n - 1));
        }
        if (i == j) {
            throw CycleDetected("cover (" + std::to_string(i) + ", " + std::to_string(i) +
                                ") would make the order reflexive");
        }
        p.up[i] |= bit(j);
    }
    // Warshall transitive closure on bit-rows.
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            if ((p.up[i] >> k) & 1u) p.up[i] |= p.up[k];
        }
    }
    for (int i = 0; i < n; ++i) {
        if ((p.up[i] >> i) & 1u) {
            throw CycleDetected("covers imply " + std::to_string(i) + " < " + std::to_string(i));
        }
    }
    for (int i = 0; i < n; ++i) {
        for (unsigned w = p.up[i]; w;) {
            int j = std::countr_zero(w);
            p.down[j] |= bit(i);
            w &= w - 1;
        }
    }
    return p;
}

Poset dual(const Poset& p) {
    Poset d = p;
    std::swap(d.up, d.down);
    return d;
}

std::vector<std::pair<int, int>> cover_pairs(const Poset& p) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < p.n; ++i) {
        for (unsigned w = p.up[i]; w;) {
            int j = std::countr_zero(w);
            w &= w - 1;
            if ((p.up[i] & p.down[j]) == 0) out.emplace_back(i, j);
        }
    }
    return out;
}

static void check_index(const Poset& p, int x) {
    if (x < 0 || x >= p.n) {
        throw IndexOutOfRange("element " + std::to_string(x) + " outside 0.." + std::to_string(p.n - 1));
    }
}

Mask up_set(const Poset& p, int x) {
    check_index(p, x);
    return static_cast<Mask>(p.up[x] | bit(x));
}

Mask down_set(const Poset& p, int x) {
    check_index(p, x);
    return static_cast<Mask>(p.down[x] | bit(x));
}

Mask strict_up_set(const Poset& p, int x) {
    check_index(p, x);
    return p.up[x];
}

Mask strict_down_set(const Poset& p, int x) {
    check_index(p, x);
    return p.down[x];
}

Mask minimal_elements(const Poset& p) {
    Mask m = 0;
    for (int i = 0; i < p.n; ++i) {
        if (p.down[i] == 0) m |= bit(i);
    }
    return m;
}

Mask maximal_elements(const Poset& p) {
    Mask m = 0;
    for (int i = 0; i < p.n; ++i) {
        if (p.up[i] == 0) m |= bit(i);
    }
    return m;
}

/** Levels of all elements, in index order. */
static void compute_levels(const Poset& p, int lev[kMaxElements]) {
    // |down[j]| < |down[i]| whenever j < i, so popcount order is a
    // valid processing order for the longest-chain-below recursion.
    int order[kMaxElements];
    for (int i = 0; i < p.n; ++i) order[i] = i;
    std::sort(order, order + p.n,
              [&](int a, int b) { return std::popcount(p.down[a]) < std::popcount(p.down[b]); });
    for (int idx = 0; idx < p.n; ++idx) {
        int i = order[idx];
        int l = 0;
        for (unsigned w = p.down[i]; w;) {
            int j = std::countr_zero(w);
            l = std::max(l, lev[j] + 1);
            w &= w - 1;
        }
        lev[i] = l;
    }
}

int level(const Poset& p, int x) {
    check_index(p, x);
    int lev[kMaxElements] = {};
    compute_levels(p, lev);
    return lev[x];
}

int height(const Poset& p) {
    if (p.n == 0) throw EmptyPoset("height of the empty poset is undefined");
    int lev[kMaxElements] = {};
    compute_levels(p, lev);
    return *std::max_element(lev, lev + p.n);
}

Poset chain(int n) {
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
    return from_covers(n, covers);
}

Poset antichain(int n) { return from_covers(n, {}); }

Poset induced_subposet(const Poset& p, Mask keep) {
    Poset q;
    int map[kMaxElements];
    for (int i = 0; i < p.n; ++i) {
        if ((keep >> i) & 1u) map[i] = q.n++;
    }
    for (int i = 0; i < p.n; ++i) {
        if (!((keep >> i) & 1u)) continue;
        for (unsigned w = p.up[i] & keep; w;) {
            int j = std::countr_zero(w);
            q.up[map[i]] |= bit(map[j]);
            q.down[map[j]] |= bit(map[i]);
            w &= w - 1;
        }
    }
    if (!p.labels.empty()) {
        q.labels.resize(q.n);
        for (int i = 0; i < p.n; ++i) {
            if ((keep >> i) & 1u) q.labels[map[i]] = p.labels[i];
        }
    }
    return q;
}

Poset relabel(const Poset& p, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != p.n) {
        throw IndexOutOfRange("permutation size does not match element count");
    }
    Poset q;
    q.n = p.n;
    for (int i = 0; i < p.n; ++i) {
        for (unsigned w = p.up[i]; w;) {
            int j = std::countr_zero(w);
            q.up[perm[i]] |= bit(perm[j]);
            q.down[perm[j]] |= bit(perm[i]);
            w &= w - 1;
        }
    }
    if (!p.labels.empty()) {
        q.labels.resize(q.n);
        for (int i = 0; i < p.n; ++i) q.labels[perm[i]] = p.labels[i];
    }
    return q;
}

// ---------------------------------------------------------------------------
// Canonical form
// ---------------------------------------------------------------------------

namespace {

/** One refinement key per vertex; ordering the keys orders the classes. */
struct RefineKey {
    std::uint32_t color;
    std::uint64_t upcode;
    std::uint64_t downcode;
    int vertex;

    bool operator<(const RefineKey& o) const {
        if (color != o.color) return color < o.color;
        if (upcode != o.upcode) return upcode < o.upcode;
        return downcode < o.downcode;
    }
    bool same_class(const RefineKey& o) const {
        return color == o.color && upcode == o.upcode && downcode == o.downcode;
    }
};

/**
 * Iterated degree/level refinement.  Returns the number of classes and
 * fills `color[v]` with iso-invariant class ranks; ranks ascend with
 * element level, so rank order is a linear extension.
 */
int refine_partition(const Poset& p, int color[kMaxElements]) {
    int n = p.n;
    int lev[kMaxElements] = {};
    compute_levels(p, lev);

    RefineKey keys[kMaxElements];
    for (int v = 0; v < n; ++v) {
        keys[v] = {static_cast<std::uint32_t>((lev[v] << 10) | (std::popcount(p.up[v]) << 5) |
                                              std::popcount(p.down[v])),
                   0, 0, v};
    }
    int classes = 0;
    for (;;) {
        std::sort(keys, keys + n);
        int next = 0;
        int ranks[kMaxElements];
        for (int i = 0; i < n; ++i) {
            if (i > 0 && !keys[i].same_class(keys[i - 1])) ++next;
            ranks[keys[i].vertex] = next;
        }
        int count = next + 1;
        if (count == classes || count == n) {
            for (int v = 0; v < n; ++v) color[v] = ranks[v];
            return count;
        }
        classes = count;
        // Re-key: previous rank plus per-class neighbour counts, 4 bits
        // per class (a vertex has at most 15 neighbours, and at most 16
        // classes exist, so the counts pack exactly into one word).
        for (int v = 0; v < n; ++v) {
            std::uint64_t upc = 0, dnc = 0;
            for (unsigned w = p.up[v]; w;) {
                upc += 1ull << (4 * ranks[std::countr_zero(w)]);
                w &= w - 1;
            }
            for (unsigned w = p.down[v]; w;) {
                dnc += 1ull << (4 * ranks[std::countr_zero(w)]);
                w &= w - 1;
            }
            keys[v] = {static_cast<std::uint32_t>(ranks[v]), upc, dnc, v};
        }
    }
}

/** Pack 16-bit MSB-first rows into the contiguous 256-bit code. */
void pack_rows(int n, const std::uint16_t rows[kMaxElements], CanonicalForm& out) {
    out.bits = {};
    int pos = 0;  // bit offset into the 256-bit stream
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j, ++pos) {
            if ((rows[i] >> (15 - j)) & 1u) {
                out.bits[pos >> 6] |= 1ull << (63 - (pos & 63));
            }
        }
    }
}

}  // namespace

CanonicalForm canonical_form(const Poset& p) {
    CanonicalForm out;
    out.n = static_cast<std::uint8_t>(p.n);
    int n = p.n;
    if (n == 0) return out;

    int color[kMaxElements];
    refine_partition(p, color);

    // Group vertices by class rank; within a class, group further by
    // exact neighbourhood profile: vertices with identical (up, down)
    // masks are interchangeable by an automorphism, so only distinct
    // arrangements of profile ids need to be tried.  Everything lives
    // in fixed-size arrays -- this function is the census inner loop.
    std::uint8_t verts_sorted[kMaxElements];             // grouped by class, then profile
    std::uint8_t perm_pids[kMaxElements];                // current arrangement per class
    std::uint8_t class_start[kMaxElements + 1];
    std::uint8_t bucket_start[kMaxElements][kMaxElements];  // per class, per profile id
    int n_classes = 0;
    {
        int order[kMaxElements];
        for (int i = 0; i < n; ++i) order[i] = i;
        std::sort(order, order + n, [&](int a, int b) {
            return color[a] != color[b] ? color[a] < color[b] : a < b;
        });
        double total_arrangements = 1;
        std::pair<std::uint32_t, int> profs[kMaxElements];  // (up<<16|down, vertex)
        for (int i = 0; i < n;) {
            int j = i;
            while (j < n && color[order[j]] == color[order[i]]) ++j;
            int size = j - i;
            for (int k = 0; k < size; ++k) {
                int v = order[i + k];
                profs[k] = {(std::uint32_t(p.up[v]) << 16) | p.down[v], v};
            }
            std::sort(profs, profs + size);
            class_start[n_classes] = static_cast<std::uint8_t>(i);
            double perms = 1, dup = 1;
            int pid = -1;
            int run = 0;
            for (int k = 0; k < size; ++k) {
                if (k == 0 || profs[k].first != profs[k - 1].first) {
                    ++pid;
                    bucket_start[n_classes][pid] = static_cast<std::uint8_t>(k);
                    run = 0;
                }
                ++run;
                perms *= k + 1;
                dup *= run;
                verts_sorted[i + k] = static_cast<std::uint8_t>(profs[k].second);
                perm_pids[i + k] = static_cast<std::uint8_t>(pid);
            }
            total_arrangements *= perms / dup;
            if (total_arrangements > 4e6) {
                throw ResourceLimit("canonical form search space too large");
            }
            ++n_classes;
            i = j;
        }
        class_start[n_classes] = static_cast<std::uint8_t>(n);
    }

    std::uint16_t best[kMaxElements];
    bool have_best = false;
    std::uint8_t q[kMaxElements];  // position -> vertex
    int invq[kMaxElements];        // vertex -> position

    for (;;) {
        // Realize the current per-class arrangements as a vertex order.
        for (int c = 0; c < n_classes; ++c) {
            std::uint8_t next[kMaxElements] = {};
            for (int pos = class_start[c]; pos < class_start[c + 1]; ++pos) {
                std::uint8_t pid = perm_pids[pos];
                q[pos] = verts_sorted[class_start[c] + bucket_start[c][pid] + next[pid]++];
            }
        }
        for (int i = 0; i < n; ++i) invq[q[i]] = i;

        // Row-by-row build with early lexicographic pruning.
        bool better = !have_best, worse = false;
        std::uint16_t rows[kMaxElements];
        for (int i = 0; i < n && !worse; ++i) {
            std::uint16_t r = 0;
            for (unsigned w = p.up[q[i]]; w;) {
                r |= static_cast<std::uint16_t>(0x8000u >> invq[std::countr_zero(w)]);
                w &= w - 1;
            }
            rows[i] = r;
            if (!better) {
                if (r < best[i]) better = true;
                else if (r > best[i]) worse = true;
            }
        }
        if (!worse && better) {
            std::copy(rows, rows + n, best);
            have_best = true;
        }
        // Advance the odometer of per-class arrangements.
        int c = 0;
        for (; c < n_classes; ++c) {
            if (std::next_permutation(perm_pids + class_start[c], perm_pids + class_start[c + 1])) {
                break;  // this class advanced; lower classes wrapped to sorted
            }
        }
        if (c == n_classes) break;
    }

    pack_rows(n, best, out);
    return out;
}

std::vector<std::uint8_t> CanonicalForm::bytes() const {
    std::vector<std::uint8_t> out;
    int nbits = int(n) * int(n);
    out.reserve(1 + (nbits + 7) / 8);
    out.push_back(n);
    for (int b = 0; b < nbits; b += 8) {
        std::uint8_t byte = 0;
        for (int k = 0; k < 8 && b + k < nbits; ++k) {
            int pos = b + k;
            if ((bits[pos >> 6] >> (63 - (pos & 63))) & 1ull) byte |= 0x80u >> k;
        }
        out.push_back(byte);
    }
    return out;
}

std::string CanonicalForm::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    for (std::uint8_t b : bytes()) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 15]);
    }
    return s;
}

Poset poset_from_canonical(const CanonicalForm& c) {
    Poset p;
    p.n = c.n;
    int pos = 0;
    for (int i = 0; i < p.n; ++i) {
        for (int j = 0; j < p.n; ++j, ++pos) {
            if ((c.bits[pos >> 6] >> (63 - (pos & 63))) & 1ull) {
                p.up[i] |= bit(j);
                p.down[j] |= bit(i);
            }
        }
    }
    return p;
}

bool is_isomorphic(const Poset& p, const Poset& q) {
    if (p.n != q.n) return false;
    return canonical_form(p) == canonical_form(q);
}

}  // namespace finspace
