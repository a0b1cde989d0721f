#include "finspace/complex.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace finspace {

bool SimplicialComplex::contains(const Simplex& s) const {
    int k = static_cast<int>(s.size()) - 1;
    if (k < 0 || k > dim()) return false;
    const auto& row = simplices[k];
    return std::binary_search(row.begin(), row.end(), s);
}

std::size_t SimplicialComplex::size() const {
    std::size_t total = 0;
    for (const auto& row : simplices) total += row.size();
    return total;
}

namespace {

/**
 * Extend the current chain by every vertex in `allowed` (all greater
 * than the chain's last vertex and comparable with every chain
 * member).  Pre-order DFS in increasing vertex order emits each
 * per-dimension list already lexicographically sorted.
 */
void extend_chains(const Poset& p, const Mask comp[kMaxElements], Simplex& chain, Mask allowed,
                   std::vector<std::vector<Simplex>>& out) {
    for (unsigned w = allowed; w;) {
        int v = std::countr_zero(w);
        w &= w - 1;
        chain.push_back(v);
        std::size_t k = chain.size() - 1;
        if (out.size() <= k) out.emplace_back();
        out[k].push_back(chain);
        Mask higher = static_cast<Mask>(p.all_mask() & ~((bit(v) << 1) - 1));
        extend_chains(p, comp, chain, static_cast<Mask>(allowed & comp[v] & higher), out);
        chain.pop_back();
    }
}

}  // namespace

SimplicialComplex order_complex(const Poset& p) {
    if (p.n == 0) throw EmptyPoset("the order complex of the empty poset is undefined");
    SimplicialComplex k;
    k.n_verts = p.n;
    Mask comp[kMaxElements];
    for (int i = 0; i < p.n; ++i) comp[i] = static_cast<Mask>(p.up[i] | p.down[i]);
    Simplex chain;
    chain.reserve(p.n);
    extend_chains(p, comp, chain, p.all_mask(), k.simplices);
    return k;
}

std::vector<long long> f_vector(const SimplicialComplex& k) {
    std::vector<long long> f;
    f.reserve(k.simplices.size());
    for (const auto& row : k.simplices) f.push_back(static_cast<long long>(row.size()));
    return f;
}

long long euler_char(const SimplicialComplex& k) {
    long long chi = 0;
    int sign = 1;
    for (const auto& row : k.simplices) {
        chi += sign * static_cast<long long>(row.size());
        sign = -sign;
    }
    return chi;
}

long long euler_formula_antichain(const LevelData& d) {
    if (!d.E_B.empty()) {
        throw PreconditionViolated("middle layer is not an antichain (E_B is nonempty)");
    }
    long long sum_deg = 0, sum_prod = 0;
    for (int j = 0; j < d.r; ++j) {
        sum_deg += d.beta[j] + d.alpha[j];
        sum_prod += static_cast<long long>(d.beta[j]) * d.alpha[j];
    }
    return (d.m + d.r + d.n) - (sum_deg + d.C_ca) + sum_prod;
}

long long euler_formula_h3(const LevelData& d) {
    // A 3-chain inside B is a middle with both a B-predecessor and a
    // B-successor.
    std::vector<char> has_pred(d.r, 0), has_succ(d.r, 0);
    for (auto& [i, k] : d.E_B) {
        has_succ[i] = 1;
        has_pred[k] = 1;
    }
    for (int j = 0; j < d.r; ++j) {
        if (has_pred[j] && has_succ[j]) {
            throw PreconditionViolated("middle layer contains a 3-chain");
        }
    }
    long long f0 = d.m + d.r + d.n;
    long long f1 = d.C_ca + static_cast<long long>(d.E_B.size());
    long long f2 = 0, f3 = 0;
    for (int j = 0; j < d.r; ++j) {
        f1 += d.beta[j] + d.alpha[j];
        f2 += static_cast<long long>(d.beta[j]) * d.alpha[j];
    }
    for (auto& [i, k] : d.E_B) {
        f2 += d.beta[i] + d.alpha[k];
        f3 += static_cast<long long>(d.beta[i]) * d.alpha[k];
    }
    return f0 - f1 + f2 - f3;
}

std::string dump(const SimplicialComplex& k) {
    std::ostringstream ss;
    ss << "dim " << k.dim() << "\n";
    for (int d = 0; d < static_cast<int>(k.simplices.size()); ++d) {
        for (const auto& s : k.simplices[d]) {
            ss << d << ":";
            for (int v : s) ss << " " << v;
            ss << "\n";
        }
    }
    return ss.str();
}

}  // namespace finspace
