#include "finspace/collapse.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "finspace/io.hpp"

namespace finspace {

namespace {

std::string simplex_text(const Simplex& s) {
    std::string out;
    for (int v : s) {
        if (!out.empty()) out += " ";
        out += std::to_string(v);
    }
    return out;
}

/** Number of d-simplices properly containing tau (|tau| = d). */
int cofacet_count(const SimplicialComplex& kx, const Simplex& tau, const Simplex** only) {
    int d = static_cast<int>(tau.size());  // dimension of the cofacets
    *only = nullptr;
    if (d > kx.dim()) return 0;
    int count = 0;
    for (const Simplex& s : kx.simplices[d]) {
        if (std::includes(s.begin(), s.end(), tau.begin(), tau.end())) {
            ++count;
            *only = &s;
        }
    }
    return count;
}

bool is_single_vertex(const SimplicialComplex& kx) {
    return kx.dim() == 0 && kx.simplices[0].size() == 1;
}

}  // namespace

std::vector<CollapseStep> free_pairs(const SimplicialComplex& kx) {
    std::vector<CollapseStep> out;
    for (int d = kx.dim(); d >= 1; --d) {
        std::vector<CollapseStep> level;
        for (const Simplex& tau : kx.simplices[d - 1]) {
            const Simplex* sigma = nullptr;
            if (cofacet_count(kx, tau, &sigma) == 1) {
                level.push_back({*sigma, tau});
            }
        }
        std::sort(level.begin(), level.end(), [](const CollapseStep& a, const CollapseStep& b) {
            return a.sigma != b.sigma ? a.sigma < b.sigma : a.tau < b.tau;
        });
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

void apply_step(SimplicialComplex& kx, const CollapseStep& step) {
    if (step.sigma.size() != step.tau.size() + 1 ||
        !std::includes(step.sigma.begin(), step.sigma.end(), step.tau.begin(), step.tau.end())) {
        throw NotAFreeFace("tau [" + simplex_text(step.tau) +
                           "] is not a codimension-1 face of sigma [" + simplex_text(step.sigma) +
                           "]");
    }
    if (!kx.contains(step.sigma)) {
        throw MissingSimplex("sigma [" + simplex_text(step.sigma) + "] is not in the complex");
    }
    if (!kx.contains(step.tau)) {
        throw MissingSimplex("tau [" + simplex_text(step.tau) + "] is not in the complex");
    }
    const Simplex* only = nullptr;
    if (cofacet_count(kx, step.tau, &only) != 1) {
        throw NotAFreeFace("tau [" + simplex_text(step.tau) + "] lies in another simplex");
    }
    auto erase_from = [&](const Simplex& s) {
        auto& row = kx.simplices[s.size() - 1];
        row.erase(std::lower_bound(row.begin(), row.end(), s));
    };
    erase_from(step.sigma);
    erase_from(step.tau);
    while (!kx.simplices.empty() && kx.simplices.back().empty()) kx.simplices.pop_back();
}

CollapseOutcome verify_certificate(const Poset& p, const std::vector<CollapseStep>& steps) {
    CollapseOutcome out;
    out.residual = order_complex(p);
    SimplicialComplex& kx = out.residual;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        auto prefix = [&](const std::string& msg) {
            return "step " + std::to_string(i + 1) + ": " + msg;
        };
        try {
            apply_step(kx, steps[i]);
        } catch (const NotAFreeFace& e) {
            throw NotAFreeFace(prefix(e.what()));
        } catch (const MissingSimplex& e) {
            throw MissingSimplex(prefix(e.what()));
        }
        out.steps_taken.push_back(steps[i]);
    }
    if (kx.dim() > 1) {
        std::size_t high = 0;
        for (int d = 2; d <= kx.dim(); ++d) high += kx.simplices[d].size();
        throw NotATree("residual still has " + std::to_string(high) +
                       " simplices of dimension >= 2");
    }
    std::size_t verts = kx.simplices[0].size();
    std::size_t edges = kx.dim() >= 1 ? kx.simplices[1].size() : 0;
    if (verts != static_cast<std::size_t>(p.n)) {
        throw NotATree("residual spans " + std::to_string(verts) + " of " +
                       std::to_string(p.n) + " vertices");
    }
    if (edges + 1 != verts) {
        throw NotATree("residual has " + std::to_string(edges) + " edges over " +
                       std::to_string(verts) + " vertices");
    }
    // Connectivity over the residual edges (tree = connected + right count).
    {
        std::map<int, std::vector<int>> adj;
        for (const Simplex& v : kx.simplices[0]) adj[v[0]];
        if (kx.dim() >= 1) {
            for (const Simplex& e : kx.simplices[1]) {
                adj[e[0]].push_back(e[1]);
                adj[e[1]].push_back(e[0]);
            }
        }
        std::vector<int> stack{adj.begin()->first};
        std::map<int, bool> seen{{stack[0], true}};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        if (seen.size() != verts) throw NotATree("residual is disconnected");
    }
    if (kx.dim() >= 1) out.tree_edges = kx.simplices[1];

    // Leaf phase: repeatedly collapse the smallest degree-one vertex
    // along its unique edge.
    while (!is_single_vertex(kx)) {
        CollapseStep leaf;
        for (const Simplex& v : kx.simplices[0]) {
            const Simplex* only = nullptr;
            if (cofacet_count(kx, v, &only) == 1) {
                leaf = {*only, v};
                break;
            }
        }
        apply_step(kx, leaf);  // a finite tree always has a leaf
        out.steps_taken.push_back(leaf);
    }
    out.collapsed_to_point = true;
    return out;
}

namespace {

struct GreedySearch {
    long long budget = 200000;
    int backtrack_depth = 0;

    bool run(SimplicialComplex& kx, int depth, std::vector<CollapseStep>& steps) {
        for (;;) {
            if (is_single_vertex(kx)) return true;
            std::vector<CollapseStep> pairs = free_pairs(kx);
            if (pairs.empty()) return false;
            if (depth < backtrack_depth) {
                for (const CollapseStep& s : pairs) {
                    if (--budget < 0) return false;
                    SimplicialComplex next = kx;
                    apply_step(next, s);
                    steps.push_back(s);
                    if (run(next, depth + 1, steps)) {
                        kx = std::move(next);
                        return true;
                    }
                    steps.pop_back();
                }
                return false;
            }
            if (--budget < 0) return false;
            apply_step(kx, pairs.front());
            steps.push_back(pairs.front());
        }
    }
};

}  // namespace

CollapseOutcome greedy_collapse(const SimplicialComplex& kx, int backtrack_depth) {
    CollapseOutcome out;
    out.residual = kx;
    GreedySearch search;
    search.backtrack_depth = backtrack_depth;
    if (search.run(out.residual, 0, out.steps_taken)) {
        out.collapsed_to_point = true;
        return out;
    }
    // Report the deterministic pure-greedy trail and its stuck residual.
    out.steps_taken.clear();
    out.residual = kx;
    for (;;) {
        if (is_single_vertex(out.residual)) {
            out.collapsed_to_point = true;
            return out;
        }
        std::vector<CollapseStep> pairs = free_pairs(out.residual);
        if (pairs.empty()) return out;
        apply_step(out.residual, pairs.front());
        out.steps_taken.push_back(pairs.front());
    }
}

std::vector<CollapseStep> parse_certificate(std::istream& in) {
    std::vector<CollapseStep> steps;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ss(line);
        std::string kw;
        if (!(ss >> kw)) continue;
        if (kw != "collapse") {
            throw ParseError("line " + std::to_string(lineno) + ": expected 'collapse', got '" +
                             kw + "'");
        }
        CollapseStep step;
        bool after_slash = false;
        std::string tok;
        while (ss >> tok) {
            if (tok == "/") {
                if (after_slash) {
                    throw ParseError("line " + std::to_string(lineno) + ": duplicate '/'");
                }
                after_slash = true;
                continue;
            }
            try {
                std::size_t used = 0;
                int v = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                (after_slash ? step.tau : step.sigma).push_back(v);
            } catch (const std::exception&) {
                throw ParseError("line " + std::to_string(lineno) + ": bad vertex '" + tok + "'");
            }
        }
        if (!after_slash || step.sigma.empty() || step.tau.empty()) {
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected 'collapse <sigma> / <tau>'");
        }
        std::sort(step.sigma.begin(), step.sigma.end());
        std::sort(step.tau.begin(), step.tau.end());
        steps.push_back(std::move(step));
    }
    return steps;
}

std::vector<CollapseStep> parse_certificate_string(const std::string& text) {
    std::istringstream ss(text);
    return parse_certificate(ss);
}

std::vector<CollapseStep> parse_certificate_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open for reading: " + path);
    return parse_certificate(f);
}

std::string format_certificate(const std::vector<CollapseStep>& steps) {
    std::ostringstream ss;
    for (const CollapseStep& s : steps) {
        ss << "collapse " << simplex_text(s.sigma) << " / " << simplex_text(s.tau) << "\n";
    }
    return ss.str();
}

}  // namespace finspace
