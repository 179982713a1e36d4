#pragma once

#include <algorithm>
#include <limits>
#include <vector>

namespace ptd {

// Small augmenting-path max-flow. Used with unit vertex capacities, so the
// number of augmentations is bounded by the cut size we care about.
class FlowNet {
public:
    static constexpr int kInf = std::numeric_limits<int>::max() / 4;

    explicit FlowNet(int n) : adj_(n) {}

    int add_node() {
        adj_.emplace_back();
        return (int)adj_.size() - 1;
    }
    int size() const { return (int)adj_.size(); }

    void add_edge(int u, int v, int cap) {
        adj_[u].push_back((int)to_.size());
        to_.push_back(v);
        cap_.push_back(cap);
        adj_[v].push_back((int)to_.size());
        to_.push_back(u);
        cap_.push_back(0);
    }

    // Pushes flow from the sources to the sinks until no path is left or the
    // flow exceeds limit. Returns the flow value (limit+1 means "more").
    int maxflow(const std::vector<int>& sources, const std::vector<int>& sinks, int limit) {
        int n = size();
        std::vector<char> is_sink(n, 0);
        for (int t : sinks) is_sink[t] = 1;
        for (int s : sources)
            if (is_sink[s]) return limit + 1;
        int flow = 0;
        std::vector<int> pe(n);
        while (flow <= limit) {
            std::fill(pe.begin(), pe.end(), -2);
            std::vector<int> q;
            for (int s : sources) {
                if (pe[s] != -2) continue;
                pe[s] = -1;
                q.push_back(s);
            }
            int hit = -1;
            for (size_t i = 0; i < q.size() && hit < 0; ++i) {
                int u = q[i];
                for (int e : adj_[u]) {
                    if (cap_[e] <= 0 || pe[to_[e]] != -2) continue;
                    pe[to_[e]] = e;
                    if (is_sink[to_[e]]) {
                        hit = to_[e];
                        break;
                    }
                    q.push_back(to_[e]);
                }
            }
            if (hit < 0) break;
            int aug = kInf;
            for (int v = hit; pe[v] >= 0; v = to_[pe[v] ^ 1]) aug = std::min(aug, cap_[pe[v]]);
            for (int v = hit; pe[v] >= 0; v = to_[pe[v] ^ 1]) {
                cap_[pe[v]] -= aug;
                cap_[pe[v] ^ 1] += aug;
            }
            flow += aug >= kInf ? limit + 1 : aug;
        }
        return flow;
    }

    // Nodes reachable from the sources in the residual network.
    std::vector<char> reachable(const std::vector<int>& sources) const {
        std::vector<char> seen(size(), 0);
        std::vector<int> q;
        for (int s : sources)
            if (!seen[s]) {
                seen[s] = 1;
                q.push_back(s);
            }
        for (size_t i = 0; i < q.size(); ++i)
            for (int e : adj_[q[i]])
                if (cap_[e] > 0 && !seen[to_[e]]) {
                    seen[to_[e]] = 1;
                    q.push_back(to_[e]);
                }
        return seen;
    }

private:
    std::vector<std::vector<int>> adj_;
    std::vector<int> to_;
    std::vector<int> cap_;
};

}  // namespace ptd
