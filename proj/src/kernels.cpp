#include "drg/kernels.hpp"

#include "drg/numeric.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace drg::kernels {

namespace {

// Single-source BFS into row i of the distance matrix; -1 marks unreachable.
void bfs_row(const AdjList& adj, int source, int* row, std::vector<int>& queue) {
    const int n = static_cast<int>(adj.size());
    std::fill(row, row + n, -1);
    queue.clear();
    queue.push_back(source);
    row[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int x = queue[head];
        const int dx = row[x];
        for (int y : adj[x]) {
            if (row[y] < 0) {
                row[y] = dx + 1;
                queue.push_back(y);
            }
        }
    }
}

}  // namespace

DistanceMatrix all_pairs_distances(const AdjList& adj) {
    const int n = static_cast<int>(adj.size());
    DistanceMatrix dm;
    dm.n = n;
    dm.d.resize(static_cast<std::size_t>(n) * n);

#pragma omp parallel
    {
        std::vector<int> queue;
        queue.reserve(n);
#pragma omp for schedule(dynamic, 16)
        for (int i = 0; i < n; ++i)
            bfs_row(adj, i, dm.d.data() + static_cast<std::size_t>(i) * n, queue);
    }
    return dm;
}

DistanceMatrix all_pairs_distances_serial(const AdjList& adj) {
    const int n = static_cast<int>(adj.size());
    DistanceMatrix dm;
    dm.n = n;
    dm.d.resize(static_cast<std::size_t>(n) * n);
    std::vector<int> queue;
    queue.reserve(n);
    for (int i = 0; i < n; ++i)
        bfs_row(adj, i, dm.d.data() + static_cast<std::size_t>(i) * n, queue);
    return dm;
}

namespace {

PairClassStats make_stats(int diameter) {
    PairClassStats st;
    const std::size_t m = static_cast<std::size_t>(diameter) + 1;
    st.min_dist2.assign(m, std::numeric_limits<double>::infinity());
    st.max_dist2.assign(m, -std::numeric_limits<double>::infinity());
    st.min_dot.assign(m, std::numeric_limits<double>::infinity());
    st.max_dot.assign(m, -std::numeric_limits<double>::infinity());
    st.count.assign(m, 0);
    return st;
}

void merge_stats(PairClassStats& into, const PairClassStats& from) {
    for (std::size_t r = 0; r < into.count.size(); ++r) {
        into.min_dist2[r] = std::min(into.min_dist2[r], from.min_dist2[r]);
        into.max_dist2[r] = std::max(into.max_dist2[r], from.max_dist2[r]);
        into.min_dot[r] = std::min(into.min_dot[r], from.min_dot[r]);
        into.max_dot[r] = std::max(into.max_dot[r], from.max_dot[r]);
        into.count[r] += from.count[r];
    }
}

// Returns false on a distance entry outside 0..diameter (reported after the
// parallel region; throwing inside it would terminate).
bool accumulate_row(PairClassStats& st, const Eigen::MatrixXd& U, const DistanceMatrix& dist,
                    int i) {
    const int n = dist.n;
    for (int j = i; j < n; ++j) {
        const int r = dist.at(i, j);
        if (r < 0 || r >= static_cast<int>(st.count.size())) return false;
        const double dot = U.row(i).dot(U.row(j));
        const double d2 = (U.row(i) - U.row(j)).squaredNorm();
        st.min_dist2[r] = std::min(st.min_dist2[r], d2);
        st.max_dist2[r] = std::max(st.max_dist2[r], d2);
        st.min_dot[r] = std::min(st.min_dot[r], dot);
        st.max_dot[r] = std::max(st.max_dot[r], dot);
        ++st.count[r];
    }
    return true;
}

}  // namespace

PairClassStats pair_class_stats(const Eigen::MatrixXd& U, const DistanceMatrix& dist,
                                int diameter) {
    PairClassStats total = make_stats(diameter);
    bool ok = true;
#pragma omp parallel
    {
        PairClassStats local = make_stats(diameter);
        bool local_ok = true;
#pragma omp for schedule(dynamic, 8) nowait
        for (int i = 0; i < dist.n; ++i)
            local_ok = accumulate_row(local, U, dist, i) && local_ok;
#pragma omp critical(drg_pair_stats_merge)
        {
            merge_stats(total, local);
            ok = ok && local_ok;
        }
    }
    if (!ok) throw Error("distance matrix entry outside 0..diameter");
    return total;
}

PairClassStats pair_class_stats_serial(const Eigen::MatrixXd& U, const DistanceMatrix& dist,
                                       int diameter) {
    PairClassStats total = make_stats(diameter);
    for (int i = 0; i < dist.n; ++i)
        if (!accumulate_row(total, U, dist, i))
            throw Error("distance matrix entry outside 0..diameter");
    return total;
}

namespace {

struct CountScan {
    // counts[i] = (c_i, a_i, b_i) from the first pair seen at distance i;
    // mismatch records the first offending ordered pair.
    std::vector<std::array<long long, 3>> counts;
    std::vector<bool> seen;
    bool mismatch = false;
    int bad_x = -1, bad_y = -1;
    std::string what;

    explicit CountScan(int diameter)
        : counts(static_cast<std::size_t>(diameter) + 1, {0, 0, 0}),
          seen(static_cast<std::size_t>(diameter) + 1, false) {}
};

void scan_vertex(CountScan& cs, const AdjList& adj, const DistanceMatrix& dist, int x) {
    const int n = dist.n;
    for (int y = 0; y < n; ++y) {
        const int i = dist.at(x, y);
        if (i < 0) {
            cs.mismatch = true;
            cs.bad_x = x;
            cs.bad_y = y;
            cs.what = "graph is disconnected";
            return;
        }
        long long closer = 0, same = 0, farther = 0;
        for (int z : adj[y]) {
            const int dz = dist.at(x, z);
            if (dz == i - 1)
                ++closer;
            else if (dz == i)
                ++same;
            else
                ++farther;
        }
        if (!cs.seen[i]) {
            cs.counts[i] = {closer, same, farther};
            cs.seen[i] = true;
        } else if (cs.counts[i] != std::array<long long, 3>{closer, same, farther}) {
            cs.mismatch = true;
            cs.bad_x = x;
            cs.bad_y = y;
            cs.what = "intersection numbers at distance " + std::to_string(i) +
                      " differ between pairs";
            return;
        }
    }
}

void merge_scans(CountScan& into, const CountScan& from) {
    if (from.mismatch && !into.mismatch) {
        into.mismatch = true;
        into.bad_x = from.bad_x;
        into.bad_y = from.bad_y;
        into.what = from.what;
        return;
    }
    for (std::size_t i = 0; i < into.counts.size(); ++i) {
        if (!from.seen[i]) continue;
        if (!into.seen[i]) {
            into.counts[i] = from.counts[i];
            into.seen[i] = true;
        } else if (into.counts[i] != from.counts[i] && !into.mismatch) {
            into.mismatch = true;
            into.what = "intersection numbers at distance " + std::to_string(i) +
                        " differ between pairs";
        }
    }
}

IntersectionCounts finish_scan(const CountScan& cs, int diameter) {
    IntersectionCounts out;
    if (cs.mismatch) {
        out.regular = false;
        out.bad_x = cs.bad_x;
        out.bad_y = cs.bad_y;
        out.violation = cs.what;
        return out;
    }
    out.regular = true;
    for (int i = 0; i <= diameter; ++i) {
        if (!cs.seen[i]) {
            out.regular = false;
            out.violation = "no pair at distance " + std::to_string(i);
            return out;
        }
        if (i >= 1) out.c.push_back(cs.counts[i][0]);
        out.a.push_back(cs.counts[i][1]);
        if (i < diameter) out.b.push_back(cs.counts[i][2]);
        else if (cs.counts[i][2] != 0) {
            out.regular = false;
            out.violation = "pairs at the diameter still have farther neighbors";
            return out;
        }
    }
    return out;
}

}  // namespace

IntersectionCounts intersection_counts(const AdjList& adj, const DistanceMatrix& dist,
                                       int diameter) {
    CountScan total(diameter);
#pragma omp parallel
    {
        CountScan local(diameter);
#pragma omp for schedule(dynamic, 8) nowait
        for (int x = 0; x < dist.n; ++x)
            if (!local.mismatch) scan_vertex(local, adj, dist, x);
#pragma omp critical(drg_count_merge)
        merge_scans(total, local);
    }
    return finish_scan(total, diameter);
}

IntersectionCounts intersection_counts_serial(const AdjList& adj, const DistanceMatrix& dist,
                                              int diameter) {
    CountScan total(diameter);
    for (int x = 0; x < dist.n && !total.mismatch; ++x) scan_vertex(total, adj, dist, x);
    return finish_scan(total, diameter);
}

}  // namespace drg::kernels
