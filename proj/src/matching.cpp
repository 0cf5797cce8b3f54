#include "matdec/matching.hpp"

namespace matdec {

bool BipartiteMatcher::augment(int l, std::vector<char>& seen) {
    for (int r : adj[l]) {
        if (seen[r]) continue;
        seen[r] = 1;
        if (mr[r] < 0 || augment(mr[r], seen)) {
            ml[l] = r;
            mr[r] = l;
            return true;
        }
    }
    return false;
}

int BipartiteMatcher::solve() {
    ml.assign(nl, -1);
    mr.assign(nr, -1);
    int size = 0;
    for (int l = 0; l < nl; ++l) {
        std::vector<char> seen(nr, 0);
        if (augment(l, seen)) ++size;
    }
    return size;
}

int BipartiteMatcher::solve_restricted(const std::vector<char>& use_left) {
    ml.assign(nl, -1);
    mr.assign(nr, -1);
    int size = 0;
    for (int l = 0; l < nl; ++l) {
        if (!use_left[l]) continue;
        std::vector<char> seen(nr, 0);
        if (augment(l, seen)) ++size;
    }
    return size;
}

KoenigCover koenig_cover(const BipartiteMatcher& done) {
    std::vector<char> visl(done.nl, 0), visr(done.nr, 0);
    // BFS/DFS of alternating paths from exposed left vertices
    std::vector<int> stack;
    for (int l = 0; l < done.nl; ++l)
        if (done.ml[l] < 0) {
            visl[l] = 1;
            stack.push_back(l);
        }
    while (!stack.empty()) {
        int l = stack.back();
        stack.pop_back();
        for (int r : done.adj[l]) {
            if (visr[r]) continue;
            visr[r] = 1;
            int l2 = done.mr[r];
            if (l2 >= 0 && !visl[l2]) {
                visl[l2] = 1;
                stack.push_back(l2);
            }
        }
    }
    KoenigCover cov;
    for (int l = 0; l < done.nl; ++l)
        if (!visl[l]) cov.left.push_back(l);
    for (int r = 0; r < done.nr; ++r)
        if (visr[r]) cov.right.push_back(r);
    return cov;
}

}  // namespace matdec
