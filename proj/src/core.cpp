#include "matdec/core.hpp"

#include <algorithm>

namespace matdec {

int rank_of(const MatroidOracle& M, subset_t X) {
    subset_t basis = 0;
    for (int i = 0; i < M.ground.size(); ++i) {
        subset_t bit = subset_t{1} << i;
        if ((X & bit) && M.indep(basis | bit)) basis |= bit;
    }
    return popcount(basis);
}

int rank_full(const MatroidOracle& M) { return rank_of(M, M.ground.full()); }

subset_t closure_of(const MatroidOracle& M, subset_t X) {
    int rx = rank_of(M, X);
    subset_t cl = X;
    for (int i = 0; i < M.ground.size(); ++i) {
        subset_t bit = subset_t{1} << i;
        if (X & bit) continue;
        if (rank_of(M, X | bit) == rx) cl |= bit;
    }
    return cl;
}

int connectivity(const MatroidOracle& M, subset_t U) {
    subset_t full = M.ground.full();
    if (U & ~full) throw std::domain_error("connectivity: U outside ground set");
    return rank_of(M, U) + rank_of(M, full & ~U) - rank_of(M, full);
}

bool is_n_connected(const MatroidOracle& M, int n) {
    if (n < 1) throw std::domain_error("is_n_connected: order must be >= 1");
    IndependenceTable T = materialize(M);
    std::vector<int> rk = rank_table(T);
    subset_t full = T.full();
    int nelem = T.ground.size();
    int rM = full ? rk[full] : 0;
    for (subset_t U = 1; U < full; ++U) {
        int a = popcount(U);
        int b = nelem - a;
        int lam = rk[U] + rk[full ^ U] - rM;
        // a k-separation exists at this partition iff lam < k <= min(a, b)
        // for some k < n
        if (lam < std::min({n - 1, a, b})) return false;
    }
    return true;
}

MatroidOracle minor_of(const MatroidOracle& M, subset_t contract, subset_t del) {
    subset_t full = M.ground.full();
    if ((contract | del) & ~full) throw std::domain_error("minor: sets outside ground");
    if (contract & del) throw std::domain_error("minor: contract and delete sets overlap");

    subset_t bc = 0;  // greedy basis of the contracted part, ascending order
    for (int i = 0; i < M.ground.size(); ++i) {
        subset_t bit = subset_t{1} << i;
        if ((contract & bit) && M.indep(bc | bit)) bc |= bit;
    }
    int rbc = popcount(bc);

    subset_t keep = full & ~(contract | del);
    GroundSet ng(M.ground.ids_of(keep));
    std::vector<int> oldpos;
    for (int i = 0; i < M.ground.size(); ++i)
        if (keep >> i & 1u) oldpos.push_back(i);

    MatroidOracle base = M;
    auto f = [base, bc, rbc, oldpos](subset_t X) {
        subset_t ox = bc;
        for (std::size_t j = 0; j < oldpos.size(); ++j)
            if (X >> j & 1u) ox |= subset_t{1} << oldpos[j];
        return rank_of(base, ox) - rbc == popcount(X);
    };
    return {ng, f};
}

MatroidOracle dual_of(const MatroidOracle& M) {
    int rM = rank_full(M);
    subset_t full = M.ground.full();
    MatroidOracle base = M;
    auto f = [base, rM, full](subset_t X) { return rank_of(base, full & ~X) == rM; };
    return {M.ground, f};
}

AxiomCheck verify_axioms(const SetSystem& S) {
    int n = S.ground.size();
    if (n > kExhaustiveCap)
        throw size_guard_error("verify_axioms: ground set larger than " +
                               std::to_string(kExhaustiveCap));
    if (S.independents.empty()) return {false, "independence family is empty"};

    std::vector<char> in(std::size_t{1} << n, 0);
    for (subset_t x : S.independents) {
        if (x & ~S.ground.full()) throw std::domain_error("verify_axioms: set outside ground");
        in[x] = 1;
    }

    auto show = [&](subset_t x) { return subset_to_string(S.ground, x); };

    // downward closure
    for (subset_t x : S.independents) {
        subset_t rest = x;
        while (rest) {
            subset_t bit = lowbit(rest);
            rest ^= bit;
            if (!in[x ^ bit])
                return {false, "not downward closed: " + show(x) + " independent but " +
                                   show(x ^ bit) + " is not"};
        }
    }

    // exchange between adjacent sizes; with downward closure this implies the
    // general |X| < |Y| form
    std::vector<std::vector<subset_t>> by_size(n + 1);
    for (subset_t x : S.independents) by_size[popcount(x)].push_back(x);
    std::vector<subset_t> ext(std::size_t{1} << n, 0);
    for (subset_t x : S.independents) {
        subset_t e = 0;
        for (int i = 0; i < n; ++i) {
            subset_t bit = subset_t{1} << i;
            if (!(x & bit) && in[x | bit]) e |= bit;
        }
        ext[x] = e;
    }
    for (int k = 0; k < n; ++k) {
        for (subset_t x : by_size[k]) {
            for (subset_t y : by_size[k + 1]) {
                if ((y & ~x & ext[x]) == 0)
                    return {false, "exchange fails: X=" + show(x) + ", Y=" + show(y)};
            }
        }
    }
    return {};
}

IndependenceTable materialize(const MatroidOracle& M) {
    int n = M.ground.size();
    if (n > kExhaustiveCap)
        throw size_guard_error("materialize: ground set larger than " +
                               std::to_string(kExhaustiveCap));
    IndependenceTable T;
    T.ground = M.ground;
    T.indep.resize(std::size_t{1} << n);
    for (subset_t m = 0; m < (subset_t{1} << n); ++m) T.indep[m] = M.indep(m) ? 1 : 0;
    return T;
}

std::vector<int> rank_table(const IndependenceTable& T) {
    int n = T.ground.size();
    std::vector<int> rk(std::size_t{1} << n, 0);
    for (subset_t m = 1; m < (subset_t{1} << n); ++m) {
        if (T.indep[m]) {
            rk[m] = popcount(m);
            continue;
        }
        // some maximum independent subset of a dependent set avoids an element
        int best = 0;
        subset_t rest = m;
        while (rest) {
            subset_t bit = lowbit(rest);
            rest ^= bit;
            best = std::max(best, rk[m ^ bit]);
        }
        rk[m] = best;
    }
    return rk;
}

SetSystem to_set_system(const IndependenceTable& T) {
    SetSystem S;
    S.ground = T.ground;
    for (subset_t m = 0; m < (subset_t{1} << T.ground.size()); ++m)
        if (T.indep[m]) S.independents.push_back(m);
    return S;
}

MatroidOracle table_oracle(const IndependenceTable& T) {
    auto shared = std::make_shared<IndependenceTable>(T);
    auto f = [shared](subset_t X) { return shared->indep[X] != 0; };
    return {T.ground, f};
}

MatroidOracle table_oracle(const SetSystem& S) {
    auto in = std::make_shared<std::vector<char>>(std::size_t{1} << S.ground.size(), 0);
    for (subset_t x : S.independents) (*in)[x] = 1;
    auto f = [in](subset_t X) { return (*in)[X] != 0; };
    return {S.ground, f};
}

}  // namespace matdec
