#include "matdec/linear.hpp"

#include <memory>

namespace matdec {

static bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void validate(const LinearRep& rep) {
    if (!is_prime(rep.p)) throw std::domain_error("field order must be prime");
    if (rep.rows < 0) throw std::domain_error("negative row count");
    for (const auto& c : rep.cols) {
        if (static_cast<int>(c.size()) != rep.rows)
            throw std::domain_error("column length does not match row count");
        for (int v : c)
            if (v < 0 || v >= rep.p) throw std::domain_error("entry outside [0, p)");
    }
}

int fp_inv(int a, int p) {
    // extended Euclid; a != 0 mod p
    int t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        int q = r / nr;
        int tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw std::domain_error("not invertible");
    return (t % p + p) % p;
}

int rref(FpMatrix& m, int p) {
    if (m.empty()) return 0;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] % p != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        int inv = fp_inv(m[rank][col], p);
        for (int c = col; c < cols; ++c) m[rank][c] = m[rank][c] * inv % p;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            int f = m[r][col];
            for (int c = col; c < cols; ++c)
                m[r][c] = ((m[r][c] - f * m[rank][c]) % p + p) % p;
        }
        ++rank;
    }
    m.resize(static_cast<std::size_t>(rank));
    return rank;
}

int matrix_rank(FpMatrix m, int p) { return rref(m, p); }

MatroidOracle linear_oracle(const LinearRep& rep) {
    validate(rep);
    auto shared = std::make_shared<LinearRep>(rep);
    GroundSet g = iota_ground(static_cast<int>(rep.cols.size()), 1);  // columns are 1-based
    auto f = [shared](subset_t X) {
        FpMatrix m;
        for (std::size_t i = 0; i < shared->cols.size(); ++i)
            if (X >> i & 1u) m.push_back(shared->cols[i]);
        int k = static_cast<int>(m.size());
        return matrix_rank(std::move(m), shared->p) == k;
    };
    return {g, f};
}

FpMatrix subspace_intersection(const FpMatrix& gens_x, const FpMatrix& gens_y, int dim, int p) {
    // Solve sum u_i x_i - sum w_j y_j = 0: set up the juxtaposed matrix with
    // one row per ambient coordinate, eliminate, read off the nullspace, and
    // map the u-part back through the x generators.
    int a = static_cast<int>(gens_x.size());
    int b = static_cast<int>(gens_y.size());
    if (a == 0 || b == 0) return {};
    FpMatrix sys(static_cast<std::size_t>(dim), std::vector<int>(a + b, 0));
    for (int r = 0; r < dim; ++r) {
        for (int i = 0; i < a; ++i) sys[r][i] = gens_x[i][r] % p;
        for (int j = 0; j < b; ++j) sys[r][a + j] = ((-gens_y[j][r]) % p + p) % p;
    }
    // eliminate, tracking pivot columns
    int rows = dim, cols = a + b, rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (sys[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(sys[rank], sys[piv]);
        int inv = fp_inv(sys[rank][col], p);
        for (int c = col; c < cols; ++c) sys[rank][c] = sys[rank][c] * inv % p;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || sys[r][col] == 0) continue;
            int f = sys[r][col];
            for (int c = col; c < cols; ++c)
                sys[r][c] = ((sys[r][c] - f * sys[rank][c]) % p + p) % p;
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<char> is_pivot(static_cast<std::size_t>(cols), 0);
    for (int c : pivot_col) is_pivot[c] = 1;

    FpMatrix basis;
    for (int freec = 0; freec < cols; ++freec) {
        if (is_pivot[freec]) continue;
        // nullspace vector with this free column set to 1
        std::vector<int> sol(static_cast<std::size_t>(cols), 0);
        sol[freec] = 1;
        for (int r = 0; r < rank; ++r) {
            int pc = pivot_col[r];
            sol[pc] = ((-sys[r][freec]) % p + p) % p;
        }
        // intersection vector = sum_i sol_i * x_i
        std::vector<int> vec(static_cast<std::size_t>(dim), 0);
        for (int i = 0; i < a; ++i) {
            if (sol[i] == 0) continue;
            for (int r = 0; r < dim; ++r) vec[r] = (vec[r] + sol[i] * gens_x[i][r]) % p;
        }
        basis.push_back(std::move(vec));
    }
    rref(basis, p);
    return basis;
}

}  // namespace matdec
