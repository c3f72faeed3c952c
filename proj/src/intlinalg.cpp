#include <tatek/intlinalg.hpp>

namespace tatek {

namespace {

BigMat to_big(const IntMat& m) {
    BigMat b(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) b(i, j) = Int(m(i, j));
    return b;
}

Int big_det(BigMat a) {
    Eigen::Index n = a.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (Eigen::Index k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            Eigen::Index piv = -1;
            for (Eigen::Index i = k + 1; i < n; ++i)
                if (a(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            a.row(k).swap(a.row(piv));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i)
            for (Eigen::Index j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

Int minor_det(const IntMat& m, Eigen::Index drop_row, Eigen::Index drop_col) {
    Eigen::Index n = m.rows();
    IntMat sub(n - 1, n - 1);
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (i == drop_row) continue;
        Eigen::Index c = 0;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (j == drop_col) continue;
            sub(r, c++) = m(i, j);
        }
        ++r;
    }
    return int_det(sub);
}

}  // namespace

Int int_det(const IntMat& m) { return big_det(to_big(m)); }

BigMat int_adjugate(const IntMat& m) {
    Eigen::Index n = m.rows();
    BigMat adj(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            Int c = minor_det(m, j, i);
            adj(i, j) = ((i + j) % 2 == 0) ? c : -c;
        }
    return adj;
}

bool is_positive_definite(const IntMat& m) {
    for (Eigen::Index k = 1; k <= m.rows(); ++k) {
        IntMat lead = m.topLeftCorner(k, k);
        if (int_det(lead) <= 0) return false;
    }
    return true;
}

bool solve_integral(const IntMat& m, const IntVec& d, IntVec& x) {
    Int det = int_det(m);
    if (det == 0) return false;
    BigMat adj = int_adjugate(m);
    x.resize(m.rows());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Int num = 0;
        for (Eigen::Index j = 0; j < m.cols(); ++j) num += adj(i, j) * Int(d[j]);
        if (num % det != 0) return false;
        Int q = num / det;
        x[i] = static_cast<i64>(q);
    }
    return true;
}

i64 int_rank(BigMat a) {
    Eigen::Index rows = a.rows(), cols = a.cols();
    i64 rank = 0;
    Eigen::Index row = 0;
    Int prev = 1;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = row; i < rows; ++i)
            if (a(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        a.row(row).swap(a.row(piv));
        for (Eigen::Index i = row + 1; i < rows; ++i)
            for (Eigen::Index j = col + 1; j < cols; ++j)
                a(i, j) = (a(i, j) * a(row, col) - a(i, col) * a(row, j)) / prev;
        for (Eigen::Index i = row + 1; i < rows; ++i) a(i, col) = 0;
        prev = a(row, col);
        ++row;
        ++rank;
    }
    return rank;
}

IntMat hermite_normal_form(IntMat h) {
    Eigen::Index n = h.rows();
    for (Eigen::Index i = 0; i < n; ++i) {
        // clear row i to the right of column i by gcd column operations
        for (Eigen::Index j = i + 1; j < n; ++j) {
            while (h(i, j) != 0) {
                if (h(i, i) == 0) {
                    h.col(i).swap(h.col(j));
                    continue;
                }
                i64 q = h(i, j) / h(i, i);
                h.col(j) -= q * h.col(i);
                if (h(i, j) != 0) h.col(i).swap(h.col(j));
            }
        }
        if (h(i, i) < 0) h.col(i) = -h.col(i);
        // reduce earlier columns so 0 <= h(i, j) < h(i, i) for j < i
        for (Eigen::Index j = 0; j < i; ++j) {
            i64 q = h(i, j) / h(i, i);
            if (h(i, j) - q * h(i, i) < 0) --q;
            h.col(j) -= q * h.col(i);
        }
    }
    return h;
}

}  // namespace tatek
