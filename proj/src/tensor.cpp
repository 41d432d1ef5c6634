#include "entdist/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace entdist {

bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    return (a - b).cwiseAbs().maxCoeff() <= tol;
}

bool is_hermitian(const Matrix& m, double tol) {
    if (m.rows() != m.cols())
        return false;
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Matrix partial_trace(const Matrix& rho, const Dims& dims, const std::vector<int>& keep) {
    if (rho.rows() != rho.cols() || rho.rows() != dims.total())
        throw std::invalid_argument("partial_trace: dimension mismatch");
    std::vector<int> kept = validated_subset(dims, keep);
    if (kept.empty())
        throw std::invalid_argument("partial_trace: keep set must be nonempty");
    std::vector<int> traced = complement(dims, kept);

    Dims kdims = dims.select(kept);
    int dk = kdims.total();
    int dt = 1;
    for (int i : traced)
        dt *= dims[i];

    // basis index of the full space from (kept digits, traced digits)
    std::vector<int> digits(static_cast<std::size_t>(dims.count()));
    auto full_index = [&](int k, int t) {
        int kk = k, tt = t;
        for (int i = static_cast<int>(kept.size()) - 1; i >= 0; --i) {
            int d = dims[kept[static_cast<std::size_t>(i)]];
            digits[static_cast<std::size_t>(kept[static_cast<std::size_t>(i)])] = kk % d;
            kk /= d;
        }
        for (int i = static_cast<int>(traced.size()) - 1; i >= 0; --i) {
            int d = dims[traced[static_cast<std::size_t>(i)]];
            digits[static_cast<std::size_t>(traced[static_cast<std::size_t>(i)])] = tt % d;
            tt /= d;
        }
        return dims.pack(digits);
    };

    Matrix out = Matrix::Zero(dk, dk);
    for (int r = 0; r < dk; ++r)
        for (int c = 0; c < dk; ++c) {
            Complex sum = 0.0;
            for (int t = 0; t < dt; ++t)
                sum += rho(full_index(r, t), full_index(c, t));
            out(r, c) = sum;
        }
    return out;
}

Matrix partial_transpose(const Matrix& rho, const Dims& dims, const std::vector<int>& transposed) {
    if (rho.rows() != rho.cols() || rho.rows() != dims.total())
        throw std::invalid_argument("partial_transpose: dimension mismatch");
    std::vector<int> tset = validated_subset(dims, transposed);

    int n = dims.total();
    Matrix out(n, n);
    for (int r = 0; r < n; ++r) {
        std::vector<int> rd = dims.unpack(r);
        for (int c = 0; c < n; ++c) {
            std::vector<int> cd = dims.unpack(c);
            std::vector<int> rd2 = rd, cd2 = cd;
            for (int t : tset) {
                rd2[static_cast<std::size_t>(t)] = cd[static_cast<std::size_t>(t)];
                cd2[static_cast<std::size_t>(t)] = rd[static_cast<std::size_t>(t)];
            }
            out(dims.pack(rd2), dims.pack(cd2)) = rho(r, c);
        }
    }
    return out;
}

HermitianSpectrum hermitian_eigenvalues(const Matrix& m) {
    return hermitian_eigensystem(m).first;
}

std::pair<HermitianSpectrum, Matrix> hermitian_eigensystem(const Matrix& m) {
    if (!is_hermitian(m))
        throw std::invalid_argument("hermitian_eigensystem: input is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eigensystem: eigensolver failed");

    // Eigen returns ascending order; flip to descending.
    Eigen::Index n = m.rows();
    HermitianSpectrum values(static_cast<std::size_t>(n));
    Matrix vectors(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        values[static_cast<std::size_t>(i)] = solver.eigenvalues()(n - 1 - i);
        vectors.col(i) = solver.eigenvectors().col(n - 1 - i);
    }
    return {values, vectors};
}

double trace_norm(const Matrix& m) {
    HermitianSpectrum ev = hermitian_eigenvalues(m);
    return std::accumulate(ev.begin(), ev.end(), 0.0,
                           [](double acc, double x) { return acc + std::abs(x); });
}

Matrix apply_local(const Matrix& rho, const Matrix& op, const std::vector<int>& targets,
                   const Dims& dims) {
    if (rho.rows() != rho.cols() || rho.rows() != dims.total())
        throw std::invalid_argument("apply_local: state dimension mismatch");
    if (targets.empty())
        throw std::invalid_argument("apply_local: no targets");
    {
        std::vector<int> check = targets;
        std::sort(check.begin(), check.end());
        for (std::size_t i = 0; i < check.size(); ++i) {
            if (check[i] < 0 || check[i] >= dims.count())
                throw std::invalid_argument("apply_local: target out of range");
            if (i > 0 && check[i] == check[i - 1])
                throw std::invalid_argument("apply_local: repeated target");
        }
    }
    int dop = 1;
    for (int t : targets)
        dop *= dims[t];
    if (op.rows() != op.cols() || op.rows() != dop)
        throw std::invalid_argument("apply_local: operator dimension mismatch");

    // Embed op: entry (r,c) of the full operator is op(rt,ct) when the
    // non-target digits agree, zero otherwise.
    int n = dims.total();
    Dims tdims = dims.select(targets);
    std::vector<int> rest = complement(dims, targets);

    Matrix full = Matrix::Zero(n, n);
    for (int r = 0; r < n; ++r) {
        std::vector<int> rd = dims.unpack(r);
        std::vector<int> rt(targets.size());
        for (std::size_t i = 0; i < targets.size(); ++i)
            rt[i] = rd[static_cast<std::size_t>(targets[i])];
        int rti = tdims.pack(rt);
        for (int c = 0; c < n; ++c) {
            std::vector<int> cd = dims.unpack(c);
            bool same = true;
            for (int i : rest)
                if (rd[static_cast<std::size_t>(i)] != cd[static_cast<std::size_t>(i)]) {
                    same = false;
                    break;
                }
            if (!same)
                continue;
            std::vector<int> ct(targets.size());
            for (std::size_t i = 0; i < targets.size(); ++i)
                ct[i] = cd[static_cast<std::size_t>(targets[i])];
            full(r, c) = op(rti, tdims.pack(ct));
        }
    }
    return full * rho * full.adjoint();
}

std::pair<Matrix, Dims> permute_subsystems(const Matrix& rho, const Dims& dims,
                                           const std::vector<int>& perm) {
    if (rho.rows() != rho.cols() || rho.rows() != dims.total())
        throw std::invalid_argument("permute_subsystems: dimension mismatch");
    if (static_cast<int>(perm.size()) != dims.count())
        throw std::invalid_argument("permute_subsystems: permutation size mismatch");
    std::vector<bool> seen(perm.size(), false);
    for (int p : perm) {
        if (p < 0 || p >= dims.count() || seen[static_cast<std::size_t>(p)])
            throw std::invalid_argument("permute_subsystems: not a permutation");
        seen[static_cast<std::size_t>(p)] = true;
    }

    std::vector<int> newdims(perm.size());
    for (int i = 0; i < dims.count(); ++i)
        newdims[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = dims[i];
    Dims out_dims{newdims};

    int n = dims.total();
    Matrix out(n, n);
    std::vector<int> nd(perm.size());
    for (int r = 0; r < n; ++r) {
        std::vector<int> rd = dims.unpack(r);
        for (int i = 0; i < dims.count(); ++i)
            nd[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
                rd[static_cast<std::size_t>(i)];
        int rn = out_dims.pack(nd);
        for (int c = 0; c < n; ++c) {
            std::vector<int> cd = dims.unpack(c);
            for (int i = 0; i < dims.count(); ++i)
                nd[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
                    cd[static_cast<std::size_t>(i)];
            out(rn, out_dims.pack(nd)) = rho(r, c);
        }
    }
    return {out, out_dims};
}

Matrix identity2() {
    return Matrix::Identity(2, 2);
}

Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Matrix pauli_y() {
    Matrix m(2, 2);
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
}

Matrix pauli_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

} // namespace entdist
