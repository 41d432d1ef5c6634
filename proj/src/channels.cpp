#include "entdist/channels.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "entdist/measures.hpp"

namespace entdist {

namespace {

constexpr double kCompletenessTol = 1e-10;

void check_range01(double x, const char* name) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::invalid_argument(std::string(name) + " must lie in [0,1], got " +
                                    std::to_string(x));
}

} // namespace

KrausChannel::KrausChannel(std::vector<Matrix> ops, std::string lbl, std::optional<double> param)
    : kraus_ops(std::move(ops)), label(std::move(lbl)), parameter(param) {
    if (kraus_ops.empty())
        throw std::invalid_argument("KrausChannel: no Kraus operators");
    Eigen::Index d = kraus_ops.front().rows();
    for (const Matrix& k : kraus_ops)
        if (k.rows() != d || k.cols() != d)
            throw std::invalid_argument("KrausChannel: operators must be square, same size");
    Matrix sum = Matrix::Zero(d, d);
    for (const Matrix& k : kraus_ops)
        sum += k.adjoint() * k;
    if ((sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > kCompletenessTol)
        throw std::invalid_argument("KrausChannel: completeness sum K^dag K != I");
}

int KrausChannel::dim() const {
    return static_cast<int>(kraus_ops.front().rows());
}

KrausChannel identity_channel() {
    return KrausChannel({identity2()}, "identity");
}

KrausChannel dephasing(double delta) {
    check_range01(delta, "dephasing delta");
    return KrausChannel({std::sqrt(1.0 - delta / 2.0) * identity2(),
                         std::sqrt(delta / 2.0) * pauli_z()},
                        "dephasing", delta);
}

KrausChannel depolarizing(double delta) {
    check_range01(delta, "depolarizing delta");
    return KrausChannel({std::sqrt(1.0 - delta) * identity2(), std::sqrt(delta / 3.0) * pauli_x(),
                         std::sqrt(delta / 3.0) * pauli_y(), std::sqrt(delta / 3.0) * pauli_z()},
                        "depolarizing", delta);
}

KrausChannel amplitude_damping(double delta) {
    check_range01(delta, "amplitude damping delta");
    Matrix k1(2, 2), k2(2, 2);
    k1 << 1, 0, 0, std::sqrt(1.0 - delta);
    k2 << 0, std::sqrt(delta), 0, 0;
    return KrausChannel({k1, k2}, "ad", delta);
}

KrausChannel lambda1() {
    const double a = 1.0 / std::sqrt(2.0);
    const double b = 1.0 / std::sqrt(6.0);
    return KrausChannel({a * identity2(), b * pauli_x(), b * pauli_y(), b * pauli_z()}, "lambda1");
}

KrausChannel lambda2(double q) {
    check_range01(q, "lambda2 q");
    const double b = std::sqrt((1.0 - q) / 3.0);
    return KrausChannel({std::sqrt(q) * identity2(), b * pauli_x(), b * pauli_y(), b * pauli_z()},
                        "lambda2", q);
}

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch, int target) {
    if (target < 0 || target >= rho.dims.count())
        throw std::invalid_argument("apply_channel: target out of range");
    if (rho.dims[target] != ch.dim())
        throw std::invalid_argument("apply_channel: channel dimension does not match target");
    Matrix out = Matrix::Zero(rho.mat.rows(), rho.mat.cols());
    for (const Matrix& k : ch.kraus_ops)
        out += apply_local(rho.mat, k, {target}, rho.dims);
    // clean the numerical skew so downstream Hermiticity checks stay tight
    out = (out + out.adjoint().eval()) / 2.0;
    return DensityMatrix(rho.dims, std::move(out));
}

ChoiMatrix choi(const KrausChannel& ch) {
    int d = ch.dim();
    // maximally entangled pair on [d,d]
    Vector v = Vector::Zero(d * d);
    for (int i = 0; i < d; ++i)
        v(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
    DensityMatrix pair(Dims{d, d}, v * v.adjoint());
    return ChoiMatrix{apply_channel(pair, ch, 1)};
}

bool is_entanglement_breaking(const KrausChannel& ch) {
    if (ch.dim() != 2)
        throw std::invalid_argument(
            "is_entanglement_breaking: certification is only valid for qubit channels");
    return negativity(choi(ch).state, {{0}}) <= kEigZero;
}

KrausChannel parse_channel_spec(const std::string& spec) {
    std::string family = spec;
    std::optional<double> param;
    if (auto pos = spec.find(':'); pos != std::string::npos) {
        family = spec.substr(0, pos);
        try {
            param = std::stod(spec.substr(pos + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("channel spec: bad parameter in '" + spec + "'");
        }
    }
    auto need = [&]() {
        if (!param)
            throw std::invalid_argument("channel spec: '" + family + "' needs a parameter");
        return *param;
    };
    if (family == "identity") {
        if (param)
            throw std::invalid_argument("channel spec: identity takes no parameter");
        return identity_channel();
    }
    if (family == "dephasing")
        return dephasing(need());
    if (family == "depolarizing")
        return depolarizing(need());
    if (family == "ad")
        return amplitude_damping(need());
    if (family == "lambda1") {
        if (param)
            throw std::invalid_argument("channel spec: lambda1 takes no parameter");
        return lambda1();
    }
    if (family == "lambda2")
        return lambda2(need());
    throw std::invalid_argument("channel spec: unknown family '" + family + "'");
}

} // namespace entdist
