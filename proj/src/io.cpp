#include "entdist/io.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace entdist {

namespace {

nlohmann::json split_complex(const Vector& v) {
    std::vector<double> re(static_cast<std::size_t>(v.size()));
    std::vector<double> im(static_cast<std::size_t>(v.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        re[static_cast<std::size_t>(i)] = v(i).real();
        im[static_cast<std::size_t>(i)] = v(i).imag();
    }
    return {{"re", re}, {"im", im}};
}

} // namespace

nlohmann::json to_json(const PureState& psi) {
    nlohmann::json j = split_complex(psi.amplitudes);
    j["dims"] = psi.dims.vec();
    return j;
}

nlohmann::json to_json(const DensityMatrix& rho) {
    Vector flat(rho.mat.size());
    for (Eigen::Index r = 0; r < rho.mat.rows(); ++r)
        for (Eigen::Index c = 0; c < rho.mat.cols(); ++c)
            flat(r * rho.mat.cols() + c) = rho.mat(r, c); // row-major
    nlohmann::json j = split_complex(flat);
    j["dims"] = rho.dims.vec();
    return j;
}

nlohmann::json to_json(const ProtocolRecord& rec) {
    return {{"measure", measure_name(rec.measure)},
            {"e_in", rec.e_in},
            {"e_com", rec.e_com},
            {"e_fin", rec.e_fin},
            {"delta_e", rec.delta_e},
            {"classification", classification_name(rec.classification)}};
}

PureState pure_state_from_json(const nlohmann::json& j) {
    Dims dims{j.at("dims").get<std::vector<int>>()};
    auto re = j.at("re").get<std::vector<double>>();
    auto im = j.at("im").get<std::vector<double>>();
    if (re.size() != im.size() || static_cast<int>(re.size()) != dims.total())
        throw std::invalid_argument("pure_state_from_json: length mismatch");
    Vector v(dims.total());
    for (int i = 0; i < dims.total(); ++i)
        v(i) = Complex(re[static_cast<std::size_t>(i)], im[static_cast<std::size_t>(i)]);
    return PureState(dims, std::move(v));
}

DensityMatrix density_matrix_from_json(const nlohmann::json& j) {
    Dims dims{j.at("dims").get<std::vector<int>>()};
    auto re = j.at("re").get<std::vector<double>>();
    auto im = j.at("im").get<std::vector<double>>();
    int n = dims.total();
    if (re.size() != im.size() || static_cast<int>(re.size()) != n * n)
        throw std::invalid_argument("density_matrix_from_json: length mismatch");
    Matrix m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            std::size_t i = static_cast<std::size_t>(r * n + c);
            m(r, c) = Complex(re[i], im[i]);
        }
    return DensityMatrix(dims, std::move(m));
}

Grouping parse_grouping(const std::string& text) {
    std::vector<std::vector<int>> parts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ':')) {
        std::vector<int> idxs;
        std::stringstream ps(part);
        std::string tok;
        while (std::getline(ps, tok, ',')) {
            if (tok.empty())
                throw std::invalid_argument("grouping: empty label in '" + text + "'");
            int label = 0;
            try {
                label = std::stoi(tok);
            } catch (const std::exception&) {
                throw std::invalid_argument("grouping: bad label '" + tok + "'");
            }
            if (label < 1)
                throw std::invalid_argument("grouping: labels are 1-based, got " + tok);
            idxs.push_back(label - 1);
        }
        parts.push_back(std::move(idxs));
    }
    if (parts.size() != 3)
        throw std::invalid_argument("grouping must have three ':'-separated parts, got '" + text +
                                    "'");
    return Grouping{parts[0], parts[1], parts[2]};
}

} // namespace entdist
