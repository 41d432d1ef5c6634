#include "entdist/dims.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace entdist {

Dims::Dims(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty())
        throw std::invalid_argument("Dims: empty dimension list");
    total_ = 1;
    for (int d : dims_) {
        if (d < 2)
            throw std::invalid_argument("Dims: every subsystem dimension must be >= 2, got " +
                                        std::to_string(d));
        total_ *= d;
    }
}

std::vector<int> Dims::unpack(int index) const {
    if (index < 0 || index >= total_)
        throw std::out_of_range("Dims::unpack: index out of range");
    std::vector<int> digits(dims_.size());
    for (int i = count() - 1; i >= 0; --i) {
        digits[static_cast<std::size_t>(i)] = index % dims_[static_cast<std::size_t>(i)];
        index /= dims_[static_cast<std::size_t>(i)];
    }
    return digits;
}

int Dims::pack(const std::vector<int>& digits) const {
    if (digits.size() != dims_.size())
        throw std::invalid_argument("Dims::pack: digit count mismatch");
    int index = 0;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (digits[i] < 0 || digits[i] >= dims_[i])
            throw std::out_of_range("Dims::pack: digit out of range");
        index = index * dims_[i] + digits[i];
    }
    return index;
}

Dims Dims::select(const std::vector<int>& subset) const {
    std::vector<int> out;
    out.reserve(subset.size());
    for (int i : subset)
        out.push_back(dims_[static_cast<std::size_t>(i)]);
    return Dims(std::move(out));
}

std::vector<int> validated_subset(const Dims& dims, const std::vector<int>& subset) {
    std::vector<int> s = subset;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= dims.count())
            throw std::invalid_argument("subsystem index out of range: " + std::to_string(s[i]));
        if (i > 0 && s[i] == s[i - 1])
            throw std::invalid_argument("repeated subsystem index: " + std::to_string(s[i]));
    }
    return s;
}

std::vector<int> complement(const Dims& dims, const std::vector<int>& subset) {
    std::vector<int> s = validated_subset(dims, subset);
    std::vector<int> out;
    std::size_t j = 0;
    for (int i = 0; i < dims.count(); ++i) {
        if (j < s.size() && s[j] == i) {
            ++j;
        } else {
            out.push_back(i);
        }
    }
    return out;
}

} // namespace entdist
