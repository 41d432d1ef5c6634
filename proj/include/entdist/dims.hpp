#pragma once

#include <initializer_list>
#include <vector>

namespace entdist {

// Ordered list of subsystem dimensions. Subsystem 0 is the leftmost tensor
// factor and the most significant digit of a basis index, so a ket written
// |abc...> maps to index a*d1*d2*... + b*d2*... + c*...
class Dims {
public:
    explicit Dims(std::vector<int> dims);
    Dims(std::initializer_list<int> dims) : Dims(std::vector<int>(dims)) {}

    int count() const { return static_cast<int>(dims_.size()); }
    int operator[](int i) const { return dims_[static_cast<std::size_t>(i)]; }
    int total() const { return total_; }
    const std::vector<int>& vec() const { return dims_; }

    std::vector<int> unpack(int index) const;
    int pack(const std::vector<int>& digits) const;

    // Dims of the subsystems in `subset`, kept in their original order.
    Dims select(const std::vector<int>& subset) const;

    bool operator==(const Dims& other) const { return dims_ == other.dims_; }
    bool operator!=(const Dims& other) const { return !(*this == other); }

private:
    std::vector<int> dims_;
    int total_ = 0;
};

// Throws std::invalid_argument unless every index is a valid, distinct
// subsystem of `dims`. Returns the indices sorted ascending.
std::vector<int> validated_subset(const Dims& dims, const std::vector<int>& subset);

// Complement of `subset` within `dims`, ascending.
std::vector<int> complement(const Dims& dims, const std::vector<int>& subset);

} // namespace entdist
