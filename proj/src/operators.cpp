#include "sdkappa/operators.hpp"

#include <algorithm>
#include <sstream>

namespace sdkappa {

Operator::Operator(std::vector<int> values, int target_dim)
    : target_dim_(target_dim), values_(std::move(values)) {
    if (values_.empty()) throw InvalidInput("operator needs a nonempty value list");
    int prev = 0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        int v = values_[i];
        if (v < 0 || v > target_dim_) throw InvalidInput("operator value out of range");
        if (i > 0 && v < prev) throw InvalidInput("operator values must be monotone");
        prev = v;
    }
}

Operator Operator::identity(int m) {
    std::vector<int> v(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) v[static_cast<std::size_t>(i)] = i;
    return Operator(std::move(v), m);
}

Operator Operator::coface(int i, int m) {
    if (m < 1 || i < 0 || i > m) throw InvalidInput("bad coface index");
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j <= m; ++j)
        if (j != i) v.push_back(j);
    return Operator(std::move(v), m);
}

Operator Operator::codegeneracy(int i, int m) {
    if (i < 0 || i > m) throw InvalidInput("bad codegeneracy index");
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(m) + 2);
    for (int j = 0; j <= m; ++j) {
        v.push_back(j);
        if (j == i) v.push_back(j);
    }
    return Operator(std::move(v), m);
}

Operator Operator::constant(int value, int source_dim, int target_dim) {
    std::vector<int> v(static_cast<std::size_t>(source_dim) + 1, value);
    return Operator(std::move(v), target_dim);
}

Operator Operator::from_image(const std::vector<int>& image, int target_dim) {
    return Operator(image, target_dim);
}

bool Operator::is_injective() const {
    for (std::size_t i = 1; i < values_.size(); ++i)
        if (values_[i] == values_[i - 1]) return false;
    return true;
}

bool Operator::is_surjective() const {
    if (values_.front() != 0 || values_.back() != target_dim_) return false;
    for (std::size_t i = 1; i < values_.size(); ++i)
        if (values_[i] - values_[i - 1] > 1) return false;
    return true;
}

bool Operator::is_identity() const {
    if (source_dim() != target_dim_) return false;
    for (int i = 0; i <= target_dim_; ++i)
        if (values_[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

Operator Operator::compose(const Operator& inner) const {
    if (inner.target_dim() != source_dim())
        throw CompositionMismatch("operator composition dims " +
                                  std::to_string(inner.target_dim()) + " vs " +
                                  std::to_string(source_dim()));
    std::vector<int> v(inner.values_.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = values_[static_cast<std::size_t>(inner.values_[i])];
    return Operator(std::move(v), target_dim_);
}

std::pair<Operator, Operator> Operator::epi_mono() const {
    std::vector<int> img = image();
    std::vector<int> epi(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) {
        auto it = std::lower_bound(img.begin(), img.end(), values_[i]);
        epi[i] = static_cast<int>(it - img.begin());
    }
    int k = static_cast<int>(img.size()) - 1;
    return {Operator(std::move(epi), k), Operator(std::move(img), target_dim_)};
}

std::vector<int> Operator::image() const {
    std::vector<int> img;
    for (int v : values_)
        if (img.empty() || img.back() != v) img.push_back(v);
    return img;
}

bool Operator::operator<(const Operator& o) const {
    if (target_dim_ != o.target_dim_) return target_dim_ < o.target_dim_;
    return values_ < o.values_;
}

std::string Operator::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) os << ",";
        os << values_[i];
    }
    os << "]->" << target_dim_;
    return os.str();
}

std::vector<Operator> all_degeneracies(int k, int d) {
    std::vector<Operator> out;
    if (k < d || d < 0) return out;
    if (k > 30) throw ScaleGuard("degeneracy enumeration for k > 30");
    // Monotone surjections [k] -> [d]: choose which of the k steps increment.
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        if (static_cast<int>(__builtin_popcount(mask)) != d) continue;
        std::vector<int> v(static_cast<std::size_t>(k) + 1);
        int val = 0;
        v[0] = 0;
        for (int i = 0; i < k; ++i) {
            if (mask & (1u << i)) ++val;
            v[static_cast<std::size_t>(i) + 1] = val;
        }
        out.emplace_back(std::move(v), d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sdkappa
