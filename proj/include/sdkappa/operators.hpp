/**
 * Simplicial operators: order-preserving functions [k] -> [m] between the
 * finite ordinals, with composition and epi/mono factorization.  Injective
 * operators are face operators, surjective ones are degeneracy operators.
 */

#ifndef SDKAPPA_OPERATORS_HPP
#define SDKAPPA_OPERATORS_HPP

#include <string>
#include <utility>
#include <vector>

#include "sdkappa/common.hpp"

namespace sdkappa {

class Operator {
public:
    Operator() : target_dim_(0), values_{0} {}
    Operator(std::vector<int> values, int target_dim);

    static Operator identity(int m);
    /// Elementary coface [m-1] -> [m] skipping i.
    static Operator coface(int i, int m);
    /// Elementary codegeneracy [m+1] -> [m] repeating i.
    static Operator codegeneracy(int i, int m);
    static Operator constant(int value, int source_dim, int target_dim);
    /// The face operator [k] -> [m] whose image is the given sorted subset.
    static Operator from_image(const std::vector<int>& image, int target_dim);

    int source_dim() const { return static_cast<int>(values_.size()) - 1; }
    int target_dim() const { return target_dim_; }
    int operator()(int i) const { return values_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& values() const { return values_; }

    bool is_injective() const;
    bool is_surjective() const;
    bool is_face() const { return is_injective(); }
    bool is_degeneracy() const { return is_surjective(); }
    bool is_identity() const;

    /// this o inner, defined when inner.target_dim() == source_dim().
    Operator compose(const Operator& inner) const;
    /// Factor this = mono o epi through the image.
    std::pair<Operator, Operator> epi_mono() const;
    std::vector<int> image() const;

    bool operator==(const Operator& o) const {
        return target_dim_ == o.target_dim_ && values_ == o.values_;
    }
    bool operator!=(const Operator& o) const { return !(*this == o); }
    bool operator<(const Operator& o) const;

    std::string str() const;

private:
    int target_dim_;
    std::vector<int> values_;
};

/// All monotone surjections [k] -> [d], lexicographically ordered.
std::vector<Operator> all_degeneracies(int k, int d);

}  // namespace sdkappa

#endif  // SDKAPPA_OPERATORS_HPP
