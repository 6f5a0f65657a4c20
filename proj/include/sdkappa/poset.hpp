/**
 * Finite partially ordered sets and order-preserving functions.
 *
 * A Poset stores the full reflexive relation as bitset rows (posets here stay
 * small, and O(1) comparability dominates enumeration cost) together with the
 * covering relation.  All values are immutable after construction.
 */

#ifndef SDKAPPA_POSET_HPP
#define SDKAPPA_POSET_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sdkappa/common.hpp"

namespace sdkappa {

class Bitrow {
public:
    Bitrow() = default;
    explicit Bitrow(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}
    void set(std::size_t i) { w_[i >> 6] |= (1ull << (i & 63)); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    std::size_t size() const { return n_; }
    Bitrow& operator|=(const Bitrow& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    bool operator==(const Bitrow& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool is_subset_of(const Bitrow& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const Bitrow& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t x : w_) c += static_cast<std::size_t>(__builtin_popcountll(x));
        return c;
    }
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t b = 0; b < w_.size(); ++b) {
            std::uint64_t x = w_[b];
            while (x) {
                f((b << 6) + static_cast<std::size_t>(__builtin_ctzll(x)));
                x &= x - 1;
            }
        }
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

class Poset {
public:
    Poset() = default;

    int size() const { return static_cast<int>(labels_.size()); }
    bool empty() const { return labels_.empty(); }
    const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& labels() const { return labels_; }

    int index(const std::string& label) const;
    std::optional<int> find(const std::string& label) const;

    bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a)].test(static_cast<std::size_t>(b)); }
    bool less(int a, int b) const { return a != b && leq(a, b); }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    std::vector<int> strict_up_set(int v) const;
    std::vector<int> strict_down_set(int v) const;
    const Bitrow& up_row(int v) const { return leq_[static_cast<std::size_t>(v)]; }
    const Bitrow& down_row(int v) const { return geq_[static_cast<std::size_t>(v)]; }
    std::optional<int> maximum() const;
    std::optional<int> minimum() const;
    /// Length of the longest chain ending at v (0 for minimal elements).
    int rank(int v) const { return ranks_[static_cast<std::size_t>(v)]; }
    int height() const;

    bool operator==(const Poset& o) const { return labels_ == o.labels_ && leq_ == o.leq_; }
    bool operator!=(const Poset& o) const { return !(*this == o); }

    /// Subposet on the given element indices; labels are preserved.
    Poset restrict(const std::vector<int>& indices) const;
    Poset relabel(const std::vector<std::string>& new_labels) const;

    friend Poset make_poset_idx(std::vector<std::string> labels,
                                const std::vector<std::pair<int, int>>& relations);
    friend Poset poset_from_leq(std::vector<std::string> labels,
                                std::vector<Bitrow> leq);

private:
    std::vector<std::string> labels_;
    std::vector<Bitrow> leq_;
    std::vector<Bitrow> geq_;  // transpose of leq_
    std::vector<std::pair<int, int>> covers_;
    std::vector<int> ranks_;
    std::unordered_map<std::string, int> by_label_;

    void rebuild_derived();
};

/// Builds the poset generated by the given relation pairs (reflexive
/// transitive closure).  Throws CycleError if antisymmetry would fail and
/// DuplicateLabelError on repeated labels.
Poset make_poset(const std::vector<std::string>& labels,
                 const std::vector<std::pair<std::string, std::string>>& relations);
Poset make_poset_idx(std::vector<std::string> labels,
                     const std::vector<std::pair<int, int>>& relations);
/// Internal constructor from an already-closed relation (validated).
Poset poset_from_leq(std::vector<std::string> labels, std::vector<Bitrow> leq);

/// The chain poset [m] = {0 < 1 < ... < m} with labels "0".."m".
Poset chain_poset(int m);
/// Product order; element labels are "(a,b)".
Poset product_poset(const Poset& a, const Poset& b);

class OrderMap {
public:
    OrderMap() = default;
    /// Validates monotonicity of the label-level assignment.
    OrderMap(Poset source, Poset target,
             const std::vector<std::pair<std::string, std::string>>& assignment);
    OrderMap(Poset source, Poset target, std::vector<int> assignment);

    static OrderMap identity(const Poset& p);
    static OrderMap constant(const Poset& source, const Poset& target, const std::string& value);

    const Poset& source() const { return *source_; }
    const Poset& target() const { return *target_; }
    int apply(int i) const { return map_[static_cast<std::size_t>(i)]; }
    const std::string& apply_label(const std::string& l) const;
    const std::vector<int>& assignment() const { return map_; }

    OrderMap compose(const OrderMap& inner) const;  // this o inner
    bool is_injective() const;
    bool is_surjective() const;
    bool is_bijective() const { return is_injective() && is_surjective(); }
    /// For a bijective map, the inverse order map (validated monotone).
    OrderMap inverse() const;

    bool operator==(const OrderMap& o) const;
    bool operator!=(const OrderMap& o) const { return !(*this == o); }

private:
    std::shared_ptr<const Poset> source_;
    std::shared_ptr<const Poset> target_;
    std::vector<int> map_;

    void validate() const;
};

/// The down-set V/v = {u : u <= v} with the subset order; v becomes the
/// unique maximum.  Throws UnknownElement.
Poset down_set(const Poset& v_poset, const std::string& v);
/// Restriction phi/v : V/v -> W/phi(v).
OrderMap restrict_map(const OrderMap& phi, const std::string& v);

struct MappingCylinder {
    Poset total;          // V u_phi W, V tagged "1|", W tagged "0|"
    OrderMap front_in;    // V -> total
    OrderMap back_in;     // W -> total
    OrderMap projection;  // phi v 1 : total -> W
    OrderMap coord;       // total -> [1], V -> 1, W -> 0
};

/// The mapping cylinder poset P(phi) = V u_phi W with the order generated by
/// the relations in V, the relations in W, and phi(v) < v.  Concretely,
/// w <= v iff w <= phi(v) in W.
MappingCylinder mapping_cylinder(const OrderMap& phi);

struct IteratedCylinder {
    Poset total;                  // layers tagged "i|", 0 <= i <= r
    OrderMap coord;               // total -> [r], layer i -> i
    std::vector<OrderMap> layer_in;  // V_i -> total, index i
    OrderMap projection;          // total -> V_0 via the composites
};

/// Iterated mapping cylinder P(phi_r, ..., phi_1) of a composable sequence
/// V_r -> ... -> V_0.  `seq` lists the maps from the source end:
/// seq[0] = phi_r : V_r -> V_{r-1}, ..., seq[r-1] = phi_1 : V_1 -> V_0.
/// For r = 0 pass the lone poset via `single`.
IteratedCylinder iterated_cylinder(const std::vector<OrderMap>& seq);
IteratedCylinder iterated_cylinder_single(const Poset& v0);

bool is_left_ideal(const Poset& v, const std::vector<std::string>& subset);
bool is_right_ideal(const Poset& v, const std::vector<std::string>& subset);

struct BeatRemoval {
    std::string element;
    std::string witness;   // the unique min of the strict up-set / max of the strict down-set
    bool up;               // true: up-set witness, false: down-set witness
};

struct CoreResult {
    Poset core;
    std::vector<BeatRemoval> trace;
};

/// Dismantles beat points (deterministically, lowest element index first)
/// until none remain.  Removing a beat point preserves the homotopy type of
/// the order complex.
CoreResult poset_core(const Poset& v);

/// Checks that replaying the trace from `v` removes a valid beat point at
/// every step and ends at `core`.
bool verify_dismantling(const Poset& v, const std::vector<BeatRemoval>& trace, const Poset& core);

}  // namespace sdkappa

#endif  // SDKAPPA_POSET_HPP
