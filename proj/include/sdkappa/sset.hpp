/**
 * Finite simplicial sets in nondegenerate form.
 *
 * Simplices are stored only in nondegenerate form; a general simplex is a
 * nondegenerate one together with a formal degeneracy operator, and the
 * operator action is computed through Eilenberg-Zilber factorization.
 * Degenerate simplices are never materialized.
 */

#ifndef SDKAPPA_SSET_HPP
#define SDKAPPA_SSET_HPP

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sdkappa/operators.hpp"
#include "sdkappa/poset.hpp"

namespace sdkappa {

class SimplicialSet;
using SSetPtr = std::shared_ptr<const SimplicialSet>;

/// A simplex of a fixed simplicial set: nondegenerate simplex id plus a
/// surjective degeneracy operator [k] ->> [dim nd].
struct Simplex {
    int nd = -1;
    Operator degen;

    int dim() const { return degen.source_dim(); }
    bool is_nondegenerate() const { return degen.is_identity(); }
    bool operator==(const Simplex& o) const { return nd == o.nd && degen == o.degen; }
    bool operator!=(const Simplex& o) const { return !(*this == o); }
};

class SimplicialSet {
public:
    struct NdSimplex {
        int dim;
        std::string label;
        std::vector<Simplex> faces;   // d_0 ... d_dim, normalized
        std::vector<int> vertices;    // nd ids of the dim+1 vertices (repeats allowed)
    };

    SimplicialSet() = default;

    // -- builder interface ---------------------------------------------------
    /// Adds a nondegenerate simplex; faces must reference already-added ids.
    int add_simplex(int dim, std::string label, std::vector<Simplex> faces);
    /// Computes vertex tables; must be called once after the last add.
    void finalize();

    // -- queries -------------------------------------------------------------
    int dim() const { return dim_; }
    int nd_count() const { return static_cast<int>(nd_.size()); }
    int nd_count(int dim) const;
    const std::vector<int>& nd_ids(int dim) const;
    const NdSimplex& nd(int id) const { return nd_[static_cast<std::size_t>(id)]; }
    const std::string& label(int id) const { return nd_[static_cast<std::size_t>(id)].label; }
    std::optional<int> find(const std::string& label) const;
    int id_of(const std::string& label) const;

    /// Operator action X(op) on a simplex, normalized (Eilenberg-Zilber).
    Simplex act(const Simplex& s, const Operator& op) const;
    Simplex face(int nd_id, int i) const;

    /// Nondegenerate ids of all iterated faces of nd_id (including itself).
    std::vector<int> face_closure(int nd_id) const;
    bool is_face_of(int a, int b) const;

    bool non_singular() const;

    bool operator==(const SimplicialSet& o) const;

    /// Checks the simplicial identities on all composable operator pairs up
    /// to the top dimension; throws InternalInconsistency on failure.
    void check_identities() const;

private:
    int dim_ = -1;
    std::vector<NdSimplex> nd_;
    std::vector<std::vector<int>> by_dim_;
    std::unordered_map<std::string, int> by_label_;
    bool finalized_ = false;
};

SSetPtr make_sset(SimplicialSet s);

class SimplicialMap {
public:
    SimplicialMap() = default;
    /// image[i] is the (possibly degenerate) image of source nd simplex i.
    /// Commutation with all face operators is validated.
    SimplicialMap(SSetPtr source, SSetPtr target, std::vector<Simplex> image);

    static SimplicialMap identity(SSetPtr x);

    const SimplicialSet& source() const { return *source_; }
    const SimplicialSet& target() const { return *target_; }
    SSetPtr source_ptr() const { return source_; }
    SSetPtr target_ptr() const { return target_; }

    Simplex apply(const Simplex& s) const;
    Simplex apply_nd(int nd_id) const { return image_[static_cast<std::size_t>(nd_id)]; }

    SimplicialMap compose(const SimplicialMap& inner) const;  // this o inner
    bool is_levelwise_injective() const;
    bool is_isomorphism() const;
    SimplicialMap inverse() const;

    bool operator==(const SimplicialMap& o) const;
    bool operator!=(const SimplicialMap& o) const { return !(*this == o); }

private:
    SSetPtr source_;
    SSetPtr target_;
    std::vector<Simplex> image_;
};

// -- nerves ------------------------------------------------------------------

/// Nerve of a poset: nondegenerate k-simplices are the strictly increasing
/// chains of k+1 elements, labeled "{a<b<...}".
SSetPtr nerve(const Poset& v);
/// Functorial map of nerves induced by an order map.
SimplicialMap nerve_map(const OrderMap& phi, SSetPtr nerve_source, SSetPtr nerve_target);
SimplicialMap nerve_map(const OrderMap& phi);

/// The element labels of the chain backing a nerve simplex.
std::vector<std::string> nerve_chain_labels(const SimplicialSet& n, int nd_id);

/// The (possibly degenerate) nerve simplex carried by a weakly increasing
/// chain of poset elements.
Simplex weak_chain_simplex(const Poset& v, const SimplicialSet& nerve_v,
                           const std::vector<int>& elements);

struct NondegPoset {
    Poset poset;                 // elements = nondegenerate simplices, face order
    std::vector<int> nd_of_elt;  // poset index -> nd id
};

/// Poset of nondegenerate simplices with x <= y iff x is an (iterated) face
/// of y.
NondegPoset nondeg_poset(const SimplicialSet& x);

/// Order map between nondegenerate-simplex posets induced by a simplicial
/// map, x -> f(x)^#.
OrderMap induced_sharp(const SimplicialMap& f, const NondegPoset& src, const NondegPoset& tgt);

/// Subcomplex spanned by the given nondegenerate simplices (closed under
/// faces automatically); labels are preserved.  Returns the subcomplex, the
/// inclusion, and the id translation old->new.
struct Subcomplex {
    SSetPtr total;
    SimplicialMap inclusion;
    std::vector<int> new_id;  // -1 when not included
};
Subcomplex subcomplex(SSetPtr x, const std::vector<int>& seed_nds);

}  // namespace sdkappa

#endif  // SDKAPPA_SSET_HPP
