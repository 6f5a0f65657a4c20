/**
 * Constructions on finite simplicial sets: standard simplices, boundaries,
 * products, gluings (degreewise colimits), pushouts, Kan subdivision via the
 * colimit formula, the Barratt nerve, the comparison map b_X, the last
 * vertex map, the canonical map kappa, and the improvement functor.
 */

#ifndef SDKAPPA_SSET_FUNCTORS_HPP
#define SDKAPPA_SSET_FUNCTORS_HPP

#include <string>
#include <vector>

#include "sdkappa/sset.hpp"

namespace sdkappa {

// -- simplices and boundaries --------------------------------------------------

/// Standard m-simplex as the nerve of [m].
SSetPtr delta(int m);
/// Representing map Delta[n] -> X of a nondegenerate n-simplex.
SimplicialMap char_map(SSetPtr x, int nd_id);
/// Subcomplex of delta(m) omitting the top simplex; m >= 1.
SSetPtr boundary(int m);
/// Poset of nonempty subsets of [m] ordered by inclusion (labels "{0,2}").
Poset face_poset(int m);

// -- products ------------------------------------------------------------------

struct ProductResult {
    SSetPtr total;
    SimplicialMap pr1;
    SimplicialMap pr2;
    /// (x nd, y nd, residual degeneracies) -> product nd id
    std::unordered_map<std::string, int> key_lookup;
};

/// Degreewise product; nondegenerate simplices are jointly nondegenerate
/// pairs (staircases).
ProductResult product(SSetPtr x, SSetPtr y);

/// The simplex of the product carried by a pair of simplices of the factors
/// (joint Eilenberg-Zilber normalization).
Simplex product_pair_simplex(const ProductResult& prod, const Simplex& s1, const Simplex& s2);

/// The map (f, g) : Z -> X x Y determined by f : Z -> X and g : Z -> Y.
SimplicialMap pair_map(const SimplicialMap& f, const SimplicialMap& g,
                       const ProductResult& xy);

/// Canonical isomorphism N(V x W) -> N(V) x N(W).
SimplicialMap nerve_product_iso(const Poset& v, const Poset& w,
                                SSetPtr nerve_vw, const ProductResult& nv_nw);

// -- gluing (degreewise colimits) ----------------------------------------------

/// A pair of simplicial maps out of a common domain into two components of a
/// gluing diagram; the gluing identifies f(a) with g(a) for every simplex a.
struct GlueRelation {
    SSetPtr domain;
    int comp_f;
    SimplicialMap f;  // domain -> components[comp_f]
    int comp_g;
    SimplicialMap g;  // domain -> components[comp_g]
};

struct GlueResult {
    SSetPtr total;
    std::vector<SimplicialMap> inclusion;  // one per component

    /// Universal property: the map out of the gluing induced by compatible
    /// maps per component; throws InternalInconsistency when incompatible.
    SimplicialMap induce(const std::vector<SimplicialMap>& maps) const;

private:
    friend GlueResult glue(std::vector<SSetPtr>, const std::vector<GlueRelation>&);
    // class representative bookkeeping for induce()
    std::vector<std::vector<std::pair<int, int>>> class_members_;  // per quotient nd id
};

GlueResult glue(std::vector<SSetPtr> components, const std::vector<GlueRelation>& relations);

/// Pushout of B <- A -> C along a cofibration i (levelwise injective).
struct PushoutResult {
    SSetPtr total;
    SimplicialMap in_b;
    SimplicialMap in_c;
    GlueResult gluing;  // components are {B, C}
};
PushoutResult pushout(const SimplicialMap& i, const SimplicialMap& g);

/// Disjoint union with inclusion maps.
GlueResult disjoint_union(std::vector<SSetPtr> components);

// -- subdivision ---------------------------------------------------------------

/// Kan subdivision computed as the colimit of B(Delta[n]) over the
/// nondegenerate simplices, glued along the face identifications.
struct SdResult {
    SSetPtr total;
    SSetPtr base;
    /// inclusion of the component of nondegenerate simplex x into Sd(X)
    std::vector<SimplicialMap> component;
    GlueResult gluing;
};
SdResult sd(SSetPtr x);

/// Functorial map Sd(f) : Sd(X) -> Sd(Y).
SimplicialMap sd_map(const SimplicialMap& f, const SdResult& sdx, const SdResult& sdy);

/// Barratt nerve B(X) = N(X^#).
struct BarrattResult {
    SSetPtr total;
    NondegPoset sharp;
};
BarrattResult barratt_nerve(SSetPtr x);

/// Functorial map B(f) = N(f^#).
SimplicialMap barratt_map(const SimplicialMap& f, const BarrattResult& bx, const BarrattResult& by);

/// Natural comparison b_X : Sd(X) -> B(X); an isomorphism for non-singular X.
SimplicialMap b_map(const SdResult& sdx, const BarrattResult& bx);

/// Natural last vertex map d_X : Sd(X) -> X.
SimplicialMap last_vertex(const SdResult& sdx);

// -- kappa ---------------------------------------------------------------------

/// kappa = (Sd pr_1, Sd pr_2) : Sd(X x Y) -> Sd(X) x Sd(Y), computed in the
/// colimit model.
struct KappaColimit {
    SimplicialMap kappa;
    SdResult sd_product;
    SdResult sd_x;
    SdResult sd_y;
    ProductResult xy;
    ProductResult sdx_sdy;
};
KappaColimit kappa_colimit(SSetPtr x, SSetPtr y);

/// Improvement functor I(X) = B(Sd(X)).
struct ImprovementResult {
    SSetPtr total;
    SdResult sdx;
    BarrattResult bsdx;
};
ImprovementResult improvement(SSetPtr x);

/// I(X x Y) -> I(X) x I(Y) induced by the projections.
struct ImprovementMapResult {
    SimplicialMap map;
    ImprovementResult ixy;
    ImprovementResult ix;
    ImprovementResult iy;
    ProductResult ix_iy;
};
ImprovementMapResult improvement_map(SSetPtr x, SSetPtr y);

// -- restriction over a subcomplex ----------------------------------------------

struct RestrictedMap {
    SimplicialMap map;        // f^{-1}(Z) -> Z
    Subcomplex source_part;   // f^{-1}(Z) inside source
    Subcomplex target_part;   // Z inside target
};
/// Restriction of f over the subcomplex of its target spanned by the given
/// nondegenerate simplices.
RestrictedMap restrict_over(const SimplicialMap& f, const std::vector<int>& target_seed);

}  // namespace sdkappa

#endif  // SDKAPPA_SSET_FUNCTORS_HPP
