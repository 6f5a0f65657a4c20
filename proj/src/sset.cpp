#include "sdkappa/sset.hpp"

#include <algorithm>
#include <set>

namespace sdkappa {

int SimplicialSet::add_simplex(int dim, std::string label, std::vector<Simplex> faces) {
    if (finalized_) throw InvalidInput("simplicial set already finalized");
    if (dim < 0) throw InvalidInput("negative dimension");
    if (dim > 0 && static_cast<int>(faces.size()) != dim + 1)
        throw InvalidInput("simplex of dim " + std::to_string(dim) + " needs " +
                           std::to_string(dim + 1) + " faces");
    int id = static_cast<int>(nd_.size());
    for (const Simplex& f : faces) {
        if (f.nd < 0 || f.nd >= id)
            throw InvalidInput("face id out of range in '" + label + "'");
        if (f.dim() != dim - 1) throw InvalidInput("face dimension mismatch in '" + label + "'");
        if (f.degen.target_dim() != nd_[static_cast<std::size_t>(f.nd)].dim)
            throw InvalidInput("face degeneracy mismatch in '" + label + "'");
    }
    if (!by_label_.emplace(label, id).second)
        throw DuplicateLabelError("simplex label '" + label + "'");
    if (dim >= static_cast<int>(by_dim_.size())) by_dim_.resize(static_cast<std::size_t>(dim) + 1);
    by_dim_[static_cast<std::size_t>(dim)].push_back(id);
    nd_.push_back(NdSimplex{dim, std::move(label), std::move(faces), {}});
    dim_ = std::max(dim_, dim);
    return id;
}

void SimplicialSet::finalize() {
    if (finalized_) return;
    finalized_ = true;
    for (std::size_t id = 0; id < nd_.size(); ++id) {
        NdSimplex& s = nd_[id];
        s.vertices.resize(static_cast<std::size_t>(s.dim) + 1);
        if (s.dim == 0) {
            s.vertices[0] = static_cast<int>(id);
            continue;
        }
        // vertex i: last vertex of d_{i+1}...-free normalization; use the
        // action of the vertex operator {i}.
        for (int i = 0; i <= s.dim; ++i) {
            Simplex v = act(Simplex{static_cast<int>(id), Operator::identity(s.dim)},
                            Operator({i}, s.dim));
            s.vertices[static_cast<std::size_t>(i)] = v.nd;
        }
    }
}

int SimplicialSet::nd_count(int dim) const {
    if (dim < 0 || dim >= static_cast<int>(by_dim_.size())) return 0;
    return static_cast<int>(by_dim_[static_cast<std::size_t>(dim)].size());
}

const std::vector<int>& SimplicialSet::nd_ids(int dim) const {
    static const std::vector<int> empty;
    if (dim < 0 || dim >= static_cast<int>(by_dim_.size())) return empty;
    return by_dim_[static_cast<std::size_t>(dim)];
}

std::optional<int> SimplicialSet::find(const std::string& label) const {
    auto it = by_label_.find(label);
    if (it == by_label_.end()) return std::nullopt;
    return it->second;
}

int SimplicialSet::id_of(const std::string& label) const {
    auto r = find(label);
    if (!r) throw UnknownElement("no simplex '" + label + "'");
    return *r;
}

Simplex SimplicialSet::face(int nd_id, int i) const {
    const NdSimplex& s = nd_[static_cast<std::size_t>(nd_id)];
    if (s.dim == 0) throw InvalidInput("vertex has no faces");
    return s.faces[static_cast<std::size_t>(i)];
}

Simplex SimplicialSet::act(const Simplex& s, const Operator& op) const {
    if (op.target_dim() != s.dim()) throw CompositionMismatch("operator action dims");
    Operator total = s.degen.compose(op);
    auto [epi, mono] = total.epi_mono();
    // apply the face part to the nondegenerate simplex, then re-degenerate
    int cur = s.nd;
    Operator face_op = mono;            // injective into dim(cur)
    Operator degen_acc = epi;
    while (!face_op.is_identity()) {
        // peel one elementary coface: largest value missing from the image
        int m = face_op.target_dim();
        std::vector<int> img = face_op.image();
        int skip = -1;
        std::set<int> in_img(img.begin(), img.end());
        for (int j = m; j >= 0; --j)
            if (!in_img.count(j)) { skip = j; break; }
        if (skip < 0) break;  // face_op is bijective = identity
        // face_op = coface(skip, m) o reduced
        std::vector<int> reduced(face_op.values().size());
        for (std::size_t t = 0; t < reduced.size(); ++t) {
            int v = face_op.values()[t];
            reduced[t] = v < skip ? v : v - 1;
        }
        const NdSimplex& c = nd_[static_cast<std::size_t>(cur)];
        Simplex f = c.faces[static_cast<std::size_t>(skip)];
        cur = f.nd;
        // X(face_op)(cur_old) = X(reduced)( X(coface skip)(cur_old) )
        //                     = X(reduced)( f.degen * (f.nd) )
        Operator total2 = f.degen.compose(Operator(std::move(reduced), m - 1));
        auto [epi2, mono2] = total2.epi_mono();
        face_op = mono2;
        degen_acc = epi2.compose(degen_acc);
    }
    return Simplex{cur, degen_acc};
}

std::vector<int> SimplicialSet::face_closure(int nd_id) const {
    std::vector<int> out;
    std::vector<bool> seen(nd_.size(), false);
    std::vector<int> stack{nd_id};
    seen[static_cast<std::size_t>(nd_id)] = true;
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        out.push_back(cur);
        const NdSimplex& s = nd_[static_cast<std::size_t>(cur)];
        for (const Simplex& f : s.faces) {
            if (!seen[static_cast<std::size_t>(f.nd)]) {
                seen[static_cast<std::size_t>(f.nd)] = true;
                stack.push_back(f.nd);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool SimplicialSet::is_face_of(int a, int b) const {
    auto cl = face_closure(b);
    return std::binary_search(cl.begin(), cl.end(), a);
}

bool SimplicialSet::non_singular() const {
    for (const NdSimplex& s : nd_) {
        std::set<int> vs(s.vertices.begin(), s.vertices.end());
        if (static_cast<int>(vs.size()) != s.dim + 1) return false;
    }
    return true;
}

bool SimplicialSet::operator==(const SimplicialSet& o) const {
    if (nd_.size() != o.nd_.size()) return false;
    for (std::size_t i = 0; i < nd_.size(); ++i) {
        if (nd_[i].dim != o.nd_[i].dim || nd_[i].label != o.nd_[i].label) return false;
        if (nd_[i].faces.size() != o.nd_[i].faces.size()) return false;
        for (std::size_t j = 0; j < nd_[i].faces.size(); ++j)
            if (nd_[i].faces[j] != o.nd_[i].faces[j]) return false;
    }
    return true;
}

void SimplicialSet::check_identities() const {
    for (std::size_t id = 0; id < nd_.size(); ++id) {
        int d = nd_[id].dim;
        Simplex s{static_cast<int>(id), Operator::identity(d)};
        // d_i d_j = d_{j-1} d_i for i < j, via operator composition
        for (int j = 1; j <= d; ++j)
            for (int i = 0; i < j; ++i) {
                if (d < 2) continue;
                Simplex a = act(act(s, Operator::coface(j, d)), Operator::coface(i, d - 1));
                Simplex b = act(act(s, Operator::coface(i, d)), Operator::coface(j - 1, d - 1));
                if (a != b)
                    throw InternalInconsistency("simplicial identity fails at '" + nd_[id].label +
                                                "'");
            }
        // s_i then d_i recovers the simplex
        for (int i = 0; i <= d; ++i) {
            Simplex degen = act(s, Operator::codegeneracy(i, d));
            Simplex back = act(degen, Operator::coface(i, d + 1));
            if (back != s)
                throw InternalInconsistency("degeneracy identity fails at '" + nd_[id].label + "'");
        }
    }
}

SSetPtr make_sset(SimplicialSet s) {
    s.finalize();
    return std::make_shared<const SimplicialSet>(std::move(s));
}

SimplicialMap::SimplicialMap(SSetPtr source, SSetPtr target, std::vector<Simplex> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
    if (image_.size() != static_cast<std::size_t>(source_->nd_count()))
        throw InvalidInput("simplicial map image size mismatch");
    for (int id = 0; id < source_->nd_count(); ++id) {
        const auto& s = source_->nd(id);
        const Simplex& im = image_[static_cast<std::size_t>(id)];
        if (im.dim() != s.dim) throw InvalidInput("simplicial map dimension mismatch at '" +
                                                  s.label + "'");
        for (int i = 0; i <= s.dim && s.dim > 0; ++i) {
            Simplex lhs = apply(source_->face(id, i));
            Simplex rhs = target_->act(im, Operator::coface(i, s.dim));
            if (lhs != rhs)
                throw InvalidInput("assignment does not commute with d_" + std::to_string(i) +
                                   " at '" + s.label + "'");
        }
    }
}

SimplicialMap SimplicialMap::identity(SSetPtr x) {
    std::vector<Simplex> image;
    image.reserve(static_cast<std::size_t>(x->nd_count()));
    for (int id = 0; id < x->nd_count(); ++id)
        image.push_back(Simplex{id, Operator::identity(x->nd(id).dim)});
    return SimplicialMap(x, x, std::move(image));
}

Simplex SimplicialMap::apply(const Simplex& s) const {
    const Simplex& im = image_[static_cast<std::size_t>(s.nd)];
    return Simplex{im.nd, im.degen.compose(s.degen)};
}

SimplicialMap SimplicialMap::compose(const SimplicialMap& inner) const {
    if (!(inner.target() == source()))
        throw CompositionMismatch("simplicial map composition");
    std::vector<Simplex> image;
    image.reserve(inner.image_.size());
    for (const Simplex& s : inner.image_) image.push_back(apply(s));
    return SimplicialMap(inner.source_, target_, std::move(image));
}

bool SimplicialMap::is_levelwise_injective() const {
    // injective in every level iff injective on nondegenerate simplices with
    // nondegenerate images
    std::set<std::pair<int, std::vector<int>>> seen;
    for (const Simplex& im : image_) {
        if (!im.is_nondegenerate()) return false;
        if (!seen.insert({im.nd, im.degen.values()}).second) return false;
    }
    return true;
}

bool SimplicialMap::is_isomorphism() const {
    return is_levelwise_injective() &&
           source_->nd_count() == target_->nd_count();
}

SimplicialMap SimplicialMap::inverse() const {
    if (!is_isomorphism()) throw InvalidInput("inverse of a non-isomorphism");
    std::vector<Simplex> inv(static_cast<std::size_t>(target_->nd_count()));
    for (int id = 0; id < source_->nd_count(); ++id) {
        const Simplex& im = image_[static_cast<std::size_t>(id)];
        inv[static_cast<std::size_t>(im.nd)] =
            Simplex{id, Operator::identity(source_->nd(id).dim)};
    }
    return SimplicialMap(target_, source_, std::move(inv));
}

bool SimplicialMap::operator==(const SimplicialMap& o) const {
    return *source_ == *o.source_ && *target_ == *o.target_ && image_ == o.image_;
}

// -- nerves -------------------------------------------------------------------

namespace {

std::string chain_label(const Poset& v, const std::vector<int>& chain) {
    std::string out = "{";
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i) out += "<";
        out += v.label(chain[i]);
    }
    out += "}";
    return out;
}

}  // namespace

SSetPtr nerve(const Poset& v) {
    SimplicialSet s;
    // enumerate strict chains by DFS in index order, dimension by dimension
    std::vector<std::vector<int>> chains;  // current dimension's chains
    std::vector<std::vector<int>> prev;
    std::unordered_map<std::string, int> id_of;
    // dimension 0
    for (int i = 0; i < v.size(); ++i) {
        std::vector<int> c{i};
        int id = s.add_simplex(0, chain_label(v, c), {});
        id_of[chain_label(v, c)] = id;
        prev.push_back(std::move(c));
    }
    int d = 1;
    while (!prev.empty()) {
        chains.clear();
        for (const auto& c : prev) {
            for (int nxt = 0; nxt < v.size(); ++nxt) {
                if (nxt != c.back() && v.leq(c.back(), nxt)) {
                    std::vector<int> c2 = c;
                    c2.push_back(nxt);
                    chains.push_back(std::move(c2));
                }
            }
        }
        std::sort(chains.begin(), chains.end());
        for (const auto& c : chains) {
            std::vector<Simplex> faces;
            faces.reserve(c.size());
            for (std::size_t drop = 0; drop < c.size(); ++drop) {
                std::vector<int> f;
                for (std::size_t t = 0; t < c.size(); ++t)
                    if (t != drop) f.push_back(c[t]);
                faces.push_back(Simplex{id_of.at(chain_label(v, f)), Operator::identity(d - 1)});
            }
            int id = s.add_simplex(d, chain_label(v, c), std::move(faces));
            id_of[chain_label(v, c)] = id;
        }
        prev = std::move(chains);
        chains = {};
        ++d;
    }
    return make_sset(std::move(s));
}

std::vector<std::string> nerve_chain_labels(const SimplicialSet& n, int nd_id) {
    // vertices of a nerve simplex are chains of length 1 labeled "{x}"
    std::vector<std::string> out;
    for (int vid : n.nd(nd_id).vertices) {
        const std::string& l = n.label(vid);
        out.push_back(l.substr(1, l.size() - 2));
    }
    return out;
}

Simplex weak_chain_simplex(const Poset& v, const SimplicialSet& nerve_v,
                           const std::vector<int>& elements) {
    std::vector<int> strict;
    std::vector<int> degen_vals;
    for (std::size_t t = 0; t < elements.size(); ++t) {
        if (strict.empty() || strict.back() != elements[t]) strict.push_back(elements[t]);
        degen_vals.push_back(static_cast<int>(strict.size()) - 1);
    }
    std::string lbl = "{";
    for (std::size_t t = 0; t < strict.size(); ++t) {
        if (t) lbl += "<";
        lbl += v.label(strict[t]);
    }
    lbl += "}";
    return Simplex{nerve_v.id_of(lbl),
                   Operator(std::move(degen_vals), static_cast<int>(strict.size()) - 1)};
}

SimplicialMap nerve_map(const OrderMap& phi, SSetPtr nerve_source, SSetPtr nerve_target) {
    std::vector<Simplex> image;
    image.reserve(static_cast<std::size_t>(nerve_source->nd_count()));
    for (int id = 0; id < nerve_source->nd_count(); ++id) {
        std::vector<std::string> chain = nerve_chain_labels(*nerve_source, id);
        std::vector<int> mapped;
        mapped.reserve(chain.size());
        for (const auto& l : chain) mapped.push_back(phi.apply(phi.source().index(l)));
        image.push_back(weak_chain_simplex(phi.target(), *nerve_target, mapped));
    }
    return SimplicialMap(std::move(nerve_source), std::move(nerve_target), std::move(image));
}

SimplicialMap nerve_map(const OrderMap& phi) {
    return nerve_map(phi, nerve(phi.source()), nerve(phi.target()));
}

NondegPoset nondeg_poset(const SimplicialSet& x) {
    int n = x.nd_count();
    std::vector<Bitrow> rows(static_cast<std::size_t>(n), Bitrow(static_cast<std::size_t>(n)));
    for (int b = 0; b < n; ++b)
        for (int a : x.face_closure(b)) rows[static_cast<std::size_t>(a)].set(static_cast<std::size_t>(b));
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    std::vector<int> nd_of_elt(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        labels.push_back(x.label(i));
        nd_of_elt[static_cast<std::size_t>(i)] = i;
    }
    return NondegPoset{poset_from_leq(std::move(labels), std::move(rows)), std::move(nd_of_elt)};
}

OrderMap induced_sharp(const SimplicialMap& f, const NondegPoset& src, const NondegPoset& tgt) {
    std::vector<int> assign(static_cast<std::size_t>(src.poset.size()));
    for (int i = 0; i < src.poset.size(); ++i) {
        int nd = src.nd_of_elt[static_cast<std::size_t>(i)];
        int im_nd = f.apply_nd(nd).nd;
        assign[static_cast<std::size_t>(i)] = tgt.poset.index(f.target().label(im_nd));
    }
    return OrderMap(src.poset, tgt.poset, std::move(assign));
}

Subcomplex subcomplex(SSetPtr x, const std::vector<int>& seed_nds) {
    std::vector<bool> keep(static_cast<std::size_t>(x->nd_count()), false);
    for (int s : seed_nds)
        for (int f : x->face_closure(s)) keep[static_cast<std::size_t>(f)] = true;
    std::vector<int> new_id(static_cast<std::size_t>(x->nd_count()), -1);
    SimplicialSet sub;
    for (int d = 0; d <= x->dim(); ++d) {
        for (int id : x->nd_ids(d)) {
            if (!keep[static_cast<std::size_t>(id)]) continue;
            std::vector<Simplex> faces;
            if (d > 0) {
                faces.reserve(static_cast<std::size_t>(d) + 1);
                for (int i = 0; i <= d; ++i) {
                    Simplex f = x->face(id, i);
                    faces.push_back(Simplex{new_id[static_cast<std::size_t>(f.nd)], f.degen});
                }
            }
            new_id[static_cast<std::size_t>(id)] = sub.add_simplex(d, x->label(id), std::move(faces));
        }
    }
    SSetPtr total = make_sset(std::move(sub));
    std::vector<Simplex> incl;
    incl.reserve(static_cast<std::size_t>(total->nd_count()));
    std::vector<int> old_of_new(static_cast<std::size_t>(total->nd_count()));
    for (int id = 0; id < x->nd_count(); ++id)
        if (new_id[static_cast<std::size_t>(id)] >= 0)
            old_of_new[static_cast<std::size_t>(new_id[static_cast<std::size_t>(id)])] = id;
    for (int id = 0; id < total->nd_count(); ++id)
        incl.push_back(Simplex{old_of_new[static_cast<std::size_t>(id)],
                               Operator::identity(total->nd(id).dim)});
    SimplicialMap inclusion(total, x, std::move(incl));
    return Subcomplex{total, std::move(inclusion), std::move(new_id)};
}

}  // namespace sdkappa
