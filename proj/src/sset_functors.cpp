#include "sdkappa/sset_functors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace sdkappa {

// -- simplices and boundaries --------------------------------------------------

SSetPtr delta(int m) {
    if (m < 0) throw InvalidInput("delta(m) needs m >= 0");
    return nerve(chain_poset(m));
}

SimplicialMap char_map(SSetPtr x, int nd_id) {
    int n = x->nd(nd_id).dim;
    SSetPtr dn = delta(n);
    Poset cn = chain_poset(n);
    std::vector<Simplex> image;
    image.reserve(static_cast<std::size_t>(dn->nd_count()));
    for (int id = 0; id < dn->nd_count(); ++id) {
        std::vector<std::string> chain = nerve_chain_labels(*dn, id);
        std::vector<int> vals;
        for (const auto& l : chain) vals.push_back(cn.index(l));
        image.push_back(x->act(Simplex{nd_id, Operator::identity(n)},
                               Operator(std::move(vals), n)));
    }
    return SimplicialMap(dn, std::move(x), std::move(image));
}

SSetPtr boundary(int m) {
    if (m < 1) throw InvalidInput("boundary(m) needs m >= 1");
    SSetPtr d = delta(m);
    return subcomplex(d, d->nd_ids(m - 1)).total;
}

std::vector<std::vector<int>> face_poset_subsets(int m) {
    std::vector<std::vector<int>> subsets;
    for (unsigned mask = 1; mask < (1u << (m + 1)); ++mask) {
        std::vector<int> s;
        for (int i = 0; i <= m; ++i)
            if (mask & (1u << i)) s.push_back(i);
        subsets.push_back(std::move(s));
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return subsets;
}

namespace {

std::string subset_label(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

}  // namespace

Poset face_poset(int m) {
    auto subsets = face_poset_subsets(m);
    std::vector<std::string> labels;
    labels.reserve(subsets.size());
    for (auto& s : subsets) labels.push_back(subset_label(s));
    std::vector<Bitrow> rows(subsets.size(), Bitrow(subsets.size()));
    for (std::size_t a = 0; a < subsets.size(); ++a)
        for (std::size_t b = 0; b < subsets.size(); ++b)
            if (std::includes(subsets[b].begin(), subsets[b].end(), subsets[a].begin(),
                              subsets[a].end()))
                rows[a].set(b);
    return poset_from_leq(std::move(labels), std::move(rows));
}

// -- products ------------------------------------------------------------------

namespace {

std::string staircase_steps(const Operator& t1, const Operator& t2) {
    std::string steps;
    for (int t = 1; t <= t1.source_dim(); ++t) {
        bool h = t1(t) > t1(t - 1);
        bool v = t2(t) > t2(t - 1);
        steps += h && v ? 'd' : (h ? 'h' : 'v');
    }
    return steps;
}

std::string product_key(int x_nd, int y_nd, const Operator& t1, const Operator& t2) {
    std::string k = std::to_string(x_nd) + "/" + std::to_string(y_nd) + ":";
    for (int v : t1.values()) k += std::to_string(v) + ",";
    k += ";";
    for (int v : t2.values()) k += std::to_string(v) + ",";
    return k;
}

std::string product_label(const std::string& xl, const std::string& yl, const std::string& steps) {
    return "(" + xl + "*" + yl + ":" + steps + ")";
}

/// Factor a pair of surjections through their common repeats: returns the
/// shared epi and the jointly injective residual pair.
void joint_normalize(const Operator& r1, const Operator& r2, Operator& epi, Operator& t1,
                     Operator& t2) {
    int k = r1.source_dim();
    std::vector<int> e, v1, v2;
    for (int t = 0; t <= k; ++t) {
        if (t == 0 || r1(t) != r1(t - 1) || r2(t) != r2(t - 1)) {
            v1.push_back(r1(t));
            v2.push_back(r2(t));
        }
        e.push_back(static_cast<int>(v1.size()) - 1);
    }
    int kk = static_cast<int>(v1.size()) - 1;
    epi = Operator(std::move(e), kk);
    t1 = Operator(std::move(v1), r1.target_dim());
    t2 = Operator(std::move(v2), r2.target_dim());
}

void enumerate_staircases(int a, int b, std::vector<std::pair<std::vector<int>, std::vector<int>>>& out) {
    std::vector<int> c1{0}, c2{0};
    std::function<void()> rec = [&] {
        if (c1.back() == a && c2.back() == b) {
            out.emplace_back(c1, c2);
            return;
        }
        // step order: h, v, d (keeps output deterministic)
        if (c1.back() < a) {
            c1.push_back(c1.back() + 1);
            c2.push_back(c2.back());
            rec();
            c1.pop_back();
            c2.pop_back();
        }
        if (c2.back() < b) {
            c1.push_back(c1.back());
            c2.push_back(c2.back() + 1);
            rec();
            c1.pop_back();
            c2.pop_back();
        }
        if (c1.back() < a && c2.back() < b) {
            c1.push_back(c1.back() + 1);
            c2.push_back(c2.back() + 1);
            rec();
            c1.pop_back();
            c2.pop_back();
        }
    };
    rec();
}

}  // namespace

Simplex product_pair_simplex(const ProductResult& prod, const Simplex& s1, const Simplex& s2) {
    Operator epi, t1, t2;
    joint_normalize(s1.degen, s2.degen, epi, t1, t2);
    auto it = prod.key_lookup.find(product_key(s1.nd, s2.nd, t1, t2));
    if (it == prod.key_lookup.end())
        throw InternalInconsistency("pair simplex not present in product");
    return Simplex{it->second, epi};
}

ProductResult product(SSetPtr x, SSetPtr y) {
    ProductResult out;
    SimplicialSet prod;
    std::unordered_map<std::string, int> lookup;

    struct Entry {
        int x_nd, y_nd;
        Operator t1, t2;
        std::string steps;
    };
    int top = std::max(x->dim() + y->dim(), 0);
    std::vector<std::vector<Entry>> by_dim(static_cast<std::size_t>(top) + 1);
    for (int xd = 0; xd <= x->dim(); ++xd)
        for (int yd = 0; yd <= y->dim(); ++yd) {
            std::vector<std::pair<std::vector<int>, std::vector<int>>> stairs;
            enumerate_staircases(xd, yd, stairs);
            for (int xi : x->nd_ids(xd))
                for (int yi : y->nd_ids(yd))
                    for (auto& [v1, v2] : stairs) {
                        Entry e{xi, yi, Operator(v1, xd), Operator(v2, yd), ""};
                        e.steps = staircase_steps(e.t1, e.t2);
                        by_dim[v1.size() - 1].push_back(std::move(e));
                    }
        }
    for (int d = 0; d <= top; ++d) {
        auto& bucket = by_dim[static_cast<std::size_t>(d)];
        std::sort(bucket.begin(), bucket.end(), [](const Entry& a, const Entry& b) {
            return std::tie(a.x_nd, a.y_nd, a.steps) < std::tie(b.x_nd, b.y_nd, b.steps);
        });
        for (const Entry& e : bucket) {
            std::vector<Simplex> faces;
            if (d > 0) {
                faces.reserve(static_cast<std::size_t>(d) + 1);
                for (int i = 0; i <= d; ++i) {
                    Operator cf = Operator::coface(i, d);
                    Simplex f1 = x->act(Simplex{e.x_nd, e.t1}, cf);
                    Simplex f2 = y->act(Simplex{e.y_nd, e.t2}, cf);
                    Operator epi, t1, t2;
                    joint_normalize(f1.degen, f2.degen, epi, t1, t2);
                    auto it = lookup.find(product_key(f1.nd, f2.nd, t1, t2));
                    if (it == lookup.end())
                        throw InternalInconsistency("product face missing");
                    faces.push_back(Simplex{it->second, epi});
                }
            }
            int id = prod.add_simplex(
                d, product_label(x->label(e.x_nd), y->label(e.y_nd), e.steps), std::move(faces));
            lookup.emplace(product_key(e.x_nd, e.y_nd, e.t1, e.t2), id);
        }
    }
    out.total = make_sset(std::move(prod));
    out.key_lookup = std::move(lookup);

    // projections, recovering entries in id order
    std::vector<Simplex> im1, im2;
    im1.reserve(static_cast<std::size_t>(out.total->nd_count()));
    im2.reserve(static_cast<std::size_t>(out.total->nd_count()));
    {
        std::vector<const Entry*> in_order(static_cast<std::size_t>(out.total->nd_count()));
        for (auto& bucket : by_dim)
            for (const Entry& e : bucket) {
                int id = out.key_lookup.at(product_key(e.x_nd, e.y_nd, e.t1, e.t2));
                in_order[static_cast<std::size_t>(id)] = &e;
            }
        for (int id = 0; id < out.total->nd_count(); ++id) {
            const Entry& e = *in_order[static_cast<std::size_t>(id)];
            im1.push_back(Simplex{e.x_nd, e.t1});
            im2.push_back(Simplex{e.y_nd, e.t2});
        }
    }
    out.pr1 = SimplicialMap(out.total, x, std::move(im1));
    out.pr2 = SimplicialMap(out.total, y, std::move(im2));
    return out;
}

SimplicialMap pair_map(const SimplicialMap& f, const SimplicialMap& g, const ProductResult& xy) {
    if (!(f.source() == g.source())) throw CompositionMismatch("pair_map sources differ");
    std::vector<Simplex> image;
    image.reserve(static_cast<std::size_t>(f.source().nd_count()));
    for (int id = 0; id < f.source().nd_count(); ++id)
        image.push_back(product_pair_simplex(xy, f.apply_nd(id), g.apply_nd(id)));
    return SimplicialMap(f.source_ptr(), xy.total, std::move(image));
}

SimplicialMap nerve_product_iso(const Poset& v, const Poset& w, SSetPtr nerve_vw,
                                const ProductResult& nv_nw) {
    Poset vw = product_poset(v, w);
    SSetPtr nv = nerve(v), nw = nerve(w);
    std::vector<Simplex> image;
    image.reserve(static_cast<std::size_t>(nerve_vw->nd_count()));
    for (int id = 0; id < nerve_vw->nd_count(); ++id) {
        std::vector<std::string> chain = nerve_chain_labels(*nerve_vw, id);
        std::vector<int> is, js;
        for (const auto& l : chain) {
            int idx = vw.index(l);
            is.push_back(idx / w.size());
            js.push_back(idx % w.size());
        }
        Simplex s1 = weak_chain_simplex(v, *nv, is);
        Simplex s2 = weak_chain_simplex(w, *nw, js);
        image.push_back(product_pair_simplex(nv_nw, s1, s2));
    }
    return SimplicialMap(std::move(nerve_vw), nv_nw.total, std::move(image));
}

// -- gluing ----------------------------------------------------------------------

namespace {

class DegenTable {
public:
    const std::vector<Operator>& get(int k, int d) {
        auto key = std::make_pair(k, d);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(key, all_degeneracies(k, d)).first->second;
    }
    int index_of(int k, int d, const Operator& op) {
        const auto& v = get(k, d);
        auto it = std::lower_bound(v.begin(), v.end(), op);
        return static_cast<int>(it - v.begin());
    }

private:
    std::map<std::pair<int, int>, std::vector<Operator>> cache_;
};

struct DSU {
    std::vector<int> parent;
    explicit DSU(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

}  // namespace

GlueResult glue(std::vector<SSetPtr> components, const std::vector<GlueRelation>& relations) {
    int top = 0;
    for (const auto& c : components) top = std::max(top, c->dim());
    DegenTable degens;

    // uid layout: per component, per nd simplex, blocks for k = d..top
    std::vector<std::vector<int>> base(components.size());
    std::vector<std::vector<std::vector<int>>> cum(components.size());
    long total_cells = 0;
    for (std::size_t c = 0; c < components.size(); ++c) {
        base[c].resize(static_cast<std::size_t>(components[c]->nd_count()));
        cum[c].resize(static_cast<std::size_t>(components[c]->nd_count()));
        for (int z = 0; z < components[c]->nd_count(); ++z) {
            base[c][static_cast<std::size_t>(z)] = static_cast<int>(total_cells);
            int d = components[c]->nd(z).dim;
            auto& cz = cum[c][static_cast<std::size_t>(z)];
            cz.resize(static_cast<std::size_t>(top - d) + 1);
            int acc = 0;
            for (int k = d; k <= top; ++k) {
                cz[static_cast<std::size_t>(k - d)] = acc;
                acc += static_cast<int>(degens.get(k, d).size());
            }
            total_cells += acc;
        }
    }
    auto uid = [&](int c, const Simplex& s) -> int {
        int d = components[static_cast<std::size_t>(c)]->nd(s.nd).dim;
        int k = s.dim();
        return base[static_cast<std::size_t>(c)][static_cast<std::size_t>(s.nd)] +
               cum[static_cast<std::size_t>(c)][static_cast<std::size_t>(s.nd)]
                  [static_cast<std::size_t>(k - d)] +
               degens.index_of(k, d, s.degen);
    };

    DSU dsu(static_cast<std::size_t>(total_cells));
    for (const auto& rel : relations) {
        for (int a = 0; a < rel.domain->nd_count(); ++a) {
            int da = rel.domain->nd(a).dim;
            for (int k = da; k <= top; ++k) {
                for (const Operator& sg : degens.get(k, da)) {
                    Simplex s{a, sg};
                    dsu.unite(uid(rel.comp_f, rel.f.apply(s)), uid(rel.comp_g, rel.g.apply(s)));
                }
            }
        }
    }

    // collect members per class, in uid order
    std::vector<std::vector<int>> members(static_cast<std::size_t>(total_cells));
    std::vector<std::tuple<int, int, Operator>> cell_info(
        static_cast<std::size_t>(total_cells), std::make_tuple(0, 0, Operator()));
    for (std::size_t c = 0; c < components.size(); ++c)
        for (int z = 0; z < components[c]->nd_count(); ++z) {
            int d = components[c]->nd(z).dim;
            for (int k = d; k <= top; ++k)
                for (const Operator& sg : degens.get(k, d)) {
                    int u = uid(static_cast<int>(c), Simplex{z, sg});
                    cell_info[static_cast<std::size_t>(u)] = {static_cast<int>(c), z, sg};
                    members[static_cast<std::size_t>(dsu.find(u))].push_back(u);
                }
        }

    // nondegenerate classes: all members carry the identity degeneracy
    std::vector<int> class_dim(static_cast<std::size_t>(total_cells), -1);
    std::vector<bool> is_nd_class(static_cast<std::size_t>(total_cells), false);
    for (int u = 0; u < total_cells; ++u) {
        if (members[static_cast<std::size_t>(u)].empty()) continue;
        bool all_id = true;
        for (int m : members[static_cast<std::size_t>(u)]) {
            const auto& [c, z, sg] = cell_info[static_cast<std::size_t>(m)];
            (void)c;
            (void)z;
            if (!sg.is_identity()) { all_id = false; break; }
        }
        is_nd_class[static_cast<std::size_t>(u)] = all_id;
        const auto& [c0, z0, sg0] = cell_info[static_cast<std::size_t>(
            members[static_cast<std::size_t>(u)].front())];
        (void)c0;
        (void)z0;
        class_dim[static_cast<std::size_t>(u)] = sg0.source_dim();
    }

    // order nd classes by (dim, min uid) and construct the quotient
    std::vector<int> nd_roots;
    for (int u = 0; u < total_cells; ++u)
        if (!members[static_cast<std::size_t>(u)].empty() && is_nd_class[static_cast<std::size_t>(u)])
            nd_roots.push_back(u);
    std::sort(nd_roots.begin(), nd_roots.end(), [&](int a, int b) {
        if (class_dim[static_cast<std::size_t>(a)] != class_dim[static_cast<std::size_t>(b)])
            return class_dim[static_cast<std::size_t>(a)] < class_dim[static_cast<std::size_t>(b)];
        return a < b;
    });
    std::vector<int> qid(static_cast<std::size_t>(total_cells), -1);

    SimplicialSet q;
    std::vector<Simplex> norm(static_cast<std::size_t>(total_cells),
                              Simplex{-1, Operator()});  // memo: root -> quotient simplex
    std::function<Simplex(int)> normalize = [&](int root) -> Simplex {
        Simplex& memo = norm[static_cast<std::size_t>(root)];
        if (memo.nd >= 0) return memo;
        if (is_nd_class[static_cast<std::size_t>(root)]) {
            int id = qid[static_cast<std::size_t>(root)];
            if (id < 0) throw InternalInconsistency("quotient class used before construction");
            memo = Simplex{id, Operator::identity(class_dim[static_cast<std::size_t>(root)])};
            return memo;
        }
        // pick a degenerate member and normalize through its base cell
        for (int m : members[static_cast<std::size_t>(root)]) {
            const auto& [c, z, sg] = cell_info[static_cast<std::size_t>(m)];
            if (sg.is_identity()) continue;
            int base_root = dsu.find(uid(c, Simplex{z, Operator::identity(
                                                components[static_cast<std::size_t>(c)]->nd(z).dim)}));
            Simplex b = normalize(base_root);
            memo = Simplex{b.nd, b.degen.compose(sg)};
            return memo;
        }
        throw InternalInconsistency("degenerate class without degenerate member");
    };

    GlueResult out;
    for (int root : nd_roots) {
        const auto& [c, z, sg] = cell_info[static_cast<std::size_t>(
            members[static_cast<std::size_t>(root)].front())];
        (void)sg;
        int d = class_dim[static_cast<std::size_t>(root)];
        std::vector<Simplex> faces;
        if (d > 0) {
            faces.reserve(static_cast<std::size_t>(d) + 1);
            for (int i = 0; i <= d; ++i) {
                Simplex f = components[static_cast<std::size_t>(c)]->face(z, i);
                int froot = dsu.find(uid(c, f));
                faces.push_back(normalize(froot));
            }
        }
        qid[static_cast<std::size_t>(root)] =
            q.add_simplex(d, "c" + std::to_string(c) + "/" +
                                 components[static_cast<std::size_t>(c)]->label(z),
                          std::move(faces));
    }
    out.total = make_sset(std::move(q));

    // identity members per quotient nd simplex (for induce)
    out.class_members_.resize(static_cast<std::size_t>(out.total->nd_count()));
    for (int root : nd_roots)
        for (int m : members[static_cast<std::size_t>(root)]) {
            const auto& [c, z, sg] = cell_info[static_cast<std::size_t>(m)];
            if (sg.is_identity())
                out.class_members_[static_cast<std::size_t>(qid[static_cast<std::size_t>(root)])]
                    .emplace_back(c, z);
        }

    // inclusion maps
    for (std::size_t c = 0; c < components.size(); ++c) {
        std::vector<Simplex> image;
        image.reserve(static_cast<std::size_t>(components[c]->nd_count()));
        for (int z = 0; z < components[c]->nd_count(); ++z) {
            int root = dsu.find(uid(static_cast<int>(c),
                                    Simplex{z, Operator::identity(components[c]->nd(z).dim)}));
            image.push_back(normalize(root));
        }
        out.inclusion.emplace_back(components[c], out.total, std::move(image));
    }
    return out;
}

SimplicialMap GlueResult::induce(const std::vector<SimplicialMap>& maps) const {
    if (maps.size() != inclusion.size()) throw InvalidInput("induce: one map per component");
    SSetPtr z = maps.front().target_ptr();
    std::vector<Simplex> image;
    image.reserve(static_cast<std::size_t>(total->nd_count()));
    for (int id = 0; id < total->nd_count(); ++id) {
        const auto& [c, nd] = class_members_[static_cast<std::size_t>(id)].front();
        image.push_back(maps[static_cast<std::size_t>(c)].apply_nd(nd));
    }
    SimplicialMap induced(total, z, std::move(image));
    for (std::size_t c = 0; c < maps.size(); ++c)
        if (!(induced.compose(inclusion[c]) == maps[c]))
            throw InternalInconsistency("induce: maps are not compatible with the gluing");
    return induced;
}

PushoutResult pushout(const SimplicialMap& i, const SimplicialMap& g) {
    if (!(i.source() == g.source())) throw CompositionMismatch("pushout legs share a source");
    if (!i.is_levelwise_injective()) throw NotCofibration("pushout leg is not levelwise injective");
    GlueRelation rel{i.source_ptr(), 0, i, 1, g};
    GlueResult glued = glue({i.target_ptr(), g.target_ptr()}, {rel});
    return PushoutResult{glued.total, glued.inclusion[0], glued.inclusion[1], std::move(glued)};
}

GlueResult disjoint_union(std::vector<SSetPtr> components) {
    return glue(std::move(components), {});
}

// -- subdivision ------------------------------------------------------------------

namespace {

/// Shared cache of B(Delta[n]) = nerve of the nonempty-subset poset.
struct BDeltaCache {
    std::mutex mu;
    std::vector<Poset> posets;
    std::vector<SSetPtr> nerves;
    std::vector<std::vector<std::vector<int>>> subsets;

    void ensure(int n) {
        std::lock_guard<std::mutex> lock(mu);
        while (static_cast<int>(nerves.size()) <= n) {
            int m = static_cast<int>(nerves.size());
            posets.push_back(face_poset(m));
            nerves.push_back(nerve(posets.back()));
            subsets.push_back(face_poset_subsets(m));
        }
    }
};

BDeltaCache& bdelta_cache() {
    static BDeltaCache c;
    return c;
}

SSetPtr bdelta(int n) {
    auto& c = bdelta_cache();
    c.ensure(n);
    std::lock_guard<std::mutex> lock(c.mu);
    return c.nerves[static_cast<std::size_t>(n)];
}

Poset bdelta_poset(int n) {
    auto& c = bdelta_cache();
    c.ensure(n);
    std::lock_guard<std::mutex> lock(c.mu);
    return c.posets[static_cast<std::size_t>(n)];
}

std::vector<std::vector<int>> bdelta_subsets(int n) {
    auto& c = bdelta_cache();
    c.ensure(n);
    std::lock_guard<std::mutex> lock(c.mu);
    return c.subsets[static_cast<std::size_t>(n)];
}

/// B applied to an operator [a] -> [b]: the nerve map of S |-> op(S).
SimplicialMap bdelta_map(const Operator& op) {
    int a = op.source_dim(), b = op.target_dim();
    Poset pa = bdelta_poset(a), pb = bdelta_poset(b);
    auto subs = bdelta_subsets(a);
    std::vector<int> assign(static_cast<std::size_t>(pa.size()));
    for (std::size_t i = 0; i < subs.size(); ++i) {
        std::set<int> img;
        for (int v : subs[i]) img.insert(op(v));
        assign[i] = pb.index(subset_label(std::vector<int>(img.begin(), img.end())));
    }
    OrderMap om(pa, pb, std::move(assign));
    return nerve_map(om, bdelta(a), bdelta(b));
}

}  // namespace

SdResult sd(SSetPtr x) {
    std::vector<SSetPtr> comps;
    comps.reserve(static_cast<std::size_t>(x->nd_count()));
    for (int id = 0; id < x->nd_count(); ++id) comps.push_back(bdelta(x->nd(id).dim));
    std::vector<GlueRelation> rels;
    for (int id = 0; id < x->nd_count(); ++id) {
        int n = x->nd(id).dim;
        for (int i = 0; i <= n && n > 0; ++i) {
            Simplex f = x->face(id, i);
            GlueRelation rel{bdelta(n - 1), id, bdelta_map(Operator::coface(i, n)), f.nd,
                             bdelta_map(f.degen)};
            rels.push_back(std::move(rel));
        }
    }
    GlueResult glued = glue(std::move(comps), rels);
    SdResult out;
    out.total = glued.total;
    out.base = std::move(x);
    out.component = glued.inclusion;
    out.gluing = std::move(glued);
    return out;
}

SimplicialMap sd_map(const SimplicialMap& f, const SdResult& sdx, const SdResult& sdy) {
    std::vector<SimplicialMap> comp_maps;
    comp_maps.reserve(static_cast<std::size_t>(sdx.base->nd_count()));
    for (int id = 0; id < sdx.base->nd_count(); ++id) {
        Simplex im = f.apply_nd(id);
        SimplicialMap leg = sdy.component[static_cast<std::size_t>(im.nd)].compose(
            bdelta_map(im.degen));
        comp_maps.push_back(std::move(leg));
    }
    return sdx.gluing.induce(comp_maps);
}

BarrattResult barratt_nerve(SSetPtr x) {
    NondegPoset sharp = nondeg_poset(*x);
    return BarrattResult{nerve(sharp.poset), std::move(sharp)};
}

SimplicialMap barratt_map(const SimplicialMap& f, const BarrattResult& bx,
                          const BarrattResult& by) {
    OrderMap om = induced_sharp(f, bx.sharp, by.sharp);
    return nerve_map(om, bx.total, by.total);
}

SimplicialMap b_map(const SdResult& sdx, const BarrattResult& bx) {
    const SimplicialSet& x = *sdx.base;
    std::vector<SimplicialMap> comp_maps;
    for (int id = 0; id < x.nd_count(); ++id) {
        int n = x.nd(id).dim;
        SSetPtr comp = bdelta(n);
        auto subs = bdelta_subsets(n);
        Poset pn = bdelta_poset(n);
        std::vector<Simplex> image;
        image.reserve(static_cast<std::size_t>(comp->nd_count()));
        for (int cid = 0; cid < comp->nd_count(); ++cid) {
            std::vector<std::string> chain = nerve_chain_labels(*comp, cid);
            std::vector<int> elems;
            for (const auto& l : chain) {
                const auto& s = subs[static_cast<std::size_t>(pn.index(l))];
                Simplex face = x.act(Simplex{id, Operator::identity(n)},
                                     Operator(s, n));
                elems.push_back(bx.sharp.poset.index(x.label(face.nd)));
            }
            image.push_back(weak_chain_simplex(bx.sharp.poset, *bx.total, elems));
        }
        comp_maps.emplace_back(comp, bx.total, std::move(image));
    }
    return sdx.gluing.induce(comp_maps);
}

SimplicialMap last_vertex(const SdResult& sdx) {
    const SimplicialSet& x = *sdx.base;
    SSetPtr xp = sdx.base;
    std::vector<SimplicialMap> comp_maps;
    for (int id = 0; id < x.nd_count(); ++id) {
        int n = x.nd(id).dim;
        SSetPtr comp = bdelta(n);
        auto subs = bdelta_subsets(n);
        Poset pn = bdelta_poset(n);
        std::vector<Simplex> image;
        image.reserve(static_cast<std::size_t>(comp->nd_count()));
        for (int cid = 0; cid < comp->nd_count(); ++cid) {
            std::vector<std::string> chain = nerve_chain_labels(*comp, cid);
            std::vector<int> values;
            for (const auto& l : chain)
                values.push_back(subs[static_cast<std::size_t>(pn.index(l))].back());
            image.push_back(x.act(Simplex{id, Operator::identity(n)},
                                  Operator(std::move(values), n)));
        }
        comp_maps.emplace_back(comp, xp, std::move(image));
    }
    return sdx.gluing.induce(comp_maps);
}

KappaColimit kappa_colimit(SSetPtr x, SSetPtr y) {
    KappaColimit out;
    out.xy = product(x, y);
    out.sd_product = sd(out.xy.total);
    out.sd_x = sd(x);
    out.sd_y = sd(y);
    SimplicialMap sp1 = sd_map(out.xy.pr1, out.sd_product, out.sd_x);
    SimplicialMap sp2 = sd_map(out.xy.pr2, out.sd_product, out.sd_y);
    out.sdx_sdy = product(out.sd_x.total, out.sd_y.total);
    out.kappa = pair_map(sp1, sp2, out.sdx_sdy);
    return out;
}

ImprovementResult improvement(SSetPtr x) {
    ImprovementResult out;
    out.sdx = sd(std::move(x));
    out.bsdx = barratt_nerve(out.sdx.total);
    out.total = out.bsdx.total;
    return out;
}

ImprovementMapResult improvement_map(SSetPtr x, SSetPtr y) {
    ProductResult xy = product(x, y);
    ImprovementMapResult out{SimplicialMap(), improvement(xy.total), improvement(x),
                             improvement(y), ProductResult()};
    SimplicialMap sp1 = sd_map(xy.pr1, out.ixy.sdx, out.ix.sdx);
    SimplicialMap sp2 = sd_map(xy.pr2, out.ixy.sdx, out.iy.sdx);
    SimplicialMap bp1 = barratt_map(sp1, out.ixy.bsdx, out.ix.bsdx);
    SimplicialMap bp2 = barratt_map(sp2, out.ixy.bsdx, out.iy.bsdx);
    out.ix_iy = product(out.ix.total, out.iy.total);
    out.map = pair_map(bp1, bp2, out.ix_iy);
    return out;
}

RestrictedMap restrict_over(const SimplicialMap& f, const std::vector<int>& target_seed) {
    Subcomplex zpart = subcomplex(f.target_ptr(), target_seed);
    std::vector<int> src_seed;
    for (int id = 0; id < f.source().nd_count(); ++id)
        if (zpart.new_id[static_cast<std::size_t>(f.apply_nd(id).nd)] >= 0) src_seed.push_back(id);
    Subcomplex spart = subcomplex(f.source_ptr(), src_seed);
    std::vector<Simplex> image;
    image.reserve(static_cast<std::size_t>(spart.total->nd_count()));
    for (int id = 0; id < spart.total->nd_count(); ++id) {
        Simplex up = spart.inclusion.apply_nd(id);
        Simplex im = f.apply_nd(up.nd);
        image.push_back(Simplex{zpart.new_id[static_cast<std::size_t>(im.nd)], im.degen});
    }
    SimplicialMap restricted(spart.total, zpart.total, std::move(image));
    return RestrictedMap{std::move(restricted), std::move(spart), std::move(zpart)};
}

}  // namespace sdkappa
