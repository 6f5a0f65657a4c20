#include "sdkappa/poset.hpp"

#include <algorithm>

namespace sdkappa {

int Poset::index(const std::string& label) const {
    auto it = by_label_.find(label);
    if (it == by_label_.end()) throw UnknownElement("no element '" + label + "'");
    return it->second;
}

std::optional<int> Poset::find(const std::string& label) const {
    auto it = by_label_.find(label);
    if (it == by_label_.end()) return std::nullopt;
    return it->second;
}

std::vector<int> Poset::strict_up_set(int v) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (i != v && leq(v, i)) out.push_back(i);
    return out;
}

std::vector<int> Poset::strict_down_set(int v) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (i != v && leq(i, v)) out.push_back(i);
    return out;
}

std::optional<int> Poset::maximum() const {
    for (int i = 0; i < size(); ++i) {
        bool top = true;
        for (int j = 0; j < size(); ++j)
            if (!leq(j, i)) { top = false; break; }
        if (top) return i;
    }
    return std::nullopt;
}

std::optional<int> Poset::minimum() const {
    for (int i = 0; i < size(); ++i) {
        bool bottom = true;
        for (int j = 0; j < size(); ++j)
            if (!leq(i, j)) { bottom = false; break; }
        if (bottom) return i;
    }
    return std::nullopt;
}

int Poset::height() const {
    int h = 0;
    for (int i = 0; i < size(); ++i) h = std::max(h, rank(i));
    return h;
}

Poset Poset::restrict(const std::vector<int>& indices) const {
    std::vector<std::string> labels;
    labels.reserve(indices.size());
    for (int i : indices) labels.push_back(label(i));
    std::vector<Bitrow> rows(indices.size(), Bitrow(indices.size()));
    for (std::size_t a = 0; a < indices.size(); ++a)
        for (std::size_t b = 0; b < indices.size(); ++b)
            if (leq(indices[a], indices[b])) rows[a].set(b);
    return poset_from_leq(std::move(labels), std::move(rows));
}

Poset Poset::relabel(const std::vector<std::string>& new_labels) const {
    if (static_cast<int>(new_labels.size()) != size())
        throw InvalidInput("relabel size mismatch");
    std::vector<Bitrow> rows = leq_;
    return poset_from_leq(new_labels, std::move(rows));
}

void Poset::rebuild_derived() {
    std::size_t n = static_cast<std::size_t>(size());
    by_label_.clear();
    for (int i = 0; i < size(); ++i) {
        auto [it, fresh] = by_label_.emplace(labels_[static_cast<std::size_t>(i)], i);
        (void)it;
        if (!fresh) throw DuplicateLabelError("label '" + labels_[static_cast<std::size_t>(i)] + "'");
    }
    // transpose
    geq_.assign(n, Bitrow(n));
    for (std::size_t a = 0; a < n; ++a)
        leq_[a].for_each([&](std::size_t b) { geq_[b].set(a); });
    // covers: b covers a iff a < b and no c with a < c < b; c exists iff the
    // strict up-set of a meets the strict down-set of b
    covers_.clear();
    for (int a = 0; a < size(); ++a) {
        Bitrow up = leq_[static_cast<std::size_t>(a)];
        up.reset(static_cast<std::size_t>(a));
        up.for_each([&](std::size_t b) {
            Bitrow down = geq_[b];
            down.reset(b);
            down.reset(static_cast<std::size_t>(a));
            bool between = false;
            up.for_each([&](std::size_t c) {
                if (c != b && down.test(c)) between = true;
            });
            if (!between) covers_.emplace_back(a, static_cast<int>(b));
        });
    }
    std::sort(covers_.begin(), covers_.end());
    // ranks: longest chain below, DP in order of increasing down-set size
    ranks_.assign(n, 0);
    std::vector<int> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
    std::vector<std::size_t> down_sz(n);
    for (std::size_t i = 0; i < n; ++i) down_sz[i] = geq_[i].count();
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return down_sz[static_cast<std::size_t>(a)] < down_sz[static_cast<std::size_t>(b)];
    });
    std::vector<std::vector<int>> cov_below(n);
    for (auto& [a, b] : covers_) cov_below[static_cast<std::size_t>(b)].push_back(a);
    for (int v : order)
        for (int u : cov_below[static_cast<std::size_t>(v)])
            ranks_[static_cast<std::size_t>(v)] =
                std::max(ranks_[static_cast<std::size_t>(v)], ranks_[static_cast<std::size_t>(u)] + 1);
}

Poset poset_from_leq(std::vector<std::string> labels, std::vector<Bitrow> leq) {
    Poset p;
    p.labels_ = std::move(labels);
    p.leq_ = std::move(leq);
    std::size_t n = static_cast<std::size_t>(p.size());
    for (std::size_t i = 0; i < n; ++i)
        if (!p.leq_[i].test(i)) throw InvalidInput("relation not reflexive");
    // antisymmetry + transitivity with row operations
    for (int a = 0; a < p.size(); ++a) {
        const Bitrow& row = p.leq_[static_cast<std::size_t>(a)];
        bool bad_cycle = false, bad_trans = false;
        row.for_each([&](std::size_t b) {
            if (static_cast<int>(b) != a && p.leq_[b].test(static_cast<std::size_t>(a)))
                bad_cycle = true;
            if (!p.leq_[b].is_subset_of(row)) bad_trans = true;
        });
        if (bad_cycle) throw CycleError("antisymmetry fails at '" + p.label(a) + "'");
        if (bad_trans) throw InvalidInput("relation not transitive at '" + p.label(a) + "'");
    }
    p.rebuild_derived();
    return p;
}

Poset make_poset_idx(std::vector<std::string> labels,
                     const std::vector<std::pair<int, int>>& relations) {
    std::size_t n = labels.size();
    std::vector<Bitrow> rows(n, Bitrow(n));
    for (std::size_t i = 0; i < n; ++i) rows[i].set(i);
    for (auto& [a, b] : relations) {
        if (a < 0 || b < 0 || a >= static_cast<int>(n) || b >= static_cast<int>(n))
            throw UnknownElement("relation index out of range");
        rows[static_cast<std::size_t>(a)].set(static_cast<std::size_t>(b));
    }
    // reflexive-transitive closure (Warshall with bitset rows)
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (rows[i].test(k)) rows[i] |= rows[k];
    Poset p;
    p.labels_ = std::move(labels);
    p.leq_ = std::move(rows);
    for (int i = 0; i < p.size(); ++i)
        for (int j = i + 1; j < p.size(); ++j)
            if (p.leq(i, j) && p.leq(j, i))
                throw CycleError("closure relates '" + p.label(i) + "' and '" + p.label(j) +
                                 "' both ways");
    p.rebuild_derived();
    return p;
}

Poset make_poset(const std::vector<std::string>& labels,
                 const std::vector<std::pair<std::string, std::string>>& relations) {
    std::unordered_map<std::string, int> idx;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!idx.emplace(labels[i], static_cast<int>(i)).second)
            throw DuplicateLabelError("label '" + labels[i] + "'");
    }
    std::vector<std::pair<int, int>> rel;
    rel.reserve(relations.size());
    for (auto& [a, b] : relations) {
        auto ia = idx.find(a), ib = idx.find(b);
        if (ia == idx.end()) throw UnknownElement("no element '" + a + "'");
        if (ib == idx.end()) throw UnknownElement("no element '" + b + "'");
        rel.emplace_back(ia->second, ib->second);
    }
    return make_poset_idx(labels, rel);
}

Poset chain_poset(int m) {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i <= m; ++i) {
        labels.push_back(std::to_string(i));
        if (i > 0) rel.emplace_back(i - 1, i);
    }
    return make_poset_idx(std::move(labels), rel);
}

Poset product_poset(const Poset& a, const Poset& b) {
    std::size_t n = static_cast<std::size_t>(a.size()) * static_cast<std::size_t>(b.size());
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < b.size(); ++j)
            labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
    std::vector<Bitrow> rows(n, Bitrow(n));
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < b.size(); ++j)
            for (int k = 0; k < a.size(); ++k)
                for (int l = 0; l < b.size(); ++l)
                    if (a.leq(i, k) && b.leq(j, l))
                        rows[static_cast<std::size_t>(i * b.size() + j)].set(
                            static_cast<std::size_t>(k * b.size() + l));
    return poset_from_leq(std::move(labels), std::move(rows));
}

OrderMap::OrderMap(Poset source, Poset target,
                   const std::vector<std::pair<std::string, std::string>>& assignment)
    : source_(std::make_shared<Poset>(std::move(source))),
      target_(std::make_shared<Poset>(std::move(target))) {
    map_.assign(static_cast<std::size_t>(source_->size()), -1);
    for (auto& [s, t] : assignment) map_[static_cast<std::size_t>(source_->index(s))] = target_->index(t);
    for (int i = 0; i < source_->size(); ++i)
        if (map_[static_cast<std::size_t>(i)] < 0)
            throw InvalidInput("assignment misses element '" + source_->label(i) + "'");
    validate();
}

OrderMap::OrderMap(Poset source, Poset target, std::vector<int> assignment)
    : source_(std::make_shared<Poset>(std::move(source))),
      target_(std::make_shared<Poset>(std::move(target))),
      map_(std::move(assignment)) {
    if (map_.size() != static_cast<std::size_t>(source_->size()))
        throw InvalidInput("assignment size mismatch");
    for (int v : map_)
        if (v < 0 || v >= target_->size()) throw UnknownElement("assignment index out of range");
    validate();
}

void OrderMap::validate() const {
    for (int a = 0; a < source_->size(); ++a)
        for (int b = 0; b < source_->size(); ++b)
            if (source_->leq(a, b) && !target_->leq(apply(a), apply(b)))
                throw InvalidInput("assignment is not order-preserving at '" +
                                   source_->label(a) + "' <= '" + source_->label(b) + "'");
}

OrderMap OrderMap::identity(const Poset& p) {
    std::vector<int> v(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) v[static_cast<std::size_t>(i)] = i;
    return OrderMap(p, p, std::move(v));
}

OrderMap OrderMap::constant(const Poset& source, const Poset& target, const std::string& value) {
    int t = target.index(value);
    std::vector<int> v(static_cast<std::size_t>(source.size()), t);
    return OrderMap(source, target, std::move(v));
}

const std::string& OrderMap::apply_label(const std::string& l) const {
    return target_->label(apply(source_->index(l)));
}

OrderMap OrderMap::compose(const OrderMap& inner) const {
    if (inner.target() != source())
        throw CompositionMismatch("order map composition");
    std::vector<int> v(inner.map_.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = map_[static_cast<std::size_t>(inner.map_[i])];
    return OrderMap(inner.source(), target(), std::move(v));
}

bool OrderMap::is_injective() const {
    std::vector<bool> seen(static_cast<std::size_t>(target_->size()), false);
    for (int v : map_) {
        if (seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

bool OrderMap::is_surjective() const {
    std::vector<bool> seen(static_cast<std::size_t>(target_->size()), false);
    for (int v : map_) seen[static_cast<std::size_t>(v)] = true;
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

OrderMap OrderMap::inverse() const {
    if (!is_bijective()) throw InvalidInput("inverse of a non-bijective order map");
    std::vector<int> inv(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i)
        inv[static_cast<std::size_t>(map_[i])] = static_cast<int>(i);
    return OrderMap(target(), source(), std::move(inv));
}

bool OrderMap::operator==(const OrderMap& o) const {
    return source() == o.source() && target() == o.target() && map_ == o.map_;
}

Poset down_set(const Poset& v_poset, const std::string& v) {
    int vi = v_poset.index(v);
    std::vector<int> keep;
    for (int i = 0; i < v_poset.size(); ++i)
        if (v_poset.leq(i, vi)) keep.push_back(i);
    return v_poset.restrict(keep);
}

OrderMap restrict_map(const OrderMap& phi, const std::string& v) {
    Poset sub_src = down_set(phi.source(), v);
    Poset sub_tgt = down_set(phi.target(), phi.apply_label(v));
    std::vector<int> assign;
    assign.reserve(static_cast<std::size_t>(sub_src.size()));
    for (int i = 0; i < sub_src.size(); ++i)
        assign.push_back(sub_tgt.index(phi.apply_label(sub_src.label(i))));
    return OrderMap(std::move(sub_src), std::move(sub_tgt), std::move(assign));
}

namespace {

std::string layer_label(int layer, const std::string& l) {
    return std::to_string(layer) + "|" + l;
}

}  // namespace

MappingCylinder mapping_cylinder(const OrderMap& phi) {
    const Poset& v = phi.source();
    const Poset& w = phi.target();
    int nv = v.size(), nw = w.size();
    std::size_t n = static_cast<std::size_t>(nv + nw);
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < nw; ++i) labels.push_back(layer_label(0, w.label(i)));
    for (int i = 0; i < nv; ++i) labels.push_back(layer_label(1, v.label(i)));
    // w <= v in P(phi) iff w <= phi(v) in W; no V element sits below a W one.
    std::vector<Bitrow> rows(n, Bitrow(n));
    for (int i = 0; i < nw; ++i)
        for (int j = 0; j < nw; ++j)
            if (w.leq(i, j)) rows[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(j));
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j)
            if (v.leq(i, j))
                rows[static_cast<std::size_t>(nw + i)].set(static_cast<std::size_t>(nw + j));
    for (int i = 0; i < nw; ++i)
        for (int j = 0; j < nv; ++j)
            if (w.leq(i, phi.apply(j)))
                rows[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(nw + j));
    Poset total = poset_from_leq(std::move(labels), std::move(rows));

    std::vector<int> front(static_cast<std::size_t>(nv)), back(static_cast<std::size_t>(nw));
    for (int i = 0; i < nv; ++i) front[static_cast<std::size_t>(i)] = nw + i;
    for (int i = 0; i < nw; ++i) back[static_cast<std::size_t>(i)] = i;
    std::vector<int> proj(n), coord(n);
    for (int i = 0; i < nw; ++i) {
        proj[static_cast<std::size_t>(i)] = i;
        coord[static_cast<std::size_t>(i)] = 0;
    }
    for (int j = 0; j < nv; ++j) {
        proj[static_cast<std::size_t>(nw + j)] = phi.apply(j);
        coord[static_cast<std::size_t>(nw + j)] = 1;
    }
    MappingCylinder out{total,
                        OrderMap(v, total, std::move(front)),
                        OrderMap(w, total, std::move(back)),
                        OrderMap(total, w, std::move(proj)),
                        OrderMap(total, chain_poset(1), std::move(coord))};
    return out;
}

IteratedCylinder iterated_cylinder_single(const Poset& v0) {
    std::vector<std::string> labels;
    for (int i = 0; i < v0.size(); ++i) labels.push_back(layer_label(0, v0.label(i)));
    Poset total = v0.relabel(labels);
    std::vector<int> ident(static_cast<std::size_t>(v0.size()));
    for (int i = 0; i < v0.size(); ++i) ident[static_cast<std::size_t>(i)] = i;
    IteratedCylinder out;
    out.total = total;
    out.coord = OrderMap::constant(total, chain_poset(0), "0");
    out.layer_in = {OrderMap(v0, total, ident)};
    out.projection = OrderMap(total, v0, ident);
    return out;
}

IteratedCylinder iterated_cylinder(const std::vector<OrderMap>& seq) {
    if (seq.empty()) throw InvalidInput("iterated_cylinder needs at least one map");
    int r = static_cast<int>(seq.size());
    // seq[0] = phi_r : V_r -> V_{r-1}, ..., seq[r-1] = phi_1 : V_1 -> V_0.
    // layers[i] = V_i.
    std::vector<const Poset*> layers(static_cast<std::size_t>(r) + 1);
    for (int i = 0; i < r; ++i) {
        const OrderMap& m = seq[static_cast<std::size_t>(i)];
        int layer = r - i;
        layers[static_cast<std::size_t>(layer)] = &m.source();
        if (i + 1 < r && m.target() != seq[static_cast<std::size_t>(i) + 1].source())
            throw CompositionMismatch("cylinder sequence does not compose");
    }
    layers[0] = &seq.back().target();

    std::vector<int> offset(static_cast<std::size_t>(r) + 2, 0);
    for (int i = 0; i <= r; ++i)
        offset[static_cast<std::size_t>(i) + 1] =
            offset[static_cast<std::size_t>(i)] + layers[static_cast<std::size_t>(i)]->size();
    std::size_t n = static_cast<std::size_t>(offset[static_cast<std::size_t>(r) + 1]);

    std::vector<std::string> labels(n);
    for (int i = 0; i <= r; ++i)
        for (int j = 0; j < layers[static_cast<std::size_t>(i)]->size(); ++j)
            labels[static_cast<std::size_t>(offset[static_cast<std::size_t>(i)] + j)] =
                layer_label(i, layers[static_cast<std::size_t>(i)]->label(j));

    // Phi[i][j] : V_i -> V_j for j <= i is the composite of the phis.
    // (i,u) <= (j,v) with i <= j iff u <= Phi[j][i](v) in V_i.
    auto phi_of_layer = [&](int i) -> const OrderMap& {
        // the map leaving layer i, i.e. phi_i : V_i -> V_{i-1} = seq[r-i]
        return seq[static_cast<std::size_t>(r - i)];
    };
    std::vector<Bitrow> rows(n, Bitrow(n));
    for (int j = 0; j <= r; ++j) {
        // images of layer j elements in each lower layer
        std::vector<std::vector<int>> img(static_cast<std::size_t>(j) + 1);
        img[static_cast<std::size_t>(j)].resize(
            static_cast<std::size_t>(layers[static_cast<std::size_t>(j)]->size()));
        for (int t = 0; t < layers[static_cast<std::size_t>(j)]->size(); ++t)
            img[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)] = t;
        for (int i = j - 1; i >= 0; --i) {
            const OrderMap& step = phi_of_layer(i + 1);
            img[static_cast<std::size_t>(i)].resize(img[static_cast<std::size_t>(i) + 1].size());
            for (std::size_t t = 0; t < img[static_cast<std::size_t>(i) + 1].size(); ++t)
                img[static_cast<std::size_t>(i)][t] =
                    step.apply(img[static_cast<std::size_t>(i) + 1][t]);
        }
        for (int v = 0; v < layers[static_cast<std::size_t>(j)]->size(); ++v)
            for (int i = 0; i <= j; ++i)
                for (int u = 0; u < layers[static_cast<std::size_t>(i)]->size(); ++u)
                    if (layers[static_cast<std::size_t>(i)]->leq(
                            u, img[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)]))
                        rows[static_cast<std::size_t>(offset[static_cast<std::size_t>(i)] + u)].set(
                            static_cast<std::size_t>(offset[static_cast<std::size_t>(j)] + v));
    }
    Poset total = poset_from_leq(std::move(labels), std::move(rows));

    IteratedCylinder out;
    std::vector<int> coord(n);
    for (int i = 0; i <= r; ++i)
        for (int j = 0; j < layers[static_cast<std::size_t>(i)]->size(); ++j)
            coord[static_cast<std::size_t>(offset[static_cast<std::size_t>(i)] + j)] = i;
    out.coord = OrderMap(total, chain_poset(r), std::move(coord));
    for (int i = 0; i <= r; ++i) {
        std::vector<int> in(static_cast<std::size_t>(layers[static_cast<std::size_t>(i)]->size()));
        for (int j = 0; j < layers[static_cast<std::size_t>(i)]->size(); ++j)
            in[static_cast<std::size_t>(j)] = offset[static_cast<std::size_t>(i)] + j;
        out.layer_in.push_back(OrderMap(*layers[static_cast<std::size_t>(i)], total, std::move(in)));
    }
    std::vector<int> proj(n);
    for (int i = 0; i <= r; ++i) {
        for (int j = 0; j < layers[static_cast<std::size_t>(i)]->size(); ++j) {
            int cur = j;
            for (int l = i; l >= 1; --l) cur = phi_of_layer(l).apply(cur);
            proj[static_cast<std::size_t>(offset[static_cast<std::size_t>(i)] + j)] = cur;
        }
    }
    out.projection = OrderMap(total, *layers[0], std::move(proj));
    out.total = std::move(total);
    return out;
}

bool is_left_ideal(const Poset& v, const std::vector<std::string>& subset) {
    std::vector<bool> in(static_cast<std::size_t>(v.size()), false);
    for (auto& s : subset) in[static_cast<std::size_t>(v.index(s))] = true;
    for (int b = 0; b < v.size(); ++b)
        if (in[static_cast<std::size_t>(b)])
            for (int a = 0; a < v.size(); ++a)
                if (v.leq(a, b) && !in[static_cast<std::size_t>(a)]) return false;
    return true;
}

bool is_right_ideal(const Poset& v, const std::vector<std::string>& subset) {
    std::vector<bool> in(static_cast<std::size_t>(v.size()), false);
    for (auto& s : subset) in[static_cast<std::size_t>(v.index(s))] = true;
    for (int a = 0; a < v.size(); ++a)
        if (in[static_cast<std::size_t>(a)])
            for (int b = 0; b < v.size(); ++b)
                if (v.leq(a, b) && !in[static_cast<std::size_t>(b)]) return false;
    return true;
}

namespace {

// A beat point has a strict up-set with a least element or a strict down-set
// with a greatest element.
std::optional<BeatRemoval> find_beat_point(const Poset& p) {
    for (int x = 0; x < p.size(); ++x) {
        std::vector<int> up = p.strict_up_set(x);
        if (!up.empty()) {
            for (int u : up) {
                bool least = true;
                for (int y : up)
                    if (!p.leq(u, y)) { least = false; break; }
                if (least) return BeatRemoval{p.label(x), p.label(u), true};
            }
        }
        std::vector<int> down = p.strict_down_set(x);
        if (!down.empty()) {
            for (int u : down) {
                bool greatest = true;
                for (int y : down)
                    if (!p.leq(y, u)) { greatest = false; break; }
                if (greatest) return BeatRemoval{p.label(x), p.label(u), false};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

CoreResult poset_core(const Poset& v) {
    CoreResult out;
    Poset cur = v;
    while (true) {
        auto beat = find_beat_point(cur);
        if (!beat) break;
        out.trace.push_back(*beat);
        int x = cur.index(beat->element);
        std::vector<int> keep;
        for (int i = 0; i < cur.size(); ++i)
            if (i != x) keep.push_back(i);
        cur = cur.restrict(keep);
    }
    out.core = std::move(cur);
    return out;
}

bool verify_dismantling(const Poset& v, const std::vector<BeatRemoval>& trace, const Poset& core) {
    Poset cur = v;
    for (const auto& step : trace) {
        auto xi = cur.find(step.element);
        auto wi = cur.find(step.witness);
        if (!xi || !wi) return false;
        int x = *xi, w = *wi;
        if (step.up) {
            if (!cur.less(x, w)) return false;
            for (int y : cur.strict_up_set(x))
                if (!cur.leq(w, y)) return false;
        } else {
            if (!cur.less(w, x)) return false;
            for (int y : cur.strict_down_set(x))
                if (!cur.leq(y, w)) return false;
        }
        std::vector<int> keep;
        for (int i = 0; i < cur.size(); ++i)
            if (i != x) keep.push_back(i);
        cur = cur.restrict(keep);
    }
    return cur == core;
}

}  // namespace sdkappa
