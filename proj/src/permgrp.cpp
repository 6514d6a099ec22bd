#include "permgrp.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace ffgroup {

Perm Perm::identity(std::size_t n) {
    Perm p;
    p.img.resize(n);
    for (std::size_t i = 0; i < n; ++i) p.img[i] = static_cast<std::uint32_t>(i);
    return p;
}

bool Perm::is_identity() const {
    for (std::size_t i = 0; i < img.size(); ++i)
        if (img[i] != i) return false;
    return true;
}

Perm compose(const Perm& a, const Perm& b) {
    Perm r;
    r.img.resize(a.img.size());
    for (std::size_t i = 0; i < b.img.size(); ++i) r.img[i] = a.img[b.img[i]];
    return r;
}

Perm inverse(const Perm& a) {
    Perm r;
    r.img.resize(a.img.size());
    for (std::size_t i = 0; i < a.img.size(); ++i) r.img[a.img[i]] = static_cast<std::uint32_t>(i);
    return r;
}

std::vector<Elem> point_to_vector(std::uint64_t value, const FieldPtr& ctx, unsigned n) {
    std::vector<Elem> v(n);
    for (unsigned i = 0; i < n; ++i) {
        v[i] = static_cast<Elem>(value % ctx->q());
        value /= ctx->q();
    }
    return v;
}

std::uint64_t vector_to_point(const std::vector<Elem>& v, const FieldPtr& ctx) {
    std::uint64_t out = 0;
    for (std::size_t i = v.size(); i-- > 0;) out = out * ctx->q() + v[i];
    return out;
}

std::uint64_t point_count(const FieldPtr& ctx, unsigned n, std::uint64_t point_budget) {
    Bigint qn = bigint_pow(ctx->q(), n);
    if (qn > point_budget)
        fail(Errc::BudgetExceeded,
             "q^n = " + qn.str() + " exceeds point budget " + std::to_string(point_budget));
    return qn.convert_to<std::uint64_t>() - 1;
}

Perm matrix_to_perm(const Mat& a, std::uint64_t point_budget) {
    if (det(a) == 0) fail(Errc::SingularMatrix, "permutation action of a singular matrix");
    const unsigned n = a.dim();
    const std::uint64_t npts = point_count(a.ctx(), n, point_budget);
    Perm p;
    p.img.resize(npts);
    for (std::uint64_t v = 1; v <= npts; ++v) {
        const auto w = a.apply(point_to_vector(v, a.ctx(), n));
        p.img[v - 1] = static_cast<std::uint32_t>(vector_to_point(w, a.ctx()) - 1);
    }
    return p;
}

Mat perm_to_matrix(const Perm& p, const FieldPtr& ctx, unsigned n) {
    Mat m(ctx, n);
    std::uint64_t basis_value = 1;
    for (unsigned j = 0; j < n; ++j) {
        const auto col = point_to_vector(p.img[basis_value - 1] + 1, ctx, n);
        for (unsigned i = 0; i < n; ++i) m.at(i, j) = col[i];
        basis_value *= ctx->q();
    }
    return m;
}

Bigint gl_order(unsigned n, std::uint64_t q) {
    if (n < 1) fail(Errc::InvalidArgument, "gl_order needs n >= 1");
    Bigint out = 1;
    const Bigint qn = bigint_pow(q, n);
    for (unsigned i = 0; i < n; ++i) out *= qn - bigint_pow(q, i);
    return out;
}

std::vector<Mat> standard_generators(const FieldPtr& ctx, unsigned n, std::uint64_t point_budget) {
    std::vector<Mat> gens;
    const auto prim = enumerate_primitive(ctx, n, point_budget);
    gens.push_back(companion(prim.front()));
    if (n >= 2) {
        Mat t = Mat::identity(ctx, n);
        t.at(0, 1) = 1;
        gens.push_back(std::move(t));
    }
    if (ctx->q() > 2) {
        Mat d = Mat::identity(ctx, n);
        d.at(0, 0) = ctx->generator();
        gens.push_back(std::move(d));
    }
    return gens;
}

// ---------------------------------------------------------------------------
// BSGS
// ---------------------------------------------------------------------------

BSGS::BSGS(const std::vector<Perm>& gens) { build(gens, nullptr); }

BSGS::BSGS(const std::vector<Perm>& gens, const Bigint& order_bound) { build(gens, &order_bound); }

Bigint BSGS::current_product() const {
    Bigint p = 1;
    for (const auto& lv : levels_) p *= lv.orbit.size();
    return p;
}

std::pair<Perm, std::size_t> BSGS::strip(Perm g, std::size_t from) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
        const Level& lv = levels_[l];
        const std::uint32_t y = g.img[lv.base_point];
        if (lv.pos[y] < 0) return {std::move(g), l};
        g = compose(lv.trans_inv[static_cast<std::size_t>(lv.pos[y])], g);
    }
    return {std::move(g), levels_.size()};
}

void BSGS::add_orbit_point(Level& lv, std::uint32_t y, const Perm& via, std::size_t from_idx) {
    lv.pos[y] = static_cast<std::int32_t>(lv.orbit.size());
    lv.orbit.push_back(y);
    Perm t = compose(via, lv.trans[from_idx]);
    lv.trans_inv.push_back(inverse(t));
    lv.trans.push_back(std::move(t));
}

bool BSGS::insert(Perm h) {
    auto [r, l] = strip(std::move(h), 0);
    if (r.is_identity()) return false;
    if (l == levels_.size()) {
        // New level; greedy base choice: least point moved by the residue.
        std::uint32_t b = 0;
        while (r.img[b] == b) ++b;
        Level lv;
        lv.base_point = b;
        lv.pos.assign(n_points_, -1);
        lv.pos[b] = 0;
        lv.orbit.push_back(b);
        lv.trans.push_back(Perm::identity(n_points_));
        lv.trans_inv.push_back(Perm::identity(n_points_));
        lv.progress.assign(gens_.size(), 0);
        levels_.push_back(std::move(lv));
    }
    tags_.push_back(l);
    gens_.push_back(std::move(r));
    for (auto& lv : levels_) lv.progress.push_back(0);
    return true;
}

void BSGS::build(const std::vector<Perm>& gens, const Bigint* bound) {
    if (gens.empty()) fail(Errc::EmptyGeneratorList, "group_order needs at least one generator");
    n_points_ = gens.front().size();
    for (const auto& g : gens)
        if (g.size() != n_points_) fail(Errc::DimensionMismatch, "generators on different point sets");

    for (const auto& g : gens)
        if (!g.is_identity()) insert(g);

    // Process (orbit point, generator) pairs per level: unseen images extend the
    // orbit, seen ones yield Schreier generators whose residues are inserted
    // deeper. Deepest pending level first, so lower levels are ground only when
    // everything below is closed. Stops early once the bound certifies the chain.
    while (true) {
        if (bound != nullptr) {
            const Bigint prod = current_product();
            if (prod == *bound) break;
            if (prod > *bound)
                fail(Errc::InvalidArgument, "order bound smaller than the group order");
        }
        bool any = false;
        for (std::size_t l = levels_.size(); l-- > 0 && !any;) {
            Level& lv = levels_[l];
            for (std::size_t gi = 0; gi < gens_.size() && !any; ++gi) {
                if (tags_[gi] < l) continue;
                while (lv.progress[gi] < lv.orbit.size()) {
                    const std::size_t ui = lv.progress[gi]++;
                    const std::uint32_t u = lv.orbit[ui];
                    const std::uint32_t y = gens_[gi].img[u];
                    if (lv.pos[y] < 0) {
                        add_orbit_point(lv, y, gens_[gi], ui);
                        any = true;
                        break;
                    }
                    Perm schreier = compose(lv.trans_inv[static_cast<std::size_t>(lv.pos[y])],
                                            compose(gens_[gi], lv.trans[ui]));
                    auto [r, m] = strip(std::move(schreier), l + 1);
                    if (!r.is_identity()) {
                        if (m == levels_.size()) {
                            std::uint32_t b = 0;
                            while (r.img[b] == b) ++b;
                            Level nlv;
                            nlv.base_point = b;
                            nlv.pos.assign(n_points_, -1);
                            nlv.pos[b] = 0;
                            nlv.orbit.push_back(b);
                            nlv.trans.push_back(Perm::identity(n_points_));
                            nlv.trans_inv.push_back(Perm::identity(n_points_));
                            nlv.progress.assign(gens_.size(), 0);
                            levels_.push_back(std::move(nlv));
                        }
                        tags_.push_back(m);
                        gens_.push_back(std::move(r));
                        for (auto& alv : levels_) alv.progress.push_back(0);
                        any = true;
                        break;
                    }
                }
            }
        }
        if (!any) break;  // every pair processed: chain verified complete
    }
    order_ = current_product();
}

std::vector<std::uint64_t> BSGS::transversal_sizes() const {
    std::vector<std::uint64_t> out;
    out.reserve(levels_.size());
    for (const auto& lv : levels_) out.push_back(lv.orbit.size());
    return out;
}

std::vector<std::uint32_t> BSGS::base() const {
    std::vector<std::uint32_t> out;
    out.reserve(levels_.size());
    for (const auto& lv : levels_) out.push_back(lv.base_point);
    return out;
}

bool BSGS::contains(const Perm& p) const {
    if (p.size() != n_points_) return false;
    auto [r, l] = strip(p, 0);
    (void)l;
    return r.is_identity();
}

void BSGS::for_each_element(const std::function<void(const Perm&)>& fn) const {
    if (levels_.empty()) {
        fn(Perm::identity(n_points_));
        return;
    }
    // g = t_0 t_1 ... t_L over all transversal combinations.
    std::function<void(std::size_t, const Perm&)> rec = [&](std::size_t l, const Perm& prefix) {
        if (l == levels_.size()) {
            fn(prefix);
            return;
        }
        for (const Perm& t : levels_[l].trans) rec(l + 1, compose(prefix, t));
    };
    rec(0, Perm::identity(n_points_));
}

Bigint group_order(const std::vector<Perm>& gens) { return BSGS(gens).order(); }

Bigint group_order_bounded(const std::vector<Perm>& gens, const Bigint& order_bound) {
    return BSGS(gens, order_bound).order();
}

namespace {

struct PermHash {
    std::size_t operator()(const Perm& p) const {
        std::size_t h = 1469598103934665603ull;
        for (std::uint32_t v : p.img) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace

std::optional<std::vector<Perm>> closure_oracle(const std::vector<Perm>& gens, std::size_t cap) {
    if (cap < 1) fail(Errc::InvalidArgument, "closure cap must be >= 1");
    if (gens.empty()) fail(Errc::EmptyGeneratorList, "closure of an empty generator list");
    const std::size_t n = gens.front().size();
    std::vector<Perm> elements;
    std::unordered_set<Perm, PermHash> seen;
    elements.push_back(Perm::identity(n));
    seen.insert(elements.front());
    for (std::size_t head = 0; head < elements.size(); ++head) {
        const Perm cur = elements[head];
        for (const Perm& g : gens) {
            Perm next = compose(cur, g);
            if (seen.insert(next).second) {
                if (elements.size() + 1 > cap) return std::nullopt;
                elements.push_back(std::move(next));
            }
        }
    }
    return elements;
}

}  // namespace ffgroup
