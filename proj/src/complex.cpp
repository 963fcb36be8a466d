#include "rsc/complex.hpp"

#include "rsc/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace rsc {

namespace {

bool lex_less(std::span<const Vertex> a, std::span<const Vertex> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string face_str(std::span<const Vertex> f) {
    std::ostringstream os;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) os << ',';
        os << f[i];
    }
    return os.str();
}

} // namespace

FaceSet FaceSet::from_faces(int arity, std::vector<Face> faces) {
    if (arity <= 0) throw DomainError("face arity must be positive");
    for (auto& f : faces) {
        if (static_cast<int>(f.size()) != arity)
            throw MalformedInputError("face has arity " + std::to_string(f.size()) +
                                      ", expected " + std::to_string(arity));
        for (std::size_t i = 0; i + 1 < f.size(); ++i)
            if (f[i] >= f[i + 1])
                throw MalformedInputError("face tuple not strictly increasing: " + face_str(f));
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Vertex> flat;
    flat.reserve(faces.size() * static_cast<std::size_t>(arity));
    for (const auto& f : faces) flat.insert(flat.end(), f.begin(), f.end());
    return from_sorted_flat(arity, std::move(flat));
}

FaceSet FaceSet::from_sorted_flat(int arity, std::vector<Vertex> flat) {
    if (arity <= 0) throw DomainError("face arity must be positive");
    if (flat.size() % static_cast<std::size_t>(arity) != 0)
        throw MalformedInputError("flat face buffer size not a multiple of arity");
    FaceSet fs(arity);
    fs.flat_ = std::move(flat);
    return fs;
}

bool FaceSet::contains(std::span<const Vertex> face) const {
    if (static_cast<int>(face.size()) != arity_ || arity_ == 0) return false;
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        auto rec = (*this)[mid];
        if (lex_less(rec, face))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo == size()) return false;
    auto rec = (*this)[lo];
    return std::equal(rec.begin(), rec.end(), face.begin(), face.end());
}

long long FaceVector::total() const {
    return std::accumulate(counts.begin(), counts.end(), 0LL);
}

std::string FaceVector::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i) os << ',';
        os << counts[i];
    }
    os << ')';
    return os.str();
}

void AmbientContext::check(const Complex& y) const {
    if (n < 1) throw DomainError("ambient n must be >= 1");
    if (r < 0) throw DomainError("ambient r must be >= 0");
    if (y.dim() > r)
        throw ContextError("complex has dimension " + std::to_string(y.dim()) +
                           " above ambient cap r=" + std::to_string(r));
    for (Vertex v : y.vertices())
        if (v < 1 || v > n)
            throw ContextError("vertex " + std::to_string(v) + " outside ambient {1.." +
                               std::to_string(n) + "}");
}

Complex::Complex(std::vector<FaceSet> levels) : levels_(std::move(levels)) {
    while (!levels_.empty() && levels_.back().empty()) levels_.pop_back();
    validate();
}

void Complex::validate() const {
    for (std::size_t d = 0; d < levels_.size(); ++d) {
        if (levels_[d].arity() != static_cast<int>(d) + 1)
            throw MalformedInputError("level " + std::to_string(d) + " has wrong arity");
        if (levels_[d].empty())
            throw MalformedInputError("level " + std::to_string(d) +
                                      " empty below a nonempty level");
    }
    // Downward closure: every facet-subset of every face one dimension down.
    Face sub;
    for (std::size_t d = 1; d < levels_.size(); ++d) {
        const FaceSet& fs = levels_[d];
        const FaceSet& below = levels_[d - 1];
        for (std::size_t k = 0; k < fs.size(); ++k) {
            auto face = fs[k];
            for (std::size_t drop = 0; drop < face.size(); ++drop) {
                sub.clear();
                for (std::size_t i = 0; i < face.size(); ++i)
                    if (i != drop) sub.push_back(face[i]);
                if (!below.contains(sub))
                    throw MalformedInputError("closure violated: face {" + face_str(face) +
                                              "} missing boundary {" + face_str(sub) + "}");
            }
        }
    }
}

Complex Complex::from_facets(const std::vector<Face>& facets) {
    constexpr std::size_t kMaxFacetSize = 24; // 2^k subset expansion guard
    std::vector<std::vector<Face>> by_dim;
    for (const Face& facet : facets) {
        if (facet.empty()) throw MalformedInputError("empty facet tuple");
        if (facet.size() > kMaxFacetSize)
            throw ResourceError("facet with more than 24 vertices");
        Face f = facet;
        std::sort(f.begin(), f.end());
        for (std::size_t i = 0; i + 1 < f.size(); ++i)
            if (f[i] == f[i + 1])
                throw MalformedInputError("duplicate vertex " + std::to_string(f[i]) +
                                          " within facet");
        for (Vertex v : f)
            if (v < 0) throw MalformedInputError("negative vertex label");
        const std::size_t k = f.size();
        if (by_dim.size() < k) by_dim.resize(k);
        for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
            Face sub;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1u << i)) sub.push_back(f[i]);
            by_dim[sub.size() - 1].push_back(std::move(sub));
        }
    }
    std::vector<FaceSet> levels;
    levels.reserve(by_dim.size());
    for (std::size_t d = 0; d < by_dim.size(); ++d)
        levels.push_back(FaceSet::from_faces(static_cast<int>(d) + 1, std::move(by_dim[d])));
    return Complex(std::move(levels));
}

Complex Complex::from_faces_by_dim(const std::vector<std::vector<Face>>& by_dim) {
    std::vector<FaceSet> levels;
    levels.reserve(by_dim.size());
    for (std::size_t d = 0; d < by_dim.size(); ++d)
        levels.push_back(FaceSet::from_faces(static_cast<int>(d) + 1, by_dim[d]));
    return Complex(std::move(levels));
}

Complex Complex::from_levels(std::vector<FaceSet> levels) {
    return Complex(std::move(levels));
}

std::span<const Vertex> Complex::vertices() const {
    if (levels_.empty()) return {};
    return {levels_[0].flat().data(), levels_[0].flat().size()};
}

int Complex::vertex_index(Vertex v) const {
    auto vs = vertices();
    auto it = std::lower_bound(vs.begin(), vs.end(), v);
    if (it == vs.end() || *it != v) return -1;
    return static_cast<int>(it - vs.begin());
}

long long Complex::face_count(int d) const {
    if (d < 0 || d > dim()) return 0;
    return static_cast<long long>(levels_[static_cast<std::size_t>(d)].size());
}

long long Complex::total_face_count() const {
    long long t = 0;
    for (const auto& l : levels_) t += static_cast<long long>(l.size());
    return t;
}

bool Complex::has_face(std::span<const Vertex> face) const {
    int d = static_cast<int>(face.size()) - 1;
    if (d < 0 || d > dim()) return false;
    return levels_[static_cast<std::size_t>(d)].contains(face);
}

bool Complex::contains_complex(const Complex& other) const {
    if (other.dim() > dim()) return false;
    for (int d = 0; d <= other.dim(); ++d) {
        const FaceSet& fs = other.faces(d);
        for (std::size_t k = 0; k < fs.size(); ++k)
            if (!levels_[static_cast<std::size_t>(d)].contains(fs[k])) return false;
    }
    return true;
}

std::vector<Face> Complex::facets() const {
    std::vector<Face> out;
    for (int d = 0; d <= dim(); ++d) {
        const FaceSet& fs = faces(d);
        // Collect the boundary faces of the level above; the rest are facets.
        std::vector<Face> covered;
        if (d + 1 <= dim()) {
            const FaceSet& above = faces(d + 1);
            for (std::size_t k = 0; k < above.size(); ++k) {
                auto face = above[k];
                for (std::size_t drop = 0; drop < face.size(); ++drop) {
                    Face sub;
                    for (std::size_t i = 0; i < face.size(); ++i)
                        if (i != drop) sub.push_back(face[i]);
                    covered.push_back(std::move(sub));
                }
            }
            std::sort(covered.begin(), covered.end());
            covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
        }
        for (std::size_t k = 0; k < fs.size(); ++k) {
            Face f(fs[k].begin(), fs[k].end());
            if (!std::binary_search(covered.begin(), covered.end(), f))
                out.push_back(std::move(f));
        }
    }
    return out;
}

FaceVector Complex::f_vector(int r) const {
    if (r < dim())
        throw DomainError("f_vector: r=" + std::to_string(r) + " below complex dimension " +
                          std::to_string(dim()));
    FaceVector fv;
    fv.counts.assign(static_cast<std::size_t>(r) + 1, 0);
    for (int d = 0; d <= dim(); ++d) fv.counts[static_cast<std::size_t>(d)] = face_count(d);
    return fv;
}

std::string Complex::canonical_key() const {
    std::ostringstream os;
    for (int d = 0; d <= dim(); ++d) {
        if (d) os << '|';
        const FaceSet& fs = faces(d);
        for (std::size_t k = 0; k < fs.size(); ++k) {
            if (k) os << ';';
            os << face_str(fs[k]);
        }
    }
    return os.str();
}

FaceVector external_faces(const Complex& y, const AmbientContext& ctx) {
    ctx.check(y);
    FaceVector ev;
    ev.counts.assign(static_cast<std::size_t>(ctx.r) + 1, 0);
    ev.counts[0] = ctx.n - static_cast<long long>(y.vertex_count());
    auto vs = y.vertices();
    Face sigma, sub;
    for (int i = 1; i <= ctx.r; ++i) {
        if (i - 1 > y.dim()) break; // no boundary faces available below
        const FaceSet& below = y.faces(i - 1);
        long long count = 0;
        for (std::size_t k = 0; k < below.size(); ++k) {
            auto tau = below[k];
            // Extend by a vertex above max(tau): every candidate external face
            // arises exactly once, from dropping its largest vertex.
            auto it = std::upper_bound(vs.begin(), vs.end(), tau.back());
            for (; it != vs.end(); ++it) {
                Vertex v = *it;
                sigma.assign(tau.begin(), tau.end());
                sigma.push_back(v);
                if (y.has_face(sigma)) continue;
                bool boundary_ok = true;
                for (std::size_t drop = 0; drop + 1 < sigma.size() && boundary_ok; ++drop) {
                    sub.clear();
                    for (std::size_t j = 0; j < sigma.size(); ++j)
                        if (j != drop) sub.push_back(sigma[j]);
                    boundary_ok = below.contains(sub);
                }
                if (boundary_ok) ++count;
            }
        }
        ev.counts[static_cast<std::size_t>(i)] = count;
    }
    return ev;
}

Complex induced_subcomplex(const Complex& s, std::span<const Vertex> w) {
    std::vector<Vertex> ws(w.begin(), w.end());
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    for (Vertex v : ws)
        if (s.vertex_index(v) < 0)
            throw DomainError("induced_subcomplex: vertex " + std::to_string(v) +
                              " not in the complex");
    std::vector<FaceSet> levels;
    for (int d = 0; d <= s.dim(); ++d) {
        const FaceSet& fs = s.faces(d);
        std::vector<Vertex> flat;
        for (std::size_t k = 0; k < fs.size(); ++k) {
            auto face = fs[k];
            if (std::includes(ws.begin(), ws.end(), face.begin(), face.end()))
                flat.insert(flat.end(), face.begin(), face.end());
        }
        levels.push_back(FaceSet::from_sorted_flat(d + 1, std::move(flat)));
    }
    return Complex::from_levels(std::move(levels));
}

Complex skeleton(const Complex& y, int k) {
    if (k < -1) throw DomainError("skeleton: k must be >= -1");
    std::vector<FaceSet> levels;
    for (int d = 0; d <= std::min(k, y.dim()); ++d) levels.push_back(y.faces(d));
    return Complex::from_levels(std::move(levels));
}

long long degree(const Complex& y, std::span<const Vertex> sigma) {
    if (!y.has_face(sigma))
        throw DomainError("degree: tuple is not a face of the complex");
    int d = static_cast<int>(sigma.size()) - 1;
    if (d + 1 > y.dim()) return 0;
    long long count = 0;
    Face cand;
    for (Vertex v : y.vertices()) {
        if (std::binary_search(sigma.begin(), sigma.end(), v)) continue;
        cand.assign(sigma.begin(), sigma.end());
        cand.insert(std::lower_bound(cand.begin(), cand.end(), v), v);
        if (y.has_face(cand)) ++count;
    }
    return count;
}

long long l_value(const Complex& y) {
    if (y.dim() < 1) return 0;
    long long l = 0;
    const FaceSet& edges = y.faces(1);
    for (std::size_t k = 0; k < edges.size(); ++k) l += 2 - degree(y, edges[k]);
    return l;
}

long long euler_characteristic(const Complex& y) {
    long long chi = 0;
    for (int d = 0; d <= y.dim(); ++d) chi += (d % 2 == 0) ? y.face_count(d) : -y.face_count(d);
    return chi;
}

namespace {

// Shared backtracking state for counting/deciding embeddings of S into Y.
struct EmbedSearch {
    const Complex& s;
    const Complex& y;
    std::vector<Vertex> order;                  // S-vertices, descending degree
    std::vector<std::vector<Face>> check_faces; // faces closed at each step
    std::vector<Vertex> assigned;               // S-vertex index -> Y vertex
    std::vector<bool> used;                     // Y-vertex index used
    long long nodes = 0;
    long long budget = -1;
    long long found = 0;
    bool early_exit = false;
    bool exhausted = false;

    EmbedSearch(const Complex& s_, const Complex& y_) : s(s_), y(y_) {
        auto vs = s.vertices();
        std::vector<long long> deg(vs.size(), 0);
        if (s.dim() >= 1) {
            const FaceSet& edges = s.faces(1);
            for (std::size_t k = 0; k < edges.size(); ++k)
                for (Vertex v : edges[k]) ++deg[static_cast<std::size_t>(s.vertex_index(v))];
        }
        order.assign(vs.begin(), vs.end());
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
            long long da = deg[static_cast<std::size_t>(s.vertex_index(a))];
            long long db = deg[static_cast<std::size_t>(s.vertex_index(b))];
            if (da != db) return da > db;
            return a < b;
        });
        std::vector<int> step_of(vs.size(), 0);
        for (std::size_t k = 0; k < order.size(); ++k)
            step_of[static_cast<std::size_t>(s.vertex_index(order[k]))] = static_cast<int>(k);
        check_faces.resize(order.size());
        for (int d = 1; d <= s.dim(); ++d) {
            const FaceSet& fs = s.faces(d);
            for (std::size_t k = 0; k < fs.size(); ++k) {
                auto face = fs[k];
                int last = 0;
                for (Vertex v : face)
                    last = std::max(last, step_of[static_cast<std::size_t>(s.vertex_index(v))]);
                check_faces[static_cast<std::size_t>(last)].emplace_back(face.begin(),
                                                                         face.end());
            }
        }
        assigned.assign(order.size(), -1);
        used.assign(y.vertex_count(), false);
    }

    bool run(std::size_t step) { // returns false when aborted (early exit / budget)
        if (step == order.size()) {
            ++found;
            return !early_exit;
        }
        auto yv = y.vertices();
        std::size_t slot = static_cast<std::size_t>(s.vertex_index(order[step]));
        Face mapped;
        for (std::size_t c = 0; c < yv.size(); ++c) {
            if (used[c]) continue;
            if (budget >= 0 && nodes >= budget) {
                exhausted = true;
                return false;
            }
            ++nodes;
            assigned[slot] = yv[c];
            bool ok = true;
            for (const Face& f : check_faces[step]) {
                mapped.clear();
                for (Vertex sv : f)
                    mapped.push_back(assigned[static_cast<std::size_t>(s.vertex_index(sv))]);
                std::sort(mapped.begin(), mapped.end());
                if (!y.has_face(mapped)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            used[c] = true;
            bool keep_going = run(step + 1);
            used[c] = false;
            if (!keep_going) return false;
        }
        assigned[slot] = -1;
        return true;
    }
};

} // namespace

long long count_embeddings(const Complex& s, const Complex& y) {
    if (s.is_empty()) return 1; // the empty map
    EmbedSearch search(s, y);
    search.run(0);
    return search.found;
}

ContainResult contains_copy_budgeted(const Complex& s, const Complex& y,
                                     long long node_budget) {
    if (s.is_empty()) return ContainResult::found;
    EmbedSearch search(s, y);
    search.early_exit = true;
    search.budget = node_budget;
    search.run(0);
    if (search.found > 0) return ContainResult::found;
    if (search.exhausted) return ContainResult::budget_exhausted;
    return ContainResult::not_found;
}

} // namespace rsc
