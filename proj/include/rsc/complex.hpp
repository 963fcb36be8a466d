#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rsc {

using Vertex = int;
/// A face is a strictly increasing tuple of vertex labels.
using Face = std::vector<Vertex>;

/// All faces of one dimension, stored flat (fixed arity, lexicographically
/// sorted, no duplicates). Iteration order is deterministic.
class FaceSet {
public:
    FaceSet() = default;
    explicit FaceSet(int arity) : arity_(arity) {}

    /// Builds from possibly unsorted tuples; sorts, dedupes, validates arity
    /// and strict monotonicity of each tuple.
    static FaceSet from_faces(int arity, std::vector<Face> faces);
    /// Adopts a flat buffer already in lex order with unique records.
    static FaceSet from_sorted_flat(int arity, std::vector<Vertex> flat);

    int arity() const { return arity_; }
    std::size_t size() const { return arity_ == 0 ? 0 : flat_.size() / arity_; }
    bool empty() const { return flat_.empty(); }
    std::span<const Vertex> operator[](std::size_t k) const {
        return {flat_.data() + k * static_cast<std::size_t>(arity_),
                static_cast<std::size_t>(arity_)};
    }
    bool contains(std::span<const Vertex> face) const;
    const std::vector<Vertex>& flat() const { return flat_; }

    bool operator==(const FaceSet& o) const = default;

private:
    int arity_ = 0;
    std::vector<Vertex> flat_;
};

/// f-vector-shaped counts (also reused for external-face counts, where the
/// downward-closure shape does not apply).
struct FaceVector {
    std::vector<long long> counts;

    std::size_t size() const { return counts.size(); }
    long long operator[](std::size_t i) const { return counts[i]; }
    long long total() const;
    bool operator==(const FaceVector& o) const = default;
    std::string str() const;
};

/// Ambient complex Delta_n^(r): vertex set {1..n}, dimension cap r.
struct AmbientContext {
    long long n = 1;
    int r = 0;

    /// Throws ContextError unless Y has vertices in {1..n} and dim <= r.
    void check(const class Complex& y) const;
};

/// An immutable abstract simplicial complex on integer vertex labels.
///
/// Faces are held per dimension in lex-sorted flat arrays; the sorted 0-face
/// list doubles as the external->internal label map (internal index of a
/// vertex = its position there). The empty complex has dim() == -1.
class Complex {
public:
    Complex() = default;

    /// Downward closure of the given facets.
    static Complex from_facets(const std::vector<Face>& facets);
    /// Builds from explicit per-dimension face lists; validates closure.
    static Complex from_faces_by_dim(const std::vector<std::vector<Face>>& by_dim);
    /// Adopts per-dimension FaceSets (levels[d] has arity d+1); validates closure.
    static Complex from_levels(std::vector<FaceSet> levels);

    int dim() const { return static_cast<int>(levels_.size()) - 1; }
    bool is_empty() const { return levels_.empty(); }

    /// Sorted vertex labels; identical to the 0-face list.
    std::span<const Vertex> vertices() const;
    std::size_t vertex_count() const { return vertices().size(); }
    /// Position of v in vertices(), -1 if absent.
    int vertex_index(Vertex v) const;

    /// Faces of dimension d (valid for 0 <= d <= dim()).
    const FaceSet& faces(int d) const { return levels_[static_cast<std::size_t>(d)]; }
    long long face_count(int d) const;
    long long total_face_count() const;
    bool has_face(std::span<const Vertex> face) const;
    /// True when every face of `other` is a face of *this.
    bool contains_complex(const Complex& other) const;

    /// Maximal faces (faces with no coface), in lex order per dimension.
    std::vector<Face> facets() const;

    /// (f_0, ..., f_r), zero-padded. Requires r >= dim().
    FaceVector f_vector(int r) const;

    bool operator==(const Complex& o) const = default;
    /// Canonical serialization, usable as a hash/map key and for
    /// deterministic ordering.
    std::string canonical_key() const;

private:
    explicit Complex(std::vector<FaceSet> levels);
    void validate() const;

    std::vector<FaceSet> levels_; // levels_[d] holds the d-faces
};

/// External face counts (e_0, ..., e_r) of Y inside Delta_n^(r): e_0 = n - f_0;
/// for i >= 1, the (i+1)-subsets of V(Y) that are not faces but whose whole
/// boundary lies in Y.
FaceVector external_faces(const Complex& y, const AmbientContext& ctx);

/// Faces of S entirely contained in the vertex subset W (W must be a subset
/// of V(S)).
Complex induced_subcomplex(const Complex& s, std::span<const Vertex> w);

/// All faces of dimension <= k (k >= -1).
Complex skeleton(const Complex& y, int k);

/// Number of cofaces of sigma one dimension up. sigma must be a face of Y.
long long degree(const Complex& y, std::span<const Vertex> sigma);

/// Sum over edges of (2 - degree(edge)).
long long l_value(const Complex& y);

/// Alternating sum of face counts.
long long euler_characteristic(const Complex& y);

/// Injective vertex maps J : V(S) -> V(Y) with J(sigma) a face of Y for every
/// face sigma of S. Backtracking ordered by descending vertex degree in S.
long long count_embeddings(const Complex& s, const Complex& y);

enum class ContainResult { found, not_found, budget_exhausted };

/// Early-exit embedding search; node_budget < 0 means unbounded. Each
/// attempted vertex assignment costs one node.
ContainResult contains_copy_budgeted(const Complex& s, const Complex& y,
                                     long long node_budget = -1);

inline bool contains_copy(const Complex& s, const Complex& y) {
    return contains_copy_budgeted(s, y) == ContainResult::found;
}

} // namespace rsc
