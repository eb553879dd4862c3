#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "padico/encoder.hpp"
#include "padico/padic_number.hpp"

namespace padico {

/// A p-adic disc, i.e. a vertex of the Bruhat-Tits tree: radius p^-level,
/// center described by the digits at levels [base, level).
struct Disc {
    long level = 0;
    long base = 0;
    std::vector<uint32_t> prefix;
    friend bool operator==(const Disc&, const Disc&) = default;
};

using LabeledPoint = std::pair<std::string, PadicNumber>;

/// Rooted, leaf-labelled, level-annotated tree: the subtree of the
/// Bruhat-Tits tree spanned by a point set together with the ray to
/// infinity. Levels strictly increase from the root towards the leaves;
/// every internal vertex has between 2 and q children; the merge level of
/// two leaves equals the valuation of the difference of their values.
class Dendrogram {
public:
    struct Edge {
        uint32_t digit;  // digit index at the parent's level
        bool is_leaf;
        int index;       // into nodes() or leaves()
    };
    struct Node {
        long level;
        int parent;      // -1 at the root
        uint32_t digit;  // edge digit from the parent
        std::vector<Edge> children;  // ordered by digit index
    };
    struct Leaf {
        std::string label;
        PadicNumber value;
        int parent;      // -1 only for a single-leaf dendrogram
        uint32_t digit;
    };

    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<Leaf>& leaves() const { return leaves_; }
    int root() const { return root_; }  // -1 for a single-leaf dendrogram
    const DigitSystemPtr& system() const { return sys_; }
    long base_level() const { return base_level_; }

    size_t leaf_index(const std::string& label) const;  // throws on unknown label
    long merge_level(size_t leaf_a, size_t leaf_b) const;
    Disc disc_of_node(int node) const;

    /// Sorted labels under a node.
    std::vector<std::string> labels_under(int node) const;

private:
    std::vector<Node> nodes_;
    std::vector<Leaf> leaves_;
    int root_ = -1;
    DigitSystemPtr sys_;
    long base_level_ = 0;

    friend Dendrogram build_dendrogram(const std::vector<LabeledPoint>&, Exec);
};

/// Builds the p-adic dendrogram of a labelled point set as a compressed
/// digit trie in O(n * precision) digit operations. The parallel path
/// extracts per-point digit rows concurrently and is bit-identical to the
/// serial reference. Throws IndistinguishablePoints when two values agree
/// through the whole joint precision window.
Dendrogram build_dendrogram(const std::vector<LabeledPoint>& points,
                            Exec exec = Exec::parallel);

/// Pairwise valuation matrix: entry (i,j) = v(x_i - x_j); the diagonal
/// carries the plus-infinity sentinel.
std::vector<std::vector<Valuation>> valuation_matrix(
    const std::vector<LabeledPoint>& points, Exec exec = Exec::parallel);

struct Partition {
    long threshold = 0;
    std::vector<std::vector<std::string>> blocks;  // sorted labels, sorted blocks
};

/// Blocks of leaves whose pairwise merge levels are all >= k (leaves lying
/// in a common disc of radius p^-k).
Partition cluster_at_threshold(const Dendrogram& d, long k);

struct MergeEvent {
    long level;
    std::vector<std::vector<std::string>> parts;  // the clusters combined here
    std::vector<std::string> members;             // their union, sorted
};

/// Agglomerative replay of the dendrogram from singletons: events by
/// decreasing level, ties broken by smallest member label.
std::vector<MergeEvent> merge_sequence(const Dendrogram& d);

/// Abstract leaf-labelled level tree (no values); the target structure of
/// the dendrogram space D_n.
struct Topology {
    bool leaf = false;
    std::string label;               // leaves
    long level = 0;                  // internal vertices
    std::vector<Topology> children;  // internal vertices, size >= 2

    static Topology make_leaf(std::string label);
    static Topology make_node(long level, std::vector<Topology> children);
};

/// Forgets the values but keeps labels and levels.
Topology topology_of(const Dendrogram& d);

/// True iff equal shape, labels, child order and levels.
bool topology_equal(const Topology& a, const Topology& b);

/// A section of the projection to dendrogram space: assigns digit indices
/// to sibling edges left-to-right (0,1,2,...; at the root the leftmost
/// subtree gets 0 and the rightmost gets 1) and returns point codes with
/// build_dendrogram(codes) isomorphic to the topology, levels included.
/// Throws BranchingExceedsQ when some vertex has more than q children.
std::vector<LabeledPoint> encode_dendrogram(const Topology& t, DigitSystemPtr sys);

enum class ExportFormat { newick, dot, json };

/// Newick: every node suffixed with ":<length>", tree terminated by ";".
/// Internal lengths are level differences, leaves get unit stubs, the root
/// gets 0. DOT: directed edges parent->child with digit and len attributes.
std::string export_newick(const Dendrogram& d);
std::string export_dot(const Dendrogram& d);
nlohmann::json export_json(const Dendrogram& d);
std::string export_text(const Dendrogram& d, ExportFormat format);

/// CSV merge log: one "level,labels-joined-by-|" line per merge event.
std::string export_merge_csv(const Dendrogram& d);

} // namespace padico
