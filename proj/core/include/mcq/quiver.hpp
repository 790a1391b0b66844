#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mcq/errors.hpp"

namespace mcq {

struct Arrow {
    int src = -1;
    int tgt = -1;
    std::string label;
};

// Finite labeled directed multigraph. Arrows are identified by index, never
// by label string, so duplicate labels cannot silently merge (labels are
// still required to be unique for printing and parsing).
class Quiver {
public:
    int add_vertex(const std::string& label);
    int add_arrow(int src, int tgt, const std::string& label);

    size_t num_vertices() const { return vertex_labels_.size(); }
    size_t num_arrows() const { return arrows_.size(); }
    const std::string& vertex_label(int v) const { return vertex_labels_.at(v); }
    const Arrow& arrow(int a) const { return arrows_.at(a); }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    const std::vector<int>& out_arrows(int v) const { return out_.at(v); }
    const std::vector<int>& in_arrows(int v) const { return in_.at(v); }

    std::optional<int> vertex_by_label(const std::string& label) const;
    std::optional<int> arrow_by_label(const std::string& label) const;

private:
    std::vector<std::string> vertex_labels_;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<int>> out_, in_;
};

// Arrow indices in travel order: p.arrows[0] is traversed first. Path
// products multiply right to left ("first do b, then a"), so the printed
// form lists arrows in reverse travel order; see print_path.
struct Path {
    std::vector<int> arrows;

    bool operator==(const Path& rhs) const { return arrows == rhs.arrows; }
    bool operator<(const Path& rhs) const { return arrows < rhs.arrows; }
    size_t length() const { return arrows.size(); }
};

bool path_composable(const Quiver& q, const Path& p);
int path_source(const Quiver& q, const Path& p);
int path_target(const Quiver& q, const Path& p);

std::string print_path(const Quiver& q, const Path& p);
Path parse_path(const Quiver& q, const std::string& text);

// Total integer grading on arrows, indexed by arrow id.
using Grading = std::vector<int>;

long path_degree(const Grading& g, const Path& p);

struct QuiverMorphism {
    const Quiver* dom = nullptr;
    const Quiver* cod = nullptr;
    std::vector<int> vertex_map;
    std::vector<int> arrow_map;

    bool commutes() const;
    Path map_path(const Path& p) const;
    bool surjective_on_arrows() const;
};

// A finite cyclic group acting on a quiver through one generating
// automorphism. generator_vertex/arrow are permutations; order is the
// group order (generator^order = identity, validated).
struct QuiverAutomorphismAction {
    const Quiver* q = nullptr;
    std::vector<int> vertex_perm;
    std::vector<int> arrow_perm;
    int order = 1;

    void validate() const;
};

struct OrbitQuiver {
    Quiver quiver;
    QuiverMorphism projection;                    // original -> orbit quiver
    std::vector<std::vector<int>> vertex_members; // orbit -> member vertices
    std::vector<std::vector<int>> arrow_members;  // orbit -> member arrows
};

OrbitQuiver quotient_by_action(const Quiver& q, const QuiverAutomorphismAction& action);

struct GradabilityReport {
    bool ok = true;
    int offending_codomain_arrow = -1;
    std::vector<int> offending_fiber;
};

GradabilityReport is_gradable(const QuiverMorphism& phi, const Grading& g);

// Unique grading making phi a graded morphism; requires phi gradable and
// surjective on arrows.
Grading pushforward_grading(const QuiverMorphism& phi, const Grading& g);
Grading pullback_grading(const QuiverMorphism& phi, const Grading& g_cod);

// Depth-first enumeration of all composable paths of exactly `length`
// arrows; deterministic order (vertices, then arrow ids ascending).
void for_each_path(const Quiver& q, size_t length, const std::function<void(const Path&)>& fn);

std::string to_dot(const Quiver& q, const Grading* g = nullptr);
std::string to_tikz(const Quiver& q, const Grading* g = nullptr);

}  // namespace mcq
