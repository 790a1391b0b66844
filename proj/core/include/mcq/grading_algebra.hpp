#pragma once

#include <optional>

#include "mcq/superpotential.hpp"

namespace mcq {

// A graded quiver presentation: quiver, grading, the homogeneous relation
// list and the superpotential degree a (1 for the cut pipeline).
struct GradedPresentation {
    const Quiver* quiver = nullptr;
    Grading grading;
    std::vector<Relation> rels;
    long sp_degree = 1;
};

// Computes the relations with degrees attached and checks each one is
// homogeneous; throws verification_error otherwise.
GradedPresentation make_presentation(const Superpotential& w, const Grading& g);

struct DegreeZeroQuiver {
    Quiver quiver;                 // all vertices, degree-0 arrows
    std::vector<int> arrow_from;   // new arrow -> original arrow
    std::vector<int> arrow_to;     // original arrow -> new arrow or -1
};

DegreeZeroQuiver degree_zero_quiver(const GradedPresentation& pres);

std::vector<Relation> degree_zero_relations(const GradedPresentation& pres);

// True iff no degree-0 path of length `bound` exists (so none longer).
bool is_finite_dimensional(const GradedPresentation& pres, long bound);

// dim of (path space of degree-0 paths) / (two-sided ideal generated by the
// degree-0 relations), by exact linear algebra per path-length stratum.
long dimension(const GradedPresentation& pres, long bound);

// Returns k iff the underlying undirected simple graph is the extended
// Dynkin D~_k template.
std::optional<int> recognize_extended_dynkin_D(const Quiver& q);

bool is_acyclic(const Quiver& q);

// Total number of paths (including the trivial ones) of an acyclic quiver.
long count_paths_acyclic(const Quiver& q);

struct DegreeZeroReport {
    bool finite = false;
    long dim = -1;
    long degree0_vertices = 0;
    long degree0_arrows = 0;
    std::optional<int> dynkin;
};

DegreeZeroReport degree_zero_report(const GradedPresentation& pres, long bound);

}  // namespace mcq
