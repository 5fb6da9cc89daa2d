#pragma once

#include <map>
#include <string>
#include <vector>

#include "troptoda/tropical_poly.hpp"

namespace troptoda {

using PlanePoint = std::pair<Rational, Rational>;
using IntVec2 = std::pair<long, long>;

/// Cell of the regular subdivision dual to one curve vertex.
struct DualCell {
    std::vector<Exponent2> points;   // support points on the cell, sorted
    std::vector<Exponent2> polygon;  // hull corners, counterclockwise
    Rational alpha, beta, gamma;     // supporting plane z = alpha x + beta y + gamma
};

struct BoundedEdge {
    int a = 0, b = 0;    // vertex ids; geometry: pos(b) - pos(a) = length * xi
    IntVec2 xi;          // primitive integer direction (oriented a -> b)
    Rational length;     // lattice length, positive
    long weight = 1;     // lattice length of the dual subdivision edge
    Exponent2 dual_u, dual_v;
};

struct Ray {
    int v = 0;
    IntVec2 xi;  // primitive direction pointing away from the vertex
    long weight = 1;
    Exponent2 dual_u, dual_v;
};

/// Full line component arising from one-dimensional support.
struct CurveLine {
    PlanePoint anchor;
    IntVec2 xi;
    long weight = 1;
};

/// Plane tropical curve as a weighted balanced graph together with the dual
/// subdivision it came from. Vertex i is dual to dual_cells[i].
struct TropicalCurve {
    std::vector<PlanePoint> vertices;
    std::vector<BoundedEdge> edges;
    std::vector<Ray> rays;
    std::vector<CurveLine> lines;
    std::vector<DualCell> dual_cells;
    std::vector<Exponent2> newton_polygon;  // hull corners, counterclockwise
};

/// Corner locus of the min-plus polynomial via the regular subdivision
/// induced by lifting each support point to its coefficient.
TropicalCurve extract_curve(const TropicalPolynomial2& f);

struct SmoothnessReport {
    bool smooth = false;
    std::string certificate;  // names the first failing vertex when not smooth
};

SmoothnessReport is_smooth(const TropicalCurve& c);

/// Rank of the first homology of the bounded subgraph.
long genus(const TropicalCurve& c);

/// Integer circulations on the bounded edges, indexed by canonical edge
/// orientation a -> b.
struct CycleBasis {
    std::vector<std::map<int, long>> cycles;
    long size() const { return (long)cycles.size(); }
};

/// Fundamental cycles of a deterministic spanning forest, oriented
/// counterclockwise, ordered by their defining non-tree edge.
CycleBasis cycle_basis(const TropicalCurve& c);

/// Checks flow conservation at every vertex and linear independence.
void validate_basis(const TropicalCurve& c, const CycleBasis& basis);

/// Gram matrix B_ij = sum_e length(e) g_i(e) g_j(e); positive definiteness
/// certified by exact LDL^T (throws SingularBasis on a zero pivot).
RatMat period_matrix(const TropicalCurve& c, const CycleBasis& basis);

struct PathStep {
    int edge = 0;
    int dir = 1;  // +1 traverses a -> b, -1 the reverse
};

/// Edge walk on the universal cover; repetition allowed.
struct PathChain {
    int start = 0, end = 0;
    std::vector<PathStep> steps;
};

/// Checks endpoint consistency of the walk.
void validate_path(const TropicalCurve& c, const PathChain& path);

/// Walk through the listed vertices, which must be pairwise adjacent.
PathChain path_through(const TropicalCurve& c, const std::vector<int>& vertex_seq);

/// Shortest edge walk between two vertices (deterministic tie-break by
/// edge id); throws if they are disconnected.
PathChain bfs_path(const TropicalCurve& c, int from, int to);

PathChain concat_paths(const PathChain& p1, const PathChain& p2);

/// Component i is sum over the walk of length(e) g_i(e) (sign by direction).
RatVec abel_jacobi(const TropicalCurve& c, const CycleBasis& basis, const PathChain& path);

/// Named cycle data of a curve: basis, period matrix, marked vertices and
/// named Abel-Jacobi vectors.
struct PeriodData {
    CycleBasis basis;
    RatMat B;
    std::map<std::string, int> marked_points;
    std::map<std::string, RatVec> aj_vectors;
};

/// SVG rendering with marked-point labels.
std::string curve_svg(const TropicalCurve& c, const std::map<std::string, int>& marked);

}  // namespace troptoda
