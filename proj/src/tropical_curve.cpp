#include "troptoda/tropical_curve.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace troptoda {

namespace {

long igcd(long a, long b) { return std::gcd(std::abs(a), std::abs(b)); }

long cross(const Exponent2& o, const Exponent2& a, const Exponent2& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
}

// Counterclockwise hull corners (no collinear points kept).
std::vector<Exponent2> hull_ccw(std::vector<Exponent2> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<Exponent2> h(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) k--;
        h[k++] = pts[i];
    }
    for (size_t i = n - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) k--;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

bool on_segment(const Exponent2& u, const Exponent2& v, const Exponent2& p) {
    if (cross(u, v, p) != 0) return false;
    return std::min(u.first, v.first) <= p.first && p.first <= std::max(u.first, v.first) &&
           std::min(u.second, v.second) <= p.second && p.second <= std::max(u.second, v.second);
}

// Splits a rational displacement into a primitive integer direction and a
// positive lattice length.
std::pair<IntVec2, Rational> primitive_split(const Rational& dx, const Rational& dy) {
    if (dx == 0 && dy == 0) throw Error("primitive_split: zero displacement");
    mpz_class den = lcm(dx.get_den(), dy.get_den());
    mpz_class ix = dx.get_num() * (den / dx.get_den());
    mpz_class iy = dy.get_num() * (den / dy.get_den());
    mpz_class g = gcd(abs(ix), abs(iy));
    ix /= g;
    iy /= g;
    IntVec2 xi{ix.get_si(), iy.get_si()};
    Rational len = Rational(g) / Rational(den);
    return {xi, len};
}

struct PlaneEq {
    Rational alpha, beta, gamma;
    Rational at(const Exponent2& p) const {
        return alpha * Rational(p.first) + beta * Rational(p.second) + gamma;
    }
};

// Plane through three lifted points; the caller must rule out collinearity.
PlaneEq plane_through(const Exponent2& p, const Rational& hp, const Exponent2& q,
                      const Rational& hq, const Exponent2& r, const Rational& hr) {
    // Solve [x y 1] . (alpha, beta, gamma) = h for the three points.
    const Rational x1(p.first), y1(p.second);
    const Rational x2(q.first), y2(q.second);
    const Rational x3(r.first), y3(r.second);
    Rational det = x1 * (y2 - y3) - y1 * (x2 - x3) + (x2 * y3 - x3 * y2);
    PlaneEq e;
    e.alpha = (hp * (y2 - y3) - y1 * (hq - hr) + (hq * y3 - hr * y2)) / det;
    e.beta = (x1 * (hq - hr) - hp * (x2 - x3) + (x2 * hr - x3 * hq)) / det;
    e.gamma = (x1 * (y2 * hr - y3 * hq) - y1 * (x2 * hr - x3 * hq) + hp * (x2 * y3 - x3 * y2)) /
              det;
    return e;
}

TropicalCurve extract_line_case(const std::vector<Exponent2>& pts, const RatVec& h) {
    // All support points sit on one lattice line p0 + k * d.
    TropicalCurve c;
    const Exponent2 p0 = pts.front();
    IntVec2 d{0, 0};
    for (const auto& p : pts)
        if (p != p0) {
            long dx = p.first - p0.first, dy = p.second - p0.second;
            long g = igcd(dx, dy);
            d = {dx / g, dy / g};
            break;
        }
    std::vector<std::pair<long, Rational>> line_pts;  // (k, height)
    for (size_t i = 0; i < pts.size(); ++i) {
        long k = (d.first != 0) ? (pts[i].first - p0.first) / d.first
                                : (pts[i].second - p0.second) / d.second;
        line_pts.push_back({k, h[i]});
    }
    std::sort(line_pts.begin(), line_pts.end());
    // Lower hull in (k, height).
    std::vector<std::pair<long, Rational>> lower;
    for (const auto& p : line_pts) {
        while (lower.size() >= 2) {
            auto& a = lower[lower.size() - 2];
            auto& b = lower[lower.size() - 1];
            // Keep b only if it lies strictly below segment a-p.
            if ((b.second - a.second) * Rational(p.first - a.first) <
                (p.second - a.second) * Rational(b.first - a.first))
                break;
            lower.pop_back();
        }
        lower.push_back(p);
    }
    for (size_t i = 0; i + 1 < lower.size(); ++i) {
        const auto& [ka, ha] = lower[i];
        const auto& [kb, hb] = lower[i + 1];
        // Tie locus of the two monomials: (w_b - w_a) . P = h_a - h_b.
        Rational rhs = (ha - hb) / Rational(kb - ka);
        CurveLine line;
        line.xi = {-d.second, d.first};
        line.weight = kb - ka;
        if (d.first != 0)
            line.anchor = {rhs / Rational(d.first), Rational(0)};
        else
            line.anchor = {Rational(0), rhs / Rational(d.second)};
        c.lines.push_back(line);
    }
    return c;
}

}  // namespace

TropicalCurve extract_curve(const TropicalPolynomial2& f) {
    std::vector<Exponent2> pts;
    RatVec h;
    for (const auto& [w, cw] : f.terms) {
        pts.push_back(w);
        h.push_back(cw);
    }
    const size_t n = pts.size();
    if (n == 1) throw DegenerateInput("support is a single monomial; the curve is empty");

    bool planar = false;
    for (size_t i = 2; i < n && !planar; ++i)
        if (cross(pts[0], pts[1], pts[i]) != 0) planar = true;
    if (!planar && n >= 2) {
        bool distinct = false;
        for (size_t i = 1; i < n; ++i)
            if (pts[i] != pts[0]) distinct = true;
        if (!distinct) throw DegenerateInput("support is a single monomial; the curve is empty");
        return extract_line_case(pts, h);
    }

    TropicalCurve curve;
    curve.newton_polygon = hull_ccw(pts);

    // Lower-hull cells: planes through lifted triples supporting every point
    // from below; the cell is everything lying on the plane.
    std::set<std::vector<size_t>> seen;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                if (cross(pts[i], pts[j], pts[k]) == 0) continue;
                PlaneEq pl = plane_through(pts[i], h[i], pts[j], h[j], pts[k], h[k]);
                std::vector<size_t> on;
                bool below = true;
                for (size_t l = 0; l < n && below; ++l) {
                    Rational z = pl.at(pts[l]);
                    if (z > h[l])
                        below = false;
                    else if (z == h[l])
                        on.push_back(l);
                }
                if (!below) continue;
                if (!seen.insert(on).second) continue;
                DualCell cell;
                for (size_t l : on) cell.points.push_back(pts[l]);
                cell.polygon = hull_ccw(cell.points);
                cell.alpha = pl.alpha;
                cell.beta = pl.beta;
                cell.gamma = pl.gamma;
                curve.dual_cells.push_back(std::move(cell));
                curve.vertices.push_back({-pl.alpha, -pl.beta});
            }

    // Subdivision edges: corner pairs of cell polygons. Interior edges are
    // shared by exactly two cells, boundary edges by one.
    std::map<std::pair<Exponent2, Exponent2>, std::vector<int>> segs;
    for (size_t ci = 0; ci < curve.dual_cells.size(); ++ci) {
        const auto& poly = curve.dual_cells[ci].polygon;
        for (size_t a = 0; a < poly.size(); ++a) {
            Exponent2 u = poly[a], v = poly[(a + 1) % poly.size()];
            if (v < u) std::swap(u, v);
            segs[{u, v}].push_back((int)ci);
        }
    }
    for (const auto& [seg, cells] : segs) {
        const auto& [u, v] = seg;
        const long w = igcd(v.first - u.first, v.second - u.second);
        if (cells.size() == 2) {
            BoundedEdge e;
            e.a = cells[0];
            e.b = cells[1];
            const auto& pa = curve.vertices[e.a];
            const auto& pb = curve.vertices[e.b];
            auto [xi, len] = primitive_split(pb.first - pa.first, pb.second - pa.second);
            e.xi = xi;
            e.length = len;
            e.weight = w;
            e.dual_u = u;
            e.dual_v = v;
            if (xi.first * (v.first - u.first) + xi.second * (v.second - u.second) != 0)
                throw Error("dual edge is not perpendicular to its curve edge");
            curve.edges.push_back(e);
        } else if (cells.size() == 1) {
            // Boundary segment: the dual ray points along the inward normal
            // of the Newton polygon side carrying it.
            const auto& np = curve.newton_polygon;
            IntVec2 dir{0, 0};
            bool found = false;
            for (size_t a = 0; a < np.size() && !found; ++a) {
                const Exponent2& s = np[a];
                const Exponent2& t = np[(a + 1) % np.size()];
                if (on_segment(s, t, u) && on_segment(s, t, v)) {
                    long ex = t.first - s.first, ey = t.second - s.second;
                    long g = igcd(ex, ey);
                    dir = {-ey / g, ex / g};
                    found = true;
                }
            }
            if (!found) throw Error("boundary subdivision edge not on the Newton polygon");
            Ray r;
            r.v = cells[0];
            r.xi = dir;
            r.weight = w;
            r.dual_u = u;
            r.dual_v = v;
            curve.rays.push_back(r);
        } else {
            throw Error("subdivision edge shared by more than two cells");
        }
    }

    // Balancing must hold exactly at every vertex.
    for (size_t vi = 0; vi < curve.vertices.size(); ++vi) {
        long sx = 0, sy = 0;
        for (const auto& e : curve.edges) {
            if (e.a == (int)vi) {
                sx += e.weight * e.xi.first;
                sy += e.weight * e.xi.second;
            } else if (e.b == (int)vi) {
                sx -= e.weight * e.xi.first;
                sy -= e.weight * e.xi.second;
            }
        }
        for (const auto& r : curve.rays)
            if (r.v == (int)vi) {
                sx += r.weight * r.xi.first;
                sy += r.weight * r.xi.second;
            }
        if (sx != 0 || sy != 0)
            throw Error("balancing fails at vertex " + std::to_string(vi));
    }
    return curve;
}

SmoothnessReport is_smooth(const TropicalCurve& c) {
    SmoothnessReport rep;
    if (!c.lines.empty()) {
        rep.certificate = "curve contains a full line (one-dimensional support)";
        return rep;
    }
    for (size_t vi = 0; vi < c.vertices.size(); ++vi) {
        std::vector<IntVec2> out;
        std::vector<long> weights;
        for (const auto& e : c.edges) {
            if (e.a == (int)vi) {
                out.push_back(e.xi);
                weights.push_back(e.weight);
            } else if (e.b == (int)vi) {
                out.push_back({-e.xi.first, -e.xi.second});
                weights.push_back(e.weight);
            }
        }
        for (const auto& r : c.rays)
            if (r.v == (int)vi) {
                out.push_back(r.xi);
                weights.push_back(r.weight);
            }
        std::ostringstream at;
        at << "vertex " << vi << " at (" << rat_str(c.vertices[vi].first) << ", "
           << rat_str(c.vertices[vi].second) << ")";
        if (out.size() != 3) {
            rep.certificate = at.str() + " has valence " + std::to_string(out.size());
            return rep;
        }
        for (long w : weights)
            if (w != 1) {
                rep.certificate = at.str() + " carries an edge of weight " + std::to_string(w);
                return rep;
            }
        long sx = out[0].first + out[1].first + out[2].first;
        long sy = out[0].second + out[1].second + out[2].second;
        if (sx != 0 || sy != 0) {
            rep.certificate = at.str() + " has non-vanishing primitive sum";
            return rep;
        }
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                long det = out[i].first * out[j].second - out[i].second * out[j].first;
                if (det != 1 && det != -1) {
                    rep.certificate = at.str() + " has |xi_i ^ xi_j| = " +
                                      std::to_string(std::abs(det)) + " != 1";
                    return rep;
                }
            }
    }
    rep.smooth = true;
    rep.certificate = "smooth";
    return rep;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

long genus(const TropicalCurve& c) {
    Dsu dsu(c.vertices.size());
    for (const auto& e : c.edges) dsu.unite(e.a, e.b);
    std::set<int> comps;
    for (size_t i = 0; i < c.vertices.size(); ++i) comps.insert(dsu.find((int)i));
    return (long)c.edges.size() - (long)c.vertices.size() + (long)comps.size();
}

CycleBasis cycle_basis(const TropicalCurve& c) {
    const size_t nv = c.vertices.size();
    std::vector<int> parent_edge(nv, -1), parent_vertex(nv, -1), depth(nv, -1);
    std::vector<char> in_tree(c.edges.size(), 0);
    // Deterministic BFS forest: roots in vertex order, edges in id order.
    std::vector<std::vector<int>> incident(nv);
    for (size_t ei = 0; ei < c.edges.size(); ++ei) {
        incident[c.edges[ei].a].push_back((int)ei);
        incident[c.edges[ei].b].push_back((int)ei);
    }
    for (size_t root = 0; root < nv; ++root) {
        if (depth[root] >= 0) continue;
        depth[root] = 0;
        std::queue<int> q;
        q.push((int)root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int ei : incident[v]) {
                int other = (c.edges[ei].a == v) ? c.edges[ei].b : c.edges[ei].a;
                if (depth[other] >= 0) continue;
                depth[other] = depth[v] + 1;
                parent_edge[other] = ei;
                parent_vertex[other] = v;
                in_tree[ei] = 1;
                q.push(other);
            }
        }
    }
    CycleBasis basis;
    for (size_t ei = 0; ei < c.edges.size(); ++ei) {
        if (in_tree[ei]) continue;
        // Non-tree edge a -> b plus the tree path b -> a.
        std::map<int, long> cyc;
        cyc[(int)ei] += 1;
        int a = c.edges[ei].a, b = c.edges[ei].b;
        int u = a, v = b;
        auto step_up = [&](int x, long sign) {
            int pe = parent_edge[x];
            // Tree edge traversed from x toward its parent.
            long dir = (c.edges[pe].a == x) ? 1 : -1;
            cyc[pe] += sign * dir;
            return parent_vertex[x];
        };
        while (depth[u] > depth[v]) u = step_up(u, -1);  // path a -> lca reversed
        while (depth[v] > depth[u]) v = step_up(v, 1);   // path b -> lca
        while (u != v) {
            u = step_up(u, -1);
            v = step_up(v, 1);
        }
        for (auto it = cyc.begin(); it != cyc.end();)
            it = (it->second == 0) ? cyc.erase(it) : std::next(it);

        // Orient counterclockwise: walk the cycle and take the signed area.
        std::vector<PlanePoint> loop;
        int at = c.edges[ei].a;
        loop.push_back(c.vertices[at]);
        // Rebuild the vertex walk: follow edge ei then tree path b -> a.
        std::vector<std::pair<int, long>> walk;  // (edge, dir)
        walk.push_back({(int)ei, 1});
        {
            std::vector<std::pair<int, long>> up_b, up_a;
            int x = c.edges[ei].b, y = c.edges[ei].a;
            while (depth[x] > depth[y]) {
                int pe = parent_edge[x];
                up_b.push_back({pe, (c.edges[pe].a == x) ? 1L : -1L});
                x = parent_vertex[x];
            }
            while (depth[y] > depth[x]) {
                int pe = parent_edge[y];
                up_a.push_back({pe, (c.edges[pe].a == y) ? 1L : -1L});
                y = parent_vertex[y];
            }
            while (x != y) {
                int pe = parent_edge[x];
                up_b.push_back({pe, (c.edges[pe].a == x) ? 1L : -1L});
                x = parent_vertex[x];
                pe = parent_edge[y];
                up_a.push_back({pe, (c.edges[pe].a == y) ? 1L : -1L});
                y = parent_vertex[y];
            }
            for (auto& s : up_b) walk.push_back(s);
            for (auto it = up_a.rbegin(); it != up_a.rend(); ++it)
                walk.push_back({it->first, -it->second});
        }
        int cur = c.edges[ei].a;
        Rational area = 0;
        for (auto& [edge, dir] : walk) {
            int nxt = (dir > 0) ? c.edges[edge].b : c.edges[edge].a;
            const auto& p = c.vertices[cur];
            const auto& q = c.vertices[nxt];
            area += p.first * q.second - q.first * p.second;
            cur = nxt;
        }
        if (area < 0)
            for (auto& [e, coef] : cyc) coef = -coef;
        basis.cycles.push_back(std::move(cyc));
    }
    return basis;
}

void validate_basis(const TropicalCurve& c, const CycleBasis& basis) {
    for (size_t ci = 0; ci < basis.cycles.size(); ++ci) {
        std::map<int, long> flow;  // net flow per vertex
        for (const auto& [ei, coef] : basis.cycles[ci]) {
            if (ei < 0 || ei >= (int)c.edges.size())
                throw UsageError("cycle references unknown edge " + std::to_string(ei));
            flow[c.edges[ei].a] -= coef;
            flow[c.edges[ei].b] += coef;
        }
        for (const auto& [v, f] : flow)
            if (f != 0)
                throw UsageError("cycle " + std::to_string(ci) +
                                 " breaks flow conservation at vertex " + std::to_string(v));
    }
    // Independence over Q by Gaussian elimination on edge-space vectors.
    std::vector<RatVec> rows;
    for (const auto& cyc : basis.cycles) {
        RatVec row(c.edges.size(), 0);
        for (const auto& [ei, coef] : cyc) row[ei] = Rational(coef);
        rows.push_back(std::move(row));
    }
    size_t rank = 0;
    for (size_t col = 0; col < c.edges.size() && rank < rows.size(); ++col) {
        size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            Rational factor = rows[r][col] / rows[rank][col];
            for (size_t cc = col; cc < c.edges.size(); ++cc)
                rows[r][cc] -= factor * rows[rank][cc];
        }
        ++rank;
    }
    if (rank != rows.size())
        throw SingularBasis("cycle basis has rank " + std::to_string(rank) + " < " +
                            std::to_string(rows.size()));
}

RatMat period_matrix(const TropicalCurve& c, const CycleBasis& basis) {
    validate_basis(c, basis);
    const long g = basis.size();
    RatMat B(g, RatVec(g, 0));
    for (long i = 0; i < g; ++i)
        for (long j = i; j < g; ++j) {
            Rational s = 0;
            for (const auto& [ei, ci] : basis.cycles[i]) {
                auto it = basis.cycles[j].find(ei);
                if (it == basis.cycles[j].end()) continue;
                s += c.edges[ei].length * Rational(ci) * Rational(it->second);
            }
            B[i][j] = s;
            B[j][i] = s;
        }
    Ldlt f = ldlt_factor(B);
    if (f.singular) throw SingularBasis("period matrix LDL^T hit a zero pivot");
    if (!f.positive_definite) throw SingularBasis("period matrix is not positive definite");
    return B;
}

void validate_path(const TropicalCurve& c, const PathChain& path) {
    int at = path.start;
    for (const auto& s : path.steps) {
        if (s.edge < 0 || s.edge >= (int)c.edges.size())
            throw UsageError("path references unknown edge " + std::to_string(s.edge));
        const auto& e = c.edges[s.edge];
        int from = (s.dir > 0) ? e.a : e.b;
        int to = (s.dir > 0) ? e.b : e.a;
        if (from != at)
            throw UsageError("path step does not start at the current vertex");
        at = to;
    }
    if (at != path.end) throw UsageError("path does not end at its declared endpoint");
}

PathChain path_through(const TropicalCurve& c, const std::vector<int>& vertex_seq) {
    if (vertex_seq.empty()) throw UsageError("empty vertex sequence");
    PathChain p;
    p.start = vertex_seq.front();
    p.end = vertex_seq.back();
    for (size_t i = 0; i + 1 < vertex_seq.size(); ++i) {
        int a = vertex_seq[i], b = vertex_seq[i + 1];
        bool found = false;
        for (size_t ei = 0; ei < c.edges.size() && !found; ++ei) {
            if (c.edges[ei].a == a && c.edges[ei].b == b) {
                p.steps.push_back({(int)ei, 1});
                found = true;
            } else if (c.edges[ei].a == b && c.edges[ei].b == a) {
                p.steps.push_back({(int)ei, -1});
                found = true;
            }
        }
        if (!found)
            throw UsageError("vertices " + std::to_string(a) + " and " + std::to_string(b) +
                             " are not adjacent");
    }
    validate_path(c, p);
    return p;
}

PathChain bfs_path(const TropicalCurve& c, int from, int to) {
    std::vector<std::vector<int>> incident(c.vertices.size());
    for (size_t ei = 0; ei < c.edges.size(); ++ei) {
        incident[c.edges[ei].a].push_back((int)ei);
        incident[c.edges[ei].b].push_back((int)ei);
    }
    std::vector<int> prev_edge(c.vertices.size(), -1), prev_vertex(c.vertices.size(), -1);
    std::vector<char> seen(c.vertices.size(), 0);
    std::queue<int> q;
    q.push(from);
    seen[from] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (v == to) break;
        for (int ei : incident[v]) {
            int other = (c.edges[ei].a == v) ? c.edges[ei].b : c.edges[ei].a;
            if (seen[other]) continue;
            seen[other] = 1;
            prev_edge[other] = ei;
            prev_vertex[other] = v;
            q.push(other);
        }
    }
    if (!seen[to]) throw UsageError("vertices are not connected in the bounded subgraph");
    PathChain p;
    p.start = from;
    p.end = to;
    std::vector<PathStep> rev;
    int at = to;
    while (at != from) {
        int ei = prev_edge[at];
        rev.push_back({ei, c.edges[ei].b == at ? 1 : -1});
        at = prev_vertex[at];
    }
    p.steps.assign(rev.rbegin(), rev.rend());
    validate_path(c, p);
    return p;
}

PathChain concat_paths(const PathChain& p1, const PathChain& p2) {
    if (p1.end != p2.start) throw UsageError("paths are not composable");
    PathChain p;
    p.start = p1.start;
    p.end = p2.end;
    p.steps = p1.steps;
    p.steps.insert(p.steps.end(), p2.steps.begin(), p2.steps.end());
    return p;
}

RatVec abel_jacobi(const TropicalCurve& c, const CycleBasis& basis, const PathChain& path) {
    validate_path(c, path);
    RatVec out(basis.size(), 0);
    for (const auto& s : path.steps) {
        const auto& e = c.edges[s.edge];
        for (long i = 0; i < basis.size(); ++i) {
            auto it = basis.cycles[i].find(s.edge);
            if (it == basis.cycles[i].end()) continue;
            out[i] += e.length * Rational(it->second) * Rational(s.dir);
        }
    }
    return out;
}

std::string curve_svg(const TropicalCurve& c, const std::map<std::string, int>& marked) {
    // Bounding box over vertices plus a margin for rays.
    Rational minx = 0, maxx = 1, miny = 0, maxy = 1;
    bool first = true;
    for (const auto& v : c.vertices) {
        if (first || v.first < minx) minx = v.first;
        if (first || v.first > maxx) maxx = v.first;
        if (first || v.second < miny) miny = v.second;
        if (first || v.second > maxy) maxy = v.second;
        first = false;
    }
    Rational span = std::max(maxx - minx, maxy - miny);
    if (span == 0) span = 1;
    Rational margin = span / 2 + 1;
    minx -= margin;
    miny -= margin;
    maxx += margin;
    maxy += margin;
    const double W = 640.0;
    double sx = W / (maxx - minx).get_d();
    auto px = [&](const Rational& x) { return (x - minx).get_d() * sx; };
    auto py = [&](const Rational& y) { return W - (y - miny).get_d() * sx; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
          "viewBox=\"0 0 640 640\">\n";
    os << "<!-- troptoda curve -->\n";
    for (const auto& e : c.edges) {
        const auto& a = c.vertices[e.a];
        const auto& b = c.vertices[e.b];
        os << "<line x1=\"" << px(a.first) << "\" y1=\"" << py(a.second) << "\" x2=\""
           << px(b.first) << "\" y2=\"" << py(b.second)
           << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    Rational reach = (maxx - minx) + (maxy - miny);
    for (const auto& r : c.rays) {
        const auto& a = c.vertices[r.v];
        Rational bx = a.first + reach * Rational(r.xi.first);
        Rational by = a.second + reach * Rational(r.xi.second);
        os << "<line x1=\"" << px(a.first) << "\" y1=\"" << py(a.second) << "\" x2=\"" << px(bx)
           << "\" y2=\"" << py(by) << "\" stroke=\"black\" stroke-width=\"2\" "
           << "stroke-dasharray=\"6,4\"/>\n";
    }
    for (const auto& l : c.lines) {
        Rational ax = l.anchor.first - reach * Rational(l.xi.first);
        Rational ay = l.anchor.second - reach * Rational(l.xi.second);
        Rational bx = l.anchor.first + reach * Rational(l.xi.first);
        Rational by = l.anchor.second + reach * Rational(l.xi.second);
        os << "<line x1=\"" << px(ax) << "\" y1=\"" << py(ay) << "\" x2=\"" << px(bx)
           << "\" y2=\"" << py(by) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    for (size_t vi = 0; vi < c.vertices.size(); ++vi) {
        const auto& v = c.vertices[vi];
        os << "<circle cx=\"" << px(v.first) << "\" cy=\"" << py(v.second)
           << "\" r=\"4\" fill=\"black\"/>\n";
    }
    for (const auto& [name, vid] : marked) {
        const auto& v = c.vertices[vid];
        os << "<text x=\"" << px(v.first) + 6 << "\" y=\"" << py(v.second) - 6
           << "\" font-size=\"16\">" << name << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace troptoda
