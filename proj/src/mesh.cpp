#include "curldg/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "curldg/errors.hpp"

namespace curldg {

void ProblemCoefficients::validate() const {
    if (!(epsilon > 0.0)) throw ConfigurationError("ProblemCoefficients: epsilon must be positive");
    if (!(mu > 0.0)) throw ConfigurationError("ProblemCoefficients: mu must be positive");
    if (!(eta > 0.0)) throw ConfigurationError("ProblemCoefficients: eta must be positive");
}

Mesh2D build_structured(int level) {
    if (level < 0) throw std::invalid_argument("build_structured: level must be non-negative");
    if (level > 12) throw std::length_error("build_structured: level > 12 exceeds the capacity guard");

    const int n = 1 << level;
    Mesh2D mesh;
    mesh.n = n;
    mesh.level = level;

    mesh.vertices.reserve(static_cast<std::size_t>(n + 1) * (n + 1));
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i)
            mesh.vertices.push_back({static_cast<double>(i) / n, static_cast<double>(j) / n});

    const auto vid = [n](int i, int j) { return j * (n + 1) + i; };
    mesh.triangles.reserve(static_cast<std::size_t>(2) * n * n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            // same diagonal in every cell so that nested refinements line up
            mesh.triangles.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)});
            mesh.triangles.push_back({vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)});
        }
    }
    return mesh;
}

double signed_area(const Mesh2D& mesh, int element) {
    if (element < 0 || element >= mesh.n_elements())
        throw std::out_of_range("signed_area: invalid element index");
    const auto& t = mesh.triangles[static_cast<std::size_t>(element)];
    const Vec2 a = mesh.vertices[static_cast<std::size_t>(t[0])];
    const Vec2 b = mesh.vertices[static_cast<std::size_t>(t[1])];
    const Vec2 c = mesh.vertices[static_cast<std::size_t>(t[2])];
    return 0.5 * cross(b - a, c - a);
}

double element_diameter(const Mesh2D& mesh, int element) {
    if (element < 0 || element >= mesh.n_elements())
        throw std::out_of_range("element_diameter: invalid element index");
    const auto& t = mesh.triangles[static_cast<std::size_t>(element)];
    double d = 0.0;
    for (int e = 0; e < 3; ++e) {
        const Vec2 a = mesh.vertices[static_cast<std::size_t>(t[e])];
        const Vec2 b = mesh.vertices[static_cast<std::size_t>(t[(e + 1) % 3])];
        d = std::max(d, norm(b - a));
    }
    return d;
}

std::vector<Face> enumerate_faces(const Mesh2D& mesh) {
    std::vector<Face> faces;
    faces.reserve(static_cast<std::size_t>(3) * mesh.n_elements() / 2 + 2 * mesh.n);
    std::map<std::pair<int, int>, int> seen;  // sorted endpoints -> face index

    for (int e = 0; e < mesh.n_elements(); ++e) {
        const auto& t = mesh.triangles[static_cast<std::size_t>(e)];
        for (int le = 0; le < 3; ++le) {
            const int a = t[le];
            const int b = t[(le + 1) % 3];
            const auto key = std::minmax(a, b);
            auto it = seen.find(key);
            if (it == seen.end()) {
                Face f;
                f.v = {a, b};
                f.left = e;
                f.left_edge = le;
                const Vec2 pa = mesh.vertices[static_cast<std::size_t>(a)];
                const Vec2 pb = mesh.vertices[static_cast<std::size_t>(b)];
                const Vec2 tangent = pb - pa;
                f.length = norm(tangent);
                // edge traversed counterclockwise in `left`; rotate by -90
                // degrees for the outward normal
                f.normal = Vec2{tangent.y, -tangent.x} / f.length;
                seen.emplace(key, static_cast<int>(faces.size()));
                faces.push_back(f);
            } else {
                Face& f = faces[static_cast<std::size_t>(it->second)];
                if (f.right != -1)
                    throw TopologyError("enumerate_faces: edge shared by more than two elements");
                f.right = e;
                f.right_edge = le;
                f.kind = FaceKind::Interior;
            }
        }
    }

    for (Face& f : faces) {
        const double hl = element_diameter(mesh, f.left);
        if (f.kind == FaceKind::Interior) {
            f.h_f = std::min(hl, element_diameter(mesh, f.right));
        } else {
            f.h_f = hl;
            const Vec2 pa = mesh.vertices[static_cast<std::size_t>(f.v[0])];
            const Vec2 pb = mesh.vertices[static_cast<std::size_t>(f.v[1])];
            const bool on_side = (pa.x == 0.0 && pb.x == 0.0) || (pa.x == 1.0 && pb.x == 1.0) ||
                                 (pa.y == 0.0 && pb.y == 0.0) || (pa.y == 1.0 && pb.y == 1.0);
            if (!on_side)
                throw TopologyError("enumerate_faces: boundary face not on the unit-square boundary");
        }
    }
    return faces;
}

Vec2 physical_coords(const Mesh2D& mesh, int element, Vec2 ref) {
    const auto& t = mesh.triangles[static_cast<std::size_t>(element)];
    const Vec2 a = mesh.vertices[static_cast<std::size_t>(t[0])];
    const Vec2 b = mesh.vertices[static_cast<std::size_t>(t[1])];
    const Vec2 c = mesh.vertices[static_cast<std::size_t>(t[2])];
    return a + ref.x * (b - a) + ref.y * (c - a);
}

Vec2 ref_coords(const Mesh2D& mesh, int element, Vec2 p) {
    const auto& t = mesh.triangles[static_cast<std::size_t>(element)];
    const Vec2 a = mesh.vertices[static_cast<std::size_t>(t[0])];
    const Vec2 e1 = mesh.vertices[static_cast<std::size_t>(t[1])] - a;
    const Vec2 e2 = mesh.vertices[static_cast<std::size_t>(t[2])] - a;
    const double det = cross(e1, e2);
    const Vec2 d = p - a;
    return {cross(d, e2) / det, cross(e1, d) / det};
}

PointLocation locate_point(const Mesh2D& mesh, Vec2 p) {
    const int n = mesh.n;
    const int i = std::clamp(static_cast<int>(std::floor(p.x * n)), 0, n - 1);
    const int j = std::clamp(static_cast<int>(std::floor(p.y * n)), 0, n - 1);
    const double xi = p.x * n - i;
    const double eta = p.y * n - j;
    const int element = 2 * (j * n + i) + (eta <= xi ? 0 : 1);
    return {element, ref_coords(mesh, element, p)};
}

void write_mesh_csv(const Mesh2D& mesh, std::ostream& os) {
    os << "elem_id,x0,y0,x1,y1,x2,y2\n";
    char buf[192];
    for (int e = 0; e < mesh.n_elements(); ++e) {
        const auto& t = mesh.triangles[static_cast<std::size_t>(e)];
        const Vec2 a = mesh.vertices[static_cast<std::size_t>(t[0])];
        const Vec2 b = mesh.vertices[static_cast<std::size_t>(t[1])];
        const Vec2 c = mesh.vertices[static_cast<std::size_t>(t[2])];
        std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", e, a.x, a.y,
                      b.x, b.y, c.x, c.y);
        os << buf;
    }
}

}  // namespace curldg
