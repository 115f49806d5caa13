#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "curldg/geometry.hpp"

namespace curldg {

// Structured triangulation of the unit square (0,1)^2: n x n grid cells,
// each split along the (i,j)->(i+1,j+1) diagonal into two counterclockwise
// triangles. Cell (i,j) owns triangles 2*(j*n+i) (lower) and 2*(j*n+i)+1
// (upper). Immutable after construction.
struct Mesh2D {
    int n = 0;      // cells per side, n = 2^level
    int level = 0;  // refinement exponent
    std::vector<Vec2> vertices;
    std::vector<std::array<int, 3>> triangles;

    int n_elements() const { return static_cast<int>(triangles.size()); }
    int n_vertices() const { return static_cast<int>(vertices.size()); }
};

enum class FaceKind { Interior, Boundary };

// One mesh edge with its adjacency. `normal` is the unit normal of the left
// element, pointing into the right element (outward of the domain on
// boundary faces); the right element's outward normal is its negative.
struct Face {
    std::array<int, 2> v{};  // endpoints, ordered counterclockwise in `left`
    FaceKind kind = FaceKind::Boundary;
    int left = -1;
    int right = -1;      // -1 on boundary faces
    int left_edge = -1;  // local edge index (0..2) within `left`
    int right_edge = -1;
    Vec2 normal;
    double length = 0.0;
    double h_f = 0.0;  // min of adjacent element diameters; h_K on boundary
};

// Coefficients of the bilinear form: eps u.v + mu^{-1} curl u curl v plus
// the face penalty alpha = eta / h_f.
struct ProblemCoefficients {
    double epsilon = 1.0;
    double mu = 1.0;
    double eta = 1.0e3;

    void validate() const;
};

Mesh2D build_structured(int level);

std::vector<Face> enumerate_faces(const Mesh2D& mesh);

// Longest edge of the triangle.
double element_diameter(const Mesh2D& mesh, int element);

double signed_area(const Mesh2D& mesh, int element);

Vec2 physical_coords(const Mesh2D& mesh, int element, Vec2 ref);

// Inverse of the affine reference map; exact for the affine triangles here.
Vec2 ref_coords(const Mesh2D& mesh, int element, Vec2 p);

struct PointLocation {
    int element = -1;
    Vec2 ref;
};

// Index-arithmetic point location in the structured grid (no search).
PointLocation locate_point(const Mesh2D& mesh, Vec2 p);

// CSV dump, one triangle per row: elem_id,x0,y0,x1,y1,x2,y2
void write_mesh_csv(const Mesh2D& mesh, std::ostream& os);

}  // namespace curldg
