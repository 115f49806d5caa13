#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "curldg/mesh.hpp"
#include "curldg/quadrature.hpp"

namespace curldg {

// Broken vector-valued P^l space on a triangulation: no continuity between
// elements. Degrees of freedom are element-contiguous blocks; within a block
// the layout is vertex-major, component-minor, i.e. local dof 2*a + c is the
// scalar hat of vertex a acting on component c. Only l = 1 is implemented.
//
// The space precomputes per-element hat gradients, areas and physical
// quadrature data; it is immutable after construction and safe to share
// across threads.
class DGSpace {
public:
    explicit DGSpace(const Mesh2D& mesh, int degree = 1);

    const Mesh2D& mesh() const { return *mesh_; }
    const std::vector<Face>& faces() const { return faces_; }
    int degree() const { return degree_; }
    int n_elements() const { return mesh_->n_elements(); }
    int dofs_per_element() const { return 6; }
    int n_dofs() const { return 6 * n_elements(); }
    int global_dof(int element, int local) const { return 6 * element + local; }

    double area(int element) const { return areas_[static_cast<std::size_t>(element)]; }
    const std::array<Vec2, 3>& hat_gradients(int element) const {
        return hat_grads_[static_cast<std::size_t>(element)];
    }

    const QuadratureRule& cell_rule() const;
    const EdgeQuadrature& edge_rule() const;
    int n_quad_points() const { return cell_rule().size() * n_elements(); }
    // global index of quadrature point q of `element` in per-point arrays
    int quad_index(int element, int q) const { return cell_rule().size() * element + q; }
    Vec2 quad_point(int element, int q) const {
        return quad_points_[static_cast<std::size_t>(quad_index(element, q))];
    }
    // reference weight times |det J|; integrals are plain weighted sums
    double quad_weight(int element, int q) const {
        return cell_rule().weights[static_cast<std::size_t>(q)] * 2.0 * area(element);
    }

private:
    const Mesh2D* mesh_;
    int degree_;
    std::vector<Face> faces_;
    std::vector<double> areas_;
    std::vector<std::array<Vec2, 3>> hat_grads_;
    std::vector<Vec2> quad_points_;
};

// Coefficient vector of one broken field. Plain value type.
struct DoFVector {
    std::vector<double> values;
    const DGSpace* space = nullptr;

    DoFVector() = default;
    explicit DoFVector(const DGSpace& s)
        : values(static_cast<std::size_t>(s.n_dofs()), 0.0), space(&s) {}
};

struct BasisEval {
    std::array<Vec2, 6> values;
    std::array<double, 6> curls;
};

// Vector basis values and scalar curls at a reference point. Throws
// std::domain_error if the point lies outside the reference triangle.
BasisEval eval_basis(const DGSpace& space, int element, Vec2 ref);

Vec2 eval_field(const DGSpace& space, const DoFVector& dofs, int element, Vec2 ref);

// Elementwise curl of a P1 field; constant on each element.
double field_curl(const DGSpace& space, const DoFVector& dofs, int element);

// Tangential jump across a face, a scalar in 2D:
//   interior:  n1 x v1 + n2 x v2  with  n2 = -n1
//   boundary:  n x v
// Passing a right trace on a boundary face (or omitting it on an interior
// face) is a usage error.
double tangential_jump(const Face& face, Vec2 trace_left, std::optional<Vec2> trace_right);

// Face average: arithmetic mean on interior faces, identity on the boundary.
Vec2 average(const Face& face, Vec2 trace_left, std::optional<Vec2> trace_right);
double average(const Face& face, double trace_left, std::optional<double> trace_right);

using VectorField = std::function<Vec2(Vec2)>;

// Element-by-element L2 projection using the cell quadrature rule.
DoFVector l2_project(const DGSpace& space, const VectorField& field);

// Vertex interpolation; continuous inputs give globally continuous fields.
DoFVector interpolate_nodal(const DGSpace& space, const VectorField& field);

// L2(Omega) norm of the field carried by `dofs`, evaluated by quadrature.
double field_l2_norm(const DGSpace& space, const DoFVector& dofs);

// CSV export at quadrature points: elem_id,xq,yq,Ex,Ey
void write_field_csv(const DGSpace& space, const DoFVector& dofs, std::ostream& os);

// Scalar broken P1 field (e.g. the out-of-plane magnetic component), stored
// as 3 hat coefficients per element.
struct ScalarDGField {
    std::vector<double> coeffs;

    ScalarDGField() = default;
    explicit ScalarDGField(const DGSpace& s)
        : coeffs(static_cast<std::size_t>(3 * s.n_elements()), 0.0) {}
};

double eval_scalar(const DGSpace& space, const ScalarDGField& field, int element, Vec2 ref);
Vec2 scalar_gradient(const DGSpace& space, const ScalarDGField& field, int element);
ScalarDGField scalar_interpolate(const DGSpace& space, const std::function<double(Vec2)>& fn);

// CSV export of element centroid values: elem_id,B
void write_scalar_csv(const DGSpace& space, const ScalarDGField& field, std::ostream& os);

}  // namespace curldg
