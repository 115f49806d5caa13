#include "curldg/dg_space.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace curldg {

namespace {

constexpr double kRefTol = 1.0e-10;

std::array<double, 3> hat_values(Vec2 ref) {
    return {1.0 - ref.x - ref.y, ref.x, ref.y};
}

void check_dofs(const DGSpace& space, const DoFVector& dofs, const char* where) {
    if (static_cast<int>(dofs.values.size()) != space.n_dofs())
        throw std::invalid_argument(std::string(where) + ": dof vector length does not match space");
}

}  // namespace

DGSpace::DGSpace(const Mesh2D& mesh, int degree) : mesh_(&mesh), degree_(degree) {
    if (degree != 1)
        throw std::invalid_argument("DGSpace: only degree 1 is implemented");

    faces_ = enumerate_faces(mesh);

    const int ne = mesh.n_elements();
    areas_.resize(static_cast<std::size_t>(ne));
    hat_grads_.resize(static_cast<std::size_t>(ne));
    for (int e = 0; e < ne; ++e) {
        const double a = signed_area(mesh, e);
        if (!(a > 0.0)) throw std::invalid_argument("DGSpace: non-positive element area");
        areas_[static_cast<std::size_t>(e)] = a;

        const auto& t = mesh.triangles[static_cast<std::size_t>(e)];
        const Vec2 p0 = mesh.vertices[static_cast<std::size_t>(t[0])];
        const Vec2 p1 = mesh.vertices[static_cast<std::size_t>(t[1])];
        const Vec2 p2 = mesh.vertices[static_cast<std::size_t>(t[2])];
        const double det = 2.0 * a;
        // rows of J^{-T} give the physical gradients of the reference hats
        const Vec2 g1 = Vec2{p2.y - p0.y, p0.x - p2.x} / det;
        const Vec2 g2 = Vec2{p0.y - p1.y, p1.x - p0.x} / det;
        hat_grads_[static_cast<std::size_t>(e)] = {Vec2{-g1.x - g2.x, -g1.y - g2.y}, g1, g2};
    }

    const auto& rule = cell_rule();
    quad_points_.resize(static_cast<std::size_t>(ne) * rule.size());
    for (int e = 0; e < ne; ++e)
        for (int q = 0; q < rule.size(); ++q)
            quad_points_[static_cast<std::size_t>(quad_index(e, q))] =
                physical_coords(mesh, e, rule.points[static_cast<std::size_t>(q)]);
}

const QuadratureRule& DGSpace::cell_rule() const { return triangle_rule_degree4(); }

const EdgeQuadrature& DGSpace::edge_rule() const { return edge_rule_gauss3(); }

BasisEval eval_basis(const DGSpace& space, int element, Vec2 ref) {
    if (element < 0 || element >= space.n_elements())
        throw std::out_of_range("eval_basis: invalid element index");
    if (ref.x < -kRefTol || ref.y < -kRefTol || ref.x + ref.y > 1.0 + kRefTol)
        throw std::domain_error("eval_basis: point outside the reference triangle");

    const auto hats = hat_values(ref);
    const auto& grads = space.hat_gradients(element);
    BasisEval out;
    for (int a = 0; a < 3; ++a) {
        out.values[static_cast<std::size_t>(2 * a)] = {hats[static_cast<std::size_t>(a)], 0.0};
        out.values[static_cast<std::size_t>(2 * a + 1)] = {0.0, hats[static_cast<std::size_t>(a)]};
        // curl(phi e_x) = -d phi/dy, curl(phi e_y) = d phi/dx
        out.curls[static_cast<std::size_t>(2 * a)] = -grads[static_cast<std::size_t>(a)].y;
        out.curls[static_cast<std::size_t>(2 * a + 1)] = grads[static_cast<std::size_t>(a)].x;
    }
    return out;
}

Vec2 eval_field(const DGSpace& space, const DoFVector& dofs, int element, Vec2 ref) {
    check_dofs(space, dofs, "eval_field");
    const auto hats = hat_values(ref);
    Vec2 v;
    for (int a = 0; a < 3; ++a) {
        const double h = hats[static_cast<std::size_t>(a)];
        v.x += h * dofs.values[static_cast<std::size_t>(space.global_dof(element, 2 * a))];
        v.y += h * dofs.values[static_cast<std::size_t>(space.global_dof(element, 2 * a + 1))];
    }
    return v;
}

double field_curl(const DGSpace& space, const DoFVector& dofs, int element) {
    check_dofs(space, dofs, "field_curl");
    const auto& grads = space.hat_gradients(element);
    double c = 0.0;
    for (int a = 0; a < 3; ++a) {
        const Vec2 g = grads[static_cast<std::size_t>(a)];
        c += -g.y * dofs.values[static_cast<std::size_t>(space.global_dof(element, 2 * a))];
        c += g.x * dofs.values[static_cast<std::size_t>(space.global_dof(element, 2 * a + 1))];
    }
    return c;
}

double tangential_jump(const Face& face, Vec2 trace_left, std::optional<Vec2> trace_right) {
    if (face.kind == FaceKind::Boundary) {
        if (trace_right)
            throw std::invalid_argument("tangential_jump: right trace supplied on a boundary face");
        return cross(face.normal, trace_left);
    }
    if (!trace_right)
        throw std::invalid_argument("tangential_jump: interior face needs both traces");
    return cross(face.normal, trace_left) + cross(-face.normal, *trace_right);
}

Vec2 average(const Face& face, Vec2 trace_left, std::optional<Vec2> trace_right) {
    if (face.kind == FaceKind::Boundary) {
        if (trace_right)
            throw std::invalid_argument("average: right trace supplied on a boundary face");
        return trace_left;
    }
    if (!trace_right) throw std::invalid_argument("average: interior face needs both traces");
    return 0.5 * (trace_left + *trace_right);
}

double average(const Face& face, double trace_left, std::optional<double> trace_right) {
    if (face.kind == FaceKind::Boundary) {
        if (trace_right)
            throw std::invalid_argument("average: right trace supplied on a boundary face");
        return trace_left;
    }
    if (!trace_right) throw std::invalid_argument("average: interior face needs both traces");
    return 0.5 * (trace_left + *trace_right);
}

DoFVector l2_project(const DGSpace& space, const VectorField& field) {
    DoFVector out(space);
    const auto& rule = space.cell_rule();
    const int nq = rule.size();

    for (int e = 0; e < space.n_elements(); ++e) {
        // scalar hat mass matrix and per-component right-hand sides
        double m[3][3] = {};
        double rhs[2][3] = {};
        for (int q = 0; q < nq; ++q) {
            const double w = space.quad_weight(e, q);
            const auto hats = hat_values(rule.points[static_cast<std::size_t>(q)]);
            const Vec2 f = field(space.quad_point(e, q));
            for (int a = 0; a < 3; ++a) {
                rhs[0][a] += w * f.x * hats[static_cast<std::size_t>(a)];
                rhs[1][a] += w * f.y * hats[static_cast<std::size_t>(a)];
                for (int b = 0; b < 3; ++b)
                    m[a][b] += w * hats[static_cast<std::size_t>(a)] * hats[static_cast<std::size_t>(b)];
            }
        }

        // dense Cholesky of the 3x3 SPD mass block
        double l[3][3] = {};
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j <= i; ++j) {
                double s = m[i][j];
                for (int k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
                if (i == j) {
                    if (!(s > 0.0))
                        throw std::logic_error("l2_project: singular local mass matrix");
                    l[i][i] = std::sqrt(s);
                } else {
                    l[i][j] = s / l[j][j];
                }
            }
        }
        for (int c = 0; c < 2; ++c) {
            double y[3];
            for (int i = 0; i < 3; ++i) {
                double s = rhs[c][i];
                for (int k = 0; k < i; ++k) s -= l[i][k] * y[k];
                y[i] = s / l[i][i];
            }
            double x[3];
            for (int i = 2; i >= 0; --i) {
                double s = y[i];
                for (int k = i + 1; k < 3; ++k) s -= l[k][i] * x[k];
                x[i] = s / l[i][i];
            }
            for (int a = 0; a < 3; ++a)
                out.values[static_cast<std::size_t>(space.global_dof(e, 2 * a + c))] = x[a];
        }
    }
    return out;
}

DoFVector interpolate_nodal(const DGSpace& space, const VectorField& field) {
    DoFVector out(space);
    const Mesh2D& mesh = space.mesh();
    for (int e = 0; e < space.n_elements(); ++e) {
        const auto& t = mesh.triangles[static_cast<std::size_t>(e)];
        for (int a = 0; a < 3; ++a) {
            const Vec2 v = field(mesh.vertices[static_cast<std::size_t>(t[a])]);
            out.values[static_cast<std::size_t>(space.global_dof(e, 2 * a))] = v.x;
            out.values[static_cast<std::size_t>(space.global_dof(e, 2 * a + 1))] = v.y;
        }
    }
    return out;
}

double field_l2_norm(const DGSpace& space, const DoFVector& dofs) {
    check_dofs(space, dofs, "field_l2_norm");
    const auto& rule = space.cell_rule();
    double s = 0.0;
    for (int e = 0; e < space.n_elements(); ++e)
        for (int q = 0; q < rule.size(); ++q) {
            const Vec2 v = eval_field(space, dofs, e, rule.points[static_cast<std::size_t>(q)]);
            s += space.quad_weight(e, q) * dot(v, v);
        }
    return std::sqrt(s);
}

void write_field_csv(const DGSpace& space, const DoFVector& dofs, std::ostream& os) {
    check_dofs(space, dofs, "write_field_csv");
    os << "elem_id,xq,yq,Ex,Ey\n";
    const auto& rule = space.cell_rule();
    char buf[160];
    for (int e = 0; e < space.n_elements(); ++e)
        for (int q = 0; q < rule.size(); ++q) {
            const Vec2 p = space.quad_point(e, q);
            const Vec2 v = eval_field(space, dofs, e, rule.points[static_cast<std::size_t>(q)]);
            std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g,%.17g\n", e, p.x, p.y, v.x, v.y);
            os << buf;
        }
}

double eval_scalar(const DGSpace& space, const ScalarDGField& field, int element, Vec2 ref) {
    if (static_cast<int>(field.coeffs.size()) != 3 * space.n_elements())
        throw std::invalid_argument("eval_scalar: coefficient length does not match space");
    const auto hats = hat_values(ref);
    double s = 0.0;
    for (int a = 0; a < 3; ++a)
        s += hats[static_cast<std::size_t>(a)] *
             field.coeffs[static_cast<std::size_t>(3 * element + a)];
    return s;
}

Vec2 scalar_gradient(const DGSpace& space, const ScalarDGField& field, int element) {
    if (static_cast<int>(field.coeffs.size()) != 3 * space.n_elements())
        throw std::invalid_argument("scalar_gradient: coefficient length does not match space");
    const auto& grads = space.hat_gradients(element);
    Vec2 g;
    for (int a = 0; a < 3; ++a)
        g += field.coeffs[static_cast<std::size_t>(3 * element + a)] *
             grads[static_cast<std::size_t>(a)];
    return g;
}

ScalarDGField scalar_interpolate(const DGSpace& space, const std::function<double(Vec2)>& fn) {
    ScalarDGField out(space);
    const Mesh2D& mesh = space.mesh();
    for (int e = 0; e < space.n_elements(); ++e) {
        const auto& t = mesh.triangles[static_cast<std::size_t>(e)];
        for (int a = 0; a < 3; ++a)
            out.coeffs[static_cast<std::size_t>(3 * e + a)] =
                fn(mesh.vertices[static_cast<std::size_t>(t[a])]);
    }
    return out;
}

void write_scalar_csv(const DGSpace& space, const ScalarDGField& field, std::ostream& os) {
    if (static_cast<int>(field.coeffs.size()) != 3 * space.n_elements())
        throw std::invalid_argument("write_scalar_csv: coefficient length does not match space");
    os << "elem_id,B\n";
    char buf[64];
    for (int e = 0; e < space.n_elements(); ++e) {
        const double centroid = (field.coeffs[static_cast<std::size_t>(3 * e)] +
                                 field.coeffs[static_cast<std::size_t>(3 * e + 1)] +
                                 field.coeffs[static_cast<std::size_t>(3 * e + 2)]) /
                                3.0;
        std::snprintf(buf, sizeof(buf), "%d,%.17g\n", e, centroid);
        os << buf;
    }
}

}  // namespace curldg
