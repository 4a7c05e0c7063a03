import dataclasses
import typing

from shv.errors import InconsistentModel
from shv.exactalg import Matrix, column_basis, complement_basis, hstack, inverse, kernel_basis, rank
from shv.quiverrep import CircleQuiverRep, LineQuiverRep

# (vertex, restriction into the edge) for each end of an edge
Incidence = typing.Tuple[int, Matrix]


@dataclasses.dataclass(frozen=True)
class CellularSheafModel:
    """
    Cellular cochain model of a constructible sheaf: spaces on vertices and edges, restriction maps vertex -> edge
    """

    vertex_dims: typing.Tuple[int, ...]
    edge_dims: typing.Tuple[int, ...]
    edges: typing.Tuple[typing.Tuple[Incidence, Incidence], ...]

    def __post_init__(self) -> None:
        if len(self.edges) != len(self.edge_dims):
            raise InconsistentModel(f'{len(self.edges)} edges for {len(self.edge_dims)} edge spaces')
        for e, ends in enumerate(self.edges):
            for vertex, restriction in ends:
                if restriction.shape != (self.edge_dims[e], self.vertex_dims[vertex]):
                    raise InconsistentModel(f'restriction {restriction.shape} into edge {e} from vertex {vertex}')

    @classmethod
    def from_line(cls, rep: LineQuiverRep) -> 'CellularSheafModel':
        """
        Vertices: the left ray, the marked points, the right ray; edges: the arcs
        """
        n = len(rep.points)
        if n == 0:
            return cls((rep.arcs[0],), (), ())
        vertices = (rep.arcs[0],) + rep.stalks + (rep.arcs[n],)
        edges = [((0, Matrix.identity(rep.arcs[0])), (1, rep.left[0]))]
        for i in range(1, n):
            edges.append(((i, rep.right[i - 1]), (i + 1, rep.left[i])))
        edges.append(((n, rep.right[n - 1]), (n + 1, Matrix.identity(rep.arcs[n]))))
        return cls(vertices, tuple(rep.arcs), tuple(edges))

    @classmethod
    def from_circle(cls, rep: CircleQuiverRep) -> 'CellularSheafModel':
        """
        Vertices: the marked points; edge j runs from point j to point j + 1 over arc j
        """
        m = len(rep.points)
        edges = tuple(((j, rep.right[j]), ((j + 1) % m, rep.left[(j + 1) % m])) for j in range(m))
        return cls(rep.stalks, rep.arcs, edges)

    def coboundary(self) -> Matrix:
        """
        C^0 -> C^1, (delta x)_e = rho_end(x_end) - rho_start(x_start)
        """
        blocks = []
        for e, ((start, rho_start), (end, rho_end)) in enumerate(self.edges):
            row = [Matrix.zeros(self.edge_dims[e], d) for d in self.vertex_dims]
            row[end] = row[end] + rho_end
            row[start] = row[start] - rho_start
            blocks.append(hstack(*row, rows=self.edge_dims[e]))
        width = sum(self.vertex_dims)
        if not blocks:
            return Matrix.zeros(0, width)
        return Matrix(sum(b.rows for b in blocks), width, (x for b in blocks for x in b.entries))


def cech_cohomology(model: CellularSheafModel) -> typing.Dict[int, int]:
    """
    (dim H^0, dim H^1) of the cochain model, zero degrees omitted
    """
    delta = model.coboundary()
    r = rank(delta)
    dims = {0: delta.cols - r, 1: delta.rows - r}
    return {d: n for d, n in dims.items() if n}


def unipotent_twist(rep: CircleQuiverRep) -> CircleQuiverRep:
    """
    F (x) L_{1,2}: coordinates (v, e) at index 2v + e, the unipotent jump on the right arrow at the first point
    """
    jump = Matrix.from_rows([[1, 1], [0, 1]])
    ident = Matrix.identity(2)
    return CircleQuiverRep(rep.points, tuple(2 * d for d in rep.stalks), tuple(2 * d for d in rep.arcs),
                           tuple(f.kronecker(ident) for f in rep.left),
                           tuple(f.kronecker(jump if j == 0 else ident) for j, f in enumerate(rep.right)))


def cech_c_map(rep: CircleQuiverRep) -> Matrix:
    """
    Connecting map H^0(F) -> H^1(F) of 0 -> F -> F (x) L_{1,2} -> F -> 0, in a basis of H^0 and of a complement
    of the coboundaries in C^1
    """
    base = CellularSheafModel.from_circle(rep)
    doubled = CellularSheafModel.from_circle(unipotent_twist(rep))
    delta, big = base.coboundary(), doubled.coboundary()
    cycles = kernel_basis(delta)
    n0, n1 = delta.cols, delta.rows
    # lift z to z (x) e2, apply the coboundary and keep the e1 coordinates
    lifted = Matrix(2 * n0, cycles.cols, (cycles[i // 2, c] if i % 2 else 0 for i in range(2 * n0)
                                          for c in range(cycles.cols)))
    image = big @ lifted
    first = image.submatrix([2 * i for i in range(n1)], range(image.cols))
    span = column_basis(delta)
    complement = complement_basis(span)
    change = inverse(hstack(span, complement))
    projection = change.submatrix(range(span.cols, change.rows), range(change.cols))
    return projection @ first


def c_map_rank(rep: CircleQuiverRep) -> int:
    return rank(cech_c_map(rep))
