"""Finite root data, affine Dynkin diagrams, the group Omega and diagram automorphisms.

Two lattice models are used.  Family A is realised inside GL_n with an extra
similitude coordinate: X = Z^n + Z, W_0 = S_n acting on the first n entries.
All other families use the adjoint coweight lattice P^vee written in the
basis of fundamental coweights, so that a root is the functional given by
its simple-root coordinates.

Vertices of the affine diagram are numbered 0..n with Bourbaki labels for
1..n; vertex 0 is attached through -theta.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import TYPE_CHECKING

import networkx as nx
import sympy

if TYPE_CHECKING:
    from .affweyl import AffElement

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")


class RootDatumError(ValueError):
    pass


def _half(*xs):
    return tuple(Fraction(x, 2) for x in xs)


def _unit(n, i, scale=1):
    v = [Fraction(0)] * n
    v[i] = Fraction(scale)
    return v


def _euclidean_simple_roots(family: str, rank: int) -> list[tuple[Fraction, ...]]:
    n = rank
    if family == "A":
        return [tuple(Fraction(x) for x in _unit(n + 1, i)) for i in range(0)]  # unused
    if family in ("B", "C", "D"):
        roots = []
        for i in range(n - 1):
            v = _unit(n, i)
            v[i + 1] = Fraction(-1)
            roots.append(v)
        if family == "B":
            roots.append(_unit(n, n - 1))
        elif family == "C":
            roots.append(_unit(n, n - 1, 2))
        else:
            v = _unit(n, n - 2)
            v[n - 1] = Fraction(1)
            roots.append(v)
        return [tuple(r) for r in roots]
    if family == "E":
        e = [
            _half(1, -1, -1, -1, -1, -1, -1, 1),
            (1, 1, 0, 0, 0, 0, 0, 0),
            (-1, 1, 0, 0, 0, 0, 0, 0),
            (0, -1, 1, 0, 0, 0, 0, 0),
            (0, 0, -1, 1, 0, 0, 0, 0),
            (0, 0, 0, -1, 1, 0, 0, 0),
            (0, 0, 0, 0, -1, 1, 0, 0),
            (0, 0, 0, 0, 0, -1, 1, 0),
        ]
        return [tuple(Fraction(x) for x in r) for r in e[:n]]
    if family == "F":
        f = [(0, 1, -1, 0), (0, 0, 1, -1), (0, 0, 0, 1), _half(1, -1, -1, -1)]
        return [tuple(Fraction(x) for x in r) for r in f]
    if family == "G":
        return [tuple(Fraction(x) for x in r) for r in [(1, -1, 0), (-2, 1, 1)]]
    raise RootDatumError(f"unknown family {family!r}")


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def cartan_matrix(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """A[i][j] = <alpha_i^vee, alpha_j>, Bourbaki numbering (0-based here)."""
    if family == "A":
        return tuple(
            tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(rank))
            for i in range(rank)
        )
    simple = _euclidean_simple_roots(family, rank)
    out = []
    for a in simple:
        aa = _dot(a, a)
        row = []
        for b in simple:
            q = 2 * _dot(a, b) / aa
            assert q.denominator == 1
            row.append(int(q))
        out.append(tuple(row))
    return tuple(out)


def validate_type(family: str, rank: int) -> None:
    ok = {
        "A": rank >= 1,
        "B": rank >= 3,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }.get(family)
    if not ok:
        raise RootDatumError(f"invalid family/rank combination {family}{rank}")


@dataclass(frozen=True)
class PositiveRoot:
    coords: tuple[int, ...]      # simple-root coordinates
    fn: tuple[int, ...]          # functional on X
    coroot: tuple[int, ...]      # vector in X


@dataclass(eq=False)
class RootDatum:
    """Finite Cartan data plus the lattice model of one affine type.

    Immutable after construction; lazily computed attributes are pure.
    """

    family: str
    rank: int
    model: str                              # "gl" or "adjoint"
    dim: int                                # rank of the lattice X
    cartan: tuple[tuple[int, ...], ...]
    simple_fns: tuple[tuple[int, ...], ...]
    simple_coroots: tuple[tuple[int, ...], ...]
    positive_roots: tuple[PositiveRoot, ...]
    theta: PositiveRoot
    fundamental_coweights: tuple[tuple[int, ...], ...]
    rho_check: tuple[int, ...]              # regular dominant, used for sign tests
    _cache: dict = field(default_factory=dict, repr=False)

    # -- basic data ---------------------------------------------------------

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def key(self) -> tuple:
        return (self.family, self.rank, self.model)

    @property
    def n_vertices(self) -> int:
        return self.rank + 1

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(range(self.rank + 1))

    @property
    def gl_n(self) -> int:
        return self.rank + 1

    @cached_property
    def pos_fns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(r.fn for r in self.positive_roots)

    @cached_property
    def affine_fns(self) -> tuple[tuple[int, ...], ...]:
        """Affine simple roots a_0 = 1 - theta, a_i = alpha_i, as functionals."""
        return (tuple(-x for x in self.theta.fn),) + self.simple_fns

    @cached_property
    def affine_ks(self) -> tuple[int, ...]:
        return (1,) + (0,) * self.rank

    @cached_property
    def affine_coroots(self) -> tuple[tuple[int, ...], ...]:
        return (tuple(-x for x in self.theta.coroot),) + self.simple_coroots

    @cached_property
    def affine_cartan(self) -> tuple[tuple[int, ...], ...]:
        """Entry [i][j] = <a_i^vee, a_j> on the linear parts."""
        fns, cor = self.affine_fns, self.affine_coroots
        return tuple(tuple(_dot(cor[i], fns[j]) for j in range(self.rank + 1))
                     for i in range(self.rank + 1))

    @cached_property
    def diagram(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        a = self.affine_cartan
        for i in self.vertices:
            for j in self.vertices:
                if i < j and (a[i][j] != 0 or a[j][i] != 0):
                    g.add_edge(i, j)
        return g

    def distances_from(self, v: int) -> dict[int, int]:
        return dict(nx.single_source_shortest_path_length(self.diagram, v))

    @cached_property
    def two_rho(self) -> tuple[int, ...]:
        """Sum of positive roots, as a functional."""
        return tuple(sum(r.fn[j] for r in self.positive_roots) for j in range(self.dim))

    def pair_2rho(self, v) -> Fraction:
        return sum((Fraction(x) * y for x, y in zip(v, self.two_rho)), Fraction(0))

    @cached_property
    def identity_matrix(self) -> tuple[int, ...]:
        d = self.dim
        return tuple(1 if i == j else 0 for i in range(d) for j in range(d))

    def reflection_matrix(self, fn, coroot) -> tuple[int, ...]:
        # s(x) = x - <x, fn> coroot; entry [r][c] = delta - coroot[r] * fn[c]
        d = self.dim
        return tuple((1 if r == c else 0) - coroot[r] * fn[c] for r in range(d) for c in range(d))

    @cached_property
    def simple_matrices(self) -> tuple[tuple[int, ...], ...]:
        """Linear parts of s_0..s_n."""
        return tuple(self.reflection_matrix(f, c) for f, c in zip(self.affine_fns, self.affine_coroots))

    @cached_property
    def lattice_model_tag(self) -> str:
        return "GL" if self.model == "gl" else "adjoint P^vee"

    # -- coordinates ----------------------------------------------------------

    @cached_property
    def _coroot_solver(self):
        """Exact left inverse taking an X-vector in the coroot span to coroot coordinates."""
        m = sympy.Matrix([list(c) for c in self.simple_coroots]).T  # d x rank
        pinv = (m.T * m).inv() * m.T
        return [[Fraction(int(x.p), int(x.q)) for x in pinv.row(i)] for i in range(pinv.rows)], m

    def coroot_coordinates(self, v) -> tuple[Fraction, ...] | None:
        """Coordinates of v in the simple coroots, or None if v is outside their rational span."""
        pinv, m = self._coroot_solver
        coeffs = tuple(sum((row[j] * Fraction(v[j]) for j in range(self.dim)), Fraction(0)) for row in pinv)
        back = [sum((Fraction(int(m[r, c])) * coeffs[c] for c in range(self.rank)), Fraction(0))
                for r in range(self.dim)]
        if any(back[r] != Fraction(v[r]) for r in range(self.dim)):
            return None
        return coeffs

    @cached_property
    def output_system(self) -> str:
        if self.model == "gl":
            return "gl"
        if self.family in ("B", "C", "D"):
            return "eps"
        return "omega"

    def to_output(self, v) -> tuple[Fraction, ...]:
        """Rational coweight in the coordinates used for reporting."""
        v = tuple(Fraction(x) for x in v)
        if self.model == "gl":
            return v[: self.gl_n]
        if self.output_system == "eps":
            n = self.rank
            out = [Fraction(0)] * n
            for j, coeff in enumerate(v):
                for k, e in enumerate(_fundamental_eps(self.family, n, j)):
                    out[k] += coeff * e
            return tuple(out)
        return v

    def from_eps(self, eps) -> tuple[Fraction, ...]:
        """Inverse of :meth:`to_output` for the classical adjoint families."""
        assert self.output_system == "eps"
        # x_j = <x, alpha_j>, with alpha_j realised in eps-space
        simple = _euclidean_simple_roots(self.family, self.rank)
        return tuple(_dot(a, [Fraction(e) for e in eps]) for a in simple)

    # -- Omega -----------------------------------------------------------------

    @cached_property
    def minuscule_indices(self) -> tuple[int, ...]:
        """Vertices i >= 1 with omega_i^vee minuscule."""
        if self.model == "gl":
            return tuple(range(1, self.rank + 1))
        return tuple(i + 1 for i, c in enumerate(self.theta.coords) if c == 1)

    def coweight(self, spec: str) -> tuple[int, ...]:
        """Parse 'omega:k' or '2omega:k' into a lattice vector."""
        mult = 1
        s = spec.strip()
        if s.startswith("2omega:"):
            mult, s = 2, s[1:]
        if not s.startswith("omega:"):
            raise RootDatumError(f"bad coweight spec {spec!r}")
        k = int(s.split(":", 1)[1])
        if self.model == "gl":
            if not 0 <= k <= self.gl_n:
                raise RootDatumError(f"omega:{k} out of range for GL_{self.gl_n}")
            base = tuple([1] * k + [0] * (self.gl_n - k) + [1])
            return tuple(mult * x for x in base[:-1]) + (1,)
        if not 1 <= k <= self.rank:
            raise RootDatumError(f"omega:{k} out of range for {self.name}")
        return tuple(mult * x for x in self.fundamental_coweights[k - 1])


def _fundamental_eps(family: str, n: int, j: int) -> tuple[Fraction, ...]:
    """omega_{j+1}^vee in eps-coordinates (B, C, D)."""
    one = Fraction(1)
    half = Fraction(1, 2)
    if family == "B":
        return tuple(one if k <= j else Fraction(0) for k in range(n))
    if family == "C":
        if j < n - 1:
            return tuple(one if k <= j else Fraction(0) for k in range(n))
        return (half,) * n
    if family == "D":
        if j < n - 2:
            return tuple(one if k <= j else Fraction(0) for k in range(n))
        if j == n - 2:
            return (half,) * (n - 1) + (-half,)
        return (half,) * n
    raise RootDatumError(family)


def _positive_roots_adjoint(cartan) -> list[PositiveRoot]:
    n = len(cartan)
    start = []
    for i in range(n):
        e = tuple(1 if k == i else 0 for k in range(n))
        start.append((e, e))
    seen = set(start)
    frontier = list(start)
    while frontier:
        nxt = []
        for root, coroot in frontier:
            for i in range(n):
                p = sum(root[k] * cartan[i][k] for k in range(n))        # <alpha_i^vee, root>
                q = sum(coroot[k] * cartan[k][i] for k in range(n))      # <coroot, alpha_i>
                r2 = tuple(root[k] - (p if k == i else 0) for k in range(n))
                c2 = tuple(coroot[k] - (q if k == i else 0) for k in range(n))
                if (r2, c2) not in seen:
                    seen.add((r2, c2))
                    nxt.append((r2, c2))
        frontier = nxt
    out = []
    for root, coroot in seen:
        if all(x >= 0 for x in root):
            vec = tuple(sum(coroot[i] * cartan[i][k] for i in range(n)) for k in range(n))
            out.append(PositiveRoot(coords=root, fn=root, coroot=vec))
    out.sort(key=lambda r: (sum(r.coords), r.coords))
    return out


def _fundamental_coweights_adjoint(rank):
    return tuple(tuple(1 if k == i else 0 for k in range(rank)) for i in range(rank))


def build_root_datum(family: str, rank: int) -> RootDatum:
    """Root datum with Bourbaki numbering; GL-model for family A."""
    family = family.upper()
    if family in ("E6", "E7", "E8", "F4", "G2"):
        family = family[0]
    validate_type(family, rank)
    cartan = cartan_matrix(family, rank)
    if family == "A":
        n = rank + 1
        d = n + 1
        simple_fns = []
        for j in range(rank):
            v = [0] * d
            v[j], v[j + 1] = 1, -1
            simple_fns.append(tuple(v))
        roots = []
        for a in range(n):
            for b in range(a + 1, n):
                v = [0] * d
                v[a], v[b] = 1, -1
                coords = tuple(1 if a <= k < b else 0 for k in range(rank))
                roots.append(PositiveRoot(coords=coords, fn=tuple(v), coroot=tuple(v)))
        roots.sort(key=lambda r: (sum(r.coords), r.coords))
        coweights = tuple(tuple([1] * k + [0] * (n - k) + [0]) for k in range(1, n))
        rho = tuple(list(range(n - 1, -1, -1)) + [0])
        datum = RootDatum(
            family="A", rank=rank, model="gl", dim=d, cartan=cartan,
            simple_fns=tuple(simple_fns), simple_coroots=tuple(simple_fns),
            positive_roots=tuple(roots), theta=roots[-1],
            fundamental_coweights=coweights, rho_check=rho,
        )
    else:
        roots = _positive_roots_adjoint(cartan)
        simple = [r for r in roots if sum(r.coords) == 1]
        simple.sort(key=lambda r: r.coords, reverse=True)
        datum = RootDatum(
            family=family, rank=rank, model="adjoint", dim=rank, cartan=cartan,
            simple_fns=tuple(r.fn for r in simple),
            simple_coroots=tuple(r.coroot for r in simple),
            positive_roots=tuple(roots), theta=roots[-1],
            fundamental_coweights=_fundamental_coweights_adjoint(rank),
            rho_check=(1,) * rank,
        )
    if datum.dim > 16:
        raise RootDatumError("lattice dimension above 16 is not supported")
    return datum


_DATUM_CACHE: dict[tuple[str, int], RootDatum] = {}


def get_root_datum(family: str, rank: int) -> RootDatum:
    """Shared instance per (family, rank); data are immutable so sharing is safe."""
    key = (family.upper()[0], rank)
    if key not in _DATUM_CACHE:
        _DATUM_CACHE[key] = build_root_datum(*key)
    return _DATUM_CACHE[key]


# ---------------------------------------------------------------------------
# Omega and diagram automorphisms


@dataclass(frozen=True, eq=False)
class OmegaElement:
    """A length-zero element: t^coweight u together with its action on the affine vertices."""

    name: str
    coweight: tuple[int, ...]
    element: "AffElement"
    perm: tuple[int, ...]       # perm[i] = j means tau s_i tau^{-1} = s_j


def _vertex_perm(datum: RootDatum, conj) -> tuple[int, ...]:
    from .affweyl import simple_reflection
    simples = {simple_reflection(datum, i).key: i for i in datum.vertices}
    perm = []
    for i in datum.vertices:
        img = conj(simple_reflection(datum, i))
        if img.key not in simples:
            raise RootDatumError("automorphism does not preserve the simple reflections")
        perm.append(simples[img.key])
    return tuple(perm)


def omega_element(datum: RootDatum, k: int) -> OmegaElement:
    """tau_k: the length-zero element of t^{omega_k} W_0 (k = 0 gives the identity part)."""
    from .affweyl import translation, strip_right
    cache = datum._cache.setdefault("omega", {})
    if k in cache:
        return cache[k]
    if k == 0:
        lam = tuple([0] * (datum.dim - 1) + [1]) if datum.model == "gl" else (0,) * datum.dim
    else:
        if k not in datum.minuscule_indices:
            raise RootDatumError(f"omega_{k} is not minuscule in {datum.name}")
        lam = datum.coweight(f"omega:{k}")
    tau = strip_right(translation(datum, lam), datum.vertices[1:])
    if tau.length != 0:
        raise RootDatumError(f"tau_{k} has positive length")
    inv = tau.inverse()
    perm = _vertex_perm(datum, lambda x: tau * x * inv)
    om = OmegaElement(name=f"tau:{k}", coweight=lam, element=tau, perm=perm)
    cache[k] = om
    return om


def omega_group(datum: RootDatum) -> list[OmegaElement]:
    """One element per class of X / Q^vee (GL-model: tau_0 .. tau_{n-1})."""
    ks = [0] + list(datum.minuscule_indices)
    if datum.model == "gl":
        ks = list(range(datum.gl_n))
    return [omega_element(datum, k) for k in ks]


def finite_diagram_automorphisms(datum: RootDatum) -> list[tuple[int, ...]]:
    """Permutations p of 1..n (as tuple indexed 0..n-1 holding 1-based images) preserving the Cartan matrix."""
    n = datum.rank
    a = datum.cartan
    out = []
    for p in itertools.permutations(range(n)):
        if all(a[p[i]][p[j]] == a[i][j] for i in range(n) for j in range(n)):
            out.append(tuple(x + 1 for x in p))
    return out


@dataclass(eq=False)
class DiagramAuto:
    """Automorphism of W~ preserving S~: w -> tau psi(w) tau^{-1}.

    ``psi`` is the lattice automorphism ``lmat`` (acting on translations and,
    by conjugation, on W_0); ``tau`` is an Omega element or None.
    """

    datum: RootDatum
    tag: str
    lmat: tuple[int, ...]
    lmat_inv: tuple[int, ...]
    tau: "AffElement | None"
    perm: tuple[int, ...] = ()
    _order: int | None = None

    def __post_init__(self):
        if not self.perm:
            self.perm = _vertex_perm(self.datum, self.apply)

    def apply(self, w: "AffElement") -> "AffElement":
        from .affweyl import AffElement
        from . import kernels
        d = self.datum.dim
        if self.lmat == self.datum.identity_matrix:
            x = w
        else:
            lam = kernels.matvec(d, self.lmat, w.lam)
            mat = kernels.matmul(d, kernels.matmul(d, self.lmat, w.mat), self.lmat_inv)
            minv = kernels.matmul(d, kernels.matmul(d, self.lmat, w.minv), self.lmat_inv)
            x = AffElement(self.datum, lam, mat, minv)
        if self.tau is not None:
            x = self.tau * x * self.tau.inverse()
        return x

    def __call__(self, w):
        return self.apply(w)

    def on_vertex(self, i: int) -> int:
        return self.perm[i]

    def on_set(self, s) -> frozenset[int]:
        return frozenset(self.perm[i] for i in s)

    @property
    def is_identity(self) -> bool:
        return self.order == 1

    @property
    def order(self) -> int:
        """Order as an automorphism of W~ (checked on simple reflections and lattice generators)."""
        if self._order is None:
            from .affweyl import simple_reflection, translation
            gens = [simple_reflection(self.datum, i) for i in self.datum.vertices]
            for j in range(self.datum.dim):
                gens.append(translation(self.datum, tuple(1 if k == j else 0 for k in range(self.datum.dim))))
            imgs = list(gens)
            k = 1
            while True:
                imgs = [self.apply(g) for g in imgs]
                if all(a.key == b.key for a, b in zip(imgs, gens)):
                    break
                k += 1
                if k > 10 * (self.datum.rank + 2):
                    raise RootDatumError("automorphism order not found")
            self._order = k
        return self._order

    def compose_key(self) -> tuple[int, ...]:
        return self.perm


def _perm_matrix(datum: RootDatum, p1: tuple[int, ...]) -> tuple[int, ...]:
    # L e_i = e_{p(i)} in fundamental-coweight coordinates
    d = datum.dim
    m = [0] * (d * d)
    for i in range(d):
        m[(p1[i] - 1) * d + i] = 1
    return tuple(m)


def _transpose(d, m):
    return tuple(m[c * d + r] for r in range(d) for c in range(d))


def _gl_sigma0_matrices(datum: RootDatum):
    # (x, c) -> (c 1 - reversed(x), c); an involution
    n = datum.gl_n
    d = datum.dim
    m = [0] * (d * d)
    for r in range(n):
        m[r * d + (n - 1 - r)] = -1
        m[r * d + n] = 1
    m[n * d + n] = 1
    m = tuple(m)
    return m, m


def identity_auto(datum: RootDatum) -> DiagramAuto:
    ident = datum.identity_matrix
    return DiagramAuto(datum, "id", ident, ident, None, perm=datum.vertices, _order=1)


def psi_auto(datum: RootDatum, p1: tuple[int, ...], tag: str | None = None) -> DiagramAuto:
    """Finite diagram automorphism p (1-based images of 1..n), fixing vertex 0."""
    if datum.model == "gl":
        if p1 == tuple(range(1, datum.rank + 1)):
            return identity_auto(datum)
        if p1 != tuple(range(datum.rank, 0, -1)):
            raise RootDatumError("only the identity and the flip are diagram automorphisms of A_n")
        m, minv = _gl_sigma0_matrices(datum)
        return DiagramAuto(datum, tag or "sigma0", m, minv, None)
    m = _perm_matrix(datum, p1)
    return DiagramAuto(datum, tag or "psi:" + ",".join(map(str, p1)), m, _transpose(datum.dim, m), None)


def sigma0_permutation(datum: RootDatum) -> tuple[int, ...] | None:
    """Finite-diagram permutation of the distinguished automorphism, or None when it does not exist."""
    n = datum.rank
    if datum.family == "A" and n >= 2:
        return tuple(range(n, 0, -1))
    if datum.family == "D":
        p = list(range(1, n + 1))
        p[n - 2], p[n - 1] = n, n - 1
        return tuple(p)
    if datum.family == "E" and n == 6:
        return (6, 2, 5, 4, 3, 1)
    return None


def sigma0(datum: RootDatum) -> DiagramAuto:
    p = sigma0_permutation(datum)
    if p is None:
        raise RootDatumError(f"no distinguished diagram automorphism for {datum.name}")
    return psi_auto(datum, p, "sigma0")


def ad_tau(datum: RootDatum, k: int, base: DiagramAuto | None = None) -> DiagramAuto:
    """w -> tau_k base(w) tau_k^{-1}."""
    om = omega_element(datum, k)
    if base is None:
        base = identity_auto(datum)
    if k == 0:
        return base
    tag = f"tau:{k}" if base.tag == "id" else f"tau:{k}*{base.tag}"
    tau = om.element if base.tau is None else om.element * base.tau
    return DiagramAuto(datum, tag, base.lmat, base.lmat_inv, tau)


def parse_sigma(datum: RootDatum, spec: str) -> DiagramAuto:
    """'id', 'sigma0', 'tau:k', 'tau:k*sigma0', 'psi:p1,..,pn', 'tau:k*psi:...'."""
    spec = spec.strip()
    if spec in ("", "id"):
        return identity_auto(datum)
    if spec.startswith("tau:"):
        head, _, rest = spec.partition("*")
        base = parse_sigma(datum, rest) if rest else None
        return ad_tau(datum, int(head.split(":")[1]), base)
    if spec == "sigma0":
        return sigma0(datum)
    if spec.startswith("psi:"):
        p = tuple(int(x) for x in spec[4:].split(","))
        if p not in finite_diagram_automorphisms(datum) and datum.model != "gl":
            raise RootDatumError(f"{spec} is not a diagram automorphism")
        return psi_auto(datum, p)
    raise RootDatumError(f"bad sigma spec {spec!r}")


def all_automorphisms(datum: RootDatum) -> list[DiagramAuto]:
    """The group {ad tau o psi}: every automorphism of W~ preserving S~ built from Omega and finite diagram automorphisms."""
    cache = datum._cache
    if "autos" in cache:
        return cache["autos"]
    if datum.model == "gl":
        psis = [identity_auto(datum)]
        if datum.rank >= 2:
            psis.append(sigma0(datum))
    else:
        s0 = sigma0_permutation(datum)
        psis = []
        for p in finite_diagram_automorphisms(datum):
            if p == tuple(range(1, datum.rank + 1)):
                psis.append(identity_auto(datum))
            elif p == s0:
                psis.append(sigma0(datum))
            else:
                psis.append(psi_auto(datum, p))
    ks = [0] + (list(range(1, datum.gl_n)) if datum.model == "gl" else list(datum.minuscule_indices))
    out = []
    seen = set()
    for psi in psis:
        for k in ks:
            a = ad_tau(datum, k, psi)
            if a.perm in seen:
                continue
            seen.add(a.perm)
            out.append(a)
    cache["autos"] = out
    return out


def psi_label_action(datum: RootDatum, auto: DiagramAuto):
    """How an automorphism moves a coweight label 'omega:k' (ad tau acts trivially on W_0-orbits)."""
    if auto.lmat == datum.identity_matrix:
        return lambda label: label
    if datum.model == "gl":
        n = datum.gl_n

        def act(label):
            mult, k = _split_label(label)
            return f"{'2' if mult == 2 else ''}omega:{n - k}"
        return act
    d = datum.dim
    images = {}
    for i in range(d):
        for r in range(d):
            if auto.lmat[r * d + i]:
                images[i + 1] = r + 1

    def act(label):
        mult, k = _split_label(label)
        return f"{'2' if mult == 2 else ''}omega:{images[k]}"
    return act


def _split_label(label: str) -> tuple[int, int]:
    if label.startswith("2omega:"):
        return 2, int(label.split(":")[1])
    return 1, int(label.split(":")[1])


def dominant_integral(datum: RootDatum, vector) -> tuple[int, ...]:
    """Dominant element of the W_0-orbit of an integral vector (integer arithmetic only)."""
    v = list(vector)
    rng = range(datum.dim)
    fns = datum.simple_fns
    cors = datum.simple_coroots
    while True:
        for fn, cor in zip(fns, cors):
            p = sum(fn[j] * v[j] for j in rng)
            if p < 0:
                v = [v[j] - p * cor[j] for j in rng]
                break
        else:
            return tuple(v)


def dominant_representative(datum: RootDatum, vector) -> tuple[tuple[Fraction, ...], "AffElement"]:
    """Dominant element of the W_0-orbit and u in W_0 with u(dominant) = vector."""
    from .affweyl import identity, simple_reflection
    v = [Fraction(x) for x in vector]
    word = []
    while True:
        for i, (fn, cor) in enumerate(zip(datum.simple_fns, datum.simple_coroots)):
            p = sum((fn[j] * v[j] for j in range(datum.dim)), Fraction(0))
            if p < 0:
                v = [v[j] - p * cor[j] for j in range(datum.dim)]
                word.append(i + 1)
                break
        else:
            break
    u = identity(datum)
    for i in word:
        u = u * simple_reflection(datum, i)
    return tuple(v), u
