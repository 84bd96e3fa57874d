"""Admissible sets, EO elements, sigma-supports and partial conjugation."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

from .affweyl import (
    AffElement,
    bruhat_leq,
    format_word,
    identity,
    is_min_left,
    min_double_coset_rep,
    simple_reflection,
    strip_right,
    translation,
)
from .newton import NewtonPoint, is_sigma_straight, newton_point
from .rootdata import DiagramAuto, RootDatum, RootDatumError, _vertex_perm, get_root_datum, parse_sigma


class QuadrupleError(ValueError):
    pass


# (family, rank) -> allowed coweight labels
def allowed_labels(datum: RootDatum) -> list[str]:
    f, n = datum.family, datum.rank
    if f in ("A", "B"):
        return [f"omega:{i}" for i in range(1, n + 1)]
    if f == "C":
        return [f"omega:{i}" for i in range(1, n + 1)] + [f"2omega:{n}"]
    if f == "D":
        return [f"omega:{i}" for i in (1, n - 1, n)]
    if f == "E" and n == 6:
        return ["omega:1", "omega:6"]
    if f == "E" and n == 7:
        return ["omega:7"]
    if f == "F":
        return ["omega:1"]
    if f == "G":
        return ["omega:2"]
    return []


def element_perm(w: AffElement) -> tuple[int, ...]:
    """Permutation of S~ induced by conjugation with a length-zero element."""
    inv = w.inverse()
    return _vertex_perm(w.datum, lambda x: w * x * inv)


@dataclass(eq=False)
class Quadruple:
    """(W~, lambda, J = S~ - {v}, sigma)."""

    datum: RootDatum
    label: str
    removed: int
    sigma: DiagramAuto
    check_pair: bool = True
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not 0 <= self.removed <= self.datum.rank:
            raise QuadrupleError(f"removed vertex {self.removed} outside 0..{self.datum.rank}")
        if self.sigma.on_vertex(self.removed) != self.removed:
            raise QuadrupleError(f"sigma(v) != v: sigma moves {self.removed} to {self.sigma.on_vertex(self.removed)}")
        if self.check_pair and self.label not in allowed_labels(self.datum):
            raise QuadrupleError(f"({self.datum.name}, {self.label}) is not an admissible pair")

    @classmethod
    def build(cls, family: str, rank: int, label: str, removed: int, sigma: str = "id", check_pair: bool = True):
        try:
            datum = get_root_datum(family, rank)
            sig = parse_sigma(datum, sigma)
        except RootDatumError as exc:
            raise QuadrupleError(str(exc)) from exc
        return cls(datum, label, removed, sig, check_pair)

    @cached_property
    def lam(self) -> tuple[int, ...]:
        return self.datum.coweight(self.label)

    @cached_property
    def J(self) -> frozenset[int]:
        return frozenset(self.datum.vertices) - {self.removed}

    @cached_property
    def tau(self) -> AffElement:
        return strip_right(translation(self.datum, self.lam), self.datum.vertices[1:]).omega_part

    @cached_property
    def tau_perm(self) -> tuple[int, ...]:
        return element_perm(self.tau)

    @cached_property
    def tau_sigma_perm(self) -> tuple[int, ...]:
        """Vertex permutation of w -> tau sigma(w) tau^{-1}."""
        return tuple(self.tau_perm[self.sigma.on_vertex(i)] for i in self.datum.vertices)

    @cached_property
    def orbits(self) -> list[frozenset[int]]:
        """tau sigma-orbits on S~, ordered by smallest element."""
        seen, out = set(), []
        for i in self.datum.vertices:
            if i in seen:
                continue
            orb, j = set(), i
            while j not in orb:
                orb.add(j)
                j = self.tau_sigma_perm[j]
            seen |= orb
            out.append(frozenset(orb))
        return out

    @property
    def name(self) -> str:
        return f"({self.datum.name}~, {self.label}, S~-{{{self.removed}}}, {self.sigma.tag})"

    def key(self) -> tuple:
        return (self.datum.family, self.datum.rank, self.label, self.removed, self.sigma.perm)

    def to_json(self) -> dict:
        return {"family": self.datum.family, "rank": self.datum.rank, "model": self.datum.model,
                "lambda": self.label, "removed_vertex": self.removed, "sigma": self.sigma.tag,
                "sigma_perm": list(self.sigma.perm)}

    def word(self, w: AffElement) -> str:
        """Word rendering with the quadruple's tau written as 'tau'."""
        return format_word(w, {self.tau.key: "tau"})

    def parse(self, text: str) -> AffElement:
        from .affweyl import parse_word
        return parse_word(self.datum, text, self.tau)


# ---------------------------------------------------------------------------
# Admissible set


def extreme_translations(datum: RootDatum, lam) -> list[AffElement]:
    """t^{x(lam)} for x in W_0, one per orbit point."""
    seen = {tuple(lam)}
    frontier = [tuple(lam)]
    while frontier:
        nxt = []
        for v in frontier:
            for fn, cor in zip(datum.simple_fns, datum.simple_coroots):
                p = sum(a * b for a, b in zip(fn, v))
                if p:
                    u = tuple(v[j] - p * cor[j] for j in range(datum.dim))
                    if u not in seen:
                        seen.add(u)
                        nxt.append(u)
        frontier = nxt
    return [translation(datum, v) for v in sorted(seen)]


def in_admissible(w: AffElement, extremes) -> bool:
    if not extremes or w.omega_part != extremes[0].omega_part:
        return False
    return any(bruhat_leq(w, t) for t in extremes)


def admissible_set(datum: RootDatum, lam) -> list[AffElement]:
    """Bruhat-downward closure of {t^{x(lam)}}, sorted by length then word."""
    tops = extreme_translations(datum, lam)
    seen = set(tops)
    frontier = list(tops)
    while frontier:
        nxt = []
        for w in frontier:
            for x in _bruhat_coatoms(w):
                if x not in seen:
                    seen.add(x)
                    nxt.append(x)
        frontier = nxt
    return sorted(seen, key=lambda w: (w.length, w.word))


def _bruhat_coatoms(w: AffElement) -> list[AffElement]:
    """Elements of length l(w)-1 below w: delete one letter of a reduced word."""
    word = w.word
    tau = w.omega_part
    out = set()
    for k in range(len(word)):
        x = tau
        for i in reversed(word[:k] + word[k + 1:]):
            x = simple_reflection(w.datum, i) * x
        if x.length == len(word) - 1:
            out.add(x)
    return list(out)


# ---------------------------------------------------------------------------
# EO elements


@dataclass
class EORecord:
    element: AffElement
    word: str
    length: int
    support: frozenset[int]
    orbit_count: int
    finite_support: bool
    coxeter: bool
    newton: NewtonPoint
    straight: bool

    def to_json(self) -> dict:
        return {"word": self.word, "length": self.length,
                "normal_form": {"lam": list(self.element.lam), "mat": list(self.element.mat)},
                "support": sorted(self.support), "orbit_count": self.orbit_count,
                "finite_support": self.finite_support, "coxeter": self.coxeter,
                "straight": self.straight, "newton": self.newton.to_json()}


def in_adm_J(q: Quadruple, y: AffElement) -> bool:
    m = min_double_coset_rep(y, q.J, q.sigma.on_set(q.J))
    return in_admissible(m, _extremes(q))


def _extremes(q: Quadruple):
    if "extremes" not in q._cache:
        q._cache["extremes"] = extreme_translations(q.datum, q.lam)
    return q._cache["extremes"]


def eo_levels(q: Quadruple):
    """Yield EO^J(mu) level by level (lists sorted by word), starting at tau."""
    J = sorted(q.J)
    level = [q.tau]
    seen = {q.tau}
    while level:
        level.sort(key=lambda w: w.word)
        yield level
        nxt = []
        for x in level:
            for i in q.datum.vertices:
                if x.is_right_descent(i):
                    continue
                y = x.rmul(i)
                if y in seen:
                    continue
                seen.add(y)
                if is_min_left(y, J) and in_adm_J(q, y):
                    nxt.append(y)
        level = nxt


def eo_elements(q: Quadruple) -> list[AffElement]:
    if "eo" not in q._cache:
        q._cache["eo"] = [w for lvl in eo_levels(q) for w in lvl]
    return q._cache["eo"]


def supp_sigma(w: AffElement, q: Quadruple) -> tuple[frozenset[int], bool]:
    if w.omega_part != q.tau:
        raise QuadrupleError("element has the wrong Omega-component")
    letters = set(w.word)
    out = set()
    for i in letters:
        j = i
        while j not in out:
            out.add(j)
            j = q.tau_sigma_perm[j]
    s = frozenset(out)
    return s, len(s) < q.datum.n_vertices


def orbit_count(support, q: Quadruple) -> int:
    return sum(1 for o in q.orbits if o <= support)


def is_sigma_coxeter(w: AffElement, q: Quadruple) -> bool:
    s, _ = supp_sigma(w, q)
    return w.length == orbit_count(s, q)


def is_eo_coxeter(w: AffElement, q: Quadruple) -> bool:
    s, finite = supp_sigma(w, q)
    return finite and w.length == orbit_count(s, q)


def record(w: AffElement, q: Quadruple) -> EORecord:
    s, finite = supp_sigma(w, q)
    oc = orbit_count(s, q)
    p = newton_point(w, q.sigma)
    return EORecord(w, q.word(w), w.length, s, oc, finite, finite and w.length == oc,
                    p, is_sigma_straight(w, q.sigma, p))


@dataclass
class EOData:
    quadruple: Quadruple
    records: list[EORecord]

    @property
    def elements(self) -> list[AffElement]:
        return [r.element for r in self.records]

    @property
    def coxeter(self) -> list[EORecord]:
        return [r for r in self.records if r.coxeter]

    @property
    def non_coxeter(self) -> list[EORecord]:
        return [r for r in self.records if not r.coxeter]

    def to_json(self) -> list[dict]:
        return [r.to_json() for r in self.records]


def eo_set(q: Quadruple) -> EOData:
    if "eodata" not in q._cache:
        q._cache["eodata"] = EOData(q, [record(w, q) for w in eo_elements(q)])
    return q._cache["eodata"]


# ---------------------------------------------------------------------------
# Twisted conjugation by W_J


def conj_simple(w: AffElement, j: int) -> int | None:
    """k with w s_j w^{-1} = s_k, or None."""
    datum = w.datum
    x = w * simple_reflection(datum, j) * w.inverse()
    if x.length != 1:
        return None
    return x.word[0]


def i_jwsigma(J, w: AffElement, sigma: DiagramAuto) -> frozenset[int]:
    """Largest K in J with Ad(w) sigma(K) = K (greatest fixpoint)."""
    J = frozenset(J)
    if not is_min_left(w, J):
        raise QuadrupleError("element is not minimal in its left W_J-coset")
    K = set(J)
    while True:
        keep = set()
        for k in K:
            k2 = conj_simple(w, sigma.on_vertex(k))
            if k2 is not None and k2 in K:
                keep.add(k)
        if keep == K:
            return frozenset(K)
        K = keep


def bedard_sequence(J, w: AffElement, sigma: DiagramAuto) -> list[tuple[frozenset[int], AffElement]]:
    """(J_n, w_n) with w_n minimal in W_{J_n} w W_{sigma(J_n)} and J_{n+1} = J_n cap Ad(w_n) sigma(J_n)."""
    J = frozenset(J)
    if not is_min_left(w, J):
        raise QuadrupleError("element is not minimal in its left W_J-coset")
    seq = []
    seen = set()
    Jn = J
    while True:
        wn = min_double_coset_rep(w, Jn, sigma.on_set(Jn))
        state = (Jn, wn.key)
        if state in seen:
            return seq
        seen.add(state)
        seq.append((Jn, wn))
        nxt = set()
        for j in sigma.on_set(Jn):
            k = conj_simple(wn, j)
            if k is not None and k in Jn:
                nxt.add(k)
        Jn = frozenset(nxt)


def bedard_limit(J, w: AffElement, sigma: DiagramAuto) -> frozenset[int]:
    return bedard_sequence(J, w, sigma)[-1][0]


def _twist(w: AffElement, j: int, sigma: DiagramAuto) -> AffElement:
    d = w.datum
    return simple_reflection(d, j) * w * simple_reflection(d, sigma.on_vertex(j))


def reduce_partial_conjugation(J, w: AffElement, sigma: DiagramAuto) -> tuple[AffElement, list[int]]:
    """Minimal-length element reachable by non-length-increasing moves w -> s_j w sigma(s_j), j in J."""
    J = sorted(J)
    parent: dict = {w: None}
    queue = deque([w])
    best = w
    while queue:
        x = queue.popleft()
        for j in J:
            y = _twist(x, j, sigma)
            if y.length > x.length or y in parent:
                continue
            parent[y] = (x, j)
            if y.length < best.length:
                best = y
            queue.append(y)
    moves = []
    x = best
    while parent[x] is not None:
        x, j = parent[x]
        moves.append(j)
    return best, moves[::-1]


def twisted_orbit(J, x: AffElement, sigma: DiagramAuto, cache: dict | None = None) -> list[AffElement]:
    """{y x sigma(y)^{-1} : y in W_J} (W_J finite)."""
    key = (frozenset(J), x.key, sigma.perm)
    if cache is not None and key in cache:
        return cache[key]
    J = sorted(J)
    seen = {x}
    queue = deque([x])
    while queue:
        z = queue.popleft()
        for j in J:
            y = _twist(z, j, sigma)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    out = sorted(seen, key=lambda z: z.length)
    if cache is not None:
        cache[key] = out
    return out


def leq_J_sigma(J, x: AffElement, w: AffElement, sigma: DiagramAuto, cache: dict | None = None) -> bool:
    """x <=_{J,sigma} w: some y in W_J has y x sigma(y)^{-1} <= w in the Bruhat order."""
    if len(frozenset(J)) >= x.datum.n_vertices:
        raise QuadrupleError("W_J must be finite")
    if not is_min_left(x, J):
        raise QuadrupleError("element is not minimal in its left W_J-coset")
    lw = w.length
    for z in twisted_orbit(J, x, sigma, cache):
        if z.length > lw:
            break
        if bruhat_leq(z, w):
            return True
    return False
