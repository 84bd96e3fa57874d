"""The extended affine Weyl group W~ = X x| W_0.

An element is t^lam u, stored as the translation ``lam`` and the matrix of
``u`` acting on X (plus its inverse).  Lengths, descents and reduced words
come from the affine root functionals of the root datum; the heavy loops
live in :mod:`basiclocus.kernels`.
"""

from __future__ import annotations

import re
from . import kernels
from .rootdata import RootDatum


class WordError(ValueError):
    pass


class AffElement:
    __slots__ = ("datum", "lam", "mat", "minv", "_len", "_hash", "_omega", "_word", "_inv")

    def __init__(self, datum: RootDatum, lam, mat, minv):
        self.datum = datum
        self.lam = lam
        self.mat = mat
        self.minv = minv
        self._len = None
        self._hash = None
        self._omega = None
        self._word = None
        self._inv = None

    @property
    def key(self) -> tuple:
        return (self.lam, self.mat)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.lam, self.mat))
        return self._hash

    def __eq__(self, other):
        return isinstance(other, AffElement) and self.lam == other.lam and self.mat == other.mat

    def __mul__(self, other: "AffElement") -> "AffElement":
        d = self.datum.dim
        lam, mat = kernels.affine_mul(d, self.lam, self.mat, other.lam, other.mat)
        return AffElement(self.datum, lam, mat, kernels.matmul(d, other.minv, self.minv))

    def __pow__(self, k: int) -> "AffElement":
        if k < 0:
            return self.inverse() ** (-k)
        out = identity(self.datum)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "AffElement":
        if self._inv is None:
            d = self.datum.dim
            lam = tuple(-x for x in kernels.matvec(d, self.minv, self.lam))
            inv = AffElement(self.datum, lam, self.minv, self.mat)
            inv._inv = self
            self._inv = inv
        return self._inv

    @property
    def length(self) -> int:
        if self._len is None:
            dt = self.datum
            self._len = kernels.im_length(dt.dim, self.lam, self.mat, dt.pos_fns, dt.rho_check)
        return self._len

    def __len__(self):
        return self.length

    @property
    def is_finite_part_identity(self) -> bool:
        return self.mat == self.datum.identity_matrix

    def left_descents(self) -> tuple[int, ...]:
        dt = self.datum
        return kernels.left_descents(dt.dim, self.lam, self.mat, dt.affine_fns, dt.affine_ks, dt.rho_check)

    def right_descents(self) -> tuple[int, ...]:
        dt = self.datum
        return kernels.right_descents(dt.dim, self.lam, self.minv, dt.affine_fns, dt.affine_ks, dt.rho_check)

    def is_left_descent(self, i: int) -> bool:
        dt = self.datum
        return kernels.is_left_descent(dt.dim, self.lam, self.mat, dt.affine_fns[i], dt.affine_ks[i], dt.rho_check)

    def is_right_descent(self, i: int) -> bool:
        dt = self.datum
        return kernels.is_right_descent(dt.dim, self.lam, self.minv, dt.affine_fns[i], dt.affine_ks[i], dt.rho_check)

    def first_left_descent(self) -> int:
        dt = self.datum
        return kernels.first_left_descent(dt.dim, self.lam, self.mat, dt.affine_fns, dt.affine_ks, dt.rho_check)

    def lmul(self, i: int) -> "AffElement":
        return simple_reflection(self.datum, i) * self

    def rmul(self, i: int) -> "AffElement":
        return self * simple_reflection(self.datum, i)

    @property
    def omega_part(self) -> "AffElement":
        """The length-zero tau with w in W_a tau."""
        if self._omega is None:
            self._reduce()
        return self._omega

    @property
    def word(self) -> tuple[int, ...]:
        """Reduced word (i_1, ..., i_l) with w = s_{i_1} ... s_{i_l} tau, smallest left descent first."""
        if self._word is None:
            self._reduce()
        return self._word

    def _reduce(self):
        index = _WORD_INDEX.get(self.datum.key)
        if index is not None:
            hit = index.get(self.key)
            if hit is not None:
                lam, mat = hit[1]
                self._word = hit[0]
                self._omega = AffElement(self.datum, lam, mat, _inverse_matrix(self.datum, mat))
                self._len = len(hit[0])
                return
            self._reduce_fresh()
            index[self.key] = (self._word, self._omega.key)
            return
        self._reduce_fresh()

    def _reduce_fresh(self):
        word = []
        x = self
        while True:
            i = x.first_left_descent()
            if i < 0:
                break
            word.append(i)
            x = x.lmul(i)
        self._word = tuple(word)
        self._omega = x
        if self._len is None:
            self._len = len(word)

    def coxeter_part(self) -> "AffElement":
        """w tau^{-1}, an element of the affine Weyl group."""
        return self * self.omega_part.inverse()

    def __repr__(self):
        return f"AffElement({format_word(self)})"


def identity(datum: RootDatum) -> AffElement:
    ident = datum.identity_matrix
    e = AffElement(datum, (0,) * datum.dim, ident, ident)
    e._len = 0
    return e


def translation(datum: RootDatum, lam) -> AffElement:
    ident = datum.identity_matrix
    return AffElement(datum, tuple(int(x) for x in lam), ident, ident)


def simple_reflection(datum: RootDatum, i: int) -> AffElement:
    cache = datum._cache.setdefault("simple", {})
    s = cache.get(i)
    if s is None:
        if not 0 <= i <= datum.rank:
            raise WordError(f"s{i} is not a simple reflection of {datum.name}~")
        mat = datum.simple_matrices[i]
        # s_0 = t^{theta^vee} s_theta
        lam = datum.theta.coroot if i == 0 else (0,) * datum.dim
        s = AffElement(datum, lam, mat, mat)
        s._len = 1
        cache[i] = s
    return s


def from_word(datum: RootDatum, word, tau: AffElement | None = None) -> AffElement:
    x = identity(datum)
    for i in word:
        x = x * simple_reflection(datum, i)
    if tau is not None:
        x = x * tau
    return x


def strip_right(w: AffElement, allowed) -> AffElement:
    """Remove right descents in ``allowed`` until none remain."""
    allowed = tuple(allowed)
    while True:
        for i in allowed:
            if w.is_right_descent(i):
                w = w.rmul(i)
                break
        else:
            return w


def strip_left(w: AffElement, allowed) -> AffElement:
    allowed = tuple(allowed)
    while True:
        for i in allowed:
            if w.is_left_descent(i):
                w = w.lmul(i)
                break
        else:
            return w


def min_left_coset_rep(w: AffElement, J) -> AffElement:
    """Minimal element of W_J w."""
    return strip_left(w, sorted(J))


def min_right_coset_rep(w: AffElement, J) -> AffElement:
    """Minimal element of w W_J."""
    return strip_right(w, sorted(J))


def min_double_coset_rep(w: AffElement, J, K) -> AffElement:
    """Minimal element of W_J w W_K."""
    J, K = sorted(J), sorted(K)
    while True:
        x = strip_right(strip_left(w, J), K)
        if x == w:
            return x
        w = x


def is_min_left(w: AffElement, J) -> bool:
    """True when w lies in ^J W~ (no left descents in J)."""
    return not any(w.is_left_descent(i) for i in J)


def max_by_ascents(w: AffElement, left, right) -> AffElement:
    """Greedy ascent to the maximal element of W_left w W_right (both finite parabolics)."""
    left, right = sorted(left), sorted(right)
    while True:
        for i in left:
            if not w.is_left_descent(i):
                w = w.lmul(i)
                break
        else:
            for i in right:
                if not w.is_right_descent(i):
                    w = w.rmul(i)
                    break
            else:
                return w


def longest_element(datum: RootDatum, K) -> AffElement:
    return max_by_ascents(identity(datum), K, ())


# ---------------------------------------------------------------------------
# Bruhat order


def bruhat_leq(x: AffElement, w: AffElement) -> bool:
    """x <= w in the Bruhat order of W~ (needs equal Omega-components)."""
    return _bruhat_cached(x.datum, x.key, w.key, x, w)


_BRUHAT_MEMO: dict = {}
# datum key -> {element key: (reduced word, Omega-part key)}; only active once a cache is loaded
_WORD_INDEX: dict = {}


def _inverse_matrix(datum: RootDatum, mat) -> tuple:
    """Inverse of a finite-part matrix (a Weyl group element has finite order)."""
    d = datum.dim
    prev, cur = datum.identity_matrix, mat
    while cur != datum.identity_matrix:
        prev, cur = cur, kernels.matmul(d, cur, mat)
    return prev


def _bruhat_cached(datum, xk, wk, x, w) -> bool:
    memo = _BRUHAT_MEMO.setdefault(datum.key, {})
    k = (xk, wk)
    r = memo.get(k)
    if r is None:
        r = _bruhat(x, w)
        if len(memo) > 1 << 20:
            memo.clear()
        memo[k] = r
    return r


def _bruhat(x: AffElement, w: AffElement) -> bool:
    lx, lw = x.length, w.length
    while True:
        if lx > lw:
            return False
        if lx == lw:
            return x == w
        if lx == 0:
            return x == w.omega_part
        i = w.first_left_descent()
        w = w.lmul(i)
        lw -= 1
        if x.is_left_descent(i):
            x = x.lmul(i)
            lx -= 1


def clear_caches() -> None:
    _BRUHAT_MEMO.clear()
    _WORD_INDEX.clear()


# ---------------------------------------------------------------------------
# Words


_TOKEN = re.compile(
    r"\s*(?:"
    r"s\[(?P<a>\d+)\.\.(?P<b>\d+)\](?P<inv>\^-1)?"
    r"|s_?\{?(?P<s>\d+)\}?"
    r"|(?P<tau>tau(?::(?P<k>\d+))?)"
    r"|(?P<one>1)"
    r")\s*\*?"
)


def _interval(a: int, b: int) -> list[int]:
    # s[a..b] = s_a s_{a-1} ... s_b when a >= b, otherwise empty
    return list(range(a, b - 1, -1)) if a >= b else []


def parse_word(datum: RootDatum, text: str, tau: AffElement | None = None) -> AffElement:
    """Parse words such as ``s0 s[3..2]^-1 s1 tau`` or ``s0s1tau:1``.

    A bare ``tau`` stands for the supplied default Omega element.
    """
    from .rootdata import omega_element
    pos = 0
    text = text.strip()
    x = identity(datum)
    if not text:
        return x
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise WordError(f"cannot parse word at {text[pos:]!r}")
        pos = m.end()
        if m.group("a") is not None:
            seq = _interval(int(m.group("a")), int(m.group("b")))
            if m.group("inv"):
                seq = seq[::-1]
            for i in seq:
                x = x * simple_reflection(datum, i)
        elif m.group("s") is not None:
            x = x * simple_reflection(datum, int(m.group("s")))
        elif m.group("tau") is not None:
            if m.group("k") is not None:
                x = x * omega_element(datum, int(m.group("k"))).element
            else:
                if tau is None:
                    raise WordError("bare 'tau' needs a default Omega element")
                x = x * tau
    return x


def format_word(w: AffElement, tau_names: dict | None = None) -> str:
    """``s0 s1 tau:1`` style rendering; the identity is ``1``."""
    parts = [f"s{i}" for i in w.word]
    om = w.omega_part
    if om.lam != (0,) * w.datum.dim or om.mat != w.datum.identity_matrix:
        name = None
        if tau_names:
            name = tau_names.get(om.key)
        if name is None:
            name = _omega_name(w.datum, om)
        parts.append(name)
    return " ".join(parts) if parts else "1"


def _omega_name(datum: RootDatum, om: AffElement) -> str:
    from .rootdata import omega_group
    for o in omega_group(datum):
        if o.element == om:
            return o.name
    return "tau?"


def bfs_length_oracle(datum: RootDatum, w: AffElement, radius: int) -> int | None:
    """Length of w by breadth-first search in the Cayley graph (for testing)."""
    target_tau = w.omega_part
    frontier = {target_tau}
    seen = {target_tau}
    for r in range(radius + 1):
        if w in frontier:
            return r
        nxt = set()
        for x in frontier:
            for i in datum.vertices:
                y = x.lmul(i)
                if y not in seen:
                    seen.add(y)
                    nxt.add(y)
        frontier = nxt
    return None
