"""Published classification values, written as generators over the rank.

Everything here is an independent statement of expected results (words,
Newton vectors, table rows); nothing is derived from the computations in
the rest of the package.  Words use the syntax of
:func:`basiclocus.affweyl.parse_word`; a bare ``tau`` is the Omega-part of
``t^lambda``.  Newton vectors are in reporting coordinates (GL entries or
eps-coordinates).
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, gcd

F = Fraction


def rep(value, count):
    return [F(value)] * count


# ---------------------------------------------------------------------------
# Coxeter-type quadruples: (family, rank, label, removed vertex, sigma)


def coxeter_type_rows(max_rank: int) -> list[tuple]:
    rows = []
    for n in range(1, max_rank + 1):
        rows.append(("A", n, "omega:1", 0, "id"))
        if n >= 2:
            rows.append(("A", n, "omega:1", 0, "sigma0"))
        if n >= 3:
            rows += [("B", n, "omega:1", 0, "id"), ("B", n, "omega:1", n, "id"), ("B", n, "omega:1", n, "tau:1")]
        if n >= 2:
            rows.append(("C", n, "omega:1", 0, "id"))
        if n >= 4:
            rows += [("D", n, "omega:1", 0, "id"), ("D", n, "omega:1", 0, "sigma0")]
    if max_rank >= 3:
        rows += [("A", 3, "omega:2", 0, "id"), ("A", 3, "omega:2", 0, "sigma0")]
    if max_rank >= 2:
        rows += [("C", 2, "omega:2", 0, "id"), ("C", 2, "omega:2", 1, "id"), ("C", 2, "omega:2", 1, "tau:2")]
    return rows


# Rows of the smoothness table: row -> all closures smooth
SMOOTH_MARKS = {
    ("A", "omega:1", 0, "id"): True,
    ("A", "omega:1", 0, "sigma0"): True,
    ("B", "omega:1", "n", "id"): False,
    ("B", "omega:1", "n", "tau:1"): False,
    ("C", "omega:1", 0, "id"): False,
    ("A3", "omega:2", 0, "id"): True,
    ("A3", "omega:2", 0, "sigma0"): True,
    ("C2", "omega:2", 0, "id"): True,
    ("C2", "omega:2", 1, "id"): True,
    ("C2", "omega:2", 1, "tau:2"): False,
}


def smooth_mark(family: str, rank: int, label: str, removed: int, sigma: str):
    """True/False for rows of the smoothness table, None for rows outside it."""
    specific = (f"{family}{rank}", label, removed, sigma)
    if specific in SMOOTH_MARKS:
        return SMOOTH_MARKS[specific]
    generic = (family, label, "n" if family == "B" and removed == rank else removed, sigma)
    return SMOOTH_MARKS.get(generic)


# ---------------------------------------------------------------------------
# EO lists and Newton vectors for the Coxeter-type rows


def _gl_omega1_id(n):
    cox = ["tau"]
    non = [(f"s0 s[{n - 1}..{i}] tau", rep(F(1, i - 1), i - 1) + rep(0, n - i + 1)) for i in range(2, n + 1)]
    return cox, non


def _gl_omega1_sigma0(n):
    cox = ["tau"] + [f"s0 s[{n - 1}..{j}] tau" for j in range(ceil((n + 3) / 2), n + 1)]
    non = []
    for i in range(2, ceil((n + 1) / 2) + 1):
        nu = rep(F(i, 2 * (i - 1)), i - 1) + rep(F(1, 2), n - 2 * i + 2) + rep(F(i - 2, 2 * (i - 1)), i - 1)
        non.append((f"s0 s[{n - 1}..{i}] tau", nu))
    return cox, non


def _b_s_id(n):
    cox = ["tau"] + [f"s0 s[{k}..2]^-1 tau" for k in range(1, n)]
    non = [(f"s0 s[{n}..2]^-1 tau s[{n - 1}..{i}]", rep(F(1, i), i) + rep(0, n - i)) for i in range(1, n + 1)]
    return cox, non


def _b_sn_cox(n):
    return ["tau"] + [f"s[{n}..{k}] tau" for k in range(n, 1, -1)]


def _b_sn_tail(n, lo):
    return [(f"s[{n}..0] s[{i}..2]^-1 tau", rep(F(1, n - i), n - i) + rep(0, i)) for i in range(lo, n)]


def _b_sn_id(n, corrected=True):
    cox = _b_sn_cox(n)
    non = [(f"s[{n}..2] s1 tau", rep(F(1, n), n)), (f"s[{n}..2] s0 tau", rep(F(1, n), n))]
    # the printed list starts the tail at i = 2; i = 1 belongs to the same EO set (see ERRATA)
    non += _b_sn_tail(n, 1 if corrected else 2)
    return cox, non


def _b_sn_tau1(n):
    cox = _b_sn_cox(n) + [f"s[{n}..2] s1 tau", f"s[{n}..2] s0 tau"]
    return cox, _b_sn_tail(n, 1)


def _c_s_id(n):
    cox = ["1"] + [" ".join(f"s{j}" for j in range(k + 1)) for k in range(n)]
    non = [(f"s[{n}..0]^-1 s[{n - 1}..{i}]", rep(F(1, i), i) + rep(0, n - i)) for i in range(1, n + 1)]
    return cox, non


def _d_s_id(n, corrected=True):
    cox = ["tau"] + [f"s0 s[{k}..2]^-1 tau" for k in range(1, n - 1)]
    # the two length-(n-1) elements are swapped by the n-1 <-> n diagram symmetry, so their
    # Newton points differ by the sign of the last coordinate
    last = rep(F(1, n), n - 1) + [F(-1, n)] if corrected else rep(F(1, n), n)
    non = [(f"s0 s[{n - 2}..2]^-1 s{n - 1} tau", rep(F(1, n), n)), (f"s0 s[{n - 2}..2]^-1 s{n} tau", last)]
    non += [(f"s0 s[{n}..2]^-1 tau s[{n - 2}..{i}]", rep(F(1, i), i) + rep(0, n - i)) for i in range(1, n)]
    return cox, non


def _d_s_sigma0(n):
    cox = ["tau"] + [f"s0 s[{k}..2]^-1 tau" for k in range(1, n)] + [f"s0 s[{n - 2}..2]^-1 s{n} tau"]
    non = [(f"s0 s[{n}..2]^-1 tau s[{n - 2}..{i}]", rep(F(1, i), i) + rep(0, n - i)) for i in range(1, n)]
    return cox, non


GL4_OMEGA2 = {
    "s0 s1 tau": [F(2, 3)] * 3 + [F(0)],
    "s0 s3 tau": [F(1)] + [F(1, 3)] * 3,
    "s0 s1 s3 tau": [F(1), F(1, 2), F(1, 2), F(0)],
    "s0 s1 s3 s0 tau": [F(1), F(1), F(0), F(0)],
}


def eo_lists(family: str, rank: int, label: str, removed: int, sigma: str, corrected: bool = True):
    """(Coxeter words, [(non-Coxeter word, nu)]) for a Coxeter-type row, or None."""
    n = rank
    key = (family, label, removed, sigma)
    if family == "A" and label == "omega:1" and removed == 0:
        if sigma == "id":
            return _gl_omega1_id(n + 1)
        if sigma == "sigma0":
            return _gl_omega1_sigma0(n + 1)
    if family == "A" and n == 3 and label == "omega:2" and removed == 0:
        if sigma == "id":
            return ["tau", "s0 tau"], list(GL4_OMEGA2.items())
        if sigma == "sigma0":
            return (["tau", "s0 tau", "s0 s1 tau", "s0 s3 tau"],
                    [(w, GL4_OMEGA2[w]) for w in ("s0 s1 s3 tau", "s0 s1 s3 s0 tau")])
    if family == "B" and label == "omega:1":
        if key == ("B", "omega:1", 0, "id"):
            return _b_s_id(n)
        if removed == n and sigma == "id":
            return _b_sn_id(n, corrected)
        if removed == n and sigma == "tau:1":
            return _b_sn_tau1(n)
    if key == ("C", "omega:1", 0, "id"):
        return _c_s_id(n)
    if family == "D" and label == "omega:1" and removed == 0:
        if sigma == "id":
            return _d_s_id(n, corrected)
        if sigma == "sigma0":
            return _d_s_sigma0(n)
    if family == "C" and n == 2 and label == "omega:2":
        half = [F(1, 2), F(0)]
        both = [F(1, 2), F(1, 2)]
        if removed == 0 and sigma == "id":
            return ["tau", "s0 tau"], [("s0 s1 tau", half), ("s0 s1 s0 tau", both)]
        if removed == 1 and sigma == "id":
            non = [("s1 s0 tau", half), ("s1 s2 s0 tau", both)]
            if corrected:
                non.insert(1, ("s1 s2 tau", half))
            return ["tau", "s1 tau"], non
        if removed == 1 and sigma == "tau:2":
            return ["tau", "s1 tau", "s1 s2 tau", "s1 s0 tau"], [("s1 s2 s0 tau", both)]
    return None


ERRATA = [
    "(C2~, omega:2, S~-{1}, id): the printed non-Coxeter list omits s1 s2 tau although its Newton "
    "vector is stated and the same EO set appears in the tau:2 case; s1 s2 tau is added.",
    "(Bn~, omega:1, S~-{n}, id): the printed tail s[n..0] s[i..2]^-1 tau starts at i = 2, while the "
    "tau:1 case (same J, hence same EO set) starts at i = 1; i = 1 is added.",
    "(Dn~, omega:1, S, id): s0 s[n-2..2]^-1 s(n-1) tau and s0 s[n-2..2]^-1 s(n) tau are exchanged by the "
    "n-1 <-> n symmetry, so their Newton points cannot both be (1/n,...,1/n); the second is "
    "(1/n,...,1/n,-1/n).",
]


# ---------------------------------------------------------------------------
# Elements for which (CC) fails


def _case(family, rank, label, removed, sigma, words, note, corrected=None):
    """``words`` are the printed alternatives; ``corrected`` is a repaired reading, when the printed one is defective."""
    return {"family": family, "rank": rank, "label": label, "removed": removed,
            "sigma": sigma, "words": list(words), "note": note, "corrected": corrected}


def witness_cases(max_rank: int) -> list[dict]:
    out = []
    # GL_n = A_{n-1}, J = S
    for rank in range(1, max_rank + 1):
        n = rank + 1
        for i in range(2, n // 2 + 1):
            lab = f"omega:{i}"
            if 2 * i < n:
                out.append(_case("A", rank, lab, 0, "id", [f"s0 s[{n - 1}..{n - gcd(n, i)}] tau"], "GL id, 2<=i<n/2"))
            elif i >= 3:
                out.append(_case("A", rank, lab, 0, "id", [f"s0 s1 s{n - 1} s0 tau"], "GL id, i=n/2>=3"))
            if i >= 3 or n > 4:
                out.append(_case("A", rank, lab, 0, "sigma0", [f"s0 s1 s{n - 1} s0 tau"], "GL sigma0"))
    # B_n
    for n in range(3, max_rank + 1):
        for k in range(1, n + 1):
            lab = f"omega:{k}"
            for i in range(2, n):
                for sig in ("id", "tau:1"):
                    out.append(_case("B", n, lab, i, sig, [f"s[{n}..{i}]^-1 s[{n - 1}..{i}] tau"], "B, J=S~-{i}, i not in {0,1,n}"))
            if k % 2 == 0:
                out.append(_case("B", n, lab, 0, "id", [f"s0 s[{n}..2]^-1 s[{n - 1}..2] s0"], "B, J=S, tau=1"))
            elif k >= 3:
                out.append(_case("B", n, lab, 0, "id", ["s0 s2 s1 tau"], "B, J=S, tau=tau1, mu>omega1"))
            if k >= 2:
                for sig in ("id", "tau:1"):
                    out.append(_case("B", n, lab, n, sig, [f"s{n} s{n - 1} s{n} tau"], "B, J=S~-{n}, mu>omega1"))
    # C_n
    for n in range(2, max_rank + 1):
        case1 = [f"omega:{k}" for k in range(1, n)] + [f"2omega:{n}"]
        for lab in case1:
            for i in range(1, n // 2 + 1):
                sigmas = ["id"] + (["tau:" + str(n)] if 2 * i == n else [])
                for sig in sigmas:
                    fix = [f"s[{i}..0] s[{i}..1]^-1 tau"] if i >= 2 else None
                    out.append(_case("C", n, lab, i, sig, [f"s[{i}..0] s[1..{i}] tau"], "C case 1, i!=0", fix))
            if lab != "omega:1":
                out.append(_case("C", n, lab, 0, "id", ["s0 s1 s0"], "C case 1, mu>omega1"))
        lab = f"omega:{n}"
        for i in range(1, n // 2 + 1):
            if 2 * i < n:
                out.append(_case("C", n, lab, i, "id", [f"s[{n - i}..{i}]^-1 tau"], "C omega_n, 0<i<n/2"))
            elif i > 1:
                for sig in ("id", f"tau:{n}"):
                    out.append(_case("C", n, lab, i, sig, [f"s{i} s{i + 1} s{i - 1} s{i} tau"], "C omega_n, i=n/2>1"))
        if n > 2:
            out.append(_case("C", n, lab, 0, "id", ["s0 s1 s0 tau"], "C omega_n, i=0, n>2"))
    # D_n
    for n in range(4, max_rank + 1):
        for i in range(2, n // 2 + 1):
            for sig in ("id", "sigma0"):
                out.append(_case("D", n, "omega:1", i, sig, [f"s[{n}..{i}]^-1 s[{n - 2}..{i}] tau"], "D omega1, i!=0"))
        if n == 4:
            for p in ("psi:3,2,1,4", "psi:4,2,3,1", "psi:3,2,4,1", "psi:4,2,1,3"):
                out.append(_case("D", 4, "omega:1", 0, p,
                                 ["s0 s2 s3", "s0 s2 s4", "s0 s2 s3 tau", "s0 s2 s4 tau"], "D4, sigma(1)!=1"))
        lab = f"omega:{n}"
        for i in range(2, n // 2 + 1):
            if 2 * i < n:
                out.append(_case("D", n, lab, i, "id", [f"s[{n - i}..{i}]^-1 tau"], "D omega_n, 2<=i<n/2"))
            else:
                out.append(_case("D", n, lab, i, "id", [f"s{i} s{i + 1} s{i - 1} s{i} tau"], "D omega_n, i=n/2"))
        if n > 4:
            out.append(_case("D", n, lab, 0, "id", ["s0 s2 s1 tau", "s0 s2 s1 s0 tau"], "D omega_n, J=S, n>4"))
    # E6/E7: the printed words verify with the minuscule coweight whose tau sends 0 to the
    # far end of the long arm (omega:6, omega:7 in Bourbaki labels)
    if max_rank >= 6:
        out += [
            _case("E", 6, "omega:6", 0, "id", ["s0 s2 s4 s3 s1 tau"], "E6, J=S"),
            _case("E", 6, "omega:6", 2, "id", ["s2 s4 s5 tau", "s2 s4 s3 tau"], "E6, J=S~-{2}"),
            _case("E", 6, "omega:6", 4, "id", ["s4 s3 s5 s4 tau"], "E6, J=S~-{4}"),
        ]
    if max_rank >= 7:
        e7 = {0: "s0 s1 s3 s4 s2 s5 s4 s3 s1 s0 tau", 1: "s1 s3 s4 s5 s6 tau", 2: "s2 s4 s3 s5 s4 s2 tau",
              3: "s3 s4 s5 tau", 4: "s4 s2 s5 s4 tau"}
        out += [_case("E", 7, "omega:7", v, "id", [w], f"E7, J=S~-{{{v}}}") for v, w in e7.items()]
    if max_rank >= 4:
        f4 = {0: "s0 s1 s2 s3 s2 s1", 1: "s1 s2 s3 s2", 2: "s2 s3 s2", 3: "s3 s2 s3", 4: "s4 s3 s2 s3"}
        out += [_case("F", 4, "omega:1", v, "id", [w], f"F4, J=S~-{{{v}}}") for v, w in f4.items()]
    if max_rank >= 2:
        g2 = {0: "s0 s2 s1 s2", 1: "s1 s2 s1 s0", 2: "s2 s1 s2 s0"}
        out += [_case("G", 2, "omega:2", v, "id", [w], f"G2, J=S~-{{{v}}}") for v, w in g2.items()]
    return out


# ---------------------------------------------------------------------------
# Basic-locus examples


def basic_locus_examples(max_m: int = 5) -> list[dict]:
    out = []
    for m in range(2, max_m + 1):
        out.append({"quadruple": ("C", m, "omega:1", m, "id"), "count": m + 1,
                    "dims": list(range(m + 1)), "note": "m+1 strata, dimensions 0..m"})
    out.append({"quadruple": ("C", 2, "omega:2", 1, "tau:2"), "count": 4,
                "dims": [0, 1, 2, 2], "note": "m=2: m+2 strata, two of top dimension"})
    for m in range(3, max_m + 1):
        out.append({"quadruple": ("B", m, "omega:1", m, "tau:1"), "count": m + 2,
                    "dims": list(range(m)) + [m, m], "note": "m+2 strata, two of top dimension"})
    out.append({"quadruple": ("C", 2, "omega:1", 1, "id"), "count": 6, "dims": [0, 1, 2, 2, 3, 3],
                "words": ["1", "s1", "s1 s0", "s1 s2", "s1 s0 s1", "s1 s2 s1"], "note": "non-Coxeter example"})
    return out


def b_tau1_triples(m: int) -> list[tuple[frozenset, frozenset, frozenset]]:
    """(Sigma, Sigma-flat, Sigma-sharp) for (B_m~, omega:1, S~-{m}, tau:1)."""
    out = []
    for i in range(m, 1, -1):
        out.append((frozenset({i}), frozenset(range(i + 1, m + 1)), frozenset(range(0, i))))
    out.append((frozenset({0}), frozenset(range(1, m + 1)), frozenset()))
    out.append((frozenset({1}), frozenset(range(2, m + 1)) | {0}, frozenset()))
    out.append((frozenset({0, 1}), frozenset(range(2, m + 1)), frozenset()))
    return out


# ---------------------------------------------------------------------------
# Golden document


def _fr(x) -> str:
    x = F(x)
    return f"{x.numerator}/{x.denominator}"


def quad_id(family, rank, label, removed, sigma) -> str:
    return f"{family}|{rank}|{label}|{removed}|{sigma}"


def golden_document(max_rank: int = 7) -> dict:
    """Everything above, serialised; shipped as data/golden.json."""
    rows = coxeter_type_rows(max_rank)
    eo = {}
    for row in rows:
        printed = eo_lists(*row, corrected=False)
        fixed = eo_lists(*row, corrected=True)
        if printed is None:
            continue
        eo[quad_id(*row)] = {
            "coxeter": printed[0],
            "non_coxeter": [{"word": w, "nu": [_fr(x) for x in nu]} for w, nu in printed[1]],
            "corrected_non_coxeter": [{"word": w, "nu": [_fr(x) for x in nu]} for w, nu in fixed[1]],
        }
    smooth = {}
    for row in rows:
        m = smooth_mark(*row)
        if m is not None:
            smooth[quad_id(*row)] = m
    return {
        "max_rank": max_rank,
        "coxeter_type_rows": [list(r) for r in rows],
        "eo_lists": eo,
        "witnesses": witness_cases(max_rank),
        "basic_locus": [dict(e, quadruple=list(e["quadruple"])) for e in basic_locus_examples(5)],
        "b_tau1_triples": {str(m): [[sorted(a), sorted(b), sorted(c)] for a, b, c in b_tau1_triples(m)]
                           for m in range(3, 6)},
        "smooth_marks": smooth,
        "errata": ERRATA,
    }
