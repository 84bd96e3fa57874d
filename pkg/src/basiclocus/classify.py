"""Coxeter-type decisions, the classification sweep, strata of the basic locus."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .affweyl import AffElement, WordError, format_word, is_min_left, longest_element, max_by_ascents
from .eo import (
    EOData,
    EORecord,
    Quadruple,
    QuadrupleError,
    allowed_labels,
    bedard_limit,
    eo_elements,
    eo_levels,
    eo_set,
    i_jwsigma,
    in_adm_J,
    is_sigma_coxeter,
    leq_J_sigma,
    record,
    supp_sigma,
)
from .newton import NewtonClass, frac_str, newton_order, newton_point
from .rootdata import RootDatum, all_automorphisms, get_root_datum, psi_label_action


# ---------------------------------------------------------------------------
# Verdicts


@dataclass
class Verdict:
    quadruple: Quadruple
    cc_holds: bool
    csc_holds: bool
    witness: EORecord | None
    csc_failure: EORecord | None
    complete: bool                      # whole EO set enumerated
    eo: EOData | None = None

    @property
    def coxeter_type(self) -> bool:
        return self.csc_holds

    @property
    def coherent(self) -> bool:
        """csc implies cc, and cc agrees with csc."""
        return (not self.csc_holds or self.cc_holds) and self.cc_holds == self.csc_holds

    def to_json(self, q_word=None) -> dict:
        q = self.quadruple
        out = {"quadruple": q.to_json(), "cc": self.cc_holds, "csc": self.csc_holds,
               "coxeter_type": self.coxeter_type, "coherent": self.coherent}
        if self.witness is not None:
            out["witness"] = self.witness.word
        if self.eo is not None:
            out["eo"] = self.eo.to_json()
        return out


def check_conditions(q: Quadruple, full: bool = False) -> Verdict:
    """Evaluate (CC) and (CSC) over EO^J(mu), level by level.

    Unless ``full`` is set, enumeration stops after the first length level
    containing a (CC) failure; such an element is neither sigma-Coxeter nor
    straight (central Newton point, positive length), so (CSC) fails too.
    """
    cc_fail: list[EORecord] = []
    csc_fail: list[EORecord] = []
    records: list[EORecord] = []
    complete = True
    for level in eo_levels(q):
        for w in level:
            rec = record(w, q)
            records.append(rec)
            if rec.newton.is_central and not is_sigma_coxeter(w, q):
                cc_fail.append(rec)
            if not rec.coxeter and not rec.straight:
                csc_fail.append(rec)
        if cc_fail and not full:
            complete = False
            break
    witness = cc_fail[0] if cc_fail else None
    verdict = Verdict(q, not cc_fail, not csc_fail, witness, csc_fail[0] if csc_fail else None, complete)
    if complete:
        verdict.eo = EOData(q, records)
        q._cache.setdefault("eodata", verdict.eo)
    return verdict


# ---------------------------------------------------------------------------
# Sweep


SWEEP_TYPES = [("A", None), ("B", None), ("C", None), ("D", None), ("E", 6), ("E", 7), ("F", 4), ("G", 2)]
MIN_RANK = {"A": 1, "B": 3, "C": 2, "D": 4}


def sweep_types(max_rank: int) -> list[tuple[str, int]]:
    out = []
    for fam, fixed in SWEEP_TYPES:
        if fixed is not None:
            if fixed <= max_rank:
                out.append((fam, fixed))
        else:
            out += [(fam, n) for n in range(MIN_RANK[fam], max_rank + 1)]
    return out


def canonical_key(q: Quadruple) -> tuple:
    """Minimum of (label, removed vertex, sigma permutation) over all automorphisms of the affine diagram."""
    datum = q.datum
    best = None
    for phi in all_automorphisms(datum):
        lab = psi_label_action(datum, phi)(q.label)
        v = phi.perm[q.removed]
        conj = [0] * datum.n_vertices
        for i in datum.vertices:
            conj[phi.perm[i]] = phi.perm[q.sigma.perm[i]]
        key = (lab, v, tuple(conj))
        if best is None or key < best:
            best = key
    return (datum.family, datum.rank) + best


def quadruples(max_rank: int) -> list[Quadruple]:
    """One representative per automorphism class of valid quadruples."""
    out = []
    for fam, rank in sweep_types(max_rank):
        datum = get_root_datum(fam, rank)
        autos = all_automorphisms(datum)
        seen = set()
        for label in allowed_labels(datum):
            for v in datum.vertices:
                for sigma in autos:
                    if sigma.on_vertex(v) != v:
                        continue
                    q = Quadruple(datum, label, v, sigma)
                    k = canonical_key(q)
                    if k in seen:
                        continue
                    seen.add(k)
                    out.append(q)
    return out


def quadruple_from_row(row) -> Quadruple:
    fam, rank, label, v, sig = row
    return Quadruple.build(fam, rank, label, v, sig)


@dataclass
class SweepRow:
    key: tuple
    spec: dict
    cc: bool
    csc: bool
    coxeter_type: bool
    coherent: bool
    witness: str | None
    name: str

    def to_json(self) -> dict:
        return {"quadruple": self.spec, "cc": self.cc, "csc": self.csc, "coxeter_type": self.coxeter_type,
                "coherent": self.coherent, "witness": self.witness}


def _sweep_one(spec):
    fam, rank, label, v, perm = spec
    datum = get_root_datum(fam, rank)
    sigma = next(a for a in all_automorphisms(datum) if a.perm == perm)
    q = Quadruple(datum, label, v, sigma)
    vd = check_conditions(q)
    return SweepRow(canonical_key(q), q.to_json(), vd.cc_holds, vd.csc_holds, vd.coxeter_type, vd.coherent,
                    vd.witness.word if vd.witness else None, q.name)


def sweep(max_rank: int, jobs: int = 1) -> list[SweepRow]:
    if max_rank < 1:
        return []
    specs = [(q.datum.family, q.datum.rank, q.label, q.removed, q.sigma.perm) for q in quadruples(max_rank)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            rows = list(ex.map(_sweep_one, specs, chunksize=4))
    else:
        rows = [_sweep_one(s) for s in specs]
    return sorted(rows, key=lambda r: _sort_key(r.key))


def _sort_key(k):
    return tuple(str(x) if not isinstance(x, int) else f"{x:04d}" for x in k)


def expected_positive_keys(rows) -> set:
    return {canonical_key(quadruple_from_row(r)) for r in rows}


# ---------------------------------------------------------------------------
# Witnesses


@dataclass
class WitnessReport:
    word: str
    parsed: bool
    right_component: bool
    in_eo: bool
    central: bool
    coxeter: bool
    newton: str = ""
    error: str = ""

    @property
    def confirmed(self) -> bool:
        return self.parsed and self.right_component and self.in_eo and self.central and not self.coxeter

    @property
    def status(self) -> str:
        if not self.parsed:
            return "unparseable"
        if not self.right_component or not self.in_eo:
            return "not-an-EO-element"
        if not self.central:
            return "non-central"
        if self.coxeter:
            return "sigma-coxeter"
        return "confirmed"

    def to_json(self) -> dict:
        return {"word": self.word, "status": self.status, "in_eo": self.in_eo, "central": self.central,
                "coxeter": self.coxeter, "newton": self.newton, "error": self.error}


def verify_witness(q: Quadruple, word: str) -> WitnessReport:
    try:
        w = q.parse(word)
    except WordError as exc:
        return WitnessReport(word, False, False, False, False, False, error=str(exc))
    if w.omega_part != q.tau:
        return WitnessReport(word, True, False, False, False, False, error="wrong Omega-component")
    in_eo = is_min_left(w, q.J) and in_adm_J(q, w)
    p = newton_point(w, q.sigma)
    return WitnessReport(word, True, True, in_eo, p.is_central, is_sigma_coxeter(w, q), newton=str(p))


# ---------------------------------------------------------------------------
# Newton data


def newton_table(q: Quadruple) -> list[dict]:
    rows = []
    for r in eo_set(q).non_coxeter:
        if r.straight:
            rows.append({"word": r.word, "length": r.length, "nu": [frac_str(x) for x in r.newton.coords],
                         "system": q.datum.output_system, "kappa": q.word(r.element.omega_part)})
    return rows


def newton_classes(q: Quadruple) -> list[NewtonClass]:
    data = eo_set(q)
    out = [NewtonClass(newton_point(q.tau, q.sigma), q.tau)]
    out += [NewtonClass(r.newton, r.element) for r in data.non_coxeter if r.straight]
    return out


# ---------------------------------------------------------------------------
# Basic locus


def basic_locus_eo(q: Quadruple) -> list[dict]:
    """Label each EO element basic (finite sigma-support), nonbasic (straight, non-central) or undecided."""
    out = []
    for r in eo_set(q).records:
        if r.finite_support:
            lab = "basic"
        elif r.straight and not r.newton.is_central:
            lab = "nonbasic"
        else:
            lab = "undecided"
        out.append({"word": r.word, "length": r.length, "label": lab, "coxeter": r.coxeter})
    return out


# ---------------------------------------------------------------------------
# Strata of the basic locus


@dataclass
class StratumDatum:
    sigma_set: frozenset[int]
    flat: frozenset[int]
    sharp: frozenset[int]
    distance: int
    element: AffElement | None
    word: str | None
    failures: list[str] = field(default_factory=list)

    @property
    def tag(self) -> str:
        return f"J_tau/(J_tau cap P_{{S~-{sorted(self.sigma_set)}}})"

    def to_json(self) -> dict:
        return {"sigma": sorted(self.sigma_set), "flat": sorted(self.flat), "sharp": sorted(self.sharp),
                "d": self.distance, "w": self.word,
                "length": self.element.length if self.element is not None else None,
                "components": self.tag, "failures": self.failures}


@dataclass
class StrataReport:
    quadruple: Quadruple
    variant: str
    strata: list[StratumDatum]
    bijective: bool
    failures: list[str]
    alternatives: dict

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"variant_used": self.variant, "bijective": self.bijective, "failures": self.failures,
                "strata": [s.to_json() for s in self.strata],
                "variant_failures": {k: v for k, v in self.alternatives.items()}}


CLAUSES = {
    "1": "partition S~ = Sigma + flat + sharp",
    "2": "flat and sharp disconnected",
    "3a": "unique Coxeter EO element with support flat",
    "3b": "length of w_Sigma equals d(Sigma)",
    "4": "I(J, w_Sigma, sigma) = sharp",
}


def vertex_distances(q: Quadruple) -> dict[int, int]:
    return q.datum.distances_from(q.removed)


def index_set(q: Quadruple, variant: str) -> tuple[list[frozenset[int]], dict]:
    """Elements of the stratum index set and the distance of each orbit.

    ``literal``: unions of orbits on which the distance is constant.
    ``min``: every orbit gets the minimum distance of its vertices.
    """
    dist = vertex_distances(q)
    odist = {}
    for o in q.orbits:
        ds = {dist[v] for v in o}
        if variant == "literal" and len(ds) > 1:
            odist[o] = None
        else:
            odist[o] = min(ds)
    by_d: dict[int, list[frozenset[int]]] = {}
    for o, d in odist.items():
        if d is not None:
            by_d.setdefault(d, []).append(o)
    sets = []
    for d in sorted(by_d):
        orbs = by_d[d]
        for r in range(1, len(orbs) + 1):
            for combo in itertools.combinations(orbs, r):
                sets.append(frozenset().union(*combo))
    full_d = {o: (min(dist[v] for v in o) if d is None else d) for o, d in odist.items()}
    return sets, full_d


def _set_distance(sigma_set, odist):
    return min(d for o, d in odist.items() if o <= sigma_set)


def strata_for_variant(q: Quadruple, variant: str) -> tuple[list[StratumDatum], bool, list[str]]:
    data = eo_set(q)
    cox = data.coxeter
    sets, odist = index_set(q, variant)
    if not sets:
        return [], False, ["index set is empty"]
    strata = []
    failures = []
    edges = q.datum.diagram.edges
    for S in sets:
        d = _set_distance(S, odist)
        flat = frozenset().union(*[o for o, dd in odist.items() if dd <= d and not o <= S] or [frozenset()])
        sharp = frozenset().union(*[o for o, dd in odist.items() if dd > d] or [frozenset()])
        fails = []
        all_v = frozenset(q.datum.vertices)
        if (S | flat | sharp) != all_v or S & flat or S & sharp or flat & sharp:
            fails.append("1")
        if any((a in flat and b in sharp) or (a in sharp and b in flat) for a, b in edges):
            fails.append("2")
        matches = [r for r in cox if r.support == flat]
        w = matches[0].element if len(matches) == 1 else None
        if len(matches) != 1:
            fails.append("3a")
        else:
            if w.length != d:
                fails.append("3b")
            if i_jwsigma(q.J, w, q.sigma) != sharp:
                fails.append("4")
        strata.append(StratumDatum(S, flat, sharp, d, w, q.word(w) if w is not None else None, fails))
        failures += [f"clause {c} ({CLAUSES[c]}) fails for Sigma={sorted(S)}" for c in fails]
    ws = [s.element for s in strata if s.element is not None]
    bij = len(ws) == len(strata) and len(set(ws)) == len(ws) and set(ws) == {r.element for r in cox}
    if not bij:
        failures.append("Sigma -> w_Sigma is not a bijection onto the Coxeter EO elements")
    return strata, bij, failures


def strata_index_set(q: Quadruple) -> StrataReport:
    """Compute strata under both index-set variants and keep the one with fewest failing clauses (literal on ties)."""
    results = {v: strata_for_variant(q, v) for v in ("literal", "min")}
    def score(v):
        return (len(results[v][2]), 0 if v == "literal" else 1)
    chosen = min(results, key=score)
    strata, bij, failures = results[chosen]
    strata.sort(key=lambda s: (s.distance, sorted(s.sigma_set)))
    return StrataReport(q, chosen, strata, bij, failures, {v: r[2] for v, r in results.items()})


# ---------------------------------------------------------------------------
# Closure relations


@dataclass
class ClosureReport:
    nodes: list[StratumDatum]
    relation: list[tuple[int, int]]       # (i, j): stratum i lies in the closure of j, i != j
    hasse: list[tuple[int, int]]
    transported: list[tuple[int, int]]    # same, read off from <=_{J,sigma}
    agrees: bool
    bruhat_agrees: bool

    def to_json(self) -> dict:
        return {"nodes": [sorted(s.sigma_set) for s in self.nodes],
                "hasse": [list(e) for e in self.hasse], "agrees_with_J_sigma_order": self.agrees,
                "J_sigma_order_is_bruhat": self.bruhat_agrees}


def closure_poset(q: Quadruple, report: StrataReport | None = None) -> ClosureReport:
    from .affweyl import bruhat_leq
    if report is None:
        report = strata_index_set(q)
    nodes = report.strata
    n = len(nodes)
    rel = [(i, j) for i in range(n) for j in range(n)
           if i != j and nodes[i].flat <= nodes[j].flat]
    relset = set(rel)
    hasse = [(i, j) for (i, j) in rel if not any((i, k) in relset and (k, j) in relset for k in range(n))]
    cache: dict = {}
    transported, bruhat = [], []
    for i, j in itertools.permutations(range(n), 2):
        a, b = nodes[i].element, nodes[j].element
        if a is None or b is None:
            continue
        if leq_J_sigma(q.J, a, b, q.sigma, cache):
            transported.append((i, j))
        if bruhat_leq(a, b):
            bruhat.append((i, j))
    return ClosureReport(nodes, rel, hasse, transported, set(transported) == relset, set(transported) == set(bruhat))


def j_sigma_order_checks(q: Quadruple) -> dict:
    """On Coxeter EO elements: <=_{J,sigma} equals Bruhat, and x < y iff l(x) < l(y)."""
    from .affweyl import bruhat_leq
    cox = [r.element for r in eo_set(q).coxeter]
    cache: dict = {}
    mismatch, nonlinear = [], []
    for a, b in itertools.permutations(cox, 2):
        js = leq_J_sigma(q.J, a, b, q.sigma, cache)
        br = bruhat_leq(a, b)
        if js != br:
            mismatch.append((q.word(a), q.word(b)))
        if js != (a.length < b.length):
            nonlinear.append((q.word(a), q.word(b)))
    return {"coincides_with_bruhat": not mismatch, "almost_linear": not nonlinear,
            "mismatches": mismatch, "violations": nonlinear}


# ---------------------------------------------------------------------------
# Smoothness


def smoothness_report(q: Quadruple, report: StrataReport | None = None) -> list[dict]:
    """Per stratum: criterion label and the longest-element check in the finite double coset."""
    if report is None:
        report = strata_index_set(q)
    tau_fixes_J = q.datum and frozenset(q.tau_perm[i] for i in q.J) == q.J
    out = []
    for s in report.strata:
        w = s.element
        if w is None:
            continue
        smooth = (not tau_fixes_J) or w.length <= 1
        supp, _ = supp_sigma(w, q)
        K = supp & q.J
        FK = frozenset(q.tau_sigma_perm[k] for k in K)
        wp = w.coxeter_part()
        w0 = longest_element(q.datum, K)
        top = max_by_ascents(wp, K, FK)
        out.append({"sigma": sorted(s.sigma_set), "w": s.word, "length": w.length,
                    "tau_fixes_J": tau_fixes_J, "smooth": smooth,
                    "label": "smooth" if smooth else "isolated-singularities",
                    "longest_element_check": (w0 * wp) == top})
    return out


# ---------------------------------------------------------------------------
# Bedard limit vs fixpoint


def bedard_agreement(q: Quadruple) -> list[dict]:
    out = []
    for w in eo_set(q).elements:
        a = bedard_limit(q.J, w, q.sigma)
        b = i_jwsigma(q.J, w, q.sigma)
        out.append({"word": q.word(w), "bedard": sorted(a), "fixpoint": sorted(b), "agree": a == b})
    return out


def _bedard_one(spec):
    fam, rank, label, v, perm = spec
    datum = get_root_datum(fam, rank)
    sigma = next(a for a in all_automorphisms(datum) if a.perm == perm)
    q = Quadruple(datum, label, v, sigma)
    total, bad = 0, []
    for w in eo_elements(q):
        total += 1
        if bedard_limit(q.J, w, q.sigma) != i_jwsigma(q.J, w, q.sigma):
            bad.append(q.word(w))
    return q.name, total, bad


def bedard_sweep(max_rank: int, jobs: int = 1) -> list[tuple[str, int, list[str]]]:
    """Bedard limit vs I(J, w, sigma) fixpoint for every EO element of every swept quadruple."""
    specs = [(q.datum.family, q.datum.rank, q.label, q.removed, q.sigma.perm) for q in quadruples(max_rank)]
    # biggest jobs first keeps the pool busy
    specs.sort(key=lambda s: -s[1])
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(_bedard_one, specs))
    return [_bedard_one(s) for s in specs]
