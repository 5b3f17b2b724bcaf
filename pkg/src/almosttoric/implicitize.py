"""Implicit equation by interpolation over the Newton polygon's lattice points."""

import json
import logging
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from . import modular
from .errors import InconsistencyError
from .exactmath import matvec, nullspace_dim_and_basis, primitive
from .pluecker import PlueckerData, ToricInput, build_pluecker
from .polygon import NewtonPolygon, edge_gcd, newton_polygon, shrink_polygon
from .unipoly import UPoly, eval_int
from .valuation import ValuationMatrix, build_valuation

log = logging.getLogger(__name__)

Vector = Tuple[int, ...]

# above this many unknowns the exact rational solve is replaced by the
# multi-modular one (with an exact certificate)
EXACT_SOLVE_LIMIT = 40


class EmptyNullspaceError(InconsistencyError):
    """Only the zero solution: the support cannot carry the implicit equation."""


class LargeNullspaceError(InconsistencyError):
    """More than one independent solution on the support."""


@dataclass(frozen=True)
class ImplicitPolynomial:
    terms: Tuple[Tuple[Vector, int], ...]

    @classmethod
    def from_coefficients(cls, coeffs: Dict[Vector, int]) -> "ImplicitPolynomial":
        """Normalize: content 1, lex-greatest exponent positive, lex-descending order."""
        items = sorted(((tuple(e), int(c)) for e, c in coeffs.items() if c), reverse=True)
        if not items:
            raise ValueError("zero polynomial")
        g = 0
        for _, c in items:
            g = gcd(g, c)
        if items[0][1] < 0:
            g = -g
        return cls(tuple((e, c // g) for e, c in items))

    @property
    def nvars(self) -> int:
        return len(self.terms[0][0])

    @property
    def degree(self) -> int:
        return sum(self.terms[0][0])

    @property
    def support(self) -> List[Vector]:
        return [e for e, _ in self.terms]

    def as_dict(self) -> Dict[Vector, int]:
        return dict(self.terms)

    def evaluate(self, point: Sequence) -> Fraction:
        total = 0
        for e, c in self.terms:
            term = c
            for u, k in zip(point, e):
                if k:
                    term *= u ** k
            total += term
        return total

    def to_text(self) -> str:
        out = []
        for e, c in self.terms:
            mono = "*".join(f"u{i}" if k == 1 else f"u{i}^{k}" for i, k in enumerate(e) if k)
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    def to_json(self) -> dict:
        return {"terms": [{"coeff": str(c), "exps": list(e)} for e, c in self.terms]}

    @classmethod
    def from_json(cls, doc) -> "ImplicitPolynomial":
        if isinstance(doc, str):
            doc = json.loads(doc)
        coeffs = {tuple(int(x) for x in t["exps"]): int(t["coeff"]) for t in doc["terms"]}
        # keep the order and sign as given: a tampered polynomial must stay tampered
        items = sorted(((e, c) for e, c in coeffs.items() if c), reverse=True)
        return cls(tuple(items))


def assert_common_t_monomial(support: Sequence[Vector], A: Sequence[Sequence[int]]) -> Vector:
    if not support:
        raise ValueError("empty support")
    alpha = tuple(matvec(A, support[0]))
    for v in support[1:]:
        if tuple(matvec(A, v)) != alpha:
            raise InconsistencyError(f"A*v differs across the support: {v}")
    return alpha


def _evaluation_points(int_f: Sequence[Sequence[int]], r: int, shift: int = 0) -> Iterator[int]:
    """-r..r, then r+1, -(r+1), r+2, ...; all translated by ``shift`` and
    skipping roots of the product of the f_i."""
    def usable(x):
        return all(eval_int(c, x) != 0 for c in int_f)

    for x in range(-r, r + 1):
        if usable(x + shift):
            yield x + shift
    k = r + 1
    while True:
        for x in (k, -k):
            if usable(x + shift):
                yield x + shift
        k += 1


def _take(it, count):
    return [next(it) for _ in range(count)]


def _horner_value(coeffs: Dict[Vector, int], y: Sequence[int]) -> int:
    """Exact value of sum_v c_v prod_i y_i^v_i by nested Horner in each variable."""
    def rec(items, var):
        if var == len(y):
            return sum(c for _, c in items)
        groups: Dict[int, list] = {}
        for e, c in items:
            groups.setdefault(e[var], []).append((e, c))
        acc = 0
        last = None
        for k in sorted(groups, reverse=True):
            if last is not None:
                acc *= y[var] ** (last - k)
            acc += rec(groups[k], var + 1)
            last = k
        return acc * y[var] ** last

    return rec(list(coeffs.items()), 0)


def _solve_exact(rows: List[List[int]]) -> List[Fraction]:
    dim, basis = nullspace_dim_and_basis(rows)
    if dim == 0:
        raise EmptyNullspaceError("nullspace dimension 0")
    if dim > 1:
        raise LargeNullspaceError(f"nullspace dimension {dim} >= 2")
    return basis[0]


def _solve_modular(int_f, support, points: Iterator[int], first: int, limit: int, anchor: int) -> Optional[List[int]]:
    """Candidate integer kernel vector, certified exactly before returning.

    Returns None if no usable prime/point set was found; the caller then
    falls back to the exact solve.
    """
    k = len(support)
    xs = _take(points, first)
    values = [[eval_int(c, x) for c in int_f] for x in xs]
    primes = modular.primes_below()
    residue, modulus, previous = None, 1, None
    misses = 0
    while True:
        p = next(primes)
        M = modular.power_matrix_mod(values, support, p)
        rank, vec = modular.kernel_vector_mod(M, p, anchor)
        if rank == k:
            # rank mod p never exceeds the rational rank
            raise EmptyNullspaceError("nullspace dimension 0")
        if rank < k - 1:
            if len(xs) < limit:
                extra = _take(points, min(max(8, k // 8), limit - len(xs)))
                xs += extra
                values += [[eval_int(c, x) for c in int_f] for x in extra]
                residue, modulus, previous = None, 1, None
                continue
            misses += 1
            if misses > 3:
                return None
            continue
        if vec is None:
            misses += 1
            if misses > 3:
                return None
            continue
        if residue is None:
            residue, modulus = vec, p
        else:
            merged = [modular.crt_pair(a, modulus, b, p) for a, b in zip(residue, vec)]
            residue = [r for r, _ in merged]
            modulus = merged[0][1]
        recon = [modular.rational_reconstruct(a, modulus) for a in residue]
        if any(r is None for r in recon):
            continue
        cand = primitive([Fraction(n, d) for n, d in recon])
        if cand != previous:
            previous = cand
            continue
        # the candidate must annihilate every row exactly; together with rank
        # k-1 mod p this proves it spans the rational kernel
        coeffs = {tuple(v): c for v, c in zip(support, cand)}
        if all(_horner_value(coeffs, y) == 0 for y in values):
            return cand
        log.debug("modular candidate failed exact check; adding primes")
        previous = None


def interpolate(inst: ToricInput, support: Sequence[Vector], method: str = "auto", shift: int = 0) -> ImplicitPolynomial:
    """Solve for the coefficients of the implicit polynomial on ``support``.

    ``method`` is "exact", "modular" or "auto"; ``shift`` translates the
    evaluation points (the answer does not depend on it).
    """
    support = [tuple(v) for v in support]
    k = len(support)
    if k < 2:
        raise ValueError("support needs at least two points")
    assert_common_t_monomial(support, inst.A)
    forms = [g.integer_form() for g in inst.f]
    int_f = [c for c, _ in forms]
    dens = [d for _, d in forms]
    degs = [g.degree for g in inst.f]
    D = max(sum(v * dg for v, dg in zip(s, degs)) for s in support)
    r = k // 2
    needed = max(2 * r + 1, D + 1)
    if method == "auto":
        method = "exact" if k <= EXACT_SOLVE_LIMIT else "modular"

    sol = None
    if method == "modular":
        anchor = max(range(k), key=lambda j: support[j])
        sol = _solve_modular(int_f, support, _evaluation_points(int_f, r, shift), 2 * r + 1, needed, anchor)
        if sol is None:
            log.info("modular solve inconclusive; falling back to exact")
    if sol is None:
        xs = _take(_evaluation_points(int_f, r, shift), needed)
        rows = []
        for x in xs:
            y = [eval_int(c, x) for c in int_f]
            row = []
            for v in support:
                val = 1
                for yi, e in zip(y, v):
                    if e:
                        val *= yi ** e
                row.append(val)
            rows.append(row)
        sol = _solve_exact(rows)

    # undo the column scaling by prod den_i^v_i
    scaled = []
    for v, c in zip(support, sol):
        s = Fraction(c)
        for dn, e in zip(dens, v):
            s *= dn ** e
        scaled.append(s)
    ints = primitive(scaled)
    return ImplicitPolynomial.from_coefficients(dict(zip(support, ints)))


# --- verification ----------------------------------------------------------

@dataclass
class VanishingReport:
    symbolic: bool
    random_trials: int
    random_passed: int
    witness: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return self.symbolic and self.random_passed == self.random_trials


def _symbolic_residue(p: ImplicitPolynomial, inst: ToricInput) -> Dict[Vector, UPoly]:
    """Expand p(t^a_0 f_0(x), ...) as a map t-exponent -> polynomial in x."""
    cache: Dict[Tuple[int, int], UPoly] = {}

    def fpow(i, e):
        if (i, e) not in cache:
            cache[(i, e)] = inst.f[i] ** e
        return cache[(i, e)]

    out: Dict[Vector, UPoly] = {}
    for e, c in p.terms:
        texp = tuple(matvec(inst.A, e))
        q = UPoly.const(c)
        for i, k in enumerate(e):
            if k:
                q = q * fpow(i, k)
        out[texp] = out.get(texp, UPoly()) + q
    return out


def _random_rational(rng: random.Random, nonzero=True) -> Fraction:
    while True:
        x = Fraction(rng.randint(-50, 50), rng.randint(1, 50))
        if x or not nonzero:
            return x


def verify_vanishing(p: ImplicitPolynomial, inst: ToricInput, trials: int = 100, seed: int = 0) -> VanishingReport:
    residue = _symbolic_residue(p, inst)
    bad = {t: q for t, q in residue.items() if not q.is_zero()}
    witness = None
    if not p.terms:
        # vanishes trivially; never an implicit equation
        bad = {(): UPoly()}
        witness = {"kind": "zero polynomial"}
    elif bad:
        t, q = next(iter(bad.items()))
        witness = {"kind": "symbolic", "t_exponent": list(t), "x_polynomial": str(q)}

    rng = random.Random(seed)
    passed = 0
    for _ in range(trials):
        while True:
            x = _random_rational(rng, nonzero=False)
            fx = [g(x) for g in inst.f]
            if all(fx):
                break
        t = [_random_rational(rng) for _ in range(inst.n)]
        point = []
        for i, fi in enumerate(fx):
            mono = Fraction(1)
            for row, tj in zip(inst.A, t):
                mono *= tj ** row[i]
            point.append(mono * fi)
        val = p.evaluate(point)
        if val == 0:
            passed += 1
        elif witness is None:
            witness = {"kind": "random", "t": [str(s) for s in t], "x": str(x), "value": str(val)}
    return VanishingReport(not bad, trials, passed, witness)


# --- whole pipeline --------------------------------------------------------

@dataclass
class Implicitization:
    instance: ToricInput
    pluecker: PlueckerData
    valuation: ValuationMatrix
    polygon: NewtonPolygon
    polynomial: ImplicitPolynomial
    flipped: bool = False
    seconds: float = 0.0
    timings: Dict[str, float] = field(default_factory=dict)
    # > 1 when the parameterization covers the hypersurface that many times;
    # the polygon is then map_degree times the Newton polygon of the polynomial
    map_degree: int = 1


def _divisors_desc(g: int) -> List[int]:
    return [m for m in range(g, 1, -1) if g % m == 0]


def _interpolate_polygon(inst: ToricInput, poly: NewtonPolygon, method: str) -> Tuple[ImplicitPolynomial, int]:
    try:
        return interpolate(inst, poly.lattice_points, method), 1
    except LargeNullspaceError:
        pass
    # several independent solutions: the polygon is a multiple m * Newt(p).
    # Shrinking by a divisor larger than m leaves no solution, so the first
    # divisor (from the top) with a one-dimensional kernel is m itself.
    for m in _divisors_desc(edge_gcd(poly)):
        small = shrink_polygon(poly, m, inst.A)
        if len(small.lattice_points) < 2:
            continue
        try:
            p = interpolate(inst, small.lattice_points, method)
        except (EmptyNullspaceError, LargeNullspaceError):
            continue
        log.info("parameterization has degree %d onto its image", m)
        return p, m
    raise LargeNullspaceError("nullspace dimension >= 2 on every shrunken polygon")


def implicitize(inst: ToricInput, method: str = "auto") -> Implicitization:
    """P_A, V_f, polygon, lattice points, interpolation.

    If the calibrated orientation yields only the zero solution the polygon
    is rebuilt with the opposite orientation once before giving up.
    """
    t0 = time.perf_counter()
    timings = {}
    pd = build_pluecker(inst.A)
    V = build_valuation(inst.f)
    timings["valuation"] = time.perf_counter() - t0
    flipped = False
    poly = newton_polygon(inst, pd, V)
    timings["polygon"] = time.perf_counter() - t0 - timings["valuation"]
    try:
        p, mult = _interpolate_polygon(inst, poly, method)
    except EmptyNullspaceError:
        log.warning("no solution on the calibrated polygon; retrying with flipped orientation")
        flipped = True
        poly = newton_polygon(inst, pd, V, flip_orientation=True)
        try:
            p, mult = _interpolate_polygon(inst, poly, method)
        except EmptyNullspaceError:
            raise InconsistencyError("no implicit polynomial supported on either orientation") from None
    total = time.perf_counter() - t0
    timings["interpolation"] = total - timings["valuation"] - timings["polygon"]
    return Implicitization(inst, pd, V, poly, p, flipped, total, timings, mult)
