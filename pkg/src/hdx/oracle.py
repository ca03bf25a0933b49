"""Brute-force ground truth: full cochain-space enumeration on small instances.

Everything here is an independent slow path: spaces are enumerated state by
state (an odometer in lexicographic order with incremental coboundary updates,
or a Gray-code bitmask walk for two-element groups), distances and expansion
constants are exact rational minima with deterministic witnesses, and nothing
is shared with the fast paths these results are checked against.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .cochains import Cochain
from .complexes import Face, SimplicialComplex
from .errors import (
    BadDimensionError,
    BudgetExceededError,
    UndefinedCoboundaryError,
)
from .groups import FiniteGroup
from .reporting import CheckReport

DEFAULT_MAX_STATES = 2**24
BUDGET_ENV_VAR = "HDX_BUDGET"


@dataclass(frozen=True)
class EnumerationBudget:
    """Refusal thresholds for exhaustive scans; checked before work starts."""

    max_states: int = DEFAULT_MAX_STATES
    wall_clock_seconds: Optional[float] = None

    @classmethod
    def default(cls) -> "EnumerationBudget":
        raw = os.environ.get(BUDGET_ENV_VAR)
        if raw:
            try:
                return cls(max_states=int(raw))
            except ValueError:
                pass
        return cls()

    def ensure(self, states: int, what: str) -> None:
        if states > self.max_states:
            raise BudgetExceededError(
                f"{what} needs {states} states, over the budget of {self.max_states}"
            )

    def deadline(self) -> Optional[float]:
        if self.wall_clock_seconds is None:
            return None
        return time.monotonic() + self.wall_clock_seconds


def space_size(group: FiniteGroup, face_count: int) -> int:
    return group.order**face_count


# -- enumeration engine ----------------------------------------------------------


class _Scan:
    """Odometer over assignments to X(k) with incremental coboundary tracking."""

    def __init__(self, X: SimplicialComplex, k: int, G: FiniteGroup):
        self.X, self.k, self.G = X, k, G
        if k == -1:
            self.faces: List[Face] = [()]
        else:
            self.faces = list(X.faces(k))
        self.m = len(self.faces)
        self.nums = [X.weight_numerator(f) for f in self.faces]
        index = {f: i for i, f in enumerate(self.faces)}
        self.track = k < X.dimension and (G.is_abelian or k <= 1)
        self.above: List[Face] = list(X.faces(k + 1)) if self.track else []
        self.above_nums = [X.weight_numerator(f) for f in self.above]
        self.roles: List[Tuple] = []
        self.touch: List[List[int]] = [[] for _ in range(self.m)]
        if self.track:
            for j, above in enumerate(self.above):
                if k == -1:
                    role = ((0,),)
                else:
                    role = tuple(
                        index[above[:i] + above[i + 1 :]] for i in range(len(above))
                    )
                self.roles.append(role)
                for idx in set(role):
                    self.touch[idx].append(j)

    def delta_value(self, values: List[int], j: int) -> int:
        """Coboundary value on the j-th (k+1)-face for the current assignment."""
        G, role = self.G, self.roles[j]
        if self.k == -1:
            return values[0]
        if G.is_abelian:
            acc = 0
            for i, idx in enumerate(role):
                v = values[idx]
                if v:
                    acc = G.op(acc, v if i % 2 == 0 else G.inv(v))
            return acc
        if self.k == 0:
            # role indexes the faces left after dropping a position, so for an
            # edge (u, v) role[1] is u and role[0] is v: f(u) f(v)^-1.
            return G.op(values[role[1]], G.inv(values[role[0]]))
        # k == 1, above = (u, v, w): g(uv) g(vw) g(uw)^-1.
        uv, uw, vw = role[2], role[1], role[0]
        return G.op(G.op(values[uv], values[vw]), G.inv(values[uw]))

    def run(self, budget: EnumerationBudget, what: str):
        """Yield (values, delta, unsat, weight_num); the lists are reused in place."""
        budget.ensure(space_size(self.G, self.m), what)
        deadline = budget.deadline()
        g = self.G.order
        values = [0] * self.m
        delta = [0] * len(self.above)
        unsat = 0
        wnum = 0
        yield values, delta, unsat, wnum
        if g == 1 or self.m == 0:
            return
        steps = 0
        while True:
            p = self.m - 1
            while p >= 0 and values[p] == g - 1:
                wnum -= self.nums[p]
                values[p] = 0
                for j in self.touch[p]:
                    old = delta[j]
                    new = self.delta_value(values, j)
                    if old != new:
                        delta[j] = new
                        unsat += (1 if new else 0) - (1 if old else 0)
                p -= 1
            if p < 0:
                return
            if values[p] == 0:
                wnum += self.nums[p]
            values[p] += 1
            for j in self.touch[p]:
                old = delta[j]
                new = self.delta_value(values, j)
                if old != new:
                    delta[j] = new
                    unsat += (1 if new else 0) - (1 if old else 0)
            steps += 1
            if deadline is not None and steps % 65536 == 0 and time.monotonic() > deadline:
                raise BudgetExceededError(f"{what} exceeded the wall-clock budget")
            yield values, delta, unsat, wnum


def _f2_structures(X: SimplicialComplex, k: int):
    faces = list(X.faces(k)) if k >= 0 else [()]
    above = list(X.faces(k + 1)) if k < X.dimension else []
    index = {f: i for i, f in enumerate(faces)}
    cmask = [0] * len(faces)
    for j, up in enumerate(above):
        if k == -1:
            cmask[0] ^= 0  # the (-1 -> 0) map is a constant, handled separately
            continue
        for i in range(len(up)):
            cmask[index[up[:i] + up[i + 1 :]]] ^= 1 << j
    return faces, above, cmask


def _f2_scan_cocycles(X: SimplicialComplex, k: int, budget: EnumerationBudget) -> List[int]:
    """All cocycle bitmasks over X(k) for a two-element group, via a Gray walk."""
    faces, above, cmask = _f2_structures(X, k)
    m = len(faces)
    budget.ensure(2**m, f"cocycle scan in dimension {k}")
    deadline = budget.deadline()
    if k >= X.dimension:
        return list(range(2**m))
    out = [0]
    state = 0
    unsat = 0
    append = out.append
    for i in range(1, 2**m):
        j = (i & -i).bit_length() - 1
        state ^= 1 << j
        unsat ^= cmask[j]
        if unsat == 0:
            append(state)
        if deadline is not None and i % 1048576 == 0 and time.monotonic() > deadline:
            raise BudgetExceededError("cocycle scan exceeded the wall-clock budget")
    out.sort()
    return out


def _f2_image_masks(X: SimplicialComplex, k: int, budget: EnumerationBudget) -> List[int]:
    """All coboundary bitmasks over X(k) (images of assignments one level down)."""
    lower = list(X.faces(k - 1))
    above = list(X.faces(k))
    m = len(lower)
    budget.ensure(2**m, f"coboundary scan into dimension {k}")
    rows = [0] * m
    low_index = {f: i for i, f in enumerate(lower)}
    for j, up in enumerate(above):
        for i in range(len(up)):
            rows[low_index[up[:i] + up[i + 1 :]]] ^= 1 << j
    seen = {0}
    state = 0
    for i in range(1, 2**m):
        j = (i & -i).bit_length() - 1
        state ^= rows[j]
        seen.add(state)
    return sorted(seen)


@dataclass
class EnumeratedSpaces:
    """Z^k and B^k materialized; C^k kept as a count (it can be huge)."""

    complex: SimplicialComplex
    dimension: int
    group: FiniteGroup
    c_count: int
    cocycles: Optional[List[Cochain]]
    coboundaries: List[Cochain]

    def cocycle_values(self) -> List[Tuple[int, ...]]:
        return [_vector_of(f, self.complex, self.dimension) for f in self.cocycles or []]

    def coboundary_values(self) -> List[Tuple[int, ...]]:
        return [_vector_of(f, self.complex, self.dimension) for f in self.coboundaries]


def _vector_of(f: Cochain, X: SimplicialComplex, k: int) -> Tuple[int, ...]:
    return tuple(f.values.get(face, 0) for face in X.faces(k))


def _cochain_from_vector(
    X: SimplicialComplex, k: int, G: FiniteGroup, faces: Sequence[Face], vec: Sequence[int]
) -> Cochain:
    return Cochain(X, k, G, {f: v for f, v in zip(faces, vec) if v}, _trusted=True)


def _mask_to_cochain(X: SimplicialComplex, k: int, G: FiniteGroup, faces, mask: int) -> Cochain:
    return Cochain(
        X, k, G, {faces[i]: 1 for i in range(len(faces)) if mask >> i & 1}, _trusted=True
    )


def cocycle_list(
    X: SimplicialComplex, G: FiniteGroup, k: int, budget: EnumerationBudget
) -> Optional[List[Cochain]]:
    """All cocycles of dimension k (None when the space is undefined)."""
    faces = list(X.faces(k))
    if k == X.dimension:
        return [
            _cochain_from_vector(X, k, G, faces, vec)
            for vec in _all_vectors(G, faces, budget, f"Z^{k} scan")
        ]
    if not (G.is_abelian or k <= 1):
        return None
    if G.order == 2:
        masks = _f2_scan_cocycles(X, k, budget)
        return [_mask_to_cochain(X, k, G, faces, m) for m in masks]
    found = []
    scan = _Scan(X, k, G)
    for values, _delta, unsat, _w in scan.run(budget, f"Z^{k} scan"):
        if unsat == 0:
            found.append(tuple(values))
    found.sort()
    return [_cochain_from_vector(X, k, G, faces, v) for v in found]


def coboundary_list(
    X: SimplicialComplex, G: FiniteGroup, k: int, budget: EnumerationBudget
) -> List[Cochain]:
    """The image of the scan one level down (constants when k == 0)."""
    faces = list(X.faces(k))
    budget.ensure(space_size(G, len(X.faces(k - 1)) if k >= 1 else 1), f"B^{k} scan")
    if k == 0:
        images = sorted({(c,) * len(faces) for c in G.elements()})
        return [_cochain_from_vector(X, k, G, faces, v) for v in images]
    if G.order == 2:
        masks = _f2_image_masks(X, k, budget)
        return [_mask_to_cochain(X, k, G, faces, m) for m in masks]
    lower = _Scan(X, k - 1, G)
    seen = set()
    for _values, delta, _unsat, _w in lower.run(budget, f"B^{k} scan"):
        seen.add(tuple(delta))
    return [_cochain_from_vector(X, k, G, faces, v) for v in sorted(seen)]


def enumerate_spaces(
    X: SimplicialComplex,
    G: FiniteGroup,
    k: int,
    budget: Optional[EnumerationBudget] = None,
) -> EnumeratedSpaces:
    """Materialize Z^k and B^k by exhaustive scans; C^k is returned as a count.

    For non-abelian groups the cocycle space exists only for k <= 1 (the
    multiplicative coboundary stops there); B^k is enumerated as the image of
    the level below, which for k = 0 is the set of constant assignments.
    """
    budget = budget or EnumerationBudget.default()
    if not 0 <= k <= X.dimension:
        raise BadDimensionError(f"no cochains of dimension {k}")
    faces = list(X.faces(k))
    c_count = space_size(G, len(faces))
    budget.ensure(c_count, f"C^{k} scan")
    cocycles = cocycle_list(X, G, k, budget)
    coboundaries = coboundary_list(X, G, k, budget)
    if cocycles is not None:
        z_set = {_vector_of(f, X, k) for f in cocycles}
        for b in coboundaries:
            if _vector_of(b, X, k) not in z_set:
                raise AssertionError("a coboundary failed the cocycle condition")
    return EnumeratedSpaces(X, k, G, c_count, cocycles, coboundaries)


def _all_vectors(G, faces, budget, what):
    scan_states = space_size(G, len(faces))
    budget.ensure(scan_states, what)
    if not faces:
        return [()]
    out = []
    vec = [0] * len(faces)
    g = G.order
    while True:
        out.append(tuple(vec))
        p = len(faces) - 1
        while p >= 0 and vec[p] == g - 1:
            vec[p] = 0
            p -= 1
        if p < 0:
            return out
        vec[p] += 1


def exact_distance(
    f: Cochain,
    space: str = "B",
    budget: Optional[EnumerationBudget] = None,
    spaces: Optional[EnumeratedSpaces] = None,
) -> Tuple[Fraction, Cochain]:
    """Exact distance from f to Z^k or B^k, with a lexicographic-min witness."""
    budget = budget or EnumerationBudget.default()
    if space == "Z":
        pool = (
            spaces.cocycles
            if spaces is not None
            else cocycle_list(f.complex, f.group, f.dimension, budget)
        )
        if pool is None:
            raise UndefinedCoboundaryError("no cocycle space for this (group, dimension)")
    elif space == "B":
        pool = (
            spaces.coboundaries
            if spaces is not None
            else coboundary_list(f.complex, f.group, f.dimension, budget)
        )
    else:
        raise BadDimensionError(f"unknown space tag {space!r}")
    X, k = f.complex, f.dimension
    faces = list(X.faces(k))
    fvec = _vector_of(f, X, k)
    nums = [X.weight_numerator(face) for face in faces]
    best_num: Optional[int] = None
    best_vec: Optional[Tuple[int, ...]] = None
    for candidate in pool:
        cvec = _vector_of(candidate, X, k)
        dnum = sum(n for a, b, n in zip(fvec, cvec, nums) if a != b)
        if best_num is None or dnum < best_num or (dnum == best_num and cvec < best_vec):
            best_num, best_vec = dnum, cvec
    assert best_num is not None and best_vec is not None
    witness = _cochain_from_vector(X, k, f.group, faces, best_vec)
    return Fraction(best_num, X.weight_denominator(k)), witness


@dataclass
class CoboundaryConstant:
    """min ||df|| / dist(f, B^k) over f outside B^k; None means vacuous."""

    dimension: int
    epsilon: Optional[Fraction]
    witness: Optional[Cochain]
    vacuous: bool = False


def coboundary_expansion_constant(
    X: SimplicialComplex,
    G: FiniteGroup,
    k: int,
    budget: Optional[EnumerationBudget] = None,
) -> CoboundaryConstant:
    """Exact coboundary-expansion constant in dimension k by full enumeration."""
    budget = budget or EnumerationBudget.default()
    if k >= X.dimension or k < 0:
        raise BadDimensionError(f"need 0 <= k < d, got k={k}, d={X.dimension}")
    if not G.is_abelian and k > 1:
        raise UndefinedCoboundaryError("no multiplicative coboundary above dimension 1")
    if G.order == 1:
        return CoboundaryConstant(k, None, None, vacuous=True)
    faces = list(X.faces(k))
    c_count = space_size(G, len(faces))
    budget.ensure(c_count, f"C^{k} scan")
    b_pool = coboundary_list(X, G, k, budget)
    b_vecs = sorted(_vector_of(f, X, k) for f in b_pool)
    b_set = set(b_vecs)
    budget.ensure(c_count * max(len(b_vecs), 1), f"expansion ratio scan in dim {k}")
    # A cocycle outside B^k pins the constant at 0 without the ratio scan.
    z_pool = cocycle_list(X, G, k, budget)
    if z_pool is not None:
        for candidate in z_pool:
            zvec = _vector_of(candidate, X, k)
            if zvec not in b_set:
                return CoboundaryConstant(k, Fraction(0), candidate)
    nums = [X.weight_numerator(f) for f in faces]
    den_k = X.weight_denominator(k)
    den_k1 = X.weight_denominator(k + 1)
    scan = _Scan(X, k, G)
    best: Optional[Fraction] = None
    best_vec: Optional[Tuple[int, ...]] = None
    for values, delta, unsat, _w in scan.run(budget, f"C^{k} ratio scan"):
        vec = tuple(values)
        if vec in b_set:
            continue
        delta_num = sum(n for v, n in zip(delta, scan.above_nums) if v)
        dist_num = min(
            sum(n for a, b, n in zip(vec, bvec, nums) if a != b) for bvec in b_vecs
        )
        ratio = Fraction(delta_num * den_k, den_k1 * dist_num)
        if best is None or ratio < best or (ratio == best and vec < best_vec):
            best, best_vec = ratio, vec
    if best is None:
        return CoboundaryConstant(k, None, None, vacuous=True)
    witness = _cochain_from_vector(X, k, G, faces, best_vec)
    return CoboundaryConstant(k, best, witness)


@dataclass
class CosystolicConstants:
    """Exact per-dimension cosystolic data; None fields were refused or vacuous."""

    group_spec: str
    per_dim: Dict[int, Dict[str, object]] = field(default_factory=dict)

    @property
    def epsilon(self) -> Optional[Fraction]:
        vals = [d["epsilon"] for d in self.per_dim.values() if d.get("epsilon") is not None]
        return min(vals) if vals else None

    @property
    def mu(self) -> Optional[Fraction]:
        vals = [d["mu"] for d in self.per_dim.values() if d.get("mu") is not None]
        return min(vals) if vals else None


def cosystolic_expansion_constants(
    X: SimplicialComplex,
    G: FiniteGroup,
    budget: Optional[EnumerationBudget] = None,
    dims: Optional[Iterable[int]] = None,
) -> CosystolicConstants:
    """Exact (epsilon, mu) per dimension.

    epsilon_k = min ||df|| / dist(f, Z^k) over f outside Z^k; mu_k = min ||f||
    over cocycles outside B^k (None when Z^k = B^k, the "infinite" sentinel).
    Ratio scans whose pair cost exceeds the budget are marked skipped.
    """
    budget = budget or EnumerationBudget.default()
    if dims is None:
        dims = range(0, X.dimension) if G.is_abelian else range(0, min(2, X.dimension))
    out = CosystolicConstants(G.spec)
    for k in dims:
        entry: Dict[str, object] = {"epsilon": None, "mu": None, "skipped": None}
        if G.order == 1:
            entry["skipped"] = "vacuous for the one-element group"
            out.per_dim[k] = entry
            continue
        spaces = enumerate_spaces(X, G, k, budget)
        z_vecs = sorted(spaces.cocycle_values())
        b_set = set(spaces.coboundary_values())
        faces = list(X.faces(k))
        nums = [X.weight_numerator(f) for f in faces]
        den_k = X.weight_denominator(k)

        nontrivial = [v for v in z_vecs if v not in b_set]
        entry["z_size"] = len(z_vecs)
        entry["b_size"] = len(b_set)
        if nontrivial:
            best_vec = min(
                nontrivial,
                key=lambda v: (sum(n for a, n in zip(v, nums) if a), v),
            )
            entry["mu"] = Fraction(
                sum(n for a, n in zip(best_vec, nums) if a), den_k
            )
            entry["mu_witness"] = _cochain_from_vector(X, k, G, faces, best_vec)

        pair_cost = spaces.c_count * max(len(z_vecs), 1)
        if pair_cost > budget.max_states:
            entry["skipped"] = f"ratio scan needs {pair_cost} states"
            out.per_dim[k] = entry
            continue
        den_k1 = X.weight_denominator(k + 1)
        scan = _Scan(X, k, G)
        best: Optional[Fraction] = None
        for values, delta, unsat, _w in scan.run(budget, f"cosystolic scan dim {k}"):
            if unsat == 0:
                continue
            vec = tuple(values)
            delta_num = sum(n for v, n in zip(delta, scan.above_nums) if v)
            dist_num = min(
                sum(n for a, b, n in zip(vec, zvec, nums) if a != b) for zvec in z_vecs
            )
            ratio = Fraction(delta_num * den_k, den_k1 * dist_num)
            if best is None or ratio < best:
                best = ratio
        entry["epsilon"] = best
        out.per_dim[k] = entry
    return out


def min_nontrivial_cocycle_weight(
    X: SimplicialComplex,
    G: FiniteGroup,
    k: int,
    budget: Optional[EnumerationBudget] = None,
) -> Optional[Fraction]:
    """Minimum weight over Z^k \\ B^k found by support-size-ordered search.

    Independent of enumerate_spaces: supports are enumerated by size with
    value products over non-identity elements, pruning once every remaining
    support is heavier than the best cocycle found.  Returns None when no
    nontrivial cocycle exists.
    """
    budget = budget or EnumerationBudget.default()
    faces = list(X.faces(k))
    nums = [X.weight_numerator(f) for f in faces]
    den = X.weight_denominator(k)
    b_set = {_vector_of(f, X, k) for f in coboundary_list(X, G, k, budget)}
    index = {f: i for i, f in enumerate(faces)}
    coface_map = X.coface_map(k) if k < X.dimension else {}
    sorted_nums = sorted(nums)
    best_num: Optional[int] = None
    best_vec: Optional[Tuple[int, ...]] = None
    states = 0
    nonid = list(range(1, G.order))
    for size in range(1, len(faces) + 1):
        floor_num = sum(sorted_nums[:size])
        if best_num is not None and floor_num >= best_num:
            break
        for support in combinations(range(len(faces)), size):
            support_num = sum(nums[i] for i in support)
            if best_num is not None and support_num >= best_num:
                continue
            for assignment in _assignments(len(support), nonid):
                states += 1
                if states > budget.max_states:
                    raise BudgetExceededError("support search exceeded the state budget")
                values = {faces[i]: v for i, v in zip(support, assignment)}
                f = Cochain(X, k, G, values, _trusted=True)
                if not f.is_cocycle():
                    continue
                vec = tuple(values.get(face, 0) for face in faces)
                if vec in b_set:
                    continue
                if best_num is None or support_num < best_num or (
                    support_num == best_num and vec < best_vec
                ):
                    best_num, best_vec = support_num, vec
    if best_num is None:
        return None
    return Fraction(best_num, den)


def _assignments(length: int, nonid: List[int]):
    if length == 0:
        yield ()
        return
    for head in nonid:
        for rest in _assignments(length - 1, nonid):
            yield (head,) + rest


def link_coboundary_beta(
    X: SimplicialComplex,
    G: FiniteGroup,
    budget: Optional[EnumerationBudget] = None,
) -> Tuple[Optional[Fraction], Optional[Face]]:
    """Min coboundary-expansion constant over all proper links, with a witness.

    Links of dimension < 1 are skipped (no equations).  Returns (None, sigma)
    when some link has a vacuous or zero constant in a checkable dimension.
    """
    budget = budget or EnumerationBudget.default()
    best: Optional[Fraction] = None
    witness: Optional[Face] = None
    for i in range(0, X.dimension):
        for sigma in X.faces(i):
            lk = X.link(sigma)
            if lk.dimension < 1:
                continue
            top_k = lk.dimension if G.is_abelian else min(lk.dimension, 2)
            for k in range(0, top_k):
                const = coboundary_expansion_constant(lk, G, k, budget)
                if const.vacuous:
                    continue
                if best is None or const.epsilon < best:
                    best, witness = const.epsilon, sigma
    return best, witness


def verify_against_oracle(
    claim: Dict[str, object],
    X: SimplicialComplex,
    G: FiniteGroup,
    cochain: Optional[Cochain] = None,
    budget: Optional[EnumerationBudget] = None,
) -> CheckReport:
    """Re-evaluate a serialized claim exactly; used to replay failure bundles."""
    from .correction import is_minimal  # local import to avoid a cycle

    budget = budget or EnumerationBudget.default()
    kind = claim.get("kind")
    expected = claim.get("expected")
    if kind == "is_cocycle":
        actual = cochain.is_cocycle()
    elif kind == "is_minimal":
        actual = is_minimal(cochain, budget)
    elif kind == "distance_to":
        space = str(claim.get("space", "B"))
        actual = exact_distance(cochain, space, budget)[0]
        expected = Fraction(str(expected))
    elif kind == "weight":
        actual = cochain.weight()
        expected = Fraction(str(expected))
    elif kind == "coboundary_expansion_constant":
        const = coboundary_expansion_constant(X, G, int(claim["k"]), budget)
        actual = const.epsilon
        expected = None if expected is None else Fraction(str(expected))
    elif kind == "min_nontrivial_cocycle_weight":
        actual = min_nontrivial_cocycle_weight(X, G, int(claim["k"]), budget)
        expected = None if expected is None else Fraction(str(expected))
    else:
        raise BadDimensionError(f"unknown claim kind {kind!r}")
    return CheckReport(
        name=f"oracle-replay:{kind}",
        passed=actual == expected,
        lhs=actual,
        rhs=expected,
        params={k: v for k, v in claim.items() if k not in ("kind", "expected")},
    )
