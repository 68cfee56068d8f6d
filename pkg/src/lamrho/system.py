"""Index-map systems over a finite semigroup.

A system assigns every base element s a finite index set I[s] (a prefix
of the naturals) and every ordered pair (a,b) two maps

    lam[a,b] : I[ab] -> I[a]        rho[a,b] : I[ab] -> I[b]

subject to three composition axioms, written with (g o f)(x) = g(f(x)):

    (alpha)  lam[a,b] o lam[ab,c] = lam[a,bc]
    (beta)   rho[b,c] o rho[a,bc] = rho[ab,c]
    (gamma)  rho[a,b] o lam[ab,c] = lam[b,c] o rho[a,bc]

Maps are stored as dense sequences over their domain, so systems are
hashable values and enumeration order is plain tuple order.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator

from .errors import AxiomViolationError, IdealViolationError, MapRangeError
from .semigroup import FiniteSemigroup, identity_element, is_group

AXIOMS = ("alpha", "beta", "gamma")

EXHAUSTIVE_BASE_CAP = 3
EXHAUSTIVE_FIBER_CAP = 3


@dataclass(frozen=True)
class LrSystem:
    """A shape-checked system of index sets and maps over ``base``.

    ``lam`` and ``rho`` hold one sequence per ordered pair, at position
    a*size+b. Shape and ranges are enforced here; the composition axioms
    are the job of :func:`validate_axioms`, so invalid candidates can be
    represented, reported on, and fed to the non-associativity witness.
    """

    base: FiniteSemigroup
    index_sizes: tuple[int, ...]
    lam: tuple[tuple[int, ...], ...]
    rho: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.base.size
        if len(self.index_sizes) != n:
            raise MapRangeError("need one index size per base element")
        if any(k < 0 for k in self.index_sizes):
            raise MapRangeError("index sizes must be non-negative")
        if len(self.lam) != n * n or len(self.rho) != n * n:
            raise MapRangeError("need one lambda and one rho map per pair")
        for a in range(n):
            for b in range(n):
                ab = self.base.mul(a, b)
                dom = self.index_sizes[ab]
                lm = self.lam[a * n + b]
                rm = self.rho[a * n + b]
                if len(lm) != dom:
                    raise MapRangeError(
                        f"lambda[{a},{b}] has length {len(lm)}, expected {dom}"
                    )
                if len(rm) != dom:
                    raise MapRangeError(
                        f"rho[{a},{b}] has length {len(rm)}, expected {dom}"
                    )
                if any(not 0 <= v < self.index_sizes[a] for v in lm):
                    raise MapRangeError(f"lambda[{a},{b}] value out of range")
                if any(not 0 <= v < self.index_sizes[b] for v in rm):
                    raise MapRangeError(f"rho[{a},{b}] value out of range")

    @staticmethod
    def from_maps(base, index_sizes, lam, rho) -> "LrSystem":
        """Build from dicts keyed by (a,b) pairs."""
        n = base.size
        lam_seq = tuple(
            tuple(lam[(a, b)]) for a in range(n) for b in range(n)
        )
        rho_seq = tuple(
            tuple(rho[(a, b)]) for a in range(n) for b in range(n)
        )
        return LrSystem(base, tuple(index_sizes), lam_seq, rho_seq)

    def lam_map(self, a: int, b: int) -> tuple[int, ...]:
        return self.lam[a * self.base.size + b]

    def rho_map(self, a: int, b: int) -> tuple[int, ...]:
        return self.rho[a * self.base.size + b]

    def fiber_size(self, a: int) -> int:
        return self.index_sizes[a]

    def __repr__(self):
        return (
            f"LrSystem(base_size={self.base.size}, "
            f"index_sizes={list(self.index_sizes)})"
        )


@dataclass(frozen=True)
class AxiomViolation:
    """Names the failed axiom, the base triple and the index point."""

    axiom: str
    a: int
    b: int
    c: int
    point: int

    def __str__(self):
        return (
            f"axiom ({self.axiom}) fails at triple "
            f"({self.a},{self.b},{self.c}), point {self.point}"
        )


def axiom_violations(system: LrSystem, first_only: bool = False):
    """All composition-axiom failures (or just the first, if asked)."""
    sg = system.base
    out = []
    for a in sg.elements():
        for b in sg.elements():
            ab = sg.mul(a, b)
            lam_ab = system.lam_map(a, b)
            rho_ab = system.rho_map(a, b)
            for c in sg.elements():
                bc = sg.mul(b, c)
                abc = sg.mul(ab, c)
                lam_ab_c = system.lam_map(ab, c)
                rho_a_bc = system.rho_map(a, bc)
                lam_a_bc = system.lam_map(a, bc)
                rho_b_c = system.rho_map(b, c)
                lam_b_c = system.lam_map(b, c)
                rho_ab_c = system.rho_map(ab, c)
                for p in range(system.index_sizes[abc]):
                    if lam_ab[lam_ab_c[p]] != lam_a_bc[p]:
                        out.append(AxiomViolation("alpha", a, b, c, p))
                        if first_only:
                            return out
                    if rho_b_c[rho_a_bc[p]] != rho_ab_c[p]:
                        out.append(AxiomViolation("beta", a, b, c, p))
                        if first_only:
                            return out
                    if rho_ab[lam_ab_c[p]] != lam_b_c[rho_a_bc[p]]:
                        out.append(AxiomViolation("gamma", a, b, c, p))
                        if first_only:
                            return out
    return out


def validate_axioms(system: LrSystem) -> LrSystem:
    """Check all three axioms over every triple and index point.

    Returns the system unchanged on success; raises AxiomViolationError
    carrying the first violation otherwise.
    """
    found = axiom_violations(system, first_only=True)
    if found:
        raise AxiomViolationError(str(found[0]), violation=found[0])
    return system


def empty_support_ideal(system: LrSystem) -> tuple[int, ...]:
    """Elements with empty index sets; checked to form a two-sided ideal.

    The check is a cross-check: it cannot fire on an axiom-valid system,
    because a map out of a nonempty set into an empty one cannot exist.
    """
    sg = system.base
    j = tuple(s for s in sg.elements() if system.index_sizes[s] == 0)
    if j:
        js = set(j)
        for s in sg.elements():
            for x in j:
                if sg.mul(s, x) not in js or sg.mul(x, s) not in js:
                    raise IdealViolationError(
                        f"empty-fiber support {sorted(js)} is not an ideal"
                    )
    return j


@dataclass(frozen=True)
class UnitalCheck:
    """Outcome of the unit-preservation test, with a failure certificate."""

    unital: bool
    reason: str | None = None
    witness: tuple | None = None  # (a, 'lambda'|'rho', point)

    def __bool__(self):
        return self.unital


def is_unital(system: LrSystem) -> UnitalCheck:
    """Unit preservation: base is a monoid and lam[a,1], rho[1,a] are
    identities on I[a] for every a.

    Equivalently, the product of any monoid over this system is again a
    monoid; empty index sets pass vacuously (the identity on an empty set
    is the empty map).
    """
    e = identity_element(system.base)
    if e is None:
        return UnitalCheck(False, reason="base has no identity element")
    for a in system.base.elements():
        lm = system.lam_map(a, e)
        for p, v in enumerate(lm):
            if v != p:
                return UnitalCheck(
                    False,
                    reason=f"lambda[{a},{e}] is not the identity",
                    witness=(a, "lambda", p),
                )
        rm = system.rho_map(e, a)
        for p, v in enumerate(rm):
            if v != p:
                return UnitalCheck(
                    False,
                    reason=f"rho[{e},{a}] is not the identity",
                    witness=(a, "rho", p),
                )
    return UnitalCheck(True)


def is_group_preserving(system: LrSystem) -> bool:
    """True iff the base is a group and the system is unital."""
    return is_group(system.base) and bool(is_unital(system))


# ---------------------------------------------------------------------------
# Enumeration


def _identity_map(k: int) -> tuple[int, ...]:
    return tuple(range(k))


class _Slot:
    __slots__ = ("kind", "a", "b", "domain", "codomain", "pinned")

    def __init__(self, kind, a, b, domain, codomain, pinned=None):
        self.kind = kind
        self.a = a
        self.b = b
        self.domain = domain
        self.codomain = codomain
        self.pinned = pinned


def _build_slots(base, sizes, unital_only):
    n = base.size
    e = identity_element(base) if unital_only else None
    if unital_only and e is None:
        return None
    slots = []
    for kind in ("lam", "rho"):
        for a in range(n):
            for b in range(n):
                ab = base.mul(a, b)
                dom = sizes[ab]
                cod = sizes[a] if kind == "lam" else sizes[b]
                pinned = None
                if unital_only:
                    if kind == "lam" and b == e:
                        pinned = _identity_map(dom)
                    if kind == "rho" and a == e:
                        pinned = _identity_map(dom)
                if pinned is not None and any(v >= cod for v in pinned):
                    return None
                slots.append(_Slot(kind, a, b, dom, cod, pinned))
    return slots


def _instances(base, sizes, slot_pos):
    """Axiom instances grouped by the last slot they depend on."""
    n = base.size
    by_last = [[] for _ in range(2 * n * n)]
    for a in range(n):
        for b in range(n):
            ab = base.mul(a, b)
            for c in range(n):
                bc = base.mul(b, c)
                abc = base.mul(ab, c)
                if sizes[abc] == 0:
                    continue
                alpha = ("alpha", a, b, c, (
                    slot_pos["lam", a, b],
                    slot_pos["lam", ab, c],
                    slot_pos["lam", a, bc],
                ))
                beta = ("beta", a, b, c, (
                    slot_pos["rho", b, c],
                    slot_pos["rho", a, bc],
                    slot_pos["rho", ab, c],
                ))
                gamma = ("gamma", a, b, c, (
                    slot_pos["rho", a, b],
                    slot_pos["lam", ab, c],
                    slot_pos["lam", b, c],
                    slot_pos["rho", a, bc],
                ))
                for inst in (alpha, beta, gamma):
                    by_last[max(inst[4])].append(inst)
    return by_last


def _instance_holds(inst, assign, sizes, base):
    kind, a, b, c, deps = inst
    ab = base.mul(a, b)
    bc = base.mul(b, c)
    abc = base.mul(ab, c)
    if kind == "alpha":
        lam_ab, lam_ab_c, lam_a_bc = (assign[d] for d in deps)
        return all(
            lam_ab[lam_ab_c[p]] == lam_a_bc[p] for p in range(sizes[abc])
        )
    if kind == "beta":
        rho_b_c, rho_a_bc, rho_ab_c = (assign[d] for d in deps)
        return all(
            rho_b_c[rho_a_bc[p]] == rho_ab_c[p] for p in range(sizes[abc])
        )
    rho_ab, lam_ab_c, lam_b_c, rho_a_bc = (assign[d] for d in deps)
    return all(
        rho_ab[lam_ab_c[p]] == lam_b_c[rho_a_bc[p]] for p in range(sizes[abc])
    )


def enumerate_systems(
    base: FiniteSemigroup,
    index_sizes,
    limit: int | None = None,
    seed: int | None = None,
    unital_only: bool = False,
) -> Iterator[LrSystem]:
    """Yield distinct axiom-valid systems with the given fiber sizes.

    Small instances (base size <= 3, fibers <= 3) are enumerated
    exhaustively in lexicographic order of the concatenated lambda then
    rho tables, so streams are reproducible golden data. Larger instances
    fall back to seeded random backtracking (seed defaults to 0), still
    deterministic for a fixed seed. ``unital_only`` pins lam[a,1] and
    rho[1,a] to identities and yields nothing when the base is not a
    monoid.
    """
    sizes = tuple(index_sizes)
    if len(sizes) != base.size:
        raise MapRangeError("need one index size per base element")
    slots = _build_slots(base, sizes, unital_only)
    if slots is None:
        return
    small = base.size <= EXHAUSTIVE_BASE_CAP and (
        max(sizes, default=0) <= EXHAUSTIVE_FIBER_CAP
    )
    rng = None
    if not small or seed is not None:
        rng = random.Random(0 if seed is None else seed)

    n = base.size
    slot_pos = {}
    for pos, slot in enumerate(slots):
        slot_pos[slot.kind, slot.a, slot.b] = pos
    checks_at = _instances(base, sizes, slot_pos)

    candidate_lists = []
    for slot in slots:
        if slot.pinned is not None:
            cands = [slot.pinned]
        elif slot.domain == 0:
            cands = [()]
        elif slot.codomain == 0:
            cands = []
        else:
            cands = [
                t for t in itertools.product(range(slot.codomain), repeat=slot.domain)
            ]
        if rng is not None and len(cands) > 1:
            rng.shuffle(cands)
        candidate_lists.append(cands)

    assign: list = [None] * len(slots)
    yielded = 0

    def dfs(k):
        nonlocal yielded
        if limit is not None and yielded >= limit:
            return
        if k == len(slots):
            lam = tuple(assign[: n * n])
            rho = tuple(assign[n * n :])
            system = LrSystem(base, sizes, lam, rho)
            validate_axioms(system)
            yielded += 1
            yield system
            return
        for cand in candidate_lists[k]:
            assign[k] = cand
            if all(
                _instance_holds(inst, assign, sizes, base)
                for inst in checks_at[k]
            ):
                yield from dfs(k + 1)
                if limit is not None and yielded >= limit:
                    break
        assign[k] = None

    yield from dfs(0)
