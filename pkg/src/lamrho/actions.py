"""Named system constructions and their independent product oracles.

The builders turn actions into index-map systems; the oracles implement
the wreath, two-sided wreath and block products directly from their own
formulas, sharing no code with the product engine, so the two routes
genuinely cross-check each other.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import ActionLawError, SizeCapError
from .product import DEFAULT_UNIVERSE_CAP
from .semigroup import (
    JOIN2,
    MEET2,
    TRIVIAL,
    FiniteSemigroup,
    identity_element,
)
from .system import LrSystem, validate_axioms


@dataclass(frozen=True)
class RightAction:
    """A right action of ``base`` on 0..carrier-1; act[x][s] is x*s.

    Laws checked on construction: (x*a)*b == x*(ab), and x*e == x when
    the base is a monoid with unit e.
    """

    base: FiniteSemigroup
    carrier: int
    act: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.carrier < 0:
            raise ActionLawError("carrier size must be non-negative")
        if len(self.act) != self.carrier:
            raise ActionLawError("need one action row per carrier point")
        for x, row in enumerate(self.act):
            if len(row) != self.base.size:
                raise ActionLawError(f"row {x} must cover every base element")
            for v in row:
                if not 0 <= v < self.carrier:
                    raise ActionLawError(f"action value {v} out of carrier")
        for x in range(self.carrier):
            for a in self.base.elements():
                xa = self.act[x][a]
                for b in self.base.elements():
                    if self.act[xa][b] != self.act[x][self.base.mul(a, b)]:
                        raise ActionLawError(
                            f"(x*a)*b != x*(ab) at x={x}, a={a}, b={b}"
                        )
        e = identity_element(self.base)
        if e is not None:
            for x in range(self.carrier):
                if self.act[x][e] != x:
                    raise ActionLawError(f"unit law fails: {x}*{e} != {x}")

    def apply(self, x: int, a: int) -> int:
        return self.act[x][a]


@dataclass(frozen=True)
class TwoSidedAction:
    """Compatible left and right actions on a common carrier.

    left[a][x] is a\\x and right[x][a] is x/a, subject to
    a\\(b\\x) == (ab)\\x, (x/a)/b == x/(ab) and (a\\x)/b == a\\(x/b).
    """

    base: FiniteSemigroup
    carrier: int
    left: tuple[tuple[int, ...], ...]
    right: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.base.size
        if len(self.left) != n:
            raise ActionLawError("left table needs one row per base element")
        for a, row in enumerate(self.left):
            if len(row) != self.carrier or any(
                not 0 <= v < self.carrier for v in row
            ):
                raise ActionLawError(f"left row {a} malformed")
        if len(self.right) != self.carrier:
            raise ActionLawError("right table needs one row per carrier point")
        for x, row in enumerate(self.right):
            if len(row) != n or any(not 0 <= v < self.carrier for v in row):
                raise ActionLawError(f"right row {x} malformed")
        for a in range(n):
            for b in range(n):
                ab = self.base.mul(a, b)
                for x in range(self.carrier):
                    if self.left[a][self.left[b][x]] != self.left[ab][x]:
                        raise ActionLawError(
                            f"left law fails at a={a}, b={b}, x={x}"
                        )
                    if self.right[self.right[x][a]][b] != self.right[x][ab]:
                        raise ActionLawError(
                            f"right law fails at a={a}, b={b}, x={x}"
                        )
                    if (
                        self.right[self.left[a][x]][b]
                        != self.left[a][self.right[x][b]]
                    ):
                        raise ActionLawError(
                            f"compatibility fails at a={a}, b={b}, x={x}"
                        )

    def left_apply(self, a: int, x: int) -> int:
        return self.left[a][x]

    def right_apply(self, x: int, a: int) -> int:
        return self.right[x][a]


# ---------------------------------------------------------------------------
# System builders


def empty_system(base: FiniteSemigroup) -> LrSystem:
    """All index sets empty; the product collapses to the base itself."""
    n = base.size
    empty = tuple(() for _ in range(n * n))
    return validate_axioms(LrSystem(base, (0,) * n, empty, empty))


def singleton_system(base: FiniteSemigroup) -> LrSystem:
    """All index sets a single point; the product is H x base."""
    n = base.size
    const = tuple((0,) for _ in range(n * n))
    return validate_axioms(LrSystem(base, (1,) * n, const, const))


def from_right_action(action: RightAction) -> LrSystem:
    """Every fiber is the carrier; lam is the identity and rho[a,b] acts
    by a. Products over this system are wreath products."""
    n = action.base.size
    x = action.carrier
    ident = tuple(range(x))
    lam = tuple(ident for _ in range(n * n))
    rho = tuple(
        tuple(action.apply(p, a) for p in range(x))
        for a in range(n)
        for _b in range(n)
    )
    return validate_axioms(
        LrSystem(action.base, (x,) * n, lam, rho)
    )


def from_two_sided_action(action: TwoSidedAction) -> LrSystem:
    """Every fiber is the carrier; lam[a,b] = b\\_ and rho[a,b] = _/a.

    Products over this system are two-sided wreath products; with the
    natural action of a semigroup on its own square this yields the block
    product.
    """
    n = action.base.size
    x = action.carrier
    lam = tuple(
        tuple(action.left_apply(b, p) for p in range(x))
        for _a in range(n)
        for b in range(n)
    )
    rho = tuple(
        tuple(action.right_apply(p, a) for p in range(x))
        for a in range(n)
        for _b in range(n)
    )
    return validate_axioms(
        LrSystem(action.base, (x,) * n, lam, rho)
    )


def natural_two_sided_action(base: FiniteSemigroup) -> TwoSidedAction:
    """The action of a semigroup on its own square: n\\(n1,n2) = (n*n1, n2)
    and (n1,n2)/n = (n1, n2*n). Carrier point (n1,n2) sits at n1*size+n2."""
    n = base.size
    left = tuple(
        tuple(base.mul(a, x1) * n + x2 for x1 in range(n) for x2 in range(n))
        for a in range(n)
    )
    right = tuple(
        tuple(base.mul(x2, a) + x1 * n for a in range(n))
        for x1 in range(n)
        for x2 in range(n)
    )
    return TwoSidedAction(base, n * n, left, right)


# ---------------------------------------------------------------------------
# Independent oracles


def wreath_oracle(
    h: FiniteSemigroup, action: RightAction, cap: int = DEFAULT_UNIVERSE_CAP
) -> FiniteSemigroup:
    """Wreath product of h by the action, straight from its formula:

        (u, a) * (w, b) = (u . (w o (_*a)), ab)

    Elements are ordered anchor-major with tuples lexicographic, matching
    the product-engine convention, so agreement is table identity.
    """
    n = action.base.size
    x = action.carrier
    total = n * h.size**x
    if total > cap:
        raise SizeCapError(f"wreath product has {total} elements, cap is {cap}")
    elems = [
        (u, a)
        for a in range(n)
        for u in itertools.product(range(h.size), repeat=x)
    ]
    index = {e: i for i, e in enumerate(elems)}
    table = []
    for u, a in elems:
        row = []
        for w, b in elems:
            z = tuple(h.mul(u[p], w[action.apply(p, a)]) for p in range(x))
            row.append(index[(z, action.base.mul(a, b))])
        table.append(tuple(row))
    names = tuple(f"{a}:" + "".join(str(v) for v in u) for u, a in elems)
    return FiniteSemigroup(total, tuple(table), names)


def two_sided_wreath_oracle(
    h: FiniteSemigroup, action: TwoSidedAction, cap: int = DEFAULT_UNIVERSE_CAP
) -> FiniteSemigroup:
    """Two-sided wreath product from its formula:

        (u, a) * (w, b) = ((u o (b\\_)) . (w o (_/a)), ab)
    """
    n = action.base.size
    x = action.carrier
    total = n * h.size**x
    if total > cap:
        raise SizeCapError(f"product has {total} elements, cap is {cap}")
    elems = [
        (u, a)
        for a in range(n)
        for u in itertools.product(range(h.size), repeat=x)
    ]
    index = {e: i for i, e in enumerate(elems)}
    table = []
    for u, a in elems:
        row = []
        for w, b in elems:
            z = tuple(
                h.mul(u[action.left_apply(b, p)], w[action.right_apply(p, a)])
                for p in range(x)
            )
            row.append(index[(z, action.base.mul(a, b))])
        table.append(tuple(row))
    names = tuple(f"{a}:" + "".join(str(v) for v in u) for u, a in elems)
    return FiniteSemigroup(total, tuple(table), names)


def block_product_oracle(
    h: FiniteSemigroup, base: FiniteSemigroup, cap: int = DEFAULT_UNIVERSE_CAP
) -> FiniteSemigroup:
    return two_sided_wreath_oracle(h, natural_two_sided_action(base), cap=cap)


# ---------------------------------------------------------------------------
# Built-in example systems


def _flip_flop_system() -> LrSystem:
    # base: two-element join-semilattice; fibers {0} and {0,1}
    lam = {(0, 0): (0,), (0, 1): (0, 0), (1, 0): (0, 1), (1, 1): (0, 1)}
    rho = {(0, 0): (0,), (0, 1): (0, 1), (1, 0): (0, 0), (1, 1): (0, 0)}
    return validate_axioms(LrSystem.from_maps(JOIN2, (1, 2), lam, rho))


def _left_zero_system() -> LrSystem:
    # one fiber {0,1} over the trivial semigroup; lam identity, rho constant
    return validate_axioms(
        LrSystem.from_maps(TRIVIAL, (2,), {(0, 0): (0, 1)}, {(0, 0): (0, 0)})
    )


def _non_semidirect_system() -> LrSystem:
    # base: two-element meet-semilattice; empty fiber at 0 forces a zero
    lam = {(0, 0): (), (0, 1): (), (1, 0): (), (1, 1): (0, 1)}
    rho = dict(lam)
    return validate_axioms(LrSystem.from_maps(MEET2, (0, 2), lam, rho))


_BUILTIN_SYSTEMS = {
    "left_zero": _left_zero_system,
    "flip_flop": _flip_flop_system,
    "non_semidirect": _non_semidirect_system,
    # canonical instance for exercising the subset form of the product
    "boolean_shadow": _flip_flop_system,
}


def builtin_system(name: str) -> LrSystem:
    """One of the named example systems, validated."""
    try:
        return _BUILTIN_SYSTEMS[name]()
    except KeyError:
        raise KeyError(
            f"unknown built-in system {name!r}; choose from {sorted(_BUILTIN_SYSTEMS)}"
        ) from None
